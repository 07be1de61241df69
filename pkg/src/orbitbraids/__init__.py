"""Computing in orbit braid groups of the plane with a cyclic symmetry.

The toolkit evaluates the Artin-style action of orbit braids on the
free group over the orbit-indexed puncture loops, decides word equality
in both the plane and punctured-plane groups, decomposes recognized
automorphisms back into braid words by greedy length reduction, and
computes combing normal forms of pure orbit braids.
"""

from .words import (
    FreeLetter,
    FreeWord,
    GroupParams,
    IndexOutOfRange,
    ParamsMismatch,
    ParseError,
    boundary_word,
    conjugate,
    cyclic_conjugator,
    delta_word,
    format_free_word,
    inverse,
    parse_free_word,
    reduce,
)
from .braids import (
    ALetter,
    AWord,
    BraidLetter,
    BraidWord,
    NotPure,
    PermZp,
    Underflow,
    expand_A,
    expand_aword,
    forget_strand0,
    format_aword,
    format_braid,
    is_pure,
    parse_aword,
    parse_braid,
    perm_image,
    rotation_braid,
)
from .rep import (
    EndoF,
    apply_endo,
    compose,
    eq_endo,
    format_endo,
    parse_endo,
    rho_gen,
    rho_word,
    shift_c,
    twist,
)
from .wordproblem import UnsupportedRank, eq_plane, eq_punctured, twist_power_of
from .recognition import (
    ConjugateForm,
    NotConjugateForm,
    NotPermutation,
    NotRealizable,
    PreconditionViolated,
    Stuck,
    check_boundary,
    check_equivariance,
    decompose,
    length,
    parse_conjugate_form,
    reduce_step,
)
from .combing import (
    CombedForm,
    NotInKernel,
    NotInSectionDomain,
    SearchBudgetExceeded,
    UWord,
    comb,
    express_in_basis,
    format_combed,
    include_lift,
    kernel_coordinate,
    level_basis,
    multiply_back,
)
from .diagram import RenderStyle, render
from .kernels import backend_name

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
