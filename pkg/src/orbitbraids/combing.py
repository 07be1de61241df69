"""Combing normal forms of pure orbit braids.

Deleting the first orbit strand splits the pure group: every pure word
w factors as (section of the deleted image) * (kernel coordinate), and
the kernel is free on the level-n basis {A_0} u {A_{0,q,j}}.  Iterating
down to one strand yields one coordinate word per level; level 1 is the
residual power of the bottom generator A_{n-1}.

The level-L basis in the original labels is {A_{n-L}} together with
{A_{n-L,q,j} : n-L < j <= n-1}, of size p(L-1)+1.

Text form: one line per level, ``L<level>: <A-word or ->``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .braids import (
    ALetter,
    AWord,
    BraidWord,
    NotPure,
    expand_aword,
    forget_strand0,
    is_pure,
)
from .recognition import length
from .rep import EndoF, compose, eq_endo, rho_word
from .wordproblem import eq_punctured, rot_exponent
from .words import GroupParams, IndexOutOfRange


class NotInKernel(ValueError):
    """Word is not pure or survives the strand deletion."""


class NotInSectionDomain(TypeError):
    """The section is defined on A-letter words only."""


class SearchBudgetExceeded(RuntimeError):
    """No basis word within the length budget matches."""


def level_basis(params: GroupParams, level: int) -> tuple[ALetter, ...]:
    """Positive basis letters of the level-L kernel, in enumeration order."""
    if not 1 <= level <= params.n:
        raise IndexOutOfRange(f"level {level} not in [1, {params.n}]")
    i = params.n - level
    letters = [ALetter(i)]
    for j in range(i + 1, params.n):
        for q in range(params.p):
            letters.append(ALetter(i, q, j))
    return tuple(letters)


@dataclass(frozen=True)
class UWord:
    """A kernel coordinate: a word over one level's basis letters."""

    level: int
    word: AWord

    def __post_init__(self) -> None:
        allowed = {
            (l.i, l.q, l.j) for l in level_basis(self.word.params, self.level)
        }
        for l in self.word.letters:
            if (l.i, l.q, l.j) not in allowed:
                raise IndexOutOfRange(
                    f"letter A{l.i}.{l.q}.{l.j} not in the level-{self.level} basis"
                )


@dataclass(frozen=True)
class CombedForm:
    """Per-level kernel coordinates of a pure word, levels 1..n ascending."""

    params: GroupParams
    levels: tuple[UWord, ...]

    def __post_init__(self) -> None:
        got = tuple(u.level for u in self.levels)
        if got != tuple(range(1, self.params.n + 1)):
            raise IndexOutOfRange(f"levels must be 1..{self.params.n}, got {got}")


def _lift_aword(aw: AWord, high: GroupParams) -> AWord:
    return AWord(
        high,
        (
            ALetter(l.i + 1, l.q, None if l.j is None else l.j + 1, l.sign)
            for l in aw.letters
        ),
    )


def include_lift(aw: AWord) -> BraidWord:
    """Section of the strand deletion: shift A-letter indices up by one
    and expand on one more strand."""
    if not isinstance(aw, AWord):
        raise NotInSectionDomain("the section is defined on A-letter words; comb raw input first")
    high = GroupParams(aw.params.p, aw.params.n + 1)
    return expand_aword(_lift_aword(aw, high))


def _flatten(form: CombedForm) -> AWord:
    out = AWord.empty(form.params)
    for u in form.levels:
        out = out * u.word
    return out


def kernel_coordinate(w: BraidWord, *, max_basis_length: int = 8) -> BraidWord:
    """The kernel part of w: section(deleted image)^-1 * w."""
    if not is_pure(w):
        raise NotPure("kernel coordinates are defined for pure words")
    lower = comb(forget_strand0(w), max_basis_length=max_basis_length)
    kappa = include_lift(_flatten(lower)).inverse() * w
    return kappa


def _basis_endos(params: GroupParams) -> tuple[tuple[ALetter, ...], list[EndoF], list[EndoF]]:
    letters = level_basis(params, params.n)
    pos = [rho_word(expand_aword(AWord(params, [l]))) for l in letters]
    neg = [rho_word(expand_aword(AWord(params, [l.inverse()]))) for l in letters]
    return letters, pos, neg


def _peel(phi: EndoF, pos: list[EndoF], neg: list[EndoF]) -> tuple[list[int], EndoF]:
    """Strip basis letters off the right of phi while the length drops.

    Returns peeled signed basis indices (last letter first) and the
    remaining endomorphism.  Any detour is harmless: the final A-word
    is freely reduced, and reduced words in a free basis are unique.
    """
    ident = EndoF.identity(phi.params)
    tail: list[int] = []
    while phi != ident:
        l0 = length(phi)
        best: Optional[tuple[int, int, EndoF]] = None
        for t in range(len(pos)):
            for s, undo in ((t + 1, neg[t]), (-(t + 1), pos[t])):
                if tail and tail[-1] == -s:
                    continue
                cand = compose(phi, undo)
                lc = length(cand)
                if lc < l0 and (best is None or lc < best[0]):
                    best = (lc, s, cand)
        if best is None:
            break
        tail.append(best[1])
        phi = best[2]
    return tail, phi


def _mitm(phi: EndoF, pos: list[EndoF], neg: list[EndoF], max_len: int) -> Optional[tuple[int, ...]]:
    """Shortest signed-index word with rho = phi, or None past max_len.

    Iterative deepening with a meet-in-the-middle split; exactness comes
    from hashing whole endomorphisms, and freeness makes the reduced
    answer unique.
    """
    ident = EndoF.identity(phi.params)
    nb = len(pos)

    def endo_of(s: int) -> EndoF:
        return pos[s - 1] if s > 0 else neg[-s - 1]

    def inv_endo_of(s: int) -> EndoF:
        return neg[s - 1] if s > 0 else pos[-s - 1]

    for total in range(max_len + 1):
        l_right = total // 2
        l_left = total - l_right
        right: dict[EndoF, tuple[int, ...]] = {}

        def walk_right(word: list[int], endo: EndoF, depth: int) -> None:
            if depth == l_right:
                right.setdefault(endo, tuple(word))
                return
            for t in range(1, nb + 1):
                for s in (t, -t):
                    if word and word[-1] == -s:
                        continue
                    word.append(s)
                    walk_right(word, compose(endo, endo_of(s)), depth + 1)
                    word.pop()

        walk_right([], ident, 0)
        found: Optional[tuple[int, ...]] = None

        def walk_left(word: list[int], k: EndoF, depth: int) -> None:
            # invariant: k = phi with the prefix's action undone
            nonlocal found
            if found is not None:
                return
            if depth == l_left:
                v = right.get(k)
                if v is not None and (not word or not v or word[-1] != -v[0]):
                    found = tuple(word) + v
                return
            for t in range(1, nb + 1):
                for s in (t, -t):
                    if found is not None:
                        return
                    if word and word[-1] == -s:
                        continue
                    word.append(s)
                    walk_left(word, compose(inv_endo_of(s), k), depth + 1)
                    word.pop()

        walk_left([], phi, 0)
        if found is not None:
            return found
    return None


def express_in_basis(w: BraidWord, *, max_basis_length: int = 8) -> UWord:
    """The unique reduced level-n basis word equal to w.

    w must be pure and die under the strand deletion.  The result is
    certified by comparing endomorphisms before returning; budget
    overruns raise instead of returning a wrong or truncated answer.
    """
    params = w.params
    if not is_pure(w):
        raise NotInKernel("word is not pure")
    if params.n == 1:
        e = rot_exponent(w)
        letter = ALetter(0, sign=1 if e >= 0 else -1)
        word = AWord(params, [letter] * (abs(e) // params.p))
        if len(word) > max_basis_length:
            raise SearchBudgetExceeded(f"coordinate has length {len(word)} > {max_basis_length}")
        return UWord(1, word)
    rest = forget_strand0(w)
    if not eq_punctured(rest, BraidWord.empty(rest.params), allow_rank_one=True):
        raise NotInKernel("word survives the strand deletion")

    letters, pos, neg = _basis_endos(params)
    phi = rho_word(w)
    tail, remainder = _peel(phi, pos, neg)
    if remainder == EndoF.identity(params):
        signed = tuple(reversed(tail))
    else:
        prefix = _mitm(remainder, pos, neg, max_basis_length)
        if prefix is None:
            raise SearchBudgetExceeded(
                f"no basis word of length <= {max_basis_length} matches"
            )
        signed = prefix + tuple(reversed(tail))
    aword = AWord(
        params,
        (letters[abs(s) - 1] if s > 0 else letters[abs(s) - 1].inverse() for s in signed),
    )
    if len(aword) > max_basis_length:
        raise SearchBudgetExceeded(
            f"coordinate has length {len(aword)} > {max_basis_length}"
        )
    if not eq_endo(rho_word(expand_aword(aword)), phi):
        raise RuntimeError("internal error: uncertified basis word")
    return UWord(params.n, aword)


def comb(w: BraidWord, *, max_basis_length: int = 8) -> CombedForm:
    """Per-level kernel coordinates of a pure word.

    Recurses through the strand deletion: the level-n coordinate is the
    basis expression of the kernel part, lower levels comb the deleted
    image, and level 1 is the leftover power of the bottom generator.
    """
    params = w.params
    if not is_pure(w):
        raise NotPure("combing is defined for pure words")
    if params.n == 1:
        e = rot_exponent(w)
        letter = ALetter(0, sign=1 if e >= 0 else -1)
        word = AWord(params, [letter] * (abs(e) // params.p))
        return CombedForm(params, (UWord(1, word),))
    lower = comb(forget_strand0(w), max_basis_length=max_basis_length)
    lifted = tuple(UWord(u.level, _lift_aword(u.word, params)) for u in lower.levels)
    section = BraidWord.empty(params)
    for u in lifted:
        section = section * expand_aword(u.word)
    kappa = section.inverse() * w
    top = express_in_basis(kappa, max_basis_length=max_basis_length)
    return CombedForm(params, lifted + (top,))


def multiply_back(form: CombedForm) -> BraidWord:
    """Concatenate the level expansions in ascending level order."""
    out = BraidWord.empty(form.params)
    for u in form.levels:
        out = out * expand_aword(u.word)
    return out


def format_combed(form: CombedForm) -> str:
    from .braids import format_aword

    lines = [f"L{u.level}: {format_aword(u.word) or '-'}" for u in form.levels]
    return "\n".join(lines) + "\n"
