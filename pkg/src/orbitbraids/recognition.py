"""Recognizing braid-induced automorphisms and decomposing them.

An automorphism is braid-induced iff it (1) sends every generator to a
conjugate A x A^-1 with the middles forming a permutation, (2) sends
the boundary loop to a conjugate of itself, and (3) commutes with the
orbit shift.  Decomposition greedily precomposes with generator
automorphisms while the total image length drops, then reads the
terminal map: the identity, an exact twist power, or a rotation of the
boundary order (realized by a power of the one-step rotation braid).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .braids import BraidLetter, BraidWord, _code_letter, rotation_braid
from .rep import EndoF, apply_endo, compose, eq_endo, rho_word, _rho_gen_code
from .wordproblem import twist_power_of
from .words import FreeWord, GroupParams, boundary_word, cyclic_conjugator


class NotConjugateForm(ValueError):
    """Some image is not a reduced conjugate of a single positive letter."""


class NotPermutation(ValueError):
    """The middle letters do not form a permutation of the generators."""


class PreconditionViolated(ValueError):
    """Endomorphism fails the recognition conditions."""


class Stuck(RuntimeError):
    """No generator reduces the length, contradicting the descent guarantee."""


class NotRealizable(RuntimeError):
    """Terminal letter permutation is not a boundary rotation."""


@dataclass(frozen=True)
class ConjugateForm:
    """Per-generator conjugators and middle letters of condition (1)."""

    params: GroupParams
    conjugators: tuple[tuple[int, ...], ...]  # indexed by letter code - 1
    mu: tuple[int, ...]  # positive middle codes, indexed by letter code - 1

    def conjugator(self, orbit: int, strand: int) -> FreeWord:
        return FreeWord(self.params, self.conjugators[self.params.code(orbit, strand) - 1])

    def mu_index(self, orbit: int, strand: int) -> tuple[int, int]:
        return self.params.decode(self.mu[self.params.code(orbit, strand) - 1])


def parse_conjugate_form(e: EndoF) -> ConjugateForm:
    """Split every image into A x A^-1 with A minimal, check mu bijective.

    A reduced word is such a conjugate iff it has odd length, a positive
    middle letter, and its second half inverts its first; minimality of
    A is then automatic.
    """
    conjugators = []
    mids = []
    for c in range(1, e.params.size + 1):
        im = e.images[c - 1]
        if len(im) % 2 == 0:
            i, j = e.params.decode(c)
            raise NotConjugateForm(f"image of x{i}.{j} has even length {len(im)}")
        half = (len(im) - 1) // 2
        a, mid, tail = im[:half], im[half], im[half + 1 :]
        if mid < 0 or tail != tuple(-x for x in reversed(a)):
            i, j = e.params.decode(c)
            raise NotConjugateForm(f"image of x{i}.{j} is not a conjugate of a generator")
        conjugators.append(a)
        mids.append(mid)
    if sorted(mids) != list(range(1, e.params.size + 1)):
        raise NotPermutation("middle letters do not form a permutation")
    return ConjugateForm(e.params, tuple(conjugators), tuple(mids))


def _shift_code(c: int, params: GroupParams) -> int:
    i, j = params.decode(c)
    shifted = params.code((i + 1) % params.p, j)
    return shifted if c > 0 else -shifted


def check_equivariance(f: ConjugateForm) -> bool:
    """Condition (3): the orbit shift carries row i of the data to row i+1."""
    params = f.params
    for c in range(1, params.size + 1):
        cs = _shift_code(c, params)
        if f.mu[cs - 1] != _shift_code(f.mu[c - 1], params):
            return False
        shifted = tuple(_shift_code(x, params) for x in f.conjugators[c - 1])
        if f.conjugators[cs - 1] != shifted:
            return False
    return True


def check_boundary(e: EndoF) -> Optional[FreeWord]:
    """Condition (2): a conjugator A with e(boundary) = A boundary A^-1."""
    partial = boundary_word(e.params)
    return cyclic_conjugator(apply_endo(e, partial), partial)


def length(e: EndoF) -> int:
    """Total reduced image length; at least p*n, with equality iff every
    image is a single letter."""
    return sum(len(im) for im in e.images)


_GEN_ORDER_CACHE: dict[int, tuple[int, ...]] = {}


def _generator_codes(n: int) -> tuple[int, ...]:
    """Fixed trial order: swaps ascending, + before -, then the rotation."""
    if n not in _GEN_ORDER_CACHE:
        codes: list[int] = []
        for k in range(n - 1):
            codes.extend((k + 2, -(k + 2)))
        codes.extend((1, -1))
        _GEN_ORDER_CACHE[n] = tuple(codes)
    return _GEN_ORDER_CACHE[n]


def _check_conditions(e: EndoF) -> None:
    try:
        f = parse_conjugate_form(e)
    except (NotConjugateForm, NotPermutation) as exc:
        raise PreconditionViolated(str(exc)) from exc
    if check_boundary(e) is None:
        raise PreconditionViolated("boundary loop is not sent to a conjugate of itself")
    if not check_equivariance(f):
        raise PreconditionViolated("images are not orbit-shift equivariant")


def _reduce_step_unchecked(e: EndoF) -> Optional[tuple[BraidLetter, EndoF]]:
    l0 = length(e)
    p, n = e.params.p, e.params.n
    for code in _generator_codes(n):
        candidate = compose(_rho_gen_code(p, n, code), e)
        if length(candidate) < l0:
            return _code_letter(code), candidate
    return None


def reduce_step(e: EndoF) -> Optional[tuple[BraidLetter, EndoF]]:
    """First generator g (fixed order) with l(e o rho(g)) < l(e), if any.

    The candidate applies g before e, matching the descent lemma; the
    braid word is thereby extended on the left.
    """
    _check_conditions(e)
    return _reduce_step_unchecked(e)


def _rotation_offset(e: EndoF) -> Optional[int]:
    """Constant boundary-order offset of a letter-permutation map, if any."""
    params = e.params
    n = params.n

    def pos(c: int) -> int:
        i, j = params.decode(c)
        return i * n + (n - 1 - j)

    offset = None
    for c in range(1, params.size + 1):
        im = e.images[c - 1]
        if len(im) != 1 or im[0] < 0:
            return None
        r = (pos(im[0]) - pos(c)) % params.size
        if offset is None:
            offset = r
        elif r != offset:
            return None
    return offset


def _inv_codes(codes) -> tuple[int, ...]:
    return tuple(-c for c in reversed(codes))


def decompose(e: EndoF) -> tuple[BraidWord, int]:
    """Write e as rho_word(w) composed with an exact twist power.

    Greedy strict descent on the length function.  One-sided generator
    moves alone can stall on conjugated rotations (e.g. b0^-1 b^-1 b0),
    so each step searches generator moves on both sides, optionally
    through a length-preserving relabel by a power of the one-step
    rotation braid; the first strictly reducing move is taken.  The
    terminal map is the identity, an exact twist power, or a rotation
    of the boundary order, each realized by an explicit word.  Returns
    (w, m) with compose(rho_word(w), twist(m)) equal to e.
    """
    _check_conditions(e)
    params = e.params
    p, n = params.p, params.n
    size = params.size
    delta = rotation_braid(params)
    gens = _generator_codes(n)
    prefix: list[int] = []  # e == rho_word(prefix + w + suffix) throughout
    suffix: list[int] = []
    steps_left = length(e) - size + 1
    while True:
        m = twist_power_of(e)
        if m is not None:
            if not suffix:
                return BraidWord(params, _inv_codes(prefix)), m
            relator = BraidWord(params, (1,) * (p * m) if m >= 0 else (-1,) * (p * -m))
            codes = _inv_codes(prefix) + relator.codes + _inv_codes(suffix)
            return BraidWord(params, codes), 0
        l0 = length(e)
        if l0 == size:
            r = _rotation_offset(e)
            if r is None:
                raise NotRealizable(f"terminal letter permutation is not a rotation: {e.images}")
            rot = delta**r
            if not eq_endo(e, rho_word(rot)):
                raise NotRealizable(f"terminal rotation mismatch at offset {r}")
            codes = _inv_codes(prefix) + rot.codes + _inv_codes(suffix)
            return BraidWord(params, codes), 0
        found = False
        for r in range(size):
            rel = (delta**r).codes
            pre_base = e if r == 0 else compose(rho_word(delta**r), e)
            post_base = e if r == 0 else compose(e, rho_word(delta**r))
            for g in gens:
                cand = compose(_rho_gen_code(p, n, g), pre_base)
                if length(cand) < l0:
                    prefix[:0] = (g,) + rel
                    e, found = cand, True
                    break
                cand = compose(post_base, _rho_gen_code(p, n, g))
                if length(cand) < l0:
                    suffix.extend(rel + (g,))
                    e, found = cand, True
                    break
            if found:
                break
        if not found:
            raise Stuck(f"no move reduces length {l0}: {e.images}")
        steps_left -= 1
        if steps_left < 0:
            raise Stuck("descent exceeded its step bound")
