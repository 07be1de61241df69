"""Equality decision procedures for the two orbit braid groups.

Punctured plane: the action on F_pn is faithful for n >= 2, so words
are equal iff their endomorphisms agree.  Plane: a word is trivial iff
its endomorphism is an exact power of the basic twist; the difference
is taken as inverse(w2) * w1 so that right multiplication by the
rotation relator b^p is always detected.

At n = 1 the action is not faithful (b^p already acts trivially), so
equality is decided by the total rotation exponent: over Z in the
punctured plane, mod p in the plane.  Callers opt into that special
case with allow_rank_one.
"""

from __future__ import annotations

from typing import Optional

from .braids import BraidWord, _ROT
from .rep import EndoF, eq_endo, rho_word, twist
from .words import ParamsMismatch


class UnsupportedRank(ValueError):
    """n = 1 reached without opting into the exponent-based special case."""


def rot_exponent(w: BraidWord) -> int:
    """Signed number of rotation letters; the full content of an n = 1 word."""
    return sum(1 if c == _ROT else -1 if c == -_ROT else 0 for c in w.codes)


def _check_pair(w1: BraidWord, w2: BraidWord, allow_rank_one: bool) -> None:
    if w1.params != w2.params:
        raise ParamsMismatch(f"{w1.params} vs {w2.params}")
    if w1.params.n == 1 and not allow_rank_one:
        raise UnsupportedRank("the action is not faithful at n = 1; pass allow_rank_one=True")


def eq_punctured(w1: BraidWord, w2: BraidWord, *, allow_rank_one: bool = False) -> bool:
    """Equality in the punctured-plane orbit braid group."""
    _check_pair(w1, w2, allow_rank_one)
    if w1.params.n == 1:
        return rot_exponent(w1) == rot_exponent(w2)
    return eq_endo(rho_word(w1), rho_word(w2))


def twist_power_of(e: EndoF) -> Optional[int]:
    """m such that e equals twist(m) exactly, else None.

    m is read off the image of x[0,1] (conjugator length over p, sign
    from the leading letter) and then verified on every generator.
    """
    params = e.params
    for i in range(params.p):
        c = params.code(i, 0)
        if e.images[c - 1] != (c,):
            return None
    if params.n == 1:
        return 0  # nothing else to pin down: every twist acts trivially
    w = e.images[params.code(0, 1) - 1]
    if len(w) % 2 == 0:
        return None
    half = (len(w) - 1) // 2
    if half % params.p:
        return None
    m = half // params.p
    if m and w[0] > 0:
        m = -m
    return m if eq_endo(e, twist(params, m)) else None


def eq_plane(w1: BraidWord, w2: BraidWord, *, allow_rank_one: bool = False) -> bool:
    """Equality in the plane orbit braid group.

    True iff the endomorphism of inverse(w2) * w1 is an exact twist
    power.  This is the kernel characterization of the faithfulness
    theorem; twist powers conjugated by other braids are not detected
    (the twist is central in neither group).
    """
    _check_pair(w1, w2, allow_rank_one)
    if w1.params.n == 1:
        return (rot_exponent(w1) - rot_exponent(w2)) % w1.params.p == 0
    return twist_power_of(rho_word(w2.inverse() * w1)) is not None
