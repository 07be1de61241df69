"""The braid action on F_pn as explicit endomorphisms.

Generator images follow the defining assignment: b sends x[i,0] to
x[i+1,0] and conjugates every x[i,j], j > 0, by x[i,0]; b_k sends
x[i,k] to x[i,k+1] and x[i,k+1] to x[i,k+1] x[i,k] x[i,k+1]^-1.
Inverse generators carry explicit closed-form images.

Words act left to right: the first letter acts first, so
rho_word(u v) = compose(rho_word(u), rho_word(v)).

Endomorphism file format, one binding per line::

    x<i>.<j> -> <free word>

with exactly p*n bindings in any order; '#' starts a comment.
"""

from __future__ import annotations

from array import array
from functools import lru_cache
from typing import Iterable, Optional

from . import kernels
from .braids import BraidLetter, BraidWord, _letter_code
from .words import (
    FreeWord,
    GroupParams,
    IndexOutOfRange,
    ParamsMismatch,
    ParseError,
    delta_word,
    format_free_word,
    parse_free_word,
)


class EndoF:
    """An endomorphism of F_pn, stored as reduced generator images.

    images[k] is the image word of the letter with code k+1.  Values
    are immutable; compose/apply never mutate.
    """

    __slots__ = ("params", "images", "_flat", "_offsets", "_hash")

    def __init__(self, params: GroupParams, images: Iterable[Iterable[int]]) -> None:
        imgs = tuple(kernels.reduce_letters(tuple(im)) for im in images)
        if len(imgs) != params.size:
            raise IndexOutOfRange(f"need {params.size} images, got {len(imgs)}")
        for im in imgs:
            for c in im:
                params.check_code(c)
        self.params = params
        self.images = imgs
        self._flat: Optional[array] = None
        self._offsets: Optional[array] = None
        self._hash: Optional[int] = None

    @classmethod
    def _from_reduced(cls, params: GroupParams, images: tuple[tuple[int, ...], ...]) -> "EndoF":
        e = object.__new__(cls)
        e.params = params
        e.images = images
        e._flat = None
        e._offsets = None
        e._hash = None
        return e

    @classmethod
    def identity(cls, params: GroupParams) -> "EndoF":
        return cls._from_reduced(params, tuple((c,) for c in range(1, params.size + 1)))

    def _tables(self) -> tuple[array, array]:
        if self._flat is None:
            flat = array("q")
            offsets = array("q", [0])
            for im in self.images:
                flat.extend(im)
                offsets.append(len(flat))
            for im in self.images:
                flat.extend(-c for c in reversed(im))
                offsets.append(len(flat))
            self._flat, self._offsets = flat, offsets
        return self._flat, self._offsets

    def image(self, orbit: int, strand: int) -> FreeWord:
        return FreeWord(self.params, self.images[self.params.code(orbit, strand) - 1])

    def __call__(self, w: FreeWord) -> FreeWord:
        return apply_endo(self, w)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EndoF)
            and self.params == other.params
            and self.images == other.images
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, self.images))
        return self._hash

    def __repr__(self) -> str:
        return f"EndoF(p={self.params.p}, n={self.params.n})"


def apply_endo(e: EndoF, w: FreeWord) -> FreeWord:
    """Substitute each letter of w by its image and reduce."""
    if e.params != w.params:
        raise ParamsMismatch(f"{e.params} vs {w.params}")
    flat, offsets = e._tables()
    return FreeWord(w.params, kernels.substitute(w.codes, flat, offsets, e.params.size))


def compose(e1: EndoF, e2: EndoF) -> EndoF:
    """e1 then e2: the image of x is e2(e1(x))."""
    if e1.params != e2.params:
        raise ParamsMismatch(f"{e1.params} vs {e2.params}")
    flat, offsets = e2._tables()
    size = e1.params.size
    return EndoF._from_reduced(
        e1.params,
        tuple(kernels.substitute(im, flat, offsets, size) for im in e1.images),
    )


def eq_endo(e1: EndoF, e2: EndoF) -> bool:
    """Exact equality of all reduced generator images."""
    if e1.params != e2.params:
        raise ParamsMismatch(f"{e1.params} vs {e2.params}")
    return e1.images == e2.images


@lru_cache(maxsize=None)
def _rho_gen_code(p: int, n: int, code: int) -> EndoF:
    params = GroupParams(p, n)
    images: list[tuple[int, ...]] = [(c,) for c in range(1, params.size + 1)]
    base = abs(code)
    if base == 1:  # rotation generator
        for i in range(p):
            if code > 0:
                images[params.code(i, 0) - 1] = (params.code((i + 1) % p, 0),)
            else:
                images[params.code(i, 0) - 1] = (params.code((i - 1) % p, 0),)
            for j in range(1, n):
                c0 = params.code(i, 0) if code > 0 else params.code((i - 1) % p, 0)
                cj = params.code(i, j)
                if code > 0:
                    images[cj - 1] = (-c0, cj, c0)
                else:
                    images[cj - 1] = (c0, cj, -c0)
    else:
        k = base - 2
        if k > n - 2:
            raise IndexOutOfRange(f"b{k} out of range for n={n}")
        for i in range(p):
            ck = params.code(i, k)
            ck1 = params.code(i, k + 1)
            if code > 0:
                images[ck - 1] = (ck1,)
                images[ck1 - 1] = (ck1, ck, -ck1)
            else:
                images[ck1 - 1] = (ck,)
                images[ck - 1] = (-ck, ck1, ck)
    return EndoF._from_reduced(params, tuple(images))


def rho_gen(g: BraidLetter, params: GroupParams) -> EndoF:
    """The automorphism of a single generator (explicit inverse forms)."""
    return _rho_gen_code(params.p, params.n, _letter_code(g, params))


def rho_word(w: BraidWord) -> EndoF:
    """Letters applied left to right; rho_word('') is the identity."""
    e = EndoF.identity(w.params)
    for c in w.codes:
        e = compose(e, _rho_gen_code(w.params.p, w.params.n, c))
    return e


def twist(params: GroupParams, m: int) -> EndoF:
    """The m-th power of the full first-orbit rotation's action.

    Fixes every x[i,0] and conjugates x[i,j], j > 0, by the i-th block
    word to the power m.
    """
    images: list[tuple[int, ...]] = []
    deltas = [delta_word(params, i).codes for i in range(params.p)]
    for c in range(1, params.size + 1):
        i, j = params.decode(c)
        if j == 0 or m == 0:
            images.append((c,))
        else:
            d = deltas[i]
            dm = d * abs(m)
            if m > 0:
                images.append(tuple(-x for x in reversed(dm)) + (c,) + dm)
            else:
                images.append(dm + (c,) + tuple(-x for x in reversed(dm)))
    return EndoF._from_reduced(params, tuple(images))


def shift_c(params: GroupParams, k: int) -> EndoF:
    """The orbit-index rotation x[i,j] -> x[i+k mod p, j]."""
    images = []
    for c in range(1, params.size + 1):
        i, j = params.decode(c)
        images.append((params.code((i + k) % params.p, j),))
    return EndoF._from_reduced(params, tuple(images))


def format_endo(e: EndoF) -> str:
    """Stable text form: one binding per line, i ascending then j."""
    lines = []
    for c in range(1, e.params.size + 1):
        i, j = e.params.decode(c)
        rhs = format_free_word(FreeWord(e.params, e.images[c - 1]))
        lines.append(f"x{i}.{j} -> {rhs}".rstrip())
    return "\n".join(lines) + "\n"


def parse_endo(text: str, params: GroupParams) -> EndoF:
    """Parse the endomorphism file format; requires all p*n bindings."""
    images: dict[int, tuple[int, ...]] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, sep, rhs = line.partition("->")
        if not sep:
            raise ParseError(f"missing '->' in {raw!r}")
        target = parse_free_word(lhs.strip(), params)
        if len(target.codes) != 1 or target.codes[0] < 0:
            raise ParseError(f"left side must be a single positive letter: {raw!r}")
        c = target.codes[0]
        if c in images:
            raise ParseError(f"duplicate binding for {lhs.strip()!r}")
        images[c] = parse_free_word(rhs.strip(), params).codes
    missing = [c for c in range(1, params.size + 1) if c not in images]
    if missing:
        i, j = params.decode(missing[0])
        raise ParseError(f"missing binding for x{i}.{j}")
    return EndoF(params, tuple(images[c] for c in range(1, params.size + 1)))
