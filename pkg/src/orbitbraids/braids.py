"""Orbit braid words, the finite quotient, and the pure generators.

The alphabet has one rotation generator b (the first strand steps to
the next point of its own orbit) and swap generators b_k, k in
[0, n-2] (strands k and k+1 trade places, simultaneously in all p
orbit copies).  Internally b is the code 1 and b_k the code k+2, with
negatives for inverses.  Braid words are kept freely cancelled; no
group relation is ever rewritten at the word level.

Text grammar: tokens ``b`` or ``b<k>`` with an optional ``^<int>``
suffix.  A-letter grammar: ``A<i>`` or ``A<i>.<q>.<j>``, same suffix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels
from .words import GroupParams, IndexOutOfRange, ParamsMismatch, ParseError

_ROT = 1


class NotPure(ValueError):
    """Operation requires a pure braid word."""


class Underflow(ValueError):
    """Strand deletion from a single-strand braid."""


@dataclass(frozen=True)
class BraidLetter:
    """A single generator: swap=None is the rotation b, else b_swap."""

    swap: Optional[int]
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise IndexOutOfRange(f"sign must be +1 or -1, got {self.sign}")
        if self.swap is not None and self.swap < 0:
            raise IndexOutOfRange(f"swap index {self.swap} negative")

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.swap, -self.sign)


def _letter_code(letter: BraidLetter, params: GroupParams) -> int:
    base = _ROT if letter.swap is None else letter.swap + 2
    if base > params.n:
        raise IndexOutOfRange(
            f"b{letter.swap} needs at least {letter.swap + 2} strands, have n={params.n}"
        )
    return letter.sign * base


def _code_letter(code: int) -> BraidLetter:
    base = abs(code)
    sign = 1 if code > 0 else -1
    return BraidLetter(None if base == _ROT else base - 2, sign)


class BraidWord:
    """A freely cancelled word in the orbit braid alphabet."""

    __slots__ = ("params", "codes", "_hash")

    def __init__(self, params: GroupParams, codes: Iterable[int] = ()) -> None:
        codes = tuple(map(int, codes))
        for c in codes:
            base = abs(c)
            if base == 0 or base > params.n:
                raise IndexOutOfRange(f"braid letter code {c} out of range for n={params.n}")
        self.params = params
        self.codes = kernels.reduce_letters(codes)
        self._hash: Optional[int] = None

    @classmethod
    def empty(cls, params: GroupParams) -> "BraidWord":
        return cls(params)

    @classmethod
    def from_letters(cls, params: GroupParams, letters: Iterable[BraidLetter]) -> "BraidWord":
        return cls(params, (_letter_code(l, params) for l in letters))

    @property
    def letters(self) -> tuple[BraidLetter, ...]:
        return tuple(_code_letter(c) for c in self.codes)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.params, (-c for c in reversed(self.codes)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.params != other.params:
            raise ParamsMismatch(f"{self.params} vs {other.params}")
        return BraidWord(self.params, self.codes + other.codes)

    def __pow__(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.params, base.codes * abs(k))

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BraidWord)
            and self.params == other.params
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, self.codes))
        return self._hash

    def __repr__(self) -> str:
        return f"BraidWord({self.params.p},{self.params.n}: {format_braid(self) or '1'})"


_BRAID_TOKEN = re.compile(r"b(\d+)?(?:\^(-?\d+))?\Z")


def parse_braid(text: str, params: GroupParams) -> BraidWord:
    """Parse the braid-word grammar; '' is the empty word."""
    codes: list[int] = []
    for tok in text.split():
        m = _BRAID_TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad braid token {tok!r}")
        if m[1] is None:
            base = _ROT
        else:
            k = int(m[1])
            if k > params.n - 2:
                raise IndexOutOfRange(f"b{k} out of range for n={params.n}")
            base = k + 2
        e = int(m[2]) if m[2] else 1
        codes.extend([base if e > 0 else -base] * abs(e))
    return BraidWord(params, codes)


def format_braid(w: BraidWord) -> str:
    """Run-aggregated text form, e.g. 'b^2 b0^-1'."""
    parts = []
    run: Optional[int] = None
    count = 0
    for c in tuple(w.codes) + (0,):
        if c == run:
            count += 1
            continue
        if run is not None:
            base = abs(run)
            name = "b" if base == _ROT else f"b{base - 2}"
            e = count if run > 0 else -count
            parts.append(name if e == 1 else f"{name}^{e}")
        run, count = c, 1
    return " ".join(parts)


@dataclass(frozen=True)
class PermZp:
    """An element (g, sigma) of the wreath-like quotient Z_p^n x| Sigma_n.

    Multiplication is (g, s)(h, t) = (g + s.h, s o t) where s.h permutes
    coordinates by (s.h)[s[x]] = h[x] and (s o t)[x] = s[t[x]].
    """

    p: int
    perm: tuple[int, ...]
    gvec: tuple[int, ...]

    @classmethod
    def identity(cls, params: GroupParams) -> "PermZp":
        return cls(params.p, tuple(range(params.n)), (0,) * params.n)

    def __mul__(self, other: "PermZp") -> "PermZp":
        if self.p != other.p or len(self.perm) != len(other.perm):
            raise ParamsMismatch("mixed quotient elements")
        n = len(self.perm)
        g = list(self.gvec)
        for x in range(n):
            g[self.perm[x]] = (g[self.perm[x]] + other.gvec[x]) % self.p
        perm = tuple(self.perm[other.perm[x]] for x in range(n))
        return PermZp(self.p, perm, tuple(g))

    def inverse(self) -> "PermZp":
        n = len(self.perm)
        inv = [0] * n
        for x in range(n):
            inv[self.perm[x]] = x
        g = tuple((-self.gvec[self.perm[x]]) % self.p for x in range(n))
        return PermZp(self.p, tuple(inv), g)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and not any(self.gvec)


def _letter_perm(code: int, params: GroupParams) -> PermZp:
    n = params.n
    base = abs(code)
    sign = 1 if code > 0 else -1
    if base == _ROT:
        g = [0] * n
        g[0] = sign % params.p
        return PermZp(params.p, tuple(range(n)), tuple(g))
    k = base - 2
    perm = list(range(n))
    perm[k], perm[k + 1] = perm[k + 1], perm[k]
    return PermZp(params.p, tuple(perm), (0,) * n)


def perm_image(w: BraidWord) -> PermZp:
    """Image in Z_p^n x| Sigma_n, letters multiplied left to right."""
    out = PermZp.identity(w.params)
    for c in w.codes:
        out = out * _letter_perm(c, w.params)
    return out


def is_pure(w: BraidWord) -> bool:
    return perm_image(w).is_identity()


@dataclass(frozen=True)
class ALetter:
    """A pure generator A_i (q=j=None) or A_{i,q,j}, with a sign."""

    i: int
    q: Optional[int] = None
    j: Optional[int] = None
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise IndexOutOfRange(f"sign must be +1 or -1, got {self.sign}")
        if (self.q is None) != (self.j is None):
            raise IndexOutOfRange("q and j must be given together")

    def inverse(self) -> "ALetter":
        return ALetter(self.i, self.q, self.j, -self.sign)

    def check(self, params: GroupParams) -> None:
        if self.q is None:
            if not 0 <= self.i <= params.n - 1:
                raise IndexOutOfRange(f"A{self.i} out of range for n={params.n}")
        else:
            if not 0 <= self.i < self.j <= params.n - 1:
                raise IndexOutOfRange(
                    f"A{self.i}.{self.q}.{self.j} needs 0 <= i < j <= n-1, n={params.n}"
                )
            if not 0 <= self.q <= params.p - 1:
                raise IndexOutOfRange(f"rotation count {self.q} not in [0, {params.p})")


class AWord:
    """A word over the pure-generator alphabet, kept freely cancelled."""

    __slots__ = ("params", "letters", "_hash")

    def __init__(self, params: GroupParams, letters: Iterable[ALetter] = ()) -> None:
        out: list[ALetter] = []
        for l in letters:
            l.check(params)
            if out and out[-1] == l.inverse():
                out.pop()
            else:
                out.append(l)
        self.params = params
        self.letters = tuple(out)
        self._hash: Optional[int] = None

    @classmethod
    def empty(cls, params: GroupParams) -> "AWord":
        return cls(params)

    def inverse(self) -> "AWord":
        return AWord(self.params, (l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: "AWord") -> "AWord":
        if self.params != other.params:
            raise ParamsMismatch(f"{self.params} vs {other.params}")
        return AWord(self.params, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AWord)
            and self.params == other.params
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, self.letters))
        return self._hash

    def __repr__(self) -> str:
        return f"AWord({self.params.p},{self.params.n}: {format_aword(self) or '1'})"


_A_TOKEN = re.compile(r"A(\d+)(?:\.(\d+)\.(\d+))?(?:\^(-?\d+))?\Z")


def parse_aword(text: str, params: GroupParams) -> AWord:
    letters: list[ALetter] = []
    for tok in text.split():
        m = _A_TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad A-word token {tok!r}")
        q = int(m[2]) if m[2] else None
        j = int(m[3]) if m[3] else None
        e = int(m[4]) if m[4] else 1
        letter = ALetter(int(m[1]), q, j, 1 if e > 0 else -1)
        letter.check(params)
        letters.extend([letter] * abs(e))
    return AWord(params, letters)


def format_aword(w: AWord) -> str:
    parts = []
    run: Optional[ALetter] = None
    count = 0
    for l in tuple(w.letters) + (None,):
        if l == run:
            count += 1
            continue
        if run is not None:
            name = f"A{run.i}" if run.q is None else f"A{run.i}.{run.q}.{run.j}"
            e = count * run.sign
            parts.append(name if e == 1 else f"{name}^{e}")
        run, count = l, 1
    return " ".join(parts)


def _carrier_codes(i: int) -> tuple[int, ...]:
    """Codes of b_{i-1} ... b_0 b b_0 ... b_{i-1}: moves strand i one orbit step."""
    down = [k + 2 for k in range(i - 1, -1, -1)]
    return tuple(down) + (_ROT,) + tuple(reversed(down))


def expand_A(a: ALetter, params: GroupParams) -> BraidWord:
    """Expand a pure generator into braid letters.

    A_i is the carrier word to the power p; A_{i,q,j} conjugates the
    double crossing of strands i and j by q carrier steps.
    """
    a.check(params)
    carrier = _carrier_codes(a.i)
    if a.q is None:
        codes = carrier * params.p
    else:
        chain = tuple(k + 2 for k in range(a.i, a.j - 1))
        core = chain + (a.j + 1, a.j + 1) + tuple(-c for c in reversed(chain))
        codes = carrier * a.q + core + tuple(-c for c in reversed(carrier * a.q))
    w = BraidWord(params, codes)
    return w if a.sign > 0 else w.inverse()


def expand_aword(aw: AWord) -> BraidWord:
    out = BraidWord.empty(aw.params)
    for l in aw.letters:
        out = out * expand_A(l, aw.params)
    return out


def rotation_braid(params: GroupParams) -> BraidWord:
    """b b_0 b_1 ... b_{n-2}: advances every puncture one step around the origin."""
    return BraidWord(params, (_ROT,) + tuple(k + 2 for k in range(params.n - 1)))


def forget_strand0(w: BraidWord) -> BraidWord:
    """Delete the first orbit strand from a pure braid word.

    Tracks the marked strand's position m through the word, dropping
    every letter that moves it and renumbering the survivors down to
    the (p, n-1) alphabet.
    """
    params = w.params
    if params.n == 1:
        raise Underflow("cannot delete the only strand")
    if not is_pure(w):
        raise NotPure("strand deletion needs a pure word")
    out: list[int] = []
    m = 0
    for c in w.codes:
        base = abs(c)
        sign = 1 if c > 0 else -1
        if base == _ROT:
            if m > 0:
                out.append(c)
            continue
        k = base - 2
        if k == m:
            m = k + 1
        elif k + 1 == m:
            m = k
        elif k + 1 < m:
            out.append(c)
        else:  # k > m
            out.append(sign * (base - 1))
    return BraidWord(GroupParams(params.p, params.n - 1), out)
