"""Free group machinery over the orbit-indexed generators x[i,j].

The ambient group F_pn is free on the p*n letters x[i,j], 0 <= i < p
(orbit index), 0 <= j < n (strand index).  A positive letter is stored
as the integer i*n + j + 1 and its inverse as the negative, so a word
is a flat tuple of nonzero ints and reduction is one stack scan.

Text grammar (whitespace-separated tokens): ``x<i>.<j>``,
``x<i>.<j>^-1``, ``x<i>.<j>^<k>``; an empty line is the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from . import kernels


class IndexOutOfRange(ValueError):
    """A letter index lies outside the ambient (p, n) ranges."""


class ParseError(ValueError):
    """Malformed word text."""


class ParamsMismatch(ValueError):
    """Operands built over different group parameters."""


@dataclass(frozen=True)
class GroupParams:
    """The pair (p, n): order of the cyclic action and number of orbit strands."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.n < 1:
            raise IndexOutOfRange(f"need p >= 1 and n >= 1, got p={self.p} n={self.n}")

    @property
    def size(self) -> int:
        """Number of free generators, p*n."""
        return self.p * self.n

    def code(self, orbit: int, strand: int) -> int:
        if not 0 <= orbit < self.p:
            raise IndexOutOfRange(f"orbit index {orbit} not in [0, {self.p})")
        if not 0 <= strand < self.n:
            raise IndexOutOfRange(f"strand index {strand} not in [0, {self.n})")
        return orbit * self.n + strand + 1

    def decode(self, code: int) -> tuple[int, int]:
        return divmod(abs(code) - 1, self.n)

    def check_code(self, code: int) -> None:
        if code == 0 or not -self.size <= code <= self.size:
            raise IndexOutOfRange(
                f"letter code {code} out of range for p={self.p} n={self.n}"
            )


@dataclass(frozen=True)
class FreeLetter:
    """One generator x[orbit,strand] or its inverse."""

    orbit: int
    strand: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise IndexOutOfRange(f"sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "FreeLetter":
        return FreeLetter(self.orbit, self.strand, -self.sign)


class FreeWord:
    """A word over the x[i,j] alphabet, possibly unreduced.

    Instances are immutable and safe to share.  ``*`` multiplies in the
    group (concatenate, then freely reduce); raw concatenation is
    available through the constructor.
    """

    __slots__ = ("params", "codes", "_hash")

    def __init__(self, params: GroupParams, codes: Iterable[int] = ()) -> None:
        codes = tuple(map(int, codes))
        for c in codes:
            params.check_code(c)
        self.params = params
        self.codes = codes
        self._hash: Optional[int] = None

    @classmethod
    def empty(cls, params: GroupParams) -> "FreeWord":
        return cls(params)

    @classmethod
    def from_letters(cls, params: GroupParams, letters: Iterable[FreeLetter]) -> "FreeWord":
        return cls(params, (l.sign * params.code(l.orbit, l.strand) for l in letters))

    @property
    def letters(self) -> tuple[FreeLetter, ...]:
        dec = self.params.decode
        return tuple(
            FreeLetter(*dec(c), 1 if c > 0 else -1) for c in self.codes
        )

    def is_reduced(self) -> bool:
        return all(self.codes[k] != -self.codes[k + 1] for k in range(len(self.codes) - 1))

    def inverse(self) -> "FreeWord":
        return FreeWord(self.params, (-c for c in reversed(self.codes)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if self.params != other.params:
            raise ParamsMismatch(f"{self.params} vs {other.params}")
        return FreeWord(self.params, kernels.reduce_letters(self.codes + other.codes))

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else self.inverse()
        return FreeWord(self.params, kernels.reduce_letters(base.codes * abs(k)))

    def __len__(self) -> int:
        return len(self.codes)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FreeWord)
            and self.params == other.params
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.params, self.codes))
        return self._hash

    def __repr__(self) -> str:
        return f"FreeWord({self.params.p},{self.params.n}: {format_free_word(self) or '1'})"


def reduce(w: FreeWord) -> FreeWord:
    """The unique freely reduced word equal to w in F_pn."""
    return FreeWord(w.params, kernels.reduce_letters(w.codes))


def inverse(w: FreeWord) -> FreeWord:
    return w.inverse()


def conjugate(w: FreeWord, a: FreeWord) -> FreeWord:
    """reduce(a * w * a^-1)."""
    if w.params != a.params:
        raise ParamsMismatch(f"{w.params} vs {a.params}")
    codes = a.codes + w.codes + tuple(-c for c in reversed(a.codes))
    return FreeWord(w.params, kernels.reduce_letters(codes))


def boundary_word(params: GroupParams) -> FreeWord:
    """The loop around all p*n punctures, based at the origin.

    Strand index descends within each orbit block, orbit blocks ascend:
    x[0,n-1] x[0,n-2] ... x[0,0] x[1,n-1] ... x[p-1,0].  All letters are
    distinct, so the word is cyclically reduced.
    """
    return FreeWord(
        params,
        (
            params.code(i, j)
            for i in range(params.p)
            for j in reversed(range(params.n))
        ),
    )


def delta_word(params: GroupParams, i: int) -> FreeWord:
    """The block product x[i,0] x[i+1,0] ... x[i+p-1,0], indices mod p."""
    if not 0 <= i < params.p:
        raise IndexOutOfRange(f"orbit index {i} not in [0, {params.p})")
    return FreeWord(params, (params.code((i + t) % params.p, 0) for t in range(params.p)))


def cyclic_conjugator(w: FreeWord, target: FreeWord) -> Optional[FreeWord]:
    """Some A with reduce(w) = reduce(A * target * A^-1), if one exists.

    target must be cyclically reduced.  w is cyclically reduced to
    s * core * s^-1 and core is matched against the rotations of
    target; among matches the shortest conjugator wins, ties broken by
    the smallest rotation offset.
    """
    if w.params != target.params:
        raise ParamsMismatch(f"{w.params} vs {target.params}")
    wr = kernels.reduce_letters(w.codes)
    t = target.codes
    strip = []
    lo, hi = 0, len(wr)
    while hi - lo >= 2 and wr[lo] == -wr[hi - 1]:
        strip.append(wr[lo])
        lo += 1
        hi -= 1
    core = wr[lo:hi]
    if len(core) != len(t):
        return None
    if not t:
        return FreeWord(w.params)
    best: Optional[tuple[int, ...]] = None
    for r in range(len(t)):
        if core == t[r:] + t[:r]:
            a = kernels.reduce_letters(tuple(strip) + tuple(-c for c in reversed(t[:r])))
            if best is None or len(a) < len(best):
                best = a
    return None if best is None else FreeWord(w.params, best)


_FREE_TOKEN = re.compile(r"x(\d+)\.(\d+)(?:\^(-?\d+))?\Z")


def parse_free_word(text: str, params: GroupParams) -> FreeWord:
    """Parse the whitespace-separated token grammar; '' is the empty word."""
    codes: list[int] = []
    for tok in text.split():
        m = _FREE_TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad free-word token {tok!r}")
        c = params.code(int(m[1]), int(m[2]))
        e = int(m[3]) if m[3] else 1
        codes.extend([c if e > 0 else -c] * abs(e))
    return FreeWord(params, codes)


def format_free_word(w: FreeWord) -> str:
    parts = []
    for c in w.codes:
        i, j = w.params.decode(c)
        parts.append(f"x{i}.{j}" if c > 0 else f"x{i}.{j}^-1")
    return " ".join(parts)
