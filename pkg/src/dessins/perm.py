"""Permutations on {0..n-1} acting on the right.

``compose(p, q)`` applies ``p`` first and then ``q``; ``p * q`` is the same
product.  Text uses 1-indexed disjoint cycle notation.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "CycleAnalysis",
    "PermutationError",
    "identity",
    "from_cycles",
    "parse_cycles",
    "format_cycles",
    "compose",
    "inverse",
    "commutator",
    "cycle_analysis",
]


class PermutationError(ValueError):
    """Invalid permutation data or mismatched degrees."""


class Permutation:
    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        n = len(imgs)
        if n < 1:
            raise PermutationError("degree must be at least 1")
        if sorted(imgs) != list(range(n)):
            raise PermutationError("images are not a bijection of 0..%d" % (n - 1))
        self._images = imgs
        self._hash = None

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        p._images = images
        p._hash = None
        return p

    @property
    def images(self) -> tuple:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __getitem__(self, i: int) -> int:
        return self._images[i]

    def __len__(self) -> int:
        return len(self._images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __repr__(self) -> str:
        return "Permutation(%r, degree=%d)" % (format_cycles(self), self.degree)

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._images))

    def cycles(self, include_fixed: bool = False) -> list:
        """Disjoint cycles as 0-indexed tuples, each starting at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self._images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self._images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return cycle_analysis(self).order

    def fixed_points(self) -> list:
        return [i for i, v in enumerate(self._images) if i == v]


@dataclass(frozen=True)
class CycleAnalysis:
    cycle_type: tuple  # ((length, count), ...) ascending by length
    order: int
    fixed_point_count: int
    parity: str
    fixed_points: tuple

    def lengths(self) -> list:
        return [length for length, c in self.cycle_type for _ in range(c)]

    def notation(self) -> str:
        """Exponent notation such as ``1^2.3^6``."""
        return ".".join(
            str(length) if c == 1 else "%d^%d" % (length, c) for length, c in self.cycle_type
        )


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("degree must be at least 1")
    return Permutation._trusted(tuple(range(n)))


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise PermutationError("degree mismatch: %d vs %d" % (p.degree, q.degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    _check_degrees(p, q)
    qi = q._images
    return Permutation._trusted(tuple(qi[i] for i in p._images))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, v in enumerate(p._images):
        out[v] = i
    return Permutation._trusted(tuple(out))


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """``p^-1 q^-1 p q``."""
    _check_degrees(p, q)
    return compose(compose(inverse(p), inverse(q)), compose(p, q))


def cycle_analysis(p: Permutation) -> CycleAnalysis:
    lengths = [len(c) for c in p.cycles(include_fixed=True)]
    counts = Counter(lengths)
    order = 1
    for length in counts:
        order = order * length // math.gcd(order, length)
    transpositions = sum(length - 1 for length in lengths)
    return CycleAnalysis(
        cycle_type=tuple(sorted(counts.items())),
        order=order,
        fixed_point_count=counts.get(1, 0),
        parity="odd" if transpositions % 2 else "even",
        fixed_points=tuple(p.fixed_points()),
    )


def from_cycles(cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
    """Build from 0-indexed disjoint cycles."""
    if degree < 1:
        raise PermutationError("degree must be at least 1")
    images = list(range(degree))
    used = set()
    for cyc in cycles:
        for pt in cyc:
            if not 0 <= pt < degree:
                raise PermutationError("point %d out of range for degree %d" % (pt + 1, degree))
            if pt in used:
                raise PermutationError("point %d repeated" % (pt + 1))
            used.add(pt)
        for i, pt in enumerate(cyc):
            images[pt] = cyc[(i + 1) % len(cyc)]
    return Permutation._trusted(tuple(images))


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(,)|(-?\d+)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-indexed disjoint cycle notation, e.g. ``"(1 2 3)(4,5)"``.

    Commas and whitespace both separate points; ``#`` starts a comment.
    Points not mentioned are fixed.
    """
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    cycles = []
    current = None
    last = None  # kind of the previous token inside a cycle
    pos = 0
    while (m := _TOKEN.match(body, pos)) is not None:
        pos = m.end()
        lpar, rpar, comma, num, junk = m.groups()
        where = m.start(m.lastindex)
        if junk is not None:
            raise PermutationError("unexpected character %r at offset %d" % (junk, where))
        if lpar:
            if current is not None:
                raise PermutationError("nested '(' at offset %d" % where)
            current, last = [], "("
        elif rpar:
            if current is None:
                raise PermutationError("unmatched ')' at offset %d" % where)
            if last == ",":
                raise PermutationError("trailing ',' before offset %d" % where)
            if current:
                cycles.append([v - 1 for v in current])
            current = None
        elif comma:
            if last != "int":
                raise PermutationError("misplaced ',' at offset %d" % where)
            last = ","
        else:
            if current is None:
                raise PermutationError("point outside parentheses at offset %d" % where)
            current.append(int(num))
            last = "int"
    if current is not None:
        raise PermutationError("unclosed '('")
    return from_cycles(cycles, degree)


def format_cycles(p: Permutation, sep: str = " ") -> str:
    """1-indexed canonical cycle notation; the identity formats as ``()``."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + sep.join(str(v + 1) for v in c) + ")" for c in cycles)
