"""Dessins as transitive permutation pairs and their invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import GroupFacts, is_transitive, recognize
from .perm import Permutation, compose, cycle_analysis, inverse

__all__ = [
    "DessinError",
    "Dessin",
    "TypeTriple",
    "Signature",
    "MacbeathResult",
    "new_dessin",
    "dessin_type",
    "genus_signature",
    "passport",
    "mirror",
    "is_isomorphic",
    "is_quotient",
    "automorphism_count",
    "cover_counts",
    "hurwitz_genus",
    "macbeath_classify",
    "analyze",
    "HURWITZ_TYPE",
]

HURWITZ_TYPE = (3, 2, 7)


class DessinError(ValueError):
    pass


@dataclass(frozen=True)
class TypeTriple:
    p: int
    q: int
    r: int

    def as_tuple(self) -> tuple:
        return (self.p, self.q, self.r)

    def divides(self, other: Sequence[int]) -> bool:
        return all(o % s == 0 for s, o in zip(self.as_tuple(), other))

    def __str__(self) -> str:
        return "(%d,%d,%d)" % self.as_tuple()


class Dessin:
    """Degree ``n`` with permutations ``x``, ``y`` and cached ``z = (xy)^-1``."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x: Permutation, y: Permutation):
        if x.degree != y.degree:
            raise DessinError("degree mismatch: %d vs %d" % (x.degree, y.degree))
        if not is_transitive([x, y]):
            raise DessinError("x and y do not act transitively (dessin is disconnected)")
        self.x = x
        self.y = y
        self.z = inverse(compose(x, y))

    @property
    def degree(self) -> int:
        return self.x.degree

    @property
    def type(self) -> TypeTriple:
        return dessin_type(self)

    @property
    def generators(self) -> list:
        return [self.x, self.y]

    def __eq__(self, other) -> bool:
        return isinstance(other, Dessin) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return "Dessin(degree=%d, x=%s, y=%s)" % (self.degree, self.x, self.y)


def new_dessin(x: Permutation, y: Permutation) -> Dessin:
    return Dessin(x, y)


def dessin_type(d: Dessin) -> TypeTriple:
    return TypeTriple(d.x.order(), d.y.order(), d.z.order())


@dataclass(frozen=True)
class Signature:
    genus: int
    periods: tuple  # descending
    alpha: int
    beta: int
    gamma: int

    def __str__(self) -> str:
        if not self.periods:
            return "(%d)" % self.genus
        return "(%d; %s)" % (self.genus, ", ".join(str(p) for p in sorted(self.periods)))


def _euler_genus(d: Dessin) -> int:
    cycles = sum(len(p.cycles(include_fixed=True)) for p in (d.x, d.y, d.z))
    chi = cycles - d.degree
    if chi % 2 or chi > 2:
        raise DessinError("Euler characteristic %d is not 2 - 2g" % chi)
    return (2 - chi) // 2


def _periods(p: Permutation, order: int) -> list:
    out = []
    for cyc in p.cycles(include_fixed=True):
        length = len(cyc)
        if order % length:
            raise DessinError("cycle length %d does not divide %d" % (length, order))
        if length < order:
            out.append(order // length)
    return out


def genus_signature(d: Dessin, triple: Optional[Sequence[int]] = None) -> Signature:
    """Genus from the Euler relation plus the elliptic periods.

    ``triple`` fixes the orders used for the period rule; by default the
    actual orders of x, y and z.  For dessins whose type divides (3,2,7) the
    genus is cross-checked against the Hurwitz fixed-point formula.
    """
    genus = _euler_genus(d)
    t = dessin_type(d)
    orders = tuple(triple) if triple is not None else t.as_tuple()
    periods = []
    for perm, order in zip((d.x, d.y, d.z), orders):
        periods.extend(_periods(perm, order))
    alpha, beta, gamma = (len(p.fixed_points()) for p in (d.x, d.y, d.z))
    if t.divides(HURWITZ_TYPE):
        num = d.degree - 28 * alpha - 21 * beta - 36 * gamma
        if num % 84 or 1 + num // 84 != genus:
            raise DessinError("Euler genus %d disagrees with the (3,2,7) formula" % genus)
    return Signature(genus, tuple(sorted(periods, reverse=True)), alpha, beta, gamma)


def passport(d: Dessin) -> tuple:
    return tuple(cycle_analysis(p).cycle_type for p in (d.x, d.y, d.z))


def mirror(d: Dessin) -> Dessin:
    return Dessin(inverse(d.x), inverse(d.y))


def _propagate(d: Dessin, e: Dessin, target: int, injective: bool) -> Optional[tuple]:
    n = d.degree
    phi = [-1] * n
    phi[0] = target
    used = {target} if injective else None
    queue = [0]
    pairs = ((d.x, e.x), (d.y, e.y))
    for pt in queue:
        img = phi[pt]
        for gd, ge in pairs:
            a, b = gd[pt], ge[img]
            if phi[a] == -1:
                if injective:
                    if b in used:
                        return None
                    used.add(b)
                phi[a] = b
                queue.append(a)
            elif phi[a] != b:
                return None
    return tuple(phi)


def is_isomorphic(d: Dessin, e: Dessin) -> Optional[tuple]:
    """A bijection ``phi`` with phi(i·x_d) = phi(i)·x_e (same for y), or None."""
    if d.degree != e.degree or passport(d) != passport(e):
        return None
    for q in range(e.degree):
        phi = _propagate(d, e, q, injective=True)
        if phi is not None:
            return phi
    return None


def is_quotient(d: Dessin, e: Dessin) -> Optional[tuple]:
    """An equivariant surjection from the points of ``d`` onto those of ``e``."""
    if d.degree < e.degree:
        return None
    for q in range(e.degree):
        phi = _propagate(d, e, q, injective=False)
        if phi is not None:
            return phi
    return None


def automorphism_count(d: Dessin) -> int:
    return sum(1 for q in range(d.degree) if _propagate(d, d, q, injective=True) is not None)


def cover_counts(d: Dessin) -> tuple:
    """Numbers of unbranched double and triple covers from the rank formulas."""
    if not dessin_type(d).divides(HURWITZ_TYPE):
        raise DessinError("cover counts need a dessin of type (3,2,7)")
    sig = genus_signature(d)
    r2 = 2 * sig.genus + sig.beta - 1
    r3 = 2 * sig.genus + sig.alpha - 1
    double = 2**r2 - 1 if r2 >= 0 else 0
    triple = (3**r3 - 1) // 2 if r3 >= 0 else 0
    return double, triple


def hurwitz_genus(order: int) -> int:
    if order % 84:
        raise DessinError("order %d is not divisible by 84" % order)
    return 1 + order // 84


@dataclass(frozen=True)
class MacbeathResult:
    curve_count: int  # 0 means not a Hurwitz group

    @property
    def hurwitz(self) -> bool:
        return self.curve_count > 0

    def __str__(self) -> str:
        return "Hurwitz(%d)" % self.curve_count if self.hurwitz else "NotHurwitz"


def _prime_power(q: int) -> tuple:
    if q < 2:
        raise DessinError("%d is not a prime power" % q)
    p = next((f for f in range(2, math.isqrt(q) + 1) if q % f == 0), q)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise DessinError("%d is not a prime power" % q)
    return p, e


def macbeath_classify(q: int) -> MacbeathResult:
    """Whether PSL2(q) is a Hurwitz group, and how many Hurwitz curves it gives."""
    if q > 10**9:
        raise DessinError("q too large for trial division")
    p, e = _prime_power(q)
    if q == 7 or (e == 3 and p % 7 in (2, 3, 4, 5)):
        return MacbeathResult(1)
    if e == 1 and p % 7 in (1, 6):
        return MacbeathResult(3)
    return MacbeathResult(0)


def analyze(d: Dessin, seed: int = 0) -> GroupFacts:
    return recognize([d.x, d.y], seed=seed)
