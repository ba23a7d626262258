"""Handle detection and connected-sum joins of dessins."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .dessin import HURWITZ_TYPE, Dessin, DessinError, dessin_type, genus_signature
from .perm import Permutation, compose, inverse

__all__ = [
    "JoinError",
    "Handle",
    "y_handles",
    "x_handles",
    "handles_of",
    "max_disjoint_handles",
    "same_face_check",
    "y_join",
    "multiple_y_join",
    "twist_y_join",
    "x_join",
    "handle_projection_check",
    "relation_holds",
]


class JoinError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Handle:
    axis: str  # "Y" or "X"
    k: int
    a: int
    b: int

    @property
    def points(self) -> frozenset:
        return frozenset((self.a, self.b))

    def sort_key(self) -> tuple:
        return (self.k, self.a, self.b)

    def __str__(self) -> str:
        return "%s(%d): %d -> %d" % (self.axis, self.k, self.a + 1, self.b + 1)


def _walk(perm: Permutation, start: int, target: int) -> Optional[int]:
    """Smallest j >= 1 with start·perm^j == target, within one cycle."""
    j, pt = 1, perm[start]
    while pt != start:
        if pt == target:
            return j
        pt = perm[pt]
        j += 1
    return None


def relation_holds(d: Dessin, h: Handle) -> bool:
    """Direct evaluation of the defining relation of ``h`` in ``d``."""
    if h.axis == "Y":
        if d.y[h.a] != h.a or d.y[h.b] != h.b or h.a == h.b:
            return False
        return d.x[(d.z ** (1 - h.k))[h.a]] == h.b
    if d.x[h.a] != h.a or d.x[h.b] != h.b or h.a == h.b:
        return False
    yx = compose(d.y, d.x)
    return d.y[(yx ** h.k)[h.a]] == h.b


def _oriented(d: Dessin, axis: str, a: int, b: int) -> Optional[int]:
    """Smallest k >= 1 for which (a, b) satisfies the axis relation."""
    if axis == "Y":
        # b = a·z^(1-k)·x reduces to b = a·z^(-k) for y-fixed b
        return _walk(inverse(d.z), a, b)
    # b = a·(yx)^k·y reduces to b·y = a·(yx)^k
    return _walk(compose(d.y, d.x), a, d.y[b])


def _face_length(d: Dessin, a: int) -> int:
    length, pt = 1, d.z[a]
    while pt != a:
        length, pt = length + 1, d.z[pt]
    return length


def _blocked(d: Dessin, a: int, k: int, fixed: set) -> bool:
    """Whether the face arc from ``a`` to its partner passes another free edge."""
    step = inverse(d.z)
    pt = step[a]
    for _ in range(k - 1):
        if pt in fixed:
            return True
        pt = step[pt]
    return False


def _handles(d: Dessin, axis: str) -> list:
    gen = d.y if axis == "Y" else d.x
    fixed = gen.fixed_points()
    fixed_set = set(fixed)
    out = []
    for a, b in combinations(fixed, 2):
        kab, kba = _oriented(d, axis, a, b), _oriented(d, axis, b, a)
        if axis == "Y":
            # neighbouring free edges at most half a face apart
            limit = _face_length(d, a) // 2
            kab = None if kab is None or kab > limit or _blocked(d, a, kab, fixed_set) else kab
            kba = None if kba is None or kba > limit or _blocked(d, b, kba, fixed_set) else kba
        if kab is None and kba is None:
            continue
        inf = d.degree + 1
        kab, kba = kab or inf, kba or inf
        # report the orientation with the smaller k (both on a tie)
        if kab <= kba:
            out.append(Handle(axis, kab, a, b))
        if kba <= kab:
            out.append(Handle(axis, kba, b, a))
    out.sort(key=Handle.sort_key)
    for h in out:
        assert relation_holds(d, h), h
    return out


def y_handles(d: Dessin) -> list:
    """Neighbouring y-fixed points of a face, oriented so k is minimal.

    For a 7-valent face this gives k in {1, 2, 3}.  A pair whose arc passes a
    third free edge is not a handle.
    """
    return _handles(d, "Y")


def x_handles(d: Dessin) -> list:
    """Pairs of x-fixed points joined by the x relation, oriented so k is minimal.

    On Hurwitz dessins the orientation with k = 3 is the reverse of one with
    k = 2, so only k = 1 (trivial) and k = 2 occur.
    """
    return _handles(d, "X")


def handles_of(d: Dessin, axis: str) -> list:
    return y_handles(d) if axis == "Y" else x_handles(d)


def max_disjoint_handles(handles: Sequence[Handle], k: int, axis: str = "Y") -> int:
    pool = [h for h in handles if h.k == k and h.axis == axis]

    def best(i: int, used: frozenset) -> int:
        if i == len(pool):
            return 0
        skip = best(i + 1, used)
        h = pool[i]
        if h.points & used:
            return skip
        return max(skip, 1 + best(i + 1, used | h.points))

    return best(0, frozenset())


def _face_of(d: Dessin) -> list:
    face = [0] * d.degree
    for idx, cyc in enumerate(d.z.cycles(include_fixed=True)):
        for pt in cyc:
            face[pt] = idx
    return face


def same_face_check(d: Dessin) -> bool:
    """True iff two distinct y-handles lie in one face."""
    if not dessin_type(d).divides(HURWITZ_TYPE):
        raise JoinError("same-face check needs a dessin of type (3,2,7)")
    face = _face_of(d)
    hs = y_handles(d)
    return any(face[h.a] == face[g.a] for h, g in combinations(hs, 2))


def _check_handle(d: Dessin, h: Handle, axis: str) -> None:
    if h.axis != axis or not relation_holds(d, h):
        raise JoinError("%s is not a valid %s-handle of this dessin" % (h, axis))


def _direct_sum(perms: Sequence[Permutation]) -> list:
    images = []
    offset = 0
    for p in perms:
        images.extend(v + offset for v in p.images)
        offset += p.degree
    return images


def _hurwitz(d: Dessin) -> bool:
    return dessin_type(d).as_tuple() == HURWITZ_TYPE


def _y_sum(d1: Dessin, d2: Dessin, swaps: Sequence[tuple]) -> Dessin:
    n1 = d1.degree
    x = Permutation(_direct_sum([d1.x, d2.x]))
    y = _direct_sum([d1.y, d2.y])
    for p1, p2 in swaps:
        q2 = p2 + n1
        y[p1], y[q2] = q2, p1
    return Dessin(x, Permutation(y))


def _assert_y_bookkeeping(d1: Dessin, d2: Dessin, out: Dessin, m: int) -> None:
    if not (_hurwitz(d1) and _hurwitz(d2)):
        return
    if not _hurwitz(out):
        raise JoinError("internal: y-join produced type %s" % dessin_type(out))
    s1, s2, s = genus_signature(d1), genus_signature(d2), genus_signature(out)
    expected = (s1.genus + s2.genus + m - 1, s1.alpha + s2.alpha, s1.beta + s2.beta - 4 * m, s1.gamma + s2.gamma)
    if (s.genus, s.alpha, s.beta, s.gamma) != expected:
        raise JoinError("internal: join bookkeeping failed: %s vs %s" % ((s.genus, s.alpha, s.beta, s.gamma), expected))


def y_join(d1: Dessin, h1: Handle, d2: Dessin, h2: Handle) -> Dessin:
    """Join along y-handles: a1 with a2 and b1 with b2 become 2-cycles of y."""
    return multiple_y_join(d1, d2, [(h1, h2)])


def multiple_y_join(d1: Dessin, d2: Dessin, pairs: Sequence[tuple]) -> Dessin:
    if not pairs:
        raise JoinError("need at least one handle pair")
    for side, d in ((0, d1), (1, d2)):
        used = set()
        for pair in pairs:
            h = pair[side]
            _check_handle(d, h, "Y")
            if h.points & used:
                raise JoinError("handles used in one dessin must be disjoint")
            used |= h.points
    for h1, h2 in pairs:
        if h1.k != h2.k:
            raise JoinError("handle kinds differ: (%d) vs (%d)" % (h1.k, h2.k))
    swaps = [(h1.a, h2.a) for h1, h2 in pairs] + [(h1.b, h2.b) for h1, h2 in pairs]
    out = _y_sum(d1, d2, swaps)
    _assert_y_bookkeeping(d1, d2, out, len(pairs))
    return out


def twist_y_join(d1: Dessin, h1: Handle, d2: Dessin, h2: Handle) -> Dessin:
    """The crossed pairing a1-b2, b1-a2; the face structure usually changes."""
    _check_handle(d1, h1, "Y")
    _check_handle(d2, h2, "Y")
    return _y_sum(d1, d2, [(h1.a, h2.b), (h1.b, h2.a)])


def x_join(parts: Sequence[tuple]) -> Dessin:
    """Join d dessins along x-handles.

    The a-points form the cycle (a1 ... ad) of x and the b-points (bd ... b1).
    """
    count = len(parts)
    if count < 2:
        raise JoinError("an x-join needs at least two parts")
    orders = {d.x.order() for d, _ in parts}
    if len(orders) != 1:
        raise JoinError("parts have different x orders %s" % sorted(orders))
    order = orders.pop()
    if order % count:
        raise JoinError("%d parts do not divide the x order %d" % (count, order))
    for d, h in parts:
        _check_handle(d, h, "X")
    hurwitz = all(_hurwitz(d) for d, _ in parts)
    if hurwitz and len({h.k for _, h in parts}) != 1:
        raise JoinError("mixed handle kinds %s" % sorted({h.k for _, h in parts}))
    offsets = []
    total = 0
    for d, _ in parts:
        offsets.append(total)
        total += d.degree
    x = _direct_sum([d.x for d, _ in parts])
    a_pts = [h.a + off for (_, h), off in zip(parts, offsets)]
    b_pts = [h.b + off for (_, h), off in zip(parts, offsets)][::-1]
    for cyc in (a_pts, b_pts):
        for i, pt in enumerate(cyc):
            x[pt] = cyc[(i + 1) % count]
    y = _direct_sum([d.y for d, _ in parts])
    out = Dessin(Permutation(x), Permutation(y))
    sigs = [genus_signature(d) for d, _ in parts]
    s = genus_signature(out)
    if s.alpha != sum(t.alpha for t in sigs) - 2 * count:
        raise JoinError("internal: x-join fixed-point bookkeeping failed")
    if hurwitz and count == 3:
        if not _hurwitz(out):
            raise JoinError("internal: x-join produced type %s" % dessin_type(out))
        expected = tuple(sum(v) for v in zip(*((t.genus, t.beta, t.gamma) for t in sigs)))
        if (s.genus, s.beta, s.gamma) != expected:
            raise JoinError("internal: x-join bookkeeping failed")
    return out


def handle_projection_check(cover: Dessin, base: Dessin, phi: Sequence[int]) -> bool:
    """Handles of ``cover`` project onto handles of ``base``, and lift back.

    Over a base handle whose points have only fixed-point preimages, the
    preimage must contain as many pairwise disjoint handles as there are sheets.
    """
    for gc, gb in ((cover.x, base.x), (cover.y, base.y)):
        if any(phi[gc[i]] != gb[phi[i]] for i in range(cover.degree)):
            raise JoinError("map is not equivariant")
    sheets = cover.degree // base.degree
    for axis in ("Y", "X"):
        gen = cover.y if axis == "Y" else cover.x
        base_handles = handles_of(base, axis)
        base_set = {(h.k, h.a, h.b) for h in base_handles}
        cover_handles = handles_of(cover, axis)
        for h in cover_handles:
            if (h.k, phi[h.a], phi[h.b]) not in base_set:
                return False
        for bh in base_handles:
            pre_a = [i for i in range(cover.degree) if phi[i] == bh.a]
            pre_b = [i for i in range(cover.degree) if phi[i] == bh.b]
            if not all(gen[i] == i for i in pre_a + pre_b):
                continue
            over = [h for h in cover_handles if phi[h.a] == bh.a and phi[h.b] == bh.b]
            if max_disjoint_handles(over, bh.k, axis) != sheets:
                return False
    return True
