"""Permutation group algorithms: stabilizer chains, primitivity, recognition.

Chain construction runs a seeded random Schreier-Sims phase and then makes
the result exact.  The product of orbit sizes of any chain built from group
elements is a lower bound for the group order, so reaching n!/2 (all
generators even) or n! proves completeness outright.  Every other chain is
checked level by level by sifting all of its Schreier generators, and any
residue is added back until every level passes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .perm import Permutation, commutator, compose, cycle_analysis, identity, inverse

__all__ = [
    "GroupError",
    "StabilizerChain",
    "GroupFacts",
    "Recognition",
    "JordanCertificate",
    "build_chain",
    "group_order",
    "contains",
    "orbit",
    "is_transitive",
    "is_primitive",
    "minimal_block",
    "recognize",
    "jordan_certificate",
    "fixed_points_via_class_formula",
    "enumerate_elements",
    "CLASS_FORMULA_ORDER_CAP",
]

CLASS_FORMULA_ORDER_CAP = 10**6
PRIMITIVITY_DEGREE_CAP = 256


class GroupError(ValueError):
    pass


def _as_arrays(generators: Sequence[Permutation]) -> tuple[int, list]:
    if not generators:
        raise GroupError("need at least one generator")
    n = generators[0].degree
    for g in generators:
        if g.degree != n:
            raise GroupError("degree mismatch among generators")
    return n, [np.asarray(g.images, dtype=np.intp) for g in generators]


class _Level:
    __slots__ = ("base", "gens", "orbit", "in_orbit", "reps", "inv_reps")

    def __init__(self, n: int, base: int):
        self.base = base
        self.gens: list = []
        self.orbit = [base]
        self.in_orbit = np.zeros(n, dtype=bool)
        self.in_orbit[base] = True
        ident = np.arange(n, dtype=np.intp)
        self.reps = np.empty((n, n), dtype=np.intp)
        self.inv_reps = np.empty((n, n), dtype=np.intp)
        self.reps[base] = ident
        self.inv_reps[base] = ident

    def add_generator(self, g: np.ndarray, g_inv: np.ndarray) -> None:
        self.gens.append((g, g_inv))
        fresh = []
        for pt in self.orbit:
            self._visit(pt, g, g_inv, fresh)
        while fresh:
            pt = fresh.pop()
            for s, s_inv in self.gens:
                self._visit(pt, s, s_inv, fresh)

    def _visit(self, pt: int, s: np.ndarray, s_inv: np.ndarray, fresh: list) -> None:
        img = int(s[pt])
        if not self.in_orbit[img]:
            self.in_orbit[img] = True
            self.orbit.append(img)
            self.reps[img] = s[self.reps[pt]]
            self.inv_reps[img] = self.inv_reps[pt][s_inv]
            fresh.append(img)


@dataclass(frozen=True)
class ChainLevel:
    base_point: int
    transversal: dict  # orbit point -> Permutation mapping base_point to it
    strong_generators: tuple


class StabilizerChain:
    """A verified base and strong generating set.

    Built by :func:`build_chain`; immutable afterwards.
    """

    def __init__(self, degree: int, levels: list, generators: tuple):
        self.degree = degree
        self._levels = levels
        self.generators = generators
        self._order = math.prod(len(lv.orbit) for lv in levels)

    @property
    def base(self) -> list:
        return [lv.base for lv in self._levels]

    @property
    def orbit_sizes(self) -> list:
        return [len(lv.orbit) for lv in self._levels]

    @property
    def order(self) -> int:
        return self._order

    @property
    def levels(self) -> list:
        out = []
        for lv in self._levels:
            trans = {pt: Permutation._trusted(tuple(int(v) for v in lv.reps[pt])) for pt in lv.orbit}
            gens = tuple(Permutation._trusted(tuple(int(v) for v in g)) for g, _ in lv.gens)
            out.append(ChainLevel(lv.base, trans, gens))
        return out

    def sift(self, g: np.ndarray) -> tuple:
        """Return (residue, level reached); level == depth means full sift."""
        for i, lv in enumerate(self._levels):
            beta = g[lv.base]
            if not lv.in_orbit[beta]:
                return g, i
            g = lv.inv_reps[beta][g]
        return g, len(self._levels)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise GroupError("degree mismatch")
        residue, _ = self.sift(np.asarray(p.images, dtype=np.intp))
        return bool(np.array_equal(residue, np.arange(self.degree)))

    def elements(self) -> np.ndarray:
        """All group elements as rows of image arrays (use only for small groups)."""
        n = self.degree
        elems = np.arange(n, dtype=np.intp)[None, :]
        for lv in reversed(self._levels):
            reps = lv.reps[lv.orbit]
            m = len(lv.orbit)
            # row (e, u) is e followed by u
            elems = reps[np.arange(m)[None, :, None], elems[:, None, :]].reshape(-1, n)
        return elems


def _new_level_point(h: np.ndarray) -> int:
    moved = np.nonzero(h != np.arange(len(h)))[0]
    return int(moved[0])


class _ChainBuilder:
    def __init__(self, n: int):
        self.n = n
        self.levels: list[_Level] = []
        self.ident = np.arange(n, dtype=np.intp)

    def sift(self, g):
        for i, lv in enumerate(self.levels):
            beta = g[lv.base]
            if not lv.in_orbit[beta]:
                return g, i
            g = lv.inv_reps[beta][g]
        return g, len(self.levels)

    def add_residue(self, h: np.ndarray, depth: int) -> int:
        if depth == len(self.levels):
            self.levels.append(_Level(self.n, _new_level_point(h)))
        h_inv = np.argsort(h)
        for lv in self.levels[: depth + 1]:
            lv.add_generator(h, h_inv)
        return depth

    def sift_and_add(self, g) -> bool:
        residue, depth = self.sift(g)
        if depth == len(self.levels) and np.array_equal(residue, self.ident):
            return False
        self.add_residue(residue, depth)
        return True

    def order(self) -> int:
        return math.prod(len(lv.orbit) for lv in self.levels)

    def _batch_residue(self, level: int) -> Optional[tuple]:
        """Sift all Schreier generators of ``level`` through the deeper levels."""
        lv = self.levels[level]
        orbit = np.array(lv.orbit, dtype=np.intp)
        reps = lv.reps[orbit]
        batches = []
        for s, _ in lv.gens:
            prod = s[reps]  # u_beta then s
            targets = s[orbit]
            batches.append(lv.inv_reps[targets[:, None], prod])
        stack = np.concatenate(batches) if batches else np.empty((0, self.n), dtype=np.intp)
        chunk = max(1, 200_000 // self.n)
        for start in range(0, len(stack), chunk):
            g = stack[start : start + chunk]
            for depth in range(level + 1, len(self.levels)):
                deeper = self.levels[depth]
                beta = g[:, deeper.base]
                bad = ~deeper.in_orbit[beta]
                if bad.any():
                    return g[int(np.argmax(bad))].copy(), depth
                g = deeper.inv_reps[beta[:, None], g]
            nontrivial = (g != self.ident).any(axis=1)
            if nontrivial.any():
                return g[int(np.argmax(nontrivial))].copy(), len(self.levels)
        return None

    def verify(self) -> None:
        level = len(self.levels) - 1
        while level >= 0:
            found = self._batch_residue(level)
            if found is None:
                level -= 1
            else:
                level = self.add_residue(*found)


def _random_elements(gens: list, rng: random.Random, n: int):
    """Product-replacement generator of pseudo-random group elements."""
    state = [g.copy() for g in gens]
    while len(state) < 10:
        state.append(gens[len(state) % len(gens)].copy())
    acc = np.arange(n, dtype=np.intp)
    k = len(state)

    def step():
        nonlocal acc
        i, j = rng.sample(range(k), 2)
        if rng.random() < 0.5:
            state[i] = state[j][state[i]]  # state[i] then state[j]
        else:
            state[i] = state[i][state[j]]
        acc = state[i][acc]
        return acc

    for _ in range(50):
        step()
    while True:
        yield step()


def build_chain(generators: Sequence[Permutation], seed: int = 0) -> StabilizerChain:
    """Build an exact stabilizer chain for the group generated by ``generators``."""
    n, gens = _as_arrays(generators)
    builder = _ChainBuilder(n)
    nontrivial = [g for g in gens if not np.array_equal(g, builder.ident)]
    for g in nontrivial:
        builder.sift_and_add(g)
    if nontrivial:
        all_even = all(cycle_analysis(p).parity == "even" for p in generators)
        ceiling = math.factorial(n) // (2 if all_even else 1)
        rng = random.Random(seed)
        streak = 0
        for g in _random_elements(nontrivial, rng, n):
            if builder.order() == ceiling:
                break
            streak = 0 if builder.sift_and_add(g) else streak + 1
            if streak >= 25:
                break
        if builder.order() != ceiling:
            builder.verify()
    return StabilizerChain(n, builder.levels, tuple(generators))


def group_order(chain: StabilizerChain) -> int:
    return chain.order


def contains(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)


def orbit(generators: Sequence[Permutation], point: int = 0) -> list:
    seen = {point}
    queue = [point]
    for pt in queue:
        for g in generators:
            img = g[pt]
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return queue


def is_transitive(generators: Sequence[Permutation]) -> bool:
    if not generators:
        raise GroupError("need at least one generator")
    return len(orbit(generators, 0)) == generators[0].degree


def minimal_block(generators: Sequence[Permutation], beta: int) -> list:
    """Smallest block containing 0 and ``beta`` (union-find closure)."""
    n = generators[0].degree
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    pending = [(0, beta)]
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for g in generators:
            pending.append((g[a], g[b]))
    root = find(0)
    return [i for i in range(n) if find(i) == root]


def is_primitive(generators: Sequence[Permutation]) -> bool:
    if not is_transitive(generators):
        raise GroupError("primitivity needs a transitive action")
    n = generators[0].degree
    if n < 2:
        raise GroupError("primitivity needs degree at least 2")
    return all(len(minimal_block(generators, b)) == n for b in range(1, n))


@dataclass(frozen=True)
class Recognition:
    kind: str  # "Alternating" | "Symmetric" | "Other"
    value: int  # degree for named families, order otherwise

    def __str__(self) -> str:
        return "%s(%d)" % (self.kind, self.value)


@dataclass(frozen=True)
class GroupFacts:
    degree: int
    order: int
    transitive: bool
    primitive: Optional[bool]  # None: not computed
    recognition: Recognition
    generator_parities: tuple

    @property
    def stabilizer_order(self) -> int:
        return self.order // self.degree

    def summary(self) -> str:
        prim = "not computed" if self.primitive is None else str(self.primitive).lower()
        return "order=%d recognition=%s transitive=%s primitive=%s parities=%s" % (
            self.order,
            self.recognition,
            str(self.transitive).lower(),
            prim,
            ",".join(self.generator_parities),
        )


def recognize(generators: Sequence[Permutation], seed: int = 0) -> GroupFacts:
    n = generators[0].degree
    chain = build_chain(generators, seed=seed)
    order = chain.order
    parities = tuple(cycle_analysis(g).parity for g in generators)
    transitive = is_transitive(generators)
    if not transitive:
        primitive: Optional[bool] = False
    elif n > PRIMITIVITY_DEGREE_CAP or n < 2:
        primitive = None
    else:
        primitive = is_primitive(generators)
    if order == math.factorial(n):
        rec = Recognition("Symmetric", n)
    elif 2 * order == math.factorial(n) and all(p == "even" for p in parities):
        rec = Recognition("Alternating", n)
    else:
        rec = Recognition("Other", order)
    return GroupFacts(n, order, transitive, primitive, rec, parities)


@dataclass(frozen=True)
class JordanCertificate:
    word: str
    length: int
    element: Permutation  # the single cycle itself


def _single_cycle_power(p: Permutation, max_length: int) -> Optional[tuple]:
    """Exponent m and length l with p**m a single l-cycle, l <= max_length."""
    ca = cycle_analysis(p)
    lengths = dict(ca.cycle_type)
    for length in sorted(lengths):
        if length < 2 or length > max_length or lengths[length] != 1:
            continue
        others = 1
        for other in lengths:
            if other != length:
                others = others * other // math.gcd(others, other)
        if math.gcd(others, length) == 1:
            return others, length
    return None


def jordan_certificate(
    generators: Sequence[Permutation],
    budget: int = 10_000,
    seed: int = 0,
    names: Optional[Sequence[str]] = None,
    max_word_length: int = 20,
) -> Optional[JordanCertificate]:
    """Search for an element whose power is a single cycle of length <= n-3.

    Candidates are the generators, their pairwise commutators, then seeded
    random words.  Such a cycle in a primitive group forces A_n <= G.
    """
    n = generators[0].degree
    names = list(names) if names else ["g%d" % i for i in range(len(generators))]
    candidates = [(names[i], g) for i, g in enumerate(generators)]
    for i, g in enumerate(generators):
        for j, h in enumerate(generators):
            if i != j:
                candidates.append(("[%s,%s]" % (names[i], names[j]), commutator(g, h)))

    def check(word, p):
        hit = _single_cycle_power(p, n - 3)
        if hit is None:
            return None
        m, length = hit
        if m == 1:
            label = word
        elif "*" in word:
            label = "(%s)^%d" % (word, m)
        else:
            label = "%s^%d" % (word, m)
        return JordanCertificate(label, length, p**m)

    for word, p in candidates:
        found = check(word, p)
        if found:
            return found
    rng = random.Random(seed)
    invs = [inverse(g) for g in generators]
    for _ in range(budget):
        length = rng.randint(1, max_word_length)
        p = identity(n)
        letters = []
        last = None
        while len(letters) < length:
            i, sign = rng.randrange(len(generators)), rng.choice((1, -1))
            if last == (i, -sign):
                continue  # keep words freely reduced
            last = (i, sign)
            p = compose(p, generators[i] if sign == 1 else invs[i])
            letters.append(names[i] if sign == 1 else names[i] + "^-1")
        found = check("*".join(letters), p)
        if found:
            return found
    return None


def enumerate_elements(generators: Sequence[Permutation], cap: int = CLASS_FORMULA_ORDER_CAP) -> np.ndarray:
    chain = build_chain(generators)
    if chain.order > cap:
        raise GroupError("group order %d exceeds the enumeration cap %d" % (chain.order, cap))
    return chain.elements()


def fixed_points_via_class_formula(generators: Sequence[Permutation], h: Permutation) -> int:
    """Fixed points of ``h`` from |h^G ∩ H|·|C_G(h)|/|H| with H the stabilizer of 0."""
    if not is_transitive(generators):
        raise GroupError("class formula needs a transitive action")
    chain = build_chain(generators)
    if chain.order > CLASS_FORMULA_ORDER_CAP:
        raise GroupError("group order %d exceeds the enumeration cap" % chain.order)
    if not chain.contains(h):
        raise GroupError("element is not in the group")
    elems = chain.elements()
    himg = np.asarray(h.images, dtype=np.intp)
    inv = np.argsort(elems, axis=1)
    rows = np.arange(len(elems))[:, None]
    # g^-1 h g: apply g^-1, then h, then g
    conj = elems[rows, himg[inv]]
    klass = np.unique(conj, axis=0)
    centralizer = len(elems) // len(klass)
    in_stabilizer = int(np.count_nonzero(klass[:, 0] == 0))
    stabilizer = int(np.count_nonzero(elems[:, 0] == 0))
    return in_stabilizer * centralizer // stabilizer
