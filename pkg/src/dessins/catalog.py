"""Named dessins: projective-line builders, transcribed fixtures and ``.dsn`` files."""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .dessin import Dessin, DessinError, genus_signature
from .joins import max_disjoint_handles, y_handles
from .perm import Permutation, PermutationError, format_cycles, parse_cycles

__all__ = [
    "CatalogError",
    "DsnError",
    "Psl2Spec",
    "TableRow",
    "TABLE1",
    "mobius_dessin",
    "theorem6_dessin",
    "theorem6_spec",
    "find_psl2_triple",
    "psl2_traces",
    "modular_p",
    "named",
    "names",
    "load_dsn",
    "save_dsn",
    "format_dsn",
    "parse_dsn",
    "fixture_dir",
    "is_prime",
]


class CatalogError(ValueError):
    pass


class DsnError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


# -- projective line -------------------------------------------------------

Matrix = Sequence[Sequence[int]]


def _mat_mul(m: Matrix, n: Matrix, p: int) -> tuple:
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(2)) % p for j in range(2)) for i in range(2)
    )


def _det(m: Matrix, p: int) -> int:
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p


def _trace(m: Matrix, p: int) -> int:
    return (m[0][0] + m[1][1]) % p


def _mobius_perm(m: Matrix, p: int) -> Permutation:
    """Row-vector action t -> (a t + c)/(b t + d) on 0..p-1 with infinity = p."""
    (a, b), (c, d) = m
    images = []
    for t in range(p):
        num, den = (a * t + c) % p, (b * t + d) % p
        images.append(p if den == 0 else num * pow(den, -1, p) % p)
    images.append(p if b % p == 0 else a * pow(b, -1, p) % p)
    return Permutation(images)


def mobius_dessin(p: int, x_matrix: Matrix, y_matrix: Matrix) -> Dessin:
    """Dessin of the Möbius action of two matrices on the projective line over F_p.

    Matrices act on row vectors, which makes the action a right action.
    """
    if not is_prime(p) or p == 2:
        raise CatalogError("%d is not an odd prime" % p)
    for m in (x_matrix, y_matrix):
        if _det(m, p) == 0:
            raise CatalogError("singular matrix %r mod %d" % (m, p))
    return Dessin(_mobius_perm(x_matrix, p), _mobius_perm(y_matrix, p))


@dataclass(frozen=True)
class Psl2Spec:
    p: int
    x_matrix: tuple
    y_matrix: tuple
    trace_z: int

    def dessin(self) -> Dessin:
        return mobius_dessin(self.p, self.x_matrix, self.y_matrix)


_THEOREM6_A = {13: 0, 29: -3, 41: 9}


def _sqrt_minus_one(p: int) -> int:
    return next(i for i in range(1, p) if (i * i + 1) % p == 0)


def theorem6_spec(p: int) -> Psl2Spec:
    if p not in _THEOREM6_A:
        raise CatalogError("the handle construction is defined for p in 13, 29, 41")
    a = _THEOREM6_A[p] % p
    i = _sqrt_minus_one(p)
    c = (a * (1 - a) - 1) % p
    x = ((a, 1), (c, (1 - a) % p))
    y = ((i, 0), (0, (-i) % p))
    z_inv = _mat_mul(x, y, p)
    return Psl2Spec(p, x, y, _trace(z_inv, p))


def theorem6_dessin(p: int) -> Dessin:
    return theorem6_spec(p).dessin()


def _psl_order7(m: Matrix, p: int) -> bool:
    power = m
    for _ in range(6):
        power = _mat_mul(power, m, p)
    scalar = power[0][1] == 0 and power[1][0] == 0 and power[0][0] == power[1][1]
    trivial = m[0][1] == 0 and m[1][0] == 0 and m[0][0] == m[1][1]
    return scalar and power[0][0] in (1, p - 1) and not trivial


def _hurwitz_triples(p: int):
    """All x in SL2(p) with trace +-1 whose product with a fixed involution has order 7.

    Involutions of PSL2(p) form one conjugacy class, so y is fixed as
    [[0, 1], [-1, 0]].
    """
    y = ((0, 1), (p - 1, 0))
    for tr in (1, p - 1):
        for a in range(p):
            d = (tr - a) % p
            for b in range(p):
                if b:
                    cs = [(a * d - 1) * pow(b, -1, p) % p]
                else:
                    cs = range(p) if a * d % p == 1 else []
                for c in cs:
                    x = ((a, b), (c, d))
                    xy = _mat_mul(x, y, p)
                    if _psl_order7(xy, p):
                        yield x, y, _trace(xy, p)


def psl2_traces(p: int) -> dict:
    """Map each class +-t of tr(xy) to one generating pair realising it."""
    if not is_prime(p) or p == 2 or p > 100:
        raise CatalogError("search needs an odd prime p <= 100")
    found = {}
    for x, y, t in _hurwitz_triples(p):
        key = min(t, p - t)
        if key not in found:
            found[key] = Psl2Spec(p, x, y, t)
    return dict(sorted(found.items()))


def find_psl2_triple(p: int, target_trace: int) -> Optional[Dessin]:
    spec = psl2_traces(p).get(min(target_trace % p, -target_trace % p))
    return None if spec is None else spec.dessin()


def modular_p(p: int) -> Dessin:
    """The modular-group dessin P(p): x t->1/(1-t), y t->-1/t on the projective line."""
    if not is_prime(p):
        raise CatalogError("%d is not prime" % p)
    x = ((0, p - 1), (1, 1))
    y = ((0, 1), (p - 1, 0))
    if p == 2:
        raise CatalogError("p must be odd")
    return mobius_dessin(p, x, y)


# -- .dsn files --------------------------------------------------------------


def format_dsn(d: Dessin, comments: Sequence[str] = ()) -> str:
    lines = ["# " + c for c in comments]
    lines.append("degree %d" % d.degree)
    lines.append("x " + _dsn_cycles(d.x))
    lines.append("y " + _dsn_cycles(d.y))
    return "\n".join(lines) + "\n"


def _dsn_cycles(p: Permutation) -> str:
    text = format_cycles(p)
    return "" if text == "()" else text


def parse_dsn(text: str, source: str = "<string>") -> Dessin:
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        if key not in ("degree", "x", "y"):
            raise DsnError("%s:%d: unknown field %r" % (source, lineno, key))
        if key in fields:
            raise DsnError("%s:%d: duplicate field %r" % (source, lineno, key))
        fields[key] = (lineno, rest.strip())
    for key in ("degree", "x", "y"):
        if key not in fields:
            raise DsnError("%s: missing field %r" % (source, key))
    lineno, deg_text = fields["degree"]
    try:
        degree = int(deg_text)
    except ValueError:
        raise DsnError("%s:%d: bad degree %r" % (source, lineno, deg_text)) from None
    if degree < 1:
        raise DsnError("%s:%d: degree must be positive" % (source, lineno))
    perms = {}
    for key in ("x", "y"):
        lineno, body = fields[key]
        try:
            perms[key] = parse_cycles(body, degree)
        except PermutationError as exc:
            raise DsnError("%s:%d: %s" % (source, lineno, exc)) from None
    try:
        return Dessin(perms["x"], perms["y"])
    except DessinError as exc:
        raise DsnError("%s: %s" % (source, exc)) from None


def load_dsn(path) -> Dessin:
    path = Path(path)
    return parse_dsn(path.read_text(encoding="utf-8"), str(path))


def save_dsn(d: Dessin, path, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_dsn(d, comments), encoding="utf-8")


# -- named entries -------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    degree: int
    disjoint_handles: tuple  # maximal disjoint y-handles of kinds 1, 2, 3
    fixed_points: tuple  # alpha, beta, gamma
    order: int
    group: str


def _half_factorial(n: int) -> int:
    return math.factorial(n) // 2


TABLE1 = {
    "A": TableRow(14, (1, 0, 0), (2, 2, 0), 1092, "PSL2(13)"),
    "B": TableRow(15, (0, 1, 1), (0, 3, 1), _half_factorial(15), "A15"),
    "C": TableRow(21, (1, 0, 1), (0, 5, 0), 168, "PGL3(2)"),
    "D": TableRow(22, (0, 1, 0), (1, 2, 1), _half_factorial(22), "A22"),
    "E": TableRow(28, (1, 1, 0), (1, 4, 0), 504, "PSL2(8)"),
    "F": TableRow(30, (0, 1, 0), (0, 2, 2), 12180, "PSL2(29)"),
    "G": TableRow(42, (3, 0, 0), (0, 6, 0), 1092, "PSL2(13)"),
    "H": TableRow(42, (1, 0, 1), (0, 6, 0), _half_factorial(42), "A42"),
    "I": TableRow(57, (0, 2, 0), (0, 5, 1), _half_factorial(57), "A57"),
    "J": TableRow(72, (2, 0, 0), (0, 4, 2), 2**35 * _half_factorial(36), "(S2 wr A36) n A72"),
    "K": TableRow(72, (1, 0, 0), (0, 4, 2), _half_factorial(72), "A72"),
    "L": TableRow(102, (0, 1, 0), (0, 2, 4), _half_factorial(102), "A102"),
    "M": TableRow(108, (1, 1, 0), (0, 4, 3), _half_factorial(108), "A108"),
    "N": TableRow(108, (1, 0, 1), (0, 4, 3), _half_factorial(108), "A108"),
}

_FIXTURE_NAMES = (
    "S", "Sbar", "B", "C", "D", "E", "G", "H", "I", "J", "K", "L", "M", "N",
    "Fig15", "Fig16", "Fig17", "Fig18",
)

_BUILT = {
    "A": lambda: mobius_dessin(13, ((0, 12), (1, 1)), ((12, 0), (0, 1))),
    "F": lambda: theorem6_dessin(29),
    "T": lambda: theorem6_dessin(41),
    "Fig13": lambda: modular_p(7),
}


def fixture_dir() -> Path:
    override = os.environ.get("DESSIN_FIXTURES")
    return Path(override) if override else Path(__file__).with_name("fixtures")


def names() -> list:
    return sorted(set(_FIXTURE_NAMES) | set(_BUILT), key=_name_key)


def _name_key(name: str) -> tuple:
    return (len(name) > 1 and name != "Sbar", name)


def check_table_row(name: str, d: Dessin) -> list:
    """Cheap catalog-row checks (no group order); returns a list of problems."""
    row = TABLE1.get(name)
    if row is None:
        return []
    problems = []
    sig = genus_signature(d)
    if d.degree != row.degree:
        problems.append("degree %d, expected %d" % (d.degree, row.degree))
    if (sig.alpha, sig.beta, sig.gamma) != row.fixed_points:
        problems.append("fixed points %s, expected %s" % ((sig.alpha, sig.beta, sig.gamma), row.fixed_points))
    if sig.genus != 0:
        problems.append("genus %d, expected 0" % sig.genus)
    hs = y_handles(d)
    counts = tuple(max_disjoint_handles(hs, k, "Y") for k in (1, 2, 3))
    if counts != row.disjoint_handles:
        problems.append("disjoint handles %s, expected %s" % (counts, row.disjoint_handles))
    return problems


def named(name: str) -> Dessin:
    """Catalog entry by name; ``P<p>`` gives the modular dessin P(p)."""
    return _named(name, str(fixture_dir()))


@functools.lru_cache(maxsize=None)
def _named(name: str, directory: str) -> Dessin:
    if name in _BUILT:
        d = _BUILT[name]()
    elif name in _FIXTURE_NAMES:
        d = load_dsn(Path(directory) / (name + ".dsn"))
    elif name.startswith("P") and name[1:].isdigit():
        return modular_p(int(name[1:]))
    else:
        raise CatalogError("unknown dessin %r" % name)
    problems = check_table_row(name, d)
    if problems:
        raise CatalogError("%s fails its table row: %s" % (name, "; ".join(problems)))
    return d
