import pytest

from dessins.catalog import named
from dessins.dessin import dessin_type, genus_signature, is_isomorphic, mirror
from dessins.expr import evaluate, parse_expr
from dessins.joins import (
    Handle,
    JoinError,
    max_disjoint_handles,
    multiple_y_join,
    relation_holds,
    same_face_check,
    twist_y_join,
    x_handles,
    x_join,
    y_handles,
    y_join,
)

HURWITZ = ["A", "B", "C", "D", "E", "F", "G", "H", "S", "Sbar", "Fig13", "Fig15", "Fig16", "Fig17", "Fig18"]


def test_handle_examples():
    assert [str(h) for h in y_handles(named("A"))] == ["Y(1): 14 -> 1"]
    assert [h.k for h in x_handles(named("A"))] == [2]
    assert sorted(h.k for h in y_handles(named("S"))) == [1, 2]
    assert sorted(h.k for h in y_handles(named("B"))) == [2, 2, 3]


@pytest.mark.parametrize("name", HURWITZ)
def test_handles_satisfy_relation(name):
    d = named(name)
    hs = y_handles(d) + x_handles(d)
    assert all(relation_holds(d, h) for h in hs)
    assert [h.sort_key() for h in y_handles(d)] == sorted(h.sort_key() for h in y_handles(d))
    assert all(h.k in (1, 2, 3) for h in y_handles(d))
    assert all(h.k in (1, 2) for h in x_handles(d))


@pytest.mark.parametrize("left, right, k", [("A", "C", 1), ("S", "S", 1), ("S", "Sbar", 2), ("D", "F", 2), ("E", "G", 1)])
def test_y_join_commutes_and_keeps_x(left, right, k):
    d1, d2 = named(left), named(right)
    h1 = next(h for h in y_handles(d1) if h.k == k)
    h2 = next(h for h in y_handles(d2) if h.k == k)
    j12 = y_join(d1, h1, d2, h2)
    j21 = y_join(d2, h2, d1, h1)
    assert is_isomorphic(j12, j21) is not None
    n1 = d1.degree
    assert list(j12.x.images) == list(d1.x.images) + [v + n1 for v in d2.x.images]
    touched = {h1.a, h1.b, h2.a + n1, h2.b + n1}
    for i in range(j12.degree):
        if i not in touched:
            base = d1.y[i] if i < n1 else d2.y[i - n1] + n1
            assert j12.y[i] == base
    s1, s2, s = genus_signature(d1), genus_signature(d2), genus_signature(j12)
    assert (s.genus, s.alpha, s.beta, s.gamma) == (
        s1.genus + s2.genus, s1.alpha + s2.alpha, s1.beta + s2.beta - 4, s1.gamma + s2.gamma)
    assert dessin_type(j12).as_tuple() == (3, 2, 7)


def test_y_join_rejects_mismatched_kinds():
    b = named("B")
    k2 = next(h for h in y_handles(b) if h.k == 2)
    k3 = next(h for h in y_handles(b) if h.k == 3)
    with pytest.raises(JoinError):
        y_join(b, k2, b, k3)
    with pytest.raises(JoinError):
        y_join(b, Handle("Y", 1, 0, 1), b, k2)


def test_multiple_join_needs_disjoint_handles():
    b = named("B")
    h0, h1 = [h for h in y_handles(b) if h.k == 2]
    assert h0.points & h1.points
    with pytest.raises(JoinError):
        multiple_y_join(b, b, [(h0, h0), (h1, h1)])


def test_g_stem_multiple_joins():
    g = named("G")
    hs = [h for h in y_handles(g) if h.k == 1]
    assert max_disjoint_handles(hs, 1) == 3
    for m, genus in ((1, 0), (2, 1), (3, 2)):
        d = multiple_y_join(g, g, [(hs[i], hs[i]) for i in range(m)])
        assert d.degree == 84 and genus_signature(d).genus == genus


def test_twist_changes_type():
    s = named("S")
    h = next(h for h in y_handles(s) if h.k == 1)
    assert str(dessin_type(twist_y_join(s, h, s, h))) == "(3,2,12)"


def test_x_join_keeps_y_and_bookkeeping():
    a = named("A")
    h = x_handles(a)[0]
    d = x_join([(a, h)] * 3)
    assert list(d.y.images) == [v + off for off in (0, 14, 28) for v in a.y.images]
    s, sa = genus_signature(d), genus_signature(a)
    assert (s.genus, s.alpha, s.beta, s.gamma) == (3 * sa.genus, 3 * sa.alpha - 6, 3 * sa.beta, 3 * sa.gamma)


@pytest.mark.parametrize("names", [("A", "A", "A"), ("A", "Fig15", "Fig17"), ("Fig16", "A", "Fig18")])
def test_x_join_mirror_law(names):
    parts = [(named(n), x_handles(named(n))[0]) for n in names]
    image = mirror(x_join(parts))
    # reversed cyclic order, each handle keeps its (a, b) labels
    reversed_parts = []
    for d, h in reversed(parts):
        md = mirror(d)
        k = next(k for k in range(1, d.degree + 1) if relation_holds(md, Handle("X", k, h.a, h.b)))
        reversed_parts.append((md, Handle("X", k, h.a, h.b)))
    assert is_isomorphic(image, x_join(reversed_parts)) is not None
    # equivalently: same order, labels swapped (the canonical mirror handle)
    swapped = [(mirror(d), Handle("X", h.k, h.b, h.a)) for d, h in parts]
    assert all(g in x_handles(md) for md, g in swapped)
    assert is_isomorphic(image, x_join(swapped)) is not None


def test_x_join_errors():
    a = named("A")
    with pytest.raises(JoinError):
        x_join([(a, x_handles(a)[0])])
    with pytest.raises(JoinError):
        x_join([(a, x_handles(a)[0])] * 2)  # 2 does not divide 3
    f13 = named("Fig13")
    with pytest.raises(JoinError):
        x_join([(a, x_handles(a)[0]), (f13, x_handles(f13)[0]), (a, x_handles(a)[0])])


def test_same_face_predicate():
    assert same_face_check(named("B"))
    assert not same_face_check(named("A"))
    with pytest.raises(JoinError):
        same_face_check(named("P19"))


def test_crossed_b2b_joins_are_isomorphic():
    assert is_isomorphic(evaluate(parse_expr("B(2@0,1)B")), evaluate(parse_expr("B(2@1,0)B"))) is not None
