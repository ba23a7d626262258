import pytest
from hypothesis import given
from hypothesis import strategies as st

from dessins.catalog import named
from dessins.dessin import is_isomorphic
from dessins.expr import Atom, ExprError, Twist, XJoin, YJoin, evaluate, format_expr, parse_expr


def test_examples():
    assert parse_expr("A(1)C") == YJoin(Atom("A"), 1, 0, 0, Atom("C"))
    assert parse_expr("X(A,A,A)") == XJoin(((Atom("A"), 0),) * 3)
    assert parse_expr("B(2@1,0)B") == YJoin(Atom("B"), 2, 1, 0, Atom("B"))
    assert parse_expr("TWIST(S,S@1)") == Twist(Atom("S"), 0, Atom("S"), 1)
    assert parse_expr("<tests/data/A_drawing.dsn>") == Atom("tests/data/A_drawing.dsn", True)


def test_left_associative():
    e = parse_expr("A(1)A(1)A")
    assert isinstance(e.left, YJoin) and e.right == Atom("A")
    f = parse_expr("A(1)(A(1)A)")
    assert isinstance(f.right, YJoin)


def test_evaluation_degrees():
    assert evaluate(parse_expr("A(1)A")).degree == 28
    assert evaluate(parse_expr("G(1)G")).degree == 84
    assert evaluate(parse_expr("X(Fig18,Fig18,Fig18)")).degree == 126


@pytest.mark.parametrize("left, k, right", [("A", 1, "C"), ("S", 1, "Sbar"), ("E", 1, "G"), ("D", 2, "F")])
def test_join_commutes(left, k, right):
    one = evaluate(parse_expr("%s(%d)%s" % (left, k, right)))
    other = evaluate(parse_expr("%s(%d)%s" % (right, k, left)))
    assert is_isomorphic(one, other) is not None


@pytest.mark.parametrize(
    "text", ["", "A(", "A(4)A", "A(1)", "X(A)", "A B", "A(1@0)A", "TWIST(A)", "A$"],
)
def test_syntax_errors(text):
    with pytest.raises(ExprError):
        parse_expr(text)


def test_error_positions():
    with pytest.raises(ExprError, match="position 4"):
        parse_expr("A(1)")


def test_evaluation_errors():
    with pytest.raises(ExprError, match="out of range"):
        evaluate(parse_expr("A(1@1,0)A"))
    with pytest.raises(ExprError, match="out of range"):
        evaluate(parse_expr("A(3)A"))


names = st.sampled_from(["A", "B", "S", "Sbar", "Fig13", "P7"])


def exprs():
    return st.recursive(
        names.map(Atom),
        lambda sub: st.one_of(
            st.builds(YJoin, sub, st.integers(1, 3), st.integers(0, 3), st.integers(0, 3), sub),
            st.builds(Twist, sub, st.integers(0, 2), sub, st.integers(0, 2)),
            st.lists(st.tuples(sub, st.integers(0, 2)), min_size=2, max_size=4).map(lambda xs: XJoin(tuple(xs))),
        ),
        max_leaves=6,
    )


@given(exprs())
def test_format_parse_round_trip(e):
    assert parse_expr(format_expr(e)) == e


def test_custom_resolver():
    seen = []

    def resolve(name):
        seen.append(name)
        return named("A")

    assert evaluate(parse_expr("Q(1)R"), resolve).degree == 28
    assert seen == ["Q", "R"]
