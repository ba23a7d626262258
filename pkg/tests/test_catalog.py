from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dessins import catalog
from dessins.catalog import (
    CatalogError,
    DsnError,
    find_psl2_triple,
    format_dsn,
    load_dsn,
    mobius_dessin,
    modular_p,
    named,
    parse_dsn,
    psl2_traces,
    save_dsn,
    theorem6_spec,
)
from dessins.dessin import dessin_type, genus_signature, is_isomorphic, mirror
from dessins.joins import y_handles

DATA = Path(__file__).parent / "data"


@pytest.mark.parametrize("name", catalog.names())
def test_dsn_round_trip(name, tmp_path):
    d = named(name)
    assert parse_dsn(format_dsn(d, ["note"])) == d
    save_dsn(d, tmp_path / "d.dsn")
    assert load_dsn(tmp_path / "d.dsn") == d


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("degree 3\nx (1 2 3)\n", "missing field 'y'"),
        ("degree 3\nx (1 2 3)\ny (1 2)\nz (1)\n", ":4: unknown field"),
        ("degree three\nx\ny\n", ":1: bad degree"),
        ("degree 3\nx (1 2 4)\ny\n", ":2:"),
        ("degree 3\nx (1 2)\ny (1 2)\n", "disconnected"),
        ("degree 3\nx (1 2 3)\nx (1 2 3)\ny\n", ":3: duplicate"),
    ],
)
def test_dsn_errors(text, fragment):
    with pytest.raises(DsnError, match=fragment.replace("(", r"\(")):
        parse_dsn(text)


@pytest.mark.parametrize(
    "drawing, name",
    [("A_drawing.dsn", "A"), ("F_drawing.dsn", "F"), ("Fig13_drawing_a.dsn", "Fig13"),
     ("Fig13_drawing_b.dsn", "Fig13"), ("Fig15_drawing.dsn", "Fig15")],
)
def test_independent_drawings_match_catalog(drawing, name):
    d = load_dsn(DATA / drawing)
    target = named(name)
    assert is_isomorphic(d, target) is not None or is_isomorphic(mirror(d), target) is not None


@pytest.mark.parametrize("name", sorted(catalog.TABLE1))
def test_table_rows_load_cleanly(name):
    assert catalog.check_table_row(name, named(name)) == []


def test_mobius_a_and_errors():
    a = mobius_dessin(13, ((0, 12), (1, 1)), ((12, 0), (0, 1)))
    assert is_isomorphic(a, named("A")) is not None
    with pytest.raises(CatalogError):
        mobius_dessin(15, ((0, 1), (1, 1)), ((1, 0), (0, 1)))
    with pytest.raises(CatalogError):
        mobius_dessin(13, ((1, 2), (2, 4)), ((12, 0), (0, 1)))


@pytest.mark.parametrize("p, trace, k", [(13, 5, 1), (29, 3, 2), (41, 11, 3)])
def test_theorem6(p, trace, k):
    spec = theorem6_spec(p)
    d = spec.dessin()
    assert min(spec.trace_z, p - spec.trace_z) == trace
    assert [h.k for h in y_handles(d)] == [k]
    assert str(dessin_type(d)) == "(3,2,7)"


def test_trace_search_p13():
    assert sorted(psl2_traces(13)) == [3, 5, 6]
    assert find_psl2_triple(13, 2) is None
    assert find_psl2_triple(13, 5) is not None


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]))
def test_modular_dessins(p):
    d = modular_p(p)
    assert d.degree == p + 1
    assert dessin_type(d).as_tuple() == (3, 2, p)
    # genus of P(p) by the congruence of p mod 12
    expected = {1: (p - 13) // 12, 5: (p - 5) // 12, 7: (p - 7) // 12, 11: (p + 1) // 12}[p % 12]
    assert genus_signature(d).genus == expected


def test_named_errors():
    with pytest.raises(CatalogError):
        named("Nope")
    with pytest.raises(CatalogError):
        named("P15")


def test_fixture_override(tmp_path, monkeypatch):
    s = named("S")
    save_dsn(mirror(s), tmp_path / "S.dsn")
    monkeypatch.setenv("DESSIN_FIXTURES", str(tmp_path))
    assert named("S") == mirror(s)
    monkeypatch.delenv("DESSIN_FIXTURES")
    assert named("S") == s


def test_corrupted_fixture_is_reported(tmp_path, monkeypatch):
    save_dsn(named("C"), tmp_path / "B.dsn")
    monkeypatch.setenv("DESSIN_FIXTURES", str(tmp_path))
    with pytest.raises(CatalogError, match="table row"):
        named("B")
