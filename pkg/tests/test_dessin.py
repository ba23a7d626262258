import pytest

from dessins.catalog import named
from dessins.dessin import (
    Dessin,
    DessinError,
    automorphism_count,
    cover_counts,
    dessin_type,
    genus_signature,
    hurwitz_genus,
    is_isomorphic,
    is_quotient,
    macbeath_classify,
    mirror,
    passport,
)
from dessins.perm import Permutation, parse_cycles


def relabel(d, sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    conj = lambda p: Permutation([sigma[p[inv[i]]] for i in range(len(sigma))])
    return Dessin(conj(d.x), conj(d.y))


def test_disconnected_pair_rejected():
    with pytest.raises(DessinError):
        Dessin(parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4))


def test_signature_of_a():
    sig = genus_signature(named("A"))
    assert (sig.genus, sig.alpha, sig.beta, sig.gamma) == (0, 2, 2, 0)
    assert str(sig) == "(0; 2, 2, 3, 3)"
    assert str(dessin_type(named("A"))) == "(3,2,7)"


def test_genus_one_modular_dessin():
    assert genus_signature(named("P19")).genus == 1
    assert str(named("P19").type) == "(3,2,19)"


def test_mirror_is_an_involution_and_keeps_passport():
    s = named("S")
    assert mirror(mirror(s)) == s
    assert passport(mirror(s)) == passport(s)
    assert is_isomorphic(s, named("Sbar")) is None
    assert is_isomorphic(mirror(s), named("Sbar")) is not None


@pytest.mark.parametrize("name", ["A", "S", "G", "Fig13"])
def test_isomorphism_detects_relabelling(name):
    import random

    d = named(name)
    sigma = list(range(d.degree))
    random.Random(1).shuffle(sigma)
    e = relabel(d, sigma)
    phi = is_isomorphic(d, e)
    assert phi is not None
    assert all(phi[d.x[i]] == e.x[phi[i]] and phi[d.y[i]] == e.y[phi[i]] for i in range(d.degree))
    assert is_isomorphic(e, d) is not None


@pytest.mark.parametrize("name", ["A", "S", "C", "G", "Fig13"])
def test_automorphism_count_divides_degree(name):
    d = named(name)
    assert d.degree % automorphism_count(d) == 0


def test_quotient_maps():
    assert is_quotient(named("G"), named("A")) is not None
    assert is_quotient(named("A"), named("G")) is None


def test_cover_counts():
    assert cover_counts(named("A")) == (1, 1)
    assert cover_counts(named("S"))[0] == 3
    with pytest.raises(DessinError):
        cover_counts(named("P19"))


def test_hurwitz_genus():
    assert hurwitz_genus(168) == 3
    assert hurwitz_genus(1344) == 17
    with pytest.raises(DessinError):
        hurwitz_genus(100)


@pytest.mark.parametrize(
    "q, expected",
    [(7, "Hurwitz(1)"), (8, "Hurwitz(1)"), (13, "Hurwitz(3)"), (27, "Hurwitz(1)"), (29, "Hurwitz(3)"),
     (64, "NotHurwitz"), (11, "NotHurwitz"), (49, "NotHurwitz"), (125, "Hurwitz(1)")],
)
def test_macbeath(q, expected):
    assert str(macbeath_classify(q)) == expected


def test_macbeath_rejects_non_prime_power():
    with pytest.raises(DessinError):
        macbeath_classify(12)
