import random

import pytest

from gol.errors import DomainError, ParseError, WindowError
from gol.groups import (make_group, relator_G, relator_H, relators_G, retract_rn,
                        rho_N)
from gol.properties import check_group_laws
from gol.words import Word, parse_word as P


@pytest.mark.parametrize("spec, name", [
    ("free:2", "free:2"), ("freeab:3", "freeab:3"), ("klein", "klein"),
    ("G[1,6]", "G[1,6]"), ("H[4]", "H[4]"), ("A[2,3]", "A[2,3]"), ("tower[2]", "tower[2]"),
])
def test_catalog(spec, name):
    assert make_group(spec).name == name


@pytest.mark.parametrize("spec", ["free:", "G[1]", "banana", "tower[x]"])
def test_bad_specs(spec):
    with pytest.raises(ParseError):
        make_group(spec)


def test_empty_windows_rejected():
    with pytest.raises(WindowError):
        make_group("G[1,0]")
    with pytest.raises(DomainError):
        make_group("free:0")


def test_free_nf():
    F = make_group("free:2")
    assert F.nf(F.parse("a b b' a'")) == Word()
    with pytest.raises(ParseError):
        F.parse("c")


def test_freeab_commutes():
    A = make_group("freeab:2")
    assert A.equal(A.parse("a b"), A.parse("b a"))
    assert A.nf(A.parse("b a b'")) == A.parse("a")


def test_klein_normal_form_and_root_failure():
    K = make_group("klein")
    assert K.nf(K.parse("y x")) == K.parse("x y'")
    xy = K.element("x y")
    assert xy * xy == K.element("x^2")
    assert xy != K.element("x")


def test_group_elements_do_not_mix():
    with pytest.raises(ValueError):
        make_group("free:2").element("a") * make_group("free:2").element("a")


def test_g_relator_is_trivial():
    G = make_group("G[1,4]")
    for r in relators_G(G.window):
        assert G.is_identity(r)
    assert relator_G(0, 0) == P("x[0,1] y[0,0] x[0,1]' y[0,1]")


def test_g_window_overflow():
    G = make_group("G[0,2]")
    with pytest.raises(WindowError):
        G.nf(P("x[0,3]"))


def test_retraction_kills_upper_families():
    G = make_group("G[2,3]")
    g = G.element("x[0,1] y[2,0] x[1,0]")
    assert retract_rn(0, g) == G.element("x[0,1]")
    assert retract_rn(1, g) == G.element("x[0,1] x[1,0]")
    with pytest.raises(WindowError):
        retract_rn(5, g)


def test_retraction_is_a_homomorphism():
    G = make_group("G[2,3]")
    rng = random.Random(5)
    for _ in range(100):
        u, v = (G.element(G.random_word(rng, 6)) for _ in range(2))
        assert retract_rn(1, u * v) == retract_rn(1, u) * retract_rn(1, v)


def test_rho_examples():
    assert rho_N(3, P("y[0,2]")) == P("x[0,3]' y[0,3]' x[0,3]")
    assert rho_N(3, P("y[0,1]")) == P("x[0,2]' x[0,3]' y[0,3] x[0,3] x[0,2]")
    assert rho_N(3, P("x[0,1]")) == P("x[0,1]")
    with pytest.raises(DomainError):
        rho_N(3, P("y[0,4]"))


def test_rho_kills_relators_and_agrees_with_g():
    for n in range(-4, 4):
        assert rho_N(4, relator_H(n)) == Word()
    G, H = make_group("G[0,4]"), make_group("H[4]")
    rng = random.Random(2)
    for _ in range(200):
        u, v = G.random_word(rng, 6), G.random_word(rng, 6)
        assert G.equal(u, v) == H.equal(u, v)


@pytest.mark.parametrize("spec", ["free:2", "freeab:2", "klein", "G[1,3]", "H[3]", "A[1,3]",
                                  "tower[2]"])
def test_group_laws(spec):
    G = make_group(spec)
    assert check_group_laws(G, 100, random.Random(0)) == []
