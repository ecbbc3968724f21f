import random

import pytest

from gol.errors import BoundaryPinchError, DomainError
from gol.hnn import (conjugacy_witness, crossover, cyclic_membership, kill_base,
                     lambda_certificate, make_tower, t_letter, tower_relations)
from gol.words import Word, format_word, free_reduce, parse_word as P


@pytest.fixture(scope="module")
def T4():
    return make_tower(4)


def test_fresh_tower_shape(T4):
    assert len([g for g in T4.group.generators if g.symbol == "u"]) == 9
    assert len([g for g in T4.group.generators if len(g.index) == 1 and g.symbol == "t"]) == 9


def test_two_element_sigma():
    T = make_tower(2, "two", P("a"), P("b"))
    assert T.sigma(-1) == P("b") and T.sigma(0) == P("a")
    assert T.nf(P("t[-1] b t[-1]' a'")) == Word()


def test_trivial_sigma_rejected():
    with pytest.raises(DomainError):
        make_tower(2, "two", P("a a'"), P("b"))


@pytest.mark.parametrize("w, u, k", [("a^3", "a", 3), ("", "a b", 0), ("a b a b", "a b", 2),
                                     ("a b a", "a b", None), ("b' a'", "a b", -1)])
def test_cyclic_membership(w, u, k):
    assert cyclic_membership(P(w), P(u)) == k


def test_cyclic_membership_needs_generator():
    with pytest.raises(ValueError):
        cyclic_membership(P("a"), Word())


def test_defining_relations(T4):
    assert T4.nf(P("t[0] u[0] t[0]'")) == P("u[1]")
    assert T4.nf(P("t t[0] t'")) == P("t[1]")
    for r in tower_relations(T4):
        assert T4.reduce(r).is_empty


def test_irreducible_three_segments(T4):
    b = T4.reduce1(P("t[0]' u[0] t[0]"))
    assert len(b.stable) == 2 and b.segments[1] == P("u[0]")


def test_boundary_pinch_raises(T4):
    with pytest.raises(BoundaryPinchError):
        T4.nf(P("t[4] u[4] t[4]'"))
    with pytest.raises(BoundaryPinchError):
        T4.nf(P("t t[4] t'"))
    # cancelling a stable letter against its inverse is always fine
    assert T4.nf(P("t[4] t[4]'")) == Word()


def test_normal_form_is_canonical(T4):
    # both words denote u[2] t[1]^2 u[2]
    assert T4.nf(P("t t[0] t' u[1] t[1] u[2]")) == T4.nf(P("u[2] t[1] t[1] u[2]"))
    assert format_word(T4.nf(P("t[1] u[1]"))) == "u[2] t[1]"


def test_equality_is_a_congruence(T4):
    rng = random.Random(7)
    letters = [g for g in T4.group.generators if g.symbol == "u" or abs(g.index[0] if g.index else 0) <= 1]
    checked = 0
    while checked < 200:
        u, v, w = (T4.group.random_word(rng, 5, letters) for _ in range(3))
        try:
            if T4.group.equal(u, v):
                assert T4.group.equal(u + w, v + w) and T4.group.equal(w + u, w + v)
            assert T4.group.equal(u + u.inverse(), Word())
            assert T4.group.equal(T4.nf(u) + T4.nf(v), u + v)
        except BoundaryPinchError:
            continue
        checked += 1


def test_kill_base_is_a_homomorphism(T4):
    rng = random.Random(3)
    for _ in range(200):
        u, v = T4.group.random_word(rng, 6), T4.group.random_word(rng, 6)
        assert kill_base(T4, u + v) == free_reduce(kill_base(T4, u) + kill_base(T4, v))
        for r in tower_relations(T4)[::2]:
            assert kill_base(T4, r) == Word()


@pytest.mark.parametrize("g, h", [("a", "b"), ("a", "a"), ("a b", "b a")])
def test_conjugacy_witness(g, h):
    T = make_tower(3, "two", P(g), P(h))
    c = conjugacy_witness(T)
    assert c == Word((t_letter(-1),))
    assert T.nf(c + T.h + c.inverse() + T.g.inverse()) == Word()


def test_witness_needs_two_element_tower(T4):
    with pytest.raises(DomainError):
        conjugacy_witness(T4)


def test_lambda_costs():
    T = make_tower(12)
    for n in range(1, 11):
        cert = lambda_certificate(T, n, 6)
        assert cert.cost == 6 + 2 * n + 1
        assert cert.verify()
    assert lambda_certificate(T, 1, 6).g(0).cost == 6


def test_lambda_dump_has_costs():
    cert = lambda_certificate(make_tower(4), 2, 3)
    text = cert.dump()
    assert text.splitlines()[0] == "g_2 [product] cost=8"
    assert "t[0] [seed] cost=3" in text


def test_lambda_tampered_claim_fails():
    cert = lambda_certificate(make_tower(4), 2, 3)
    cert.root.claim = P("u[3]")
    assert not cert.verify()


def test_lambda_window():
    with pytest.raises(DomainError):
        lambda_certificate(make_tower(4), 4, 6)


@pytest.mark.parametrize("M, n", [(2, 4), (6, 4), (10, 5)])
def test_crossover(M, n):
    assert crossover(M) == n
    assert n * n > M + 2 * n + 1 and (n - 1) ** 2 <= M + 2 * (n - 1) + 1
