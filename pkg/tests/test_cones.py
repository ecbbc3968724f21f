import pytest

from gol.cones import (build_clauses, replay_tau_obstruction, search_signing, symmetric_closure,
                       verify_certificate)
from gol.errors import DomainError, WindowError
from gol.groups import make_group
from gol.oracles import brute_force_signable
from gol.orders import ball


@pytest.fixture(scope="module")
def K():
    return make_group("klein")


def test_klein_conjugate_pair_is_obstructed(K):
    res = search_signing(K, [K.element("y"), K.element("x y x'")], "bi")
    assert not res.found
    assert verify_certificate(res.certificate)
    text = res.format()
    assert text.startswith("OBSTRUCTION")
    assert "contradiction" in text


def test_klein_left_signing(K):
    S = ball(K, 2)[1:]
    res = search_signing(K, S, "left")
    assert res.found
    assert res.signing.violations(build_clauses(K, res.signing.domain, "left")) == []
    for g in res.signing.domain:
        assert (g in res.signing.positive) != (g.inverse() in res.signing.positive)


def test_klein_bi_ball_obstruction_is_small(K):
    res = search_signing(K, ball(K, 2)[1:], "bi")
    assert not res.found
    cert = res.certificate
    assert verify_certificate(cert)
    assert len(cert.domain) <= 4
    assert not brute_force_signable(K, cert.domain, "bi")


def test_tampered_certificate_fails(K):
    res = search_signing(K, ball(K, 2)[1:], "bi")
    cert = res.certificate
    step = cert.root.steps[0]
    step.refs = step.refs + (99,)
    cert.root.steps[-1].refs = (1, 1)
    assert not verify_certificate(cert)


def test_signing_output_format(K):
    res = search_signing(K, [K.element("x")], "left")
    lines = res.format().splitlines()
    assert sorted(lines) in (["+ x", "- x'"], ["+ x'", "- x"])


def test_identity_cannot_be_signed(K):
    with pytest.raises(ValueError):
        symmetric_closure(K, [K.identity()])


def test_cap(K):
    with pytest.raises(DomainError):
        search_signing(K, ball(K, 3)[1:], "left", cap=10)


@pytest.mark.parametrize("spec, radius, mode", [
    ("free:2", 2, "bi"), ("freeab:2", 2, "bi"), ("klein", 2, "left"), ("klein", 1, "bi"),
    ("klein", 2, "bi"),
])
def test_search_agrees_with_enumeration(spec, radius, mode):
    G = make_group(spec)
    S = ball(G, radius)[1:]
    if len(S) // 2 > 12:
        S = S[:24]
    res = search_signing(G, S, mode, shrink=False)
    assert res.found == brute_force_signable(G, symmetric_closure(G, S), mode)


def test_g_window_small_ball_signs():
    G = make_group("G[1,6]")
    gens = [G.parse(w)[0] for w in ("x[0,1]", "y[0,0]", "y[0,1]")]
    res = search_signing(G, ball(G, 2, gens)[1:], "bi")
    assert res.found


@pytest.mark.parametrize("premise", [1, -1])
def test_tau_trace_on_g(premise):
    trace = replay_tau_obstruction(make_group("G[1,6]"), 0, premise)
    assert len(trace.steps) == 3
    assert trace.conclusion == "CONTRADICTION"
    assert trace.replay()
    text = trace.format()
    assert "x[0,1] y[0,0] x[0,1]' = y[0,1]'" in text


def test_tau_trace_on_a():
    trace = replay_tau_obstruction(make_group("A[1,6]"), 0)
    assert trace.replay() and len(trace.steps) == 3
    assert "a[0,1]^2 = a[0,0]'" in trace.format()


def test_tau_trace_needs_room():
    with pytest.raises(WindowError):
        replay_tau_obstruction(make_group("G[0,1]"), 3)
    with pytest.raises(DomainError):
        replay_tau_obstruction(make_group("free:2"), 0)


def test_torsion_needs_case_split():
    from gol.groups import MarkedGroup
    from gol.words import Word, gen

    t = gen("a")
    C5 = MarkedGroup("C5", (t,), lambda w: Word([t] * (sum(l.exponent for l in w) % 5)))
    S = [C5.element(Word([t] * k)) for k in range(1, 5)]
    res = search_signing(C5, S, "left")
    assert not res.found
    assert len(res.certificate.root.children) == 2
    assert verify_certificate(res.certificate)
    assert not brute_force_signable(C5, S, "left")
