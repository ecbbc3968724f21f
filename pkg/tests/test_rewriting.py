import random

import pytest

from gol.errors import BudgetExceeded
from gol.rewriting import (LEN_PLUS_J, LENGTH, RewriteSystem, Rule, check_local_confluence,
                           check_termination, critical_pairs, crossing_count, normalize,
                           random_word, rewriting_system_G)
from gol.groups import klein_system
from gol.properties import STRATEGIES, strategy_disagreements
from gol.words import Window, Word, gen, parse_word as P


@pytest.fixture(scope="module")
def sys13():
    return rewriting_system_G(Window(1, 3))


def test_rule_count(sys13):
    # 2 families x 7 positions; 6 atoms per family have a successor
    assert len(sys13) == 2 * 7 * 4 + 2 * 6 * 4


def test_rule_shapes(sys13):
    rules = {r.tag: r for r in sys13.rules_for(P("x[0,1] y[0,0]"))}
    assert rules["v"].rhs == P("y[0,1]' x[0,1]")
    assert sys13.rules_for(P("x[0,1]' y[0,1]'"))[0].rhs == P("y[0,0] x[0,1]'")


def test_boundary_atoms_only_cancel(sys13):
    assert not sys13.rules_for(P("x[0,4] y[0,3]"))
    assert sys13.rules_for(P("x[0,3] x[0,3]'"))


@pytest.mark.parametrize("text, nf", [
    ("x[0,1] y[0,0] x[0,1]'", "y[0,1]'"),
    ("x[0,1]' x[0,1] y[0,0]", "y[0,0]"),
    ("x[0,1] y[0,0]' y[0,0]", "x[0,1]"),
    ("y[0,0] x[0,0]", "y[0,0] x[0,0]"),
    ("x[0,2] x[0,1] y[0,0]", "y[0,2] x[0,2] x[0,1]"),
])
def test_normal_forms(sys13, text, nf):
    assert normalize(sys13, P(text)) == P(nf)


@pytest.mark.parametrize("strategy, seed", STRATEGIES)
def test_every_strategy_reaches_the_terminus(sys13, strategy, seed):
    assert normalize(sys13, P("x[0,2] x[0,1] y[0,0] x[0,1]'"), strategy, seed) == P("y[0,2] x[0,2]")


def test_measure_examples():
    assert LEN_PLUS_J(P("x[0,1] y[0,0]")) == 3
    assert LEN_PLUS_J(P("y[0,1]' x[0,1]")) == 2
    assert crossing_count(P("x[0,0] x[0,1] y[0,0] y[0,1]")) == 4
    assert LENGTH(P("x[0,0]")) == 1


def test_confluence_passes(sys13):
    report = check_local_confluence(sys13)
    assert report.joinable
    assert report.format().splitlines()[0] == "status: PASS"


def test_confluence_failure_is_reported():
    a, b, c = gen("a"), gen("b"), gen("c")
    sys = RewriteSystem([Rule((a, b), (c,), "r1"), Rule((b, a), (a,), "r2")])
    report = check_local_confluence(sys)
    assert not report.joinable
    text = report.format()
    assert "status: FAIL" in text and "rules=" in text and "peak=" in text


def test_critical_pairs_include_inclusion_overlaps():
    a, b = gen("a"), gen("b")
    sys = RewriteSystem([Rule((a, b, a), (b,), "long"), Rule((b,), (a,), "short")])
    kinds = {(cp.rules, cp.overlap) for cp in critical_pairs(sys)}
    assert (("long", "short"), 1) in kinds


def test_termination_sampler(sys13):
    report = check_termination(sys13, samples=500, max_len=20, seed=3)
    assert report.ok and report.steps > 0


def test_termination_sampler_catches_bad_measure(sys13):
    report = check_termination(sys13, m=LENGTH, samples=200, max_len=20, seed=1)
    # rules (v)-(viii) keep length fixed
    assert not report.ok


def test_budget_exceeded():
    a = gen("a")
    loop = RewriteSystem([Rule((a,), (a,), "loop")])
    with pytest.raises(BudgetExceeded):
        normalize(loop, Word((a,)), budget=50)
    with pytest.raises(BudgetExceeded):
        normalize(loop, Word((a,)), "rightmost", budget=50)


def test_klein_system_is_confluent_and_strategy_free():
    sys = klein_system()
    assert check_local_confluence(sys).joinable
    rng = random.Random(0)
    words = [random_word(rng, sys.alphabet, 12) for _ in range(200)]
    assert strategy_disagreements(sys, words) == []
