import pytest

from gol.errors import DomainError
from gol.groups import make_group
from gol.oracles import covering_index, schreier_rank, words_up_to
from gol.stallings import stallings_rank, subgroup_graph, subgroup_membership


def test_even_length_subgroup():
    F = make_group("free:2")
    rank, graph = stallings_rank(F, [F.parse(w) for w in ("a^2", "a b", "b^2")])
    assert rank == 3
    assert graph.is_folded()
    assert covering_index(graph, F.generators) == 2
    assert schreier_rank(2, 2) == 3


def test_membership_is_even_length():
    F = make_group("free:2")
    graph = subgroup_graph([F.parse(w) for w in ("a^2", "a b", "b^2")])
    for w in words_up_to(F.letters, 5):
        assert subgroup_membership(graph, w) == (len(w) % 2 == 0)


@pytest.mark.parametrize("gens, rank", [
    (["a"], 1), (["a", "b"], 2), (["a b a'", "a b' a'"], 1), (["a^2", "a^3"], 1),
    (["a b", "b a"], 2), (["a", "a b a'", "b"], 2),
])
def test_ranks(gens, rank):
    F = make_group("free:2")
    assert stallings_rank(F, [F.parse(w) for w in gens])[0] == rank


def test_needs_free_ambient():
    K = make_group("klein")
    with pytest.raises(DomainError):
        stallings_rank(K, [K.parse("x")])
