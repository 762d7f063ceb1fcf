import pytest

from surfdom.corpus import CorpusError, CorpusSpec, random_corpus, random_graph


def test_seeded_and_index_independent():
    spec = CorpusSpec(count=10, n_min=5, n_max=8, p=0.4, constraints=("connected",), seed=3)
    a, b = random_corpus(spec), random_corpus(spec)
    assert a == b
    bigger = random_corpus(CorpusSpec(count=20, n_min=5, n_max=8, p=0.4, constraints=("connected",), seed=3))
    assert bigger[:10] == a
    assert random_graph(spec, 7) == a[7]
    other = random_corpus(CorpusSpec(count=10, n_min=5, n_max=8, p=0.4, constraints=("connected",), seed=4))
    assert other != a


def test_constraints_respected():
    spec = CorpusSpec(count=15, n_min=6, n_max=9, p=0.35,
                      constraints=("connected", "triangle_free", "not_star"), min_degree=2, seed=1)
    for g in random_corpus(spec):
        assert g.is_connected() and not g.has_triangle() and not g.is_star()
        assert g.min_degree >= 2 and 6 <= g.n <= 9


def test_edge_count_mode():
    spec = CorpusSpec(count=10, n_min=6, n_max=6, m_min=7, m_max=9, seed=0)
    assert all(7 <= g.m <= 9 for g in random_corpus(spec))


def test_infeasible_edge_range():
    with pytest.raises(CorpusError):
        CorpusSpec(count=1, n_min=3, n_max=4, m_min=20, m_max=30)


def test_exhaustion_names_the_constraint():
    spec = CorpusSpec(count=1, n_min=8, n_max=8, p=0.9, constraints=("planar",), max_attempts=50)
    with pytest.raises(CorpusError, match="planar"):
        random_corpus(spec)


def test_bad_constraint():
    with pytest.raises((CorpusError, ValueError)):
        CorpusSpec(count=1, n_min=3, n_max=4, p=0.5, constraints=("bipartite",))
