from math import comb

import numpy as np
import pytest

from coset_atlas import gf, oracle
from coset_atlas.code import CosetClass, all_class_distributions, build_code, code_distribution, CodeParameters
from coset_atlas.errors import RankDeficient, ScopeExceeded, WeightTooLarge

V = CosetClass


def setup(q):
    F = gf.field_of_order(q)
    return F, np.array(build_code(F).H)


def class_syndrome(q, cls):
    return oracle.decode_syndrome(q, build_code(gf.field_of_order(q)).classify_all().index(cls))


def test_syndrome_codec():
    for code in (0, 1, 77, 624):
        assert oracle.encode_syndrome(5, oracle.decode_syndrome(5, code)) == code
    assert oracle.encode_syndrome(7, (1, 0, 0, 0)) == 343


def test_support_enumeration_order():
    assert oracle.colex_supports(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    enum = oracle.SupportEnumeration(4, 2, 3)
    items = list(enum)
    assert len(items) == len(enum) == 6 * 4
    assert items[:2] == [((0, 1), (1, 1)), ((0, 1), (1, 2))]
    assert all(sum(1 for x in v if x) == 2 for v in enum.vectors())


@pytest.mark.parametrize("q", (5, 7, 8))
def test_histogram_totals(q):
    F, H = setup(q)
    for w in range(0, 5 if q == 5 else 4):
        assert oracle.histogram_weight_w(F, H, w).sum() == comb(q + 1, w) * (q - 1) ** w
    with pytest.raises(WeightTooLarge):
        oracle.histogram_weight_w(F, H, 5)


def test_histogram_examples():
    F, H = setup(5)
    tally = oracle.histogram_weight_w(F, H, 3)
    assert tally[oracle.encode_syndrome(5, class_syndrome(5, V.W3C))] == 4
    F, H = setup(9)
    tally = oracle.histogram_weight_w(F, H, 3)
    assert tally[oracle.encode_syndrome(9, class_syndrome(9, V.W2))] == 7


def test_histogram_independent_of_jobs():
    F, H = setup(7)
    assert np.array_equal(oracle.histogram_weight_w(F, H, 3, jobs=1), oracle.histogram_weight_w(F, H, 3, jobs=2))


def test_derive_generator():
    F, H = setup(5)
    G = oracle.derive_generator(F, H)
    assert G.shape == (2, 6)
    assert not F.matmul(G, H.T).any()
    F7, H7 = setup(7)
    G7 = oracle.derive_generator(F7, H7)
    assert G7.shape == (4, 8) and gf.rank(F7, G7) == 4
    with pytest.raises(RankDeficient):
        oracle.derive_generator(F, np.vstack([H[:3], H[:1]]))


def test_brute_examples():
    F, H = setup(5)
    assert oracle.brute_coset_distribution(F, H, np.zeros(6, dtype=int)) == code_distribution(CodeParameters(5)).counts
    rep = oracle.find_representative(F, H, class_syndrome(5, V.W2))
    assert oracle.brute_coset_distribution(F, H, rep) == (0, 0, 1, 1, 6, 11, 6)
    F8, H8 = setup(8)
    rep = oracle.find_representative(F8, H8, class_syndrome(8, V.W3A))
    got = oracle.brute_coset_distribution(F8, H8, rep, jobs=2)
    assert (got[4], got[5]) == (84, 483)
    assert got == oracle.brute_coset_distribution(F8, H8, rep, jobs=1)


def test_brute_scope_guard():
    F, H = setup(11)
    with pytest.raises(ScopeExceeded):
        oracle.brute_coset_distribution(F, H, np.zeros(12, dtype=int))


def test_find_representative_examples():
    F, H = setup(5)
    assert not oracle.find_representative(F, H, (0, 0, 0, 0)).any()
    s = tuple(F.mul(2, int(x)) for x in H[:, 3])
    x = oracle.find_representative(F, H, s)
    assert list(x) == [0, 0, 0, 2, 0, 0]
    F7, H7 = setup(7)
    x = oracle.find_representative(F7, H7, class_syndrome(7, V.W3B))
    assert np.count_nonzero(x) == 3
    assert tuple(int(v) for v in F7.matmul(H7, x[:, None])[:, 0]) == class_syndrome(7, V.W3B)


@pytest.mark.parametrize("q", (5, 7))
def test_oracle_matches_closed_forms(q):
    F, H = setup(q)
    dists = all_class_distributions(q)
    for cls, dist in dists.items():
        rep = oracle.find_representative(F, H, class_syndrome(q, cls))
        assert np.count_nonzero(rep) == cls.leader_weight
        assert oracle.brute_coset_distribution(F, H, rep) == dist.counts
