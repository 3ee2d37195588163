import threading
from fractions import Fraction

import pytest

from oracles import frobenius_character, hook_dimension
from toeplitz_minors.characters import CharacterCache, character
from toeplitz_minors.exceptions import PreconditionError
from toeplitz_minors.partitions import Partition, partitions_of, z_value


@pytest.mark.parametrize("n", range(1, 7))
def test_trivial_representation(n):
    for alpha in partitions_of(n):
        assert character(Partition([n]), alpha) == 1


def test_sign_representation_of_s2():
    # S_2 character table, rows (2), (1,1); columns (1,1), (2)
    assert character(Partition([1, 1]), Partition([1, 1])) == 1
    assert character(Partition([1, 1]), Partition([2])) == -1


def test_dimension_of_21():
    assert character(Partition([2, 1]), Partition([1, 1, 1])) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_frobenius_formula(n):
    for lam in partitions_of(n):
        for alpha in partitions_of(n):
            assert character(lam, alpha) == frobenius_character(lam, alpha), (lam, alpha)


@pytest.mark.parametrize("n", range(1, 8))
def test_dimensions_match_hook_length_formula(n):
    ones = Partition([1] * n)
    for lam in partitions_of(n):
        dim = character(lam, ones)
        assert dim > 0
        assert dim == hook_dimension(lam)


@pytest.mark.parametrize("n", range(0, 7))
def test_row_orthogonality(n):
    ps = partitions_of(n)
    for lam in ps:
        for mu in ps:
            s = sum(Fraction(character(lam, a) * character(mu, a), z_value(a)) for a in ps)
            assert s == (1 if lam == mu else 0)


@pytest.mark.parametrize("n", range(0, 7))
def test_column_orthogonality(n):
    ps = partitions_of(n)
    for a in ps:
        for b in ps:
            s = sum(character(lam, a) * character(lam, b) for lam in ps)
            assert s == (z_value(a) if a == b else 0)


def test_weight_mismatch_raises():
    with pytest.raises(PreconditionError):
        character(Partition([2]), Partition([1]))


def test_cache_entries_have_equal_weights_and_match_recomputation():
    cache = CharacterCache()
    for lam in partitions_of(6):
        for alpha in partitions_of(6):
            cache(lam, alpha)
    fresh = CharacterCache()
    for (lam, alpha), value in cache.items():
        assert lam.weight == alpha.weight
        assert fresh(lam, alpha) == value


def test_cache_shared_across_threads():
    cache = CharacterCache()
    pairs = [(lam, a) for lam in partitions_of(7) for a in partitions_of(7)]
    results = [None] * 4

    def work(slot):
        results[slot] = [cache(lam, a) for lam, a in pairs]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    reference = [CharacterCache()(lam, a) for lam, a in pairs]
    assert all(r == reference for r in results)
