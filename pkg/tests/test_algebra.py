from itertools import permutations

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from errors import DomainError, PreconditionError, SizeLimitError
from algebra.gf2 import GF2Vec, hamming_distance, rank, vector_sum, zero_sum_subsets
from algebra.sticks import StickSequence, stick_sequence_search, stick_sequence_valid


def _vecs(values, dimension):
    return [GF2Vec(v, dimension) for v in values]


def _brute_force_sat(d: int) -> bool:
    """Every ordered choice of d distinct nonzero vectors of GF(2)^d."""
    for seq in permutations(range(1, 1 << d), d):
        members, total, ok = set(seq), 0, True
        for w in seq:
            total ^= w
            if total not in members:
                ok = False
                break
        if ok:
            return True
    return False


def test_gf2_arithmetic():
    a, b = GF2Vec(0b101, 3), GF2Vec(0b011, 3)
    assert (a + b).bits == 0b110
    assert a - b == a + b
    assert hamming_distance(a, b) == 2
    assert GF2Vec.ones(3).weight() == 3
    assert GF2Vec.basis(2, 3).bits == 4
    assert vector_sum(_vecs([1, 2, 4, 7], 3), 3).is_zero()
    assert str(GF2Vec(1, 3)) == "001"
    with pytest.raises(DomainError):
        GF2Vec(8, 3)
    with pytest.raises(DomainError):
        GF2Vec(1, 2) + GF2Vec(1, 3)


def test_rank():
    assert rank([1, 2, 3]) == 2
    assert rank([1, 2, 4, 7]) == 3
    assert rank([]) == 0


def test_zero_sum_subsets_examples():
    d_colors = _vecs([1, 2, 4, 7], 3)
    assert zero_sum_subsets(d_colors, 4) == [tuple(d_colors)]
    assert zero_sum_subsets(d_colors, 3) == []
    assert zero_sum_subsets(_vecs([1, 2], 2), 2) == []
    assert zero_sum_subsets(_vecs([1, 2, 3], 2), 3) == [tuple(_vecs([1, 2, 3], 2))]


def test_zero_sum_subsets_preconditions():
    with pytest.raises(PreconditionError):
        zero_sum_subsets(_vecs([1, 1], 2), 2)
    with pytest.raises(PreconditionError):
        zero_sum_subsets(_vecs([0, 1], 2), 2)


@hyp_settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(1, 31), min_size=1, max_size=8))
def test_zero_sum_subsets_sum_to_zero(values):
    for subset in zero_sum_subsets(_vecs(sorted(values), 5), 4):
        assert vector_sum(subset, 5).is_zero()
        assert 1 <= len(subset) <= 4


def test_stick_sequence_valid_examples():
    assert stick_sequence_valid(StickSequence.from_ints([5]))
    for a in range(1, 8):
        for b in range(1, 8):
            if a != b:
                assert not stick_sequence_valid(StickSequence.from_ints([a, b], 3))
    with pytest.raises(PreconditionError):
        stick_sequence_valid(StickSequence.from_ints([1, 1], 2))
    with pytest.raises(PreconditionError):
        stick_sequence_valid(StickSequence.from_ints([0, 1], 2))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_stick_search_matches_brute_force(d):
    result = stick_sequence_search(d)
    assert (result.status == "sat") == _brute_force_sat(d)


@pytest.mark.parametrize("d", range(2, 9))
def test_stick_search_unsat_below_nine(d):
    result = stick_sequence_search(d)
    assert result.status == "unsat"
    assert result.witness is None
    assert result.to_json()["witness"] == []


@pytest.mark.slow
def test_stick_search_nine_is_unsat():
    assert stick_sequence_search(9).status == "unsat"


@pytest.mark.slow
def test_stick_search_ten_has_a_valid_witness():
    result = stick_sequence_search(10)
    assert result.status == "sat"
    assert result.witness.d == 10
    assert stick_sequence_valid(result.witness)
    assert len(set(result.witness.as_ints())) == 10


def test_stick_search_range():
    with pytest.raises(DomainError):
        stick_sequence_search(0)
    with pytest.raises(SizeLimitError):
        stick_sequence_search(13)


@pytest.mark.parametrize("d", [5, 7])
def test_stick_search_is_thread_independent(d):
    single = stick_sequence_search(d, find_all=True)
    pooled = stick_sequence_search(d, find_all=True, threads=2)
    assert single.to_json() == pooled.to_json()


def test_single_vector_sequences_are_all_found():
    result = stick_sequence_search(1, find_all=True)
    assert result.status == "sat"
    assert [w.as_ints() for w in result.witnesses] == [[1]]
