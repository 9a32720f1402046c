from collections import Counter

import pytest

from jointfix.rng import SplitMix64


def test_reference_outputs():
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(2)] == [6457827717110365317, 3203168211198807973]


def test_same_seed_same_stream():
    a, b = SplitMix64(99), SplitMix64(99)
    assert [a.below(10) for _ in range(50)] == [b.below(10) for _ in range(50)]


def test_below_range_and_spread():
    r = SplitMix64(5)
    counts = Counter(r.below(6) for _ in range(6000))
    assert set(counts) == set(range(6))
    assert min(counts.values()) > 850


def test_below_rejects_non_positive():
    with pytest.raises(ValueError):
        SplitMix64(0).below(0)


def test_random_unit_interval():
    r = SplitMix64(8)
    xs = [r.random() for _ in range(1000)]
    assert all(0.0 <= x < 1.0 for x in xs)


def test_shuffle_is_permutation():
    items = list(range(20))
    SplitMix64(1).shuffle(items)
    assert sorted(items) == list(range(20)) and items != list(range(20))
