import math

import pytest

from brushgame.chips import ADVERSARIES, chip_bound, chips_play


def test_bound_values():
    assert chip_bound(2, 7) == 32
    assert chip_bound(1, 1000) == 52
    for k in (1, 2, 5):
        assert chip_bound(k, 1) == 2 * k


def test_bound_agrees_with_float_formula():
    for n in (1, 2, 3, 7, 10, 100, 999, 1000, 4096):
        expected = 2 * 3 * math.ceil(math.log(n, 4 / 3) + 1) if n > 1 else 6
        assert chip_bound(3, n) == expected


def test_single_pile_never_exceeds_k():
    result = chips_play(3, 1, "stack-one", 100_000, seed=0)
    assert result.history_max <= 3


def test_small_matrix_respects_bound():
    for adversary in ADVERSARIES:
        result = chips_play(2, 7, adversary, 10_000, seed=9)
        assert result.history_max <= 32


def test_determinism():
    a = chips_play(2, 5, "random", 2_000, seed=123)
    b = chips_play(2, 5, "random", 2_000, seed=123)
    assert a == b
    c = chips_play(2, 5, "random", 2_000, seed=124)
    assert a != c or a.history_max == c.history_max


def test_unknown_adversary_rejected():
    with pytest.raises(ValueError, match="unknown adversary"):
        chips_play(1, 1, "omniscient", 10)


def test_parameter_validation():
    with pytest.raises(ValueError):
        chip_bound(0, 5)
    with pytest.raises(ValueError):
        chips_play(1, 0, "spread", 10)


def test_zero_rounds_is_empty_game():
    result = chips_play(2, 3, "spread", 0)
    assert result.history_max == 0
    assert result.final_piles == (0, 0, 0)
