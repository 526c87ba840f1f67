import pytest

from wreath_growth import GeneratingSequence, HorizonError, PreconditionError


def test_finite_sequence_has_implicit_zeros(F2x):
    c = GeneratingSequence(F2x, {1: F2x.gen("x"), 4: F2x.parse("x^2")})
    assert c.is_finite
    assert c.entry(2) is None and c.entry(400) is None
    assert c.support() == [1, 4]


def test_rule_sequence_raises_past_horizon(seq_triangular):
    assert seq_triangular.entry(6) is not None
    assert seq_triangular.entry(7) is None
    with pytest.raises(HorizonError):
        seq_triangular.entry(401)


@pytest.mark.parametrize("entries", [{0: "x"}, {2: "0"}])
def test_bad_positions_or_zero_entries(F2x, entries):
    with pytest.raises(PreconditionError):
        GeneratingSequence(F2x, {m: F2x.parse(v) for m, v in entries.items()})


def test_gap_mode_is_checked(F2x):
    x = F2x.gen("x")
    with pytest.raises(PreconditionError):
        GeneratingSequence(F2x, positions=lambda k: 2 * k, elements=lambda k: x,
                           horizon=50, gap_mode=True)
