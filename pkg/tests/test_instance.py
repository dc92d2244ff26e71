import pytest

from greedycover.generate import GenSpec, generate_instance
from greedycover.instance import (
    BadChar,
    BadHeader,
    BadRowLength,
    Instance,
    InstanceError,
    ZeroColumn,
    column_counts,
    density,
    parse_instance,
    write_instance,
)

from conftest import IDENTITY3, THREE_BY_SIX


def test_column_counts_identity(identity3):
    assert column_counts(identity3) == [1, 1, 1]


def test_column_counts_all_ones():
    inst = Instance.from_bits([[1, 1], [1, 1]])
    assert column_counts(inst) == [2, 2]


def test_column_counts_three_by_six(three_by_six):
    assert column_counts(three_by_six) == [2, 2, 2, 2, 1, 1]


def test_density_identity(identity3):
    d = density(identity3)
    assert d.c_effective == 1
    assert d.gamma_effective == pytest.approx(1 / 3)
    assert d.gamma_nominal == d.gamma_effective


def test_density_all_ones():
    inst = Instance.from_bits([[1, 1], [1, 1]])
    assert density(inst).gamma_effective == 1.0


def test_density_three_by_six(three_by_six):
    d = density(three_by_six)
    assert d.c_effective == 1
    assert d.gamma_effective == pytest.approx(1 / 3)


def test_density_consistency_on_generated():
    # c_effective is the column-count minimum: never above any column,
    # attained by at least one
    for seed in range(10):
        spec = GenSpec(m=9, n=30, gamma=0.4, model="bernoulli-repair", seed=seed, p=0.3)
        inst = generate_instance(spec)
        counts = column_counts(inst)
        c = density(inst).c_effective
        assert all(x >= c for x in counts)
        assert c in counts


def test_parse_basic():
    inst = parse_instance("2 2\n10\n01\n")
    assert (inst.m, inst.n) == (2, 2)
    assert inst.rows == (0b01, 0b10)


def test_parse_accepts_crlf_and_missing_trailing_newline():
    assert parse_instance("2 2\r\n10\r\n01\r\n") == parse_instance("2 2\n10\n01")


def test_roundtrip_parse_write(identity3, three_by_six):
    for inst in (identity3, three_by_six):
        assert parse_instance(write_instance(inst)) == inst
    for text in (IDENTITY3, THREE_BY_SIX):
        assert write_instance(parse_instance(text)) == text


@pytest.mark.parametrize(
    "text",
    ["", "\n10\n01\n", "2\n10\n01\n", "a 2\n10\n01\n", "2 2 2\n10\n01\n", "0 2\n\n"],
)
def test_bad_header(text):
    with pytest.raises(BadHeader) as ei:
        parse_instance(text)
    assert ei.value.line == 1


def test_bad_row_length_names_line():
    with pytest.raises(BadRowLength) as ei:
        parse_instance("2 2\n10\n011\n")
    assert ei.value.line == 3


def test_missing_rows():
    with pytest.raises(BadRowLength) as ei:
        parse_instance("3 2\n10\n01\n")
    assert ei.value.line == 4


def test_extra_content_rejected():
    with pytest.raises(BadRowLength) as ei:
        parse_instance("2 2\n10\n01\n11\n")
    assert ei.value.line == 4


def test_bad_char_names_line():
    with pytest.raises(BadChar) as ei:
        parse_instance("2 2\n10\n0x\n")
    assert ei.value.line == 3


def test_zero_column_names_column():
    with pytest.raises(ZeroColumn) as ei:
        parse_instance("2 2\n10\n00\n")
    assert ei.value.column == 2
    assert "column 2" in str(ei.value)


def test_constructor_rejects_bad_shapes():
    with pytest.raises(InstanceError):
        Instance(0, 1, ())
    with pytest.raises(InstanceError):
        Instance(2, 2, (0b11,))
    with pytest.raises(InstanceError):
        Instance(1, 2, (0b111,))  # bit outside the 2 columns
    with pytest.raises(ZeroColumn):
        Instance(2, 2, (0b01, 0b01))


def test_instance_is_immutable(identity3):
    with pytest.raises(AttributeError):
        identity3.m = 5
