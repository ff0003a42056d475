from __future__ import annotations

import pytest
from hypothesis import given

from conftest import spec_with_label, spec_with_pair, tiny_specs
from hiernet import (
    BlockKind,
    Label,
    LabelError,
    RadixSpec,
    SpecError,
    SpecMismatchError,
    alt,
    binomial_spec,
    blocks,
    classify,
    common_suffix_len,
    conjugate,
    format_label,
    format_spec,
    parse_label,
    parse_spec,
)

S234 = RadixSpec((2, 3, 4))
B5 = binomial_spec(5)


class TestRadixSpec:
    def test_order(self):
        assert S234.order() == 24
        assert RadixSpec((7,)).order() == 7

    def test_rejects_bad_radices(self):
        with pytest.raises(SpecError):
            RadixSpec(())
        with pytest.raises(SpecError):
            RadixSpec((2, 1))
        with pytest.raises(SpecError):
            parse_spec("2,x")

    def test_parse_format_roundtrip(self):
        assert format_spec(parse_spec("2,3,4")) == "2,3,4"

    def test_index_digits_inverse(self):
        for i, lab in enumerate(S234.labels()):
            assert S234.index_of(lab.digits) == i
            assert S234.digits_at(i) == lab.digits

    def test_labels_lexicographic(self):
        seq = [lab.digits for lab in S234.labels()]
        assert seq == sorted(seq)


class TestParseLabel:
    def test_comma_form(self):
        assert parse_label("0,2,1", S234).digits == (0, 2, 1)

    def test_compact_form(self):
        assert parse_label("021", S234).digits == (0, 2, 1)

    def test_digit_out_of_range(self):
        with pytest.raises(LabelError):
            parse_label("0,3,1", S234)

    def test_length_mismatch(self):
        with pytest.raises(LabelError):
            parse_label("0,1", S234)

    def test_compact_needs_small_radices(self):
        wide = RadixSpec((2, 12))
        with pytest.raises(LabelError):
            parse_label("01", wide)
        assert parse_label("0,11", wide).digits == (0, 11)

    def test_single_position_bare_number(self):
        assert parse_label("11", RadixSpec((12,))).digits == (11,)

    @given(spec_with_label())
    def test_roundtrip_both_forms(self, sl):
        spec, lab = sl
        assert parse_label(format_label(lab, "comma"), spec) == lab
        if spec.compact_ok:
            assert parse_label(format_label(lab, "compact"), spec) == lab


class TestAlt:
    @pytest.mark.parametrize(
        "text,spec,expected",
        [
            ("01010", B5, 4),
            ("10101", B5, 5),
            ("00000", B5, 0),
            ("0210312", RadixSpec((2, 3, 3, 3, 4, 4, 4)), 4),
            ("1221023", RadixSpec((2, 3, 3, 3, 4, 4, 4)), 3),
        ],
    )
    def test_known_values(self, text, spec, expected):
        assert alt(parse_label(text, spec)) == expected

    def test_bounds_and_root(self):
        for spec in tiny_specs():
            for lab in spec.labels():
                a = alt(lab)
                assert 0 <= a <= spec.k
                assert (a == 0) == (lab == spec.root())


class TestBlocks:
    def test_mixed_label(self):
        view = blocks(parse_label("0210312", RadixSpec((2, 3, 3, 3, 4, 4, 4))))
        kinds = [(b.kind, b.length) for b in view]
        assert kinds == [
            (BlockKind.ZERO, 1),
            (BlockKind.NONZERO, 2),
            (BlockKind.ZERO, 1),
            (BlockKind.NONZERO, 3),
        ]

    def test_alternating_label(self):
        view = blocks(parse_label("10101", B5))
        assert len(view) == 5
        assert [b.kind for b in view][0] is BlockKind.NONZERO

    def test_all_zero(self):
        view = blocks(B5.root())
        assert len(view) == 1 and view.blocks[0].kind is BlockKind.ZERO

    def test_structure_and_alt_identity(self):
        # runs cover the label, alternate, and determine the alternating number
        for spec in tiny_specs():
            for lab in spec.labels():
                view = blocks(lab)
                assert view.blocks[0].start == 1
                assert sum(b.length for b in view) == spec.k
                pos = 1
                for prev, cur in zip(view.blocks, view.blocks[1:]):
                    assert cur.kind is not prev.kind
                for b in view:
                    assert b.start == pos
                    for d in lab.digits[b.start - 1 : b.start - 1 + b.length]:
                        assert (d != 0) == (b.kind is BlockKind.NONZERO)
                    pos += b.length
                expected = len(view) - (view.blocks[-1].kind is BlockKind.ZERO)
                if lab == spec.root():
                    expected = 0
                assert alt(lab) == expected


class TestCommonSuffix:
    def test_no_common_suffix(self):
        spec = RadixSpec((2, 2, 3, 4, 2, 4))
        x = parse_label("102302", spec)
        y = parse_label("101013", spec)
        assert common_suffix_len(x, y) == 0

    def test_equal_labels(self):
        x = parse_label("021", S234)
        assert common_suffix_len(x, x) == 3

    def test_partial(self):
        assert common_suffix_len(parse_label("021", S234), parse_label("011", S234)) == 1

    def test_spec_mismatch(self):
        with pytest.raises(SpecMismatchError):
            common_suffix_len(S234.root(), B5.root())

    @given(spec_with_pair())
    def test_symmetric_and_equality(self, sp):
        spec, x, y = sp
        assert common_suffix_len(x, y) == common_suffix_len(y, x)
        assert (common_suffix_len(x, y) == spec.k) == (x == y)


class TestConjugate:
    def test_binary_complement(self):
        b3 = binomial_spec(3)
        assert conjugate(parse_label("011", b3)) == parse_label("100", b3)

    def test_involution_on_binary(self):
        b4 = binomial_spec(4)
        for lab in b4.labels():
            assert conjugate(conjugate(lab)) == lab
        assert conjugate(b4.root()).digits == (1, 1, 1, 1)

    def test_filler_on_general(self):
        assert conjugate(parse_label("021", S234)) == parse_label("100", S234)


class TestClassify:
    def test_root(self):
        c = classify(parse_label("000", S234))
        assert c.is_root and c.is_uniform and not c.is_peripheral
        assert c.first_nonzero_position is None

    def test_peripheral(self):
        c = classify(parse_label("123", S234))
        assert c.is_peripheral and c.is_uniform and not c.is_root
        assert c.first_nonzero_position == 1

    def test_mixed(self):
        c = classify(parse_label("010", RadixSpec((2, 2, 2))))
        assert not c.is_root and not c.is_peripheral and not c.is_uniform
        assert c.first_nonzero_position == 2


class TestBinomialSpec:
    def test_values(self):
        assert binomial_spec(3).radices == (2, 2, 2)
        assert binomial_spec(3).order() == 8
        assert binomial_spec(1).radices == (2,)
        assert binomial_spec(5) == B5

    def test_rejects_nonpositive(self):
        with pytest.raises(SpecError):
            binomial_spec(0)


def test_labels_interoperate_across_equal_specs():
    other = RadixSpec((2, 3, 4), order_cap=100)
    assert common_suffix_len(S234.label((0, 2, 1)), other.label((0, 2, 1))) == 3


def test_label_validation():
    with pytest.raises(LabelError):
        Label((0, 3, 1), S234)
    with pytest.raises(LabelError):
        Label((0, 1), S234)
