from __future__ import annotations

from itertools import combinations
from math import prod

import pytest
from hypothesis import given

from conftest import radix_specs, tiny_specs
from hiernet import (
    EdgeKind,
    OrderCapError,
    RadixSpec,
    SpecError,
    binomial_spec,
    build_recursive,
    clique_of,
    copy_vertices,
    edges,
    is_adjacent,
    neighbors,
    parse_label,
    quotient,
    root_clique,
    size_closed_form,
    size_recursive,
    to_dot,
    to_edgelist,
)

S23 = RadixSpec((2, 3))
S234 = RadixSpec((2, 3, 4))
WIDE = RadixSpec((2, 3, 3, 3, 4, 4, 4))


class TestIsAdjacent:
    def test_zero_block_flip(self):
        x = parse_label("0000312", WIDE)
        y = parse_label("1111312", WIDE)
        assert is_adjacent(x, y) is EdgeKind.ZERO_BLOCK_FLIP

    def test_mismatched_tail_not_adjacent(self):
        x = parse_label("0000312", WIDE)
        y = parse_label("1111112", WIDE)
        assert is_adjacent(x, y) is None

    def test_root_clique(self):
        assert is_adjacent(parse_label("01", S23), parse_label("02", S23)) is EdgeKind.ROOT_CLIQUE

    def test_root_to_peripheral(self):
        b4 = binomial_spec(4)
        assert (
            is_adjacent(b4.root(), parse_label("1111", b4)) is EdgeKind.ZERO_BLOCK_FLIP
        )
        assert is_adjacent(S234.root(), parse_label("123", S234)) is EdgeKind.ZERO_BLOCK_FLIP

    def test_first_digit(self):
        assert is_adjacent(parse_label("021", S234), parse_label("121", S234)) is EdgeKind.FIRST_DIGIT

    def test_rejects_equal(self):
        with pytest.raises(ValueError):
            is_adjacent(S23.root(), S23.root())

    @pytest.mark.parametrize("radices", [(2, 3), (3, 3), (2, 2, 2), (2, 3, 4), (4, 4)])
    def test_matches_edge_enumeration(self, radices):
        spec = RadixSpec(radices)
        edge_pairs = edges(spec).pair_set()
        labs = list(spec.labels())
        for x, y in combinations(labs, 2):
            kind_xy = is_adjacent(x, y)
            assert kind_xy == is_adjacent(y, x)
            assert (kind_xy is not None) == ((x.digits, y.digits) in edge_pairs)


class TestNeighbors:
    def test_leaf(self):
        (nbr, kind), = neighbors(parse_label("10", S23))
        assert nbr == parse_label("00", S23) and kind is EdgeKind.FIRST_DIGIT

    def test_root_of_small_member(self):
        got = {(str(nbr), kind) for nbr, kind in neighbors(S23.root())}
        assert got == {
            ("10", EdgeKind.FIRST_DIGIT),
            ("11", EdgeKind.ZERO_BLOCK_FLIP),
            ("12", EdgeKind.ZERO_BLOCK_FLIP),
        }

    @pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
    def test_binomial_root_degree(self, k):
        assert len(neighbors(binomial_spec(k).root())) == k

    def test_closed_form_degree_and_handshake(self):
        for spec in tiny_specs():
            n = spec.radices
            total = 0
            for lab in spec.labels():
                zero_run = 0
                while zero_run < spec.k and lab.digits[zero_run] == 0:
                    zero_run += 1
                nonzero_run = 0
                while nonzero_run < spec.k and lab.digits[nonzero_run] != 0:
                    nonzero_run += 1
                expected = n[0] - 1
                expected += sum(prod(r - 1 for r in n[:ln]) for ln in range(2, zero_run + 1))
                expected += max(0, nonzero_run - 1)
                if 1 <= zero_run < spec.k:
                    expected += n[zero_run] - 2
                got = neighbors(lab)
                assert len(got) == expected
                assert len({nbr.digits for nbr, _ in got}) == len(got)
                total += len(got)
            assert total == 2 * size_closed_form(spec)[0]


class TestEdges:
    def test_known_totals(self):
        assert len(edges(S234)) == 33
        assert len(edges(RadixSpec((2, 2)))) == 3

    def test_per_kind_counts(self):
        counts = edges(S234).count_by_kind()
        assert counts[EdgeKind.FIRST_DIGIT] == 12
        assert counts[EdgeKind.ZERO_BLOCK_FLIP] == 14
        assert counts[EdgeKind.ROOT_CLIQUE] == 7

    def test_canonical_order(self):
        stream = edges(S234)
        keys = [(u.digits, v.digits) for u, v, _ in stream]
        assert keys == sorted(keys)
        assert all(u.digits < v.digits for u, v, _ in stream)
        assert len(set(keys)) == len(keys)

    def test_order_cap(self):
        with pytest.raises(OrderCapError):
            edges(RadixSpec((10,) * 8))


class TestSizeFormulas:
    def test_known_values(self):
        assert size_closed_form(S234) == (33, (12, 14, 7))
        assert size_closed_form(RadixSpec((3, 3))) == (14, (9, 4, 1))

    def test_binomial_members_are_trees(self):
        for k in range(1, 11):
            total, _ = size_closed_form(binomial_spec(k))
            assert total == 2**k - 1

    def test_recursion(self):
        assert size_recursive(S23) == 6
        assert size_recursive(S234) == 33
        assert size_recursive(RadixSpec((2,))) == 1

    def test_closed_form_above_cap(self):
        huge = RadixSpec((10,) * 10)
        total, terms = size_closed_form(huge)
        assert total == sum(terms) and total > huge.order_cap

    @given(radix_specs(max_k=6, max_radix=9))
    def test_closed_form_equals_recursion(self, spec):
        assert size_closed_form(spec)[0] == size_recursive(spec)

    def test_enumeration_matches(self):
        for spec in tiny_specs():
            stream = edges(spec)
            total, terms = size_closed_form(spec)
            assert len(stream) == total
            counts = stream.count_by_kind()
            assert terms == (
                counts[EdgeKind.FIRST_DIGIT],
                counts[EdgeKind.ZERO_BLOCK_FLIP],
                counts[EdgeKind.ROOT_CLIQUE],
            )


class TestBuildRecursive:
    def test_single_level(self):
        stream = build_recursive(RadixSpec((2,)))
        assert [(str(u), str(v)) for u, v, _ in stream] == [("0", "1")]

    @pytest.mark.parametrize("radices", [(2, 3), (2, 3, 4), (3, 3), (2, 2, 2, 2, 2)])
    def test_equals_rule_enumeration(self, radices):
        spec = RadixSpec(radices)
        assert build_recursive(spec).pair_set() == edges(spec).pair_set()

    def test_kinds_agree_too(self):
        for spec in tiny_specs():
            a = {(u.digits, v.digits, kind) for u, v, kind in build_recursive(spec)}
            b = {(u.digits, v.digits, kind) for u, v, kind in edges(spec)}
            assert a == b


class TestStructuralViews:
    def test_clique_of(self):
        got = clique_of(parse_label("021", S234))
        assert {str(lab) for lab in got} == {"021", "121"}
        assert parse_label("021", S234) in got

    def test_clique_is_mutually_adjacent(self):
        spec = RadixSpec((3, 3))
        cl = clique_of(parse_label("12", spec))
        assert {str(lab) for lab in cl} == {"02", "12", "22"}
        for a, b in combinations(cl, 2):
            assert is_adjacent(a, b) is EdgeKind.FIRST_DIGIT

    def test_copy_vertices_small(self):
        view = copy_vertices(S23, "1")
        assert {str(v) for v in view.vertices} == {"01", "11"}
        assert str(view.root) == "01"
        assert [str(p) for p in view.peripherals] == ["11"]

    def test_copy_full_suffix_is_single_vertex(self):
        view = copy_vertices(S234, "021")
        assert view.vertices == (parse_label("021", S234),)
        assert view.root == parse_label("021", S234)

    def test_copy_induced_subgraph_matches_prefix_member(self):
        view = copy_vertices(S234, "2")
        members = {v.digits for v in view.vertices}
        induced = {
            (u.digits[:2], v.digits[:2])
            for u, v, _ in edges(S234)
            if u.digits in members and v.digits in members
        }
        assert induced == edges(S23).pair_set()
        assert len(induced) == 6

    def test_root_clique_triangle(self):
        got = root_clique(S234, 3)
        assert {str(lab) for lab in got} == {"001", "002", "003"}
        for a, b in combinations(got, 2):
            assert is_adjacent(a, b) is EdgeKind.ROOT_CLIQUE

    def test_root_clique_pair_and_singleton(self):
        pair = root_clique(S23, 2)
        assert {str(lab) for lab in pair} == {"01", "02"}
        assert is_adjacent(pair[0], pair[1]) is EdgeKind.ROOT_CLIQUE
        single = root_clique(binomial_spec(3), 2, "0")
        assert [str(lab) for lab in single] == ["010"]

    def test_root_clique_validation(self):
        with pytest.raises(SpecError):
            root_clique(S234, 1)
        with pytest.raises(Exception):
            root_clique(S234, 3, "9")

    def test_quotient_drops_to_suffix_member(self):
        q = quotient(S234, 1)
        assert q.pair_set() == edges(RadixSpec((3, 4))).pair_set()

    def test_quotient_of_two_levels(self):
        q = quotient(S23, 1)
        assert q.pair_set() == edges(RadixSpec((3,))).pair_set()
        assert len(q) == 3  # complete graph on the last position

    def test_quotient_top_level_is_complete(self):
        q = quotient(S234, 2)
        assert q.pair_set() == edges(RadixSpec((4,))).pair_set()

    def test_quotient_validation(self):
        with pytest.raises(SpecError):
            quotient(S234, 3)


class TestExports:
    def test_edgelist_shape(self):
        text = to_edgelist(edges(S234))
        lines = text.splitlines()
        assert len(lines) == 33
        assert all("\t" in line for line in lines)
        assert text.endswith("\n")

    def test_dot_shape(self):
        text = to_dot(edges(RadixSpec((2,))))
        assert text == 'graph {\n  "0" -- "1";\n}\n'

    def test_deterministic(self):
        assert to_edgelist(edges(S234)) == to_edgelist(edges(S234))
        assert to_dot(edges(S234)) == to_dot(edges(S234))
