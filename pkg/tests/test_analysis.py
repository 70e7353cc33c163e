from fractions import Fraction
from math import comb

import pytest

import reference as ref
from unionclosure.analysis import (
    a_table,
    a_value,
    all_union_closed,
    closure_tree,
    count_union_closed,
    density_census,
    enumerate_union_closed,
    frankl_check,
    g_monotonicity_probe,
    g_value,
    node_id,
)
from unionclosure.closure import closure, density, s_param
from unionclosure.constructions import chain_family, cube_plus_universe
from unionclosure.errors import NoFamilyWithDensity, UniverseTooLarge
from unionclosure.relative import has_closure_root
from unionclosure.setcore import (
    SetFamily,
    family_from_sets,
    is_up_set,
    popcount,
    power_set_family,
)

# frozen after the first exhaustive run; re-derived by the filter oracle below
F_COUNTS = {1: 1, 2: 4, 3: 45, 4: 2271}


class TestFrankl:
    def test_chain(self):
        r = frankl_check(chain_family(3))
        assert (r.element, r.count, r.satisfied) == (1, 3, True)

    def test_power_set(self):
        r = frankl_check(power_set_family(3))
        assert r.count == 4 and r.size == 7 and r.satisfied

    @pytest.mark.parametrize("n", range(1, 5))
    def test_every_small_family(self, n):
        for F in all_union_closed(n):
            assert frankl_check(F).satisfied

    def test_floor_versus_strict(self):
        G = SetFamily(5, (0b00011, 0b01100, 0b01111, 0b10000, 0b10011, 0b11100, 0b11111))
        r = frankl_check(G)
        assert (r.count, r.size) == (4, 7)
        assert r.satisfied and frankl_check(G, strict=True).satisfied
        # not union-closed, only exercises the threshold: 2 >= floor(5/2) but 4 < 5
        H = SetFamily(4, (0b0001, 0b0010, 0b0100, 0b1000, 0b1111))
        assert frankl_check(H).satisfied and not frankl_check(H, strict=True).satisfied


class TestG:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_chain(self, n):
        assert g_value(chain_family(n)) == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_power_set(self, n):
        assert g_value(power_set_family(n)) == Fraction(2 ** (n - 1), 2 ** n - 1)

    def test_probe_cube(self):
        p = g_monotonicity_probe(cube_plus_universe(6))
        assert p.g_family < p.g_closure and not p.decreased
        assert (p.g_family, p.g_closure) == (Fraction(9, 16), Fraction(7, 11))

    def test_probe_chain(self):
        p = g_monotonicity_probe(chain_family(3))
        assert p.g_family == 1 and p.g_closure == g_value(closure(chain_family(3)))

    @pytest.mark.parametrize("n", range(2, 5))
    def test_probe_up_sets(self, n):
        for F in all_union_closed(n):
            if is_up_set(F) and not F.is_power_set():
                assert g_monotonicity_probe(F).g_closure == Fraction(2 ** (n - 1), 2 ** n - 1)

    def test_probe_power_set(self):
        with pytest.raises(ValueError):
            g_monotonicity_probe(power_set_family(2))


class TestEnumeration:
    def test_one(self):
        assert [F.members for F in enumerate_union_closed(1)] == [(1,)]

    def test_two(self):
        got = {F.members for F in enumerate_union_closed(2)}
        assert got == {(3,), (1, 3), (2, 3), (1, 2, 3)}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_filter_oracle(self, n):
        expected = set(ref.union_closed_families(n))
        got = [frozenset(F.members) for F in enumerate_union_closed(n)]
        assert len(got) == len(set(got)) == len(expected) == F_COUNTS[n]
        assert set(got) == expected

    def test_count(self):
        assert {n: count_union_closed(n) for n in range(1, 5)} == F_COUNTS

    def test_deterministic(self):
        assert list(enumerate_union_closed(3)) == list(enumerate_union_closed(3))

    def test_limits(self):
        with pytest.raises(UniverseTooLarge):
            list(enumerate_union_closed(5))
        with pytest.raises(UniverseTooLarge):
            list(enumerate_union_closed(0))


class TestCensus:
    def test_two(self):
        assert density_census(2).labelled_counts == {0: 1, 1: 3}

    @pytest.mark.parametrize("n", [3, 4])
    def test_lower_bound(self, n):
        c = density_census(n)
        for k in range(2, n):
            assert c.labelled_counts[k] >= comb(n, k - 1) * F_COUNTS[k - 1]
        assert sum(c.labelled_counts.values()) == F_COUNTS[n]
        assert c.labelled_counts[0] == 1

    def test_named_bounds(self):
        assert density_census(3).labelled_counts[2] >= 3
        assert density_census(4).labelled_counts[3] >= 24

    def test_regression(self):
        assert density_census(3).labelled_counts == {0: 1, 1: 17, 2: 27}
        c = density_census(4)
        assert c.labelled_counts == {0: 1, 1: 165, 2: 741, 3: 1364}
        assert c.iso_counts == {0: 1, 1: 27, 2: 56, 3: 81}
        assert c.leaf_counts == {1: 114, 2: 617, 3: 1364}

    @pytest.mark.parametrize("n", range(1, 5))
    def test_chain_bound_throughout(self, n):
        for F in all_union_closed(n):
            if not F.is_power_set():
                assert s_param(F) < density(F) <= n - 1

    def test_report(self):
        rep = density_census(3).to_report()
        assert rep["labelled_counts"] == {"0": 1, "1": 17, "2": 27}
        assert rep["lift_lower_bounds"] == {"2": 3}


class TestTree:
    def test_two(self):
        t = closure_tree(2)
        assert len(t.nodes) == 4 and t.depth() == 1
        assert t.root == power_set_family(2)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_shape(self, n):
        t = closure_tree(n)
        assert t.depth() == n - 1
        assert t.self_loops() == [t.root]
        for child in t.nodes:
            if child != t.root:
                parent = t.parent[child]
                assert child.issubfamily(parent) and child != parent
                assert density(parent) == density(child) - 1

    @pytest.mark.parametrize("n", range(2, 5))
    def test_leaves_include_missing_top_layer(self, n):
        t = closure_tree(n)
        leaves = set(t.leaves())
        top = [m for m in range(1, 1 << n) if popcount(m) == n - 1]
        for F in t.nodes:
            if not all(m in F for m in top):
                assert F in leaves

    @pytest.mark.parametrize("n", range(2, 5))
    def test_roots_match_tree(self, n):
        t = closure_tree(n)
        has_child = {t.parent[c] for c in t.nodes if c != t.parent[c]}
        for F in t.nodes:
            if is_up_set(F) and not F.is_power_set():
                cert = has_closure_root(F)
                assert cert.has_root == (F in has_child)
                if cert.has_root:
                    assert t.parent[cert.witness_root] == F

    def test_edge_list(self):
        t = closure_tree(2)
        lines = t.edge_list().splitlines()
        assert len(lines) == 4
        assert "3 1.2.3" in lines and "1.2.3 1.2.3" in lines
        assert node_id(t.root) == "1.2.3"


class TestA:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_a0(self, n):
        a0 = a_value(0, n)
        assert a0 == Fraction(2 ** (n - 1), 2 ** n - 1) and a0 >= Fraction(1, 2)

    def test_a12(self):
        ups = [F for F in all_union_closed(2) if is_up_set(F) and not F.is_power_set()]
        assert len(ups) == 3
        assert a_value(1, 2) == min(g_value(F) for F in ups) == 1

    def test_tables(self):
        assert a_table(3) == {0: Fraction(4, 7), 1: Fraction(2, 3), 2: Fraction(2, 3)}
        assert a_table(4) == {
            0: Fraction(8, 15), 1: Fraction(4, 7), 2: Fraction(8, 13), 3: Fraction(4, 7)
        }

    def test_missing(self):
        with pytest.raises(NoFamilyWithDensity):
            a_value(3, 3)
