import pytest
from hypothesis import given, strategies as st

import reference as ref
from conftest import families
from unionclosure.errors import (
    EmptySetPresent,
    MaskOutOfRange,
    ParseError,
    UniverseMissing,
    UniverseTooLarge,
)
from unionclosure.setcore import (
    SetFamily,
    canonical_iso_form,
    family_from_sets,
    format_family,
    is_union_closed,
    is_up_set,
    make_family,
    parse_family,
    power_set_family,
    relabel,
    statistics,
)


class TestMakeFamily:
    def test_minimal(self):
        assert make_family(3, [0b111]).members == (7,)

    def test_sorts_and_dedups(self):
        F = make_family(3, [0b111, 0b001, 0b011, 0b001])
        assert F.members == (1, 3, 7)

    def test_rejects_empty_set(self):
        with pytest.raises(EmptySetPresent):
            make_family(2, [0b00, 0b11])

    def test_rejects_missing_universe(self):
        with pytest.raises(UniverseMissing):
            make_family(3, [0b001, 0b011])

    def test_rejects_out_of_range(self):
        with pytest.raises(MaskOutOfRange):
            make_family(2, [0b111, 0b11])

    def test_universe_cap(self):
        with pytest.raises(UniverseTooLarge):
            make_family(33, [(1 << 33) - 1])

    @given(families())
    def test_idempotent(self, F):
        assert make_family(F.n, F.members) == F


def test_union_closed_examples(chain3):
    assert is_union_closed(chain3)
    assert not is_union_closed(family_from_sets(3, [[1], [2], [1, 2, 3]]))
    assert is_union_closed(power_set_family(3))


def test_up_set_examples(chain3):
    assert is_up_set(family_from_sets(3, [[1], [1, 2], [1, 3], [1, 2, 3]]))
    assert not is_up_set(chain3)


@pytest.mark.parametrize("n", range(1, 11))
def test_power_set_is_union_closed_up_set(n):
    P = power_set_family(n)
    assert len(P) == 2**n - 1
    assert is_union_closed(P) and is_up_set(P)


def test_power_set_small():
    assert power_set_family(1).members == (1,)
    assert power_set_family(2).members == (1, 2, 3)


@pytest.mark.parametrize("n", range(1, 5))
def test_every_up_set_is_union_closed(n):
    full = (1 << n) - 1
    others = [m for m in range(1, full)]
    for bits in range(1 << len(others)):
        fam = {full} | {m for i, m in enumerate(others) if bits >> i & 1}
        F = SetFamily(n, tuple(sorted(fam)))
        if is_up_set(F):
            assert is_union_closed(F)


@given(families(max_n=5))
def test_union_closed_matches_reference(F):
    assert is_union_closed(F) == ref.union_closed(set(F.members))


class TestIso:
    def test_relabel_one_two(self):
        up2 = family_from_sets(3, [[2], [1, 2], [2, 3], [1, 2, 3]])
        up1 = family_from_sets(3, [[1], [1, 2], [1, 3], [1, 2, 3]])
        assert canonical_iso_form(up2) == canonical_iso_form(up1)

    def test_power_set_fixed(self):
        P = power_set_family(3)
        assert canonical_iso_form(P) == P

    def test_chain_representative(self, chain3):
        # least over all 6 relabelings, computed by the reference
        expected = ref.canonical_by_permutations(set(chain3.members), 3)
        assert canonical_iso_form(chain3).members == expected
        assert expected == (1, 3, 7)

    def test_too_large(self):
        with pytest.raises(UniverseTooLarge):
            canonical_iso_form(power_set_family(9))

    @given(families(max_n=4), st.randoms())
    def test_invariant_and_idempotent(self, F, rnd):
        perm = list(range(1, F.n + 1))
        rnd.shuffle(perm)
        c = canonical_iso_form(F)
        assert canonical_iso_form(relabel(F, perm)) == c
        assert canonical_iso_form(c) == c
        assert c.members == ref.canonical_by_permutations(set(F.members), F.n)


class TestStatistics:
    def test_chain(self, chain3):
        assert statistics(chain3).frequencies == (3, 2, 1)
        assert statistics(chain3).max_frequency_element == 1

    def test_power_set(self):
        assert statistics(power_set_family(3)).frequencies == (4, 4, 4)

    def test_pair(self):
        F = family_from_sets(3, [[1, 2], [1, 2, 3]])
        assert statistics(F).frequencies == (2, 2, 1)

    @given(families())
    def test_invariants(self, F):
        s = statistics(F)
        assert sum(s.frequencies) == sum(bin(m).count("1") for m in F.members)
        assert all(1 <= d <= len(F) for d in s.frequencies)


class TestTextFormat:
    def test_parse_chain(self, chain3):
        assert parse_family("universe 3\n1\n1 2\n1 2 3\n") == chain3

    def test_comments_and_implicit_universe(self, chain3):
        text = "# a chain\n\n1   # first\n1 2\n1 2 3\n"
        assert parse_family(text) == chain3

    def test_missing_universe(self):
        with pytest.raises(UniverseMissing):
            parse_family("universe 3\n1\n1 2\n")

    def test_zero_element(self):
        with pytest.raises(ParseError) as info:
            parse_family("universe 2\n0 1\n1 2\n")
        assert info.value.line == 2

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_family("1 x\n")

    def test_element_beyond_universe(self):
        with pytest.raises(ParseError):
            parse_family("universe 2\n3\n")

    @given(families(max_n=6))
    def test_round_trip(self, F):
        assert parse_family(format_family(F)) == F
