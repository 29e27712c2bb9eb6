"""Enumeration of all S-rings over Z_n and the schurity census."""

import os

import pytest

from schurring.catalog import (
    BRUTE_CAP,
    Catalog,
    brute_force_enumerate,
    census,
    enumerate_srings,
    unit_subgroups,
)
from schurring.errors import CapExceeded
from schurring.sring import validate

# exact counts, frozen from the brute-force oracle
ORACLE_COUNTS = {1: 1, 2: 1, 3: 2, 4: 3, 5: 3, 6: 7, 7: 4, 8: 10, 9: 7, 10: 10, 11: 4, 12: 32}


def test_unit_subgroups():
    assert [g.elements for g in unit_subgroups(5)] == [(1,), (1, 4), (1, 2, 3, 4)]
    # units(8) is the Klein four-group: five subgroups
    assert len(unit_subgroups(8)) == 5
    assert all(1 in g.elements for g in unit_subgroups(12))


def test_enumerate_examples():
    assert enumerate_srings(1).count_exact == 1
    assert enumerate_srings(4).count_exact == 3
    assert enumerate_srings(5).count_exact == 3


def test_enumerate_matches_frozen_counts():
    for n, count in ORACLE_COUNTS.items():
        assert enumerate_srings(n).count_exact == count


def test_brute_force_examples():
    assert brute_force_enumerate(2).count_exact == 1
    assert brute_force_enumerate(3).count_exact == 2
    assert brute_force_enumerate(4).count_exact == 3
    got = {A.classes for A in brute_force_enumerate(4).rings}
    assert got == {
        ((0,), (1,), (2,), (3,)),
        ((0,), (1, 3), (2,)),
        ((0,), (1, 2, 3)),
    }


def test_catalog_entries_are_valid_and_deduplicated():
    cat = enumerate_srings(12)
    keys = [A.key() for A in cat.rings]
    assert len(keys) == len(set(keys))
    for A in cat.rings:
        assert validate(A.n, [list(c) for c in A.classes]).key() == A.key()
    assert cat.count_up_to_cayley <= cat.count_exact


def test_caps():
    with pytest.raises(CapExceeded):
        enumerate_srings(73)
    with pytest.raises(CapExceeded):
        brute_force_enumerate(BRUTE_CAP + 1)
    with pytest.raises(CapExceeded):
        enumerate_srings(16, cap=12)
    assert isinstance(enumerate_srings(16, cap=16), Catalog)


def test_census_small_family_orders():
    for n in (6, 24, 30):
        rep = census(n)
        assert rep.total == rep.schurian_count
        assert rep.first_nonschurian is None
        assert len(rep.entries) == rep.total


@pytest.mark.skipif(
    not os.environ.get("SCHURRING_RUN_SLOW"),
    reason="several minutes; set SCHURRING_RUN_SLOW=1 to enable",
)
def test_census_72_contains_nonschurian():
    rep = census(72)
    assert rep.schurian_count < rep.total
    assert rep.first_nonschurian is not None
