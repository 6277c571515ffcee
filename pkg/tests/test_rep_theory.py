"""Dimensions, multiplicities, orbits and the defining-module classifier."""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import kostant_dominant_character

from lieinduct.errors import NotDominant
from lieinduct.rep_theory import (
    CharacterTable,
    _freudenthal_core,
    classify_weight,
    defining_modules,
    freudenthal_character,
    is_defining,
    module_descriptor,
    orbit_size,
    weyl_dim,
    weyl_orbit,
)
from lieinduct.root_system import CartanMatrix, RootSystem, build_root_system, parse_dynkin


def rsys(label):
    return build_root_system(parse_dynkin(label))


def w(rank, idx, scale=1):
    out = [0] * rank
    if idx:
        out[idx - 1] = scale
    return tuple(out)


def test_weyl_dim_named_values():
    assert weyl_dim(rsys("E7"), w(7, 7)) == 56
    assert weyl_dim(rsys("E6"), w(6, 6)) == 27
    assert weyl_dim(rsys("A5"), w(5, 3)) == 20
    assert weyl_dim(rsys("D7"), w(7, 6)) == 64
    assert weyl_dim(rsys("D6"), w(6, 5)) == 32
    assert weyl_dim(rsys("D5"), w(5, 4)) == 16
    assert weyl_dim(rsys("C3"), w(3, 3)) == 14
    assert weyl_dim(rsys("B3"), w(3, 3)) == 8
    assert weyl_dim(rsys("D8"), w(8, 7)) == 128
    assert weyl_dim(rsys("B4"), w(4, 4)) == 16
    assert weyl_dim(rsys("E8"), w(8, 8)) == 248
    for label in ["A4", "B3", "G2", "E6"]:
        rs = rsys(label)
        assert weyl_dim(rs, (0,) * rs.rank) == 1


def test_adjoint_dimension_identity():
    # the module with the highest root as highest weight is the algebra
    # itself: its Weyl dimension equals the root count plus the rank
    labels = (
        [f"A{l}" for l in range(1, 9)] + [f"B{l}" for l in range(2, 9)]
        + [f"C{l}" for l in range(3, 9)] + [f"D{l}" for l in range(4, 9)]
        + ["E6", "E7", "E8", "F4", "G2"]
    )
    for label in labels:
        rs = rsys(label)
        adj = rs.root_to_weight(rs.highest_root)
        assert weyl_dim(rs, adj) == rs.dimension, label


def test_classic_exceptional_dimensions():
    g2 = rsys("G2")
    assert [weyl_dim(g2, w) for w in [(1, 0), (0, 1), (2, 0), (1, 1)]] == [7, 14, 27, 64]

    def fundamentals(label):
        rs = rsys(label)
        return [weyl_dim(rs, tuple(int(j == i) for j in range(rs.rank)))
                for i in range(rs.rank)]

    assert fundamentals("F4") == [52, 1274, 273, 26]
    assert fundamentals("E6") == [27, 78, 351, 2925, 351, 27]
    assert fundamentals("E7") == [133, 912, 8645, 365750, 27664, 1539, 56]
    assert weyl_dim(rsys("E8"), (1, 0, 0, 0, 0, 0, 0, 0)) == 3875


def test_weyl_dim_requires_dominant():
    with pytest.raises(NotDominant):
        weyl_dim(rsys("A2"), (-1, 0))
    with pytest.raises(NotDominant):
        weyl_dim(rsys("A2"), (1,))


def test_highest_weight_multiplicity_is_one():
    for label, lam in [("A3", (1, 0, 1)), ("G2", (1, 1)), ("B3", (0, 1, 1))]:
        rs = rsys(label)
        assert freudenthal_character(rs, lam).entries[lam] == 1


def test_adjoint_zero_multiplicity_is_rank():
    for l in range(2, 9):
        rs = rsys(f"A{l}")
        adj = tuple(1 if i in (0, l - 1) else 0 for i in range(l))
        assert freudenthal_character(rs, adj).entries[(0,) * l] == l


def test_f4_quasiminuscule_zero_multiplicity():
    assert freudenthal_character(rsys("F4"), w(4, 4)).entries[(0, 0, 0, 0)] == 2


def test_character_totals_match_dimension():
    cases = [
        ("A3", (1, 1, 0)), ("B3", (1, 0, 1)), ("C3", (0, 1, 0)),
        ("G2", (0, 1)), ("F4", (0, 0, 0, 1)), ("D4", (0, 1, 0, 0)),
        ("A5", (0, 0, 1, 0, 0)), ("E6", (1, 0, 0, 0, 0, 0)),
    ]
    for label, lam in cases:
        rs = rsys(label)
        ch = freudenthal_character(rs, lam)
        assert ch.total_dimension(rs) == weyl_dim(rs, lam)


def test_freudenthal_matches_kostant_oracle():
    cases = [
        ("A2", (1, 1)), ("A2", (3, 0)), ("A2", (2, 2)),
        ("B2", (1, 1)), ("B2", (2, 2)), ("G2", (1, 0)), ("G2", (1, 1)),
        ("A3", (1, 0, 1)), ("B3", (1, 0, 0)), ("C3", (0, 0, 1)),
        ("B4", (0, 0, 0, 1)), ("F4", (0, 0, 0, 1)),
        # one rank-5 module per family keeps the cross-check honest higher up
        ("A5", (0, 0, 1, 0, 0)), ("D5", (0, 1, 0, 0, 0)), ("C5", (0, 1, 0, 0, 0)),
    ]
    for label, lam in cases:
        rs = rsys(label)
        assert freudenthal_character(rs, lam).entries == kostant_dominant_character(rs, lam)


def test_freudenthal_weyl_invariance():
    rs = rsys("B3")
    full = freudenthal_character(rs, (1, 0, 1)).expand(rs)
    for v, m in list(full.items())[::7]:
        for i in range(1, 4):
            assert full[rs.reflect(v, i)] == m


def test_freudenthal_scale_invariance():
    # doubling the symmetrizer rescales the bilinear form globally; every
    # multiplicity must be unchanged
    for label, lam in [("B3", (1, 0, 1)), ("G2", (1, 1)), ("C3", (1, 1, 0))]:
        rs = rsys(label)
        scaled_cm = CartanMatrix(
            rs.cartan.entries, tuple(2 * d for d in rs.cartan.symmetrizer)
        )
        rs2 = RootSystem(rs.type, scaled_cm, rs.positive_roots, rs.highest_root, rs.roots)
        assert _freudenthal_core(rs2, lam) == _freudenthal_core(rs, lam)
        assert weyl_dim(rs2, lam) == weyl_dim(rs, lam)
        cls = classify_weight(rs2, lam)
        assert cls == classify_weight(rs, lam)


def test_weyl_orbit_basics():
    rs = rsys("D4")
    assert weyl_orbit(rs, (0, 0, 0, 0)) == {(0, 0, 0, 0)}
    rs1 = rsys("A1")
    assert weyl_orbit(rs1, (1,)) == {(1,), (-1,)}


def test_orbit_size_formula_matches_enumeration():
    for label, weight in [
        ("A3", (1, 0, 1)), ("B3", (0, 1, 0)), ("C3", (1, 1, 1)),
        ("D4", (0, 1, 0, 0)), ("G2", (1, 0)), ("F4", (0, 0, 0, 1)),
        ("A5", (0, 0, 1, 0, 0)), ("B4", (0, 0, 0, 1)),
    ]:
        rs = rsys(label)
        assert orbit_size(rs, weight) == len(weyl_orbit(rs, weight))


def test_c3_long_root_module_has_two_orbits_and_no_zero_weight():
    rs = rsys("C3")
    ch = freudenthal_character(rs, (0, 0, 1))
    assert len(ch.entries) == 2
    assert (0, 0, 0) not in ch.entries
    assert set(ch.entries.values()) == {1}


def test_minuscule_classification_lists():
    minuscule = {
        "A4": [1, 2, 3, 4],
        "B4": [4],
        "C4": [1],
        "D5": [1, 4, 5],
        "E6": [1, 6],
        "E7": [7],
        "E8": [],
        "F4": [],
        "G2": [],
    }
    for label, idxs in minuscule.items():
        rs = rsys(label)
        got = [i for i in range(1, rs.rank + 1)
               if classify_weight(rs, w(rs.rank, i)).minuscule]
        assert got == idxs, label
        # zero weight counts as minuscule
        assert classify_weight(rs, (0,) * rs.rank).minuscule


def test_short_simple_root_counts():
    from lieinduct.rep_theory import num_short_simple_roots

    # C_l has l-1 short simple roots, which keeps its quasi-minuscule weight
    # out of the one-dimensional-weight-space candidates
    for l in range(3, 8):
        assert num_short_simple_roots(rsys(f"C{l}")) == l - 1
    for l in range(2, 8):
        assert num_short_simple_roots(rsys(f"B{l}")) == 1
    assert num_short_simple_roots(rsys("G2")) == 1
    assert num_short_simple_roots(rsys("F4")) == 2
    for label in ["A4", "D5", "E6"]:
        rs = rsys(label)
        assert num_short_simple_roots(rs) == rs.rank  # simply laced: all short


def test_quasi_minuscule_classification():
    quasi = {
        "B4": w(4, 1),
        "C4": w(4, 2),
        "D5": w(5, 2),
        "E6": w(6, 2),
        "E7": w(7, 1),
        "E8": w(8, 8),
        "F4": w(4, 4),
        "G2": w(2, 1),
    }
    for label, weight in quasi.items():
        rs = rsys(label)
        cls = classify_weight(rs, weight)
        assert cls.quasi_minuscule and not cls.minuscule, label
    rs = rsys("A3")
    assert classify_weight(rs, (1, 0, 1)).quasi_minuscule
    assert not classify_weight(rs, (0,) * 3).quasi_minuscule


def test_minuscule_modules_are_single_orbits():
    for label, weight in [("A4", w(4, 2)), ("B4", w(4, 4)), ("D5", w(5, 5)),
                          ("E6", w(6, 1)), ("C4", w(4, 1))]:
        rs = rsys(label)
        assert classify_weight(rs, weight).minuscule
        ch = freudenthal_character(rs, weight)
        assert list(ch.entries.keys()) == [weight]
        assert orbit_size(rs, weight) == weyl_dim(rs, weight)


def test_is_defining_witnesses():
    check = is_defining(rsys("E8"), w(8, 8))
    assert not check.ok
    assert "multiplicity 8" in check.witness
    assert is_defining(rsys("A1"), (3,)).ok
    for l in range(2, 6):
        check = is_defining(rsys(f"A{l}"), w(l, 1, 3))
        assert not check.ok
        assert check.dominant_count > 2


def test_is_defining_matches_brute_force():
    # independent route: enumerate dominant weights and multiplicities by the
    # alternating Weyl sum, then apply the two defining conditions directly
    from lieinduct.induction import _modules_up_to_dim

    for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "B4", "F4"]:
        rs = rsys(label)
        for lam, dim in _modules_up_to_dim(rs, 400):
            if label in ("D4", "B4", "F4") and dim > 150:
                continue  # keep the suite under budget; smaller cases cover rank 4
            table = kostant_dominant_character(rs, lam)
            brute_ok = all(m == 1 for m in table.values()) and len(table) <= 2
            assert is_defining(rs, lam).ok == brute_ok, (label, lam)


def test_defining_modules_full_lists():
    def weights(label):
        return [md.highest_weight for md in defining_modules(rsys(label))]

    assert weights("A1") == [(0,), (1,), (2,), (3,)]
    for l in range(2, 9):
        got = set(weights(f"A{l}"))
        expected = {w(l, 0)} | {w(l, i) for i in range(1, l + 1)} | {w(l, 1, 2), w(l, l, 2)}
        assert got == expected
    for l in range(2, 9):
        assert set(weights(f"B{l}")) == {w(l, 0), w(l, 1), w(l, l)}
    assert set(weights("C3")) == {w(3, 0), w(3, 1), w(3, 3)}
    for l in range(4, 9):
        assert set(weights(f"C{l}")) == {w(l, 0), w(l, 1)}
    for l in range(4, 9):
        assert set(weights(f"D{l}")) == {w(l, 0), w(l, 1), w(l, l - 1), w(l, l)}
    assert set(weights("E6")) == {w(6, 0), w(6, 1), w(6, 6)}
    assert set(weights("E7")) == {w(7, 0), w(7, 7)}
    assert weights("E8") == [w(8, 0)]
    assert weights("F4") == [w(4, 0)]
    assert set(weights("G2")) == {w(2, 0), w(2, 1)}


def test_a_family_exponent_failure_is_monotone():
    # rank 1: m = 3 passes, m >= 4 fails; rank >= 2: m = 2 passes, m >= 3 fails
    rs = rsys("A1")
    flags = [is_defining(rs, (m,)).ok for m in range(2, 7)]
    assert flags == [True, True, False, False, False]
    for l in [2, 4]:
        rs = rsys(f"A{l}")
        flags = [is_defining(rs, w(l, 1, m)).ok for m in range(2, 7)]
        assert flags == [True, False, False, False, False]


def test_character_table_from_weights_roundtrip():
    rs = rsys("A2")
    full = freudenthal_character(rs, (1, 1)).expand(rs)
    weights = [v for v, m in full.items() for _ in range(m)]
    table = CharacterTable.from_weights(rs, weights)
    assert table.entries == freudenthal_character(rs, (1, 1)).entries


def test_module_descriptor():
    rs = rsys("E6")
    md = module_descriptor(rs, w(6, 6))
    assert md.dimension == 27
    assert not md.is_trivial
    assert module_descriptor(rs, (0,) * 6).is_trivial
