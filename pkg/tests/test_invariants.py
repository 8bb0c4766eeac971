"""Contractions and the ten invariants: oracle agreement and known values."""

from fractions import Fraction
from itertools import product

import pytest

from harmonic4 import (
    EXACT,
    FLOAT,
    INVARIANT_DEGREES,
    INVARIANT_NAMES,
    bilinear_B,
    from_independent,
    invariants,
    invariants_oracle,
    j4_from_mixed,
    mat_square,
    quartic_C,
    random_harmonic,
)
from harmonic4.invariants import SymMat3, _invariants_generic

RANGE3 = (1, 2, 3)

D1 = from_independent((1, 0, 0, 0, 0, 0, 0, 0, 0), backend=EXACT)
ZERO = from_independent([0] * 9, backend=EXACT)
J3_WITNESS = from_independent((8, 0, 0, -4, 0, 5, 5, 3, 0), backend=EXACT)
J9_WITNESS = from_independent(
    (0, 1, 0, 0, 0, Fraction(-3, 4), Fraction(1, 4), 1, 0), backend=EXACT)


def brute_force_B(d):
    """Independent reference: unreduced triple loop for B_ij."""
    return [[sum(d.component(i, k, l, m) * d.component(j, k, l, m)
                 for k, l, m in product(RANGE3, repeat=3))
             for j in RANGE3] for i in RANGE3]


class TestBilinearB:
    def test_unit_d1111_is_diag_4_0_4(self):
        # frozen from the brute-force contraction below
        expected = [[4, 0, 0], [0, 0, 0], [0, 0, 4]]
        assert brute_force_B(D1) == expected
        b = bilinear_B(D1)
        assert [[b.entry(i, j) for j in RANGE3] for i in RANGE3] == expected

    def test_zero_tensor(self):
        assert all(v == 0 for v in bilinear_B(ZERO).entries)

    def test_matches_brute_force_on_random_tensors(self):
        for seed in range(10):
            d = random_harmonic(seed, backend=EXACT)
            b = bilinear_B(d)
            reference = brute_force_B(d)
            for i in RANGE3:
                for j in RANGE3:
                    assert b.entry(i, j) == reference[i - 1][j - 1]

    def test_trace_equals_degree2_invariant(self):
        for seed in range(5):
            d = random_harmonic(seed, backend=EXACT)
            assert bilinear_B(d).trace() == invariants(d).j2


class TestMatSquare:
    def test_diagonal(self):
        b = SymMat3((4, 0, 0, 0, 0, 4))
        assert mat_square(b).entries == (16, 0, 0, 0, 0, 16)

    def test_zero_and_identity(self):
        assert mat_square(SymMat3((0,) * 6)).entries == (0,) * 6
        eye = SymMat3((1, 0, 0, 1, 0, 1))
        assert mat_square(eye).entries == eye.entries

    def test_entry_is_symmetric(self):
        b = SymMat3(tuple(range(1, 7)))
        for i in RANGE3:
            for j in RANGE3:
                assert b.entry(i, j) == b.entry(j, i)


class TestQuarticC:
    def test_unit_d1111_corner(self):
        # brute force over the 9 (m,n): D_11mn D_11mn = 1^2 + (-1)^2 = 2
        reference = sum(D1.component(1, 1, m, n) ** 2
                        for m, n in product(RANGE3, repeat=2))
        assert reference == 2
        assert quartic_C(D1).entry(1, 1, 1, 1) == 2

    def test_zero_tensor(self):
        assert all(v == 0 for v in quartic_C(ZERO).values.values())

    def test_pair_symmetry(self):
        d = random_harmonic(4, backend=EXACT)
        c = quartic_C(d)
        for ij in product(RANGE3, repeat=2):
            for kl in product(RANGE3, repeat=2):
                assert c.entry(*ij, *kl) == c.entry(*kl, *ij)
                assert c.entry(*ij, *kl) == c.entry(ij[1], ij[0], *kl)


class TestKnownValues:
    def test_unit_d1111_row(self):
        vec = invariants(D1)
        assert vec.as_dict() == {
            "J2": 8, "J3": 0, "J4": 32, "J5": 0, "J6": 0,
            "K6": 128, "J7": 0, "J8": 0, "J9": 0, "J10": 0,
        }

    def test_k6_of_unit_d1111_consistent_with_trace_identity(self):
        # tr(diag(4,0,4)^3) = 128, and the degree-6 linear identity gives
        # -13/80*8^3 + 33/40*8*32 = 128 as an independent cross-check
        vec = invariants(D1)
        assert vec.k6 == 128
        assert (Fraction(-13, 80) * vec.j2**3 + Fraction(33, 40) * vec.j2 * vec.j4
                - Fraction(1, 24) * vec.j3**2 + Fraction(9, 16) * vec.j6) == 128

    def test_cubic_witness(self):
        vec = invariants(J3_WITNESS)
        assert (vec.j5, vec.j7, vec.j9) == (0, 0, 0)
        assert vec.j3 == -6480

    def test_degree9_witness(self):
        vec = invariants(J9_WITNESS)
        assert (vec.j3, vec.j5, vec.j7) == (0, 0, 0)
        assert vec.j9 == Fraction(45, 8)

    def test_scaled_unit_float(self):
        vec = invariants(from_independent((2**0.5, 0, 0, 0, 0, 0, 0, 0, 0),
                                          backend=FLOAT))
        assert vec.j2 == pytest.approx(16.0, rel=1e-12)
        assert vec.k6 == pytest.approx(1024.0, rel=1e-12)


class TestOracleEquivalence:
    def test_unit_d1111(self):
        assert invariants(D1) == invariants_oracle(D1)

    def test_cubic_witness_all_ten(self):
        assert invariants(J3_WITNESS) == invariants_oracle(J3_WITNESS)

    def test_random_rational_tensors(self):
        for seed in range(25):
            d = random_harmonic(seed, backend=EXACT)
            assert invariants(d) == invariants_oracle(d)

    def test_float_fast_path_matches_generic(self):
        for seed in range(10):
            d = random_harmonic(seed, backend=FLOAT)
            norm = float(d.frobenius_norm_sq()) ** 0.5
            d = d.scale(1.0 / norm)
            fast = invariants(d)
            generic = _invariants_generic(d)
            for name in INVARIANT_NAMES:
                assert fast[name] == pytest.approx(generic[name], rel=1e-12, abs=1e-13)


class TestStructuralProperties:
    def test_homogeneity_exact(self):
        d = random_harmonic(2, backend=EXACT)
        c = Fraction(3, 2)
        base = invariants(d)
        scaled = invariants(d.scale(c))
        for name in INVARIANT_NAMES:
            assert scaled[name] == c ** INVARIANT_DEGREES[name] * base[name]

    def test_parity_under_negation(self):
        for seed in range(5):
            d = random_harmonic(seed, backend=EXACT)
            plus = invariants(d)
            minus = invariants(-d)
            for name in ("J3", "J5", "J7", "J9"):
                assert minus[name] == -plus[name]
            for name in ("J2", "J4", "J6", "K6", "J8", "J10"):
                assert minus[name] == plus[name]

    def test_degree6_trace_identity_numeric(self):
        for seed in range(10):
            vec = invariants(random_harmonic(seed, backend=EXACT))
            combo = (Fraction(-13, 80) * vec.j2**3
                     + Fraction(33, 40) * vec.j2 * vec.j4
                     - Fraction(1, 24) * vec.j3**2
                     + Fraction(9, 16) * vec.j6)
            assert vec.k6 == combo


class TestJ4Reconstruction:
    def test_unit_d1111_values(self):
        assert j4_from_mixed(8, 0, 0, 128) == 32

    def test_zero_branch(self):
        assert j4_from_mixed(0, 0, 0, 0) == 0
        assert j4_from_mixed(0.0, 0.0, 0.0, 0.0) == 0.0

    def test_reconstructs_j4_exactly(self):
        for seed in range(25):
            vec = invariants(random_harmonic(seed, backend=EXACT))
            if vec.j2 == 0:
                continue
            assert j4_from_mixed(vec.j2, vec.j3, vec.j6, vec.k6) == vec.j4


class TestInvariantVector:
    def test_canonical_order_and_lookup(self):
        vec = invariants(D1)
        assert list(vec.as_dict()) == list(INVARIANT_NAMES)
        assert vec["J4"] == 32
        assert vec["K6"] == 128

    def test_json_uses_fraction_strings(self):
        payload = invariants(J3_WITNESS).to_json_dict()
        assert payload["J3"] == "-6480/1"
        assert payload["J9"] == "0/1"

    def test_json_floats_stay_numbers(self):
        payload = invariants(random_harmonic(1, backend=FLOAT)).to_json_dict()
        assert all(isinstance(v, float) for v in payload.values())
