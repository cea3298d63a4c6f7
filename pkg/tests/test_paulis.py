import random

import numpy as np
import pytest

from adcodes import (
    DimensionError,
    PauliOperator,
    PauliSum,
    Phase,
    commutes,
    expand_ad_error,
    parse_pauli,
    pauli_matrix,
    pauli_mul,
    pauli_sum_matrix,
)

X = parse_pauli("X")
Y = parse_pauli("Y")
Z = parse_pauli("Z")
I1 = parse_pauli("I")


def random_pauli(rng, n):
    return PauliOperator(n, rng.getrandbits(n), rng.getrandbits(n), Phase(rng.randrange(4)))


class TestPhase:
    def test_normalization(self):
        assert Phase(5).k == 1
        assert Phase(-1).k == 3

    def test_multiplication_adds_exponents(self):
        assert (Phase(3) * Phase(2)).k == 1

    def test_values(self):
        assert [Phase(k).value for k in range(4)] == [1, 1j, -1, -1j]


class TestPauliMul:
    def test_xz_convention(self):
        """The fixed convention is X*Z = -iY, equivalently Y = iXZ."""
        assert X * Z == PauliOperator(1, 1, 1, Phase(3))
        assert str(X * Z) == "-iY"
        xz = X * Z
        assert PauliOperator(1, xz.x, xz.z, Phase(xz.phase.k + 1)) == Y  # Y = iXZ
        assert (Z * X).phase.k == 1  # ZX = +iY

    def test_identity(self):
        rng = random.Random(11)
        for _ in range(25):
            p = random_pauli(rng, 6)
            assert p * PauliOperator.identity(6) == p
            assert PauliOperator.identity(6) * p == p

    def test_xx_times_zz(self):
        # frozen from the dense 4x4 product: (X(x)X)(Z(x)Z) = -Y(x)Y
        assert parse_pauli("XX") * parse_pauli("ZZ") == parse_pauli("-YY")

    def test_associativity_random(self):
        rng = random.Random(7)
        for _ in range(200):
            p, q, r = (random_pauli(rng, 5) for _ in range(3))
            assert (p * q) * r == p * (q * r)

    def test_dense_homomorphism(self):
        rng = random.Random(3)
        for _ in range(60):
            p, q = random_pauli(rng, 3), random_pauli(rng, 3)
            lhs = pauli_matrix(p) @ pauli_matrix(q)
            assert np.array_equal(lhs, pauli_matrix(p * q))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            pauli_mul(parse_pauli("XX"), parse_pauli("X"))


class TestCommutes:
    def test_single_qubit(self):
        assert not commutes(X, Z)
        assert not commutes(X, Y)
        assert commutes(X, X)
        assert commutes(I1, Z)

    def test_two_sign_flips_cancel(self):
        assert commutes(parse_pauli("XX"), parse_pauli("ZZ"))

    def test_five_qubit_generators(self, five):
        gens = five.generators
        for i, g in enumerate(gens):
            for h in gens[i + 1:]:
                assert commutes(g, h)

    def test_matches_dense_commutator(self):
        rng = random.Random(5)
        for _ in range(40):
            p, q = random_pauli(rng, 3), random_pauli(rng, 3)
            comm = pauli_matrix(p) @ pauli_matrix(q) - pauli_matrix(q) @ pauli_matrix(p)
            assert commutes(p, q) == (np.abs(comm).max() == 0)


class TestStringForm:
    def test_parse_signs(self):
        assert parse_pauli("-ZZ").phase.k == 2
        assert parse_pauli("+iXY").phase.k == 1
        assert parse_pauli("-iX").phase.k == 3
        assert parse_pauli("+X") == parse_pauli("X")

    def test_round_trip(self):
        rng = random.Random(2)
        for _ in range(50):
            p = random_pauli(rng, 7)
            assert parse_pauli(p.to_string()) == p

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_pauli("XQZ")
        with pytest.raises(ValueError):
            parse_pauli("-")

    def test_weight_and_support(self):
        p = parse_pauli("IXYZI")
        assert p.weight == 3
        assert p.support == (1, 2, 3)


class TestExpandAdError:
    def test_single_a_factor(self):
        assert repr(expand_ad_error([0], [], 1)) == "X + iY"

    def test_single_b_factor(self):
        assert repr(expand_ad_error([], [0], 1)) == "I - Z"

    def test_two_a_factors_against_kron_oracle(self):
        ps = expand_ad_error([0, 1], [], 2)
        a = np.array([[0, 2], [0, 0]], dtype=complex)
        assert np.array_equal(pauli_sum_matrix(ps), np.kron(a, a))
        assert ps.num_terms == 4

    def test_mixed_against_kron_oracle(self):
        ps = expand_ad_error([0], [2], 3)
        a = np.array([[0, 2], [0, 0]], dtype=complex)
        b = np.array([[0, 0], [0, 2]], dtype=complex)
        eye = np.eye(2)
        assert np.array_equal(pauli_sum_matrix(ps), np.kron(np.kron(a, eye), b))

    def test_term_count(self):
        assert expand_ad_error([0, 2, 4], [1, 3], 6).num_terms == 32

    def test_nilpotency(self):
        """A squared annihilates: two damping operators on one qubit."""
        m = pauli_sum_matrix(expand_ad_error([1], [], 3))
        assert np.abs(m @ m).max() == 0

    def test_overlap_rejected(self):
        with pytest.raises(ValueError, match="overlap"):
            expand_ad_error([0, 1], [1], 3)

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="range"):
            expand_ad_error([3], [], 3)


class TestPauliSum:
    def test_zero_coefficients_dropped(self):
        ps = PauliSum(2, {(1, 0): (0, 0), (2, 0): (1, 0)})
        assert ps.num_terms == 1

    def test_addition_cancels(self):
        a = PauliSum(1, {(1, 0): (1, 0)})
        b = PauliSum(1, {(1, 0): (-1, 0), (0, 1): (0, 2)})
        s = a + b
        assert s.coefficient(1, 0) == (0, 0)
        assert s.coefficient(0, 1) == (0, 2)

    def test_from_operator_carries_phase(self):
        ps = PauliSum.from_operator(parse_pauli("-iZ"))
        assert ps.coefficient(0, 1) == (0, -1)
