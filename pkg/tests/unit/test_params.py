"""
Tests for the Laurent polynomial ring and the K catalogue.
"""

import random
from fractions import Fraction

import pytest

from blobalg.core.exceptions import (
    PolynomialParseError,
    UnboundParameterError,
    UnknownParameterError,
    ZeroDenominatorError,
)
from blobalg.params import (
    KOperator,
    KPolynomial,
    LaurentPoly,
    ParamName,
    evaluate,
    factor_against_klist,
    phi,
    poly_mul,
    psi,
    resolve_param,
)
from blobalg.params.kpoly import CATALOGUE, K_BASE
from blobalg.params.laurent import D, DL, DR, KL, KLR, KR, ONE, PARAMS


def random_poly(rng: random.Random, terms: int = 3) -> LaurentPoly:
    result = LaurentPoly.zero()
    for _ in range(terms):
        exps = tuple(rng.randint(-1, 2) for _ in PARAMS)
        result = result + LaurentPoly.monomial(exps, rng.randint(-3, 3))
    return result


class TestParamNames:
    """Test parameter names and aliases."""

    def test_six_parameters(self):
        """Exactly six independent parameters exist."""
        assert len(PARAMS) == 6
        assert len({p.value for p in PARAMS}) == 6

    @pytest.mark.parametrize(
        "alias,expected",
        [
            ("delta_e", ParamName.DELTA_L),
            ("gamma", ParamName.KAPPA_L),
            ("kappa", ParamName.KAPPA_L),
            ("kappa_prime", ParamName.KAPPA_LR),
            ("k_L", ParamName.KAPPA_LR),
            ("k_R", ParamName.KAPPA_LR),
            ("kLR", ParamName.KAPPA_LR),
            ("d", ParamName.DELTA),
        ],
    )
    def test_aliases_resolve(self, alias, expected):
        """Every alias resolves to one of the six parameters."""
        assert resolve_param(alias) is expected

    def test_unknown_alias(self):
        """Unknown names raise UnknownParameterError."""
        with pytest.raises(UnknownParameterError):
            resolve_param("q")


class TestArithmetic:
    """Test ring operations."""

    def test_monomial_product(self):
        """dL times dR is the monomial dL*dR."""
        assert poly_mul(DL, DR) == LaurentPoly.monomial({"dL": 1, "dR": 1})

    def test_identity(self):
        """Multiplying by one is the identity."""
        k1 = DL * DR - KLR
        assert poly_mul(k1, ONE) == k1

    def test_k1_times_k0(self):
        """K1 * K0 expands by hand."""
        expected = LaurentPoly.monomial({"dL": 1, "dR": 1, "kLR": 1}) - KLR ** 2
        assert poly_mul(DL * DR - KLR, KLR) == expected

    def test_no_zero_coefficients(self):
        """Cancelled terms disappear from the normal form."""
        p = (D + DL) - DL
        assert p == D
        assert len(p) == 1

    def test_ring_axioms_random(self):
        """Associativity, commutativity and distributivity on random polynomials."""
        rng = random.Random(7)
        for _ in range(50):
            a, b, c = (random_poly(rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c

    def test_negative_powers(self):
        """Unit monomials invert."""
        assert D ** -2 * D ** 2 == ONE
        with pytest.raises(ValueError):
            (D + ONE) ** -1

    def test_exact_divide(self):
        """Exact division recovers the cofactor and rejects non-divisors."""
        k1 = DL * DR - KLR
        assert (k1 * (D + KL)).exact_divide(k1) == D + KL
        assert (D + KL).exact_divide(k1) is None
        assert (D ** -1 * k1).exact_divide(k1) == D ** -1


class TestEvaluate:
    """Test evaluation at rational points."""

    def test_variable(self):
        """A variable evaluates to its value."""
        assert evaluate(D, {"d": 2}) == 2

    def test_k1_vanishes(self):
        """K1 vanishes at dL = dR = kLR = 1."""
        assert evaluate(DL * DR - KLR, {"dL": 1, "dR": 1, "kLR": 1}) == 0

    def test_pole(self):
        """A negative power at zero raises ZeroDenominatorError."""
        with pytest.raises(ZeroDenominatorError):
            evaluate(D ** -1, {"d": 0})

    def test_unbound(self):
        """A missing parameter raises UnboundParameterError."""
        with pytest.raises(UnboundParameterError):
            evaluate(D * KL, {"d": 1})

    def test_rational_strings(self):
        """Values may be given as rational strings."""
        assert evaluate(KLR * 2, {"kLR": "3/2"}) == Fraction(3)

    def test_homomorphism(self):
        """Evaluation respects sums and products."""
        rng = random.Random(11)
        point = {p: Fraction(rng.randint(1, 5), rng.randint(1, 4)) for p in PARAMS}
        for _ in range(30):
            a, b = random_poly(rng), random_poly(rng)
            assert evaluate(a * b, point) == evaluate(a, point) * evaluate(b, point)
            assert evaluate(a + b, point) == evaluate(a, point) + evaluate(b, point)


class TestTextFormat:
    """Test printing and parsing."""

    def test_print_k1(self):
        """Terms print in descending lexicographic order."""
        assert str(DL * DR - KLR) == "dL * dR - kLR"

    def test_print_constants(self):
        """Constants and the zero polynomial print plainly."""
        assert str(LaurentPoly.zero()) == "0"
        assert str(LaurentPoly.constant(-3)) == "-3"
        assert str(D ** -1 * 2) == "2 * d^-1"

    def test_round_trip(self):
        """Printing then parsing is exact."""
        rng = random.Random(3)
        for _ in range(40):
            p = random_poly(rng, terms=4)
            assert LaurentPoly.parse(str(p)) == p

    def test_parse_aliases(self):
        """Parsing accepts alias names."""
        assert LaurentPoly.parse("gamma * delta_e") == KL * DL

    @pytest.mark.parametrize("text", ["", "d +", "d ^ x", "d d", "3 $ d"])
    def test_parse_errors(self, text):
        """Malformed text raises PolynomialParseError."""
        with pytest.raises(PolynomialParseError):
            LaurentPoly.parse(text)


class TestKPolynomials:
    """Test the K catalogue and the Phi/Psi operators."""

    def test_k3_expansion(self):
        """K3 matches its defining expansion."""
        expected = D * D * DL * DR - D * DL * KR - D * DR * KL - DL * DR + KL * KR
        assert KPolynomial("K3").expansion == expected

    def test_phi_psi_commute(self):
        """Phi and Psi commute on random polynomials."""
        rng = random.Random(5)
        for _ in range(20):
            p = random_poly(rng)
            assert phi(psi(p)) == psi(phi(p))

    def test_operator_tags(self):
        """Operator tags apply the right swaps."""
        k1 = K_BASE["K1"]
        assert KPolynomial("K1", KOperator.PHI).expansion == KL * DR - KLR
        assert KPolynomial("K1", KOperator.PHIPSI).expansion == phi(psi(k1))
        assert KPolynomial("K2", KOperator.PSI).label == "Psi(K2)"

    def test_catalogue_has_no_duplicates(self):
        """K0 and its images coincide with kLR and are not repeated."""
        expansions = [k.expansion for k in CATALOGUE]
        assert len(expansions) == len(set(expansions))
        assert KLR not in expansions


class TestFactorisation:
    """Test trial division against the catalogue."""

    def test_gram_minus_one(self):
        """kL * kR * K3 factors as [kL, kR, K3]."""
        p = KL * KR * KPolynomial("K3").expansion
        result = factor_against_klist(p)
        assert result.as_dict() == {"kL": 1, "kR": 1, "K3": 1}
        assert result.remainder == ONE
        assert str(result) == "kL * kR * K3"

    def test_one(self):
        """One has no factors."""
        result = factor_against_klist(ONE)
        assert result.factors == ()
        assert result.remainder == ONE

    def test_k1_squared_psi_k2(self):
        """K1^2 * Psi(K2) factors with multiplicities."""
        psi_k2 = KPolynomial("K2", KOperator.PSI)
        p = KPolynomial("K1").expansion ** 2 * psi_k2.expansion
        result = factor_against_klist(p)
        assert result.as_dict() == {"K1": 2, "Psi(K2)": 1}
        assert result.remainder == ONE

    def test_reconstruction(self):
        """Product of factors times remainder equals the input."""
        rng = random.Random(13)
        for _ in range(20):
            p = random_poly(rng) * KPolynomial("K13").expansion * KL
            assert factor_against_klist(p).product() == p

    def test_nontrivial_remainder(self):
        """A polynomial outside the catalogue is left as the remainder."""
        p = D + DL + 1
        result = factor_against_klist(p)
        assert result.factors == ()
        assert result.remainder == p
