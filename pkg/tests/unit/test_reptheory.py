"""
Tests for rep-theory: turn strings, dimensions, restriction, Gram matrices,
filtration, cellularity and module globalisation.
"""

from collections import Counter
from fractions import Fraction

import pytest

from blobalg.core.exceptions import (
    InvalidDiagramError,
    UnboundParameterError,
    WeightOutOfRangeError,
    ZeroParameterError,
)
from blobalg.params.kpoly import KPolynomial, phi, psi
from blobalg.params.laurent import D, DL, DR, KL, KLR, KR, ONE, ZERO, LaurentPoly
from blobalg.reptheory import (
    TurnString,
    check_cellularity,
    determinant,
    dimension,
    evaluated_rank,
    filtration_ideals,
    globalise_module,
    gram_matrix,
    periodic_generators,
    restrict_to_blob,
    semisimplicity_scan,
    standard_basis,
    weight_of,
    weights,
)
from blobalg.reptheory.gram import applicable_conditions, evaluated_determinant
from blobalg.reptheory.turnstrings import mirror_half, standard_kets
from blobalg.symplectic import PeriodicSymDiagram, enumerate_phi

K1 = KPolynomial("K1").expansion
K2 = KPolynomial("K2").expansion
K3 = KPolynomial("K3").expansion
K13 = KPolynomial("K13").expansion


def texts(strings):
    return [str(t) for t in strings]


@pytest.fixture
def k3_point():
    """d = dL = dR = 1, kL = kR = 2: K3 vanishes."""
    return {"d": 1, "dL": 1, "dR": 1, "kL": 2, "kR": 2, "kLR": 3}


class TestTurnStrings:
    """Tests for turn strings and standard bases."""

    def test_weight_set(self):
        """Weights run from -m to m-1."""
        assert weights(0) == [0]
        assert weights(3) == [-3, -2, -1, 0, 1, 2]

    def test_weight_out_of_range(self):
        """l = m is excluded."""
        with pytest.raises(WeightOutOfRangeError):
            standard_basis(2, 2)
        with pytest.raises(WeightOutOfRangeError):
            dimension(2, -3)

    def test_validity_rule(self):
        """Arcs may not span an o; unmatched letters stay outside the o's."""
        TurnString("RLo")
        TurnString("LoRR")
        for bad in ("RoL", "oL", "Ro", "RRLo", "LxR"):
            with pytest.raises(InvalidDiagramError):
                TurnString(bad)

    def test_signed_weight(self):
        """The sign is + exactly when the number of unmatched R's is odd."""
        assert TurnString("oRRR").weight == 1
        assert TurnString("LoRR").weight == -1
        assert TurnString("oo").weight == -2
        assert TurnString("RRL").weight == 0

    def test_ket_is_mirror(self):
        """A ket reads the turn string backwards with L and R exchanged."""
        assert mirror_half("LLo") == "oRR"
        assert TurnString("oRL").to_ket() == "RLo"
        assert TurnString.from_ket("oRR") == TurnString("LLo")

    def test_basis_m3_minus1(self):
        """S(-1) at rank 6."""
        assert texts(standard_basis(3, -1)) == ["LLo", "RLo", "oRL", "oRR"]

    def test_basis_m4_minus1(self):
        """S(-1) at rank 8."""
        assert texts(standard_basis(4, -1)) == ["LLLo", "LRLo", "LoRL", "LoRR", "RLLo"]

    def test_basis_m4_plus1(self):
        """S(+1) at rank 8."""
        assert texts(standard_basis(4, 1)) == ["LLoR", "RLoR", "oRLR", "oRRL", "oRRR"]

    def test_basis_weight_zero(self):
        """Every LR-string of length m."""
        basis = texts(standard_basis(4, 0))
        assert len(basis) == 16
        assert all(set(t) <= {"L", "R"} for t in basis)

    def test_fully_propagating(self):
        """S(-m) is spanned by the identity."""
        assert texts(standard_basis(2, -2)) == ["oo"]

    def test_dimension_examples(self):
        """Closed-form dimensions."""
        assert dimension(3, 0) == 8
        assert dimension(4, 1) == 5
        assert dimension(4, -1) == 5
        assert dimension(2, -2) == 1

    @pytest.mark.parametrize("m", range(0, 7))
    def test_dimension_matches_enumeration(self, m):
        """The closed form counts the valid turn strings."""
        for l in weights(m):
            assert len(standard_basis(m, l)) == dimension(m, l)

    @pytest.mark.parametrize("m", range(1, 5))
    def test_cellular_count(self, m):
        """The squares of the dimensions add up to the rank of the algebra."""
        assert sum(dimension(m, l) ** 2 for l in weights(m)) == len(enumerate_phi(m))


class TestWeights:
    """Tests for the weight of basis diagrams."""

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_anchors(self, m):
        """1 -> -m, e -> m-1, f -> -(m-1)."""
        gens = periodic_generators(m)
        assert weight_of(PeriodicSymDiagram.identity(m)) == -m
        assert weight_of(gens["e"]) == m - 1
        assert weight_of(gens["f"]) == -(m - 1)

    def test_partition_m2(self):
        """19 = 16 + 1 + 1 + 1."""
        counts = Counter(weight_of(d) for d in enumerate_phi(2))
        assert counts == {0: 16, -2: 1, -1: 1, 1: 1}


class TestRestriction:
    """Tests for restriction to the left blob subalgebra."""

    def test_weight_zero_m3(self):
        """One copy of each blob standard module."""
        sections = restrict_to_blob(3, 0)
        assert [s.ur for s in sections] == [3, 2, 1, 0]
        assert sorted(s.dimension for s in sections) == [1, 1, 3, 3]

    def test_ur_values_m3_minus1(self):
        """m - x even and l < 0: even ur only."""
        assert [s.ur for s in restrict_to_blob(3, -1)] == [2, 0]

    @pytest.mark.parametrize("m", range(1, 6))
    def test_ur_values_by_parity(self, m):
        """ur runs down in steps of two from m - x or m - x - 1 to 0 or 1."""
        for l in weights(m):
            if l == 0:
                continue
            x = abs(l)
            odd = (m - x) % 2 == 1
            if odd and l < 0:
                top, bottom = m - x - 1, 0
            elif odd:
                top, bottom = m - x, 1
            elif l > 0:
                top, bottom = m - x - 1, 1
            else:
                top, bottom = m - x, 0
            expected = list(range(top, bottom - 1, -2))
            assert [s.ur for s in restrict_to_blob(m, l)] == expected, (m, l)

    @pytest.mark.parametrize("m", range(1, 6))
    def test_dimensions_add_up(self, m):
        """The sections fill the module."""
        for l in weights(m):
            assert sum(s.dimension for s in restrict_to_blob(m, l)) == dimension(m, l)

    @pytest.mark.parametrize("m,l", [(3, 0), (3, -1), (4, 1), (4, -1)])
    def test_sections_count_turn_strings(self, m, l):
        """Section dimension is the number of basis strings with that ur."""
        counts = Counter(t.ur for t in standard_basis(m, l))
        for section in restrict_to_blob(m, l):
            assert counts[section.ur] == section.dimension


class TestDeterminant:
    """Tests for fraction-free elimination over the Laurent ring."""

    def test_empty(self):
        """The empty determinant is one."""
        assert determinant([]) == ONE

    def test_two_by_two(self):
        """d^2 - 1."""
        assert determinant([[D, ONE], [ONE, D]]) == D * D - ONE

    def test_row_swap(self):
        """A zero pivot is swapped out with a sign change."""
        assert determinant([[ZERO, KL], [KL, D]]) == -(KL * KL)

    def test_singular(self):
        """Dependent rows give zero."""
        assert determinant([[D, D], [D, D]]) == ZERO
        assert determinant([[ZERO, ONE, D], [ZERO, KL, KR], [ZERO, D, ONE]]) == ZERO

    def test_three_by_three(self):
        """Cofactor expansion agrees on a tridiagonal matrix."""
        matrix = [[D, ONE, ZERO], [ONE, D, ONE], [ZERO, ONE, D]]
        assert determinant(matrix) == D * D * D - D - D

    def test_laurent_entries(self):
        """Negative exponents survive elimination."""
        inverse = LaurentPoly.monomial({"kLR": -1})
        assert determinant([[inverse, ONE], [ONE, KLR]]) == ZERO
        assert determinant([[inverse, ZERO], [ZERO, DL]]) == DL * inverse


class TestGram:
    """Tests for Gram matrices of the standard modules."""

    def test_single_propagating_line(self):
        """S(-1) at rank 2 is one-dimensional with <o|o> = 1."""
        report = gram_matrix(1, -1)
        assert report.dimension == 1
        assert report.determinant == ONE

    def test_matrix_m3_minus1(self):
        """Entries in the order oRR, oRL, RLo, LLo."""
        report = gram_matrix(3, -1)
        assert [t.to_ket() for t in report.basis] == ["oRR", "oRL", "RLo", "LLo"]
        assert report.matrix == [
            [DR * KR, KR, ZERO, ZERO],
            [KR, D, ONE, ZERO],
            [ZERO, ONE, D, KL],
            [ZERO, ZERO, KL, DL * KL],
        ]

    def test_determinant_m3_minus1(self):
        """kL kR K3."""
        assert gram_matrix(3, -1).determinant == KL * KR * K3

    def test_determinant_m3_zero(self):
        """kLR^4 K1^4 PhiPsi(K1) Psi(K2) Phi(K2) K13."""
        expected = KLR**4 * K1**4 * phi(psi(K1)) * psi(K2) * phi(K2) * K13
        assert gram_matrix(3, 0).determinant == expected

    def test_factorisation_reassembles(self):
        """The factor list times the remainder is the determinant."""
        for l in weights(3):
            report = gram_matrix(3, l)
            assert report.factorisation.product() == report.determinant

    def test_factorisation_m3_minus1(self):
        """The catalogue recognises K3."""
        factors = gram_matrix(3, -1).factorisation.as_dict()
        assert factors["kL"] == 1
        assert factors["kR"] == 1
        assert factors["K3"] == 1

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_symmetric(self, m):
        """<a|b> = <b|a>."""
        for l in weights(m):
            matrix = gram_matrix(m, l).matrix
            for i, row in enumerate(matrix):
                for j, entry in enumerate(row):
                    assert entry == matrix[j][i]

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_entries_are_monomials(self, m):
        """Each pairing is a monomial or zero."""
        for l in weights(m):
            for row in gram_matrix(m, l).matrix:
                assert all(e.is_zero() or e.is_monomial() for e in row)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_nonzero(self, m):
        """No Gram determinant vanishes identically."""
        for l in weights(m):
            assert not gram_matrix(m, l).determinant.is_zero()

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_specialisation(self, m, generic_point):
        """Evaluating the determinant commutes with evaluating the matrix."""
        for l in weights(m):
            report = gram_matrix(m, l)
            assert report.determinant.evaluate(generic_point) == evaluated_determinant(
                report.matrix, generic_point
            )

    def test_rank_drop_on_k3(self, k3_point):
        """At K3 = 0 the form on S(-1) at rank 6 is degenerate but nonzero."""
        assert K3.evaluate(k3_point) == 0
        report = gram_matrix(3, -1)
        assert 0 < report.rank_at(k3_point) < report.dimension
        assert evaluated_rank(report.matrix, k3_point) == report.rank_at(k3_point)

    def test_k1_kills_weight_zero(self, generic_point):
        """K1 = dL dR - kLR divides the weight-zero determinant."""
        point = dict(generic_point, dL=2, dR=3, kLR=6)
        assert gram_matrix(3, 0).determinant.evaluate(point) == 0

    def test_model(self):
        """Report serialisation."""
        model = gram_matrix(3, -1).to_model()
        assert model.m == 3
        assert model.weight == -1
        assert model.dimension == 4
        assert model.basis == ["LLo", "RLo", "oRL", "oRR"]
        assert {f.factor for f in model.factors} == {"kL", "kR", "K3"}
        assert model.remainder == "1"

    def test_weight_checked(self):
        """Out-of-range weights are rejected."""
        with pytest.raises(WeightOutOfRangeError):
            gram_matrix(2, 5)


class TestSemisimplicity:
    """Tests for the semisimplicity scan."""

    def test_applicability(self):
        """K3/K13 for odd m, their Phi and Psi images for even m, PhiPsi from m = 5."""
        assert applicable_conditions(2) == []
        assert [k.label for k in applicable_conditions(3)] == ["K3", "K13"]
        assert [k.label for k in applicable_conditions(4)] == [
            "Phi(K3)",
            "Phi(K13)",
            "Psi(K3)",
            "Psi(K13)",
        ]
        assert [k.label for k in applicable_conditions(5)] == [
            "K3",
            "K13",
            "PhiPsi(K3)",
            "PhiPsi(K13)",
        ]

    def test_generic_point(self, generic_point):
        """A generic point is semisimple."""
        report = semisimplicity_scan(3, generic_point)
        assert report.semisimple
        assert set(report.determinants) == set(weights(3))
        assert not any(report.conditions.values())

    def test_k3_point(self, k3_point):
        """K3 = 0 flags weight -1."""
        report = semisimplicity_scan(3, k3_point)
        assert not report.semisimple
        assert -1 in report.singular_weights
        assert report.conditions["K3"]

    def test_zero_parameter(self, generic_point):
        """Every parameter must be a unit."""
        point = dict(generic_point, kL=0, kR=Fraction(0))
        with pytest.raises(ZeroParameterError) as exc:
            semisimplicity_scan(2, point)
        assert exc.value.details["params"] == ["kL", "kR"]

    def test_missing_parameter(self, generic_point):
        """A partial point is rejected."""
        point = {k: v for k, v in generic_point.items() if k != "kLR"}
        with pytest.raises(UnboundParameterError):
            semisimplicity_scan(2, point)


class TestFiltration:
    """Tests for the ideal chain."""

    def test_m1(self):
        """S_0 has the four diagrams without propagating lines."""
        report = filtration_ideals(1)
        assert [link.label for link in report.chain] == ["S_0", "S_1"]
        assert [link.size for link in report.chain] == [4, 5]
        assert report.passed

    def test_m2(self):
        """S_0 <= S_1 <= T_1 <= S_2."""
        report = filtration_ideals(2)
        assert [link.label for link in report.chain] == ["S_0", "S_1", "T_1", "S_2"]
        assert [link.size for link in report.chain] == [16, 17, 18, 19]
        assert report.passed
        assert report.checks > 19 * 19

    def test_top_is_everything(self):
        """S_m is the whole algebra."""
        report = filtration_ideals(3, exhaustive=False)
        assert report.chain[-1].basis == frozenset(enumerate_phi(3))
        assert report.passed


class TestCellularity:
    """Tests for the cellular structure."""

    @pytest.mark.parametrize("m", [1, 2])
    def test_axioms(self, m):
        """Involution, sections and lower terms."""
        report = check_cellularity(m)
        assert report.failures == []
        assert report.passed

    def test_flip_fixes_generators(self):
        """e* = e and f* = f."""
        for g in periodic_generators(3).values():
            assert g.flip() == g

    def test_witnesses(self):
        """Every weight has a ket with monomial self-pairing."""
        report = check_cellularity(1)
        assert set(report.witnesses) == {-1, 0}
        assert report.witnesses[-1] == "o"


class TestGlobaliseModule:
    """Tests for globalisation of standard module bases."""

    def test_from_empty(self):
        """S(0) at rank 0 globalises to both one-strand kets."""
        assert globalise_module([""]) == ["L", "R"]
        assert globalise_module([""], right=True) == ["L", "R"]

    def test_doubling(self):
        """2, 4, 8 along S(0)."""
        kets = [""]
        sizes = []
        for _ in range(3):
            kets = globalise_module(kets)
            sizes.append(len(kets))
        assert sizes == [2, 4, 8]
        assert kets == sorted(standard_kets(3, 0))

    @pytest.mark.parametrize("m", range(1, 5))
    def test_weight_flip(self, m):
        """G sends weight l to -l, G' keeps it."""
        for l in weights(m - 1):
            kets = standard_kets(m - 1, l)
            assert globalise_module(kets) == sorted(standard_kets(m, -l))
            assert globalise_module(kets, right=True) == sorted(standard_kets(m, l))
            assert len(globalise_module(kets)) == dimension(m, -l)

    @pytest.mark.parametrize("m", [0, 1])
    def test_commute(self, m):
        """G G' = G' G."""
        for l in weights(m):
            kets = standard_kets(m, l)
            left_first = globalise_module(globalise_module(kets), right=True)
            right_first = globalise_module(globalise_module(kets, right=True))
            assert left_first == right_first

    def test_empty(self):
        """No kets, no module."""
        assert globalise_module([]) == []
