import itertools

import numpy as np
import pytest
from pydantic import ValidationError

from src.bundles.models import BundleExpression, LinePower, Rank2Irrep, Resolution
from src.bwb.engine import bwb
from src.bwb.spaces import PV, SpaceTag, pv_weight
from src.core.exceptions import IncomparableTablesError
from src.total_space.hom import CORRESPONDENCE, MINUS_SUMMANDS, Side, _filtered_row, hom_bundle, hom_table, summand
from src.total_space.models import XMINUS, XPLUS, Y, TotalSpaceTag, assemble_table
from src.total_space.pushforward import pushforward_graded, xplus_piece, y_piece
from src.total_space.xminus import koszul_piece, xminus_cohomology, xminus_structure_sheaf_by_filtration


def fourth_powers(count: int):
    return tuple((k + 1) ** 4 for k in range(count))


class TestGradedTable:
    """Test the graded dimension grid."""

    def table(self, rows, min_degree=0):
        return assemble_table(
            TotalSpaceTag.XMINUS, len(rows) - 1 + min_degree, min_degree, rows,
            [sum((-1) ** i * d for i, d in enumerate(r)) for r in rows],
        )

    def test_lookup(self):
        """Test lookup."""
        table = self.table([(0, 0, 0, 0), (1, 0, 0, 0), (2, 1, 0, 0)], min_degree=-1)
        assert table.row(1) == (2, 1, 0, 0)
        assert table.dim(0, 0) == 1
        assert table.h0_sequence(0) == (1, 2)
        assert table.total(1) == 1
        assert table.higher_nonzero() == [(1, 1, 1)]
        assert not table.higher_vanishes
        assert table.negative_h0() == []

    def test_row_out_of_range(self):
        """Test row out of range."""
        with pytest.raises(IndexError):
            self.table([(1, 0, 0, 0)]).row(1)

    def test_grid_is_read_only(self):
        """Test grid is read only."""
        table = self.table([(1, 0, 0, 0)])
        assert isinstance(table.dimensions, np.ndarray)
        with pytest.raises(ValueError):
            table.dimensions[0, 0] = 5

    def test_shape_is_checked(self):
        """Test shape is checked."""
        with pytest.raises(ValidationError):
            assemble_table(TotalSpaceTag.XPLUS, 1, 0, [(1, 0, 0, 0)], [1])

    def test_negative_dimensions_rejected(self):
        """Test negative dimensions rejected."""
        with pytest.raises(ValidationError):
            self.table([(-1, 0, 0, 0)])

    def test_equality_and_serialisation(self):
        """Test equality and serialisation."""
        first, second = self.table([(1, 0, 0, 0)]), self.table([(1, 0, 0, 0)])
        assert first == second
        assert first.model_dump()["dimensions"] == [[1, 0, 0, 0]]

    def test_comparable(self):
        """Test comparability checks."""
        with pytest.raises(IncomparableTablesError):
            self.table([(1, 0, 0, 0)]).check_comparable(self.table([(1, 0, 0, 0), (2, 0, 0, 0)]))

    def test_summary(self):
        """Test summary."""
        summary = self.table([(1, 0, 0, 0), (0, 2, 0, 0)]).summary()
        assert summary["h0"] == [1, 0]
        assert summary["higher_nonzero"] == [[1, 1, 2]]


class TestTotalSpaces:
    """Test the three total spaces."""

    def test_bases(self):
        """Test total space bases."""
        assert XPLUS.base is SpaceTag.LGR
        assert Y.base is SpaceTag.PV
        assert XMINUS.ambient is TotalSpaceTag.Y
        assert XPLUS.fiber_dual == Rank2Irrep.of(2, 1)

    def test_xminus_needs_its_section(self):
        """Test X- needs its section."""
        with pytest.raises(ValidationError):
            XMINUS.model_validate({**XMINUS.model_dump(), "cutting_line_exponent": None})


class TestPushforward:
    """Test graded pushforwards to X+ and Y."""

    def test_xplus_structure_sheaf(self):
        """Test the X+ structure sheaf."""
        table = pushforward_graded(XPLUS, BundleExpression.of(SpaceTag.LGR, Rank2Irrep.line(0)), 6)
        assert table.h0_sequence() == fourth_powers(7)
        assert table.h0_sequence(0, 2) == (1, 16, 81)
        assert table.higher_vanishes

    def test_xplus_piece_with_a_twist(self):
        """Test an X+ piece with a twist."""
        # wedge^2 S^dual in fiber degree 0 is the 5-dimensional module
        assert xplus_piece(Rank2Irrep.line(1), 0) == (5, 0, 0, 0)

    def test_xplus_sums_terms(self):
        """Test X+ pushforwards sum over terms."""
        bundle = BundleExpression.of(SpaceTag.LGR, Rank2Irrep.line(0), Rank2Irrep.line(0))
        table = pushforward_graded(XPLUS, bundle, 2, workers=2)
        assert table.h0_sequence() == (2, 32, 162)

    def test_y_line_square(self):
        """Test L^2 on Y."""
        table = pushforward_graded(Y, BundleExpression.of(SpaceTag.PV, LinePower(exponent=2)), 10)
        assert table.higher_vanishes
        assert table.h0_sequence(0, 2) == (0, 0, 20)

    def test_y_piece_below_zero(self):
        """Test a Y piece below fiber degree zero."""
        assert y_piece(0, -1) == (0, 0, 0, 0)

    def test_y_structure_sheaf(self):
        """Test the Y structure sheaf."""
        # Sym^k (V/L)^dual (x) L^-2k has H^0 = Sigma^(2k,k) V^dual
        assert y_piece(0, 1) == (20, 0, 0, 0)

    def test_rejects_xminus(self):
        """Test X- is rejected."""
        with pytest.raises(ValueError):
            pushforward_graded(XMINUS, BundleExpression.of(SpaceTag.PV, LinePower(exponent=0)), 2)

    def test_rejects_wrong_base(self):
        """Test rejects wrong base."""
        with pytest.raises(ValueError):
            pushforward_graded(XPLUS, BundleExpression.of(SpaceTag.PV, LinePower(exponent=0)), 2)

    def test_rejects_negative_cutoff(self):
        """Test rejects negative cutoff."""
        with pytest.raises(ValueError):
            pushforward_graded(Y, BundleExpression.of(SpaceTag.PV, LinePower(exponent=0)), -1)


class TestXMinus:
    """Test the Koszul route on X-."""

    def test_structure_sheaf(self):
        """Test the X- structure sheaf."""
        table = xminus_cohomology(0, 8)
        assert table.h0_sequence() == fourth_powers(9)
        assert table.higher_vanishes

    def test_structure_sheaf_by_filtration(self):
        """Test the X- structure sheaf by filtration."""
        assert xminus_structure_sheaf_by_filtration(8) == fourth_powers(9)

    def test_cube_has_one_first_cohomology(self):
        """Test L^3 has a single first cohomology class."""
        table = xminus_cohomology(3, 8)
        assert table.is_resolved
        assert table.dim(1, 1) == 1
        assert table.total(1) == 1
        assert all(table.total(i) == 0 for i in (2, 3))

    def test_koszul_sub_term_twist(self):
        """Test piece k of L^j is cut by Sym^(k-1) (V/L)^dual (x) L^(j+1-2k) on PV."""
        for j in range(-3, 4):
            for k in range(1, 6):
                quotient = bwb(PV, pv_weight(line_power=j - 2 * k, sym_power=k)).euler_characteristic
                sub = bwb(PV, pv_weight(line_power=j + 1 - 2 * k, sym_power=k - 1)).euler_characteristic
                assert koszul_piece(j, k).euler_characteristic == quotient - sub

    @pytest.mark.parametrize("exponent", [2, 1, 0, -1, -2, -3])
    def test_no_higher_cohomology_up_to_square(self, exponent):
        """Test no higher cohomology up to L^2."""
        assert xminus_cohomology(exponent, 8).higher_vanishes

    def test_negative_degrees_are_zero(self):
        """Test negative degrees are zero."""
        table = xminus_cohomology(1, 3, min_degree=-2)
        assert table.row(-2) == (0, 0, 0, 0)
        assert table.negative_h0() == []

    def test_piece_below_zero(self):
        """Test piece below zero."""
        piece = koszul_piece(5, -1)
        assert isinstance(piece, Resolution)
        assert piece.dimensions == (0, 0, 0, 0)

    def test_euler_matches_rows(self):
        """Test Euler characteristics match rows."""
        table = xminus_cohomology(3, 5)
        for n in table.degrees:
            assert table.euler[n] == sum((-1) ** i * d for i, d in enumerate(table.row(n)))

    def test_rejects_negative_cutoff(self):
        """Test rejects negative cutoff."""
        with pytest.raises(ValueError):
            xminus_cohomology(0, -1)


class TestHomTables:
    """Test graded Hom between tilting summands."""

    def test_summand_lookup(self, minus_summands):
        """Test summand lookup."""
        assert summand("minus", "L") is minus_summands["L"]
        with pytest.raises(KeyError):
            summand(Side.PLUS, "Sigma^dual")

    def test_correspondence_pairs_names(self):
        """Test correspondence pairs names."""
        assert [(p.name, m.name) for p, m in CORRESPONDENCE] == [
            ("O", "O"), ("S^dual", "Sigma^dual"), ("wedge2 S^dual", "L"), ("(wedge2 S^dual)^2", "L^2"),
        ]

    def test_trivial_on_both_sides(self, plus_summands, minus_summands):
        """Test trivial on both sides."""
        plus = hom_table(Side.PLUS, plus_summands["O"], plus_summands["O"], 4)
        minus = hom_table(Side.MINUS, minus_summands["O"], minus_summands["O"], 4)
        assert plus.h0_sequence() == minus.h0_sequence() == fourth_powers(5)

    def test_o_to_l(self, plus_summands, minus_summands):
        """Test Hom(O, L) on both sides."""
        plus = hom_table(Side.PLUS, plus_summands["O"], plus_summands["wedge2 S^dual"], 2)
        minus = hom_table(Side.MINUS, minus_summands["O"], minus_summands["L"], 2)
        assert plus.dim(0, 0) == minus.dim(0, 0) == 5

    def test_sigma_dual_to_o(self, minus_summands):
        """Test Hom(Sigma^dual, O)."""
        table = hom_table(Side.MINUS, minus_summands["Sigma^dual"], minus_summands["O"], 2)
        assert table.h0_sequence(0, 1) == (0, 15)
        assert table.higher_vanishes

    def test_cup_fires_below_zero(self, minus_summands):
        """Test cup fires below zero."""
        bundle = hom_bundle(minus_summands["Sigma^dual"], minus_summands["L^2"])
        assert [(p.exponent, p.shift) for p in bundle.pieces] == [(3, -2), (0, -1)]
        table = hom_table(Side.MINUS, minus_summands["Sigma^dual"], minus_summands["L^2"], 3)
        assert table.min_degree == -2
        assert table.cup_firings == ((-1, 1),)
        assert table.row(-1) == (0, 0, 0, 0)
        assert table.higher_vanishes

    def test_sigma_dual_endomorphisms(self, minus_summands):
        """Test endomorphisms of Sigma^dual."""
        source = minus_summands["Sigma^dual"]
        table = hom_table(Side.MINUS, source, source, 3)
        assert table.min_degree == -1
        assert table.cup_firings == ((0, 1),)
        # only the identity survives in degree 0
        assert table.dim(0, 0) == 1
        assert table.higher_vanishes

    def test_plus_side_endomorphisms_of_s_dual(self, plus_summands):
        """Test endomorphisms of S^dual on X+."""
        source = plus_summands["S^dual"]
        table = hom_table(Side.PLUS, source, source, 3)
        assert table.dim(0, 0) == 1
        assert table.higher_vanishes

    def test_sides_must_match(self, plus_summands, minus_summands):
        """Test sides must match."""
        with pytest.raises(ValueError):
            hom_table(Side.PLUS, plus_summands["O"], minus_summands["O"], 2)

    def test_negative_cutoff(self, plus_summands):
        """Test negative cutoff."""
        with pytest.raises(ValueError):
            hom_table(Side.PLUS, plus_summands["O"], plus_summands["O"], -1)

    def test_filtered_rows_bounded_by_pieces(self):
        """Test every X- Hom row stays below the summed cohomology of its graded pieces."""
        for source, target in itertools.product(MINUS_SUMMANDS, repeat=2):
            bundle = hom_bundle(source, target)
            lowest = min(0, min(p.shift for p in bundle.pieces))
            for n in range(lowest, 7):
                pieces = [koszul_piece(p.exponent, n - p.shift) for p in bundle.pieces]
                assert all(isinstance(p, Resolution) for p in pieces), f"{bundle.name} degree {n}"
                bound = np.sum([p.dimensions for p in pieces], axis=0)
                row, _, positions, _ = _filtered_row(bundle, n)
                assert positions == []
                assert all(d <= b for d, b in zip(row, bound)), f"{bundle.name} degree {n}: {row} > {tuple(bound)}"
