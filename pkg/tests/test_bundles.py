import itertools

import pytest
from pydantic import ValidationError

from src.bundles.calculus import (
    cg_tensor_rank2,
    dual_expression,
    filtered_tensor,
    line_power,
    sym_power_rank2,
    tensor_expressions,
)
from src.bundles.les import les_resolve
from src.bundles.models import (
    BundleExpression,
    ExtensionMarker,
    FilteredBundle,
    FilteredPiece,
    Indeterminate,
    LESMode,
    LESProblem,
    LinePower,
    MapKind,
    Rank2Irrep,
    Resolution,
    is_receptacle,
)
from src.bwb.spaces import SpaceTag
from src.core.exceptions import InconsistentSequenceError, UnsupportedPlethysmError

STD = Rank2Irrep.of(1, 0)


def irreps(bound: int):
    for a in range(-bound, bound + 1):
        for b in range(-bound, a + 1):
            yield Rank2Irrep.of(a, b)


class TestBundleExpression:
    """Test direct sums of irreducible bundles."""

    def test_multiplicities_merge(self):
        """Test multiplicities merge."""
        expression = BundleExpression.of(SpaceTag.LGR, STD, STD, Rank2Irrep.line(1))
        assert expression.multiplicity(STD) == 2
        assert expression.rank == 5
        assert str(expression) == "2*(1,0) + (1,1)"

    def test_canonical_order(self):
        """Test canonical order."""
        left = BundleExpression.of(SpaceTag.LGR, Rank2Irrep.line(1), STD)
        right = BundleExpression.of(SpaceTag.LGR, STD, Rank2Irrep.line(1))
        assert left == right

    def test_multiplicity_must_be_positive(self):
        """Test multiplicity must be positive."""
        with pytest.raises(ValidationError):
            BundleExpression(space=SpaceTag.LGR, terms=((STD, 0),))

    def test_rank2_needs_ordered_entries(self):
        """Test rank-2 irreducibles need ordered entries."""
        with pytest.raises(ValidationError):
            Rank2Irrep.of(0, 1)

    def test_addition_checks_space(self):
        """Test addition checks space."""
        with pytest.raises(ValueError):
            BundleExpression.of(SpaceTag.LGR, STD) + line_power(1)

    def test_dual(self):
        """Test duals."""
        expression = BundleExpression.of(SpaceTag.LGR, Rank2Irrep.of(2, 0), Rank2Irrep.line(1))
        assert dual_expression(expression) == BundleExpression.of(
            SpaceTag.LGR, Rank2Irrep.of(0, -2), Rank2Irrep.line(-1)
        )
        assert LinePower(exponent=3).dual() == LinePower(exponent=-3)


class TestClebschGordan:
    """Test rank-2 tensor products and symmetric powers."""

    def test_std_squared(self):
        """Test the standard representation squared."""
        assert cg_tensor_rank2(STD, STD) == BundleExpression.of(SpaceTag.LGR, Rank2Irrep.of(2, 0), Rank2Irrep.line(1))

    def test_with_a_line(self):
        """Test tensoring with a line bundle shifts the weight."""
        assert cg_tensor_rank2(Rank2Irrep.of(3, 1), Rank2Irrep.line(-2)) == BundleExpression.of(
            SpaceTag.LGR, Rank2Irrep.of(1, -1)
        )

    def test_rank_is_preserved(self):
        """Test rank is preserved."""
        for x, y in itertools.product(list(irreps(5)), repeat=2):
            assert cg_tensor_rank2(x, y).rank == x.rank * y.rank

    def test_commutative(self):
        """Test tensor products commute."""
        for x, y in itertools.product(list(irreps(4)), repeat=2):
            assert cg_tensor_rank2(x, y) == cg_tensor_rank2(y, x)

    def test_tensor_expressions_distribute(self):
        """Test tensor expressions distribute."""
        left = BundleExpression.of(SpaceTag.LGR, STD, Rank2Irrep.line(0))
        product = tensor_expressions(left, BundleExpression.of(SpaceTag.LGR, STD))
        assert product.multiplicity(STD) == 1
        assert product.multiplicity(Rank2Irrep.of(2, 0)) == 1
        assert product.multiplicity(Rank2Irrep.line(1)) == 1
        assert product.rank == 6

    def test_tensor_expressions_reject_lines(self):
        """Test tensor expressions reject lines."""
        with pytest.raises(TypeError):
            tensor_expressions(line_power(1), line_power(2))

    @pytest.mark.parametrize("x,n,expected", [
        ((1, 0), 3, (3, 0)),
        ((2, 1), 2, (4, 2)),
        ((1, 1), 4, (4, 4)),
        ((1, 0), 0, (0, 0)),
    ])
    def test_sym_powers(self, x, n, expected):
        """Test symmetric powers of rank-2 irreducibles."""
        assert sym_power_rank2(Rank2Irrep.of(*x), n) == BundleExpression.of(SpaceTag.LGR, Rank2Irrep.of(*expected))

    def test_sym_power_rank(self):
        """Test symmetric power ranks."""
        for n in range(8):
            assert sym_power_rank2(STD, n).rank == n + 1

    def test_general_plethysm_unsupported(self):
        """Test general plethysm unsupported."""
        with pytest.raises(UnsupportedPlethysmError):
            sym_power_rank2(Rank2Irrep.of(2, 0), 2)

    def test_negative_power(self):
        """Test negative power."""
        with pytest.raises(ValueError):
            sym_power_rank2(STD, -1)


class TestFilteredBundles:
    """Test filtered bundles on X- and their tensor products."""

    def test_sigma(self):
        """Test the Sigma extension."""
        sigma = FilteredBundle.sigma()
        assert sigma.rank == 2
        assert [(p.exponent, p.shift) for p in sigma.pieces] == [(1, 0), (-2, 1)]
        assert sigma.markers == (ExtensionMarker.NONZERO,)

    def test_sigma_dual(self):
        """Test the dual of Sigma."""
        dual = FilteredBundle.sigma().dual()
        assert [(p.exponent, p.shift) for p in dual.pieces] == [(2, -1), (-1, 0)]
        assert dual.markers == (ExtensionMarker.NONZERO,)
        assert dual.name == "Sigma^dual"

    def test_receptacle(self):
        """Test the receptacle condition."""
        assert is_receptacle(FilteredPiece(exponent=1, shift=0), FilteredPiece(exponent=-2, shift=1))
        assert not is_receptacle(FilteredPiece(exponent=1, shift=0), FilteredPiece(exponent=-2, shift=0))

    def test_nonzero_extension_needs_receptacle(self):
        """Test nonzero extension needs receptacle."""
        with pytest.raises(ValidationError):
            FilteredBundle(
                pieces=(FilteredPiece(exponent=0), FilteredPiece(exponent=-1, shift=1)),
                markers=(ExtensionMarker.NONZERO,),
            )

    def test_marker_count(self):
        """Test marker count."""
        with pytest.raises(ValidationError):
            FilteredBundle(pieces=(FilteredPiece(exponent=0), FilteredPiece(exponent=1)))

    def test_twist(self):
        """Test twisting a filtered bundle."""
        twisted = FilteredBundle.sigma().twist(2, -1)
        assert [(p.exponent, p.shift) for p in twisted.pieces] == [(3, -1), (0, 0)]

    def test_line_tensor(self):
        """Test the tensor product of two lines."""
        product = filtered_tensor(FilteredBundle.line(1, -1), FilteredBundle.line(1, -1))
        assert [(p.exponent, p.shift) for p in product.pieces] == [(2, -2)]
        assert product.markers == ()

    def test_sigma_dual_tensor_sigma(self):
        """Test Sigma^dual (x) Sigma keeps both nonzero extensions."""
        product = filtered_tensor(FilteredBundle.sigma().dual(), FilteredBundle.sigma())
        assert [(p.exponent, p.shift) for p in product.pieces] == [(3, -1), (0, 0), (0, 0), (-3, 1)]
        assert product.markers == (ExtensionMarker.NONZERO, ExtensionMarker.ZERO, ExtensionMarker.NONZERO)
        assert product.name == "Sigma^dual (x) Sigma"

    def test_line_tensor_sigma_keeps_marker(self):
        """Test line tensor sigma keeps marker."""
        product = filtered_tensor(FilteredBundle.line(2, -2), FilteredBundle.sigma())
        assert [(p.exponent, p.shift) for p in product.pieces] == [(3, -2), (0, -1)]
        assert product.markers == (ExtensionMarker.NONZERO,)


class TestLESResolve:
    """Test the dimension chase through long exact sequences."""

    def test_cup_product_fires(self):
        """Test cup product fires."""
        problem = LESProblem(mode=LESMode.MIDDLE, sub=(0, 1), known=(1, 0), rules={0: MapKind.NONZERO_CUP})
        result = les_resolve(problem)
        assert isinstance(result, Resolution)
        assert result.dimensions == (0, 0)
        assert result.cup_firings == (0,)

    def test_forced_zero_splits(self):
        """Test forced zero splits."""
        problem = LESProblem(mode=LESMode.MIDDLE, sub=(0, 1), known=(1, 0), rules={0: MapKind.FORCED_ZERO})
        result = les_resolve(problem)
        assert result.dimensions == (1, 1)
        assert not result.higher_vanishes

    def test_unknown_map_is_indeterminate(self):
        """Test unknown map is indeterminate."""
        problem = LESProblem(mode=LESMode.MIDDLE, sub=(0, 2), known=(3, 0), label="twisted sequence")
        result = les_resolve(problem)
        assert isinstance(result, Indeterminate)
        assert result.euler_characteristic == 1
        assert result.positions[0].degree == 0
        assert "twisted sequence" in str(result.positions[0])

    def test_cup_product_needs_a_line(self):
        """Test cup product needs a line."""
        problem = LESProblem(mode=LESMode.MIDDLE, sub=(0, 2), known=(3, 0), rules={0: MapKind.NONZERO_CUP})
        assert isinstance(les_resolve(problem), Indeterminate)

    def test_zero_sides_need_no_rules(self):
        """Test zero sides need no rules."""
        result = les_resolve(LESProblem(mode=LESMode.MIDDLE, sub=(2, 3, 0), known=(0, 3, 0)))
        assert result.dimensions == (2, 6, 0)

    def test_euler_characteristic_is_additive(self):
        """Test the Euler characteristic is additive."""
        rules = {i: MapKind.FORCED_ZERO for i in range(3)}
        for sub in itertools.product(range(3), repeat=3):
            for known in itertools.product(range(3), repeat=3):
                result = les_resolve(LESProblem(mode=LESMode.MIDDLE, sub=sub, known=known, rules=rules))
                expected = sum((-1) ** i * (a + c) for i, (a, c) in enumerate(zip(sub, known)))
                assert result.euler_characteristic == expected
                assert sum((-1) ** i * d for i, d in enumerate(result.dimensions)) == expected

    @pytest.mark.parametrize("rules", [
        {i: MapKind.FORCED_ZERO for i in range(4)},
        {0: MapKind.NONZERO_CUP, 1: MapKind.FORCED_ZERO, 2: MapKind.FORCED_ZERO, 3: MapKind.FORCED_ZERO},
        {},
    ])
    def test_extension_bounded_by_its_pieces(self, rules):
        """Test an extension never has more cohomology than its two pieces together."""
        resolved = 0
        for sub in itertools.product(range(3), repeat=4):
            for known in itertools.product(range(3), repeat=4):
                result = les_resolve(LESProblem(mode=LESMode.MIDDLE, sub=sub, known=known, rules=rules))
                if isinstance(result, Indeterminate):
                    continue
                resolved += 1
                assert all(d <= a + c for d, a, c in zip(result.dimensions, sub, known))
        assert resolved > 0

    def test_quotient_injective_h0(self):
        """Test the quotient when H^0 injects."""
        problem = LESProblem(
            mode=LESMode.QUOTIENT, sub=(1, 0, 0, 0, 0), known=(6, 0, 0, 0, 0),
            rules={0: MapKind.INJECTIVE_H0}, support_dimension=3,
        )
        assert les_resolve(problem).dimensions == (5, 0, 0, 0, 0)

    def test_quotient_surjects_above_support(self):
        """Test quotient surjects above support."""
        problem = LESProblem(mode=LESMode.QUOTIENT, sub=(0, 0, 0, 0, 2), known=(0, 0, 0, 0, 1), support_dimension=3)
        result = les_resolve(problem)
        assert result.dimensions == (0, 0, 0, 1, 0)
        assert result.euler_characteristic == -1

    def test_quotient_forced_zero(self):
        """Test quotient forced zero."""
        problem = LESProblem(mode=LESMode.QUOTIENT, sub=(0, 1), known=(0, 1), rules={1: MapKind.FORCED_ZERO})
        assert les_resolve(problem).dimensions == (1, 1)

    def test_quotient_cannot_surject(self):
        """Test quotient cannot surject."""
        problem = LESProblem(mode=LESMode.QUOTIENT, sub=(0, 0, 0, 0, 1), known=(0, 0, 0, 0, 2), support_dimension=3)
        with pytest.raises(InconsistentSequenceError):
            les_resolve(problem)

    def test_quotient_needs_isomorphism_far_above_support(self):
        """Test quotient needs isomorphism far above support."""
        problem = LESProblem(mode=LESMode.QUOTIENT, sub=(0, 0, 0, 0, 1), known=(0, 0, 0, 0, 2), support_dimension=2)
        with pytest.raises(InconsistentSequenceError):
            les_resolve(problem)

    def test_injective_h0_violated(self):
        """Test an impossible injection on H^0 is rejected."""
        problem = LESProblem(mode=LESMode.QUOTIENT, sub=(2,), known=(1,), rules={0: MapKind.INJECTIVE_H0})
        with pytest.raises(InconsistentSequenceError):
            les_resolve(problem)

    def test_negative_input(self):
        """Test negative input."""
        with pytest.raises(InconsistentSequenceError):
            les_resolve(LESProblem(mode=LESMode.MIDDLE, sub=(-1, 0), known=(0, 0)))

    def test_problem_validation(self):
        """Test problem validation."""
        with pytest.raises(ValidationError):
            LESProblem(mode=LESMode.MIDDLE, sub=(0, 1), known=(0,))
        with pytest.raises(ValidationError):
            LESProblem(mode=LESMode.MIDDLE, sub=(0,), known=(0,), support_dimension=3)
