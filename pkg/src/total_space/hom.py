"""Graded Hom tables between the tilting summands on X+ and X-.

X+ summands are rank-2 irreducibles on LGr; Hom(A, B) = A^dual (x) B is
expanded by Clebsch-Gordan and pushed down. X- summands are filtered bundles
whose pieces are line powers; Hom(A, B) is filtered by the pieces of
A^dual (x) B and reassembled one extension at a time.
"""
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from src.bundles.calculus import cg_tensor_rank2, filtered_tensor
from src.bundles.les import les_resolve
from src.bundles.models import (
    ExtensionMarker,
    FilteredBundle,
    Indeterminate,
    LESMode,
    LESProblem,
    MapKind,
    Rank2Irrep,
    Resolution,
)
from src.bwb.spaces import SpaceTag
from src.core.utils import parallel_map
from src.total_space.models import XMINUS, XPLUS, GradedPosition, GradedTable, assemble_table
from src.total_space.pushforward import pushforward_graded
from src.total_space.xminus import ZERO_ROW, koszul_piece


class Side(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


class TiltingSummand(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    side: Side
    irrep: Optional[Rank2Irrep] = None
    filtered: Optional[FilteredBundle] = None

    def __str__(self) -> str:
        return self.name


def _plus(name: str, a: int, b: int) -> TiltingSummand:
    return TiltingSummand(name=name, side=Side.PLUS, irrep=Rank2Irrep(a=a, b=b))


def _minus(name: str, bundle: FilteredBundle) -> TiltingSummand:
    return TiltingSummand(name=name, side=Side.MINUS, filtered=bundle)


PLUS_SUMMANDS: Tuple[TiltingSummand, ...] = (
    _plus("O", 0, 0),
    _plus("S^dual", 1, 0),
    _plus("wedge2 S^dual", 1, 1),
    _plus("(wedge2 S^dual)^2", 2, 2),
)

# wedge^2 S^dual and L agree away from the flopped loci up to fiber weight -1
MINUS_SUMMANDS: Tuple[TiltingSummand, ...] = (
    _minus("O", FilteredBundle.trivial()),
    _minus("Sigma^dual", FilteredBundle.sigma().dual()),
    _minus("L", FilteredBundle.line(1, -1, name="L")),
    _minus("L^2", FilteredBundle.line(2, -2, name="L^2")),
)

SUMMANDS: Dict[Side, Tuple[TiltingSummand, ...]] = {Side.PLUS: PLUS_SUMMANDS, Side.MINUS: MINUS_SUMMANDS}

CORRESPONDENCE: Tuple[Tuple[TiltingSummand, TiltingSummand], ...] = tuple(zip(PLUS_SUMMANDS, MINUS_SUMMANDS))


def summand(side: Union[Side, str], name: str) -> TiltingSummand:
    for candidate in SUMMANDS[Side(side)]:
        if candidate.name == name:
            return candidate
    raise KeyError(f"no summand {name!r} on the {Side(side).value} side")


def _hom_plus(source: TiltingSummand, target: TiltingSummand, cutoff: int,
              workers: Optional[int]) -> GradedTable:
    bundle = cg_tensor_rank2(source.irrep.dual(), target.irrep, SpaceTag.LGR)
    return pushforward_graded(XPLUS, bundle, cutoff, workers)


def _delta_rules(bundle: FilteredBundle, index: int, fiber_degree: int) -> Dict[int, MapKind]:
    """Rules for H^q(P_index) -> H^(q+1)(B_(index-1)) in the chain B_0 = P_0, ..., B_last = bundle"""
    marker = bundle.markers[index - 1]
    quotient = bundle.pieces[index]
    if marker is ExtensionMarker.ZERO and index == 1:
        return {q: MapKind.FORCED_ZERO for q in range(XMINUS.base_dimension + 1)}
    # H^0(O)_0 = C cups with the extension class onto H^1(L^3)_1 = C
    if marker is ExtensionMarker.NONZERO and quotient.exponent == 0 and fiber_degree - quotient.shift == 0:
        return {0: MapKind.NONZERO_CUP}
    return {}


def _filtered_row(bundle: FilteredBundle, fiber_degree: int):
    """(row, euler, positions, firings) for one fiber degree of H(X-, bundle)"""
    pieces: List[Union[Resolution, Indeterminate]] = [
        koszul_piece(p.exponent, fiber_degree - p.shift) for p in bundle.pieces
    ]
    euler = sum(p.euler_characteristic for p in pieces)
    positions = [pos for p in pieces if isinstance(p, Indeterminate) for pos in p.positions]
    if positions:
        return ZERO_ROW, euler, positions, []

    current = pieces[0].dimensions
    firings: List[int] = []
    for index in range(1, len(pieces)):
        problem = LESProblem(
            mode=LESMode.MIDDLE,
            sub=current,
            known=pieces[index].dimensions,
            rules=_delta_rules(bundle, index, fiber_degree),
            label=f"{bundle.name or bundle} piece {index}",
        )
        result = les_resolve(problem)
        if isinstance(result, Indeterminate):
            return ZERO_ROW, euler, list(result.positions), firings
        if result.cup_firings:
            firings.append(index)
        current = result.dimensions
    return current, euler, [], firings


def filtered_cohomology(bundle: FilteredBundle, cutoff: int, workers: Optional[int] = None) -> GradedTable:
    """Graded H(X-, bundle); fiber degrees start at the lowest piece shift when it is negative"""
    min_degree = min(0, min(p.shift for p in bundle.pieces))
    degrees = list(range(min_degree, cutoff + 1))
    results = parallel_map(lambda n: _filtered_row(bundle, n), degrees, workers)

    rows, euler, positions, firings = [], [], [], []
    for n, (row, chi, open_positions, fired) in zip(degrees, results):
        rows.append(row)
        euler.append(chi)
        positions.extend(GradedPosition(fiber_degree=n, detail=p) for p in open_positions)
        firings.extend((n, index) for index in fired)
    return assemble_table(XMINUS.tag, cutoff, min_degree, rows, euler, positions, firings)


def hom_bundle(source: TiltingSummand, target: TiltingSummand) -> FilteredBundle:
    bundle = filtered_tensor(source.filtered.dual(), target.filtered)
    return bundle.model_copy(update={"name": f"Hom({source}, {target})"})


def hom_table(side: Union[Side, str], source: TiltingSummand, target: TiltingSummand, cutoff: int,
              workers: Optional[int] = None) -> GradedTable:
    side = Side(side)
    if source.side is not side or target.side is not side:
        raise ValueError(f"summands {source}, {target} do not both live on the {side.value} side")
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    if side is Side.PLUS:
        return _hom_plus(source, target, cutoff, workers)
    return filtered_cohomology(hom_bundle(source, target), cutoff, workers)
