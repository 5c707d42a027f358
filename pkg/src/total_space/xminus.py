"""Graded cohomology of line powers on X-, a divisor in Y cut out by a section of L.

The section is linear along the fibers, so the Koszul complex
L^(j-1)<1> -> L^j -> O_X- (x) L^j splits into one short exact sequence per
fiber degree k, each a sequence of bundles on PV:

    Sym^(k-1) (V/L)^dual (x) L^(j+1-2k) -> Sym^k (V/L)^dual (x) L^(j-2k) -> piece k
"""
import functools
from typing import List, Optional, Tuple, Union

from src.bundles.les import les_resolve
from src.bundles.models import Indeterminate, LESMode, LESProblem, MapKind, Resolution
from src.bwb.engine import bwb
from src.bwb.spaces import PV, pv_weight
from src.core.utils import logger, parallel_map
from src.total_space.models import XMINUS, GradedPosition, GradedTable, assemble_table
from src.total_space.pushforward import y_piece

ZERO_ROW = (0,) * (PV.dimension + 1)


@functools.lru_cache(maxsize=None)
def koszul_piece(exponent: int, fiber_degree: int) -> Union[Resolution, Indeterminate]:
    """H(X-, L^exponent) in fiber degree ``fiber_degree``"""
    if fiber_degree < 0:
        return Resolution(dimensions=ZERO_ROW, euler_characteristic=0)
    section = XMINUS.section_fiber_degree
    cut = XMINUS.cutting_line_exponent
    problem = LESProblem(
        mode=LESMode.QUOTIENT,
        sub=y_piece(exponent - cut, fiber_degree - section),
        known=y_piece(exponent, fiber_degree),
        # multiplication by the section is injective on sheaves
        rules={0: MapKind.INJECTIVE_H0},
        label=f"Koszul L^{exponent} degree {fiber_degree}",
    )
    return les_resolve(problem)


def xminus_cohomology(exponent: int, cutoff: int, min_degree: int = 0,
                      workers: Optional[int] = None) -> GradedTable:
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")
    degrees = list(range(min_degree, cutoff + 1))
    pieces = parallel_map(lambda k: koszul_piece(exponent, k), degrees, workers)

    rows: List[Tuple[int, ...]] = []
    euler: List[int] = []
    positions: List[GradedPosition] = []
    for k, piece in zip(degrees, pieces):
        euler.append(piece.euler_characteristic)
        if isinstance(piece, Indeterminate):
            rows.append(ZERO_ROW)
            positions.extend(GradedPosition(fiber_degree=k, detail=p) for p in piece.positions)
        else:
            rows.append(piece.dimensions)
    if positions:
        logger.warning("Koszul chase left positions open", exponent=exponent, count=len(positions))
    return assemble_table(XMINUS.tag, cutoff, min_degree, rows, euler, indeterminate=positions)


@functools.lru_cache(maxsize=None)
def _pv_euler(sym_power: int, line_power: int) -> int:
    return bwb(PV, pv_weight(line_power=line_power, sym_power=sym_power)).euler_characteristic


@functools.lru_cache(maxsize=None)
def _filtered_euler(sym_power: int, line_power: int) -> int:
    """chi(PV, Sym^k (L^perp/L)^dual (x) L^p) peeled off the filtration of Sym^k (V/L)^dual"""
    total = _pv_euler(sym_power, line_power)
    # pieces Sym^(k-i) (L^perp/L)^dual (x) L^i, from L -> (V/L)^dual -> (L^perp/L)^dual
    for i in range(1, sym_power + 1):
        total -= _filtered_euler(sym_power - i, line_power + i)
    return total


def xminus_structure_sheaf_by_filtration(cutoff: int) -> Tuple[int, ...]:
    """H^0(X-, O) in fiber degrees 0..cutoff without the Koszul complex.

    X- is the total space of (L^perp/L) (x) L^2 over PV, and its higher
    cohomology vanishes, so each piece is an Euler characteristic.
    """
    return tuple(_filtered_euler(k, -2 * k) for k in range(cutoff + 1))
