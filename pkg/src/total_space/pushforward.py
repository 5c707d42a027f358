"""Graded cohomology on X+ and Y by pushing down to the base.

On a total space Tot(F -> B) the fiber-degree-n piece of H(E) is
H(B, E (x) Sym^n F^dual).
"""
import functools
from typing import List, Optional, Tuple

from src.bundles.calculus import cg_tensor_rank2, sym_power_rank2
from src.bundles.models import BundleExpression, LinePower, Rank2Irrep
from src.bwb.engine import bwb
from src.bwb.spaces import LGR, PV, lgr_weight, pv_weight
from src.core.utils import parallel_map
from src.total_space.models import GradedTable, TotalSpace, TotalSpaceTag, assemble_table


def _euler(dims) -> int:
    return sum((-1) ** i * d for i, d in enumerate(dims))


@functools.lru_cache(maxsize=None)
def y_piece(exponent: int, fiber_degree: int) -> Tuple[int, ...]:
    """H(Y, L^exponent) in fiber degree k: H(PV, Sym^k (V/L)^dual (x) L^(exponent - 2k))"""
    if fiber_degree < 0:
        return (0,) * (PV.dimension + 1)
    weight = pv_weight(line_power=exponent - 2 * fiber_degree, sym_power=fiber_degree)
    return bwb(PV, weight).dimensions()


@functools.lru_cache(maxsize=None)
def xplus_piece(term: Rank2Irrep, fiber_degree: int) -> Tuple[int, ...]:
    """H(LGr, Sigma^term S^dual (x) Sym^n (S^dual (x) wedge^2 S^dual))"""
    totals = [0] * (LGR.dimension + 1)
    for sym, m in sym_power_rank2(Rank2Irrep(a=2, b=1), fiber_degree):
        for irrep, k in cg_tensor_rank2(term, sym):
            for i, d in enumerate(bwb(LGR, lgr_weight(irrep.a, irrep.b)).dimensions()):
                totals[i] += m * k * d
    return tuple(totals)


def _piece(space: TotalSpace, bundle: BundleExpression, fiber_degree: int) -> Tuple[int, ...]:
    totals = [0] * (space.base_dimension + 1)
    for term, multiplicity in bundle:
        if space.tag is TotalSpaceTag.XPLUS:
            if not isinstance(term, Rank2Irrep):
                raise TypeError(f"X+ bundles are rank-2 irreducibles on LGr, got {term}")
            dims = xplus_piece(term, fiber_degree)
        else:
            if not isinstance(term, LinePower):
                raise TypeError(f"Y bundles are line powers on PV, got {term}")
            dims = y_piece(term.exponent, fiber_degree)
        for i, d in enumerate(dims):
            totals[i] += multiplicity * d
    return tuple(totals)


def pushforward_graded(space: TotalSpace, bundle: BundleExpression, cutoff: int,
                       workers: Optional[int] = None) -> GradedTable:
    if space.tag is TotalSpaceTag.XMINUS:
        raise ValueError("X- is handled by its Koszul complex, see xminus_cohomology")
    if bundle.space != space.base:
        raise ValueError(f"bundle lives on {bundle.space.value}, {space.tag.value} sits over {space.base.value}")
    if cutoff < 0:
        raise ValueError(f"cutoff must be nonnegative, got {cutoff}")

    rows: List[Tuple[int, ...]] = parallel_map(lambda n: _piece(space, bundle, n), range(cutoff + 1), workers)
    return assemble_table(space.tag, cutoff, 0, rows, [_euler(r) for r in rows])
