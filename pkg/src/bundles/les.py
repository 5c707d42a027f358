"""Dimension chase through the long exact sequence of a short exact sequence.

Only ranks of the maps are ever needed. A rank is fixed when a side is zero,
or by one of the named rules on ``MapKind``; otherwise the position is
reported as indeterminate rather than guessed.
"""
from typing import List, Optional, Tuple, Union

from src.bundles.models import (
    Indeterminate,
    IndeterminatePosition,
    LESMode,
    LESProblem,
    MapKind,
    Resolution,
)
from src.core.exceptions import InconsistentSequenceError
from src.core.utils import logger


def _euler(dims) -> int:
    return sum((-1) ** i * d for i, d in enumerate(dims))


def _check_nonnegative(problem: LESProblem) -> None:
    for name, table in (("sub", problem.sub), ("known", problem.known)):
        if any(d < 0 for d in table):
            raise InconsistentSequenceError(f"{problem.label or 'sequence'}: negative dimension in {name} table {table}")


def _connecting_rank(problem: LESProblem, degree: int, positions: List[IndeterminatePosition],
                     firings: List[int]) -> Optional[int]:
    """Rank of delta^degree: H^degree(C) -> H^(degree+1)(A)"""
    source = problem.known[degree]
    target = problem.sub[degree + 1] if degree + 1 <= problem.top_degree else 0
    if source == 0 or target == 0:
        return 0
    kind = problem.rule(degree)
    if kind is MapKind.FORCED_ZERO:
        return 0
    if kind is MapKind.NONZERO_CUP and min(source, target) == 1:
        firings.append(degree)
        return 1
    positions.append(IndeterminatePosition(
        degree=degree, map=f"delta ({kind.value})", source_dimension=source,
        target_dimension=target, label=problem.label,
    ))
    return None


def _solve_middle(problem: LESProblem) -> Union[Resolution, Indeterminate]:
    a, c = problem.sub, problem.known
    positions: List[IndeterminatePosition] = []
    firings: List[int] = []
    ranks = [_connecting_rank(problem, i, positions, firings) for i in range(problem.top_degree + 1)]
    euler = _euler(a) + _euler(c)
    if positions:
        return Indeterminate(positions=tuple(positions), euler_characteristic=euler)

    dims = []
    for i in range(problem.top_degree + 1):
        incoming = ranks[i - 1] if i > 0 else 0
        # coker(delta^(i-1)) in A, then ker(delta^i) in C
        dims.append((a[i] - incoming) + (c[i] - ranks[i]))
    return _finish(problem, tuple(dims), euler, firings)


def _map_rank(problem: LESProblem, degree: int, positions: List[IndeterminatePosition]) -> Optional[int]:
    """Rank of f^degree: H^degree(A) -> H^degree(B)"""
    source, target = problem.sub[degree], problem.known[degree]
    if source == 0 or target == 0:
        return 0
    kind = problem.rule(degree)
    c = problem.support_dimension
    if kind is MapKind.FORCED_ZERO:
        return 0
    if c is not None and degree > c + 1:
        if source != target:
            raise InconsistentSequenceError(
                f"{problem.label or 'sequence'}: H^{degree} must be an isomorphism above the support, "
                f"got {source} -> {target}"
            )
        return source
    if c is not None and degree > c:
        if target > source:
            raise InconsistentSequenceError(
                f"{problem.label or 'sequence'}: H^{degree} cannot surject {source} -> {target}"
            )
        return target
    if kind is MapKind.INJECTIVE_H0 and degree == 0:
        if source > target:
            raise InconsistentSequenceError(
                f"{problem.label or 'sequence'}: H^0 cannot inject {source} -> {target}"
            )
        return source
    positions.append(IndeterminatePosition(
        degree=degree, map=f"f ({kind.value})", source_dimension=source,
        target_dimension=target, label=problem.label,
    ))
    return None


def _solve_quotient(problem: LESProblem) -> Union[Resolution, Indeterminate]:
    a, b = problem.sub, problem.known
    positions: List[IndeterminatePosition] = []
    ranks = [_map_rank(problem, i, positions) for i in range(problem.top_degree + 1)]
    euler = _euler(b) - _euler(a)
    if positions:
        return Indeterminate(positions=tuple(positions), euler_characteristic=euler)

    dims = []
    for i in range(problem.top_degree + 1):
        following = (a[i + 1] - ranks[i + 1]) if i < problem.top_degree else 0
        # coker(f^i) then ker(f^(i+1))
        dims.append((b[i] - ranks[i]) + following)
    return _finish(problem, tuple(dims), euler, [])


def _finish(problem: LESProblem, dims: Tuple[int, ...], euler: int, firings: List[int]) -> Resolution:
    if any(d < 0 for d in dims):
        raise InconsistentSequenceError(f"{problem.label or 'sequence'}: chase produced negative dimensions {dims}")
    if _euler(dims) != euler:
        raise InconsistentSequenceError(
            f"{problem.label or 'sequence'}: Euler characteristic {_euler(dims)} != {euler}"
        )
    return Resolution(dimensions=dims, euler_characteristic=euler, cup_firings=tuple(firings))


def les_resolve(problem: LESProblem) -> Union[Resolution, Indeterminate]:
    """Solve for the unknown term of ``problem`` or report where the chase is stuck"""
    _check_nonnegative(problem)
    if problem.mode is LESMode.MIDDLE:
        result = _solve_middle(problem)
    else:
        result = _solve_quotient(problem)
    if isinstance(result, Indeterminate):
        logger.debug("Exact sequence left indeterminate", label=problem.label,
                     positions=[str(p) for p in result.positions])
    return result
