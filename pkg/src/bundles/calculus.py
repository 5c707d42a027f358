from collections import Counter
from typing import List, Tuple

from src.bundles.models import (
    BundleExpression,
    ExtensionMarker,
    FilteredBundle,
    FilteredPiece,
    LinePower,
    Rank2Irrep,
    is_receptacle,
)
from src.bwb.spaces import SpaceTag
from src.core.exceptions import UnsupportedPlethysmError


def cg_tensor_rank2(x: Rank2Irrep, y: Rank2Irrep, space: SpaceTag = SpaceTag.LGR) -> BundleExpression:
    """(a,b) (x) (c,d) = sum over i in [0, min(a-b, c-d)] of (a+c-i, b+d+i)"""
    span = min(x.a - x.b, y.a - y.b)
    terms = [Rank2Irrep(a=x.a + y.a - i, b=x.b + y.b + i) for i in range(span + 1)]
    return BundleExpression.of(space, *terms)


def sym_power_rank2(x: Rank2Irrep, n: int, space: SpaceTag = SpaceTag.LGR) -> BundleExpression:
    if n < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {n}")
    if x.a - x.b > 1:
        raise UnsupportedPlethysmError(f"Sym^{n} of {x} needs general plethysm")
    # (b+1, b) = std (x) det^b, and Sym^n std is irreducible
    return BundleExpression.of(space, Rank2Irrep(a=n * x.a, b=n * x.b))


def tensor_expressions(left: BundleExpression, right: BundleExpression) -> BundleExpression:
    """Distribute (x) over two sums of rank-2 irreducibles"""
    if left.space != right.space:
        raise ValueError(f"cannot tensor bundles on {left.space.value} and {right.space.value}")
    counts: Counter = Counter()
    for x, m in left:
        for y, k in right:
            if not isinstance(x, Rank2Irrep) or not isinstance(y, Rank2Irrep):
                raise TypeError("tensor_expressions only handles rank-2 irreducibles")
            for term, mult in cg_tensor_rank2(x, y, left.space):
                counts[term] += m * k * mult
    return BundleExpression(space=left.space, terms=tuple(counts.items()))


def dual_expression(expression: BundleExpression) -> BundleExpression:
    return BundleExpression(space=expression.space, terms=tuple((t.dual(), m) for t, m in expression))


def line_power(exponent: int) -> BundleExpression:
    return BundleExpression.of(SpaceTag.PV, LinePower(exponent=exponent))


def _product_marker(x: FilteredBundle, y: FilteredBundle, first: Tuple[int, int], second: Tuple[int, int],
                    sub: FilteredPiece, quotient: FilteredPiece) -> ExtensionMarker:
    (i, j), (k, l) = first, second
    if i + j == k + l:
        return ExtensionMarker.ZERO
    if i == k and l == j + 1:
        marker = y.markers[j]
    elif j == l and k == i + 1:
        marker = x.markers[i]
    else:
        return ExtensionMarker.UNKNOWN
    if marker is ExtensionMarker.NONZERO and not is_receptacle(sub, quotient):
        return ExtensionMarker.UNKNOWN
    return marker


def filtered_tensor(x: FilteredBundle, y: FilteredBundle) -> FilteredBundle:
    """Tensor two filtered bundles; pieces ordered by layer i + j, then by i"""
    index: List[Tuple[int, int]] = sorted(
        ((i, j) for i in range(x.rank) for j in range(y.rank)),
        key=lambda ij: (ij[0] + ij[1], ij[0]),
    )
    pieces = tuple(
        FilteredPiece(
            exponent=x.pieces[i].exponent + y.pieces[j].exponent,
            shift=x.pieces[i].shift + y.pieces[j].shift,
        )
        for i, j in index
    )
    markers = tuple(
        _product_marker(x, y, index[p], index[p + 1], pieces[p], pieces[p + 1])
        for p in range(len(index) - 1)
    )
    name = f"{x.name} (x) {y.name}" if x.name and y.name else None
    return FilteredBundle(pieces=pieces, markers=markers, name=name)
