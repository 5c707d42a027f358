import functools
from typing import Dict, List, Optional, Tuple, Union

from src.bundles.les import les_resolve
from src.bundles.models import Indeterminate, LESMode, LESProblem, MapKind
from src.bwb.models import (
    CohomologyTable,
    Counterexample,
    FamilyCertificate,
    FamilyClaim,
    IrreducibleSummand,
    ParameterBox,
)
from src.bwb.spaces import GR24, LGR, Space, gr_weight
from src.core.exceptions import InconsistentSequenceError, InvalidParameterBoxError, NonDominantWeightError
from src.core.utils import logger, parallel_map
from src.weights.models import AffineForm, AffineWeight, RootSystemType, Weight
from src.weights.root_system import dotted_normalize, rho

# LGr is cut out of Gr(2,V) by a section of wedge^2 S^dual
HYPERPLANE_SUPPORT_DIMENSION = 3


@functools.lru_cache(maxsize=None)
def bwb(space: Space, levi_weight: Weight) -> CohomologyTable:
    """Cohomology of the irreducible homogeneous bundle with Levi weight ``levi_weight``"""
    if levi_weight.root_system != space.root_system:
        raise ValueError(f"{space} needs a {space.root_system} weight, got {levi_weight.root_system}")
    if not levi_weight.is_levi_dominant(space.levi_blocks):
        raise NonDominantWeightError(f"{levi_weight} is not dominant for the Levi of {space}")

    shift = rho(space.root_system)
    result = dotted_normalize(levi_weight + shift)
    if result.singular:
        return CohomologyTable.empty(space.tag)
    highest = result.dominant - shift
    return CohomologyTable(
        space=space.tag,
        entries={result.length: (IrreducibleSummand(weight=highest),)},
    )


def _stabilization_forms(space: Space, weight: AffineWeight) -> List[AffineForm]:
    shifted = weight.shifted(rho(space.root_system)).entries
    forms = [shifted[i] - shifted[j] for i in range(len(shifted)) for j in range(i + 1, len(shifted))]
    if space.root_system.kind is RootSystemType.C:
        forms += list(shifted)
        forms += [shifted[i] + shifted[j] for i in range(len(shifted)) for j in range(i + 1, len(shifted))]
    return forms


def _stabilized(space: Space, weight: AffineWeight, box: ParameterBox, points: List[Dict[str, int]]) -> bool:
    """Every chamber wall is crossed in the growth direction on each upper face of the box"""
    if not points:
        return False
    for form in _stabilization_forms(space, weight):
        for name in form.parameters:
            coefficient = form.coefficient(name)
            top = box.range_of(name).high
            for point in points:
                if point[name] != top:
                    continue
                value = form.evaluate(point)
                if value == 0 or (value > 0) != (coefficient > 0):
                    return False
    return True


def bwb_family(space: Space, weight: AffineWeight, box: ParameterBox,
               claim: FamilyClaim = FamilyClaim.NO_HIGHER_COHOMOLOGY,
               workers: Optional[int] = None) -> FamilyCertificate:
    """Check ``claim`` at every lattice point of ``box``; counterexamples are exhaustive"""
    box.check()
    missing = [p for p in weight.parameters if p not in box.names]
    if missing:
        raise InvalidParameterBoxError(f"box {box.describe()} does not range over {missing}")

    points = list(box.points())

    def evaluate(point: Dict[str, int]) -> Tuple[Dict[str, int], Weight, CohomologyTable]:
        instance = weight.instantiate(point)
        return point, instance, bwb(space, instance)

    results = parallel_map(evaluate, points, workers)
    counterexamples = tuple(
        Counterexample(point=point, weight=instance, table=table)
        for point, instance, table in results
        if not claim.holds(table)
    )
    certificate = FamilyCertificate(
        space=space.tag,
        weight=weight,
        box=box,
        claim=claim,
        points_checked=len(points),
        counterexamples=counterexamples,
        stabilized=_stabilized(space, weight, box, points),
    )
    logger.info(
        "Family sweep finished",
        space=space.tag.value,
        weight=str(weight),
        points=len(points),
        counterexamples=len(counterexamples),
        stabilized=certificate.stabilized,
    )
    return certificate


def lgr_via_hyperplane(levi_weight: Weight) -> Union[CohomologyTable, Indeterminate]:
    """Dimensions of H(LGr, E) from wedge^2 S (x) E -> E -> E|LGr on Gr(2,V)"""
    if levi_weight.root_system != LGR.root_system:
        raise ValueError(f"expected an LGr weight, got {levi_weight.root_system}")
    a, b = levi_weight.entries
    if a < b:
        raise NonDominantWeightError(f"{levi_weight} is not dominant for the Levi of {LGR}")

    twisted = bwb(GR24, gr_weight(a - 1, b - 1)).dimensions()
    ambient = bwb(GR24, gr_weight(a, b)).dimensions()
    problem = LESProblem(
        mode=LESMode.QUOTIENT,
        sub=twisted,
        known=ambient,
        rules={0: MapKind.INJECTIVE_H0},
        support_dimension=HYPERPLANE_SUPPORT_DIMENSION,
        label=f"LGr hyperplane {levi_weight}",
    )
    result = les_resolve(problem)
    if isinstance(result, Indeterminate):
        return result
    if any(result.dimensions[LGR.dimension + 1:]):
        raise InconsistentSequenceError(f"hyperplane route left cohomology above degree {LGR.dimension}")
    return CohomologyTable.from_dimensions(LGR.tag, result.dimensions[:LGR.dimension + 1])
