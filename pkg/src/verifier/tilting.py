import time
from typing import Any, Dict, List, Optional, Set, Tuple, Union

from src.bundles.models import Resolution
from src.core.config import settings
from src.core.exceptions import BoundaryCaseError
from src.core.utils import log_execution_time, logger, parallel_map
from src.total_space.hom import SUMMANDS, Side, TiltingSummand, hom_bundle, hom_table
from src.total_space.models import GradedTable
from src.total_space.xminus import koszul_piece
from src.verifier.models import CheckOutcome, ClaimId, VerificationReport

TITLES = {
    Side.PLUS: "T+ = O + S^dual + wedge2 S^dual + (wedge2 S^dual)^2 has no higher self-Ext on X+",
    Side.MINUS: "T- = O + Sigma^dual + L + L^2 has no higher self-Ext on X-",
}

Pair = Tuple[TiltingSummand, TiltingSummand]


def summand_pairs(side: Side) -> List[Pair]:
    summands = SUMMANDS[side]
    return [(source, target) for source in summands for target in summands]


def pair_label(source: TiltingSummand, target: TiltingSummand) -> str:
    return f"Hom({source}, {target})"


def tilting_tables(side: Union[Side, str], degree_max: int,
                   workers: Optional[int] = None) -> List[Tuple[TiltingSummand, TiltingSummand, GradedTable]]:
    side = Side(side)
    pairs = summand_pairs(side)
    tables = parallel_map(lambda pair: hom_table(side, pair[0], pair[1], degree_max, workers=1), pairs, workers)
    return [(source, target, table) for (source, target), table in zip(pairs, tables)]


def expected_cup_firings(source: TiltingSummand, target: TiltingSummand, table: GradedTable) -> Set[Tuple[int, int]]:
    """Where an L^3 piece carries H^1 that the next piece has to cancel"""
    bundle = hom_bundle(source, target)
    expected = set()
    for index, piece in enumerate(bundle.pieces):
        if piece.exponent != 3:
            continue
        for n in table.degrees:
            result = koszul_piece(3, n - piece.shift)
            if isinstance(result, Resolution) and result.dimensions[1]:
                expected.add((n, index + 1))
    return expected


def check_pairs(side: Side, tables, outcome: CheckOutcome) -> None:
    """Record every higher-cohomology, open-position and cup-rule violation"""
    for source, target, table in tables:
        label = pair_label(source, target)
        for n, degree, dimension in table.higher_nonzero():
            outcome.counterexamples.append(
                {"pair": label, "fiber_degree": n, "degree": degree, "dimension": dimension}
            )
        outcome.indeterminate.extend(f"{label} {position}" for position in table.indeterminate)
        if side is Side.MINUS:
            for n, h0 in table.negative_h0():
                outcome.counterexamples.append(
                    {"pair": label, "check": "negative fiber degree", "fiber_degree": n, "h0": h0}
                )
            expected = expected_cup_firings(source, target, table)
            fired = set(table.cup_firings)
            if expected != fired:
                outcome.counterexamples.append(
                    {"pair": label, "check": "cup rule", "expected": sorted(expected), "fired": sorted(fired)}
                )


@log_execution_time
def verify_tilting(side: Union[Side, str], degree_max: Optional[int] = None,
                   workers: Optional[int] = None) -> VerificationReport:
    started = time.perf_counter()
    side = Side(side)
    degree_max = settings.VANISHING_DEGREE_MAX if degree_max is None else degree_max
    if degree_max < 0:
        raise BoundaryCaseError(f"degree cutoff must be nonnegative, got {degree_max}")

    tables = tilting_tables(side, degree_max, workers)
    outcome = CheckOutcome(parameters={"side": side.value, "degree_max": degree_max, "pairs": len(tables)})
    check_pairs(side, tables, outcome)

    pair_tables: Dict[str, Any] = {}
    for source, target, table in tables:
        entry: Dict[str, Any] = {"h0": list(table.h0_sequence(table.min_degree))}
        if table.min_degree < 0:
            entry["min_degree"] = table.min_degree
        if table.cup_firings:
            entry["cup_firings"] = [list(f) for f in table.cup_firings]
        pair_tables[pair_label(source, target)] = entry
    outcome.tables["pairs"] = pair_tables
    if degree_max < 1:
        outcome.notes.append(f"weak cutoff: only fiber degrees up to {degree_max} were checked")

    claim = ClaimId.TILTING_PLUS if side is Side.PLUS else ClaimId.TILTING_MINUS
    report = outcome.to_report(claim, TITLES[side], started)
    logger.info("Tilting check finished", side=side.value, degree_max=degree_max, verdict=report.verdict.value)
    return report
