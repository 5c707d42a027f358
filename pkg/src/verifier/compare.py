"""Graded comparison of End(T+) on X+ with End(T-) on X-.

The two sides are computed by unrelated routes: Sp4 Borel-Weil-Bott on LGr
for X+, the graded Koszul complex over PV for X-.
"""
import time
from typing import Any, Dict, List, Optional, Sequence

from src.core.config import settings
from src.core.exceptions import BoundaryCaseError
from src.core.utils import log_execution_time, logger, parallel_map
from src.total_space.hom import CORRESPONDENCE, Side, hom_table
from src.total_space.models import GradedTable
from src.total_space.xminus import xminus_structure_sheaf_by_filtration
from src.verifier.models import CheckOutcome, ClaimId, VerificationReport

TITLE = "End(T-) on X- agrees with End(T+) on X+ in every fiber degree"
MAX_OFFSET = 2
# the filtration route is only run this far
STRUCTURE_SHEAF_DEGREE_MAX = 10


def matching_offset(plus: Sequence[int], minus: GradedTable) -> Optional[int]:
    """Smallest |offset| <= 2 with plus[n] == minus H^0 at n + offset on the overlap"""
    for offset in sorted(range(-MAX_OFFSET, MAX_OFFSET + 1), key=lambda o: (abs(o), o)):
        overlap = [n for n in range(len(plus)) if minus.min_degree <= n + offset <= minus.cutoff]
        if overlap and all(plus[n] == minus.dim(n + offset, 0) for n in overlap):
            return offset
    return None


def _cell(plus_table: GradedTable, minus_table: GradedTable, degree_max: int) -> Dict[str, Any]:
    plus_table.check_comparable(minus_table)
    plus = plus_table.h0_sequence(0, degree_max)
    minus = minus_table.h0_sequence(0, degree_max)
    equal = [p == m for p, m in zip(plus, minus)]
    cell: Dict[str, Any] = {"plus": list(plus), "minus": list(minus), "equal": all(equal)}
    if not all(equal):
        cell["mismatched_degrees"] = [n for n, ok in enumerate(equal) if not ok]
        cell["offset"] = matching_offset(plus, minus_table)
    return cell


@log_execution_time
def compare_end_algebras(degree_max: Optional[int] = None, workers: Optional[int] = None) -> VerificationReport:
    started = time.perf_counter()
    degree_max = settings.COMPARE_DEGREE_MAX if degree_max is None else degree_max
    if degree_max < 0:
        raise BoundaryCaseError(f"degree cutoff must be nonnegative, got {degree_max}")

    cells = [(row, column) for row in CORRESPONDENCE for column in CORRESPONDENCE]

    def tables(cell):
        (plus_source, minus_source), (plus_target, minus_target) = cell
        return (
            hom_table(Side.PLUS, plus_source, plus_target, degree_max, workers=1),
            hom_table(Side.MINUS, minus_source, minus_target, degree_max, workers=1),
        )

    outcome = CheckOutcome(parameters={"degree_max": degree_max})
    matrix: Dict[str, Dict[str, Any]] = {}
    plus_total = [0] * (degree_max + 1)
    minus_total = [0] * (degree_max + 1)
    for cell, (plus_table, minus_table) in zip(cells, parallel_map(tables, cells, workers)):
        (plus_source, minus_source), (plus_target, minus_target) = cell
        label = f"({plus_source}, {plus_target}) ~ ({minus_source}, {minus_target})"
        entry = _cell(plus_table, minus_table, degree_max)
        matrix[label] = entry
        plus_total = [a + b for a, b in zip(plus_total, entry["plus"])]
        minus_total = [a + b for a, b in zip(minus_total, entry["minus"])]
        outcome.indeterminate.extend(f"{label} {p}" for p in minus_table.indeterminate)
        if not entry["equal"]:
            outcome.counterexamples.append({
                "cell": label,
                "degrees": entry["mismatched_degrees"],
                "offset": entry["offset"],
            })
        if plus_source == plus_target and (entry["plus"][0] < 1 or entry["minus"][0] < 1):
            outcome.counterexamples.append({"cell": label, "check": "identity endomorphism in degree 0"})
        for n, h0 in minus_table.negative_h0():
            outcome.counterexamples.append({"cell": label, "check": "negative fiber degree", "fiber_degree": n, "h0": h0})

    aggregate_equal = plus_total == minus_total
    outcome.tables["cells"] = matrix
    outcome.tables["aggregate"] = {"plus": plus_total, "minus": minus_total, "equal": aggregate_equal}
    if outcome.counterexamples and aggregate_equal:
        outcome.notes.append("graded mismatch although the summed dimensions agree")

    _structure_sheaf_routes(degree_max, matrix, outcome)
    report = outcome.to_report(ClaimId.END_COMPARE, TITLE, started)
    logger.info("End algebra comparison finished", degree_max=degree_max, verdict=report.verdict.value)
    return report


def _structure_sheaf_routes(degree_max: int, matrix: Dict[str, Dict[str, Any]], outcome: CheckOutcome) -> None:
    """(O, O) on X- against the filtration route and (n+1)^4"""
    top = min(degree_max, STRUCTURE_SHEAF_DEGREE_MAX)
    koszul: List[int] = next(iter(matrix.values()))["minus"][:top + 1]
    filtration = list(xminus_structure_sheaf_by_filtration(top))
    closed_form = [(k + 1) ** 4 for k in range(top + 1)]
    outcome.tables["structure_sheaf"] = {"koszul": koszul, "filtration": filtration, "closed_form": closed_form}
    if not koszul == filtration == closed_form:
        outcome.counterexamples.append({"check": "structure sheaf routes", "koszul": koszul, "filtration": filtration})
