"""Checks for the six vanishing and nonvanishing statements the flop rests on.

Every claim pins the lower end of its parameter ranges; callers only move the
upper ends and the fiber-degree cutoff.
"""
import time
from typing import Callable, Dict, List, Optional, Tuple, Union

from src.bundles.models import BundleExpression, Indeterminate, LinePower, Rank2Irrep
from src.bwb.engine import bwb, bwb_family, lgr_via_hyperplane
from src.bwb.models import FamilyCertificate, ParameterBox
from src.bwb.spaces import GR24, LGR, PV, SpaceTag, gr_weight, lgr_weight
from src.core.config import settings
from src.core.exceptions import BoundaryCaseError, UnknownClaimError
from src.core.utils import log_execution_time, logger, parallel_map
from src.total_space.hom import Side
from src.total_space.models import XPLUS, Y
from src.total_space.pushforward import pushforward_graded
from src.total_space.xminus import xminus_cohomology
from src.verifier.models import LEMMA_IDS, CheckOutcome, ClaimId, VerificationReport
from src.verifier.tilting import check_pairs, tilting_tables
from src.weights.models import AffineForm, AffineWeight, Weight

K = AffineForm.build(k=1)
M = AffineForm.build(m=1)

# smallest parameter values each claim must include
BOUNDARIES: Dict[ClaimId, Dict[str, int]] = {
    ClaimId.GR24_VANISHING: {"k": 0, "m": -2},
    ClaimId.LGR_VANISHING: {"k": 0, "m": -1},
    ClaimId.PV_VANISHING: {"k": 1, "m": -3},
    ClaimId.XMINUS_VANISHING: {"m": -2},
}

TITLES: Dict[ClaimId, str] = {
    ClaimId.GR24_VANISHING: "H^>0(Gr(2,V), Sym^k S^dual (x) (wedge2 S)^-m) = 0 for m >= -2, k >= 0",
    ClaimId.LGR_VANISHING: "H^>0(LGr(V), Sym^k S^dual (x) (wedge2 S)^-m) = 0 for m >= -1, k >= 0",
    ClaimId.XPLUS_BUNDLES: "Ext^>0(T+, T+) = 0 on X+",
    ClaimId.PV_VANISHING: "H^>0(PV, Sym^k (V/L)^dual (x) L^-m) = 0 for k >= 1, m >= k-1",
    ClaimId.XMINUS_VANISHING: "H^>0(X-, L^-m) = 0 for m >= -2",
    ClaimId.XMINUS_L3: "H^1(X-, L^3) = C and H^>1(X-, L^3) = 0",
}


def parse_claim(lemma_id: Union[str, ClaimId]) -> ClaimId:
    try:
        claim = ClaimId(str(lemma_id.value if isinstance(lemma_id, ClaimId) else lemma_id))
    except ValueError:
        raise UnknownClaimError(f"unknown lemma id {lemma_id!r}") from None
    if claim not in LEMMA_IDS:
        raise UnknownClaimError(f"{claim.value} is not a lemma id")
    return claim


def parameter_range(claim: ClaimId, name: str, low: Optional[int], high: Optional[int],
                    default_high: int) -> Tuple[int, int]:
    boundary = BOUNDARIES[claim][name]
    if low is not None and low != boundary:
        raise BoundaryCaseError(f"claim {claim.value} must start {name} at {boundary}, got {low}")
    high = default_high if high is None else high
    if high < boundary:
        raise BoundaryCaseError(f"claim {claim.value}: {name} <= {high} excludes the boundary case {name} = {boundary}")
    return boundary, high


def _degree_cutoff(degree_max: Optional[int], minimum: int = 0) -> int:
    degree_max = settings.VANISHING_DEGREE_MAX if degree_max is None else degree_max
    if degree_max < minimum:
        raise BoundaryCaseError(f"fiber-degree cutoff must be at least {minimum}, got {degree_max}")
    return degree_max


def _family_findings(certificate: FamilyCertificate, outcome: CheckOutcome, name: str) -> None:
    for c in certificate.counterexamples:
        outcome.counterexamples.append({
            "family": name,
            "point": dict(c.point),
            "weight": list(c.weight.entries),
            "dimensions": list(c.table.dimensions()),
        })
    outcome.tables[name] = certificate.summary()
    if not certificate.stabilized:
        outcome.notes.append(f"{name}: chamber not stabilised on the upper faces of the box")


def _zero_rows(space, weights: List[Weight], outcome: CheckOutcome) -> None:
    rows = []
    for weight in weights:
        table = bwb(space, weight)
        rows.append({"weight": list(weight.entries), "dimensions": list(table.dimensions())})
        if not table.is_zero:
            outcome.counterexamples.append(
                {"row": str(weight), "check": "all cohomology zero", "dimensions": list(table.dimensions())}
            )
    outcome.tables["boundary_rows"] = rows


def _check_gr24(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"k": list(k_range), "m": list(m_range)})
    family = AffineWeight(entries=(K + M, M, 0, 0), root_system=GR24.root_system)
    box = ParameterBox.of(("k", k_range[0], k_range[1]), ("m", m_range[0], m_range[1]))
    _family_findings(bwb_family(GR24, family, box, workers=workers), outcome, "family")
    # S^dual (x) (wedge2 S)^3 and (wedge2 S)^3
    _zero_rows(GR24, [gr_weight(-2, -3), gr_weight(-3, -3)], outcome)
    return outcome


def _check_lgr(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"k": list(k_range), "m": list(m_range)})
    family = AffineWeight(entries=(K + M, M), root_system=LGR.root_system)
    box = ParameterBox.of(("k", k_range[0], k_range[1]), ("m", m_range[0], m_range[1]))
    _family_findings(bwb_family(LGR, family, box, workers=workers), outcome, "family")
    rows = [lgr_weight(-1, -2), lgr_weight(-2, -2)]
    _zero_rows(LGR, rows, outcome)

    weights = [family.instantiate(p) for p in box.points()] + rows

    def cross_check(weight: Weight):
        return weight, lgr_via_hyperplane(weight)

    resolved = open_count = 0
    for weight, hyperplane in parallel_map(cross_check, weights, workers):
        if isinstance(hyperplane, Indeterminate):
            open_count += 1
            continue
        resolved += 1
        direct = bwb(LGR, weight).dimensions()
        if hyperplane.dimensions() != direct:
            outcome.counterexamples.append({
                "check": "hyperplane route",
                "weight": list(weight.entries),
                "hyperplane": list(hyperplane.dimensions()),
                "direct": list(direct),
            })
    outcome.tables["hyperplane"] = {"resolved": resolved, "indeterminate": open_count}
    if open_count:
        outcome.notes.append(f"hyperplane route left {open_count} instances open; they are not compared")
    return outcome


def _xplus_bundles() -> List[Rank2Irrep]:
    lines = [Rank2Irrep.line(c) for c in range(-2, 3)]
    twisted = [Rank2Irrep(a=1 + c, b=c) for c in range(-2, 2)]
    # Sym^2 S^dual (x) wedge^2 S
    return lines + twisted + [Rank2Irrep(a=1, b=-1)]


def _check_xplus(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"degree_max": degree_max})
    bundles = _xplus_bundles()
    tables = parallel_map(
        lambda irrep: pushforward_graded(XPLUS, BundleExpression.of(SpaceTag.LGR, irrep), degree_max, workers=1),
        bundles, workers,
    )
    summary = {}
    for irrep, table in zip(bundles, tables):
        summary[str(irrep)] = table.h0_sequence(0, min(degree_max, 3))
        for n, degree, dimension in table.higher_nonzero():
            outcome.counterexamples.append(
                {"bundle": str(irrep), "fiber_degree": n, "degree": degree, "dimension": dimension}
            )
    outcome.tables["bundles"] = summary
    pairs = tilting_tables(Side.PLUS, degree_max, workers)
    check_pairs(Side.PLUS, pairs, outcome)
    outcome.parameters["pairs"] = len(pairs)
    return outcome


def _check_pv(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"k": list(k_range), "m": list(m_range), "family_m_low": "k-1"})
    family = AffineWeight(entries=(M, K, 0, 0), root_system=PV.root_system)
    box = ParameterBox.of(("k", k_range[0], k_range[1]), ("m", K - 1, m_range[1]))
    _family_findings(bwb_family(PV, family, box, workers=workers), outcome, "family")
    # k = 0: the line bundles L^-m = O(m)
    lines = AffineWeight(entries=(M, 0, 0, 0), root_system=PV.root_system)
    line_box = ParameterBox.of(("m", m_range[0], m_range[1]))
    _family_findings(bwb_family(PV, lines, line_box, workers=workers), outcome, "line_bundles")
    return outcome


def _check_xminus(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"m": list(m_range), "degree_max": degree_max})
    values = list(range(m_range[0], m_range[1] + 1))

    def tables(m: int):
        return xminus_cohomology(-m, degree_max, workers=1), pushforward_graded(
            Y, BundleExpression.of(SpaceTag.PV, LinePower(exponent=-m)), degree_max, workers=1
        )

    h0 = {}
    for m, (xminus, ambient) in zip(values, parallel_map(tables, values, workers)):
        h0[str(m)] = xminus.h0_sequence(0, min(degree_max, 3))
        for n, degree, dimension in xminus.higher_nonzero():
            outcome.counterexamples.append(
                {"space": "Xminus", "m": m, "fiber_degree": n, "degree": degree, "dimension": dimension}
            )
        for n, degree, dimension in ambient.higher_nonzero():
            outcome.counterexamples.append(
                {"space": "Y", "m": m, "fiber_degree": n, "degree": degree, "dimension": dimension}
            )
        outcome.indeterminate.extend(f"L^{-m} {p}" for p in xminus.indeterminate)
    outcome.tables["h0_low_degrees"] = h0
    return outcome


def _check_l3(k_range, m_range, degree_max, workers) -> CheckOutcome:
    outcome = CheckOutcome(parameters={"degree_max": degree_max})
    table = xminus_cohomology(3, degree_max, workers=workers)
    outcome.indeterminate.extend(str(p) for p in table.indeterminate)
    h1_total, h1_first = table.total(1), table.dim(1, 1)
    higher = {i: table.total(i) for i in range(2, table.dimensions.shape[1])}
    outcome.tables["xminus_L3"] = {"h1_total": h1_total, "h1_degree_1": h1_first, "higher_totals": higher}
    if h1_total != 1 or h1_first != 1:
        outcome.counterexamples.append(
            {"check": "H^1(X-, L^3)", "expected": {"total": 1, "degree_1": 1},
             "actual": {"total": h1_total, "degree_1": h1_first}}
        )
    for degree, total in higher.items():
        if total:
            outcome.counterexamples.append({"check": f"H^{degree}(X-, L^3)", "expected": 0, "actual": total})

    ambient = pushforward_graded(Y, BundleExpression.of(SpaceTag.PV, LinePower(exponent=2)), degree_max, workers)
    for n, degree, dimension in ambient.higher_nonzero():
        outcome.counterexamples.append(
            {"space": "Y", "bundle": "L^2", "fiber_degree": n, "degree": degree, "dimension": dimension}
        )
    outcome.tables["y_L2_higher_nonzero"] = len(ambient.higher_nonzero())
    return outcome


CHECKS: Dict[ClaimId, Callable[..., CheckOutcome]] = {
    ClaimId.GR24_VANISHING: _check_gr24,
    ClaimId.LGR_VANISHING: _check_lgr,
    ClaimId.XPLUS_BUNDLES: _check_xplus,
    ClaimId.PV_VANISHING: _check_pv,
    ClaimId.XMINUS_VANISHING: _check_xminus,
    ClaimId.XMINUS_L3: _check_l3,
}


@log_execution_time
def verify_lemma(lemma_id: Union[str, ClaimId], k_max: Optional[int] = None, m_max: Optional[int] = None,
                 degree_max: Optional[int] = None, k_min: Optional[int] = None, m_min: Optional[int] = None,
                 workers: Optional[int] = None) -> VerificationReport:
    started = time.perf_counter()
    claim = parse_claim(lemma_id)

    k_range = m_range = None
    boundaries = BOUNDARIES.get(claim, {})
    default_high = settings.PV_PARAMETER_MAX if claim is ClaimId.PV_VANISHING else settings.PARAMETER_MAX
    if "k" in boundaries:
        k_range = parameter_range(claim, "k", k_min, k_max, default_high)
    if "m" in boundaries:
        m_range = parameter_range(claim, "m", m_min, m_max, default_high)
    minimum = 1 if claim is ClaimId.XMINUS_L3 else 0
    cutoff = _degree_cutoff(degree_max, minimum)

    outcome = CHECKS[claim](k_range, m_range, cutoff, workers)
    report = outcome.to_report(claim, TITLES[claim], started)
    logger.info("Lemma check finished", claim=claim.value, verdict=report.verdict.value,
                counterexamples=len(report.counterexamples))
    return report
