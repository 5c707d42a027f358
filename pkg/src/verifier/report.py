"""Serialisation of verification reports.

JSON output is canonical: sorted keys, two-space indent, trailing newline.
The document layout is the JSON schema of :class:`VerificationReport`,
checked in at ``docs/report.schema.json`` and regenerated with
``flop-verify schema --output docs/report.schema.json``.
"""
import json
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence, Union

from src.core.config import settings
from src.core.exceptions import UnsupportedFormatError
from src.verifier.models import Verdict, VerificationReport


class ReportFormat(str, Enum):
    JSON = "json"
    MARKDOWN = "md"


EXIT_CODES = {Verdict.VERIFIED: 0, Verdict.FAILED: 1, Verdict.INDETERMINATE: 2}
USAGE_EXIT_CODE = 3


def parse_format(value: Union[str, ReportFormat]) -> ReportFormat:
    if isinstance(value, ReportFormat):
        return value
    aliases = {"markdown": ReportFormat.MARKDOWN}
    try:
        return aliases.get(value) or ReportFormat(value)
    except ValueError:
        raise UnsupportedFormatError(f"unsupported report format {value!r}") from None


def _document(report: VerificationReport, timing: bool = True) -> Dict[str, Any]:
    document = report.model_dump(mode="json", by_alias=True)
    if not timing:
        document["wall_clock_seconds"] = 0.0
    return document


def _dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True).replace("|", "\\|")
    return str(value)


def _table(rows: Sequence[Dict[str, Any]]) -> List[str]:
    columns = sorted({key for row in rows for key in row})
    lines = ["| " + " | ".join(columns) + " |", "|" + "---|" * len(columns)]
    for row in rows:
        lines.append("| " + " | ".join(_cell(row.get(c, "")) for c in columns) + " |")
    return lines


def _markdown(report: VerificationReport, timing: bool = True) -> str:
    lines = [
        f"## Claim {report.claim.value}: {report.title}",
        "",
        f"**Verdict:** {report.verdict.value}",
        "",
        "| parameter | value |",
        "|---|---|",
    ]
    lines += [f"| {name} | {_cell(value)} |" for name, value in sorted(report.parameters.items())]
    if report.counterexamples:
        lines += ["", "### Counterexamples", ""] + _table(report.counterexamples)
    if report.indeterminate:
        lines += ["", "### Indeterminate positions", ""] + [f"- {p}" for p in report.indeterminate]
    if report.notes:
        lines += ["", "### Notes", ""] + [f"- {n}" for n in report.notes]
    seconds = report.wall_clock_seconds if timing else 0.0
    lines += ["", f"_version {report.version}, schema {report.schema_version}, {seconds:.3f}s_", ""]
    return "\n".join(lines)


def emit(report: VerificationReport, fmt: Union[str, ReportFormat] = ReportFormat.JSON, timing: bool = True) -> str:
    fmt = parse_format(fmt)
    if fmt is ReportFormat.JSON:
        return _dumps(_document(report, timing))
    return _markdown(report, timing)


def emit_suite(reports: Iterable[VerificationReport], fmt: Union[str, ReportFormat] = ReportFormat.JSON,
               timing: bool = True) -> str:
    fmt = parse_format(fmt)
    reports = list(reports)
    if fmt is ReportFormat.JSON:
        return _dumps({"schema": settings.SCHEMA_VERSION, "reports": [_document(r, timing) for r in reports]})
    return "# flop-verify suite\n\n" + "\n".join(_markdown(r, timing) for r in reports)


def parse(text: str) -> VerificationReport:
    return VerificationReport.model_validate(json.loads(text))


def parse_suite(text: str) -> List[VerificationReport]:
    return [VerificationReport.model_validate(d) for d in json.loads(text)["reports"]]


def exit_code(reports: Iterable[VerificationReport]) -> int:
    """0 if everything verified; a failure outranks an indeterminate result"""
    verdicts = {r.verdict for r in reports}
    if Verdict.FAILED in verdicts:
        return EXIT_CODES[Verdict.FAILED]
    if Verdict.INDETERMINATE in verdicts:
        return EXIT_CODES[Verdict.INDETERMINATE]
    return EXIT_CODES[Verdict.VERIFIED]


def report_schema() -> Dict[str, Any]:
    return VerificationReport.model_json_schema(by_alias=True)


def emit_schema() -> str:
    return _dumps(report_schema())
