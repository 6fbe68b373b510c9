"""
Report rendering.

Rendering is a pure function of the payload: JSON uses sorted keys and one
object per line, text output is built from the same payload. Neither depends
on the worker count of the run that produced it.
"""

import json
from typing import Any, Callable, Dict, List

Payload = Dict[str, Any]


def render_json(payload: Payload) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"


def _verdict(payload: Payload) -> str:
    return "PASS" if payload.get("passed") else "FAIL"


def _check_lines(checks: List[Payload]) -> List[str]:
    lines = []
    for check in checks:
        mark = "✓" if check["passed"] else "✗"
        lines.append(f"  {mark} {check['name']}: {check.get('detail', '')}")
        if "witness" in check:
            lines.append(f"      witness: {json.dumps(check['witness'], sort_keys=True)}")
    return lines


def _text_supports(payload: Payload) -> List[str]:
    lines = []
    if "supports" in payload:
        lines.append(f"genus {payload['genus']}, weighted total {payload['weighted_total']}")
        lines.append(f"{'delta':<20} {'roots':>8} {'mult':>6} {'singular':>9} {'aut':>4}")
        for row in payload["supports"]:
            singular = row.get("singular")
            lines.append(
                f"{str(row['delta']):<20} {row['root_count']:>8} {row['multiplicity']:>6} "
                f"{'-' if singular is None else str(singular).lower():>9} "
                f"{row.get('aut_order', '-'):>4}"
            )
    return lines + _check_lines(payload.get("checks", []))


def _text_local(payload: Payload) -> List[str]:
    lines = [
        f"delta {payload['delta']}: {payload['quadrics']} quadrics, {payload['cubics']} cubics",
    ]
    lines += [f"  {g}" for g in payload["generators"]]
    for chart in payload["charts"]:
        lines.append(f"chart U_{chart['s']} ({', '.join(chart['coordinates'])}), {chart['exceptional_locus']}")
        for var, image in chart["substitution"].items():
            lines.append(f"  {var} -> {image}")
        nonzero = [r for r in chart["residuals"] if r != "0"]
        lines.append(f"  residuals: {'all zero' if not nonzero else nonzero}")
    lines.append(f"Jacobian rank at origin {payload['jacobian_rank']}, codimension {payload['codimension']}")
    return lines + _check_lines(payload["checks"])


def _text_strata(payload: Payload) -> List[str]:
    curve = payload["curve"]
    lines = [
        f"g1={curve['g1']} g2={curve['g2']} delta={curve['delta']} genus={payload['genus']}, "
        f"{payload['singular_spin_curves']} singular spin curves",
        f"{'support':<16} {'dim':>4} {'torsor':<28} {'on H':<12} {'off H':<12}"
        + (" labels" if "q" in payload else ""),
    ]
    for row in payload["strata"]:
        hyper = row["hyperplanes"]
        line = (
            f"{row['support']:<16} {row['dimension']:>4} {row['torsor']:<28} "
            f"{str(hyper['contained_in']):<12} {str(hyper['avoids']):<12}"
        )
        if "label_count" in row:
            line += f" {row['label_count']}"
        lines.append(line)
    if "q" in payload:
        lines.append(f"total over F_{payload['q']}: {payload['total_labels']}")
    lines += [f"note: {note}" for note in payload.get("notes", [])]
    return lines


def _text_verify(payload: Payload) -> List[str]:
    curve = payload["curve"]
    lines = [f"g1={curve['g1']} g2={curve['g2']} delta={curve['delta']} q={payload['q']}"]
    for row in payload["strata"]:
        mark = "✓" if row["passed"] else "✗"
        lines.append(f"  {mark} I={row['I']}: {row['labels']} labels, image {row['image']}")
    lines.append(f"total labels {payload['total_labels']}")
    for report in payload["reports"]:
        if not report["passed"]:
            lines.append(report["title"])
            lines += _check_lines([c for c in report["checks"] if not c["passed"]])
    return lines


def _text_all(payload: Payload) -> List[str]:
    lines = [f"{payload['checks']} checks"]
    if "first_failure" in payload:
        lines += _check_lines([payload["first_failure"]])
    lines += [f"note: {note}" for note in payload.get("notes", [])]
    return lines


TEXT_RENDERERS: Dict[str, Callable[[Payload], List[str]]] = {
    "supports": _text_supports,
    "local": _text_local,
    "strata": _text_strata,
    "verify": _text_verify,
    "all": _text_all,
}


def render_text(command: str, payload: Payload) -> str:
    lines = TEXT_RENDERERS[command](payload)
    lines.append(_verdict(payload))
    return "\n".join(lines) + "\n"


def render(command: str, payload: Payload, output_format: str = "json") -> str:
    """
    Render a command payload.

    Args:
        command: Command that produced the payload
        payload: JSON-able report
        output_format: "json" or "text"

    Returns:
        Rendered report, newline-terminated
    """
    if output_format == "json":
        return render_json(payload)
    if output_format == "text":
        return render_text(command, payload)
    raise ValueError(f"unknown output format {output_format!r}")
