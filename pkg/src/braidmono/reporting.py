"""Rendering of pipeline reports as text or structured JSON."""

import json
from typing import Literal

from braidmono.models import Report

ReportFormat = Literal["text", "structured"]

INDENT = 2


def emit_report(report: Report, format: ReportFormat = "text", timing: bool = False) -> bytes:
    """Serialize a report.

    The structured format is the JSON form of Report with sorted keys; the
    timing section is left out unless requested so that output is identical
    across runs.
    """
    if format == "structured":
        return _structured(report, timing)
    if format == "text":
        return _text(report, timing).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def _structured(report: Report, timing: bool) -> bytes:
    data = report.model_dump(mode="json", exclude=None if timing else {"timing"})
    return (json.dumps(data, indent=INDENT, sort_keys=True) + "\n").encode("utf-8")


def _section(title: str, lines: list[str]) -> list[str]:
    return [title, "-" * len(title), *lines, ""]


def _text(report: Report, timing: bool) -> str:
    out: list[str] = [
        f"braidmono report (schema {report.schema_version})",
        f"status: {report.status}",
        "",
    ]
    if report.messages:
        out += _section("Messages", [f"  {m}" for m in report.messages])

    if report.curve is not None:
        c = report.curve
        lines = [
            f"  name: {c.name}",
            f"  degree: {c.degree} (in y: {c.degree_y}), {c.terms} terms",
            f"  f = {c.polynomial}",
        ]
        if c.shear is not None:
            lines.append(f"  sheared by x -> x + ({c.shear})*y")
        out += _section("Curve", lines)

    if report.discriminant is not None:
        disc = report.discriminant
        lines = [f"  degree {disc.degree}, {len(disc.roots)} distinct roots"]
        lines += [f"  ({f.polynomial})^{f.multiplicity}" for f in disc.factors]
        lines += [
            f"  eta{r.index + 1} = {r.re} {'+' if not r.im.startswith('-') else '-'} "
            f"{r.im.lstrip('-')}i  +/- {r.radius}  multiplicity {r.multiplicity}"
            for r in disc.roots
        ]
        out += _section("Discriminant", lines)

    if report.lassos:
        lines = [f"  basepoint {report.basepoint}, epsilon {report.epsilon}, tilt {report.tilt}"]
        for lasso in report.lassos:
            nudged = " (nudged)" if lasso.nudged else ""
            lines.append(
                f"  lasso {lasso.index} around eta{lasso.target + 1}{nudged}: {lasso.braid}"
            )
        out += _section("Braid monodromy", lines)

    for title, presentation in (
        ("Presentation", report.raw_presentation),
        ("Simplified presentation", report.simplified_presentation),
    ):
        if presentation is not None:
            count = len(presentation.relators)
            lines = [f"  {presentation.generators} generators, {count} relators"]
            lines += [f"  {r}" for r in presentation.relators]
            out += _section(title, lines)

    group: list[str] = []
    if report.abelianization is not None:
        group.append(f"  abelianization: {report.abelianization}")
    if report.order is not None:
        if report.order.status == "finite":
            group.append(f"  order: {report.order.order}")
        else:
            group.append(f"  order: unknown (more than {report.order.bound} cosets)")
    for q in report.quotients:
        verdict = f"{q.count} up to automorphism" if q.exists else "none"
        group.append(f"  epimorphisms onto {q.target} (order {q.target_order}): {verdict}")
    if report.identification is not None:
        group.append(f"  identified as {report.identification.label}")
        if report.identification.witness is not None:
            group.append(f"  order 15 witness: {report.identification.witness}")
    if report.alexander is not None:
        group.append(f"  Alexander polynomial: {report.alexander}")
    if report.redundant_lassos is not None:
        group.append(f"  redundant lassos: {report.redundant_lassos}")
    if group:
        out += _section("Group", group)

    if report.local_braids:
        out += _section(
            "Local braids",
            [
                f"  lasso {b.target} ({b.x}, {b.y}) {b.label}: {b.measured} half twists, "
                f"expected {b.expected}"
                for b in report.local_braids
            ],
        )

    if report.certification_log:
        lines = []
        for record in report.certification_log:
            lines.append(
                f"  [{record.lower}, {record.upper}]: {record.resultant_roots} resultant roots, "
                f"{len(record.events)} alignments"
            )
            lines += [
                f"    x0 = {e.x0}, u0 = {e.u0}, {e.aligned} aligned roots" for e in record.events
            ]
        out += _section("Overcrossing certification", lines)

    if timing and report.timing:
        out += _section("Timing", [f"  {k}: {v:.3f}s" for k, v in report.timing.items()])
    return "\n".join(out)
