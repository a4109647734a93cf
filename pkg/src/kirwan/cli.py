"""Command-line front end.

A problem document is a small line-based text format; rationals are written
as integers or ``p/q`` and are parsed exactly (decimal notation is
rejected).  Grammar::

    document  := line*
    line      := blank | '#' comment | setting | factor
    setting   := 'threshold' '=' rational
               | 'max_degree' '=' integer
               | 'certify' '=' bool            # append certification to any command
               | 'normalized' '=' bool         # families: include unit-radius forms
    factor    := 'factor' 'sphere' rational
               | 'factor' 'projective' rational+
               | 'factor' 'values' rational+
    rational  := ['-'] digits [ '/' digits ]
    bool      := 'true' | 'false'

Commands: ``classify``, ``generators``, ``betti``, ``families`` (sphere
factors only), ``certify``.  Reports come in ``text`` or ``json`` form and
contain the same data; output is byte-identical across runs.  Exit codes:
0 success, 1 parse or validation error, 2 certification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys as _sys
from dataclasses import dataclass
from fractions import Fraction

from .groebner import Ideal
from .kernel import (
    covering_generator,
    kernel_full,
    minimal_coverings,
    reduced_cohomology,
)
from .moment import (
    Factor,
    MomentSystem,
    NonDecreasingValuesError,
    SingularValueError,
    build_system,
    classify,
    preset_projective,
    preset_sphere,
)
from .oracle import certify_system
from .spheres import (
    abelian_polygon_families,
    normalize_radii,
    render_label,
    sphere_families,
    sphere_subsets,
)

COMMANDS = ("classify", "generators", "betti", "families", "certify")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Problem-document parse or validation failure, with line context."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class FactorSpec:
    kind: str  # "sphere" | "projective" | "values"
    params: tuple[Fraction, ...]


@dataclass
class ProblemDocument:
    factors: tuple[FactorSpec, ...]
    threshold: Fraction = Fraction(0)
    max_degree: int | None = None
    certify: bool = False
    normalized: bool = False


def parse_rational(token: str, line_no: int = 0) -> Fraction:
    if not _RATIONAL_RE.match(token):
        raise DocumentError(line_no, f"not a rational (use p/q or an integer): {token!r}")
    value = Fraction(token)
    return value


def parse_document(text: str) -> ProblemDocument:
    factors: list[FactorSpec] = []
    threshold = Fraction(0)
    max_degree: int | None = None
    flags = {"certify": False, "normalized": False}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("factor"):
            tokens = line.split()
            if len(tokens) < 3:
                raise DocumentError(line_no, "factor needs a kind and at least one value")
            kind = tokens[1]
            if kind not in ("sphere", "projective", "values"):
                raise DocumentError(line_no, f"unknown factor kind {kind!r}")
            params = tuple(parse_rational(tok, line_no) for tok in tokens[2:])
            if kind == "sphere" and len(params) != 1:
                raise DocumentError(line_no, "sphere takes exactly one radius")
            factors.append(FactorSpec(kind, params))
            continue
        if "=" in line:
            key, _, value = (part.strip() for part in line.partition("="))
            if key == "threshold":
                threshold = parse_rational(value, line_no)
            elif key == "max_degree":
                if not value.lstrip("+").isdigit():
                    raise DocumentError(line_no, f"max_degree must be a non-negative integer: {value!r}")
                max_degree = int(value)
            elif key in flags:
                if value not in ("true", "false"):
                    raise DocumentError(line_no, f"{key} must be true or false: {value!r}")
                flags[key] = value == "true"
            else:
                raise DocumentError(line_no, f"unknown setting {key!r}")
            continue
        raise DocumentError(line_no, f"cannot parse: {raw.strip()!r}")

    if not factors:
        raise DocumentError(0, "document declares no factors")
    return ProblemDocument(
        factors=tuple(factors),
        threshold=threshold,
        max_degree=max_degree,
        certify=flags["certify"],
        normalized=flags["normalized"],
    )


def _build_factor(spec: FactorSpec, position: int) -> Factor:
    name = f"M{position}"
    if spec.kind == "sphere":
        return preset_sphere(spec.params[0], name=name)
    if spec.kind == "projective":
        return preset_projective(spec.params, name=name)
    return Factor(name, spec.params)


def build_document_system(doc: ProblemDocument) -> MomentSystem:
    factors = [_build_factor(spec, i) for i, spec in enumerate(doc.factors, start=1)]
    return build_system(factors, doc.threshold)


# ---------------------------------------------------------------------------
# report construction: one dict per command, shared by text and json output


def _factor_entries(sys: MomentSystem) -> list[dict]:
    return [
        {"name": f.name, "values": [str(v) for v in f.values]} for f in sys.factors
    ]


def _classify_report(sys: MomentSystem) -> dict:
    cls = classify(sys)
    points = []
    for J in sys.indices():
        side = "long" if J in cls.long else "short"
        points.append({"index": list(J), "mu": str(sys.mu(J)), "side": side})
    return {
        "command": "classify",
        "threshold": str(sys.threshold),
        "factors": _factor_entries(sys),
        "fixed_points": points,
        "counts": {
            "total": len(points),
            "long": len(cls.long),
            "short": len(cls.short),
        },
    }


def _side_entry(sys: MomentSystem, targets) -> dict:
    coverings = minimal_coverings(targets, sys)
    gens = [covering_generator(cov, sys) for cov in coverings]
    ideal = Ideal(sys.m, tuple(gens))
    return {
        "coverings": [[list(v) for v in cov.vertices()] for cov in coverings],
        "generators": [str(g) for g in gens],
        "groebner_basis": [str(g) for g in ideal.groebner_basis()],
    }


def _generators_report(sys: MomentSystem) -> dict:
    cls = classify(sys)
    full = kernel_full(sys)
    return {
        "command": "generators",
        "threshold": str(sys.threshold),
        "factors": _factor_entries(sys),
        "kernel_plus": _side_entry(sys, cls.long),
        "kernel_minus": _side_entry(sys, cls.short),
        "kernel_full": {
            "generators": [str(g) for g in full.generators],
            "groebner_basis": [str(g) for g in full.groebner_basis()],
        },
    }


def _betti_report(sys: MomentSystem, max_degree: int | None) -> dict:
    pres = reduced_cohomology(sys, max_degree)
    return {
        "command": "betti",
        "threshold": str(sys.threshold),
        "factors": _factor_entries(sys),
        "max_degree": pres.max_degree,
        "generators": [str(g) for g in pres.generators],
        "groebner_basis": [str(g) for g in pres.basis],
        "betti": list(pres.betti),
        "cohomological_degrees": [2 * k for k in range(pres.max_degree + 1)],
        "total_dimension": pres.total_dimension,
        "zero_ring": pres.zero_ring,
        "truncated": pres.truncated,
        "warning": pres.warning,
    }


def _labeled(entries, prefix: str, xprefix: str = "x") -> list[dict]:
    return [
        {
            "label": render_label(prefix, subset),
            "subset": list(subset),
            "poly": poly.render(xprefix=xprefix),
        }
        for subset, poly in entries
    ]


def _families_report(doc: ProblemDocument, include_bridge: bool) -> dict:
    if any(spec.kind != "sphere" for spec in doc.factors):
        raise DocumentError(0, "the families command needs every factor to be a sphere")
    radii = [spec.params[0] for spec in doc.factors]
    long, short = sphere_subsets(radii, doc.threshold)
    fams = sphere_families(radii, doc.threshold)
    report = {
        "command": "families",
        "threshold": str(doc.threshold),
        "radii": [str(r) for r in radii],
        "long_subsets": [list(s) for s in long.sorted_members()],
        "short_subsets": [list(s) for s in short.sorted_members()],
        "squares": [str(p) for p in fams.squares],
        "p_family": _labeled(fams.p_family, "P"),
        "q_family": _labeled(fams.q_family, "Q"),
        "normalized": None,
        "polygon": None,
    }
    if doc.normalized:
        norm = normalize_radii(fams)
        report["normalized"] = {
            "squares": [p.render(xprefix="u") for p in norm.squares],
            "p_family": _labeled(norm.p_family, "P", xprefix="u"),
            "q_family": _labeled(norm.q_family, "Q", xprefix="u"),
        }
        if len(radii) >= 2:
            try:
                poly = abelian_polygon_families(radii, include_bridge=include_bridge)
            except SingularValueError as exc:
                report["polygon"] = {"error": str(exc)}
            else:
                polygon = {
                    "level": str(poly.level),
                    "long_at_level": [list(s) for s in poly.long_at_level.sorted_members()],
                    "long_restricted": [list(s) for s in poly.long_restricted.sorted_members()],
                    "long_extended": [list(s) for s in poly.long_extended.sorted_members()],
                    "squares": [p.render(xprefix="u") for p in poly.squares],
                    "p_at_level": _labeled(poly.p_at_level, "P'", xprefix="u"),
                    "q_at_level": _labeled(poly.q_at_level, "Q'", xprefix="u"),
                    "p_extended": _labeled(poly.p_extended, "P''", xprefix="u"),
                    "q_refined": _labeled(poly.q_refined, "Q''", xprefix="u"),
                }
                if poly.bridge is not None:
                    polygon["bridge"] = _labeled(poly.bridge, "Q'''", xprefix="u")
                report["polygon"] = polygon
    return report


def _certify_report(sys: MomentSystem) -> dict:
    certificates = certify_system(sys)
    return {
        "command": "certify",
        "threshold": str(sys.threshold),
        "factors": _factor_entries(sys),
        "certificates": [
            {
                "subject": c.subject,
                "method": c.method,
                "passed": c.passed,
                "witness": c.witness,
            }
            for c in certificates
        ],
        "all_passed": all(c.passed for c in certificates),
    }


# ---------------------------------------------------------------------------
# text rendering (same data as the json form)


def _render_factors(report: dict, lines: list[str]) -> None:
    lines.append("factors:")
    for f in report["factors"]:
        lines.append(f"  {f['name']}: values {', '.join(f['values'])}")


def _render_text(report: dict) -> str:
    lines: list[str] = []
    command = report["command"]
    if command == "classify":
        lines.append("fixed-point classification")
        lines.append(f"threshold: {report['threshold']}")
        _render_factors(report, lines)
        counts = report["counts"]
        lines.append(
            f"fixed points ({counts['total']} total, "
            f"{counts['long']} long, {counts['short']} short):"
        )
        for p in report["fixed_points"]:
            index = "(" + ", ".join(str(i) for i in p["index"]) + ")"
            lines.append(f"  {index}  mu = {p['mu']}  {p['side']}")
    elif command == "generators":
        lines.append("kernel generators")
        lines.append(f"threshold: {report['threshold']}")
        _render_factors(report, lines)
        for side, label in (("kernel_plus", "plus side"), ("kernel_minus", "minus side")):
            entry = report[side]
            lines.append(f"{label}:")
            for cov, gen in zip(entry["coverings"], entry["generators"]):
                vertices = " ".join(f"({i},{j})" for i, j in cov)
                lines.append(f"  covering [{vertices}]  ->  {gen}")
            lines.append(f"  groebner basis: [{', '.join(entry['groebner_basis'])}]")
        full = report["kernel_full"]
        lines.append("full kernel:")
        lines.append(f"  generators: [{', '.join(full['generators'])}]")
        lines.append(f"  groebner basis: [{', '.join(full['groebner_basis'])}]")
    elif command == "betti":
        lines.append("quotient cohomology presentation")
        lines.append(f"threshold: {report['threshold']}")
        _render_factors(report, lines)
        lines.append(f"relation ideal: [{', '.join(report['generators'])}]")
        lines.append(f"groebner basis: [{', '.join(report['groebner_basis'])}]")
        pairs = zip(report["cohomological_degrees"], report["betti"])
        lines.append("betti numbers: " + ", ".join(f"b{d}={b}" for d, b in pairs))
        if report["total_dimension"] is not None:
            lines.append(f"total dimension: {report['total_dimension']}")
        if report["truncated"]:
            lines.append(
                f"note: dimension is still nonzero at the truncation degree "
                f"{report['max_degree']}; raise max_degree to see further"
            )
        if report["warning"]:
            lines.append(f"warning: {report['warning']}")
    elif command == "families":
        lines.append("sphere generator families")
        lines.append(f"threshold: {report['threshold']}")
        lines.append(f"radii: {', '.join(report['radii'])}")
        subsets = ["{" + ",".join(str(i) for i in s) + "}" for s in report["long_subsets"]]
        lines.append(f"long subsets: {' '.join(subsets) if subsets else '(none)'}")
        lines.append("family (i), squares:")
        for p in report["squares"]:
            lines.append(f"  {p}")
        lines.append("family (ii), P over long subsets:")
        for entry in report["p_family"]:
            lines.append(f"  {entry['label']} = {entry['poly']}")
        lines.append("family (iii), Q over long subsets:")
        for entry in report["q_family"]:
            lines.append(f"  {entry['label']} = {entry['poly']}")
        if report["normalized"]:
            norm = report["normalized"]
            lines.append("normalized to unit radii (u variables):")
            for p in norm["squares"]:
                lines.append(f"  {p}")
            for entry in norm["p_family"] + norm["q_family"]:
                lines.append(f"  {entry['label']} = {entry['poly']}")
        if report["polygon"]:
            polygon = report["polygon"]
            lines.append("abelian polygon space families:")
            if "error" in polygon:
                lines.append(f"  {polygon['error']}")
            else:
                lines.append(f"  level: {polygon['level']}")
                for p in polygon["squares"]:
                    lines.append(f"  {p}")
                for key in ("p_at_level", "q_at_level", "p_extended", "q_refined", "bridge"):
                    for entry in polygon.get(key, ()):
                        lines.append(f"  {entry['label']} = {entry['poly']}")
    elif command == "certify":
        lines.append("certification")
        lines.append(f"threshold: {report['threshold']}")
        _render_factors(report, lines)
        for c in report["certificates"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"  [{status}] {c['subject']} ({c['method']})")
            if c["witness"]:
                lines.append(f"         witness: {c['witness']}")
        lines.append("all passed" if report["all_passed"] else "CERTIFICATION FAILED")
    return "\n".join(lines) + "\n"


def run(
    command: str,
    doc: ProblemDocument,
    fmt: str = "text",
    include_bridge: bool = False,
) -> tuple[str, int]:
    """Execute a command against a parsed document; returns (report, exit code)."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    sys_ = build_document_system(doc)
    if command == "classify":
        report = _classify_report(sys_)
    elif command == "generators":
        report = _generators_report(sys_)
    elif command == "betti":
        report = _betti_report(sys_, doc.max_degree)
    elif command == "families":
        report = _families_report(doc, include_bridge)
    else:
        report = _certify_report(sys_)

    exit_code = 0
    if command != "certify" and doc.certify:
        report["certification"] = _certify_report(sys_)["certificates"]
        report["all_passed"] = all(c["passed"] for c in report["certification"])
    if "all_passed" in report and not report["all_passed"]:
        exit_code = 2

    if fmt == "json":
        return json.dumps(report, indent=2) + "\n", exit_code
    if fmt == "text":
        text = _render_text(report)
        if command != "certify" and "certification" in report:
            extra = ["certification:"]
            for c in report["certification"]:
                status = "PASS" if c["passed"] else "FAIL"
                extra.append(f"  [{status}] {c['subject']} ({c['method']})")
                if c["witness"]:
                    extra.append(f"         witness: {c['witness']}")
            text += "\n".join(extra) + "\n"
        return text, exit_code
    raise ValueError(f"unknown format {fmt!r}")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="kirwan",
        description=(
            "Exact kernel generators and cohomology of circle-action "
            "symplectic quotients from fixed-point moment data"
        ),
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("document", help="problem document path, or - for stdin")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--max-degree", type=int, default=None, help="override the Betti truncation degree"
    )
    parser.add_argument(
        "--certify", action="store_true", help="append certification to the report"
    )
    parser.add_argument(
        "--normalized", action="store_true", help="families: include unit-radius forms"
    )
    parser.add_argument(
        "--debug-families",
        action="store_true",
        help="families: also show the intermediate polygon rewriting",
    )
    args = parser.parse_args(argv)

    try:
        if args.document == "-":
            text = _sys.stdin.read()
        else:
            with open(args.document, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1

    try:
        doc = parse_document(text)
        if args.max_degree is not None:
            doc.max_degree = args.max_degree
        doc.certify = doc.certify or args.certify
        doc.normalized = doc.normalized or args.normalized
        report, code = run(
            args.command, doc, fmt=args.format, include_bridge=args.debug_families
        )
    except (DocumentError, SingularValueError, NonDecreasingValuesError, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1

    _sys.stdout.write(report)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
