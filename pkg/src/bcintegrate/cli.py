"""Command line driver: ingest -> transform -> align -> conflicts -> merge.

Subcommands:

* ``integrate``  full pipeline; writes the conflict report and the merged
  representation ontology, optionally a figures/CSV directory.
* ``similarity`` score exactly two components and print the matrix.
* ``validate``   run the loaders and print any violations.

Exit codes: 0 success, 1 input error, 3 conflicts found with
``--fail-on-conflict`` set.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .align import aggregate_similarity
from .conflicts import build_report
from .errors import IntegrationError
from .ingest import import_xml
from .merge import build_representation, extract_result_components, serialize_representation
from .model import ComponentSet, merge_component_sets, parse_component_set, validate_component
from .ontology import EMPTY_ONTOLOGY, DomainOntology, load_domain_ontology
from .report import (
    aggregate_to_dict,
    matrix_to_text,
    report_to_json,
    report_to_text,
    write_report_directory,
)
from .terms import normalize
from .transform import transform_set

import json

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFLICTS = 3


@dataclass
class RunConfig:
    domain_path: Optional[Path]
    component_paths: list[Path]
    report_path: Optional[Path] = None
    merged_path: Optional[Path] = None
    figures_dir: Optional[Path] = None
    fail_on_conflict: bool = False
    format: str = "text"
    verbose: bool = False


def _warn(msg: str) -> None:
    print(f"warn: {msg}", file=sys.stderr)


def _read_text(path: Path) -> str:
    if not path.exists():
        raise IntegrationError(f"file not found: {path}")
    return path.read_text(encoding="utf-8")


def _load_components(paths: list[Path]) -> ComponentSet:
    sets = []
    for path in paths:
        text = _read_text(path)
        if path.suffix.lower() == ".xml":
            sets.append(import_xml(text, on_warning=_warn))
        else:
            sets.append(parse_component_set(text))
    return merge_component_sets(sets)


def _load_domain(path: Optional[Path]) -> DomainOntology:
    if path is None:
        return EMPTY_ONTOLOGY
    return load_domain_ontology(_read_text(path))


def _check_output_paths(cfg: RunConfig) -> None:
    inputs = set(cfg.component_paths)
    if cfg.domain_path:
        inputs.add(cfg.domain_path)
    for out in (cfg.report_path, cfg.merged_path):
        if out is not None and out in inputs:
            raise IntegrationError(f"output path {out} is also an input")


def run_integrate(cfg: RunConfig) -> int:
    _check_output_paths(cfg)
    domain = _load_domain(cfg.domain_path)
    cs = _load_components(cfg.component_paths)
    ontologies = transform_set(cs)
    report = build_report(ontologies, domain, systems=cs.systems())
    representation = build_representation(report, ontologies, domain)

    if cfg.report_path:
        cfg.report_path.write_text(report_to_json(report), encoding="utf-8")
    if cfg.merged_path:
        cfg.merged_path.write_text(serialize_representation(representation),
                                   encoding="utf-8")
    if cfg.figures_dir:
        written = write_report_directory(report, ontologies, domain, cfg.figures_dir)
        if cfg.verbose:
            for p in written:
                print(f"wrote {p}", file=sys.stderr)

    if cfg.format == "json":
        print(report_to_json(report), end="")
    else:
        print(report_to_text(report), end="")

    if cfg.fail_on_conflict and report.conflicts():
        return EXIT_CONFLICTS
    return EXIT_OK


def _resolve_component(cs: ComponentSet, ref: str):
    if ":" in ref:
        system, name = ref.split(":", 1)
        matches = cs.find(name, system)
    else:
        matches = cs.find(ref)
    if len(matches) != 1:
        available = ", ".join(f"{bc.system_id}:{bc.name}" for bc in cs.components)
        raise IntegrationError(
            f"component reference {ref!r} matches {len(matches)} components; "
            f"available: {available or '(none)'}"
        )
    return matches[0]


def run_similarity(cfg: RunConfig, left_ref: str, right_ref: str) -> int:
    domain = _load_domain(cfg.domain_path)
    cs = _load_components(cfg.component_paths)
    from .transform import transform_bc_to_ontology

    left = transform_bc_to_ontology(_resolve_component(cs, left_ref))
    right = transform_bc_to_ontology(_resolve_component(cs, right_ref))
    result = aggregate_similarity(left, right, domain)
    if cfg.format == "json":
        print(json.dumps(aggregate_to_dict(result), indent=2, sort_keys=True))
    else:
        print(matrix_to_text(result), end="")
    return EXIT_OK


def run_validate(cfg: RunConfig) -> int:
    problems = 0
    if cfg.domain_path is not None:
        try:
            _load_domain(cfg.domain_path)
            print(f"{cfg.domain_path}: ok")
        except IntegrationError as exc:
            print(f"{cfg.domain_path}: {exc}")
            problems += 1
    for path in cfg.component_paths:
        try:
            text = _read_text(path)
            cs = (import_xml(text, on_warning=_warn)
                  if path.suffix.lower() == ".xml" else parse_component_set(text))
        except IntegrationError as exc:
            print(f"{path}: {exc}")
            problems += 1
            continue
        violations = [v for bc in cs.components for v in validate_component(bc)]
        if violations:
            for v in violations:
                print(f"{path}: {v}")
            problems += 1
        else:
            print(f"{path}: ok ({len(cs.components)} components)")
    return EXIT_ERROR if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcintegrate",
        description="Detect and resolve naming conflicts among business components.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, domain_required=False):
        p.add_argument("--domain", type=Path, required=domain_required,
                       help="domain ontology document (JSON)")
        p.add_argument("--components", type=Path, nargs="+", required=True,
                       help="component documents (JSON or XML)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("-v", "--verbose", action="store_true")

    p_int = sub.add_parser("integrate", help="run the full integration pipeline")
    common(p_int)
    p_int.add_argument("--report", type=Path, help="write the conflict report (JSON)")
    p_int.add_argument("--merged", type=Path,
                       help="write the merged representation ontology (JSON)")
    p_int.add_argument("--figures", type=Path,
                       help="directory for verdicts.csv and matrix/summary figures")
    p_int.add_argument("--fail-on-conflict", action="store_true",
                       help="exit 3 when naming conflicts are detected")

    p_sim = sub.add_parser("similarity", help="score two components")
    common(p_sim)
    p_sim.add_argument("left", help="component reference, name or system:name")
    p_sim.add_argument("right", help="component reference, name or system:name")

    p_val = sub.add_parser("validate", help="check documents and print violations")
    common(p_val)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        domain_path=args.domain,
        component_paths=list(args.components),
        format=args.format,
        verbose=args.verbose,
    )
    try:
        if args.command == "integrate":
            cfg.report_path = args.report
            cfg.merged_path = args.merged
            cfg.figures_dir = args.figures
            cfg.fail_on_conflict = args.fail_on_conflict
            return run_integrate(cfg)
        if args.command == "similarity":
            return run_similarity(cfg, args.left, args.right)
        return run_validate(cfg)
    except IntegrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
