"""Classify component pairs into verdicts and assemble the conflict report.

Verdict logic (root names vs aggregate score):

* Equal                 same name, score 1
* HomonymNamingConflict same name, score < 1  -- the naming conflict
* Synonymous            different names, score 1, roots thesaurus-related
                        (or both outside the ontology)
* Different             everything else
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .align import (
    AggregateResult,
    aggregate_similarity,
    atomic_with_rule,
)
from .errors import NothingToIntegrateError
from .ontology import DomainOntology, synonym_related, term_concepts
from .terms import syntactic_similarity
from .transform import ComponentOntology


class Verdict(Enum):
    EQUAL = "Equal"
    SYNONYMOUS = "Synonymous"
    HOMONYM_NAMING_CONFLICT = "HomonymNamingConflict"
    DIFFERENT = "Different"


@dataclass(frozen=True)
class ElementFinding:
    """One matrix cell worth of evidence: a matched element pair, or an
    element left unmatched (the other side is None)."""
    left: Optional[str]
    right: Optional[str]
    left_index: Optional[int]
    right_index: Optional[int]
    sigma: Fraction
    rule: str


@dataclass(frozen=True)
class PairVerdict:
    left: tuple[str, str]   # (system_id, component name)
    right: tuple[str, str]
    verdict: Verdict
    sigma_prime: int
    sigma: Fraction
    roots_synonym: bool
    evidence: tuple[ElementFinding, ...]
    matching: tuple[tuple[int, int], ...]

    def is_conflict(self) -> bool:
        return self.verdict is Verdict.HOMONYM_NAMING_CONFLICT


@dataclass(frozen=True)
class ConflictReport:
    verdicts: tuple[PairVerdict, ...]
    counts: dict[Verdict, int] = field(default_factory=dict)

    def conflicts(self) -> list[PairVerdict]:
        return [v for v in self.verdicts if v.is_conflict()]


def _evidence(a: ComponentOntology, b: ComponentOntology,
              agg: AggregateResult, o: DomainOntology) -> tuple[ElementFinding, ...]:
    left = a.root.children
    right = b.root.children
    findings: list[ElementFinding] = []
    matched_l = {i for i, _ in agg.matching}
    matched_r = {j for _, j in agg.matching}
    for i, j in agg.matching:
        la, rb = left[i], right[j]
        if not la.children and not rb.children:
            _, rule = atomic_with_rule(la.label, rb.label, o)
        else:
            rule = "aggregate"
        findings.append(ElementFinding(la.label, rb.label, i, j,
                                       agg.matrix.cells[i][j], rule))
    for i, node in enumerate(left):
        if i not in matched_l:
            findings.append(ElementFinding(node.label, None, i, None, Fraction(0), "unmatched"))
    for j, node in enumerate(right):
        if j not in matched_r:
            findings.append(ElementFinding(None, node.label, None, j, Fraction(0), "unmatched"))
    return tuple(findings)


def classify_pair(a: ComponentOntology, b: ComponentOntology,
                  o: DomainOntology) -> PairVerdict:
    """Verdict for one cross-system pair of component ontologies."""
    sp = syntactic_similarity(a.root.label, b.root.label)
    agg = aggregate_similarity(a, b, o)
    s = agg.score
    roots_syn = synonym_related(a.root.label, b.root.label, o)
    roots_outside = not term_concepts(a.root.label, o) and not term_concepts(b.root.label, o)

    if sp == 1 and s == 1:
        verdict = Verdict.EQUAL
    elif sp == 1:
        verdict = Verdict.HOMONYM_NAMING_CONFLICT
    elif s == 1 and (roots_syn or roots_outside):
        verdict = Verdict.SYNONYMOUS
    else:
        verdict = Verdict.DIFFERENT

    return PairVerdict(
        left=a.source,
        right=b.source,
        verdict=verdict,
        sigma_prime=sp,
        sigma=s,
        roots_synonym=roots_syn,
        evidence=_evidence(a, b, agg, o),
        matching=agg.matching,
    )


def build_report(ontologies: list[ComponentOntology],
                 o: DomainOntology,
                 systems: Optional[list[str]] = None) -> ConflictReport:
    """One verdict per cross-system unordered pair, deterministically
    ordered by (system, name) of both sides.

    ``systems`` lets the caller declare systems that contributed no
    components (an empty document still counts as a system).
    """
    if systems is None:
        systems = sorted({c.system for c in ontologies})
    else:
        systems = sorted(set(systems) | {c.system for c in ontologies})
    if len(systems) < 2:
        raise NothingToIntegrateError(
            f"need components from at least 2 systems, got {len(systems)}"
        )
    ordered = sorted(ontologies, key=lambda c: (c.system, c.root.label))
    verdicts: list[PairVerdict] = []
    for idx, a in enumerate(ordered):
        for b in ordered[idx + 1:]:
            if a.system == b.system:
                continue
            verdicts.append(classify_pair(a, b, o))
    counts = {v: 0 for v in Verdict}
    for pv in verdicts:
        counts[pv.verdict] += 1
    return ConflictReport(tuple(verdicts), counts)
