"""Build the merged representation ontology from a conflict report.

Equal and Synonymous pairs are unified (transitive closure) into
canonical concepts with provenance aliases; homonym-conflict pairs stay
apart as system-qualified concepts and are listed as unresolved; pairs
judged Different pass through untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .conflicts import ConflictReport, PairVerdict, Verdict
from .errors import MergeConsistencyError
from .model import (
    BusinessComponent,
    ComponentKind,
    ComponentSet,
    Element,
    ElementKind,
)
from .ontology import DomainOntology
from .transform import ComponentOntology, NodeKind


class CorrespondenceKind(Enum):
    ONE_TO_ONE = "OneToOne"
    ONE_TO_MANY = "OneToMany"
    MANY_TO_ONE = "ManyToOne"
    MANY_TO_MANY = "ManyToMany"


class CorrespondenceRelation(Enum):
    SYNONYM = "Synonym"
    EQUAL = "Equal"


@dataclass(frozen=True)
class Correspondence:
    kind: CorrespondenceKind
    relation: CorrespondenceRelation
    left: tuple[str, ...]   # concept references, "system.name[.element]"
    right: tuple[str, ...]


@dataclass(frozen=True)
class MergedChild:
    label: str
    element_kind: ElementKind
    value_type: Optional[str]
    aliases: tuple[tuple[str, str, str], ...]  # (system, component, element label)


@dataclass(frozen=True)
class MergedConcept:
    label: str
    qualified: bool            # True = kept apart because of a homonym conflict
    aliases: tuple[tuple[str, str], ...]  # (system, component name)
    kinds: tuple[ComponentKind, ...]
    children: tuple[MergedChild, ...]


@dataclass(frozen=True)
class RepresentationOntology:
    canonical_concepts: tuple[MergedConcept, ...]
    correspondences: tuple[Correspondence, ...]
    unresolved_conflicts: tuple[PairVerdict, ...]

    def unified(self) -> list[MergedConcept]:
        return [c for c in self.canonical_concepts if not c.qualified]

    def system_qualified(self) -> list[MergedConcept]:
        return [c for c in self.canonical_concepts if c.qualified]


def _correspondence_kind(nl: int, nr: int) -> CorrespondenceKind:
    if nl == 1 and nr == 1:
        return CorrespondenceKind.ONE_TO_ONE
    if nl == 1:
        return CorrespondenceKind.ONE_TO_MANY
    if nr == 1:
        return CorrespondenceKind.MANY_TO_ONE
    return CorrespondenceKind.MANY_TO_MANY


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _qualified_name(co: ComponentOntology) -> str:
    return f"{co.system.lower()}.{co.root.label}"


def _canonical_label(group: list[ComponentOntology], pairs: list[PairVerdict],
                     o: DomainOntology) -> str:
    """Prefer the thesaurus concept label when the roots are synonym
    related; fall back to the lexicographically smallest root label."""
    if any(pv.roots_synonym for pv in pairs):
        for co in sorted(group, key=lambda c: (c.system, c.root.label)):
            g = o._term_to_group.get(co.root.label)
            if g is not None and g.concept_id in o.concepts:
                return o.concepts[g.concept_id].label
    return min(c.root.label for c in group)


def _child_label(labels: list[str], o: DomainOntology) -> str:
    distinct = sorted(set(labels))
    if len(distinct) == 1:
        return distinct[0]
    groups = {id(o._term_to_group[l]) for l in distinct if l in o._term_to_group}
    if len(groups) == 1 and all(l in o._term_to_group for l in distinct):
        g = o._term_to_group[distinct[0]]
        if g.concept_id in o.concepts:
            return o.concepts[g.concept_id].label
    return distinct[0]


def _split_sides(refs: list[str], systems: list[str]) -> tuple[list[str], list[str]]:
    lead = min(systems)
    left = [r for r, s in zip(refs, systems) if s == lead]
    right = [r for r, s in zip(refs, systems) if s != lead]
    return left, right


def build_representation(report: ConflictReport,
                         ontologies: list[ComponentOntology],
                         o: DomainOntology) -> RepresentationOntology:
    """Unify per the report and return the representation ontology."""
    by_source = {co.source: co for co in ontologies}
    for pv in report.verdicts:
        if pv.left not in by_source or pv.right not in by_source:
            missing = pv.left if pv.left not in by_source else pv.right
            raise MergeConsistencyError(
                f"report references unknown component {missing[0]}/{missing[1]}"
            )

    uf = _UnionFind()
    for co in ontologies:
        uf.find(co.source)
    pair_verdicts: dict[frozenset, PairVerdict] = {}
    homonym_involved: set[tuple[str, str]] = set()
    for pv in report.verdicts:
        pair_verdicts[frozenset((pv.left, pv.right))] = pv
        if pv.verdict in (Verdict.EQUAL, Verdict.SYNONYMOUS):
            uf.union(pv.left, pv.right)
        elif pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT:
            homonym_involved.add(pv.left)
            homonym_involved.add(pv.right)

    groups: dict = {}
    for co in ontologies:
        groups.setdefault(uf.find(co.source), []).append(co)

    # a group that internally contains a homonym-conflict pair cannot be
    # unified without breaking the no-homonym-unification rule: dissolve it
    final_groups: list[list[ComponentOntology]] = []
    for members in groups.values():
        internal_conflict = False
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                pv = pair_verdicts.get(frozenset((a.source, b.source)))
                if pv is not None and pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT:
                    internal_conflict = True
        if internal_conflict and len(members) > 1:
            final_groups.extend([m] for m in members)
        else:
            final_groups.append(members)

    concepts: list[MergedConcept] = []
    correspondences: list[Correspondence] = []

    for members in final_groups:
        members = sorted(members, key=lambda c: (c.system, c.root.label))
        rep = members[0]
        if len(members) == 1 and rep.source in homonym_involved:
            concepts.append(_single_concept(rep, qualified=True))
            continue
        if len(members) == 1:
            concepts.append(_single_concept(rep, qualified=False))
            continue

        internal = [
            pv for key, pv in pair_verdicts.items()
            if all(src in {m.source for m in members} for src in key)
            and pv.verdict in (Verdict.EQUAL, Verdict.SYNONYMOUS)
        ]
        label = _canonical_label(members, internal, o)
        aliases = tuple((m.system, m.source[1]) for m in members)

        # unify children across the group using the stored matchings
        cuf = _UnionFind()
        for m in members:
            for ci in range(len(m.root.children)):
                cuf.find((m.source, ci))
        for pv in internal:
            for i, j in pv.matching:
                cuf.union((pv.left, i), (pv.right, j))

        classes: dict = {}
        for m in members:
            for ci in range(len(m.root.children)):
                classes.setdefault(cuf.find((m.source, ci)), []).append((m, ci))

        children: list[MergedChild] = []
        ordered_classes = []
        seen_roots = set()
        for ci in range(len(rep.root.children)):
            root_key = cuf.find((rep.source, ci))
            if root_key not in seen_roots:
                seen_roots.add(root_key)
                ordered_classes.append(classes[root_key])
        for key in sorted(classes, key=lambda k: (str(k),)):
            if key not in seen_roots:
                seen_roots.add(key)
                ordered_classes.append(classes[key])

        for cls in ordered_classes:
            cls = sorted(cls, key=lambda mc: (mc[0].system, mc[0].root.label, mc[1]))
            labels = [m.root.children[ci].label for m, ci in cls]
            rep_node = cls[0][0].root.children[cls[0][1]]
            kind = (ElementKind.OPERATION
                    if rep_node.node_kind is NodeKind.OPERATION else ElementKind.ATTRIBUTE)
            children.append(MergedChild(
                label=_child_label(labels, o),
                element_kind=kind,
                value_type=rep_node.value_type,
                aliases=tuple((m.system, m.source[1], m.root.children[ci].label)
                              for m, ci in cls),
            ))
            if len(cls) > 1:
                refs = [f"{m.system}.{m.source[1]}.{m.root.children[ci].label}"
                        for m, ci in cls]
                systems = [m.system for m, _ in cls]
                lrefs, rrefs = _split_sides(refs, systems)
                relation = (CorrespondenceRelation.EQUAL if len(set(labels)) == 1
                            else CorrespondenceRelation.SYNONYM)
                correspondences.append(Correspondence(
                    _correspondence_kind(len(lrefs), len(rrefs)),
                    relation, tuple(lrefs), tuple(rrefs)))

        refs = [f"{m.system}.{m.source[1]}" for m in members]
        systems = [m.system for m in members]
        lrefs, rrefs = _split_sides(refs, systems)
        relation = (CorrespondenceRelation.EQUAL
                    if all(pv.verdict is Verdict.EQUAL for pv in internal)
                    else CorrespondenceRelation.SYNONYM)
        correspondences.append(Correspondence(
            _correspondence_kind(len(lrefs), len(rrefs)),
            relation, tuple(lrefs), tuple(rrefs)))

        concepts.append(MergedConcept(
            label=label,
            qualified=False,
            aliases=aliases,
            kinds=tuple(m.kind for m in members),
            children=tuple(children),
        ))

    concepts.sort(key=lambda c: (c.label, c.aliases))
    correspondences.sort(key=lambda c: (c.left, c.right))
    unresolved = tuple(sorted(
        (pv for pv in report.verdicts if pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT),
        key=lambda pv: (pv.left, pv.right),
    ))
    return RepresentationOntology(tuple(concepts), tuple(correspondences), unresolved)


def _single_concept(co: ComponentOntology, qualified: bool) -> MergedConcept:
    children = tuple(
        MergedChild(
            label=node.label,
            element_kind=(ElementKind.OPERATION if node.node_kind is NodeKind.OPERATION
                          else ElementKind.ATTRIBUTE),
            value_type=node.value_type,
            aliases=((co.system, co.source[1], node.label),),
        )
        for node in co.root.children
    )
    return MergedConcept(
        label=_qualified_name(co) if qualified else co.root.label,
        qualified=qualified,
        aliases=((co.system, co.source[1]),),
        kinds=(co.kind,),
        children=children,
    )


def extract_result_components(
    r: RepresentationOntology,
    on_warning: Optional[Callable[[str], None]] = None,
) -> ComponentSet:
    """One component per merged concept; elements come from the unified
    child classes. Kind disagreements fall back to Entity with a warning."""
    warn = on_warning or (lambda msg: None)
    components: list[BusinessComponent] = []
    used_names: set[str] = set()
    for concept in sorted(r.canonical_concepts, key=lambda c: (c.label, c.aliases)):
        kinds = set(concept.kinds)
        if len(kinds) == 1:
            kind = concept.kinds[0]
        else:
            kind = ComponentKind.ENTITY
            warn(f"concept {concept.label!r}: member kinds disagree "
                 f"({', '.join(sorted(k.value for k in kinds))}); using entity")
        name = concept.label
        if name in used_names:
            # label collision between a canonical concept and a survivor;
            # qualify with the first alias's system to stay parseable
            name = f"{concept.aliases[0][0].lower()}.{concept.label}"
        used_names.add(name)
        attributes = [
            Element(c.label, ElementKind.ATTRIBUTE, c.value_type)
            for c in concept.children if c.element_kind is ElementKind.ATTRIBUTE
        ]
        operations = [
            Element(c.label, ElementKind.OPERATION, c.value_type)
            for c in concept.children if c.element_kind is ElementKind.OPERATION
        ]
        components.append(BusinessComponent(
            name=name,
            system_id="merged",
            kind=kind,
            attributes=tuple(attributes),
            operations=tuple(operations),
        ))
    return ComponentSet(tuple(components))


def representation_to_dict(r: RepresentationOntology) -> dict:
    return {
        "canonical_concepts": [
            {
                "label": c.label,
                "qualified": c.qualified,
                "aliases": [{"system": s, "component": n} for s, n in c.aliases],
                "kinds": [k.value for k in c.kinds],
                "children": [
                    {
                        "label": ch.label,
                        "element_kind": ch.element_kind.value,
                        "value_type": ch.value_type,
                        "aliases": [
                            {"system": s, "component": comp, "element": e}
                            for s, comp, e in ch.aliases
                        ],
                    }
                    for ch in c.children
                ],
            }
            for c in r.canonical_concepts
        ],
        "correspondences": [
            {
                "kind": c.kind.value,
                "relation": c.relation.value,
                "left": list(c.left),
                "right": list(c.right),
            }
            for c in r.correspondences
        ],
        "unresolved_conflicts": [
            {
                "left": {"system": pv.left[0], "component": pv.left[1]},
                "right": {"system": pv.right[0], "component": pv.right[1]},
                "verdict": pv.verdict.value,
                "sigma_prime": pv.sigma_prime,
                "sigma": str(pv.sigma),
            }
            for pv in r.unresolved_conflicts
        ],
    }


def serialize_representation(r: RepresentationOntology) -> str:
    return json.dumps(representation_to_dict(r), indent=2, ensure_ascii=False,
                      sort_keys=True) + "\n"
