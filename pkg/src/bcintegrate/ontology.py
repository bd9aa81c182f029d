"""Domain ontology: a concept taxonomy plus a thesaurus.

The thesaurus carries the derived terms that drive the semantic
similarity: synonym groups (several surface forms, one concept) and
homonym entries (one surface form, two or more concept senses).

Document format::

    { "concepts": [ {"id": "c_person", "label": "person", "parent": null} ],
      "thesaurus": {
        "synonyms": [ {"concept": "c_person", "terms": ["person", "reader"]} ],
        "homonyms": [ {"term": "publication",
                       "senses": ["c_pub_periodical", "c_pub_any"]} ] } }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    DocumentParseError,
    DocumentValidationError,
    OntologyReferenceError,
    ThesaurusConsistencyError,
)
from .terms import normalize


@dataclass(frozen=True)
class Concept:
    id: str
    label: str
    parent: Optional[str] = None


@dataclass(frozen=True)
class SynonymGroup:
    concept_id: str
    terms: frozenset[str]


@dataclass(frozen=True)
class HomonymEntry:
    term: str
    senses: frozenset[str]


@dataclass(frozen=True)
class Thesaurus:
    synonym_groups: tuple[SynonymGroup, ...] = ()
    homonym_entries: tuple[HomonymEntry, ...] = ()


@dataclass(frozen=True)
class DomainOntology:
    concepts: dict[str, Concept] = field(default_factory=dict)
    thesaurus: Thesaurus = field(default_factory=Thesaurus)
    # derived indexes, built at load
    _term_to_group: dict[str, SynonymGroup] = field(default_factory=dict, repr=False)
    _term_to_homonym: dict[str, HomonymEntry] = field(default_factory=dict, repr=False)
    _label_to_concepts: dict[str, frozenset[str]] = field(default_factory=dict, repr=False)


EMPTY_ONTOLOGY = DomainOntology()


def build_domain_ontology(concepts: list[Concept], thesaurus: Thesaurus) -> DomainOntology:
    """Assemble and verify a DomainOntology from parsed pieces."""
    table: dict[str, Concept] = {}
    for c in concepts:
        if c.id in table:
            raise DocumentValidationError(f"duplicate concept id {c.id!r}")
        table[c.id] = c
    for c in table.values():
        if c.parent is not None and c.parent not in table:
            raise OntologyReferenceError(
                f"concept {c.id!r} has unknown parent {c.parent!r}"
            )
    # parent links must form a forest
    for c in table.values():
        slow = c.id
        seen = {slow}
        cur = table[slow].parent
        while cur is not None:
            if cur in seen:
                raise DocumentValidationError(f"taxonomy cycle through concept {c.id!r}")
            seen.add(cur)
            cur = table[cur].parent

    term_to_group: dict[str, SynonymGroup] = {}
    for g in thesaurus.synonym_groups:
        if g.concept_id not in table:
            raise OntologyReferenceError(
                f"synonym group references unknown concept {g.concept_id!r}"
            )
        for term in g.terms:
            if term in term_to_group:
                raise ThesaurusConsistencyError(
                    f"term {term!r} appears in two synonym groups"
                )
            term_to_group[term] = g

    term_to_homonym: dict[str, HomonymEntry] = {}
    for h in thesaurus.homonym_entries:
        if len(h.senses) < 2:
            raise ThesaurusConsistencyError(
                f"homonym entry {h.term!r} needs at least 2 senses"
            )
        for sense in h.senses:
            if sense not in table:
                raise OntologyReferenceError(
                    f"homonym {h.term!r} references unknown concept {sense!r}"
                )
        if h.term in term_to_homonym:
            raise ThesaurusConsistencyError(f"duplicate homonym entry for {h.term!r}")
        if h.term in term_to_group:
            raise ThesaurusConsistencyError(
                f"term {h.term!r} cannot be both a synonym and a homonym"
            )
        term_to_homonym[h.term] = h

    label_to_concepts: dict[str, set[str]] = {}
    for c in table.values():
        label_to_concepts.setdefault(c.label, set()).add(c.id)

    return DomainOntology(
        concepts=table,
        thesaurus=thesaurus,
        _term_to_group=term_to_group,
        _term_to_homonym=term_to_homonym,
        _label_to_concepts={k: frozenset(v) for k, v in label_to_concepts.items()},
    )


def load_domain_ontology(document: str) -> DomainOntology:
    """Parse and verify an ontology document; any violation aborts the load."""
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(f"not valid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise DocumentValidationError("top level must be an object")

    concepts = []
    for raw in data.get("concepts", []):
        if not isinstance(raw, dict) or "id" not in raw or "label" not in raw:
            raise DocumentValidationError("each concept needs an id and a label")
        concepts.append(Concept(str(raw["id"]), normalize(str(raw["label"])), raw.get("parent")))

    th = data.get("thesaurus", {})
    groups = []
    for raw in th.get("synonyms", []):
        if "concept" not in raw or "terms" not in raw:
            raise DocumentValidationError("each synonym group needs a concept and terms")
        terms = frozenset(normalize(str(t)) for t in raw["terms"])
        groups.append(SynonymGroup(str(raw["concept"]), terms))
    homonyms = []
    for raw in th.get("homonyms", []):
        if "term" not in raw or "senses" not in raw:
            raise DocumentValidationError("each homonym entry needs a term and senses")
        homonyms.append(
            HomonymEntry(normalize(str(raw["term"])), frozenset(str(s) for s in raw["senses"]))
        )
    return build_domain_ontology(concepts, Thesaurus(tuple(groups), tuple(homonyms)))


def term_concepts(term: str, o: DomainOntology) -> frozenset[str]:
    """All concept ids the (normalized) term can denote; empty means the
    term is outside the domain ontology."""
    ids: set[str] = set()
    group = o._term_to_group.get(term)
    if group is not None:
        ids.add(group.concept_id)
    homonym = o._term_to_homonym.get(term)
    if homonym is not None:
        ids.update(homonym.senses)
    ids.update(o._label_to_concepts.get(term, ()))
    return frozenset(ids)


def synonym_related(t1: str, t2: str, o: DomainOntology) -> bool:
    """True iff both terms sit in the same synonym group."""
    g1 = o._term_to_group.get(t1)
    return g1 is not None and g1 is o._term_to_group.get(t2)


def homonym_related(t1: str, t2: str, o: DomainOntology) -> bool:
    """True iff the terms are the same surface form and that form has a
    homonym entry (several senses)."""
    return t1 == t2 and t1 in o._term_to_homonym
