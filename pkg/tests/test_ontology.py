import json
import random

import pytest

from bcintegrate.errors import (
    OntologyReferenceError,
    ThesaurusConsistencyError,
)
from bcintegrate.ontology import (
    homonym_related,
    load_domain_ontology,
    synonym_related,
    term_concepts,
)

from genutil import TERM_POOL, random_domain


def test_library_fixture_loads(library_ontology):
    o = library_ontology
    assert set(o.concepts) == {"c_person", "c_reading", "c_pub_periodical", "c_pub_any"}
    assert len(o.thesaurus.synonym_groups) == 2
    assert len(o.thesaurus.homonym_entries) == 1


def test_empty_ontology_is_valid():
    o = load_domain_ontology('{"concepts": [], "thesaurus": {"synonyms": [], "homonyms": []}}')
    assert o.concepts == {}


def _doc(concepts, synonyms=(), homonyms=()):
    return json.dumps({
        "concepts": concepts,
        "thesaurus": {"synonyms": list(synonyms), "homonyms": list(homonyms)},
    })


def test_homonym_with_one_sense_rejected():
    doc = _doc([{"id": "c1", "label": "x"}],
               homonyms=[{"term": "pub", "senses": ["c1"]}])
    with pytest.raises(ThesaurusConsistencyError):
        load_domain_ontology(doc)


def test_term_in_two_synonym_groups_rejected():
    doc = _doc([{"id": "c1", "label": "x"}, {"id": "c2", "label": "y"}],
               synonyms=[{"concept": "c1", "terms": ["a", "b"]},
                         {"concept": "c2", "terms": ["b", "c"]}])
    with pytest.raises(ThesaurusConsistencyError):
        load_domain_ontology(doc)


def test_dangling_concept_reference_rejected():
    doc = _doc([{"id": "c1", "label": "x"}],
               synonyms=[{"concept": "c_missing", "terms": ["a"]}])
    with pytest.raises(OntologyReferenceError) as exc:
        load_domain_ontology(doc)
    assert "c_missing" in str(exc.value)


def test_term_cannot_be_synonym_and_homonym():
    doc = _doc(
        [{"id": "c1", "label": "x"}, {"id": "c2", "label": "y"},
         {"id": "c3", "label": "z"}],
        synonyms=[{"concept": "c1", "terms": ["pub", "issue"]}],
        homonyms=[{"term": "pub", "senses": ["c2", "c3"]}],
    )
    with pytest.raises(ThesaurusConsistencyError):
        load_domain_ontology(doc)


def test_term_concepts_examples(library_ontology):
    o = library_ontology
    assert term_concepts("reader", o) == {"c_person"}
    assert term_concepts("publication", o) == {"c_pub_periodical", "c_pub_any"}
    assert term_concepts("zzz_unknown", o) == frozenset()


def test_synonym_related_examples(library_ontology):
    o = library_ontology
    assert synonym_related("reading", "consulting", o)
    assert synonym_related("reading", "reading", o)
    assert not synonym_related("first name", "age", o)


def test_homonym_related_examples(library_ontology):
    o = library_ontology
    assert homonym_related("publication", "publication", o)
    assert not homonym_related("publication", "reading", o)
    assert not homonym_related("person", "person", o)


def test_relations_symmetric_and_exclusive():
    rng = random.Random(7)
    for _ in range(100):
        o = random_domain(rng)
        for _ in range(20):
            t1, t2 = rng.choice(TERM_POOL), rng.choice(TERM_POOL)
            assert synonym_related(t1, t2, o) == synonym_related(t2, t1, o)
            assert homonym_related(t1, t2, o) == homonym_related(t2, t1, o)
            assert not (synonym_related(t1, t2, o) and homonym_related(t1, t2, o))


def test_taxonomy_cycle_rejected():
    doc = _doc([{"id": "c1", "label": "x", "parent": "c2"},
                {"id": "c2", "label": "y", "parent": "c1"}])
    from bcintegrate.errors import DocumentValidationError
    with pytest.raises(DocumentValidationError):
        load_domain_ontology(doc)
