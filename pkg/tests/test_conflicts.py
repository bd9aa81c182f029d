import random
from fractions import Fraction

import pytest

from bcintegrate.conflicts import Verdict, build_report, classify_pair
from bcintegrate.errors import NothingToIntegrateError
from bcintegrate.ontology import EMPTY_ONTOLOGY

from genutil import random_pair, random_system_pair
from test_align import make_onto


def test_person_reader_synonymous(library_ontologies, library_ontology, pick):
    person = pick(library_ontologies, "Lib1", "Person")
    reader = pick(library_ontologies, "Lib2", "Reader")
    pv = classify_pair(person, reader, library_ontology)
    assert pv.verdict is Verdict.SYNONYMOUS
    assert pv.sigma_prime == 0
    assert pv.sigma == 1
    assert pv.roots_synonym


def test_publication_pair_is_naming_conflict(library_ontologies, library_ontology, pick):
    p1 = pick(library_ontologies, "Lib1", "Publication")
    p2 = pick(library_ontologies, "Lib2", "Publication")
    pv = classify_pair(p1, p2, library_ontology)
    assert pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT
    assert pv.sigma_prime == 1
    assert pv.sigma < 1


def test_client_example_is_naming_conflict(client_ontologies):
    pv = classify_pair(client_ontologies[0], client_ontologies[1], EMPTY_ONTOLOGY)
    assert pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT
    assert pv.sigma == Fraction(1, 2)


def test_identical_components_are_equal():
    a = make_onto("client", ["name", "age"], system="S1")
    b = make_onto("client", ["name", "age"], system="S2")
    pv = classify_pair(a, b, EMPTY_ONTOLOGY)
    assert pv.verdict is Verdict.EQUAL


def test_synonymous_requires_root_relation(library_ontology):
    # matching elements but unrelated in-ontology roots must not merge
    a = make_onto("person", ["title"], system="S1")
    b = make_onto("publication", ["title"], system="S2")
    pv = classify_pair(a, b, library_ontology)
    assert pv.sigma == 1
    assert pv.verdict is Verdict.DIFFERENT


def test_evidence_covers_matches_and_unmatched(library_ontologies, library_ontology, pick):
    p1 = pick(library_ontologies, "Lib1", "Publication")
    p2 = pick(library_ontologies, "Lib2", "Publication")
    pv = classify_pair(p1, p2, library_ontology)
    matched = [f for f in pv.evidence if f.left is not None and f.right is not None]
    unmatched = [f for f in pv.evidence if f.left is None or f.right is None]
    assert len(matched) == len(pv.matching)
    # periodicity has no counterpart in Lib2
    assert any(f.left == "periodicity" for f in unmatched)


def test_library_report_counts(library_ontologies, library_ontology):
    report = build_report(library_ontologies, library_ontology)
    assert len(report.verdicts) == 4
    assert report.counts[Verdict.SYNONYMOUS] == 1
    assert report.counts[Verdict.HOMONYM_NAMING_CONFLICT] == 1
    assert report.counts[Verdict.DIFFERENT] == 2
    assert report.counts[Verdict.EQUAL] == 0


def test_single_system_is_an_error(library_ontologies):
    lib1_only = [co for co in library_ontologies if co.system == "Lib1"]
    with pytest.raises(NothingToIntegrateError):
        build_report(lib1_only, EMPTY_ONTOLOGY)


def test_two_systems_one_empty_gives_empty_report(library_ontologies):
    lib1_only = [co for co in library_ontologies if co.system == "Lib1"]
    report = build_report(lib1_only, EMPTY_ONTOLOGY, systems=["Lib1", "Lib2"])
    assert report.verdicts == ()
    assert all(v == 0 for v in report.counts.values())


def test_verdict_symmetry_randomized():
    rng = random.Random(21)
    for _ in range(200):
        o, a, b = random_pair(rng, max_size=4)
        assert classify_pair(a, b, o).verdict is classify_pair(b, a, o).verdict


def test_verdict_partition_consistency_randomized():
    rng = random.Random(22)
    for _ in range(300):
        o, a, b = random_pair(rng, max_size=4)
        pv = classify_pair(a, b, o)
        if pv.verdict is Verdict.EQUAL:
            assert pv.sigma_prime == 1 and pv.sigma == 1
        elif pv.verdict is Verdict.HOMONYM_NAMING_CONFLICT:
            assert pv.sigma_prime == 1 and pv.sigma < 1
        elif pv.verdict is Verdict.SYNONYMOUS:
            assert pv.sigma_prime == 0 and pv.sigma == 1
        else:
            assert not (pv.sigma_prime == 1 and pv.sigma == 1)


def test_report_ordering_is_deterministic():
    rng = random.Random(23)
    for _ in range(20):
        o, ontologies = random_system_pair(rng)
        r1 = build_report(ontologies, o)
        shuffled = ontologies[:]
        rng.shuffle(shuffled)
        r2 = build_report(shuffled, o)
        assert [(pv.left, pv.right, pv.verdict) for pv in r1.verdicts] == \
               [(pv.left, pv.right, pv.verdict) for pv in r2.verdicts]
