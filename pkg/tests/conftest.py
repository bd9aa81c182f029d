import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bcintegrate.model import merge_component_sets, parse_component_set
from bcintegrate.ontology import EMPTY_ONTOLOGY, load_domain_ontology
from bcintegrate.transform import transform_set

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def library_ontology():
    return load_domain_ontology((DATA / "library.onto.json").read_text())


@pytest.fixture(scope="session")
def empty_ontology():
    return EMPTY_ONTOLOGY


@pytest.fixture(scope="session")
def library_set():
    return merge_component_sets([
        parse_component_set((DATA / "lib1.json").read_text()),
        parse_component_set((DATA / "lib2.json").read_text()),
    ])


@pytest.fixture(scope="session")
def library_ontologies(library_set):
    return transform_set(library_set)


@pytest.fixture(scope="session")
def client_ontologies():
    cs = merge_component_sets([
        parse_component_set((DATA / "client_s1.json").read_text()),
        parse_component_set((DATA / "client_s2.json").read_text()),
    ])
    return transform_set(cs)


def by_source(ontologies, system, name):
    for co in ontologies:
        if co.source == (system, name):
            return co
    raise KeyError((system, name))


@pytest.fixture(scope="session")
def pick():
    return by_source
