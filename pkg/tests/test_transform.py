import random

from bcintegrate.model import BusinessComponent, ComponentKind
from bcintegrate.transform import NodeKind, transform_bc_to_ontology

from genutil import random_component


def test_person_tree(library_ontologies, pick):
    person = pick(library_ontologies, "Lib1", "Person")
    assert person.root.label == "person"
    assert [c.label for c in person.root.children] == [
        "reader number", "first name", "name", "reading",
    ]
    assert person.root.children[-1].node_kind is NodeKind.OPERATION
    assert person.root.children[0].node_kind is NodeKind.ATTRIBUTE


def test_reader_tree(library_ontologies, pick):
    reader = pick(library_ontologies, "Lib2", "Reader")
    assert len(reader.root.children) == 4
    assert reader.root.children[-1].label == "consulting"


def test_component_without_elements():
    bc = BusinessComponent("Empty", "S1", ComponentKind.UTILITY)
    co = transform_bc_to_ontology(bc)
    assert co.root.label == "empty"
    assert co.root.children == ()
    assert co.kind is ComponentKind.UTILITY


def test_child_count_always_matches():
    rng = random.Random(11)
    for _ in range(100):
        bc = random_component(rng, "S1", "x", rng.randint(0, 8))
        co = transform_bc_to_ontology(bc)
        assert len(co.root.children) == len(bc.attributes) + len(bc.operations)


def test_attributes_before_operations_leaves_are_leaves():
    rng = random.Random(12)
    bc = random_component(rng, "S1", "x", 6)
    co = transform_bc_to_ontology(bc)
    kinds = [c.node_kind for c in co.root.children]
    split = len(bc.attributes)
    assert all(k is NodeKind.ATTRIBUTE for k in kinds[:split])
    assert all(k is NodeKind.OPERATION for k in kinds[split:])
    assert all(c.children == () for c in co.root.children)


def test_distinct_element_multisets_give_distinct_trees():
    rng = random.Random(13)
    for _ in range(50):
        a = random_component(rng, "S1", "same", rng.randint(1, 6))
        b = random_component(rng, "S1", "same", rng.randint(1, 6))
        ta = transform_bc_to_ontology(a)
        tb = transform_bc_to_ontology(b)
        labels_a = sorted(c.label for c in ta.root.children)
        labels_b = sorted(c.label for c in tb.root.children)
        if labels_a != labels_b:
            assert ta.root != tb.root
