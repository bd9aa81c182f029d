"""Turn a BusinessComponent into its concept tree (component ontology).

The tree is one level deep in this version: the root carries the
component name, each attribute and operation becomes one leaf. The
similarity code recurses over children anyway, so deeper trees slot in
later without touching the alignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import BusinessComponent, ComponentKind, ComponentSet
from .terms import normalize


class NodeKind(Enum):
    COMPONENT = "component"
    ATTRIBUTE = "attribute"
    OPERATION = "operation"


@dataclass(frozen=True)
class ConceptNode:
    label: str
    node_kind: NodeKind
    children: tuple["ConceptNode", ...] = ()
    value_type: str | None = None


@dataclass(frozen=True)
class ComponentOntology:
    root: ConceptNode
    source: tuple[str, str]  # (system_id, component name)
    kind: ComponentKind = ComponentKind.ENTITY

    @property
    def system(self) -> str:
        return self.source[0]

    @property
    def label(self) -> str:
        return self.root.label


def transform_bc_to_ontology(bc: BusinessComponent) -> ComponentOntology:
    """Root = normalized component name; one leaf per attribute, then one
    per operation, in document order."""
    children = [
        ConceptNode(normalize(e.name), NodeKind.ATTRIBUTE, value_type=e.value_type)
        for e in bc.attributes
    ]
    children += [
        ConceptNode(normalize(e.name), NodeKind.OPERATION, value_type=e.value_type)
        for e in bc.operations
    ]
    root = ConceptNode(normalize(bc.name), NodeKind.COMPONENT, tuple(children))
    return ComponentOntology(root=root, source=(bc.system_id, bc.name), kind=bc.kind)


def transform_set(cs: ComponentSet) -> list[ComponentOntology]:
    return [transform_bc_to_ontology(bc) for bc in cs.components]
