"""XML importer for component diagrams exported from modeling tools.

The dialect is deliberately small::

    <model system="Lib1">
      <component name="Person" kind="entity">
        <attribute name="reader number" type="string"/>
        <operation name="reading"/>
        <provided name="reading"/>
        <required name="consulting"/>
      </component>
    </model>

Unknown elements and attributes are skipped with a warning, never an
error, so annotated tool exports still import.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from typing import Callable, Optional

from .errors import DocumentParseError, DocumentValidationError, UniquenessError
from .model import (
    BusinessComponent,
    ComponentKind,
    ComponentSet,
    Element,
    ElementKind,
    KIND_LITERALS,
    validate_component,
)
from .terms import normalize

_KNOWN_CHILDREN = {"attribute", "operation", "provided", "required"}


def import_xml(document: str, on_warning: Optional[Callable[[str], None]] = None) -> ComponentSet:
    """Convert an XML component model to a ComponentSet.

    ``on_warning`` receives one message per skipped unknown element.
    """
    warn = on_warning or (lambda msg: None)
    try:
        root = ET.fromstring(document)
    except ET.ParseError as exc:
        line, column = exc.position
        raise DocumentParseError(f"XML not well-formed: {exc.msg.split(':')[0]}",
                                 line, column) from exc
    if root.tag != "model":
        raise DocumentValidationError(f"root element must be <model>, got <{root.tag}>")
    system = root.get("system")
    if system is None:
        raise DocumentValidationError("<model> needs a system attribute")

    components: list[BusinessComponent] = []
    seen: set[tuple[str, str]] = set()
    for node in root:
        if node.tag != "component":
            warn(f"skipping unknown element <{node.tag}> under <model>")
            continue
        name = node.get("name")
        if name is None:
            raise DocumentValidationError("<component> is missing its name attribute")
        kind_literal = (node.get("kind") or "entity").lower()
        if kind_literal not in KIND_LITERALS:
            raise DocumentValidationError(
                f"component {name!r}: unknown kind {node.get('kind')!r}; "
                f"legal kinds are {', '.join(KIND_LITERALS)}"
            )
        attributes: list[Element] = []
        operations: list[Element] = []
        provides: list[str] = []
        requires: list[str] = []
        for child in node:
            if child.tag not in _KNOWN_CHILDREN:
                warn(f"skipping unknown element <{child.tag}> in component {name!r}")
                continue
            cname = child.get("name")
            if cname is None:
                raise DocumentValidationError(
                    f"<{child.tag}> in component {name!r} is missing its name attribute"
                )
            if child.tag == "attribute":
                attributes.append(Element(cname, ElementKind.ATTRIBUTE, child.get("type")))
            elif child.tag == "operation":
                operations.append(Element(cname, ElementKind.OPERATION, child.get("type")))
            elif child.tag == "provided":
                provides.append(cname)
            else:
                requires.append(cname)
        bc = BusinessComponent(
            name=name,
            system_id=system,
            kind=ComponentKind(kind_literal),
            attributes=tuple(attributes),
            operations=tuple(operations),
            provides=tuple(provides),
            requires=tuple(requires),
        )
        problems = validate_component(bc)
        if problems:
            raise DocumentValidationError("; ".join(str(v) for v in problems))
        key = (bc.system_id, normalize(bc.name))
        if key in seen:
            raise UniquenessError(f"duplicate component {name!r} in system {system!r}")
        seen.add(key)
        components.append(bc)
    return ComponentSet(tuple(components), (system,))
