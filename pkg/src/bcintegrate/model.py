"""Core domain types for business components and the native JSON format.

A component document looks like::

    { "system": "Lib1",
      "components": [
        { "name": "Person",
          "kind": "entity",
          "attributes": [ {"name": "reader number", "type": "string"} ],
          "operations": [ {"name": "reading"} ],
          "provides": ["reading"],
          "requires": [] } ] }

``system`` at the top level is the default for every component; a
component may carry its own ``system`` key, which is how mixed-system
sets are serialized.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DocumentParseError, DocumentValidationError, UniquenessError
from .terms import normalize

KIND_LITERALS = ("entity", "process", "utility", "data")


class ComponentKind(Enum):
    ENTITY = "entity"
    PROCESS = "process"
    UTILITY = "utility"
    DATA = "data"


class ElementKind(Enum):
    ATTRIBUTE = "attribute"
    OPERATION = "operation"


@dataclass(frozen=True)
class Element:
    name: str
    element_kind: ElementKind
    value_type: Optional[str] = None  # never consulted by similarity


@dataclass(frozen=True)
class BusinessComponent:
    name: str
    system_id: str
    kind: ComponentKind
    attributes: tuple[Element, ...] = ()
    operations: tuple[Element, ...] = ()
    provides: tuple[str, ...] = ()
    requires: tuple[str, ...] = ()


@dataclass(frozen=True)
class ComponentSet:
    components: tuple[BusinessComponent, ...] = ()
    # systems named by the source documents, even when they contributed
    # zero components (an empty system still participates in a merge)
    declared_systems: tuple[str, ...] = ()

    def systems(self) -> list[str]:
        seen: list[str] = list(self.declared_systems)
        for bc in self.components:
            if bc.system_id not in seen:
                seen.append(bc.system_id)
        return seen

    def find(self, name: str, system: Optional[str] = None) -> list[BusinessComponent]:
        """Components whose normalized name matches, optionally filtered by system."""
        wanted = normalize(name)
        return [
            bc
            for bc in self.components
            if normalize(bc.name) == wanted and (system is None or bc.system_id == system)
        ]


@dataclass(frozen=True)
class Violation:
    component: str
    field: str
    rule: str

    def __str__(self) -> str:
        return f"{self.component}: {self.field}: {self.rule}"


def validate_component(bc: BusinessComponent) -> list[Violation]:
    """Check the BusinessComponent invariants; empty list means clean."""
    violations: list[Violation] = []
    label = f"{bc.system_id}/{bc.name}" if bc.name else f"{bc.system_id}/<unnamed>"
    if not normalize(bc.name):
        violations.append(Violation(label, "name", "name is empty after normalization"))
    for fname, elements in (("attributes", bc.attributes), ("operations", bc.operations)):
        seen: set[str] = set()
        for el in elements:
            n = normalize(el.name)
            if not n:
                violations.append(Violation(label, fname, "element name is empty after normalization"))
                continue
            if n in seen:
                violations.append(Violation(label, fname, f"duplicate element name {n!r}"))
            seen.add(n)
    return violations


def _parse_elements(raw, kind: ElementKind, where: str) -> tuple[Element, ...]:
    if not isinstance(raw, list):
        raise DocumentValidationError(f"{where} must be an array")
    out = []
    for item in raw:
        if isinstance(item, str):
            out.append(Element(item, kind))
            continue
        if not isinstance(item, dict) or "name" not in item:
            raise DocumentValidationError(f"{where}: each entry needs a name")
        out.append(Element(str(item["name"]), kind, item.get("type")))
    return tuple(out)


def _parse_component(raw: dict, default_system: Optional[str]) -> BusinessComponent:
    if "name" not in raw:
        raise DocumentValidationError("component is missing required key 'name'")
    system = raw.get("system", default_system)
    if system is None:
        raise DocumentValidationError(
            f"component {raw['name']!r} has no system and the document sets no default"
        )
    kind_literal = str(raw.get("kind", "entity")).lower()
    if kind_literal not in KIND_LITERALS:
        raise DocumentValidationError(
            f"component {raw['name']!r}: unknown kind {raw.get('kind')!r}; "
            f"legal kinds are {', '.join(KIND_LITERALS)}"
        )
    return BusinessComponent(
        name=str(raw["name"]),
        system_id=str(system),
        kind=ComponentKind(kind_literal),
        attributes=_parse_elements(raw.get("attributes", []), ElementKind.ATTRIBUTE,
                                   f"component {raw['name']!r} attributes"),
        operations=_parse_elements(raw.get("operations", []), ElementKind.OPERATION,
                                   f"component {raw['name']!r} operations"),
        provides=tuple(str(p) for p in raw.get("provides", [])),
        requires=tuple(str(r) for r in raw.get("requires", [])),
    )


def parse_component_set(document: str) -> ComponentSet:
    """Parse a native component document into a ComponentSet.

    Raises DocumentParseError on bad JSON, UniquenessError on a repeated
    (system, name), DocumentValidationError on anything else.
    """
    try:
        data = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentParseError(f"not valid JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    if not isinstance(data, dict):
        raise DocumentValidationError("top level must be an object")
    if "components" not in data or not isinstance(data["components"], list):
        raise DocumentValidationError("top level needs a 'components' array")
    default_system = data.get("system")

    components = []
    seen: set[tuple[str, str]] = set()
    for raw in data["components"]:
        if not isinstance(raw, dict):
            raise DocumentValidationError("each component must be an object")
        bc = _parse_component(raw, default_system)
        problems = validate_component(bc)
        if problems:
            raise DocumentValidationError("; ".join(str(v) for v in problems))
        key = (bc.system_id, normalize(bc.name))
        if key in seen:
            raise UniquenessError(
                f"duplicate component {bc.name!r} in system {bc.system_id!r}"
            )
        seen.add(key)
        components.append(bc)
    declared = (str(default_system),) if default_system is not None else ()
    return ComponentSet(tuple(components), declared)


def serialize_component_set(cs: ComponentSet) -> str:
    """Render a ComponentSet back to the native format (round-trip stable)."""
    doc: dict = {}
    default_system = cs.declared_systems[0] if len(cs.declared_systems) == 1 else None
    if default_system is not None:
        doc["system"] = default_system
    doc["components"] = []
    for bc in cs.components:
        raw: dict = {"name": bc.name}
        if bc.system_id != default_system:
            raw["system"] = bc.system_id
        raw["kind"] = bc.kind.value
        raw["attributes"] = [
            {"name": e.name} if e.value_type is None else {"name": e.name, "type": e.value_type}
            for e in bc.attributes
        ]
        raw["operations"] = [
            {"name": e.name} if e.value_type is None else {"name": e.name, "type": e.value_type}
            for e in bc.operations
        ]
        raw["provides"] = list(bc.provides)
        raw["requires"] = list(bc.requires)
        doc["components"].append(raw)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def merge_component_sets(sets: list[ComponentSet]) -> ComponentSet:
    """Union several parsed documents, re-checking (system, name) uniqueness."""
    components: list[BusinessComponent] = []
    declared: list[str] = []
    seen: set[tuple[str, str]] = set()
    for cs in sets:
        for s in cs.declared_systems:
            if s not in declared:
                declared.append(s)
        for bc in cs.components:
            key = (bc.system_id, normalize(bc.name))
            if key in seen:
                raise UniquenessError(
                    f"duplicate component {bc.name!r} in system {bc.system_id!r}"
                )
            seen.add(key)
            components.append(bc)
    return ComponentSet(tuple(components), tuple(declared))
