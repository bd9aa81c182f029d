"""bcintegrate: detect and resolve naming conflicts (synonyms, homonyms)
among business components via concept-tree ontologies and a thesaurus."""

from .align import (
    AggregateResult,
    SimilarityMatrix,
    aggregate_similarity,
    brute_force_aggregate,
    semantic_similarity_atomic,
)
from .conflicts import ConflictReport, PairVerdict, Verdict, build_report, classify_pair
from .ingest import import_xml
from .merge import (
    RepresentationOntology,
    build_representation,
    extract_result_components,
    serialize_representation,
)
from .model import (
    BusinessComponent,
    ComponentKind,
    ComponentSet,
    Element,
    ElementKind,
    parse_component_set,
    serialize_component_set,
    validate_component,
)
from .ontology import (
    DomainOntology,
    homonym_related,
    load_domain_ontology,
    synonym_related,
    term_concepts,
)
from .terms import normalize, syntactic_similarity
from .transform import ComponentOntology, transform_bc_to_ontology, transform_set

__version__ = "0.1.0"
