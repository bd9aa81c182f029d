"""Similarity core: atomic 0/1 semantic similarity, exact-rational
aggregation over concept trees, and the maximum-weight matching that
pairs elements up.

All scores are ``fractions.Fraction`` values; the conflict verdicts hinge
on score == 1 exactly, so nothing here ever touches floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import OracleSizeError
from .ontology import DomainOntology, homonym_related, synonym_related, term_concepts
from .terms import normalize, syntactic_similarity
from .transform import ComponentOntology, ConceptNode

ZERO = Fraction(0)
ONE = Fraction(1)

BRUTE_FORCE_LIMIT = 8

# which thesaurus rule decided an atomic comparison (for report evidence)
RULE_SYNONYM = "synonym"
RULE_HOMONYM = "homonym"
RULE_SHARED_CONCEPT = "shared-concept"
RULE_DISJOINT_CONCEPTS = "disjoint-concepts"
RULE_SYNTACTIC = "syntactic"


def semantic_similarity_atomic(t1: str, t2: str, o: DomainOntology) -> int:
    return atomic_with_rule(t1, t2, o)[0]


def atomic_with_rule(t1: str, t2: str, o: DomainOntology) -> tuple[int, str]:
    """Table-driven 0/1 similarity plus the rule that decided it.

    Ladder: synonym group -> 1; homonym entry -> 0; both terms known to
    the ontology -> compare denoted concepts; otherwise fall back to
    plain syntactic equality.
    """
    n1, n2 = normalize(t1), normalize(t2)
    if synonym_related(n1, n2, o):
        return 1, RULE_SYNONYM
    if homonym_related(n1, n2, o):
        return 0, RULE_HOMONYM
    c1 = term_concepts(n1, o)
    c2 = term_concepts(n2, o)
    if c1 and c2:
        if c1 & c2:
            return 1, RULE_SHARED_CONCEPT
        return 0, RULE_DISJOINT_CONCEPTS
    return syntactic_similarity(n1, n2), RULE_SYNTACTIC


@dataclass(frozen=True)
class SimilarityMatrix:
    left_labels: tuple[str, ...]
    right_labels: tuple[str, ...]
    cells: tuple[tuple[Fraction, ...], ...]  # row-major, left x right


@dataclass(frozen=True)
class AggregateResult:
    score: Fraction
    matching: tuple[tuple[int, int], ...]  # (left index, right index)
    matrix: SimilarityMatrix


def _node_score(a: ConceptNode, b: ConceptNode, o: DomainOntology) -> Fraction:
    """Recursive score of two subtrees; leaves compare atomically."""
    if not a.children and not b.children:
        return Fraction(semantic_similarity_atomic(a.label, b.label, o))
    return _children_result(a, b, o)[0]


def _cell_matrix(a: ConceptNode, b: ConceptNode, o: DomainOntology) -> list[list[Fraction]]:
    return [[_node_score(ca, cb, o) for cb in b.children] for ca in a.children]


def _children_result(
    a: ConceptNode, b: ConceptNode, o: DomainOntology
) -> tuple[Fraction, list[tuple[int, int]], list[list[Fraction]]]:
    cells = _cell_matrix(a, b, o)
    n = max(len(a.children), len(b.children))
    if n == 0:
        return ONE, [], cells
    value, pairs = max_weight_matching(cells)
    return value / n, pairs, cells


def aggregate_similarity(
    a: ComponentOntology, b: ComponentOntology, o: DomainOntology
) -> AggregateResult:
    """Score two component trees: matrix of pairwise child similarities,
    maximum-weight matching, matched sum divided by the larger child
    count. Two childless trees fall back to the root labels."""
    left = a.root.children
    right = b.root.children
    if not left and not right:
        score = Fraction(semantic_similarity_atomic(a.root.label, b.root.label, o))
        matrix = SimilarityMatrix((), (), ())
        return AggregateResult(score, (), matrix)
    score, pairs, cells = _children_result(a.root, b.root, o)
    matrix = SimilarityMatrix(
        tuple(c.label for c in left),
        tuple(c.label for c in right),
        tuple(tuple(row) for row in cells),
    )
    return AggregateResult(score, tuple(pairs), matrix)


# ---------------------------------------------------------------------------
# exact maximum-weight matching (Hungarian method over Fractions)
# ---------------------------------------------------------------------------

def _hungarian_value(cost: list[list[Fraction]]) -> Fraction:
    """Minimum total cost of assigning every row a distinct column.

    Requires len(rows) <= len(cols). Standard potentials formulation,
    exact because all arithmetic stays rational.
    """
    n = len(cost)
    if n == 0:
        return ZERO
    m = len(cost[0])
    INF = Fraction(1 << 60)
    u = [ZERO] * (n + 1)
    v = [ZERO] * (m + 1)
    p = [0] * (m + 1)  # p[j] = row matched to column j (1-based; 0 = free)
    way = [0] * (m + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (m + 1)
        used = [False] * (m + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, m + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    total = ZERO
    for j in range(1, m + 1):
        if p[j]:
            total += cost[p[j] - 1][j - 1]
    return total


def _best_value(
    weights: Sequence[Sequence[Fraction]],
    rows: Sequence[int],
    cols: Sequence[int],
) -> Fraction:
    """Maximum matched weight over the given row/column index subsets."""
    if not rows or not cols:
        return ZERO
    if len(rows) <= len(cols):
        cost = [[-weights[r][c] for c in cols] for r in rows]
    else:
        cost = [[-weights[r][c] for r in rows] for c in cols]
    return -_hungarian_value(cost)


def max_weight_matching(
    weights: Sequence[Sequence[Fraction]],
) -> tuple[Fraction, list[tuple[int, int]]]:
    """Maximum-weight matching of a rectangular non-negative matrix.

    Among all maximum-weight matchings, returns the one whose sorted
    (left, right) pair list is lexicographically smallest, so reports are
    reproducible run to run.
    """
    nl = len(weights)
    nr = len(weights[0]) if nl else 0
    all_rows = list(range(nl))
    all_cols = list(range(nr))
    total = _best_value(weights, all_rows, all_cols)

    pairs: list[tuple[int, int]] = []
    used: set[int] = set()
    fixed = ZERO
    for i in range(nl):
        rest_rows = list(range(i + 1, nl))
        free_cols = [c for c in all_cols if c not in used]
        chosen = None
        for j in free_cols:
            remainder = [c for c in free_cols if c != j]
            if fixed + weights[i][j] + _best_value(weights, rest_rows, remainder) == total:
                chosen = j
                break
        if chosen is None:
            continue  # row stays unmatched; optimum needs its columns elsewhere
        pairs.append((i, chosen))
        used.add(chosen)
        fixed += weights[i][chosen]
    return total, pairs


# ---------------------------------------------------------------------------
# exhaustive oracle
# ---------------------------------------------------------------------------

def _bf_node_score(a: ConceptNode, b: ConceptNode, o: DomainOntology) -> Fraction:
    if not a.children and not b.children:
        return Fraction(semantic_similarity_atomic(a.label, b.label, o))
    left, right = a.children, b.children
    n = max(len(left), len(right))
    if len(left) > BRUTE_FORCE_LIMIT or len(right) > BRUTE_FORCE_LIMIT:
        raise OracleSizeError(
            f"brute-force oracle limited to {BRUTE_FORCE_LIMIT} children per side"
        )
    if not left or not right:
        return ZERO
    cells = [[_bf_node_score(ca, cb, o) for cb in right] for ca in left]
    best = ZERO
    if len(left) <= len(right):
        for perm in itertools.permutations(range(len(right)), len(left)):
            s = sum((cells[i][perm[i]] for i in range(len(left))), ZERO)
            if s > best:
                best = s
    else:
        for perm in itertools.permutations(range(len(left)), len(right)):
            s = sum((cells[perm[j]][j] for j in range(len(right))), ZERO)
            if s > best:
                best = s
    return best / n


def brute_force_aggregate(
    a: ComponentOntology, b: ComponentOntology, o: DomainOntology
) -> Fraction:
    """Exhaustive-enumeration twin of aggregate_similarity (test oracle)."""
    if not a.root.children and not b.root.children:
        return Fraction(semantic_similarity_atomic(a.root.label, b.root.label, o))
    return _bf_node_score(a.root, b.root, o)
