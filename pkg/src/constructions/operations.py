"""
Graph operations that carry kernel data across a construction.

Each operation checks its hypotheses by name, builds the new graph, certifies
the kernel vectors it promises, and records what the checks established.
"""

import logging
from typing import Sequence

from src.ack import AckStatus, ack_witness, is_zero_sum
from src.errors import ConsistencyError, ConstructionError, GraphError
from src.graph import Graph, VertexSet, structural_predicates
from src.linalg import QMatrix, QVector, format_rational, inverse, nullspace_basis, rank
from src.spectral import classify, kernel
from .families import cartesian_product, complete
from .result import ConstructionResult, certify_kernel_vectors

logger = logging.getLogger(__name__)


def _as_sets(sets: Sequence) -> list[VertexSet]:
    return [s if isinstance(s, VertexSet) else VertexSet(tuple(s)) for s in sets]


def _sets_in_range(graph: Graph, sets: list[VertexSet]) -> bool:
    return all(1 <= v <= graph.n for s in sets for v in s)


def _is_neighborhood(graph: Graph, subset: VertexSet) -> bool:
    target = frozenset(subset)
    return any(graph.neighbor_set(u) == target for u in graph.vertices)


def _require_invertible(graph: Graph) -> QMatrix:
    b = inverse(graph.adjacency)
    if b is None:
        raise ConstructionError("Adjacency matrix of the base is singular", ["invertible_base"])
    return b


# ============================================================
# K2 x H
# ============================================================

def k2_product_ack(base: Graph, limit_n: int | None = None) -> ConstructionResult:
    """
    G = K2 x H. Kernel of G pairs the +1 eigenvectors of H as (v, -v) and the
    -1 eigenvectors as (v, v).
    """
    identity = QMatrix.identity(base.n)
    plus_space = nullspace_basis(base.adjacency - identity)
    minus_space = nullspace_basis(base.adjacency + identity)
    mult_plus1, mult_minus1 = len(plus_space), len(minus_space)

    plus1_simple = mult_plus1 == 1
    minus1_absent = mult_minus1 == 0
    swapped_variant_ok = mult_minus1 == 1 and mult_plus1 == 0
    hypotheses_hold = (plus1_simple and minus1_absent) or swapped_variant_ok

    graph = cartesian_product(complete(2), base)
    vectors = [v.concat(-v) for v in plus_space] + [v.concat(v) for v in minus_space]
    certified = certify_kernel_vectors(graph, vectors)

    profile = classify(graph)
    nullity_identity_ok = profile.nullity == mult_plus1 + mult_minus1
    if not nullity_identity_ok:
        logger.error(
            f"nullity(K2 x H) = {profile.nullity} but nullity(A-I) + nullity(A+I) = "
            f"{mult_plus1 + mult_minus1}"
        )
        raise ConsistencyError("Nullity identity for K2 x H failed")

    # One eigenspace, one full eigenvector: the product is a nut graph
    full_eigenvector = hypotheses_hold and (plus_space or minus_space)[0].is_full()
    if full_eigenvector and not profile.is_nut:
        raise ConsistencyError("Full simple eigenvector but K2 x H is not a nut graph")

    report = {
        "plus1_simple": plus1_simple,
        "minus1_absent": minus1_absent,
        "swapped_variant_ok": swapped_variant_ok,
        "hypotheses_hold": hypotheses_hold,
        "nullity_identity_ok": nullity_identity_ok,
        "nut_by_full_eigenvector": full_eigenvector,
    }

    base_predicates = structural_predicates(base)
    if base_predicates.connected:
        product_diameter = structural_predicates(graph).diameter
        report["diameter_relation"] = (product_diameter <= 3) == (base_predicates.diameter <= 2)

    ack = ack_witness(graph, limit_n=limit_n)
    notes = []
    if hypotheses_hold and not ack.found:
        if ack.status == AckStatus.NO_WITNESS:
            raise ConsistencyError("Hypotheses hold but the exhaustive search found no witness")
        notes.append("hypotheses hold; search stopped at limit_n before a witness")

    logger.info(
        f"K2 x H: mult(+1)={mult_plus1}, mult(-1)={mult_minus1}, "
        f"hypotheses={'hold' if hypotheses_hold else 'fail'}, ack={ack.status.value}"
    )
    return ConstructionResult(
        graph=graph,
        certified_kernel_vectors=certified,
        hypothesis_report=report,
        ack=ack,
        notes=tuple(notes),
        details={"mult_plus1": mult_plus1, "mult_minus1": mult_minus1, "nullity": profile.nullity},
    )


# ============================================================
# Dominating-vertex additions
# ============================================================

def add_vertex_dominating(graph: Graph, sets: Sequence, limit_n: int | None = None) -> ConstructionResult:
    """Adjoin v_i with N(v_i) = S_i + {1}; kernel vectors of G extend by zeros."""
    sets = _as_sets(sets)
    basis = kernel(graph)

    checks = {
        "at_least_one_set": len(sets) > 0,
        "dominating_vertex_1": graph.degree(1) == graph.n - 1,
        "kernel_coordinate_1_zero": all(b.coordinate(1) == 0 for b in basis.basis),
        "sets_nonempty": all(len(s) > 0 for s in sets),
        "sets_in_range": _sets_in_range(graph, sets),
    }
    if checks["sets_in_range"]:
        chis = [s.characteristic(graph.n) for s in sets]
        checks["sets_non_duplicate"] = not any(_is_neighborhood(graph, s) for s in sets)
        checks["sets_orthogonal_to_kernel"] = all(basis.is_orthogonal(c) for c in chis)
    checks["sets_pairwise_disjoint"] = len(sets) < 2 or all(
        sets[a].isdisjoint(sets[b]) for a in range(len(sets)) for b in range(a + 1, len(sets))
    )

    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.info(f"Dominating-vertex addition rejected: {failed}")
        raise ConstructionError("Dominating-vertex addition preconditions failed", failed)

    extended = graph
    for subset in sets:
        extended = extended.add_vertex(set(subset) | {1})

    padding = QVector.zeros(len(sets))
    certified = certify_kernel_vectors(extended, [x.concat(padding) for x in basis.basis])
    ack = ack_witness(extended, limit_n=limit_n)

    return ConstructionResult(
        graph=extended,
        certified_kernel_vectors=certified,
        hypothesis_report=checks,
        ack=ack,
        notes=tuple(f"N({graph.n + k + 1}) = {s} + {{1}}" for k, s in enumerate(sets)),
    )


# ============================================================
# One vertex on two neighbors of an invertible base
# ============================================================

def nut_extension(base: Graph, i: int, j: int) -> ConstructionResult:
    """
    G = H + v with N(v) = {i, j}. G is a nut graph iff
    b_ii + b_jj + 2 b_ij = 0 and b^i + b^j is full, where B = A_H^{-1}.
    """
    for vertex in (i, j):
        if not 1 <= vertex <= base.n:
            raise GraphError(f"Vertex {vertex} out of range 1..{base.n}", vertex=vertex)
    if i == j:
        raise ConstructionError("Attachment vertices must differ", ["distinct_pair"])
    b = _require_invertible(base)

    quadratic = b.entry(i - 1, i - 1) + b.entry(j - 1, j - 1) + 2 * b.entry(i - 1, j - 1)
    column_sum = b.column(i - 1) + b.column(j - 1)
    quadratic_zero = quadratic == 0
    # All n positions, including i and j
    column_sum_full = column_sum.is_full()

    graph = base.add_vertex([i, j])
    is_nut = classify(graph).is_nut
    equivalence_holds = is_nut == (quadratic_zero and column_sum_full)
    if not equivalence_holds:
        logger.error(
            f"Nut-extension criterion disagrees (i={i}, j={j}): is_nut={is_nut}, "
            f"quadratic_zero={quadratic_zero}, column_sum_full={column_sum_full}"
        )
        raise ConsistencyError(f"Nut-extension criterion disagrees for pair ({i}, {j})")

    certified = ()
    if quadratic_zero:
        certified = certify_kernel_vectors(graph, [column_sum.concat(QVector.of([-1]))])

    return ConstructionResult(
        graph=graph,
        certified_kernel_vectors=certified,
        hypothesis_report={
            "quadratic_zero": quadratic_zero,
            "column_sum_full": column_sum_full,
            "is_nut": is_nut,
            "equivalence_holds": equivalence_holds,
        },
        notes=("column_sum_full is checked over all n positions of b^i + b^j",),
        details={
            "quadratic_form": format_rational(quadratic),
            "column_sum": column_sum.to_strings(),
        },
    )


# ============================================================
# Several vertices on an invertible base
# ============================================================

def multi_attach(base: Graph, sets: Sequence, limit_n: int | None = None) -> ConstructionResult:
    """
    Adjoin v_1..v_k with N(v_i) = S_i. With C = [c_1 .. c_k] and B = A_H^{-1}:
    BC full and C^T B C = 0 certify y_i = (B c_i, -e_i) in the kernel.
    """
    sets = _as_sets(sets)
    failed = []
    if not sets:
        failed.append("at_least_one_set")
    if not all(len(s) > 0 for s in sets):
        failed.append("sets_nonempty")
    if not _sets_in_range(base, sets):
        failed.append("sets_in_range")
    if failed:
        raise ConstructionError("Attachment preconditions failed", failed)
    b = _require_invertible(base)

    k = len(sets)
    columns = [s.characteristic(base.n) for s in sets]
    bc = [b @ c for c in columns]
    ctbc = QMatrix.from_rows([[c.dot(y) for y in bc] for c in columns])

    bc_full = all(y.is_full() for y in bc)
    ctbc_zero = ctbc.is_zero()
    not_a_neighborhood = any(not _is_neighborhood(base, s) for s in sets)

    graph = base
    for subset in sets:
        graph = graph.add_vertex(subset)
    # add_vertex joins each new vertex only to S_i, never to earlier new vertices

    report = {
        "BC_full": bc_full,
        "CtBC_zero": ctbc_zero,
        "some_Si_not_a_neighborhood": not_a_neighborhood,
    }
    certified = ()
    ack = None
    details = {
        "BC": [y.to_strings() for y in bc],
        "CtBC": ctbc.to_strings(),
    }

    if bc_full and ctbc_zero:
        vectors = [y.concat(-QVector.unit(k, t + 1)) for t, y in enumerate(bc)]
        certified = certify_kernel_vectors(graph, vectors)
        if rank(QMatrix.from_rows([list(v) for v in vectors])) != k:
            raise ConsistencyError("Certified attachment vectors are dependent")

        profile = classify(graph)
        if profile.nullity < k or not profile.is_core:
            raise ConsistencyError(
                f"Expected a core graph with nullity >= {k}, got nullity {profile.nullity}, "
                f"core={profile.is_core}"
            )
        report["nullity_at_least_k"] = True
        report["is_core"] = True
        details["nullity"] = profile.nullity

        if not_a_neighborhood:
            ack = ack_witness(graph, limit_n=limit_n)

    return ConstructionResult(
        graph=graph,
        certified_kernel_vectors=certified,
        hypothesis_report=report,
        ack=ack,
        details=details,
    )


# ============================================================
# Vertex duplication in a nut graph
# ============================================================

def duplicate_vertices(
    graph: Graph,
    plan: Sequence[tuple[int, int]],
    zero_sum_subset: Sequence[int] | None = None,
    limit_n: int | None = None,
) -> ConstructionResult:
    """
    Duplicate v_i (m_i times) with open-neighborhood copies.

    Copies are appended after the original vertices, in plan order, and each
    copy takes the current neighborhood of its original, so every original
    and its copies stay twins in F. Certified kernel: y, which spreads x_v
    evenly over the twin class of v, plus e_v - e_copy for every copy.
    """
    plan = [(int(v), int(m)) for v, m in plan]
    vertices = [v for v, _ in plan]

    failed = []
    if not all(1 <= v <= graph.n for v in vertices):
        failed.append("vertices_in_range")
    if len(set(vertices)) != len(vertices):
        failed.append("vertices_distinct")
    if not all(m >= 1 for _, m in plan):
        failed.append("multiplicities_positive")
    if failed:
        raise ConstructionError("Bad duplication plan", failed)

    basis = kernel(graph)
    if not classify(graph, basis).is_nut:
        raise ConstructionError("Duplication needs a nut graph", ["base_is_nut"])
    x = QVector.of(basis.basis[0].integral())

    # Step 1: build F
    extended = graph
    copies: list[tuple[int, int]] = []  # (original, copy)
    for v, m in plan:
        for _ in range(m):
            extended = extended.add_vertex(extended.neighbor_set(v))
            copies.append((v, extended.n))

    # Step 2: certified kernel vectors
    # Repeating x_v on the copies would count it m_v + 1 times at each neighbor
    class_size = {v: m + 1 for v, m in plan}
    spread = QVector.of([x.coordinate(u) / class_size.get(u, 1) for u in graph.vertices])
    y = QVector.of(spread.concat(QVector.of([spread.coordinate(v) for v, _ in copies])).integral())
    differences = [
        QVector.unit(extended.n, v) - QVector.unit(extended.n, copy) for v, copy in copies
    ]
    certified = certify_kernel_vectors(extended, [y] + differences)

    independent = rank(QMatrix.from_rows([list(w) for w in certified])) == len(certified)
    profile = classify(extended)
    supported = all(any(w.coordinate(u) != 0 for w in certified) for u in extended.vertices)
    nullity_bound = profile.nullity >= basis.nullity + len(copies)
    if not (independent and profile.is_core and supported and nullity_bound):
        logger.error(
            f"Duplication certificate failed: independent={independent}, core={profile.is_core}, "
            f"supported={supported}, nullity={profile.nullity}"
        )
        raise ConsistencyError("Duplicated graph is not certified core")

    report = {
        "base_is_nut": True,
        "vectors_independent": independent,
        "is_core": profile.is_core,
        "nullity_bound": nullity_bound,
    }

    # Step 3: optional zero-sum subset hypothesis
    if zero_sum_subset is not None:
        subset = VertexSet(tuple(zero_sum_subset))
        in_range = all(1 <= v <= graph.n for v in subset)
        report["subset_nonempty"] = len(subset) > 0
        report["subset_zero_sum"] = in_range and len(subset) > 0 and is_zero_sum(x, subset)
        report["subset_non_duplicate"] = in_range and not _is_neighborhood(graph, subset)
        report["subset_disjoint_from_duplicated"] = subset.isdisjoint(vertices)

    ack = ack_witness(extended, limit_n=limit_n)

    return ConstructionResult(
        graph=extended,
        certified_kernel_vectors=certified,
        hypothesis_report=report,
        ack=ack,
        notes=tuple(f"vertex {copy} duplicates {v}" for v, copy in copies),
        details={"nullity": profile.nullity},
    )
