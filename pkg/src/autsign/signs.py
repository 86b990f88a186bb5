"""The two sign invariants of a multigraph automorphism and their comparison.

``combinatorial_sign`` multiplies the vertex-permutation parity by one factor
of -1 per arrow-reversing edge; it never touches homology and is independent
of the chosen orientation. ``homological_sign`` multiplies the edge
permutation's parity by the determinant sign of the induced action on the
cycle space. The two agree on connected graphs; on disconnected graphs the
homological route additionally needs the parity of the induced permutation of
components (``homological_sign_extended``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .automorphism import (
    Automorphism,
    enumerate_automorphisms,
    induced_signed_edge_perm,
    permutation_sign,
)
from .homology import (
    CycleBasis,
    IntMatrix,
    det_bareiss,
    det_sign,
    fundamental_cycles,
    induced_cycle_matrix,
)
from .multigraph import Multigraph, Orientation, reference_orientation, spanning_forest


@dataclass(frozen=True)
class DeterminantFactors:
    """Chain-level determinants backing one sign computation.

    All three are full exact determinants of explicit matrices, with no
    permutation-parity shortcuts, so they can arbitrate between the two sign
    routes when they disagree. ``consistent`` is the identity the homological
    route rests on:

        cycle_space_det * vertex_space_det == edge_space_det * component_sign
    """

    edge_space_det: int
    vertex_space_det: int
    cycle_space_det: int
    component_sign: int = 1

    @property
    def consistent(self) -> bool:
        return (
            self.cycle_space_det * self.vertex_space_det
            == self.edge_space_det * self.component_sign
        )


@dataclass(frozen=True)
class SignComparison:
    """Both signs of one automorphism, plus optional chain-level diagnostics."""

    homological: int
    combinatorial: int
    agree: bool
    cycle_rank: int
    factors: DeterminantFactors | None = None


def combinatorial_sign(g: Multigraph, o: Orientation, a: Automorphism) -> int:
    """sign(vertex permutation) times the product of per-edge arrow signs."""
    sep = induced_signed_edge_perm(g, o, a)
    sign = permutation_sign(a.vertex_perm)
    for s in sep.edge_sign:
        sign *= s
    return sign


def _homological_sign(
    g: Multigraph, o: Orientation, basis: CycleBasis, a: Automorphism
) -> int:
    sep = induced_signed_edge_perm(g, o, a)
    matrix = induced_cycle_matrix(g, o, basis, a)
    return permutation_sign(sep.edge_perm) * det_sign(matrix, require_unimodular=True)


def homological_sign(
    g: Multigraph, o: Orientation, basis: CycleBasis, a: Automorphism
) -> int:
    """sign(edge permutation) times the det sign of the cycle-space action.

    Defined on connected graphs only; use homological_sign_extended otherwise.
    """
    if not g.is_connected:
        raise ValueError(
            "homological_sign needs a connected graph; use homological_sign_extended"
        )
    return _homological_sign(g, o, basis, a)


def component_permutation_sign(g: Multigraph, a: Automorphism) -> int:
    """Parity of the permutation the automorphism induces on components."""
    parts = g.components
    perm = [0] * parts.component_count
    for v in range(g.vertex_count):
        perm[parts.component_of[v]] = parts.component_of[a.vertex_perm[v]]
    return permutation_sign(perm)


def homological_sign_extended(
    g: Multigraph, o: Orientation, basis: CycleBasis, a: Automorphism
) -> int:
    """Total version of homological_sign: multiplies in the component parity.

    Coincides with homological_sign on connected graphs.
    """
    return _homological_sign(g, o, basis, a) * component_permutation_sign(g, a)


def chain_determinant_check(
    g: Multigraph, o: Orientation, basis: CycleBasis, a: Automorphism
) -> DeterminantFactors:
    """Cross-check both sign routes at the chain level, the slow honest way.

    Builds the signed edge-permutation matrix and the vertex-permutation
    matrix explicitly and runs exact elimination on them (and on the induced
    cycle-space matrix); the caller checks ``consistent``. On connected graphs
    component_sign is +1 and the identity reduces to
    cycle_space_det * vertex_space_det == edge_space_det.
    """
    sep = induced_signed_edge_perm(g, o, a)
    m, n = g.edge_count, g.vertex_count
    edge_mat = [[0] * m for _ in range(m)]
    for e in range(m):
        edge_mat[sep.edge_perm[e]][e] = sep.edge_sign[e]
    vertex_mat = [[0] * n for _ in range(n)]
    for v in range(n):
        vertex_mat[a.vertex_perm[v]][v] = 1
    return DeterminantFactors(
        edge_space_det=det_bareiss(IntMatrix.from_rows(edge_mat, cols=m)),
        vertex_space_det=det_bareiss(IntMatrix.from_rows(vertex_mat, cols=n)),
        cycle_space_det=det_bareiss(induced_cycle_matrix(g, o, basis, a)),
        component_sign=component_permutation_sign(g, a),
    )


def verify_graph(g: Multigraph, diagnostics: bool = False) -> list[SignComparison]:
    """Evaluate both signs on every automorphism, in enumeration order.

    ``agree`` must be True throughout; a False is an implementation bug, not a
    property of the graph. With ``diagnostics`` each record also carries the
    chain-level determinant factors.
    """
    o = reference_orientation(g)
    basis = fundamental_cycles(g, o, spanning_forest(g))
    rank = len(basis.cycles)
    results: list[SignComparison] = []
    for a in enumerate_automorphisms(g):
        comb = combinatorial_sign(g, o, a)
        hom = homological_sign_extended(g, o, basis, a)
        factors = chain_determinant_check(g, o, basis, a) if diagnostics else None
        results.append(SignComparison(hom, comb, hom == comb, rank, factors))
    return results


def has_odd_automorphism(g: Multigraph) -> bool:
    """True iff some automorphism has sign -1.

    Uses the combinatorial route only (no homology needed); the agreement of
    the two routes is what verify_graph certifies.
    """
    o = reference_orientation(g)
    return any(
        combinatorial_sign(g, o, a) == -1 for a in enumerate_automorphisms(g)
    )
