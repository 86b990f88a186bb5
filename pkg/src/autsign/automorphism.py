"""Multigraph automorphisms: enumeration, group operations, induced edge data.

An automorphism is stored as the half-edge permutation (the single source of
truth) together with the vertex permutation it induces; the vertex images of
isolated vertices are the only extra freedom. Induced edge permutations and
per-edge orientation signs are derived on demand.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .multigraph import Multigraph, Orientation


@dataclass(frozen=True)
class Automorphism:
    half_edge_perm: tuple[int, ...]
    vertex_perm: tuple[int, ...]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.half_edge_perm)) and all(
            i == x for i, x in enumerate(self.vertex_perm)
        )


@dataclass(frozen=True)
class SignedEdgePermutation:
    """Edge permutation plus, per edge, whether the arrow direction survives."""

    edge_perm: tuple[int, ...]
    edge_sign: tuple[int, ...]


def permutation_sign(p: tuple[int, ...] | list[int]) -> int:
    """+1 for even permutations, -1 for odd: (-1)**(n - #cycles)."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cycle_notation(p: tuple[int, ...]) -> str:
    """Cycle string of a permutation, fixed points omitted; '()' for the identity."""
    seen = [False] * len(p)
    parts: list[str] = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        parts.append("(" + " ".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def identity_automorphism(g: Multigraph) -> Automorphism:
    return Automorphism(
        tuple(range(g.half_edge_count)), tuple(range(g.vertex_count))
    )


def check_automorphism(g: Multigraph, a: Automorphism) -> None:
    """Raise ValueError unless ``a`` really is an automorphism of ``g``."""
    hep, vperm = a.half_edge_perm, a.vertex_perm
    if len(hep) != g.half_edge_count or len(vperm) != g.vertex_count:
        raise ValueError("automorphism size does not match the graph")
    if sorted(hep) != list(range(g.half_edge_count)):
        raise ValueError("half_edge_perm is not a permutation")
    if sorted(vperm) != list(range(g.vertex_count)):
        raise ValueError("vertex_perm is not a permutation")
    for h in range(g.half_edge_count):
        if hep[h ^ 1] != hep[h] ^ 1:
            raise ValueError("half_edge_perm does not commute with the edge pairing")
        if g.endpoint[hep[h]] != vperm[g.endpoint[h]]:
            raise ValueError("half_edge_perm is incompatible with vertex_perm")


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """a after b: (a.b)(h) = a(b(h))."""
    if len(a.half_edge_perm) != len(b.half_edge_perm) or len(a.vertex_perm) != len(
        b.vertex_perm
    ):
        raise ValueError("cannot compose automorphisms of different sizes")
    return Automorphism(
        tuple(a.half_edge_perm[h] for h in b.half_edge_perm),
        tuple(a.vertex_perm[v] for v in b.vertex_perm),
    )


def invert(a: Automorphism) -> Automorphism:
    hep = [0] * len(a.half_edge_perm)
    for h, img in enumerate(a.half_edge_perm):
        hep[img] = h
    vperm = [0] * len(a.vertex_perm)
    for v, img in enumerate(a.vertex_perm):
        vperm[img] = v
    return Automorphism(tuple(hep), tuple(vperm))


def induced_signed_edge_perm(
    g: Multigraph, o: Orientation, a: Automorphism
) -> SignedEdgePermutation:
    """Where each edge goes and whether its arrow is preserved (+1) or reversed (-1)."""
    hep = a.half_edge_perm
    edge_perm = []
    edge_sign = []
    for e in range(g.edge_count):
        image = hep[o.tail[e]]
        f = image >> 1
        edge_perm.append(f)
        edge_sign.append(1 if image == o.tail[f] else -1)
    return SignedEdgePermutation(tuple(edge_perm), tuple(edge_sign))


def _half_edge_extensions(g: Multigraph, vperm: tuple[int, ...]) -> list[Automorphism]:
    """All automorphisms over a multiplicity-preserving vertex bijection.

    Parallel edges may be matched in any order within their endpoint-pair
    class; loops additionally may swap their two halves. Non-loop half-edge
    images are forced by the vertex images.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for e in range(g.edge_count):
        a, b = g.edge_ends(e)
        groups.setdefault((a, b) if a <= b else (b, a), []).append(e)
    pairs = sorted(groups)
    choice_lists = []
    for a, b in pairs:
        qa, qb = vperm[a], vperm[b]
        target = groups[(qa, qb) if qa <= qb else (qb, qa)]
        choice_lists.append(list(itertools.permutations(target)))
    loops = [e for e in range(g.edge_count) if g.is_loop(e)]

    out: list[Automorphism] = []
    for assignment in itertools.product(*choice_lists):
        edge_image = [0] * g.edge_count
        for pair, targets in zip(pairs, assignment):
            for e, f in zip(groups[pair], targets):
                edge_image[e] = f
        base = [0] * g.half_edge_count
        for e in range(g.edge_count):
            f = edge_image[e]
            if g.is_loop(e) or g.endpoint[2 * f] == vperm[g.endpoint[2 * e]]:
                # loops take the un-flipped matching here; flips come below
                base[2 * e] = 2 * f
                base[2 * e + 1] = 2 * f + 1
            else:
                base[2 * e] = 2 * f + 1
                base[2 * e + 1] = 2 * f
        for flips in itertools.product((0, 1), repeat=len(loops)):
            hep = list(base)
            for e, flip in zip(loops, flips):
                if flip:
                    hep[2 * e], hep[2 * e + 1] = hep[2 * e + 1], hep[2 * e]
            out.append(Automorphism(tuple(hep), vperm))
    return out


def enumerate_automorphisms(g: Multigraph) -> list[Automorphism]:
    """The full automorphism group, identity first, then ordered
    lexicographically by (vertex_perm, half_edge_perm).

    Backtracks over vertex images, pruning on the (degree, loop count)
    invariant and on pairwise edge multiplicities; every surviving vertex
    bijection is extended over all compatible half-edge matchings.
    """
    n = g.vertex_count
    invariant = [(g.degree(v), g.loop_count(v)) for v in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[Automorphism] = []

    def place(v: int) -> None:
        if v == n:
            found.extend(_half_edge_extensions(g, tuple(image)))
            return
        inv_v = invariant[v]
        for w in range(n):
            if used[w] or invariant[w] != inv_v:
                continue
            if any(
                g.multiplicity(v, u) != g.multiplicity(w, image[u]) for u in range(v)
            ):
                continue
            image[v] = w
            used[w] = True
            place(v + 1)
            image[v] = -1
            used[w] = False

    place(0)
    found.sort(key=lambda a: (a.vertex_perm, a.half_edge_perm))
    return found
