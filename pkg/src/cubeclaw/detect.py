"""Detection of induced claws, induced cycles, and five-vertex path shapes.

A claw (K_{1,3}) inside a cube vertex set hinges on one structural fact:
two distinct neighbors of a vertex differ in exactly two bits, so they
are never adjacent to each other.  Hence an induced claw exists iff some
member has at least three in-set neighbors (a "claw-center"), and claw
detection is a single degree scan.

Induced-cycle search is a depth-first path extension with chord pruning:
a partial path is abandoned as soon as its tip is adjacent to any path
vertex other than its predecessor (or, when closing, the start).  At the
scales this package targets (dimension <= 6, cycle length <= 8) the
inducedness constraint prunes hard enough that nothing cleverer is
needed.

All searches break ties by vertex label, so equal inputs always produce
identical witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .hypercube import VertexSet, neighbor_masks, vertex_to_text


@dataclass(frozen=True)
class Claw:
    """Four vertices inducing K_{1,3}: a center adjacent to three
    pairwise non-adjacent leaves."""

    center: int
    leaves: tuple[int, int, int]


@dataclass(frozen=True)
class InducedCycle:
    """k vertices whose induced subgraph is exactly the cycle C_k,
    listed in cyclic order."""

    vertices: tuple[int, ...]


Witness = Union[Claw, InducedCycle]


class FiveSetKind(Enum):
    HAS_DEGREE3_VERTEX = "has_degree3_vertex"
    HAS_ISOLATED_VERTEX = "has_isolated_vertex"
    DISCONNECTED = "disconnected"
    INDUCED_CYCLE = "induced_cycle"
    PATH_P5 = "path_p5"
    OTHER = "other"


@dataclass(frozen=True)
class PathClassification:
    """Shape of the subgraph induced by a five-vertex set.

    For PATH_P5 the path runs endpoints[0] - internal[0] - internal[1] -
    internal[2] - endpoints[1], with endpoints[0] < endpoints[1].
    """

    kind: FiveSetKind
    endpoints: Optional[tuple[int, int]] = None
    internal: Optional[tuple[int, int, int]] = None


def induced_degree(s: VertexSet, v: int) -> int:
    """Number of neighbors of v inside s.  v must be a member."""
    if v not in s:
        raise ValueError(f"vertex {v} is not a member of the set")
    return (neighbor_masks(s.dim)[v] & s.mask).bit_count()


def _least_bits(mask: int, count: int) -> list[int]:
    out = []
    while mask and len(out) < count:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def find_claw(s: VertexSet) -> Optional[Claw]:
    """First claw by label order: least-labeled center with three or more
    in-set neighbors, leaves its three least-labeled in-set neighbors."""
    nbr = neighbor_masks(s.dim)
    for v in s.members():
        hood = nbr[v] & s.mask
        if hood.bit_count() >= 3:
            a, b, c = _least_bits(hood, 3)
            return Claw(v, (a, b, c))
    return None


def find_induced_cycle(s: VertexSet, k: int) -> Optional[InducedCycle]:
    """First induced k-cycle in deterministic order, or None.

    The returned cycle starts at its least-labeled vertex and runs in the
    direction whose second vertex is smaller.  k must be even (the cube
    is bipartite) and within [4, |s|].
    """
    if k % 2 != 0:
        raise ValueError(f"cycle length must be even, got {k}")
    if k < 4 or k > len(s):
        raise ValueError(f"cycle length {k} out of range [4, {len(s)}]")
    nbr = neighbor_masks(s.dim)
    mask = s.mask

    def dfs(start: int, path: list[int], path_mask: int, allowed: int):
        last = path[-1]
        if len(path) == k - 1:
            want = (1 << last) | (1 << start)
            cand = nbr[last] & nbr[start] & allowed & ~path_mask
            while cand:
                lsb = cand & -cand
                u = lsb.bit_length() - 1
                cand ^= lsb
                if nbr[u] & path_mask == want:
                    return path + [u]
            return None
        cand = nbr[last] & allowed & ~path_mask
        last_bit = 1 << last
        while cand:
            lsb = cand & -cand
            u = lsb.bit_length() - 1
            cand ^= lsb
            if nbr[u] & path_mask == last_bit:
                found = dfs(start, path + [u], path_mask | (1 << u), allowed)
                if found:
                    return found
        return None

    for start in s.members():
        allowed = mask & ~((2 << start) - 1)
        if (allowed | (1 << start)).bit_count() < k:
            break
        found = dfs(start, [start], 1 << start, allowed)
        if found:
            return InducedCycle(tuple(found))
    return None


def find_theorem_witness(s: VertexSet) -> Optional[Witness]:
    """A claw if one exists, else an induced 8-cycle, else None."""
    claw = find_claw(s)
    if claw is not None:
        return claw
    if len(s) >= 8:
        return find_induced_cycle(s, 8)
    return None


def classify_five_set(s: VertexSet) -> PathClassification:
    """Exact structural classification of a five-vertex set."""
    if len(s) != 5:
        raise ValueError(f"classification requires exactly 5 vertices, got {len(s)}")
    nbr = neighbor_masks(s.dim)
    members = s.members()
    hoods = {v: nbr[v] & s.mask for v in members}
    degrees = {v: hoods[v].bit_count() for v in members}

    if max(degrees.values()) >= 3:
        return PathClassification(FiveSetKind.HAS_DEGREE3_VERTEX)
    if min(degrees.values()) == 0:
        return PathClassification(FiveSetKind.HAS_ISOLATED_VERTEX)

    # connectivity by mask BFS from the least member
    seen = 1 << members[0]
    frontier = seen
    while frontier:
        grow = 0
        while frontier:
            lsb = frontier & -frontier
            grow |= hoods[lsb.bit_length() - 1]
            frontier ^= lsb
        frontier = grow & s.mask & ~seen
        seen |= frontier
    if seen != s.mask:
        return PathClassification(FiveSetKind.DISCONNECTED)

    ones = sorted(v for v in members if degrees[v] == 1)
    if not ones:
        return PathClassification(FiveSetKind.INDUCED_CYCLE)
    if len(ones) == 2:
        order = [ones[0]]
        prev_bit = 0
        while len(order) < 5:
            nxt = hoods[order[-1]] & ~prev_bit
            prev_bit = 1 << order[-1]
            order.append((nxt & -nxt).bit_length() - 1)
        return PathClassification(
            FiveSetKind.PATH_P5,
            endpoints=(order[0], order[4]),
            internal=(order[1], order[2], order[3]),
        )
    return PathClassification(FiveSetKind.OTHER)


def check_witness(w: Witness, s: VertexSet) -> bool:
    """Independent validation of a witness against a set.

    True iff every structural invariant holds: membership, the claw's
    center-leaf adjacencies and leaf independence, or the cycle's
    consecutive adjacencies with no chords.  Malformed witnesses return
    False rather than raising.
    """
    nbr = neighbor_masks(s.dim)
    nverts = 1 << s.dim

    def ok_vertex(v) -> bool:
        return isinstance(v, int) and 0 <= v < nverts and v in s

    if isinstance(w, Claw):
        if not isinstance(w.leaves, tuple) or len(w.leaves) != 3:
            return False
        vs = (w.center, *w.leaves)
        if len(set(vs)) != 4 or not all(ok_vertex(v) for v in vs):
            return False
        hood = nbr[w.center]
        if not all((hood >> leaf) & 1 for leaf in w.leaves):
            return False
        a, b, c = w.leaves
        return not ((nbr[a] >> b) & 1 or (nbr[a] >> c) & 1 or (nbr[b] >> c) & 1)

    if isinstance(w, InducedCycle):
        vs = w.vertices
        if not isinstance(vs, tuple) or len(vs) < 4 or len(vs) % 2 != 0:
            return False
        if len(set(vs)) != len(vs) or not all(ok_vertex(v) for v in vs):
            return False
        k = len(vs)
        cycle_mask = 0
        for v in vs:
            cycle_mask |= 1 << v
        for i, v in enumerate(vs):
            ring = (1 << vs[(i - 1) % k]) | (1 << vs[(i + 1) % k])
            if nbr[v] & cycle_mask != ring:
                return False
        return True

    return False


def witness_to_text(w: Witness, dim: int) -> str:
    """Render a witness in its line format:
    ``claw <center> <leaf> <leaf> <leaf>`` or ``cycle <v1> ... <vk>``."""
    if isinstance(w, Claw):
        parts = ["claw", vertex_to_text(w.center, dim)]
        parts += [vertex_to_text(leaf, dim) for leaf in w.leaves]
        return " ".join(parts)
    if isinstance(w, InducedCycle):
        return "cycle " + " ".join(vertex_to_text(v, dim) for v in w.vertices)
    raise ValueError(f"not a witness: {w!r}")
