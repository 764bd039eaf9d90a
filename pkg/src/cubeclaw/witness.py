"""Constructive witness extraction for dense cube subsets.

Any subset of Q_n (n >= 4) holding more than half the vertices contains

  - four vertices inducing a claw, or
  - eight vertices inducing a cycle.

The production extractor recurses on the first coordinate: split the set
into the two Q_{n-1} halves, descend into a half that still holds more
than half of its subcube (the pigeonhole guarantees one does), and at
dimension 4 fall back on brute-force search, which exhaustive
certification (see :mod:`cubeclaw.verify`) has shown can never fail on
nine or more vertices.  The witness found downstairs is relabeled back
up through the splits.

A second, structured solver replays the dimension-4 case analysis
literally, dispatching on how the nine vertices fall across the two
subcube halves.  It exists for cross-checking the case analysis, not as
the production path, and is validated against brute force on all 11440
nine-vertex subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detect import (
    Claw,
    FiveSetKind,
    InducedCycle,
    Witness,
    classify_five_set,
    find_induced_cycle,
    find_theorem_witness,
)
from .errors import InsufficientCardinalityError, TheoremViolationError
from .hypercube import VertexSet, embed, embed_vertex, neighbor_masks, split


@dataclass(frozen=True)
class SplitStep:
    """One recursion level: which side was taken and how big each was."""

    dim: int
    split_coord: int
    chosen_side: int
    side_cardinalities: tuple[int, int]


@dataclass(frozen=True)
class ExtractionTrace:
    steps: tuple[SplitStep, ...]
    base: str

    def to_dict(self) -> dict:
        return {
            "steps": [
                {
                    "dim": st.dim,
                    "split_coord": st.split_coord,
                    "chosen_side": st.chosen_side,
                    "side_cardinalities": list(st.side_cardinalities),
                }
                for st in self.steps
            ],
            "base": self.base,
        }


def required_size(dim: int) -> int:
    """Smallest cardinality the extractor accepts: 2^(n-1) + 1."""
    return (1 << (dim - 1)) + 1


def _map_witness(w: Witness, mapper) -> Witness:
    if isinstance(w, Claw):
        a, b, c = (mapper(leaf) for leaf in w.leaves)
        return Claw(mapper(w.center), (a, b, c))
    return InducedCycle(tuple(mapper(v) for v in w.vertices))


def find_witness_inductive(s: VertexSet) -> tuple[Witness, ExtractionTrace]:
    """Extract a witness by recursive subcube descent.

    Requires dimension >= 4 and at least 2^(n-1) + 1 members.  Splits on
    coordinate 1 at every level, preferring the larger side (ties to
    side 0), and solves dimension 4 by brute force.  The returned trace
    records the cardinalities at every level.
    """
    if s.dim < 4:
        raise ValueError(f"extraction requires dimension >= 4, got {s.dim}")
    need = required_size(s.dim)
    if len(s) < need:
        raise InsufficientCardinalityError(need, len(s), s.dim)

    steps: list[SplitStep] = []
    current = s
    while current.dim > 4:
        side0, side1 = split(current, 1)
        chosen = 0 if len(side0) >= len(side1) else 1
        steps.append(
            SplitStep(current.dim, 1, chosen, (len(side0), len(side1)))
        )
        current = side0 if chosen == 0 else side1

    w = base_case_solve(current)
    for st in reversed(steps):
        w = _map_witness(w, lambda v: embed_vertex(v, 1, st.chosen_side))
    return w, ExtractionTrace(tuple(steps), "brute-force")


def base_case_solve(s: VertexSet) -> Witness:
    """Brute-force witness for a Q_4 subset of at least nine vertices."""
    if s.dim != 4:
        raise ValueError(f"base-case solver works in dimension 4, got {s.dim}")
    if len(s) < 9:
        raise InsufficientCardinalityError(9, len(s), 4)
    w = find_theorem_witness(s)
    if w is None:
        raise TheoremViolationError(
            "no witness in a nine-or-more-vertex Q_4 subset", s.dim, s.mask
        )
    return w


def _claw_at(s: VertexSet, center: int) -> Claw:
    hood = neighbor_masks(s.dim)[center] & s.mask
    leaves = []
    while hood and len(leaves) < 3:
        lsb = hood & -hood
        leaves.append(lsb.bit_length() - 1)
        hood ^= lsb
    a, b, c = leaves
    return Claw(center, (a, b, c))


def _scan_for_center(s: VertexSet, among: VertexSet) -> Claw | None:
    """Least-labeled member of ``among`` with >= 3 neighbors in ``s``."""
    nbr = neighbor_masks(s.dim)
    for v in among.members():
        if (nbr[v] & s.mask).bit_count() >= 3:
            return _claw_at(s, v)
    return None


def base_case_solve_structured(s: VertexSet) -> tuple[Witness, int]:
    """Witness for a nine-vertex Q_4 subset by explicit case dispatch.

    Splits on coordinate 1 and orders the halves so the larger comes
    first; the case number is determined by the cardinality split:
    (8,1) -> 1, (7,2) -> 2, (6,3) -> 3, (5,4) -> 4.

    Cases 1-3 find a claw-center inside the larger half, counting
    degrees in the whole set (the cross edge into the smaller half
    counts; for the (6,3) split this is essential, since the larger half
    may induce a chordless 6-cycle with all subcube degrees 2).

    Case 4: the larger half either has a subcube degree-3 vertex (done)
    or induces a five-vertex path.  A path-internal vertex with a
    neighbor across the split is itself a claw-center; failing that, the
    smaller half is scanned for a claw-center; in the one remaining
    configuration some vertex z leaves an induced 8-cycle behind when
    removed.
    """
    if s.dim != 4:
        raise ValueError(f"structured solver works in dimension 4, got {s.dim}")
    if len(s) != 9:
        raise ValueError(f"structured solver requires exactly 9 vertices, got {len(s)}")

    side0, side1 = split(s, 1)
    if len(side0) >= len(side1):
        big_bit, big, small = 0, side0, side1
    else:
        big_bit, big, small = 1, side1, side0
    big_amb = embed(big, 1, big_bit)
    small_amb = embed(small, 1, 1 - big_bit)
    case = {8: 1, 7: 2, 6: 3, 5: 4}[len(big)]

    if case in (1, 2, 3):
        claw = _scan_for_center(s, big_amb)
        if claw is not None:
            return claw, case
        raise TheoremViolationError(
            f"no claw-center in the larger half of a ({len(big)},{len(small)}) split",
            s.dim,
            s.mask,
        )

    # case 4: (5,4) split
    claw = _scan_for_center(big_amb, big_amb)
    if claw is not None:
        return claw, case

    shape = classify_five_set(big_amb)
    if shape.kind is not FiveSetKind.PATH_P5:
        raise TheoremViolationError(
            f"max-degree-2 five-vertex half is not a path ({shape.kind.value})",
            s.dim,
            s.mask,
        )
    for a in sorted(shape.internal):
        if (a ^ 1) in s:
            return _claw_at(s, a), case

    claw = _scan_for_center(s, small_amb)
    if claw is not None:
        return claw, case

    for z in s.members():
        rest = s.remove(z)
        cycle = find_induced_cycle(rest, 8)
        if cycle is not None:
            return cycle, case
    raise TheoremViolationError(
        "no claw-center and no cycle-leaving vertex in a (5,4) split", s.dim, s.mask
    )
