"""Exhaustive certification, case-claim checking, and extremal search.

Every check enumerates a fixed universe of configurations in a canonical
order (subsets in increasing-membership-mask order, composite universes
in mixed-radix order over their parts) and folds the per-configuration
pass/fail stream into a report.  Work is split across workers by
contiguous ranges of the enumeration index and reassembled in order, so
the report's digest is bit-identical for any worker count.

The checks:

- ``verify_theorem_exhaustive``: every 9-vertex (or larger) subset of
  Q_4 contains a claw or an induced 8-cycle -- all C(16,9) = 11440 of
  them, the base case the inductive extractor stands on.
- ``verify_proposition_exhaustive``: every 6-vertex subset of Q_3
  contains a claw or an induced 6-cycle (28 configurations).
- ``verify_case_claims``: the delegated "direct verification" claims of
  the dimension-4 case analysis, split by the cardinalities of the two
  coordinate-1 halves: (8,1), (7,2), (6,3) and (5,4).  The (7,2)/(6,3)
  claw-center claims are checked under both degree readings (neighbors
  inside the half only, versus the whole set including the cross edge);
  the half-only reading demonstrably fails for the chordless-6-cycle
  halves, so the cross-edge reading is the operative one.
- ``extremal_search``: branch-and-bound proof that the density bound is
  tight -- the largest structure-free subset has exactly half the
  vertices (dimensions 4 and 5), resp. 5 vertices in Q_3.
- ``random_agreement_test``: seeded random cross-validation of the
  inductive extractor against direct search.
"""

from __future__ import annotations

import hashlib
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from .detect import (
    Claw,
    FiveSetKind,
    InducedCycle,
    PathClassification,
    check_witness,
    classify_five_set,
    find_claw,
    find_induced_cycle,
    find_theorem_witness,
)
from .errors import TheoremViolationError
from .hypercube import VertexSet, canonical_form, neighbor_masks
from .witness import find_witness_inductive, required_size

COUNTEREXAMPLE_CAP = 16

RANDOM_GENERATOR_NOTE = (
    "python random.Random (MT19937); trial i reseeded with the string "
    "'<seed>:<i>'; subset = first 2^(n-1)+1 labels of a full shuffle"
)


@dataclass
class VerificationReport:
    check_name: str
    universe_size: int
    passed: int
    failed: int
    counterexamples: list[str]
    wall_time: float
    worker_count: int
    deterministic_digest: str
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "universe_size": self.universe_size,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": list(self.counterexamples),
            "wall_time": self.wall_time,
            "worker_count": self.worker_count,
            "deterministic_digest": self.deterministic_digest,
            "details": self.details,
        }


@dataclass
class ExtremalResult:
    dim: int
    forbidden: tuple[str, ...]
    max_size: int
    certificate: VertexSet
    nodes_explored: int

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "forbidden": list(self.forbidden),
            "max_size": self.max_size,
            "certificate": self.certificate.to_hex(),
            "nodes_explored": self.nodes_explored,
        }


@dataclass(frozen=True)
class ClawInSmallSide:
    claw: Claw


@dataclass(frozen=True)
class CycleAfterDeletion:
    dropped: int
    cycle: InducedCycle


@dataclass(frozen=True)
class CaseFourOutcome:
    """Full analysis of one five-vertex path placement in the (5,4) case."""

    path: PathClassification
    admissible: tuple[VertexSet, ...]
    outcomes: tuple[Union[ClawInSmallSide, CycleAfterDeletion], ...]


# ---------------------------------------------------------------------------
# subset enumeration: increasing-mask order, with O(1) stepping and unranking
# ---------------------------------------------------------------------------


def gosper_next(mask: int) -> int:
    """Next same-popcount mask in increasing numeric order."""
    low = mask & -mask
    up = mask + low
    return up | (((mask ^ up) >> 2) // low)


def unrank_subset(index: int, size: int, universe: int) -> int:
    """The index-th ``size``-subset of [0, universe) in increasing-mask order."""
    if not 0 <= index < math.comb(universe, size):
        raise ValueError("subset index out of range")
    mask = 0
    r = index
    for i in range(size, 0, -1):
        c = i - 1
        while math.comb(c + 1, i) <= r:
            c += 1
        mask |= 1 << c
        r -= math.comb(c, i)
    return mask


def _spread(pmask: int, parity: int) -> int:
    """Map a Q_3 position mask onto the Q_4 half with coordinate 1 = parity."""
    out = 0
    while pmask:
        lsb = pmask & -pmask
        out |= 1 << (2 * (lsb.bit_length() - 1) + parity)
        pmask ^= lsb
    return out


# ---------------------------------------------------------------------------
# per-configuration item functions (picklable, dispatched by name)
# ---------------------------------------------------------------------------

_EVEN_HALF_Q4 = 0x5555
_ODD_HALF_Q4 = 0xAAAA


def _full_degree_center_exists(side_mask: int, full_mask: int, dim: int) -> bool:
    nbr = neighbor_masks(dim)
    m = side_mask
    while m:
        lsb = m & -m
        if (nbr[lsb.bit_length() - 1] & full_mask).bit_count() >= 3:
            return True
        m ^= lsb
    return False


def _theorem_item(params, index, state):
    size, symmetry_reduced = params
    if state is None:
        state = {"mask": unrank_subset(index, size, 16), "memo": {}}
    s = VertexSet(4, state["mask"])
    details = None
    if symmetry_reduced:
        canon = canonical_form(s).mask
        memo = state["memo"]
        if canon not in memo:
            w = find_theorem_witness(VertexSet(4, canon))
            memo[canon] = w is not None and check_witness(w, VertexSet(4, canon))
        ok = memo[canon]
        details = {"class_counts": {format(canon, "04X"): 1}}
    else:
        w = find_theorem_witness(s)
        ok = w is not None and check_witness(w, s)
    cex = None if ok else s.to_hex()
    state["mask"] = gosper_next(state["mask"])
    return ok, cex, details, state


def _proposition_item(params, index, state):
    if state is None:
        state = {"mask": unrank_subset(index, 6, 8)}
    s = VertexSet(3, state["mask"])
    claw = find_claw(s) is not None
    cycle = find_induced_cycle(s, 6) is not None
    ok = claw or cycle
    key = (
        "claw_and_cycle"
        if claw and cycle
        else "claw_only"
        if claw
        else "cycle_only"
        if cycle
        else "neither"
    )
    details = {key: 1}
    if key == "cycle_only":
        details["cycle_only_masks"] = [s.to_hex()]
    cex = None if ok else s.to_hex()
    state["mask"] = gosper_next(state["mask"])
    return ok, cex, details, state


def _case1_item(params, index, state):
    small = 1 << (2 * index + 1)
    full = _EVEN_HALF_Q4 | small
    nbr = neighbor_masks(4)
    ok = all(
        (nbr[v] & full).bit_count() >= 3 for v in range(0, 16, 2)
    )
    cex = None if ok else VertexSet(4, full).to_hex()
    return ok, cex, None, None


def _case23_item(params, index, state):
    big_size = params[0]
    small_size = 9 - big_size
    n_small = math.comb(8, small_size)
    i, j = divmod(index, n_small)
    big = _spread(unrank_subset(i, big_size, 8), 0)
    small = _spread(unrank_subset(j, small_size, 8), 1)
    full = big | small
    ok = _full_degree_center_exists(big, full, 4)
    subcube_ok = _full_degree_center_exists(big, big, 4)
    details = {"subcube_only_failures": 0 if subcube_ok else 1}
    cex = None if ok else VertexSet(4, full).to_hex()
    return ok, cex, details, None


def _case4_structure_item(params, index, state):
    big = _spread(unrank_subset(index, 5, 8), 0)
    s = VertexSet(4, big)
    nbr = neighbor_masks(4)
    max_deg = max((nbr[v] & big).bit_count() for v in s.members())
    shape = classify_five_set(s)
    is_p5 = shape.kind is FiveSetKind.PATH_P5
    ok = (max_deg <= 2) == is_p5
    details = {"p5_placements": 1 if is_p5 else 0}
    cex = None if ok else s.to_hex()
    return ok, cex, details, None


def _admissible_choices(big_mask: int) -> list[int]:
    """4-subsets of the odd half avoiding partners of the path's internals."""
    shape = classify_five_set(VertexSet(4, big_mask))
    partner_positions = {a >> 1 for a in shape.internal}
    out = []
    count = math.comb(8, 4)
    pmask = unrank_subset(0, 4, 8)
    for _ in range(count):
        if not any((pmask >> p) & 1 for p in partner_positions):
            out.append(_spread(pmask, 1))
        pmask = gosper_next(pmask)
    return out


def _case4_admissible_item(params, index, state):
    placements = params[0]
    big = placements[index]
    choices = _admissible_choices(big)
    ok = len(choices) == 5
    cex = None if ok else VertexSet(4, big).to_hex()
    return ok, cex, {"admissible_counts": [len(choices)]}, None


def _small_side_outcome(big: int, small: int):
    """Resolve one (5,4) configuration: a claw-center in the small side,
    or a vertex whose removal leaves an induced 8-cycle."""
    full = big | small
    nbr = neighbor_masks(4)
    m = small
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        if (nbr[v] & full).bit_count() >= 3:
            return "claw", v
        m ^= lsb
    m = full
    while m:
        lsb = m & -m
        z = lsb.bit_length() - 1
        rest = full ^ lsb
        if _induces_single_cycle(rest, 4):
            return "cycle", z
        m ^= lsb
    return "none", -1


def _induces_single_cycle(mask: int, dim: int) -> bool:
    """All induced degrees exactly 2 and connected: one chordless cycle."""
    nbr = neighbor_masks(dim)
    m = mask
    while m:
        lsb = m & -m
        if (nbr[lsb.bit_length() - 1] & mask).bit_count() != 2:
            return False
        m ^= lsb
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        while frontier:
            lsb = frontier & -frontier
            grow |= nbr[lsb.bit_length() - 1]
            frontier ^= lsb
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def _case4_outcomes_item(params, index, state):
    pairs = params[0]
    placement_idx, big, small = pairs[index]
    kind, _vertex = _small_side_outcome(big, small)
    ok = kind in ("claw", "cycle")
    details = {"outcome_kinds": [[placement_idx, kind]]}
    cex = None if ok else VertexSet(4, big | small).to_hex()
    return ok, cex, details, None


def _random_agreement_item(params, index, state):
    import random

    n, seed = params
    rng = random.Random(f"{seed}:{index}")
    labels = list(range(1 << n))
    rng.shuffle(labels)
    target = required_size(n)
    s = VertexSet.from_members(labels[:target], n)
    try:
        w, trace = find_witness_inductive(s)
        ok = check_witness(w, s)
        prev = len(s)
        for st in trace.steps:
            a, b = st.side_cardinalities
            chosen = st.side_cardinalities[st.chosen_side]
            if a + b != prev or chosen < (1 << (st.dim - 2)) + 1:
                ok = False
            prev = chosen
        if ok and n <= 5:
            ok = find_theorem_witness(s) is not None
    except Exception:
        ok = False
    cex = None if ok else s.to_hex()
    return ok, cex, None, None


_ITEMS = {
    "theorem": _theorem_item,
    "proposition": _proposition_item,
    "case1": _case1_item,
    "case23": _case23_item,
    "case4_structure": _case4_structure_item,
    "case4_admissible": _case4_admissible_item,
    "case4_outcomes": _case4_outcomes_item,
    "random_agreement": _random_agreement_item,
}


# ---------------------------------------------------------------------------
# deterministic partitioned runner
# ---------------------------------------------------------------------------


def _merge_details(acc: dict, extra: Optional[dict]) -> None:
    if not extra:
        return
    for key, val in extra.items():
        if isinstance(val, int):
            acc[key] = acc.get(key, 0) + val
        elif isinstance(val, list):
            acc.setdefault(key, []).extend(val)
        elif isinstance(val, dict):
            _merge_details(acc.setdefault(key, {}), val)
        else:
            acc[key] = val


def _run_chunk(item_name: str, params: tuple, start: int, stop: int):
    item = _ITEMS[item_name]
    outcomes = bytearray()
    passed = 0
    counterexamples: list[str] = []
    details: dict = {}
    state = None
    for index in range(start, stop):
        ok, cex, extra, state = item(params, index, state)
        outcomes.append(49 if ok else 48)  # b"1" / b"0"
        if ok:
            passed += 1
        elif cex is not None and len(counterexamples) < COUNTEREXAMPLE_CAP:
            counterexamples.append(cex)
        _merge_details(details, extra)
    return bytes(outcomes), passed, counterexamples, details


def _ranges(total: int, workers: int) -> list[tuple[int, int]]:
    chunk, extra = divmod(total, workers)
    out = []
    lo = 0
    for i in range(workers):
        hi = lo + chunk + (1 if i < extra else 0)
        if hi > lo:
            out.append((lo, hi))
        lo = hi
    return out


def _run_check(
    check_name: str, item_name: str, params: tuple, total: int, workers: int
) -> VerificationReport:
    if workers < 1:
        raise ValueError("workers must be >= 1")
    t0 = time.perf_counter()
    if workers == 1 or total <= 1:
        chunks = [_run_chunk(item_name, params, 0, total)]
    else:
        spans = _ranges(total, workers)
        with ProcessPoolExecutor(max_workers=len(spans)) as pool:
            futures = [
                pool.submit(_run_chunk, item_name, params, lo, hi) for lo, hi in spans
            ]
            chunks = [f.result() for f in futures]
    stream = b"".join(c[0] for c in chunks)
    passed = sum(c[1] for c in chunks)
    counterexamples: list[str] = []
    details: dict = {}
    for c in chunks:
        counterexamples.extend(c[2][: COUNTEREXAMPLE_CAP - len(counterexamples)])
        _merge_details(details, c[3])
    return VerificationReport(
        check_name=check_name,
        universe_size=total,
        passed=passed,
        failed=total - passed,
        counterexamples=counterexamples,
        wall_time=time.perf_counter() - t0,
        worker_count=workers,
        deterministic_digest=hashlib.sha256(stream).hexdigest(),
        details=details,
    )


# ---------------------------------------------------------------------------
# public checks
# ---------------------------------------------------------------------------


def verify_theorem_exhaustive(
    n: int = 4, size: int = 9, workers: int = 1, symmetry_reduced: bool = False
) -> VerificationReport:
    """Check every ``size``-subset of Q_4 for a claw or induced 8-cycle.

    Only n = 4 is supported (exhaustive subset enumeration beyond that is
    out of desk range) and size must be at least 9, the density bound.
    With ``symmetry_reduced`` the witness existence is evaluated once per
    automorphism class and replayed across the orbit; the digest then
    doubles as a cross-check that existence is automorphism-invariant.
    """
    if n != 4:
        raise ValueError(f"exhaustive theorem check supports n=4 only, got {n}")
    if not 9 <= size <= 16:
        raise ValueError(f"size must be in [9, 16], got {size}")
    total = math.comb(16, size)
    report = _run_check(
        f"theorem-exhaustive-n4-size{size}", "theorem", (size, symmetry_reduced), total, workers
    )
    if symmetry_reduced:
        class_counts = report.details.pop("class_counts", {})
        report.details["distinct_classes"] = len(class_counts)
        report.details["orbit_accounting_total"] = sum(class_counts.values())
    return report


def verify_proposition_exhaustive(workers: int = 1) -> VerificationReport:
    """Check all 28 six-vertex subsets of Q_3 for a claw or induced 6-cycle,
    classifying which condition fired for each."""
    total = math.comb(8, 6)
    report = _run_check("proposition-exhaustive-q3-size6", "proposition", (), total, workers)
    for key in ("claw_and_cycle", "claw_only", "cycle_only", "neither"):
        report.details.setdefault(key, 0)
    report.details.setdefault("cycle_only_masks", [])
    return report


def _p5_placements() -> tuple[int, ...]:
    out = []
    pmask = unrank_subset(0, 5, 8)
    for _ in range(math.comb(8, 5)):
        big = _spread(pmask, 0)
        shape = classify_five_set(VertexSet(4, big))
        if shape.kind is FiveSetKind.PATH_P5:
            out.append(big)
        pmask = gosper_next(pmask)
    return tuple(out)


def verify_case_claims(case: Union[int, str] = "all", workers: int = 1) -> list[VerificationReport]:
    """Machine-check the delegated claims of the dimension-4 case analysis.

    One report per sub-claim.  ``case`` selects a single split -- 1 for
    (8,1), 2 for (7,2), 3 for (6,3), 4 for (5,4) -- or "all".
    """
    if case not in (1, 2, 3, 4, "all"):
        raise ValueError(f"case must be 1..4 or 'all', got {case!r}")
    reports: list[VerificationReport] = []

    if case in (1, "all"):
        reports.append(_run_check("case1-full-half-claw-centers", "case1", (), 8, workers))

    if case in (2, "all"):
        r = _run_check("case2-split-7-2-claw-center", "case23", (7,), 8 * 28, workers)
        reports.append(r)

    if case in (3, "all"):
        r = _run_check("case3-split-6-3-claw-center", "case23", (6,), 28 * 56, workers)
        reports.append(r)

    if case in (4, "all"):
        r1 = _run_check(
            "case4-max-degree-2-is-path", "case4_structure", (), math.comb(8, 5), workers
        )
        reports.append(r1)

        placements = _p5_placements()
        r2 = _run_check(
            "case4-admissible-choice-count",
            "case4_admissible",
            (placements,),
            len(placements),
            workers,
        )
        reports.append(r2)

        pairs = []
        for idx, big in enumerate(placements):
            for small in _admissible_choices(big):
                pairs.append((idx, big, small))
        r3 = _run_check(
            "case4-claw-or-cycle-outcomes", "case4_outcomes", (tuple(pairs),), len(pairs), workers
        )
        splits: dict[int, list[int]] = {}
        for placement_idx, kind in r3.details.pop("outcome_kinds", []):
            claws_cycles = splits.setdefault(placement_idx, [0, 0])
            claws_cycles[0 if kind == "claw" else 1] += 1
        per_placement = [splits.get(i, [0, 0]) for i in range(len(placements))]
        r3.details["per_placement_split"] = per_placement
        r3.details["all_split_4_to_1"] = all(s == [4, 1] for s in per_placement)
        reports.append(r3)

    return reports


def analyze_case_four_placement(five: VertexSet) -> CaseFourOutcome:
    """Full outcome analysis for one path placement in the (5,4) split.

    ``five`` must be five vertices of the coordinate-1 = 0 half of Q_4
    inducing a five-vertex path.  Returns the path classification, the
    admissible four-vertex choices on the other half, and each choice's
    resolution, every cycle independently validated.
    """
    if five.dim != 4 or len(five) != 5 or five.mask & _ODD_HALF_Q4:
        raise ValueError("expected five vertices in the coordinate-1 = 0 half of Q_4")
    shape = classify_five_set(five)
    if shape.kind is not FiveSetKind.PATH_P5:
        raise ValueError(f"placement does not induce a path: {shape.kind.value}")

    admissible = tuple(
        VertexSet(4, small) for small in _admissible_choices(five.mask)
    )
    outcomes: list[Union[ClawInSmallSide, CycleAfterDeletion]] = []
    nbr = neighbor_masks(4)
    for choice in admissible:
        full = VertexSet(4, five.mask | choice.mask)
        kind, vertex = _small_side_outcome(five.mask, choice.mask)
        if kind == "claw":
            hood = nbr[vertex] & full.mask
            leaves = []
            while hood and len(leaves) < 3:
                lsb = hood & -hood
                leaves.append(lsb.bit_length() - 1)
                hood ^= lsb
            claw = Claw(vertex, tuple(leaves))
            if not check_witness(claw, full):
                raise TheoremViolationError("invalid claw outcome", 4, full.mask)
            outcomes.append(ClawInSmallSide(claw))
        elif kind == "cycle":
            rest = full.remove(vertex)
            cycle = find_induced_cycle(rest, 8)
            if cycle is None or not check_witness(cycle, rest) or not check_witness(cycle, full):
                raise TheoremViolationError("invalid cycle outcome", 4, full.mask)
            outcomes.append(CycleAfterDeletion(vertex, cycle))
        else:
            raise TheoremViolationError(
                "a (5,4) configuration resolved to neither claw nor cycle", 4, full.mask
            )
    return CaseFourOutcome(shape, admissible, tuple(outcomes))


def random_agreement_test(n: int, trials: int, seed: int, workers: int = 1) -> VerificationReport:
    """Cross-validate the inductive extractor on seeded random subsets.

    Each trial shuffles the 2^n labels with its own deterministically
    derived generator and takes the first 2^(n-1) + 1 as the subset; the
    extracted witness must validate and the trace must satisfy the
    half-plus-one inequality at every level.  For n <= 5 existence is
    also cross-checked against direct search.
    """
    if not 4 <= n <= 12:
        raise ValueError(f"random agreement test supports 4 <= n <= 12, got {n}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = _run_check(
        f"random-agreement-n{n}-trials{trials}-seed{seed}",
        "random_agreement",
        (n, seed),
        trials,
        workers,
    )
    report.details["generator"] = RANDOM_GENERATOR_NOTE
    report.details["seed"] = seed
    return report


# ---------------------------------------------------------------------------
# extremal search: tightness of the half-the-vertices bound
# ---------------------------------------------------------------------------


def _parse_forbidden(forbidden) -> tuple[tuple[str, str], int]:
    kinds = tuple(forbidden)
    if len(kinds) != 2 or "claw" not in kinds:
        raise ValueError(f"forbidden structures must be ('claw', 'C<k>'), got {forbidden!r}")
    cycle = next(k for k in kinds if k != "claw")
    if not (isinstance(cycle, str) and cycle.startswith("C") and cycle[1:].isdigit()):
        raise ValueError(f"unrecognized forbidden structure {cycle!r}")
    k = int(cycle[1:])
    if k not in (6, 8):
        raise ValueError(f"forbidden cycle length must be 6 or 8, got {k}")
    return ("claw", cycle), k


def extremal_search(n: int, forbidden=("claw", "C8")) -> ExtremalResult:
    """Exact maximum size of a subset with no claw and no induced C_k.

    Branch and bound over the vertices in mask-lexicographic order: the
    highest label is decided first and exclusion is tried before
    inclusion, so complete sets are reached in increasing-mask order and
    the first maximum found is the lexicographically least one.  A branch
    is cut when a vertex would reach in-set degree 3 (that is a claw),
    when the chosen vertices would close an induced C_k, or when the
    undecided vertices cannot lift the current count past the best.

    Supported ranges: n <= 5 with C8 forbidden, n = 3 with C6 forbidden.
    """
    normalized, k = _parse_forbidden(forbidden)
    if k == 8 and not 1 <= n <= 5:
        raise ValueError(f"claw+C8 search supports n <= 5, got {n}")
    if k == 6 and n != 3:
        raise ValueError(f"claw+C6 search supports n = 3 only, got {n}")

    nverts = 1 << n
    nbr = neighbor_masks(n)

    # The even-weight half induces no edges at all, so it is free of both
    # structures; its size seeds the bound and guarantees a certificate.
    seed_size = nverts // 2

    deg = [0] * nverts
    end_partner: dict[int, int] = {}
    comp_size: dict[int, int] = {}
    best_size = seed_size - 1
    best_mask = 0
    nodes = 0

    def dfs(v: int, count: int, chosen: int) -> None:
        nonlocal best_size, best_mask, nodes
        nodes += 1
        if count + v + 1 <= best_size:
            return
        if v < 0:
            best_size = count
            best_mask = chosen
            return

        dfs(v - 1, count, chosen)

        hood = nbr[v] & chosen
        dv = hood.bit_count()
        if dv > 2:
            return
        us = []
        m = hood
        while m:
            lsb = m & -m
            u = lsb.bit_length() - 1
            if deg[u] == 2:
                return
            us.append(u)
            m ^= lsb

        closing = False
        if dv == 2:
            u1, u2 = us
            if end_partner.get(u1) == u2:
                if comp_size[u1] + 1 == k:
                    return
                closing = True

        # apply: update path/cycle component bookkeeping
        saved = []

        def put(key, val):
            saved.append((key, end_partner.get(key), comp_size.get(key)))
            end_partner[key] = val

        def drop(key):
            saved.append((key, end_partner.get(key), comp_size.get(key)))
            end_partner.pop(key, None)
            comp_size.pop(key, None)

        deg[v] = dv
        for u in us:
            deg[u] += 1
        if dv == 0:
            put(v, v)
            comp_size[v] = 1
        elif dv == 1:
            u = us[0]
            other = end_partner[u]
            new_size = comp_size[u] + 1
            if other != u:
                drop(u)
            put(v, other)
            comp_size[v] = new_size
            put(other, v)
            comp_size[other] = new_size
        else:
            u1, u2 = us
            if closing:
                drop(u1)
                drop(u2)
            else:
                other1 = end_partner[u1]
                other2 = end_partner[u2]
                new_size = comp_size[u1] + comp_size[u2] + 1
                if other1 != u1:
                    drop(u1)
                if other2 != u2:
                    drop(u2)
                put(other1, other2)
                comp_size[other1] = new_size
                put(other2, other1)
                comp_size[other2] = new_size

        dfs(v - 1, count + 1, chosen | (1 << v))

        # undo
        for key, old_partner, old_size in reversed(saved):
            if old_partner is None:
                end_partner.pop(key, None)
            else:
                end_partner[key] = old_partner
            if old_size is None:
                comp_size.pop(key, None)
            else:
                comp_size[key] = old_size
        for u in us:
            deg[u] -= 1
        deg[v] = 0

    dfs(nverts - 1, 0, 0)
    return ExtremalResult(
        dim=n,
        forbidden=normalized,
        max_size=best_size,
        certificate=VertexSet(n, best_mask),
        nodes_explored=nodes,
    )
