"""Ground truth at small sizes: exhaustive cyclic-difference-set and
two-level-sequence search with difference-count pruning, plus the
certifier-vs-search soundness harness.

The search enumerates candidate sets in lexicographic order, fixing 0 as the
first element (translation canonicalization) and maintaining incremental
counts of every ordered difference; a branch dies as soon as any count would
exceed lambda.  The inner loop is a resumable iterative DFS over flat arrays
so it can be JIT-compiled; without a compiler the same function runs as
plain Python.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .certifier import Certificate, certify_params
from .config import DEFAULT_CONFIG, RunConfig
from .seqcore import (
    BinarySequence,
    CdsParams,
    CyclicDifferenceSet,
    DifferenceViolation,
    cds_to_sequence,
    feasibility,
    params_from_nd,
    verify_cds,
)

_MAX_SOLUTIONS = 65536
_CHUNK_NODES = 20_000_000  # kernel returns to Python this often for cap checks


def _dfs_kernel(n, k, lam, chosen, cand, counts, depth, node_budget,
                sols_buf, nsols, find_all):
    """Resumable DFS step.  Mutates chosen/cand/counts in place and returns
    (depth, nodes_used, nsols, done).  chosen[0] is fixed to 0; depth is the
    next position to fill; cand[depth] the next candidate value to try."""
    nodes = 0
    while True:
        if depth == 0:
            return depth, nodes, nsols, True
        if nodes >= node_budget:
            return depth, nodes, nsols, False
        x = cand[depth]
        if x > n - (k - depth):
            # exhausted this level: undo the element below and advance it
            depth -= 1
            if depth == 0:
                return depth, nodes, nsols, True
            xb = chosen[depth]
            for j in range(depth):
                d1 = (xb - chosen[j]) % n
                counts[d1] -= 1
                counts[n - d1] -= 1
            cand[depth] = xb + 1
            continue
        nodes += 1
        ok = True
        applied = 0
        for j in range(depth):
            d1 = (x - chosen[j]) % n
            counts[d1] += 1
            if counts[d1] > lam:
                counts[d1] -= 1
                ok = False
                break
            d2 = n - d1
            counts[d2] += 1
            if counts[d2] > lam:
                counts[d2] -= 1
                counts[d1] -= 1
                ok = False
                break
            applied += 1
        if not ok:
            for j in range(applied):
                d1 = (x - chosen[j]) % n
                counts[d1] -= 1
                counts[n - d1] -= 1
            cand[depth] += 1
            continue
        chosen[depth] = x
        if depth == k - 1:
            if nsols < sols_buf.shape[0]:
                for j in range(k):
                    sols_buf[nsols, j] = chosen[j]
            nsols += 1
            for j in range(depth):
                d1 = (x - chosen[j]) % n
                counts[d1] -= 1
                counts[n - d1] -= 1
            cand[depth] = x + 1
            if not find_all:
                return depth, nodes, nsols, True
        else:
            depth += 1
            cand[depth] = x + 1


try:  # optional JIT; identical semantics either way
    from numba import njit

    _dfs_fast = njit(cache=True)(_dfs_kernel)
except ImportError:  # pragma: no cover - numba is a declared dependency
    _dfs_fast = _dfs_kernel


@dataclass(frozen=True)
class SearchResult:
    params: CdsParams
    sets: tuple[tuple[int, ...], ...]
    complete: bool
    nodes: int
    elapsed: float


def exhaustive_cds_search(n: int, k: int, lam: int, *, find_all: bool = True,
                          time_cap: float | None = None) -> SearchResult:
    """All (n, k, lambda) difference sets containing residue 0, in
    lexicographic order.  A time cap yields complete=False with whatever was
    found so far (never a silently empty result)."""
    params = CdsParams(n, k, lam)  # validates the counting identity
    start = time.time()
    if k == 0:
        return SearchResult(params, ((),) if lam == 0 else (), True, 0, 0.0)
    if k == 1:
        return SearchResult(params, ((0,),), True, 0, 0.0)
    chosen = np.zeros(k, dtype=np.int64)
    cand = np.zeros(k + 1, dtype=np.int64)
    counts = np.zeros(n, dtype=np.int64)
    sols = np.zeros((_MAX_SOLUTIONS, k), dtype=np.int64)
    depth, nsols, total_nodes = 1, 0, 0
    cand[1] = 1
    done = False
    while not done:
        depth, nodes, nsols, done = _dfs_fast(
            n, k, lam, chosen, cand, counts, depth, _CHUNK_NODES,
            sols, nsols, find_all)
        total_nodes += nodes
        if not done and time_cap is not None and time.time() - start > time_cap:
            break
    if nsols > _MAX_SOLUTIONS:
        raise RuntimeError(f"solution buffer overflow: {nsols} sets")
    found = tuple(tuple(int(v) for v in sols[i]) for i in range(nsols))
    return SearchResult(params, found, done, total_nodes, time.time() - start)


def naive_cds_search(n: int, k: int, lam: int) -> list[tuple[int, ...]]:
    """Unpruned reference search over all k-subsets containing 0 (small n
    only); used to validate the pruned search."""
    CdsParams(n, k, lam)
    if k == 0:
        return [()] if lam == 0 else []
    out = []
    for rest in itertools.combinations(range(1, n), k - 1):
        cand = (0,) + rest
        if verify_cds(n, cand) == CdsParams(n, k, lam):
            out.append(cand)
    return out


@dataclass(frozen=True)
class SequenceSearchResult:
    n: int
    d: int
    sequences: tuple[BinarySequence, ...]
    complete: bool


def exhaustive_sequence_search(n: int, d: int, *,
                               time_cap: float | None = None) -> SequenceSearchResult:
    """All two-level sequences of period n with off-peak value d.

    Infeasible (n, d) returns empty immediately.  Otherwise the canonical
    (smaller-k) parameter branch is searched exhaustively and each found set
    is expanded through all translates and complements (the other branch's
    sets are exactly the complements)."""
    ok, _ = feasibility(n, d)
    if not ok:
        return SequenceSearchResult(n, d, (), True)
    branches = params_from_nd(n, d)
    params = branches[0]
    result = exhaustive_cds_search(params.n, params.k, params.lam,
                                   time_cap=time_cap)
    all_sets: set[tuple[int, ...]] = set()
    universe = frozenset(range(n))
    for base in result.sets:
        for t in range(n):
            shifted = tuple(sorted((x + t) % n for x in base))
            all_sets.add(shifted)
            if len(branches) > 1:
                all_sets.add(tuple(sorted(universe - set(shifted))))
    seqs = []
    for elements in sorted(all_sets):
        k = len(elements)
        lam = (k * (k - 1)) // (n - 1) if n > 1 else 0
        cds = CyclicDifferenceSet(CdsParams(n, k, lam), elements)
        seqs.append(cds_to_sequence(cds))
    seqs.sort(key=lambda s: s.values)
    return SequenceSearchResult(n, d, tuple(seqs), result.complete)


# ---------------------------------------------------------------------------
# Soundness harness


@dataclass(frozen=True)
class CrossCheckRow:
    params: CdsParams
    certificate: Certificate
    oracle_found: bool
    oracle_complete: bool


@dataclass(frozen=True)
class CrossCheckReport:
    n_max: int
    rows: tuple[CrossCheckRow, ...]
    violations: tuple[CrossCheckRow, ...]

    @property
    def open_but_empty(self) -> tuple[CrossCheckRow, ...]:
        return tuple(r for r in self.rows
                     if r.certificate.verdict == "open"
                     and r.oracle_complete and not r.oracle_found)

    def summary(self) -> str:
        tally: dict[str, int] = {}
        for r in self.rows:
            key = f"{r.certificate.verdict}/{'found' if r.oracle_found else 'empty'}"
            tally[key] = tally.get(key, 0) + 1
        lines = [f"cross-check n <= {self.n_max}: {len(self.rows)} instances"]
        for key in sorted(tally):
            lines.append(f"  {key}: {tally[key]}")
        lines.append(f"  soundness violations: {len(self.violations)}")
        return "\n".join(lines)


def feasible_parameter_list(n_max: int) -> list[CdsParams]:
    """All (n, k, lambda) with 2 <= n <= n_max, 1 <= k <= n/2 and the
    counting identity k(k-1) = (n-1) lambda."""
    out = []
    for n in range(2, n_max + 1):
        for k in range(1, n // 2 + 1):
            if (k * (k - 1)) % (n - 1) == 0:
                out.append(CdsParams(n, k, k * (k - 1) // (n - 1)))
    return out


def cross_check(n_max: int = 30, config: RunConfig = DEFAULT_CONFIG,
                time_cap: float | None = None) -> CrossCheckReport:
    """Run the full certifier battery and the exhaustive search on every
    feasible instance; report any instance where a nonexistence certificate
    coexists with a found set (there must be none)."""
    rows = []
    violations = []
    for params in feasible_parameter_list(n_max):
        cert = certify_params(params, config)
        res = exhaustive_cds_search(params.n, params.k, params.lam,
                                    time_cap=time_cap)
        row = CrossCheckRow(params, cert, bool(res.sets), res.complete)
        rows.append(row)
        if cert.verdict == "nonexistent" and res.sets:
            violations.append(row)
        if cert.verdict == "exists":
            witness = verify_cds(params.n, cert.witness_set)
            if isinstance(witness, DifferenceViolation) or not res.sets:
                violations.append(row)
    return CrossCheckReport(n_max, tuple(rows), tuple(violations))
