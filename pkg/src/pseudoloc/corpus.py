"""Deterministic pseudotree generators and the theorem-verification pipeline.

Labeled enumeration runs over Prüfer sequences; class enumeration (dedup)
produces one canonically-labeled representative per isomorphism class.
Trees are canonicalized by the centre-rooted subtree-code order; unicyclic
graphs by the lexicographically minimal rotation/reflection of their cycle's
rooted-branching-tree codes.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterator

from .closed_form import closed_result, oracle_result, valid_k_range
from .errors import SizeCapExceeded
from .graph import Graph, cap_override, encode_graph6, from_edge_list
from .resolvers import ParameterResult
from .structure import profile

TREE_ENUM_CAP = 12
UNICYCLIC_ENUM_CAP = 10

CORE_PARAMETERS = ("dmd", "dim", "sdim", "ddim", "dim2", "dimk", "edim", "mdim", "ldim")

STATUS_AGREE = "Agree"
STATUS_IN_BOUNDS = "InBounds"
STATUS_VIOLATION = "VIOLATION"


def _tree_cap() -> int:
    override = cap_override()
    return TREE_ENUM_CAP if override is None else override


def _unicyclic_cap() -> int:
    override = cap_override()
    return UNICYCLIC_ENUM_CAP if override is None else override


# ---------------------------------------------------------------------------
# Prüfer sequences


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Labeled tree on n vertices from a Prüfer sequence of length n-2."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    ptr = 0
    leaf = -1
    for x in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
        # x may have just become the smallest available leaf
        leaf = x if degree[x] == 1 and x < ptr else -1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return from_edge_list(n, edges)


def _prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if n == 2:
        yield ()
        return
    seq = [0] * (n - 2)
    while True:
        yield tuple(seq)
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


# ---------------------------------------------------------------------------
# Canonical forms


def _tree_code(adj: dict[int, list[int]], root: int, parent: int) -> tuple:
    children = sorted(
        (_tree_code(adj, w, root) for w in adj[root] if w != parent),
    )
    return tuple(children)


def _tree_centers(n: int, adj: dict[int, list[int]]) -> list[int]:
    if n == 1:
        return [0]
    degree = {v: len(adj[v]) for v in adj}
    layer = [v for v in adj if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            degree[v] = 0
            for w in adj[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_canonical_key(g: Graph) -> tuple:
    """Complete isomorphism invariant for trees (centre-rooted subtree codes)."""
    adj = {v: list(g.adjacency[v]) for v in range(g.n)}
    centers = _tree_centers(g.n, adj)
    if len(centers) == 1:
        return ("c1", _tree_code(adj, centers[0], -1))
    a, b = centers
    code_a = _tree_code(adj, a, b)
    code_b = _tree_code(adj, b, a)
    return ("c2",) + tuple(sorted([code_a, code_b]))


def _relabel_rooted(adj: dict[int, list[int]], root: int, parent: int, order: list[int]) -> None:
    order.append(root)
    children = sorted(
        ((w, _tree_code(adj, w, root)) for w in adj[root] if w != parent),
        key=lambda t: t[1],
    )
    for w, _ in children:
        _relabel_rooted(adj, w, root, order)


def tree_canonical_form(g: Graph) -> Graph:
    """Deterministic canonical relabeling of a tree."""
    adj = {v: list(g.adjacency[v]) for v in range(g.n)}
    centers = _tree_centers(g.n, adj)
    if len(centers) == 1:
        root = centers[0]
    else:
        a, b = centers
        root = a if _tree_code(adj, a, b) <= _tree_code(adj, b, a) else b
    order: list[int] = []
    _relabel_rooted(adj, root, -1, order)
    new_id = {v: i for i, v in enumerate(order)}
    return from_edge_list(g.n, [(new_id[u], new_id[v]) for u, v in g.edges])


def unicyclic_canonical_key(g: Graph) -> tuple:
    """Complete isomorphism invariant for unicyclic graphs.

    The cycle's sequence of rooted branching-tree codes, minimized over
    rotation and reflection.
    """
    prof = profile(g)
    adj = {v: list(g.adjacency[v]) for v in range(g.n)}
    cycle = prof.cycle
    gsize = len(cycle)
    cycle_set = set(cycle)
    codes = []
    for v in cycle:
        trimmed = {
            x: [w for w in adj[x] if not (x == v and w in cycle_set)] for x in prof.branching_trees[v]
        }
        codes.append(_tree_code(trimmed, v, -1))
    best = None
    for seq in (codes, codes[::-1]):
        for shift in range(gsize):
            rotated = tuple(seq[(shift + i) % gsize] for i in range(gsize))
            if best is None or rotated < best:
                best = rotated
    return (gsize, best)


def unicyclic_canonical_form(g: Graph) -> Graph:
    """Deterministic canonical relabeling of a unicyclic graph."""
    prof = profile(g)
    adj = {v: list(g.adjacency[v]) for v in range(g.n)}
    cycle = prof.cycle
    gsize = len(cycle)
    cycle_set = set(cycle)
    trimmed_adj: dict[int, dict[int, list[int]]] = {}
    codes = {}
    for v in cycle:
        trimmed = {
            x: [w for w in adj[x] if not (x == v and w in cycle_set)] for x in prof.branching_trees[v]
        }
        trimmed_adj[v] = trimmed
        codes[v] = _tree_code(trimmed, v, -1)
    best = None
    best_order = None
    for seq in (list(cycle), list(cycle)[::-1]):
        for shift in range(gsize):
            rotated = seq[shift:] + seq[:shift]
            key = tuple(codes[v] for v in rotated)
            if best is None or key < best:
                best = key
                best_order = rotated
    order: list[int] = []
    tails: list[list[int]] = []
    for v in best_order:
        tail: list[int] = []
        _relabel_rooted(trimmed_adj[v], v, -1, tail)
        tails.append(tail)
    order = [t[0] for t in tails]
    for t in tails:
        order.extend(t[1:])
    new_id = {v: i for i, v in enumerate(order)}
    return from_edge_list(g.n, [(new_id[u], new_id[v]) for u, v in g.edges])


# ---------------------------------------------------------------------------
# Enumerators


def enumerate_trees(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled trees on n vertices (Prüfer order), or one canonical
    representative per isomorphism class when dedup is set."""
    if not 2 <= n <= _tree_cap():
        raise SizeCapExceeded(f"tree enumeration supports 2 <= n <= {_tree_cap()}, got {n}")
    if dedup:
        yield from _tree_classes(n)
        return
    for seq in _prufer_sequences(n):
        yield prufer_decode(seq, n)


def _tree_classes(n: int) -> list[Graph]:
    """Canonical representatives of all tree classes, by leaf extension."""
    reps: dict[tuple, Graph] = {}
    if n == 2:
        return [from_edge_list(2, [(0, 1)])]
    for smaller in _tree_classes(n - 1):
        for v in range(smaller.n):
            grown = from_edge_list(n, list(smaller.edges) + [(v, n - 1)])
            key = tree_canonical_key(grown)
            if key not in reps:
                reps[key] = tree_canonical_form(grown)
    return [reps[k] for k in sorted(reps)]


def enumerate_unicyclic(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All connected unicyclic graphs on n vertices (tree plus one chord)."""
    if not 3 <= n <= _unicyclic_cap():
        raise SizeCapExceeded(
            f"unicyclic enumeration supports 3 <= n <= {_unicyclic_cap()}, got {n}"
        )
    if dedup:
        reps: dict[tuple, Graph] = {}
        for tree in _tree_classes(n):
            edge_set = set(tree.edges)
            for u in range(n):
                for v in range(u + 1, n):
                    if (u, v) in edge_set:
                        continue
                    candidate = from_edge_list(n, list(tree.edges) + [(u, v)])
                    key = unicyclic_canonical_key(candidate)
                    if key not in reps:
                        reps[key] = unicyclic_canonical_form(candidate)
        for key in sorted(reps):
            yield reps[key]
        return
    seen: set[frozenset] = set()
    for tree in enumerate_trees(n):
        edge_set = set(tree.edges)
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in edge_set:
                    continue
                edges = frozenset(edge_set | {(u, v)})
                if edges in seen:
                    continue
                seen.add(edges)
                yield from_edge_list(n, sorted(edges))


# ---------------------------------------------------------------------------
# Random generation


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate/verify: family, size bound, dedup, seed, count."""

    family: str  # Tree | Unicyclic | Cycle | Path
    max_n: int
    dedup: bool = True
    seed: int | None = None
    count: int | None = None

    def __post_init__(self):
        if self.family.lower() not in ("tree", "unicyclic", "cycle", "path"):
            raise ValueError(f"unknown family {self.family!r}")


def random_pseudotree(spec: CorpusSpec, rng=None) -> Graph:
    """Seed-deterministic random tree or unicyclic graph on spec.max_n vertices."""
    import random as _random

    if rng is None:
        if spec.seed is None:
            raise ValueError("random generation requires a seed")
        rng = _random.Random(spec.seed)
    n = spec.max_n
    family = spec.family.lower()
    if family == "path":
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise SizeCapExceeded("cycles need n >= 3")
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if n < 2 or (family == "unicyclic" and n < 3):
        raise SizeCapExceeded(f"cannot sample a {family} graph on {n} vertices")
    if n == 2:
        tree = from_edge_list(2, [(0, 1)])
    else:
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
        tree = prufer_decode(seq, n)
    if family == "tree":
        return tree
    edge_set = set(tree.edges)
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edge_set
    ]
    chord = non_edges[rng.randrange(len(non_edges))]
    return from_edge_list(n, list(tree.edges) + [chord])


# ---------------------------------------------------------------------------
# Verification pipeline


@dataclass(frozen=True)
class VerificationRecord:
    """One graph x one parameter: closed form versus oracle."""

    graph6: str
    parameter: str
    closed: ParameterResult
    oracle: ParameterResult
    status: str
    theorem_tag: str | None

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "parameter": self.parameter,
            "closed": self.closed.to_json(),
            "oracle": self.oracle.to_json(),
            "status": self.status,
            "theorem_tag": self.theorem_tag,
        }


def compare_results(closed: ParameterResult, oracle: ParameterResult) -> str:
    if closed.is_exact:
        return STATUS_AGREE if closed.value == oracle.value else STATUS_VIOLATION
    return STATUS_IN_BOUNDS if closed.contains(oracle.value) else STATUS_VIOLATION


def _expand_parameters(g: Graph, parameters) -> list[tuple[str, int | None]]:
    out: list[tuple[str, int | None]] = []
    for p in parameters:
        if p == "dimk":
            lo, hi = valid_k_range(g)
            out.extend(("dimk", k) for k in range(lo, hi + 1))
        else:
            out.append((p, None))
    return out


def verify_graph(g: Graph, parameters, oracle_cap: int | None = None) -> list[VerificationRecord]:
    """Closed-vs-oracle records for one graph, in deterministic order."""
    g6 = encode_graph6(g)
    prof = profile(g)
    records = []
    for param, k in _expand_parameters(g, parameters):
        closed = closed_result(g, param, k=k, prof=prof)
        oracle = oracle_result(g, param, k=k, max_n=oracle_cap)
        name = f"dimk[{k}]" if param == "dimk" else param
        records.append(
            VerificationRecord(
                graph6=g6,
                parameter=name,
                closed=closed,
                oracle=oracle,
                status=compare_results(closed, oracle),
                theorem_tag=closed.theorem_tag,
            )
        )
    return records


def _verify_worker(args) -> list[VerificationRecord]:
    edges, n, parameters, oracle_cap = args
    return verify_graph(from_edge_list(n, edges), parameters, oracle_cap)


def corpus_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    family = spec.family.lower()
    if family == "tree":
        lo = 2
        gen: Callable[[int], Iterator[Graph]] = lambda n: enumerate_trees(n, dedup=spec.dedup)
    elif family == "unicyclic":
        lo = 3
        gen = lambda n: enumerate_unicyclic(n, dedup=spec.dedup)
    elif family == "path":
        lo = 2
        gen = lambda n: iter([from_edge_list(n, [(i, i + 1) for i in range(n - 1)])])
    else:
        lo = 3
        gen = lambda n: iter([from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])])
    for n in range(lo, spec.max_n + 1):
        yield from gen(n)


def verify_corpus(
    spec: CorpusSpec,
    parameters=CORE_PARAMETERS,
    jobs: int = 1,
    report_path=None,
    oracle_cap: int | None = None,
) -> tuple[list[VerificationRecord], int]:
    """Run closed-form-versus-oracle verification over a whole corpus.

    Returns all records in deterministic order plus the violation count.
    Records stream to report_path (JSON lines, summary footer) as they are
    produced, so partial results survive interruption.
    """
    parameters = list(parameters)
    graphs = list(corpus_graphs(spec))
    out = open(report_path, "w", encoding="utf-8") if report_path else None
    records: list[VerificationRecord] = []
    violations = 0
    try:
        if jobs > 1:
            payload = [(list(g.edges), g.n, parameters, oracle_cap) for g in graphs]
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                batches = pool.imap(_verify_worker, payload, chunksize=4)
                for batch in batches:
                    records.extend(batch)
                    violations += _emit(batch, out)
        else:
            for g in graphs:
                batch = verify_graph(g, parameters, oracle_cap)
                records.extend(batch)
                violations += _emit(batch, out)
        if out:
            footer = {
                "summary": {
                    "graphs": len(graphs),
                    "records": len(records),
                    "violations": violations,
                }
            }
            out.write(json.dumps(footer, sort_keys=True) + "\n")
    finally:
        if out:
            out.close()
    return records, violations


def _emit(batch: list[VerificationRecord], out) -> int:
    violations = 0
    for rec in batch:
        if rec.status == STATUS_VIOLATION:
            violations += 1
        if out:
            out.write(json.dumps(rec.to_json(), sort_keys=True) + "\n")
    return violations
