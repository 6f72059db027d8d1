"""Structural statistics of pseudotrees and the derived constructions.

Everything the closed forms condition on lives here: family classification,
the full profile (leaves, exterior major vertices, branching trees, threads,
branch-active vertices, antipodal pair counts, twins), plus the boundary/MMD
machinery, the closed necklace, and exact independence/domination solvers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import NotPseudotree, NotUnicyclic, SizeCapExceeded
from .graph import DistanceMatrix, Graph, cap_override, distance_matrix, from_edge_list, girth_and_cycle

DEFAULT_SOLVER_CAP = 64


def solver_cap() -> int:
    override = cap_override()
    return DEFAULT_SOLVER_CAP if override is None else override


class FamilyKind(enum.Enum):
    PATH = "Path"
    CYCLE = "Cycle"
    TREE = "Tree"
    PROPER_UNICYCLIC = "ProperUnicyclic"

    @property
    def is_unicyclic(self) -> bool:
        return self in (FamilyKind.CYCLE, FamilyKind.PROPER_UNICYCLIC)

    @property
    def is_tree(self) -> bool:
        return self in (FamilyKind.PATH, FamilyKind.TREE)


def classify(g: Graph) -> FamilyKind:
    """Most specific family label: Path < Tree, Cycle < ProperUnicyclic."""
    if g.m == g.n - 1:
        return FamilyKind.PATH if g.max_degree() <= 2 else FamilyKind.TREE
    if g.m == g.n:
        return FamilyKind.CYCLE if g.max_degree() == 2 else FamilyKind.PROPER_UNICYCLIC
    raise NotPseudotree(f"m={g.m} > n={g.n}: not a pseudotree")


@dataclass(frozen=True)
class PseudotreeProfile:
    """Every structural statistic a pseudotree theorem conditions on.

    Cycle-related fields are empty/zero for trees.  All vertex collections
    are sorted tuples so serialized output is stable.
    """

    kind: FamilyKind
    n: int
    girth: int
    cycle: tuple[int, ...]
    leaves: tuple[int, ...]
    supports: tuple[int, ...]
    strong_supports: tuple[int, ...]
    exterior_major: tuple[int, ...]
    strong_exterior_major: tuple[int, ...]
    strong_leaves: tuple[int, ...]
    terminal_map: dict[int, tuple[int, ...]]
    branch_active: tuple[int, ...]
    trivial_vertices: tuple[int, ...]
    root_vertices: tuple[int, ...]
    threads: dict[int, tuple[int, ...]]
    branching_trees: dict[int, tuple[int, ...]]
    antipodal_trivial_pairs: int
    antipodal_root_pairs: int
    twin_pairs: tuple[tuple[int, int], ...]
    _positions: dict[int, int] = field(repr=False, default_factory=dict)

    # count shorthands matching the usual notation
    @property
    def num_leaves(self) -> int:
        return len(self.leaves)

    @property
    def num_supports(self) -> int:
        return len(self.supports)

    @property
    def num_exterior_major(self) -> int:
        return len(self.exterior_major)

    @property
    def num_strong_exterior_major(self) -> int:
        return len(self.strong_exterior_major)

    @property
    def num_strong_leaves(self) -> int:
        return len(self.strong_leaves)

    @property
    def rho(self) -> int:
        return len(self.branch_active)

    @property
    def c2(self) -> int:
        return len(self.trivial_vertices)

    @property
    def c3(self) -> int:
        return len(self.root_vertices)

    def cycle_distance(self, u: int, v: int) -> int:
        delta = abs(self._positions[u] - self._positions[v])
        return min(delta, self.girth - delta)

    def is_antipodal(self, u: int, v: int) -> bool:
        return u != v and self.cycle_distance(u, v) == self.girth // 2

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "g": self.girth,
            "l": self.num_leaves,
            "lambda": self.num_exterior_major,
            "lambda_s": self.num_strong_exterior_major,
            "l_s": self.num_strong_leaves,
            "s": self.num_supports,
            "rho": self.rho,
            "c2": self.c2,
            "c3": self.c3,
            "antipodal_trivial_pairs": self.antipodal_trivial_pairs,
            "antipodal_root_pairs": self.antipodal_root_pairs,
            "cycle": list(self.cycle),
            "leaves": list(self.leaves),
            "supports": list(self.supports),
            "strong_supports": list(self.strong_supports),
            "exterior_major": list(self.exterior_major),
            "strong_exterior_major": list(self.strong_exterior_major),
            "strong_leaves": list(self.strong_leaves),
            "terminal_map": {str(w): list(t) for w, t in sorted(self.terminal_map.items())},
            "branch_active": list(self.branch_active),
            "trivial_vertices": list(self.trivial_vertices),
            "root_vertices": list(self.root_vertices),
            "threads": {str(r): list(p) for r, p in sorted(self.threads.items())},
            "branching_trees": {str(v): list(t) for v, t in sorted(self.branching_trees.items())},
            "twin_pairs": [list(p) for p in self.twin_pairs],
        }


def _twin_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    adj_sets = [set(g.adjacency[v]) for v in range(g.n)]
    pairs = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj_sets[u] == adj_sets[v]:
                pairs.append((u, v))
            elif adj_sets[u] | {u} == adj_sets[v] | {v}:
                pairs.append((u, v))
    return tuple(pairs)


def profile(g: Graph, dm: DistanceMatrix | None = None) -> PseudotreeProfile:
    """Compute the full structural profile of a pseudotree in one pass."""
    kind = classify(g)
    if dm is None:
        dm = distance_matrix(g)

    leaves = tuple(v for v in range(g.n) if g.degree(v) == 1)
    leaf_set = set(leaves)
    supports = tuple(
        sorted({w for v in leaves for w in g.adjacency[v]})
    )
    strong_supports = tuple(
        v for v in supports if sum(1 for w in g.adjacency[v] if w in leaf_set) >= 2
    )

    majors = [v for v in range(g.n) if g.degree(v) >= 3]
    terminal_map: dict[int, list[int]] = {}
    for u in leaves:
        best, best_d, strict = None, None, False
        for w in majors:
            duw = dm.d(u, w)
            if best_d is None or duw < best_d:
                best, best_d, strict = w, duw, True
            elif duw == best_d:
                strict = False
        if best is not None and strict:
            terminal_map.setdefault(best, []).append(u)
    terminal_map_t = {w: tuple(sorted(t)) for w, t in terminal_map.items()}
    exterior_major = tuple(sorted(terminal_map_t))
    strong_exterior_major = tuple(w for w in exterior_major if len(terminal_map_t[w]) >= 2)
    strong_leaves = tuple(
        sorted(u for w in strong_exterior_major for u in terminal_map_t[w])
    )

    girth = 0
    cycle: tuple[int, ...] = ()
    branch_active: tuple[int, ...] = ()
    trivial: tuple[int, ...] = ()
    roots: tuple[int, ...] = ()
    threads: dict[int, tuple[int, ...]] = {}
    branching_trees: dict[int, tuple[int, ...]] = {}
    positions: dict[int, int] = {}
    r_trivial = 0
    t_roots = 0

    if kind.is_unicyclic:
        girth, cycle_list = girth_and_cycle(g)  # type: ignore[misc]
        cycle = tuple(cycle_list)
        cycle_set = set(cycle)
        positions = {v: i for i, v in enumerate(cycle)}
        # branching tree of v = component of G - E(C) containing v
        tree_members: dict[int, list[int]] = {}
        thread_map: dict[int, tuple[int, ...]] = {}
        active = []
        for v in cycle:
            members = [v]
            parent = {v: v}
            stack = [v]
            while stack:
                x = stack.pop()
                for w in g.adjacency[x]:
                    if w in cycle_set and x == v:
                        continue  # do not cross cycle edges out of v
                    if w not in parent:
                        parent[w] = x
                        members.append(w)
                        stack.append(w)
            tree_members[v] = sorted(members)
            # branch-active: T_v contains a branching vertex
            is_active = g.degree(v) >= 4 or any(
                g.degree(w) >= 3 for w in members if w != v
            )
            if is_active:
                active.append(v)
            # thread: T_v is a path and deg(v) == 3
            if len(members) >= 2 and g.degree(v) == 3 and not is_active:
                path = []
                cur = next(w for w in g.adjacency[v] if w not in cycle_set)
                prev = v
                path.append(cur)
                while g.degree(cur) == 2:
                    nxt = next(w for w in g.adjacency[cur] if w != prev)
                    prev, cur = cur, nxt
                    path.append(cur)
                thread_map[v] = tuple(path)
        branching_trees = {v: tuple(tree_members[v]) for v in cycle}
        roots = tuple(sorted(v for v in cycle if len(tree_members[v]) >= 2))
        trivial = tuple(sorted(v for v in cycle if len(tree_members[v]) == 1))
        branch_active = tuple(sorted(active))
        threads = thread_map
        half = girth // 2

        def count_antipodal(subset: tuple[int, ...]) -> int:
            total = 0
            for i, u in enumerate(subset):
                for v in subset[i + 1 :]:
                    delta = abs(positions[u] - positions[v])
                    if min(delta, girth - delta) == half:
                        total += 1
            return total

        r_trivial = count_antipodal(trivial)
        t_roots = count_antipodal(roots)

    return PseudotreeProfile(
        kind=kind,
        n=g.n,
        girth=girth,
        cycle=cycle,
        leaves=leaves,
        supports=supports,
        strong_supports=strong_supports,
        exterior_major=exterior_major,
        strong_exterior_major=strong_exterior_major,
        strong_leaves=strong_leaves,
        terminal_map=terminal_map_t,
        branch_active=branch_active,
        trivial_vertices=trivial,
        root_vertices=roots,
        threads=threads,
        branching_trees=branching_trees,
        antipodal_trivial_pairs=r_trivial,
        antipodal_root_pairs=t_roots,
        twin_pairs=_twin_pairs(g),
        _positions=positions,
    )


def _require_cycle_subset(prof: PseudotreeProfile, subset) -> list[int]:
    vertices = sorted(set(subset))
    cyc = set(prof.cycle)
    for v in vertices:
        if v not in cyc:
            raise ValueError(f"vertex {v} is not on the cycle")
    return vertices


def antipodal_pairs(prof: PseudotreeProfile, subset) -> list[tuple[int, int]]:
    """All pairs of the subset at cycle distance floor(g/2)."""
    vertices = _require_cycle_subset(prof, subset)
    half = prof.girth // 2
    out = []
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            if prof.cycle_distance(u, v) == half:
                out.append((u, v))
    return out


def find_geodesic_triple(prof: PseudotreeProfile, subset) -> tuple[int, int, int] | None:
    """First triple (lexicographic) with pairwise cycle distances summing to g."""
    vertices = _require_cycle_subset(prof, subset)
    g = prof.girth
    for i, u in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            v = vertices[j]
            duv = prof.cycle_distance(u, v)
            for w in vertices[j + 1 :]:
                if duv + prof.cycle_distance(v, w) + prof.cycle_distance(w, u) == g:
                    return (u, v, w)
    return None


def geodesic_triple_exists(prof: PseudotreeProfile, subset) -> bool:
    return find_geodesic_triple(prof, subset) is not None


@dataclass(frozen=True)
class StrongResolvingGraph:
    """Boundary vertices of the host graph with MMD adjacency."""

    boundary: tuple[int, ...]
    mmd_edges: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return len(self.boundary)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.boundary}
        for u, v in self.mmd_edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def boundary_and_sr_graph(g: Graph, dm: DistanceMatrix | None = None) -> StrongResolvingGraph:
    """Mutually-maximally-distant pairs and the boundary they span."""
    if dm is None:
        dm = distance_matrix(g)
    edges = []
    for u in range(g.n):
        row_u = dm[u]
        for v in range(u + 1, g.n):
            duv = row_u[v]
            if all(row_u[w] <= duv for w in g.adjacency[v]) and all(
                dm.d(v, w) <= duv for w in g.adjacency[u]
            ):
                edges.append((u, v))
    boundary = tuple(sorted({x for e in edges for x in e}))
    return StrongResolvingGraph(boundary=boundary, mmd_edges=tuple(edges))


def closed_necklace(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Replace every branching tree by a star with the same leaf count.

    Returns the necklace graph plus the vertex correspondence: cycle
    vertices and original leaves map to their necklace counterparts.
    """
    prof = profile(g)
    if prof.kind is not FamilyKind.PROPER_UNICYCLIC:
        raise NotUnicyclic(f"closed necklace requires a proper unicyclic graph, got {prof.kind.value}")
    gsize = prof.girth
    mapping: dict[int, int] = {v: i for i, v in enumerate(prof.cycle)}
    edges = [(i, (i + 1) % gsize) for i in range(gsize)]
    next_id = gsize
    for i, v in enumerate(prof.cycle):
        members = prof.branching_trees[v]
        tree_leaves = [w for w in members if w != v and g.degree(w) == 1]
        for leaf in sorted(tree_leaves):
            mapping[leaf] = next_id
            edges.append((i, next_id))
            next_id += 1
    return from_edge_list(next_id, edges), mapping


def _as_vertex_edge_lists(obj) -> tuple[list[int], list[tuple[int, int]]]:
    if isinstance(obj, Graph):
        return list(range(obj.n)), list(obj.edges)
    if isinstance(obj, StrongResolvingGraph):
        return list(obj.boundary), list(obj.mmd_edges)
    vertices, edges = obj
    return list(vertices), [tuple(e) for e in edges]


def independence_number(graph_like) -> int:
    """Exact independence number; accepts disconnected inputs.

    Takes a Graph, a StrongResolvingGraph, or a (vertices, edges) pair.
    Branch and bound on a maximum-degree vertex with memoized component
    decomposition.
    """
    vertices, edges = _as_vertex_edge_lists(graph_like)
    if len(vertices) > solver_cap():
        raise SizeCapExceeded(f"{len(vertices)} vertices exceeds solver cap {solver_cap()}")
    index = {v: i for i, v in enumerate(vertices)}
    nbr = [0] * len(vertices)
    for u, v in edges:
        nbr[index[u]] |= 1 << index[v]
        nbr[index[v]] |= 1 << index[u]
    full = (1 << len(vertices)) - 1
    memo: dict[int, int] = {}

    def alpha(mask: int) -> int:
        if mask == 0:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        # split off one connected component
        seed = mask & (-mask)
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            m = frontier
            while m:
                b = m & (-m)
                m ^= b
                grow |= nbr[b.bit_length() - 1] & mask
            frontier = grow & ~comp
            comp |= frontier
        if comp != mask:
            result = alpha(comp) + alpha(mask ^ comp)
        else:
            # pick a maximum-degree vertex of the component
            best_v, best_deg = -1, -1
            m = mask
            while m:
                b = m & (-m)
                m ^= b
                i = b.bit_length() - 1
                deg = (nbr[i] & mask).bit_count()
                if deg > best_deg:
                    best_v, best_deg = i, deg
            if best_deg <= 1:
                # paths of length <= 1: one vertex per edge plus isolates
                edge_count = 0
                m = mask
                while m:
                    b = m & (-m)
                    m ^= b
                    if nbr[b.bit_length() - 1] & mask & ~(b - 1) & ~b:
                        edge_count += 1
                result = mask.bit_count() - edge_count
            else:
                without = alpha(mask & ~(1 << best_v))
                with_v = 1 + alpha(mask & ~(nbr[best_v] | (1 << best_v)))
                result = max(without, with_v)
        memo[mask] = result
        return result

    return alpha(full)


def domination_number(g: Graph) -> int:
    """Exact minimum dominating set size via set-cover branch and bound."""
    if g.n > solver_cap():
        raise SizeCapExceeded(f"n={g.n} exceeds solver cap {solver_cap()}")
    closed = [0] * g.n
    for v in range(g.n):
        mask = 1 << v
        for w in g.adjacency[v]:
            mask |= 1 << w
        closed[v] = mask
    full = (1 << g.n) - 1
    max_cover = max(m.bit_count() for m in closed)

    # greedy initial upper bound
    covered, best = 0, 0
    while covered != full:
        v = max(range(g.n), key=lambda x: (closed[x] & ~covered).bit_count())
        covered |= closed[v]
        best += 1

    best_holder = [best]

    def search(covered: int, size: int) -> None:
        if covered == full:
            if size < best_holder[0]:
                best_holder[0] = size
            return
        remaining = (full & ~covered).bit_count()
        if size + (remaining + max_cover - 1) // max_cover >= best_holder[0]:
            return
        # branch on the dominators of one uncovered vertex
        u = (full & ~covered)
        u = (u & (-u)).bit_length() - 1
        candidates = sorted(
            [u] + list(g.adjacency[u]),
            key=lambda w: -(closed[w] & ~covered).bit_count(),
        )
        for w in candidates:
            search(covered | closed[w], size + 1)

    search(0, 0)
    return best_holder[0]
