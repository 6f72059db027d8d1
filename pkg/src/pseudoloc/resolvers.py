"""Resolution predicates for the nine location variants and brute-force oracles.

The oracles are the ground truth every closed form is verified against, so
they stay deliberately direct: subset enumeration in a fixed order
(size-ascending, lexicographic) over precomputed resolver bitmasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import KOutOfRange, SizeCapExceeded
from .graph import DistanceMatrix, Graph, cap_override, distance_matrix

DEFAULT_ORACLE_CAP = 16
DEFAULT_KMETRIC_CAP = 12

METHOD_CLOSED_FORM = "closed_form"
METHOD_BOUNDED = "bounded_by_theorem"
METHOD_BRUTE_FORCE = "brute_force"
METHOD_SR_FORMULA = "sr_graph_formula"

TAG_BRUTE_FORCE = "BRUTE_FORCE"

VARIANT_KINDS = ("metric", "doubly", "strong", "edge", "mixed", "local", "kmetric", "mld")


@dataclass(frozen=True)
class Variant:
    """One of the nine locating-set variants; kmetric carries its k."""

    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in VARIANT_KINDS:
            raise ValueError(f"unknown variant kind {self.kind!r}")
        if self.kind == "kmetric":
            if self.k is None or self.k < 2:
                raise ValueError("kmetric requires k >= 2")
        elif self.k is not None:
            raise ValueError(f"variant {self.kind!r} takes no k")

    def __str__(self) -> str:
        return f"kmetric({self.k})" if self.kind == "kmetric" else self.kind


METRIC = Variant("metric")
DOUBLY = Variant("doubly")
STRONG = Variant("strong")
EDGE = Variant("edge")
MIXED = Variant("mixed")
LOCAL = Variant("local")
MLD = Variant("mld")


def k_metric(k: int) -> Variant:
    return Variant("kmetric", k)


@dataclass(frozen=True)
class ParameterResult:
    """Exact value or certified interval, with provenance."""

    value: int | None = None
    bounds: tuple[int, int] | None = None
    witness: tuple[int, ...] | None = None
    method: str = METHOD_CLOSED_FORM
    theorem_tag: str | None = None

    def __post_init__(self):
        if (self.value is None) == (self.bounds is None):
            raise ValueError("exactly one of value/bounds must be set")
        if self.bounds is not None and self.bounds[0] > self.bounds[1]:
            raise ValueError(f"empty interval {self.bounds}")

    @property
    def is_exact(self) -> bool:
        return self.value is not None

    @property
    def lo(self) -> int:
        return self.value if self.value is not None else self.bounds[0]

    @property
    def hi(self) -> int:
        return self.value if self.value is not None else self.bounds[1]

    def contains(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def to_json(self) -> dict:
        out: dict = {"value": self.value if self.is_exact else [self.lo, self.hi]}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        out["method"] = self.method
        out["theorem_tag"] = self.theorem_tag
        return out


def resolves(dm: DistanceMatrix, v: int, x: int, y: int) -> bool:
    return dm.d(x, v) != dm.d(y, v)


def doubly_resolves(dm: DistanceMatrix, u: int, v: int, x: int, y: int) -> bool:
    return dm.d(x, u) - dm.d(x, v) != dm.d(y, u) - dm.d(y, v)


def strong_resolves(dm: DistanceMatrix, w: int, x: int, y: int) -> bool:
    dxy = dm.d(x, y)
    return dm.d(w, x) == dm.d(w, y) + dxy or dm.d(w, y) == dm.d(w, x) + dxy


def edge_distance(dm: DistanceMatrix, v: int, e: tuple[int, int]) -> int:
    return min(dm.d(v, e[0]), dm.d(v, e[1]))


class _LocatingContext:
    """Precomputed per-pair resolver bitmasks for one graph and variant."""

    def __init__(self, g: Graph, variant: Variant, dm: DistanceMatrix | None = None):
        self.g = g
        self.variant = variant
        self.dm = dm if dm is not None else distance_matrix(g)
        self.full = (1 << g.n) - 1
        self.need = variant.k if variant.kind == "kmetric" else 1
        self.pair_masks: list[int] = []
        self.level_masks: list[list[int]] = []  # doubly only
        self.domination_masks: list[int] = []  # mld only
        kind = variant.kind
        if kind in ("metric", "kmetric", "mld", "local"):
            self._vertex_pair_masks(adjacent_only=(kind == "local"))
            if kind == "mld":
                for v in range(g.n):
                    mask = 1 << v
                    for w in g.adjacency[v]:
                        mask |= 1 << w
                    self.domination_masks.append(mask)
        elif kind == "strong":
            self._strong_pair_masks()
        elif kind == "edge":
            self._item_pair_masks(list(g.edges))
        elif kind == "mixed":
            items: list = list(range(g.n)) + list(g.edges)
            self._item_pair_masks(items)
        elif kind == "doubly":
            self._doubly_level_masks()

    def _vertex_pair_masks(self, adjacent_only: bool) -> None:
        dm, n = self.dm, self.g.n
        keep_full = self.need > 1
        for x in range(n):
            row_x = dm[x]
            targets = (w for w in self.g.adjacency[x] if w > x) if adjacent_only else range(x + 1, n)
            for y in targets:
                row_y = dm[y]
                mask = 0
                for v in range(n):
                    if row_x[v] != row_y[v]:
                        mask |= 1 << v
                if keep_full or mask != self.full:
                    self.pair_masks.append(mask)

    def _strong_pair_masks(self) -> None:
        dm, n = self.dm, self.g.n
        for x in range(n):
            row_x = dm[x]
            for y in range(x + 1, n):
                row_y = dm[y]
                dxy = row_x[y]
                mask = 0
                for w in range(n):
                    if row_x[w] == row_y[w] + dxy or row_y[w] == row_x[w] + dxy:
                        mask |= 1 << w
                if mask != self.full:
                    self.pair_masks.append(mask)

    def _dist_to_item(self, v: int, item) -> int:
        if isinstance(item, tuple):
            return edge_distance(self.dm, v, item)
        return self.dm.d(v, item)

    def _item_pair_masks(self, items: list) -> None:
        n = self.g.n
        vectors = [[self._dist_to_item(v, it) for v in range(n)] for it in items]
        for i in range(len(items)):
            vec_i = vectors[i]
            for j in range(i + 1, len(items)):
                vec_j = vectors[j]
                mask = 0
                for v in range(n):
                    if vec_i[v] != vec_j[v]:
                        mask |= 1 << v
                self.pair_masks.append(mask)

    def _doubly_level_masks(self) -> None:
        dm, n = self.dm, self.g.n
        for x in range(n):
            row_x = dm[x]
            for y in range(x + 1, n):
                row_y = dm[y]
                levels: dict[int, int] = {}
                for v in range(n):
                    diff = row_x[v] - row_y[v]
                    levels[diff] = levels.get(diff, 0) | (1 << v)
                # a set fails this pair iff it sits inside one level
                self.level_masks.append([m for m in levels.values() if m.bit_count() >= 2])

    def qualifies(self, mask: int) -> bool:
        kind = self.variant.kind
        if kind == "doubly":
            if mask.bit_count() < 2:
                return False
            for levels in self.level_masks:
                for level in levels:
                    if mask & ~level == 0:
                        return False
            return True
        if kind == "mld":
            covered = 0
            m = mask
            while m:
                b = m & (-m)
                m ^= b
                covered |= self.domination_masks[b.bit_length() - 1]
            if covered != self.full:
                return False
        if self.need > 1:
            return all((pm & mask).bit_count() >= self.need for pm in self.pair_masks)
        return all(pm & mask for pm in self.pair_masks)


def is_locating_set(g: Graph, s, variant: Variant, dm: DistanceMatrix | None = None) -> bool:
    """Exact set predicate for the given variant."""
    members = sorted(set(s))
    if not members:
        raise ValueError("locating set must be nonempty")
    if any(not 0 <= v < g.n for v in members):
        raise ValueError("locating set contains out-of-range vertices")
    ctx = _LocatingContext(g, variant, dm)
    mask = 0
    for v in members:
        mask |= 1 << v
    return ctx.qualifies(mask)


def _oracle_cap(variant: Variant, max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    override = cap_override()
    if override is not None:
        return override
    return DEFAULT_KMETRIC_CAP if variant.kind == "kmetric" else DEFAULT_ORACLE_CAP


def brute_force_dimension(
    g: Graph,
    variant: Variant,
    max_n: int | None = None,
    dm: DistanceMatrix | None = None,
) -> ParameterResult:
    """Minimum locating-set size by exhaustive search, with the first witness.

    Subsets are enumerated by increasing size, lexicographically within each
    size, so the reported witness is reproducible.
    """
    cap = _oracle_cap(variant, max_n)
    if g.n > cap:
        raise SizeCapExceeded(f"n={g.n} exceeds oracle cap {cap} for {variant}")
    if variant.kind == "kmetric" and g.n >= 2:
        kmax = k_dimensional_value(g, dm)
        if variant.k > kmax:
            raise KOutOfRange(f"no {variant.k}-locating set exists (k-dimensional value {kmax})")
    ctx = _LocatingContext(g, variant, dm)
    start = 2 if variant.kind == "doubly" and g.n >= 2 else 1
    if variant.kind == "kmetric":
        start = max(start, variant.k)
    for size in range(start, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if ctx.qualifies(mask):
                return ParameterResult(
                    value=size,
                    witness=combo,
                    method=METHOD_BRUTE_FORCE,
                    theorem_tag=TAG_BRUTE_FORCE,
                )
    raise RuntimeError(f"no locating set found for {variant} (unreachable)")


def k_dimensional_value(g: Graph, dm: DistanceMatrix | None = None) -> int:
    """Largest k admitting a k-locating set: the minimum pair resolver count."""
    if g.n < 2:
        raise ValueError("k-dimensional value needs at least 2 vertices")
    if dm is None:
        dm = distance_matrix(g)
    best = g.n
    for x in range(g.n):
        row_x = dm[x]
        for y in range(x + 1, g.n):
            row_y = dm[y]
            count = sum(1 for v in range(g.n) if row_x[v] != row_y[v])
            if count < best:
                best = count
    return best
