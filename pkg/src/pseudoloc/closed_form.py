"""Closed-form dispatch for the nine location parameters.

Given a pseudotree and its profile, each dispatcher returns the exact value
when a characterization covers the instance, and the certified interval
otherwise.  The engine never guesses: interval results carry the
bounded-by-theorem method and can be upgraded to the oracle on request.
"""

from __future__ import annotations

from .errors import KOutOfRange, SizeCapExceeded
from .graph import DistanceMatrix, Graph, distance_matrix, is_bipartite
from .resolvers import (
    DOUBLY,
    EDGE,
    LOCAL,
    METHOD_BOUNDED,
    METHOD_BRUTE_FORCE,
    METHOD_CLOSED_FORM,
    METHOD_SR_FORMULA,
    METRIC,
    MIXED,
    MLD,
    STRONG,
    ParameterResult,
    Variant,
    brute_force_dimension,
    k_dimensional_value,
    k_metric,
)
from .structure import (
    FamilyKind,
    PseudotreeProfile,
    StrongResolvingGraph,
    antipodal_pairs,
    boundary_and_sr_graph,
    domination_number,
    find_geodesic_triple,
    independence_number,
    profile,
)

PARAMETER_NAMES = ("dmd", "dim", "sdim", "ddim", "dim2", "dimk", "edim", "mdim", "ldim")

_ORACLE_VARIANTS: dict[str, Variant] = {
    "dmd": DOUBLY,
    "dim": METRIC,
    "sdim": STRONG,
    "ddim": MLD,
    "edim": EDGE,
    "mdim": MIXED,
    "ldim": LOCAL,
}


def _exact(value, tag, witness=None, method=METHOD_CLOSED_FORM) -> ParameterResult:
    return ParameterResult(value=value, witness=witness, method=method, theorem_tag=tag)


def _interval(lo, hi, tag) -> ParameterResult:
    return ParameterResult(bounds=(lo, hi), method=METHOD_BOUNDED, theorem_tag=tag)


def _rho_hat(prof: PseudotreeProfile) -> int:
    return max(2 - prof.rho, 0)


# ---------------------------------------------------------------------------
# Doubly metric dimension


def _first_antipodal_pair(prof: PseudotreeProfile, subset) -> tuple[int, int] | None:
    pairs = antipodal_pairs(prof, subset)
    return pairs[0] if pairs else None


def dmd_closed(g: Graph, prof: PseudotreeProfile) -> ParameterResult:
    """Doubly metric dimension; always exact, with a constructive witness."""
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(2, "DMD_PATH", witness=prof.leaves)
    if kind is FamilyKind.TREE:
        return _exact(prof.num_leaves, "DMD_TREE", witness=prof.leaves)
    if kind is FamilyKind.CYCLE:
        if prof.girth % 2 == 1:
            pair = _first_antipodal_pair(prof, prof.cycle)
            return _exact(2, "DMD_CYCLE_ODD", witness=pair)
        triple = find_geodesic_triple(prof, prof.cycle)
        return _exact(3, "DMD_CYCLE_EVEN", witness=triple)
    # proper unicyclic
    leaves = prof.leaves
    ell = prof.num_leaves
    roots = prof.root_vertices
    if prof.girth % 2 == 1:
        if prof.antipodal_root_pairs >= 1:
            return _exact(ell, "DMD_UNIC_ODD_ANTIPODAL", witness=leaves)
        extra = _smallest_trivial_antipodal_to_root(prof)
        return _exact(ell + 1, "DMD_UNIC_ODD_AUGMENT", witness=tuple(sorted(leaves + (extra,))))
    if find_geodesic_triple(prof, roots) is not None:
        return _exact(ell, "DMD_UNIC_EVEN_GEODESIC", witness=leaves)
    if prof.c3 == 1:
        pair = _trivial_pair_completing_geodesic(prof, roots[0])
        return _exact(ell + 2, "DMD_UNIC_EVEN_SINGLE_ROOT", witness=tuple(sorted(leaves + pair)))
    extra = _smallest_trivial_completing_geodesic(prof)
    return _exact(ell + 1, "DMD_UNIC_EVEN_AUGMENT", witness=tuple(sorted(leaves + (extra,))))


def _smallest_trivial_antipodal_to_root(prof: PseudotreeProfile) -> int:
    for h in prof.trivial_vertices:
        if any(prof.is_antipodal(h, r) for r in prof.root_vertices):
            return h
    raise RuntimeError("no trivial vertex antipodal to a root (unreachable for odd girth)")


def _is_geodesic_triple(prof: PseudotreeProfile, u: int, v: int, w: int) -> bool:
    return (
        prof.cycle_distance(u, v) + prof.cycle_distance(v, w) + prof.cycle_distance(w, u)
        == prof.girth
    )


def _trivial_pair_completing_geodesic(prof: PseudotreeProfile, root: int) -> tuple[int, int]:
    triv = prof.trivial_vertices
    for i, h2 in enumerate(triv):
        for h3 in triv[i + 1 :]:
            if _is_geodesic_triple(prof, root, h2, h3):
                return (h2, h3)
    raise RuntimeError("no trivial pair completes a geodesic triple (unreachable)")


def _smallest_trivial_completing_geodesic(prof: PseudotreeProfile) -> int:
    roots = prof.root_vertices
    for h3 in prof.trivial_vertices:
        for i, h1 in enumerate(roots):
            for h2 in roots[i + 1 :]:
                if _is_geodesic_triple(prof, h1, h2, h3):
                    return h3
    raise RuntimeError("no trivial vertex completes a geodesic triple (unreachable)")


# ---------------------------------------------------------------------------
# Metric dimension


def _tree_metric_basis(prof: PseudotreeProfile) -> tuple[int, ...]:
    # all terminal vertices except the largest one of each exterior major vertex
    picked: list[int] = []
    for w in prof.exterior_major:
        picked.extend(prof.terminal_map[w][:-1])
    return tuple(sorted(picked))


def dim_closed(g: Graph, prof: PseudotreeProfile) -> ParameterResult:
    """Metric dimension: exact where characterized, else the width-1 interval."""
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(1, "DIM_PATH", witness=(prof.leaves[0],))
    if kind is FamilyKind.TREE:
        return _exact(
            prof.num_leaves - prof.num_exterior_major, "DIM_TREE", witness=_tree_metric_basis(prof)
        )
    if kind is FamilyKind.CYCLE:
        return _exact(2, "DIM_CYCLE", witness=(prof.cycle[0], prof.cycle[1]))
    base = prof.num_leaves - prof.num_exterior_major
    rho = prof.rho
    if prof.girth % 2 == 1:
        if rho == 0:
            return _exact(2, "DIM_ODD_RHO0")
        if rho == 1:
            return _exact(base + 1, "DIM_ODD_RHO1")
        if antipodal_pairs(prof, prof.branch_active):
            return _exact(base, "DIM_ODD_ANTIPODAL")
    else:
        if rho == 0:
            if prof.girth == 4:
                return _exact(2, "DIM_EVEN_G4")
            if prof.girth == 6:
                return _exact(2 if prof.c2 != 0 else 3, "DIM_EVEN_G6")
            if prof.c2 <= 1:
                return _exact(3, "DIM_EVEN_FEW_TRIVIAL")
        elif rho >= 3 and find_geodesic_triple(prof, prof.branch_active) is not None:
            return _exact(base, "DIM_EVEN_GEODESIC_TRIPLE")
    rho_hat = _rho_hat(prof)
    return _interval(base + rho_hat, base + rho_hat + 1, "DIM_UNIC_INTERVAL")


# ---------------------------------------------------------------------------
# Strong metric dimension


def sdim_sr_formula(
    g: Graph, prof: PseudotreeProfile, sr: StrongResolvingGraph | None = None
) -> ParameterResult:
    """sdim = |boundary| - alpha(strong resolving graph); exact for any graph."""
    if sr is None:
        sr = boundary_and_sr_graph(g)
    return _exact(
        sr.order - independence_number(sr), "SDIM_PARTALPHA", method=METHOD_SR_FORMULA
    )


def sdim_even_fast(prof: PseudotreeProfile) -> ParameterResult:
    """Even-girth fast path: l + r - 1 when an antipodal root pair exists, else l + r."""
    value = prof.num_leaves + prof.antipodal_trivial_pairs
    if prof.antipodal_root_pairs >= 1:
        value -= 1
    return _exact(value, "SDIM_EVEN_EXACT")


def sdim_closed(
    g: Graph, prof: PseudotreeProfile, sr: StrongResolvingGraph | None = None
) -> ParameterResult:
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(1, "SDIM_PATH", witness=(prof.leaves[0],))
    if kind is FamilyKind.TREE:
        return _exact(prof.num_leaves - 1, "SDIM_TREE", witness=prof.leaves[:-1])
    if kind is FamilyKind.CYCLE:
        half = (prof.girth + 1) // 2
        return _exact(half, "SDIM_CYCLE", witness=tuple(sorted(prof.cycle[:half])))
    via_sr = sdim_sr_formula(g, prof, sr)
    if prof.girth % 2 == 0:
        fast = sdim_even_fast(prof)
        if fast.value != via_sr.value:  # the two exact routes must agree
            raise RuntimeError(
                f"even-girth sdim routes disagree: fast={fast.value} sr={via_sr.value}"
            )
        return fast
    return via_sr


# ---------------------------------------------------------------------------
# Dominating metric dimension


def ddim_closed(g: Graph, prof: PseudotreeProfile, gamma: int | None = None) -> ParameterResult:
    kind = prof.kind
    if kind is FamilyKind.CYCLE:
        gamma_c = (prof.girth + 2) // 3
        if prof.girth not in (3, 4, 6):
            return _exact(gamma_c, "DDIM_CYCLE")
        return _interval(gamma_c, gamma_c + 1, "DDIM_G346_INTERVAL")
    if gamma is None:
        gamma = domination_number(g)
    base = gamma + prof.num_leaves - prof.num_supports
    if kind.is_tree:
        return _exact(base, "DDIM_TREE")
    if prof.girth not in (3, 4, 6):
        return _exact(base, "DDIM_G_NOT_346")
    return _interval(base, base + 1, "DDIM_G346_INTERVAL")


# ---------------------------------------------------------------------------
# Fault-tolerant (2-metric) dimension


def dim2_closed(g: Graph, prof: PseudotreeProfile) -> ParameterResult:
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(2, "DIM2_PATH", witness=prof.leaves)
    if kind is FamilyKind.CYCLE:
        if prof.girth == 4:
            # every pair of antipodal vertices is its own sole resolver set
            return _exact(4, "DIM2_CYCLE")
        return _exact(3, "DIM2_CYCLE")
    if kind is FamilyKind.TREE:
        return _exact(prof.num_strong_leaves, "DIM2_TREE", witness=prof.strong_leaves)
    return _interval(3, prof.n, "DIM2_UNIC_BOUNDS")


# ---------------------------------------------------------------------------
# k-metric dimension


def _terminal_distances(prof: PseudotreeProfile, dm: DistanceMatrix, w: int) -> list[int]:
    return sorted(dm.d(u, w) for u in prof.terminal_map[w])


def tree_zeta(prof: PseudotreeProfile, dm: DistanceMatrix) -> int:
    """Largest k for which a non-path tree admits a k-locating set."""
    zeta = None
    for w in prof.strong_exterior_major:
        dists = _terminal_distances(prof, dm, w)
        cand = dists[0] + dists[1]
        if zeta is None or cand < zeta:
            zeta = cand
    if zeta is None:
        raise ValueError("tree has no strong exterior major vertex")
    return zeta


def _i_r(ter: int, low: int, r: int) -> int:
    if low <= r // 2:
        return (ter - 1) * (r - low) + low
    return (ter - 1) * ((r + 1) // 2) + r // 2


def dimk_closed(
    g: Graph, prof: PseudotreeProfile, k: int, dm: DistanceMatrix | None = None
) -> ParameterResult:
    if dm is None:
        dm = distance_matrix(g)
    if not isinstance(k, int) or k < 2:
        raise KOutOfRange(f"k must be an integer >= 2, got {k}")
    kmax = k_dimensional_value(g, dm)
    if k > kmax:
        raise KOutOfRange(f"k={k} exceeds the k-dimensional value {kmax}")
    kind = prof.kind
    if kind is FamilyKind.PATH:
        # k = 2 is the fault-tolerant case: both ends already resolve every pair twice
        return _exact(2 if k == 2 else k + 1, "DIMK_PATH")
    if kind is FamilyKind.CYCLE:
        n = prof.girth
        if n % 2 == 0 and n // 2 <= k <= n - 2:
            return _exact(k + 2, "DIMK_CYCLE")
        return _exact(k + 1, "DIMK_CYCLE")
    if kind is FamilyKind.TREE:
        total = 0
        for w in prof.strong_exterior_major:
            dists = _terminal_distances(prof, dm, w)
            total += _i_r(len(dists), dists[0], k)
        return _exact(total, "DIMK_TREE")
    return _interval(k + 1, prof.n, "DIMK_UNIC_BOUNDS")


# ---------------------------------------------------------------------------
# Edge metric dimension


def edim_closed(
    g: Graph, prof: PseudotreeProfile, dim_value: int | None = None
) -> ParameterResult:
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(1, "EDIM_PATH", witness=(prof.leaves[0],))
    if kind is FamilyKind.TREE:
        return _exact(
            prof.num_leaves - prof.num_exterior_major, "EDIM_TREE", witness=_tree_metric_basis(prof)
        )
    if kind is FamilyKind.CYCLE:
        return _exact(2, "EDIM_CYCLE", witness=(prof.cycle[0], prof.cycle[1]))
    rho_hat = _rho_hat(prof)
    base = prof.num_leaves - prof.num_exterior_major + rho_hat
    lo, hi = base, base + 1
    if dim_value is not None:
        # |dim - edim| <= 1, dim <= edim for odd girth, dim >= edim for even
        if prof.girth % 2 == 1:
            lo, hi = max(lo, dim_value), min(hi, dim_value + 1)
        else:
            lo, hi = max(lo, dim_value - 1), min(hi, dim_value)
        if lo > hi:
            raise RuntimeError(f"edim interval emptied by dim={dim_value} on girth {prof.girth}")
        if lo == hi:
            return _exact(lo, "EDIM_UNIC_PINNED")
    return _interval(lo, hi, "EDIM_UNIC_INTERVAL")


# ---------------------------------------------------------------------------
# Mixed metric dimension


def mdim_closed(g: Graph, prof: PseudotreeProfile) -> ParameterResult:
    kind = prof.kind
    if kind is FamilyKind.PATH:
        return _exact(2, "MDIM_PATH", witness=prof.leaves)
    if kind is FamilyKind.TREE:
        return _exact(prof.num_leaves, "MDIM_TREE", witness=prof.leaves)
    if kind is FamilyKind.CYCLE:
        return _exact(3, "MDIM_CYCLE")
    t = prof.c3
    eps = 1 if t >= 3 and find_geodesic_triple(prof, prof.root_vertices) is None else 0
    return _exact(prof.num_leaves + max(3 - t, 0) + eps, "MDIM_UNIC")


# ---------------------------------------------------------------------------
# Local metric dimension


def ldim_closed(g: Graph, prof: PseudotreeProfile) -> ParameterResult:
    if prof.kind.is_tree:
        return _exact(1, "LDIM_BIPARTITE", witness=(0,))
    if is_bipartite(g):
        return _exact(1, "LDIM_PARITY", witness=(0,))
    return _exact(2, "LDIM_PARITY", witness=(prof.cycle[0], prof.cycle[1]))


# ---------------------------------------------------------------------------
# Umbrella dispatch


def valid_k_range(g: Graph) -> tuple[int, int]:
    return 2, k_dimensional_value(g)


def _singleton_result(param: str) -> ParameterResult:
    if param == "dimk":
        raise KOutOfRange("k-metric dimension is undefined on a single vertex")
    return _exact(1, "SINGLETON", witness=(0,))


def closed_result(
    g: Graph,
    param: str,
    k: int | None = None,
    prof: PseudotreeProfile | None = None,
) -> ParameterResult:
    """Closed-form (or certified-interval) result; never calls the oracle."""
    if param not in PARAMETER_NAMES:
        raise ValueError(f"unknown parameter {param!r}")
    if param == "dimk" and k is None:
        raise KOutOfRange("dimk requires k")
    if g.n == 1:
        return _singleton_result(param)
    if prof is None:
        prof = profile(g)
    if param == "dmd":
        return dmd_closed(g, prof)
    if param == "dim":
        return dim_closed(g, prof)
    if param == "sdim":
        return sdim_closed(g, prof)
    if param == "ddim":
        return ddim_closed(g, prof)
    if param == "dim2":
        return dim2_closed(g, prof)
    if param == "dimk":
        return dimk_closed(g, prof, k)
    if param == "edim":
        dim_res = dim_closed(g, prof)
        return edim_closed(g, prof, dim_res.value if dim_res.is_exact else None)
    if param == "mdim":
        return mdim_closed(g, prof)
    return ldim_closed(g, prof)


def oracle_result(
    g: Graph, param: str, k: int | None = None, max_n: int | None = None
) -> ParameterResult:
    """Brute-force ground truth for the same parameter."""
    if param == "dimk":
        if k is None:
            raise KOutOfRange("dimk requires k")
        lo, hi = valid_k_range(g)
        if not lo <= k <= hi:
            raise KOutOfRange(f"k={k} outside [{lo}, {hi}]")
        variant = k_metric(k)
    elif param == "dim2":
        variant = k_metric(2)
    else:
        variant = _ORACLE_VARIANTS[param]
    return brute_force_dimension(g, variant, max_n=max_n)


def compute_parameter(
    g: Graph,
    param: str,
    k: int | None = None,
    method: str = "auto",
    max_n: int | None = None,
) -> ParameterResult:
    """CLI-facing dispatch: closed forms, oracle, or closed-with-oracle-upgrade."""
    if method not in ("auto", "closed", "brute"):
        raise ValueError(f"unknown method {method!r}")
    if method == "brute":
        return oracle_result(g, param, k=k, max_n=max_n)
    result = closed_result(g, param, k=k)
    if method == "closed" or result.is_exact:
        return result
    try:
        return oracle_result(g, param, k=k, max_n=max_n)
    except SizeCapExceeded:
        return result
