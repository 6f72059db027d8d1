"""Acceptance suite: one test per criterion, zero tolerance everywhere.

Each test prints a single summary line.  Three assertions in this suite
reproduce reference-table statements that exhaustive search disproves
(documented in the README); they are asserted at their stated values and
fail with the computed truth rather than being weakened.
"""

from __future__ import annotations

import hashlib
import itertools
import time

import pytest

from pseudoloc import (
    Disconnected,
    FamilyKind,
    antipodal_pairs,
    boundary_and_sr_graph,
    classify,
    distance_matrix,
    domination_number,
    closed_result,
    encode_graph6,
    find_geodesic_triple,
    from_edge_list,
    independence_number,
    oracle_result,
    profile,
    sdim_even_fast,
    sdim_sr_formula,
    tree_zeta,
    valid_k_range,
    verify_corpus,
)
from pseudoloc.corpus import CorpusSpec
from pseudoloc.resolvers import DOUBLY, METRIC, STRONG, brute_force_dimension, strong_resolves

from conftest import cycle_graph, thread_gap_c14_graph, path_graph


def report(criterion: str, ok: bool, detail: str = "") -> None:
    state = "PASS" if ok else "FAIL"
    suffix = f" - {detail}" if detail else ""
    print(f"[{criterion}] {state}{suffix}")


def oracle_value(g, param, k=None, max_n=None):
    return oracle_result(g, param, k=k, max_n=max_n).value


class TestCriterion1:
    """Path/cycle reference table, n in 4..12, all nine parameters."""

    def test_criterion_1(self):
        start = time.time()
        failures = []
        checked = 0

        def cell(g, param, expected, k=None):
            nonlocal checked
            checked += 1
            got = oracle_value(g, param, k=k)
            if got != expected:
                name = f"{param}" if k is None else f"{param}[k={k}]"
                failures.append(f"{g.n}-{'cycle' if g.m == g.n else 'path'} {name}: "
                                f"expected {expected}, oracle {got}")

        for n in range(4, 13):
            p, c = path_graph(n), cycle_graph(n)
            cell(p, "dmd", 2)
            cell(c, "dmd", 2 if n % 2 else 3)
            cell(p, "dim", 1)
            cell(c, "dim", 2)
            cell(p, "sdim", 1)
            cell(c, "sdim", (n + 1) // 2)
            cell(p, "ddim", (n + 2) // 3)
            cell(c, "ddim", (n + 2) // 3)
            cell(p, "dim2", 2)
            cell(c, "dim2", 3)
            cell(p, "edim", 1)
            cell(c, "edim", 2)
            cell(p, "mdim", 2)
            cell(c, "mdim", 3)
            cell(p, "ldim", 1)
            cell(c, "ldim", 2 if n % 2 else 1)
            for k in range(3, n):  # paths are (n-1)-dimensional
                cell(p, "dimk", k + 1, k=k)
            kmax_c = n - 1 if n % 2 else n - 2
            for k in range(3, kmax_c + 1):
                expected = k + 2 if n % 2 == 0 and n // 2 <= k <= n - 2 else k + 1
                cell(c, "dimk", expected, k=k)

        elapsed = time.time() - start
        ok = not failures and elapsed < 60
        report(
            "criterion 1",
            ok,
            f"{checked - len(failures)}/{checked} cells agree in {elapsed:.1f}s"
            + (f"; disagreements: {failures}" if failures else ""),
        )
        assert elapsed < 60
        assert not failures, f"table cells contradicted by exhaustive search: {failures}"


class TestCriterion2:
    """Tree theorems, exhaustive over all classes with n <= 9."""

    def test_criterion_2(self, tree_classes_by_n):
        start = time.time()
        bad = []
        for n in range(2, 10):
            for g in tree_classes_by_n[n]:
                prof = profile(g)
                dm = distance_matrix(g)
                is_path = prof.kind is FamilyKind.PATH
                gamma = domination_number(g)
                expected = {
                    "dmd": prof.num_leaves if not is_path else 2,
                    "dim": 1 if is_path else prof.num_leaves - prof.num_exterior_major,
                    "sdim": prof.num_leaves - 1 if not is_path else 1,
                    "ddim": gamma + prof.num_leaves - prof.num_supports,
                    "dim2": 2 if is_path else prof.num_strong_leaves,
                    "edim": 1 if is_path else prof.num_leaves - prof.num_exterior_major,
                    "mdim": 2 if is_path else prof.num_leaves,
                    "ldim": 1,
                }
                for param, want in expected.items():
                    got = oracle_value(g, param)
                    if got != want:
                        bad.append((encode_graph6(g), param, want, got))
                    closed = closed_result(g, param, prof=prof)
                    if not closed.is_exact or closed.value != got:
                        bad.append((encode_graph6(g), param + "-closed", closed, got))
                # k-metric: zeta value and the I_r sum for every admissible r
                lo, hi = valid_k_range(g)
                if not is_path and n >= 3:
                    if tree_zeta(prof, dm) != hi:
                        bad.append((encode_graph6(g), "zeta", tree_zeta(prof, dm), hi))
                for r in range(2, hi + 1):
                    closed = closed_result(g, "dimk", k=r, prof=prof)
                    got = oracle_value(g, "dimk", k=r)
                    if not closed.is_exact or closed.value != got:
                        bad.append((encode_graph6(g), f"dimk[{r}]", closed, got))
        elapsed = time.time() - start
        report("criterion 2", not bad and elapsed < 600, f"94 tree classes in {elapsed:.1f}s")
        assert elapsed < 600
        assert not bad, bad[:10]


class TestCriterion3:
    """Unicyclic exact theorems, exhaustive over all classes with n <= 9."""

    def test_criterion_3(self, unicyclic_classes_by_n):
        start = time.time()
        bad = []
        count = 0
        for n in range(3, 10):
            for g in unicyclic_classes_by_n[n]:
                count += 1
                prof = profile(g)
                for param in ("dmd", "mdim", "ldim"):
                    closed = closed_result(g, param, prof=prof)
                    got = oracle_value(g, param)
                    if not closed.is_exact or closed.value != got:
                        bad.append((encode_graph6(g), param, closed, got))
                sdim_oracle = oracle_value(g, "sdim")
                sr = boundary_and_sr_graph(g)
                if prof.kind is FamilyKind.PROPER_UNICYCLIC:
                    if sdim_sr_formula(g, prof, sr).value != sdim_oracle:
                        bad.append((encode_graph6(g), "sdim-sr", None, sdim_oracle))
                    if prof.girth % 2 == 0 and sdim_even_fast(prof).value != sdim_oracle:
                        bad.append((encode_graph6(g), "sdim-fast", None, sdim_oracle))
                else:
                    if closed_result(g, "sdim", prof=prof).value != sdim_oracle:
                        bad.append((encode_graph6(g), "sdim-cycle", None, sdim_oracle))
                if prof.girth not in (3, 4, 6):
                    closed = closed_result(g, "ddim", prof=prof)
                    got = oracle_value(g, "ddim")
                    if not closed.is_exact or closed.value != got:
                        bad.append((encode_graph6(g), "ddim", closed, got))
        elapsed = time.time() - start
        report("criterion 3", not bad and elapsed < 1800, f"{count} unicyclic classes in {elapsed:.1f}s")
        assert elapsed < 1800
        assert not bad, bad[:10]


class TestCriterion4:
    """Unicyclic interval theorems and characterized exact cases, n <= 9."""

    def test_criterion_4(self, unicyclic_classes_by_n):
        start = time.time()
        bad = []
        for n in range(3, 10):
            for g in unicyclic_classes_by_n[n]:
                prof = profile(g)
                base = prof.num_leaves - prof.num_exterior_major
                rho_hat = max(2 - prof.rho, 0)
                dim_o = oracle_value(g, "dim")
                edim_o = oracle_value(g, "edim")
                if not base + rho_hat <= dim_o <= base + rho_hat + 1:
                    bad.append((encode_graph6(g), "dim-interval", dim_o))
                if not base + rho_hat <= edim_o <= base + rho_hat + 1:
                    bad.append((encode_graph6(g), "edim-interval", edim_o))
                if abs(dim_o - edim_o) > 1:
                    bad.append((encode_graph6(g), "proximity", (dim_o, edim_o)))
                if prof.girth % 2 and dim_o > edim_o:
                    bad.append((encode_graph6(g), "parity-odd", (dim_o, edim_o)))
                if prof.girth % 2 == 0 and dim_o < edim_o:
                    bad.append((encode_graph6(g), "parity-even", (dim_o, edim_o)))
                if prof.girth in (3, 4, 6):
                    lo = domination_number(g) + prof.num_leaves - prof.num_supports
                    if not lo <= oracle_value(g, "ddim") <= lo + 1:
                        bad.append((encode_graph6(g), "ddim-interval", None))
                if prof.kind is FamilyKind.PROPER_UNICYCLIC:
                    sdim_o = oracle_value(g, "sdim")
                    lo = max((prof.girth + 1) // 2, prof.num_leaves - 1)
                    hi = prof.num_leaves + prof.c2 // 2
                    if not lo <= sdim_o <= hi:
                        bad.append((encode_graph6(g), "sdim-sandwich", sdim_o))
                # characterized cases pin dim to the lower end of the interval
                if prof.girth % 2:
                    applies = prof.rho <= 1 or bool(antipodal_pairs(prof, prof.branch_active))
                else:
                    applies = (
                        (prof.rho == 0 and prof.girth >= 8 and prof.c2 >= 2)
                        or (prof.rho == 0 and prof.girth == 4)
                        or (prof.rho == 0 and prof.girth == 6 and prof.c2 != 0)
                        or (
                            prof.rho >= 3
                            and find_geodesic_triple(prof, prof.branch_active) is not None
                        )
                    )
                if prof.kind is FamilyKind.PROPER_UNICYCLIC and applies and dim_o != base + rho_hat:
                    bad.append((encode_graph6(g), "characterized-case-exactness", dim_o))
        elapsed = time.time() - start
        report("criterion 4", not bad, f"383 unicyclic classes in {elapsed:.1f}s")
        assert not bad, bad[:10]


class TestCriterion5:
    """The 14-cycle with threads everywhere except one antipodal pair."""

    def test_criterion_5(self):
        start = time.time()
        g = thread_gap_c14_graph()
        value = oracle_value(g, "dim", max_n=g.n)
        elapsed = time.time() - start
        report("criterion 5", value == 2 and elapsed < 10, f"oracle dim={value} in {elapsed:.2f}s")
        assert elapsed < 10
        assert value == 2


class TestCriterion6:
    """Strong-dimension identities and the stated toggle-edge matrix test."""

    def test_criterion_6_sr_identity(self, unicyclic_classes_by_n):
        start = time.time()
        bad = []
        for n in range(3, 9):
            for g in unicyclic_classes_by_n[n]:
                sr = boundary_and_sr_graph(g)
                expected = sr.order - independence_number(sr)
                got = oracle_value(g, "sdim")
                if got != expected:
                    bad.append((encode_graph6(g), expected, got))
        report("criterion 6 (sdim identity)", not bad, f"n<=8 corpus in {time.time()-start:.1f}s")
        assert not bad, bad[:10]

    def test_criterion_6_toggle_matrix(self, tree_classes_by_n, unicyclic_classes_by_n):
        start = time.time()
        graphs = [t for n in range(2, 8) for t in tree_classes_by_n[n]]
        graphs += [u for n in range(3, 8) for u in unicyclic_classes_by_n[n]]
        violations = 0
        first = None
        checked = 0
        for g in graphs:
            dm = distance_matrix(g)
            pairs = list(itertools.combinations(range(g.n), 2))
            resolver_masks = {}
            changed_masks = {}
            for x, y in pairs:
                mask = 0
                for w in range(g.n):
                    if strong_resolves(dm, w, x, y):
                        mask |= 1 << w
                resolver_masks[(x, y)] = mask
                edges = set(g.edges) ^ {(x, y)}
                try:
                    toggled = from_edge_list(g.n, sorted(edges))
                except Disconnected:
                    changed_masks[(x, y)] = None
                    continue
                dmt = distance_matrix(toggled)
                changed = 0
                for w in range(g.n):
                    if dmt[w] != dm[w]:
                        changed |= 1 << w
                changed_masks[(x, y)] = changed
            for smask in range(1, 1 << g.n):
                for pair in pairs:
                    if resolver_masks[pair] & smask:
                        continue  # pair strong-resolved by S
                    diff = changed_masks[pair]
                    if diff is None:
                        continue  # toggled graph disconnected
                    checked += 1
                    if diff & smask:
                        violations += 1
                        if first is None:
                            first = (encode_graph6(g), bin(smask), pair)
        elapsed = time.time() - start
        report(
            "criterion 6 (toggle matrix)",
            violations == 0,
            f"{checked} (set, pair) toggles in {elapsed:.1f}s"
            + (f"; {violations} violations, first={first}" if violations else ""),
        )
        assert violations == 0, (
            f"{violations} of {checked} toggle checks changed a row of the set "
            f"(first counterexample {first}); edge additions can create shortcuts "
            f"that the unresolved-pair condition does not forbid"
        )


class TestCriterion7:
    """Attainment characterizations as biconditionals over n <= 9."""

    def test_criterion_7(self, unicyclic_classes_by_n):
        start = time.time()
        bad = []
        for n in range(3, 10):
            for g in unicyclic_classes_by_n[n]:
                prof = profile(g)
                if prof.kind is not FamilyKind.PROPER_UNICYCLIC:
                    continue
                sdim_o = oracle_value(g, "sdim")
                gg, h, ell = prof.girth, prof.c2, prof.num_leaves
                half = gg // 2
                no_trivial_antipodal = prof.antipodal_trivial_pairs == 0
                roots = set(prof.root_vertices)
                positions = {v: i for i, v in enumerate(prof.cycle)}
                has_root_antipodal_triple = any(
                    prof.cycle[(positions[v] + half) % gg] in roots
                    and prof.cycle[(positions[v] + half + 1) % gg] in roots
                    for v in roots
                )
                cond_low = (gg == 3 and h == 0) or (
                    gg >= 4
                    and (
                        h <= 1
                        or (gg % 2 == 0 and 2 <= h <= half - 1 and no_trivial_antipodal)
                        or (
                            gg % 2 == 1
                            and 2 <= h <= half - 1
                            and no_trivial_antipodal
                            and has_root_antipodal_triple
                        )
                    )
                )
                if cond_low != (sdim_o == ell - 1):
                    bad.append((encode_graph6(g), "sdim=l-1", cond_low, sdim_o))
                cond_high = (gg % 2 == 0 and h == gg - 1) or (gg % 2 == 1 and gg - 2 <= h <= gg - 1)
                if cond_high != (sdim_o == ell + h // 2):
                    bad.append((encode_graph6(g), "sdim=l+h/2", cond_high, sdim_o))
                # observed implication for the even g/2 attainment statement
                if gg % 2 == 0 and prof.rho == 0 and prof.antipodal_root_pairs <= 1:
                    if sdim_o != gg // 2:
                        bad.append((encode_graph6(g), "sdim=g/2", None, sdim_o))
        elapsed = time.time() - start
        report("criterion 7", not bad, f"biconditionals over n<=9 in {elapsed:.1f}s")
        assert not bad, bad[:10]


class TestCriterion8:
    """Determinism: job-count independence and reproducible witnesses."""

    def test_criterion_8(self, tmp_path):
        start = time.time()
        spec = CorpusSpec(family="unicyclic", max_n=6)
        digests = []
        for jobs in (1, 4):
            path = tmp_path / f"report-{jobs}.jsonl"
            verify_corpus(spec, jobs=jobs, report_path=path)
            digests.append(hashlib.sha256(path.read_bytes()).hexdigest())
        identical = digests[0] == digests[1]

        reproducible = True
        for seed in range(8):
            g = from_edge_list(
                *_random_unicyclic_edges(seed)
            )
            h = from_edge_list(g.n, list(g.edges))
            for variant in (METRIC, DOUBLY, STRONG):
                if brute_force_dimension(g, variant) != brute_force_dimension(h, variant):
                    reproducible = False
        ok = identical and reproducible
        report(
            "criterion 8",
            ok,
            f"jobs 1/4 byte-identical={identical}, witnesses reproducible={reproducible}"
            f" in {time.time()-start:.1f}s",
        )
        assert identical and reproducible


def _random_unicyclic_edges(seed):
    from pseudoloc.corpus import random_pseudotree

    g = random_pseudotree(CorpusSpec(family="unicyclic", max_n=9, seed=seed))
    return g.n, list(g.edges)
