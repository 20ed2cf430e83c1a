"""Named verification suites: every inequality the toolkit relies on, at desk
scale, against independent oracles.

Each suite replays one verified claim over a deterministic case set derived
from a single seed (per-case generator streams are forked up front, so the
case set does not depend on execution order).  Failures carry the graph6
string of the offending graph and the violated inequality with its numbers,
so every failure is replayable.  Reports are byte-stable for fixed (params,
seed): the stable serialization excludes wall-clock time.

``HAMQ_THREADS`` caps the process pool used for the embarrassingly parallel
suites (default 1 = sequential; results are identical either way).
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable

from .certifier import (
    OUTCOME_CERTIFIED,
    OUTCOME_EXCEPTIONAL,
    OUTCOME_NOT_HC,
    CertifyConfig,
    certify,
)
from .corpus import connected_graphs
from .errors import BadParameters, BadSuite
from .families import (
    build_S,
    build_T,
    indicator_rayleigh_value,
    enumerate_class,
    indicator_vector,
    refined_partition,
    thresholds,
)
from .graph import Graph, add_edges, emit_graph6, is_connected, min_degree
from .hamilton import is_hamilton_connected, ore_check
from .rng import SplitMix64, gnm, gnp, random_connected_gnp
from .spectral import (
    adjacent_pair_identity_defect,
    perron_pair,
    rayleigh_quotient_exact,
    upper_bound_edge_count,
)
from .transforms import closure, kelmans

ORACLE_BUDGET = 10**8


@dataclass
class SuiteReport:
    """Outcome of one suite run; empty ``failures`` means success."""

    suite: str
    params: dict[str, Any]
    cases: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def finalize(self) -> "SuiteReport":
        self.failures.sort(key=lambda f: (f.get("graph6", ""), str(sorted(f.items()))))
        return self

    def to_stable_json(self) -> str:
        # wall-clock time is excluded: reports must be byte-stable per build
        return json.dumps(
            {
                "suite": self.suite,
                "params": self.params,
                "cases": self.cases,
                "failures": self.failures,
            },
            sort_keys=True,
        )


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("HAMQ_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: list) -> list:
    cap = _threads()
    if cap <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (cap * 8))
    with ProcessPoolExecutor(max_workers=cap) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


def _case_seeds(seed: int, count: int) -> list[int]:
    rng = SplitMix64(seed)
    return [rng.next_u64() for _ in range(count)]


# -- ore: degree-sum sufficiency ------------------------------------------------


def _ore_case(case_seed: int) -> dict | None:
    rng = SplitMix64(case_seed)
    n = 3 + rng.next_below(6)  # 3..8
    g = gnp(n, 0.15 + 0.7 * rng.next_float(), rng)
    if not ore_check(g):
        return None
    ans = is_hamilton_connected(g, ORACLE_BUDGET)
    if ans.verdict == "yes":
        return None
    return {
        "graph6": emit_graph6(g),
        "violated": "degree-sum condition held but oracle verdict was "
        + ans.verdict,
    }


def run_ore(trials: int = 10_000, seed: int = 1) -> SuiteReport:
    """Degree-sum sufficiency: whenever the check fires, the oracle agrees."""
    start = time.monotonic()
    failures = []
    cases = 0
    for n in range(1, 8):
        for g in connected_graphs(n):
            cases += 1
            if ore_check(g) and is_hamilton_connected(g, ORACLE_BUDGET).verdict != "yes":
                failures.append({
                    "graph6": emit_graph6(g),
                    "violated": "degree-sum condition held but oracle said no",
                })
    results = _pmap(_ore_case, _case_seeds(seed, trials))
    cases += trials
    failures.extend(r for r in results if r is not None)
    return SuiteReport(
        suite="ore",
        params={"trials": trials, "seed": seed, "corpus": "connected n<=7"},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- closure: equivalence gate and well-definedness -----------------------------


def _closure_with_order(g: Graph, k: int, order: list[tuple[int, int]]) -> Graph:
    """Independent route: closure under an arbitrary fixed pair scan order."""
    cur = g
    changed = True
    while changed:
        changed = False
        deg = cur.degrees()
        for u, v in order:
            if not cur.has_edge(u, v) and deg[u] + deg[v] >= k:
                cur = add_edges(cur, [(u, v)])
                changed = True
                break
    return cur


def _closure_equiv_case(args: tuple[int, int]) -> dict | None:
    case_seed, n = args
    rng = SplitMix64(case_seed)
    g = random_connected_gnp(n, 0.2 + 0.6 * rng.next_float(), rng)
    return _closure_equiv_check(g)


def _closure_equiv_check(g: Graph) -> dict | None:
    n = g.n
    cl, _ = closure(g, n + 1)
    a = is_hamilton_connected(g, ORACLE_BUDGET).verdict
    b = is_hamilton_connected(cl, ORACLE_BUDGET).verdict
    if a != b:
        return {
            "graph6": emit_graph6(g),
            "violated": f"oracle(G)={a} but oracle(closure)={b}",
        }
    return None


def run_closure(
    random_per_n: int = 250,
    seed: int = 2,
    order_trials: int = 500,
    exhaustive_n: Iterable[int] = range(1, 8),
) -> SuiteReport:
    """Closure preserves the Hamilton-connectivity verdict; the closure edge
    set is scan-order independent and the operator is idempotent."""
    start = time.monotonic()
    failures = []
    cases = 0
    for n in exhaustive_n:
        for g in connected_graphs(n):
            cases += 1
            f = _closure_equiv_check(g)
            if f:
                failures.append(f)
    items = []
    seeds = _case_seeds(seed, 2 * random_per_n)
    for i, s in enumerate(seeds):
        items.append((s, 8 if i < random_per_n else 9))
    results = _pmap(_closure_equiv_case, items)
    cases += len(items)
    failures.extend(r for r in results if r is not None)

    # well-definedness: scan order does not change the closure edge set
    rng = SplitMix64(seed ^ 0xC10)
    for _ in range(order_trials):
        n = 4 + rng.next_below(9)  # 4..12
        g = gnp(n, 0.2 + 0.6 * rng.next_float(), rng)
        k = n + 1
        ref, _tr = closure(g, k)
        cases += 1
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(10):
            order = [pairs[i] for i in rng.permutation(len(pairs))]
            alt = _closure_with_order(g, k, order)
            if alt != ref:
                failures.append({
                    "graph6": emit_graph6(g),
                    "violated": f"closure at k={k} depends on scan order",
                })
                break
        again, tr2 = closure(ref, k)
        if tr2.added or again != ref:
            failures.append({
                "graph6": emit_graph6(g),
                "violated": "closure is not idempotent",
            })
        deg = ref.degrees()
        for u in range(n):
            for v in range(u + 1, n):
                if not ref.has_edge(u, v) and deg[u] + deg[v] >= k:
                    failures.append({
                        "graph6": emit_graph6(g),
                        "violated": f"closure fixpoint violated at pair ({u},{v})",
                    })
    return SuiteReport(
        suite="closure",
        params={"random_per_n": random_per_n, "order_trials": order_trials,
                "seed": seed, "corpus": f"connected n in {sorted(exhaustive_n)}"},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- kelmans: spectral monotonicity ---------------------------------------------


def _kelmans_case(case_seed: int) -> dict | None:
    rng = SplitMix64(case_seed)
    for _ in range(200):
        n = 4 + rng.next_below(27)  # 4..30
        g = random_connected_gnp(n, 0.15 + 0.6 * rng.next_float(), rng)
        u = rng.next_below(n)
        v = rng.next_below(n)
        if u == v:
            continue
        gs = kelmans(g, u, v)
        if not is_connected(gs):
            continue
        a = perron_pair(g)
        b = perron_pair(gs)
        if b.q_hat < a.q_hat - 1e-8 or a.lo > b.hi + 1e-8:
            return {
                "graph6": emit_graph6(g),
                "violated": f"kelmans({u},{v}) dropped the radius: "
                f"q(G)~{a.q_hat:.12f} vs q(G*)~{b.q_hat:.12f}",
            }
        return None
    return None


def run_kelmans(count: int = 1000, seed: int = 3) -> SuiteReport:
    """The neighborhood-shift transformation never decreases the radius."""
    start = time.monotonic()
    results = _pmap(_kelmans_case, _case_seeds(seed, count))
    failures = [r for r in results if r is not None]
    return SuiteReport(
        suite="kelmans",
        params={"count": count, "seed": seed, "n_max": 30},
        cases=count,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- qbound: edge-count upper bound and eigen-equation checks --------------------


def _qbound_case(case_seed: int) -> dict | None:
    rng = SplitMix64(case_seed)
    n = 3 + rng.next_below(48)  # 3..50
    g = random_connected_gnp(n, 0.25 + 0.65 * rng.next_float(), rng)
    est = perron_pair(g, tol=1e-8)
    bound = float(upper_bound_edge_count(g))
    if est.lo > bound + 1e-9:
        return {
            "graph6": emit_graph6(g),
            "violated": f"certified lower bound {est.lo:.12f} above "
            f"2m/(n-1)+n-2 = {bound:.12f}",
        }
    if bound - (est.q_hat - est.residual) < -1e-9:
        return {
            "graph6": emit_graph6(g),
            "violated": f"radius {est.q_hat:.12f} (residual {est.residual:.2e}) "
            f"exceeds 2m/(n-1)+n-2 = {bound:.12f}",
        }
    if est.converged and est.residual > 10 * est.tol:
        return {
            "graph6": emit_graph6(g),
            "violated": f"eigen-equation residual {est.residual:.2e} > 10*tol",
        }
    # adjacent-pair identity on one random edge
    edges = g.edges()
    u, v = edges[rng.next_below(len(edges))]
    defect = adjacent_pair_identity_defect(g, est, u, v)
    if est.converged and defect > 10 * est.tol + 1e-9:
        return {
            "graph6": emit_graph6(g),
            "violated": f"adjacent-pair identity defect {defect:.2e} at ({u},{v})",
        }
    # enclosure soundness: integer-rounded eigenvector stays below hi
    scaled = [round(t * 10**6) for t in est.f]
    exact = rayleigh_quotient_exact(g, scaled)
    if float(exact) > est.hi + 1e-9:
        return {
            "graph6": emit_graph6(g),
            "violated": f"exact quotient {float(exact):.12f} above hi={est.hi:.12f}",
        }
    return None


def run_qbound(count: int = 10_000, seed: int = 4) -> SuiteReport:
    """Edge-count bound on the radius, plus residual/identity sanity."""
    start = time.monotonic()
    results = _pmap(_qbound_case, _case_seeds(seed, count))
    failures = [r for r in results if r is not None]
    return SuiteReport(
        suite="qbound",
        params={"count": count, "seed": seed, "n_max": 50},
        cases=count,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- q-lower: exact class-1 certificates -----------------------------------------


def run_qlower(
    cases: Iterable[tuple[int, int, str, int]] | None = None, seed: int = 1
) -> SuiteReport:
    """Every class-1 member certifies ``q >= 2n - 2k`` in exact rationals.

    The generic rational quotient must also equal the closed-form value
    derived from the member's deletion count (two independent routes).
    """
    start = time.monotonic()
    if cases is None:
        cases = []
        for k in (2, 3):
            for n in (thresholds(k).n_min, 40):
                cases.append((k, n, "exhaustive", 0))
        for k in (4, 5):
            for n in (thresholds(k).n_min, 40):
                cases.append((k, n, "sample", 500))
    failures = []
    total = 0
    for k, n, mode, count in cases:
        for clazz in ("S1", "T1"):
            kw = {"count": count, "seed": seed} if mode == "sample" else {}
            for member in enumerate_class(clazz, n, k, mode, **kw):
                total += 1
                got = rayleigh_quotient_exact(member.graph, indicator_vector(member))
                want = indicator_rayleigh_value(member)
                threshold = Fraction(2 * n - 2 * k)
                if got != want or got < threshold:
                    failures.append({
                        "graph6": emit_graph6(member.graph),
                        "violated": f"{clazz}(n={n},k={k}) |E'|={len(member.deleted)}: "
                        f"quotient {got} (closed form {want}) vs threshold {threshold}",
                    })
    return SuiteReport(
        suite="q-lower",
        params={"cases": [list(c) for c in cases], "seed": seed},
        cases=total,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- q-upper: class-2 members sit strictly below the threshold -------------------


def _qupper_member_checks(member, est, n: int, k: int) -> list[str]:
    bad = []
    threshold = 2 * n - 2 * k
    if est.hi >= threshold:
        bad.append(f"hi={est.hi:.12f} not below {threshold}")
    if est.lo <= threshold - 1:
        bad.append(f"lo={est.lo:.12f} not above {threshold - 1}")
    exact = rayleigh_quotient_exact(member.graph, indicator_vector(member))
    if exact != indicator_rayleigh_value(member):
        bad.append(f"indicator quotient {exact} disagrees with the closed form")
    if exact <= threshold - 1:
        bad.append(f"exact indicator quotient {exact} not above {threshold - 1}")
    if est.converged:
        fx = max(est.f[x] for x in member.X)
        cap = k / (est.q_hat - k) + 1e-8
        if fx > cap:
            bad.append(f"max f over X = {fx:.12f} exceeds k/(q-k) = {cap:.12f}")
        # eigen-equation orderings that hold for every member: an untouched
        # hub dominates touched hubs and untouched non-hubs; an untouched
        # non-hub dominates touched ones
        parts = refined_partition(member)
        f = est.f
        y1, y2, z1, z2 = parts["Y1"], parts["Y2"], parts["Z1"], parts["Z2"]
        if y1 and (y2 or z1):
            gap = min(f[u] for u in y1) - max(f[v] for v in y2 + z1)
            if gap <= 0:
                bad.append(f"Y1 does not dominate Y2 u Z1 (gap {gap:.3e})")
        if z1 and z2:
            gap = min(f[u] for u in z1) - max(f[v] for v in z2)
            if gap <= 0:
                bad.append(f"Z1 does not dominate Z2 (gap {gap:.3e})")
    else:
        bad.append("perron pair did not converge")
    return bad


def _qupper_maximizer_checks(member, est, n: int, k: int) -> list[str]:
    bad = []
    parts = refined_partition(member)
    f = est.f
    y1, y2, z1, z2 = parts["Y1"], parts["Y2"], parts["Z1"], parts["Z2"]
    if y1 and y2:
        lo_side = min(f[u] for u in y1)
        hi_side = max(f[v] for v in y2 + z1)
        if lo_side <= hi_side:
            bad.append(
                f"ordering violated: min f over Y1 = {lo_side:.12f} <= "
                f"max f over Y2 u Z1 = {hi_side:.12f}"
            )
    if z1 and z2 and y2:
        lo_side = min(f[u] for u in z1)
        hi_side = max(f[v] for v in z2 + y2)
        if lo_side <= hi_side:
            bad.append(
                f"ordering violated: min f over Z1 = {lo_side:.12f} <= "
                f"max f over Z2 u Y2 = {hi_side:.12f}"
            )
    yz = member.Y + member.Z
    spread = max(f[v] for v in yz) - min(f[v] for v in yz)
    cap = (k * k + 6 * k + 6) / (2 * (est.q_hat - n + 1)) + 1e-8
    if spread > cap:
        bad.append(f"hub spread {spread:.12f} exceeds {cap:.12f}")
    return bad


def run_qupper(
    cases: Iterable[tuple[int, int, str, int]] | None = None, seed: int = 1
) -> SuiteReport:
    """Class-2 members: certified interval strictly below the threshold but
    above threshold-1, eigenvector bounds per member, orderings and spread on
    the radius-maximizing member.

    The strict upper bound only holds once n clears the order threshold
    (quartic in k); running a case below it reports honest failures.
    """
    start = time.monotonic()
    if cases is None:
        cases = [(2, thresholds(2).n_min, "exhaustive", 0),
                 (3, thresholds(3).n_min, "sample", 200)]
    failures = []
    total = 0
    for k, n, mode, count in cases:
        for clazz in ("S2", "T2"):
            kw = {"count": count, "seed": seed} if mode == "sample" else {}
            best = None  # (q_hat, member, estimate)
            for member in enumerate_class(clazz, n, k, mode, **kw):
                total += 1
                est = perron_pair(member.graph)
                for msg in _qupper_member_checks(member, est, n, k):
                    failures.append({
                        "graph6": emit_graph6(member.graph),
                        "violated": f"{clazz}(n={n},k={k}): {msg}",
                    })
                if best is None or est.q_hat > best[0]:
                    best = (est.q_hat, member, est)
            if best is not None:
                _, member, est = best
                for msg in _qupper_maximizer_checks(member, est, n, k):
                    failures.append({
                        "graph6": emit_graph6(member.graph),
                        "violated": f"{clazz}(n={n},k={k}) maximizer: {msg}",
                    })
    return SuiteReport(
        suite="q-upper",
        params={"cases": [list(c) for c in cases], "seed": seed},
        cases=total,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- appendix: exact rational inequality -----------------------------------------


def run_appendix(k_values: Iterable[int] = range(2, 13)) -> SuiteReport:
    """The closed-form bounding inequality holds in exact rationals at the
    order threshold and comfortably above it, over all four k mod 4 branches."""
    from .families import appendix_check

    start = time.monotonic()
    failures = []
    cases = 0
    branches = set()
    ks = list(k_values)
    for k in ks:
        n_min = thresholds(k).n_min
        for n in (n_min, n_min + 1000):
            cases += 1
            rep = appendix_check(k, n)
            branches.add(rep.branch)
            if not rep.holds or not rep.hypothesis_met:
                failures.append({
                    "graph6": "",
                    "violated": f"k={k} n={n}: holds={rep.holds} "
                    f"margin={rep.margin} hypothesis_met={rep.hypothesis_met}",
                })
    if len(ks) >= 4 and branches != {0, 1, 2, 3}:
        failures.append({
            "graph6": "",
            "violated": f"k mod 4 branches exercised: {sorted(branches)}",
        })
    return SuiteReport(
        suite="appendix",
        params={"k_values": ks},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- corollary: host radius ordering ---------------------------------------------


def run_corollary(
    k_values: Iterable[int] = (3, 4, 5), n_values: Iterable[int] = (30, 60)
) -> SuiteReport:
    """Certified ordering q(S host) > q(T host) > 2n - 2k with gaps > 1e-6.

    The k=2 case is skipped: the S and T hosts coincide there, so the first
    comparison is void by construction (recorded in the report params).
    """
    start = time.monotonic()
    failures = []
    cases = 0
    ks = [k for k in k_values if k != 2]
    for k in ks:
        for n in n_values:
            cases += 1
            s_est = perron_pair(build_S(n, k).graph)
            t_est = perron_pair(build_T(n, k).graph)
            base = 2 * n - 2 * k
            if not (s_est.lo - t_est.hi > 1e-6 and t_est.lo - base > 1e-6):
                failures.append({
                    "graph6": emit_graph6(build_S(n, k).graph),
                    "violated": f"k={k} n={n}: q(S)~[{s_est.lo:.9f},{s_est.hi:.9f}] "
                    f"q(T)~[{t_est.lo:.9f},{t_est.hi:.9f}] base={base}",
                })
    return SuiteReport(
        suite="corollary",
        params={"k_values": ks, "n_values": list(n_values),
                "skipped": "k=2 (S and T hosts coincide)"},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- family-nonhc: exceptional families really are exceptional -------------------


def run_family_nonhc(
    k_values: Iterable[int] = (2, 3), n_values: Iterable[int] = range(8, 13)
) -> SuiteReport:
    """Every class-1 member at desk scale fails the exact oracle."""
    start = time.monotonic()
    failures = []
    cases = 0
    for k in k_values:
        for n in n_values:
            if 2 * k > n:
                continue
            for clazz in ("S1", "T1"):
                for member in enumerate_class(clazz, n, k, "exhaustive"):
                    cases += 1
                    ans = is_hamilton_connected(member.graph, ORACLE_BUDGET)
                    if ans.verdict != "no":
                        failures.append({
                            "graph6": emit_graph6(member.graph),
                            "violated": f"{clazz}(n={n},k={k}) |E'|="
                            f"{len(member.deleted)}: oracle said {ans.verdict}",
                        })
    return SuiteReport(
        suite="family-nonhc",
        params={"k_values": list(k_values), "n_values": list(n_values)},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


# -- hunt: certifier vs oracle consistency ----------------------------------------


def _hunt_check(g: Graph) -> dict | None:
    cert = certify(g, CertifyConfig(enable_oracle=False))
    oracle = is_hamilton_connected(g, ORACLE_BUDGET).verdict
    outcome = cert.outcome
    if outcome == OUTCOME_CERTIFIED and oracle != "yes":
        pass_ok = False
    elif outcome == OUTCOME_NOT_HC and oracle != "no":
        pass_ok = False
    elif outcome == OUTCOME_EXCEPTIONAL and oracle == "yes":
        # hosts and their spanning subgraphs are never Hamilton-connected
        pass_ok = False
    else:
        pass_ok = True
    if pass_ok:
        return None
    return {
        "graph6": emit_graph6(g),
        "violated": f"certifier said {outcome} but oracle said {oracle}",
    }


def _hunt_case(args: tuple[int, int, str, float, int]) -> dict | None:
    case_seed, n, model, p, m_or_k = args
    rng = SplitMix64(case_seed)
    if model == "gnp":
        g = gnp(n, p, rng)
    elif model == "gnm":
        g = gnm(n, m_or_k, rng)
    elif model == "dense-above-edge-threshold":
        k = m_or_k
        lo = thresholds(k).edge(n) + 1
        hi = comb(n, 2)
        while True:
            g = gnm(n, lo + rng.next_below(hi - lo + 1), rng)
            if min_degree(g) >= k:
                break
    else:
        raise BadParameters(f"unknown hunt model {model!r}")
    return _hunt_check(g)


def run_hunt(
    n: int = 8,
    trials: int | str = 10_000,
    seed: int = 42,
    model: str = "gnp(0.5)",
) -> SuiteReport:
    """Random (or exhaustive) consistency search: the condition pipeline must
    never contradict the exact oracle.  A hit would be an implementation bug."""
    start = time.monotonic()
    name, arg = _parse_model(model)
    failures: list[dict] = []
    if name == "all-connected":
        graphs = connected_graphs(n)
        results = _pmap(_hunt_check, list(graphs))
        cases = len(graphs)
        failures = [r for r in results if r is not None]
    else:
        if not isinstance(trials, int):
            raise BadParameters("numeric models need an integer trial count")
        p = arg if name == "gnp" else 0.0
        mk = int(arg) if name in ("gnm", "dense-above-edge-threshold") else 0
        items = [(s, n, name, p, mk) for s in _case_seeds(seed, trials)]
        results = _pmap(_hunt_case, items)
        cases = trials
        failures = [r for r in results if r is not None]
    return SuiteReport(
        suite="hunt",
        params={"n": n, "trials": trials, "seed": seed, "model": model},
        cases=cases,
        failures=failures,
        elapsed=time.monotonic() - start,
    ).finalize()


def _parse_model(model: str) -> tuple[str, float]:
    model = model.strip()
    if model == "all-connected":
        return "all-connected", 0.0
    if "(" in model and model.endswith(")"):
        name, arg = model[:-1].split("(", 1)
        if name == "gnp":
            return "gnp", float(arg)
        if name == "gnm":
            return "gnm", float(arg)
        if name == "dense-above-edge-threshold":
            if not arg.startswith("k="):
                raise BadParameters("dense model takes k=<int>")
            return "dense-above-edge-threshold", float(arg[2:])
    raise BadParameters(f"unknown model {model!r}")


# -- registry and claim coverage ---------------------------------------------------

SUITES: dict[str, Callable[..., SuiteReport]] = {
    "ore": run_ore,
    "closure": run_closure,
    "kelmans": run_kelmans,
    "qbound": run_qbound,
    "q-lower": run_qlower,
    "q-upper": run_qupper,
    "appendix": run_appendix,
    "corollary": run_corollary,
    "family-nonhc": run_family_nonhc,
}

# Every claim the toolkit verifies, mapped to the suite (or the hunt command)
# that exercises it.  A claim without a runnable home fails the coverage test.
CLAIM_COVERAGE: dict[str, tuple[str, ...]] = {
    "eigen-equation-residual": ("qbound",),
    "adjacent-pair-identity": ("qbound",),
    "degree-sum-sufficiency": ("ore",),
    "closure-equivalence": ("closure",),
    "closure-well-definedness": ("closure",),
    "kelmans-monotonicity": ("kelmans",),
    "edge-count-radius-bound": ("qbound",),
    "edge-count-sufficiency": ("hunt",),
    "spectral-sufficiency": ("hunt", "q-lower", "q-upper"),
    "class1-lower-bound": ("q-lower",),
    "class2-upper-bound": ("q-upper",),
    "class2-eigenvector-claims": ("q-upper",),
    "class2-closed-form-inequality": ("appendix",),
    "host-radius-ordering": ("corollary",),
    "family-exceptionality": ("family-nonhc",),
}


def run_suite(suite: str, **params: Any) -> SuiteReport:
    if suite == "hunt":
        return run_hunt(**params)
    if suite not in SUITES:
        raise BadSuite(f"unknown suite {suite!r}; known: {sorted(SUITES)} + hunt")
    return SUITES[suite](**params)
