"""
Verification suites: every identity of the library checked exactly at desk scale.

Each suite expands into independent tasks (one per parameter point); tasks
are pure, so they may run in a process pool or sequentially with the same
outcome.
"""
import json
import logging
import os
from dataclasses import dataclass, field
from multiprocessing.pool import Pool
from typing import Dict, List, Sequence, Tuple

from tqdm import tqdm

from dyckgen.cluster import (
    c2,
    c2_factorial,
    compositions,
    degree_check,
    exp_log_series,
    log_genfun_restricted,
    log_genfun_unbounded,
    log_secular,
)
from dyckgen.constants import VERIFY_SUITES
from dyckgen.genfun import GenSpec, continued_fraction, genfun, genfun_ceiling, genfun_continued, genfun_excursion
from dyckgen.identities import IdentityResult, check_recursions, compare_series, duality_result
from dyckgen.oracle import enumerate_paths, genfun_from_table
from dyckgen.spectral import duality_holds, secular_det_recursive, secular_methods
from dyckgen.touchdown import tilde_from_excursion, tilde_genfun, tilde_genfun_openend, tilde_secular

logger = logging.getLogger(__name__)

Task = Tuple[str, Dict[str, object]]

CATALAN = (1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012)


def _flag(name: str, params: Dict[str, object], passed: bool, detail: str = "") -> IdentityResult:
    return IdentityResult(name, params, passed, None if passed else detail)


def _meanders(k_max: int):
    for k in range(k_max + 1):
        for m in range(k + 1):
            for n in range(m, k + 1):
                yield k, m, n


def build_tasks(suite: str, k_max: int, len_max: int) -> List[Task]:
    """Expand a suite into its parameter points."""
    if suite == "determinants":
        return [(suite, {"k": k, "L": len_max}) for k in range(k_max + 1)]
    if suite in ("genfun", "touchdown"):
        tasks = [(suite, {"k": k, "m": m, "n": n, "L": len_max}) for k, m, n in _meanders(k_max)]
        if suite == "genfun":
            tasks.append((suite, {"k": None, "m": 0, "n": 0, "L": len_max}))
        return tasks
    if suite == "duality":
        return [(suite, {"k": k, "m": m, "n": n, "L": len_max})
                for k in range(k_max + 1) for m in range(k + 1) for n in range(k + 1)]
    if suite == "recursions":
        return [(suite, {"k": k, "m": m, "n": n, "L": len_max}) for k, m, n in _meanders(k_max)]
    if suite == "cluster":
        # the log series starts at z = zeta^2
        if len_max < 2:
            logger.info(f"cluster: nothing to expand at len_max={len_max}")
            return []
        tasks = [(suite, {"k": None, "a_max": len_max // 2})]
        tasks += [(suite, {"k": k, "m": m, "n": n, "a_max": len_max // 2}) for k, m, n in _meanders(k_max)]
        return tasks
    raise ValueError(f"Unknown suite {suite!r}; expected one of {VERIFY_SUITES}")


def _determinants(k: int, L: int) -> List[IdentityResult]:
    params = {"k": k, "L": L}
    reference = secular_det_recursive(k, L)
    results = [
        compare_series(f"F_k {name} = recursive", params, method(k, L), reference)
        for name, method in secular_methods().items() if name != "recursive"
    ]
    results.append(_flag("F_k duality", params, duality_holds(k, L)))
    return results


def _genfun(k, m: int, n: int, L: int) -> List[IdentityResult]:
    params = {"k": k, "m": m, "n": n, "L": L}
    spec = GenSpec(k, m, n, L)
    G = genfun(spec).series
    table = enumerate_paths(k, m, n, L)
    results = [compare_series("genfun = oracle", params, G, genfun_from_table(table).series)]
    if k is None:
        totals = table.totals()
        expected = [CATALAN[l // 2] if l % 2 == 0 else 0 for l in range(L + 1)]
        results.append(_flag("catalan totals", params, totals == expected, f"{totals} != {expected}"))
        return results
    results.append(compare_series("symmetry", params, G, genfun(GenSpec(k, n, m, L)).series))
    if m == 0 or n == k:
        results.append(compare_series("continued-fraction route", params, genfun_continued(spec).series, G))
    if m == n == 0:
        excursion = genfun_excursion(k, L).series
        results.append(compare_series("excursion = genfun", params, excursion, G))
        results.append(compare_series("continued fraction", params, continued_fraction(k, L), excursion))
    if m == n == k:
        results.append(compare_series("ceiling = genfun", params, genfun_ceiling(k, L).series, G))
    return results


def _duality(k: int, m: int, n: int, L: int) -> List[IdentityResult]:
    return [duality_result(GenSpec(k, m, n, L))]


def _recursions(k: int, m: int, n: int, L: int) -> List[IdentityResult]:
    return check_recursions(GenSpec(k, m, n, L)).results


def _cluster(a_max: int, k=None, m: int = 0, n: int = 0) -> List[IdentityResult]:
    L = 2 * a_max
    if k is None:
        params = {"k": None, "a_max": a_max}
        polys = [p.value for p in log_genfun_unbounded(a_max)]
        results = [compare_series("exp(cluster) = G", params, exp_log_series(polys), genfun_excursion(None, L).series)]
        bad = [comp.parts for a in range(1, a_max + 1) for comp in compositions(a) if c2(comp) != c2_factorial(comp)]
        results.append(_flag("c2 forms agree", params, not bad, f"compositions {bad[:5]}"))
        negative = [p.a for p in log_genfun_unbounded(a_max) if any(c < 0 for _, c in p.value.items())]
        results.append(_flag("p_a non-negative", params, not negative, f"a in {negative}"))
        return results

    params = {"k": k, "m": m, "n": n, "a_max": a_max}
    d = n - m
    restricted = log_genfun_restricted(k, m, n, a_max)
    results = [compare_series("exp(restricted cluster) = genfun", params,
                              restricted.to_series(d + L), genfun(GenSpec(k, m, n, d + L)).series)]
    if m == 0 and n == 0 and k >= 1:
        polys = log_secular(k, a_max)
        results.append(compare_series("exp(log F_k) = F_k", params, exp_log_series(polys), secular_det_recursive(k, L)))
        results.append(_flag("log F_k division-free", params, polys == log_secular(k, a_max, via_division=True)))
    for a in range(1, a_max + 1 if k >= 1 else 1):
        check = degree_check(k, m, n, a)
        results.append(_flag("degree", dict(params, a=a), bool(check),
                             f"degree {check.degree} vs {check.expected} (branch {check.branch}), "
                             f"oracle max area {check.oracle_max_area} vs {check.expected_max_area}"))
    return results


def _touchdown(k: int, m: int, n: int, L: int) -> List[IdentityResult]:
    params = {"k": k, "m": m, "n": n, "L": L}
    tilde = tilde_genfun(k, m, n, L).series
    table = enumerate_paths(k, m, n, L)
    results = [
        compare_series("touchdown = oracle", params, tilde, genfun_from_table(table, touchdowns=True).series),
        compare_series("ratio = structural", params, tilde, tilde_genfun(k, m, n, L, method="structural").series),
        compare_series("t=1 collapse", params, tilde.at_t(1), genfun(GenSpec(k, m, n, L)).series),
    ]
    if m == n == 0:
        reference = tilde_secular(k, L)
        for method in ("top-row", "determinant"):
            results.append(compare_series(f"F~_k {method} = recursion", params, tilde_secular(k, L, method=method), reference))
        results.append(compare_series("tilde from continued fraction", params,
                                      tilde_from_excursion(continued_fraction(k, L)), tilde))
        if k >= 1:
            results.append(compare_series("open end divide = ratio", params, tilde_genfun_openend(k, L).series,
                                          tilde_genfun_openend(k, L, method="ratio").series))
    return results


def run_task(suite: str, params: Dict[str, object]) -> List[dict]:
    """Run one parameter point; returns plain dicts so results cross process boundaries."""
    if suite == "determinants":
        results = _determinants(**params)
    elif suite == "genfun":
        results = _genfun(**params)
    elif suite == "duality":
        results = _duality(**params)
    elif suite == "recursions":
        results = _recursions(**params)
    elif suite == "cluster":
        results = _cluster(**params)
    elif suite == "touchdown":
        results = _touchdown(**params)
    else:
        raise ValueError(f"Unknown suite {suite!r}")
    return [dict(r.to_dict(), suite=suite) for r in results]


@dataclass
class VerifyReport:
    suites: Sequence[str]
    k_max: int
    len_max: int
    results: List[dict] = field(default_factory=list)

    @property
    def failures(self) -> List[dict]:
        return [r for r in self.results if not r["passed"]]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suites": list(self.suites),
            "k_max": self.k_max,
            "len_max": self.len_max,
            "checked": len(self.results),
            "failed": len(self.failures),
            "results": self.results,
        }

    def summary(self) -> str:
        lines = [f"{len(self.results) - len(self.failures)}/{len(self.results)} identities hold "
                 f"(suites={','.join(self.suites)}, k_max={self.k_max}, len_max={self.len_max})"]
        for r in self.failures:
            lines.append(f"FAIL {r['suite']}: {r['identity']} {r['params']}: {r['mismatch']}")
        return "\n".join(lines)


def run_suites(suites: Sequence[str], k_max: int, len_max: int, num_processes: int = 1) -> VerifyReport:
    tasks = [task for suite in suites for task in build_tasks(suite, k_max, len_max)]
    report = VerifyReport(suites, k_max, len_max)
    logger.info(f"Running {len(tasks)} verification tasks ({','.join(suites)})")
    if num_processes > 1:
        with Pool(num_processes) as pool:
            for results in pool.starmap(run_task, tasks):
                report.results.extend(results)
    else:
        for suite, params in tqdm(tasks, desc="verify", disable=not logger.isEnabledFor(logging.INFO)):
            report.results.extend(run_task(suite, params))
    logger.info(report.summary().splitlines()[0])
    return report


def save_to_json(output_dir: str, output_name: str, data: dict) -> None:
    output_path = os.path.join(output_dir, output_name)
    with open(output_path, 'w') as file:
        json.dump(data, file, indent=4)


def save_log_file(output_dir: str, output_name: str, report: VerifyReport, args) -> None:
    log_path = os.path.join(output_dir, f"{output_name}.log")
    with open(log_path, 'a') as file:
        file.write("========================================\n")
        file.write(f"{report.summary()}\n")
        file.write(f"Arguments: {args}\n")
