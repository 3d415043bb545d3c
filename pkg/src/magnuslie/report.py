"""Pipeline orchestration and the JSON run report.

The fixed check order is gate, torsion, hilbert, mod-p, floor-bound,
magnus-e1.  A gate rejection stops the quotient checks unless forced,
in which case their sections carry hypotheses_met = false.  Reports
serialize with sorted keys and every mathematical integer rendered as a
decimal string, so consumers never face precision loss; repeated runs
with the same configuration produce identical JSON except for the
wall-clock block under meta.timings.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__
from .checks import (SuiteResult, homomorphism_suite, jacobi_suite,
                     floor_bound_suite, magnus_e1_suite,
                     strategy_independence_suite, valuation_mult_suite)
from .gate import HypothesisReport, check_relator_hypotheses
from .presentation_io import PresentationFile, parse_presentation_file
from .quotient import (DEFAULT_BUDGET, HilbertTable, ModpCheck, TorsionReport,
                       hilbert_crosscheck, modp_dimension_check,
                       torsion_free_certificate)
from .series import WeightScheme
from .words import word_to_text

EXIT_OK = 0
EXIT_GATE_REJECTED = 1
EXIT_CHECK_FAILED = 2
EXIT_INCONCLUSIVE = 3
EXIT_USAGE = 4

ALL_CHECKS = ("gate", "torsion", "hilbert", "modp", "floor-bound", "magnus-e1")

# cutoff ladder used when no max_degree is configured anywhere
_GATE_CUTOFFS = (4, 8, 12)


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    max_degree: int | None = None
    e: int | None = None
    primes: tuple[int, ...] = (2, 3, 5, 7)
    seed: int = 0
    samples: int = 500
    max_word_len: int = 12
    checks: tuple[str, ...] = ("all",)
    json_out: str | None = None
    force_downstream: bool = False
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError("max_degree must be positive")
        if self.samples < 0:
            raise ValueError("sample count must be nonnegative")
        for p in self.primes:
            if p < 2:
                raise ValueError(f"prime {p} out of range")
        for name in self.checks:
            if name not in ALL_CHECKS + ("all",):
                raise ValueError(f"unknown check {name!r}")

    def selected(self) -> tuple[str, ...]:
        """The checks whose verdicts drive the exit code.  The gate always
        runs regardless (everything downstream needs d and e)."""
        if "all" in self.checks:
            return ALL_CHECKS
        return tuple(name for name in ALL_CHECKS if name in self.checks)


@dataclass
class RunReport:
    config: RunConfig
    presentation_file: PresentationFile
    gate: HypothesisReport
    gate_cutoff: int
    max_degree: int | None
    torsion: TorsionReport | None = None
    hilbert: HilbertTable | None = None
    modp: ModpCheck | None = None
    floor_bound: SuiteResult | None = None
    magnus_e1: SuiteResult | None = None
    skip_reasons: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    exit_code: int = EXIT_OK


def run_report(config: RunConfig) -> RunReport:
    """Execute the selected checks and assemble the report."""
    with open(config.input_path, "r", encoding="utf-8") as handle:
        text = handle.read()
    parsed = parse_presentation_file(text)
    pres = parsed.presentation
    if config.e is not None:
        pres = type(pres)(m=pres.m, n=pres.n, u=pres.u, v=pres.v, e=config.e)
        parsed = PresentationFile(presentation=pres, max_degree=parsed.max_degree)
    selected = config.selected()
    timings: dict[str, float] = {}

    # gate: with a configured degree cap that cap is the certification
    # window; otherwise climb a small ladder until the degree resolves
    configured_cap = config.max_degree or parsed.max_degree
    start = time.perf_counter()
    if configured_cap is not None:
        gate = check_relator_hypotheses(pres, configured_cap)
    else:
        for cutoff in _GATE_CUTOFFS:
            gate = check_relator_hypotheses(pres, cutoff)
            if not gate.inconclusive:
                break
    timings["gate"] = time.perf_counter() - start

    max_degree = configured_cap
    if max_degree is None and gate.d is not None:
        max_degree = gate.d + 6

    report = RunReport(
        config=config,
        presentation_file=parsed,
        gate=gate,
        gate_cutoff=gate.cutoff,
        max_degree=max_degree,
    )

    quotient_ok = gate.rho is not None and max_degree is not None \
        and max_degree >= gate.d
    run_quotient = (gate.accepted or config.force_downstream) and quotient_ok
    scheme_full = gate.scheme
    if scheme_full is None and gate.chosen_e is not None:
        scheme_full = WeightScheme(pres.m, pres.n, gate.chosen_e)

    for name in ("torsion", "hilbert", "modp"):
        if name not in selected:
            report.skip_reasons[name] = "not selected"
        elif not run_quotient:
            if gate.rho is None:
                report.skip_reasons[name] = "no leading form available"
            elif not gate.accepted:
                report.skip_reasons[name] = "gate rejected (pass --force-downstream to run)"
            else:
                report.skip_reasons[name] = "degree window below the relator degree"

    if run_quotient:
        if "torsion" in selected or "hilbert" in selected or "modp" in selected:
            start = time.perf_counter()
            report.torsion = torsion_free_certificate(
                gate.rho, max_degree, scheme_full, budget=config.budget)
            timings["torsion"] = time.perf_counter() - start
        if "hilbert" in selected and report.torsion is not None:
            start = time.perf_counter()
            report.hilbert = hilbert_crosscheck(report.torsion)
            timings["hilbert"] = time.perf_counter() - start
        if "modp" in selected and report.torsion is not None:
            start = time.perf_counter()
            report.modp = modp_dimension_check(
                gate.rho, max_degree, scheme_full, config.primes,
                report=report.torsion, budget=config.budget)
            timings["modp"] = time.perf_counter() - start

    suites_scheme = scheme_full
    if suites_scheme is None:
        suites_scheme = WeightScheme(pres.m, pres.n, pres.e or 1)
    if "floor-bound" in selected:
        start = time.perf_counter()
        report.floor_bound = floor_bound_suite(
            suites_scheme, samples=config.samples,
            max_len=config.max_word_len, seed=config.seed)
        timings["floor_bound"] = time.perf_counter() - start
    else:
        report.skip_reasons["floor-bound"] = "not selected"
    if "magnus-e1" in selected:
        start = time.perf_counter()
        report.magnus_e1 = magnus_e1_suite(suites_scheme)
        timings["magnus_e1"] = time.perf_counter() - start
    else:
        report.skip_reasons["magnus-e1"] = "not selected"

    report.timings = timings
    report.exit_code = _exit_code(report, selected)
    return report


def algebra_law_suites(scheme: WeightScheme, samples: int = 500,
                       seed: int = 0) -> list[SuiteResult]:
    """The four randomized algebra-law suites at one seed."""
    return [
        homomorphism_suite(scheme, samples=samples, seed=seed),
        valuation_mult_suite(scheme, samples=samples, seed=seed),
        jacobi_suite(scheme, samples=samples, seed=seed),
        strategy_independence_suite(samples=samples, seed=seed),
    ]


def _exit_code(report: RunReport, selected) -> int:
    quotient_selected = any(n in selected for n in ("torsion", "hilbert", "modp"))
    if report.gate.inconclusive and ("gate" in selected or quotient_selected):
        return EXIT_INCONCLUSIVE
    if not report.gate.accepted:
        # a rejection also blocks selected quotient checks unless forced
        if "gate" in selected or (quotient_selected and report.torsion is None):
            return EXIT_GATE_REJECTED
    failed = False
    if report.torsion is not None and "torsion" in selected:
        failed = failed or not report.torsion.torsion_free
    if report.hilbert is not None and "hilbert" in selected:
        failed = failed or not report.hilbert.all_match
    if report.modp is not None and "modp" in selected:
        failed = failed or not report.modp.all_match
    if report.floor_bound is not None:
        failed = failed or not report.floor_bound.passed
    if report.magnus_e1 is not None:
        failed = failed or not report.magnus_e1.passed
    if failed:
        return EXIT_CHECK_FAILED
    aborted = (report.torsion is not None and report.torsion.aborted_degree is not None) \
        or (report.modp is not None and report.modp.aborted_degree is not None)
    if aborted:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


# -- JSON serialization -----------------------------------------------------


def _stringify(value):
    """Recursively render integers as decimal strings; bools stay bools."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    return value


def report_to_json_dict(report: RunReport, include_timings: bool = True) -> dict:
    pres = report.presentation_file.presentation
    scheme_echo = WeightScheme(pres.m, pres.n, 1)
    gate = report.gate

    gate_block = {
        "accepted": gate.accepted,
        "inconclusive": gate.inconclusive,
        "d": gate.d,
        "rho": None if gate.rho is None else gate.rho.to_text(),
        "content": gate.content,
        "chosen_e": gate.chosen_e,
        "failures": list(gate.failures),
        "cutoff": gate.cutoff,
    }

    if report.torsion is None:
        torsion_block = {"skipped": True,
                         "reason": report.skip_reasons.get("torsion")}
    else:
        t = report.torsion
        torsion_block = {
            "skipped": False,
            "hypotheses_met": gate.accepted,
            "relator_degree": t.relator_degree,
            "max_degree": t.max_degree,
            "torsion_free": t.torsion_free,
            "aborted_degree": t.aborted_degree,
            "note": t.note,
            "degrees": [
                {
                    "degree": r.degree,
                    "dim_free": r.dim_free,
                    "rank": r.rank,
                    "divisors": list(r.divisors),
                    "dim_quotient": r.dim_quotient,
                    "torsion": list(r.torsion),
                }
                for r in t.degrees
            ],
        }

    if report.hilbert is None:
        hilbert_block = {"skipped": True,
                         "reason": report.skip_reasons.get("hilbert")}
    else:
        h = report.hilbert
        hilbert_block = {
            "skipped": False,
            "hypotheses_met": gate.accepted,
            "relator_degree": h.relator_degree,
            "max_degree": h.max_degree,
            "candidate": list(h.candidate),
            "pbw": list(h.pbw),
            "matches": list(h.matches),
            "all_match": h.all_match,
            "formula_status": h.formula_status,
        }

    if report.modp is None:
        modp_block = {"skipped": True, "reason": report.skip_reasons.get("modp")}
    else:
        mp = report.modp
        modp_block = {
            "skipped": False,
            "hypotheses_met": gate.accepted,
            "primes": list(mp.primes),
            "all_match": mp.all_match,
            "aborted_degree": mp.aborted_degree,
            "note": mp.note,
            "tables": [
                {
                    "prime": table.prime,
                    "all_match": table.all_match,
                    "rows": [
                        {
                            "degree": row.degree,
                            "rank_mod_p": row.rank_mod_p,
                            "rank_integer": row.rank_integer,
                            "match": row.match,
                        }
                        for row in table.rows
                    ],
                }
                for table in mp.reports
            ],
        }

    def suite_block(suite: SuiteResult | None, skip_key: str) -> dict:
        if suite is None:
            return {"skipped": True, "reason": report.skip_reasons.get(skip_key)}
        return {
            "skipped": False,
            "name": suite.name,
            "cases": suite.cases,
            "applicable": suite.applicable,
            "failures": suite.failures,
            "seed": suite.seed,
            "counterexample": suite.counterexample,
            "passed": suite.passed,
            "detail": dict(suite.detail),
        }

    meta = {
        "version": __version__,
        "seed": report.config.seed,
        "samples": report.config.samples,
        "max_word_len": report.config.max_word_len,
        "primes": list(report.config.primes),
        "checks": list(report.config.selected()),
        "cutoffs": {
            "gate": report.gate_cutoff,
            "quotient": report.max_degree,
        },
        "exit_code": report.exit_code,
    }
    if include_timings:
        meta["timings"] = {k: round(v, 6) for k, v in report.timings.items()}

    payload = {
        "presentation": {
            "m": pres.m,
            "n": pres.n,
            "u": word_to_text(pres.u, scheme_echo),
            "v": word_to_text(pres.v, scheme_echo),
            "e": pres.e,
            "file_max_degree": report.presentation_file.max_degree,
        },
        "gate": gate_block,
        "torsion": torsion_block,
        "hilbert": hilbert_block,
        "modp": modp_block,
        "floor_bound": suite_block(report.floor_bound, "floor-bound"),
        "magnus_e1": suite_block(report.magnus_e1, "magnus-e1"),
        "meta": meta,
    }
    return _stringify(payload)


def report_to_json(report: RunReport, include_timings: bool = True) -> str:
    payload = report_to_json_dict(report, include_timings=include_timings)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
