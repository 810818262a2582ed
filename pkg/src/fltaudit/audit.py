"""The claim ledger: every checkable claim run to a scoped verdict.

Each claim is a bounded, machine-checkable statement wired to a checker in
another module.  Verdicts are always scoped: HOLDS means "no violation in
the configured ranges", never a universal statement; FAILS always carries
concrete evidence that re-verifies on replay; UNDECIDED marks scopes with
nothing to sample (or a checker that crashed).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from pathlib import Path

from .conditions import (
    SystemParams,
    replay_condition_counterexample,
    verify_condition_derivations,
)
from .fermat import primitive_square_triples
from .lemma import DerivationError, consistency_residual, derive_system, verify_identity
from .pythagoras import (
    audit_parametrization,
    is_pythagorean,
    represent_triple,
)
from .search import ConjectureInstance, SearchSpace, check_conditions, search
from .version import __version__

__all__ = [
    "AuditConfig",
    "AuditReport",
    "ClaimEntry",
    "HOLDS",
    "FAILS",
    "UNDECIDED",
    "compare_to_manifest",
    "load_default_manifest",
    "replay_evidence",
    "run_audit",
]

HOLDS = "HOLDS"
FAILS = "FAILS"
UNDECIDED = "UNDECIDED"

CLAIM_ORDER = ("C1", "C2", "C3", "C4", "C5", "C6", "C7")

_STATEMENTS = {
    "C1": (
        "For each exponent n in scope, (8rst)^2 (xyz)^(n-2) (x^n + y^n - z^n) "
        "expands to exactly A^2 + B^2 - C^2."
    ),
    "C2": (
        "Every integer triple (A, B, C) with A^2 + B^2 = C^2 is representable "
        "as A = p^2 - q^2, B = 2pq, C = p^2 + q^2 with integers p > q > 0."
    ),
    "C3": (
        "The direct closed forms for Q, M, P agree with the halved "
        "combinations (C - A)/2, B/2, (C + A)/2, every halving being exact."
    ),
    "C4": (
        "M^2 - P*Q expands to exactly (4rst)^2 (xyz)^(n-2) (x^n + y^n - z^n), "
        "so the extraction of (p, q) is coherent precisely on x^n + y^n = z^n."
    ),
    "C5": (
        "For bounded integer (x, y, z) satisfying the stated hypotheses, the "
        "derived side conditions hold, under each reading of the inequality chains."
    ),
    "C6": (
        "In a primitive integer solution of x^2 + y^2 = z^2, exactly one of "
        "x, y, z is even and the three are pairwise coprime."
    ),
    "C7": (
        "The three-equation quadratic system has no nontrivial integer "
        "solution satisfying the side conditions, within the searched box."
    ),
}


@dataclass(frozen=True)
class AuditConfig:
    """Scopes for every claim; defaults are the shipped desk-scale ranges."""

    identity_n_min: int = 3
    identity_n_max: int = 8
    consistency_n_min: int = 3
    consistency_n_max: int = 8
    c_max: int = 100
    parametrization_primitive_only: bool = False
    parametrization_even_b_only: bool = False
    box_bound: int = 4
    condition_k: int = 3
    search_bound: int = 3
    search_shards: int = 1
    triple_base_max: int = 100

    def __post_init__(self) -> None:
        if not (3 <= self.identity_n_min <= self.identity_n_max):
            raise ValueError("identity range needs 3 <= n_min <= n_max")
        if not (3 <= self.consistency_n_min <= self.consistency_n_max):
            raise ValueError("consistency range needs 3 <= n_min <= n_max")
        if self.c_max < 5:
            raise ValueError(f"c_max must be >= 5, got {self.c_max}")
        if self.box_bound < 3:
            raise ValueError(f"box_bound must be >= 3, got {self.box_bound}")
        if self.condition_k <= 2:
            raise ValueError(f"condition_k must exceed 2, got {self.condition_k}")
        if self.search_bound < 2:
            raise ValueError(f"search_bound must be >= 2, got {self.search_bound}")
        if self.search_shards < 1:
            raise ValueError(f"search_shards must be >= 1, got {self.search_shards}")
        if self.triple_base_max < 5:
            raise ValueError(f"triple_base_max must be >= 5, got {self.triple_base_max}")

    def as_dict(self) -> dict:
        return {
            "identity_n_min": self.identity_n_min,
            "identity_n_max": self.identity_n_max,
            "consistency_n_min": self.consistency_n_min,
            "consistency_n_max": self.consistency_n_max,
            "c_max": self.c_max,
            "parametrization_primitive_only": self.parametrization_primitive_only,
            "parametrization_even_b_only": self.parametrization_even_b_only,
            "box_bound": self.box_bound,
            "condition_k": self.condition_k,
            "search_bound": self.search_bound,
            "search_shards": self.search_shards,
            "triple_base_max": self.triple_base_max,
        }


@dataclass
class ClaimEntry:
    """One ledger row: a claim, its scope, verdict and replayable evidence."""

    claim_id: str
    statement: str
    scope: dict
    verdict: str
    subverdicts: dict[str, str] | None = None
    evidence: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    data: dict | None = None
    duration_s: float = 0.0

    def as_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "statement": self.statement,
            "scope": self.scope,
            "verdict": self.verdict,
            "subverdicts": self.subverdicts,
            "evidence": self.evidence,
            "notes": self.notes,
            "data": self.data,
            "duration_s": round(self.duration_s, 6),
        }


@dataclass
class AuditReport:
    config: AuditConfig
    claims: list[ClaimEntry]
    elapsed_s: float
    version: str = __version__

    def claim(self, claim_id: str) -> ClaimEntry:
        for entry in self.claims:
            if entry.claim_id == claim_id:
                return entry
        raise KeyError(claim_id)

    def verdict_summary(self) -> dict:
        summary: dict = {}
        for entry in self.claims:
            summary[entry.claim_id] = (
                dict(entry.subverdicts) if entry.subverdicts else entry.verdict
            )
        return summary

    def as_dict(self) -> dict:
        return {
            "command": "audit",
            "version": self.version,
            "config": self.config.as_dict(),
            "claims": [entry.as_dict() for entry in self.claims],
            "verdict_summary": self.verdict_summary(),
            "elapsed_s": round(self.elapsed_s, 6),
        }

    def render_text(self) -> str:
        lines = [f"claim ledger ({len(self.claims)} claims, {self.elapsed_s:.2f}s)"]
        for entry in self.claims:
            lines.append("")
            lines.append(f"{entry.claim_id}: {entry.verdict} (in scope)")
            lines.append(f"  statement: {entry.statement}")
            lines.append(f"  scope: {json.dumps(entry.scope, sort_keys=True)}")
            if entry.subverdicts:
                parts = ", ".join(f"{k}: {v}" for k, v in sorted(entry.subverdicts.items()))
                lines.append(f"  subverdicts: {parts}")
            if entry.evidence:
                lines.append(f"  evidence items: {len(entry.evidence)}")
                for item in entry.evidence[:5]:
                    lines.append(f"    {json.dumps(item, sort_keys=True)}")
                if len(entry.evidence) > 5:
                    lines.append(f"    ... {len(entry.evidence) - 5} more")
            for note in entry.notes:
                lines.append(f"  note: {note}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# Checkers


def _check_identity(config: AuditConfig) -> ClaimEntry:
    evidence = []
    for n in range(config.identity_n_min, config.identity_n_max + 1):
        residual = verify_identity(n)
        if not residual.is_zero:
            rendered = str(residual)
            evidence.append(
                {
                    "n": n,
                    "residual_terms": residual.term_count,
                    "residual_head": rendered[:160],
                }
            )
    entry = ClaimEntry(
        claim_id="C1",
        statement=_STATEMENTS["C1"],
        scope={"n_min": config.identity_n_min, "n_max": config.identity_n_max},
        verdict=FAILS if evidence else HOLDS,
        evidence=evidence,
    )
    entry.notes.append(
        f"symbolic residual computed for every n in "
        f"[{config.identity_n_min}, {config.identity_n_max}]"
    )
    return entry


def _check_parametrization(config: AuditConfig) -> ClaimEntry:
    failures = audit_parametrization(
        config.c_max,
        primitive_only=config.parametrization_primitive_only,
        even_b_only=config.parametrization_even_b_only,
    )
    charitable = audit_parametrization(
        config.c_max,
        primitive_only=config.parametrization_primitive_only,
        even_b_only=config.parametrization_even_b_only,
        charitable=True,
    )
    primitive_even = audit_parametrization(
        config.c_max, primitive_only=True, even_b_only=True
    )
    entry = ClaimEntry(
        claim_id="C2",
        statement=_STATEMENTS["C2"],
        scope={
            "c_max": config.c_max,
            "primitive_only": config.parametrization_primitive_only,
            "even_b_only": config.parametrization_even_b_only,
        },
        verdict=FAILS if failures else HOLDS,
        evidence=[{"triple": list(t.as_tuple())} for t in failures],
        data={
            "literal_failures": len(failures),
            "charitable_failures": len(charitable),
            "primitive_even_b_failures": len(primitive_even),
        },
    )
    entry.notes.append(
        f"charitable reading (sign flips and swap allowed): "
        f"{len(charitable)} unrepresentable triples"
    )
    entry.notes.append(
        f"primitive positive triples with even middle term: "
        f"{len(primitive_even)} unrepresentable (classical case)"
    )
    return entry


def _check_derivation_chain(config: AuditConfig) -> ClaimEntry:
    evidence = []
    for n in range(config.identity_n_min, config.identity_n_max + 1):
        try:
            derive_system(n)
        except DerivationError as exc:
            evidence.append({"n": n, "error": str(exc)})
    return ClaimEntry(
        claim_id="C3",
        statement=_STATEMENTS["C3"],
        scope={"n_min": config.identity_n_min, "n_max": config.identity_n_max},
        verdict=FAILS if evidence else HOLDS,
        evidence=evidence,
    )


def _check_consistency(config: AuditConfig) -> ClaimEntry:
    evidence = []
    for n in range(config.consistency_n_min, config.consistency_n_max + 1):
        result = consistency_residual(n)
        if not result.holds:
            evidence.append(
                {
                    "n": n,
                    "matches_product_form": result.matches_product_form,
                    "fermat_divisible": result.fermat_quotient is not None,
                }
            )
    return ClaimEntry(
        claim_id="C4",
        statement=_STATEMENTS["C4"],
        scope={"n_min": config.consistency_n_min, "n_max": config.consistency_n_max},
        verdict=FAILS if evidence else HOLDS,
        evidence=evidence,
    )


def _check_conditions(config: AuditConfig) -> ClaimEntry:
    checks = verify_condition_derivations(config.box_bound, config.condition_k)
    evidence = []
    by_reading = {"pairwise": HOLDS, "adjacent": HOLDS}
    for check in checks:
        if check.counterexamples:
            by_reading[check.reading] = FAILS
            for point in check.counterexamples:
                evidence.append(
                    {
                        "claim": check.claim,
                        "reading": check.reading,
                        "point": list(point),
                        "k": check.k,
                    }
                )
    failed = FAILS in by_reading.values()
    entry = ClaimEntry(
        claim_id="C5",
        statement=_STATEMENTS["C5"],
        scope={
            "box_bound": config.box_bound,
            "k": config.condition_k,
            "regimes": {
                "odd": SystemParams(k=config.condition_k, parity="odd").exponent,
                "even": SystemParams(k=config.condition_k, parity="even").exponent,
            },
        },
        verdict=FAILS if failed else HOLDS,
        subverdicts=by_reading,
        evidence=evidence,
        data={
            "checks": [
                {
                    "claim": check.claim,
                    "reading": check.reading,
                    "hypothesis_points": check.hypothesis_points,
                    "counterexamples": len(check.counterexamples),
                }
                for check in checks
            ]
        },
    )
    return entry


def _check_parity_coprime(config: AuditConfig) -> ClaimEntry:
    triples = primitive_square_triples(config.triple_base_max)
    evidence = []
    for x, y, z in triples:
        even_count = sum(1 for v in (x, y, z) if v % 2 == 0)
        coprime = gcd(x, y) == 1 and gcd(y, z) == 1 and gcd(z, x) == 1
        if even_count != 1 or not coprime:
            evidence.append(
                {"triple": [x, y, z], "even_count": even_count, "pairwise_coprime": coprime}
            )
    verdict = FAILS if evidence else (HOLDS if triples else UNDECIDED)
    entry = ClaimEntry(
        claim_id="C6",
        statement=_STATEMENTS["C6"],
        scope={"exponent": 2, "base_max": config.triple_base_max},
        verdict=verdict,
        subverdicts={"exponent 2": verdict, "exponent > 2": UNDECIDED},
        evidence=evidence,
        data={"samples": len(triples)},
    )
    entry.notes.append(
        "exponent > 2: UNDECIDED in bounds, no solutions exist to sample"
    )
    return entry


def _check_search(config: AuditConfig) -> ClaimEntry:
    space = SearchSpace.cube(
        -config.search_bound,
        config.search_bound,
        case="unit",
        shards=config.search_shards,
    )
    result = search(space)
    evidence = []
    for inst, report in result.counterexamples():
        item = inst.as_dict()
        item["readings"] = {
            "pairwise": report.counterexample_pairwise,
            "adjacent": report.counterexample_adjacent,
        }
        evidence.append(item)
    entry = ClaimEntry(
        claim_id="C7",
        statement=_STATEMENTS["C7"],
        scope={"case": "unit", "bound": config.search_bound},
        verdict=FAILS if evidence else HOLDS,
        subverdicts={
            "pairwise": FAILS if result.counterexamples_pairwise else HOLDS,
            "adjacent": FAILS if result.counterexamples_adjacent else HOLDS,
        },
        evidence=evidence,
        data={
            "solutions": len(result.solutions),
            "trivial_solutions": result.trivial_solutions,
            "adjacent_def_admissible": result.adjacent_def_admissible,
            "certificate": result.certificate(),
        },
    )
    entry.notes.append("unit-coefficient case only at this scope")
    if result.adjacent_def_admissible:
        entry.notes.append(
            f"{result.adjacent_def_admissible} nontrivial solutions satisfy the "
            "side conditions only when the d/e/f chain is read adjacent-only; "
            "they are logged but not counted as counterexamples"
        )
    return entry


_CHECKERS = {
    "C1": _check_identity,
    "C2": _check_parametrization,
    "C3": _check_derivation_chain,
    "C4": _check_consistency,
    "C5": _check_conditions,
    "C6": _check_parity_coprime,
    "C7": _check_search,
}


def run_audit(config: AuditConfig | None = None) -> AuditReport:
    """Run every claim checker; failures isolate to their claim."""
    config = config or AuditConfig()
    started = time.perf_counter()
    claims: list[ClaimEntry] = []
    for claim_id in CLAIM_ORDER:
        claim_started = time.perf_counter()
        try:
            entry = _CHECKERS[claim_id](config)
        except Exception as exc:  # noqa: BLE001 - the ledger must always complete
            entry = ClaimEntry(
                claim_id=claim_id,
                statement=_STATEMENTS[claim_id],
                scope={},
                verdict=UNDECIDED,
                notes=[f"checker raised {type(exc).__name__}: {exc}"],
            )
        entry.duration_s = time.perf_counter() - claim_started
        claims.append(entry)
    return AuditReport(
        config=config, claims=claims, elapsed_s=time.perf_counter() - started
    )


# ----------------------------------------------------------------------
# Evidence replay


def replay_evidence(claim_id: str, item: dict, config: AuditConfig | None = None) -> bool:
    """Re-run one FAILS evidence item through its checker; True iff it still fails."""
    config = config or AuditConfig()
    if claim_id == "C1":
        return not verify_identity(item["n"]).is_zero
    if claim_id == "C2":
        a, b, c = item["triple"]
        return is_pythagorean(a, b, c) and represent_triple(a, b, c) is None
    if claim_id == "C3":
        try:
            derive_system(item["n"])
        except DerivationError:
            return True
        return False
    if claim_id == "C4":
        return not consistency_residual(item["n"]).holds
    if claim_id == "C5":
        k = item["k"] if item.get("k") is not None else config.condition_k
        return replay_condition_counterexample(
            item["claim"], item["reading"], tuple(item["point"]), k
        )
    if claim_id == "C6":
        x, y, z = item["triple"]
        if x * x + y * y != z * z or gcd(gcd(x, y), z) != 1:
            return False
        even_count = sum(1 for v in (x, y, z) if v % 2 == 0)
        coprime = gcd(x, y) == 1 and gcd(y, z) == 1 and gcd(z, x) == 1
        return even_count != 1 or not coprime
    if claim_id == "C7":
        inst = ConjectureInstance(
            a=item["a"],
            b=item["b"],
            c=item["c"],
            d=item["d"],
            e=item["e"],
            f=item["f"],
            alpha=item["alpha"],
            beta=item["beta"],
            gamma=item["gamma"],
            p=item["p"],
            q=item["q"],
        )
        report = check_conditions(inst)
        return report.counterexample_pairwise or report.counterexample_adjacent
    raise KeyError(f"unknown claim id {claim_id!r}")


# ----------------------------------------------------------------------
# Expected-verdict manifest


def load_default_manifest() -> dict:
    payload = resources.files("fltaudit").joinpath("data/expected_verdicts.json")
    return json.loads(payload.read_text(encoding="utf-8"))


def load_manifest(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def compare_to_manifest(report: AuditReport, manifest: dict) -> tuple[bool, list[str]]:
    """Check the report's verdicts against an expected-verdict manifest."""
    drifts: list[str] = []
    summary = report.verdict_summary()
    for claim_id, expected in manifest.items():
        if claim_id not in summary:
            drifts.append(f"{claim_id}: missing from report")
            continue
        actual = summary[claim_id]
        if isinstance(expected, dict):
            for key, want in expected.items():
                got = actual.get(key) if isinstance(actual, dict) else None
                if got != want:
                    drifts.append(f"{claim_id}[{key}]: expected {want}, got {got}")
        else:
            top = report.claim(claim_id).verdict
            if top != expected:
                drifts.append(f"{claim_id}: expected {expected}, got {top}")
    return not drifts, drifts
