"""Exhaustive bounded search for integer solutions of the quadratic system.

The system in the eleven unknowns (a, b, c, d, e, f, alpha, beta, gamma, p, q):

    q^2 = a^2 alpha - b^2 beta  - c^2 gamma
    pq  = (ad)^2 alpha - (be)^2 beta - (cf)^2 gamma
    p^2 = (ad^2)^2 alpha - (be^2)^2 beta - (cf^2)^2 gamma

The search enumerates (alpha, beta, gamma, a, b, c, d, e, f) over an integer
box in lexicographic order ("unit" case pins alpha = beta = gamma = 1) and
derives p and q instead of scanning them:

  * the first right-hand side must be a nonnegative perfect square (checked
    with residue pre-filters mod 16 and mod 9 before the exact square root),
    giving q up to sign;
  * for q > 0, p is forced as the exact quotient of the second right-hand
    side by q; for q = 0 the second right-hand side must vanish and the
    third must be a perfect square.

The sign symmetry (p, q) -> (-p, -q) is quotiented away by canonicalizing
q >= 0, and p >= 0 when q = 0.  The space is split into shards by a prefix
of the enumeration order; each completed shard appends one fsync'd record to
the checkpoint file, so an interrupted run resumes without rescanning.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import Callable, Mapping

from .checkpoint import CheckpointError, append_record, read_records
from .ints import SQUARES_MOD_16, SQUARES_MOD_9, divides, exact_sqrt, pairwise_distinct
from .lemma import LemmaBindings

__all__ = [
    "ConditionReport",
    "ConjectureInstance",
    "DerivedInstance",
    "SearchResult",
    "SearchSpace",
    "check_conditions",
    "check_instance",
    "derive_instance_from_xyz",
    "is_trivial",
    "search",
    "system_values",
    "write_result_log",
]

COEFF_VARS = ("alpha", "beta", "gamma")
UNIT_VARS = ("a", "b", "c", "d", "e", "f")

ShardHook = Callable[[int, dict], None]


# ----------------------------------------------------------------------
# Instances and condition flags


@dataclass(frozen=True)
class ConjectureInstance:
    """One assignment of all eleven unknowns."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    alpha: int
    beta: int
    gamma: int
    p: int
    q: int

    def key(self) -> tuple[int, ...]:
        """Sort key following the enumeration order."""
        return (
            self.alpha,
            self.beta,
            self.gamma,
            self.a,
            self.b,
            self.c,
            self.d,
            self.e,
            self.f,
            self.p,
            self.q,
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "e": self.e,
            "f": self.f,
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "p": self.p,
            "q": self.q,
        }


def system_values(
    a: int, b: int, c: int, d: int, e: int, f: int, alpha: int, beta: int, gamma: int
) -> tuple[int, int, int]:
    """The three right-hand sides for one assignment of (a..f, alpha..gamma)."""
    first = a * a * alpha - b * b * beta - c * c * gamma
    second = (a * d) ** 2 * alpha - (b * e) ** 2 * beta - (c * f) ** 2 * gamma
    third = (a * d * d) ** 2 * alpha - (b * e * e) ** 2 * beta - (c * f * f) ** 2 * gamma
    return first, second, third


def check_instance(inst: ConjectureInstance) -> bool:
    """True iff all three equations hold exactly."""
    first, second, third = system_values(
        inst.a, inst.b, inst.c, inst.d, inst.e, inst.f, inst.alpha, inst.beta, inst.gamma
    )
    return inst.q * inst.q == first and inst.p * inst.q == second and inst.p * inst.p == third


def is_trivial(inst: ConjectureInstance) -> bool:
    """Triviality convention: a zero among a, b, c, or p = q = 0."""
    return inst.a * inst.b * inst.c == 0 or (inst.p == 0 and inst.q == 0)


@dataclass(frozen=True)
class ConditionReport:
    """Side-condition flags for an instance, under both chain readings.

    The *_adjacent fields repeat the corresponding chain with only
    neighbouring values required distinct (and the final "!= 0" applied to
    the last element only).

    The counterexample verdict always requires d, e, f pairwise distinct and
    nonzero; the per-reading verdicts differ only in how the coefficient
    chain |alpha| != |beta| != |gamma| != 0 is read.  Solutions that would
    qualify only under the weakened adjacent reading of the d, e, f chain
    are flagged separately (``admissible_with_adjacent_def``) so alternative
    conventions can be re-counted offline.
    """

    satisfied: bool
    trivial: bool
    def_distinct_nonzero: bool
    def_distinct_nonzero_adjacent: bool
    case_unit: bool
    case_general_distinct: bool
    case_general_distinct_adjacent: bool
    divisibility: bool
    non_unit_divisors: bool
    counterexample_pairwise: bool
    counterexample_adjacent: bool

    @property
    def admissible_with_adjacent_def(self) -> bool:
        """Would qualify if the d, e, f chain were read adjacent-only."""
        cases = self.case_unit or (
            self.case_general_distinct_adjacent
            and self.divisibility
            and self.non_unit_divisors
        )
        return (
            self.satisfied
            and not self.trivial
            and self.def_distinct_nonzero_adjacent
            and not self.def_distinct_nonzero
            and cases
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "satisfied": self.satisfied,
            "trivial": self.trivial,
            "def_distinct_nonzero": self.def_distinct_nonzero,
            "def_distinct_nonzero_adjacent": self.def_distinct_nonzero_adjacent,
            "case_unit": self.case_unit,
            "case_general_distinct": self.case_general_distinct,
            "case_general_distinct_adjacent": self.case_general_distinct_adjacent,
            "divisibility": self.divisibility,
            "non_unit_divisors": self.non_unit_divisors,
        }


def check_conditions(inst: ConjectureInstance) -> ConditionReport:
    """Recompute every hypothesis flag and the per-reading counterexample verdicts."""
    satisfied = check_instance(inst)
    trivial = is_trivial(inst)
    d, e, f = inst.d, inst.e, inst.f
    def_pair = d != 0 and e != 0 and f != 0 and pairwise_distinct(d, e, f)
    def_adj = d != e and e != f and f != 0
    aa, ab, ag = abs(inst.alpha), abs(inst.beta), abs(inst.gamma)
    case_unit = inst.alpha == 1 and inst.beta == 1 and inst.gamma == 1
    gen_pair = aa != 0 and ab != 0 and ag != 0 and pairwise_distinct(aa, ab, ag)
    gen_adj = aa != ab and ab != ag and ag != 0
    div_ok = (
        divides(inst.alpha, inst.a)
        and divides(inst.beta, inst.b)
        and divides(inst.gamma, inst.c)
    )
    non_unit = aa != inst.a and ab != inst.b and ag != inst.c

    def verdict(gen_ok: bool) -> bool:
        cases = case_unit or (gen_ok and div_ok and non_unit)
        return satisfied and not trivial and def_pair and cases

    return ConditionReport(
        satisfied=satisfied,
        trivial=trivial,
        def_distinct_nonzero=def_pair,
        def_distinct_nonzero_adjacent=def_adj,
        case_unit=case_unit,
        case_general_distinct=gen_pair,
        case_general_distinct_adjacent=gen_adj,
        divisibility=div_ok,
        non_unit_divisors=non_unit,
        counterexample_pairwise=verdict(gen_pair),
        counterexample_adjacent=verdict(gen_adj),
    )


# ----------------------------------------------------------------------
# Search space


@dataclass(frozen=True)
class SearchSpace:
    """Inclusive per-variable bounds, case selector, shard count, checkpoint."""

    bounds: Mapping[str, tuple[int, int]]
    case: str = "unit"
    shards: int = 1
    checkpoint_path: str | None = None

    def __post_init__(self) -> None:
        if self.case not in ("unit", "general"):
            raise ValueError(f"case must be 'unit' or 'general', got {self.case!r}")
        required = self.enumerated_vars
        clean: dict[str, tuple[int, int]] = {}
        for name in required:
            if name not in self.bounds:
                raise ValueError(f"missing bounds for variable {name!r}")
            low, high = self.bounds[name]
            if not (isinstance(low, int) and isinstance(high, int)):
                raise ValueError(f"bounds for {name!r} must be integers")
            if low > high:
                raise ValueError(f"empty range for {name!r}: [{low}, {high}]")
            clean[name] = (low, high)
        extra = set(self.bounds) - set(required)
        if extra:
            raise ValueError(f"unexpected bound keys: {sorted(extra)}")
        object.__setattr__(self, "bounds", clean)
        if not isinstance(self.shards, int) or self.shards < 1:
            raise ValueError(f"shard count must be >= 1, got {self.shards!r}")
        if self.checkpoint_path is not None:
            object.__setattr__(self, "checkpoint_path", str(self.checkpoint_path))

    @classmethod
    def cube(
        cls,
        low: int,
        high: int,
        *,
        case: str = "unit",
        shards: int = 1,
        checkpoint_path: str | Path | None = None,
    ) -> "SearchSpace":
        names = UNIT_VARS if case == "unit" else COEFF_VARS + UNIT_VARS
        return cls(
            bounds={name: (low, high) for name in names},
            case=case,
            shards=shards,
            checkpoint_path=None if checkpoint_path is None else str(checkpoint_path),
        )

    @property
    def enumerated_vars(self) -> tuple[str, ...]:
        return UNIT_VARS if self.case == "unit" else COEFF_VARS + UNIT_VARS

    def values_of(self, name: str) -> list[int]:
        low, high = self.bounds[name]
        return list(range(low, high + 1))

    def total_assignments(self) -> int:
        total = 1
        for name in self.enumerated_vars:
            low, high = self.bounds[name]
            total *= high - low + 1
        return total

    def signature(self) -> str:
        payload = json.dumps(
            {
                "case": self.case,
                "bounds": {k: list(v) for k, v in sorted(self.bounds.items())},
                "shards": self.shards,
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _prefix_blocks(space: SearchSpace) -> list[tuple[int, int]]:
    # Shard granularity: the first two coordinates of the enumeration order.
    first, second = space.enumerated_vars[:2]
    return [(i, j) for i in space.values_of(first) for j in space.values_of(second)]


def _shard_block_range(space: SearchSpace, shard_id: int, block_count: int) -> tuple[int, int]:
    start = shard_id * block_count // space.shards
    stop = (shard_id + 1) * block_count // space.shards
    return start, stop


# ----------------------------------------------------------------------
# Shard scanning


def _scan_shard(space: SearchSpace, shard_id: int) -> dict:
    """Scan one shard and return its checkpoint record."""
    blocks = _prefix_blocks(space)
    start, stop = _shard_block_range(space, shard_id, len(blocks))
    inner_vars = space.enumerated_vars[2:]
    inner_size = 1
    for name in inner_vars:
        low, high = space.bounds[name]
        inner_size *= high - low + 1

    c_values = space.values_of("c")
    d_pows = [(d, d * d, d**4) for d in space.values_of("d")]
    e_pows = [(e, e * e, e**4) for e in space.values_of("e")]
    f_pows = [(f, f * f, f**4) for f in space.values_of("f")]
    solutions: list[list[int]] = []

    if space.case == "unit":
        for a, b in blocks[start:stop]:
            _kernel(1, 1, 1, a, b, c_values, d_pows, e_pows, f_pows, solutions)
    else:
        gamma_values = space.values_of("gamma")
        a_values = space.values_of("a")
        b_values = space.values_of("b")
        for alpha, beta in blocks[start:stop]:
            for gamma in gamma_values:
                for a in a_values:
                    for b in b_values:
                        _kernel(
                            alpha, beta, gamma, a, b, c_values, d_pows, e_pows, f_pows, solutions
                        )

    solutions.sort()
    return {
        "format": 1,
        "signature": space.signature(),
        "shard": shard_id,
        "shards": space.shards,
        "blocks": [start, stop],
        "scanned": (stop - start) * inner_size,
        "solutions": solutions,
    }


def _kernel(
    alpha: int,
    beta: int,
    gamma: int,
    a: int,
    b: int,
    c_values: list[int],
    d_pows: list[tuple[int, int, int]],
    e_pows: list[tuple[int, int, int]],
    f_pows: list[tuple[int, int, int]],
    out: list[list[int]],
) -> None:
    # Tight inner scan over (c, d, e, f) for fixed coefficients and (a, b).
    # The perfect-square gate on the first equation runs before the d/e/f
    # loops, which prunes the overwhelming majority of assignments.
    a_sq = a * a * alpha
    b_sq = b * b * beta
    for c in c_values:
        c_sq = c * c * gamma
        val_q2 = a_sq - b_sq - c_sq
        if val_q2 < 0:
            continue
        if val_q2 % 16 not in SQUARES_MOD_16 or val_q2 % 9 not in SQUARES_MOD_9:
            continue
        q = isqrt(val_q2)
        if q * q != val_q2:
            continue
        for d, d2, d4 in d_pows:
            ad2 = a_sq * d2
            ad4 = a_sq * d4
            for e, e2, e4 in e_pows:
                part_pq = ad2 - b_sq * e2
                part_p2 = ad4 - b_sq * e4
                for f, f2, f4 in f_pows:
                    val_pq = part_pq - c_sq * f2
                    val_p2 = part_p2 - c_sq * f4
                    if q:
                        p, residue = divmod(val_pq, q)
                        if residue or p * p != val_p2:
                            continue
                    else:
                        if val_pq:
                            continue
                        root = exact_sqrt(val_p2)
                        if root is None:
                            continue
                        p = root
                    out.append([alpha, beta, gamma, a, b, c, d, e, f, p, q])


# ----------------------------------------------------------------------
# Orchestration


@dataclass
class SearchResult:
    """Merged outcome of all shards, sorted and classified."""

    space: SearchSpace
    signature: str
    solutions: list[tuple[ConjectureInstance, ConditionReport]]
    counterexamples_pairwise: int
    counterexamples_adjacent: int
    adjacent_def_admissible: int
    trivial_solutions: int
    scanned: int
    total_assignments: int
    exhausted: bool
    shards_total: int
    shards_reused: int
    checkpoint_tail_discarded: bool = False

    def counterexamples(self) -> list[tuple[ConjectureInstance, ConditionReport]]:
        return [
            (inst, rep)
            for inst, rep in self.solutions
            if rep.counterexample_pairwise or rep.counterexample_adjacent
        ]

    def solution_rows(self) -> list[dict]:
        rows = []
        for inst, rep in self.solutions:
            row = inst.as_dict()
            row["conditions"] = rep.as_dict()
            row["counterexample"] = {
                "pairwise": rep.counterexample_pairwise,
                "adjacent": rep.counterexample_adjacent,
            }
            row["adjacent_def_admissible"] = rep.admissible_with_adjacent_def
            row["trivial"] = rep.trivial
            rows.append(row)
        return rows

    def certificate(self) -> dict:
        return {
            "case": self.space.case,
            "bounds": {k: list(v) for k, v in sorted(self.space.bounds.items())},
            "signature": self.signature,
            "scanned": self.scanned,
            "total_assignments": self.total_assignments,
            "exhausted": self.exhausted,
            "shards": {"total": self.shards_total, "reused": self.shards_reused},
        }


def _load_existing_records(space: SearchSpace, signature: str) -> tuple[dict[int, dict], bool]:
    path = space.checkpoint_path
    if path is None or not Path(path).exists():
        return {}, False
    records, truncated = read_records(path)
    existing: dict[int, dict] = {}
    for record in records:
        for key in ("signature", "shard", "shards", "solutions", "scanned"):
            if key not in record:
                raise CheckpointError(f"checkpoint record is missing field {key!r}")
        if record["signature"] != signature:
            raise CheckpointError(
                "checkpoint was written for a different search configuration"
            )
        if not (0 <= record["shard"] < space.shards) or record["shards"] != space.shards:
            raise CheckpointError(f"checkpoint shard {record['shard']} is out of range")
        existing.setdefault(record["shard"], record)
    return existing, truncated


def search(
    space: SearchSpace,
    *,
    workers: int = 1,
    on_shard_complete: ShardHook | None = None,
) -> SearchResult:
    """Run (or resume) the exhaustive search over the given space.

    With ``workers`` > 1 shards are scanned in a process pool and their
    records written once all have finished; with a single worker each shard
    is checkpointed the moment it completes, which is the mode to use for
    interruptible runs.  ``on_shard_complete(shard_id, record)`` fires after
    a shard's record is durable; exceptions raised there abort the run
    without damaging the checkpoint.
    """
    signature = space.signature()
    existing, truncated = _load_existing_records(space, signature)
    todo = [sid for sid in range(space.shards) if sid not in existing]

    fresh: dict[int, dict] = {}
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_scan_shard, space, sid): sid for sid in todo}
            for future in as_completed(futures):
                fresh[futures[future]] = future.result()
        for sid in sorted(fresh):
            if space.checkpoint_path:
                append_record(space.checkpoint_path, fresh[sid])
            if on_shard_complete is not None:
                on_shard_complete(sid, fresh[sid])
    else:
        for sid in todo:
            record = _scan_shard(space, sid)
            fresh[sid] = record
            if space.checkpoint_path:
                append_record(space.checkpoint_path, record)
            if on_shard_complete is not None:
                on_shard_complete(sid, record)

    records = {**existing, **fresh}
    missing = [sid for sid in range(space.shards) if sid not in records]
    if missing:
        raise CheckpointError(f"shards {missing} did not complete")

    rows: list[list[int]] = []
    for sid in range(space.shards):
        rows.extend(records[sid]["solutions"])
    rows.sort()

    solutions: list[tuple[ConjectureInstance, ConditionReport]] = []
    n_pair = n_adj = n_alt = n_trivial = 0
    for row in rows:
        alpha, beta, gamma, a, b, c, d, e, f, p, q = row
        inst = ConjectureInstance(
            a=a, b=b, c=c, d=d, e=e, f=f, alpha=alpha, beta=beta, gamma=gamma, p=p, q=q
        )
        report = check_conditions(inst)
        solutions.append((inst, report))
        n_pair += report.counterexample_pairwise
        n_adj += report.counterexample_adjacent
        n_alt += report.admissible_with_adjacent_def
        n_trivial += report.trivial

    scanned = sum(records[sid]["scanned"] for sid in range(space.shards))
    total = space.total_assignments()
    return SearchResult(
        space=space,
        signature=signature,
        solutions=solutions,
        counterexamples_pairwise=n_pair,
        counterexamples_adjacent=n_adj,
        adjacent_def_admissible=n_alt,
        trivial_solutions=n_trivial,
        scanned=scanned,
        total_assignments=total,
        exhausted=scanned == total,
        shards_total=space.shards,
        shards_reused=len(existing),
        checkpoint_tail_discarded=truncated,
    )


def write_result_log(result: SearchResult, path: str | Path) -> None:
    """Write the normalized result log: one canonical JSON object per solution."""
    with open(path, "w", encoding="utf-8") as handle:
        for row in result.solution_rows():
            handle.write(json.dumps(row, sort_keys=True, separators=(",", ":")))
            handle.write("\n")


# ----------------------------------------------------------------------
# Instances derived from a point on the Fermat variety


@dataclass(frozen=True)
class DerivedInstance:
    """Skeleton (a..f, alpha..gamma) obtained from (x, y, z) at exponent n.

    ``rhs_q2``, ``rhs_pq``, ``rhs_p2`` are the exact right-hand sides of the
    three equations for that skeleton; ``integer_pq`` is the unique
    canonical (p, q) completing it to a solution, when one exists.
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    alpha: int
    beta: int
    gamma: int
    n: int
    k: int
    parity: str
    rhs_q2: int
    rhs_pq: int
    rhs_p2: int
    degenerate: bool
    q_candidate: int | None
    integer_pq: tuple[int, int] | None

    def with_pq(self, p: int, q: int) -> ConjectureInstance:
        return ConjectureInstance(
            a=self.a,
            b=self.b,
            c=self.c,
            d=self.d,
            e=self.e,
            f=self.f,
            alpha=self.alpha,
            beta=self.beta,
            gamma=self.gamma,
            p=p,
            q=q,
        )


def derive_instance_from_xyz(x: int, y: int, z: int, n: int) -> DerivedInstance:
    """Substitute a concrete (x, y, z) into the system skeleton for exponent n.

    Odd n = 2k + 1 uses alpha = xy, beta = yz, gamma = zx; even n = 2k uses
    unit coefficients.  Either way a = r (xy)^(k-1), b = s (yz)^(k-1),
    c = t (zx)^(k-1) and (d, e, f) = (u, v, w).
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"exponent must be an integer >= 3, got {n!r}")
    forms = LemmaBindings.at_point(x, y, z)
    xy, yz, zx = x * y, y * z, z * x
    if n % 2:
        k = (n - 1) // 2
        parity = "odd"
        alpha, beta, gamma = xy, yz, zx
    else:
        k = n // 2
        parity = "even"
        alpha = beta = gamma = 1
    a = forms.r * xy ** (k - 1)
    b = forms.s * yz ** (k - 1)
    c = forms.t * zx ** (k - 1)
    d, e, f = forms.u, forms.v, forms.w
    rhs_q2, rhs_pq, rhs_p2 = system_values(a, b, c, d, e, f, alpha, beta, gamma)
    q_candidate = exact_sqrt(rhs_q2)
    integer_pq: tuple[int, int] | None = None
    if q_candidate is not None:
        if q_candidate > 0:
            p, residue = divmod(rhs_pq, q_candidate)
            if residue == 0 and p * p == rhs_p2:
                integer_pq = (p, q_candidate)
        elif rhs_pq == 0:
            root = exact_sqrt(rhs_p2)
            if root is not None:
                integer_pq = (root, 0)
    return DerivedInstance(
        a=a,
        b=b,
        c=c,
        d=d,
        e=e,
        f=f,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        n=n,
        k=k,
        parity=parity,
        rhs_q2=rhs_q2,
        rhs_pq=rhs_pq,
        rhs_p2=rhs_p2,
        degenerate=a * b * c == 0 or x * y * z == 0,
        q_candidate=q_candidate,
        integer_pq=integer_pq,
    )
