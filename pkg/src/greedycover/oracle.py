"""Brute-force ground truth and exhaustive/randomized bound validation.

The exact solver searches row subsets in increasing cardinality, which is
obviously correct and fast enough below m = 25.  The checkers replay the
greedy solver on many instances and compare every step of the uncovered
trajectory against the bound engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bounds import classical_bound, improved_bound
from .generate import (
    BERNOULLI_REPAIR,
    COLUMN_REGULAR,
    GenSpec,
    SplitMix64,
    generate_instance,
)
from .greedy import run_greedy
from .instance import Instance, density, write_instance
from . import bounds as _bounds

EXACT_MAX_M = 25
EXHAUSTIVE_MAX_CELLS = 16
SLACK = 1e-9


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    """One failed check: `observed` exceeded (or undercut) `bound` at step k
    of the instance described by `where`."""

    kind: str
    where: str
    k: int
    observed: float
    bound: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "where": self.where,
            "k": self.k,
            "observed": self.observed,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class OracleReport:
    instances_checked: int
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"checked {self.instances_checked} instances, "
            f"{len(self.violations)} violations: {verdict}"
        )

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "instances_checked": self.instances_checked,
            "violations": [v.to_dict() for v in self.violations],
        }


def exact_min_cover(inst: Instance) -> tuple[int, set[int]]:
    """Smallest row subset covering everything, by exhaustive search.

    Subsets are tried in increasing size and, within a size, in
    lexicographic index order, so the first hit is the lexicographically
    smallest minimum cover.
    """
    if inst.m > EXACT_MAX_M:
        raise TooLarge(f"m={inst.m} exceeds exact-search limit {EXACT_MAX_M}")
    full = inst.full_mask
    for size in range(1, inst.m + 1):
        for combo in itertools.combinations(range(inst.m), size):
            mask = 0
            for i in combo:
                mask |= inst.rows[i]
            if mask == full:
                return size, set(combo)
    raise AssertionError("valid instances always admit the all-rows cover")


def _trajectory_violations(inst: Instance, check_pigeonhole: bool) -> list[Violation]:
    spec = density(inst)
    g = spec.gamma_effective
    c = spec.c_effective
    m = inst.m
    trace = run_greedy(inst)
    out = []
    counts = trace.uncovered_counts
    for k, u in enumerate(counts):
        for kind, bound in (
            ("improved", inst.n * improved_bound(g, m, k)),
            ("classical", inst.n * classical_bound(g, k)),
        ):
            if u > bound + SLACK:
                out.append(Violation(kind, write_instance(inst), k, u, bound))
    if check_pigeonhole:
        for k in range(len(counts) - 1):
            newly = counts[k] - counts[k + 1]
            # gamma_e * m == c exactly, so the pigeonhole floor is integral
            need = -(-c * counts[k] // (m - k))
            if newly < need:
                out.append(
                    Violation("pigeonhole", write_instance(inst), k, newly, need)
                )
    return out


def check_bound_exhaustive(m: int, n: int) -> OracleReport:
    """Run the trajectory check on every m x n matrix with no zero column.

    Matrices are enumerated column-wise (each column is a nonzero m-bit
    pattern), giving (2^m - 1)^n instances.
    """
    if m * n > EXHAUSTIVE_MAX_CELLS:
        raise TooLarge(f"m*n={m * n} exceeds exhaustive limit {EXHAUSTIVE_MAX_CELLS}")
    checked = 0
    violations: list[Violation] = []
    for cols in itertools.product(range(1, 1 << m), repeat=n):
        rows = [0] * m
        for j, col in enumerate(cols):
            for i in range(m):
                if (col >> i) & 1:
                    rows[i] |= 1 << j
        inst = Instance(m, n, tuple(rows))
        violations.extend(_trajectory_violations(inst, check_pigeonhole=False))
        checked += 1
    return OracleReport(checked, tuple(violations))


def check_bound_random(specs) -> OracleReport:
    """Trajectory check plus per-step pigeonhole guarantee on generated
    instances: each greedy step must newly cover at least
    ceil(c_effective * u_k / (m - k)) elements."""
    checked = 0
    violations: list[Violation] = []
    for spec in specs:
        inst = generate_instance(spec)
        violations.extend(_trajectory_violations(inst, check_pigeonhole=True))
        checked += 1
    return OracleReport(checked, tuple(violations))


def default_random_suite(count: int = 1000, base_seed: int = 0) -> list[GenSpec]:
    """Fixed seed schedule over both models, m <= 64, n <= 256 and
    gamma in {0.1, 0.2, 0.3, 0.5}; deterministic given base_seed."""
    rng = SplitMix64(base_seed)
    gammas = (0.1, 0.2, 0.3, 0.5)
    specs = []
    for i in range(count):
        model = COLUMN_REGULAR if i % 2 == 0 else BERNOULLI_REPAIR
        gamma = gammas[rng.below(len(gammas))]
        m = 2 + rng.below(63)
        n = 1 + rng.below(256)
        p = rng.unit() if model == BERNOULLI_REPAIR else None
        specs.append(GenSpec(m=m, n=n, gamma=gamma, model=model, seed=rng.next_u64(), p=p))
    return specs


def check_product_sandwich(max_y: int = 200, rel_tol: float = 1e-12) -> OracleReport:
    """Exhaustively verify product_lower <= product_exact <= product_upper
    for all integer pairs 1 <= x <= y <= max_y, with relative slack at
    equality points."""
    checked = 0
    violations: list[Violation] = []
    for y in range(1, max_y + 1):
        for x in range(1, y + 1):
            exact = _bounds.product_exact(x, y)
            lo = _bounds.product_lower(x, y)
            hi = _bounds.product_upper(x, y)
            where = f"x={x} y={y}"
            if lo > exact + rel_tol * max(abs(lo), abs(exact)):
                violations.append(Violation("product-lower", where, x, exact, lo))
            if exact > hi + rel_tol * max(abs(hi), abs(exact)):
                violations.append(Violation("product-upper", where, x, exact, hi))
            checked += 1
    return OracleReport(checked, tuple(violations))
