"""Deterministic instance generators with a minimum column density target.

Both models guarantee every column ends up with at least c = ceil(gamma*m)
ones.  Randomness comes from a self-contained splitmix64 stream so equal
specs give bit-identical instances on any platform; cross-language stream
compatibility is not a goal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .instance import Instance

COLUMN_REGULAR = "column-regular"
BERNOULLI_REPAIR = "bernoulli-repair"
MODELS = (COLUMN_REGULAR, BERNOULLI_REPAIR)

_MASK64 = (1 << 64) - 1


class BadSpec(ValueError):
    pass


class SplitMix64:
    """64-bit mixing generator (splitmix64 constants).

    state advances by the golden-gamma increment; output is the
    xor-shift-multiply finalizer of the new state.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Unbiased integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound

    def unit(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def sample(self, m: int, k: int) -> list[int]:
        """k distinct values from range(m), partial Fisher-Yates order."""
        pool = list(range(m))
        for i in range(k):
            j = i + self.below(m - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance.

    p is only meaningful for the bernoulli-repair model; seed is a
    64-bit unsigned value.
    """

    m: int
    n: int
    gamma: float
    model: str
    seed: int
    p: float | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise BadSpec(f"need m >= 1 and n >= 1, got m={self.m} n={self.n}")
        if not 0.0 < self.gamma <= 1.0:
            raise BadSpec(f"gamma must be in (0,1], got {self.gamma}")
        if self.model not in MODELS:
            raise BadSpec(f"unknown model {self.model!r}, expected one of {MODELS}")
        if not 0 <= self.seed <= _MASK64:
            raise BadSpec(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.model == BERNOULLI_REPAIR:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise BadSpec(f"bernoulli-repair needs p in [0,1], got {self.p}")

    @property
    def c(self) -> int:
        """Target minimum ones per column, ceil(gamma*m)."""
        return math.ceil(self.gamma * self.m)


def gen_column_regular(spec: GenSpec) -> Instance:
    """Every column gets exactly c ones at rows drawn without replacement."""
    if spec.model != COLUMN_REGULAR:
        raise BadSpec(f"expected model {COLUMN_REGULAR!r}, got {spec.model!r}")
    rng = SplitMix64(spec.seed)
    c = spec.c
    rows = [0] * spec.m
    for j in range(spec.n):
        for i in rng.sample(spec.m, c):
            rows[i] |= 1 << j
    return Instance(spec.m, spec.n, tuple(rows))


def gen_bernoulli_repair(spec: GenSpec) -> Instance:
    """IID Bernoulli(p) cells, then deficient columns topped up to c ones.

    Repair only adds ones, so the result is a superset of a density-c
    matrix and never loses the Bernoulli structure of dense columns.
    """
    if spec.model != BERNOULLI_REPAIR:
        raise BadSpec(f"expected model {BERNOULLI_REPAIR!r}, got {spec.model!r}")
    rng = SplitMix64(spec.seed)
    c = spec.c
    rows = [0] * spec.m
    for i in range(spec.m):
        mask = 0
        for j in range(spec.n):
            if rng.unit() < spec.p:
                mask |= 1 << j
        rows[i] = mask
    for j in range(spec.n):
        bit = 1 << j
        have = sum(1 for r in rows if r & bit)
        if have >= c:
            continue
        zeros = [i for i in range(spec.m) if not rows[i] & bit]
        picks = rng.sample(len(zeros), c - have)
        for z in picks:
            rows[zeros[z]] |= bit
    return Instance(spec.m, spec.n, tuple(rows))


def generate_instance(spec: GenSpec) -> Instance:
    if spec.model == COLUMN_REGULAR:
        return gen_column_regular(spec)
    return gen_bernoulli_repair(spec)
