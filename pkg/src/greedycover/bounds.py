"""Coverage-trajectory bounds for density-restricted greedy set cover.

For an m x n matrix in which every column holds at least gamma*m ones, the
fraction of uncovered elements after k greedy steps obeys two estimates:

  classical:  delta_k <= (1 - gamma)^k
  improved:   delta_{k+1} <= delta_k * (1 - gamma*m/(m - k))

The improved recurrence exploits that the ones of uncovered columns all sit
in unselected rows, so the pigeonhole average is taken over m-k rows, not m.
Factors are clamped at 0: once gamma*m/(m-j) >= 1, an unselected row covers
everything that is left, and the recurrence would otherwise go negative.

The recurrence is the authoritative definition; the closed form below is a
checked derivation of it.  All arithmetic is 64-bit binary floating point;
empirical comparisons elsewhere allow +1e-9 absolute slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class BadGamma(ValueError):
    pass


class BadArgs(ValueError):
    pass


class OutOfRegion(ValueError):
    """Closed form requested outside k <= m*(1-gamma); use improved_bound."""


def _check_gamma(gamma: float) -> None:
    if not 0.0 < gamma <= 1.0:
        raise BadGamma(f"gamma must be in (0,1], got {gamma}")


def _factor(gamma: float, m: int, j: int) -> float:
    # grouped as gamma*(m/(m-j)) so the j = 0 factor is exactly 1-gamma and
    # floating-point dominance over (1-gamma)^k holds without slack
    return max(0.0, 1.0 - gamma * (m / (m - j)))


def classical_bound(gamma: float, k: int) -> float:
    """(1-gamma)^k, the prior per-step shrinkage estimate."""
    _check_gamma(gamma)
    if k < 0:
        raise BadArgs(f"k must be >= 0, got {k}")
    return (1.0 - gamma) ** k


def improved_bound(gamma: float, m: int, k: int) -> float:
    """Unrolled recurrence b_{j+1} = b_j * max(0, 1 - gamma*m/(m-j)).

    Returns b_k with b_0 = 1.  Requires 0 <= k <= m.
    """
    _check_gamma(gamma)
    if m < 1:
        raise BadArgs(f"m must be >= 1, got {m}")
    if not 0 <= k <= m:
        raise BadArgs(f"k must be in [0, m={m}], got {k}")
    b = 1.0
    for j in range(k):
        b *= _factor(gamma, m, j)
        if b == 0.0:
            break
    return b


def closed_form_bound(gamma: float, m: int, k: int) -> float:
    """Product form of the improved bound, valid while k <= m*(1-gamma):

        (1-gamma)^k * prod_{i=1..k-1} (1 - i/(m(1-gamma))) / (1 - i/m)

    Unrolling the recurrence from b_0 = 1 gives factors j = 0..k-1; each
    one rewrites as (1-gamma) * (1 - j/(m(1-gamma))) / (1 - j/m), and the
    j = 0 term reduces to (1-gamma), hence the products start at i = 1 and
    stop at k-1.  Agrees with improved_bound to 1e-12 relative tolerance
    on its whole region.
    """
    _check_gamma(gamma)
    if m < 1:
        raise BadArgs(f"m must be >= 1, got {m}")
    if k < 0:
        raise BadArgs(f"k must be >= 0, got {k}")
    region = m * (1.0 - gamma)
    if k > region:
        raise OutOfRegion(f"k={k} exceeds m*(1-gamma)={region}; use improved_bound")
    num = 1.0
    den = 1.0
    for i in range(1, k):
        num *= 1.0 - i / region
        den *= 1.0 - i / m
    return (1.0 - gamma) ** k * num / den


def product_exact(x: int, y: int) -> float:
    """prod_{i=1..x-1} (1 - i/y) for positive integers x <= y."""
    _check_xy(x, y)
    p = 1.0
    for i in range(1, x):
        p *= 1.0 - i / y
    return p


def product_lower(x: int, y: int) -> float:
    """(1 - x/y)^((x-1)/2), a lower estimate of product_exact.

    Pairing the terms i and x-i gives (1-i/y)(1-(x-i)/y) >= 1-x/y, and
    there are (x-1)/2 such pairs.
    """
    _check_xy(x, y)
    return (1.0 - x / y) ** ((x - 1) / 2)


def product_upper(x: int, y: int) -> float:
    """(1 - x/(2y))^(x-1), an upper estimate of product_exact (AM-GM:
    the x-1 factors average to 1 - x/(2y))."""
    _check_xy(x, y)
    return (1.0 - x / (2 * y)) ** (x - 1)


def _check_xy(x: int, y: int) -> None:
    if not (isinstance(x, int) and isinstance(y, int)):
        raise BadArgs(f"x and y must be integers, got {x!r}, {y!r}")
    if not 1 <= x <= y:
        raise BadArgs(f"need 1 <= x <= y, got x={x} y={y}")


def improvement_ratio(gamma: float, m: int, k: int) -> float:
    """improved_bound / classical_bound on the closed-form region.

    Equals prod_{i=1..k-1} (1 - i/(m(1-gamma))) / (1 - i/m), the extra
    coefficient the improved estimate gains over (1-gamma)^k; always in
    [0,1] and tending to 1 as gamma -> 0.
    """
    _check_gamma(gamma)
    if m < 1:
        raise BadArgs(f"m must be >= 1, got {m}")
    if k < 0:
        raise BadArgs(f"k must be >= 0, got {k}")
    if k > m * (1.0 - gamma):
        raise OutOfRegion(
            f"k={k} exceeds m*(1-gamma)={m * (1.0 - gamma)}; ratio undefined there"
        )
    return improved_bound(gamma, m, k) / classical_bound(gamma, k)


def cover_size_bound(gamma: float, m: int, n: int, kind: str = "improved") -> tuple[int, int]:
    """Best stop-step and guaranteed cover size under the chosen bound.

    After k greedy steps at most ceil(n * B(k)) elements remain, and
    patching spends at most one row each, so k + ceil(n * B(k)) rows
    always suffice.  Returns (k_star, size_bound) where k_star is the
    smallest k in [0, m] minimizing that total.
    """
    _check_gamma(gamma)
    if m < 1:
        raise BadArgs(f"m must be >= 1, got {m}")
    if n < 0:
        raise BadArgs(f"n must be >= 0, got {n}")
    if kind not in ("classical", "improved"):
        raise BadArgs(f"kind must be 'classical' or 'improved', got {kind!r}")
    k_star = 0
    best = math.ceil(n * 1.0)
    b = 1.0
    for k in range(1, m + 1):
        if kind == "improved":
            b *= _factor(gamma, m, k - 1)
        else:
            b = (1.0 - gamma) ** k
        total = k + math.ceil(n * b)
        if total < best:
            best = total
            k_star = k
    return k_star, best


@dataclass(frozen=True)
class BoundEntry:
    k: int
    classical: float
    improved: float
    ratio: float


@dataclass(frozen=True)
class BoundSeries:
    """Per-step classical and improved bounds for fixed (gamma, m)."""

    gamma: float
    m: int
    entries: tuple[BoundEntry, ...]


def bound_series(gamma: float, m: int, k_max: int | None = None) -> BoundSeries:
    """Tabulate both bounds and their ratio for k = 0..k_max (default m).

    ratio is improved/classical, taken as 1 when both are 0 (only happens
    at gamma = 1) so the k = 0 value of 1 extends consistently.
    """
    _check_gamma(gamma)
    if m < 1:
        raise BadArgs(f"m must be >= 1, got {m}")
    last = m if k_max is None else k_max
    if not 0 <= last <= m:
        raise BadArgs(f"k_max must be in [0, m={m}], got {k_max}")
    entries = []
    b = 1.0
    for k in range(last + 1):
        if k > 0:
            b *= _factor(gamma, m, k - 1)
        c = classical_bound(gamma, k)
        ratio = b / c if c > 0.0 else 1.0
        entries.append(BoundEntry(k, c, b, ratio))
    return BoundSeries(gamma, m, tuple(entries))


def fmt_float(x: float) -> str:
    """Shortest round-trip decimal; integral values drop the '.0'."""
    if x == int(x):
        return str(int(x))
    return repr(x)


def series_csv(series: BoundSeries) -> str:
    """CSV body for a BoundSeries: header then one row per k."""
    lines = ["k,classical,improved,ratio"]
    for e in series.entries:
        lines.append(
            f"{e.k},{fmt_float(e.classical)},{fmt_float(e.improved)},{fmt_float(e.ratio)}"
        )
    return "\n".join(lines) + "\n"
