"""Two-phase cover construction: greedy max-gain selection, then patching.

The greedy phase repeatedly takes the row covering the most still-uncovered
columns (ties to the lowest row index, so traces are reproducible).  The
patch phase walks the remaining uncovered columns in order and adds, for
each, the lowest-index fresh row containing it, crediting everything that
row covers.  Gains are recomputed against the uncovered bitmask each step;
no priority structure, desk-scale instances don't need one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance, density


class NoProgress(RuntimeError):
    """No row covers any uncovered column (impossible for valid instances)."""


class Uncoverable(RuntimeError):
    """An uncovered column has no unselected row with a 1 (impossible for
    valid instances)."""


@dataclass(frozen=True)
class CoverTrace:
    """Selections and per-step uncovered counts of one solver run.

    uncovered_counts[k] is the number of uncovered columns after k greedy
    steps (so [0] == n); patch_rows were added by the completion phase.
    """

    greedy_rows: tuple[int, ...]
    uncovered_counts: tuple[int, ...]
    patch_rows: tuple[int, ...]

    @property
    def total_size(self) -> int:
        return len(self.greedy_rows) + len(self.patch_rows)


def gain(inst: Instance, row: int, uncovered: int) -> int:
    """How many uncovered columns this row would newly cover."""
    if not 0 <= row < inst.m:
        raise IndexError(f"row {row} out of range for m={inst.m}")
    return (inst.rows[row] & uncovered).bit_count()


def greedy_step(inst: Instance, uncovered: int) -> int:
    """Row with maximal gain against `uncovered`; ties to lowest index.

    Rows already selected earlier have gain 0 (everything they contain is
    covered), so they can never win while progress is possible.
    """
    best_row = -1
    best_gain = 0
    for i, r in enumerate(inst.rows):
        g = (r & uncovered).bit_count()
        if g > best_gain:
            best_gain = g
            best_row = i
    if best_row < 0:
        raise NoProgress("every row has gain 0 against a nonempty uncovered set")
    return best_row


def run_greedy(inst: Instance, k_max: int | None = None) -> CoverTrace:
    """Greedy phase only: run until covered, or until k_max steps."""
    if k_max is not None and k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    uncovered = inst.full_mask
    selected: list[int] = []
    counts = [inst.n]
    while uncovered and (k_max is None or len(selected) < k_max):
        r = greedy_step(inst, uncovered)
        selected.append(r)
        uncovered &= ~inst.rows[r]
        counts.append(uncovered.bit_count())
    return CoverTrace(tuple(selected), tuple(counts), ())


def complete_cover(inst: Instance, trace: CoverTrace) -> CoverTrace:
    """Patch phase: cover each remaining column with a fresh row.

    Scans uncovered columns in ascending index; each appended row is the
    lowest-index not-yet-selected row with a 1 there, and everything it
    covers is credited immediately, so at most u_K rows are added.
    """
    if trace.patch_rows:
        raise ValueError("trace was already patched")
    covered = 0
    for r in trace.greedy_rows:
        covered |= inst.rows[r]
    uncovered = inst.full_mask & ~covered
    if not uncovered:
        return trace
    taken = set(trace.greedy_rows)
    patch: list[int] = []
    for j in range(inst.n):
        bit = 1 << j
        if not uncovered & bit:
            continue
        for i, r in enumerate(inst.rows):
            if r & bit and i not in taken:
                taken.add(i)
                patch.append(i)
                uncovered &= ~r
                break
        else:
            raise Uncoverable(f"no unselected row covers column {j + 1}")
    return CoverTrace(trace.greedy_rows, trace.uncovered_counts, tuple(patch))


def verify_cover(inst: Instance, rows) -> bool:
    """True iff the union of the given rows covers every column."""
    mask = 0
    for i in rows:
        if not 0 <= i < inst.m:
            raise IndexError(f"row {i} out of range for m={inst.m}")
        mask |= inst.rows[i]
    return mask == inst.full_mask


def trace_document(inst: Instance, trace: CoverTrace) -> dict:
    """Machine-readable trace object, field order fixed for stable output."""
    return {
        "m": inst.m,
        "n": inst.n,
        "gamma_effective": density(inst).gamma_effective,
        "greedy_rows": list(trace.greedy_rows),
        "uncovered_counts": list(trace.uncovered_counts),
        "patch_rows": list(trace.patch_rows),
        "total_size": trace.total_size,
    }
