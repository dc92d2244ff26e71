"""Binary incidence matrices for set cover.

Rows are subsets, columns are elements.  Each row is stored as an int
bitmask with bit j set iff the row contains a 1 in column j, so unions,
intersections and popcounts are single int operations.
"""

from __future__ import annotations

from dataclasses import dataclass


class InstanceError(ValueError):
    """Base class for instance construction and parsing failures."""


class BadHeader(InstanceError):
    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: bad header: {detail}")
        self.line = line


class BadRowLength(InstanceError):
    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: {detail}")
        self.line = line


class BadChar(InstanceError):
    def __init__(self, line: int, char: str):
        super().__init__(f"line {line}: invalid character {char!r}, expected '0' or '1'")
        self.line = line


class ZeroColumn(InstanceError):
    """Some element belongs to no subset, so no cover exists.

    `column` is 1-based, matching the positional file format.
    """

    def __init__(self, column: int):
        super().__init__(f"column {column} contains no 1: element cannot be covered")
        self.column = column


@dataclass(frozen=True)
class Instance:
    """An m x n (0,1)-matrix; immutable, safe to share across workers.

    rows[i] is the bitmask of row i (bit j <-> column j).  Construction
    rejects matrices with an all-zero column: the subset family must
    cover every element.
    """

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InstanceError(f"need m >= 1 and n >= 1, got m={self.m} n={self.n}")
        if len(self.rows) != self.m:
            raise InstanceError(f"expected {self.m} rows, got {len(self.rows)}")
        full = self.full_mask
        union = 0
        for i, r in enumerate(self.rows):
            if r < 0 or r > full:
                raise InstanceError(f"row {i} has bits outside the {self.n} columns")
            union |= r
        if union != full:
            # lowest uncovered column, reported 1-based
            missing = (~union & full)
            raise ZeroColumn(_lowest_bit_index(missing) + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def from_bits(cls, bits) -> "Instance":
        """Build from a sequence of equal-length 0/1 sequences (row major)."""
        grid = [list(row) for row in bits]
        if not grid:
            raise InstanceError("need at least one row")
        n = len(grid[0])
        rows = []
        for row in grid:
            if len(row) != n:
                raise InstanceError("ragged rows")
            mask = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise InstanceError(f"cell value {v!r} is not 0/1")
                mask |= v << j
            rows.append(mask)
        return cls(len(grid), n, tuple(rows))


@dataclass(frozen=True)
class DensitySpec:
    """Minimum column density of an instance.

    c_effective is the smallest number of 1s in any column and
    gamma_effective = c_effective / m.  gamma_nominal carries the
    requested density when one exists (generators); when measured from
    data it equals gamma_effective.
    """

    gamma_nominal: float
    c_effective: int
    gamma_effective: float


def column_counts(inst: Instance) -> list[int]:
    """Number of 1s in each column, index-aligned with columns."""
    return [sum((r >> j) & 1 for r in inst.rows) for j in range(inst.n)]


def density(inst: Instance) -> DensitySpec:
    """Measure the effective minimum column density of `inst`."""
    c = min(column_counts(inst))
    if c == 0:
        # unreachable through the Instance constructor, kept as a guard
        raise ZeroColumn(column_counts(inst).index(0) + 1)
    g = c / inst.m
    return DensitySpec(gamma_nominal=g, c_effective=c, gamma_effective=g)


def parse_instance(text: str) -> Instance:
    """Parse the plain-text instance format.

    First line "m n", then m lines of exactly n characters from {0,1}.
    LF or CRLF accepted; trailing newline optional.  Errors carry the
    offending 1-based line number (ZeroColumn carries the column).
    """
    lines = [ln[:-1] if ln.endswith("\r") else ln for ln in text.split("\n")]
    if not lines or not lines[0].strip():
        raise BadHeader(1, "missing 'm n' header")
    parts = lines[0].split()
    if len(parts) != 2:
        raise BadHeader(1, f"expected two fields 'm n', got {lines[0]!r}")
    try:
        m, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise BadHeader(1, f"non-integer dimensions {lines[0]!r}") from None
    if m < 1 or n < 1:
        raise BadHeader(1, f"dimensions must be positive, got m={m} n={n}")

    rows = []
    for i in range(m):
        lineno = i + 2
        if i + 1 >= len(lines):
            raise BadRowLength(lineno, f"expected {m} rows, file ends after {i}")
        row = lines[i + 1]
        if len(row) != n:
            raise BadRowLength(lineno, f"row has {len(row)} characters, expected {n}")
        mask = 0
        for j, ch in enumerate(row):
            if ch == "1":
                mask |= 1 << j
            elif ch != "0":
                raise BadChar(lineno, ch)
        rows.append(mask)

    for extra in range(m + 1, len(lines)):
        if lines[extra] != "":
            raise BadRowLength(extra + 1, f"unexpected content after {m} rows")

    return Instance(m, n, tuple(rows))


def write_instance(inst: Instance) -> str:
    """Render the canonical text form (LF line endings, trailing LF)."""
    out = [f"{inst.m} {inst.n}"]
    for r in inst.rows:
        out.append("".join("1" if (r >> j) & 1 else "0" for j in range(inst.n)))
    return "\n".join(out) + "\n"


def _lowest_bit_index(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
