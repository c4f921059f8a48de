"""Partitions, skew shapes, and exhaustive tableau generators.

Rows are indexed from 1 at the top, columns from 1 at the left, matching
the usual English convention: row 1 is the longest row and columns grow
downward.  A skew shape outer/inner keeps the cells of outer not in inner;
within each row the inner cells form a prefix.

Tableau families generated here:

* row-increasing: rows strictly increase, columns weakly increase, and the
  entries form an initial segment {1, ..., size - k} (k counts repeats);
* increasing: row-increasing with strictly increasing columns;
* standard: increasing with k = 0, every value used exactly once;
* reverse: rows weakly decrease, columns strictly decrease, entries bounded.

Tableaux serialize as rows joined by " / " with inner cells shown as ".",
e.g. ". 2 3 4 / 1 2 3".  Generators emit fillings in lexicographic order
of the row-major entry sequence, which keeps golden outputs stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .qseries import LaurentPoly, gf_from_exponents

FAMILY_RINC = "rinc"
FAMILY_INC = "inc"
FAMILY_SYT = "syt"


class CellOutOfShapeError(ValueError):
    """A cell reference lies outside the shape."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {parts}")
        object.__setattr__(self, "parts", parts)

    @staticmethod
    def try_new(parts: Iterable[int]) -> "Partition | None":
        """Partition from parts, or None when they do not form one."""
        try:
            return Partition(tuple(parts))
        except ValueError:
            return None

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Row length lambda_i (1-based), zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)]
        return Partition(tuple(cols))

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, p in enumerate(self.parts, 1) for j in range(1, p + 1)]

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return Partition()
    return Partition(tuple(int(p) for p in text.replace(" ", "").split(",")))


def hook_length(lam: Partition, cell: tuple[int, int]) -> int:
    """Arm + leg + 1 of a cell in a straight shape."""
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam.part(i)):
        raise CellOutOfShapeError(f"cell {cell} not in {lam}")
    return lam.part(i) + lam.conjugate().part(j) - i - j + 1


def b_statistic(lam: Partition) -> int:
    """Sum of (i - 1) * lambda_i over rows."""
    return sum((i - 1) * p for i, p in enumerate(lam.parts, 1))


def content(cell: tuple[int, int]) -> int:
    """Column minus row index."""
    i, j = cell
    return j - i


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @staticmethod
    def straight(parts: Iterable[int]) -> "SkewShape":
        return SkewShape(Partition(tuple(parts)))

    @staticmethod
    def try_new(outer: Iterable[int], inner: Iterable[int] = ()) -> "SkewShape | None":
        out = Partition.try_new(outer)
        inn = Partition.try_new(inner)
        if out is None or inn is None or not out.contains(inn):
            return None
        return SkewShape(out, inn)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    def row_cols(self, i: int) -> range:
        """Columns of the cells in row i."""
        return range(self.inner.part(i) + 1, self.outer.part(i) + 1)

    def cells(self) -> list[tuple[int, int]]:
        """Cells in row-major order."""
        return [(i, j) for i in range(1, self.n_rows + 1) for j in self.row_cols(i)]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def has_cell(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n_rows and self.inner.part(i) < j <= self.outer.part(i)

    def inner_corners(self) -> list[tuple[int, int]]:
        """Cells of the inner shape with no inner cell to the right or below."""
        return [
            (i, j)
            for i, j in self.inner.cells()
            if self.inner.part(i + 1) < j and self.inner.part(i) == j
        ]

    def addable_cells(self) -> list[tuple[int, int]]:
        """Positions where the outer shape can grow by one box."""
        out = []
        for i in range(1, self.n_rows + 2):
            j = self.outer.part(i) + 1
            if i == 1 or self.outer.part(i - 1) >= j:
                out.append((i, j))
        return out

    def __str__(self) -> str:
        if self.inner.parts:
            return f"{self.outer}/{self.inner}"
        return str(self.outer)


def parse_shape(text: str) -> SkewShape:
    """Parse "(4,3)/(1)" or "(2,2)" into a SkewShape."""
    if "/" in text:
        outer, inner = text.split("/", 1)
        return SkewShape(parse_partition(outer), parse_partition(inner))
    return SkewShape(parse_partition(text))


def two_row_shape(n: int, m: int, r: int = 0) -> "SkewShape | None":
    return SkewShape.try_new((n, m), (r,))


def hook_shape(n: int, m: int, k: int, r: int = 0) -> "SkewShape | None":
    if k < 0:
        return None
    return SkewShape.try_new((n, m) + (1,) * k, (r,))


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape, one entry tuple per row."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != self.shape.n_rows or any(
            len(r) != len(self.shape.row_cols(i)) for i, r in enumerate(rows, 1)
        ):
            raise ValueError(f"row lengths {rows} do not match shape {self.shape}")
        object.__setattr__(self, "rows", rows)

    def entry(self, i: int, j: int) -> int:
        if not self.shape.has_cell(i, j):
            raise CellOutOfShapeError(f"cell {(i, j)} not in {self.shape}")
        return self.rows[i - 1][j - 1 - self.shape.inner.part(i)]

    @property
    def size(self) -> int:
        return self.shape.size

    @property
    def max_value(self) -> int:
        return max((max(r) for r in self.rows if r), default=0)

    def excess(self) -> int:
        """Number of cells minus the largest entry."""
        return self.size - self.max_value

    def value_rows(self, v: int) -> set[int]:
        """Rows (1-based) in which the value v occurs."""
        return {i for i, r in enumerate(self.rows, 1) if v in r}

    def to_string(self) -> str:
        parts = []
        for i, r in enumerate(self.rows, 1):
            cells = ["."] * self.shape.inner.part(i) + [str(v) for v in r]
            parts.append(" ".join(cells))
        return " / ".join(parts)

    @staticmethod
    def from_string(text: str) -> "Tableau":
        outer, inner, rows = [], [], []
        for chunk in text.split("/"):
            symbols = chunk.split()
            dots = 0
            while dots < len(symbols) and symbols[dots] == ".":
                dots += 1
            entries = tuple(int(s) for s in symbols[dots:])
            inner.append(dots)
            outer.append(dots + len(entries))
            rows.append(entries)
        shape = SkewShape(Partition(tuple(outer)), Partition(tuple(inner)))
        return Tableau(shape, tuple(rows))

    def __str__(self) -> str:
        return self.to_string()


# -- family predicates -------------------------------------------------------


def _rows_ok(t: Tableau) -> bool:
    return all(all(r[a] < r[a + 1] for a in range(len(r) - 1)) for r in t.rows)


def _cols_ok(t: Tableau, strict: bool) -> bool:
    for i in range(2, t.shape.n_rows + 1):
        for j in t.shape.row_cols(i):
            if t.shape.has_cell(i - 1, j):
                above, here = t.entry(i - 1, j), t.entry(i, j)
                if above > here or (strict and above == here):
                    return False
    return True


def _initial_segment(t: Tableau) -> bool:
    values = {v for r in t.rows for v in r}
    return values == set(range(1, t.max_value + 1)) if values else True


def is_row_increasing(t: Tableau, k: int | None = None) -> bool:
    ok = _rows_ok(t) and _cols_ok(t, strict=False) and _initial_segment(t)
    return ok and (k is None or t.excess() == k)


def is_increasing(t: Tableau, k: int | None = None) -> bool:
    ok = _rows_ok(t) and _cols_ok(t, strict=True) and _initial_segment(t)
    return ok and (k is None or t.excess() == k)


def is_standard(t: Tableau) -> bool:
    return is_increasing(t, k=0)


def is_reverse_tableau(t: Tableau, bound: int) -> bool:
    rows_ok = all(all(r[a] >= r[a + 1] for a in range(len(r) - 1)) for r in t.rows)
    cols_ok = True
    for i in range(2, t.shape.n_rows + 1):
        for j in t.shape.row_cols(i):
            if t.shape.has_cell(i - 1, j) and t.entry(i - 1, j) <= t.entry(i, j):
                cols_ok = False
    in_range = all(1 <= v <= bound for r in t.rows for v in r)
    return rows_ok and cols_ok and in_range


# -- generators --------------------------------------------------------------


def _backtrack(shape: SkewShape, max_value: int, strict_cols: bool, distinct: bool):
    """Yield entry grids (list of row tuples) in lexicographic row-major order."""
    cells = shape.cells()
    total = len(cells)
    if max_value < 0 or (distinct and max_value != total):
        return
    if total == 0:
        if max_value == 0:
            yield tuple(() for _ in range(shape.n_rows))
        return
    inner = shape.inner
    grid = {c: 0 for c in cells}
    used = [0] * (max_value + 1)
    state = {"distinct_used": 0}

    def rec(idx: int):
        if idx == total:
            if state["distinct_used"] == max_value:
                yield tuple(
                    tuple(grid[(i, j)] for j in shape.row_cols(i))
                    for i in range(1, shape.n_rows + 1)
                )
            return
        if max_value - state["distinct_used"] > total - idx:
            return
        i, j = cells[idx]
        lo = 1
        if j - 1 > inner.part(i):
            lo = grid[(i, j - 1)] + 1
        if shape.has_cell(i - 1, j):
            above = grid[(i - 1, j)]
            lo = max(lo, above + 1 if strict_cols else above)
        for v in range(lo, max_value + 1):
            if distinct and used[v]:
                continue
            grid[(i, j)] = v
            used[v] += 1
            if used[v] == 1:
                state["distinct_used"] += 1
            yield from rec(idx + 1)
            used[v] -= 1
            if used[v] == 0:
                state["distinct_used"] -= 1
        grid[(i, j)] = 0

    yield from rec(0)


def row_increasing_tableaux(shape: SkewShape, k: int) -> list[Tableau]:
    """All row-increasing fillings of the shape with largest entry size - k."""
    return [Tableau(shape, rows) for rows in _backtrack(shape, shape.size - k, False, False)]


def increasing_tableaux(shape: SkewShape, k: int) -> list[Tableau]:
    """The strictly-column subfamily with largest entry size - k."""
    return [Tableau(shape, rows) for rows in _backtrack(shape, shape.size - k, True, False)]


def standard_tableaux(shape: SkewShape) -> list[Tableau]:
    """All standard fillings: each of 1..size exactly once."""
    return [Tableau(shape, rows) for rows in _backtrack(shape, shape.size, True, True)]


def generate_family(family: str, shape: SkewShape, k: int = 0) -> list[Tableau]:
    family = family.lower()
    if family == FAMILY_RINC:
        return row_increasing_tableaux(shape, k)
    if family == FAMILY_INC:
        return increasing_tableaux(shape, k)
    if family == FAMILY_SYT:
        if k != 0:
            raise ValueError("standard tableaux require k = 0")
        return standard_tableaux(shape)
    raise ValueError(f"unknown family {family!r}")


def reverse_tableaux(mu: Partition, bound: int) -> list[Tableau]:
    """All fillings of mu with weakly decreasing rows, strictly decreasing
    columns, and entries in 1..bound."""
    shape = SkewShape(mu)
    cells = shape.cells()
    if bound < len(mu):
        return []
    out: list[Tableau] = []
    grid = {c: 0 for c in cells}

    def rec(idx: int):
        if idx == len(cells):
            rows = tuple(tuple(grid[(i, j)] for j in shape.row_cols(i)) for i in range(1, len(mu) + 1))
            out.append(Tableau(shape, rows))
            return
        i, j = cells[idx]
        hi = bound
        if j > 1:
            hi = min(hi, grid[(i, j - 1)])
        if i > 1:
            hi = min(hi, grid[(i - 1, j)] - 1)
        for v in range(1, hi + 1):
            grid[(i, j)] = v
            rec(idx + 1)

    rec(0)
    return out


# -- statistics --------------------------------------------------------------


def descent_set(t: Tableau) -> set[int]:
    """Values i with some occurrence of i strictly above an occurrence of i+1."""
    out = set()
    for v in range(1, t.max_value):
        rows_v, rows_next = t.value_rows(v), t.value_rows(v + 1)
        if rows_v and rows_next and min(rows_v) < max(rows_next):
            out.add(v)
    return out


def ascent_set(t: Tableau) -> set[int]:
    """Values i with some occurrence of i strictly below an occurrence of i+1."""
    out = set()
    for v in range(1, t.max_value):
        rows_v, rows_next = t.value_rows(v), t.value_rows(v + 1)
        if rows_v and rows_next and max(rows_v) > min(rows_next):
            out.add(v)
    return out


def major_index(t: Tableau) -> int:
    return sum(descent_set(t))


def amajor_index(t: Tableau) -> int:
    return sum(ascent_set(t))


def stat_gf(family: str, shape: SkewShape, k: int, stat: str = "maj") -> LaurentPoly:
    """Sum of q^stat over the family, stat in {"maj", "amaj"}."""
    if stat == "maj":
        f = major_index
    elif stat == "amaj":
        f = amajor_index
    else:
        raise ValueError(f"unknown statistic {stat!r}")
    return gf_from_exponents(f(t) for t in generate_family(family, shape, k))
