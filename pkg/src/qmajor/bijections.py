"""Statistic-preserving bijections between paths and tableau families.

Every map here comes with an inverse and rejects inputs outside its domain
with NotInFamilyError, so round-trip tests can exercise the pairs on
exhaustively generated families.  The maps:

* tableau_to_path / path_to_tableau: a two-row row-increasing tableau and
  a Schroeder path determine each other by reading values in increasing
  order; a value only in row 1 is an east step, only in row 2 a north
  step, in both rows a diagonal step.
* inc_to_hook_syt / hook_syt_to_inc: peel the doubled values out of an
  increasing tableau, leaving a standard tableau on a hook-plus-two-rows
  shape; preserves the descent set.
* rinc_to_inc / inc_to_rinc: delete the first column with equal entries
  from a row-increasing rectangle, producing a strictly increasing one;
  preserves the descent set.
* jdt_in / jdt_out: single jeu de taquin slides into an inner corner and
  out of an addable cell.
* rectify_pair / unrectify_pair: two inward slides removing a two-box
  inner column, landing in one of four straight shapes; preserves maj.
* rinc_to_syt / syt_to_rinc: the composite map from row-increasing
  rectangles to standard tableaux of the padded shape with a 1x2 inner
  column removed.
"""

from __future__ import annotations

from .paths import DIAG, EAST, NORTH, LatticePath
from .tableaux import (
    Partition,
    SkewShape,
    Tableau,
    is_increasing,
    is_row_increasing,
    is_standard,
)


class NotInFamilyError(ValueError):
    """Input fails the domain invariants of a bijection."""


class InvalidHoleError(ValueError):
    """A slide was requested at a cell that cannot host a hole."""


def _two_row_params(t: Tableau) -> tuple[int, int, int]:
    """(n, m, r) for a tableau of shape (n, m)/(r); raises otherwise."""
    outer, inner = t.shape.outer, t.shape.inner
    if len(outer) > 2 or len(inner) > 1:
        raise NotInFamilyError(f"not a two-row shape: {t.shape}")
    return outer.part(1), outer.part(2), inner.part(1)


# -- value-class map between tableaux and paths ------------------------------


def tableau_to_path(t: Tableau) -> LatticePath:
    """Read values 1..max in order; rows containing each value pick the step."""
    n, m, r = _two_row_params(t)
    if not is_row_increasing(t):
        raise NotInFamilyError(f"not row-increasing: {t}")
    steps = []
    for v in range(1, t.max_value + 1):
        rows = t.value_rows(v)
        if rows == {1}:
            steps.append(EAST)
        elif rows == {2}:
            steps.append(NORTH)
        elif rows == {1, 2}:
            steps.append(DIAG)
        else:
            raise NotInFamilyError(f"value {v} missing from {t}")
    return LatticePath(r, tuple(steps))


def path_to_tableau(path: LatticePath) -> Tableau:
    """Replay steps left to right, writing step index v into row 1 (east),
    row 2 (north), or both rows (diagonal)."""
    row1: list[int] = []
    row2: list[int] = []
    for v, s in enumerate(path.steps, start=1):
        if s == EAST:
            row1.append(v)
        elif s == NORTH:
            row2.append(v)
        else:
            row1.append(v)
            row2.append(v)
    r = path.start_x
    n, m = r + len(row1), len(row2)
    shape = SkewShape(Partition((n, m)), Partition((r,)))
    rows = (tuple(row1), tuple(row2))
    return Tableau(shape, rows[: shape.n_rows])


# -- doubled-value extraction -------------------------------------------------


def inc_to_hook_syt(t: Tableau) -> Tableau:
    """Move the doubled values of an increasing two-row tableau into a column.

    Let A be the set of values appearing twice and B the set of values
    immediately right of an A-value in row 2.  Deleting A from row 1 and B
    from row 2, then appending B below row 2 in increasing order, yields a
    standard tableau.  The target has a k-cell leg when the last row-2
    entry is not doubled and a (k-1)-cell leg otherwise.
    """
    n, m, r = _two_row_params(t)
    k = t.excess()
    if not is_increasing(t, k):
        raise NotInFamilyError(f"not an increasing tableau: {t}")
    row1 = list(t.rows[0])
    row2 = list(t.rows[1]) if t.shape.n_rows == 2 else []
    doubled = {v for v in range(1, t.max_value + 1) if len(t.value_rows(v)) == 2}
    moved = {row2[j + 1] for j in range(len(row2) - 1) if row2[j] in doubled}
    new_row1 = tuple(v for v in row1 if v not in doubled)
    new_row2 = tuple(v for v in row2 if v not in moved)
    leg = tuple(sorted(moved))
    if row2 and row2[-1] in doubled:
        outer = Partition((n - k, m - k + 1) + (1,) * (k - 1))
    else:
        outer = Partition((n - k, m - k) + (1,) * k)
    shape = SkewShape(outer, Partition((r,)))
    rows = ((new_row1, new_row2) + tuple((v,) for v in leg))[: shape.n_rows]
    image = Tableau(shape, rows)
    if not is_standard(image):
        raise NotInFamilyError(f"extraction of {t} is not standard: {image}")
    return image


def hook_syt_to_inc(s: Tableau, n: int, m: int, k: int) -> Tableau:
    """Inverse of inc_to_hook_syt for the family with parameters (n, m, k)."""
    if not is_standard(s):
        raise NotInFamilyError(f"not standard: {s}")
    outer, inner = s.shape.outer, s.shape.inner
    r = inner.part(1)
    if len(inner) > 1:
        raise NotInFamilyError(f"inner shape must be a single row: {s.shape}")
    case_full = Partition.try_new((n - k, m - k) + (1,) * k)
    case_short = Partition.try_new((n - k, m - k + 1) + (1,) * max(k - 1, 0))
    leg_entries = [s.rows[i][0] for i in range(2, s.shape.n_rows)]
    row1 = list(s.rows[0])
    row2 = list(s.rows[1]) if s.shape.n_rows >= 2 else []
    merged_row2 = sorted(row2 + leg_entries)
    moved = set(leg_entries)
    doubled = {merged_row2[j - 1] for j in range(1, len(merged_row2)) if merged_row2[j] in moved}
    if outer == case_full and k >= 0:
        new_row1 = sorted(row1 + sorted(doubled))
    elif outer == case_short and k >= 1:
        new_row1 = sorted(row1 + sorted(doubled) + [merged_row2[-1]])
    else:
        raise NotInFamilyError(f"shape {s.shape} not in the image for (n,m,k)=({n},{m},{k})")
    shape = SkewShape(Partition((n, m)), Partition((r,)))
    rows = (tuple(new_row1), tuple(merged_row2)) if m else (tuple(new_row1),)
    t = Tableau(shape, rows)
    if not is_increasing(t, k):
        raise NotInFamilyError(f"merge of {s} is not increasing: {t}")
    return t


# -- repair of the first doubled column --------------------------------------


def rinc_to_inc(t: Tableau) -> Tableau:
    """Identity on increasing tableaux; otherwise delete the topmost entry of
    the leftmost column with equal entries and close the gap in row 2."""
    n, m, r = _two_row_params(t)
    if r != 0:
        raise NotInFamilyError(f"rectangular shape required: {t.shape}")
    k = t.excess()
    if not is_row_increasing(t, k):
        raise NotInFamilyError(f"not row-increasing: {t}")
    if is_increasing(t, k):
        return t
    row1, row2 = list(t.rows[0]), list(t.rows[1])
    col = next(j for j in range(len(row2)) if row1[j] == row2[j])
    del row2[col]
    shape = SkewShape(Partition((n, m - 1)))
    rows = (tuple(row1), tuple(row2)) if row2 else (tuple(row1),)
    return Tableau(shape, rows)


def inc_to_rinc(s: Tableau, m: int) -> Tableau:
    """Inverse of rinc_to_inc onto row-increasing rectangles with row-2
    length m: reinsert a doubled entry at the last repairable column."""
    n, m_s, r = _two_row_params(s)
    if r != 0:
        raise NotInFamilyError(f"rectangular shape required: {s.shape}")
    if not is_increasing(s):
        raise NotInFamilyError(f"not increasing: {s}")
    if m_s == m:
        return s
    if m_s != m - 1:
        raise NotInFamilyError(f"row 2 of {s.shape} cannot extend to length {m}")
    row1 = list(s.rows[0])
    row2 = list(s.rows[1]) if s.shape.n_rows == 2 else []
    col = None
    for i in range(m - 1, -1, -1):
        left = row2[i - 1] if i >= 1 else 0
        if left == row1[i] - 1:
            col = i
            break
    if col is None:
        raise NotInFamilyError(f"no insertion column in {s}")
    row2.insert(col, row1[col])
    t = Tableau(SkewShape(Partition((n, m))), (tuple(row1), tuple(row2)))
    if not is_row_increasing(t):
        raise NotInFamilyError(f"insertion into {s} is not row-increasing: {t}")
    return t


# -- jeu de taquin slides ------------------------------------------------------


def _entries(t: Tableau) -> dict[tuple[int, int], int]:
    return {(i, j): t.entry(i, j) for i, j in t.shape.cells()}


def _rebuild(outer: Partition, inner: Partition, entries: dict) -> Tableau:
    shape = SkewShape(outer, inner)
    rows = tuple(tuple(entries[(i, j)] for j in shape.row_cols(i)) for i in range(1, shape.n_rows + 1))
    return Tableau(shape, rows)


def _shrink(parts: Partition, row: int) -> Partition:
    vec = list(parts.parts)
    vec[row - 1] -= 1
    return Partition(tuple(vec))


def _grow(parts: Partition, row: int) -> Partition:
    vec = list(parts.parts)
    while len(vec) < row:
        vec.append(0)
    vec[row - 1] += 1
    return Partition(tuple(vec))


def jdt_in(t: Tableau, hole: tuple[int, int]) -> Tableau:
    """Slide into an inner corner: the smaller of the right/below neighbours
    repeatedly fills the hole until it leaves the shape."""
    if hole not in t.shape.inner_corners():
        raise InvalidHoleError(f"{hole} is not an inner corner of {t.shape}")
    entries = _entries(t)
    i, j = hole
    while True:
        right = (i, j + 1) if t.shape.has_cell(i, j + 1) else None
        below = (i + 1, j) if t.shape.has_cell(i + 1, j) else None
        if right and below:
            source = right if entries[right] < entries[below] else below
        else:
            source = right or below
        if source is None:
            break
        entries[(i, j)] = entries.pop(source)
        i, j = source
    return _rebuild(_shrink(t.shape.outer, i), _shrink(t.shape.inner, hole[0]), entries)


def jdt_out(t: Tableau, hole: tuple[int, int]) -> Tableau:
    """Slide out of an addable cell: the larger of the left/above neighbours
    repeatedly fills the hole until it joins the inner shape."""
    if hole not in t.shape.addable_cells():
        raise InvalidHoleError(f"{hole} is not addable to {t.shape}")
    entries = _entries(t)
    i, j = hole
    while True:
        left = (i, j - 1) if t.shape.has_cell(i, j - 1) else None
        above = (i - 1, j) if t.shape.has_cell(i - 1, j) else None
        if left and above:
            source = left if entries[left] > entries[above] else above
        else:
            source = left or above
        if source is None:
            break
        entries[(i, j)] = entries.pop(source)
        i, j = source
    return _rebuild(_grow(t.shape.outer, hole[0]), _grow(t.shape.inner, i), entries)


# -- rectification of the two-box inner column --------------------------------


def _padded_params(shape: SkewShape) -> tuple[int, int, int]:
    """(n, m, k) with shape == (n-k+1, m-k+1, 1^k)/(1, 1); raises otherwise."""
    outer, inner = shape.outer, shape.inner
    if inner != Partition((1, 1)):
        raise NotInFamilyError(f"inner shape must be (1,1): {shape}")
    if len(outer) < 2 or any(p != 1 for p in outer.parts[2:]):
        raise NotInFamilyError(f"outer shape must be two rows plus a leg: {shape}")
    k = len(outer) - 2
    return outer.part(1) + k - 1, outer.part(2) + k - 1, k


def rectify_pair(t: Tableau) -> Tableau:
    """Slide the two inner boxes away: first at (2,1), then at (1,1).

    Lands in one of the four straight shapes obtained from the outer shape
    by removing the end of row 1 or row 2 and/or up to two leg boxes, and
    preserves the major index.
    """
    _padded_params(t.shape)
    if not is_standard(t):
        raise NotInFamilyError(f"not standard: {t}")
    return jdt_in(jdt_in(t, (2, 1)), (1, 1))


def unrectify_pair(s: Tableau, n: int, m: int, k: int) -> Tableau:
    """Inverse of rectify_pair toward the family with parameters (n, m, k):
    slide out at the two cells the forward slides removed, in reverse order."""
    if not is_standard(s) or s.shape.inner.parts:
        raise NotInFamilyError(f"not a straight standard tableau: {s}")
    n1, m1 = n - k + 1, m - k + 1
    outer = s.shape.outer
    cases = [
        (0, (n1 - 1, m1 - 1) + (1,) * k, (1, n1), (2, m1)),
        (1, (n1 - 1, m1) + (1,) * (k - 1), (1, n1), (k + 2, 1)),
        (1, (n1, m1 - 1) + (1,) * (k - 1), (2, m1), (k + 2, 1)),
        (2, (n1, m1) + (1,) * (k - 2), (k + 1, 1), (k + 2, 1)),
    ]
    for k_min, parts, first, second in cases:
        if k < k_min:
            continue
        target = Partition.try_new(parts)
        if target is not None and outer == target:
            out = jdt_out(jdt_out(s, first), second)
            expected = SkewShape(Partition((n1, m1) + (1,) * k), Partition((1, 1)))
            if out.shape != expected:
                raise NotInFamilyError(f"slides from {s} land in {out.shape}, not {expected}")
            return out
    raise NotInFamilyError(f"shape {s.shape} not in the image for (n,m,k)=({n},{m},{k})")


# -- the composite map ---------------------------------------------------------


def rinc_to_syt(t: Tableau) -> Tableau:
    """Map a row-increasing rectangle with excess k to a standard tableau of
    the padded shape (n-k+1, m-k+1, 1^k)/(1,1), preserving the major index."""
    n, m, r = _two_row_params(t)
    if r != 0:
        raise NotInFamilyError(f"rectangular shape required: {t.shape}")
    k = t.excess()
    if not is_row_increasing(t, k):
        raise NotInFamilyError(f"not row-increasing: {t}")
    strict = rinc_to_inc(t)
    hook = inc_to_hook_syt(strict)
    return unrectify_pair(hook, n, m, k)


def syt_to_rinc(s: Tableau) -> Tableau:
    """Inverse of rinc_to_syt."""
    n, m, k = _padded_params(s.shape)
    straight = rectify_pair(s)
    first = s.shape.outer.part(1)
    if straight.shape.outer.part(1) == first:
        inc = hook_syt_to_inc(straight, n, m - 1, k - 1)
    else:
        inc = hook_syt_to_inc(straight, n, m, k)
    return inc_to_rinc(inc, m)
