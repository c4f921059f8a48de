"""Verification sweeps: every closed form against brute-force enumeration.

A sweep runs a selection of named checks over a bounded parameter grid and
produces one CheckRecord per (check, parameter tuple).  Records carry the
two rendered polynomials being compared and a status of "match",
"mismatch" or "skipped-empty"; record order is lexicographic in the grid
and independent of the worker count, so identical configurations produce
identical reports.  Timing is opt-in (records carry millis = 0 otherwise)
to keep reports byte-stable.

Checks are registered in CHECKS; run_sweep drives them either serially or
over a process pool.  Bijection checks verify injectivity, image equality
and elementwise statistic preservation on top of the generating-function
comparison.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import bijections, formulas, paths, tableaux
from .paths import (
    ORDER_EDN,
    ORDER_NDE,
    ORDERS_E_ABOVE_N,
    ORDERS_E_BELOW_N,
    StepOrder,
)
from .qseries import LaurentPoly, gf_from_exponents
from .tableaux import Partition, SkewShape, hook_shape, parse_partition, two_row_shape

STATUS_MATCH = "match"
STATUS_MISMATCH = "mismatch"
STATUS_SKIPPED = "skipped-empty"


class BudgetExceededError(RuntimeError):
    """An instance is larger than the configured enumeration budget."""


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 6
    max_r: int | None = None
    max_m: int | None = None
    max_k: int | None = None
    max_cells: int = 12
    max_hook: int = 10
    max_partition_size: int = 8
    max_partition_rows: int = 4
    max_inner_size: int = 4
    checks: tuple[str, ...] = ("all",)
    order: StepOrder | None = None
    fmt: str = "table"
    jobs: int = 1
    timing: bool = False

    def __post_init__(self):
        bounds = (
            self.max_n,
            self.max_cells,
            self.max_hook,
            self.max_partition_size,
            self.max_partition_rows,
            self.max_inner_size,
        )
        if any(b < 0 for b in bounds):
            raise ValueError("bounds must be nonnegative")
        for b in (self.max_r, self.max_m, self.max_k):
            if b is not None and b < 0:
                raise ValueError("bounds must be nonnegative")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.fmt not in ("table", "json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")

    @property
    def r_bound(self) -> int:
        return self.max_n if self.max_r is None else self.max_r

    @property
    def m_bound(self) -> int:
        return self.max_n if self.max_m is None else self.max_m

    @property
    def k_bound(self) -> int:
        return self.max_n if self.max_k is None else self.max_k


@dataclass(frozen=True)
class CheckRecord:
    check: str
    params: dict
    enumerated: str
    closed_form: str
    status: str
    millis: int

    def as_json_obj(self) -> dict:
        keys = ("r", "n", "m", "k")
        params = {key: self.params.get(key) for key in keys}
        for extra in ("lam", "mu", "bound"):
            if extra in self.params:
                params[extra] = self.params[extra]
        return {
            "check": self.check,
            "params": params,
            "enumerated": self.enumerated,
            "closed_form": self.closed_form,
            "status": self.status,
            "millis": self.millis,
        }


# -- parameter grids -----------------------------------------------------------


def _grid_rnmk(cfg: SweepConfig) -> Iterator[dict]:
    for n in range(1, cfg.max_n + 1):
        for r in range(0, min(n - 1, cfg.r_bound) + 1):
            if n - r > cfg.max_cells:
                continue
            for m in range(0, min(n, cfg.m_bound) + 1):
                if n + m - r > cfg.max_cells:
                    continue
                for k in range(0, min(m, cfg.k_bound) + 1):
                    yield {"r": r, "n": n, "m": m, "k": k}


def _grid_nmk(cfg: SweepConfig) -> Iterator[dict]:
    for params in _grid_rnmk(cfg):
        if params["r"] == 0:
            yield {"n": params["n"], "m": params["m"], "k": params["k"]}


def _grid_rnm(cfg: SweepConfig) -> Iterator[dict]:
    for params in _grid_rnmk(cfg):
        if params["k"] == 0:
            yield {"r": params["r"], "n": params["n"], "m": params["m"]}


def _grid_nm(cfg: SweepConfig) -> Iterator[dict]:
    for n in range(1, cfg.max_n + 1):
        for m in range(0, min(n, cfg.m_bound) + 1):
            if n + m <= cfg.max_cells:
                yield {"n": n, "m": m}


def _grid_hooks(cfg: SweepConfig) -> Iterator[dict]:
    cap = cfg.max_hook
    for n in range(1, cap + 1):
        for m in range(0, min(n, cap - n) + 1):
            for k in range(0, cap - n - m + 1):
                for r in range(0, min(n, cfg.r_bound) + 1):
                    yield {"r": r, "n": n, "m": m, "k": k}


def _grid_hooks_straight(cfg: SweepConfig) -> Iterator[dict]:
    for params in _grid_hooks(cfg):
        if params["r"] == 0:
            yield {"n": params["n"], "m": params["m"], "k": params["k"]}


def _partitions_up_to(max_size: int, max_rows: int) -> list[Partition]:
    out: list[tuple[int, ...]] = [()]

    def rec(prefix: tuple[int, ...], remaining: int, largest: int):
        for p in range(min(remaining, largest), 0, -1):
            cur = prefix + (p,)
            out.append(cur)
            if len(cur) < max_rows:
                rec(cur, remaining - p, p)

    rec((), max_size, max_size)
    return [Partition(p) for p in sorted(out)]


def _grid_partition_pairs(cfg: SweepConfig) -> Iterator[dict]:
    size = min(cfg.max_partition_size, cfg.max_cells)
    for lam in _partitions_up_to(size, cfg.max_partition_rows):
        if not lam.parts:
            continue
        for mu in _partitions_up_to(cfg.max_inner_size, len(lam)):
            if lam.contains(mu):
                yield {"lam": str(lam), "mu": str(mu)}


def _grid_partitions(cfg: SweepConfig) -> Iterator[dict]:
    size = min(cfg.max_partition_size, cfg.max_cells)
    for lam in _partitions_up_to(size, cfg.max_partition_rows):
        if lam.parts:
            yield {"lam": str(lam)}


# -- check runners ---------------------------------------------------------------


def _compare(enum: LaurentPoly, closed: LaurentPoly) -> tuple[str, str, str]:
    a, b = enum.canonical_str(), closed.canonical_str()
    return (a, b, STATUS_MATCH if a == b else STATUS_MISMATCH)


def _skip_or_mismatch(actually_empty: bool) -> tuple[str, str, str]:
    return ("0", "0", STATUS_SKIPPED if actually_empty else STATUS_MISMATCH)


def _default_order(case: str, override: StepOrder | None) -> StepOrder:
    if override is not None and (
        (case == formulas.CASE_E_ABOVE_N) == override.east_above_north
    ):
        return override
    return ORDER_EDN if case == formulas.CASE_E_ABOVE_N else ORDER_NDE


def _run_schroeder_maj(params: dict, case: str, order: StepOrder | None):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    closed = formulas.schroeder_maj_closed(r, n, m, k, case)
    if closed.family_empty:
        return _skip_or_mismatch(not paths.enumerate_schroeder(r, n, m, k))
    enum = paths.maj_gf_schroeder_enum(r, n, m, k, _default_order(case, order))
    return _compare(enum, closed.poly)


def _run_schroeder_count(params: dict):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    closed = formulas.schroeder_maj_closed(r, n, m, k, formulas.CASE_E_ABOVE_N)
    count = len(paths.enumerate_schroeder(r, n, m, k))
    if closed.family_empty:
        return _skip_or_mismatch(count == 0)
    return _compare(
        LaurentPoly.monomial(count, 0), LaurentPoly.monomial(closed.poly.eval_at_one(), 0)
    )


def _run_catalan_maj(params: dict, case: str, order: StepOrder | None):
    return _run_schroeder_maj({**params, "k": 0}, case, order)


def _run_catalan_syt(params: dict):
    r, n, m = params["r"], params["n"], params["m"]
    closed = formulas.catalan_maj_closed(r, n, m, formulas.CASE_E_ABOVE_N)
    shape = two_row_shape(n, m, r)
    if closed.family_empty or shape is None:
        return _skip_or_mismatch(shape is None or not tableaux.standard_tableaux(shape))
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, shape, 0, "maj")
    return _compare(enum, closed.poly)


def _run_rinc_stat(params: dict, stat: str):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, r)
    closed = (
        formulas.rinc_maj_closed(r, n, m, k)
        if stat == "maj"
        else formulas.rinc_amaj_closed(r, n, m, k)
    )
    if closed.family_empty or shape is None:
        empty = shape is None or not tableaux.row_increasing_tableaux(shape, k)
        return _skip_or_mismatch(empty)
    enum = tableaux.stat_gf(tableaux.FAMILY_RINC, shape, k, stat)
    return _compare(enum, closed.poly)


def _run_rinc_factor(params: dict, stat: str):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    case = formulas.CASE_E_ABOVE_N if stat == "maj" else formulas.CASE_E_BELOW_N
    rinc = (
        formulas.rinc_maj_closed(r, n, m, k)
        if stat == "maj"
        else formulas.rinc_amaj_closed(r, n, m, k)
    )
    path_side = formulas.schroeder_maj_closed(r, n, m, k, case)
    return _compare(rinc.poly, path_side.poly.shifted(k * (k - 1) // 2))


def _run_inc_maj(params: dict):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, r)
    closed = formulas.inc_maj_closed(r, n, m, k)
    if closed.family_empty or shape is None:
        empty = shape is None or not tableaux.increasing_tableaux(shape, k)
        return _skip_or_mismatch(empty)
    enum = tableaux.stat_gf(tableaux.FAMILY_INC, shape, k, "maj")
    return _compare(enum, closed.poly)


def _run_inc_split(params: dict):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    lhs = formulas.inc_maj_closed(r, n, m, k).poly
    rhs = (
        formulas.skew_hook_maj_closed(r, n - k, m - k, k).poly
        + formulas.skew_hook_maj_closed(r, n - k, m - k + 1, k - 1).poly
    )
    return _compare(lhs, rhs)


def _run_rinc_split(params: dict):
    n, m, k = params["n"], params["m"], params["k"]
    lhs = formulas.rinc_maj_closed(0, n, m, k).poly
    rhs = formulas.inc_maj_closed(0, n, m, k).poly
    if k >= 1 and m >= 1:
        rhs = rhs + formulas.inc_maj_closed(0, n, m - 1, k - 1).poly
    return _compare(lhs, rhs)


def _stat_pair_ok(t, image) -> bool:
    return tableaux.descent_set(t) == tableaux.descent_set(image)


def _run_rinc_to_syt(params: dict):
    n, m, k = params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, 0)
    domain = tableaux.row_increasing_tableaux(shape, k) if shape is not None else []
    target = SkewShape.try_new((n - k + 1, m - k + 1) + (1,) * k, (1, 1))
    codomain = tableaux.standard_tableaux(target) if target is not None else []
    if not domain:
        return _skip_or_mismatch(not codomain)
    images = [bijections.rinc_to_syt(t) for t in domain]
    ok = len(set(images)) == len(domain) and set(images) == set(codomain)
    ok = ok and all(
        tableaux.major_index(t) == tableaux.major_index(s)
        and bijections.syt_to_rinc(s) == t
        for t, s in zip(domain, images)
    )
    enum = tableaux.stat_gf(tableaux.FAMILY_RINC, shape, k, "maj")
    cod_gf = tableaux.stat_gf(tableaux.FAMILY_SYT, target, 0, "maj")
    a, b, status = _compare(enum, cod_gf)
    return (a, b, status if ok else STATUS_MISMATCH)


def _run_chi(params: dict):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, r)
    domain = tableaux.increasing_tableaux(shape, k) if shape is not None else []
    codomain = []
    full = hook_shape(n - k, m - k, k, r)
    if full is not None:
        codomain.extend(tableaux.standard_tableaux(full))
    if k >= 1:
        short = hook_shape(n - k, m - k + 1, k - 1, r)
        if short is not None:
            codomain.extend(tableaux.standard_tableaux(short))
    if not domain:
        return _skip_or_mismatch(not codomain)
    images = [bijections.inc_to_hook_syt(t) for t in domain]
    ok = len(set(images)) == len(domain) and set(images) == set(codomain)
    ok = ok and all(
        _stat_pair_ok(t, s) and bijections.hook_syt_to_inc(s, n, m, k) == t
        for t, s in zip(domain, images)
    )
    enum = tableaux.stat_gf(tableaux.FAMILY_INC, shape, k, "maj")
    cod_gf = gf_from_exponents(tableaux.major_index(s) for s in codomain)
    a, b, status = _compare(enum, cod_gf)
    return (a, b, status if ok else STATUS_MISMATCH)


def _run_rho(params: dict):
    n, m, k = params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, 0)
    domain = tableaux.row_increasing_tableaux(shape, k) if shape is not None else []
    codomain = list(tableaux.increasing_tableaux(shape, k)) if shape is not None else []
    second = two_row_shape(n, m - 1, 0) if m >= 1 else None
    if second is not None and k >= 1:
        codomain.extend(tableaux.increasing_tableaux(second, k - 1))
    if not domain:
        return _skip_or_mismatch(not codomain)
    images = [bijections.rinc_to_inc(t) for t in domain]
    ok = len(set(images)) == len(domain) and set(images) == set(codomain)
    ok = ok and all(
        _stat_pair_ok(t, s) and bijections.inc_to_rinc(s, m) == t
        for t, s in zip(domain, images)
    )
    enum = tableaux.stat_gf(tableaux.FAMILY_RINC, shape, k, "maj")
    cod_gf = gf_from_exponents(tableaux.major_index(s) for s in codomain)
    a, b, status = _compare(enum, cod_gf)
    return (a, b, status if ok else STATUS_MISMATCH)


def _run_order_invariance(params: dict, case: str):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    orders = ORDERS_E_ABOVE_N if case == formulas.CASE_E_ABOVE_N else ORDERS_E_BELOW_N
    if not paths.schroeder_family_nonempty(r, n, m, k):
        return _skip_or_mismatch(True)
    polys = [paths.maj_gf_schroeder_enum(r, n, m, k, order) for order in orders]
    base = polys[0].canonical_str()
    for alt in polys[1:]:
        if alt.canonical_str() != base:
            return (base, alt.canonical_str(), STATUS_MISMATCH)
    return (base, polys[1].canonical_str(), STATUS_MATCH)


def _run_skew_maj(params: dict):
    lam, mu = parse_partition(params["lam"]), parse_partition(params["mu"])
    shape = SkewShape(lam, mu)
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, shape, 0, "maj")
    base = formulas.skew_syt_maj_gf(lam, mu, len(lam))
    for bound in (len(lam) + 1, len(lam) + 2):
        other = formulas.skew_syt_maj_gf(lam, mu, bound)
        if other.poly != base.poly:
            return (base.poly.canonical_str(), other.poly.canonical_str(), STATUS_MISMATCH)
    return _compare(enum, base.poly)


def _run_straight_maj(params: dict):
    lam = parse_partition(params["lam"])
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, SkewShape(lam), 0, "maj")
    return _compare(enum, formulas.syt_maj_gf(lam).poly)


def _run_hook_skew(params: dict):
    r, n, m, k = params["r"], params["n"], params["m"], params["k"]
    shape = hook_shape(n, m, k, r)
    closed = formulas.skew_hook_maj_closed(r, n, m, k)
    if shape is None or closed.family_empty:
        return _skip_or_mismatch(shape is None and closed.family_empty)
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, shape, 0, "maj")
    return _compare(enum, closed.poly)


def _run_hook_straight(params: dict):
    n, m, k = params["n"], params["m"], params["k"]
    shape = hook_shape(n, m, k, 0)
    closed = formulas.straight_hook_maj_closed(n, m, k)
    if shape is None or closed.family_empty:
        return _skip_or_mismatch(shape is None and closed.family_empty)
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, shape, 0, "maj")
    return _compare(enum, closed.poly)


def _run_two_row(params: dict):
    n, m = params["n"], params["m"]
    shape = two_row_shape(n, m, 0)
    closed = formulas.two_row_syt_maj_closed(n, m)
    if shape is None or closed.family_empty:
        return _skip_or_mismatch(shape is None and closed.family_empty)
    enum = tableaux.stat_gf(tableaux.FAMILY_SYT, shape, 0, "maj")
    return _compare(enum, closed.poly)


def _run_rect_rinc(params: dict):
    n, m, k = params["n"], params["m"], params["k"]
    shape = two_row_shape(n, m, 0)
    closed = formulas.rinc_rect_maj_closed(n, m, k)
    if closed.family_empty or shape is None:
        empty = shape is None or not tableaux.row_increasing_tableaux(shape, k)
        return _skip_or_mismatch(empty)
    if closed.poly != formulas.rinc_maj_closed(0, n, m, k).poly:
        return (
            closed.poly.canonical_str(),
            formulas.rinc_maj_closed(0, n, m, k).poly.canonical_str(),
            STATUS_MISMATCH,
        )
    enum = tableaux.stat_gf(tableaux.FAMILY_RINC, shape, k, "maj")
    return _compare(enum, closed.poly)


@dataclass(frozen=True)
class CheckDef:
    name: str
    describe: str
    grid: Callable[[SweepConfig], Iterable[dict]]
    run: Callable


def _make_checks() -> dict[str, CheckDef]:
    defs = [
        CheckDef(
            "schroeder-maj:EgtN",
            "path major index vs closed form, E above N",
            _grid_rnmk,
            lambda p, cfg: _run_schroeder_maj(p, formulas.CASE_E_ABOVE_N, cfg.order),
        ),
        CheckDef(
            "schroeder-maj:EltN",
            "path major index vs closed form, E below N",
            _grid_rnmk,
            lambda p, cfg: _run_schroeder_maj(p, formulas.CASE_E_BELOW_N, cfg.order),
        ),
        CheckDef(
            "schroeder-count",
            "family cardinality vs closed form at q = 1",
            _grid_rnmk,
            lambda p, cfg: _run_schroeder_count(p),
        ),
        CheckDef(
            "catalan-maj:EgtN",
            "diagonal-free special case, E above N",
            _grid_rnm,
            lambda p, cfg: _run_catalan_maj(p, formulas.CASE_E_ABOVE_N, cfg.order),
        ),
        CheckDef(
            "catalan-maj:EltN",
            "diagonal-free special case, E below N",
            _grid_rnm,
            lambda p, cfg: _run_catalan_maj(p, formulas.CASE_E_BELOW_N, cfg.order),
        ),
        CheckDef(
            "catalan-syt",
            "two-row standard tableaux match the path polynomial",
            _grid_rnm,
            lambda p, cfg: _run_catalan_syt(p),
        ),
        CheckDef(
            "rinc-maj",
            "row-increasing tableaux major index vs closed form",
            _grid_rnmk,
            lambda p, cfg: _run_rinc_stat(p, "maj"),
        ),
        CheckDef(
            "rinc-amaj",
            "row-increasing tableaux amajor index vs closed form",
            _grid_rnmk,
            lambda p, cfg: _run_rinc_stat(p, "amaj"),
        ),
        CheckDef(
            "rinc-factor-maj",
            "tableau closed form equals path closed form shifted by k(k-1)/2",
            _grid_rnmk,
            lambda p, cfg: _run_rinc_factor(p, "maj"),
        ),
        CheckDef(
            "rinc-factor-amaj",
            "amajor variant of the shift identity",
            _grid_rnmk,
            lambda p, cfg: _run_rinc_factor(p, "amaj"),
        ),
        CheckDef(
            "inc-maj",
            "increasing tableaux major index vs closed form",
            _grid_rnmk,
            lambda p, cfg: _run_inc_maj(p),
        ),
        CheckDef(
            "inc-split",
            "increasing closed form equals the sum of its two hook pieces",
            _grid_rnmk,
            lambda p, cfg: _run_inc_split(p),
        ),
        CheckDef(
            "rinc-split",
            "row-increasing closed form equals its two increasing pieces",
            _grid_nmk,
            lambda p, cfg: _run_rinc_split(p),
        ),
        CheckDef(
            "chi-bijection",
            "doubled-value extraction is a descent-preserving bijection",
            _grid_rnmk,
            lambda p, cfg: _run_chi(p),
        ),
        CheckDef(
            "rho-bijection",
            "column repair is a descent-preserving bijection",
            _grid_nmk,
            lambda p, cfg: _run_rho(p),
        ),
        CheckDef(
            "rinc-to-syt",
            "composite map to standard tableaux is a maj-preserving bijection",
            _grid_nmk,
            lambda p, cfg: _run_rinc_to_syt(p),
        ),
        CheckDef(
            "order-invariance:EgtN",
            "aggregate polynomial identical across the three E-above-N orders",
            _grid_rnmk,
            lambda p, cfg: _run_order_invariance(p, formulas.CASE_E_ABOVE_N),
        ),
        CheckDef(
            "order-invariance:EltN",
            "aggregate polynomial identical across the three E-below-N orders",
            _grid_rnmk,
            lambda p, cfg: _run_order_invariance(p, formulas.CASE_E_BELOW_N),
        ),
        CheckDef(
            "skew-maj",
            "skew standard tableaux vs reverse-tableau expansion",
            _grid_partition_pairs,
            lambda p, cfg: _run_skew_maj(p),
        ),
        CheckDef(
            "straight-maj",
            "straight-shape standard tableaux vs hook length product",
            _grid_partitions,
            lambda p, cfg: _run_straight_maj(p),
        ),
        CheckDef(
            "hook-skew-maj",
            "hook shapes over an inner row vs closed form",
            _grid_hooks,
            lambda p, cfg: _run_hook_skew(p),
        ),
        CheckDef(
            "hook-straight-maj",
            "straight hook shapes vs closed form",
            _grid_hooks_straight,
            lambda p, cfg: _run_hook_straight(p),
        ),
        CheckDef(
            "two-row-maj",
            "two-row standard tableaux vs closed form",
            _grid_nm,
            lambda p, cfg: _run_two_row(p),
        ),
        CheckDef(
            "rect-rinc-maj",
            "row-increasing rectangles vs the single product formula",
            _grid_nmk,
            lambda p, cfg: _run_rect_rinc(p),
        ),
    ]
    return {d.name: d for d in defs}


CHECKS = _make_checks()


def select_checks(names: Iterable[str]) -> list[str]:
    names = tuple(names)
    if names == ("all",) or not names:
        return list(CHECKS)
    selected = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECKS)}")
        selected.append(name)
    return selected


_WORKER_CFG: SweepConfig | None = None


def _worker_init(cfg: SweepConfig):
    global _WORKER_CFG
    _WORKER_CFG = cfg


def _execute(task: tuple[str, dict, bool], cfg: SweepConfig) -> CheckRecord:
    name, params, timing = task
    start = time.perf_counter()
    enumerated, closed, status = CHECKS[name].run(params, cfg)
    millis = int((time.perf_counter() - start) * 1000) if timing else 0
    return CheckRecord(name, params, enumerated, closed, status, millis)


def _execute_in_worker(task: tuple[str, dict, bool]) -> CheckRecord:
    assert _WORKER_CFG is not None
    return _execute(task, _WORKER_CFG)


def run_sweep(cfg: SweepConfig) -> tuple[list[CheckRecord], dict]:
    """Run the selected checks over their grids; records in grid order."""
    selected = select_checks(cfg.checks)
    tasks = [
        (name, params, cfg.timing)
        for name in selected
        for params in CHECKS[name].grid(cfg)
    ]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(
            max_workers=cfg.jobs, initializer=_worker_init, initargs=(cfg,)
        ) as pool:
            records = list(pool.map(_execute_in_worker, tasks, chunksize=16))
    else:
        records = [_execute(task, cfg) for task in tasks]
    summary = {
        "checked": len(records),
        "matched": sum(r.status == STATUS_MATCH for r in records),
        "mismatched": sum(r.status == STATUS_MISMATCH for r in records),
        "skipped": sum(r.status == STATUS_SKIPPED for r in records),
    }
    return records, summary


# -- report rendering ------------------------------------------------------------


_PARAM_KEYS = ("r", "n", "m", "k", "lam", "mu", "bound")


def _params_str(params: dict) -> str:
    return " ".join(f"{key}={params[key]}" for key in _PARAM_KEYS if key in params)


def render_table(records: list[CheckRecord], summary: dict) -> str:
    headers = ("check", "params", "enumerated", "closed_form", "status", "millis")
    rows = [
        (
            r.check,
            _params_str(r.params),
            r.enumerated,
            r.closed_form,
            r.status,
            str(r.millis),
        )
        for r in records
    ]
    widths = [
        max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    lines.append(
        "summary: checked={checked} matched={matched} "
        "mismatched={mismatched} skipped={skipped}".format(**summary)
    )
    return "\n".join(lines) + "\n"


def render_json(records: list[CheckRecord], summary: dict) -> str:
    import json

    payload = {"records": [r.as_json_obj() for r in records], "summary": summary}
    return json.dumps(payload, indent=2) + "\n"


def render_csv(records: list[CheckRecord], summary: dict) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["check", "r", "n", "m", "k", "lam", "mu", "enumerated", "closed_form", "status", "millis"]
    )
    for r in records:
        writer.writerow(
            [
                r.check,
                r.params.get("r", ""),
                r.params.get("n", ""),
                r.params.get("m", ""),
                r.params.get("k", ""),
                r.params.get("lam", ""),
                r.params.get("mu", ""),
                r.enumerated,
                r.closed_form,
                r.status,
                r.millis,
            ]
        )
    return buf.getvalue()


def render_report(records: list[CheckRecord], summary: dict, fmt: str) -> str:
    if fmt == "table":
        return render_table(records, summary)
    if fmt == "json":
        return render_json(records, summary)
    if fmt == "csv":
        return render_csv(records, summary)
    raise ValueError(f"unknown format {fmt!r}")
