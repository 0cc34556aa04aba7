# Standard Library Imports
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Callable

# Third Party Imports
from pydantic import BaseModel, ConfigDict
from sympy import Poly

# Local App Imports
from tilecount.models.exceptions import (
    IdentityMismatch,
    NonIntegralResult,
    ParameterError,
    ResourceBudgetExceeded,
)
from tilecount.models.flashlight import flashlight
from tilecount.models.report import InstanceResult, ReportSummary, Value, VerificationReport
from tilecount.models.region import Region
from tilecount.models.shape import Partition, ShapeFamily, StrictPartition
from tilecount.services import environment
from tilecount.services.cache import CountCache
from tilecount.services.exactlinalg import count_pp_det, count_spp_pf
from tilecount.services.exactnum import qpoly_coeffs
from tilecount.services.formulas import (
    count_arith_progression,
    count_flashlight_formula,
    count_quartered_hexagon,
    count_rectangle,
    count_sds,
    count_shifted_staircase,
    count_shifted_trapezoid,
    count_staircase,
    eval_identity1a,
    eval_identity1b,
    eval_identity2a,
    eval_identity2b,
    flashlight_product,
    kummer_closed_sum,
    p_identity_check,
    p_identity_z1_check,
    q_count_rectangle,
    q_symmetric_bender_knuth,
    q_symmetric_macmahon,
    x1_decomposition_check,
)
from tilecount.services.lattice.bijections import (
    pp_to_tiling,
    spp_to_tiling,
    tiling_to_pp,
    tiling_to_spp,
)
from tilecount.services.lattice.kuo import (
    conjecture_y0_check,
    conversion_check,
    flashlight_kuo_vertices,
    kuo_verify,
    recurrence_verify,
    separation_check,
)
from tilecount.services.lattice.matching import count_matchings_free, dual_graph, enumerate_tilings
from tilecount.services.lattice.regions import (
    build_flashlight,
    build_quartered_hexagon,
    build_shape_region,
)
from tilecount.services.ppcore import (
    count_pp_brute,
    count_spp_brute,
    count_symmetry_class,
    enumerate_pp,
    enumerate_spp,
    gen_function,
    transpose,
)
from tilecount.services.shapes import make_shape

logger = logging.getLogger(__name__)

Task = Callable[[], InstanceResult]


class Grid(BaseModel):
    """
    Optional caps on the parameter ranges of a suite; None keeps the suite's own range.
    """

    model_config = ConfigDict(frozen=True)

    xmax: int | None = None
    ymax: int | None = None
    zmax: int | None = None
    tmax: int | None = None
    nmax: int | None = None
    mmax: int | None = None

    def cap(self, name: str, default: int) -> int:
        value = getattr(self, name)
        return default if value is None else value


class SuiteContext(BaseModel):
    """
    What every suite needs besides its grid: the count cache and the resource budgets.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    grid: Grid = Grid()
    cache: CountCache | None = None
    budget: int = environment.TRIANGLE_BUDGET
    enum_cap: int = environment.ENUM_CAP

    def tilings(self, region: Region) -> int:
        def compute() -> int:
            return count_matchings_free(dual_graph(region), self.budget)

        if self.cache is None or region.provenance is None:
            return compute()
        return self.cache.lookup(f"tilings:{region.label}", compute)


# --- Instances ---
def _plain(value) -> Value:
    if isinstance(value, Poly):
        return qpoly_coeffs(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, tuple):
        return list(value)
    return value


def _run(
    params: dict[str, Value],
    methods: dict[str, Callable[[], object]],
    experimental: bool = False,
    checks: bool = False,
) -> InstanceResult:
    """
    Evaluate every method of an instance. Counts must all agree; with checks=True every method returns a flag
    and all flags must hold. A method over budget is dropped and the rest are judged; the instance is skipped
    when too few methods remain (one flag, or two counts).
    """
    started = time.perf_counter()
    values: dict[str, Value] = {}
    notes = []
    for name, method in methods.items():
        try:
            values[name] = _plain(method())
        except ResourceBudgetExceeded as error:
            notes.append(f"{name}: {error}")
        except (IdentityMismatch, NonIntegralResult) as error:
            values["error"] = str(error)
            notes.append(str(error))
            break
    if "error" in values:
        equal = False
    elif len(values) < (1 if checks else 2):
        equal = None
    elif checks:
        equal = all(value is not False for value in values.values())
    else:
        equal = len({str(value) for value in values.values()}) == 1
    return InstanceResult(
        params=params,
        methods=list(methods),
        values=values,
        equal=equal,
        experimental=experimental,
        elapsed=round(time.perf_counter() - started, 6),
        note="; ".join(notes),
    )


def _task(params: dict[str, Value], methods: dict[str, Callable], **options) -> Task:
    return lambda: _run(params, methods, **options)


def _partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    found = [()]

    def extend(parts: tuple[int, ...]):
        if len(parts) == rows:
            return
        for part in range(1, (parts[-1] if parts else cols) + 1):
            found.append(parts + (part,))
            extend(parts + (part,))

    extend(())
    return sorted(found)


def _strict_partitions(count: int, largest: int) -> list[tuple[int, ...]]:
    return sorted(
        tuple(sorted(chosen, reverse=True))
        for size in range(1, count + 1)
        for chosen in combinations(range(1, largest + 1), size)
    )


# --- Suites ---
def suite_formulas(ctx: SuiteContext) -> list[Task]:
    """
    Product formulas of the shape families against brute-force counting.
    """
    g = ctx.grid
    nmax, mmax = g.cap("nmax", 5), g.cap("mmax", 4)
    tasks = []
    for n in range(nmax + 1):
        for k in range(n + 1):
            for m in range(mmax + 1):
                shape = make_shape(ShapeFamily(tag="shifted_double_staircase", params=(n, k)))
                tasks.append(
                    _task(
                        {"family": "sds", "n": n, "k": k, "m": m},
                        {
                            "formula": lambda n=n, k=k, m=m: count_sds(n, k, m),
                            "brute": lambda s=shape, m=m: count_spp_brute(s, m),
                        },
                    )
                )
    small = min(nmax, 3)
    for a in range(1, small + 1):
        for b in range(1, small + 1):
            for m in range(min(mmax, 3) + 1):
                rect = make_shape(ShapeFamily(tag="rectangle", params=(a, b)))
                tasks.append(
                    _task(
                        {"family": "rect", "a": a, "b": b, "m": m},
                        {
                            "formula": lambda a=a, b=b, m=m: count_rectangle(a, b, m),
                            "brute": lambda s=rect, m=m: count_pp_brute(s, m),
                        },
                    )
                )
                if a <= b:
                    stair = make_shape(ShapeFamily(tag="staircase", params=(a, b)))
                    tasks.append(
                        _task(
                            {"family": "stair", "a": a, "b": b, "m": m},
                            {
                                "formula": lambda a=a, b=b, m=m: count_staircase(a, b, m),
                                "brute": lambda s=stair, m=m: count_pp_brute(s, m),
                            },
                        )
                    )
    for n in range(1, min(nmax, 4) + 1):
        for m in range(min(mmax, 3) + 1):
            sstair = make_shape(ShapeFamily(tag="shifted_staircase", params=(n,)))
            tasks.append(
                _task(
                    {"family": "sstair", "n": n, "m": m},
                    {
                        "formula": lambda n=n, m=m: count_shifted_staircase(n, m),
                        "brute": lambda s=sstair, m=m: count_spp_brute(s, m),
                    },
                )
            )
            for k in range(1, (n + 1) // 2 + 1):
                trap = make_shape(ShapeFamily(tag="shifted_trapezoid", params=(n, k)))
                tasks.append(
                    _task(
                        {"family": "trap", "n": n, "k": k, "m": m},
                        {
                            "formula": lambda n=n, k=k, m=m: count_shifted_trapezoid(n, k, m),
                            "brute": lambda s=trap, m=m: count_spp_brute(s, m),
                        },
                    )
                )
    for big_m in range(2, 6):
        for d in range(1, 3):
            for length in range(1, 4):
                if big_m - length * d < 1:
                    continue
                ap = make_shape(ShapeFamily(tag="arithmetic_progression", params=(big_m, d, length)))
                for m in range(min(mmax, 2) + 1):
                    tasks.append(
                        _task(
                            {"family": "ap", "M": big_m, "d": d, "l": length, "m": m},
                            {
                                "formula": lambda p=(big_m, d, length, m): count_arith_progression(*p),
                                "brute": lambda s=ap, m=m: count_pp_brute(s, m),
                            },
                        )
                    )
    for x in range(4):
        for y in range(1, 4):
            for z in range(4):
                tasks.append(
                    _task(
                        {"family": "flashlight-t0", "x": x, "y": y, "z": z},
                        {
                            "formula": lambda p=(x, y, z): count_flashlight_formula(flashlight(*p, 0)),
                            "sds": lambda x=x, y=y, z=z: count_sds(y + z, z, x),
                        },
                    )
                )
                if z == 0:
                    methods = {
                        f"t={t}": lambda p=(x, y, 0, t): count_flashlight_formula(flashlight(*p)) for t in range(4)
                    }
                    methods["sstair"] = lambda x=x, y=y: count_shifted_staircase(y, x)
                    tasks.append(_task({"family": "flashlight-z0", "x": x, "y": y}, methods))
    return tasks


def suite_det(ctx: SuiteContext) -> list[Task]:
    g = ctx.grid
    tasks = []
    for parts in _partitions_in_box(4, 4):
        shape = Partition(parts=parts)
        for m in range(g.cap("mmax", 4) + 1):
            tasks.append(
                _task(
                    {"shape": str(shape), "m": m},
                    {
                        "det": lambda s=shape, m=m: count_pp_det(s, m),
                        "brute": lambda s=shape, m=m: count_pp_brute(s, m),
                    },
                )
            )
    for parts in _partitions_in_box(3, 3):
        shape = Partition(parts=parts)
        for m in range(min(g.cap("mmax", 3), 3) + 1):
            tasks.append(
                _task(
                    {"shape": str(shape), "m": m, "q": True},
                    {
                        "det": lambda s=shape, m=m: count_pp_det(s, m, q_mode=True),
                        "gen_function": lambda s=shape, m=m: gen_function(enumerate_pp(s, m)),
                    },
                )
            )
    return tasks


def suite_pfaffian(ctx: SuiteContext) -> list[Task]:
    tasks = []
    for parts in _strict_partitions(4, 5):
        shape = StrictPartition(parts=parts)
        for m in range(ctx.grid.cap("mmax", 3) + 1):
            tasks.append(
                _task(
                    {"shape": str(shape), "m": m},
                    {
                        "pfaffian": lambda s=shape, m=m: count_spp_pf(s, m),
                        "brute": lambda s=shape, m=m: count_spp_brute(s, m),
                    },
                )
            )
    return tasks


def suite_flashlight(ctx: SuiteContext) -> list[Task]:
    g = ctx.grid
    tasks = []
    for x in range(g.cap("xmax", 2) + 1):
        for y in range(1, g.cap("ymax", 2) + 1):
            for z in range(g.cap("zmax", 2) + 1):
                for t in range(g.cap("tmax", 1) + 1):
                    p = flashlight(x, y, z, t)
                    tasks.append(
                        _task(
                            {"x": x, "y": y, "z": z, "t": t},
                            {
                                "brute": lambda p=p: ctx.tilings(build_flashlight(p)),
                                "formula": lambda p=p: count_flashlight_formula(p),
                            },
                        )
                    )
    return tasks


def suite_quartered(ctx: SuiteContext) -> list[Task]:
    tasks = []
    total = ctx.grid.cap("nmax", 5)
    for k in range(1, total + 1):
        for x in range(total - k + 1):
            for s in combinations(range(1, x + k + 1), k):
                tasks.append(
                    _task(
                        {"x": x, "s": list(s)},
                        {
                            "brute": lambda x=x, s=s: ctx.tilings(build_quartered_hexagon(x, s)),
                            "formula": lambda x=x, s=s: count_quartered_hexagon(x, s),
                        },
                    )
                )
    return tasks


def _kuo_methods(ctx: SuiteContext, p) -> dict[str, Callable]:
    state = {}

    def prepared() -> dict:
        if not state:
            kuo = flashlight_kuo_vertices(p, budget=ctx.budget)
            state.update(kuo=kuo, dual=dual_graph(build_flashlight(p)))
        return state

    def vertices():
        return "searched" if prepared()["kuo"].searched else "closed-form"

    def separation():
        return all(separation_check(prepared()["dual"], state["kuo"], budget=ctx.budget))

    def conversions():
        return all(a == b for a, b in conversion_check(p, prepared()["kuo"], ctx.budget).values())

    return {
        "closed_form_vertices": vertices,
        "separation": separation,
        "condensation": lambda: kuo_verify(prepared()["dual"], state["kuo"], ctx.budget),
        "conversions": conversions,
    }


def suite_kuo(ctx: SuiteContext) -> list[Task]:
    g = ctx.grid
    tasks = []
    for x in range(2, g.cap("xmax", 3) + 1):
        for y in range(1, g.cap("ymax", 2) + 1):
            for z in range(1, g.cap("zmax", 2) + 1):
                for t in range(g.cap("tmax", 1) + 1):
                    p = flashlight(x, y, z, t)
                    tasks.append(_task({"x": x, "y": y, "z": z, "t": t}, _kuo_methods(ctx, p), checks=True))
    return tasks


def suite_recurrences(ctx: SuiteContext) -> list[Task]:
    g = ctx.grid
    tasks = []
    for x in range(2, g.cap("xmax", 8) + 1):
        for y in range(1, g.cap("ymax", 5) + 1):
            for z in range(1, g.cap("zmax", 5) + 1):
                for t in range(g.cap("tmax", 5) + 1):
                    p = flashlight(x, y, z, t)
                    methods = {"formula": lambda p=p: recurrence_verify(p, "formula")}
                    if x <= 3 and y <= 2 and z <= 2 and t <= 1:
                        methods["brute"] = lambda p=p: recurrence_verify(p, "brute", ctx.budget)
                    tasks.append(_task({"x": x, "y": y, "z": z, "t": t}, methods, checks=True))
    return tasks


def suite_identities(ctx: SuiteContext) -> list[Task]:
    """
    Scalar identities behind the flashlight formula: the product identities, the x = 0 and x = 1 base cases,
    the Kummer sum and the quartered hexagon decomposition.
    """
    g = ctx.grid
    tasks = []
    for x in range(2, g.cap("xmax", 10) + 1):
        for y in range(1, g.cap("ymax", 6) + 1):
            for t in range(g.cap("tmax", 6) + 1):
                tasks.append(
                    _task(
                        {"identity": "p-z1", "x": x, "y": y, "t": t},
                        {"p_identity_z1": lambda p=(x, y, t): all(p_identity_z1_check(*p))},
                        checks=True,
                    )
                )
                for z in range(1, g.cap("zmax", 6) + 1):
                    tasks.append(
                        _task(
                            {"identity": "p", "x": x, "y": y, "z": z, "t": t},
                            {"p_identity": lambda p=(x, y, z, t): all(f is not False for f in p_identity_check(*p))},
                            checks=True,
                        )
                    )
    for z in range(13):
        for t in range(13):
            methods = {
                "identity1a": lambda z=z, t=t: eval_identity1a(z, t),
                "identity1b": lambda z=z, t=t: eval_identity1b(z, t),
                "product": lambda z=z, t=t: flashlight_product(0, 1, z, t),
            }
            if z >= 1:
                methods["staircase"] = lambda z=z, t=t: count_staircase(z, z, t)
            tasks.append(_task({"identity": "x0", "z": z, "t": t}, methods))
    for y in range(1, 13):
        for z in range(13):
            for t in range(13):
                tasks.append(
                    _task(
                        {"identity": "x1", "y": y, "z": z, "t": t},
                        {
                            "identity2a": lambda p=(y, z, t): eval_identity2a(*p),
                            "identity2b": lambda p=(y, z, t): eval_identity2b(*p),
                            "product": lambda p=(y, z, t): flashlight_product(1, *p),
                        },
                    )
                )
    for z in range(41):
        for t in range(41):
            tasks.append(
                _task(
                    {"identity": "kummer", "z": z, "t": t},
                    {"kummer": lambda z=z, t=t: kummer_closed_sum(z, t)[2]},
                    checks=True,
                )
            )
    for y in range(1, 5):
        for z in range(5):
            for t in range(5):
                tasks.append(
                    _task(
                        {"identity": "x1-decomposition", "y": y, "z": z, "t": t},
                        {"decomposition": lambda p=(y, z, t): x1_decomposition_check(*p)},
                        checks=True,
                    )
                )
    return tasks


def _rectangle(a: int, b: int) -> Partition:
    return Partition(parts=(b,) * a)


def _symmetric_pps(n: int, m: int):
    square = _rectangle(n, n)
    return [pp for pp in enumerate_pp(square, m) if transpose(pp).entries == pp.entries]


def suite_qanalogs(ctx: SuiteContext) -> list[Task]:
    tasks = []
    for a in range(1, 4):
        for b in range(1, 4):
            for m in range(4):
                tasks.append(
                    _task(
                        {"family": "rect", "a": a, "b": b, "m": m},
                        {
                            "product": lambda p=(a, b, m): q_count_rectangle(*p),
                            "gen_function": lambda a=a, b=b, m=m: gen_function(enumerate_pp(_rectangle(a, b), m)),
                        },
                    )
                )
    for n in range(1, 4):
        for m in range(4):
            tasks.append(
                _task(
                    {"family": "symmetric", "n": n, "m": m},
                    {
                        "product": lambda n=n, m=m: q_symmetric_macmahon(n, m),
                        "gen_function": lambda n=n, m=m: gen_function(_symmetric_pps(n, m)),
                    },
                )
            )
            tasks.append(
                _task(
                    {"family": "symmetric-half", "n": n, "m": m},
                    {
                        "product": lambda n=n, m=m: q_symmetric_bender_knuth(n, m),
                        "gen_function": lambda n=n, m=m: gen_function(_symmetric_pps(n, m), "half_size"),
                    },
                )
            )
    return tasks


def suite_symmetry(ctx: SuiteContext) -> list[Task]:
    tasks = []
    for n in range(1, 5):
        for m in range(4):
            tasks.append(
                _task(
                    {"class": "symmetric", "n": n, "m": m},
                    {
                        "brute": lambda n=n, m=m: count_symmetry_class("symmetric", n, m),
                        "formula": lambda n=n, m=m: count_shifted_staircase(n, m),
                    },
                )
            )
    for n in range(1, 4):
        for m in range(3):
            tasks.append(
                _task(
                    {"class": "transpose_complementary", "n": n, "m": m},
                    {
                        "brute": lambda n=n, m=m: count_symmetry_class("transpose_complementary", n + 1, 2 * m),
                        "formula": lambda n=n, m=m: count_staircase(n, n, m),
                    },
                )
            )
            tasks.append(
                _task(
                    {"class": "symmetric_self_complementary", "n": n, "m": m},
                    {
                        "brute": lambda n=n, m=m: count_symmetry_class("symmetric_self_complementary", n + 1, 2 * m),
                        "formula": lambda n=n, m=m: count_shifted_trapezoid(n, (n + 1) // 2, m),
                    },
                )
            )
    return tasks


def _pp_bijection(ctx: SuiteContext, shape: Partition, m: int) -> bool:
    region = build_shape_region(shape, m)
    tilings = list(enumerate_tilings(region, ctx.enum_cap, ctx.budget))
    images = [tiling_to_pp(region, tiling) for tiling in tilings]
    round_trip = all(pp_to_tiling(region, pp) == tiling for pp, tiling in zip(images, tilings))
    expected = {pp.entries for pp in enumerate_pp(shape, m)}
    return round_trip and len(images) == len(expected) and {pp.entries for pp in images} == expected


def _spp_bijection(ctx: SuiteContext, p) -> bool:
    region = build_flashlight(p)
    tilings = list(enumerate_tilings(region, ctx.enum_cap, ctx.budget))
    images = [tiling_to_spp(region, tiling) for tiling in tilings]
    round_trip = all(spp_to_tiling(region, spp) == tiling for spp, tiling in zip(images, tilings))
    expected = {spp.entries for spp in enumerate_spp(region.provenance.shape, p.x)}
    return round_trip and len(images) == len(expected) and {spp.entries for spp in images} == expected


def suite_bijections(ctx: SuiteContext) -> list[Task]:
    tasks = []
    for parts in _partitions_in_box(3, 3)[1:]:
        shape = Partition(parts=parts)
        for m in range(ctx.grid.cap("mmax", 2) + 1):
            tasks.append(
                _task(
                    {"bijection": "pp", "shape": str(shape), "m": m},
                    {"tiling_to_pp": lambda s=shape, m=m: _pp_bijection(ctx, s, m)},
                    checks=True,
                )
            )
    for n in range(1, 4):
        for z in range(n):
            for x in range(ctx.grid.cap("mmax", 2) + 1):
                p = flashlight(x, n - z, z, 0)
                tasks.append(
                    _task(
                        {"bijection": "spp", "x": x, "y": n - z, "z": z},
                        {"tiling_to_spp": lambda p=p: _spp_bijection(ctx, p)},
                        checks=True,
                    )
                )
    return tasks


def suite_y0(ctx: SuiteContext) -> list[Task]:
    """
    The product formula evaluated at y = 0 against brute force. Mismatches are findings, never failures.
    """
    g = ctx.grid
    tasks = []
    for x in range(g.cap("xmax", 3) + 1):
        for z in range(g.cap("zmax", 2) + 1):
            for t in range(g.cap("tmax", 2) + 1):
                tasks.append(
                    _task(
                        {"x": x, "y": 0, "z": z, "t": t},
                        {
                            "brute": lambda p=(x, z, t): conjecture_y0_check(*p, budget=ctx.budget)["lhs"],
                            "formula": lambda p=(x, 0, z, t): flashlight_product(*p),
                        },
                        experimental=True,
                    )
                )
    return tasks


SUITES: dict[str, Callable[[SuiteContext], list[Task]]] = {
    "formulas": suite_formulas,
    "det": suite_det,
    "pfaffian": suite_pfaffian,
    "flashlight": suite_flashlight,
    "quartered": suite_quartered,
    "kuo": suite_kuo,
    "recurrences": suite_recurrences,
    "identities": suite_identities,
    "qanalogs": suite_qanalogs,
    "symmetry": suite_symmetry,
    "bijections": suite_bijections,
    "y0-experiment": suite_y0,
}


def run_suite(name: str, ctx: SuiteContext | None = None, workers: int | None = None) -> VerificationReport:
    """
    Run one suite (or "all") and assemble its report, instances sorted by parameters.
    :param name: Suite name or "all".
    :param ctx: Grid, cache and budgets.
    :param workers: Size of the worker pool, defaults to TILECOUNT_WORKERS.
    :raises ParameterError: If the suite is unknown.
    """
    ctx = ctx or SuiteContext()
    if name != "all" and name not in SUITES:
        raise ParameterError("suite", f"one of {', '.join(SUITES)} or all", name)
    names = list(SUITES) if name == "all" else [name]
    tasks = [task for suite in names for task in SUITES[suite](ctx)]
    logger.info("suite %s: %d instances on %d workers", name, len(tasks), workers or environment.WORKERS)
    with ThreadPoolExecutor(max_workers=max(1, workers or environment.WORKERS)) as pool:
        instances = sorted(pool.map(lambda task: task(), tasks), key=InstanceResult.sort_key)

    summary = ReportSummary(
        passed=sum(1 for i in instances if i.equal is True),
        failed=sum(1 for i in instances if i.equal is False and not i.experimental),
        skipped=sum(1 for i in instances if i.equal is None),
        experimental=sum(1 for i in instances if i.experimental),
    )
    findings = [
        f"{name}: {i.params} gave {i.values}" for i in instances if i.experimental and i.equal is False
    ]
    for finding in findings:
        logger.warning("finding: %s", finding)
    if ctx.cache is not None:
        ctx.cache.flush()
    grid = {key: value for key, value in ctx.grid.model_dump().items() if value is not None}
    return VerificationReport(suite=name, grid=grid, instances=instances, summary=summary, findings=findings)
