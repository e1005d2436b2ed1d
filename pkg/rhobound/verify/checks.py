# rhobound/rhobound/verify/checks.py
"""
그래프 하나에 대한 검증 항목 모음

각 검사는 위반 시 {check, details} 딕셔너리를 돌려주고, 통과하면 None 입니다.
모든 판정은 정확한 유리수 비교이며, 스펙트럼 구간은 인증된 끝점만 사용합니다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from ..bounds.report import FAIL, INCONCLUSIVE, BoundReport, build_report
from ..bounds.rowsum import all_case_decompositions, intermediate_rowsum_check
from ..core.errors import ParameterError
from ..core.graph import DegreeStats, Graph, degree_stats
from ..spectral.interval import SpectralInterval, certified_interval, trivial_interval
from ..spectral.polynomial import Polynomial, row_sum_poly_bound
from ..utils.rationals import format_rational
from ..utils.settings import Settings

ALL_CHECKS = (
    "theorem",
    "pre_blowup",
    "rowsum",
    "half_deviation",
    "lemma1",
    "collatz_sinogowitz",
    "bound_chain",
    "case_slack",
)
DEFAULT_CHECKS = ("theorem", "rowsum", "half_deviation", "lemma1")

# 전수 검사에서 모든 그래프에 적용하는 고정 다항식들
SPOT_POLYNOMIALS = (
    Polynomial.of(0, 1),          # x
    Polynomial.of(0, 0, 1),       # x^2
    Polynomial.of(0, -1, 0, 1),   # x^3 - x
    Polynomial.of(1, -2, 1),      # (x - 1)^2
    Polynomial.of(-3, 2, -1, 1),  # x^3 - x^2 + 2x - 3
)


def parse_checks(checks: Optional[Iterable[str]]) -> Tuple[str, ...]:
    """쉼표 문자열 또는 목록 -> 검사 이름 튜플. 'all' 은 전체"""
    if checks is None:
        return DEFAULT_CHECKS
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    names = list(checks)
    if names == ["all"]:
        return ALL_CHECKS
    unknown = [c for c in names if c not in ALL_CHECKS]
    if unknown:
        raise ParameterError(f"unknown check {unknown[0]!r} (expected one of {', '.join(ALL_CHECKS)})")
    if not names:
        raise ParameterError("at least one check must be selected")
    # 순서는 ALL_CHECKS 기준으로 고정
    return tuple(c for c in ALL_CHECKS if c in names)


@dataclass
class GraphContext:
    """검사들이 공유하는 그래프별 계산 결과"""
    graph: Graph
    stats: DegreeStats
    rho: SpectralInterval
    report: BoundReport
    skipped_interval: bool = False


@dataclass
class GraphResult:
    gap_ratio: float
    failures: List[Dict[str, Any]] = field(default_factory=list)
    inconclusive: bool = False
    skipped_interval: bool = False
    report: Optional[BoundReport] = None


def interval_unneeded(stats: DegreeStats, g: Graph, ratio_floor: Optional[float] = None) -> bool:
    """
    (max_degree - 2m/n)^2 <= s/2 이면 rho <= max_degree 만으로 정리가 성립합니다.

    ratio_floor 가 주어지면 gap ratio 상한 (max_degree - 2m/n)/sqrt(s) 가
    그 값 이하일 때만 생략합니다. 생략한 그래프는 최대 gap ratio 를 바꿀 수 없습니다.
    """
    excess = g.max_degree - stats.avg_degree
    if excess * excess > stats.s / 2:
        return False
    if ratio_floor is None:
        return True
    if ratio_floor < 0:
        return False
    floor = Fraction(ratio_floor)
    return excess * excess <= floor * floor * stats.s


def build_context(g: Graph, settings: Settings, tol=None, early_exit: bool = False,
                  ratio_floor: Optional[float] = None) -> GraphContext:
    stats = degree_stats(g)
    skipped = early_exit and interval_unneeded(stats, g, ratio_floor)
    rho = trivial_interval(g) if skipped else certified_interval(g, tol, settings)
    report = build_report(g, stats, rho, encode=False)
    return GraphContext(graph=g, stats=stats, rho=rho, report=report, skipped_interval=skipped)


# ---------------------------------------------------------------------------
# 개별 검사
# ---------------------------------------------------------------------------

def _rho_details(ctx: GraphContext) -> Dict[str, Any]:
    return {
        "n": ctx.graph.n,
        "m": ctx.graph.m,
        "avg_degree": format_rational(ctx.stats.avg_degree),
        "s": format_rational(ctx.stats.s),
        "rho_lo": format_rational(ctx.rho.lo),
        "rho_hi": format_rational(ctx.rho.hi),
        "rho_converged": ctx.rho.converged,
    }


def check_theorem(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    # rho.lo 는 인증된 하한이므로 theorem_exact 가 거짓이면 그 자체로 반례
    if ctx.report.verdicts["theorem1"] == FAIL or not ctx.report.theorem_exact:
        return {"verdict": ctx.report.verdicts["theorem1"], **_rho_details(ctx)}
    return None


def check_pre_blowup(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    if ctx.report.verdicts["pre_blowup"] == FAIL:
        return {"verdict": FAIL, **_rho_details(ctx)}
    return None


def check_rowsum(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    result = intermediate_rowsum_check(ctx.graph, ctx.stats)
    if not result.passed:
        return {
            "max_row": format_rational(result.max_row),
            "budget": format_rational(result.budget),
            "witness": result.witness,
        }
    return None


def check_half_deviation(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    stats = ctx.stats
    half = stats.s / 2
    high = stats.high_deviation
    excess = stats.high_excess
    if high != half or excess > half or sum(stats.degrees) != 2 * ctx.graph.m:
        return {
            "high_deviation": format_rational(high),
            "half_s": format_rational(half),
            "high_excess": format_rational(excess),
        }
    return None


def check_lemma1(ctx: GraphContext, polynomials: Iterable[Polynomial] = SPOT_POLYNOMIALS) -> Optional[Dict[str, Any]]:
    """
    f(rho) <= max_u r_u(f(A)). rho가 구간으로만 알려져 있으므로
    f([lo, hi]) 감싸기의 하단이 행합 상한을 넘을 때만 위반으로 봅니다.
    """
    for f in polynomials:
        bound = row_sum_poly_bound(ctx.graph, f)
        low, _ = f.enclose(ctx.rho.lo, ctx.rho.hi)
        if low > bound:
            return {"polynomial": str(f), "enclosure_lo": format_rational(low),
                    "row_sum_bound": format_rational(bound), **_rho_details(ctx)}
    return None


def check_collatz_sinogowitz(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    """
    rho.lo >= 2m/n (전부 1인 벡터의 Rayleigh quotient).
    정규 그래프는 구간이 정확히 [d, d], 비정규 연결 그래프는 수렴 후 lo > 2m/n.
    """
    g, rho, avg = ctx.graph, ctx.rho, ctx.stats.avg_degree
    problem = None
    if rho.lo < avg or rho.hi < avg:
        problem = "interval below 2m/n"
    elif g.is_regular and not (rho.lo == rho.hi == g.max_degree):
        problem = "regular graph interval is not exactly [d, d]"
    elif (not g.is_regular and rho.converged and not ctx.skipped_interval
          and _is_connected(g) and rho.lo <= avg):
        problem = "irregular connected graph with rho.lo == 2m/n"
    if problem:
        return {"problem": problem, **_rho_details(ctx)}
    return None


def _is_connected(g: Graph) -> bool:
    # 연결 요소 계산 없이 bitmask 도달 집합으로 판정
    seen = frontier = 1
    full = (1 << g.n) - 1
    while frontier:
        reach = 0
        for v in range(g.n):
            if (frontier >> v) & 1:
                reach |= g.rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == full


def check_bound_chain(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    """
    s > 0 이면 sqrt(s/2) < sqrt(2s/3) < sqrt(9s/10) < sqrt(s),
    그리고 rho.lo <= quadratic_root <= split_bound.
    """
    r = ctx.report
    problems = []
    if ctx.stats.s > 0 and not (r.bound_theorem1 < r.bound_rw < r.bound_zhang < r.bound_nikiforov06):
        problems.append("constant chain out of order")
    slack = 1e-9 * max(1.0, r.bound_split)
    if float(ctx.rho.lo) > r.bound_quadratic_root + slack:
        problems.append("rho.lo exceeds quadratic root")
    if r.bound_quadratic_root > r.bound_split + slack:
        problems.append("quadratic root exceeds split bound")
    if problems:
        return {"problems": problems, "bound_quadratic_root": r.bound_quadratic_root,
                "bound_split": r.bound_split, **_rho_details(ctx)}
    return None


def check_case_slack(ctx: GraphContext) -> Optional[Dict[str, Any]]:
    for dec in all_case_decompositions(ctx.graph, ctx.stats):
        if dec.slack < 0 or not dec.chain_holds:
            broken = [i for i, step in enumerate(dec.steps) if not step.holds]
            return {"vertex": dec.vertex, "case": dec.case, "slack": format_rational(dec.slack),
                    "broken_steps": broken}
    return None


CHECK_FUNCTIONS: Dict[str, Callable[[GraphContext], Optional[Dict[str, Any]]]] = {
    "theorem": check_theorem,
    "pre_blowup": check_pre_blowup,
    "rowsum": check_rowsum,
    "half_deviation": check_half_deviation,
    "lemma1": check_lemma1,
    "collatz_sinogowitz": check_collatz_sinogowitz,
    "bound_chain": check_bound_chain,
    "case_slack": check_case_slack,
}


def run_checks(g: Graph, checks: Tuple[str, ...], settings: Settings, tol=None,
               early_exit: bool = False, ratio_floor: Optional[float] = None) -> GraphResult:
    """선택된 검사를 실행하고 위반 목록과 gap ratio를 돌려줍니다."""
    ctx = build_context(g, settings, tol, early_exit, ratio_floor)
    failures = []
    for name in checks:
        details = CHECK_FUNCTIONS[name](ctx)
        if details is not None:
            failures.append({"check": name, "details": details})
    verdicts = ctx.report.verdicts
    inconclusive = not ctx.skipped_interval and any(
        verdicts[key] == INCONCLUSIVE for key in ("theorem1", "pre_blowup"))
    return GraphResult(
        gap_ratio=ctx.report.gap_ratio,
        failures=failures,
        inconclusive=inconclusive,
        skipped_interval=ctx.skipped_interval,
        report=ctx.report,
    )
