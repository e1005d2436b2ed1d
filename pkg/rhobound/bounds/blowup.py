# rhobound/rhobound/bounds/blowup.py
"""
Blow-up 극한 데모

G^(t)에 사전 blow-up 상한 rho - 2m/n <= 1 + sqrt(s/2) 를 적용하면
rho(G) - 2m/n <= 1/t + sqrt(s(G)/2) 가 되고, t -> 무한대에서 정리의 상한으로 수렴합니다.
"""
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

import pandas as pd

from ..core.errors import BudgetError, ParameterError
from ..core.graph import Graph, blow_up, degree_stats
from ..reporting.logger import get_logger
from ..spectral.interval import SpectralInterval, TolLike, certified_interval
from ..utils.rationals import format_rational
from ..utils.settings import Settings, get_settings

logger = get_logger(__name__)


@dataclass
class BlowupRow:
    t: int
    n: int
    m: int
    avg: str
    s: str
    rho_lo: str
    rho_hi: str
    rho: float
    scaling_exact: bool       # n' = tn, m' = t^2 m, avg' = t avg, s' = t^2 s
    rho_scaled_check: bool    # |mid_t - t mid_1| <= width_t + t width_1
    gap: float
    gap_ratio: float          # (rho - avg) / sqrt(s)
    normalized_gap: float     # (rho - avg) / sqrt(s/2)
    pre_blowup_slack: float   # 1 + sqrt(s'/2) - (rho' - avg')
    implied_bound: float      # 1/t + sqrt(s(G)/2)
    converged: bool


def _gap(rho: SpectralInterval, avg: Fraction) -> Fraction:
    return max(rho.mid - avg, Fraction(0))


def _validate_ts(ts: Iterable[int]) -> List[int]:
    values = [int(t) for t in ts]
    if not values:
        raise ParameterError("blowup_limit_demo needs at least one factor t")
    bad = [t for t in values if t < 1]
    if bad:
        raise ParameterError(f"blow-up factors must be positive integers (got {bad[0]})")
    return values


def blowup_limit_demo(g: Graph, ts: Iterable[int], tol: Optional[TolLike] = None,
                      settings: Optional[Settings] = None) -> List[BlowupRow]:
    """
    각 t에 대해 G^(t)를 만들고 rho(G^(t)) = t rho(G) 와 사전 blow-up 상한의 여유를 보고합니다.

    Args:
        g: 기준 그래프
        ts: blow-up 배수 목록 (각 t >= 1)
        tol: 스펙트럼 구간 허용 폭

    Raises:
        ParameterError: t < 1
        BudgetError: n·t 가 limits.max_vertices 초과
    """
    settings = settings or get_settings()
    ts = _validate_ts(ts)
    for t in ts:
        if g.n * t > settings.max_vertices:
            raise BudgetError(
                f"blow-up G^({t}) would have {g.n * t} vertices (limits.max_vertices={settings.max_vertices})")

    base_stats = degree_stats(g)
    base_rho = certified_interval(g, tol, settings)
    half_s = base_stats.s / 2

    rows = []
    for t in ts:
        h = blow_up(g, t)
        stats = degree_stats(h)
        rho = base_rho if t == 1 else certified_interval(h, tol, settings)

        scaling_exact = (
            h.n == t * g.n
            and h.m == t * t * g.m
            and stats.avg_degree == t * base_stats.avg_degree
            and stats.s == t * t * base_stats.s
        )
        scaled_ok = abs(rho.mid - t * base_rho.mid) <= rho.width + t * base_rho.width

        gap = _gap(rho, stats.avg_degree)
        gap_f = float(gap)
        s_t = float(stats.s)
        rows.append(BlowupRow(
            t=t,
            n=h.n,
            m=h.m,
            avg=format_rational(stats.avg_degree),
            s=format_rational(stats.s),
            rho_lo=format_rational(rho.lo),
            rho_hi=format_rational(rho.hi),
            rho=rho.mid_float,
            scaling_exact=scaling_exact,
            rho_scaled_check=scaled_ok,
            gap=gap_f,
            gap_ratio=gap_f / math.sqrt(s_t) if s_t > 0 else 0.0,
            normalized_gap=gap_f / math.sqrt(s_t / 2) if s_t > 0 else 0.0,
            pre_blowup_slack=1 + math.sqrt(s_t / 2) - gap_f,
            implied_bound=1 / t + math.sqrt(float(half_s)),
            converged=rho.converged,
        ))
        logger.debug(f"blow-up t={t}: n={h.n}, m={h.m}, rho~{rho.mid_float:.9f}, scaled_ok={scaled_ok}")

    if not all(r.rho_scaled_check and r.scaling_exact for r in rows):
        logger.warning(f"blow-up scaling check failed for base graph n={g.n}, m={g.m}")
    return rows


def blowup_frame(rows: List[BlowupRow]) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in rows])
