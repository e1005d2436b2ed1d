# rhobound/rhobound/bounds/report.py
"""
그래프별 상한 비교 리포트 (BoundReport)

- rho(G) - 2m/n 을 네 가지 상수의 sqrt(c·s) 와 사전 blow-up 상한 1 + sqrt(s/2) 에 대해 검사
- 판정은 정확한 유리수 제곱 비교로 합니다. float는 보고용 값에만 씁니다.

판정 의미:
    pass          rho.lo - 2m/n <= B + width 이고 (수렴했거나 hi 쪽에서도 성립)
    inconclusive  반복이 수렴하지 않았고 hi 쪽으로는 확인되지 않음
    fail          rho.lo - 2m/n > B + width (인증된 반례 후보)
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from ..core.graph import DegreeStats, Graph, degree_stats
from ..core.formats import graph6_str
from ..spectral.interval import SpectralInterval, TolLike, certified_interval
from ..spectral.quadratic import larger_root
from ..utils.rationals import format_rational, parse_rational, round_float
from ..utils.settings import Settings, get_settings

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

# (이름, sqrt(c·s)의 c, 상수항 offset)
BOUND_CONSTANTS: Tuple[Tuple[str, Fraction, int], ...] = (
    ("nikiforov06", Fraction(1), 0),
    ("zhang", Fraction(9, 10), 0),
    ("rw", Fraction(2, 3), 0),
    ("theorem1", Fraction(1, 2), 0),
    ("pre_blowup", Fraction(1, 2), 1),
)


def bound_value(s: Fraction, c: Fraction, offset: int = 0) -> float:
    return offset + math.sqrt(c * s)


def gap_within(gap: Fraction, s: Fraction, c: Fraction, offset: int = 0) -> bool:
    """gap <= offset + sqrt(c·s) 를 정확히 판정 (sqrt 없이 제곱 비교)"""
    lhs = gap - offset
    return lhs <= 0 or lhs * lhs <= c * s


def split_root_chain(d: int, s: Fraction) -> Tuple[float, float]:
    """
    rho^2 - (d-1) rho <= d + s/2 에서
        rho <= (d-1)/2 + sqrt((d+1)^2/4 + s/2) <= d + sqrt(s/2)
    두 값을 (quadratic_root, split_bound) 로 반환합니다.
    """
    root = larger_root(d - 1, d + s / 2)
    return root, d + math.sqrt(s / 2)


def verdict_for(rho: SpectralInterval, avg: Fraction, s: Fraction, c: Fraction, offset: int = 0) -> str:
    lo_gap = rho.lo - avg
    if not gap_within(lo_gap - rho.width, s, c, offset):
        return FAIL
    if rho.converged or gap_within(rho.hi - avg, s, c, offset):
        return PASS
    return INCONCLUSIVE


@dataclass
class BoundReport:
    """그래프 하나에 대한 상한 비교 결과 (평탄한 JSON 객체로 직렬화)"""
    n: int
    m: int
    avg_degree: Fraction
    s: Fraction
    d_ceil: int
    rho: SpectralInterval
    bound_nikiforov06: float
    bound_zhang: float
    bound_rw: float
    bound_theorem1: float
    bound_pre_blowup: float
    bound_quadratic_root: float
    bound_split: float
    gap: float
    gap_ratio: float
    theorem_exact: bool
    verdicts: Dict[str, str] = field(default_factory=dict)
    graph6: str = ""

    @property
    def passed(self) -> bool:
        return all(v == PASS for v in self.verdicts.values())

    @property
    def has_failure(self) -> bool:
        return any(v == FAIL for v in self.verdicts.values())

    def to_dict(self, digits: int = 15) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "avg_degree": format_rational(self.avg_degree),
            "s": format_rational(self.s),
            "d_ceil": self.d_ceil,
            "rho_lo": format_rational(self.rho.lo),
            "rho_hi": format_rational(self.rho.hi),
            "rho_mid": round_float(self.rho.mid_float, digits),
            "rho_width": round_float(float(self.rho.width), digits),
            "rho_converged": self.rho.converged,
            "rho_iterations": self.rho.iterations,
        }
        for name in ("nikiforov06", "zhang", "rw", "theorem1", "pre_blowup", "quadratic_root", "split"):
            out[f"bound_{name}"] = round_float(getattr(self, f"bound_{name}"), digits)
        out["gap"] = round_float(self.gap, digits)
        out["gap_ratio"] = round_float(self.gap_ratio, digits)
        out["theorem_exact"] = self.theorem_exact
        for name, verdict in self.verdicts.items():
            out[f"verdict_{name}"] = verdict
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BoundReport':
        """to_dict 결과를 되돌립니다 (float는 직렬화된 값 그대로)."""
        rho = SpectralInterval(
            lo=parse_rational(data["rho_lo"]),
            hi=parse_rational(data["rho_hi"]),
            converged=bool(data["rho_converged"]),
            iterations=int(data["rho_iterations"]),
        )
        verdicts = {k[len("verdict_"):]: v for k, v in data.items() if k.startswith("verdict_")}
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            avg_degree=parse_rational(data["avg_degree"]),
            s=parse_rational(data["s"]),
            d_ceil=int(data["d_ceil"]),
            rho=rho,
            bound_nikiforov06=float(data["bound_nikiforov06"]),
            bound_zhang=float(data["bound_zhang"]),
            bound_rw=float(data["bound_rw"]),
            bound_theorem1=float(data["bound_theorem1"]),
            bound_pre_blowup=float(data["bound_pre_blowup"]),
            bound_quadratic_root=float(data["bound_quadratic_root"]),
            bound_split=float(data["bound_split"]),
            gap=float(data["gap"]),
            gap_ratio=float(data["gap_ratio"]),
            theorem_exact=bool(data["theorem_exact"]),
            verdicts=verdicts,
            graph6=str(data.get("graph6", "")),
        )


def build_report(g: Graph, stats: DegreeStats, rho: SpectralInterval, encode: bool = True) -> BoundReport:
    """이미 계산된 차수 통계와 구간으로 리포트를 채웁니다. encode=False 이면 graph6 문자열을 비워 둡니다."""
    avg, s = stats.avg_degree, stats.s
    gap_exact = max(rho.lo - avg, Fraction(0))
    gap = float(gap_exact)
    gap_ratio = gap / math.sqrt(s) if s > 0 else 0.0
    root, split = split_root_chain(stats.d_ceil, s)

    verdicts = {name: verdict_for(rho, avg, s, c, offset) for name, c, offset in BOUND_CONSTANTS}
    # 헤드라인 판정: (rho.lo - 2m/n)^2 <= s/2 를 폭 보정 없이 정확히
    theorem_exact = gap_within(rho.lo - avg, s, Fraction(1, 2))

    return BoundReport(
        n=g.n,
        m=g.m,
        avg_degree=avg,
        s=s,
        d_ceil=stats.d_ceil,
        rho=rho,
        bound_nikiforov06=bound_value(s, Fraction(1)),
        bound_zhang=bound_value(s, Fraction(9, 10)),
        bound_rw=bound_value(s, Fraction(2, 3)),
        bound_theorem1=bound_value(s, Fraction(1, 2)),
        bound_pre_blowup=bound_value(s, Fraction(1, 2), 1),
        bound_quadratic_root=root,
        bound_split=split,
        gap=gap,
        gap_ratio=gap_ratio,
        theorem_exact=theorem_exact,
        verdicts=verdicts,
        graph6=graph6_str(g) if encode else "",
    )


def evaluate_bounds(g: Graph, tol: Optional[TolLike] = None, settings: Optional[Settings] = None) -> BoundReport:
    """
    차수 통계와 인증 구간을 계산해 BoundReport를 만듭니다.

    반복이 수렴하지 않으면 해당 판정은 inconclusive로 표시되며, 잘못된 pass는 나오지 않습니다.
    """
    settings = settings or get_settings()
    stats = degree_stats(g)
    rho = certified_interval(g, tol, settings)
    return build_report(g, stats, rho)
