# rhobound/rhobound/spectral/interval.py
"""
스펙트럼 반경 rho(G)의 인증 구간

- 하한: 명시적 음이 아닌 정수 벡터 x의 Rayleigh quotient x^T A x / x^T x (정확한 유리수)
- 상한: 연결 요소별로 엄격히 양인 정수 벡터 x의 Collatz-Wielandt 비 max_i (Ax)_i / x_i (정확한 유리수)
- x는 (A + I) 거듭제곱 반복으로 얻은 float 벡터를 2^bits 배 해서 정수로 내리고, 0 이하 성분은 1로 올립니다.

float는 후보 벡터를 찾는 데만 쓰고, 구간 끝점은 전부 정수 연산으로 계산하므로 반올림 오차가 없습니다.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.sparse as sp

from ..core.errors import ParameterError
from ..core.graph import Graph, connected_components
from ..reporting.logger import get_logger
from ..utils.settings import Settings, get_settings

logger = get_logger(__name__)

TolLike = Union[float, int, str, Fraction]


@dataclass(frozen=True)
class SpectralInterval:
    """lo <= rho(G) <= hi 인증 구간. 두 끝점 모두 정확한 유리수"""
    lo: Fraction
    hi: Fraction
    converged: bool = True
    iterations: int = 0

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def mid_float(self) -> float:
        return float(self.mid)

    def contains(self, value: float, slack: float = 0.0) -> bool:
        """float 값이 [lo - slack, hi + slack] 안에 있는지"""
        return float(self.lo) - slack <= value <= float(self.hi) + slack


def as_tolerance(tol: Optional[TolLike], settings: Optional[Settings] = None) -> Fraction:
    """tol을 양의 유리수로 변환. None이면 설정 기본값"""
    if tol is None:
        tol = (settings or get_settings()).default_tol
    try:
        exact = Fraction(tol)
    except (TypeError, ValueError):
        raise ParameterError(f"tolerance must be a positive number, got {tol!r}")
    if exact <= 0:
        raise ParameterError(f"tolerance must be positive (tol={tol})")
    return exact


def iteration_cap(n: int, tol: Fraction, factor: int = 10) -> int:
    """factor * n * ceil(log2(1/tol))"""
    bits = max(1, math.ceil(math.log2(float(1 / tol)))) if tol < 1 else 1
    return max(1, factor * n * bits)


# ---------------------------------------------------------------------------
# 정수 벡터 인증
# ---------------------------------------------------------------------------

def _integer_vector(x: np.ndarray, scale_bits: int) -> List[int]:
    """
    max가 1 근처인 양의 float 벡터를 정수 벡터로 바꿉니다.
    가장 작은 성분도 scale_bits 비트 정도 정밀도를 갖도록 지수를 올리고, 0 이하는 1로 올립니다.
    """
    xmax = float(x.max())
    if not xmax > 0:
        return [1] * len(x)
    x = x / xmax
    positive = x[x > 0]
    _, exp = math.frexp(float(positive.min())) if positive.size else (0.0, 0)
    bits = scale_bits + min(max(0, -exp), 960)
    return [max(1, int(math.ldexp(float(v), bits))) for v in x]


def certify_vector(adj: Sequence[Sequence[int]], xi: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """
    정수 벡터 xi (모든 성분 >= 1)에 대한 (Rayleigh 하한, Collatz-Wielandt 상한).
    adj는 연결 그래프의 인접 리스트여야 상한이 유효합니다.
    """
    axi = [sum(xi[v] for v in nbrs) for nbrs in adj]
    lo = Fraction(sum(a * b for a, b in zip(xi, axi)), sum(b * b for b in xi))
    best = 0
    for i in range(1, len(xi)):
        # axi[i]/xi[i] > axi[best]/xi[best]
        if axi[i] * xi[best] > axi[best] * xi[i]:
            best = i
    hi = Fraction(axi[best], xi[best])
    return lo, hi


def _matvec_operator(g: Graph, dense_limit: int):
    n = g.n
    adj = g.adjacency_lists()
    if n <= dense_limit:
        A = np.zeros((n, n))
        for u, nbrs in enumerate(adj):
            A[u, list(nbrs)] = 1.0
        return A
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(nbrs) for nbrs in adj])
    indices = np.fromiter((v for nbrs in adj for v in nbrs), dtype=np.int64, count=int(indptr[-1]))
    data = np.ones(len(indices))
    return sp.csr_matrix((data, indices, indptr), shape=(n, n))


def _certify_connected(g: Graph, tol: Fraction, cap: int, settings: Settings) -> SpectralInterval:
    """연결 그래프 하나의 인증 구간. 시작 벡터는 차수 벡터"""
    avg = Fraction(2 * g.m, g.n)
    if g.m == 0:
        return SpectralInterval(Fraction(0), Fraction(0), True, 0)

    adj = g.adjacency_lists()
    x = np.array(g.degrees, dtype=float)
    lo, hi = certify_vector(adj, _integer_vector(x, settings.scale_bits))
    lo = max(lo, avg)
    if hi - lo <= tol:
        return SpectralInterval(lo, hi, True, 0)

    A = _matvec_operator(g, settings.dense_limit)
    float_tol = float(tol)
    check_every = max(1, settings.check_every)
    checks = 0
    it = 0
    for it in range(1, cap + 1):
        # (A + I) 반복: 이분 그래프에서도 -rho와 섞이지 않음
        x = A @ x + x
        x = x / x.max()
        if it % check_every and it != cap:
            continue
        checks += 1
        ax = A @ x
        with np.errstate(divide="ignore", invalid="ignore"):
            ratios = ax / x
        spread = float(np.nanmax(ratios) - np.nanmin(ratios)) if np.all(x > 0) else math.inf
        if spread > 0.9 * float_tol and checks % 16 and it != cap:
            continue
        cand_lo, cand_hi = certify_vector(adj, _integer_vector(x, settings.scale_bits))
        # 인증 구간들의 교집합도 인증 구간
        lo, hi = max(lo, cand_lo), min(hi, cand_hi)
        if hi - lo <= tol:
            return SpectralInterval(lo, hi, True, it)

    logger.warning(f"spectral iteration hit cap ({cap}) on n={g.n}, m={g.m}; width={float(hi - lo):.3e}")
    return SpectralInterval(lo, hi, False, it)


def certified_interval(g: Graph, tol: Optional[TolLike] = None, settings: Optional[Settings] = None) -> SpectralInterval:
    """
    lo <= rho(G) <= hi 를 보장하는 구간. 반복 상한 안에 수렴하면 hi - lo <= tol.

    비연결 그래프는 요소별 구간의 최댓값 (lo, hi 각각)입니다. lo >= 2m/n 은 항상 성립합니다
    (모든 성분이 1인 벡터의 Rayleigh quotient).

    Raises:
        ParameterError: tol <= 0
    """
    settings = settings or get_settings()
    tol = as_tolerance(tol, settings)
    cap = iteration_cap(g.n, tol, settings.iteration_cap_factor)

    components = connected_components(g)
    if len(components) == 1:
        return _certify_connected(g, tol, cap, settings)

    parts = [_certify_connected(c.graph, tol, cap, settings) for c in components]
    return SpectralInterval(
        lo=max(p.lo for p in parts),
        hi=max(p.hi for p in parts),
        converged=all(p.converged for p in parts),
        iterations=max(p.iterations for p in parts),
    )


def trivial_interval(g: Graph) -> SpectralInterval:
    """계산 없이 얻는 [2m/n, max degree] 구간 (Collatz-Sinogowitz 하한, 최대 차수 상한)"""
    return SpectralInterval(Fraction(2 * g.m, g.n), Fraction(g.max_degree), False, 0)
