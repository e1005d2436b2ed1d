# rhobound/rhobound/verify/star_sweep.py
"""
별 그래프 K_{1,n-1} 의 gap ratio 스윕

rho = sqrt(n-1), 2m/n = 2(n-1)/n, s = 2(n-1)(n-2)/n 이고
ratio = (rho - 2m/n) / sqrt(s) 는 n이 커질수록 sqrt(1/2) 에 접근합니다.
"""
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np
import pandas as pd

from ..core.errors import ParameterError
from ..core.generators import generate
from ..reporting.logger import get_logger
from ..spectral.interval import certified_interval
from ..utils.rationals import format_rational
from ..utils.settings import Settings, get_settings

logger = get_logger(__name__)

DEFAULT_NS = (5, 10, 100, 1000, 10_000, 100_000, 1_000_000)
CROSS_CHECK_LIMIT = 10_000


def _validate_ns(ns: Iterable[int]) -> np.ndarray:
    values = np.asarray(list(ns), dtype=np.int64)
    if values.size == 0:
        raise ParameterError("star_sweep needs at least one n")
    if (values < 2).any():
        raise ParameterError(f"star_sweep requires n >= 2 (got n={int(values[values < 2][0])})")
    return values


def star_ratios(ns: Iterable[int]) -> np.ndarray:
    """닫힌 형태 ratio (전체 정밀도). s = 0 인 n = 2 는 0"""
    n = _validate_ns(ns).astype(float)
    rho = np.sqrt(n - 1)
    gap = rho - 2 * (n - 1) / n
    s = 2 * (n - 1) * (n - 2) / n
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(s > 0, gap / np.sqrt(s), 0.0)
    return ratio


def star_sweep(ns: Iterable[int], cross_check: bool = True, tol: Optional[float] = None,
               settings: Optional[Settings] = None) -> pd.DataFrame:
    """
    Args:
        ns: 정점 수 목록 (각 n >= 2)
        cross_check: n <= 10^4 에서 닫힌 형태 rho 를 인증 구간과 대조

    Returns:
        n, rho, gap, s, ratio(소수 6자리), rho_certified 열을 가진 DataFrame

    Raises:
        ParameterError: n < 2
    """
    settings = settings or get_settings()
    values = _validate_ns(ns)
    n = values.astype(float)
    rho = np.sqrt(n - 1)
    gap = rho - 2 * (n - 1) / n
    ratio = star_ratios(values)

    certified = []
    for size, closed in zip(values.tolist(), rho.tolist()):
        if not cross_check or size > CROSS_CHECK_LIMIT:
            certified.append(None)
            continue
        interval = certified_interval(generate("star", {"n": size}), tol, settings)
        # 닫힌 형태 float 반올림 오차만큼 여유
        ok = interval.contains(closed, 1e-12 * closed)
        if not ok:
            logger.error(f"star n={size}: closed form {closed} outside certified "
                         f"[{float(interval.lo)}, {float(interval.hi)}]")
        certified.append(ok)

    frame = pd.DataFrame({
        "n": values,
        "rho": rho,
        "gap": gap,
        "s": [format_rational(Fraction(2 * (k - 1) * (k - 2), k)) for k in values.tolist()],
        "ratio": np.round(ratio, 6),
        "rho_certified": certified,
    })
    logger.info(f"star sweep: {len(frame)} sizes, max ratio {float(ratio.max()):.6f} "
                f"(limit {np.sqrt(0.5):.6f})")
    return frame
