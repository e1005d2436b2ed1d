# rhobound/rhobound/spectral/quadratic.py
"""
rho^2 - c rho <= C 로부터 rho 상한 (큰 근) 을 구하는 보조 함수
"""
import math
from fractions import Fraction
from typing import Optional

from ..core.errors import ParameterError
from ..utils.rationals import Exact


def larger_root(c: Exact, C: Exact) -> Optional[float]:
    """
    x^2 - c x - C = 0 의 큰 근 c/2 + sqrt(c^2/4 + C). 판별식이 음수면 None.
    판별식은 정확한 유리수로 계산한 뒤 마지막에만 sqrt를 씁니다.
    """
    c, C = Fraction(c), Fraction(C)
    disc = c * c / 4 + C
    if disc < 0:
        return None
    return float(c / 2) + math.sqrt(disc)


def quadratic_radius_bound(d: int, C: Exact) -> float:
    """
    rho^2 - (d-1) rho <= C 이면 rho <= (d-1)/2 + sqrt((d-1)^2/4 + C).

    C와 d에 대해 단조 비감소입니다.

    Raises:
        ParameterError: C < 0 또는 d < 0
    """
    if C < 0:
        raise ParameterError(f"quadratic_radius_bound requires C >= 0 (C={C})")
    if d < 0:
        raise ParameterError(f"quadratic_radius_bound requires d >= 0 (d={d})")
    return larger_root(d - 1, C)
