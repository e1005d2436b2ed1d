# rhobound/rhobound/bounds/optimizer.py
"""
이동 파라미터 c 최적화

f_c(x) = x^2 - c x 에 행합 상한을 적용하면 rho <= c/2 + sqrt(c^2/4 + C_c),
C_c = max_u r_u(A^2 - cA). 증명은 c = d-1 로 고정하지만, 여기서는 격자 위에서 c를 골라 더 작은 상한을 찾습니다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from ..core.graph import Graph, degree_stats
from ..reporting.logger import get_logger
from ..spectral.polynomial import Polynomial, row_sum_poly_bound
from ..spectral.quadratic import larger_root
from ..utils.rationals import Exact

logger = get_logger(__name__)


@dataclass(frozen=True)
class ShiftBound:
    c_best: Fraction
    bound: float
    proof_c: int          # d - 1
    proof_bound: float    # c = d-1 에서의 값
    evaluated: Tuple[Tuple[Fraction, float], ...]


def half_integer_grid(max_degree: int) -> List[Fraction]:
    """0, 1/2, 1, ..., max_degree"""
    return [Fraction(k, 2) for k in range(2 * max_degree + 1)]


def shift_root(g: Graph, c: Exact) -> Optional[float]:
    rows_max = row_sum_poly_bound(g, Polynomial.shifted_square(c))
    return larger_root(c, rows_max)


def optimized_shift_bound(g: Graph, grid: Optional[Iterable[Exact]] = None) -> ShiftBound:
    """
    격자의 각 c에 대해 상한을 계산하고 가장 작은 값을 고릅니다 (동률이면 작은 c).
    격자에는 항상 d-1 이 포함되므로 결과는 c = d-1 상한 이하입니다.
    """
    proof_c = degree_stats(g).d_ceil - 1
    candidates = half_integer_grid(g.max_degree) if grid is None else [Fraction(c) for c in grid]
    if Fraction(proof_c) not in candidates:
        candidates.append(Fraction(proof_c))

    evaluated = []
    proof_bound = None
    for c in sorted(set(candidates)):
        root = shift_root(g, c)
        if root is None:
            # f(rho) >= -c^2/4 이므로 판별식은 음수가 될 수 없음
            logger.error(f"negative discriminant at c={c} on n={g.n}, m={g.m}")
            continue
        evaluated.append((c, root))
        if c == proof_c:
            proof_bound = root

    c_best, bound = min(evaluated, key=lambda item: (item[1], item[0]))
    return ShiftBound(
        c_best=c_best,
        bound=bound,
        proof_c=proof_c,
        proof_bound=proof_bound,
        evaluated=tuple(evaluated),
    )
