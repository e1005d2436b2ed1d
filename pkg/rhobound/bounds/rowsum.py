# rhobound/rhobound/bounds/rowsum.py
"""
핵심 부등식 r_u(A^2 - (d-1)A) <= d + s/2 와 정점별 Case 1 / Case 2 분해

모든 값은 정확한 정수/유리수로 계산하고 비교합니다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from ..core.errors import ParameterError
from ..core.graph import DegreeStats, Graph, degree_stats
from ..spectral.polynomial import Polynomial, poly_apply_ones
from ..utils.rationals import Exact


@dataclass(frozen=True)
class RowSumCheck:
    max_row: Exact
    budget: Fraction
    passed: bool
    witness: Optional[int] = None


@dataclass(frozen=True)
class ChainStep:
    """부등식 사슬의 한 줄: 이전 값 relation value"""
    relation: str   # '=', '<=', '<'
    value: Fraction
    holds: bool


@dataclass(frozen=True)
class CaseDecomposition:
    vertex: int
    case: int                        # 1: d(u) <= d-1, 2: d(u) >= d
    neighbor_split: Tuple[int, int]  # (|N(u) ∩ W<=d-1|, |N(u) ∩ W>=d|)
    row_value: Exact                 # r_u(A^2 - (d-1)A)
    budget: Fraction                 # d + s/2
    slack: Fraction                  # budget - row_value
    excess: Fraction                 # sum_{W>=d} (d(v) - d) <= s/2
    steps: Tuple[ChainStep, ...]

    @property
    def chain_holds(self) -> bool:
        return all(step.holds for step in self.steps)


def shift_polynomial(stats: DegreeStats) -> Polynomial:
    """f(x) = x^2 - (d-1)x"""
    return Polynomial.shifted_square(stats.d_ceil - 1)


def row_budget(stats: DegreeStats) -> Fraction:
    return stats.d_ceil + stats.s / 2


def intermediate_rowsum_check(g: Graph, stats: Optional[DegreeStats] = None) -> RowSumCheck:
    """
    max_u r_u(A^2 - (d-1)A) 와 budget = d + s/2 를 정확히 비교합니다.
    실패하면 (증명된 부등식이므로 구현 버그) 가장 큰 행의 정점을 witness로 돌려줍니다.
    """
    stats = stats or degree_stats(g)
    rows = poly_apply_ones(g, shift_polynomial(stats))
    budget = row_budget(stats)
    witness = max(range(g.n), key=lambda u: rows[u])
    max_row = rows[witness]
    passed = max_row <= budget
    return RowSumCheck(max_row=max_row, budget=budget, passed=passed, witness=None if passed else witness)


def _chain(start: Fraction, links: List[Tuple[str, Fraction]]) -> Tuple[ChainStep, ...]:
    steps = []
    prev = start
    for relation, value in links:
        if relation == "=":
            holds = prev == value
        else:
            # '<' 도 '<=' 로 검사 (Case 1 마지막 줄의 엄격성은 기록만 함)
            holds = prev <= value
        steps.append(ChainStep(relation, value, holds))
        prev = value
    return tuple(steps)


def per_vertex_case_decomposition(g: Graph, u: int, stats: Optional[DegreeStats] = None) -> CaseDecomposition:
    """
    정점 u에 대해 증명의 Case 1 (d(u) <= d-1) / Case 2 (d(u) >= d) 부등식 사슬을 줄마다 정확히 계산합니다.

    Case 1:
        r_u(A^2) = sum_{N(u)} d(v)
                 = sum_{N(u)∩low} d(v) + sum_{N(u)∩high} d(v)
                <= (d-1)|N∩low| + sum_{N∩high}(d(v)-d) + d|N∩high|
                <= d|N(u)| + sum_{W>=d}(d(v)-d)
                <= (d-1)d(u) + d - 1 + s/2
                 < (d-1)d(u) + d + s/2
    Case 2:
        ... <= d|N(u)| + sum_{W>=d, v!=u}(d(v)-d)
             = (d-1)d(u) + d + sum_{W>=d}(d(v)-d)
            <= (d-1)d(u) + d + s/2

    Raises:
        ParameterError: u가 범위 밖
    """
    if not (0 <= u < g.n):
        raise ParameterError(f"vertex {u} out of range 0..{g.n - 1}")
    stats = stats or degree_stats(g)
    d = stats.d_ceil
    deg = stats.degrees
    half_s = stats.s / 2
    high = stats.partition_high
    nbrs = g.neighbors(u)

    nbr_low = [v for v in nbrs if v not in high]
    nbr_high = [v for v in nbrs if v in high]
    excess = stats.high_excess
    du = deg[u]

    r_a2 = Fraction(sum(deg[v] for v in nbrs))
    split_sum = Fraction(sum(deg[v] for v in nbr_low) + sum(deg[v] for v in nbr_high))
    bound_split = Fraction((d - 1) * len(nbr_low) + sum(deg[v] - d for v in nbr_high) + d * len(nbr_high))

    if du <= d - 1:
        case = 1
        links = [
            ("=", split_sum),
            ("<=", bound_split),
            ("<=", d * du + excess),
            ("<=", (d - 1) * du + d - 1 + half_s),
            ("<", (d - 1) * du + d + half_s),
        ]
    else:
        case = 2
        excess_without_u = excess - (du - d)
        links = [
            ("=", split_sum),
            ("<=", bound_split),
            ("<=", d * du + excess_without_u),
            ("=", (d - 1) * du + d + excess),
            ("<=", (d - 1) * du + d + half_s),
        ]
    steps = _chain(r_a2, links)

    row_value = r_a2 - (d - 1) * du
    budget = row_budget(stats)
    return CaseDecomposition(
        vertex=u,
        case=case,
        neighbor_split=(len(nbr_low), len(nbr_high)),
        row_value=row_value,
        budget=budget,
        slack=budget - row_value,
        excess=excess,
        steps=steps,
    )


def all_case_decompositions(g: Graph, stats: Optional[DegreeStats] = None) -> List[CaseDecomposition]:
    stats = stats or degree_stats(g)
    return [per_vertex_case_decomposition(g, u, stats) for u in range(g.n)]
