# rhobound/rhobound/spectral/polynomial.py
"""
정수(또는 유리수) 계수 일변수 다항식과 행합 상한 엔진

f(A)·1 을 A^2 을 만들지 않고 Horner 방식의 행렬-벡터 곱만으로 계산합니다.
모든 값은 정확한 정수/유리수입니다.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..core.graph import Graph
from ..utils.rationals import Exact


def _normalize(value) -> Exact:
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q


@dataclass(frozen=True)
class Polynomial:
    """
    coeffs[i]는 x^i의 계수 (상수항 먼저). 영다항식은 coeffs == () 이고 degree == -1.
    """
    coeffs: Tuple[Exact, ...]

    def __post_init__(self):
        coeffs = [_normalize(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def of(cls, *coeffs: Exact) -> 'Polynomial':
        return cls(tuple(coeffs))

    @classmethod
    def shifted_square(cls, c: Exact) -> 'Polynomial':
        """x^2 - c x"""
        return cls((0, -c, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __call__(self, x: Exact) -> Exact:
        acc: Exact = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def enclose(self, lo: Exact, hi: Exact) -> Tuple[Fraction, Fraction]:
        """
        구간 Horner로 f([lo, hi])를 감싸는 정확한 유리수 구간을 반환합니다.
        참 범위보다 넓을 수 있지만 항상 포함합니다.
        """
        lo, hi = Fraction(lo), Fraction(hi)
        a = b = Fraction(0)
        for c in reversed(self.coeffs):
            products = (a * lo, a * hi, b * lo, b * hi)
            a, b = min(products) + c, max(products) + c
        return a, b

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            power = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"{c}{'*' if power else ''}{power}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_apply_ones(g: Graph, f: Polynomial) -> Tuple[Exact, ...]:
    """
    f(A)·1 의 각 성분 r_u(f(A)) 를 계산합니다.

    Horner: y <- c_k·1, 이후 y <- A y + c_i·1. 계수가 정수이면 결과도 정수입니다.
    """
    n = g.n
    if f.is_zero:
        return (0,) * n
    adj = g.adjacency_lists()
    coeffs = f.coeffs
    y = [coeffs[-1]] * n
    for c in reversed(coeffs[:-1]):
        y = [sum(y[v] for v in nbrs) + c for nbrs in adj]
    return tuple(y)


def row_sum_poly_bound(g: Graph, f: Polynomial) -> Exact:
    """
    max_u r_u(f(A)). 임의의 다항식 f에 대해 f(rho) <= 이 값.

    비연결 그래프에서도 그대로 적용합니다: rho를 갖는 요소의 (음이 아닌) 왼쪽 Perron 벡터 x에 대해
    x^T f(A) 1 = f(rho) x^T 1 이고, 그 요소의 행합은 전체 최댓값 이하이므로 같은 결론이 나옵니다.
    """
    return max(poly_apply_ones(g, f))
