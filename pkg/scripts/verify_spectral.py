# scripts/verify_spectral.py
"""
다항식 행합 엔진 / 인증 스펙트럼 구간 / 이차식 근 검증
"""
import math
import os
import sys
from fractions import Fraction

import numpy as np
import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.core.errors import ParameterError
from rhobound.core.generators import generate
from rhobound.core.graph import degree_stats, disjoint_union, edgeless
from rhobound.spectral.interval import certified_interval, trivial_interval
from rhobound.spectral.polynomial import Polynomial, poly_apply_ones, row_sum_poly_bound
from rhobound.spectral.quadratic import larger_root, quadratic_radius_bound
from rhobound.utils.settings import Settings

STAR5 = generate("star", {"n": 5})


def test_poly_apply_ones_examples():
    print("\n--- poly_apply_ones ---")
    g = generate("gnp_random", {"n": 12, "p": 0.3, "seed": 2})
    assert poly_apply_ones(g, Polynomial.of(0, 1)) == g.degrees
    assert poly_apply_ones(g, Polynomial.of(1)) == (1,) * g.n
    assert poly_apply_ones(g, Polynomial.of()) == (0,) * g.n

    # 별 K_{1,4}: A^2 - A
    assert poly_apply_ones(STAR5, Polynomial.of(0, -1, 1)) == (0, 3, 3, 3, 3)
    assert poly_apply_ones(STAR5, Polynomial.shifted_square(1)) == (0, 3, 3, 3, 3)
    print("✅ 1 / x / x^2 - x")


def test_poly_apply_ones_matches_dense():
    g = generate("gnp_random", {"n": 10, "p": 0.4, "seed": 5})
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges():
        A[u, v] = A[v, u] = 1
    f = Polynomial.of(-3, 2, -1, 1)
    dense = (-3 * np.eye(g.n, dtype=np.int64) + 2 * A - A @ A + A @ A @ A) @ np.ones(g.n, dtype=np.int64)
    assert list(poly_apply_ones(g, f)) == dense.tolist()


def test_poly_linearity():
    f = Polynomial.of(1, -2, 1)
    h = Polynomial.of(0, 0, -1, 3)
    for seed in range(5):
        g = generate("gnp_random", {"n": 9, "p": 0.5, "seed": seed})
        lhs = poly_apply_ones(g, f + h)
        rhs = tuple(a + b for a, b in zip(poly_apply_ones(g, f), poly_apply_ones(g, h)))
        assert lhs == rhs


def test_polynomial_basics():
    assert Polynomial.of(1, 2, 0, 0).degree == 1
    assert Polynomial.of(0, 0).is_zero
    assert Polynomial.of(Fraction(4, 2)).coeffs == (2,)
    assert str(Polynomial.of(-1, 0, 1)) == "1*x^2 - 1"
    assert Polynomial.of(-1, 0, 1)(3) == 8


def test_polynomial_enclose():
    lo, hi = Polynomial.of(0, -1, 0, 1).enclose(1, 2)
    assert lo <= 0 and hi >= 6
    f = Polynomial.of(-3, 2, -1, 1)
    for a, b in ((0, 1), (-2, 3), (Fraction(1, 3), Fraction(5, 2))):
        enc_lo, enc_hi = f.enclose(a, b)
        for k in range(11):
            x = a + (b - a) * Fraction(k, 10)
            assert enc_lo <= f(x) <= enc_hi


def test_row_sum_poly_bound_examples():
    c84 = generate("circulant_regular", {"n": 8, "k": 4})
    assert row_sum_poly_bound(c84, Polynomial.of(0, 1)) == 4
    assert row_sum_poly_bound(STAR5, Polynomial.of(0, -1, 1)) == 3
    assert row_sum_poly_bound(STAR5, Polynomial.of()) == 0


def test_certified_interval_complete_and_regular():
    print("\n--- certified_interval (정규) ---")
    for n in (2, 5, 30, 200):
        rho = certified_interval(generate("complete", {"n": n}), 1e-9)
        assert rho.lo == rho.hi == n - 1
    for g, d in ((generate("circulant_regular", {"n": 10, "k": 4}), 4), (generate("cycle", {"n": 5}), 2)):
        rho = certified_interval(g, 1e-9)
        assert rho.lo == rho.hi == d and rho.converged
    print("✅ K_n / 순환 그래프는 [d, d]")


def test_certified_interval_star_and_path():
    print("\n--- certified_interval (별 / 경로) ---")
    for n in (5, 100, 10_000):
        rho = certified_interval(generate("star", {"n": n}), 1e-8)
        assert rho.converged
        assert rho.width <= Fraction(1, 10 ** 8)
        assert rho.lo * rho.lo <= n - 1 <= rho.hi * rho.hi
    p3 = certified_interval(generate("path", {"n": 3}), 1e-9)
    assert p3.lo * p3.lo <= 2 <= p3.hi * p3.hi
    assert p3.contains(math.sqrt(2), 1e-12)
    assert not p3.contains(1.5) and not p3.contains(1.42)
    assert p3.width <= Fraction(1, 10 ** 9)
    print("✅ sqrt(n-1) / sqrt(2) 포함")


def test_certified_interval_lower_bound_average_degree():
    for seed in range(10):
        g = generate("gnp_random", {"n": 25, "p": 0.2, "seed": seed})
        rho = certified_interval(g, 1e-9)
        stats = degree_stats(g)
        assert rho.lo >= stats.avg_degree
        assert rho.hi <= g.max_degree
        assert rho.lo <= rho.hi
        dense = np.zeros((g.n, g.n))
        for u, v in g.edges():
            dense[u, v] = dense[v, u] = 1.0
        top = float(np.linalg.eigvalsh(dense)[-1])
        assert float(rho.lo) - 1e-9 <= top <= float(rho.hi) + 1e-9


def test_certified_interval_disconnected():
    k3, k2 = generate("complete", {"n": 3}), generate("complete", {"n": 2})
    rho = certified_interval(disjoint_union(k3, k2), 1e-9)
    assert rho.lo == rho.hi == 2

    p3 = generate("path", {"n": 3})
    union = certified_interval(disjoint_union(k2, p3), 1e-9)
    alone = certified_interval(p3, 1e-9)
    assert union.lo == max(alone.lo, 1)
    assert union.hi == max(alone.hi, 1)

    empty = certified_interval(edgeless(4), 1e-9)
    assert empty.lo == empty.hi == 0


def test_certified_interval_irregular_strict():
    # 연결된 비정규 그래프는 rho > 2m/n
    for g in (STAR5, generate("path", {"n": 6}), generate("complete_bipartite", {"a": 2, "b": 5})):
        rho = certified_interval(g, 1e-9)
        assert rho.lo > degree_stats(g).avg_degree


def test_certified_interval_errors_and_cap():
    with pytest.raises(ParameterError):
        certified_interval(STAR5, 0)
    with pytest.raises(ParameterError):
        certified_interval(STAR5, -1e-3)

    capped = Settings(iteration_cap_factor=0, check_every=1)
    rho = certified_interval(generate("star", {"n": 50}), 1e-12, capped)
    assert not rho.converged and rho.iterations == 1
    assert rho.lo * rho.lo <= 49 <= rho.hi * rho.hi

    triv = trivial_interval(STAR5)
    assert triv.lo == Fraction(8, 5) and triv.hi == 4 and not triv.converged


def test_quadratic_examples():
    print("\n--- quadratic_radius_bound ---")
    for d in range(1, 11):
        assert abs(quadratic_radius_bound(d, d) - d) < 1e-12
    star = quadratic_radius_bound(2, Fraction(22, 5))
    assert abs(star - 2.656) < 1e-3
    assert quadratic_radius_bound(1, 0) == 0
    assert quadratic_radius_bound(0, 0) == 0

    with pytest.raises(ParameterError):
        quadratic_radius_bound(2, -1)
    with pytest.raises(ParameterError):
        quadratic_radius_bound(-1, 1)

    for d in range(0, 6):
        for C in (0, Fraction(1, 3), 2, 7, 40):
            r = quadratic_radius_bound(d, C)
            assert abs(r * r - (d - 1) * r - float(C)) <= 1e-9 * max(1.0, r * r)
            assert quadratic_radius_bound(d, C + 1) >= r
            assert quadratic_radius_bound(d + 1, C) >= r
    assert larger_root(0, -1) is None
    assert larger_root(2, 0) == 2.0
    assert math.isclose(larger_root(Fraction(1, 2), Fraction(1, 2)), 1.0)
    print("✅ d-정규 / 별 / 단조성")


if __name__ == "__main__":
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
            except Exception as e:
                failed += 1
                print(f"\n❌ {name}: {e!r}")
    if failed:
        print(f"\n❌ Verification Failed: {failed} test(s)")
        sys.exit(1)
    print("\n🎉 All verifications passed!")
