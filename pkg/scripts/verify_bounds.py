# scripts/verify_bounds.py
"""
행합 검사 / Case 분해 / 상한 리포트 / 이동 파라미터 최적화 / blow-up 데모 검증
"""
import json
import math
import os
import sys
from fractions import Fraction

import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.bounds.blowup import blowup_frame, blowup_limit_demo
from rhobound.bounds.optimizer import half_integer_grid, optimized_shift_bound
from rhobound.bounds.report import (FAIL, INCONCLUSIVE, PASS, BoundReport, build_report, evaluate_bounds,
                                    split_root_chain, verdict_for)
from rhobound.bounds.rowsum import all_case_decompositions, intermediate_rowsum_check, per_vertex_case_decomposition
from rhobound.core.errors import BudgetError, ParameterError
from rhobound.core.generators import generate
from rhobound.core.graph import degree_stats, labeled_graphs
from rhobound.spectral.interval import SpectralInterval, certified_interval
from rhobound.utils.settings import Settings

STAR5 = generate("star", {"n": 5})
P3 = generate("path", {"n": 3})
C84 = generate("circulant_regular", {"n": 8, "k": 4})


def test_rowsum_examples():
    print("\n--- intermediate_rowsum_check ---")
    regular = intermediate_rowsum_check(C84)
    assert regular.max_row == 4 and regular.budget == 4 and regular.passed
    assert regular.witness is None

    star = intermediate_rowsum_check(STAR5)
    assert star.max_row == 3 and star.budget == Fraction(22, 5) and star.passed
    print("✅ 순환 그래프 / 별")


def test_rowsum_all_graphs_n5():
    for n in range(1, 6):
        for _, g in labeled_graphs(n):
            assert intermediate_rowsum_check(g).passed


def test_case_decomposition_star():
    print("\n--- per_vertex_case_decomposition ---")
    center = per_vertex_case_decomposition(STAR5, 0)
    assert center.case == 2
    assert center.neighbor_split == (4, 0)
    assert center.slack == Fraction(22, 5)
    assert center.chain_holds

    leaf = per_vertex_case_decomposition(STAR5, 1)
    assert leaf.case == 1
    assert leaf.neighbor_split == (0, 1)
    assert leaf.row_value == 3
    assert leaf.slack == Fraction(7, 5)
    assert leaf.chain_holds

    with pytest.raises(ParameterError):
        per_vertex_case_decomposition(STAR5, 5)
    print("✅ 중심 Case 2 / 잎 Case 1")


def test_case_decomposition_regular():
    for case in all_case_decompositions(C84):
        assert case.case == 2 and case.slack == 0 and case.chain_holds


def test_case_decomposition_all_graphs_n5():
    for n in range(1, 6):
        for _, g in labeled_graphs(n):
            stats = degree_stats(g)
            for case in all_case_decompositions(g, stats):
                assert case.chain_holds, (n, case)
                assert case.slack >= 0
                assert case.excess <= stats.s / 2


def test_evaluate_bounds_examples():
    print("\n--- evaluate_bounds ---")
    regular = evaluate_bounds(C84)
    assert regular.s == 0 and regular.gap == 0 and regular.gap_ratio == 0
    assert regular.theorem_exact and regular.passed

    p3 = evaluate_bounds(P3)
    assert abs(p3.gap - (math.sqrt(2) - 4 / 3)) < 1e-8
    assert abs(p3.bound_theorem1 - math.sqrt(2 / 3)) < 1e-12
    assert p3.verdicts["theorem1"] == PASS and p3.theorem_exact

    star = evaluate_bounds(STAR5)
    assert abs(star.gap - 0.4) < 1e-8
    assert abs(star.bound_theorem1 - math.sqrt(12 / 5)) < 1e-12
    assert star.passed
    # sqrt(s/2) <= sqrt(2s/3) <= sqrt(9s/10) <= sqrt(s)
    assert star.bound_theorem1 <= star.bound_rw <= star.bound_zhang <= star.bound_nikiforov06
    assert star.bound_pre_blowup == pytest.approx(1 + star.bound_theorem1)
    assert star.gap_ratio <= math.sqrt(0.5)
    print("✅ 정규 / P3 / 별")


def test_report_round_trip():
    report = evaluate_bounds(P3)
    data = report.to_dict()
    assert data["graph6"] == "Bg"
    assert data["s"] == "4/3" and data["avg_degree"] == "4/3"
    assert set(k for k in data if k.startswith("verdict_")) == {
        "verdict_nikiforov06", "verdict_zhang", "verdict_rw", "verdict_theorem1", "verdict_pre_blowup"}
    again = BoundReport.from_dict(json.loads(json.dumps(data)))
    assert again.to_dict() == data
    assert again.rho.lo == report.rho.lo and again.rho.hi == report.rho.hi


def test_split_root_chain():
    root, split = split_root_chain(2, Fraction(24, 5))
    assert abs(root - 2.656) < 1e-3
    assert abs(split - (2 + math.sqrt(2.4))) < 1e-12
    assert root <= split
    for d in range(1, 8):
        root, split = split_root_chain(d, Fraction(0))
        assert abs(root - d) < 1e-12 and abs(split - d) < 1e-12
        for s in (Fraction(1, 7), Fraction(3), Fraction(50)):
            root, split = split_root_chain(d, s)
            assert root <= split + 1e-12


def test_verdicts():
    avg, s, c = Fraction(8, 5), Fraction(24, 5), Fraction(1, 2)
    loose = SpectralInterval(Fraction(8, 5), Fraction(10), False, 5)
    assert verdict_for(loose, avg, s, c) == INCONCLUSIVE
    assert verdict_for(SpectralInterval(Fraction(10), Fraction(10)), avg, s, c) == FAIL
    assert verdict_for(SpectralInterval(Fraction(2), Fraction(2)), avg, s, c) == PASS

    forced = build_report(STAR5, degree_stats(STAR5), SpectralInterval(Fraction(10), Fraction(10)))
    assert forced.has_failure and not forced.theorem_exact and not forced.passed
    unsure = build_report(STAR5, degree_stats(STAR5), loose)
    assert not unsure.has_failure and not unsure.passed
    assert unsure.verdicts["theorem1"] == INCONCLUSIVE


def test_optimized_shift_bound():
    print("\n--- optimized_shift_bound ---")
    regular = optimized_shift_bound(C84)
    assert regular.bound == 4.0 and regular.proof_bound == 4.0
    assert regular.proof_c == 3

    star = optimized_shift_bound(STAR5)
    assert 2.0 <= star.bound <= 2.656
    assert star.bound <= star.proof_bound
    assert star.proof_c == 1

    fixed = optimized_shift_bound(STAR5, grid=[1])
    assert fixed.c_best == 1 and fixed.bound == fixed.proof_bound

    assert half_integer_grid(2) == [0, Fraction(1, 2), 1, Fraction(3, 2), 2]

    for seed in range(6):
        g = generate("gnp_random", {"n": 14, "p": 0.3, "seed": seed})
        shift = optimized_shift_bound(g)
        rho = certified_interval(g, 1e-9)
        assert shift.bound >= float(rho.lo) - 1e-9
        assert shift.bound <= shift.proof_bound
    print("✅ 정규 / 별 / 무작위")


def test_blowup_limit_demo():
    print("\n--- blowup_limit_demo ---")
    rows = blowup_limit_demo(P3, [1, 2, 3], tol=1e-9)
    base = evaluate_bounds(P3, 1e-9)
    assert rows[0].rho_lo == base.to_dict()["rho_lo"]

    second = rows[1]
    assert second.n == 6 and second.m == 8
    assert second.avg == "8/3" and second.s == "16/3"
    assert abs(second.rho - 2 * math.sqrt(2)) < 1e-8
    for row in rows:
        assert row.scaling_exact and row.rho_scaled_check and row.converged
        assert abs(row.gap_ratio - rows[0].gap_ratio) < 1e-6
        assert abs(row.implied_bound - (1 / row.t + math.sqrt(2 / 3))) < 1e-12
        assert row.pre_blowup_slack >= 0
    assert rows[0].implied_bound > rows[1].implied_bound > rows[2].implied_bound

    frame = blowup_frame(rows)
    assert list(frame["t"]) == [1, 2, 3]
    assert "implied_bound" in frame.columns
    print("✅ P3 blow-up 스케일링")


def test_blowup_limit_errors():
    with pytest.raises(ParameterError):
        blowup_limit_demo(P3, [0])
    with pytest.raises(ParameterError):
        blowup_limit_demo(P3, [])
    with pytest.raises(BudgetError):
        blowup_limit_demo(P3, [4], settings=Settings(max_vertices=10))


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
