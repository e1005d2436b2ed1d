# scripts/verify_corpus.py
"""
전수 / 랜덤 / 행합 / blow-up 코퍼스와 별 그래프 스윕 검증

오래 걸리는 실행 (n = 7 전수, 행합 10000쌍, blow-up 100개) 은 RHOBOUND_SLOW=1 일 때만 돌립니다.
"""
import math
import os
import sys
import tempfile

import numpy as np
import pandas as pd
import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.core.errors import BudgetError, ParameterError
from rhobound.verify.checks import ALL_CHECKS, DEFAULT_CHECKS, parse_checks
from rhobound.verify.corpus import (CorpusSummary, RandomCorpusSpec, blowup_corpus_check, build_random_corpus,
                                    exhaustive_check, lemma1_random_check, merge_summaries, random_corpus_check)
from rhobound.verify.star_sweep import DEFAULT_NS, star_ratios, star_sweep
from rhobound.utils.settings import Settings

SLOW = os.getenv("RHOBOUND_SLOW") == "1"
HALF = math.sqrt(0.5)


def _without_runtime(summary: CorpusSummary) -> dict:
    data = summary.to_dict()
    data.pop("runtime")
    return data


def test_parse_checks():
    assert parse_checks(None) == DEFAULT_CHECKS
    assert parse_checks("all") == ALL_CHECKS
    assert parse_checks("lemma1, theorem") == ("theorem", "lemma1")
    with pytest.raises(ParameterError, match="unknown check"):
        parse_checks("theorem,spectral_gap")
    with pytest.raises(ParameterError):
        parse_checks("")


def test_exhaustive_small():
    print("\n--- exhaustive_check ---")
    single = exhaustive_check(1)
    assert single.graphs_checked == 1 and single.passed
    assert single.max_gap_ratio == 0.0

    n4 = exhaustive_check(4)
    assert n4.graphs_checked == 64
    assert n4.violations == []
    assert n4.corpus_id == "exhaustive:n=4"
    assert 0 < n4.max_gap_ratio < HALF

    cumulative = exhaustive_check(4, n_min=1)
    assert cumulative.graphs_checked == 1 + 2 + 8 + 64
    assert cumulative.corpus_id == "exhaustive:n=1..4"

    everything = exhaustive_check(5, checks="all")
    assert everything.graphs_checked == 1024 and everything.passed
    assert everything.inconclusive == 0
    print(f"✅ n<=4: {cumulative.graphs_checked} graphs, n=5 all checks: {everything.graphs_checked} graphs")


def test_exhaustive_limits():
    with pytest.raises(BudgetError):
        exhaustive_check(8)
    with pytest.raises(BudgetError):
        exhaustive_check(9, allow_n8=True)
    with pytest.raises(ParameterError):
        exhaustive_check(0)
    with pytest.raises(ParameterError):
        exhaustive_check(4, n_min=5)


def test_exhaustive_early_exit_and_workers():
    fast = exhaustive_check(4)
    full = exhaustive_check(4, early_exit=False)
    assert fast.interval_skipped > 0 and full.interval_skipped == 0
    assert fast.violations == full.violations == []

    chunked = Settings(chunk_size=8)
    serial = exhaustive_check(4, settings=chunked, workers=1)
    parallel = exhaustive_check(4, settings=chunked, workers=2)
    assert _without_runtime(serial) == _without_runtime(parallel)


def test_exhaustive_early_exit_keeps_max_ratio():
    print("\n--- early exit 와 최대 gap ratio ---")
    # K2 + 고립점 (n-2)개: ratio^2 = 0.15 (n=5), 1/6 (n=6)
    expected = {5: math.sqrt(0.15), 6: math.sqrt(1 / 6)}
    for n, ratio in expected.items():
        fast = exhaustive_check(n, workers=1)
        full = exhaustive_check(n, workers=1, early_exit=False)
        assert fast.interval_skipped > 0
        assert fast.max_gap_ratio == full.max_gap_ratio
        assert fast.max_gap_ratio_witness == full.max_gap_ratio_witness
        assert abs(fast.max_gap_ratio - ratio) < 1e-9
        print(f"✅ n={n}: {fast.max_gap_ratio:.6f} ({fast.max_gap_ratio_witness}), skipped={fast.interval_skipped}")
    assert exhaustive_check(5, workers=1).max_gap_ratio_witness == "D_?"


def test_exhaustive_rows_csv():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "rows.csv")
        exhaustive_check(3, rows_csv=path)
        frame = pd.read_csv(path)
        assert len(frame) == 8
        assert {"graph6", "n", "m", "s", "gap_ratio", "verdict_theorem1"} <= set(frame.columns)


def test_random_corpus():
    print("\n--- random_corpus_check ---")
    spec = RandomCorpusSpec(families=("gnp",), sizes=(50,), count=20, seed=42, p=0.1)
    first = random_corpus_check(spec)
    second = random_corpus_check(spec)
    assert first.graphs_checked == 20 and first.passed
    assert _without_runtime(first) == _without_runtime(second)
    assert build_random_corpus(spec) == build_random_corpus(spec)

    mixed = RandomCorpusSpec(families=("star", "complete_bipartite", "circulant_regular"), sizes=(6, 9), count=3)
    graphs = build_random_corpus(mixed)
    # 결정적 패밀리는 크기당 1개, circulant_regular 는 count 개
    assert len(graphs) == 2 + 2 + 2 * 3
    assert random_corpus_check(mixed).passed

    with pytest.raises(ParameterError):
        random_corpus_check(RandomCorpusSpec(families=("gnp",), sizes=(10,), count=0))
    with pytest.raises(ParameterError):
        random_corpus_check(RandomCorpusSpec(families=("lollipop",), sizes=(10,)))
    print(f"✅ {first.corpus_id}")


def test_star_family_corpus():
    stars = RandomCorpusSpec(families=("star",), sizes=tuple(range(3, 31)))
    summary = random_corpus_check(stars, checks="all")
    assert summary.graphs_checked == 28 and summary.passed
    ratios = star_ratios(range(3, 31))
    assert np.all(np.diff(ratios) > 0)
    assert abs(summary.max_gap_ratio - ratios[-1]) < 1e-6


def test_merge_summaries():
    a = CorpusSummary("x", 3, [{"graph6": "A", "failing_check": "theorem", "details": {}}], 0.5, "A", 1.0, ("theorem",))
    b = CorpusSummary("x", 4, [], 0.5, "B", 2.0, ("theorem",), inconclusive=1)
    c = CorpusSummary("x", 5, [{"graph6": "C", "failing_check": "rowsum", "details": {}}], 0.6, "C", 4.0,
                      ("theorem",), interval_skipped=2)
    left = merge_summaries([merge_summaries([a, b]), c], "x")
    right = merge_summaries([a, merge_summaries([b, c])], "x")
    flat = merge_summaries([a, b, c], "x")
    assert left.to_dict() == right.to_dict() == flat.to_dict()
    assert flat.graphs_checked == 12
    assert [v["graph6"] for v in flat.violations] == ["A", "C"]
    assert flat.max_gap_ratio_witness == "C"
    # 동률이면 먼저 나온 쪽
    assert merge_summaries([a, b]).max_gap_ratio_witness == "A"
    assert CorpusSummary.from_dict(flat.to_dict()).to_dict() == flat.to_dict()


def test_lemma1_random_small():
    summary = lemma1_random_check(count=300, seed=1)
    assert summary.graphs_checked == 300 and summary.passed
    with pytest.raises(ParameterError):
        lemma1_random_check(count=0)


def test_blowup_corpus_small():
    summary = blowup_corpus_check(count=10, n_max=8, ts=(2, 3))
    assert summary.graphs_checked == 10 and summary.passed
    with pytest.raises(ParameterError):
        blowup_corpus_check(count=0)


def test_star_sweep():
    print("\n--- star_sweep ---")
    frame = star_sweep(DEFAULT_NS)
    first = frame.iloc[0]
    assert first["n"] == 5 and first["s"] == "24/5"
    assert abs(first["rho"] - 2.0) < 1e-12
    assert abs(first["gap"] - 0.4) < 1e-12
    assert abs(first["ratio"] - 0.182574) < 1e-6

    last = frame.iloc[-1]
    assert last["n"] == 1_000_000
    assert 0.7046 <= last["ratio"] <= 0.7072
    assert abs(last["ratio"] - HALF) < 1.5e-3

    assert (frame["ratio"] < HALF).all()
    assert frame["ratio"].is_monotonic_increasing
    certified = frame[frame["n"] <= 10_000]["rho_certified"]
    assert certified.eq(True).all()
    assert frame[frame["n"] > 10_000]["rho_certified"].isna().all()

    dense_grid = np.unique(np.geomspace(5, 1_000_000, 400).astype(int))
    assert np.all(np.diff(star_ratios(dense_grid)) > 0)

    with pytest.raises(ParameterError):
        star_sweep([1, 5])
    print(f"✅ n=10^6 ratio {last['ratio']:.6f}")


@pytest.mark.slow
def test_exhaustive_n7():
    if not SLOW:
        pytest.skip("RHOBOUND_SLOW=1 일 때만 실행")
    summary = exhaustive_check(7, workers=os.cpu_count() or 1)
    assert summary.graphs_checked == 2 ** 21
    assert summary.passed
    assert summary.max_gap_ratio < HALF


@pytest.mark.slow
def test_lemma1_random_full():
    if not SLOW:
        pytest.skip("RHOBOUND_SLOW=1 일 때만 실행")
    summary = lemma1_random_check(count=10_000, n_max=12, max_degree=4, coeff_range=3, seed=0)
    assert summary.graphs_checked == 10_000 and summary.passed


@pytest.mark.slow
def test_blowup_corpus_full():
    if not SLOW:
        pytest.skip("RHOBOUND_SLOW=1 일 때만 실행")
    summary = blowup_corpus_check(count=100, n_max=20, ts=(2, 3, 5))
    assert summary.passed


if __name__ == "__main__":
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
            except pytest.skip.Exception as e:
                print(f"\n⏭️  {name}: {e}")
            except Exception as e:
                failed += 1
                print(f"\n❌ {name}: {e!r}")
    if failed:
        print(f"\n❌ Verification Failed: {failed} test(s)")
        sys.exit(1)
    print("\n🎉 All verifications passed!")
