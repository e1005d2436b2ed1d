# scripts/verify_graph_core.py
"""
그래프 표현 / 차수 통계 / 생성기 / blow-up / 연결 요소 검증
"""
import os
import pickle
import sys
from fractions import Fraction

import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.core.errors import GraphError, ParameterError
from rhobound.core.generators import generate, parse_generator_spec
from rhobound.core.graph import (Graph, blow_up, connected_components, degree_stats, disjoint_union, edgeless,
                                 from_bitmask, from_edge_list, labeled_graphs)
from rhobound.spectral.interval import certified_interval


def test_from_edge_list_examples():
    print("\n--- from_edge_list ---")
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.n == 3 and p3.m == 2
    assert p3.degrees == (1, 2, 1)

    star = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert star.m == 4
    assert star.degrees == (4, 1, 1, 1, 1)

    single = from_edge_list(2, [(0, 1), (1, 0)])
    assert single.m == 1
    assert single.adjacent(0, 1) and single.adjacent(1, 0)
    print("✅ P3 / K_{1,4} / 중복 간선 통과")


def test_from_edge_list_errors():
    with pytest.raises(GraphError, match="vertex 2"):
        from_edge_list(3, [(0, 1), (2, 2)])
    with pytest.raises(GraphError, match="out of range"):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(0, [])
    # 비대칭 행 / 루프 비트
    with pytest.raises(GraphError, match="symmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(GraphError, match="loop"):
        Graph(2, [0b01, 0])
    print("✅ 루프 / 범위 / n = 0 거부")


def test_graph_value_semantics():
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    h = from_edge_list(4, [(2, 3), (1, 2), (0, 1)])
    assert g == h and hash(g) == hash(h)
    assert pickle.loads(pickle.dumps(g)) == g
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == (0, 2)
    assert g.max_degree == 2 and g.min_degree == 1 and not g.is_regular
    assert sum(g.degrees) == 2 * g.m


def test_degree_stats_examples():
    print("\n--- degree_stats ---")
    k4 = degree_stats(generate("complete", {"n": 4}))
    assert k4.s == 0 and k4.avg_degree == 3 and k4.d_ceil == 3

    star = degree_stats(generate("star", {"n": 5}))
    assert star.avg_degree == Fraction(8, 5)
    assert star.s == Fraction(24, 5)
    assert star.d_ceil == 2
    assert star.partition_high == frozenset({0})
    assert star.partition_low == frozenset({1, 2, 3, 4})

    p3 = degree_stats(generate("path", {"n": 3}))
    assert p3.avg_degree == Fraction(4, 3)
    assert p3.s == Fraction(4, 3)
    assert p3.d_ceil == 2

    single = degree_stats(edgeless(1))
    assert single.s == 0 and single.avg_degree == 0 and single.d_ceil == 0
    print("✅ K4 / 별 / P3 / 단일 정점")


def test_half_deviation_identity_all_small_graphs():
    checked = 0
    for n in range(1, 6):
        for _, g in labeled_graphs(n):
            stats = degree_stats(g)
            assert sum(stats.degrees) == 2 * g.m
            assert stats.high_deviation == stats.s / 2
            assert stats.high_excess <= stats.s / 2
            assert stats.partition_high | stats.partition_low == frozenset(range(n))
            assert not stats.partition_high & stats.partition_low
            checked += 1
    assert checked == 1 + 2 + 8 + 64 + 1024
    print(f"✅ half-deviation identity: {checked} graphs")


def test_blow_up_examples():
    print("\n--- blow_up ---")
    p3 = generate("path", {"n": 3})
    assert blow_up(p3, 1) == p3

    b = blow_up(p3, 2)
    assert b.n == 6 and b.m == 8
    assert sorted(b.degrees, reverse=True) == [4, 4, 2, 2, 2, 2]
    assert degree_stats(b).s == Fraction(16, 3) == 4 * degree_stats(p3).s
    # 같은 V_u 안은 독립집합
    assert not b.adjacent(0, 1) and not b.adjacent(2, 3)

    with pytest.raises(GraphError):
        blow_up(p3, 0)
    print("✅ P3^(2) = K_{2,4}")


def test_blow_up_scaling_random():
    for seed in range(8):
        g = generate("gnp_random", {"n": 7, "p": 0.4, "seed": seed})
        base = degree_stats(g)
        for t in (1, 2, 3, 5):
            h = blow_up(g, t)
            stats = degree_stats(h)
            assert h.n == t * g.n
            assert h.m == t * t * g.m
            assert stats.avg_degree == t * base.avg_degree
            assert stats.s == t * t * base.s


def test_blow_up_composition():
    g = generate("gnp_random", {"n": 5, "p": 0.5, "seed": 3})
    twice = blow_up(blow_up(g, 2), 3)
    once = blow_up(g, 6)
    assert twice.n == once.n and twice.m == once.m
    assert sorted(twice.degrees) == sorted(once.degrees)
    a = certified_interval(twice, "1e-9")
    b = certified_interval(once, "1e-9")
    assert abs(a.mid - b.mid) <= a.width + b.width + Fraction(1, 10 ** 9)


def test_generate_examples():
    print("\n--- generate ---")
    star = generate("star", [5])
    assert sorted(star.degrees) == [1, 1, 1, 1, 4]

    k4 = generate("complete", {"n": 4})
    assert k4.m == 6 and k4.is_regular and k4.max_degree == 3

    c84 = generate("circulant_regular", {"n": 8, "k": 4})
    assert c84.n == 8 and set(c84.degrees) == {4}
    c83 = generate("circulant", {"n": 8, "k": 3})
    assert set(c83.degrees) == {3}

    kab = generate("complete_bipartite", {"a": 2, "b": 3})
    assert kab.m == 6

    cycle = generate("cycle", {"n": 5})
    assert set(cycle.degrees) == {2} and cycle.m == 5
    print("✅ star / complete / circulant / bipartite / cycle")


def test_generate_errors():
    with pytest.raises(ParameterError, match="n >= 3"):
        generate("cycle", {"n": 2})
    with pytest.raises(ParameterError, match="k < n"):
        generate("circulant_regular", {"n": 5, "k": 5})
    with pytest.raises(ParameterError, match="even"):
        generate("circulant_regular", {"n": 5, "k": 3})
    with pytest.raises(ParameterError, match="0 <= p <= 1"):
        generate("gnp_random", {"n": 5, "p": 1.5})
    with pytest.raises(ParameterError, match="unknown graph family"):
        generate("petersen", {"n": 10})
    with pytest.raises(ParameterError):
        parse_generator_spec("star:abc")


def test_gnp_deterministic():
    a = generate("gnp_random", {"n": 40, "p": 0.2, "seed": 11})
    b = generate("gnp", [40, 0.2, 11])
    c = generate("gnp_random", {"n": 40, "p": 0.2, "seed": 12})
    assert a == b
    assert a != c
    assert parse_generator_spec("gnp:50:0.1:7") == generate("gnp_random", {"n": 50, "p": 0.1, "seed": 7})
    assert parse_generator_spec("gnp:50:0.1", default_seed=7) == parse_generator_spec("gnp:50:0.1:7")
    assert generate("gnp_random", {"n": 6, "p": 1.0, "seed": 0}).m == 15
    assert generate("gnp_random", {"n": 6, "p": 0.0, "seed": 0}).m == 0
    assert parse_generator_spec("star:100").n == 100


def test_connected_components():
    print("\n--- connected_components ---")
    k4 = generate("complete", {"n": 4})
    comps = connected_components(k4)
    assert len(comps) == 1 and comps[0].graph.n == 4

    union = disjoint_union(generate("complete", {"n": 3}), generate("complete", {"n": 2}))
    comps = connected_components(union)
    assert [c.graph.n for c in comps] == [3, 2]
    assert comps[1].vertices == (3, 4)
    assert sum(c.graph.m for c in comps) == union.m == 4

    comps = connected_components(edgeless(5))
    assert len(comps) == 5 and all(c.graph.n == 1 for c in comps)
    print("✅ K4 / K3 ⊎ K2 / 무간선")


def test_labeled_graphs():
    graphs = [g for _, g in labeled_graphs(4)]
    assert len(graphs) == 64
    assert len(set(graphs)) == 64
    first = from_bitmask(4, 0b1)
    assert first.m == 1 and first.adjacent(0, 1)
    # 구간 순회
    assert [mask for mask, _ in labeled_graphs(4, 10, 13)] == [10, 11, 12]


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
