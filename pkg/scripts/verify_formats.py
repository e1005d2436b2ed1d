# scripts/verify_formats.py
"""
graph6 / edge-list 입출력 검증
"""
import io
import os
import sys
import tempfile

import pytest

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.core.errors import EdgeListParseError, Graph6ParseError, GraphError
from rhobound.core.formats import (format_edge_list_text, from_graph6, graph6_str, parse_edge_list_text, read_graphs,
                                   to_graph6)
from rhobound.core.generators import generate
from rhobound.core.graph import from_edge_list, labeled_graphs


def test_graph6_decode_examples():
    print("\n--- graph6 decode ---")
    g = from_graph6("B_")
    assert g.n == 3 and g.m == 1 and g.adjacent(0, 1)

    assert from_graph6("B?").m == 0
    assert from_graph6("Bw") == generate("complete", {"n": 3})

    p5 = from_graph6("DQc")
    assert p5.n == 5 and p5.m == 4
    assert set(p5.edges()) == {(0, 2), (1, 3), (0, 4), (3, 4)}

    assert from_graph6(">>graph6<<DQc") == p5
    assert from_graph6(b"DQc\n") == p5
    assert from_graph6("@").n == 1
    print("✅ B_ / B? / Bw / DQc / 헤더")


def test_graph6_round_trip():
    graphs = [g for _, g in labeled_graphs(4)]
    graphs += [
        generate("star", {"n": 70}),
        generate("gnp_random", {"n": 100, "p": 0.05, "seed": 1}),
        generate("circulant_regular", {"n": 9, "k": 4}),
    ]
    for g in graphs:
        assert from_graph6(to_graph6(g)) == g
        assert from_graph6(to_graph6(g, header=True)) == g
    assert graph6_str(from_graph6("DQc")) == "DQc"
    # n >= 63 은 4바이트 길이 prefix
    assert to_graph6(generate("star", {"n": 70}))[:1] == b"~"


def test_graph6_errors():
    print("\n--- graph6 errors ---")
    cases = {
        "DQ": 2,       # 데이터 1바이트 부족
        "D": 1,
        "": 0,
        "D Qc": 1,     # 허용 범위 밖 문자
        "DQcc": 3,     # 꼬리 데이터
        "B`": 1,       # 패딩 비트가 0이 아님
        "?": 0,        # 정점 0개
        "~??A": 0,     # 4바이트 길이로 n=2
        "~~????@c": 0, # 8바이트 길이로 n=100
    }
    for text, offset in cases.items():
        with pytest.raises(Graph6ParseError) as info:
            from_graph6(text)
        assert info.value.offset == offset, (text, info.value.offset)
        assert "byte offset" in str(info.value)
    # GraphError 하위 클래스
    assert issubclass(Graph6ParseError, GraphError)
    print("✅ 잘린 입력 / 잘못된 문자 / 패딩 / 꼬리")


def test_edge_list_text():
    print("\n--- edge list ---")
    p3 = parse_edge_list_text("3 2\n0 1\n1 2\n")
    assert p3 == from_edge_list(3, [(0, 1), (1, 2)])
    assert format_edge_list_text(p3) == "3 2\n0 1\n1 2\n"

    commented = parse_edge_list_text("# P3\n3 2\n\n0 1  # 첫 간선\n1 2\n")
    assert commented == p3

    dup = parse_edge_list_text("2 2\n0 1\n1 0\n")
    assert dup.m == 1

    g = generate("gnp_random", {"n": 15, "p": 0.3, "seed": 4})
    assert parse_edge_list_text(format_edge_list_text(g)) == g
    print("✅ 파싱 / 주석 / 중복")


def test_edge_list_errors():
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list_text("3 3\n0 1\n1 2\n")
    assert info.value.line == 1

    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list_text("3 1\n1 1\n")
    assert info.value.line == 2 and "loop" in str(info.value)

    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list_text("3 1\n0 5\n")
    assert info.value.line == 2

    with pytest.raises(EdgeListParseError):
        parse_edge_list_text("")
    with pytest.raises(EdgeListParseError):
        parse_edge_list_text("3\n0 1\n")
    with pytest.raises(EdgeListParseError):
        parse_edge_list_text("3 1\n0 x\n")


def test_read_graphs():
    graphs = list(read_graphs(io.StringIO("B_\n\n>>graph6<<Bw\n")))
    assert [g.m for g in graphs] == [1, 3]

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "p3.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("3 2\n0 1\n1 2\n")
        (g,) = list(read_graphs(path, fmt="edgelist"))
        assert g.m == 2

    with pytest.raises(GraphError, match="unknown graph format"):
        list(read_graphs(io.StringIO("B_\n"), fmt="adjacency"))

    with pytest.raises(Graph6ParseError):
        list(read_graphs(io.StringIO("B_\nDQ\n")))


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
