# rhobound/rhobound/core/formats.py
"""
그래프 입출력 포맷

- graph6: 표준 포맷 (">>graph6<<" 헤더 선택). 바이트 단위 검증은 여기서 하고,
  실제 비트 디코딩/인코딩은 networkx 구현을 그대로 사용합니다.
- edge-list 텍스트: 첫 줄 "n m", 이후 "u v" 한 줄씩 (0-indexed)
"""
import sys
from typing import IO, Iterator, Union

import networkx as nx

from .errors import EdgeListParseError, Graph6ParseError, GraphError
from .graph import Graph, from_edge_list

GRAPH6_HEADER = b">>graph6<<"

# graph6 문자는 63..126 범위
_G6_MIN = 63
_G6_MAX = 126


# ---------------------------------------------------------------------------
# networkx 변환
# ---------------------------------------------------------------------------

def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """노드 순서를 유지한 채 0..n-1로 라벨을 다시 붙입니다."""
    H = nx.convert_node_labels_to_integers(G, ordering="default")
    if nx.number_of_selfloops(H):
        loop = next(iter(nx.selfloop_edges(H)))[0]
        raise GraphError(f"loop edge at vertex {loop}")
    return from_edge_list(H.number_of_nodes(), H.edges())


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _validate_graph6(data: bytes) -> int:
    """
    길이 prefix, 문자 범위, 데이터 길이, 패딩 비트를 검사하고 정점 수를 반환합니다.

    Raises:
        Graph6ParseError: 문제 바이트의 offset 포함
    """
    if not data:
        raise Graph6ParseError("empty graph6 input", 0)
    for i, c in enumerate(data):
        if not (_G6_MIN <= c <= _G6_MAX):
            raise Graph6ParseError(f"invalid graph6 character {chr(c)!r}", i)

    # N(n)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6ParseError("truncated length prefix", len(data))
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        if n < 258048:
            raise Graph6ParseError(f"non-canonical length prefix for n={n}", 0)
    else:
        if len(data) < 4:
            raise Graph6ParseError("truncated length prefix", len(data))
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        if n < 63:
            raise Graph6ParseError(f"non-canonical length prefix for n={n}", 0)

    if n == 0:
        raise Graph6ParseError("graph6 encodes a graph with no vertices", 0)

    bits = n * (n - 1) // 2
    need = -(-bits // 6)
    body = len(data) - pos
    if body < need:
        raise Graph6ParseError(f"truncated input: expected {need} data bytes, got {body}", len(data))
    if body > need:
        raise Graph6ParseError("unexpected trailing data", pos + need)

    pad = need * 6 - bits
    if pad and (data[-1] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", len(data) - 1)
    return n


def _strip_graph6(text: Union[bytes, str]) -> bytes:
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    return data


def from_graph6(text: Union[bytes, str]) -> Graph:
    """
    graph6 한 줄을 그래프로 디코딩합니다. 헤더와 앞뒤 공백은 허용됩니다.

    Raises:
        Graph6ParseError: 길이 prefix / 패딩 / 잘린 입력 (offset은 헤더 뒤 기준)
    """
    data = _strip_graph6(text)
    n = _validate_graph6(data)
    G = nx.from_graph6_bytes(data)
    g = from_networkx(G)
    if g.n != n:
        raise Graph6ParseError(f"decoded {g.n} vertices but prefix says {n}", 0)
    return g


def to_graph6(g: Graph, header: bool = False) -> bytes:
    """표준 graph6 인코딩 (개행 없음)"""
    return nx.to_graph6_bytes(to_networkx(g), header=header).rstrip(b"\n")


def graph6_str(g: Graph) -> str:
    return to_graph6(g).decode("ascii")


# ---------------------------------------------------------------------------
# edge-list 텍스트
# ---------------------------------------------------------------------------

def parse_edge_list_text(text: str) -> Graph:
    """
    "n m" 헤더와 m개의 "u v" 줄을 파싱합니다. 빈 줄과 '#' 주석은 무시합니다.

    헤더의 m은 나열된 줄 수와 같아야 합니다 (중복 간선도 한 줄로 셉니다).
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((lineno, content))
    if not lines:
        raise EdgeListParseError("empty edge list", 1)

    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListParseError(f"expected header 'n m', got {header!r}", header_line)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListParseError(f"non-integer header {header!r}", header_line)
    if n < 1:
        raise EdgeListParseError(f"vertex count must be positive, got {n}", header_line)

    edges = []
    for lineno, content in lines[1:]:
        parts = content.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected 'u v', got {content!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer vertex in {content!r}", lineno)
        if u == v:
            raise EdgeListParseError(f"loop edge at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range 0..{n - 1} in {content!r}", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges but {len(edges)} were listed", header_line)
    return from_edge_list(n, edges)


def format_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# 다중 그래프 입력
# ---------------------------------------------------------------------------

def read_graphs(source: Union[str, IO], fmt: str = "graph6") -> Iterator[Graph]:
    """
    파일 경로, "-" (stdin), 또는 열린 파일에서 그래프를 읽습니다.

    graph6: 한 줄에 그래프 하나 (빈 줄 무시). edgelist: 문서 전체가 그래프 하나.
    """
    if isinstance(source, str):
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
    else:
        text = source.read()

    if fmt == "edgelist":
        yield parse_edge_list_text(text)
        return
    if fmt != "graph6":
        raise GraphError(f"unknown graph format {fmt!r}")
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)
