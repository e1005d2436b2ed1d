# rhobound/rhobound/core/graph.py
"""
불변 단순 무향 그래프와 차수 통계

- 인접 구조는 비트 패킹된 행(row bitmask, 파이썬 int)으로 저장
- 인접 리스트는 필요할 때 한 번만 만들어 캐싱 (희소 행렬-벡터 곱용)
- n = 0 그래프는 생성 단계에서 거부 (평균 차수 2m/n 이 정의되지 않음)
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import GraphError

Edge = Tuple[int, int]


class Graph:
    """
    단순 무향 그래프 (루프/다중 간선 없음).

    생성 후에는 변경할 수 없으며, 같은 (n, rows)를 가진 그래프는 서로 같습니다.
    여러 worker 간에 동기화 없이 공유해도 안전합니다.
    """

    __slots__ = ("_n", "_rows", "_m", "_degrees", "_adj")

    def __init__(self, n: int, rows: Sequence[int], _validate: bool = True):
        if n < 1:
            raise GraphError(f"graph must have at least one vertex (n={n})")
        rows = tuple(rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        if _validate:
            full = (1 << n) - 1
            for u, row in enumerate(rows):
                if row & ~full:
                    raise GraphError(f"vertex {u} has a neighbour outside 0..{n - 1}")
                if (row >> u) & 1:
                    raise GraphError(f"loop edge at vertex {u}")
                bits = row
                while bits:
                    low = bits & -bits
                    v = low.bit_length() - 1
                    if not (rows[v] >> u) & 1:
                        raise GraphError(f"adjacency is not symmetric at ({u}, {v})")
                    bits ^= low
        self._n = n
        self._rows = rows
        self._degrees = tuple(row.bit_count() for row in rows)
        self._m = sum(self._degrees) // 2
        self._adj: Optional[Tuple[Tuple[int, ...], ...]] = None

    # --- 기본 속성 ---

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> Tuple[int, ...]:
        """정점별 인접 bitmask (bit v가 켜져 있으면 u ~ v)"""
        return self._rows

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    @property
    def max_degree(self) -> int:
        return max(self._degrees)

    @property
    def min_degree(self) -> int:
        return min(self._degrees)

    @property
    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, u: int) -> Tuple[int, ...]:
        return self.adjacency_lists()[u]

    def adjacency_lists(self) -> Tuple[Tuple[int, ...], ...]:
        """bitmask 행에서 인접 리스트를 만들어 캐싱합니다."""
        if self._adj is None:
            lists = []
            for row in self._rows:
                nbrs = []
                bits = row
                while bits:
                    low = bits & -bits
                    nbrs.append(low.bit_length() - 1)
                    bits ^= low
                lists.append(tuple(nbrs))
            self._adj = tuple(lists)
        return self._adj

    def edges(self) -> Iterator[Edge]:
        """u < v 순서의 간선 목록"""
        for u, nbrs in enumerate(self.adjacency_lists()):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    # --- 비교 / 표현 ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def __reduce__(self):
        return (Graph, (self._n, self._rows, False))


@dataclass(frozen=True)
class DegreeStats:
    """
    차수 통계. s(G)와 평균 차수는 Fraction으로 정확히 계산됩니다.

    partition_high = W_{>=d}, partition_low = W_{<=d-1} (d = ceil(2m/n))
    """
    degrees: Tuple[int, ...]
    avg_degree: Fraction
    s: Fraction
    d_ceil: int
    partition_high: FrozenSet[int]
    partition_low: FrozenSet[int]

    @property
    def high_deviation(self) -> Fraction:
        """sum_{v in W>=d} (d(v) - 2m/n). 항상 s/2와 같아야 함"""
        return sum((self.degrees[v] - self.avg_degree for v in self.partition_high), Fraction(0))

    @property
    def high_excess(self) -> Fraction:
        """sum_{v in W>=d} (d(v) - d) <= s/2"""
        return Fraction(sum(self.degrees[v] - self.d_ceil for v in self.partition_high))


# ---------------------------------------------------------------------------
# 생성 함수
# ---------------------------------------------------------------------------

def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """
    간선 목록으로 그래프를 만듭니다. 중복 간선은 조용히 합치고, 루프는 오류입니다.

    Args:
        n: 정점 수 (>= 1)
        edges: (u, v) 쌍 목록, 0 <= u, v < n

    Raises:
        GraphError: 루프 간선, 범위 밖 정점, n < 1
    """
    if n < 1:
        raise GraphError(f"graph must have at least one vertex (n={n})")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            bad = u if not (0 <= u < n) else v
            raise GraphError(f"vertex {bad} out of range 0..{n - 1} in edge ({u}, {v})")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, _validate=False)


def edgeless(n: int) -> Graph:
    return Graph(n, [0] * n, _validate=False)


def pair_order(n: int) -> List[Edge]:
    """라벨 그래프 열거용 고정 쌍 순서: (0,1), (0,2), ..., (n-2, n-1)"""
    return list(combinations(range(n), 2))


def from_bitmask(n: int, mask: int, pairs: Optional[Sequence[Edge]] = None) -> Graph:
    """간선 부분집합 bitmask -> 그래프. bit k는 pair_order(n)[k]에 대응"""
    if pairs is None:
        pairs = pair_order(n)
    rows = [0] * n
    k = 0
    while mask:
        if mask & 1:
            u, v = pairs[k]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        k += 1
    return Graph(n, rows, _validate=False)


def labeled_graphs(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Tuple[int, Graph]]:
    """n 정점 라벨 그래프 전체 (mask, graph). [start, stop) 구간만 잘라서 순회 가능"""
    pairs = pair_order(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield mask, from_bitmask(n, mask, pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """h의 정점을 g.n 만큼 밀어서 붙인 서로소 합"""
    shift = g.n
    return Graph(g.n + h.n, list(g.rows) + [row << shift for row in h.rows], _validate=False)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """vertices 순서대로 0..k-1로 라벨을 다시 붙인 유도 부분그래프"""
    index = {v: i for i, v in enumerate(vertices)}
    rows = []
    for v in vertices:
        row = 0
        for w in g.neighbors(v):
            j = index.get(w)
            if j is not None:
                row |= 1 << j
        rows.append(row)
    return Graph(len(vertices), rows, _validate=False)


# ---------------------------------------------------------------------------
# 차수 통계 / blow-up / 연결 요소
# ---------------------------------------------------------------------------

def degree_stats(g: Graph) -> DegreeStats:
    """
    평균 차수 2m/n, 차수 편차 s(G) = sum |d_i - 2m/n|, d = ceil(2m/n), W>=d / W<=d-1 분할.

    2m/n이 정수이면 d = 2m/n 이고 차수가 정확히 d인 정점은 W>=d에 들어가 편차 0을 기여합니다.
    """
    if g.n < 1:
        raise GraphError("degree statistics need n >= 1")
    n = g.n
    degrees = g.degrees
    avg = Fraction(2 * g.m, n)
    # sum |d_i - 2m/n| = sum |n d_i - 2m| / n  (분자만 정수로 더함)
    s = Fraction(sum(abs(n * d - 2 * g.m) for d in degrees), n)
    d_ceil = -(-2 * g.m // n)
    high = frozenset(v for v, d in enumerate(degrees) if d >= d_ceil)
    low = frozenset(range(n)) - high
    return DegreeStats(
        degrees=degrees,
        avg_degree=avg,
        s=s,
        d_ceil=d_ceil,
        partition_high=high,
        partition_low=low,
    )


def blow_up(g: Graph, t: int) -> Graph:
    """
    G^(t): 각 정점 u를 t개 정점의 독립집합 V_u로 바꾸고 u ~ v이면 V_u, V_v 사이를 완전 이분으로 연결.

    정점 (u, i)의 번호는 u * t + i 입니다. m(G^(t)) = t^2 m(G).
    """
    if t < 1:
        raise GraphError(f"blow-up factor must be a positive integer (t={t})")
    if t == 1:
        return g
    block = (1 << t) - 1
    new_rows = []
    for u in range(g.n):
        row = 0
        for v in g.neighbors(u):
            row |= block << (v * t)
        new_rows.extend([row] * t)
    return Graph(g.n * t, new_rows, _validate=False)


@dataclass(frozen=True)
class Component:
    """연결 요소. vertices[i]는 요소 그래프의 정점 i에 대응하는 원래 정점"""
    graph: Graph
    vertices: Tuple[int, ...]


def connected_components(g: Graph) -> List[Component]:
    """bitmask BFS로 극대 연결 부분그래프들을 구합니다 (가장 작은 정점 번호 순)."""
    remaining = (1 << g.n) - 1
    rows = g.rows
    components = []
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            reach = 0
            bits = frontier
            while bits:
                low = bits & -bits
                reach |= rows[low.bit_length() - 1]
                bits ^= low
            frontier = reach & ~seen
            seen |= frontier
        remaining &= ~seen
        vertices = []
        bits = seen
        while bits:
            low = bits & -bits
            vertices.append(low.bit_length() - 1)
            bits ^= low
        components.append(Component(graph=induced_subgraph(g, vertices), vertices=tuple(vertices)))
    return components
