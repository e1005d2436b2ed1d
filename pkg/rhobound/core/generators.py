# rhobound/rhobound/core/generators.py
"""
그래프 패밀리 생성기

결정적 패밀리는 networkx 생성기를 쓰고, gnp_random은 numpy Philox(카운터 기반) 비트 생성기로
고정 쌍 순서를 따라 간선을 뽑습니다. 전역 난수 상태는 사용하지 않습니다.
"""
from typing import Any, Dict, Mapping, Optional, Sequence, Union

import networkx as nx
import numpy as np

from .errors import ParameterError
from .formats import from_networkx
from .graph import Graph, from_edge_list, pair_order

FAMILIES = (
    "star",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "circulant_regular",
    "gnp_random",
)

# CLI 단축 표기
ALIASES = {
    "gnp": "gnp_random",
    "circulant": "circulant_regular",
    "bipartite": "complete_bipartite",
    "kmn": "complete_bipartite",
}

# 위치 인자 순서 (예: "gnp:50:0.1:7" -> n=50, p=0.1, seed=7)
POSITIONAL = {
    "star": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("a", "b"),
    "circulant_regular": ("n", "k"),
    "gnp_random": ("n", "p", "seed"),
}


def canonical_family(family: str) -> str:
    name = ALIASES.get(family, family)
    if name not in FAMILIES:
        raise ParameterError(f"unknown graph family {family!r} (expected one of {', '.join(FAMILIES)})")
    return name


def philox(seed: int) -> np.random.Generator:
    """seed를 key로 하는 카운터 기반 생성기"""
    return np.random.Generator(np.random.Philox(key=int(seed)))


def _require(cond: bool, message: str):
    if not cond:
        raise ParameterError(message)


def _int_param(params: Mapping[str, Any], key: str) -> int:
    if key not in params:
        raise ParameterError(f"missing parameter {key!r}")
    value = params[key]
    try:
        as_int = int(value)
    except (TypeError, ValueError):
        raise ParameterError(f"parameter {key!r} must be an integer, got {value!r}")
    if isinstance(value, float) and value != as_int:
        raise ParameterError(f"parameter {key!r} must be an integer, got {value!r}")
    return as_int


def gnp_random(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p). 같은 (n, p, seed)면 항상 같은 그래프"""
    _require(n >= 1, f"gnp_random requires n >= 1 (n={n})")
    _require(0.0 <= p <= 1.0, f"gnp_random requires 0 <= p <= 1 (p={p})")
    pairs = pair_order(n)
    if not pairs:
        return from_edge_list(n, [])
    draws = philox(seed).random(len(pairs))
    return from_edge_list(n, (pairs[i] for i in np.flatnonzero(draws < p)))


def circulant_offsets(n: int, k: int) -> list:
    """k-정규 순환 그래프의 오프셋. k가 홀수이면 n/2 지름 오프셋을 추가"""
    offsets = list(range(1, k // 2 + 1))
    if k % 2:
        offsets.append(n // 2)
    return offsets


def generate(family: str, params: Union[Mapping[str, Any], Sequence[Any]], seed: Optional[int] = None) -> Graph:
    """
    패밀리 이름과 파라미터로 그래프를 만듭니다.

    Args:
        family: star, path, cycle, complete, complete_bipartite, circulant_regular, gnp_random (또는 별칭)
        params: dict 또는 POSITIONAL 순서의 위치 인자 목록
        seed: gnp_random 시드 (params의 seed보다 우선)

    Raises:
        ParameterError: 위반된 제약 조건을 메시지에 포함
    """
    name = canonical_family(family)
    if isinstance(params, Mapping):
        p: Dict[str, Any] = dict(params)
    else:
        keys = POSITIONAL[name]
        if len(params) > len(keys):
            raise ParameterError(f"{name} takes at most {len(keys)} parameters ({', '.join(keys)})")
        p = dict(zip(keys, params))
    if seed is not None:
        p["seed"] = seed

    if name == "complete_bipartite":
        a, b = _int_param(p, "a"), _int_param(p, "b")
        _require(a >= 1 and b >= 1, f"complete_bipartite requires a, b >= 1 (a={a}, b={b})")
        return from_networkx(nx.complete_bipartite_graph(a, b))

    n = _int_param(p, "n")
    if name == "star":
        _require(n >= 1, f"star requires n >= 1 (n={n})")
        # nx.star_graph(k)는 k+1 정점
        return from_networkx(nx.star_graph(n - 1)) if n > 1 else from_edge_list(1, [])
    if name == "path":
        _require(n >= 1, f"path requires n >= 1 (n={n})")
        return from_networkx(nx.path_graph(n))
    if name == "cycle":
        _require(n >= 3, f"cycle requires n >= 3 (n={n})")
        return from_networkx(nx.cycle_graph(n))
    if name == "complete":
        _require(n >= 1, f"complete requires n >= 1 (n={n})")
        return from_networkx(nx.complete_graph(n))
    if name == "circulant_regular":
        k = _int_param(p, "k")
        _require(0 <= k < n, f"circulant_regular requires 0 <= k < n (n={n}, k={k})")
        _require((n * k) % 2 == 0, f"circulant_regular requires n*k even (n={n}, k={k})")
        if k == 0:
            return from_edge_list(n, [])
        return from_networkx(nx.circulant_graph(n, circulant_offsets(n, k)))

    # gnp_random
    try:
        prob = float(p.get("p", "missing"))
    except (TypeError, ValueError):
        raise ParameterError(f"gnp_random requires a numeric p (p={p.get('p')!r})")
    seed_value = _int_param(p, "seed") if "seed" in p else 0
    return gnp_random(n, prob, seed_value)


def parse_generator_spec(text: str, default_seed: Optional[int] = None) -> Graph:
    """
    "family:param:param..." 단축 표기 (예: star:100, gnp:50:0.1:7, circulant:8:4)

    gnp 표기에 seed가 없으면 default_seed (없으면 0) 를 씁니다.
    """
    family, *raw = text.split(":")
    name = canonical_family(family.strip())
    values = []
    for token in raw:
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            try:
                values.append(float(token))
            except ValueError:
                raise ParameterError(f"invalid generator parameter {token!r} in {text!r}")
    if name == "gnp_random" and len(values) == 2 and default_seed is not None:
        values.append(default_seed)
    return generate(name, values)
