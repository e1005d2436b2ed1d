# rhobound/rhobound/verify/corpus.py
"""
코퍼스 검증 하네스

- exhaustive_check: n 정점 라벨 그래프 전체 (간선 부분집합 bitmask 순서)
- random_corpus_check: 패밀리 x 크기 x 개수로 만든 결정적 랜덤 코퍼스
- lemma1_random_check: (그래프, 정수 다항식) 무작위 쌍에 대한 행합 상한 검사
- blowup_corpus_check: blow-up 스케일링 법칙

작업은 청크 단위로 나눠 multiprocessing Pool로 돌리고, 결과는 입력 순서대로 합칩니다.
"""
import math
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..bounds.blowup import blowup_limit_demo
from ..core.errors import BudgetError, ParameterError
from ..core.formats import graph6_str
from ..core.generators import canonical_family, generate, philox
from ..core.graph import Graph, labeled_graphs, pair_order
from ..reporting.exporter import log_violations, save_rows_csv
from ..reporting.logger import get_logger
from ..spectral.polynomial import Polynomial
from ..utils.rationals import round_float
from ..utils.settings import Settings, get_settings
from .checks import build_context, check_lemma1, parse_checks, run_checks

logger = get_logger(__name__)

ROW_FIELDS = ("graph6", "n", "m", "avg_degree", "s", "rho_lo", "rho_hi", "gap_ratio")


@dataclass
class CorpusSummary:
    """코퍼스 실행 요약. violations 는 {graph6, failing_check, details} 목록"""
    corpus_id: str
    graphs_checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)
    max_gap_ratio: float = 0.0
    max_gap_ratio_witness: str = ""
    runtime: float = 0.0
    checks: Tuple[str, ...] = ()
    inconclusive: int = 0
    interval_skipped: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, digits: int = 15) -> Dict[str, Any]:
        return {
            "corpus_id": self.corpus_id,
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "max_gap_ratio": round_float(self.max_gap_ratio, digits),
            "max_gap_ratio_witness": self.max_gap_ratio_witness,
            "runtime": round(self.runtime, 3),
            "checks": list(self.checks),
            "inconclusive": self.inconclusive,
            "interval_skipped": self.interval_skipped,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CorpusSummary':
        return cls(
            corpus_id=data["corpus_id"],
            graphs_checked=int(data["graphs_checked"]),
            violations=list(data.get("violations", [])),
            max_gap_ratio=float(data.get("max_gap_ratio", 0.0)),
            max_gap_ratio_witness=data.get("max_gap_ratio_witness", ""),
            runtime=float(data.get("runtime", 0.0)),
            checks=tuple(data.get("checks", ())),
            inconclusive=int(data.get("inconclusive", 0)),
            interval_skipped=int(data.get("interval_skipped", 0)),
        )


def merge_summaries(parts: Sequence[CorpusSummary], corpus_id: Optional[str] = None) -> CorpusSummary:
    """
    부분 요약을 순서대로 합칩니다. 위반 목록은 이어 붙이고, 최대 비율은 먼저 나온 쪽이 동률에서 이깁니다.
    (a+b)+c == a+(b+c) 이므로 분할 방법에 상관없이 같은 결과입니다.
    """
    merged = CorpusSummary(corpus_id=corpus_id if corpus_id is not None else (parts[0].corpus_id if parts else ""))
    for part in parts:
        merged.graphs_checked += part.graphs_checked
        merged.violations.extend(part.violations)
        merged.inconclusive += part.inconclusive
        merged.interval_skipped += part.interval_skipped
        merged.runtime += part.runtime
        if part.max_gap_ratio_witness and (not merged.max_gap_ratio_witness or part.max_gap_ratio > merged.max_gap_ratio):
            merged.max_gap_ratio = part.max_gap_ratio
            merged.max_gap_ratio_witness = part.max_gap_ratio_witness
        if not merged.checks:
            merged.checks = part.checks
    return merged


# ---------------------------------------------------------------------------
# 공통 청크 작업
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Job:
    checks: Tuple[str, ...]
    settings: Settings
    tol: Optional[float]
    early_exit: bool
    keep_rows: bool


def _row(g: Graph, result) -> Dict[str, Any]:
    data = result.report.to_dict()
    data["graph6"] = graph6_str(g)
    row = {k: data[k] for k in ROW_FIELDS}
    row.update({k: v for k, v in data.items() if k.startswith("verdict_")})
    return row


def _check_graphs(graphs: Iterable[Graph], job: _Job) -> Tuple[CorpusSummary, List[Dict[str, Any]]]:
    summary = CorpusSummary(corpus_id="", checks=job.checks)
    rows = []
    best_ratio, best_graph = -1.0, None
    started = time.perf_counter()
    for g in graphs:
        # 행 출력이 필요하면 모든 그래프의 구간을 계산
        early_exit = job.early_exit and not job.keep_rows
        result = run_checks(g, job.checks, job.settings, job.tol, early_exit, ratio_floor=best_ratio)
        summary.graphs_checked += 1
        summary.inconclusive += int(result.inconclusive)
        summary.interval_skipped += int(result.skipped_interval)
        if result.failures:
            code = graph6_str(g)
            for failure in result.failures:
                summary.violations.append({"graph6": code, "failing_check": failure["check"],
                                           "details": failure["details"]})
        if result.gap_ratio > best_ratio:
            best_ratio, best_graph = result.gap_ratio, g
        if job.keep_rows:
            rows.append(_row(g, result))
    if best_graph is not None:
        summary.max_gap_ratio = best_ratio
        summary.max_gap_ratio_witness = graph6_str(best_graph)
    summary.runtime = time.perf_counter() - started
    return summary, rows


def _check_mask_range(item: Tuple[int, int, int, _Job]):
    n, start, stop, job = item
    return _check_graphs((g for _, g in labeled_graphs(n, start, stop)), job)


def _check_graph_list(item: Tuple[List[Graph], _Job]):
    graphs, job = item
    return _check_graphs(graphs, job)


def _run_items(func, items: List[Any], workers: int) -> List[Tuple[CorpusSummary, List[Dict[str, Any]]]]:
    """Pool.map 은 입력 순서를 보존하므로 병합 결과가 worker 수와 무관합니다."""
    if workers > 1 and len(items) > 1:
        with Pool(processes=min(workers, len(items))) as pool:
            return pool.map(func, items)
    return [func(item) for item in items]


def _finish(corpus_id: str, results, started: float, rows_csv: Optional[str]) -> CorpusSummary:
    summary = merge_summaries([r[0] for r in results], corpus_id)
    summary.runtime = time.perf_counter() - started
    if rows_csv:
        save_rows_csv([row for _, rows in results for row in rows], rows_csv)
    log_violations(corpus_id, summary.violations)
    logger.info(f"[{corpus_id}] checked={summary.graphs_checked}, violations={len(summary.violations)}, "
                f"inconclusive={summary.inconclusive}, max_gap_ratio={summary.max_gap_ratio:.6f} "
                f"({summary.max_gap_ratio_witness}), runtime={summary.runtime:.1f}s")
    logger.info("=" * 60)
    return summary


# ---------------------------------------------------------------------------
# 전수 검사
# ---------------------------------------------------------------------------

def check_n_max(n_max: int, allow_n8: bool, settings: Settings) -> int:
    """
    Raises:
        ParameterError: n_max < 1
        BudgetError: n_max 가 verify.n_max_limit 초과 (allow_n8이면 n_max_override_limit 까지 허용)
    """
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1 (n_max={n_max})")
    if n_max <= settings.n_max_limit:
        return n_max
    if allow_n8 and n_max <= settings.n_max_override_limit:
        logger.warning(f"n_max={n_max} exceeds the default limit {settings.n_max_limit}; "
                       f"2^{n_max * (n_max - 1) // 2} graphs will be enumerated")
        return n_max
    raise BudgetError(f"n_max={n_max} exceeds verify.n_max_limit={settings.n_max_limit} "
                      f"(override allows up to {settings.n_max_override_limit})")


def exhaustive_check(n_max: int, checks: Optional[Iterable[str]] = None, n_min: Optional[int] = None,
                     allow_n8: bool = False, workers: Optional[int] = None, tol: Optional[float] = None,
                     settings: Optional[Settings] = None, rows_csv: Optional[str] = None,
                     early_exit: bool = True) -> CorpusSummary:
    """
    n 정점 라벨 그래프 전체를 검사합니다 (n당 2^(n(n-1)/2) 개).

    Args:
        n_max: 최대 정점 수
        checks: 검사 이름 목록 (기본: theorem, rowsum, half_deviation, lemma1)
        n_min: 최소 정점 수 (기본 n_max, 즉 n_max 정점 그래프만). 1을 주면 n <= n_max 누적
        allow_n8: n_max_override_limit 까지 허용
        early_exit: (Delta - 2m/n)^2 <= s/2 이고 gap ratio 상한이 청크의 현재 최대값 이하인 그래프는 구간 계산 생략

    Returns:
        CorpusSummary
    """
    settings = settings or get_settings()
    check_names = parse_checks(checks)
    n_max = check_n_max(n_max, allow_n8, settings)
    n_min = n_max if n_min is None else n_min
    if not (1 <= n_min <= n_max):
        raise ParameterError(f"n_min must satisfy 1 <= n_min <= n_max (n_min={n_min}, n_max={n_max})")
    workers = workers or settings.workers
    tol = settings.exhaustive_tol if tol is None else tol
    corpus_id = f"exhaustive:n={n_max}" if n_min == n_max else f"exhaustive:n={n_min}..{n_max}"

    job = _Job(check_names, settings, tol, early_exit, bool(rows_csv))
    chunk = max(1, settings.chunk_size)
    items = []
    for n in range(n_min, n_max + 1):
        total = 1 << len(pair_order(n))
        items.extend((n, start, min(start + chunk, total), job) for start in range(0, total, chunk))

    logger.info("=" * 60)
    logger.info(f"[{corpus_id}] checks={','.join(check_names)}, chunks={len(items)}, workers={workers}")
    started = time.perf_counter()
    results = _run_items(_check_mask_range, items, workers)
    return _finish(corpus_id, results, started, rows_csv)


# ---------------------------------------------------------------------------
# 랜덤 코퍼스
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomCorpusSpec:
    """
    families x sizes 조합마다 그래프를 만듭니다.
    결정적 패밀리는 크기당 1개, gnp_random / circulant_regular 는 크기당 count 개.
    """
    families: Tuple[str, ...]
    sizes: Tuple[int, ...]
    count: int = 1
    seed: int = 0
    p: float = 0.1

    def validate(self) -> 'RandomCorpusSpec':
        if self.count < 1:
            raise ParameterError(f"random corpus count must be >= 1 (count={self.count})")
        if not self.families:
            raise ParameterError("random corpus needs at least one family")
        if not self.sizes:
            raise ParameterError("random corpus needs at least one size")
        if not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"random corpus requires 0 <= p <= 1 (p={self.p})")
        families = tuple(canonical_family(f) for f in self.families)
        return RandomCorpusSpec(families, tuple(int(n) for n in self.sizes), self.count, self.seed, self.p)

    @property
    def corpus_id(self) -> str:
        sizes = f"{min(self.sizes)}..{max(self.sizes)}" if len(self.sizes) > 1 else str(self.sizes[0])
        return f"random:{'+'.join(self.families)}:n={sizes}:count={self.count}:seed={self.seed}"


RANDOMIZED = ("gnp_random", "circulant_regular")


def build_random_corpus(spec: RandomCorpusSpec) -> List[Graph]:
    """spec에서 그래프 목록을 결정적으로 만듭니다 (같은 seed -> 같은 목록)."""
    spec = spec.validate()
    rng = philox(spec.seed)
    graphs = []
    for family in spec.families:
        for n in spec.sizes:
            if family == "gnp_random":
                for _ in range(spec.count):
                    graphs.append(generate(family, {"n": n, "p": spec.p, "seed": int(rng.integers(2 ** 63))}))
            elif family == "circulant_regular":
                # n*k 가 짝수인 k 중에서 무작위
                ks = [k for k in range(n) if (n * k) % 2 == 0]
                for _ in range(spec.count):
                    graphs.append(generate(family, {"n": n, "k": ks[int(rng.integers(len(ks)))]}))
            elif family == "complete_bipartite":
                if n < 2:
                    raise ParameterError(f"complete_bipartite needs size >= 2 (size={n})")
                graphs.append(generate(family, {"a": n // 2, "b": n - n // 2}))
            else:
                graphs.append(generate(family, {"n": n}))
    return graphs


def _chunks(graphs: List[Graph], size: int) -> List[List[Graph]]:
    return [graphs[i:i + size] for i in range(0, len(graphs), size)]


def graphs_check(graphs: List[Graph], corpus_id: str, checks: Optional[Iterable[str]] = None,
                 workers: Optional[int] = None, tol: Optional[float] = None,
                 settings: Optional[Settings] = None, rows_csv: Optional[str] = None) -> CorpusSummary:
    """주어진 그래프 목록 검사 (CLI verify 입력 그래프용)"""
    settings = settings or get_settings()
    check_names = parse_checks(checks)
    workers = workers or settings.workers
    job = _Job(check_names, settings, tol, False, bool(rows_csv))
    # worker 수보다 조금 많게 나눠서 부하 균형
    size = max(1, math.ceil(len(graphs) / max(1, 4 * workers)))
    items = [(chunk, job) for chunk in _chunks(graphs, size)]

    logger.info("=" * 60)
    logger.info(f"[{corpus_id}] graphs={len(graphs)}, checks={','.join(check_names)}, workers={workers}")
    started = time.perf_counter()
    results = _run_items(_check_graph_list, items, workers)
    return _finish(corpus_id, results, started, rows_csv)


def random_corpus_check(spec: RandomCorpusSpec, checks: Optional[Iterable[str]] = None,
                        workers: Optional[int] = None, tol: Optional[float] = None,
                        settings: Optional[Settings] = None, rows_csv: Optional[str] = None) -> CorpusSummary:
    """
    Raises:
        ParameterError: count < 1, 알 수 없는 패밀리, 패밀리 제약 위반
    """
    spec = spec.validate()
    graphs = build_random_corpus(spec)
    return graphs_check(graphs, spec.corpus_id, checks, workers, tol, settings, rows_csv)


# ---------------------------------------------------------------------------
# 행합 상한 (임의 다항식) / blow-up 법칙
# ---------------------------------------------------------------------------

def random_polynomial(rng, max_degree: int, coeff_range: int) -> Polynomial:
    degree = int(rng.integers(0, max_degree + 1))
    coeffs = rng.integers(-coeff_range, coeff_range + 1, size=degree + 1)
    return Polynomial(tuple(int(c) for c in coeffs))


def lemma1_random_check(count: int = 10000, n_max: int = 12, max_degree: int = 4, coeff_range: int = 3,
                        seed: int = 0, tol: Optional[float] = None,
                        settings: Optional[Settings] = None) -> CorpusSummary:
    """
    무작위 (그래프, 다항식) 쌍에서 f([lo, hi]) 하단이 max_u r_u(f(A)) 를 넘지 않는지 검사합니다.
    그래프는 n ~ U[1, n_max], p ~ U[0, 1] 인 G(n, p).
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1 (count={count})")
    if n_max < 1 or max_degree < 0 or coeff_range < 0:
        raise ParameterError(f"invalid lemma1 corpus parameters (n_max={n_max}, max_degree={max_degree}, "
                             f"coeff_range={coeff_range})")
    settings = settings or get_settings()
    corpus_id = f"lemma1:count={count}:n<={n_max}:deg<={max_degree}:coeff={coeff_range}:seed={seed}"
    rng = philox(seed)
    summary = CorpusSummary(corpus_id=corpus_id, checks=("lemma1",))
    started = time.perf_counter()
    logger.info("=" * 60)
    logger.info(f"[{corpus_id}] start")
    for i in range(count):
        n = int(rng.integers(1, n_max + 1))
        p = float(rng.random())
        g = generate("gnp_random", {"n": n, "p": p, "seed": int(rng.integers(2 ** 63))})
        f = random_polynomial(rng, max_degree, coeff_range)
        ctx = build_context(g, settings, tol)
        summary.graphs_checked += 1
        details = check_lemma1(ctx, [f])
        if details is not None:
            summary.violations.append({"graph6": graph6_str(g), "failing_check": "lemma1", "details": details})
        if ctx.report.gap_ratio > summary.max_gap_ratio or not summary.max_gap_ratio_witness:
            summary.max_gap_ratio = ctx.report.gap_ratio
            summary.max_gap_ratio_witness = graph6_str(g)
        if (i + 1) % 1000 == 0:
            logger.info(f"[{corpus_id}] {i + 1}/{count} pairs checked")
    return _finish(corpus_id, [(summary, [])], started, None)


def blowup_corpus_check(count: int = 100, n_max: int = 20, ts: Sequence[int] = (2, 3, 5), seed: int = 0,
                        tol: Optional[float] = None, settings: Optional[Settings] = None) -> CorpusSummary:
    """
    무작위 그래프마다 n' = tn, m' = t^2 m, s' = t^2 s (정확), |mid rho(G^t) - t mid rho(G)| <= ratio_tolerance,
    gap ratio 불변 (ratio_tolerance 이내) 을 검사합니다.
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1 (count={count})")
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1 (n_max={n_max})")
    settings = settings or get_settings()
    eps = settings.ratio_tolerance
    corpus_id = f"blowup:count={count}:n<={n_max}:t={','.join(str(t) for t in ts)}:seed={seed}"
    rng = philox(seed)
    summary = CorpusSummary(corpus_id=corpus_id, checks=("blowup_scaling", "blowup_rho", "blowup_gap_ratio"))
    started = time.perf_counter()
    logger.info("=" * 60)
    logger.info(f"[{corpus_id}] start")
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        p = float(rng.random())
        g = generate("gnp_random", {"n": n, "p": p, "seed": int(rng.integers(2 ** 63))})
        rows = blowup_limit_demo(g, [1, *ts], tol, settings)
        base = rows[0]
        summary.graphs_checked += 1
        code = graph6_str(g)
        for row in rows[1:]:
            failing = []
            if not row.scaling_exact:
                failing.append("blowup_scaling")
            if not row.rho_scaled_check or abs(row.rho - row.t * base.rho) > eps:
                failing.append("blowup_rho")
            if abs(row.gap_ratio - base.gap_ratio) > eps:
                failing.append("blowup_gap_ratio")
            for name in failing:
                summary.violations.append({"graph6": code, "failing_check": name,
                                           "details": {"t": row.t, "rho": row.rho, "base_rho": base.rho,
                                                       "gap_ratio": row.gap_ratio,
                                                       "base_gap_ratio": base.gap_ratio}})
        if base.gap_ratio > summary.max_gap_ratio or not summary.max_gap_ratio_witness:
            summary.max_gap_ratio = base.gap_ratio
            summary.max_gap_ratio_witness = code
    return _finish(corpus_id, [(summary, [])], started, None)
