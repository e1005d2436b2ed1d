# rhobound/rhobound/cli.py
"""
rhobound 명령줄 진입점

    analyze     입력 그래프마다 BoundReport (JSON은 한 줄에 하나)
    verify      입력 그래프 / 랜덤 코퍼스 / 속성 스위트 검증 -> CorpusSummary
    enumerate   n 정점 라벨 그래프 전수 검증 -> CorpusSummary
    blowup      blow-up 극한 데모 표
    star-sweep  별 그래프 gap ratio 스윕 표

종료 코드: 0 위반 없음, 1 위반 있음, 2 사용법/파싱 오류
리포트는 stdout, 진단 메시지는 stderr 로 나갑니다.
"""
import argparse
import contextlib
import json
import sys
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

from .bounds.blowup import blowup_limit_demo
from .bounds.report import evaluate_bounds
from .core.errors import ParameterError, RhoboundError
from .core.formats import from_graph6, read_graphs
from .core.generators import parse_generator_spec
from .core.graph import Graph
from .reporting.exporter import OUTPUT_FORMATS, RecordWriter
from .reporting.logger import get_logger
from .utils.settings import Settings, get_settings, load_settings
from .verify.corpus import (RandomCorpusSpec, blowup_corpus_check, exhaustive_check, graphs_check,
                            lemma1_random_check, random_corpus_check)
from .verify.star_sweep import DEFAULT_NS, star_sweep

logger = get_logger(__name__)

COMMANDS = ("analyze", "verify", "enumerate", "blowup", "star-sweep")
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def parse_int_list(text: str) -> Tuple[int, ...]:
    """ "5,10,20" / "3..100" / "3..10,50" -> 정수 튜플 """
    values: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            if ".." in token:
                lo, hi = token.split("..", 1)
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(token))
        except ValueError:
            raise ParameterError(f"invalid integer list token {token!r}")
    if not values:
        raise ParameterError(f"empty integer list {text!r}")
    return tuple(values)


@dataclass
class CliConfig:
    """파싱된 명령줄 설정"""
    command: str
    input: Optional[str] = None
    graph6: Optional[str] = None
    gen: Optional[str] = None
    format: str = "graph6"
    tol: Optional[float] = None
    seed: int = 0
    output: Optional[str] = None
    out_path: Optional[str] = None
    config_path: Optional[str] = None
    workers: Optional[int] = None
    checks: Optional[str] = None
    n_max: Optional[int] = None
    n_min: Optional[int] = None
    allow_n8: bool = False
    early_exit: bool = True
    ts: Optional[str] = None
    ns: Optional[str] = None
    cross_check: bool = True
    families: Optional[str] = None
    sizes: Optional[str] = None
    count: int = 1
    p: float = 0.1
    suite: Optional[str] = None
    rows_csv: Optional[str] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CliConfig':
        fields = cls.__dataclass_fields__
        return cls(**{k: v for k, v in vars(args).items() if k in fields and v is not None})

    @property
    def sources(self) -> List[str]:
        return [name for name in ("input", "graph6", "gen") if getattr(self, name) is not None]

    def validate(self) -> 'CliConfig':
        """
        Raises:
            ParameterError: tol <= 0, 입력 소스가 정확히 하나가 아님, 출력 형식 오류
        """
        if self.command not in COMMANDS:
            raise ParameterError(f"unknown command {self.command!r}")
        if self.tol is not None and not self.tol > 0:
            raise ParameterError(f"--tol must be positive (got {self.tol})")
        if self.output is not None and self.output not in OUTPUT_FORMATS:
            raise ParameterError(f"--output must be one of {', '.join(OUTPUT_FORMATS)} (got {self.output!r})")
        sources = self.sources
        if len(sources) > 1:
            raise ParameterError(f"exactly one input source allowed, got {', '.join('--' + s for s in sources)}")
        if self.command in ("analyze", "blowup") and not sources:
            raise ParameterError(f"{self.command} needs an input: path, '-', --graph6 or --gen")
        if self.command == "verify":
            corpus_flags = self.families is not None or self.suite is not None
            if sources and corpus_flags:
                raise ParameterError("verify takes either input graphs or --families/--suite, not both")
            if not sources and not corpus_flags:
                raise ParameterError("verify needs input graphs, --families or --suite")
        if self.command == "enumerate" and self.n_max is None:
            raise ParameterError("enumerate needs --n-max")
        return self


# ---------------------------------------------------------------------------
# argparse
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", dest="config_path", help="config.yaml 경로")
    common.add_argument("--tol", type=float, help="스펙트럼 구간 허용 폭 (기본 1e-9)")
    common.add_argument("--seed", type=int, help="난수 시드 (기본 0)")
    common.add_argument("--output", choices=OUTPUT_FORMATS, help="출력 형식")
    common.add_argument("--out", dest="out_path", help="출력 파일 (기본 stdout)")
    common.add_argument("--workers", type=int, help="병렬 worker 수")

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("input", nargs="?", help="그래프 파일 경로 또는 '-' (stdin)")
    graph_input.add_argument("--graph6", help="인라인 graph6 문자열")
    graph_input.add_argument("--gen", help="생성기 표기 (예: star:100, gnp:50:0.1:7)")
    graph_input.add_argument("--format", choices=("graph6", "edgelist"), help="입력 형식 (기본 graph6)")

    parser = argparse.ArgumentParser(prog="rhobound", description="spectral radius irregularity bound toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("analyze", parents=[common, graph_input], help="그래프별 상한 리포트")

    verify = sub.add_parser("verify", parents=[common, graph_input], help="코퍼스 검증")
    verify.add_argument("--checks", help="쉼표로 구분한 검사 이름 또는 all")
    verify.add_argument("--families", help="랜덤 코퍼스 패밀리 (쉼표 구분)")
    verify.add_argument("--sizes", help="랜덤 코퍼스 크기 (예: 3..100 또는 10,20,50)")
    verify.add_argument("--count", type=int, help="크기당 그래프 수 (무작위 패밀리) / 스위트 반복 수")
    verify.add_argument("--p", type=float, help="gnp 간선 확률 (기본 0.1)")
    verify.add_argument("--suite", choices=("lemma1", "blowup"), help="속성 스위트")
    verify.add_argument("--ts", help="blowup 스위트 배수 (기본 2,3,5)")
    verify.add_argument("--rows-csv", dest="rows_csv", help="그래프별 행 CSV 경로")

    enum = sub.add_parser("enumerate", parents=[common], help="라벨 그래프 전수 검증")
    enum.add_argument("--n-max", dest="n_max", type=int, help="정점 수 (<= 7)")
    enum.add_argument("--n-min", dest="n_min", type=int, help="최소 정점 수 (기본 n-max)")
    enum.add_argument("--allow-n8", dest="allow_n8", action="store_true", default=None, help="n = 8 허용")
    enum.add_argument("--checks", help="쉼표로 구분한 검사 이름 또는 all")
    enum.add_argument("--no-early-exit", dest="early_exit", action="store_false", default=None,
                      help="모든 그래프에서 구간 계산")
    enum.add_argument("--rows-csv", dest="rows_csv", help="그래프별 행 CSV 경로")

    blow = sub.add_parser("blowup", parents=[common, graph_input], help="blow-up 극한 데모")
    blow.add_argument("--ts", help="blow-up 배수 목록 (기본 1,2,3,5)")

    sweep = sub.add_parser("star-sweep", parents=[common], help="별 그래프 ratio 스윕")
    sweep.add_argument("--ns", help="정점 수 목록 (예: 5..20,100,1000000)")
    sweep.add_argument("--no-cross-check", dest="cross_check", action="store_false", default=None,
                       help="인증 구간 대조 생략")
    return parser


# ---------------------------------------------------------------------------
# 명령 실행
# ---------------------------------------------------------------------------

def _graphs(config: CliConfig) -> Iterator[Graph]:
    if config.graph6 is not None:
        yield from_graph6(config.graph6)
    elif config.gen is not None:
        yield parse_generator_spec(config.gen, default_seed=config.seed)
    else:
        yield from read_graphs(config.input, config.format)


def _frame_records(frame) -> List[Dict[str, Any]]:
    # numpy 스칼라 -> 파이썬 값
    return json.loads(frame.to_json(orient="records", double_precision=15))


def _analyze(config: CliConfig, settings: Settings, writer: RecordWriter) -> int:
    # 리포트는 그래프마다 즉시 출력
    status = EXIT_OK
    for g in _graphs(config):
        report = evaluate_bounds(g, config.tol, settings)
        if report.has_failure or not report.theorem_exact:
            logger.error(f"bound violation on {report.graph6}: {report.verdicts}")
            status = EXIT_VIOLATION
        writer.write(report.to_dict(settings.float_digits))
    return status


def _verify(config: CliConfig, settings: Settings, writer: RecordWriter) -> int:
    if config.suite == "lemma1":
        summary = lemma1_random_check(count=config.count, seed=config.seed, tol=config.tol, settings=settings)
    elif config.suite == "blowup":
        ts = parse_int_list(config.ts or "2,3,5")
        summary = blowup_corpus_check(count=config.count, ts=ts, seed=config.seed, tol=config.tol, settings=settings)
    elif config.families is not None:
        spec = RandomCorpusSpec(
            families=tuple(f.strip() for f in config.families.split(",") if f.strip()),
            sizes=parse_int_list(config.sizes or "10"),
            count=config.count,
            seed=config.seed,
            p=config.p,
        )
        summary = random_corpus_check(spec, config.checks, config.workers, config.tol, settings, config.rows_csv)
    else:
        graphs = list(_graphs(config))
        source = config.gen or config.graph6 or config.input
        summary = graphs_check(graphs, f"input:{source}", config.checks, config.workers, config.tol,
                               settings, config.rows_csv)
    writer.write(summary.to_dict(settings.float_digits))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def _enumerate(config: CliConfig, settings: Settings, writer: RecordWriter) -> int:
    summary = exhaustive_check(
        config.n_max,
        checks=config.checks,
        n_min=config.n_min,
        allow_n8=config.allow_n8,
        workers=config.workers,
        tol=config.tol,
        settings=settings,
        rows_csv=config.rows_csv,
        early_exit=config.early_exit,
    )
    writer.write(summary.to_dict(settings.float_digits))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def _blowup(config: CliConfig, settings: Settings, writer: RecordWriter) -> int:
    graphs = list(_graphs(config))
    if len(graphs) != 1:
        raise ParameterError(f"blowup takes exactly one graph (got {len(graphs)})")
    rows = blowup_limit_demo(graphs[0], parse_int_list(config.ts or "1,2,3,5"), config.tol, settings)
    ok = all(r.scaling_exact and r.rho_scaled_check for r in rows)
    writer.write_all(asdict(r) for r in rows)
    return EXIT_OK if ok else EXIT_VIOLATION


def _star_sweep(config: CliConfig, settings: Settings, writer: RecordWriter) -> int:
    ns = parse_int_list(config.ns) if config.ns else DEFAULT_NS
    frame = star_sweep(ns, cross_check=config.cross_check, tol=config.tol, settings=settings)
    bad = bool((frame["ratio"] > 0.5 ** 0.5).any() or frame["rho_certified"].eq(False).any())
    writer.write_all(_frame_records(frame))
    return EXIT_VIOLATION if bad else EXIT_OK


HANDLERS = {
    "analyze": _analyze,
    "verify": _verify,
    "enumerate": _enumerate,
    "blowup": _blowup,
    "star-sweep": _star_sweep,
}


@contextlib.contextmanager
def _output_stream(path: Optional[str], stdout: TextIO):
    if path is None:
        yield stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            yield f


def run(config: CliConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    설정대로 명령을 실행하고 종료 코드를 돌려줍니다.

    Returns:
        0 위반 없음, 1 위반 있음, 2 사용법/입력 오류
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config.validate()
        settings = load_settings(config.config_path) if config.config_path else get_settings()
        settings = settings.with_overrides(workers=config.workers)
        if config.tol is not None:
            settings = settings.with_overrides(default_tol=config.tol)
        with _output_stream(config.out_path, stdout) as stream:
            writer = RecordWriter(stream, config.output or settings.output_format)
            return HANDLERS[config.command](config, settings, writer)
    except (RhoboundError, OSError, UnicodeDecodeError) as e:
        logger.error(f"{config.command} failed: {e}")
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 오류는 2, --help 는 0
        return int(e.code or 0)
    return run(CliConfig.from_args(args))


if __name__ == "__main__":
    sys.exit(main())
