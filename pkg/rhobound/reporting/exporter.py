# rhobound/rhobound/reporting/exporter.py
"""
리포트 출력 모듈

- JSON Lines: 한 줄에 객체 하나 (유리수는 "p/q" 문자열)
- CSV: pandas DataFrame.to_csv
- human: 사람이 읽는 key: value 블록
- 위반 기록은 violations_YYYY-MM-DD.jsonl 데이터 로그에 추가
"""
import json
import os
from typing import Any, Dict, Iterable, List, Optional, TextIO

import pandas as pd

from .logger import get_data_logger, get_logger

logger = get_logger(__name__)

OUTPUT_FORMATS = ("json", "csv", "human")


def _cell(value: Any) -> Any:
    # CSV 한 셀에 들어가도록 리스트/딕셔너리는 JSON 문자열로
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value, ensure_ascii=False)
    return value


def to_frame(records: Iterable[Dict[str, Any]]) -> pd.DataFrame:
    """평탄한 딕셔너리 목록 -> DataFrame (열 순서는 첫 레코드 기준)"""
    rows = [{k: _cell(v) for k, v in r.items()} for r in records]
    return pd.DataFrame(rows)


def write_json_lines(records: Iterable[Dict[str, Any]], stream: TextIO):
    for record in records:
        stream.write(json.dumps(record, ensure_ascii=False) + "\n")


def write_human(records: Iterable[Dict[str, Any]], stream: TextIO):
    for i, record in enumerate(records):
        if i:
            stream.write("\n")
        width = max((len(k) for k in record), default=0)
        for key, value in record.items():
            stream.write(f"{key:<{width}} : {value}\n")


class RecordWriter:
    """
    레코드를 만들어지는 대로 한 건씩 출력합니다.

    CSV 는 첫 레코드에서 헤더를 쓰고 이후에는 행만 씁니다.
    """

    def __init__(self, stream: TextIO, fmt: str = "json"):
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {fmt!r} (expected one of {', '.join(OUTPUT_FORMATS)})")
        self.stream = stream
        self.fmt = fmt
        self.count = 0

    def write(self, record: Dict[str, Any]):
        if self.fmt == "json":
            write_json_lines([record], self.stream)
        elif self.fmt == "csv":
            to_frame([record]).to_csv(self.stream, index=False, header=self.count == 0, lineterminator="\n")
        else:
            if self.count:
                self.stream.write("\n")
            write_human([record], self.stream)
        self.count += 1
        self.stream.flush()

    def write_all(self, records: Iterable[Dict[str, Any]]):
        for record in records:
            self.write(record)


def write_records(records: Iterable[Dict[str, Any]], stream: TextIO, fmt: str = "json"):
    """fmt: json | csv | human"""
    RecordWriter(stream, fmt).write_all(records)


def save_rows_csv(rows: List[Dict[str, Any]], path: str):
    """그래프별 행을 CSV 파일로 저장 (외부 플로팅용)"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    to_frame(rows).to_csv(path, index=False)
    logger.info(f"per-graph rows saved: {path} ({len(rows)} rows)")


def log_violations(corpus_id: str, violations: List[Dict[str, Any]], log_dir: Optional[str] = None):
    """
    위반 후보를 JSONL 데이터 로그에 모두 남깁니다.
    정리가 증명되어 있으므로 여기에 기록이 생기면 구현 버그입니다.
    """
    if not violations:
        return
    data_logger = get_data_logger("violations", log_dir or "logs")
    for record in violations:
        data_logger.info({"corpus_id": corpus_id, **record})
    logger.error(f"{len(violations)} violation(s) recorded for corpus {corpus_id}")
