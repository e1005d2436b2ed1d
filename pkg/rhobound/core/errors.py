# rhobound/rhobound/core/errors.py
"""
rhobound 공통 예외 정의

라이브러리 함수는 예외를 던지고, CLI 경계(run)에서 잡아서 exit 2로 변환합니다.
"""
from typing import Optional


class RhoboundError(Exception):
    """rhobound 모든 예외의 기본 클래스"""


class GraphError(RhoboundError, ValueError):
    """그래프 생성 규칙 위반 (루프, 범위 밖 정점, n = 0 등)"""


class Graph6ParseError(GraphError):
    """graph6 입력 파싱 실패. offset은 문제가 된 바이트 위치 (헤더 제외 기준)"""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} (byte offset {offset})")


class EdgeListParseError(GraphError):
    """edge-list 텍스트 파싱 실패. line은 1부터 시작"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")


class ParameterError(RhoboundError, ValueError):
    """연산 파라미터가 제약 조건을 만족하지 않음. 메시지에 제약 조건을 명시"""


class BudgetError(ParameterError):
    """정점 수 / n_max 등 실행 규모 가드에 걸림"""
