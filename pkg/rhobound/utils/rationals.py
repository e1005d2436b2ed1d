# rhobound/rhobound/utils/rationals.py
"""
정확한 유리수 직렬화 / 보조 연산

- 유리수는 JSON/CSV에서 항상 "p/q" 문자열 (정수는 "p")
- 실수는 유효숫자 15자리
"""
import math
from fractions import Fraction
from numbers import Rational
from typing import Union

Exact = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """Fraction(24, 5) -> "24/5", Fraction(3) -> "3" """
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: Union[str, int]) -> Fraction:
    """"p/q" 또는 "p" 문자열을 Fraction으로 되돌립니다 (float 문자열은 거부)."""
    if isinstance(text, int):
        return Fraction(text)
    text = str(text).strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def round_float(value: float, digits: int = 15) -> float:
    """유효숫자 digits 자리로 반올림한 float"""
    if value == 0 or not math.isfinite(value):
        return float(value)
    return float(f"{value:.{digits}g}")
