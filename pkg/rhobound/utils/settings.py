# rhobound/rhobound/utils/settings.py
"""
configs/config.yaml 의 타입 있는 뷰

모든 키에는 코드 기본값이 있으므로 파일/섹션이 없어도 기본값으로 동작합니다.
"""
import logging
import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Dict, Optional

import yaml

from .config_loader import load_config_with_env

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
DEFAULT_CONFIG_PATH = os.path.join(PROJECT_ROOT, "configs", "config.yaml")


def _empty_or(value: Any, default: Any) -> Any:
    # ${VAR} 확장 결과가 빈 문자열이면 기본값 사용
    return default if value in (None, "") else value


@dataclass(frozen=True)
class Settings:
    """rhobound 실행 설정"""

    # spectral
    default_tol: float = 1e-9
    iteration_cap_factor: int = 10
    scale_bits: int = 48
    check_every: int = 8
    dense_limit: int = 64

    # limits
    max_vertices: int = 20000

    # verify
    n_max_limit: int = 7
    n_max_override_limit: int = 8
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)
    chunk_size: int = 16384
    exhaustive_tol: float = 1e-8
    ratio_tolerance: float = 1e-6

    # output
    float_digits: int = 15
    output_format: str = "json"

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> 'Settings':
        """config.yaml 딕셔너리에서 인스턴스 생성"""
        spectral = config.get('spectral') or {}
        limits = config.get('limits') or {}
        verify = config.get('verify') or {}
        output = config.get('output') or {}
        d = cls()
        return cls(
            default_tol=float(_empty_or(spectral.get('default_tol'), d.default_tol)),
            iteration_cap_factor=int(_empty_or(spectral.get('iteration_cap_factor'), d.iteration_cap_factor)),
            scale_bits=int(_empty_or(spectral.get('scale_bits'), d.scale_bits)),
            check_every=int(_empty_or(spectral.get('check_every'), d.check_every)),
            dense_limit=int(_empty_or(spectral.get('dense_limit'), d.dense_limit)),
            max_vertices=int(_empty_or(limits.get('max_vertices'), d.max_vertices)),
            n_max_limit=int(_empty_or(verify.get('n_max_limit'), d.n_max_limit)),
            n_max_override_limit=int(_empty_or(verify.get('n_max_override_limit'), d.n_max_override_limit)),
            workers=int(_empty_or(verify.get('workers'), d.workers)),
            chunk_size=int(_empty_or(verify.get('chunk_size'), d.chunk_size)),
            exhaustive_tol=float(_empty_or(verify.get('exhaustive_tol'), d.exhaustive_tol)),
            ratio_tolerance=float(_empty_or(verify.get('ratio_tolerance'), d.ratio_tolerance)),
            float_digits=int(_empty_or(output.get('float_digits'), d.float_digits)),
            output_format=str(_empty_or(output.get('format'), d.output_format)),
        )

    def with_overrides(self, **overrides: Any) -> 'Settings':
        """None이 아닌 값만 덮어쓴 복사본 (CLI 플래그용)"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_settings(config_path: Optional[str] = None) -> Settings:
    """설정 파일을 읽어 Settings를 만듭니다. 파일이 없거나 깨졌으면 기본값."""
    path = config_path or DEFAULT_CONFIG_PATH
    # logger -> settings 순환 import 방지를 위해 표준 logging 사용
    log = logging.getLogger("rhobound.settings")
    try:
        return Settings.from_dict(load_config_with_env(path))
    except FileNotFoundError:
        log.warning(f"Configuration file not found: {path}. Using defaults.")
    except (yaml.YAMLError, ValueError, TypeError) as e:
        log.warning(f"Invalid configuration file {path}: {e}. Using defaults.")
    return Settings()


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """프로세스 전역 기본 설정 (최초 1회 로드)"""
    return load_settings(os.getenv("RHOBOUND_CONFIG") or None)
