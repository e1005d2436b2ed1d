# rhobound/rhobound/utils/config_loader.py
"""
config.yaml 로더

${VAR}, ${VAR:-기본값}, $VAR 자리표시자를 환경 변수로 치환한 뒤 YAML로 파싱합니다.
"""
import os
import re
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

_PLACEHOLDER = re.compile(r'\$\{(\w+)(?::-([^}]*))?\}|\$(\w+)')


def expand_env(text: str) -> str:
    """자리표시자 치환. 변수가 없거나 비어 있으면 기본값, 기본값도 없으면 빈 문자열"""
    def _substitute(match):
        name = match.group(1) or match.group(3)
        value = os.getenv(name)
        if value:
            return value
        return match.group(2) or ''

    return _PLACEHOLDER.sub(_substitute, text)


def load_config_with_env(config_path: str, env_file: Optional[str] = None) -> Dict[str, Any]:
    """
    .env 를 먼저 읽고 (이미 설정된 환경 변수는 유지) 설정 파일을 치환 후 파싱합니다.

    Args:
        config_path: YAML 파일 경로
        env_file: .env 경로. 없으면 현재 디렉터리부터 위로 탐색

    Raises:
        FileNotFoundError: 설정 파일 없음
        yaml.YAMLError: 파싱 실패 또는 최상위가 매핑이 아님
    """
    if env_file:
        load_dotenv(env_file, override=False)
    else:
        load_dotenv(override=False)

    with open(config_path, 'r', encoding='utf-8') as f:
        config = yaml.safe_load(expand_env(f.read()))
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise yaml.YAMLError(f"{config_path}: top-level value must be a mapping, got {type(config).__name__}")
    return config
