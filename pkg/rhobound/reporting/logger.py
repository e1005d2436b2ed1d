# rhobound/rhobound/reporting/logger.py
import json
import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler

import yaml

from ..utils.settings import DEFAULT_CONFIG_PATH, PROJECT_ROOT

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
_FILE_FORMAT = '%(asctime)s - %(levelname)s - %(name)s - %(message)s'


class CustomLogger:
    def __init__(self, name="rhobound", config_path=DEFAULT_CONFIG_PATH):
        self.logger = logging.getLogger(name)
        # 중요: 중복 핸들러 추가 방지를 위해 기존 핸들러를 초기화합니다.
        if self.logger.hasHandlers():
            self.logger.handlers.clear()

        self._load_config(config_path)

    def _load_config(self, config_path):
        """config.yaml의 logging 섹션으로 핸들러를 구성합니다."""
        # 콘솔 핸들러는 항상 stderr (stdout은 리포트 전용)
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(logging.Formatter(_FORMAT))
        self.logger.addHandler(console_handler)
        self.logger.setLevel(logging.INFO)

        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}
        except FileNotFoundError:
            self.logger.warning(f"Configuration file not found: {config_path}")
            return
        except yaml.YAMLError as e:
            self.logger.error(f"Error parsing configuration file: {e}")
            return

        log_config = config.get('logging') or {}
        level_name = os.getenv('RHOBOUND_LOG_LEVEL') or log_config.get('level', 'INFO')
        self.logger.setLevel(getattr(logging, str(level_name).upper(), logging.INFO))

        if not log_config.get('file_logging', False):
            return

        log_directory = log_config.get('directory', 'logs')
        self.log_path = os.path.join(PROJECT_ROOT, log_directory)
        os.makedirs(self.log_path, exist_ok=True)

        # Rotating File handler (10MB, 5 backups)
        current_date_str = datetime.now().strftime('%Y-%m-%d')
        rotating_handler = RotatingFileHandler(
            os.path.join(self.log_path, f"{self.logger.name}_{current_date_str}.log"),
            maxBytes=10485760,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        rotating_handler.setFormatter(logging.Formatter(_FILE_FORMAT))
        self.logger.addHandler(rotating_handler)

        # WARNING 이상 로그만 별도 파일에 저장
        warning_handler = RotatingFileHandler(
            os.path.join(self.log_path, f"{self.logger.name}_WARNING_{current_date_str}.log"),
            maxBytes=5242880,  # 5MB
            backupCount=3,
            encoding='utf-8'
        )
        warning_handler.setLevel(logging.WARNING)
        warning_handler.setFormatter(logging.Formatter(_FILE_FORMAT))
        self.logger.addHandler(warning_handler)

        # ERROR 이상 로그만 별도 파일에 저장
        error_handler = RotatingFileHandler(
            os.path.join(self.log_path, f"{self.logger.name}_ERROR_{current_date_str}.log"),
            maxBytes=5242880,  # 5MB
            backupCount=3,
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(logging.Formatter(_FILE_FORMAT + ' - %(exc_info)s'))
        self.logger.addHandler(error_handler)

    def get_logger(self) -> logging.Logger:
        return self.logger


# Global logger instance (singleton pattern)
_rhobound_logger_instance = None


def get_logger(name="rhobound") -> logging.Logger:
    """
    패키지 전반에서 사용할 로거 인스턴스를 반환합니다.
    최초 호출 시 'rhobound' 로거를 초기화하고, 이후에는 기존 설정을 그대로 씁니다.
    name 인자는 하위 모듈 이름 (rhobound.spectral.interval 등)을 지정하는 데 사용됩니다.
    """
    global _rhobound_logger_instance
    if _rhobound_logger_instance is None:
        _rhobound_logger_instance = CustomLogger("rhobound", os.getenv("RHOBOUND_CONFIG") or DEFAULT_CONFIG_PATH).get_logger()
    return logging.getLogger(name)


class JsonFormatter(logging.Formatter):
    """
    로그 레코드를 JSON 문자열로 포맷합니다.
    """
    def format(self, record):
        # 실제 메시지는 dict 형태일 것으로 예상합니다.
        log_obj = dict(record.msg) if isinstance(record.msg, dict) else {'message': record.getMessage()}

        log_obj['timestamp'] = self.formatTime(record, self.datefmt)
        log_obj['level'] = record.levelname
        log_obj['name'] = record.name

        return json.dumps(log_obj, ensure_ascii=False)


def get_data_logger(name: str, log_dir: str = 'logs') -> logging.Logger:
    """
    정형화된 데이터(JSONL 형식)를 위한 로거를 생성합니다.
    파일은 <project>/<log_dir>/<name>_YYYY-MM-DD.jsonl 에 추가됩니다.
    """
    data_logger = logging.getLogger(f"rhobound_data.{name}")
    data_logger.propagate = False  # 루트 로거로 전파하지 않음
    data_logger.setLevel(logging.INFO)

    if data_logger.hasHandlers():
        return data_logger

    full_log_path = os.path.join(PROJECT_ROOT, log_dir)
    os.makedirs(full_log_path, exist_ok=True)

    current_date_str = datetime.now().strftime('%Y-%m-%d')
    file_handler = logging.FileHandler(os.path.join(full_log_path, f"{name}_{current_date_str}.jsonl"), encoding='utf-8')
    file_handler.setFormatter(JsonFormatter())

    data_logger.addHandler(file_handler)
    return data_logger
