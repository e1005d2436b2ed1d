# scripts/verify_config.py
"""
config.yaml 로딩 / 환경 변수 치환 / Settings 기본값 검증
"""
import os
import sys
import tempfile

# 프로젝트 루트 경로 추가
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from rhobound.utils.config_loader import expand_env, load_config_with_env
from rhobound.utils.settings import DEFAULT_CONFIG_PATH, Settings, load_settings


def _write(tmp, name, text):
    path = os.path.join(tmp, name)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path


def test_expand_env():
    os.environ["RHOBOUND_TEST_VALUE"] = "12"
    os.environ.pop("RHOBOUND_TEST_MISSING", None)
    try:
        assert expand_env("a: ${RHOBOUND_TEST_VALUE}") == "a: 12"
        assert expand_env("a: $RHOBOUND_TEST_VALUE") == "a: 12"
        assert expand_env("a: ${RHOBOUND_TEST_MISSING:-3}") == "a: 3"
        assert expand_env("a: ${RHOBOUND_TEST_MISSING}") == "a: "
        assert expand_env("a: ${RHOBOUND_TEST_VALUE:-3}") == "a: 12"
    finally:
        os.environ.pop("RHOBOUND_TEST_VALUE", None)


def test_default_config_file():
    print("\n--- configs/config.yaml ---")
    config = load_config_with_env(DEFAULT_CONFIG_PATH)
    assert {"logging", "spectral", "limits", "verify", "output"} <= set(config)
    settings = Settings.from_dict(config)
    assert settings.default_tol == 1e-9
    assert settings.n_max_limit == 7
    assert settings.workers >= 1
    print("✅ 기본 설정 로드")


def test_workers_default_to_cpu_count():
    saved = os.environ.pop("RHOBOUND_WORKERS", None)
    try:
        assert Settings().workers == (os.cpu_count() or 1)
        assert Settings.from_dict(load_config_with_env(DEFAULT_CONFIG_PATH)).workers == (os.cpu_count() or 1)
        os.environ["RHOBOUND_WORKERS"] = "3"
        assert Settings.from_dict(load_config_with_env(DEFAULT_CONFIG_PATH)).workers == 3
    finally:
        os.environ.pop("RHOBOUND_WORKERS", None)
        if saved is not None:
            os.environ["RHOBOUND_WORKERS"] = saved
    print("✅ workers 기본값 = CPU 코어 수, RHOBOUND_WORKERS 로 덮어쓰기")


def test_load_settings_overrides_and_fallback():
    with tempfile.TemporaryDirectory() as tmp:
        path = _write(tmp, "custom.yaml", "spectral:\n  default_tol: 1.0e-6\nverify:\n  workers: ''\n")
        settings = load_settings(path)
        assert settings.default_tol == 1e-6
        # 빈 값은 코드 기본값
        assert settings.workers == Settings().workers
        assert settings.max_vertices == Settings().max_vertices

        broken = _write(tmp, "broken.yaml", "- just\n- a list\n")
        assert load_settings(broken) == Settings()
        assert load_settings(os.path.join(tmp, "missing.yaml")) == Settings()

    assert Settings().with_overrides(workers=4, default_tol=None).workers == 4
    assert Settings().with_overrides(workers=None) == Settings()


if __name__ == "__main__":
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
            except Exception as e:
                failed += 1
                print(f"\n❌ {name}: {e!r}")
    if failed:
        print(f"\n❌ Verification Failed: {failed} test(s)")
        sys.exit(1)
    print("\n🎉 All verifications passed!")
