from __future__ import annotations

import pytest

from conic_progressions.settings import EngineSettings, load_settings

NAMES = ("HEIGHT", "SIGN", "WORKERS", "ORDER", "ORDER_CAP", "LOG_LEVEL")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in NAMES:
        monkeypatch.delenv(f"CONIC_AP_{name}", raising=False)


def test_defaults() -> None:
    settings = load_settings()
    assert settings == EngineSettings()
    assert settings.search.height_bound == 50
    assert settings.search.sign == "+"
    assert settings.search.workers == 1
    assert settings.series.order == 20
    assert settings.order_cap == 12
    assert settings.log_level == "INFO"


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("CONIC_AP_HEIGHT", "7")
    monkeypatch.setenv("CONIC_AP_SIGN", "-")
    monkeypatch.setenv("CONIC_AP_WORKERS", " 3 ")
    monkeypatch.setenv("CONIC_AP_ORDER", "30")
    monkeypatch.setenv("CONIC_AP_LOG_LEVEL", "debug")
    monkeypatch.setenv("CONIC_AP_ORDER_CAP", "")
    settings = load_settings()
    assert settings.search.height_bound == 7
    assert settings.search.sign == "-"
    assert settings.search.workers == 3
    assert settings.series.order == 30
    assert settings.order_cap == 12
    assert settings.log_level == "DEBUG"


def test_custom_prefix(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("APTEST_HEIGHT", "9")
    assert load_settings(env_prefix="APTEST_").search.height_bound == 9


@pytest.mark.parametrize(
    "name, value",
    [("HEIGHT", "ten"), ("HEIGHT", "0"), ("SIGN", "*"), ("ORDER", "1"), ("WORKERS", "0")],
)
def test_invalid_values(monkeypatch: pytest.MonkeyPatch, name: str, value: str) -> None:
    monkeypatch.setenv(f"CONIC_AP_{name}", value)
    with pytest.raises(RuntimeError):
        load_settings()
