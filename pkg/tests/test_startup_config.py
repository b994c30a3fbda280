import pytest

from app.main import _get_cors_origins, _validate_runtime_settings


def test_validate_runtime_settings_accepts_defaults():
    _validate_runtime_settings()


def test_validate_runtime_settings_rejects_unknown_format(monkeypatch):
    monkeypatch.setenv("POTENTIAL_FORMAT", "yaml")

    with pytest.raises(RuntimeError, match="POTENTIAL_FORMAT must be one of"):
        _validate_runtime_settings()


def test_validate_runtime_settings_rejects_bad_log_level(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "chatty")

    with pytest.raises(RuntimeError, match="LOG_LEVEL 'CHATTY'"):
        _validate_runtime_settings()


def test_validate_runtime_settings_collects_every_error(monkeypatch):
    monkeypatch.setenv("API_MAX_STRANDS", "0")
    monkeypatch.setenv("VERIFY_MAX_STRANDS", "1")
    monkeypatch.setenv("CORS_ORIGINS", "not-a-url")

    with pytest.raises(RuntimeError) as excinfo:
        _validate_runtime_settings()
    message = str(excinfo.value)
    assert "API_MAX_STRANDS must be a positive integer" in message
    assert "VERIFY_MAX_STRANDS must be at least 2" in message
    assert "CORS_ORIGINS contains invalid URL(s): not-a-url" in message


def test_validate_runtime_settings_warns_about_slow_settings(monkeypatch, caplog):
    monkeypatch.setenv("VERIFY_MAX_STRANDS", "10")
    monkeypatch.setenv("GASSNER_DEBUG_CHECKS", "1")

    _validate_runtime_settings()
    assert "VERIFY_MAX_STRANDS=10" in caplog.text
    assert "GASSNER_DEBUG_CHECKS is on" in caplog.text


def test_settings_read_environment_on_each_access(monkeypatch):
    from app.config import settings

    monkeypatch.setenv("BATCH_WORKERS", "9")
    assert settings.BATCH_WORKERS == 9
    monkeypatch.delenv("BATCH_WORKERS")
    assert settings.BATCH_WORKERS == 4


def test_cors_origins_are_split_and_trimmed():
    assert _get_cors_origins(" http://a.example, ,https://b.example ") == ["http://a.example", "https://b.example"]
