import pytest

from affine_kschur import config
from affine_kschur.errors import (
    EXIT_DOMAIN,
    EXIT_USAGE,
    EXIT_VERIFICATION,
    ConfigurationError,
    DomainError,
    InternalConsistencyError,
    KSchurError,
    UnsupportedFormulaError,
    VerificationFailure,
    exit_code_for,
)


def test_defaults(monkeypatch):
    for name in config.INT_SETTINGS:
        monkeypatch.delenv(name, raising=False)
    assert config.default_seed() == 42
    assert config.default_max_len() == 8
    assert config.walk_bound() == 3
    config.validate_env()


def test_override(monkeypatch):
    monkeypatch.setenv("KSCHUR_MAX_LEN", "5")
    assert config.default_max_len() == 5


def test_malformed(monkeypatch):
    monkeypatch.setenv("KSCHUR_RANDOM_WORDS", "lots")
    with pytest.raises(ConfigurationError, match="KSCHUR_RANDOM_WORDS"):
        config.random_word_count()
    with pytest.raises(ConfigurationError):
        config.validate_env()


def test_negative_rejected(monkeypatch):
    monkeypatch.setenv("KSCHUR_WALK_BOUND", "-1")
    with pytest.raises(ConfigurationError, match="KSCHUR_WALK_BOUND"):
        config.validate_env()


@pytest.mark.parametrize("exc,code", [
    (ConfigurationError("x"), EXIT_USAGE),
    (DomainError("x"), EXIT_DOMAIN),
    (UnsupportedFormulaError("x"), EXIT_DOMAIN),
    (InternalConsistencyError("x"), EXIT_VERIFICATION),
    (VerificationFailure("commutation", {"j": 1}), EXIT_VERIFICATION),
    (KSchurError("x"), EXIT_USAGE),
])
def test_exit_codes(exc, code):
    assert exit_code_for(exc) == code


def test_value_errors_stay_catchable():
    assert isinstance(DomainError("x"), ValueError)
    failure = VerificationFailure("formula-equality", {"j": 2})
    assert failure.suite == "formula-equality"
    assert "formula-equality" in str(failure)
