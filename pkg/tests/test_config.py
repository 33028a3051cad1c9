import pytest

from config import Settings, get_settings
from errors import InvalidInputError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ('QUAD_ORDER', 'FD_STEP', 'TANGENT_STEP', 'TOLERANCE', 'ENUMERATION_GUARD',
                 'MAX_MATRIX_CELLS', 'SEED'):
        monkeypatch.delenv(f'CEXT_{name}', raising=False)


def test_defaults():
    assert get_settings() == Settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv('CEXT_QUAD_ORDER', '14')
    monkeypatch.setenv('CEXT_FD_STEP', '5e-4')
    monkeypatch.setenv('CEXT_SEED', '7')
    settings = get_settings()
    assert (settings.quad_order, settings.fd_step, settings.seed) == (14, 5e-4, 7)


def test_blank_values_fall_back(monkeypatch):
    monkeypatch.setenv('CEXT_TOLERANCE', '  ')
    assert get_settings().tolerance == Settings().tolerance


@pytest.mark.parametrize('name, value', [('CEXT_QUAD_ORDER', 'ten'), ('CEXT_FD_STEP', '-1'),
                                         ('CEXT_QUAD_ORDER', '0')])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(InvalidInputError):
        get_settings()


def test_overrides_skip_none():
    settings = Settings().with_overrides(quad_order=None, fd_step=2e-3)
    assert settings.quad_order == 10
    assert settings.fd_step == 2e-3
    with pytest.raises(InvalidInputError):
        Settings().with_overrides(tolerance=0.0)
