"""
Runtime settings read from the environment (and a .env file when present)
"""
import os
from dataclasses import dataclass, replace
from typing import Callable, TypeVar

from errors import InvalidInputError

T = TypeVar('T')


@dataclass(frozen=True)
class Settings:
    """Numeric and enumeration parameters shared by the CLI and the library"""
    quad_order: int = 10
    fd_step: float = 1e-3
    tangent_step: float = 1e-5
    tolerance: float = 1e-6
    enumeration_guard: int = 1_000_000
    max_matrix_cells: int = 4_000_000
    seed: int = 0

    def with_overrides(self, **overrides) -> 'Settings':
        """Return a copy with every non-None override applied"""
        changes = {key: value for key, value in overrides.items() if value is not None}
        updated = replace(self, **changes)
        updated.validate()
        return updated

    def validate(self):
        if self.quad_order < 1:
            raise InvalidInputError(f"quad_order must be >= 1, got {self.quad_order}")
        for name in ('fd_step', 'tangent_step', 'tolerance'):
            value = getattr(self, name)
            if not value > 0:
                raise InvalidInputError(f"{name} must be positive, got {value}")
        if self.enumeration_guard < 1 or self.max_matrix_cells < 1:
            raise InvalidInputError("size guards must be positive")


def _read(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return cast(raw.strip())
    except ValueError:
        raise InvalidInputError(f"Invalid value for {name}: {raw!r}")


def get_settings() -> Settings:
    """Factory function to build settings from CEXT_* environment variables"""
    defaults = Settings()
    settings = Settings(
        quad_order=_read('CEXT_QUAD_ORDER', defaults.quad_order, int),
        fd_step=_read('CEXT_FD_STEP', defaults.fd_step, float),
        tangent_step=_read('CEXT_TANGENT_STEP', defaults.tangent_step, float),
        tolerance=_read('CEXT_TOLERANCE', defaults.tolerance, float),
        enumeration_guard=_read('CEXT_ENUMERATION_GUARD', defaults.enumeration_guard, int),
        max_matrix_cells=_read('CEXT_MAX_MATRIX_CELLS', defaults.max_matrix_cells, int),
        seed=_read('CEXT_SEED', defaults.seed, int),
    )
    settings.validate()
    return settings
