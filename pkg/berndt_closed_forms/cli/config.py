import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Mapping, Optional

ENV_PREFIX = 'BERNDT_'
FORMATS = ('text', 'json', 'latex')
DEFAULT_CACHE = Path('~/.cache/berndt_closed_forms/tables.json').expanduser()

_TRUE = ('1', 'true', 'yes', 'on')


@dataclass(frozen=True)
class Config:
    """Run configuration: dataclass defaults < BERNDT_* environment < command line flags."""

    precision_digits: int = 40
    max_m: int = 4
    format: str = 'text'
    cache: Path = DEFAULT_CACHE
    jobs: int = 1
    include_conjecture: bool = False
    report: Optional[Path] = None
    tolerance_digits: Optional[int] = None

    def __post_init__(self):
        if self.precision_digits < 10:
            raise ValueError(f'precision_digits must be at least 10, got {self.precision_digits}')
        if self.max_m < 1:
            raise ValueError(f'max_m must be at least 1, got {self.max_m}')
        if self.format not in FORMATS:
            raise ValueError(f'format must be one of {FORMATS}, got {self.format!r}')
        if self.jobs < 1:
            raise ValueError(f'jobs must be at least 1, got {self.jobs}')
        if self.tolerance_digits is not None and not 1 <= self.tolerance_digits <= self.precision_digits:
            raise ValueError(f'tolerance_digits must lie in 1..{self.precision_digits}, got {self.tolerance_digits}')

    @property
    def effective_tolerance(self) -> int:
        if self.tolerance_digits is not None:
            return self.tolerance_digits
        return max(self.precision_digits - 10, 10)

    @property
    def table_max_index(self) -> int:
        """Largest table index any closed form up to max_m touches."""
        return 2 * self.max_m + 2

    def updated(self, **overrides) -> 'Config':
        """Copy with every override that is not None applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _parse(name: str, raw: str):
    if name in ('precision_digits', 'max_m', 'jobs', 'tolerance_digits'):
        return int(raw)
    if name == 'include_conjecture':
        return raw.strip().lower() in _TRUE
    if name in ('cache', 'report'):
        return Path(raw).expanduser()
    return raw


def env_overrides(environ: Mapping[str, str] = None) -> Dict:
    """Parsed BERNDT_* values keyed by Config field; empty variables are ignored."""
    environ = os.environ if environ is None else environ
    overrides = {}
    for f in fields(Config):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None and raw != '':
            try:
                overrides[f.name] = _parse(f.name, raw)
            except ValueError as e:
                raise ValueError(f'bad value {raw!r} for {ENV_PREFIX + f.name.upper()}') from e
    return overrides


def config_from_env(environ: Mapping[str, str] = None, base: Config = None) -> Config:
    return (base or Config()).updated(**env_overrides(environ))
