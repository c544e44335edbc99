import json
import logging
import os
from dataclasses import dataclass, field

import numpy as np
import sympy

"""
essentials.py contains functionality shared by every module of the workbench: the run settings read from the
environment, logging setup, the exception hierarchy, random-generator construction and JSON helpers.

Environment variables:
MODLIE_SEED: default seed for randomized routines (MeatAxe words, sampled specializations)
MODLIE_LOG_LEVEL: logging level name used by the command line
MODLIE_LATTICE_BOUND: largest number of candidate vectors a submodule-lattice layer may enumerate
MODLIE_JOBS: default number of worker processes for `verify --all`
"""

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
JSON_SCHEMA = 1

# Primes for which the exact kernels are sized (residues fit comfortably in float64 products)
SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


@dataclass(frozen=True)
class Settings:
    seed: int = 0
    log_level: str = 'WARNING'
    lattice_bound: int = 10 ** 6
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def with_overrides(self, **kwargs):
        values = {k: v for k, v in kwargs.items() if v is not None}
        return Settings(**{**self.__dict__, **values})


# Reads the settings once from the environment; malformed integers fall back to the defaults
def load_settings(environ=None):
    environ = os.environ if environ is None else environ
    defaults = Settings()

    def as_int(name, default):
        raw = environ.get(name)
        if raw is None or raw == '':
            return default
        try:
            return int(raw)
        except ValueError:
            logger.warning('ignoring non-integer %s=%r', name, raw)
            return default

    return Settings(seed=as_int('MODLIE_SEED', defaults.seed),
                    log_level=environ.get('MODLIE_LOG_LEVEL', defaults.log_level).upper(),
                    lattice_bound=as_int('MODLIE_LATTICE_BOUND', defaults.lattice_bound),
                    jobs=max(1, as_int('MODLIE_JOBS', defaults.jobs)))


def configure_logging(level='WARNING'):
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level if isinstance(level, int) else getattr(logging, str(level).upper(), logging.WARNING))


# Accepts a seed, None (settings default) or an existing Generator
def make_rng(seed=None):
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = load_settings().seed
    return np.random.default_rng(seed)


def check_prime(p):
    if not sympy.isprime(int(p)):
        raise ConstructionError(f'{p} is not prime')
    if int(p) not in SUPPORTED_PRIMES:
        raise ConstructionError(f'prime {p} is outside the supported range {SUPPORTED_PRIMES}')
    return int(p)


def _to_builtin(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f'{type(obj).__name__} is not JSON serializable')


def dumps(obj):
    return json.dumps(obj, default=_to_builtin, sort_keys=True, indent=2, ensure_ascii=False)


def dump_json(obj, path):
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(dumps(obj))
        fh.write('\n')
    logger.info('wrote %s', path)


# Exception hierarchy
class ModLieError(Exception):
    """Base class of every error raised by the workbench."""


class DimensionMismatch(ModLieError):
    pass


class UnknownType(ModLieError):
    pass


class NotRestrictable(ModLieError):
    pass


class NotToral(ModLieError):
    pass


class NotInvariant(ModLieError):
    pass


class ConstructionError(ModLieError):
    pass


class LatticeTooLarge(ModLieError):
    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = list(partial or [])


class MissingRepresentative(ModLieError):
    pass


class NoSolution(ModLieError):
    pass
