import importlib
import json
import logging
from dataclasses import dataclass
from typing import Any, Callable

import essentials as ess

"""
tasks is the registry of verification tasks. Every task is a scripted pipeline for one statement about a modular
Lie algebra; it records each quantity it computes next to the value it is expected to have and where that value
comes from. Task modules register themselves with the @task decorator (see TASKS.md for the keys).

Methods:
def task: Decorator registering a pipeline under a stable key.
def keys, describe: The registered keys and their titles.
def run_task: Runs one task and returns its JSON report.
"""

logger = logging.getLogger(__name__)

MODULES = ('construction', 'centralizers', 'cartan', 'e8p5', 'f4p3', 'p3', 'p2')

REGISTRY = {}


@dataclass(frozen=True)
class TaskSpec:
    key: str
    title: str
    run: Callable


def task(key, title):
    def register(fn):
        if key in REGISTRY:
            raise ess.ConstructionError(f'task {key!r} registered twice')
        REGISTRY[key] = TaskSpec(key, title, fn)
        return fn
    return register


def _normalize(value):
    return json.loads(ess.dumps(value))


@dataclass
class Check:
    name: str
    expected: Any
    got: Any
    anchor: str = ''

    @property
    def passed(self):
        return _normalize(self.expected) == _normalize(self.got)

    def to_json(self):
        return {'name': self.name, 'expected': _normalize(self.expected), 'got': _normalize(self.got),
                'pass': self.passed, 'anchor': self.anchor}


class Recorder:
    """Collects the checks of one task run."""

    def __init__(self, key, seed=0):
        self.key = key
        self.seed = seed
        self.checks = []

    def check(self, name, expected, got, anchor=''):
        c = Check(name, expected, got, anchor)
        self.checks.append(c)
        if c.passed:
            logger.info('%s: %s = %s', self.key, name, got)
        else:
            logger.warning('%s: %s expected %s, got %s', self.key, name, expected, got)
        return got

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def report(self):
        return {'schema': ess.JSON_SCHEMA, 'task': self.key, 'checks': [c.to_json() for c in self.checks]}


def load():
    for name in MODULES:
        importlib.import_module(f'tasks.{name}')


def keys():
    load()
    return sorted(REGISTRY)


def describe():
    load()
    return [(key, REGISTRY[key].title) for key in sorted(REGISTRY)]


def run_task(key, seed=0):
    load()
    if key not in REGISTRY:
        raise ess.UnknownType(f'unknown task {key!r}')
    recorder = Recorder(key, seed)
    logger.info('running %s (seed %d)', key, seed)
    REGISTRY[key].run(recorder, seed)
    return recorder.report()


def passed(report):
    return all(c['pass'] for c in report['checks'])
