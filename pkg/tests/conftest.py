import random

import pytest

from arityasp import (
    AritySet,
    Program,
    SemanticsKind,
    enumerate_models,
    parse_program,
    random_program,
)


def prog(text: str) -> Program:
    return parse_program(text)


def interp(p: Program, names: str) -> frozenset:
    """Interpretation from a comma-separated atom-name string."""
    parts = [part.strip() for part in names.split(",") if part.strip()]
    return frozenset(p.table.intern(name) for name in parts)


def names_of(p: Program, m: frozenset) -> set:
    return {p.table.name(a) for a in m}


def model_names(p: Program, models) -> set:
    return {frozenset(p.table.name(a) for a in m) for m in models}


def oracle_answer_sets(p: Program):
    return enumerate_models(p, SemanticsKind.ANSWER_SET)


def oracle_supported(p: Program):
    return enumerate_models(p, SemanticsKind.SUPPORTED)


def seeded_programs(profile: AritySet, count: int, seed: int, atoms=(4, 7), rules=(2, 9)):
    """Deterministic stream of random programs drawn from a profile."""
    rng = random.Random(seed)
    for i in range(count):
        yield random_program(
            profile,
            rng.randint(*atoms),
            rng.randint(*rules),
            seed=rng.getrandbits(32),
        )


@pytest.fixture
def table_program():
    return prog("a | b :- c, not d.\n:- .\na | a :- not b.")
