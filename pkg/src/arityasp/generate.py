"""Seeded random program generation for the property suites and the CLI.

Rule arities are drawn uniformly from the expansion of a profile; infinite
components expand up to a small cap so the instances stay within reach of
the exhaustive oracles. The seed fully determines the output.
"""

from __future__ import annotations

import random
from typing import Optional

from .arity import Arity, AritySet, Schema
from .program import AtomTable, Program, Rule

INF_EXPANSION_CAP = 3


def expand_profile(d: AritySet, inf_cap: int = INF_EXPANSION_CAP) -> list[Arity]:
    """All concrete rule arities a profile admits, infinite components
    capped at ``inf_cap``. Explicit profiles expand to themselves."""
    if d.schema is Schema.EXPLICIT:
        return sorted(d.arities)
    out = set()
    for a in d.arities:
        k_cap = inf_cap if a.k == float("inf") else a.k
        m_cap = inf_cap if a.m == float("inf") else a.m
        n_cap = inf_cap if a.n == float("inf") else a.n
        k_range = (0,) if a.k == 0 else range(1, k_cap + 1)
        for k in k_range:
            for m in range(m_cap + 1):
                for n in range(n_cap + 1):
                    out.add(Arity(k, m, n))
    return sorted(out)


def random_program(
    profile: AritySet,
    n_atoms: int,
    n_rules: int,
    seed: int,
    table: Optional[AtomTable] = None,
) -> Program:
    """A random program whose every rule arity is drawn from ``profile``."""
    arities = expand_profile(profile)
    if not arities and n_rules > 0:
        raise ValueError("profile admits no rule arities")
    if n_atoms < 1 and n_rules > 0:
        raise ValueError("need at least one atom to draw rules from")
    rng = random.Random(seed)
    table = table if table is not None else AtomTable()
    pool = [table.intern(f"x{i}") for i in range(n_atoms)]
    rules = []
    for _ in range(n_rules):
        k, m, n = rng.choice(arities)
        rules.append(
            Rule(
                tuple(rng.choice(pool) for _ in range(k)),
                tuple(rng.choice(pool) for _ in range(m)),
                tuple(rng.choice(pool) for _ in range(n)),
            )
        )
    return Program(rules, table)
