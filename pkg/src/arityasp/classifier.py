"""Complexity classification of reasoning tasks from arity profiles.

Each task has an ordered table of conditions. A condition compares the
(normalized) input arity set against a fixed target set under the
set-level domination order; the first match decides the complexity label
and the engine that is sound for programs in the class. The final row of
every table is the residual class, which fires when nothing else does.

Explicit arity sets classify answer-set existence only. They get an extra
leading pre-check: when no listed arity has a nonempty head and an empty
positive body, the empty interpretation is the only candidate answer set
of the proper part and the problem is polynomial outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .arity import INF, AritySet, Schema, normalize, preceq_set
from .engines import TWO_LIT_ARITIES, Engine
from .errors import InvalidAritySet, SchemaError


class TaskKind(Enum):
    EAS = "eas"
    CRED_NEG = "cred"
    SKEP_NEG = "skep"
    ESPM = "espm"
    SUPP_CRED_NEG = "scred"
    SUPP_SKEP_NEG = "sskep"


class Label(Enum):
    PTIME = "P"
    NP_COMPLETE = "NP-complete"
    CONP_COMPLETE = "coNP-complete"
    SIGMA2P_COMPLETE = "Sigma2P-complete"
    PI2P_COMPLETE = "Pi2P-complete"

    @property
    def rank(self) -> int:
        """Hardness tier: 0 for P, 1 for the NP level, 2 above it."""
        if self is Label.PTIME:
            return 0
        if self in (Label.NP_COMPLETE, Label.CONP_COMPLETE):
            return 1
        return 2


class Clause(NamedTuple):
    condition: str
    target: Optional[AritySet]  # None marks the residual clause
    label: Label
    engine: Engine


@dataclass(frozen=True)
class ComplexityVerdict:
    label: Label
    condition: str
    engine: Engine

    def describe(self) -> str:
        return f"{self.label.value} ({self.condition}, engine={self.engine})"


def _imp(*arities) -> AritySet:
    return AritySet.implicit(arities)


_EAS_ROWS: tuple[Clause, ...] = (
    Clause("main.A1", _imp((INF, INF, 0), (0, 0, 0)), Label.PTIME, Engine.EAS_POSITIVE_PROPER),
    Clause("main.A2", _imp((1, INF, 0), (0, INF, INF)), Label.PTIME, Engine.EAS_HORN),
    Clause("main.A3", _imp((INF, 1, 0), (0, 1, 0)), Label.PTIME, Engine.EAS_DUALHORN),
    Clause("main.A4", AritySet.implicit(TWO_LIT_ARITIES), Label.PTIME, Engine.EAS_2LIT),
    Clause("main.B1", _imp((1, INF, INF), (0, INF, INF)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("main.B2", _imp((INF, 1, INF), (0, INF, INF)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("main.B3", _imp((INF, INF, 0), (0, INF, 0)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("main.C", None, Label.SIGMA2P_COMPLETE, Engine.SEARCH_SIGMA2),
)

_CRED_ROWS: tuple[Clause, ...] = (
    Clause("cr.A1", _imp((1, INF, 0), (0, INF, INF)), Label.PTIME, Engine.EAS_HORN),
    Clause("cr.A2", _imp((INF, 1, 0), (0, 1, 0)), Label.PTIME, Engine.EAS_DUALHORN),
    Clause("cr.A3", AritySet.implicit(TWO_LIT_ARITIES), Label.PTIME, Engine.EAS_2LIT),
    Clause("cr.B1", _imp((1, INF, INF), (0, INF, INF)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("cr.B2", _imp((INF, 1, INF), (0, INF, INF)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("cr.B3", _imp((INF, INF, 0), (0, INF, 0)), Label.NP_COMPLETE, Engine.SEARCH_NP),
    Clause("cr.C", None, Label.SIGMA2P_COMPLETE, Engine.SEARCH_SIGMA2),
)

_SKEP_ROWS: tuple[Clause, ...] = (
    Clause("sk.A1", _imp((1, INF, 0), (0, INF, INF)), Label.PTIME, Engine.EAS_HORN),
    Clause("sk.B1", _imp((1, INF, INF), (0, INF, INF)), Label.CONP_COMPLETE, Engine.SEARCH_NP),
    Clause("sk.B2", _imp((INF, 1, INF), (0, INF, INF)), Label.CONP_COMPLETE, Engine.SEARCH_NP),
    Clause("sk.C", None, Label.PI2P_COMPLETE, Engine.SEARCH_SIGMA2),
)

_ESPM_ROWS: tuple[Clause, ...] = (
    Clause("supp.1", _imp((1, 0, 0), (0, INF, INF)), Label.PTIME, Engine.SUPP_FACTS),
    Clause("supp.2", _imp((INF, INF, 0), (0, 0, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("supp.3", _imp((INF, 1, 0), (0, 1, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("supp.4", _imp((1, INF, 0), (0, INF, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("supp.5", _imp((2, 0, 0), (1, 1, 0), (0, 2, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("supp.6", _imp((1, INF, 0), (0, 0, INF)), Label.PTIME, Engine.SUPP_HORN_GFP),
    Clause("supp.7", _imp((1, 1, 0), (0, 1, INF)), Label.PTIME, Engine.SUPP_REWRITE),
    Clause("supp.NP", None, Label.NP_COMPLETE, Engine.SEARCH_NP),
)

_SUPP_CRED_ROWS: tuple[Clause, ...] = (
    Clause("scr.1", _imp((1, 0, 0), (0, INF, INF)), Label.PTIME, Engine.SUPP_FACTS),
    Clause("scr.2", _imp((INF, 1, 0), (0, 1, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("scr.3", _imp((1, INF, 0), (0, INF, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("scr.4", _imp((2, 0, 0), (1, 1, 0), (0, 2, 0)), Label.PTIME, Engine.SUPP_MODEL_EXISTS),
    Clause("scr.5", _imp((1, 1, 0), (0, 1, INF)), Label.PTIME, Engine.SUPP_REWRITE),
    Clause("scr.NP", None, Label.NP_COMPLETE, Engine.SEARCH_NP),
)

_SUPP_SKEP_ROWS: tuple[Clause, ...] = (
    Clause("ssk.1", _imp((1, 0, 0), (0, INF, INF)), Label.PTIME, Engine.SUPP_FACTS),
    Clause("ssk.2", _imp((1, INF, 0), (0, 0, INF)), Label.PTIME, Engine.SUPP_HORN_GFP),
    Clause("ssk.3", _imp((1, 1, 0), (0, 1, INF)), Label.PTIME, Engine.SUPP_REWRITE),
    Clause("ssk.4", _imp((1, 1, 0), (0, INF, 0)), Label.PTIME, Engine.SUPP_SKEP_CYCLE),
    Clause("ssk.coNP", None, Label.CONP_COMPLETE, Engine.SEARCH_NP),
)

_TABLES: dict[TaskKind, tuple[Clause, ...]] = {
    TaskKind.EAS: _EAS_ROWS,
    TaskKind.CRED_NEG: _CRED_ROWS,
    TaskKind.SKEP_NEG: _SKEP_ROWS,
    TaskKind.ESPM: _ESPM_ROWS,
    TaskKind.SUPP_CRED_NEG: _SUPP_CRED_ROWS,
    TaskKind.SUPP_SKEP_NEG: _SUPP_SKEP_ROWS,
}

_EXPLICIT_EAS_ROWS: tuple[Clause, ...] = tuple(
    Clause("ex." + row.condition.split(".", 1)[1], row.target, row.label, row.engine)
    for row in _EAS_ROWS
)


def condition_table(task: TaskKind, schema: Schema = Schema.IMPLICIT) -> tuple[Clause, ...]:
    """The ordered clause list :func:`classify` evaluates for ``task``.

    The explicit-schema table exists for answer-set existence only and is
    the implicit table prefixed by the empty-model pre-check.
    """
    if schema is Schema.EXPLICIT:
        if task is not TaskKind.EAS:
            raise SchemaError("explicit arity sets classify answer-set existence only")
        precheck = Clause("ex.precheck", None, Label.PTIME, Engine.EAS_EMPTY_CHECK)
        return (precheck,) + _EXPLICIT_EAS_ROWS
    return _TABLES[task]


def classify(task: TaskKind, d: AritySet) -> ComplexityVerdict:
    """First matching clause of the task's condition table for ``d``."""
    if d.schema is Schema.EXPLICIT:
        if task is not TaskKind.EAS:
            raise SchemaError("explicit arity sets classify answer-set existence only")
        for a in d.arities:
            if a.is_superarity:
                raise InvalidAritySet(f"explicit arity sets cannot contain the superarity {a}")
        if not any(a.k >= 1 and a.m == 0 for a in d.arities):
            return ComplexityVerdict(Label.PTIME, "ex.precheck", Engine.EAS_EMPTY_CHECK)
        rows = _EXPLICIT_EAS_ROWS
    else:
        d = normalize(d)
        rows = _TABLES[task]
    for row in rows:
        if row.target is None or preceq_set(d, row.target):
            return ComplexityVerdict(row.label, row.condition, row.engine)
    raise AssertionError("condition tables always end in a residual clause")
