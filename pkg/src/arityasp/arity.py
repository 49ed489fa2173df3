"""Extended naturals, arity triples, the domination order, and arity sets.

An arity ``[k, m, n]`` counts head atoms, positive body atoms and negative
body literals of a rule, by occurrence. Components may also be infinite,
giving *superarities*; those describe classes of rules but are never the
arity of a concrete rule.

``a preceq b`` holds when ``a`` is componentwise below ``b`` and, in
addition, ``a.k == 0`` implies ``b.k == 0``. The extra condition keeps
classes of constraint-free programs expressible: without it every bound
would silently admit constraints.

Arity sets come in two schemas. An IMPLICIT set describes the programs
whose every rule arity is dominated by some element; an EXPLICIT set
describes the programs whose rule arities are literally elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Union

from .errors import ArityFormatError, InvalidAritySet, SchemaError
from .program import Program, Rule

INF = float("inf")

ExtNat = Union[int, float]


class Arity(NamedTuple):
    k: ExtNat
    m: ExtNat
    n: ExtNat

    @property
    def is_superarity(self) -> bool:
        return INF in self


def _check_component(value) -> ExtNat:
    if value == INF:
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidAritySet(f"arity components must be non-negative integers or inf, got {value!r}")
    return value


def arity(k, m, n) -> Arity:
    """Validated :class:`Arity` constructor."""
    return Arity(_check_component(k), _check_component(m), _check_component(n))


def arity_of_rule(r: Rule) -> Arity:
    """The triple [|head|, |pos body|, |neg body|], counting occurrences."""
    return Arity(len(r.head), len(r.pos), len(r.neg))


def preceq(a: Arity, b: Arity) -> bool:
    """Domination order: componentwise <= plus (a.k == 0 implies b.k == 0)."""
    return a.k <= b.k and a.m <= b.m and a.n <= b.n and (a.k != 0 or b.k == 0)


class Schema(Enum):
    IMPLICIT = "implicit"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class AritySet:
    """A finite set of arity triples plus the schema it is read under."""

    arities: frozenset[Arity]
    schema: Schema = Schema.IMPLICIT

    def __post_init__(self):
        object.__setattr__(
            self, "arities", frozenset(arity(*a) for a in self.arities)
        )
        if self.schema is Schema.EXPLICIT:
            for a in self.arities:
                if a.is_superarity:
                    raise InvalidAritySet(f"explicit arity sets cannot contain the superarity {a}")

    @classmethod
    def implicit(cls, arities: Iterable) -> "AritySet":
        return cls(frozenset(Arity(*a) for a in arities), Schema.IMPLICIT)

    @classmethod
    def explicit(cls, arities: Iterable) -> "AritySet":
        return cls(frozenset(Arity(*a) for a in arities), Schema.EXPLICIT)

    def sorted(self) -> list[Arity]:
        return sorted(self.arities)

    def __iter__(self):
        return iter(self.arities)

    def __len__(self) -> int:
        return len(self.arities)

    def __contains__(self, a) -> bool:
        return a in self.arities


def preceq_set(d: AritySet, t: AritySet) -> bool:
    """True when every element of ``d`` is dominated by some element of ``t``."""
    return all(any(preceq(a, b) for b in t.arities) for a in d.arities)


def member(p: Program, d: AritySet) -> bool:
    """Does ``p`` belong to the program class described by ``d``?"""
    if d.schema is Schema.EXPLICIT:
        return all(arity_of_rule(r) in d.arities for r in p.rules)
    return all(any(preceq(arity_of_rule(r), b) for b in d.arities) for r in p.rules)


def normalize(d: AritySet) -> AritySet:
    """The antichain of maximal elements of an implicit set.

    Dropping dominated elements never changes the described program class,
    so the result is membership-equivalent to ``d``.
    """
    if d.schema is not Schema.IMPLICIT:
        raise SchemaError("normalize is defined for implicit arity sets only")
    maximal = frozenset(
        a for a in d.arities
        if not any(a != b and preceq(a, b) for b in d.arities)
    )
    return AritySet(maximal, Schema.IMPLICIT)


def profile(p: Program) -> AritySet:
    """The implicit arity set collecting the arities of ``p``'s rules."""
    return AritySet(frozenset(arity_of_rule(r) for r in p.rules), Schema.IMPLICIT)


def format_arity(a: Arity) -> str:
    return "[" + ",".join("inf" if c == INF else str(c) for c in a) + "]"


def _component_to_json(c: ExtNat):
    return "inf" if c == INF else c


def _component_from_json(value, schema: Schema):
    if value == "inf":
        if schema is Schema.EXPLICIT:
            raise ArityFormatError('explicit arity files cannot contain "inf"')
        return INF
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ArityFormatError(
            f'arity components must be non-negative integers or "inf", got {value!r}'
        )
    return value


def load_arity_set(text: str) -> AritySet:
    """Parse the JSON arity-set file format.

    The document is ``{"schema": "implicit"|"explicit", "arities":
    [[k,m,n], ...]}`` where each component is a non-negative integer or the
    string ``"inf"``. Explicit files reject ``"inf"``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArityFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ArityFormatError("arity file must be a JSON object")
    try:
        schema = Schema(doc["schema"])
    except (KeyError, ValueError):
        raise ArityFormatError('arity file needs "schema": "implicit" or "explicit"') from None
    entries = doc.get("arities")
    if not isinstance(entries, list):
        raise ArityFormatError('arity file needs an "arities" list')
    arities = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != 3:
            raise ArityFormatError(f"each arity must be a 3-element list, got {entry!r}")
        arities.append(Arity(*(_component_from_json(c, schema) for c in entry)))
    return AritySet(frozenset(arities), schema)


def dump_arity_set(d: AritySet) -> str:
    """Render ``d`` in the JSON arity-set file format (sorted, stable)."""
    doc = {
        "schema": d.schema.value,
        "arities": [[_component_to_json(c) for c in a] for a in d.sorted()],
    }
    return json.dumps(doc)
