"""Core objects: interned atoms, rules, programs, interpretations.

Atoms are interned per program into dense integer ids, so interpretations
are plain ``frozenset[int]`` values and the semantics layer can work on
bitmasks. Rules keep their atom sequences exactly as written; duplicate
occurrences are meaningful (they raise the rule arity without changing
models) and must survive round trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

# Names generated for gadget atoms start with this prefix; ordinary program
# text may not introduce other underscore-initial names.
FRESH_PREFIX = "_g"


class AtomTable:
    """Bijective name <-> id interner; ids are dense, in first-use order."""

    __slots__ = ("_ids", "_names")

    def __init__(self, names: Iterable[str] = ()):
        self._ids: dict[str, int] = {}
        self._names: list[str] = []
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> int:
        """Return the id for ``name``, assigning the next id if unseen."""
        ident = self._ids.get(name)
        if ident is None:
            ident = len(self._names)
            self._ids[name] = ident
            self._names.append(name)
        return ident

    def lookup(self, name: str) -> Optional[int]:
        return self._ids.get(name)

    def name(self, atom: int) -> str:
        return self._names[atom]

    def names(self) -> tuple[str, ...]:
        return tuple(self._names)

    def fresh(self, stem: str) -> int:
        """Intern an unused atom named with the reserved gadget prefix."""
        base = FRESH_PREFIX + stem
        if base not in self._ids:
            return self.intern(base)
        suffix = 2
        while f"{base}{suffix}" in self._ids:
            suffix += 1
        return self.intern(f"{base}{suffix}")

    def copy(self) -> "AtomTable":
        dup = AtomTable()
        dup._ids = dict(self._ids)
        dup._names = list(self._names)
        return dup

    def __contains__(self, name: str) -> bool:
        return name in self._ids

    def __len__(self) -> int:
        return len(self._names)

    def __repr__(self) -> str:
        return f"AtomTable({self._names!r})"


@dataclass(frozen=True)
class Rule:
    """One rule: head disjunction, positive body, negative body.

    All three parts are sequences of atom ids and may repeat atoms. The
    rule with all parts empty is the unique contradictory rule.
    """

    head: tuple[int, ...]
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    @property
    def is_constraint(self) -> bool:
        return not self.head

    @property
    def is_contradictory(self) -> bool:
        return not self.head and not self.pos and not self.neg

    def atoms(self) -> frozenset[int]:
        return frozenset(self.head) | frozenset(self.pos) | frozenset(self.neg)


class Program:
    """A finite sequence of rules over one atom table.

    Rule order and duplicate rules are preserved from the input. Equality
    is structural on atom *names*, so programs parsed from the same text
    through different tables compare equal.
    """

    __slots__ = ("rules", "table")

    def __init__(self, rules: Iterable[Rule], table: AtomTable):
        self.rules: tuple[Rule, ...] = tuple(rules)
        self.table = table

    def atoms(self) -> frozenset[int]:
        """The set At(P) of atom ids occurring in the rules."""
        out: set[int] = set()
        for rule in self.rules:
            out.update(rule.head)
            out.update(rule.pos)
            out.update(rule.neg)
        return frozenset(out)

    def atom_names(self) -> frozenset[str]:
        return frozenset(self.table.name(a) for a in self.atoms())

    def _name_shape(self):
        name = self.table.name
        return [
            (
                tuple(name(a) for a in r.head),
                tuple(name(a) for a in r.pos),
                tuple(name(a) for a in r.neg),
            )
            for r in self.rules
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._name_shape() == other._name_shape()

    def __len__(self) -> int:
        return len(self.rules)

    def __repr__(self) -> str:
        return f"Program({len(self.rules)} rules, {len(self.table)} atoms)"


def split(p: Program) -> tuple[Program, Program]:
    """Partition ``p`` into (proper rules, constraints), sharing the table."""
    proper = [r for r in p.rules if r.head]
    constraints = [r for r in p.rules if not r.head]
    return Program(proper, p.table), Program(constraints, p.table)


def extend(p: Program, extra: Iterable[Rule], table: Optional[AtomTable] = None) -> Program:
    """A new program with ``extra`` rules appended; ``p`` is not mutated."""
    return Program(p.rules + tuple(extra), table if table is not None else p.table)
