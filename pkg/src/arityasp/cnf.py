"""CNF formulas over named atoms.

File format: one clause per line, literals space-separated, "-" prefixing
a negated atom, "%" starting a comment. Atom names follow the program
identifier rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import OracleLimitExceeded, ParseError
from .parser import IDENT_RE
from .program import AtomTable
from .semantics import Caps, DEFAULT_CAPS


class Lit(NamedTuple):
    atom: int
    negated: bool


Clause = tuple[Lit, ...]


@dataclass
class CnfFormula:
    clauses: tuple[Clause, ...]
    table: AtomTable

    def atoms(self) -> frozenset[int]:
        return frozenset(lit.atom for clause in self.clauses for lit in clause)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CnfFormula):
            return NotImplemented
        name_a, name_b = self.table.name, other.table.name
        shape = lambda f, name: [
            tuple((name(l.atom), l.negated) for l in c) for c in f.clauses
        ]
        return shape(self, name_a) == shape(other, name_b)

    def __len__(self) -> int:
        return len(self.clauses)


def clause_of(table: AtomTable, *literals: tuple[str, bool]) -> Clause:
    return tuple(Lit(table.intern(name), negated) for name, negated in literals)


def parse_cnf(text: str, table: Optional[AtomTable] = None) -> CnfFormula:
    table = table if table is not None else AtomTable()
    clauses: list[Clause] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        if not line.strip():
            continue
        lits: list[Lit] = []
        col = 1
        rest = line
        while rest:
            stripped = rest.lstrip()
            col += len(rest) - len(stripped)
            rest = stripped
            if not rest:
                break
            negated = rest.startswith("-")
            token = rest[1:] if negated else rest
            token_col = col + (1 if negated else 0)
            match = IDENT_RE.match(token)
            if not match or (match.end() < len(token) and not token[match.end()].isspace()):
                raise ParseError("expected an atom name", lineno, token_col)
            name = match.group()
            lits.append(Lit(table.intern(name), negated))
            consumed = (1 if negated else 0) + len(name)
            col += consumed
            rest = rest[consumed:]
        clauses.append(tuple(lits))
    return CnfFormula(tuple(clauses), table)


def serialize_cnf(phi: CnfFormula) -> str:
    name = phi.table.name
    return "\n".join(
        " ".join(("-" if l.negated else "") + name(l.atom) for l in clause)
        for clause in phi.clauses
    )


def satisfiable(phi: CnfFormula, caps: Caps = DEFAULT_CAPS) -> tuple[bool, Optional[frozenset]]:
    """Truth-table satisfiability; the independent oracle for CNF gadgets."""
    atoms = sorted(phi.atoms())
    n = len(atoms)
    if n > caps.enumeration:
        raise OracleLimitExceeded(f"truth table over {n} atoms exceeds the cap of {caps.enumeration}")
    position = {a: i for i, a in enumerate(atoms)}
    full = (1 << n) - 1
    masks = []
    for clause in phi.clauses:
        pos = neg = 0
        for lit in clause:
            if lit.negated:
                neg |= 1 << position[lit.atom]
            else:
                pos |= 1 << position[lit.atom]
        masks.append((pos, neg))
    for assign in range(1 << n):
        if all(pos & assign or neg & (full ^ assign) for pos, neg in masks):
            return True, frozenset(atoms[i] for i in range(n) if assign >> i & 1)
    return False, None


def models_cnf(m: Iterable[int], phi: CnfFormula) -> bool:
    m = frozenset(m)
    return all(
        any((lit.atom in m) != lit.negated for lit in clause)
        for clause in phi.clauses
    )
