"""Executable reduction constructions.

Every gadget here is a transformation with a decision-equivalence
contract: the source decision (satisfiability, answer-set existence,
supported-model existence) equals the target decision, and the output
lands in a fixed arity class. The test suite checks both halves by brute
force over exhaustive small families.

Fresh atoms always use the reserved ``_g`` prefix and are allocated in a
fixed order, so gadget outputs are reproducible byte for byte.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .arity import Arity, AritySet, Schema, arity_of_rule, member, preceq
from .cnf import Clause, CnfFormula, Lit
from .errors import AtomNotFresh, PreconditionError, SchemaError, ShapeError
from .program import Program, Rule

# Target (positive, negative) literal counts for the rewritten clause of
# each satisfiability shape case.
_SHAPE_TARGETS = {1: (3, 0), 2: (2, 1), 3: (1, 2), 4: (0, 3)}


def _occurrence_order(phi: CnfFormula) -> list[int]:
    seen: list[int] = []
    for clause in phi.clauses:
        for lit in clause:
            if lit.atom not in seen:
                seen.append(lit.atom)
    return seen


def _require_three_literals(phi: CnfFormula) -> None:
    for i, clause in enumerate(phi.clauses):
        if len(clause) != 3:
            raise ShapeError(f"clause {i} has {len(clause)} literals, need exactly 3")


def gadget_sat_shape(phi: CnfFormula, case_id: int) -> CnfFormula:
    """Rewrite a 3-literal CNF into one of four restricted clause shapes,
    preserving satisfiability.

    Each atom ``z`` gets a primed partner forced to carry ``z``'s
    complement (clauses ``z v z'`` and ``-z v -z'``; case 3 routes the
    latter through a fresh always-false atom). Inside each original
    clause, literals are flipped to their primed complements, rightmost
    first, until the clause matches the case's target polarity counts.
    """
    if case_id not in _SHAPE_TARGETS:
        raise ShapeError(f"unknown shape case {case_id}")
    _require_three_literals(phi)
    table = phi.table.copy()
    order = _occurrence_order(phi)
    prime = {z: table.fresh("p_" + table.name(z)) for z in order}
    false_atom = table.fresh("f") if case_id == 3 else None

    target_pos, _ = _SHAPE_TARGETS[case_id]
    rewritten: list[Clause] = []
    for clause in phi.clauses:
        pos_count = sum(1 for lit in clause if not lit.negated)
        flip_pos = max(0, pos_count - target_pos)
        flip_neg = max(0, target_pos - pos_count)
        out: list[Lit] = list(clause)
        for i in range(len(out) - 1, -1, -1):
            lit = out[i]
            if not lit.negated and flip_pos:
                out[i] = Lit(prime[lit.atom], True)
                flip_pos -= 1
            elif lit.negated and flip_neg:
                out[i] = Lit(prime[lit.atom], False)
                flip_neg -= 1
        if flip_pos or flip_neg:
            raise ShapeError("clause cannot be rewritten to the target shape")
        rewritten.append(tuple(out))

    clauses: list[Clause] = []
    for z in order:
        clauses.append((Lit(z, False), Lit(prime[z], False)))
    for z in order:
        pair = (Lit(z, True), Lit(prime[z], True))
        if case_id == 3:
            clauses.append((Lit(false_atom, False),) + pair)
        else:
            clauses.append(pair)
    if case_id == 3:
        clauses.append((Lit(false_atom, True),))
    clauses.extend(rewritten)
    return CnfFormula(tuple(clauses), table)


def gadget_eas_R(phi: CnfFormula) -> Program:
    """Answer-set existence gadget for CNFs whose clauses are two-atom
    positive disjunctions or disjunctions of at most three negated atoms.

    Positive clauses become binary disjunctive facts. Each negative clause
    gets a fresh marker atom disjoined with each of its atoms, plus the
    constraint that the marker must be derived; minimality then forces
    some clause atom false. The formula is satisfiable exactly when the
    result has an answer set.
    """
    pos_clauses: list[Clause] = []
    neg_clauses: list[Clause] = []
    for i, clause in enumerate(phi.clauses):
        if len(clause) == 2 and not any(lit.negated for lit in clause):
            pos_clauses.append(clause)
        elif len(clause) <= 3 and all(lit.negated for lit in clause):
            neg_clauses.append(clause)
        else:
            raise ShapeError(
                f"clause {i} is neither a two-atom disjunction nor at most three negated atoms"
            )
    table = phi.table.copy()
    markers = [table.fresh(f"x{j}") for j in range(len(neg_clauses))]
    rules = [Rule(tuple(lit.atom for lit in clause), (), ()) for clause in pos_clauses]
    for marker, clause in zip(markers, neg_clauses):
        for lit in clause:
            rules.append(Rule((marker, lit.atom), (), ()))
    for marker in markers:
        rules.append(Rule((), (), (marker,)))
    return Program(rules, table)


def gadget_supported(phi: CnfFormula, variant: int) -> Program:
    """Supported-model existence gadget for 3-literal CNFs.

    Every atom and its primed partner become self-supporting loops with a
    mutual-exclusion constraint, so supported models pick one of each
    pair. A fresh clause atom is derivable from each literal the clause
    makes true and is required by a constraint. Variant 7 keeps the
    binary mutual-exclusion constraints; variant 8 funnels them through a
    fresh forbidden atom so constraints stay unary.
    """
    if variant not in (7, 8):
        raise ShapeError(f"unknown supported-gadget variant {variant}")
    _require_three_literals(phi)
    table = phi.table.copy()
    order = _occurrence_order(phi)
    prime = {z: table.fresh("p_" + table.name(z)) for z in order}
    hats = [table.fresh(f"c{i}") for i in range(len(phi.clauses))]
    false_atom = table.fresh("f") if variant == 8 else None

    rules: list[Rule] = []
    for z in order:
        rules.append(Rule((z,), (z,), ()))
        rules.append(Rule((prime[z],), (prime[z],), ()))
        if variant == 7:
            rules.append(Rule((), (z, prime[z]), ()))
        else:
            rules.append(Rule((false_atom,), (z, prime[z]), ()))
    for hat, clause in zip(hats, phi.clauses):
        seen: list[int] = []
        for lit in clause:
            body = prime[lit.atom] if lit.negated else lit.atom
            if body not in seen:
                seen.append(body)
                rules.append(Rule((hat,), (body,), ()))
    for hat in hats:
        rules.append(Rule((), (), (hat,)))
    if variant == 8:
        rules.append(Rule((), (false_atom,), ()))
    return Program(rules, table)


def pad_to_explicit(p: Program, d: AritySet) -> Program:
    """Pad every rule of ``p`` to an arity literally contained in ``d``,
    preserving answer-set existence.

    Heads grow by repeating their last atom; positive bodies grow with a
    fresh atom made true by an auxiliary rule; negative bodies grow with a
    fresh atom that never appears in a head and so stays false. The
    auxiliary rule itself uses an arity ``[k,0,m]`` with ``k >= 1`` from
    ``d``, which must exist for the construction (and exactly when the
    explicit class is not already polynomial).
    """
    if d.schema is not Schema.EXPLICIT:
        raise SchemaError("padding targets an explicit arity set")
    aux_candidates = sorted(a for a in d.arities if a.k >= 1 and a.m == 0)
    if not aux_candidates:
        raise PreconditionError(
            "no [k,0,m] arity with k >= 1 in the target set; the padding construction needs one"
        )
    aux_shape = aux_candidates[0]
    table = p.table.copy()
    pad_pos = table.fresh("a")
    pad_neg = table.fresh("b")
    pad_aux = table.fresh("ap")

    padded: list[Rule] = []
    for r in p.rules:
        a_r = arity_of_rule(r)
        options = [a for a in d.arities if preceq(a_r, a)]
        if not options:
            raise PreconditionError(
                f"rule arity {tuple(a_r)} is not dominated by any target arity"
            )
        cost = lambda a: (a.k - a_r.k) + (a.m - a_r.m) + (a.n - a_r.n)
        best = min(options, key=lambda a: (cost(a), a))
        head = r.head + (r.head[-1],) * (best.k - a_r.k) if r.head else r.head
        pos = r.pos + (pad_pos,) * (best.m - a_r.m)
        neg = r.neg + (pad_neg,) * (best.n - a_r.n)
        padded.append(Rule(head, pos, neg))
    aux_rule = Rule((pad_pos,) * aux_shape.k, (), (pad_aux,) * aux_shape.n)
    return Program(padded + [aux_rule], table)


def fold_constraints(p: Program, fresh_name: str) -> Program:
    """Replace each constraint by a rule deriving a fresh atom from its
    body: the program has an answer set exactly when the result
    credulously entails the fresh atom's negation."""
    table = p.table.copy()
    atom = table.intern(fresh_name)
    if atom in p.atoms():
        raise AtomNotFresh(f"{fresh_name!r} already occurs in the program")
    rules = [r for r in p.rules if r.head]
    rules += [Rule((atom,), r.pos, r.neg) for r in p.rules if not r.head]
    return Program(rules, table)


_CHAIN_CLASS = AritySet.implicit({(1, 2, 0), (0, 1, 0), (0, 0, 1)})


def chain_replace(p: Program, atoms: Sequence[int]) -> tuple[Program, int]:
    """Replace the constraints ``:- not a_i`` by a derivation chain
    ``b_1 :- a_1``, ``b_i :- b_{i-1}, a_i`` over fresh atoms.

    The program has a supported model exactly when the result has a
    supported model containing the returned final chain atom.
    """
    if not member(p, _CHAIN_CLASS):
        raise PreconditionError(
            "chain replacement needs unary Horn rules with unary constraints"
        )
    atoms = list(atoms)
    if len(set(atoms)) != len(atoms):
        raise PreconditionError("chain atoms must be distinct")
    negated = {r.neg[0] for r in p.rules if not r.head and not r.pos and len(r.neg) == 1}
    if set(atoms) != negated:
        raise PreconditionError(
            "chain atoms must be exactly the atoms with a ':- not a' constraint"
        )
    if not atoms:
        raise PreconditionError("there is no ':- not a' constraint to replace")
    table = p.table.copy()
    links = [table.fresh(f"b{i + 1}") for i in range(len(atoms))]
    kept = [
        r
        for r in p.rules
        if not (not r.head and not r.pos and len(r.neg) == 1 and r.neg[0] in negated)
    ]
    chain = [Rule((links[0],), (atoms[0],), ())]
    for i in range(1, len(atoms)):
        chain.append(Rule((links[i],), (links[i - 1], atoms[i]), ()))
    return Program(kept + chain, table), links[-1]
