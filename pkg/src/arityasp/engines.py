"""Polynomial-time decision procedures and the engine catalogue.

Each engine is sound exactly on the program class recorded in
``ENGINE_CLASSES`` (checked on entry, :class:`EngineMismatch` otherwise).
Decisions are always polynomial. Witness construction is polynomial where
the underlying argument builds one (least models, greatest supported
models, rewrite residues); for the model-existence engines an answer-set
or supported-model witness additionally needs a minimization step that is
exponential in the found model, so it is optional and capped.
"""

from __future__ import annotations

from enum import Enum
from itertools import combinations
from typing import Optional

from .arity import INF, AritySet, member
from .errors import EngineMismatch, OracleLimitExceeded
from .program import Program, Rule, split
from .semantics import Caps, DEFAULT_CAPS, satisfies_all


class Engine(str, Enum):
    """Decision procedures the classifier can recommend."""

    EAS_POSITIVE_PROPER = "EAS_POSITIVE_PROPER"
    EAS_HORN = "EAS_HORN"
    EAS_DUALHORN = "EAS_DUALHORN"
    EAS_2LIT = "EAS_2LIT"
    EAS_EMPTY_CHECK = "EAS_EMPTY_CHECK"
    SUPP_FACTS = "SUPP_FACTS"
    SUPP_MODEL_EXISTS = "SUPP_MODEL_EXISTS"
    SUPP_HORN_GFP = "SUPP_HORN_GFP"
    SUPP_REWRITE = "SUPP_REWRITE"
    SUPP_SKEP_CYCLE = "SUPP_SKEP_CYCLE"
    SEARCH_NP = "SEARCH_NP"
    SEARCH_SIGMA2 = "SEARCH_SIGMA2"
    ORACLE = "ORACLE"

    def __str__(self) -> str:
        return self.value


TWO_LIT_ARITIES = frozenset(
    (i, j, 0) for i in range(3) for j in range(3) if i + j <= 2
)

PROPER_POSITIVE_CLASS = AritySet.implicit({(INF, INF, 0), (0, 0, 0)})
HORN_WITH_CONSTRAINTS_CLASS = AritySet.implicit({(1, INF, 0), (0, INF, INF)})
DUAL_HORN_CLASS = AritySet.implicit({(INF, 1, 0), (0, 1, 0)})
TWO_LIT_CLASS = AritySet.implicit(TWO_LIT_ARITIES)
FACTS_CLASS = AritySet.implicit({(1, 0, 0), (0, INF, INF)})
HORN_POSITIVE_CLASS = AritySet.implicit({(1, INF, 0), (0, INF, 0)})
HORN_NEG_CONSTRAINTS_CLASS = AritySet.implicit({(1, INF, 0), (0, 0, INF)})
REWRITE_CLASS = AritySet.implicit({(1, 1, 0), (0, 1, INF)})
CYCLE_CLASS = AritySet.implicit({(1, 1, 0), (0, INF, 0)})
PROPER_HORN_CLASS = AritySet.implicit({(1, INF, 0)})
POSITIVE_2LIT_SUPP_CLASS = AritySet.implicit({(2, 0, 0), (1, 1, 0), (0, 2, 0)})

ENGINE_CLASSES: dict[Engine, AritySet] = {
    Engine.EAS_POSITIVE_PROPER: PROPER_POSITIVE_CLASS,
    Engine.EAS_HORN: HORN_WITH_CONSTRAINTS_CLASS,
    Engine.EAS_DUALHORN: DUAL_HORN_CLASS,
    Engine.EAS_2LIT: TWO_LIT_CLASS,
    Engine.SUPP_FACTS: FACTS_CLASS,
    Engine.SUPP_HORN_GFP: HORN_NEG_CONSTRAINTS_CLASS,
    Engine.SUPP_REWRITE: REWRITE_CLASS,
    Engine.SUPP_SKEP_CYCLE: CYCLE_CLASS,
}

# The model-existence engine accepts any of these positive classes and
# decides via the model/supported-model equivalence on positive programs.
MODEL_EXISTS_CLASSES = (
    PROPER_POSITIVE_CLASS,
    DUAL_HORN_CLASS,
    HORN_POSITIVE_CLASS,
    POSITIVE_2LIT_SUPP_CLASS,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise EngineMismatch(message)


def horn_least_model(p: Program) -> frozenset[int]:
    """Least model of the proper part of a Horn program, by unit
    propagation to fixpoint. Constraints in ``p`` are ignored."""
    proper, _ = split(p)
    _require(
        all(len(r.head) == 1 and not r.neg for r in proper.rules),
        "least-model computation needs a proper Horn program",
    )
    derived: set[int] = set()
    changed = True
    while changed:
        changed = False
        for r in proper.rules:
            if r.head[0] not in derived and all(b in derived for b in r.pos):
                derived.add(r.head[0])
                changed = True
    return frozenset(derived)


def dual_horn_has_model(p: Program) -> tuple[bool, Optional[frozenset[int]]]:
    """Satisfiability of a dual Horn program, with its greatest model.

    Grows the set of atoms forced false, bottom up: a unit constraint
    forces its body atom, and a rule whose head is entirely forced false
    forces its body atom (or refutes the program if it has no body). On
    success the greatest model is everything not forced false.
    """
    _require(member(p, DUAL_HORN_CLASS), "dual-Horn engine needs at most one positive body atom per rule")
    false: set[int] = set()
    changed = True
    while changed:
        changed = False
        for r in p.rules:
            if not all(a in false for a in r.head):
                continue
            if not r.pos:
                return False, None
            if r.pos[0] not in false:
                false.add(r.pos[0])
                changed = True
    return True, frozenset(p.atoms() - false)


def two_sat_has_model(p: Program) -> tuple[bool, Optional[frozenset[int]]]:
    """Satisfiability of a positive program with at most two literals per
    rule, read clause-wise: head atoms positive, body atoms negated.

    Standard implication-graph construction with strongly connected
    components; the returned model is the canonical SCC assignment.
    """
    _require(
        all(len(r.head) + len(r.pos) <= 2 and not r.neg for r in p.rules),
        "2-SAT engine needs positive rules with at most two literals",
    )
    atoms = sorted(p.atoms())
    index = {a: i for i, a in enumerate(atoms)}
    n = len(atoms)

    def lit(atom: int, positive: bool) -> int:
        return 2 * index[atom] + (0 if positive else 1)

    clauses = []
    for r in p.rules:
        seen = {lit(a, True) for a in r.head} | {lit(b, False) for b in r.pos}
        if not seen:
            return False, None
        clauses.append(sorted(seen))

    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for clause in clauses:
        if len(clause) == 1:
            adj[clause[0] ^ 1].append(clause[0])
        else:
            a, b = clause
            adj[a ^ 1].append(b)
            adj[b ^ 1].append(a)

    comp = _tarjan_scc(adj)
    assignment: set[int] = set()
    for i, atom in enumerate(atoms):
        if comp[2 * i] == comp[2 * i + 1]:
            return False, None
        # Components are emitted sinks first, so the smaller index wins.
        if comp[2 * i] < comp[2 * i + 1]:
            assignment.add(atom)
    return True, frozenset(assignment)


def _tarjan_scc(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    comp = [-1] * n
    low = [0] * n
    num = [0] * n
    visited = [False] * n
    counter = 0
    comp_count = 0
    stack: list[int] = []
    on_stack = [False] * n
    for root in range(n):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            node, edge_idx = work.pop()
            if edge_idx == 0:
                visited[node] = True
                num[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            recurse = False
            for i in range(edge_idx, len(adj[node])):
                succ = adj[node][i]
                if not visited[succ]:
                    work.append((node, i + 1))
                    work.append((succ, 0))
                    recurse = True
                    break
                if on_stack[succ]:
                    low[node] = min(low[node], num[succ])
            if recurse:
                continue
            if low[node] == num[node]:
                while True:
                    top = stack.pop()
                    on_stack[top] = False
                    comp[top] = comp_count
                    if top == node:
                        break
                comp_count += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return comp


def _minimize_model(
    proper: Program, model: frozenset[int], caps: Caps
) -> frozenset[int]:
    """Smallest-cardinality submodel of ``model`` for the positive proper
    part; a minimum-size model is inclusion-minimal, hence an answer set
    of the proper part. Exponential in ``model``; capped."""
    if len(model) > caps.minimality:
        raise OracleLimitExceeded(
            f"witness minimization over {len(model)} atoms exceeds the cap of {caps.minimality}"
        )
    atoms = sorted(model)
    for size in range(len(atoms) + 1):
        for combo in combinations(atoms, size):
            cand = frozenset(combo)
            if satisfies_all(cand, proper):
                return cand
    return model  # unreachable: model itself satisfies proper


def eas_poly(
    p: Program,
    engine: Engine,
    want_witness: bool = True,
    caps: Caps = DEFAULT_CAPS,
) -> tuple[bool, Optional[frozenset[int]]]:
    """Answer-set existence via the polynomial engine ``engine``.

    The decision itself is polynomial in every case. For the
    positive-proper, dual-Horn and two-literal engines the polynomial
    argument only produces a *model*; turning it into an answer-set
    witness minimizes over its subsets, which is optional
    (``want_witness``) and subject to ``caps.minimality``.
    """
    proper, constraints = split(p)
    if engine is Engine.EAS_POSITIVE_PROPER:
        _require(member(p, PROPER_POSITIVE_CLASS), "engine needs a proper positive program")
        if any(r.is_contradictory for r in p.rules):
            return False, None
        if not want_witness:
            return True, None
        return True, _minimize_model(proper, p.atoms(), caps)
    if engine is Engine.EAS_HORN:
        _require(member(p, HORN_WITH_CONSTRAINTS_CLASS), "engine needs proper Horn rules plus constraints")
        least = horn_least_model(p)
        if satisfies_all(least, constraints):
            return True, least if want_witness else None
        return False, None
    if engine is Engine.EAS_DUALHORN:
        has_model, greatest = dual_horn_has_model(p)
        if not has_model:
            return False, None
        if not want_witness:
            return True, None
        return True, _minimize_model(proper, greatest, caps)
    if engine is Engine.EAS_2LIT:
        has_model, model = two_sat_has_model(p)
        if not has_model:
            return False, None
        if not want_witness:
            return True, None
        return True, _minimize_model(proper, model, caps)
    if engine is Engine.EAS_EMPTY_CHECK:
        _require(
            all(r.pos for r in proper.rules),
            "empty-model engine needs a positive body atom in every proper rule",
        )
        empty: frozenset[int] = frozenset()
        if satisfies_all(empty, constraints):
            return True, empty
        return False, None
    raise EngineMismatch(f"{engine} is not an answer-set existence engine")


def supported_rewrite(p: Program) -> Program:
    """Fixpoint of the three supported-model-preserving rewrite steps:

    1. a fact atom is removed together with the rules it decides,
    2. an atom never occurring in a head is removed as false,
    3. a unit constraint ``:- a`` cancels a proper rule ``a :- b`` into
       the constraint ``:- b``.

    The result has the same supported-model existence status as ``p``.
    """
    residue, _ = _rewrite_trace(p)
    return residue


def _rewrite_trace(p: Program) -> tuple[Program, list[int]]:
    _require(member(p, REWRITE_CLASS), "rewrite engine needs unary Horn rules and unary-positive constraints")
    rules = list(p.rules)
    forced_facts: list[int] = []
    while True:
        fact_atoms = sorted({r.head[0] for r in rules if r.head and not r.pos and not r.neg})
        if fact_atoms:
            a = fact_atoms[0]
            forced_facts.append(a)
            new_rules = []
            for r in rules:
                if r.head and a in r.head:
                    continue
                if not r.head and a in r.neg:
                    continue
                new_rules.append(Rule(r.head, tuple(x for x in r.pos if x != a), r.neg))
            rules = new_rules
            continue
        heads = {h for r in rules for h in r.head}
        occurring = set(heads)
        for r in rules:
            occurring.update(r.pos)
            occurring.update(r.neg)
        headless = sorted(occurring - heads)
        if headless:
            a = headless[0]
            rules = [
                Rule(r.head, r.pos, tuple(x for x in r.neg if x != a))
                for r in rules
                if a not in r.pos
            ]
            continue
        unit_constraints = sorted(
            {r.pos[0] for r in rules if not r.head and len(r.pos) == 1 and not r.neg} & heads
        )
        if unit_constraints:
            a = unit_constraints[0]
            idx = next(i for i, r in enumerate(rules) if r.head and r.head[0] == a)
            cancelled = rules[idx]
            rules = rules[:idx] + rules[idx + 1 :] + [Rule((), cancelled.pos, ())]
            continue
        return Program(rules, p.table), forced_facts


def horn_greatest_supported(p: Program) -> frozenset[int]:
    """Greatest supported model of a proper Horn program: the one-step
    head operator iterated downward from At(p)."""
    _require(
        member(p, PROPER_HORN_CLASS) and all(r.head for r in p.rules),
        "greatest supported model needs a proper Horn program",
    )
    current = set(p.atoms())
    while True:
        step = {r.head[0] for r in p.rules if all(b in current for b in r.pos)}
        if step == current:
            return frozenset(current)
        current = step


def _one_step_heads(proper: Program, m: frozenset) -> frozenset[int]:
    return frozenset(
        r.head[0]
        for r in proper.rules
        if all(b in m for b in r.pos) and not any(c in m for c in r.neg)
    )


def _positive_model(p: Program) -> tuple[bool, Optional[frozenset[int]]]:
    """Model existence for the positive classes the supported engine
    accepts, picking the cheapest applicable procedure."""
    if member(p, PROPER_POSITIVE_CLASS):
        if any(r.is_contradictory for r in p.rules):
            return False, None
        return True, p.atoms()
    if member(p, DUAL_HORN_CLASS):
        return dual_horn_has_model(p)
    if member(p, HORN_POSITIVE_CLASS):
        least = horn_least_model(p)
        _, constraints = split(p)
        if satisfies_all(least, constraints):
            return True, least
        return False, None
    if member(p, POSITIVE_2LIT_SUPP_CLASS):
        return two_sat_has_model(p)
    raise EngineMismatch("model-existence engine needs one of the positive tractable classes")


def espm_poly(
    p: Program,
    engine: Engine,
    want_witness: bool = True,
    caps: Caps = DEFAULT_CAPS,
) -> tuple[bool, Optional[frozenset[int]]]:
    """Supported-model existence via the polynomial engine ``engine``.

    Witnesses come straight from the procedure where it builds one (the
    fact set, the greatest supported model, the rewrite residue heads).
    The model-existence engine only decides; its optional witness is a
    capped minimization of the found model.
    """
    proper, constraints = split(p)
    if engine is Engine.SUPP_FACTS:
        _require(member(p, FACTS_CLASS), "facts engine needs a fact-only proper part")
        facts = frozenset(r.head[0] for r in proper.rules)
        if satisfies_all(facts, constraints):
            return True, facts if want_witness else None
        return False, None
    if engine is Engine.SUPP_MODEL_EXISTS:
        has_model, model = _positive_model(p)
        if not has_model:
            return False, None
        if not want_witness:
            return True, None
        # A minimal submodel of the proper part is an answer set of it,
        # hence supported; positive constraints survive shrinking.
        return True, _minimize_model(proper, model, caps)
    if engine is Engine.SUPP_HORN_GFP:
        _require(member(p, HORN_NEG_CONSTRAINTS_CLASS), "engine needs Horn rules and purely negative constraints")
        greatest = horn_greatest_supported(proper)
        if satisfies_all(greatest, constraints):
            return True, greatest if want_witness else None
        return False, None
    if engine is Engine.SUPP_REWRITE:
        residue, forced_facts = _rewrite_trace(p)
        if any(r.is_contradictory for r in residue.rules):
            return False, None
        if not want_witness:
            return True, None
        heads = frozenset(r.head[0] for r in residue.rules if r.head)
        return True, heads | frozenset(forced_facts)
    raise EngineMismatch(f"{engine} is not a supported-model existence engine")


def supp_skeptical_poly(p: Program, atom: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Does every supported model avoid ``atom``?

    Sound on unary Horn rules with positive constraints: every supported
    model is a union of least models of the proper part seeded with one
    atom, so it suffices to check, for each atom ``b``, whether the least
    model of the proper part plus the fact ``b`` is a supported model
    containing the query atom.
    """
    return supp_skeptical_witness(p, atom) is None


def supp_skeptical_witness(p: Program, atom: int) -> Optional[frozenset[int]]:
    """A supported model of ``p`` containing ``atom``, if one exists."""
    _require(member(p, CYCLE_CLASS), "skeptical cycle engine needs unary Horn rules and positive constraints")
    proper, constraints = split(p)
    for b in sorted(p.atoms()):
        seeded = Program(proper.rules + (Rule((b,), (), ()),), p.table)
        candidate = horn_least_model(seeded)
        if atom not in candidate:
            continue
        if _one_step_heads(proper, candidate) != candidate:
            continue
        if satisfies_all(candidate, constraints):
            return candidate
    return None
