"""Guess-and-check search plus the task router.

``solve_np`` walks candidate interpretations in lexicographic order (by
sorted atom-id sequence) and certifies each candidate with a polynomial
check appropriate to the program class, so the first hit is also the
deterministic witness. ``solve_sigma2`` is the exhaustive fallback with
full subset-minimality checking.

``decide`` turns every task into an existence question: entailment of a
negated atom adds the matching constraint (``:- a`` for credulous,
``:- not a`` for skeptical, whose answer is then complemented), classifies
the augmented arity profile, and runs the cheapest sound engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .arity import AritySet, member, profile
from .classifier import ComplexityVerdict, Label, TaskKind, classify
from .engines import (
    Engine,
    eas_poly,
    espm_poly,
    horn_least_model,
    dual_horn_has_model,
    supp_skeptical_witness,
    _minimize_model,
)
from .errors import EngineMismatch, OracleLimitExceeded
from .program import Program, Rule, split
from .semantics import (
    Caps,
    DEFAULT_CAPS,
    SemanticsKind,
    is_supported_model,
    reduct,
    satisfies_all,
)

_INF = float("inf")

_NORMAL_CLASS = AritySet.implicit({(1, _INF, _INF), (0, _INF, _INF)})
_DUAL_HORN_REDUCT_CLASS = AritySet.implicit({(_INF, 1, _INF), (0, _INF, _INF)})
_POSITIVE_CLASS = AritySet.implicit({(_INF, _INF, 0), (0, _INF, 0)})


@dataclass(frozen=True)
class Task:
    kind: TaskKind
    atom: Optional[str] = None

    def __post_init__(self):
        entailment = self.kind in (
            TaskKind.CRED_NEG,
            TaskKind.SKEP_NEG,
            TaskKind.SUPP_CRED_NEG,
            TaskKind.SUPP_SKEP_NEG,
        )
        if entailment and not self.atom:
            raise ValueError(f"task {self.kind.value} needs a query atom")
        if not entailment and self.atom is not None:
            raise ValueError(f"task {self.kind.value} does not take a query atom")


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: Optional[frozenset]
    engine_used: Engine
    verdict: ComplexityVerdict


def lex_subsets(atoms: list[int]) -> Iterator[frozenset]:
    """All subsets of ``atoms`` ordered lexicographically by their sorted
    id sequence (the empty set first)."""
    atoms = sorted(atoms)

    def walk(prefix: list[int], start: int) -> Iterator[frozenset]:
        yield frozenset(prefix)
        for i in range(start, len(atoms)):
            prefix.append(atoms[i])
            yield from walk(prefix, i + 1)
            prefix.pop()

    return walk([], 0)


def _check_normal(p: Program, proper: Program, constraints: Program, m: frozenset) -> bool:
    # For one-atom heads the reduct is proper Horn, so the candidate is an
    # answer set exactly when it reproduces the least model of its reduct.
    return (
        satisfies_all(m, constraints)
        and horn_least_model(reduct(proper, m)) == m
    )


def _check_dual_horn_reduct(p: Program, proper: Program, constraints: Program, m: frozenset) -> bool:
    if not satisfies_all(m, constraints):
        return False
    q = reduct(proper, m)
    if not satisfies_all(m, q):
        return False
    outside = sorted(p.atoms() - m)
    base = list(q.rules) + [Rule((), (b,), ()) for b in outside]
    for a in sorted(m):
        test = Program(base + [Rule((), (a,), ())], p.table)
        has_model, _ = dual_horn_has_model(test)
        if has_model:
            return False
    return True


def solve_np(
    p: Program,
    kind: SemanticsKind,
    caps: Caps = DEFAULT_CAPS,
    want_witness: bool = True,
) -> tuple[bool, Optional[frozenset]]:
    """Existence by candidate search with a polynomial certifier.

    Answer-set mode requires the program to sit in one of the NP-certified
    classes: normal rules (least-model equality), at most one positive
    body atom (dual-Horn minimality test), or positive rules (model search
    plus witness minimization). Supported-model mode has no restriction;
    the minimality of the applicable heads is brute-forced within caps.
    """
    atoms = sorted(p.atoms())
    if len(atoms) > caps.enumeration:
        raise OracleLimitExceeded(
            f"candidate search over {len(atoms)} atoms exceeds the cap of {caps.enumeration}"
        )
    if kind is SemanticsKind.SUPPORTED:
        for cand in lex_subsets(atoms):
            if is_supported_model(p, cand, caps):
                return True, cand if want_witness else None
        return False, None

    proper, constraints = split(p)
    if member(p, _NORMAL_CLASS):
        check = _check_normal
    elif member(p, _DUAL_HORN_REDUCT_CLASS):
        check = _check_dual_horn_reduct
    elif member(p, _POSITIVE_CLASS):
        for cand in lex_subsets(atoms):
            if satisfies_all(cand, p):
                if not want_witness:
                    return True, None
                return True, _minimize_model(proper, cand, caps)
        return False, None
    else:
        raise EngineMismatch("program is outside every NP-certified class")
    for cand in lex_subsets(atoms):
        if check(p, proper, constraints, cand):
            return True, cand if want_witness else None
    return False, None


def solve_sigma2(
    p: Program, caps: Caps = DEFAULT_CAPS, want_witness: bool = True
) -> tuple[bool, Optional[frozenset]]:
    """Exhaustive answer-set existence with full minimality checking."""
    atoms = sorted(p.atoms())
    if len(atoms) > caps.enumeration:
        raise OracleLimitExceeded(
            f"exhaustive search over {len(atoms)} atoms exceeds the cap of {caps.enumeration}"
        )
    proper, constraints = split(p)
    from .semantics import is_minimal_model

    for cand in lex_subsets(atoms):
        if satisfies_all(cand, constraints) and is_minimal_model(
            reduct(proper, cand), cand, caps
        ):
            return True, cand if want_witness else None
    return False, None


_TASK_PLANS: dict[TaskKind, tuple[SemanticsKind, Optional[str], bool]] = {
    # kind -> (existence semantics, added constraint ("pos"/"neg"/None), complement?)
    TaskKind.EAS: (SemanticsKind.ANSWER_SET, None, False),
    TaskKind.CRED_NEG: (SemanticsKind.ANSWER_SET, "pos", False),
    TaskKind.SKEP_NEG: (SemanticsKind.ANSWER_SET, "neg", True),
    TaskKind.ESPM: (SemanticsKind.SUPPORTED, None, False),
    TaskKind.SUPP_CRED_NEG: (SemanticsKind.SUPPORTED, "pos", False),
    TaskKind.SUPP_SKEP_NEG: (SemanticsKind.SUPPORTED, "neg", True),
}


def _augment(p: Program, atom_name: str, polarity: str) -> Program:
    table = p.table.copy()
    atom = table.intern(atom_name)
    extra = Rule((), (atom,), ()) if polarity == "pos" else Rule((), (), (atom,))
    return Program(p.rules + (extra,), table)


def _existence(
    p: Program, kind: SemanticsKind, caps: Caps
) -> tuple[bool, Optional[frozenset], Engine]:
    """Cheapest sound engine for one existence question on ``p``."""
    task = TaskKind.EAS if kind is SemanticsKind.ANSWER_SET else TaskKind.ESPM
    verdict = classify(task, profile(p))
    if verdict.label is Label.PTIME:
        runner = eas_poly if kind is SemanticsKind.ANSWER_SET else espm_poly
        try:
            answer, witness = runner(p, verdict.engine, want_witness=True, caps=caps)
        except OracleLimitExceeded:
            answer, witness = runner(p, verdict.engine, want_witness=False, caps=caps)
        return answer, witness, verdict.engine
    if kind is SemanticsKind.ANSWER_SET:
        proper, _ = split(p)
        if all(r.pos for r in proper.rules):
            # Every proper rule carries a positive body atom, so the empty
            # set is the only candidate answer set of the proper part.
            answer, witness = eas_poly(p, Engine.EAS_EMPTY_CHECK, caps=caps)
            return answer, witness, Engine.EAS_EMPTY_CHECK
    if verdict.label.rank == 1:
        try:
            answer, witness = solve_np(p, kind, caps)
        except OracleLimitExceeded:
            if kind is SemanticsKind.ANSWER_SET and member(p, _POSITIVE_CLASS):
                answer, witness = solve_np(p, kind, caps, want_witness=False)
            else:
                raise
        return answer, witness, Engine.SEARCH_NP
    answer, witness = solve_sigma2(p, caps)
    return answer, witness, Engine.SEARCH_SIGMA2


def decide(task: Task, p: Program, caps: Caps = DEFAULT_CAPS) -> Decision:
    """Route ``task`` on ``p`` to the cheapest sound engine.

    The reported verdict classifies the program's own arity profile for
    the task. Dispatch then works on the rewritten existence question:
    entailment adds its constraint and the augmented profile is classified
    again. For complemented tasks the witness, when present, is the
    counterexample that refutes entailment.
    """
    verdict = classify(task.kind, profile(p))
    kind, polarity, complement = _TASK_PLANS[task.kind]

    if task.kind is TaskKind.SUPP_SKEP_NEG and verdict.condition == "ssk.4":
        atom = p.table.lookup(task.atom)
        witness = None if atom is None else supp_skeptical_witness(p, atom)
        return Decision(witness is None, witness, Engine.SUPP_SKEP_CYCLE, verdict)

    target = _augment(p, task.atom, polarity) if polarity else p
    answer, witness, engine = _existence(target, kind, caps)
    if complement:
        answer = not answer
    return Decision(answer, witness, engine, verdict)
