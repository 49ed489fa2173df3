"""Ground-truth semantics: satisfaction, reduct, minimality, enumeration.

Everything here is definition-level and exhaustive; the polynomial engines
and the reduction gadgets are validated against these functions. Checks
run on bitmask representations internally, but the contracts are in terms
of programs and interpretations (frozen sets of atom ids).

Exhaustive checks are capped: subset enumeration for minimality refuses
interpretations above ``Caps.minimality`` atoms, and model enumeration
refuses programs above ``Caps.enumeration`` atoms. Both fail loudly with
:class:`OracleLimitExceeded` instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .arity import INF, AritySet, member
from .errors import NotPositive, OracleLimitExceeded
from .program import Program, Rule, split

Interpretation = frozenset


class SemanticsKind(Enum):
    ANSWER_SET = "answer"
    SUPPORTED = "supported"


@dataclass(frozen=True)
class Caps:
    enumeration: int = 16
    minimality: int = 20

    def __post_init__(self):
        if self.enumeration <= 0 or self.minimality <= 0:
            raise ValueError("caps must be positive")


DEFAULT_CAPS = Caps()

# Class on which the dual-Horn minimality shortcut is sound: at most one
# positive body atom everywhere, so the programs handed to the dual-Horn
# satisfiability test stay dual Horn.
_DUAL_HORN_CLASS = AritySet.implicit({(INF, 1, 0), (0, 1, 0)})


def _mask(atoms: Iterable[int]) -> int:
    out = 0
    for a in atoms:
        out |= 1 << a
    return out


def _rule_masks(rules: Iterable[Rule]) -> list[tuple[int, int, int]]:
    return [(_mask(r.head), _mask(r.pos), _mask(r.neg)) for r in rules]


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    idx = 0
    while mask:
        if mask & 1:
            out.append(idx)
        mask >>= 1
        idx += 1
    return frozenset(out)


def satisfies(m: Interpretation, r: Rule) -> bool:
    """Classical satisfaction: body fails or some head atom holds."""
    body_holds = all(a in m for a in r.pos) and all(a not in m for a in r.neg)
    return not body_holds or any(a in m for a in r.head)


def satisfies_all(m: Interpretation, p: Program) -> bool:
    return all(satisfies(m, r) for r in p.rules)


def reduct(p: Program, m: Interpretation) -> Program:
    """The reduct of ``p`` by ``m``: drop rules blocked by a negative
    literal whose atom is in ``m``, then strip all negative literals."""
    kept = [
        Rule(r.head, r.pos, ())
        for r in p.rules
        if not any(c in m for c in r.neg)
    ]
    return Program(kept, p.table)


def _models_positive(masks, m_mask: int) -> bool:
    for hm, pm in masks:
        if pm & m_mask == pm and not hm & m_mask:
            return False
    return True


def _facts_only(masks) -> bool:
    # Bodyless single-atom heads: the unique minimal model is the head set.
    for hm, pm in masks:
        if pm or not hm or hm & (hm - 1):
            return False
    return True


def _no_proper_submodel(masks, m_mask: int) -> bool:
    if not m_mask:
        return True
    sub = (m_mask - 1) & m_mask
    while True:
        if _models_positive(masks, sub):
            return False
        if not sub:
            return True
        sub = (sub - 1) & m_mask


def is_minimal_model(
    p: Program,
    m: Interpretation,
    caps: Caps = DEFAULT_CAPS,
    dual_horn_shortcut: bool = True,
) -> bool:
    """Is ``m`` a model of the positive program ``p`` with no model below it?

    Minimality is checked globally over all proper subsets of ``m``. When
    ``p`` has at most one positive body atom per rule the subset check can
    instead run the polynomial dual-Horn test: ``m`` is minimal iff for
    every ``a`` in ``m`` the program ``p + {:- a} + {:- b | b in At(p)\\m}``
    has no model.
    """
    m = frozenset(m)
    if any(r.neg for r in p.rules):
        raise NotPositive("is_minimal_model requires a positive program")
    masks = [(hm, pm) for hm, pm, _ in _rule_masks(p.rules)]
    m_mask = _mask(m)
    if not _models_positive(masks, m_mask):
        return False
    if not m:
        return True
    if _facts_only(masks):
        head_union = 0
        for hm, _ in masks:
            head_union |= hm
        return m_mask == head_union
    if dual_horn_shortcut and member(p, _DUAL_HORN_CLASS):
        return _dual_horn_minimality(p, m)
    if len(m) > caps.minimality:
        raise OracleLimitExceeded(
            f"minimality check over {len(m)} atoms exceeds the cap of {caps.minimality}"
        )
    return _no_proper_submodel(masks, m_mask)


def _dual_horn_minimality(p: Program, m: frozenset) -> bool:
    # Local import: engines depend on this module for validation oracles.
    from .engines import dual_horn_has_model

    outside = sorted(p.atoms() - m)
    base = list(p.rules) + [Rule((), (b,), ()) for b in outside]
    for a in sorted(m):
        test = Program(base + [Rule((), (a,), ())], p.table)
        has_model, _ = dual_horn_has_model(test)
        if has_model:
            return False
    return True


def is_answer_set(p: Program, m: Interpretation, caps: Caps = DEFAULT_CAPS) -> bool:
    """Is ``m`` an answer set: a minimal model of the reduct of the proper
    part, while also satisfying every constraint?"""
    m = frozenset(m)
    proper, constraints = split(p)
    if not satisfies_all(m, constraints):
        return False
    return is_minimal_model(reduct(proper, m), m, caps)


def heads_applicable(p: Program, m: Interpretation) -> Program:
    """One head-only rule per proper rule of ``p`` whose body ``m`` satisfies."""
    m = frozenset(m)
    out = [
        Rule(r.head, (), ())
        for r in p.rules
        if r.head
        and all(a in m for a in r.pos)
        and all(a not in m for a in r.neg)
    ]
    return Program(out, p.table)


def _head_support_filter(p: Program, m: frozenset) -> bool:
    # Necessary condition: every atom of m heads some applicable rule and is
    # the only m-atom in that head. Used strictly as a filter.
    pending = set(m)
    for r in p.rules:
        if not pending:
            break
        if not r.head:
            continue
        if not all(a in m for a in r.pos) or any(a in m for a in r.neg):
            continue
        overlap = set(r.head) & m
        if len(overlap) == 1:
            pending.discard(next(iter(overlap)))
    return not pending


def is_supported_model(p: Program, m: Interpretation, caps: Caps = DEFAULT_CAPS) -> bool:
    """Is ``m`` a minimal model of the applicable heads and a model of the
    constraints?"""
    m = frozenset(m)
    if not _head_support_filter(p, m):
        return False
    _, constraints = split(p)
    if not satisfies_all(m, constraints):
        return False
    return is_minimal_model(heads_applicable(p, m), m, caps)


def enumerate_models(p: Program, kind: SemanticsKind, caps: Caps = DEFAULT_CAPS) -> frozenset:
    """All answer sets or supported models of ``p``, by exhausting every
    subset of At(p). The ground-truth oracle for every engine and gadget."""
    atoms = sorted(p.atoms())
    n = len(atoms)
    if n > caps.enumeration:
        raise OracleLimitExceeded(
            f"enumeration over {n} atoms exceeds the cap of {caps.enumeration}"
        )
    # Compact bit positions: bit j of a candidate stands for atoms[j].
    position = {a: j for j, a in enumerate(atoms)}
    compact = [
        (
            _mask(position[a] for a in r.head),
            _mask(position[a] for a in r.pos),
            _mask(position[a] for a in r.neg),
        )
        for r in p.rules
    ]
    if kind is SemanticsKind.ANSWER_SET:
        hits = _enumerate_answer_sets(compact, n)
    else:
        hits = _enumerate_supported(compact, n)
    out = []
    for m_mask in hits:
        out.append(frozenset(atoms[j] for j in range(n) if m_mask >> j & 1))
    return frozenset(out)


def _enumerate_answer_sets(compact, n: int) -> list[int]:
    hits = []
    for cand in range(1 << n):
        # Reduct survivors, negatives stripped.
        survivors = [(hm, pm) for hm, pm, nm in compact if not nm & cand]
        if _models_positive(survivors, cand) and _no_proper_submodel(survivors, cand):
            hits.append(cand)
    return hits


def _enumerate_supported(compact, n: int) -> list[int]:
    proper = [(hm, pm, nm, not hm & (hm - 1)) for hm, pm, nm in compact if hm]
    constraints = [(pm, nm) for hm, pm, nm in compact if not hm]
    hits = []
    for cand in range(1 << n):
        violated = False
        for pm, nm in constraints:
            if pm & cand == pm and not nm & cand:
                violated = True
                break
        if violated:
            continue
        heads = []
        heads_union = 0
        all_single = True
        for hm, pm, nm, single in proper:
            if pm & cand == pm and not nm & cand:
                heads.append((hm, 0))
                heads_union |= hm
                all_single = all_single and single
        if all_single:
            if cand == heads_union:
                hits.append(cand)
            continue
        if _models_positive(heads, cand) and _no_proper_submodel(heads, cand):
            hits.append(cand)
    return hits
