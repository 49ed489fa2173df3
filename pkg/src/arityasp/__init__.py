"""Arity-profile complexity classification and reasoning engines for
propositional disjunctive logic programs."""

from .arity import (
    INF,
    Arity,
    AritySet,
    Schema,
    arity_of_rule,
    dump_arity_set,
    format_arity,
    load_arity_set,
    member,
    normalize,
    preceq,
    preceq_set,
    profile,
)
from .classifier import ComplexityVerdict, Label, TaskKind, classify, condition_table
from .cnf import CnfFormula, Lit, models_cnf, parse_cnf, satisfiable, serialize_cnf
from .engines import (
    Engine,
    dual_horn_has_model,
    eas_poly,
    espm_poly,
    horn_greatest_supported,
    horn_least_model,
    supp_skeptical_poly,
    supported_rewrite,
    two_sat_has_model,
)
from .errors import (
    ArityAspError,
    ArityFormatError,
    AtomNotFresh,
    EngineMismatch,
    InvalidAritySet,
    NotPositive,
    OracleLimitExceeded,
    ParseError,
    PreconditionError,
    SchemaError,
    ShapeError,
)
from .gadgets import (
    chain_replace,
    fold_constraints,
    gadget_eas_R,
    gadget_sat_shape,
    gadget_supported,
    pad_to_explicit,
)
from .generate import expand_profile, random_program
from .parser import parse_program, serialize_program, serialize_rule
from .program import AtomTable, Program, Rule, extend, split
from .search import Decision, Task, decide, lex_subsets, solve_np, solve_sigma2
from .semantics import (
    Caps,
    DEFAULT_CAPS,
    SemanticsKind,
    enumerate_models,
    heads_applicable,
    is_answer_set,
    is_minimal_model,
    is_supported_model,
    reduct,
    satisfies,
    satisfies_all,
)

__version__ = "0.1.0"
