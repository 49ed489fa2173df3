import pytest
from hypothesis import given, strategies as st

from arityasp import (
    Arity,
    AtomTable,
    ParseError,
    Rule,
    arity_of_rule,
    parse_program,
    serialize_program,
    split,
)

from conftest import prog


def rule_names(p, r):
    name = p.table.name
    return (
        [name(a) for a in r.head],
        [name(a) for a in r.pos],
        [name(a) for a in r.neg],
    )


class TestParse:
    def test_basic_rule(self):
        p = prog("a | b :- c, not d.")
        assert rule_names(p, p.rules[0]) == (["a", "b"], ["c"], ["d"])

    def test_contradictory_rule(self):
        p = prog(":- .")
        (r,) = p.rules
        assert r.is_contradictory
        assert r.is_constraint

    def test_duplicate_head_occurrences_preserved(self):
        p = prog("a | a :- not b.")
        assert rule_names(p, p.rules[0]) == (["a", "a"], [], ["b"])
        assert len(p.rules[0].head) == 2

    def test_fact_and_constraint(self):
        p = prog("a.\n:- b, not c.")
        assert rule_names(p, p.rules[0]) == (["a"], [], [])
        assert rule_names(p, p.rules[1]) == ([], ["b"], ["c"])

    def test_comments_and_whitespace(self):
        p = prog("% leading comment\n  a  :-  b .  % trailing\n\n\nc.")
        assert len(p.rules) == 2

    def test_empty_program(self):
        assert parse_program("").rules == ()

    def test_atom_ids_first_occurrence_order(self):
        p = prog("b :- a.\nc.")
        assert [p.table.name(i) for i in range(3)] == ["b", "a", "c"]

    def test_uppercase_rejected_with_position(self):
        with pytest.raises(ParseError) as err:
            parse_program("a :- b.\nx | Bad.")
        assert err.value.line == 2
        assert err.value.column == 5

    def test_missing_dot(self):
        with pytest.raises(ParseError):
            parse_program("a :- b")

    def test_not_is_reserved(self):
        with pytest.raises(ParseError):
            parse_program("a :- not not.")

    def test_plain_underscore_rejected(self):
        with pytest.raises(ParseError):
            parse_program("_x.")

    def test_reserved_gadget_prefix_accepted(self):
        p = prog("_ga | _ga :- not _gap.")
        assert rule_names(p, p.rules[0]) == (["_ga", "_ga"], [], ["_gap"])

    def test_garbage_position(self):
        with pytest.raises(ParseError) as err:
            parse_program("a :- b; c.")
        assert (err.value.line, err.value.column) == (1, 7)


class TestSerialize:
    @pytest.mark.parametrize(
        "text",
        [
            "a.",
            ":- .",
            ":- b, not c.",
            "a | b :- c, not d.",
            "a | a :- not b.",
            "a | b.",
        ],
    )
    def test_canonical_strings(self, text):
        assert serialize_program(prog(text)) == text

    def test_round_trip_structural_identity(self, table_program):
        text = serialize_program(table_program)
        assert parse_program(text) == table_program


def atoms_strategy():
    return st.sampled_from(["a", "b", "c", "d", "e"])


def rules_strategy():
    seq = st.lists(atoms_strategy(), min_size=0, max_size=3)
    return st.tuples(seq, seq, seq)


@given(st.lists(rules_strategy(), max_size=8))
def test_round_trip_random_programs(rule_specs):
    table = AtomTable()
    rules = [
        Rule(
            tuple(table.intern(a) for a in head),
            tuple(table.intern(a) for a in pos),
            tuple(table.intern(a) for a in neg),
        )
        for head, pos, neg in rule_specs
    ]
    from arityasp import Program

    p = Program(rules, table)
    assert parse_program(serialize_program(p)) == p


class TestArityOfRule:
    def test_counts(self):
        p = prog("a | b :- c, not d.")
        assert arity_of_rule(p.rules[0]) == Arity(2, 1, 1)

    def test_contradictory(self):
        p = prog(":- .")
        assert arity_of_rule(p.rules[0]) == Arity(0, 0, 0)

    def test_occurrences_not_distinct_atoms(self):
        p = prog("a | a :- not b.")
        assert arity_of_rule(p.rules[0]) == Arity(2, 0, 1)


class TestSplit:
    def test_split_parts(self):
        p = prog("a :- b.\n:- c.")
        proper, constraints = split(p)
        assert len(proper.rules) == 1 and len(constraints.rules) == 1
        assert proper.rules[0].head and constraints.rules[0].is_constraint

    def test_all_proper(self):
        p = prog("a.\nb :- a.")
        proper, constraints = split(p)
        assert proper == p
        assert constraints.rules == ()

    def test_contradictory_is_constraint(self):
        p = prog(":- .")
        proper, constraints = split(p)
        assert proper.rules == ()
        assert len(constraints.rules) == 1


@given(st.lists(rules_strategy(), max_size=10))
def test_split_is_partition(rule_specs):
    table = AtomTable()
    from arityasp import Program

    rules = [
        Rule(
            tuple(table.intern(a) for a in head),
            tuple(table.intern(a) for a in pos),
            tuple(table.intern(a) for a in neg),
        )
        for head, pos, neg in rule_specs
    ]
    p = Program(rules, table)
    proper, constraints = split(p)
    assert len(proper.rules) + len(constraints.rules) == len(p.rules)
    for r in p.rules:
        assert (arity_of_rule(r).k == 0) == r.is_constraint


class TestAtomTable:
    def test_interning_bijective(self):
        t = AtomTable()
        a = t.intern("a")
        assert t.intern("a") == a
        assert t.name(a) == "a"
        assert t.lookup("missing") is None

    def test_fresh_uses_reserved_prefix_and_avoids_collisions(self):
        t = AtomTable(["x"])
        first = t.fresh("a")
        assert t.name(first) == "_ga"
        second = t.fresh("a")
        assert t.name(second) == "_ga2"

    def test_copy_is_independent(self):
        t = AtomTable(["x"])
        c = t.copy()
        c.intern("y")
        assert "y" not in t
