import pytest
from hypothesis import given, settings, strategies as st

from arityasp import (
    INF,
    Arity,
    AritySet,
    ArityFormatError,
    InvalidAritySet,
    Schema,
    SchemaError,
    dump_arity_set,
    load_arity_set,
    member,
    normalize,
    preceq,
    preceq_set,
    profile,
    random_program,
)

from conftest import prog

ext = st.sampled_from([0, 1, 2, 3, INF])
arities = st.builds(Arity, ext, ext, ext)
arity_sets = st.builds(AritySet.implicit, st.frozensets(arities, min_size=1, max_size=4))


class TestPreceq:
    def test_componentwise_with_infinities(self):
        assert preceq(Arity(1, INF, 1), Arity(INF, INF, 1))

    def test_zero_head_condition(self):
        assert not preceq(Arity(0, 1, 0), Arity(1, 1, 0))

    def test_constraint_to_constraint(self):
        assert preceq(Arity(0, 1, 0), Arity(0, INF, 0))

    @given(arities)
    def test_reflexive(self, a):
        assert preceq(a, a)

    @given(arities, arities)
    def test_antisymmetric(self, a, b):
        if preceq(a, b) and preceq(b, a):
            assert a == b

    @given(arities, arities, arities)
    def test_transitive(self, a, b, c):
        if preceq(a, b) and preceq(b, c):
            assert preceq(a, c)


class TestPreceqSet:
    def test_example_pair(self):
        d = AritySet.implicit({(1, INF, 1), (INF, 0, 0)})
        t = AritySet.implicit({(INF, INF, 1)})
        assert preceq_set(d, t)

    def test_empty_below_anything(self):
        assert preceq_set(AritySet.implicit(set()), AritySet.implicit({(0, 0, 0)}))

    def test_two_zero_zero_not_below_normal(self):
        d = AritySet.implicit({(2, 0, 0)})
        t = AritySet.implicit({(1, INF, INF), (0, INF, INF)})
        assert not preceq_set(d, t)


class TestMember:
    def test_implicit_domination(self):
        p = prog("a :- b, not c.")
        assert member(p, AritySet.implicit({(1, INF, INF), (0, INF, INF)}))

    def test_explicit_literal_membership(self):
        p = prog("a :- b, not c.")
        assert not member(p, AritySet.explicit({(1, 2, 1)}))
        assert member(p, AritySet.explicit({(1, 1, 1)}))

    def test_dual_horn_program(self):
        p = prog("a | b.\n:- a.")
        assert member(p, AritySet.implicit({(INF, 1, 0), (0, 1, 0)}))

    def test_explicit_implies_implicit(self):
        d_elems = {(1, 1, 1), (2, 0, 0), (0, 1, 0)}
        explicit = AritySet.explicit(d_elems)
        implicit = AritySet.implicit(d_elems)
        for seed in range(30):
            p = random_program(explicit, 4, 5, seed)
            assert member(p, explicit)
            assert member(p, implicit)

    @given(arity_sets, arity_sets, st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_monotone_in_the_set_order(self, d, t, seed):
        if not preceq_set(d, t):
            return
        p = random_program(d, 4, 5, seed)
        assert member(p, d)
        assert member(p, t)


class TestNormalize:
    def test_drops_dominated_elements(self):
        d = AritySet.implicit({(1, 2, 0), (1, INF, 0), (0, 1, 0)})
        assert normalize(d).arities == frozenset({Arity(1, INF, 0), Arity(0, 1, 0)})

    def test_antichain_is_fixpoint(self):
        d = AritySet.implicit({(1, INF, 0), (0, 1, 0)})
        assert normalize(d).arities == d.arities

    def test_zero_head_domination(self):
        d = AritySet.implicit({(0, 0, 0), (0, INF, INF)})
        assert normalize(d).arities == frozenset({Arity(0, INF, INF)})

    def test_rejects_explicit(self):
        with pytest.raises(SchemaError):
            normalize(AritySet.explicit({(1, 1, 0)}))

    @given(arity_sets)
    def test_result_is_antichain(self, d):
        result = normalize(d)
        for a in result:
            for b in result:
                assert a == b or not preceq(a, b)

    @given(arity_sets, st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_membership_equivalent(self, d, seed):
        reduced = normalize(d)
        p = random_program(d, 4, 6, seed)
        assert member(p, d) == member(p, reduced)
        q = random_program(AritySet.implicit({(3, 3, 3), (0, 3, 3)}), 4, 6, seed)
        assert member(q, d) == member(q, reduced)


class TestProfile:
    def test_profile_collects_rule_arities(self):
        p = prog("a | b :- c.\n:- d.\n:- e.")
        assert profile(p).arities == frozenset({Arity(2, 1, 0), Arity(0, 1, 0)})
        assert member(p, profile(p))


class TestArityFiles:
    def test_round_trip(self):
        d = AritySet.implicit({(1, INF, 0), (0, 1, 0)})
        assert load_arity_set(dump_arity_set(d)) == d

    def test_inf_serialized_as_string(self):
        d = AritySet.implicit({(1, INF, 0)})
        assert '"inf"' in dump_arity_set(d)

    def test_explicit_rejects_inf(self):
        with pytest.raises(ArityFormatError):
            load_arity_set('{"schema": "explicit", "arities": [[1, "inf", 0]]}')

    def test_explicit_set_rejects_superarity_at_construction(self):
        with pytest.raises(InvalidAritySet):
            AritySet.explicit({(1, INF, 0)})

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"arities": [[1, 0, 0]]}',
            '{"schema": "implicit"}',
            '{"schema": "bad", "arities": []}',
            '{"schema": "implicit", "arities": [[1, 0]]}',
            '{"schema": "implicit", "arities": [[1, 0, -1]]}',
            '{"schema": "implicit", "arities": [[1, 0, 1.5]]}',
        ],
    )
    def test_malformed_files(self, text):
        with pytest.raises(ArityFormatError):
            load_arity_set(text)

    def test_schema_preserved(self):
        text = '{"schema": "explicit", "arities": [[2, 0, 0], [1, 1, 0]]}'
        d = load_arity_set(text)
        assert d.schema is Schema.EXPLICIT
        assert load_arity_set(dump_arity_set(d)) == d
