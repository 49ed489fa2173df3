import random

import pytest

from arityasp import (
    INF,
    AritySet,
    Engine,
    EngineMismatch,
    dual_horn_has_model,
    eas_poly,
    espm_poly,
    horn_greatest_supported,
    horn_least_model,
    is_answer_set,
    is_supported_model,
    random_program,
    satisfies_all,
    serialize_program,
    split,
    supp_skeptical_poly,
    supported_rewrite,
    two_sat_has_model,
)

from conftest import interp, names_of, oracle_answer_sets, oracle_supported, prog, seeded_programs

ENGINE_PROFILES = {
    Engine.EAS_POSITIVE_PROPER: AritySet.implicit({(3, 3, 0), (0, 0, 0)}),
    Engine.EAS_HORN: AritySet.implicit({(1, 3, 0), (0, 2, 2)}),
    Engine.EAS_DUALHORN: AritySet.implicit({(3, 1, 0), (0, 1, 0)}),
    Engine.EAS_2LIT: AritySet.implicit({(2, 0, 0), (1, 1, 0), (0, 2, 0)}),
    Engine.EAS_EMPTY_CHECK: AritySet.explicit(
        {(1, 1, 0), (2, 1, 1), (1, 2, 1), (0, 1, 1), (0, 2, 0), (0, 0, 2)}
    ),
    Engine.SUPP_FACTS: AritySet.implicit({(1, 0, 0), (0, 2, 2)}),
    Engine.SUPP_HORN_GFP: AritySet.implicit({(1, 3, 0), (0, 0, 2)}),
    Engine.SUPP_REWRITE: AritySet.implicit({(1, 1, 0), (0, 1, 2)}),
    Engine.SUPP_SKEP_CYCLE: AritySet.implicit({(1, 1, 0), (0, 3, 0)}),
}

MODEL_EXISTS_PROFILES = (
    AritySet.implicit({(3, 3, 0), (0, 0, 0)}),
    AritySet.implicit({(3, 1, 0), (0, 1, 0)}),
    AritySet.implicit({(1, 3, 0), (0, 3, 0)}),
    AritySet.implicit({(2, 0, 0), (1, 1, 0), (0, 2, 0)}),
)


class TestHornLeastModel:
    def test_fixpoint(self):
        p = prog("a.\nb :- a.\nc :- d.")
        assert names_of(p, horn_least_model(p)) == {"a", "b"}

    def test_empty_program(self):
        assert horn_least_model(prog("")) == frozenset()

    def test_no_facts(self):
        p = prog("a :- a.")
        assert horn_least_model(p) == frozenset()

    def test_mismatch_on_disjunction(self):
        with pytest.raises(EngineMismatch):
            horn_least_model(prog("a | b."))

    def test_least_model_is_least(self):
        for p in seeded_programs(ENGINE_PROFILES[Engine.EAS_HORN], 80, seed=21, atoms=(3, 6)):
            proper, _ = split(p)
            least = horn_least_model(p)
            assert satisfies_all(least, proper)
            models = [
                m for m in oracle_answer_sets(proper)
            ]  # proper Horn: unique answer set equals the least model
            assert models == [least]


class TestDualHorn:
    def test_greatest_model_after_forcing(self):
        p = prog("a | b.\n:- a.")
        assert dual_horn_has_model(p) == (True, interp(p, "b"))

    def test_direct_contradiction(self):
        p = prog("a.\n:- a.")
        assert dual_horn_has_model(p) == (False, None)

    def test_empty_program(self):
        assert dual_horn_has_model(prog("")) == (True, frozenset())

    def test_mismatch_on_wide_body(self):
        with pytest.raises(EngineMismatch):
            dual_horn_has_model(prog(":- a, b."))

    def test_greatest_model_property(self):
        for p in seeded_programs(ENGINE_PROFILES[Engine.EAS_DUALHORN], 80, seed=22, atoms=(3, 6)):
            has_model, greatest = dual_horn_has_model(p)
            atoms = sorted(p.atoms())
            models = []
            for bits in range(1 << len(atoms)):
                m = frozenset(a for i, a in enumerate(atoms) if bits >> i & 1)
                if satisfies_all(m, p):
                    models.append(m)
            assert has_model == bool(models)
            if has_model:
                assert satisfies_all(greatest, p)
                for m in models:
                    assert m <= greatest


class TestTwoSat:
    def test_exclusive_disjunction(self):
        p = prog("a | b.\n:- a, b.")
        sat, model = two_sat_has_model(p)
        assert sat and satisfies_all(model, p) and len(model) == 1

    def test_unsat(self):
        p = prog("a.\nb.\n:- a, b.")
        assert two_sat_has_model(p) == (False, None)

    def test_implication_only(self):
        p = prog("a :- b.")
        sat, model = two_sat_has_model(p)
        assert sat and satisfies_all(model, p)

    def test_mismatch(self):
        with pytest.raises(EngineMismatch):
            two_sat_has_model(prog("a | b :- c."))

    def test_agreement_with_truth_table(self):
        for p in seeded_programs(ENGINE_PROFILES[Engine.EAS_2LIT], 150, seed=23, atoms=(3, 6)):
            sat, model = two_sat_has_model(p)
            atoms = sorted(p.atoms())
            brute = any(
                satisfies_all(frozenset(a for i, a in enumerate(atoms) if bits >> i & 1), p)
                for bits in range(1 << len(atoms))
            )
            assert sat == brute, serialize_program(p)
            if sat:
                assert satisfies_all(model, p)


class TestEasPoly:
    def test_positive_proper(self):
        assert eas_poly(prog("a | b :- c."), Engine.EAS_POSITIVE_PROPER)[0] is True

    def test_positive_proper_contradiction(self):
        assert eas_poly(prog("a | b.\n:- ."), Engine.EAS_POSITIVE_PROPER) == (False, None)

    def test_horn_violating_constraint(self):
        assert eas_poly(prog("a.\n:- a."), Engine.EAS_HORN) == (False, None)

    def test_two_lit(self):
        answer, witness = eas_poly(prog("a | b.\n:- a, b."), Engine.EAS_2LIT)
        assert answer is True
        p = prog("a | b.\n:- a, b.")
        assert is_answer_set(p, witness)

    def test_empty_check(self):
        assert eas_poly(prog("a :- b.\n:- not c."), Engine.EAS_EMPTY_CHECK)[0] is False
        assert eas_poly(prog("a :- b.\n:- b."), Engine.EAS_EMPTY_CHECK) == (True, frozenset())

    def test_empty_check_mismatch(self):
        with pytest.raises(EngineMismatch):
            eas_poly(prog("a."), Engine.EAS_EMPTY_CHECK)


class TestSupportedRewrite:
    def test_chain_with_negated_constraint(self):
        p = prog("a :- b.\nb :- a.\n:- a, not c.")
        residue = supported_rewrite(p)
        assert all(not r.head for r in residue.rules)
        answer, witness = espm_poly(p, Engine.SUPP_REWRITE)
        assert answer is True and witness == frozenset()
        assert frozenset() in oracle_supported(p)

    def test_contradictory_rule_survives(self):
        p = prog("a :- b.\n:- .")
        residue = supported_rewrite(p)
        assert any(r.is_contradictory for r in residue.rules)
        assert espm_poly(p, Engine.SUPP_REWRITE) == (False, None)

    def test_single_fact(self):
        p = prog("a.")
        assert supported_rewrite(p).rules == ()
        answer, witness = espm_poly(p, Engine.SUPP_REWRITE)
        assert answer is True and names_of(p, witness) == {"a"}

    def test_preserves_existence_on_random_programs(self):
        for p in seeded_programs(ENGINE_PROFILES[Engine.SUPP_REWRITE], 150, seed=24, atoms=(3, 6)):
            residue = supported_rewrite(p)
            assert bool(oracle_supported(p)) == bool(oracle_supported(residue)), serialize_program(p)


class TestHornGreatestSupported:
    def test_loop_plus_fact(self):
        p = prog("a :- b.\nb :- a.\nc.")
        assert names_of(p, horn_greatest_supported(p)) == {"a", "b", "c"}

    def test_single_fact(self):
        p = prog("a.")
        assert names_of(p, horn_greatest_supported(p)) == {"a"}

    def test_unreachable_body(self):
        p = prog("a :- b.")
        assert horn_greatest_supported(p) == frozenset()

    def test_greatest_among_supported(self):
        profile = AritySet.implicit({(1, 3, 0)})
        for p in seeded_programs(profile, 80, seed=25, atoms=(3, 6)):
            greatest = horn_greatest_supported(p)
            supported = oracle_supported(p)
            assert greatest in supported
            for m in supported:
                assert m <= greatest


class TestEspmPoly:
    def test_facts_engine(self):
        assert espm_poly(prog("a.\n:- a."), Engine.SUPP_FACTS) == (False, None)

    def test_horn_gfp_with_negative_constraint(self):
        p = prog("a :- b.\nb :- a.\n:- not a.")
        answer, witness = espm_poly(p, Engine.SUPP_HORN_GFP)
        assert answer is True and names_of(p, witness) == {"a", "b"}
        assert is_supported_model(p, witness)

    def test_model_exists_two_lit(self):
        p = prog("a | b.\n:- a, b.")
        answer, witness = espm_poly(p, Engine.SUPP_MODEL_EXISTS)
        assert answer is True
        assert is_supported_model(p, witness)


class TestSuppSkepticalPoly:
    def test_cycle_atom_is_supported(self):
        p = prog("a :- b.\nb :- a.")
        assert supp_skeptical_poly(p, p.table.intern("a")) is False

    def test_acyclic_atom_never_supported(self):
        p = prog("a :- b.")
        assert supp_skeptical_poly(p, p.table.intern("a")) is True

    def test_absent_atom(self):
        p = prog("c.")
        assert supp_skeptical_poly(p, p.table.intern("a")) is True

    def test_mismatch(self):
        with pytest.raises(EngineMismatch):
            supp_skeptical_poly(prog("a | b."), 0)


def _oracle_eas(p) -> bool:
    return bool(oracle_answer_sets(p))


def _oracle_espm(p) -> bool:
    return bool(oracle_supported(p))


class TestEngineOracleAgreement:
    """Smaller seeded sweeps; the full 500-instance runs live in the
    acceptance suite."""

    @pytest.mark.parametrize(
        "engine",
        [
            Engine.EAS_POSITIVE_PROPER,
            Engine.EAS_HORN,
            Engine.EAS_DUALHORN,
            Engine.EAS_2LIT,
            Engine.EAS_EMPTY_CHECK,
        ],
    )
    def test_eas_engines(self, engine):
        seed = 100 + sorted(ENGINE_PROFILES).index(engine)
        for p in seeded_programs(ENGINE_PROFILES[engine], 120, seed=seed, atoms=(3, 6)):
            answer, witness = eas_poly(p, engine)
            assert answer == _oracle_eas(p), serialize_program(p)
            if witness is not None and answer:
                assert is_answer_set(p, witness), serialize_program(p)

    @pytest.mark.parametrize(
        "engine",
        [Engine.SUPP_FACTS, Engine.SUPP_HORN_GFP, Engine.SUPP_REWRITE],
    )
    def test_espm_engines(self, engine):
        seed = 200 + sorted(ENGINE_PROFILES).index(engine)
        for p in seeded_programs(ENGINE_PROFILES[engine], 120, seed=seed, atoms=(3, 6)):
            answer, witness = espm_poly(p, engine)
            assert answer == _oracle_espm(p), serialize_program(p)
            if witness is not None and answer:
                assert is_supported_model(p, witness), serialize_program(p)

    def test_model_exists_engine(self):
        for i, profile in enumerate(MODEL_EXISTS_PROFILES):
            for p in seeded_programs(profile, 60, seed=31 + i, atoms=(3, 6)):
                answer, witness = espm_poly(p, Engine.SUPP_MODEL_EXISTS)
                assert answer == _oracle_espm(p), serialize_program(p)
                if witness is not None and answer:
                    assert is_supported_model(p, witness), serialize_program(p)

    def test_skeptical_cycle_engine(self):
        rng = random.Random(77)
        for p in seeded_programs(ENGINE_PROFILES[Engine.SUPP_SKEP_CYCLE], 150, seed=32, atoms=(3, 6)):
            atom = p.table.intern(f"x{rng.randrange(7)}")
            expected = all(atom not in m for m in oracle_supported(p))
            assert supp_skeptical_poly(p, atom) == expected, serialize_program(p)
