import pytest
from hypothesis import given, settings, strategies as st

from elemsets.elementary import is_elementary_fast, is_head_cycle_free
from elemsets.errors import GenerationExhausted, UniverseTooLarge
from elemsets.oracle import (
    PROPERTIES, GenParams, gen_random_program, oracle_elementary_sets, oracle_minimal_unfounded,
    run_equivalence_suite,
)
from elemsets.program import Mode, Program, classify, rule

from helpers import S, params


def test_generator_is_deterministic():
    for mode in ("nondisjunctive", "disjunctive", "hcf_only"):
        assert gen_random_program(params(mode, 1)) == gen_random_program(params(mode, 1))


@given(st.integers(0, 2**63 - 1))
def test_generator_modes(seed):
    assert classify(gen_random_program(params("nondisjunctive", seed))) is Mode.NONDISJUNCTIVE
    assert is_head_cycle_free(gen_random_program(params("hcf_only", seed)))


@given(st.integers(0, 2**32 - 1))
def test_generator_respects_bounds(seed):
    p = gen_random_program(params("disjunctive", seed, atoms=4, rules=7))
    assert len(p) <= 7 and p.atoms <= set("abcd")
    assert all(len(r.head) <= 2 and len(r.pos_body) <= 2 and len(r.neg_body) <= 1 for r in p.rules)


def test_generator_produces_cycles():
    # roughly half the draws plant a positive cycle
    from elemsets.depgraph import dependency_graph, sccs

    cyclic = sum(
        any(len(c) > 1 for c in sccs(dependency_graph(gen_random_program(params("nondisjunctive", s)))))
        for s in range(200)
    )
    assert cyclic >= 80


def test_invalid_params():
    with pytest.raises(ValueError):
        GenParams(atom_count=9)
    with pytest.raises(ValueError):
        GenParams(rule_count=17)
    with pytest.raises(ValueError):
        GenParams(mode="other")


def test_hcf_generation_can_exhaust(monkeypatch):
    import elemsets.oracle as oracle

    monkeypatch.setattr(oracle, "is_head_cycle_free", lambda p: False)
    with pytest.raises(GenerationExhausted):
        gen_random_program(params("hcf_only", 0))


def test_oracle_examples(pi1, program6):
    assert oracle_minimal_unfounded(pi1, S("p", "q", "r")) == [S("s"), S("q", "r")]
    assert oracle_minimal_unfounded(Program(), S()) == []
    assert oracle_minimal_unfounded(program6, S("p", "q", "r")) == [S("p"), S("q"), S("r")]
    assert oracle_elementary_sets(pi1) == [S("p"), S("q"), S("r"), S("s"), S("p", "r"), S("q", "r")]


def test_oracle_bound():
    wide = Program(tuple(rule([f"a{i}"]) for i in range(13)))
    with pytest.raises(UniverseTooLarge):
        oracle_minimal_unfounded(wide, S())


def test_zero_trials_is_an_empty_pass():
    report = run_equivalence_suite(GenParams(), 0)
    assert report.passed and report.programs == 0
    assert all(t.checked == 0 for t in report.properties.values())
    assert report.counterexample is None


def test_fixtures_pass():
    report = run_equivalence_suite(GenParams(seed=12345), 0, include_fixtures=True)
    assert report.programs == 6 and report.passed
    assert report.properties["gs_vs_elementary"].checked > 0


def test_suite_is_deterministic_and_not_vacuous():
    p = GenParams(atom_count=5, rule_count=10, mode="disjunctive", allow_double_negation=True, seed=7)
    a, b = run_equivalence_suite(p, 15), run_equivalence_suite(p, 15)
    assert a.to_dict() == b.to_dict()
    assert a.passed
    for name in PROPERTIES:
        if name != "gs_vs_elementary":
            assert a.properties[name].checked > 0, name


def test_broken_comparator_is_caught():
    report = run_equivalence_suite(
        GenParams(seed=3), 10, include_fixtures=True,
        fast_decider=lambda program, y: not is_elementary_fast(program, y),
    )
    assert not report.passed
    c = report.counterexample
    assert c.property == "fast_vs_bruteforce"
    assert c.program and "fast=" in c.detail
    assert report.to_dict()["counterexample"]["property"] == "fast_vs_bruteforce"


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["nondisjunctive", "disjunctive", "hcf_only"]))
def test_suite_passes_on_random_seeds(seed, mode):
    assert run_equivalence_suite(params(mode, seed, atoms=5, rules=8), 3).passed
