import json
from fractions import Fraction

import pytest
from jsonschema import validate

from cheralg.scalars import BaseNumber
from cheralg.suites import (RunOptions, UnknownSuite, catalog, catalog_ids,
                            make_env, run_oracle_crosscheck, run_suite,
                            suite_names)

# The complete identity catalog, pinned.  Adding or removing a case is a
# deliberate act that must update this list.
PINNED_IDS = [
    "bwz.adjoint_even", "bwz.adjoint_odd", "bwz.generator_forms",
    "bwz.odd_self", "bwz.structure", "bwz.vector_laws",
    "centmember.D.n1", "centmember.D.n2", "centmember.D.n3",
    "centmember.D.n4", "centmember.X.n1", "centmember.X.n2",
    "centmember.X.n3", "centmember.X.n4", "centmember.angular",
    "centmember.group",
    "central.OD_one", "central.OD_three", "central.OD_two",
    "central.omega_one", "central.omega_pin", "central.omega_three",
    "central.omega_two",
    "corollary.OijOki", "corollary.OijOkl", "corollary.OijOkl_half",
    "corollary.OijOklmn", "corollary.OjkOjkl", "corollary.OjkOjklm",
    "corollary.OjkOjlm", "corollary.OjkOjlmn", "corollary.OjkOlmn",
    "corollary.OjklOjkm", "corollary.e24", "corollary.e25",
    "corollary.e26", "corollary.e27",
    "gensym.lower_sum", "gensym.lower_x1", "gensym.lower_x2",
    "gensym.qminus_def", "gensym.qplus_one", "gensym.raise_x1",
    "health.assoc", "health.idempotent", "health.jacobi",
    "health.roundtrip", "health.skew", "health.substitution",
    "hk.angular_forms", "hk.deformed_form", "hk.double_bracket",
    "hk.symmetric_bracket",
    "osp12re.EpEm", "osp12re.FpFm", "osp12re.FpmEmp", "osp12re.FpmFpm",
    "osp12re.HEpm", "osp12re.HFpm",
    "p_O2O34.n3", "p_O2O34.n4",
    "p_O3O3",
    "p_OA2.n1", "p_OA2.n2", "p_OA2.n3", "p_OA2.n4",
    "p_OabOuv.form1", "p_OabOuv.form2",
    "p_OujOun.case3", "p_OujOun.case4", "p_OujOun.n2", "p_OujOun.n3",
    "p_OujOun.n4", "p_OujOun.n5", "p_OujOun.two.n3", "p_OujOun.two.n4",
    "p_OujOun.two.n5",
    "p_bbH",
    "pin.chirality", "pin.commutator_form", "pin.cross_anticomm",
    "pin.group_action", "pin.invariant_pairs", "pin.reflection_sum",
    "pin.rho_conj", "pin.rho_involution", "pin.slide_one.n2",
    "pin.slide_one.n3", "pin.slide_one.n4", "pin.slide_two.n3",
    "pin.slide_two.n4",
    "projector.additivity", "projector.angular", "projector.cliffpair",
    "projector.fixes_central", "projector.gammav", "projector.membership",
    "projector.mult_central", "projector.pm_agree", "projector.reflection",
    "projector.sandwich", "projector.series",
    "recursion.closed_n4", "recursion.closed_n5", "recursion.three_n3",
    "recursion.three_n4",
    "routes.n1", "routes.n2", "routes.n3", "routes.n4", "routes.nonorth2",
    "routes.nonorth3", "routes.pm", "routes.triple",
    "scasimir.casimir_central", "scasimir.parity", "scasimir.projected",
    "scasimir.square",
]


def test_catalog_is_pinned():
    assert sorted(catalog_ids()) == PINNED_IDS
    assert len(set(catalog_ids())) == len(catalog_ids())


def test_every_case_has_anchor_and_dim():
    for case in catalog():
        assert case.anchor and case.min_dim >= 1


def test_suite_names_cover_prefixes():
    names = suite_names()
    assert "oracle" in names
    prefixes = {cid.split(".")[0] for cid in catalog_ids()}
    assert prefixes <= set(names)


def test_unknown_suite():
    env = make_env("A1@2")
    with pytest.raises(UnknownSuite):
        run_suite(env, "no_such_suite")


def test_selection_by_case_id(env_a12):
    reps = run_suite(env_a12, "osp12re.FpFm")
    assert [r.id for r in reps] == ["osp12re.FpFm"]
    assert reps[0].status == "pass"


def test_osp12re_has_six_passes(env_a12):
    reps = run_suite(env_a12, "osp12re")
    assert len(reps) == 6
    assert all(r.status == "pass" for r in reps)


def test_skip_semantics(env_a12):
    reps = run_suite(env_a12, "p_O3O3")
    assert len(reps) == 1
    assert reps[0].status == "skipped"
    assert "dimension" in reps[0].reason


def test_reports_sorted_and_deterministic(env_a12):
    opts = RunOptions(seed=5, jobs=1)
    r1 = run_suite(env_a12, "hk", options=opts)
    r2 = run_suite(env_a12, "hk", options=opts)
    assert [r.id for r in r1] == sorted(r.id for r in r1)

    def strip_ms(reports):
        out = []
        for r in reports:
            d = json.loads(r.to_json())
            d["ms"] = 0
            out.append(json.dumps(d, sort_keys=True))
        return out

    assert strip_ms(r1) == strip_ms(r2)


def test_parallel_execution_matches_serial(env_a12):
    r1 = run_suite(env_a12, "scasimir", options=RunOptions(jobs=1))
    r4 = run_suite(env_a12, "scasimir", options=RunOptions(jobs=4))

    def key(reports):
        return [(r.id, r.status, r.residual_terms) for r in reports]

    assert key(r1) == key(r4)


def test_numeric_kappa_run(env_b22):
    vals = [BaseNumber(1), BaseNumber(Fraction(-1, 2))]
    reps = run_suite(env_b22, "p_OA2", kappa_values=vals)
    assert all(r.status in ("pass", "skipped") for r in reps)
    assert all(r.kappa == "1,-1/2" for r in reps)
    with pytest.raises(ValueError):
        run_suite(env_b22, "p_OA2", kappa_values=[BaseNumber(1)])


def test_report_schema(env_a12):
    import importlib.resources as resources
    schema = json.loads(
        resources.files("cheralg").joinpath("report_schema.json").read_text())
    reps = run_suite(env_a12, "gensym")
    reps += run_oracle_crosscheck(env_a12, samples=2, product_checks=2)
    for r in reps:
        validate(json.loads(r.to_json()), schema)


def test_oracle_crosscheck_and_mutation(env_a12):
    reps = run_oracle_crosscheck(env_a12, samples=5, product_checks=10)
    by_id = {r.id: r for r in reps}
    assert by_id["oracle.mutation"].status == "pass"   # perturbation caught
    assert by_id["oracle.products"].status == "pass"
    fails = [r for r in reps if r.status == "fail"]
    assert not fails
    assert all(r.oracle for r in reps)


def test_health_suite(env_a12):
    reps = run_suite(env_a12, "health",
                     options=RunOptions(seed=1, assoc_trials=10,
                                        jacobi_trials=6,
                                        roundtrip_trials=6))
    assert all(r.status == "pass" for r in reps)
