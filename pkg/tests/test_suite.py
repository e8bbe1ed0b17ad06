import numpy as np
import pytest

from infoorder import (
    BadParameter,
    Bayesian,
    LownerMinus,
    LownerPlus,
    Majorization,
    Measurement,
    Meet,
    PredicateOrder,
    Restricted,
    RestrictedParams,
    make_distribution,
)
from infoorder.suite import (
    Budget,
    SampleConfig,
    check_axioms,
    check_containment,
    check_contradiction,
    check_degeneracy,
    check_information_axioms,
    check_measurement,
    check_partial_order_axioms,
    relation_matrix,
    replay,
    sample,
    stack,
)

import oracles

ONE3 = RestrictedParams.build(3, 0.0, [1.0])
BROKEN = PredicateOrder(lambda x, y: x.max() <= y.max() + 1e-12, "max-only")


class TestSampling:
    def test_grid_counts(self):
        assert len(sample(SampleConfig.grid(3, 2))) == 6
        pts = sample(SampleConfig.grid(2, 4))
        assert sorted(p.values[0] for p in pts) == [0, 0.25, 0.5, 0.75, 1]

    def test_grid_interior_only(self):
        pts = sample(SampleConfig.grid(3, 6, include_boundary=False))
        assert len(pts) == 10 and all(p.values.min() > 0 for p in pts)

    def test_grid_matches_oracle(self):
        got = sorted(tuple(p.values.tolist()) for p in sample(SampleConfig.grid(4, 5)))
        want = sorted(tuple(float(v) for v in p) for p in oracles.grid(4, 5))
        assert got == pytest.approx(want)

    def test_random_reproducible(self):
        a = sample(SampleConfig.random(3, 2, seed=42))
        b = sample(SampleConfig.random(3, 2, seed=42))
        assert a == b

    @pytest.mark.parametrize("kw", [dict(n=0), dict(n=3, strategy="x"), dict(n=3, denominator=0),
                                    dict(n=3, strategy="random", count=0)])
    def test_bad_config(self, kw):
        with pytest.raises(BadParameter):
            SampleConfig(**kw)


GRID8 = sample(SampleConfig.grid(3, 8))


class TestPartialOrder:
    @pytest.mark.parametrize("spec", [Bayesian(), Restricted(ONE3)], ids=str)
    def test_passes(self, spec):
        rep = check_partial_order_axioms(spec, GRID8)
        assert rep.passed, rep.summary()

    def test_negative_control(self):
        rep = check_partial_order_axioms(BROKEN, GRID8)
        assert not rep["antisymmetry"].passed
        for v in rep["antisymmetry"].violations:
            assert replay(BROKEN, v)

    def test_broken_transitivity_found_and_replayed(self):
        from infoorder.orders import prefix_dominates
        spec = PredicateOrder(lambda x, y: prefix_dominates(x, y), "prefix-only")
        pool = [make_distribution(v) for v in [(0.4, 0.3, 0.3), (0.4, 0.4, 0.2), (0.4, 0.6, 0.0)]]
        rep = check_partial_order_axioms(spec, pool)
        assert rep["transitivity"].violation_count == 1
        assert replay(spec, rep["transitivity"].violations[0])

    def test_sampled_chains_on_large_pool(self):
        pool = sample(SampleConfig.random(3, 600, seed=1))
        rep = check_partial_order_axioms(Bayesian(), pool, budget=Budget(exact_triple_limit=200))
        assert rep.passed and "sampled chains" in rep["transitivity"].note


class TestInformationAxioms:
    @pytest.mark.parametrize("spec,conf", [
        (LownerPlus(), SampleConfig.grid(3, 8)),
        (LownerMinus(), SampleConfig.grid(3, 8)),
        (Bayesian(), SampleConfig.grid(2, 16)),
    ], ids=["lowner-plus", "lowner-minus", "bayesian-2"])
    def test_passes(self, spec, conf):
        rep = check_information_axioms(spec, sample(conf))
        assert rep.passed, rep.summary()

    def test_broken_order_not_permutation_invariant(self):
        first = PredicateOrder(lambda x, y: x[0] <= y[0] + 1e-12 and x.max() <= y.max() + 1e-12, "first")
        rep = check_information_axioms(first, GRID8)
        assert not rep["permutation_invariance"].passed
        assert replay(first, rep["permutation_invariance"].violations[0])


class TestDegeneracy:
    @pytest.mark.parametrize("params", [RestrictedParams.zeros(3), ONE3, RestrictedParams.build(3, 10, [10])], ids=str)
    def test_restricted_pass(self, params):
        assert check_degeneracy(Restricted(params), GRID8).passed

    @pytest.mark.parametrize("spec", [LownerPlus(), LownerMinus()], ids=str)
    def test_lowner_fail_with_replayable_witness(self, spec):
        rep = check_degeneracy(spec, GRID8)
        assert not rep.passed
        assert all(replay(spec, v) for v in rep["degeneracy"].violations)


GRID10 = sample(SampleConfig.grid(3, 10))


class TestMeasurementAndCrossOrder:
    @pytest.mark.parametrize("spec,m", [
        (LownerPlus(), Measurement.MU_PLUS),
        (LownerMinus(), Measurement.MU_MINUS),
        (Restricted(RestrictedParams.zeros(3)), Measurement.MU_MINUS),
    ], ids=["plus", "minus", "restricted"])
    def test_measurement_passes(self, spec, m):
        assert check_measurement(spec, m, GRID10).passed

    def test_wrong_measurement_fails(self):
        # the max-based measurement does not fit the min-based order
        rep = check_measurement(LownerMinus(), Measurement.MU_PLUS, GRID10)
        assert not rep.passed
        assert replay(LownerMinus(), rep["monotone"].violations[0], measurement=Measurement.MU_PLUS)

    def test_contradiction_pair(self):
        x, y = (0.6, 0.2, 0.2), (0.5, 1 / 3, 1 / 6)
        pool = [make_distribution(v) for v in (x, y, (1 / 3,) * 3, (1, 0, 0))]
        rep = check_contradiction(LownerPlus(), LownerMinus(), pool)
        vs = rep["contradiction"].violations
        assert len(vs) == 1
        assert vs[0].witness[0] == pytest.approx(list(y)) and vs[0].witness[1] == pytest.approx(list(x))
        assert replay(LownerPlus(), vs[0], other=LownerMinus())

    @pytest.mark.parametrize("a,b", [
        (Restricted(RestrictedParams.zeros(3)), LownerMinus()),
        (LownerPlus(), Restricted(RestrictedParams.zeros(3))),
    ], ids=["restricted-minus", "plus-restricted"])
    def test_no_contradiction(self, a, b):
        assert check_contradiction(a, b, GRID10).passed

    def test_containment_parameter_loosens(self):
        pool = [make_distribution(v) for v in ((0.6, 0.25, 0.15), (0.65, 0.3, 0.05))]
        rep = check_containment(Restricted(RestrictedParams.zeros(3)), Restricted(ONE3), pool)
        assert rep["b_subset_a"].stats["exceptions"] >= 1
        assert rep["a_subset_b"].passed

    def test_containment_identity_and_meet(self):
        rep = check_containment(Bayesian(), Bayesian(), GRID8)
        assert rep.passed
        meet = Meet((Bayesian(), Majorization()))
        assert check_containment(meet, Bayesian(), GRID8)["a_subset_b"].passed


class TestReports:
    def test_deterministic_json(self):
        pool = sample(SampleConfig.random(3, 300, seed=7))
        a = check_axioms(Bayesian(), pool, budget=Budget(exact_triple_limit=100, perm_limit=50))
        b = check_axioms(Bayesian(), pool, budget=Budget(exact_triple_limit=100, perm_limit=50))
        assert a.to_json() == b.to_json()
        assert "elapsed" not in a.to_json() and "elapsed" in a.to_dict(include_timing=True)

    def test_relation_matrix_paths_agree(self):
        rng = np.random.default_rng(0)
        X = rng.dirichlet(np.ones(3), size=200)
        ties = stack(GRID8)
        for spec in (Bayesian(), Majorization(), Restricted(ONE3)):
            for pool in (X, ties):
                R = relation_matrix(spec, pool, budget=Budget(block_elems=5000))
                assert (R == spec.batch(pool[:, None], pool[None])).all()
