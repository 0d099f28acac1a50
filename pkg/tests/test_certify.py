import numpy as np
import pytest

from mosk import certify, core, gallery
from mosk.certify import CONSISTENT, REFUTED, SamplerConfig
from mosk.combine import negate
from mosk.core import NonexpansiveMap
from mosk.exceptions import DomainError


def cfg1(n=50_000, seed=101, width=50.0):
    return SamplerConfig.symmetric(seed=seed, sample_count=n, dim=1, half_width=width)


def cfg2(n=50_000, seed=102, width=20.0):
    return SamplerConfig.symmetric(seed=seed, sample_count=n, dim=2, half_width=width)


HALF = NonexpansiveMap(1, lambda x: 0.5 * np.asarray(x, float), "half")
NEG = NonexpansiveMap(1, lambda x: -np.asarray(x, float), "neg")
DOUBLE = NonexpansiveMap(1, lambda x: 2.0 * np.asarray(x, float), "double")
IDENT = NonexpansiveMap(1, lambda x: np.asarray(x, float), "ident")


def test_sampler_config_validation():
    with pytest.raises(DomainError):
        SamplerConfig(seed=0, sample_count=0, box_low=[-1.0], box_high=[1.0])
    with pytest.raises(DomainError):
        SamplerConfig(seed=0, sample_count=10, box_low=[1.0], box_high=[-1.0])
    with pytest.raises(DomainError):
        SamplerConfig(
            seed=0, sample_count=10, box_low=[-1.0], box_high=[1.0],
            pair_strategy=("bogus",),
        )


def test_certify_lipschitz_examples():
    c = certify.certify_lipschitz(gallery.mapping("rotator"), cfg2())
    assert c.verdict == CONSISTENT
    assert c.estimates[0]["value"] == pytest.approx(1.0, abs=1e-12)
    c = certify.certify_lipschitz(HALF, cfg1())
    assert c.verdict == CONSISTENT
    assert c.estimates[0]["value"] == pytest.approx(0.5, abs=1e-12)
    c = certify.certify_lipschitz(gallery.mapping("staircase"), cfg2(width=200.0))
    assert c.verdict == CONSISTENT
    assert c.estimates[0]["value"] <= 1.0 + 1e-9


def test_certify_firm_examples():
    J = core.resolvent_map(gallery.operator("cubic"))
    assert certify.certify_firm(J, cfg1()).verdict == CONSISTENT
    c = certify.certify_firm(NEG, cfg1())
    assert c.verdict == REFUTED
    assert c.witness is not None
    # the stated witness reproduces the violation
    assert certify.replay(c, NEG) == pytest.approx(c.witness_value, abs=1e-12)
    assert certify.certify_firm(HALF, cfg1()).verdict == CONSISTENT


def test_certify_firm_explicit_pair():
    # |T1 - T0|^2 + |2(1-0)|^2 = 5 > 1 at (x, y) = (1, 0) for T = -Id
    assert certify.firm_violation(NEG, 1.0, 0.0) == pytest.approx(4.0)


def test_certify_averaged_examples():
    assert certify.certify_averaged(HALF, 0.5, cfg1()).verdict == CONSISTENT
    neg_clamp = negate(gallery.mapping("clamp-sin-map"))
    for alpha in (0.5, 0.9, 0.99):
        assert certify.certify_averaged(neg_clamp, alpha, cfg1()).verdict == REFUTED
    for alpha in (0.3, 0.5, 0.9):
        assert certify.certify_averaged(NEG, alpha, cfg1()).verdict == REFUTED
    with pytest.raises(DomainError):
        certify.certify_averaged(HALF, 1.0, cfg1())


def test_lemma_5_1_battery():
    # a Banach contraction is averaged with averaged negative
    assert certify.certify_averaged(HALF, 0.5, cfg1()).verdict == CONSISTENT
    neg_half = NonexpansiveMap(1, lambda x: -0.5 * np.asarray(x, float), "-half")
    assert certify.certify_averaged(neg_half, 0.75, cfg1()).verdict == CONSISTENT
    c = certify.certify_lipschitz(HALF, cfg1())
    assert c.estimates[0]["value"] == pytest.approx(0.5, abs=1e-12)


def test_certify_cld_examples():
    c = certify.certify_cld(gallery.mapping("clamp-sin-map"), [1.0], cfg1())
    assert c.verdict == CONSISTENT
    assert c.estimates[0]["value"] < 1.0
    c = certify.certify_cld(NEG, [0.5, 1.0], cfg1())
    assert c.verdict == REFUTED
    assert c.estimates[0]["value"] == pytest.approx(1.0, abs=1e-12)
    assert certify.replay(c, NEG) == pytest.approx(1.0, abs=1e-12)
    # reflected resolvent of the cubic: ratio tends to one far out
    R = core.reflected_map(gallery.operator("cubic"))
    c = certify.certify_cld(R, [1.0], cfg1(width=1000.0))
    assert c.verdict == REFUTED
    assert "ring" in c.notes


def test_certify_cld_monotone_in_eps():
    c = certify.certify_cld(
        gallery.mapping("clamp-sin-map"), [0.01, 0.1, 1.0, 5.0], cfg1(n=200_000)
    )
    vals = [row["value"] for row in c.estimates]
    assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_certify_banach():
    assert certify.certify_banach_contraction(HALF, cfg1()).verdict == CONSISTENT
    assert certify.certify_banach_contraction(NEG, cfg1()).verdict == REFUTED
    # CLD but not Banach: near-isometric pairs at the origin refute
    assert (
        certify.certify_banach_contraction(gallery.mapping("clamp-sin-map"), cfg1()).verdict
        == REFUTED
    )


def test_class_lattice_consistency():
    # nonexpansiveness refuted forces firm refuted
    lip = certify.certify_lipschitz(DOUBLE, cfg1())
    firm = certify.certify_firm(DOUBLE, cfg1())
    assert lip.verdict == REFUTED and firm.verdict == REFUTED
    # averaged-consistent maps are nonexpansive-consistent
    for T in (HALF, IDENT):
        if certify.certify_averaged(T, 0.5, cfg1()).verdict == CONSISTENT:
            assert certify.certify_lipschitz(T, cfg1()).verdict == CONSISTENT
    # Banach-consistent maps are CLD-consistent at every probed eps
    for T in (HALF, gallery.mapping("clamp-sin-map"), NEG):
        if certify.certify_banach_contraction(T, cfg1()).verdict == CONSISTENT:
            c = certify.certify_cld(T, [0.5, 1.0, 2.0], cfg1())
            assert c.verdict == CONSISTENT


def test_estimate_modulus_identity():
    est = certify.estimate_modulus(
        gallery.operator("identity", 2), [0.5, 1.0, 2.0], cfg2()
    )
    assert est.verdict == CONSISTENT
    for t, v in est.table:
        assert v == pytest.approx(t * t, rel=0.1)
        assert v >= t * t - 1e-9


def test_estimate_modulus_rotator_refuted():
    est = certify.estimate_modulus(gallery.operator("rotator"), [0.5, 1.0], cfg2())
    assert est.verdict == REFUTED
    for _, v in est.table:
        assert abs(v) <= 1e-12
    # witness is replayable
    x, xstar, y, ystar = (np.asarray(p) for p in est.witness)
    assert certify.graph_product(x, xstar, y, ystar) == pytest.approx(
        est.witness_value, abs=1e-12
    )


def test_estimate_modulus_cubic_quartic_profile():
    est = certify.estimate_modulus(
        gallery.operator("cubic"), [0.5, 1.0, 2.0, 4.0], cfg1(n=100_000, width=40.0)
    )
    assert est.verdict == CONSISTENT
    for t, v in est.table:
        assert v >= t**4 / 4.0 - 1e-6
        # grid-minimization oracle puts the infimum at t^4/4; the sampled
        # infimum should sit within the bin just above it
        assert v <= (1.05 * t) ** 4 / 4.0 + 0.25


def test_estimate_modulus_inverse_cubic_decays():
    est = certify.estimate_modulus(
        core.invert(gallery.operator("cubic")), [0.5, 1.0], cfg1(width=1000.0)
    )
    assert est.verdict == REFUTED
    assert "ring" in est.notes
    # in-box bin values are strictly positive: only the scale probe refutes
    assert all(v > certify.TOL_POS for _, v in est.table if np.isfinite(v))


def test_estimate_modulus_normal_cone_vacuous():
    est = certify.estimate_modulus(
        gallery.operator("normal-cone-zero", 2), [0.5, 1.0], cfg2()
    )
    assert est.verdict == CONSISTENT
    assert all(not np.isfinite(v) for _, v in est.table)


def test_modulus_value_and_tighten():
    est = certify.Modulus(
        kind="empirical", table=((0.5, 0.3), (1.0, 1.2), (2.0, 5.0))
    )
    assert est.value(0.75) == pytest.approx(0.3)
    assert est.value(1.5) == pytest.approx(1.2)
    assert est.value(0.25) == 0.0
    m = certify.tighten_modulus(est, 4.0)
    assert m.quadratic_bound(2.0) == pytest.approx(4.0)
    m2 = certify.tighten_modulus(est, 1.0)
    assert m2.quadratic_bound(2.0**3) == pytest.approx(0.25 * 4.0**3)
    m3 = certify.tighten_modulus(est, 0.5)
    assert m3.quadratic_bound(1.0) == pytest.approx(0.125)
    # tightened value dominates the table for large t
    assert m.value(4.0) == pytest.approx(16.0)
    with pytest.raises(DomainError):
        certify.tighten_modulus(est, 0.0)
    with pytest.raises(DomainError):
        m.quadratic_bound(0.5)
    with pytest.raises(DomainError):
        est.quadratic_bound(2.0)


def test_certify_strongly_monotone():
    JS = core.resolvent_map(gallery.operator("rotator"))
    c = certify.certify_strongly_monotone(JS, cfg2())
    assert c.verdict == CONSISTENT
    assert c.estimates[0]["value"] == pytest.approx(0.5, abs=1e-9)
    c = certify.certify_strongly_monotone(gallery.operator("rotator"), cfg2())
    assert c.verdict == REFUTED
    c = certify.certify_strongly_monotone(gallery.operator("identity", 2), cfg2())
    assert c.verdict == CONSISTENT


def test_check_sequential_staircase():
    fam = gallery.witnesses("staircase")
    T = gallery.mapping("staircase")
    rep = certify.check_sequential(T, fam, "ssne", 30)
    assert rep.refuted
    assert rep.observed["gap_tail_min"] >= 0.999
    # d_n tabulated at moderate n matches 4^{-n}
    k = 5
    assert rep.premise[k - 1] == pytest.approx(4.0**-k, rel=1e-6)
    # SNE mode: separations unbounded, no refutation claimed
    rep2 = certify.check_sequential(T, fam, "sne", 30)
    assert not rep2.refuted and not rep2.bounded


def test_check_sequential_scaled_families():
    C = gallery.operator("cubic")
    R = core.reflected_map(C)
    fam = certify.scaled_pair_family([1.0], [1.0], n_cap=45)
    assert certify.check_sequential(R, fam, "ssne", 45).refuted
    assert not certify.check_sequential(negate(R), fam, "ssne", 45).refuted
    # clamp-sin map on growing pairs: premise stays large, no refutation
    Tc = negate(core.reflected_map(gallery.operator("clamp-sin-op")))
    grow = certify.WitnessFamily(
        "grow", lambda n: (np.array([float(n)]), np.array([0.0])), n_cap=60
    )
    assert not certify.check_sequential(Tc, grow, "ssne", 40).refuted
    # identity with constant gap: premise and gap both vanish
    const = certify.WitnessFamily(
        "const", lambda n: (np.array([float(n)]), np.array([float(n) - 2.0])), n_cap=60
    )
    rep = certify.check_sequential(IDENT, const, "ssne", 40)
    assert not rep.refuted and rep.observed["gap_tail_min"] == 0.0
    with pytest.raises(DomainError):
        certify.check_sequential(IDENT, const, "bogus", 10)


def test_check_growth():
    pairs = [gallery.cone_subdiff_witnesses(n) for n in range(1, 101)]
    rep = certify.check_growth(pairs)
    assert rep.top_decile_inf == 0.0 and not rep.growth_holds
    # identity graph: ratio identically one
    rng = np.random.default_rng(1)
    z = rng.uniform(-10, 10, size=(500, 2))
    g1 = core.minty_sample(gallery.operator("identity", 2), z)
    g2 = core.minty_sample(gallery.operator("identity", 2), -z)
    rep = certify.check_growth((g1, g2))
    assert rep.top_decile_inf == pytest.approx(1.0, abs=1e-12)
    # cubic on antipodal pairs: ratio grows like dist^2 / 4
    zc = np.linspace(0.5, 4.0, 200)
    gc1 = core.minty_sample(gallery.operator("cubic"), zc + zc**3)
    gc2 = core.minty_sample(gallery.operator("cubic"), -(zc + zc**3))
    rep = certify.check_growth((gc1, gc2))
    dist = rep.distances
    assert np.allclose(rep.ratios, dist**2 / 4.0, rtol=1e-8)


def test_check_coercive():
    rng = np.random.default_rng(2)
    S = gallery.operator("rotator")
    z = rng.uniform(-20, 20, size=(4000, 2))
    gs = core.minty_sample(S, z)
    direct = certify.GraphSample(x=z, xstar=gallery.rotator_eval(z))
    rep = certify.check_coercive(direct)
    assert not rep.increasing
    assert np.nanmax(np.abs(rep.shell_mins)) <= 1e-9
    witnesses = [gallery.cone_subdiff_witnesses(n)[0] for n in range(1, 101)]
    rep = certify.check_coercive(witnesses)
    assert rep.increasing
    ident = certify.GraphSample(x=z, xstar=z)
    assert certify.check_coercive(ident).increasing


def test_check_lemma_3_5():
    C = gallery.operator("cubic")
    phi = certify.Modulus(kind="closed-form", closed_form=lambda t: 0.25 * t**4)
    rep = certify.check_lemma_3_5(C, phi, cfg1(width=10.0))
    assert rep.max_violation <= 1e-9
    I1 = gallery.operator("identity", 1)
    phi_sq = certify.Modulus(kind="closed-form", closed_form=lambda t: t * t)
    rep = certify.check_lemma_3_5(I1, phi_sq, cfg1(width=10.0))
    assert rep.max_violation <= 1e-9  # equality case
    S = gallery.operator("rotator")
    rep = certify.check_lemma_3_5(S, phi_sq, cfg2(width=10.0))
    assert rep.max_violation > 1e-9 and rep.witness is not None


def test_check_selfdual_patterns():
    clamp = gallery.operator("clamp-sin-op")
    rep = certify.check_selfdual(clamp, cfg1(n=100_000))
    assert rep.verdicts == (CONSISTENT, CONSISTENT, CONSISTENT)
    assert rep.agrees
    cubic = gallery.operator("cubic")
    rep = certify.check_selfdual(cubic, cfg1(n=100_000, width=1000.0))
    assert rep.verdicts == (CONSISTENT, REFUTED, REFUTED)
    assert rep.agrees
    rot = gallery.operator("rotator")
    rep = certify.check_selfdual(rot, cfg2())
    assert rep.verdicts[0] == REFUTED and rep.verdicts[1] == REFUTED
    assert rep.agrees
    payload = rep.to_json_dict()
    assert payload["verdicts"]["uniformly-monotone"] == REFUTED


def test_compare_with_declaration():
    C = gallery.operator("cubic")
    est = certify.estimate_modulus(C, [0.5, 1.0], cfg1(n=20_000, width=40.0))
    row = certify.compare_with_declaration(C, est.certificate())
    assert row["declared"] is True and row["agrees"] is True
    R = gallery.operator("rotator")
    est = certify.estimate_modulus(R, [0.5, 1.0], cfg2(n=20_000))
    row = certify.compare_with_declaration(R, est.certificate())
    assert row["declared"] is False and row["agrees"] is None
    assert row["verdict"] == REFUTED


def test_determinism_bit_identical():
    cfg = cfg1(n=30_000, seed=77)
    T = gallery.mapping("clamp-sin-map")
    a = certify.certify_cld(T, [0.1, 1.0], cfg)
    b = certify.certify_cld(T, [0.1, 1.0], cfg)
    assert a.estimates == b.estimates
    est1 = certify.estimate_modulus(gallery.operator("cubic"), [0.5, 1.0], cfg)
    est2 = certify.estimate_modulus(gallery.operator("cubic"), [0.5, 1.0], cfg)
    assert est1.table == est2.table


def test_pair_batches_strategies():
    cfg = SamplerConfig(
        seed=5,
        sample_count=300,
        box_low=[-1.0, -1.0],
        box_high=[1.0, 1.0],
        pair_strategy=("antithetic",),
    )
    X, Y = certify.pair_batches(cfg)
    assert np.allclose(X, -Y)
    cfg = SamplerConfig(
        seed=5,
        sample_count=300,
        box_low=[-1.0, -1.0],
        box_high=[1.0, 1.0],
        pair_strategy=("radial-shells",),
    )
    X, Y = certify.pair_batches(cfg, shell_distances=[0.25])
    assert np.allclose(np.linalg.norm(X - Y, axis=1), 0.25)
