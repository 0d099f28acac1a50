"""Sampling-based certifiers for nonexpansiveness classes and monotonicity
moduli.

A certifier can only *refute* a class (with a replayable witness) or report
*consistency* of the evidence gathered at the configured sample size; it
never claims a proof.  Pair sampling mixes three deterministic strategies
driven by one seed: independent uniform pairs, antithetic pairs
(``y = -x``, which attain the modulus infimum of odd operators), and radial
shells (pairs at prescribed separations, needed for per-``t`` estimates).

Asymptotic classes (uniform monotonicity, contraction for large distances,
Banach contraction) cannot be refuted by thresholding statistics on a fixed
box: the cube-root inverse of ``x -> x^3`` has a strictly positive sampled
modulus on every bounded box although the class fails globally.  The
certifiers therefore add a geometric *scale probe*: the same statistic is
re-estimated on rings of radius ``ring_base * 2^k`` and a monotone decay of
the statistic across rings (below ``decay_threshold``) counts as a
refutation, with the extremal pair of the last ring as witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .core import (
    GraphSample,
    MonotoneOperator,
    NonexpansiveMap,
    invert,
    minty_sample,
    reflected_map,
)
from .exceptions import DomainError

STRATEGIES = ("independent", "antithetic", "radial-shells")

# Absolute tolerance on inequality violations; calibrated against 64-bit
# rounding of the gallery's closed forms.
TOL_CERT = 1e-9
# "Strictly positive" threshold for modulus verdicts.
TOL_POS = 1e-12

CONSISTENT = "consistent"
REFUTED = "refuted"


# ---------------------------------------------------------------------------
# Deterministic pair sampling
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SamplerConfig:
    """Seeded sampling plan for pair-based certifiers.

    ``pair_strategy`` lists the strategies to mix (equal shares, remainder
    to the first).  The batch partition is a pure function of the seed, so
    estimates are bit-identical across runs.
    """

    seed: int
    sample_count: int
    box_low: np.ndarray
    box_high: np.ndarray
    pair_strategy: Tuple[str, ...] = STRATEGIES

    def __post_init__(self):
        lo = np.atleast_1d(np.asarray(self.box_low, dtype=float))
        hi = np.atleast_1d(np.asarray(self.box_high, dtype=float))
        object.__setattr__(self, "box_low", lo)
        object.__setattr__(self, "box_high", hi)
        if self.sample_count < 1:
            raise DomainError("sample_count must be >= 1")
        if lo.shape != hi.shape or not np.all(lo < hi):
            raise DomainError("need box_low < box_high coordinatewise")
        bad = set(self.pair_strategy) - set(STRATEGIES)
        if bad or not self.pair_strategy:
            raise DomainError(f"unknown pair strategies: {sorted(bad)}")

    @property
    def dim(self) -> int:
        return self.box_low.size

    @staticmethod
    def symmetric(seed: int, sample_count: int, dim: int, half_width: float,
                  pair_strategy: Tuple[str, ...] = STRATEGIES) -> "SamplerConfig":
        w = float(half_width)
        return SamplerConfig(
            seed=seed,
            sample_count=sample_count,
            box_low=np.full(dim, -w),
            box_high=np.full(dim, w),
            pair_strategy=pair_strategy,
        )

    def describe(self) -> dict:
        return {
            "seed": int(self.seed),
            "sample_count": int(self.sample_count),
            "box_low": [float(v) for v in self.box_low],
            "box_high": [float(v) for v in self.box_high],
            "pair_strategy": list(self.pair_strategy),
        }


def _unit_dirs(rng: np.random.Generator, n: int, d: int) -> np.ndarray:
    if d == 1:
        return rng.choice(np.array([-1.0, 1.0]), size=(n, 1))
    v = rng.standard_normal((n, d))
    nrm = np.linalg.norm(v, axis=1, keepdims=True)
    return v / np.maximum(nrm, 1e-300)


def pair_batches(cfg: SamplerConfig, shell_distances: Optional[Sequence[float]] = None):
    """Draw the configured mix of point pairs; returns ``(X, Y)`` of shape
    ``(n, dim)`` each."""
    rng = np.random.default_rng(cfg.seed)
    d = cfg.dim
    k = len(cfg.pair_strategy)
    counts = [cfg.sample_count // k] * k
    counts[0] += cfg.sample_count - sum(counts)
    if shell_distances is None or len(shell_distances) == 0:
        diam = float(np.linalg.norm(cfg.box_high - cfg.box_low))
        ladder = diam * 2.0 ** (-np.arange(8.0))
    else:
        ladder = np.asarray(sorted(shell_distances), dtype=float)
    xs, ys = [], []
    for strat, m in zip(cfg.pair_strategy, counts):
        if m <= 0:
            continue
        if strat == "independent":
            xs.append(rng.uniform(cfg.box_low, cfg.box_high, size=(m, d)))
            ys.append(rng.uniform(cfg.box_low, cfg.box_high, size=(m, d)))
        elif strat == "antithetic":
            x = rng.uniform(cfg.box_low, cfg.box_high, size=(m, d))
            xs.append(x)
            ys.append(-x)
        else:  # radial-shells
            x = rng.uniform(cfg.box_low, cfg.box_high, size=(m, d))
            dirs = _unit_dirs(rng, m, d)
            t = np.resize(ladder, m)
            xs.append(x)
            ys.append(x + t[:, None] * dirs)
    return np.concatenate(xs), np.concatenate(ys)


def _ring_pair_batches(rng, dim, dist_floor, ring_base, ring_count, ring_samples):
    """Pairs on nested rings ``|x| in [r, 2r)``, ``r = ring_base * 2^k``,
    separated by a geometric ladder starting at ``dist_floor``."""
    rings = []
    for k in range(ring_count):
        r = ring_base * 2.0**k
        smax = 2.0 * r
        if smax < dist_floor:
            rings.append((r, None, None))
            continue
        dirs = _unit_dirs(rng, ring_samples, dim)
        radius = r * (1.0 + rng.random(ring_samples))
        x = dirs * radius[:, None]
        dirs2 = _unit_dirs(rng, ring_samples, dim)
        n_lad = int(np.floor(np.log2(smax / dist_floor))) + 1
        lad = dist_floor * 2.0 ** np.arange(n_lad)
        s = np.resize(lad, ring_samples)
        rings.append((r, x, x + s[:, None] * dirs2))
    return rings


def _geometric_decay(values, counts, min_pairs, threshold, slack=1.3):
    """True when the per-ring statistic is monotone-ish decreasing and the
    last valid value is below ``threshold`` times the first."""
    seq = [
        float(v)
        for v, c in zip(values, counts)
        if c >= min_pairs and np.isfinite(v)
    ]
    if len(seq) < 4 or seq[0] <= 0.0:
        return False
    for prev, nxt in zip(seq, seq[1:]):
        if nxt > prev * slack:
            return False
    return seq[-1] <= threshold * seq[0]


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass
class ClassCertificate:
    """Outcome of one sampling certifier run.

    ``estimates`` is a probe -> value table (``probe`` is an epsilon, a
    shell radius ``t``, or a nominal bound), ``witness`` the refuting pair
    as plain coordinate lists (re-checkable via :func:`replay`).
    """

    class_name: str
    params: dict
    estimates: list
    verdict: str
    witness: Optional[list]
    witness_value: Optional[float]
    seed: int
    sample_count: int
    notes: str = ""

    def to_json_dict(self) -> dict:
        return {
            "class": self.class_name,
            "params": self.params,
            "estimates": self.estimates,
            "verdict": self.verdict,
            "witness": self.witness,
            "seed": int(self.seed),
            "samples": int(self.sample_count),
            "notes": self.notes,
        }


def _points(*arrays) -> list:
    return [[float(v) for v in np.atleast_1d(a)] for a in arrays]


def certify_lipschitz(T: NonexpansiveMap, cfg: SamplerConfig) -> ClassCertificate:
    """Estimate the supremal Lipschitz ratio; refute nonexpansiveness when
    it exceeds ``1 + TOL_CERT``."""
    X, Y = pair_batches(cfg)
    dist = np.linalg.norm(X - Y, axis=1)
    keep = dist > 0
    ratio = np.linalg.norm(T(X) - T(Y), axis=1)[keep] / dist[keep]
    i = int(np.argmax(ratio))
    sup = float(ratio[i])
    refuted = sup > 1.0 + TOL_CERT
    Xk, Yk = X[keep], Y[keep]
    return ClassCertificate(
        class_name="nonexpansive",
        params={"sampler": cfg.describe()},
        estimates=[{"probe": 1.0, "value": sup}],
        verdict=REFUTED if refuted else CONSISTENT,
        witness=_points(Xk[i], Yk[i]) if refuted else None,
        witness_value=sup if refuted else None,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
    )


def firm_violation(F, x, y) -> float:
    """Violation of the firm-nonexpansiveness inequality at one pair."""
    x = np.atleast_1d(np.asarray(x, float))
    y = np.atleast_1d(np.asarray(y, float))
    fx, fy = F(x), F(y)
    lhs = np.sum((fx - fy) ** 2) + np.sum(((x - fx) - (y - fy)) ** 2)
    return float(lhs - np.sum((x - y) ** 2))


def certify_firm(F: NonexpansiveMap, cfg: SamplerConfig) -> ClassCertificate:
    """Max violation of ``|Fx-Fy|^2 + |(Id-F)x-(Id-F)y|^2 <= |x-y|^2``."""
    X, Y = pair_batches(cfg)
    FX, FY = F(X), F(Y)
    lhs = np.sum((FX - FY) ** 2, axis=1) + np.sum(((X - FX) - (Y - FY)) ** 2, axis=1)
    viol = lhs - np.sum((X - Y) ** 2, axis=1)
    i = int(np.argmax(viol))
    worst = float(viol[i])
    refuted = worst > TOL_CERT
    return ClassCertificate(
        class_name="firmly-nonexpansive",
        params={"sampler": cfg.describe()},
        estimates=[{"probe": 0.0, "value": worst}],
        verdict=REFUTED if refuted else CONSISTENT,
        witness=_points(X[i], Y[i]) if refuted else None,
        witness_value=worst if refuted else None,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
    )


def averaged_violation(T, alpha, x, y) -> float:
    x = np.atleast_1d(np.asarray(x, float))
    y = np.atleast_1d(np.asarray(y, float))
    tx, ty = T(x), T(y)
    lhs = (1.0 - alpha) * np.sum(((x - tx) - (y - ty)) ** 2)
    rhs = alpha * (np.sum((x - y) ** 2) - np.sum((tx - ty) ** 2))
    return float(lhs - rhs)


def certify_averaged(T: NonexpansiveMap, alpha: float, cfg: SamplerConfig) -> ClassCertificate:
    """Max violation of the alpha-averagedness inequality."""
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)")
    X, Y = pair_batches(cfg)
    TX, TY = T(X), T(Y)
    lhs = (1.0 - alpha) * np.sum(((X - TX) - (Y - TY)) ** 2, axis=1)
    rhs = alpha * (np.sum((X - Y) ** 2, axis=1) - np.sum((TX - TY) ** 2, axis=1))
    viol = lhs - rhs
    i = int(np.argmax(viol))
    worst = float(viol[i])
    refuted = worst > TOL_CERT
    return ClassCertificate(
        class_name="averaged",
        params={"alpha": float(alpha), "sampler": cfg.describe()},
        estimates=[{"probe": float(alpha), "value": worst}],
        verdict=REFUTED if refuted else CONSISTENT,
        witness=_points(X[i], Y[i]) if refuted else None,
        witness_value=worst if refuted else None,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
    )


def certify_banach_contraction(T: NonexpansiveMap, cfg: SamplerConfig,
                               margin: float = 1e-4) -> ClassCertificate:
    """Refuted when the sampled Lipschitz ratio comes within ``margin`` of 1
    (near-isometric pairs exist, so no uniform factor below one is credible)."""
    X, Y = pair_batches(cfg)
    dist = np.linalg.norm(X - Y, axis=1)
    keep = dist > 0
    ratio = np.linalg.norm(T(X) - T(Y), axis=1)[keep] / dist[keep]
    i = int(np.argmax(ratio))
    sup = float(ratio[i])
    refuted = sup >= 1.0 - margin
    Xk, Yk = X[keep], Y[keep]
    return ClassCertificate(
        class_name="banach-contraction",
        params={"margin": margin, "sampler": cfg.describe()},
        estimates=[{"probe": 1.0 - margin, "value": sup}],
        verdict=REFUTED if refuted else CONSISTENT,
        witness=_points(Xk[i], Yk[i]) if refuted else None,
        witness_value=sup if refuted else None,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
    )


def certify_cld(T: NonexpansiveMap, eps_list: Sequence[float], cfg: SamplerConfig,
                *, ring_base: float = 1.0, ring_count: int = 15,
                ring_samples: int = 2048, decay_threshold: float = 0.05,
                min_ring_pairs: int = 24) -> ClassCertificate:
    """Contraction-for-large-distances profile ``eps -> beta(eps)``.

    ``beta(eps)`` is the supremal ratio over sampled pairs at distance at
    least ``eps`` (nonincreasing in ``eps`` by construction).  Refuted when
    some ``beta(eps)`` reaches ``1 - TOL_CERT``, or when ``1 - beta``
    measured on geometrically growing rings decays below
    ``decay_threshold`` (ratio tending to one at infinity).
    """
    eps = sorted(float(e) for e in eps_list)
    if not eps or eps[0] <= 0:
        raise DomainError("eps_list must be positive")
    X, Y = pair_batches(cfg, shell_distances=eps)
    rng = np.random.default_rng(cfg.seed + 1)
    rings = _ring_pair_batches(rng, cfg.dim, eps[0], ring_base, ring_count, ring_samples)

    def ratios(x, y):
        dist = np.linalg.norm(x - y, axis=1)
        keep = dist > 0
        return dist[keep], np.linalg.norm(T(x[keep]) - T(y[keep]), axis=1) / dist[keep], x[keep], y[keep]

    dist, ratio, Xk, Yk = ratios(X, Y)
    ring_stats = []
    for r, xk, yk in rings:
        if xk is None:
            ring_stats.append((r, None, None, None, None, 0))
            continue
        dk, rk, xkk, ykk = ratios(xk, yk)
        sel = dk >= eps[0]
        if not np.any(sel):
            ring_stats.append((r, None, None, None, None, 0))
            continue
        j = int(np.argmax(rk[sel]))
        ring_stats.append(
            (r, float(rk[sel][j]), None, xkk[sel][j], ykk[sel][j], int(np.sum(sel)))
        )
        dist = np.concatenate([dist, dk])
        ratio = np.concatenate([ratio, rk])
        Xk = np.concatenate([Xk, xkk])
        Yk = np.concatenate([Yk, ykk])

    estimates = []
    worst_pair = None
    worst_val = -np.inf
    for e in eps:
        sel = dist >= e
        if not np.any(sel):
            estimates.append({"probe": e, "value": None})
            continue
        j = int(np.argmax(ratio[sel]))
        val = float(ratio[sel][j])
        estimates.append({"probe": e, "value": val})
        if val > worst_val:
            worst_val = val
            worst_pair = (Xk[sel][j], Yk[sel][j])

    sups = [r[1] if r[1] is not None else np.nan for r in ring_stats]
    cnts = [r[5] for r in ring_stats]
    one_minus = [1.0 - s if np.isfinite(s) else np.nan for s in sups]
    increasing = _geometric_decay(one_minus, cnts, min_ring_pairs, decay_threshold)

    absolute = worst_val >= 1.0 - TOL_CERT
    refuted = absolute or increasing
    witness = None
    witness_value = None
    if absolute and worst_pair is not None:
        witness = _points(*worst_pair)
        witness_value = worst_val
    elif increasing:
        last = [r for r in ring_stats if r[5] >= min_ring_pairs and r[1] is not None][-1]
        witness = _points(last[3], last[4])
        witness_value = last[1]
    return ClassCertificate(
        class_name="contraction-large-distances",
        params={
            "eps_list": eps,
            "sampler": cfg.describe(),
            "rings": [
                {"radius": r, "sup_ratio": s, "pairs": c}
                for (r, s, _, _, _, c) in ring_stats
            ],
        },
        estimates=estimates,
        verdict=REFUTED if refuted else CONSISTENT,
        witness=witness,
        witness_value=witness_value,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
        notes="refuted by ring decay of 1 - beta" if (increasing and not absolute) else "",
    )


# ---------------------------------------------------------------------------
# Monotonicity moduli
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Modulus:
    """A modulus function, as a closed form or an empirical lower-bound table.

    ``table`` rows are ``(t, phi_hat(t))`` with ``phi_hat`` the binned
    infimum of graph products; ``value`` evaluates the closed form or the
    step interpolation, raised to the supercoercive quadratic bound when one
    has been attached by :func:`tighten_modulus`.
    """

    kind: str
    label: str = ""
    closed_form: Optional[Callable[[np.ndarray], np.ndarray]] = field(
        default=None, repr=False
    )
    table: Tuple[Tuple[float, float], ...] = ()
    supercoercive_bound: Optional[float] = None

    def value(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "closed-form":
            base = np.asarray(self.closed_form(t), dtype=float)
        else:
            knots = np.array([row[0] for row in self.table])
            vals = np.array([row[1] for row in self.table])
            idx = np.searchsorted(knots, t, side="right") - 1
            base = np.where(idx >= 0, vals[np.maximum(idx, 0)], 0.0)
        if self.supercoercive_bound is not None:
            quad = np.where(t >= 1.0, self.supercoercive_bound * t * t, 0.0)
            base = np.maximum(base, quad)
        return base

    def quadratic_bound(self, t):
        """The doubling-derived bound ``(phi_hat(1)/4) t^2``, valid for t >= 1."""
        if self.supercoercive_bound is None:
            raise DomainError("no supercoercive bound attached; run tighten_modulus")
        t = np.asarray(t, dtype=float)
        if np.any(t < 1.0):
            raise DomainError("quadratic bound is only claimed for t >= 1")
        return self.supercoercive_bound * t * t


@dataclass(frozen=True)
class ModulusEstimate(Modulus):
    """Empirical modulus with the uniform-monotonicity verdict attached."""

    verdict: str = CONSISTENT
    witness: Optional[list] = None
    witness_value: Optional[float] = None
    rings: Tuple[dict, ...] = ()
    seed: int = 0
    sample_count: int = 0
    notes: str = ""

    def certificate(self, cfg_desc: Optional[dict] = None) -> ClassCertificate:
        return ClassCertificate(
            class_name="uniformly-monotone",
            params={"rings": list(self.rings), **({"sampler": cfg_desc} if cfg_desc else {})},
            estimates=[
                {"probe": t, "value": (None if not np.isfinite(v) else v)}
                for t, v in self.table
            ],
            verdict=self.verdict,
            witness=self.witness,
            witness_value=self.witness_value,
            seed=self.seed,
            sample_count=self.sample_count,
            notes=self.notes,
        )


def graph_product(x, xstar, y, ystar) -> float:
    """The monotonicity product ``<x - y, x* - y*>`` of two graph points."""
    dx = np.atleast_1d(np.asarray(x, float)) - np.atleast_1d(np.asarray(y, float))
    ds = np.atleast_1d(np.asarray(xstar, float)) - np.atleast_1d(np.asarray(ystar, float))
    return float(np.sum(dx * ds))


def estimate_modulus(A: MonotoneOperator, t_list: Sequence[float], cfg: SamplerConfig,
                     *, ring_base: float = 1.0, ring_count: int = 15,
                     ring_samples: int = 2048, decay_threshold: float = 0.05,
                     min_ring_pairs: int = 24) -> ModulusEstimate:
    """Empirical modulus ``phi_hat(t) = inf <x-y, x*-y*>`` over sampled graph
    pairs with ``|x-y|`` in ``[t_i, t_{i+1})``.

    Graph pairs are drawn through the resolvent parametrization of ``A``.
    The verdict is refuted when a bin infimum fails strict positivity
    (``TOL_POS``) or when the infimum at the smallest ``t`` decays
    geometrically across scale rings.
    """
    knots = sorted(float(t) for t in t_list)
    if not knots or knots[0] <= 0:
        raise DomainError("t_list must be positive")
    Z1, Z2 = pair_batches(cfg, shell_distances=knots)
    g1 = minty_sample(A, Z1)
    g2 = minty_sample(A, Z2)

    def stats(ga, gb):
        dx = ga.x - gb.x
        dist = np.linalg.norm(dx, axis=1)
        prod = np.sum(dx * (ga.xstar - gb.xstar), axis=1)
        return dist, prod

    dist, prod = stats(g1, g2)
    edges = knots + [np.inf]
    table = []
    witness = None
    witness_value = None
    refuted_pos = False
    for t, nxt in zip(edges[:-1], edges[1:]):
        sel = (dist >= t) & (dist < nxt)
        if not np.any(sel):
            table.append((t, np.inf))
            continue
        j = int(np.argmin(prod[sel]))
        val = float(prod[sel][j])
        table.append((t, val))
        if val <= TOL_POS and not refuted_pos:
            refuted_pos = True
            witness = _points(g1.x[sel][j], g1.xstar[sel][j], g2.x[sel][j], g2.xstar[sel][j])
            witness_value = val

    rng = np.random.default_rng(cfg.seed + 1)
    rings = _ring_pair_batches(rng, cfg.dim, knots[0], ring_base, ring_count, ring_samples)
    ring_rows = []
    mins, cnts, ring_witness = [], [], []
    for r, zx, zy in rings:
        if zx is None:
            ring_rows.append({"radius": r, "min_product": None, "pairs": 0})
            mins.append(np.nan)
            cnts.append(0)
            ring_witness.append(None)
            continue
        ga, gb = minty_sample(A, zx), minty_sample(A, zy)
        dk, pk = stats(ga, gb)
        sel = dk >= knots[0]
        if not np.any(sel):
            ring_rows.append({"radius": r, "min_product": None, "pairs": 0})
            mins.append(np.nan)
            cnts.append(0)
            ring_witness.append(None)
            continue
        j = int(np.argmin(pk[sel]))
        mins.append(float(pk[sel][j]))
        cnts.append(int(np.sum(sel)))
        ring_rows.append({"radius": r, "min_product": mins[-1], "pairs": cnts[-1]})
        ring_witness.append(
            _points(ga.x[sel][j], ga.xstar[sel][j], gb.x[sel][j], gb.xstar[sel][j])
        )

    decays = _geometric_decay(mins, cnts, min_ring_pairs, decay_threshold)
    if decays and not refuted_pos:
        last = max(
            i for i, c in enumerate(cnts) if c >= min_ring_pairs and np.isfinite(mins[i])
        )
        witness = ring_witness[last]
        witness_value = mins[last]

    verdict = REFUTED if (refuted_pos or decays) else CONSISTENT
    return ModulusEstimate(
        kind="empirical",
        label=f"phi_hat[{A.name}]",
        table=tuple(table),
        verdict=verdict,
        witness=witness,
        witness_value=witness_value,
        rings=tuple(ring_rows),
        seed=cfg.seed,
        sample_count=cfg.sample_count,
        notes="refuted by ring decay of the modulus" if (decays and not refuted_pos) else "",
    )


def tighten_modulus(m: Modulus, alpha_at_1: float) -> Modulus:
    """Attach the doubling bound: a positive modulus value ``alpha`` at 1
    implies ``phi(2^k) >= 4^k alpha``, hence ``phi(t) >= (alpha/4) t^2`` for
    ``t >= 1``."""
    if not alpha_at_1 > 0:
        raise DomainError("alpha_at_1 must be positive")
    return replace(m, supercoercive_bound=alpha_at_1 / 4.0)


def certify_strongly_monotone(A: Union[MonotoneOperator, NonexpansiveMap],
                              cfg: SamplerConfig) -> ClassCertificate:
    """Infimal ratio ``<x-y, x*-y*> / |x-y|^2`` over sampled graph pairs."""
    X, Y = pair_batches(cfg)
    if isinstance(A, MonotoneOperator):
        ga, gb = minty_sample(A, X), minty_sample(A, Y)
        dx = ga.x - gb.x
        ds = ga.xstar - gb.xstar
        wit = (ga, gb)
    else:
        dx = X - Y
        ds = A(X) - A(Y)
        wit = None
    d2 = np.sum(dx * dx, axis=1)
    keep = d2 > 0
    ratio = np.sum(dx * ds, axis=1)[keep] / d2[keep]
    i = int(np.argmin(ratio))
    sigma = float(ratio[i])
    refuted = sigma <= TOL_CERT
    witness = None
    if refuted:
        if wit is not None:
            ga, gb = wit
            witness = _points(
                ga.x[keep][i], ga.xstar[keep][i], gb.x[keep][i], gb.xstar[keep][i]
            )
        else:
            witness = _points(X[keep][i], Y[keep][i])
    return ClassCertificate(
        class_name="strongly-monotone",
        params={"sampler": cfg.describe()},
        estimates=[{"probe": 0.0, "value": sigma}],
        verdict=REFUTED if refuted else CONSISTENT,
        witness=witness,
        witness_value=sigma if refuted else None,
        seed=cfg.seed,
        sample_count=cfg.sample_count,
    )


# ---------------------------------------------------------------------------
# Sequential (SNE / SSNE) probes on witness families
# ---------------------------------------------------------------------------


from .gallery import WitnessFamily  # noqa: E402  (shared domain type)


def scaled_pair_family(direction, gap, name: str = "scaled-pair",
                       n_cap: int = 60) -> WitnessFamily:
    """Family ``(x_n, y_n) = (2^n u, 2^n u + c)``: geometrically growing base
    points with a constant displacement ``c``."""
    u = np.atleast_1d(np.asarray(direction, dtype=float))
    c = np.atleast_1d(np.asarray(gap, dtype=float))

    def gen(n: int):
        base = (2.0**n) * u
        return base, base + c

    return WitnessFamily(
        name=name,
        generator=gen,
        expected_behavior="constant displacement at geometrically growing scale",
        n_cap=n_cap,
    )


@dataclass
class SequentialReport:
    """Tabulated sequential probe of one witness family."""

    family: str
    mode: str
    n: np.ndarray
    separation: np.ndarray       # b_n = |x_n - y_n|
    premise: np.ndarray          # r_n (sne) or d_n (ssne)
    gap: np.ndarray              # g_n = |(x_n-y_n) - (Tx_n-Ty_n)|
    bounded: bool
    refuted: bool
    observed: dict


def check_sequential(T: NonexpansiveMap, family: WitnessFamily, mode: str,
                     n_max: int, *, decay_tol: float = 1e-6,
                     gap_floor: float = 1e-3,
                     bounded_factor: float = 10.0,
                     premise_ulps: float = 512.0) -> SequentialReport:
    """Evaluate the sequential nonexpansiveness definitions along a family.

    In ``ssne`` mode the premise is ``d_n = b_n^2 - |Tx_n - Ty_n|^2``; in
    ``sne`` mode it is ``r_n = b_n - |Tx_n - Ty_n|`` and the separations
    must stay bounded for a refutation to count.  A family whose premise
    tail vanishes while the displacement gap stays above ``gap_floor`` is a
    refutation witness for the class.

    "Vanishes" is judged against ``decay_tol`` plus the float64 error bar of
    the evaluated statistic (``premise_ulps`` units of ``eps * b_n^2``,
    resp. ``eps * b_n``): along families with growing base points the
    difference of squares cannot be resolved below that bar, although the
    true value tends to zero.
    """
    if mode not in ("sne", "ssne"):
        raise DomainError("mode must be 'sne' or 'ssne'")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    top = min(n_max, family.n_cap)
    ns = np.arange(1, top + 1)
    xs, ys = zip(*(family.generator(int(n)) for n in ns))
    X = np.stack([np.atleast_1d(np.asarray(v, float)) for v in xs])
    Y = np.stack([np.atleast_1d(np.asarray(v, float)) for v in ys])
    TX, TY = T(X), T(Y)
    b = np.linalg.norm(X - Y, axis=1)
    tb = np.linalg.norm(TX - TY, axis=1)
    gap = np.linalg.norm((X - Y) - (TX - TY), axis=1)
    premise = b - tb if mode == "sne" else b * b - tb * tb
    scale = b if mode == "sne" else b * b
    tail = max(3, len(ns) // 4)
    eps64 = np.finfo(float).eps
    bars = decay_tol + premise_ulps * eps64 * scale[-tail:]
    premise_tail = float(np.max(np.abs(premise[-tail:])))
    gap_tail = float(np.min(gap[-tail:]))
    bounded = bool(np.max(b) <= bounded_factor * max(np.min(b), 1e-300))
    vanishes = bool(np.all(np.abs(premise[-tail:]) <= bars))
    persists = gap_tail >= gap_floor
    refuted = vanishes and persists and (mode == "ssne" or bounded)
    return SequentialReport(
        family=family.name,
        mode=mode,
        n=ns,
        separation=b,
        premise=premise,
        gap=gap,
        bounded=bounded,
        refuted=refuted,
        observed={
            "premise_tail_max": premise_tail,
            "gap_tail_min": gap_tail,
            "final_separation": float(b[-1]),
        },
    )


# ---------------------------------------------------------------------------
# Graph-sample reports: growth condition, coercivity, modulus inequality
# ---------------------------------------------------------------------------


def _as_rows(a):
    # batched graph arrays are (n, d); a 1-D array is a batch of scalars
    a = np.asarray(a, dtype=float)
    return a.reshape(-1, 1) if a.ndim <= 1 else a


def _stack_graph_pairs(pairs):
    if (
        isinstance(pairs, tuple)
        and len(pairs) == 2
        and isinstance(pairs[0], GraphSample)
    ):
        a, b = pairs
        return _as_rows(a.x), _as_rows(a.xstar), _as_rows(b.x), _as_rows(b.xstar)
    rows = list(pairs)
    X = np.stack([np.atleast_1d(np.asarray(p[0].x, float)) for p in rows])
    XS = np.stack([np.atleast_1d(np.asarray(p[0].xstar, float)) for p in rows])
    Y = np.stack([np.atleast_1d(np.asarray(p[1].x, float)) for p in rows])
    YS = np.stack([np.atleast_1d(np.asarray(p[1].xstar, float)) for p in rows])
    return X, XS, Y, YS


@dataclass
class GrowthReport:
    """Ratio ``|x*-y*| / |x-y|`` tabulated against the separation."""

    distances: np.ndarray
    ratios: np.ndarray
    top_decile_inf: float

    @property
    def growth_holds(self) -> bool:
        return self.top_decile_inf > 1e-6


def check_growth(pairs) -> GrowthReport:
    """Growth-condition probe on graph-sample pairs; the infimum over the
    largest-separation decile proxies the liminf at infinity."""
    X, XS, Y, YS = _stack_graph_pairs(pairs)
    dist = np.linalg.norm(X - Y, axis=1)
    keep = dist > 0
    if not np.any(keep):
        raise DomainError("need pairs with |x - y| > 0")
    dist = dist[keep]
    ratio = np.linalg.norm(XS - YS, axis=1)[keep] / dist
    order = np.argsort(dist)
    top = order[-max(1, len(order) // 10):]
    return GrowthReport(
        distances=dist,
        ratios=ratio,
        top_decile_inf=float(np.min(ratio[top])),
    )


@dataclass
class CoerciveReport:
    """Values ``<x, x*>/|x|`` binned by ``|x|``; coercivity shows as an
    increasing lower envelope."""

    shell_edges: np.ndarray
    shell_mins: np.ndarray
    increasing: bool


def check_coercive(samples, shells: int = 8) -> CoerciveReport:
    if isinstance(samples, GraphSample):
        X = _as_rows(samples.x)
        XS = _as_rows(samples.xstar)
    else:
        rows = list(samples)
        X = np.stack([np.atleast_1d(np.asarray(s.x, float)) for s in rows])
        XS = np.stack([np.atleast_1d(np.asarray(s.xstar, float)) for s in rows])
    nrm = np.linalg.norm(X, axis=1)
    keep = nrm > 0
    nrm = nrm[keep]
    val = np.sum(X[keep] * XS[keep], axis=1) / nrm
    edges = np.quantile(nrm, np.linspace(0.0, 1.0, shells + 1))
    mins = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        sel = (nrm >= lo) & (nrm <= hi)
        mins.append(float(np.min(val[sel])) if np.any(sel) else np.nan)
    mins = np.array(mins)
    ok = np.isfinite(mins)
    seq = mins[ok]
    increasing = bool(
        len(seq) >= 2
        and np.all(np.diff(seq) >= -1e-12)
        and seq[-1] > seq[0] + 1e-9
    )
    return CoerciveReport(shell_edges=edges, shell_mins=mins, increasing=increasing)


@dataclass
class LemmaReport:
    """Sampled check of the reflected-resolvent modulus inequality
    ``|x-y|^2 - |Rx-Ry|^2 >= 4 phi(|Jx-Jy|)``."""

    max_violation: float
    pairs_checked: int
    witness: Optional[list]


def check_lemma_3_5(A: MonotoneOperator, phi, cfg: SamplerConfig) -> LemmaReport:
    phi_fn = phi.value if isinstance(phi, Modulus) else phi
    X, Y = pair_batches(cfg)
    JX, JY = A.resolvent(X), A.resolvent(Y)
    RX, RY = 2.0 * JX - X, 2.0 * JY - Y
    lhs = np.sum((X - Y) ** 2, axis=1) - np.sum((RX - RY) ** 2, axis=1)
    rhs = 4.0 * np.asarray(phi_fn(np.linalg.norm(JX - JY, axis=1)), dtype=float)
    viol = rhs - lhs
    i = int(np.argmax(viol))
    worst = float(viol[i])
    return LemmaReport(
        max_violation=worst,
        pairs_checked=len(viol),
        witness=_points(X[i], Y[i]) if worst > TOL_CERT else None,
    )


# ---------------------------------------------------------------------------
# Self-duality triptych
# ---------------------------------------------------------------------------


@dataclass
class SelfDualReport:
    """Verdict triple (A uniformly monotone, A^{-1} uniformly monotone,
    reflected resolvent a contraction for large distances) plus whether the
    pattern matches the self-duality equivalence
    ``(first and second) <-> third``."""

    operator: str
    modulus_primal: ModulusEstimate
    modulus_inverse: ModulusEstimate
    cld: ClassCertificate
    verdicts: Tuple[str, str, str]
    agrees: bool

    def to_json_dict(self) -> dict:
        return {
            "operator": self.operator,
            "verdicts": {
                "uniformly-monotone": self.verdicts[0],
                "inverse-uniformly-monotone": self.verdicts[1],
                "reflected-resolvent-cld": self.verdicts[2],
            },
            "agrees_with_selfduality": self.agrees,
            "modulus_primal": self.modulus_primal.certificate().to_json_dict(),
            "modulus_inverse": self.modulus_inverse.certificate().to_json_dict(),
            "cld": self.cld.to_json_dict(),
        }


def check_selfdual(A: MonotoneOperator, cfg: SamplerConfig,
                   t_list: Sequence[float] = (0.5, 1.0, 2.0, 4.0),
                   eps_list: Sequence[float] = (0.5, 1.0, 2.0, 4.0)) -> SelfDualReport:
    """Run the modulus estimator on ``A`` and ``A^{-1}`` and the CLD
    certifier on the reflected resolvent, and compare the verdict pattern
    against the self-duality equivalence."""
    m1 = estimate_modulus(A, t_list, cfg)
    m2 = estimate_modulus(invert(A), t_list, cfg)
    c3 = certify_cld(reflected_map(A), eps_list, cfg)
    verdicts = (m1.verdict, m2.verdict, c3.verdict)
    agrees = ((m1.verdict == CONSISTENT) and (m2.verdict == CONSISTENT)) == (
        c3.verdict == CONSISTENT
    )
    return SelfDualReport(
        operator=A.name,
        modulus_primal=m1,
        modulus_inverse=m2,
        cld=c3,
        verdicts=verdicts,
        agrees=agrees,
    )


def compare_with_declaration(op: MonotoneOperator, cert: ClassCertificate) -> dict:
    """Compare a certificate's verdict with the operator's trusted
    declaration of the same class tag.

    Certifiers never read declarations while testing; this report-side
    comparison is the only place the two meet.  ``agrees`` is ``None`` when
    the operator declares nothing about the class.
    """
    declared = op.declares(cert.class_name)
    return {
        "class": cert.class_name,
        "declared": declared,
        "verdict": cert.verdict,
        "agrees": (cert.verdict == CONSISTENT) if declared else None,
    }


# ---------------------------------------------------------------------------
# Witness replay
# ---------------------------------------------------------------------------


def replay(cert: ClassCertificate, target=None) -> float:
    """Recompute the violating statistic from a certificate's stored witness.

    ``target`` is the map (ratio/violation classes) and is unused for graph
    witnesses, which carry both graph points.
    """
    if cert.witness is None:
        raise DomainError("certificate has no witness to replay")
    pts = [np.asarray(p, dtype=float) for p in cert.witness]
    name = cert.class_name
    if name in ("nonexpansive", "banach-contraction", "contraction-large-distances"):
        x, y = pts
        return float(
            np.linalg.norm(target(x) - target(y)) / np.linalg.norm(x - y)
        )
    if name == "firmly-nonexpansive":
        return firm_violation(target, *pts)
    if name == "averaged":
        return averaged_violation(target, cert.params["alpha"], *pts)
    if name in ("uniformly-monotone", "strongly-monotone"):
        x, xstar, y, ystar = pts
        return graph_product(x, xstar, y, ystar)
    raise DomainError(f"no replay rule for class {name!r}")
