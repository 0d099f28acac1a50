"""Concrete operators, mappings, convex functions, and witness sequences.

Every entry is registered under a string identifier (part of the CLI
contract): ``cubic``, ``normal-cone-zero``, ``zero``, ``identity``,
``rotator``, ``staircase``, ``clamp-sin-map``, ``clamp-sin-op``,
``quartic-mixed``, ``cone-subdiff``, ``shift``.

Sign conventions for the clamped-sine pair: with ``T`` the clamped sine,
the registry operator ``clamp-sin-op`` is the one with resolvent
``(Id - T)/2`` (so its reflected resolvent is ``-T``); its pointwise
evaluation is the ``h``-based branch formula
:func:`clamp_sin_operator_inverse_eval`.  The ``g``-based branch formula
:func:`clamp_sin_operator_eval` evaluates the *inverse* of that operator
(reflected resolvent ``+T``).  The two closed forms are mutual inverses and
the test suite verifies each against the resolvent algebra of the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .core import (
    GraphSample,
    MonotoneOperator,
    NonexpansiveMap,
    from_neg_reflected,
    solve_increasing,
    solve_scalar_monotone,
)
from .exceptions import DomainError, NumericalFailure, SequenceOverflow, UnsupportedOperator

HALF_PI = np.pi / 2.0
# Branch points of the clamped-sine closed forms.
BREAK_OUTER = (np.pi + 2.0) / 4.0
BREAK_INNER = (np.pi - 2.0) / 4.0


# ---------------------------------------------------------------------------
# Scalar inverse solvers (the strictly increasing maps t -> t +/- sin t)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarInverseSolver:
    """Inverts a strictly increasing scalar map on a fixed interval.

    Safeguarded Newton iteration: a bisection bracket is maintained at all
    times and takes over whenever the derivative drops below ``1e-8`` (the
    map ``t - sin t`` has vanishing derivative at 0) or a Newton step leaves
    the bracket.
    """

    forward: Callable[[np.ndarray], np.ndarray]
    dforward: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    lo: float = -(np.pi + 2.0) / 2.0
    hi: float = (np.pi + 2.0) / 2.0
    # Guaranteed absolute residual bound (NumericalFailure beyond it).
    tol: float = 1e-12
    # Convergence target, relative to the solved value: the inverse error is
    # the residual amplified by 1/derivative, and h's derivative vanishes
    # cubically at 0, so an absolute target would lose all nearby accuracy.
    # Values below float resolution stop on bracket collapse instead.
    rtol: float = 1e-15
    name: str = "inverse-solver"

    def range(self) -> Tuple[float, float]:
        return float(self.forward(np.float64(self.lo))), float(
            self.forward(np.float64(self.hi))
        )

    def solve(self, value):
        v = np.asarray(value, dtype=float)
        scalar = v.ndim == 0
        vv = np.atleast_1d(v).astype(float)
        vlo, vhi = self.range()
        if np.any(vv < vlo - 1e-12) or np.any(vv > vhi + 1e-12):
            raise DomainError(
                f"{self.name}: value outside the range [{vlo:.6g}, {vhi:.6g}]"
            )
        vv = np.clip(vv, vlo, vhi)
        lo = np.full_like(vv, self.lo)
        hi = np.full_like(vv, self.hi)
        t = 0.5 * (lo + hi)
        eps = np.finfo(float).eps
        for _ in range(200):
            f = self.forward(t) - vv
            converged = np.abs(f) <= self.rtol * np.abs(vv)
            collapsed = hi - lo <= eps * np.maximum(np.abs(t), 1.0)
            done = converged | collapsed
            if np.all(done):
                break
            lo = np.where(f < 0, t, lo)
            hi = np.where(f > 0, t, hi)
            d = self.dforward(t)
            safe = d > 1e-8
            newton = np.where(safe, t - f / np.where(safe, d, 1.0), t)
            inside = safe & (newton > lo) & (newton < hi)
            t = np.where(done, t, np.where(inside, newton, 0.5 * (lo + hi)))
        if np.max(np.abs(self.forward(t) - vv)) > self.tol:
            raise NumericalFailure(f"{self.name}: residual above {self.tol}")
        return float(t[0]) if scalar else t


g_solver = ScalarInverseSolver(
    forward=lambda t: t + np.sin(t),
    dforward=lambda t: 1.0 + np.cos(t),
    name="g",
)

h_solver = ScalarInverseSolver(
    forward=lambda t: t - np.sin(t),
    dforward=lambda t: 1.0 - np.cos(t),
    name="h",
)


def solve_inverse(solver: ScalarInverseSolver, value):
    """Evaluate the inverse map at ``value`` (vectorized)."""
    return solver.solve(value)


def _t_minus_sin_series(t):
    # relative-accurate t - sin t for |t| <= 0.3
    t2 = t * t
    return (
        t
        * t2
        * (1.0 / 6.0 + t2 * (-1.0 / 120.0 + t2 * (1.0 / 5040.0 - t2 / 362880.0)))
    )


_H_SERIES_CUTOFF = 0.004


def h_value(s):
    """Evaluate ``h`` (inverse of ``t -> t - sin t``) to full relative accuracy.

    ``t - sin t`` is sub-ulp for small ``t``, so the generic solver loses the
    root near the cubic degeneracy; below the cutoff a series seed plus
    Newton steps on the series form keeps the inverse relative-accurate.
    """
    s = np.asarray(s, dtype=float)
    small = np.abs(s) <= _H_SERIES_CUTOFF
    ss = np.where(small, s, 0.0)
    w = np.cbrt(6.0 * ss)
    t = w + w**3 / 60.0
    for _ in range(3):
        f = _t_minus_sin_series(t) - ss
        d = 2.0 * np.sin(0.5 * t) ** 2
        t = np.where(d > 0, t - f / np.where(d > 0, d, 1.0), t)
    big = h_solver.solve(np.where(small, 0.0, s))
    return np.where(small, t, big)


# ---------------------------------------------------------------------------
# Clamped sine: the map, the operator pair, and the conjugate function pair
# ---------------------------------------------------------------------------


def clamp_sin(x):
    """The clamped sine: ``sin`` on ``(-pi/2, pi/2)``, saturating at +/-1.

    Nonexpansive, not a Banach contraction, yet a contraction for large
    distances.
    """
    x = np.asarray(x, dtype=float)
    inner = np.sin(np.clip(x, -HALF_PI, HALF_PI))
    return np.where(x >= HALF_PI, 1.0, np.where(x <= -HALF_PI, -1.0, inner))


def clamp_sin_operator_eval(x):
    """Branch formula (via ``g``) for the operator whose reflected resolvent
    is the clamped sine.

    ``x + 1`` below ``-(pi+2)/4``, ``g(2x) - x`` in between, ``x - 1`` above,
    where ``g`` inverts ``t -> t + sin t``.  This is the inverse of the
    registry operator ``clamp-sin-op``.
    """
    x = np.asarray(x, dtype=float)
    mid = np.abs(x) < BREAK_OUTER
    xm = np.where(mid, x, 0.0)
    mid_vals = g_solver.solve(2.0 * xm) - xm
    return np.where(
        x <= -BREAK_OUTER, x + 1.0, np.where(x >= BREAK_OUTER, x - 1.0, mid_vals)
    )


def clamp_sin_operator_inverse_eval(x):
    """Branch formula (via ``h``) for the operator whose reflected resolvent
    is *minus* the clamped sine; the evaluation behind ``clamp-sin-op``.

    ``x - 1`` below ``-(pi-2)/4``, ``h(2x) - x`` in between, ``x + 1`` above,
    where ``h`` inverts ``t -> t - sin t``.
    """
    x = np.asarray(x, dtype=float)
    mid = np.abs(x) < BREAK_INNER
    xm = np.where(mid, x, 0.0)
    mid_vals = h_value(2.0 * xm) - xm
    return np.where(
        x <= -BREAK_INNER, x - 1.0, np.where(x >= BREAK_INNER, x + 1.0, mid_vals)
    )


def clamp_sin_resolvent(x):
    """Resolvent ``(Id - T)/2`` of the ``clamp-sin-op`` operator.

    Equal to ``(x - clamp_sin(x))/2`` everywhere; the small-argument branch
    evaluates ``(x - sin x)/2`` by series so the cubic leading term survives
    where ``fl(sin x) == x``.
    """
    x = np.asarray(x, dtype=float)
    small = np.abs(x) <= _H_SERIES_CUTOFF
    series = 0.5 * _t_minus_sin_series(np.where(small, x, 0.0))
    return np.where(small, series, 0.5 * (x - clamp_sin(x)))


def clamp_sin_f(x):
    """Antiderivative of :func:`clamp_sin_operator_eval`.

    The integration constant is chosen so that :func:`clamp_sin_fstar` is the
    exact convex conjugate (Fenchel-Young holds with equality along the
    graph of the derivative).
    """
    x = np.asarray(x, dtype=float)
    mid = np.abs(x) < BREAK_OUTER
    xm = np.where(mid, x, 0.0)
    g = g_solver.solve(2.0 * xm)
    mid_vals = 0.5 * (
        2.0 * xm * g - 0.5 * g * g + np.cos(g) - xm * xm - 0.5 * (np.pi - 1.0)
    )
    return np.where(
        x <= -BREAK_OUTER,
        0.5 * (x + 1.0) ** 2,
        np.where(x >= BREAK_OUTER, 0.5 * (x - 1.0) ** 2, mid_vals),
    )


def clamp_sin_fstar(x):
    """Convex conjugate of :func:`clamp_sin_f`; its derivative is
    :func:`clamp_sin_operator_inverse_eval`."""
    x = np.asarray(x, dtype=float)
    mid = np.abs(x) < BREAK_INNER
    xm = np.where(mid, x, 0.0)
    h = h_value(2.0 * xm)
    mid_vals = 0.5 * (
        2.0 * xm * h - 0.5 * h * h - np.cos(h) - xm * xm + 0.5 * (np.pi - 1.0)
    )
    return np.where(
        x <= -BREAK_INNER,
        0.5 * (x * x - 2.0 * x),
        np.where(x >= BREAK_INNER, 0.5 * (x * x + 2.0 * x), mid_vals),
    )


# ---------------------------------------------------------------------------
# Cubic operator (x -> x^3) with Cardano resolvent
# ---------------------------------------------------------------------------


def cubic_resolvent(x):
    """Closed-form resolvent of ``x -> x^3``: solves ``y + y^3 = x``.

    Evaluated as ``a/6 - 2/a`` with ``a = cbrt(108|x| + 12 sqrt(81 x^2 + 12))``
    and odd reflection for negative ``x``; the reflection avoids the
    catastrophic cancellation the radicand suffers for large negative
    arguments.
    """
    x = np.asarray(x, dtype=float)
    ax = np.abs(x)
    a = np.cbrt(108.0 * ax + 12.0 * np.sqrt(81.0 * ax * ax + 12.0))
    return np.sign(x) * (a / 6.0 - 2.0 / a)


# ---------------------------------------------------------------------------
# Piecewise quartic/sqrt convex function (uniformly convex, not strongly)
# ---------------------------------------------------------------------------


def quartic_mixed_f(x):
    """Piecewise convex function: ``4x^2-2``, ``2x^4``, ``x^{3/2}``,
    ``3x^2/4 + 1/4`` on ``(-inf,-1], (-1,0), [0,1), [1,inf)``."""
    x = np.asarray(x, dtype=float)
    xp = np.clip(x, 0.0, None)
    return np.select(
        [x <= -1.0, x < 0.0, x < 1.0],
        [4.0 * x * x - 2.0, 2.0 * x**4, xp**1.5],
        default=0.75 * x * x + 0.25,
    )


def quartic_mixed_fprime(x):
    """Derivative of :func:`quartic_mixed_f`: continuous and strictly
    increasing, with flattening of order ``x^3`` at the origin."""
    x = np.asarray(x, dtype=float)
    xp = np.clip(x, 0.0, None)
    return np.select(
        [x <= -1.0, x < 0.0, x < 1.0],
        [8.0 * x, 8.0 * x**3, 1.5 * np.sqrt(xp)],
        default=1.5 * x,
    )


# ---------------------------------------------------------------------------
# One-dimensional Fenchel conjugation through the derivative
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FunctionEntry:
    """A differentiable convex function with optional closed-form conjugate."""

    name: str
    eval_f: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    eval_fprime: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    eval_fstar: Optional[Callable[[np.ndarray], np.ndarray]] = field(
        default=None, repr=False
    )


def fenchel_conjugate_1d(entry: FunctionEntry, xstar, tol: float = 1e-12):
    """Evaluate the convex conjugate ``f*(x*) = x* y - f(y)`` where ``y``
    solves ``f'(y) = x*`` (by bracketed bisection).

    Requires ``eval_fprime`` continuous, strictly increasing and surjective
    onto a neighbourhood of ``x*``.
    """
    xs = np.asarray(xstar, dtype=float)
    y = solve_increasing(entry.eval_fprime, xs, tol=tol, center=0.0)
    return xs * y - entry.eval_f(y)


# ---------------------------------------------------------------------------
# Rotator by a quarter turn
# ---------------------------------------------------------------------------


def rotator_eval(x):
    """The planar quarter-turn ``(x1, x2) -> (-x2, x1)``."""
    x = np.asarray(x, dtype=float)
    return np.stack([-x[..., 1], x[..., 0]], axis=-1)


def rotator_resolvent(x):
    """Resolvent of the rotator: ``(Id - S)/2`` since ``S^2 = -Id``."""
    x = np.asarray(x, dtype=float)
    return 0.5 * (x - rotator_eval(x))


def rotator_ops(x):
    """Pair ``(S(x), J_S(x))`` for the rotator."""
    return rotator_eval(x), rotator_resolvent(x)


# ---------------------------------------------------------------------------
# Cone-restricted quadratic subdifferential witnesses
# ---------------------------------------------------------------------------


def cone_subdiff_witnesses(n: int) -> Tuple[GraphSample, GraphSample]:
    """Graph-point pair ``((n,0),(2n,0))`` and ``((n,n),(2n,0))`` of the
    subdifferential of the cone-restricted quadratic.

    The pair has ``x* - y* = 0`` while ``|x - y| = n``, so the ratio
    ``|x*-y*|/|x-y|`` vanishes for every ``n``: coercivity without the
    graph growth condition.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    fn = float(n)
    first = GraphSample(np.array([fn, 0.0]), np.array([2.0 * fn, 0.0]))
    second = GraphSample(np.array([fn, fn]), np.array([2.0 * fn, 0.0]))
    return first, second


# ---------------------------------------------------------------------------
# Truncated right shift
# ---------------------------------------------------------------------------


def shift_eval(x):
    """Right shift on the trailing axis: ``(x1,...,xN) -> (0,x1,...,x_{N-1})``.

    The truncation drops the last coordinate, so the norm is nonincreasing
    and the map is (firmly) nonexpansive-compatible as a reflected
    resolvent building block.
    """
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    out[..., 1:] = x[..., :-1]
    return out


# ---------------------------------------------------------------------------
# Staircase mapping (strongly nonexpansive, not super strongly nonexpansive)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StaircaseParams:
    """Precomputed segment data for the staircase mapping.

    ``a[m] = 2^{m+1} - 2`` are the segment breakpoints, ``w[m]`` the unit
    directions with decreasing slope, ``K[m] = sqrt(4^m - 4^{-m})`` the
    segment rises, ``beta[m] = K[m]/2^m < 1`` the per-segment contraction
    factors.  ``prefix[m]`` holds the compensated partial sums
    ``sum_{j<=m} K_j w_j``.  Everything is precomputed eagerly up to ``cap``
    and read-only afterwards.
    """

    cap: int
    a: np.ndarray
    K: np.ndarray
    w: np.ndarray
    beta: np.ndarray
    kw: np.ndarray
    prefix: np.ndarray


def staircase_params(cap: int = 40) -> StaircaseParams:
    """Build staircase segment data up to index ``cap`` (``a[cap] ~ 2^{cap+1}``)."""
    if not 1 <= cap <= 40:
        raise DomainError("cap must be within 1..40")
    m = np.arange(cap + 1)
    pow2 = 2.0**m
    pow4 = 4.0**m
    a = np.where(m == 0, 0.0, 2.0 * pow2 - 2.0)
    K = np.sqrt(pow4 - 4.0 ** (-m.astype(float)))
    w = np.stack([pow2, np.ones_like(pow2)], axis=-1) / np.sqrt(pow4 + 1.0)[:, None]
    beta = K / pow2
    # rho_m = K_m / sqrt(4^m + 1), computed as a single ratio for stability
    rho = np.sqrt((pow4 - 4.0 ** (-m.astype(float))) / (pow4 + 1.0))
    kw = np.stack([pow2 * rho, rho], axis=-1)
    prefix = np.zeros((cap + 1, 2))
    for mm in range(1, cap + 1):
        prefix[mm, 0] = math.fsum(kw[1 : mm + 1, 0])
        prefix[mm, 1] = math.fsum(kw[1 : mm + 1, 1])
    return StaircaseParams(cap=cap, a=a, K=K, w=w, beta=beta, kw=kw, prefix=prefix)


_STAIRCASE_DEFAULT: Optional[StaircaseParams] = None


def default_staircase() -> StaircaseParams:
    global _STAIRCASE_DEFAULT
    if _STAIRCASE_DEFAULT is None:
        _STAIRCASE_DEFAULT = staircase_params(40)
    return _STAIRCASE_DEFAULT


def staircase_eval(x, params: Optional[StaircaseParams] = None):
    """Evaluate the staircase mapping at points of shape ``(..., 2)``.

    Zero on the left half-plane; on the segment ``a[m-1] <= x1 <= a[m]`` the
    image walks the precomputed partial sum plus the fractional step along
    ``K_m w_m``.  The output is independent of the second coordinate.
    Raises ``SequenceOverflow`` beyond the configured cap.
    """
    p = params if params is not None else default_staircase()
    pts = np.asarray(x, dtype=float)
    x1 = pts[..., 0]
    if np.any(x1 > p.a[p.cap]):
        raise SequenceOverflow(
            f"first coordinate beyond segment cap a[{p.cap}] = {p.a[p.cap]:.4g}"
        )
    idx = np.searchsorted(p.a, x1, side="left")
    safe = np.maximum(idx, 1)
    frac = (x1 - p.a[safe - 1]) / 2.0**safe
    vals = p.prefix[safe - 1] + frac[..., None] * p.kw[safe]
    return np.where((idx == 0)[..., None], 0.0, vals)


def staircase_witnesses(n: int, params: Optional[StaircaseParams] = None):
    """Witness pair ``x_n = (a_n, 0)``, ``y_n = (a_{n-1}, 0)`` together with
    the squared-norm gap ``d_n`` and the displacement gap norm ``g_n``.

    Across one segment the image difference is exactly ``K_n w_n``, so
    ``d_n = 4^n - K_n^2 = 4^{-n}`` and the displacement gap tends to
    ``(0, -1)``.  Both are returned in cancellation-free form: the direct
    float64 evaluation of ``|x-y|^2 - |Tx-Ty|^2`` underflows to zero for
    ``n >~ 13`` while the true value is ``4^{-n}``.
    """
    p = params if params is not None else default_staircase()
    if n < 1:
        raise DomainError("witness index must be >= 1")
    if n > p.cap:
        raise SequenceOverflow(f"witness index beyond cap {p.cap}")
    x = np.array([p.a[n], 0.0])
    y = np.array([p.a[n - 1], 0.0])
    d = 4.0 ** (-n)
    # 1 - rho_n^2 = (1 + 4^{-n}) / (4^n + 1); gap = (2^n (1-rho), -rho)
    u = (1.0 + 4.0 ** (-n)) / (4.0**n + 1.0)
    rho = math.sqrt(1.0 - u)
    gap1 = 2.0**n * u / (1.0 + rho)
    g = math.hypot(gap1, rho)
    return x, y, d, g


@dataclass(frozen=True)
class WitnessFamily:
    """An indexed family of point pairs used by the sequential certifiers."""

    name: str
    generator: Callable[[int], Tuple[np.ndarray, np.ndarray]] = field(repr=False)
    expected_behavior: str = ""
    n_cap: int = 60


def staircase_witness_family(params: Optional[StaircaseParams] = None) -> WitnessFamily:
    p = params if params is not None else default_staircase()

    def gen(n: int):
        x, y, _, _ = staircase_witnesses(n, p)
        return x, y

    return WitnessFamily(
        name="staircase-ssne",
        generator=gen,
        expected_behavior="squared-norm gap 4^{-n} -> 0 while displacement gap -> (0,-1)",
        n_cap=p.cap,
    )


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    kinds: Tuple[str, ...]
    default_dim: int
    parametric_dim: bool
    summary: str
    make_operator: Optional[Callable[[int], MonotoneOperator]] = field(
        default=None, repr=False
    )
    make_map: Optional[Callable[[int], NonexpansiveMap]] = field(default=None, repr=False)
    make_function: Optional[Callable[[], FunctionEntry]] = field(default=None, repr=False)
    make_witnesses: Optional[Callable] = field(default=None, repr=False)


def _op_cubic(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=1,
        resolvent=cubic_resolvent,
        name="cubic",
        direct_eval=lambda x: np.asarray(x, dtype=float) ** 3,
        inverse_direct_eval=np.cbrt,
        declared_properties={"maximally-monotone": None, "uniformly-monotone": None},
        scaled_resolvent=lambda g: (
            lambda x, _s=math.sqrt(g): cubic_resolvent(_s * np.asarray(x, dtype=float)) / _s
        ),
    )


def _op_normal_cone_zero(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=dim,
        resolvent=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        name="normal-cone-zero",
        declared_properties={
            "maximally-monotone": None,
            "strongly-monotone": None,
            "uniformly-monotone": None,
        },
        scaled_resolvent=lambda g: (lambda x: np.zeros_like(np.asarray(x, dtype=float))),
    )


def _op_zero(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=dim,
        resolvent=lambda x: np.asarray(x, dtype=float),
        name="zero",
        direct_eval=lambda x: np.zeros_like(np.asarray(x, dtype=float)),
        inverse_direct_eval=None,
        declared_properties={"maximally-monotone": None, "lipschitz": 0.0},
        scaled_resolvent=lambda g: (lambda x: np.asarray(x, dtype=float)),
    )


def _op_identity(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=dim,
        resolvent=lambda x: 0.5 * np.asarray(x, dtype=float),
        name="identity",
        direct_eval=lambda x: np.asarray(x, dtype=float),
        inverse_direct_eval=lambda x: np.asarray(x, dtype=float),
        declared_properties={
            "maximally-monotone": None,
            "uniformly-monotone": None,
            "strongly-monotone": 1.0,
            "cocoercive": 1.0,
            "lipschitz": 1.0,
        },
        scaled_resolvent=lambda g: (lambda x: np.asarray(x, dtype=float) / (1.0 + g)),
    )


def _op_rotator(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=2,
        resolvent=rotator_resolvent,
        name="rotator",
        direct_eval=rotator_eval,
        inverse_direct_eval=lambda x: -rotator_eval(x),
        declared_properties={"maximally-monotone": None, "lipschitz": 1.0},
    )


def _op_clamp_sin(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=1,
        resolvent=clamp_sin_resolvent,
        name="clamp-sin-op",
        direct_eval=clamp_sin_operator_inverse_eval,
        inverse_direct_eval=clamp_sin_operator_eval,
        declared_properties={"maximally-monotone": None, "uniformly-monotone": None},
    )


def _op_quartic(dim: int) -> MonotoneOperator:
    return MonotoneOperator(
        dim=1,
        resolvent=lambda x: solve_scalar_monotone(quartic_mixed_fprime, x),
        name="quartic-mixed",
        direct_eval=quartic_mixed_fprime,
        declared_properties={
            "maximally-monotone": None,
            "uniformly-monotone": None,
            "lipschitz": 8.0,
        },
    )


def _map_staircase(dim: int) -> NonexpansiveMap:
    return NonexpansiveMap(2, staircase_eval, name="staircase")


def _op_staircase(dim: int) -> MonotoneOperator:
    return replace(from_neg_reflected(_map_staircase(2)), name="staircase-op")


def _map_clamp_sin(dim: int) -> NonexpansiveMap:
    return NonexpansiveMap(1, clamp_sin, name="clamp-sin-map")


def _map_rotator(dim: int) -> NonexpansiveMap:
    return NonexpansiveMap(2, rotator_eval, name="rotator")


def _map_shift(dim: int) -> NonexpansiveMap:
    return NonexpansiveMap(dim, shift_eval, name=f"shift[{dim}]")


def _op_shift(dim: int) -> MonotoneOperator:
    return replace(from_neg_reflected(_map_shift(dim)), name=f"shift-op[{dim}]")


def _fn_cubic() -> FunctionEntry:
    return FunctionEntry(
        name="cubic",
        eval_f=lambda x: 0.25 * np.asarray(x, dtype=float) ** 4,
        eval_fprime=lambda x: np.asarray(x, dtype=float) ** 3,
        eval_fstar=lambda s: 0.75 * np.abs(np.asarray(s, dtype=float)) ** (4.0 / 3.0),
    )


def _fn_quartic() -> FunctionEntry:
    return FunctionEntry(
        name="quartic-mixed",
        eval_f=quartic_mixed_f,
        eval_fprime=quartic_mixed_fprime,
        eval_fstar=None,
    )


def _fn_clamp_sin() -> FunctionEntry:
    return FunctionEntry(
        name="clamp-sin",
        eval_f=clamp_sin_f,
        eval_fprime=clamp_sin_operator_eval,
        eval_fstar=clamp_sin_fstar,
    )


_REGISTRY: Dict[str, GalleryEntry] = {}


def _register(entry: GalleryEntry):
    _REGISTRY[entry.name] = entry


_register(
    GalleryEntry(
        name="cubic",
        kinds=("operator", "function"),
        default_dim=1,
        parametric_dim=False,
        summary="x -> x^3 with Cardano resolvent; uniformly monotone, inverse is not",
        make_operator=_op_cubic,
        make_function=_fn_cubic,
    )
)
_register(
    GalleryEntry(
        name="normal-cone-zero",
        kinds=("operator",),
        default_dim=1,
        parametric_dim=True,
        summary="normal cone of {0}: resolvent == 0, reflected resolvent == -Id",
        make_operator=_op_normal_cone_zero,
    )
)
_register(
    GalleryEntry(
        name="zero",
        kinds=("operator",),
        default_dim=1,
        parametric_dim=True,
        summary="zero operator: resolvent == Id, reflected resolvent == Id",
        make_operator=_op_zero,
    )
)
_register(
    GalleryEntry(
        name="identity",
        kinds=("operator",),
        default_dim=1,
        parametric_dim=True,
        summary="identity operator: 1-strongly monotone and 1-cocoercive",
        make_operator=_op_identity,
    )
)
_register(
    GalleryEntry(
        name="rotator",
        kinds=("operator", "map"),
        default_dim=2,
        parametric_dim=False,
        summary="quarter-turn rotation: isometry, monotone but not uniformly",
        make_operator=_op_rotator,
        make_map=_map_rotator,
    )
)
_register(
    GalleryEntry(
        name="staircase",
        kinds=("map", "operator", "witnesses"),
        default_dim=2,
        parametric_dim=False,
        summary="piecewise-linear staircase: strongly nonexpansive, not super strongly",
        make_operator=_op_staircase,
        make_map=_map_staircase,
        make_witnesses=staircase_witness_family,
    )
)
_register(
    GalleryEntry(
        name="clamp-sin-map",
        kinds=("map",),
        default_dim=1,
        parametric_dim=False,
        summary="clamped sine: contraction for large distances, not Banach",
        make_map=_map_clamp_sin,
    )
)
_register(
    GalleryEntry(
        name="clamp-sin-op",
        kinds=("operator", "function"),
        default_dim=1,
        parametric_dim=False,
        summary="operator with reflected resolvent -clamp_sin; self-dually uniformly monotone",
        make_operator=_op_clamp_sin,
        make_function=_fn_clamp_sin,
    )
)
_register(
    GalleryEntry(
        name="quartic-mixed",
        kinds=("operator", "function"),
        default_dim=1,
        parametric_dim=False,
        summary="piecewise quartic/sqrt derivative: uniformly but not strongly monotone",
        make_operator=_op_quartic,
        make_function=_fn_quartic,
    )
)
_register(
    GalleryEntry(
        name="cone-subdiff",
        kinds=("witnesses",),
        default_dim=2,
        parametric_dim=False,
        summary="cone-restricted quadratic subdifferential: coercive, growth condition fails",
        make_witnesses=lambda: cone_subdiff_witnesses,
    )
)
_register(
    GalleryEntry(
        name="shift",
        kinds=("map", "operator"),
        default_dim=256,
        parametric_dim=True,
        summary="truncated right shift; operator realized through J = (Id - R)/2",
        make_map=_map_shift,
        make_operator=_op_shift,
    )
)


def names() -> Tuple[str, ...]:
    return tuple(_REGISTRY)


def entry(name: str) -> GalleryEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnsupportedOperator(f"unknown gallery entry {name!r}") from None


def operator(name: str, dim: Optional[int] = None) -> MonotoneOperator:
    e = entry(name)
    if e.make_operator is None:
        raise UnsupportedOperator(f"gallery entry {name!r} exposes no operator")
    d = e.default_dim if dim is None else dim
    if not e.parametric_dim and dim is not None and dim != e.default_dim:
        raise DomainError(f"{name} has fixed dimension {e.default_dim}")
    return e.make_operator(d)


def mapping(name: str, dim: Optional[int] = None) -> NonexpansiveMap:
    e = entry(name)
    if e.make_map is None:
        raise UnsupportedOperator(f"gallery entry {name!r} exposes no mapping")
    d = e.default_dim if dim is None else dim
    if not e.parametric_dim and dim is not None and dim != e.default_dim:
        raise DomainError(f"{name} has fixed dimension {e.default_dim}")
    return e.make_map(d)


def function(name: str) -> FunctionEntry:
    e = entry(name)
    if e.make_function is None:
        raise UnsupportedOperator(f"gallery entry {name!r} exposes no function")
    return e.make_function()


def witnesses(name: str):
    e = entry(name)
    if e.make_witnesses is None:
        raise UnsupportedOperator(f"gallery entry {name!r} exposes no witnesses")
    return e.make_witnesses()
