"""Ambient vector arithmetic, the monotone-operator abstraction, and the
resolvent identity layer.

An operator ``A`` is represented primarily by its resolvent oracle
``J = (Id + A)^{-1}``; a direct single-valued evaluation ``x -> A(x)`` is
optional metadata (set-valued operators such as the normal cone of ``{0}``
have a trivial resolvent but no function evaluation).  Everything in this
module is a pure function of its inputs; operators are immutable after
construction.

Oracle convention: all oracles are vectorized over leading axes.  Operators
with ``dim >= 2`` map arrays of shape ``(..., dim)`` to the same shape;
one-dimensional operators act elementwise on arrays of any shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, NamedTuple, Optional

import numpy as np

from .exceptions import (
    DimensionMismatch,
    DomainError,
    NumericalFailure,
    UnsupportedOperator,
)

Oracle = Callable[[np.ndarray], np.ndarray]

# Residual tolerances: closed-form resolvents are exact up to rounding,
# root-found resolvents stop on an absolute residual.
TOL_RESOLVENT_CLOSED = 1e-12
TOL_RESOLVENT_ROOT = 1e-10

# Bracket expansion doubles an initial radius of 1 up to 2**60 before failing.
BRACKET_RADIUS0 = 1.0
BRACKET_CAP = 2.0**60


def as_point(x, dim: Optional[int] = None) -> np.ndarray:
    """Coerce ``x`` to a finite 1-D float64 vector.

    Raises ``DomainError`` on non-finite coordinates and
    ``DimensionMismatch`` when ``dim`` is given and does not match.
    """
    p = np.atleast_1d(np.asarray(x, dtype=float))
    if p.ndim != 1 or p.size < 1:
        raise DomainError(f"expected a 1-D vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise DomainError("point has non-finite coordinates")
    if dim is not None and p.size != dim:
        raise DimensionMismatch(f"expected dim {dim}, got {p.size}")
    return p


@dataclass(frozen=True)
class MonotoneOperator:
    """A maximally monotone operator represented by its resolvent oracle.

    ``direct_eval`` (if present) evaluates ``A`` itself and must satisfy the
    parametrization identity ``J(x) + A(J(x)) = x``.  ``inverse_direct_eval``
    optionally carries a closed form for ``A^{-1}`` so that :func:`invert`
    round-trips exactly.  ``declared_properties`` maps trusted class tags
    (``"uniformly-monotone"``, ``"cocoercive"``, ...) to an optional
    parameter value; certifiers never read these, reports only compare
    against them.  ``scaled_resolvent``, when registered, returns a closed
    form resolvent oracle for ``gamma * A``.
    """

    dim: int
    resolvent: Oracle = field(repr=False)
    name: str = "A"
    direct_eval: Optional[Oracle] = field(default=None, repr=False)
    inverse_direct_eval: Optional[Oracle] = field(default=None, repr=False)
    declared_properties: Mapping[str, Optional[float]] = field(default_factory=dict)
    scaled_resolvent: Optional[Callable[[float], Oracle]] = field(default=None, repr=False)

    def declares(self, tag: str) -> bool:
        return tag in self.declared_properties

    def declared(self, tag: str) -> Optional[float]:
        return self.declared_properties.get(tag)


@dataclass(frozen=True)
class NonexpansiveMap:
    """A single-valued mapping declared (or certified) nonexpansive."""

    dim: int
    eval: Oracle = field(repr=False)
    name: str = "T"

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.eval(x)


class GraphSample(NamedTuple):
    """A graph point ``(x, x*)`` with ``x* in A(x)``, possibly batched."""

    x: np.ndarray
    xstar: np.ndarray


def _check_dim(dim: int, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if dim > 1 and (x.ndim == 0 or x.shape[-1] != dim):
        raise DimensionMismatch(f"operator of dim {dim}, point of shape {x.shape}")
    return x


def resolvent(A: MonotoneOperator, x) -> np.ndarray:
    """Evaluate ``J_A(x)``."""
    return A.resolvent(_check_dim(A.dim, x))


def reflected_resolvent(A: MonotoneOperator, x) -> np.ndarray:
    """Evaluate ``R_A(x) = 2 J_A(x) - x``."""
    x = _check_dim(A.dim, x)
    return 2.0 * A.resolvent(x) - x


def resolvent_map(A: MonotoneOperator) -> NonexpansiveMap:
    """The resolvent as a (firmly nonexpansive) mapping."""
    return NonexpansiveMap(A.dim, A.resolvent, name=f"J[{A.name}]")


def reflected_map(A: MonotoneOperator) -> NonexpansiveMap:
    """The reflected resolvent as a nonexpansive mapping."""
    return NonexpansiveMap(
        A.dim, lambda x: 2.0 * A.resolvent(x) - x, name=f"R[{A.name}]"
    )


_INVERT_RULES = {
    "maximally-monotone": ("maximally-monotone", False),
    "strongly-monotone": ("cocoercive", True),
    "cocoercive": ("strongly-monotone", True),
}


def invert(A: MonotoneOperator) -> MonotoneOperator:
    """The inverse operator, realized through ``J_{A^{-1}} = Id - J_A``.

    Declared properties follow the inversion rules: maximal monotonicity is
    kept, strong monotonicity and cocoercivity swap (same constant), all
    other tags are dropped because they do not transfer in general.
    """
    props = {}
    for tag, value in A.declared_properties.items():
        rule = _INVERT_RULES.get(tag)
        if rule is not None:
            props[rule[0]] = value
    res = A.resolvent
    return MonotoneOperator(
        dim=A.dim,
        resolvent=lambda x: np.asarray(x, dtype=float) - res(x),
        name=f"{A.name}^-1",
        direct_eval=A.inverse_direct_eval,
        inverse_direct_eval=A.direct_eval,
        declared_properties=props,
    )


def from_neg_reflected(T: NonexpansiveMap) -> MonotoneOperator:
    """The maximally monotone operator whose reflected resolvent is ``-T``.

    Its resolvent is ``x -> (x - T(x)) / 2``; maximal monotonicity follows
    from the nonexpansiveness of ``T``.
    """
    ev = T.eval
    return MonotoneOperator(
        dim=T.dim,
        resolvent=lambda x: 0.5 * (np.asarray(x, dtype=float) - ev(x)),
        name=f"opneg[{T.name}]",
        declared_properties={"maximally-monotone": None},
    )


def from_firmly_nonexpansive(F: NonexpansiveMap) -> MonotoneOperator:
    """The maximally monotone operator whose resolvent is ``F``."""
    return MonotoneOperator(
        dim=F.dim,
        resolvent=F.eval,
        name=f"op[{F.name}]",
        declared_properties={"maximally-monotone": None},
    )


def minty_sample(A: MonotoneOperator, z) -> GraphSample:
    """Graph point produced by the parametrization ``z -> (J z, z - J z)``.

    Batched: ``z`` of shape ``(n, dim)`` yields batched graph samples.
    """
    z = _check_dim(A.dim, z)
    jz = A.resolvent(z)
    return GraphSample(x=jz, xstar=z - jz)


def solve_increasing(
    fun: Callable[[np.ndarray], np.ndarray],
    target,
    *,
    tol: float = 1e-12,
    center=None,
    radius0: float = BRACKET_RADIUS0,
    radius_cap: float = BRACKET_CAP,
    max_iter: int = 240,
):
    """Solve ``fun(t) = target`` for a continuous nondecreasing ``fun``.

    Bracket expansion (doubling from ``radius0`` up to ``radius_cap``)
    followed by bisection; stops when the residual ``|fun(t) - target|``
    drops below ``tol`` at every element.  Vectorized over ``target``.
    """
    t = np.asarray(target, dtype=float)
    scalar = t.ndim == 0
    tgt = np.atleast_1d(t).astype(float)
    c = np.full_like(tgt, 0.0) if center is None else np.broadcast_to(
        np.asarray(center, dtype=float), tgt.shape
    ).astype(float)

    r = np.full_like(tgt, radius0)
    lo = c - r
    hi = c + r
    for _ in range(80):
        need_lo = fun(lo) - tgt > 0
        need_hi = fun(hi) - tgt < 0
        if not (need_lo.any() or need_hi.any()):
            break
        if np.any(r > radius_cap):
            raise NumericalFailure("bracket expansion exceeded configured cap")
        r = np.where(need_lo | need_hi, 2.0 * r, r)
        lo = np.where(need_lo, c - r, lo)
        hi = np.where(need_hi, c + r, hi)
    else:
        raise NumericalFailure("bracket expansion exceeded configured cap")

    mid = 0.5 * (lo + hi)
    for _ in range(max_iter):
        fm = fun(mid) - tgt
        if np.max(np.abs(fm)) <= tol:
            return float(mid[0]) if scalar else mid
        lo = np.where(fm < 0, mid, lo)
        hi = np.where(fm > 0, mid, hi)
        nxt = 0.5 * (lo + hi)
        if np.array_equal(nxt, mid):
            break
        mid = nxt
    raise NumericalFailure(f"bisection stalled above residual tolerance {tol}")


def solve_scalar_monotone(a: Callable[[np.ndarray], np.ndarray], x, tol: float = TOL_RESOLVENT_ROOT):
    """Solve ``y + a(y) = x`` for a continuous nondecreasing scalar ``a``.

    Returns ``y`` with ``|y + a(y) - x| <= tol``; the root finder behind
    resolvents of one-dimensional operators that lack a closed form.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    return solve_increasing(lambda t: t + a(t), x, tol=tol, center=x)


def scale(A: MonotoneOperator, gamma: float) -> MonotoneOperator:
    """The operator ``gamma * A`` (``gamma > 0``), resolvent included.

    Uses a registered closed form when the operator provides one, falls back
    to the scalar root finder for one-dimensional operators with a direct
    evaluation, and raises ``UnsupportedOperator`` otherwise.
    """
    if not gamma > 0:
        raise DomainError("gamma must be positive")
    if gamma == 1.0:
        return A
    props = {}
    for tag, value in A.declared_properties.items():
        if tag == "cocoercive" and value is not None:
            props[tag] = value / gamma
        elif tag == "strongly-monotone" and value is not None:
            props[tag] = value * gamma
        elif tag == "lipschitz" and value is not None:
            props[tag] = value * gamma
        else:
            props[tag] = value

    if A.scaled_resolvent is not None:
        res = A.scaled_resolvent(gamma)
    elif A.dim == 1 and A.direct_eval is not None:
        direct = A.direct_eval

        def res(x, _g=gamma, _a=direct):
            return solve_scalar_monotone(lambda t: _g * _a(t), x)

    else:
        raise UnsupportedOperator(
            f"no closed-form scaling and no usable direct evaluation for {A.name}"
        )

    direct_eval = None
    if A.direct_eval is not None:
        base = A.direct_eval
        direct_eval = lambda x, _g=gamma, _a=base: _g * _a(x)  # noqa: E731

    return MonotoneOperator(
        dim=A.dim,
        resolvent=res,
        name=f"{gamma}*{A.name}",
        direct_eval=direct_eval,
        declared_properties=props,
    )


def with_properties(A: MonotoneOperator, **tags) -> MonotoneOperator:
    """Copy of ``A`` with extra declared property tags."""
    props = dict(A.declared_properties)
    props.update(tags)
    return replace(A, declared_properties=props)
