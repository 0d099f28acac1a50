"""Fixed-point and splitting iterations with full trace recording.

Traces record iterates, optional shadow iterates ``y_n = J_A(x_n)``,
residuals, distances to a reference point, and weak-convergence probes
(fixed coordinates of the iterate).  The paper-level stopping questions are
resolved by a :class:`StoppingRule` with explicit defaults; a period-two
oscillation (the failure mode of Peaceman-Rachford without uniform
monotonicity of the second operator) is detected and flagged on the trace.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from .core import MonotoneOperator, NonexpansiveMap, as_point
from .combine import dr_operator, fb_operator, pr_operator
from .exceptions import DimensionMismatch, DomainError

TERM_CONVERGED = "converged"
TERM_MAX_ITER = "max-iter"
TERM_DIVERGED = "diverged"

# Detection threshold for the flagged period-2 pattern.
PERIOD2_TOL = 1e-12


@dataclass(frozen=True)
class StoppingRule:
    """Stop on small steps, iteration budget, or norm blow-up."""

    max_iter: int = 100_000
    tol_residual: float = 1e-10
    divergence_guard: float = 1e12

    def __post_init__(self):
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1")
        if self.tol_residual < 0:
            raise DomainError("tol_residual must be >= 0")


@dataclass
class IterationTrace:
    """Recorded splitting run.

    ``iterates`` has shape ``(n_steps + 1, dim)``; ``residuals[n]`` is
    ``|x_{n+1} - x_n|`` (one entry per step taken).  ``shadows`` mirror the
    iterates when a shadow map was supplied.  ``weak_probes`` holds the
    probed coordinates of each iterate.
    """

    iterates: np.ndarray
    residuals: np.ndarray
    termination: str
    shadows: Optional[np.ndarray] = None
    distances_to_ref: Optional[np.ndarray] = None
    weak_probes: Optional[np.ndarray] = None
    probe_coords: Tuple[int, ...] = ()
    period2: bool = False
    name: str = "iterate"

    @property
    def n_steps(self) -> int:
        return len(self.iterates) - 1

    @property
    def final(self) -> np.ndarray:
        return self.iterates[-1]

    @property
    def final_shadow(self) -> Optional[np.ndarray]:
        return None if self.shadows is None else self.shadows[-1]

    def write_csv(self, path, config: Optional[dict] = None):
        """Write the trace as CSV: one row per iterate, floats with 17
        significant digits.  An optional leading ``#`` comment line embeds
        the resolved run configuration as JSON."""
        d = self.iterates.shape[1]
        header = ["iter"] + [f"x_{i}" for i in range(d)]
        if self.shadows is not None:
            header += [f"y_{i}" for i in range(d)]
        header += ["residual"]
        if self.distances_to_ref is not None:
            header += ["dist_ref"]
        header += [f"probe_{k}" for k in self.probe_coords]
        with open(path, "w", newline="", encoding="utf-8") as fh:
            if config is not None:
                fh.write("# " + json.dumps(config, sort_keys=True) + "\n")
            writer = csv.writer(fh)
            writer.writerow(header)
            for n in range(len(self.iterates)):
                row = [str(n)]
                row += [f"{v:.17g}" for v in self.iterates[n]]
                if self.shadows is not None:
                    row += [f"{v:.17g}" for v in self.shadows[n]]
                row += [f"{self.residuals[n]:.17g}" if n < len(self.residuals) else ""]
                if self.distances_to_ref is not None:
                    row += [f"{self.distances_to_ref[n]:.17g}"]
                row += [f"{self.iterates[n][k]:.17g}" for k in self.probe_coords]
                writer.writerow(row)


def _detect_period2(iterates: np.ndarray, residuals: np.ndarray, tol_residual: float,
                    window: int = 6) -> bool:
    n = len(iterates)
    if n < 3:
        return False
    hits = 0
    checks = 0
    for idx in range(max(0, n - window), n - 2):
        checks += 1
        if (
            np.linalg.norm(iterates[idx + 2] - iterates[idx]) <= PERIOD2_TOL
            and residuals[idx] > tol_residual
        ):
            hits += 1
    return checks > 0 and hits == checks


def iterate(T: Union[NonexpansiveMap, Callable], x0, stop: StoppingRule = StoppingRule(),
            *, shadow: Optional[Callable] = None, ref=None,
            probe_coords: Optional[Sequence[int]] = None,
            name: str = "iterate") -> IterationTrace:
    """Run ``x_{n+1} = T(x_n)`` until a stopping condition fires.

    ``shadow`` (when given) is evaluated at every iterate and recorded
    alongside; ``ref`` records distances to a supplied reference point; the
    artifact never claims to know the fixed-point set a priori.
    """
    ev = T.eval if isinstance(T, NonexpansiveMap) else T
    x = as_point(x0, dim=T.dim if isinstance(T, NonexpansiveMap) else None)
    xs = [x]
    residuals = []
    termination = TERM_MAX_ITER
    for _ in range(stop.max_iter):
        if np.linalg.norm(x) > stop.divergence_guard:
            termination = TERM_DIVERGED
            break
        x1 = np.asarray(ev(x), dtype=float)
        r = float(np.linalg.norm(x1 - x))
        xs.append(x1)
        residuals.append(r)
        x = x1
        if r <= stop.tol_residual:
            termination = TERM_CONVERGED
            break
    iterates = np.stack(xs)
    residuals = np.array(residuals)
    shadows = None
    if shadow is not None:
        shadows = np.stack([np.asarray(shadow(v), dtype=float) for v in xs])
    dists = None
    if ref is not None:
        refp = as_point(ref, dim=iterates.shape[1])
        dists = np.linalg.norm(iterates - refp, axis=1)
    probes = tuple(int(k) for k in probe_coords) if probe_coords is not None else ()
    weak = iterates[:, list(probes)] if probes else None
    period2 = termination != TERM_CONVERGED and _detect_period2(
        iterates, residuals, stop.tol_residual
    )
    return IterationTrace(
        iterates=iterates,
        residuals=residuals,
        termination=termination,
        shadows=shadows,
        distances_to_ref=dists,
        weak_probes=weak,
        probe_coords=probes,
        period2=period2,
        name=name,
    )


def peaceman_rachford(A: MonotoneOperator, B: MonotoneOperator, x0,
                      stop: StoppingRule = StoppingRule(), *, ref=None,
                      probe_coords: Optional[Sequence[int]] = None) -> IterationTrace:
    """Iterate ``T = R_B R_A`` recording shadows ``y_n = J_A(x_n)``."""
    T = pr_operator(A, B)
    return iterate(
        T, x0, stop, shadow=A.resolvent, ref=ref, probe_coords=probe_coords,
        name=T.name,
    )


def douglas_rachford(A: MonotoneOperator, B: MonotoneOperator, x0,
                     stop: StoppingRule = StoppingRule(), *, ref=None,
                     probe_coords: Optional[Sequence[int]] = None) -> IterationTrace:
    """Iterate ``T = (Id + R_B R_A)/2`` recording shadows ``y_n = J_A(x_n)``."""
    T = dr_operator(A, B)
    return iterate(
        T, x0, stop, shadow=A.resolvent, ref=ref, probe_coords=probe_coords,
        name=T.name,
    )


def forward_backward(A: MonotoneOperator, B: MonotoneOperator, gamma: float, x0,
                     stop: StoppingRule = StoppingRule(), *, ref=None,
                     probe_coords: Optional[Sequence[int]] = None) -> IterationTrace:
    """Iterate ``T = J_{gamma B}(Id - gamma A)`` (primal iterates only)."""
    T = fb_operator(A, B, gamma)
    return iterate(T, x0, stop, ref=ref, probe_coords=probe_coords, name=T.name)


@dataclass
class FejerReport:
    """Monotonicity audit of the distances to a candidate fixed point."""

    distances: np.ndarray
    nonincreasing: bool
    first_violation: Optional[int]
    slack: float = PERIOD2_TOL


def fejer_check(trace: IterationTrace, xbar, slack: float = 1e-12) -> FejerReport:
    """Verify ``|x_n - xbar|`` is nonincreasing within ``slack``; report the
    first violating index otherwise."""
    if len(trace.iterates) == 0:
        raise DomainError("empty trace")
    ref = as_point(xbar, dim=trace.iterates.shape[1])
    d = np.linalg.norm(trace.iterates - ref, axis=1)
    bad = np.nonzero(d[1:] > d[:-1] + slack)[0]
    return FejerReport(
        distances=d,
        nonincreasing=bad.size == 0,
        first_violation=int(bad[0]) if bad.size else None,
        slack=slack,
    )
