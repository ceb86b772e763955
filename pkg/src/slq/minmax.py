"""Minmax machinery for spread lower bounds on the unit sphere.

For a symmetric matrix W and unit vector x, the spread satisfies
s(W) >= f(x) = 2 ||W x - (x' W x) x||.  Applied to the signless Laplacian
this gives vector-parameterized lower bounds on s_Q and a projected
gradient ascent heuristic eta that maximizes f over the sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph, degree_profile
from .spectra import signless_laplacian_matrix

UNIT_TOL = 1e-8
# tangential gradient below this (relative) scale counts as stationary
STATIONARY_TOL = 1e-9


def unit_vector(v) -> np.ndarray:
    """Normalize to unit length; rejects zero or non-finite input."""
    v = np.asarray(v, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("expected a 1-d vector")
    if not np.isfinite(v).all():
        raise ValueError("vector entries must be finite")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return v / norm


def _as_matrix(w) -> np.ndarray:
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError("matrix must be square")
    return w


def _check_unit(x: np.ndarray):
    if abs(float(np.linalg.norm(x)) - 1.0) > UNIT_TOL:
        raise ValueError("x must be a unit vector")


def f_value(w, x) -> float:
    """f(x) = 2 ||W x - (x' W x) x|| for unit x."""
    w = _as_matrix(w)
    x = np.asarray(x, dtype=np.float64)
    _check_unit(x)
    wx = w @ x
    r = wx - (x @ wx) * x
    return 2.0 * float(np.linalg.norm(r))


def f_value_quadratic(w, x) -> float:
    """Same value through the radicand form 2 sqrt(x'W^2x - (x'Wx)^2)."""
    w = _as_matrix(w)
    x = np.asarray(x, dtype=np.float64)
    _check_unit(x)
    wx = w @ x
    rad = float(wx @ wx) - float(x @ wx) ** 2
    return 2.0 * np.sqrt(max(rad, 0.0))


def bound_from_vector(w, y) -> float:
    """Spread lower bound from any nonzero y: the f value of y/||y||,
    written scale-free as 2 sqrt(Sy^2 St^2 - (Syt)^2)/Sy^2 with t = W y."""
    w = _as_matrix(w)
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.shape[0] != w.shape[0]:
        raise ValueError("y must be a vector matching the matrix order")
    if not np.isfinite(y).all():
        raise ValueError("vector entries must be finite")
    yy = float(y @ y)
    if yy == 0.0:
        raise ValueError("y must be nonzero")
    t = w @ y
    rad = yy * float(t @ t) - float(y @ t) ** 2
    return 2.0 * np.sqrt(max(rad, 0.0)) / yy


def grad_f_squared(w, x) -> np.ndarray:
    """Ambient gradient of f(x)^2 = 4(x'W^2x - (x'Wx)^2): 8W^2x - 16(x'Wx)Wx."""
    w = _as_matrix(w)
    x = np.asarray(x, dtype=np.float64)
    wx = w @ x
    return 8.0 * (w @ wx) - 16.0 * float(x @ wx) * wx


def numerical_grad_f_squared(w, x, h: float = 1e-6) -> np.ndarray:
    """Central finite differences of the ambient f^2, for cross-checking."""
    w = _as_matrix(w)
    x = np.asarray(x, dtype=np.float64)

    def ambient(v):
        wv = w @ v
        return 4.0 * (float(wv @ wv) - float(v @ wv) ** 2)

    g = np.zeros_like(x)
    for i in range(x.shape[0]):
        e = np.zeros_like(x)
        e[i] = h
        g[i] = (ambient(x + e) - ambient(x - e)) / (2.0 * h)
    return g


@dataclass(frozen=True)
class SearchConfig:
    """Projected gradient ascent settings."""

    iterations: int = 10
    step: float = 0.1
    step_mode: str = "constant"
    gradient_mode: str = "analytic"
    fd_step: float = 1e-6

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if not self.step > 0.0:
            raise ValueError("step must be positive")
        if self.step_mode not in ("constant", "decreasing"):
            raise ValueError("step_mode must be 'constant' or 'decreasing'")
        if self.gradient_mode not in ("analytic", "numerical"):
            raise ValueError("gradient_mode must be 'analytic' or 'numerical'")
        if not self.fd_step > 0.0:
            raise ValueError("fd_step must be positive")


@dataclass(frozen=True, eq=False)
class SearchTrace:
    """Full record of one gradient search run."""

    initial_value: float
    values: tuple
    best_value: float
    best_vector: np.ndarray
    iteration_of_best: int
    perturbed: bool
    stagnated_at: Optional[int]


def gradient_search(w, config: Optional[SearchConfig] = None) -> SearchTrace:
    """Maximize f over the unit sphere by projected gradient ascent.

    Starts from the normalized all-ones vector.  Each iteration moves along
    the tangential component of the f^2 gradient (the ambient gradient
    projected onto the sphere's tangent space; the radial part only
    rescales x) with step s_k = s (constant) or s/sqrt(k) (decreasing),
    then renormalizes.  A start point whose tangential gradient vanishes
    (e.g. regular graphs, where the all-ones vector is an eigenvector) is
    nudged once in coordinate 0 so the search can leave the stationary
    point; later stationary iterates stop moving and the trace records
    where.  Returns the best value ever seen, including the start.
    """
    w = _as_matrix(w)
    cfg = config or SearchConfig()

    def gradient(x):
        if cfg.gradient_mode == "analytic":
            return grad_f_squared(w, x)
        return numerical_grad_f_squared(w, x, h=cfg.fd_step)

    n = w.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    initial = f_value(w, x)
    best = initial
    best_x = x.copy()
    best_iter = 0

    g = gradient(x)
    tang = g - (g @ x) * x
    perturbed = False
    if float(np.linalg.norm(tang)) <= STATIONARY_TOL * max(1.0, float(np.linalg.norm(g))):
        x = x.copy()
        x[0] += 1e-3
        x /= np.linalg.norm(x)
        perturbed = True

    values = []
    stagnated_at = None
    for k in range(1, cfg.iterations + 1):
        g = gradient(x)
        tang = g - (g @ x) * x
        tnorm = float(np.linalg.norm(tang))
        if tnorm <= STATIONARY_TOL * max(1.0, float(np.linalg.norm(g))):
            if stagnated_at is None:
                stagnated_at = k
            values.append(f_value(w, x))
            continue
        step = cfg.step if cfg.step_mode == "constant" else cfg.step / np.sqrt(k)
        x = x + step * (tang / tnorm)
        x /= np.linalg.norm(x)
        val = f_value(w, x)
        values.append(val)
        if val > best:
            best = val
            best_x = x.copy()
            best_iter = k
    return SearchTrace(
        initial_value=initial,
        values=tuple(values),
        best_value=best,
        best_vector=best_x,
        iteration_of_best=best_iter,
        perturbed=perturbed,
        stagnated_at=stagnated_at,
    )


# ---------------------------------------------------------------------------
# graph-level wrappers


def minmax_eta(g: Graph, config: Optional[SearchConfig] = None) -> SearchTrace:
    """Gradient search on the signless Laplacian of g."""
    return gradient_search(signless_laplacian_matrix(g), config)


def ncon_value(n: int, m: int, m1: int) -> float:
    """All-ones vector bound in closed form: (4/n) sqrt(n M1 - 4 m^2)."""
    return 4.0 / n * np.sqrt(max(n * m1 - 4 * m * m, 0))


def degree_vector_value(profile) -> float:
    """Degree-vector bound via the explicit degree formula (y = d,
    t = d^2 + d2 entrywise, no matrix product)."""
    y = profile.degrees.astype(np.float64)
    t = y * y + profile.d2.astype(np.float64)
    yy = float(y @ y)
    if yy == 0.0:
        raise ValueError("degree vector bound needs at least one edge")
    rad = yy * float(t @ t) - float(y @ t) ** 2
    return 2.0 * np.sqrt(max(rad, 0.0)) / yy


def inverse_degree_value(g: Graph) -> float:
    """Inverse-degree bound via its displayed formula (y_i = 1/d_i,
    t_i = 1 + sum of 1/d_j over neighbors j)."""
    if min(g.degrees) == 0:
        raise ValueError("inverse-degree bound needs a graph without isolated vertices")
    y = 1.0 / np.asarray(g.degrees, dtype=np.float64)
    t = np.ones(g.n)
    for u, v in g.edges:
        t[u] += y[v]
        t[v] += y[u]
    yy = float(y @ y)
    rad = yy * float(t @ t) - float(y @ t) ** 2
    return 2.0 * np.sqrt(max(rad, 0.0)) / yy


def inverse_cubed_degree_value(g: Graph) -> float:
    """Inverse-cubed-degree bound, computed through bound_from_vector."""
    if min(g.degrees) == 0:
        raise ValueError(
            "inverse-cubed-degree bound needs a graph without isolated vertices"
        )
    d = np.asarray(g.degrees, dtype=np.float64)
    return bound_from_vector(signless_laplacian_matrix(g), d**-3)


def named_vector_bounds(g: Graph):
    """The four standard vector choices as BoundResults: all-ones (Ncon),
    degree vector, inverse degrees (Z1), inverse cubed degrees (Z2)."""
    from .bounds import BoundResult

    profile = degree_profile(g)
    results = [
        BoundResult(
            name="Ncon",
            value=ncon_value(g.n, g.m, profile.m1),
            direction="lower",
            target="s_Q",
            assumptions=frozenset(),
            inputs_used=("n", "m", "M1"),
        ),
        BoundResult(
            name="degree_vector",
            value=degree_vector_value(profile),
            direction="lower",
            target="s_Q",
            assumptions=frozenset(),
            inputs_used=("degrees", "d2"),
        ),
        BoundResult(
            name="Z1",
            value=inverse_degree_value(g),
            direction="lower",
            target="s_Q",
            assumptions=frozenset(),
            inputs_used=("degrees",),
        ),
        BoundResult(
            name="Z2",
            value=inverse_cubed_degree_value(g),
            direction="lower",
            target="s_Q",
            assumptions=frozenset(),
            inputs_used=("degrees", "Q"),
        ),
    ]
    return results


def one_step_analytic_bound(g: Graph, step: float = 0.1):
    """Single projected gradient step from the all-ones start point.

    Valid lower bound by the minmax principle regardless of step size; on
    regular graphs the start is stationary and the value is 0.
    """
    from .bounds import BoundResult

    w = signless_laplacian_matrix(g)
    n = g.n
    x = np.full(n, 1.0 / np.sqrt(n))
    g_vec = grad_f_squared(w, x)
    tang = g_vec - (g_vec @ x) * x
    tnorm = float(np.linalg.norm(tang))
    if tnorm <= STATIONARY_TOL * max(1.0, float(np.linalg.norm(g_vec))):
        value = f_value(w, x)
    else:
        x = x + step * (tang / tnorm)
        x /= np.linalg.norm(x)
        value = f_value(w, x)
    return BoundResult(
        name="one_step",
        value=value,
        direction="lower",
        target="s_Q",
        assumptions=frozenset(),
        inputs_used=("Q",),
    )
