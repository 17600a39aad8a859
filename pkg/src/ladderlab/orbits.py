"""Deterministic orbit models: a particle on a circle and on a 2-torus.

The circle system follows x(t) = cos(at) cos(bt), y(t) = -cos(at) sin(bt),
which touches the unit circle at the times t_j = j pi/a with touch angle
theta_j = j (1 - b/a) pi.  Rational frequency ratio b/a = M/N closes the orbit;
the N-site single-cover systems use M = N - 2, visiting the angles 2 pi j / N
once per period.  Irrational ratios never revisit a touch angle, and the
torus analogue (independent angle increments on two circles) fills each circle
densely, measured here through the largest circular gap of the visited angles.

Irrationality is a caller-supplied tag: rational ratios must arrive as integer
pairs, since floating point cannot decide the distinction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircleDynamics:
    """Envelope frequency alpha, rotation frequency beta, and exact ratio tag.

    `q` is the exact rational beta/alpha, or None for a ratio declared
    irrational by the caller.
    """

    alpha: float
    beta: float
    q: Fraction | None

    def __post_init__(self) -> None:
        if self.alpha <= 0:
            raise ValueError("alpha must be positive")
        if self.beta <= 0:
            raise ValueError("beta must be positive")
        if self.q is not None and not 0 < self.q < 1:
            raise ValueError("a rational ratio must satisfy 0 < M/N < 1 in lowest terms")

    @classmethod
    def rational(cls, alpha: float, num: int, den: int) -> "CircleDynamics":
        q = Fraction(num, den)
        return cls(alpha=float(alpha), beta=float(alpha) * num / den, q=q)

    @classmethod
    def irrational(cls, alpha: float, beta: float) -> "CircleDynamics":
        return cls(alpha=float(alpha), beta=float(beta), q=None)


@dataclass(frozen=True, eq=False)
class OrbitTrace:
    """Touch points of a circle orbit: times t_j, unit-circle points, angles.

    Parallel arrays over j = 1 .. count; `period_steps` is the exact closure
    period for rational dynamics and None otherwise.
    """

    dynamics: CircleDynamics
    times: np.ndarray
    points: np.ndarray
    angles: np.ndarray
    period_steps: int | None


@dataclass(frozen=True, eq=False)
class TorusOrbit:
    """Torus trajectory: angles[j-1] = state after the j-th jump, in [0, 2 pi)^2."""

    alpha1: float
    alpha2: float
    tau: float
    steps: int
    phi0: tuple[float, float]
    angles: np.ndarray


def continuous_position(d: CircleDynamics, t):
    """Underlying continuous curve (cos(at) cos(bt), -cos(at) sin(bt)).

    Accepts a scalar or an array of times.
    """
    t = np.asarray(t, dtype=float)
    envelope = np.cos(d.alpha * t)
    return envelope * np.cos(d.beta * t), -envelope * np.sin(d.beta * t)


def touch_points(d: CircleDynamics, count: int) -> OrbitTrace:
    """The first `count` touches of the unit circle, j = 1 .. count.

    theta_j = j (1 - beta/alpha) pi reduced into [0, 2 pi).  Rational dynamics
    use exact integer arithmetic for the angle (so closure is exact to
    rounding); irrational dynamics accumulate the angle step in double
    precision with per-step reduction to bound drift.  The emitted points are
    (cos theta_j, sin theta_j), which is what the continuous curve evaluates
    to at t_j = j pi / alpha.
    """
    count = int(count)
    if count < 1:
        raise ValueError("count must be >= 1")
    times = np.arange(1, count + 1) * (math.pi / d.alpha)
    if d.q is not None:
        num, den = d.q.numerator, d.q.denominator
        # theta_j / pi = j (den - num) / den, reduced mod 2
        residues = (np.arange(1, count + 1, dtype=object) * (den - num)) % (2 * den)
        angles = np.array([math.pi * int(r) / den for r in residues])
        period = 2 * den // math.gcd(den - num, 2 * den)
    else:
        delta = (1.0 - d.beta / d.alpha) * math.pi
        angles = np.empty(count)
        theta = 0.0
        for i in range(count):
            theta = (theta + delta) % TWO_PI
            angles[i] = theta
        period = None
    points = np.column_stack([np.cos(angles), np.sin(angles)])
    return OrbitTrace(
        dynamics=d, times=times, points=points, angles=angles, period_steps=period
    )


def thooft_system(n_sites: int, alpha: float = 1.0) -> CircleDynamics:
    """Single-cover N-site circle dynamics, ratio q = (N - 2)/N.

    Its touch points visit the N equally spaced angles 2 pi j / N exactly once
    per period of N steps.
    """
    n_sites = int(n_sites)
    if n_sites < 3:
        raise ValueError("n_sites must be >= 3")
    return CircleDynamics.rational(alpha, n_sites - 2, n_sites)


def simulate_torus(
    alpha1: float,
    alpha2: float,
    tau: float,
    steps: int,
    phi0: tuple[float, float] = (0.0, 0.0),
) -> TorusOrbit:
    """Iterate the torus jump map phi_i -> phi_i + alpha_i tau, mod 2 pi.

    Exact per-step addition followed by modular reduction; angles are recorded
    after each jump.  Negative rates step the map backwards, which is how the
    inverse map is realized.
    """
    steps = int(steps)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if tau <= 0:
        raise ValueError("tau must be positive")
    d1, d2 = alpha1 * tau, alpha2 * tau
    p1, p2 = phi0[0] % TWO_PI, phi0[1] % TWO_PI
    angles = np.empty((steps, 2))
    for j in range(steps):
        p1 = (p1 + d1) % TWO_PI
        p2 = (p2 + d2) % TWO_PI
        angles[j, 0] = p1
        angles[j, 1] = p2
    return TorusOrbit(
        alpha1=float(alpha1),
        alpha2=float(alpha2),
        tau=float(tau),
        steps=steps,
        phi0=(float(phi0[0]), float(phi0[1])),
        angles=angles,
    )


def _max_circular_gap(angles: np.ndarray) -> float:
    ordered = np.sort(angles)
    if ordered.size == 1:
        return TWO_PI
    wrap = ordered[0] + TWO_PI - ordered[-1]
    return float(max(np.max(np.diff(ordered)), wrap))


def density_metrics(o: TorusOrbit) -> tuple[float, float]:
    """Largest circular gap of the visited angles, per torus coordinate.

    For an irrational rotation the gap shrinks without bound as steps grow
    (three-distance theorem); for a rational rotation it stalls at the orbit
    spacing.  A single visited point reports the full circle, 2 pi.
    """
    return _max_circular_gap(o.angles[:, 0]), _max_circular_gap(o.angles[:, 1])
