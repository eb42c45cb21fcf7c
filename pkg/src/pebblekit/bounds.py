"""Closed-form cost bounds and the approximation-gap arithmetic.

Each calculator returns a :class:`BoundReport` binding the formula name to
its parameters and value.  The overlay formulas exist in two flavours: the
published closed forms, which hardcode a 42N-vertex, log2(42N)-depth
superconcentrator, and measured variants that take the actual vertex count
and depth of the superconcentrator in use.  Gap arithmetic is done in exact
rationals; everything else is ordinary floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict[str, float]
    value: float
    exact: Fraction | None = None


def _report(name: str, value, **params) -> BoundReport:
    exact = value if isinstance(value, Fraction) else None
    return BoundReport(name, {k: v for k, v in params.items()}, float(value), exact)


def bound_generic(e: float, d: float, g: float, n: float, delta: float) -> BoundReport:
    """Upper bound e*N + delta*g*N + N^2*d/g for an (e, d)-reducible graph."""
    if g < d:
        raise ValueError("g must be >= d")
    value = e * n + delta * g * n + n * n * d / g
    return _report("generic-upper", value, e=e, d=d, g=g, n=n, delta=delta)


def bound_depth_robust_lower(e: float, d: float) -> BoundReport:
    """Lower bound e*d for an (e, d)-depth-robust graph."""
    return _report("depth-robust-lower", e * d, e=e, d=d)


def bound_overlay_lower(e: float, d: float, n: float) -> BoundReport:
    """Lower bound min(e*N/8, d*N/8) for the overlay of an (e, d)-depth-robust graph."""
    return _report("overlay-lower", min(e * n / 8, d * n / 8), e=e, d=d, n=n)


def bound_overlay_naive(
    e: float,
    d: float,
    g: float,
    n: float,
    sc_vertices: float | None = None,
    sc_depth: float | None = None,
) -> BoundReport:
    """Overlay upper bound obtained by plugging the overlay's reducibility
    parameters (e + N/d, 2d + sc_depth) into the generic bound.

    Defaults assume the published 42N-vertex, log2(42N)-depth
    superconcentrator; pass measured values to use a concrete one.
    """
    if g < d:
        raise ValueError("g must be >= d")
    m = 42 * n if sc_vertices is None else sc_vertices
    dep = math.log2(42 * n) if sc_depth is None else sc_depth
    value = (e + n / d) * m + 2 * g * m + (m / g) * (2 * d + dep) * m
    return _report(
        "overlay-naive-upper", value, e=e, d=d, g=g, n=n, sc_vertices=m, sc_depth=dep
    )


def bound_overlay_improved(e: float, d: float, g: float, n: float) -> BoundReport:
    """Published closed form of the improved overlay attack bound:
    2eN + 4gN + 43dN^2/g + 24N^2*log2(42N)/g + 42N*log2(42N) + N."""
    if g < d:
        raise ValueError("g must be >= d")
    lg = math.log2(42 * n)
    value = (
        2 * e * n
        + 4 * g * n
        + 43 * d * n * n / g
        + 24 * n * n * lg / g
        + 42 * n * lg
        + n
    )
    return _report("overlay-improved-upper", value, e=e, d=d, g=g, n=n)


def bound_overlay_improved_measured(
    e: float,
    d: float,
    g: float,
    n: float,
    delta: float,
    sc_vertices: float,
    sc_depth: float,
) -> BoundReport:
    """Step-by-step form of the improved overlay bound with measured constants.

    eN + delta*g*N + dN^2/g   (attack on the input copy)
    + M*D                     (flooding the interior)
    + (e + 2g + 1)*N          (output-chain light phases)
    + (d + D)*M*N/g           (output-chain balloon phases)

    where M is the measured overlay vertex count and D its measured depth.
    """
    if g < d:
        raise ValueError("g must be >= d")
    m, dep = sc_vertices, sc_depth
    value = (
        e * n
        + delta * g * n
        + d * n * n / g
        + m * dep
        + (e + 2 * g + 1) * n
        + (d + dep) * m * n / g
    )
    return _report(
        "overlay-improved-upper-measured",
        value,
        e=e,
        d=d,
        g=g,
        n=n,
        delta=delta,
        sc_vertices=m,
        sc_depth=dep,
    )


def generic_attack_slack(n: float, g: float) -> float:
    """Additive slack of the bundled generic attack over its formula:
    the interval prefixes contribute at most N*(g+1)/2."""
    return n * (g + 1) / 2


def overlay_attack_slack(n: float, g: float, d: float) -> float:
    """Additive slack of the bundled overlay attack over the measured bound:
    the step-1 prefixes plus the one extra balloon that re-pebbles the
    whole input copy."""
    return generic_attack_slack(n, g) + d * n


def reducibility_gap_parameters(
    n: float, k: float, eps: float
) -> tuple[float, float, float, float]:
    """Threshold parameters (e1, d1, e2, d2) of the two hardness regimes.

    e1 = N^(1/(1+2eps))/k, d1 = k*N^(2eps/(1+2eps)),
    e2 = (1-eps)*N^(1/(1+2eps)), d2 = 0.9*N^((1+eps)/(1+2eps)).
    Values are real; flooring is the caller's concern.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if eps <= 0:
        raise ValueError("eps must be > 0")
    denom = 1 + 2 * eps
    e1 = n ** (1 / denom) / k
    d1 = k * n ** (2 * eps / denom)
    e2 = (1 - eps) * n ** (1 / denom)
    d2 = 0.9 * n ** ((1 + eps) / denom)
    return (e1, d1, e2, d2)


@dataclass(frozen=True)
class GapAnalysis:
    """Exact-rational check that the chosen constants separate the regimes."""

    c: Fraction
    eps: Fraction
    k: int
    upper_coefficient: Fraction  # 7/k
    lower_coefficient: Fraction  # (1 - eps)/8 = 9/80
    inequality_holds: bool  # 7/k <= 9/(80 c^2)
    gap_factor: Fraction  # lower/upper
    gap_at_least_c_squared: bool
    exponent: Fraction  # (2 + 2 eps)/(1 + 2 eps)
    upper_value: float | None = None
    lower_value: float | None = None


def gap_analysis(c, n: float | None = None) -> GapAnalysis:
    """Verify, exactly, that eps = 1/10 and k = ceil(560*c^2/9) give an
    upper coefficient 7/k at most 9/(80*c^2).

    c = 1 is allowed as a boundary check; below that the gap question is
    vacuous.  With ``n`` given, both sides coeff * N^((2+2eps)/(1+2eps))
    are also evaluated in floating point.
    """
    c = Fraction(c)
    if c < 1:
        raise ValueError("c must be >= 1")
    eps = Fraction(1, 10)
    k = math.ceil(Fraction(560, 9) * c * c)
    upper = Fraction(7, k)
    lower = (1 - eps) / 8
    holds = upper <= Fraction(9, 80) / (c * c)
    gap = lower / upper
    exponent = (2 + 2 * eps) / (1 + 2 * eps)
    upper_value = lower_value = None
    if n is not None:
        scale = float(n) ** float(exponent)
        upper_value = float(upper) * scale
        lower_value = float(lower) * scale
    return GapAnalysis(
        c=c,
        eps=eps,
        k=k,
        upper_coefficient=upper,
        lower_coefficient=lower,
        inequality_holds=holds,
        gap_factor=gap,
        gap_at_least_c_squared=gap >= c * c,
        exponent=exponent,
        upper_value=upper_value,
        lower_value=lower_value,
    )
