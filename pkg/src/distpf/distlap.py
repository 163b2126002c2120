"""Distributional Laplacian engine for pseudofunctions r^s * series * Y.

Away from the origin the Laplacian of a single power acts termwise,

    lap(r^m Y_ell^mu) = [m(m+1) - ell(ell+1)] r^(m-2) Y_ell^mu,

and that rule extends a whole series.  Over all of R^3 the same operator
additionally produces a finite sum of iterated-delta corrections whenever
the exponent ladder s, s+1, ... crosses a singular rung: the coefficient
a_k contributes a term at iteration order p exactly when

    k + s + 1 - ell = -2p     with p a nonnegative integer, 2p >= ell,

weighted by a_k * coeff_B(ell, p) * coeff_C(p).  ``q_s`` collects those
corrections for a bare radial series, ``q_sl`` for a labelled
pseudofunction; ``laplacian`` and ``radial_operator`` return the full
decomposition (function-sense part plus delta sum), and
``hamiltonian_apply`` assembles  H Pf = E Pf - (hbar^2/2m) * corrections
for a series solving the radial eigenvalue problem.

Everything here is pure; batch sweeps over (s, ell, series) can run in
parallel without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import ExactScalar, coeff_B, coeff_C
from .pseudofunction import (
    AngularLabel,
    DeltaSum,
    DeltaTerm,
    DistributionExpr,
    PseudoFunction,
    RadialSeries,
)

__all__ = [
    "PotentialModel",
    "PhysicalUnits",
    "NotRadialSolution",
    "laplacian_power",
    "q_s",
    "q_sl",
    "laplacian",
    "radial_operator",
    "hamiltonian_apply",
    "fold_y00",
]

# 1/sqrt(4*pi) as an exact scalar: the l = 0 harmonic normalisation constant.
Y00 = ExactScalar.pi_term(Fraction(1, 2), -1)


@dataclass(frozen=True)
class PotentialModel:
    """Central potential v_(-1)/r + v_0 + v_1 r + ... (no stronger singularity).

    Coefficients are exact rationals or floats, never mixed.
    """

    v_minus1: object = Fraction(0)
    v: tuple = ()

    def __post_init__(self):
        vals = (self.v_minus1, *self.v)
        if any(isinstance(x, float) for x in vals):
            object.__setattr__(self, "v_minus1", float(self.v_minus1))
            object.__setattr__(self, "v", tuple(float(x) for x in self.v))
        else:
            object.__setattr__(self, "v_minus1", Fraction(self.v_minus1))
            object.__setattr__(self, "v", tuple(Fraction(x) for x in self.v))

    @staticmethod
    def zero() -> "PotentialModel":
        return PotentialModel()

    @staticmethod
    def coulomb(strength) -> "PotentialModel":
        return PotentialModel(v_minus1=strength)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.v_minus1, Fraction)

    @property
    def is_zero(self) -> bool:
        return self.v_minus1 == 0 and all(c == 0 for c in self.v)


@dataclass(frozen=True)
class PhysicalUnits:
    """The scale hbar^2/2m in front of the kinetic term; exact and positive."""

    hbar2_over_2m: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "hbar2_over_2m", Fraction(self.hbar2_over_2m))
        if self.hbar2_over_2m <= 0:
            raise ValueError("hbar^2/2m must be positive")


class NotRadialSolution(Exception):
    """Strict-mode failure: the series does not satisfy the radial recurrence."""

    def __init__(self, orders):
        self.orders = tuple(orders)
        super().__init__(
            f"radial recurrence residual nonzero at orders {self.orders}"
        )


def _integral_exponent(s):
    """Return s as an int when it is integral, else None (no delta channel)."""
    if isinstance(s, int):
        return s
    if isinstance(s, float) and s.is_integer():
        return int(s)
    return None


def _delta_sum(s, coeffs, ell: int, mu: int) -> DeltaSum:
    """Delta corrections of the Laplacian across r^s * series * (deg-ell label).

    Float coefficients are lifted to their exact binary rationals so the
    resulting weights stay in the exact scalar ring; a non-integral
    exponent has no singular rungs and yields the empty sum.
    """
    s_int = _integral_exponent(s)
    if s_int is None:
        return DeltaSum.empty()
    terms = []
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        t = k + s_int + 1 - ell
        if t > 0 or t % 2 != 0:
            continue
        p = -t // 2
        if 2 * p < ell:
            continue
        weight = Fraction(a) * coeff_B(ell, p) * coeff_C(p)
        terms.append(DeltaTerm(weight, ell, mu, p))
    return DeltaSum.build(terms)


def q_s(series: RadialSeries) -> DeltaSum:
    """Delta corrections picked up by the radial operator on a bare series.

    Empty whenever s >= 0; for s = -1 it is the single point source
    a_0 * coeff_C(0) * delta.  Terms whose index k has the same parity as
    s never contribute (their iteration order would be half-integral).
    """
    return _delta_sum(series.s, series.coeffs, 0, 0)


def q_sl(pf: PseudoFunction) -> DeltaSum:
    """Delta corrections of the full Laplacian on a labelled pseudofunction.

    Coincides with ``q_s`` termwise when ell = 0 (the angular correction
    factor is 1 there).  Nonempty iff some a_k != 0 sits on a singular
    rung k + s - ell = -2p - 1 with nonnegative integer p and 2p >= ell.
    """
    return _delta_sum(pf.radial.s, pf.radial.coeffs, pf.angular.ell, pf.angular.mu)


def laplacian_power(s, ell: int, mu: int) -> DistributionExpr:
    """Distributional Laplacian of the single power r^s * Y_ell^mu.

    The function-sense part is [s(s+1) - ell(ell+1)] r^(s-2) Y_ell^mu; a
    delta term coeff_B * coeff_C * r^ell Y_ell^mu lap^p(delta) appears
    exactly when p = -(s+1-ell)/2 is a nonnegative integer with 2p >= ell.
    """
    label = AngularLabel(ell, mu)
    c = s * (s + 1) - ell * (ell + 1)
    pf_part = PseudoFunction(RadialSeries.make(s - 2, (c,)), label)
    one = 1.0 if isinstance(s, float) else 1
    return DistributionExpr(pf_part, _delta_sum(s, (one,), ell, mu))


def laplacian(pf: PseudoFunction) -> DistributionExpr:
    """Distributional Laplacian of a pseudofunction, termwise plus corrections.

    The output series keeps the input truncation order with the exponent
    shifted down by two.
    """
    rad, label = pf.radial, pf.angular
    s, ell = rad.s, label.ell
    out = [
        ((s + k) * (s + k + 1) - ell * (ell + 1)) * a for k, a in enumerate(rad.coeffs)
    ]
    pf_part = PseudoFunction(RadialSeries.make(s - 2, out), label)
    return DistributionExpr(pf_part, q_sl(pf))


def radial_operator(series: RadialSeries) -> DistributionExpr:
    """The operator (1/r) d^2/dr^2 r applied distributionally to Pf.series.

    The function-sense part is sum_k (s+k)(s+k+1) a_k r^(s+k-2); the delta
    part is ``q_s``.  For a series u(r)/r with u(0) = a_0 != 0 this yields
    the second derivative of u over r together with the point source
    coeff_C(0) * a_0 * delta.
    """
    s = series.s
    out = [(s + k) * (s + k + 1) * a for k, a in enumerate(series.coeffs)]
    pf_part = PseudoFunction(RadialSeries.make(s - 2, out), AngularLabel(0, 0))
    return DistributionExpr(pf_part, q_s(series))


def fold_y00(delta: DeltaSum) -> DeltaSum:
    """Fold the constant angular factor 1/sqrt(4*pi) into l = 0 terms.

    Used when a bare radial result is reported for a state normalised with
    the l = 0 harmonic: the delta corrections of R(r) and of
    R(r) * Y_0^0 differ exactly by this constant.  Terms with ell >= 1
    keep their symbolic harmonic factor and are returned unchanged.
    """
    return DeltaSum(
        tuple(
            DeltaTerm(t.coefficient * Y00, t.ell, t.mu, t.p) if t.ell == 0 else t
            for t in delta.terms
        )
    )


def hamiltonian_apply(
    pf: PseudoFunction,
    V: PotentialModel,
    E,
    units: PhysicalUnits = PhysicalUnits(),
    strict: bool = False,
) -> DistributionExpr:
    """Apply H = -(hbar^2/2m) lap + V to Pf, assuming the radial equation.

    When the series satisfies the radial recurrence at every stored order
    the result is exactly  E * Pf  plus the delta part
    -(hbar^2/2m) * q_sl(pf), with the l = 0 angular normalisation folded
    into the source coefficients (so an l = 0 state with u(0) = a_0 in
    natural units reports the source  2 sqrt(pi) a_0 delta).

    If the recurrence fails, strict mode raises ``NotRadialSolution``;
    lenient mode (the default) returns the honest function-sense series,
    which carries the residual on top of E * Pf at the shifted exponent.
    """
    from .radial import radial_residuals

    kappa = units.hbar2_over_2m
    resid = radial_residuals(V, pf.angular.ell, E, units, pf.radial)
    bad = [m for m, r in enumerate(resid) if r != 0]
    if bad and strict:
        raise NotRadialSolution(bad)

    delta = fold_y00(q_sl(pf)).scaled(ExactScalar.rational(-kappa))

    rad = pf.radial
    if not bad:
        pf_part = PseudoFunction(rad.scaled(E), pf.angular)
    else:
        coeffs = list(resid)
        for m in range(len(coeffs)):
            if m >= 2:
                coeffs[m] = coeffs[m] + E * rad.coeffs[m - 2]
        pf_part = PseudoFunction(RadialSeries.make(rad.s - 2, coeffs), pf.angular)
    return DistributionExpr(pf_part, delta)
