"""Power-series solver for the radial eigenvalue problem.

With the kinetic scale kappa = hbar^2/2m the radial equation for
u(r) = r * R(r) reads

    -kappa u'' + [ell(ell+1) kappa / r^2 + V(r)] u = E u,

and for a potential no more singular than 1/r the substitution
u = r^(s+1) * sum a_k r^k admits exactly two leading exponents,
s = ell and s = -(ell+1).  The coefficients then satisfy

    D(k) a_k = vt_(-1) a_(k-1) + (vt_0 - Et) a_(k-2) + sum_j vt_j a_(k-2-j)

with D(k) = (k+s+1)(k+s) - ell(ell+1) and vt = v/kappa, Et = E/kappa.

D(k) vanishes at k = 0 for both roots (that is the leading-exponent
condition) and, for the lower root only, again at k = 2*ell + 1.  At that
resonant order the right-hand side either vanishes (the free parameter is
set to zero, yielding a canonical representative of the singular branch)
or it does not, in which case no pure power series exists and the solver
raises ``LogObstruction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .distlap import PhysicalUnits, PotentialModel
from .pseudofunction import RadialSeries

__all__ = [
    "LogObstruction",
    "FreeParameterSetToZero",
    "FrobeniusResult",
    "indicial_roots",
    "frobenius",
    "radial_residuals",
    "normalizable_at_origin",
]


class LogObstruction(Exception):
    """No pure power series exists: a logarithmic term would be required."""

    def __init__(self, order: int):
        self.order = order
        super().__init__(
            f"resonance at order {order} with nonzero right-hand side; "
            "the series solution would need a logarithm"
        )


@dataclass(frozen=True)
class FreeParameterSetToZero:
    """A resonant order whose free coefficient was fixed to zero."""

    order: int


@dataclass(frozen=True)
class FrobeniusResult:
    """Series for u(r) (leading exponent root+1), plus resonance bookkeeping."""

    series: RadialSeries
    root_used: int
    resonance_report: FreeParameterSetToZero | None = None


def indicial_roots(ell: int) -> tuple[int, int]:
    """Leading exponents (regular, singular) = (ell, -(ell+1)) for R(r)."""
    if ell < 0:
        raise ValueError(f"ell must be nonnegative, got {ell}")
    return ell, -(ell + 1)


def normalizable_at_origin(s) -> bool:
    """Whether |r^s|^2 r^2 dr converges at zero, i.e. s > -3/2."""
    return s > Fraction(-3, 2)


def frobenius(
    V: PotentialModel,
    ell: int,
    E,
    root: int,
    N: int,
    units: PhysicalUnits = PhysicalUnits(),
) -> FrobeniusResult:
    """Solve the radial recurrence to order N for the requested root.

    The result's series is for u(r), so its leading exponent is root + 1,
    normalised to a_0 = 1.  Exact mode (rational E and potential) produces
    rational coefficients; a float anywhere switches the whole series to
    floats.
    """
    roots = indicial_roots(ell)
    if root not in roots:
        raise ValueError(f"root {root} is not one of the indicial roots {roots}")
    if N < 1:
        raise ValueError(f"truncation order must be at least 1, got {N}")

    kappa = units.hbar2_over_2m
    exact = V.is_exact and not isinstance(E, float)
    if exact:
        vm1 = Fraction(V.v_minus1) / kappa
        vpoly = [Fraction(c) / kappa for c in V.v]
        Et = Fraction(E) / kappa
        a = [Fraction(1)]
    else:
        vm1 = float(V.v_minus1) / float(kappa)
        vpoly = [float(c) / float(kappa) for c in V.v]
        Et = float(E) / float(kappa)
        a = [1.0]

    s = root
    resonance = None
    for k in range(1, N + 1):
        rhs = vm1 * a[k - 1] if k >= 1 else 0
        if k >= 2:
            v0 = vpoly[0] if vpoly else 0
            rhs = rhs + (v0 - Et) * a[k - 2]
            for j in range(1, len(vpoly)):
                if k - 2 - j >= 0:
                    rhs = rhs + vpoly[j] * a[k - 2 - j]
        D = (k + s + 1) * (k + s) - ell * (ell + 1)
        if D == 0:
            if rhs == 0:
                a.append(Fraction(0) if exact else 0.0)
                resonance = FreeParameterSetToZero(k)
            else:
                raise LogObstruction(k)
        else:
            a.append(rhs / D)

    return FrobeniusResult(
        series=RadialSeries(s + 1, tuple(a)),
        root_used=root,
        resonance_report=resonance,
    )


def radial_residuals(
    V: PotentialModel,
    ell: int,
    E,
    units: PhysicalUnits,
    series: RadialSeries,
) -> list:
    """Coefficients of (H - E) applied to r^s * series, in the function sense.

    Entry m is the coefficient of r^(s+m-2); the series solves the radial
    equation to its truncation order exactly when every entry vanishes.
    These are the complete rows of the recurrence: each one only references
    stored coefficients.
    """
    kappa = units.hbar2_over_2m
    s, a = series.s, series.coeffs
    v0 = V.v[0] if V.v else 0
    out = []
    for m in range(len(a)):
        D = (m + s + 1) * (m + s) - ell * (ell + 1)
        val = -kappa * D * a[m]
        if m >= 1:
            val = val + V.v_minus1 * a[m - 1]
        if m >= 2:
            val = val + (v0 - E) * a[m - 2]
            for j in range(1, len(V.v)):
                if m - 2 - j >= 0:
                    val = val + V.v[j] * a[m - 2 - j]
        out.append(val)
    return out
