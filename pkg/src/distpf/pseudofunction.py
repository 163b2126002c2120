"""Value types for singular radial series, delta terms, and their sums.

A ``RadialSeries`` is r^s * (a_0 + a_1 r + ... + a_N r^N) with a genuine
leading coefficient; attaching an ``AngularLabel`` gives a
``PseudoFunction``, the symbolic form of a (possibly singular) separable
function on R^3.  Applying a distributional operator to a pseudofunction
yields a ``DistributionExpr``: a pseudofunction part plus a finite
``DeltaSum`` of iterated-delta corrections.

Conventions
-----------
* Exact mode stores ``Fraction`` coefficients and requires an integer
  leading exponent; float mode stores floats and allows any real exponent.
  The two modes never mix inside one series.
* A ``DeltaTerm`` with ell = 0 denotes  coefficient * laplacian^p(delta)
  with no angular factor at all.  For ell >= 1 it denotes
  coefficient * r^ell * Y_ell^mu * laplacian^p(delta)  with Y the real,
  unit-L2-normalised spherical harmonic.  Any constant angular factor an
  l = 0 state carries is folded into the coefficient by the operations
  that report physical source terms (see ``distlap.fold_y00``).

All types are immutable and freely shareable across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import ExactScalar

__all__ = [
    "RadialSeries",
    "AngularLabel",
    "PseudoFunction",
    "DeltaTerm",
    "DeltaSum",
    "DistributionExpr",
    "from_u",
    "parity_split",
]


@dataclass(frozen=True)
class RadialSeries:
    """r^s times a truncated power series with nonzero leading coefficient.

    ``coeffs`` runs a_0 .. a_N (N is the truncation order); trailing zeros
    are meaningful (they assert the coefficient is zero up to that order),
    leading zeros are forbidden.  The unique zero series has no
    coefficients and exponent 0.
    """

    s: int | float
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            object.__setattr__(self, "s", 0)
            object.__setattr__(self, "coeffs", ())
            return
        exact = not any(isinstance(a, float) for a in coeffs)
        if exact:
            coeffs = tuple(Fraction(a) for a in coeffs)
            if not isinstance(self.s, int):
                raise ValueError(
                    "exact-mode series require an integer leading exponent"
                )
        else:
            coeffs = tuple(float(a) for a in coeffs)
        if coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors --------------------------------------------------

    @staticmethod
    def exact(s: int, coeffs) -> "RadialSeries":
        return RadialSeries(s, tuple(Fraction(a) for a in coeffs))

    @staticmethod
    def floats(s, coeffs) -> "RadialSeries":
        return RadialSeries(s, tuple(float(a) for a in coeffs))

    @staticmethod
    def zero() -> "RadialSeries":
        return RadialSeries(0, ())

    @staticmethod
    def make(s, coeffs) -> "RadialSeries":
        """Build a series, stripping leading zeros and normalising zero."""
        coeffs = list(coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            s = s + 1
        if not coeffs:
            return RadialSeries.zero()
        return RadialSeries(s, tuple(coeffs))

    # -- inspection ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_exact(self) -> bool:
        return not self.coeffs or isinstance(self.coeffs[0], Fraction)

    @property
    def order(self) -> int:
        """Truncation order N (number of stored coefficients minus one)."""
        return len(self.coeffs) - 1

    def scaled(self, factor) -> "RadialSeries":
        if self.is_zero or factor == 0:
            return RadialSeries.zero()
        return RadialSeries(self.s, tuple(a * factor for a in self.coeffs))


@dataclass(frozen=True)
class AngularLabel:
    """Degree and order (ell, mu) of a spherical-harmonic factor."""

    ell: int
    mu: int

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError(f"ell must be nonnegative, got {self.ell}")
        if abs(self.mu) > self.ell:
            raise ValueError(f"|mu| <= ell violated: ell={self.ell}, mu={self.mu}")


@dataclass(frozen=True)
class PseudoFunction:
    """A radial series with an angular label: the symbolic separable state."""

    radial: RadialSeries
    angular: AngularLabel

    @property
    def is_zero(self) -> bool:
        return self.radial.is_zero


@dataclass(frozen=True)
class DeltaTerm:
    """coefficient * r^ell * Y_ell^mu * laplacian^p(delta).

    For ell = 0 the angular factor is absent (a bare iterated delta).  A
    term with 2p < ell would be identically zero and may not be stored;
    neither may a zero coefficient.
    """

    coefficient: ExactScalar
    ell: int
    mu: int
    p: int

    def __post_init__(self):
        if self.coefficient.is_zero:
            raise ValueError("delta term with zero coefficient")
        if self.p < 0:
            raise ValueError(f"p must be nonnegative, got {self.p}")
        if self.ell < 0 or abs(self.mu) > self.ell:
            raise ValueError(f"bad angular label ell={self.ell}, mu={self.mu}")
        if 2 * self.p < self.ell:
            raise ValueError(
                f"term with 2p < ell is identically zero (ell={self.ell}, p={self.p})"
            )

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.ell, self.mu, self.p)


@dataclass(frozen=True)
class DeltaSum:
    """A finite sum of delta terms; the empty sum is the zero distribution.

    Terms are kept sorted by (ell, mu, p) with at most one term per key, so
    equality is structural.
    """

    terms: tuple[DeltaTerm, ...] = ()

    @staticmethod
    def build(terms) -> "DeltaSum":
        """Merge terms sharing a key, dropping anything that cancels."""
        acc: dict[tuple[int, int, int], ExactScalar] = {}
        for t in terms:
            acc[t.key] = acc.get(t.key, ExactScalar.zero()) + t.coefficient
        kept = [
            DeltaTerm(c, ell, mu, p)
            for (ell, mu, p), c in sorted(acc.items())
            if not c.is_zero
        ]
        return DeltaSum(tuple(kept))

    @staticmethod
    def empty() -> "DeltaSum":
        return DeltaSum()

    @property
    def is_empty(self) -> bool:
        return not self.terms

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "DeltaSum") -> "DeltaSum":
        return DeltaSum.build(self.terms + other.terms)

    def scaled(self, factor) -> "DeltaSum":
        if factor == 0 or (isinstance(factor, ExactScalar) and factor.is_zero):
            return DeltaSum()
        return DeltaSum(
            tuple(
                DeltaTerm(t.coefficient * factor, t.ell, t.mu, t.p) for t in self.terms
            )
        )

    def coefficient_at(self, ell: int, mu: int, p: int) -> ExactScalar:
        for t in self.terms:
            if t.key == (ell, mu, p):
                return t.coefficient
        return ExactScalar.zero()


@dataclass(frozen=True)
class DistributionExpr:
    """Result of a distributional operator: pseudofunction part + delta sum."""

    pf_part: PseudoFunction
    delta_part: DeltaSum


def from_u(u: RadialSeries, angular: AngularLabel) -> PseudoFunction:
    """Turn a reduced radial function u(r) into the pseudofunction u(r)/r * Y.

    The series of u carries its own leading exponent; dividing by r shifts
    the exponent down by one and leaves the coefficient list untouched.
    """
    if u.is_zero:
        return PseudoFunction(RadialSeries.zero(), angular)
    return PseudoFunction(RadialSeries(u.s - 1, u.coeffs), angular)


def parity_split(series: RadialSeries):
    """Split coefficients into even-index and odd-index sublists.

    Writing the series as r^s * [S_e(r) + r * S_d(r)] with both S factors
    even power series, returns (coefficients of S_e, coefficients of S_d).
    """
    return series.coeffs[0::2], series.coeffs[1::2]
