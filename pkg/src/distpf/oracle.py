"""Independent numeric verification by pairing against Gaussian test functions.

The symbolic engine claims identities between distributions; this module
checks them by actually pairing both sides with test functions of the form
P(x, y, z) * exp(-alpha r^2), a class that is closed under the Laplacian
and whose pairings reduce to

    sum over monomials of  (sphere moment) x (radial finite-part integral),

both of which are computed here: the sphere moments exactly, the radial
integrals  Fp int_0^inf r^m exp(-alpha r^2) dr  as floats through a
closed-form downward recurrence (with an independent quadrature
cross-check available for validation).

The headline check is ``verify_laplacian_identity``: for a pseudofunction
f and test function phi it compares  <f, lap(phi)>  against the pairing of
the engine's decomposition lap(f) = Pf-part + delta terms.  By definition
of the distributional Laplacian the two must agree; a nonzero residual
beyond float noise means the symbolic delta weights are wrong.

Verification is strictly one-way: the symbolic layer never consumes
anything computed here.  All functions are pure, so grids of checks can
run in any order or in parallel.

Conventions: an ell = 0 pseudofunction is paired as the bare radial
function (angular factor 1, contributing the full 4*pi sphere moment), and
an ell = 0 delta term as the bare iterated delta.  Labels with
1 <= ell <= 4 use the built-in real solid harmonic table with unit-L2
normalisation; larger ell raises ``UnsupportedEll``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy.integrate import quad

from .coeffs import ExactScalar
from .distlap import laplacian
from .pseudofunction import DeltaTerm, PseudoFunction

__all__ = [
    "EULER_GAMMA",
    "UnsupportedEll",
    "TestFunction",
    "testfn_laplacian",
    "angular_moment",
    "finite_part_integral",
    "finite_part_by_quadrature",
    "pair_pseudofunction",
    "pair_delta",
    "verify_laplacian_identity",
    "scalar_to_float",
    "solid_harmonic",
    "MAX_ELL",
]

# Euler-Mascheroni constant, written to well beyond float precision.
EULER_GAMMA = 0.577215664901532860606512090082402431042159335939923598805767

MAX_ELL = 4


class UnsupportedEll(ValueError):
    """Angular degree beyond the built-in solid harmonic table."""


def scalar_to_float(x: ExactScalar) -> float:
    """Numeric value of an exact scalar sum q * pi^(h/2)."""
    return sum(float(q) * math.pi ** (h / 2) for h, q in x.terms)


# ---------------------------------------------------------------------
# Polynomial-times-Gaussian test functions
# ---------------------------------------------------------------------

Monomial = tuple[int, int, int]


def _poly_canonical(mapping) -> tuple:
    items = []
    for mono, c in mapping.items():
        c = Fraction(c)
        if c != 0:
            items.append((tuple(int(e) for e in mono), c))
    items.sort()
    return tuple(items)


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict[Monomial, Fraction] = {}
    for (a1, b1, c1), u in p.items():
        for (a2, b2, c2), v in q.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            out[key] = out.get(key, Fraction(0)) + u * v
    return out


def _poly_laplacian(p: dict) -> dict:
    out: dict[Monomial, Fraction] = {}
    for (a, b, c), u in p.items():
        for i, e in enumerate((a, b, c)):
            if e >= 2:
                key = [a, b, c]
                key[i] = e - 2
                key = tuple(key)
                out[key] = out.get(key, Fraction(0)) + u * e * (e - 1)
    return {k: v for k, v in out.items() if v != 0}


@dataclass(frozen=True)
class TestFunction:
    """P(x, y, z) * exp(-alpha r^2) with rational polynomial and width.

    ``terms`` is a canonical tuple of ((a, b, c), coefficient) pairs.  The
    class is closed under the Laplacian, so arbitrarily many derivatives
    stay inside the semi-analytic pairing algebra.
    """

    __test__ = False  # not a pytest class, despite the name

    terms: tuple
    alpha: Fraction

    def __post_init__(self):
        alpha = Fraction(self.alpha)
        if alpha <= 0:
            raise ValueError("Gaussian width alpha must be positive")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "terms", _poly_canonical(dict(self.terms)))

    @staticmethod
    def from_poly(poly: dict, alpha) -> "TestFunction":
        return TestFunction(tuple(poly.items()), alpha)

    @staticmethod
    def gaussian(alpha) -> "TestFunction":
        return TestFunction((((0, 0, 0), Fraction(1)),), alpha)

    @property
    def poly(self) -> dict:
        return dict(self.terms)

    def value_at_origin(self) -> Fraction:
        """phi(0), i.e. the constant-monomial coefficient."""
        for mono, c in self.terms:
            if mono == (0, 0, 0):
                return c
        return Fraction(0)


def testfn_laplacian(phi: TestFunction) -> TestFunction:
    """Exact Laplacian within the class:

    lap(P e^{-a r^2}) = [lap(P) - 4a (x.grad P) - 6a P + 4a^2 r^2 P] e^{-a r^2}.
    """
    a = phi.alpha
    out = _poly_laplacian(phi.poly)
    for mono, c in phi.terms:
        deg = sum(mono)
        # -4a (x.grad P) - 6a P : the Euler operator scales each monomial
        # by its degree.
        out[mono] = out.get(mono, Fraction(0)) - 4 * a * deg * c - 6 * a * c
        for i in range(3):
            key = list(mono)
            key[i] += 2
            key = tuple(key)
            out[key] = out.get(key, Fraction(0)) + 4 * a * a * c
    return TestFunction.from_poly(out, a)


# ---------------------------------------------------------------------
# Exact sphere moments
# ---------------------------------------------------------------------


def _double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@lru_cache(maxsize=None)
def angular_moment(a: int, b: int, c: int) -> ExactScalar:
    """int over the unit sphere of (x/r)^a (y/r)^b (z/r)^c dOmega, exact.

    Vanishes unless all exponents are even; otherwise equals
    4*pi * (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!.
    """
    if min(a, b, c) < 0:
        raise ValueError("exponents must be nonnegative")
    if a % 2 or b % 2 or c % 2:
        return ExactScalar.zero()
    num = 4 * _double_factorial(a - 1) * _double_factorial(b - 1) * _double_factorial(c - 1)
    return ExactScalar.pi_term(Fraction(num, _double_factorial(a + b + c + 1)), 2)


# ---------------------------------------------------------------------
# Radial finite-part integrals
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def _finite_part(m: int, alpha: Fraction) -> float:
    if m > -1:
        return 0.5 * float(alpha) ** (-(m + 1) / 2) * math.gamma((m + 1) / 2)
    if m == -1:
        return -(EULER_GAMMA + math.log(alpha)) / 2
    # Downward recurrence from integration by parts, keeping the finite
    # part of the boundary term at the origin (nonzero only for odd m).
    b = 0.0
    if m % 2:
        j = (-m - 1) // 2
        b = -((-float(alpha)) ** j) / ((m + 1) * math.factorial(j))
    return 2 * float(alpha) / (m + 1) * _finite_part(m + 2, alpha) + b


def finite_part_integral(m: int, alpha) -> float:
    """Fp int_0^inf r^m exp(-alpha r^2) dr.

    Convergent for m > -1 (an ordinary Gamma integral); for m <= -1 the
    Hadamard finite part: power divergences in the cutoff are discarded,
    and the logarithmic channel at m = -1 subtracts log(cutoff) with no
    scale constant, which fixes  F(-1, alpha) = -(gamma + log alpha)/2.
    """
    return _finite_part(int(m), Fraction(alpha))


def finite_part_by_quadrature(m: int, alpha, split: float = 1.0) -> float:
    """Independent evaluation of the same finite part by adaptive quadrature.

    Subtracts enough of the Gaussian's Taylor expansion on [0, split] to
    make the integrand regular, integrates the remainder numerically, adds
    back the subtracted pieces through their known finite parts, and
    appends the convergent tail.  Shares no code path with
    ``finite_part_integral``.
    """
    m = int(m)
    af = float(alpha)
    terms = max(0, -(m // 2)) + 1  # enough Taylor terms to regularise r^m
    coefs = [(-af) ** j / math.factorial(j) for j in range(terms)]

    def remainder(r: float) -> float:
        # r^m times the Taylor tail of the Gaussian, summed directly so no
        # cancellation occurs where r^m is huge.
        acc = 0.0
        term = (-af) ** terms / math.factorial(terms) * r ** (m + 2 * terms)
        t = -af * r * r
        for i in range(200):
            acc += term
            term *= t / (terms + 1 + i)
            if abs(term) <= 1e-18 * (abs(acc) + 1e-300):
                break
        return acc

    total, _ = quad(remainder, 0.0, split, epsabs=1e-13, epsrel=1e-13, limit=200)
    for j, c in enumerate(coefs):
        t = m + 2 * j
        if t == -1:
            total += c * math.log(split)
        else:
            total += c * split ** (t + 1) / (t + 1)
    tail, _ = quad(
        lambda r: r**m * math.exp(-af * r * r),
        split,
        math.inf,
        epsabs=1e-13,
        epsrel=1e-13,
        limit=200,
    )
    return total + tail


# ---------------------------------------------------------------------
# Real solid harmonics, unit L2 normalisation, ell <= 4
# ---------------------------------------------------------------------

# Each entry is (q, core) with the solid harmonic equal to
# sqrt(q / pi) * core(x, y, z); cores are integer-coefficient harmonic
# homogeneous polynomials of degree ell.  Exactness of q and harmonicity
# of the cores are asserted by the test suite via the sphere moments.
_SOLID_TABLE: dict[tuple[int, int], tuple[Fraction, dict]] = {
    (1, -1): (Fraction(3, 4), {(0, 1, 0): 1}),
    (1, 0): (Fraction(3, 4), {(0, 0, 1): 1}),
    (1, 1): (Fraction(3, 4), {(1, 0, 0): 1}),
    (2, -2): (Fraction(15, 4), {(1, 1, 0): 1}),
    (2, -1): (Fraction(15, 4), {(0, 1, 1): 1}),
    (2, 0): (Fraction(5, 16), {(0, 0, 2): 2, (2, 0, 0): -1, (0, 2, 0): -1}),
    (2, 1): (Fraction(15, 4), {(1, 0, 1): 1}),
    (2, 2): (Fraction(15, 16), {(2, 0, 0): 1, (0, 2, 0): -1}),
    (3, -3): (Fraction(35, 32), {(2, 1, 0): 3, (0, 3, 0): -1}),
    (3, -2): (Fraction(105, 4), {(1, 1, 1): 1}),
    (3, -1): (Fraction(21, 32), {(0, 1, 2): 4, (0, 3, 0): -1, (2, 1, 0): -1}),
    (3, 0): (Fraction(7, 16), {(0, 0, 3): 2, (2, 0, 1): -3, (0, 2, 1): -3}),
    (3, 1): (Fraction(21, 32), {(1, 0, 2): 4, (3, 0, 0): -1, (1, 2, 0): -1}),
    (3, 2): (Fraction(105, 16), {(2, 0, 1): 1, (0, 2, 1): -1}),
    (3, 3): (Fraction(35, 32), {(3, 0, 0): 1, (1, 2, 0): -3}),
    (4, -4): (Fraction(315, 16), {(3, 1, 0): 1, (1, 3, 0): -1}),
    (4, -3): (Fraction(315, 32), {(2, 1, 1): 3, (0, 3, 1): -1}),
    (4, -2): (Fraction(45, 16), {(1, 1, 2): 6, (3, 1, 0): -1, (1, 3, 0): -1}),
    (4, -1): (Fraction(45, 32), {(0, 1, 3): 4, (0, 3, 1): -3, (2, 1, 1): -3}),
    (4, 0): (
        Fraction(9, 256),
        {
            (0, 0, 4): 8,
            (2, 0, 2): -24,
            (0, 2, 2): -24,
            (4, 0, 0): 3,
            (2, 2, 0): 6,
            (0, 4, 0): 3,
        },
    ),
    (4, 1): (Fraction(45, 32), {(1, 0, 3): 4, (3, 0, 1): -3, (1, 2, 1): -3}),
    (4, 2): (
        Fraction(45, 64),
        {(2, 0, 2): 6, (0, 2, 2): -6, (4, 0, 0): -1, (0, 4, 0): 1},
    ),
    (4, 3): (Fraction(315, 32), {(3, 0, 1): 1, (1, 2, 1): -3}),
    (4, 4): (Fraction(315, 256), {(4, 0, 0): 1, (2, 2, 0): -6, (0, 4, 0): 1}),
}


def solid_harmonic(ell: int, mu: int) -> tuple[Fraction | None, dict]:
    """(q, core) with the harmonic factor sqrt(q/pi) * core; ell = 0 -> (None, 1).

    The ell = 0 entry is the constant 1 (bare radial convention), not the
    normalised harmonic.
    """
    if ell == 0:
        if mu != 0:
            raise ValueError("mu must be 0 when ell is 0")
        return None, {(0, 0, 0): 1}
    try:
        return _SOLID_TABLE[(ell, mu)]
    except KeyError:
        raise UnsupportedEll(
            f"no built-in solid harmonic for ell={ell}, mu={mu} (supported ell <= {MAX_ELL})"
        ) from None


def _harmonic_scale(q: Fraction | None) -> float:
    return 1.0 if q is None else math.sqrt(float(q) / math.pi)


# ---------------------------------------------------------------------
# Pairings
# ---------------------------------------------------------------------


def pair_pseudofunction(pf: PseudoFunction, phi: TestFunction) -> float:
    """<Pf.f, phi> for f = r^s series * (angular factor).

    Each series term r^(s+k) Y is split as r^(s+k-ell) times the solid
    harmonic polynomial; multiplying by phi's polynomial reduces the
    pairing to sphere moments times radial finite parts.  Only finite
    series are meaningful here (a truncated tail would dominate the
    integral); exponents must be integers.
    """
    if pf.is_zero:
        return 0.0
    ell, mu = pf.angular.ell, pf.angular.mu
    q, core = solid_harmonic(ell, mu)
    s = pf.radial.s
    if isinstance(s, float):
        if not s.is_integer():
            raise ValueError("pairing requires an integer leading exponent")
        s = int(s)

    prod = _poly_mul(core, phi.poly)
    radial_factors: dict[int, float] = {}
    total = 0.0
    for k, a in enumerate(pf.radial.coeffs):
        if a == 0:
            continue
        base = s + k - ell + 2
        contrib = 0.0
        for (ax, ay, az), c in prod.items():
            mom = angular_moment(ax, ay, az)
            if mom.is_zero:
                continue
            power = base + ax + ay + az
            if power not in radial_factors:
                radial_factors[power] = finite_part_integral(power, phi.alpha)
            contrib += float(c) * scalar_to_float(mom) * radial_factors[power]
        total += float(a) * contrib
    return total * _harmonic_scale(q)


def pair_delta(term: DeltaTerm, phi: TestFunction) -> float:
    """<coefficient * r^ell Y lap^p delta, phi> = coefficient * lap^p(Y-core phi)(0).

    Evaluated exactly inside the polynomial-Gaussian algebra; the only
    float rounding is the final conversion (so pairing a bare delta
    returns phi(0) to the last bit).
    """
    q, core = solid_harmonic(term.ell, term.mu)
    probe = TestFunction.from_poly(_poly_mul(core, phi.poly), phi.alpha)
    for _ in range(term.p):
        probe = testfn_laplacian(probe)
    exact = term.coefficient * probe.value_at_origin()
    return scalar_to_float(exact) * _harmonic_scale(q)


def verify_laplacian_identity(pf: PseudoFunction, phi: TestFunction) -> float:
    """|<f, lap phi> - <lap f as computed symbolically, phi>|.

    The defining property of the distributional Laplacian; any residual
    beyond float noise indicts the symbolic decomposition.
    """
    lhs = pair_pseudofunction(pf, testfn_laplacian(phi))
    expr = laplacian(pf)
    rhs = pair_pseudofunction(expr.pf_part, phi)
    for term in expr.delta_part:
        rhs += pair_delta(term, phi)
    return abs(lhs - rhs)
