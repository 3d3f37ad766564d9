"""Middle-cohomology invariants of smooth even-dimensional complete
intersections.

Everything is driven by integer data (the dimension n and the multidegree):
the Euler characteristic comes out of a truncated power series with integer
coefficients, the middle Betti number is chi - n, and the index of the
intersection lattice is pinned mod 8 by the parity of one binomial
coefficient.  That is enough to evaluate the degree-1 and degree-2 classes
of the Betti form exactly; the de Rham side stays symbolic, as a fixed
token vocabulary (``disc_d(f)``, ``w2(q_dR)``, ``(-1,disc_d(f))``) with
numeric prefactors evaluated in the place-set model.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Optional, Union

from .cohomology import CohClass2, INF, Place, SquareClass
from .errors import DomainError, InternalError
from .forms import QuadraticForm, diagonal_form
from .numberfield import Poly, resultant

TOKEN_DISC = "disc_d(f)"
TOKEN_W2_DR = "w2(q_dR)"
TOKEN_MINUS_ONE_DISC = "(-1,disc_d(f))"

_CLASS_MINUS_ONE_MINUS_ONE = CohClass2([Place.finite(2), INF])


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """Even dimension n >= 2 and the multidegree (d_1, ..., d_c)."""

    n: int
    degrees: tuple[int, ...]

    def __init__(self, n: int, degrees):
        degrees = tuple(int(d) for d in degrees)
        if n < 2 or n % 2:
            raise DomainError("dimension must be even and >= 2")
        if not degrees or any(d < 1 for d in degrees):
            raise DomainError("degrees must be a nonempty list of integers >= 1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "degrees", degrees)

    @property
    def codimension(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return prod(self.degrees)


@dataclass(frozen=True)
class SymbolicClass:
    """A cohomology class split into an evaluated numeric part and formal
    tokens from the fixed vocabulary, with coefficients mod 2."""

    numeric: Union[SquareClass, CohClass2]
    tokens: tuple[str, ...]

    def __post_init__(self):
        allowed = {TOKEN_DISC, TOKEN_W2_DR, TOKEN_MINUS_ONE_DISC}
        if not set(self.tokens) <= allowed:
            raise InternalError(f"token outside the vocabulary: {self.tokens}")

    def to_json(self) -> dict:
        return {"numeric": self.numeric.to_json(), "tokens": list(self.tokens)}

    def __repr__(self) -> str:
        parts = [repr(self.numeric)] + list(self.tokens)
        return " + ".join(parts)


def euler_characteristic(spec: CompleteIntersectionSpec) -> int:
    """Coefficient of h**(n+c) in (1+h)**(n+c+1) d1...dc h**c / prod(1 + d_i h).

    Extracted from the truncated integer power series, so exact."""
    n, c = spec.n, spec.codimension
    # series of (1+h)**(n+c+1) / prod(1 + d_i h) up to degree n
    series = [comb(n + c + 1, k) for k in range(n + 1)]
    for d in spec.degrees:
        # multiply by 1/(1 + d h) = sum (-d)**k h**k
        out = [0] * (n + 1)
        for k in range(n + 1):
            acc = 0
            power = 1
            for j in range(k, -1, -1):
                acc += series[j] * power
                power *= -d
            out[k] = acc
        series = out
    return spec.total_degree * series[n]


def betti_middle(spec: CompleteIntersectionSpec) -> int:
    """Middle Betti number chi - n."""
    return euler_characteristic(spec) - spec.n


def hypersurface_chi_closed_form(n: int, d: int) -> int:
    """n + 2 + ((1-d)**(n+2) - 1)/d, the codimension-1 closed form."""
    value = Fraction((1 - d) ** (n + 2) - 1, d)
    if value.denominator != 1:
        raise InternalError("closed form is not an integer")
    return n + 2 + int(value)


def _binomial_is_even(spec: CompleteIntersectionSpec) -> bool:
    t = sum(1 for d in spec.degrees if d % 2 == 0)
    return comb(spec.n // 2 + t, t) % 2 == 0


def tau_mod8(spec: CompleteIntersectionSpec) -> int:
    """Index of the middle lattice mod 8: 0 when the controlling binomial
    is even, the total degree otherwise."""
    if _binomial_is_even(spec):
        return 0
    return spec.total_degree % 8


def betti_w_invariants(spec: CompleteIntersectionSpec) -> tuple[int, int, SquareClass, CohClass2]:
    """(m, m', w1, w2) of the Betti form.

    m is chi - n, shifted by the total degree when the binomial parity
    forces a nonzero index; m is always even, m' = m/2, and

        w1 = m'(-1),    w2 = C(m', 2)(-1,-1).
    """
    chi = euler_characteristic(spec)
    m = chi - spec.n
    if not _binomial_is_even(spec):
        m -= spec.total_degree
    if m % 2:
        raise InternalError("middle lattice shift is odd")
    m_prime = m // 2
    w1 = SquareClass(-1) if m_prime % 2 else SquareClass(1)
    w2 = _CLASS_MINUS_ONE_MINUS_ONE if (m_prime * (m_prime - 1) // 2) % 2 else CohClass2.zero()
    return m, m_prime, w1, w2


def hypersurface_w(n: int, d: int) -> tuple[SquareClass, CohClass2]:
    """Closed-form (w1, w2) of the Betti form of a degree-d hypersurface:

        w1 = (n/2)(d-1) (-1)
        w2 = ((d-1)/2) (-1,-1)                   d odd
        w2 = floor((n+2)/4) (1 + d/2) (-1,-1)    d even
    """
    CompleteIntersectionSpec(n, [d])  # validate
    w1 = SquareClass(-1) if ((n // 2) * (d - 1)) % 2 else SquareClass(1)
    if d % 2:
        coeff = (d - 1) // 2
    else:
        coeff = ((n + 2) // 4) * (1 + d // 2)
    w2 = _CLASS_MINUS_ONE_MINUS_ONE if coeff % 2 else CohClass2.zero()
    return w1, w2


def delta_expressions(n: int, d: int) -> tuple[SymbolicClass, SymbolicClass]:
    """Symbolic comparison classes of the degree-d hypersurface motive.

    delta1 is a sign times the divided discriminant token:

        d odd:   (-1)**((d-1)/2) disc_d(f)
        d even:  (-1)**((d/2)((n+2)/2)) disc_d(f)

    delta2 is w2(q_dR) plus an evaluated multiple of (-1,-1), picking up an
    extra (-1, disc_d(f)) token when d is even and n = 2 mod 4.
    """
    CompleteIntersectionSpec(n, [d])  # validate
    if d % 2:
        sign = -1 if ((d - 1) // 2) % 2 else 1
        coeff = (d - 1) // 2
        extra_tokens: tuple[str, ...] = ()
    else:
        sign = -1 if ((d // 2) * ((n + 2) // 2)) % 2 else 1
        if n % 4 == 0:
            coeff = (n // 4) * (1 + d // 2)
            extra_tokens = ()
        else:
            coeff = ((n + 2) // 4) * (1 + d // 2)
            extra_tokens = (TOKEN_MINUS_ONE_DISC,)
    delta1 = SymbolicClass(SquareClass(sign), (TOKEN_DISC,))
    numeric2 = _CLASS_MINUS_ONE_MINUS_ONE if coeff % 2 else CohClass2.zero()
    delta2 = SymbolicClass(numeric2, (TOKEN_W2_DR,) + extra_tokens)
    return delta1, delta2


def epsilon_prime(n: int, d: int) -> int:
    """Sign relating w1(q_dR) to the divided discriminant: (-1)**((d-1)/2)
    for odd d and (-1)**((1+n/2)(1+d/2)+1) for even d."""
    if d % 2:
        e = (d - 1) // 2
    else:
        e = (1 + n // 2) * (1 + d // 2) + 1
    return -1 if e % 2 else 1


def binary_divided_disc(g: Poly) -> Fraction:
    """prod (x_i - x_j)**2 for the dehomogenized binary form g, computed as
    (-1)**(d(d-1)/2) Res(g, g'); division by epsilon_prime(0, d) recovers
    the divided discriminant in the dimension-0 case."""
    if g.is_zero or g.degree < 1:
        raise DomainError("binary form must dehomogenize to degree >= 1")
    if not g.is_squarefree():
        raise DomainError("binary form must be squarefree")
    d = g.degree
    if d == 1:
        return Fraction(1)
    res = resultant(g, g.derivative())
    return -res if (d * (d - 1) // 2) % 2 else res


def cubic_surface_refinement(n: int = 2, d: int = 3) -> int:
    """The mod-16 index refinement available for the cubic surface: the
    rank-7 lattice with index 3 mod 8 and d + 8 mod 16 has index exactly
    -5.  Unsupported for any other (n, d)."""
    if (n, d) != (2, 3):
        raise DomainError("index refinement is only supported for the cubic surface")
    return -5


def cubic_surface_form() -> QuadraticForm:
    """The middle form of the cubic surface: <1, -1, -1, -1, -1, -1, -1>."""
    return diagonal_form([1] + [-1] * 6)


@dataclass(frozen=True)
class MotiveReport:
    """Invariant bundle of the middle-cohomology motive of a complete
    intersection; the symbolic classes are present only for hypersurfaces,
    where the divided-discriminant vocabulary applies."""

    chi: int
    b_n: int
    tau_mod8: int
    m: int
    m_prime: int
    w1_qB: SquareClass
    w2_qB: CohClass2
    delta1: Optional[SymbolicClass]
    delta2: Optional[SymbolicClass]

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "b_n": self.b_n,
            "tau_mod8": self.tau_mod8,
            "m": self.m,
            "m_prime": self.m_prime,
            "w1_qB": self.w1_qB.to_json(),
            "w2_qB": self.w2_qB.to_json(),
            "delta1": self.delta1.to_json() if self.delta1 else None,
            "delta2": self.delta2.to_json() if self.delta2 else None,
        }


def motive_report(spec: CompleteIntersectionSpec) -> MotiveReport:
    chi = euler_characteristic(spec)
    m, m_prime, w1, w2 = betti_w_invariants(spec)
    if spec.codimension == 1:
        delta1, delta2 = delta_expressions(spec.n, spec.degrees[0])
    else:
        delta1 = delta2 = None
    return MotiveReport(
        chi=chi,
        b_n=chi - spec.n,
        tau_mod8=tau_mod8(spec),
        m=m,
        m_prime=m_prime,
        w1_qB=w1,
        w2_qB=w2,
        delta1=delta1,
        delta2=delta2,
    )
