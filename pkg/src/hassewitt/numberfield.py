"""Etale Q-algebras presented by squarefree monic polynomials.

The algebra Q[x]/(f) carries the symmetric pairing (u, v) -> trace(u*v);
its Gram matrix in the power basis is the Hankel matrix of power sums of
the roots, which Newton's identities produce from the coefficients without
ever touching a root.  Resultants run through the subresultant polynomial
remainder sequence over the integers, real root counts through Sturm
chains, and residue factorization patterns through distinct-degree plus
Cantor-Zassenhaus splitting over F_p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from math import lcm
from typing import Iterable, Sequence

from .arith import is_prime
from .errors import DomainError, InternalError
from .forms import FormInvariants, QuadraticForm, invariants
from .cohomology import SquareClass


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over Q, coefficients ascending by degree."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        return Poly([Fraction(c) * x for x in self.coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(()), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / other.leading
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv
            quo[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quo), Poly(rem[: other.degree])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        return self.scale(1 / self.leading)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a.monic()

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        return self.gcd(self.derivative()).degree <= 0

    def integer_coeffs(self) -> tuple[int, list[int]]:
        """(d, coeffs) with d > 0 minimal such that d * self has integer coefficients."""
        d = lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1
        return d, [int(c * d) for c in self.coeffs]

    def to_json(self) -> list:
        return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "Poly(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def _int_content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = igcd(g, abs(c))
    return g or 1


def _subresultant_res(a: list[int], b: list[int]) -> int:
    """Resultant of nonzero integer polynomials by the subresultant PRS."""
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if (da * db) % 2:
            sign = -1
    if db == 0:
        return sign * b[0] ** da
    ca, cb = _int_content(a), _int_content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    scale = ca**db * cb**da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da % 2) and (db % 2):
            sign = -sign
        # prem with the exact power lc(b)**(delta + 1)
        r = a[:]
        lb = b[-1]
        reductions = 0
        while len(r) - 1 >= db and any(r):
            dr = len(r) - 1
            coef = r[-1]
            r = [c * lb for c in r]
            for i in range(db + 1):
                r[dr - db + i] -= coef * b[i]
            while r and r[-1] == 0:
                r.pop()
            reductions += 1
        missing = delta + 1 - reductions
        if missing:
            r = [c * lb**missing for c in r]
        if not r:
            return 0
        denom = g * h**delta
        a, b = b, [c // denom for c in r]
        g = a[-1]
        if delta:
            num = g**delta
            h = num // h ** (delta - 1)
        if len(b) - 1 == 0:
            da = len(a) - 1
            res = b[0] ** da // h ** (da - 1) if da >= 1 else b[0]
            return sign * scale * res


def resultant(f: Poly, g: Poly) -> Fraction:
    """Res(f, g), exact, with the Sylvester determinant sign convention."""
    if f.is_zero or g.is_zero:
        raise DomainError("resultant of the zero polynomial")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    df, fi = f.integer_coeffs()
    dg, gi = g.integer_coeffs()
    res = _subresultant_res(fi, gi)
    return Fraction(res, df**g.degree * dg**f.degree)


def discriminant(f: Poly) -> Fraction:
    """(-1)**(d(d-1)/2) * Res(f, f') for a monic polynomial of degree d.

    Equals the product of (x_i - x_j)**2 over the complex roots.
    """
    if f.is_zero or not f.is_monic:
        raise DomainError("discriminant requires a monic polynomial")
    d = f.degree
    if d < 1:
        raise DomainError("discriminant requires degree >= 1")
    if d == 1:
        return Fraction(1)
    res = resultant(f, f.derivative())
    return -res if (d * (d - 1) // 2) % 2 else res


# ---------------------------------------------------------------------------
# etale algebras and trace forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EtaleAlgebra:
    """Q[x]/(f) for monic squarefree f; reducible f models a product of fields."""

    poly: Poly

    def __init__(self, poly: "Poly | Iterable"):
        if not isinstance(poly, Poly):
            poly = Poly(poly)
        if poly.is_zero or poly.degree < 1:
            raise DomainError("defining polynomial must have degree >= 1")
        if not poly.is_monic:
            raise DomainError("defining polynomial must be monic")
        if not poly.is_squarefree():
            raise DomainError("defining polynomial must be squarefree")
        object.__setattr__(self, "poly", poly)

    @property
    def degree(self) -> int:
        return self.poly.degree


def power_sums(f: Poly, upto: int) -> list[Fraction]:
    """p_0, ..., p_upto for the roots of monic f, by Newton's identities."""
    if not f.is_monic:
        raise DomainError("power sums require a monic polynomial")
    d = f.degree
    c = f.coeffs
    p: list[Fraction] = [Fraction(d)]
    for k in range(1, upto + 1):
        s = Fraction(0)
        for i in range(1, min(k, d + 1)):
            s += c[d - i] * p[k - i]
        if k <= d:
            s += k * c[d - k]
        p.append(-s)
    return p


def trace_gram(algebra: EtaleAlgebra) -> QuadraticForm:
    """Gram matrix of (u, v) -> trace(u*v) in the power basis 1, x, ..., x^(d-1).

    Entry (i, j) is the power sum p_(i+j); squarefreeness of the defining
    polynomial is exactly nondegeneracy of this matrix.
    """
    d = algebra.degree
    p = power_sums(algebra.poly, 2 * d - 2)
    return QuadraticForm([[p[i + j] for j in range(d)] for i in range(d)])


@dataclass(frozen=True)
class TraceFormReport:
    """Trace form of an etale algebra together with its classifying data."""

    gram: QuadraticForm
    disc_field: SquareClass
    signature: tuple[int, int]
    form_invariants: FormInvariants

    def to_json(self) -> dict:
        return {
            "gram": self.gram.to_json(),
            "disc_field": self.disc_field.to_json(),
            "signature": list(self.signature),
            "invariants": self.form_invariants.to_json(),
        }


def trace_form_report(algebra: EtaleAlgebra) -> TraceFormReport:
    gram = trace_gram(algebra)
    inv = invariants(gram)
    r1, r2 = real_signature(algebra)
    report = TraceFormReport(
        gram=gram,
        disc_field=SquareClass(discriminant(algebra.poly)),
        signature=(r1 + r2, r2),
        form_invariants=inv,
    )
    if report.disc_field != inv.w1:
        raise InternalError("trace form discriminant mismatch")
    if report.signature != inv.signature:
        raise InternalError("trace form signature mismatch")
    return report


# ---------------------------------------------------------------------------
# real root counting
# ---------------------------------------------------------------------------


def _sign_at_infinity(p: Poly, positive: bool) -> int:
    lead = p.leading
    s = 1 if lead > 0 else -1
    if not positive and p.degree % 2:
        s = -s
    return s


def _primitive_int(p: Poly) -> Poly:
    # positive rescaling only: sign data is what Sturm chains consume
    _, cs = p.integer_coeffs()
    c = _int_content(cs)
    return Poly([Fraction(x, c) for x in cs])


def sturm_chain(f: Poly) -> list[Poly]:
    chain = [_primitive_int(f), _primitive_int(f.derivative())]
    while chain[-1].degree > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            raise DomainError("Sturm chain requires a squarefree polynomial")
        chain.append(_primitive_int(-r))
    return chain


def count_real_roots(f: Poly) -> int:
    """Number of real roots of a squarefree polynomial."""
    if f.is_zero or f.degree < 1:
        return 0
    chain = sturm_chain(f)

    def variations(positive: bool) -> int:
        signs = []
        for p in chain:
            if p.is_zero:
                continue
            signs.append(_sign_at_infinity(p, positive) if p.degree > 0 else (1 if p.coeffs[0] > 0 else -1))
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def real_signature(algebra: EtaleAlgebra) -> tuple[int, int]:
    """(r1, r2): real roots and conjugate pairs of the defining polynomial."""
    r1 = count_real_roots(algebra.poly)
    d = algebra.degree
    if (d - r1) % 2:
        raise InternalError("parity of complex roots broken")
    return r1, (d - r1) // 2


# ---------------------------------------------------------------------------
# factorization patterns mod p
# ---------------------------------------------------------------------------
# Dense F_p polynomials as int lists, lowest degree first.


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) - 1 < db:
        return [], _fp_trim(a)
    quo = [0] * (len(a) - db)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] * inv % p
        quo[k] = c
        if c:
            for i in range(db + 1):
                a[k + i] = (a[k + i] - c * b[i]) % p
    return _fp_trim(quo), _fp_trim(a)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(a[:]), _fp_trim(b[:])
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _fp_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _fp_deriv(a: list[int], p: int) -> list[int]:
    return _fp_trim([(i * c) % p for i, c in enumerate(a)][1:])


def _fp_squarefree_parts(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Decompose monic f over F_p as a product of squarefree parts with
    multiplicities: returns (g, m) pairs with f = prod g**m, g squarefree."""
    out: list[tuple[list[int], int]] = []
    e = 1
    while len(f) - 1 > 0:
        fp = _fp_deriv(f, p)
        if not fp:
            # f = g(x^p) = g(x)**p over the prime field
            f = _fp_trim([f[i] for i in range(0, len(f), p)])
            e *= p
            continue
        c = _fp_gcd(f, fp, p)
        w = _fp_divmod(f, c, p)[0]
        i = 1
        while len(w) - 1 > 0:
            y = _fp_gcd(w, c, p)
            z = _fp_divmod(w, y, p)[0]
            if len(z) - 1 > 0:
                out.append((z, i * e))
            w = y
            if y != [1]:
                c = _fp_divmod(c, y, p)[0]
            i += 1
        f = c
    return out


def _fp_distinct_degree(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """(product of irreducible factors, common degree) pairs, f squarefree monic."""
    out = []
    h = [0, 1]
    i = 1
    g = f[:]
    while len(g) - 1 >= 2 * i:
        h = _fp_powmod(h, p, g, p)
        probe = h[:] + [0, 0]
        probe[1] = (probe[1] - 1) % p  # h - x
        probe = _fp_trim(probe)
        d = _fp_gcd(g, probe, p) if probe else g[:]
        if len(d) - 1 > 0:
            out.append((d, i))
            g = _fp_divmod(g, d, p)[0]
            h = _fp_divmod(h, g, p)[1]
        i += 1
    if len(g) - 1 > 0:
        out.append((g, len(g) - 1))
    return out


def _fp_split_equal_degree(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Split a squarefree monic product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _fp_trim(a)
        if len(a) - 1 < 1:
            continue
        if p == 2:
            # trace map a + a^2 + a^4 + ... splits over F_2
            t = a[:]
            acc = a[:]
            for _ in range(d - 1):
                acc = _fp_powmod(acc, 2, f, p)
                width = max(len(t), len(acc))
                t = _fp_trim([((t[i] if i < len(t) else 0) + (acc[i] if i < len(acc) else 0)) % p for i in range(width)])
            g = _fp_gcd(f, t, p) if t else []
        else:
            b = _fp_powmod(a, (p**d - 1) // 2, f, p)
            b = b[:]
            if not b:
                continue
            b[0] = (b[0] - 1) % p
            g = _fp_gcd(f, _fp_trim(b), p)
        if g and 0 < len(g) - 1 < n:
            rest = _fp_divmod(f, g, p)[0]
            return _fp_split_equal_degree(g, d, p, rng) + _fp_split_equal_degree(rest, d, p, rng)


def factor_pattern_mod_p(algebra: EtaleAlgebra, p: int) -> tuple[tuple[int, int], ...]:
    """Degrees and multiplicities of the irreducible factors of f mod p.

    Returned sorted as ((degree, multiplicity), ...) with repetitions, so
    x**2+1 mod 5 gives ((1, 1), (1, 1)).  When p does not divide disc(f)
    this is the splitting type of p in the algebra.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    f = algebra.poly
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise DomainError(f"coefficient denominator divisible by {p}")
    fp = [int(c.numerator * pow(c.denominator, -1, p)) % p for c in f.coeffs]
    fp = _fp_trim(fp)
    if len(fp) - 1 != f.degree:
        raise InternalError("monic reduction lost its degree")
    rng = random.Random(0x5EED5)
    pattern: list[tuple[int, int]] = []
    for part, mult in _fp_squarefree_parts(fp, p):
        for block, d in _fp_distinct_degree(part, p):
            for g in _fp_split_equal_degree(block, d, p, rng):
                pattern.append((len(g) - 1, mult))
    pattern.sort()
    if sum(d * m for d, m in pattern) != f.degree:
        raise InternalError("factor pattern does not account for the degree")
    return tuple(pattern)
