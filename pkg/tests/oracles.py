"""Independent oracles used by the test suite.

Each of these recomputes a quantity by a route disjoint from the library
implementation: naive trial division instead of rho, Sylvester
determinants instead of remainder sequences, companion matrix powers
instead of Newton recursions, exhaustive squaring instead of Euler's
criterion.
"""

from fractions import Fraction
import random

from hassewitt.forms import QuadraticForm
from hassewitt.numberfield import Poly


def naive_factor(n: int) -> dict[int, int]:
    """Plain trial division, no primality shortcuts."""
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def squares_mod(p: int) -> set[int]:
    return {x * x % p for x in range(1, p)}


def sylvester_resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant as the determinant of the Sylvester matrix, by fraction
    Gaussian elimination."""
    m, n = f.degree, g.degree
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    matrix = [[Fraction(0)] * size for _ in range(size)]
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        for j, c in enumerate(fc):
            matrix[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(gc):
            matrix[n + i][i + j] = c
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = -det
        det *= matrix[col][col]
        inv = 1 / matrix[col][col]
        for r in range(col + 1, size):
            if matrix[r][col]:
                factor = matrix[r][col] * inv
                for c in range(col, size):
                    matrix[r][c] -= factor * matrix[col][c]
    return det


def companion_power_traces(f: Poly, upto: int) -> list[Fraction]:
    """Traces of powers of the companion matrix of monic f, by exact
    matrix multiplication."""
    d = f.degree
    companion = [[Fraction(0)] * d for _ in range(d)]
    for i in range(1, d):
        companion[i][i - 1] = Fraction(1)
    for i in range(d):
        companion[i][d - 1] = -f.coeffs[i]
    traces = [Fraction(d)]
    power = [[Fraction(1) if i == j else Fraction(0) for j in range(d)] for i in range(d)]
    for _ in range(upto):
        power = [
            [sum(power[i][k] * companion[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]
        traces.append(sum(power[i][i] for i in range(d)))
    return traces


def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list[list[int]]:
    """Product of elementary integer operations: determinant +-1."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            c = rng.choice([-2, -1, 1, 2])
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            for k in range(n):
                m[i][k] = -m[i][k]
    return m


def congruent_form(q: QuadraticForm, p: list[list[int]]) -> QuadraticForm:
    """P^T G P for an invertible integer matrix P."""
    n = q.rank
    g = q.gram
    gp = [[sum(g[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    ptgp = [[sum(p[k][i] * gp[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return QuadraticForm(ptgp)


def random_nondegenerate_symmetric(rng: random.Random, n: int, bound: int) -> QuadraticForm:
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-bound, bound)
        try:
            return QuadraticForm(rows)
        except Exception:
            continue  # degenerate draw, resample


def brute_factor_pattern(coeffs: list[int], p: int) -> tuple[tuple[int, int], ...]:
    """Factor a monic polynomial over F_p by exhaustive trial division with
    monic irreducibles enumerated by brute force.  Only sane for tiny p and
    degree."""

    def poly_mod(a, b):
        a = a[:]
        while len(a) >= len(b):
            if a[-1] % p:
                c = a[-1] * pow(b[-1], -1, p) % p
                for i in range(len(b)):
                    a[len(a) - len(b) + i] = (a[len(a) - len(b) + i] - c * b[i]) % p
            del a[-1]
        while a and a[-1] % p == 0:
            a.pop()
        return a

    def poly_div_exact(a, b):
        q = [0] * (len(a) - len(b) + 1)
        a = a[:]
        for k in range(len(q) - 1, -1, -1):
            c = a[k + len(b) - 1] * pow(b[-1], -1, p) % p
            q[k] = c
            for i in range(len(b)):
                a[k + i] = (a[k + i] - c * b[i]) % p
        assert all(x % p == 0 for x in a[: len(b) - 1])
        return q

    def all_monic(deg):
        from itertools import product

        for tail in product(range(p), repeat=deg):
            yield list(tail) + [1]

    irreducibles = []
    for deg in range(1, 5):
        for candidate in all_monic(deg):
            # reducible iff some irreducible of degree <= deg/2 divides it
            if all(poly_mod(candidate, g) for g in irreducibles if 2 * (len(g) - 1) <= deg):
                irreducibles.append(candidate)

    f = [c % p for c in coeffs]
    pattern = []
    for g in irreducibles:
        mult = 0
        while len(f) >= len(g) and not poly_mod(f, g):
            f = poly_div_exact(f, g)
            mult += 1
        if mult:
            pattern.append((len(g) - 1, mult))
    assert len(f) == 1  # fully factored
    expanded = []
    for d, m in pattern:
        expanded.append((d, m))
    return tuple(sorted(expanded))
