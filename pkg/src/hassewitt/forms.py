"""Nondegenerate quadratic forms over Q and their complete invariants.

A form is a symmetric rational Gram matrix.  Congruence diagonalization is
done by symmetric Gaussian elimination in exact arithmetic; the classifying
data (rank, signature, determinant class, degree-1 and degree-2 classes,
local Hasse units) is read off any diagonalization and does not depend on
the one chosen.  Two forms over Q are isometric iff all of it matches,
which is what :func:`isometric` decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .cohomology import (
    CohClass2,
    Place,
    SquareClass,
    cup_sum,
    hilbert_symbol,
    relevant_places,
)
from .errors import DomainError

Rat = Fraction


def _to_fraction_rows(rows: Iterable[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    out = []
    for row in rows:
        out.append(tuple(Fraction(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class QuadraticForm:
    """Symmetric rational Gram matrix with nonzero determinant."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows: Iterable[Sequence]):
        gram = _to_fraction_rows(rows)
        n = len(gram)
        if n == 0 or any(len(row) != n for row in gram):
            raise DomainError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise DomainError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)
        if _det(gram) == 0:
            raise DomainError("Gram matrix is degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def to_json(self) -> list[list]:
        return [[_rat_json(x) for x in row] for row in self.gram]

    def __repr__(self) -> str:
        return f"QuadraticForm({[list(map(str, r)) for r in self.gram]})"


def _rat_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _det(gram: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    n = len(gram)
    m = [list(row) for row in gram]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


@dataclass(frozen=True)
class DiagonalForm:
    """Diagonal representative <a_1, ..., a_n>, all entries nonzero."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable):
        ent = tuple(Fraction(x) for x in entries)
        if not ent or any(x == 0 for x in ent):
            raise DomainError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", ent)

    def form(self) -> QuadraticForm:
        n = len(self.entries)
        rows = [[self.entries[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        return QuadraticForm(rows)


def diagonal_form(entries: Iterable) -> QuadraticForm:
    """Shorthand for the form with the given diagonal Gram entries."""
    return DiagonalForm(entries).form()


def standard_form(n: int) -> QuadraticForm:
    """Sum of n squares."""
    if n < 1:
        raise DomainError("rank must be positive")
    return diagonal_form([1] * n)


def diagonalize(q: QuadraticForm) -> DiagonalForm:
    """Entries of a diagonal form congruent to q over Q.

    Symmetric elimination; a zero pivot with a nonzero off-diagonal entry
    in its row is repaired by the congruence e_i <- e_i +- e_j, which keeps
    the arithmetic rational and exact.
    """
    n = q.rank
    m = [list(row) for row in q.gram]

    def add_into(i: int, j: int, s: int) -> None:
        for k in range(n):
            m[i][k] += s * m[j][k]
        for k in range(n):
            m[k][i] += s * m[k][j]

    entries = []
    for i in range(n):
        if m[i][i] == 0:
            for j in range(i + 1, n):
                if m[i][j] != 0:
                    # one of the two signs always produces a nonzero pivot
                    s = 1 if m[i][i] + 2 * m[i][j] + m[j][j] != 0 else -1
                    add_into(i, j, s)
                    break
            else:
                raise DomainError("Gram matrix is degenerate")
        pivot = m[i][i]
        for j in range(i + 1, n):
            if m[j][i]:
                f = m[j][i] / pivot
                for k in range(n):
                    m[j][k] -= f * m[i][k]
                for k in range(n):
                    m[k][j] -= f * m[k][i]
        entries.append(m[i][i])
    return DiagonalForm(entries)


@dataclass(frozen=True, eq=False)
class FormInvariants:
    """Full classifying data of a rational form.

    disc and w1 are both the square class of the product of diagonal
    entries (no sign twist is applied) and therefore coincide; both are
    reported.  hasse_local carries the product of local symbols over pairs
    of diagonal entries, tabulated on the finite places where it can be
    nontrivial; it is +1 everywhere else.  Equality compares the canonical
    data, so the incidental choice of tabulated places does not matter.
    """

    rank: int
    signature: tuple[int, int]
    disc: SquareClass
    w1: SquareClass
    w2: CohClass2
    hasse_local: dict[Place, int]

    @property
    def hasse_minus_places(self) -> frozenset[Place]:
        return frozenset(v for v, s in self.hasse_local.items() if s == -1)

    def _canonical(self):
        return (self.rank, self.signature, self.disc, self.w2, self.hasse_minus_places)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormInvariants):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "signature": list(self.signature),
            "disc": self.disc.to_json(),
            "w1": self.w1.to_json(),
            "w2": self.w2.to_json(),
            "hasse_local": {repr(v): s for v, s in sorted(self.hasse_local.items())},
        }


def invariants(q: QuadraticForm) -> FormInvariants:
    """rank, signature, determinant class, w1, w2 and local Hasse units."""
    diag = diagonalize(q).entries
    pos = sum(1 for a in diag if a > 0)
    neg = len(diag) - pos
    disc = SquareClass(1)
    for a in diag:
        disc = disc * SquareClass(a)
    w2 = cup_sum(diag)
    places = relevant_places(*diag)
    hasse = {}
    for v in places:
        if v.is_infinite:
            continue
        s = 1
        for a, b in combinations(diag, 2):
            s *= hilbert_symbol(a, b, v)
        hasse[v] = s
    return FormInvariants(
        rank=len(diag),
        signature=(pos, neg),
        disc=disc,
        w1=disc,
        w2=w2,
        hasse_local=hasse,
    )


def isometric(q1: QuadraticForm, q2: QuadraticForm) -> bool:
    """Isometry over Q: same rank, signature, determinant class and local
    Hasse unit at every place where either form can ramify."""
    if q1.rank != q2.rank:
        return False
    i1 = invariants(q1)
    i2 = invariants(q2)
    if i1.signature != i2.signature or i1.disc != i2.disc:
        return False
    return i1.hasse_minus_places == i2.hasse_minus_places


def orthogonal_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    """Block-diagonal sum."""
    n1, n2 = q1.rank, q2.rank
    zero = Fraction(0)
    rows = []
    for i in range(n1):
        rows.append(list(q1.gram[i]) + [zero] * n2)
    for i in range(n2):
        rows.append([zero] * n1 + list(q2.gram[i]))
    return QuadraticForm(rows)


def scale(q: QuadraticForm, c) -> QuadraticForm:
    """The form c * q."""
    c = Fraction(c)
    if c == 0:
        raise DomainError("scaling factor must be nonzero")
    return QuadraticForm([[c * x for x in row] for row in q.gram])
