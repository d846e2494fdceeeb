"""Turning a known basis into a scrambled generating set of the same ideal.

The transform multiplies the basis vector G (length n) by

    F = U1 * P * U2 * G

where U2 stacks an n x n unimodular upper-triangular block over zero rows,
P permutes the s coordinates and U1 is s x s unimodular upper-triangular.
Unimodular here means ones on the diagonal, so both triangular factors are
invertible over the polynomial ring and A = U1*P*U2 has the explicit left
inverse [U2block^-1 | 0] P^T U1^-1.  That guarantees <F> = <G> while F
itself is larger, denser and (almost always) no Groebner basis at all.

Matrix entries are polynomials of bounded total degree, present with
probability ``density``; draw order is row-major over the strict upper
triangle (s, then U1, then the U2 block, then P), each entry drawing term
count, then exponents, then coefficients.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import FieldSpec
from .poly import Polynomial, PolyRing

__all__ = [
    "BackwardSpec",
    "PolyMatrix",
    "BackwardSample",
    "sample_entry",
    "sample_unimodular_upper",
    "sample_permutation",
    "matrix_apply",
    "backward_transform",
    "is_left_invertible_form",
]


@dataclass(frozen=True)
class BackwardSpec:
    """Knobs for the scrambling transform."""

    s_max: int  # row count upper bound; s is uniform on [n, s_max]
    max_entry_degree: int = 3  # total-degree cap for sampled entries
    density: float = 1.0  # probability an upper-triangular slot is filled
    density_u1: float | None = None  # per-factor overrides; None means use density
    density_u2: float | None = None
    max_entry_terms: int = 2  # entry term counts are uniform on [1, this]
    num_range: tuple[int, int] = (-5, 5)  # rational numerator bounds for entries
    den_range: tuple[int, int] = (1, 5)
    coeff_limit: int | None = 100  # reject rational outputs with |num| or den above this
    max_retries: int = 50  # rejection budget before giving up with a flag

    def __post_init__(self):
        if self.s_max < 1:
            raise ValueError("s_max must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")
        if self.max_entry_terms < 1:
            raise ValueError("max_entry_terms must be at least 1")

    @property
    def u1_density(self) -> float:
        return self.density if self.density_u1 is None else self.density_u1

    @property
    def u2_density(self) -> float:
        return self.density if self.density_u2 is None else self.density_u2


class PolyMatrix:
    """A dense matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, entries):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
            for p in row:
                if not isinstance(p, Polynomial) or p.ring != ring:
                    raise ValueError("entries must be polynomials over the matrix ring")

    @staticmethod
    def identity(ring: PolyRing, size: int) -> "PolyMatrix":
        one, zero = ring.one(), ring.zero()
        return PolyMatrix(ring, [[one if i == j else zero for j in range(size)] for i in range(size)])

    @staticmethod
    def permutation(ring: PolyRing, perm) -> "PolyMatrix":
        """Row i carries a 1 in column perm[i]: (P @ v)[i] == v[perm[i]]."""
        perm = list(perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm!r}")
        one, zero = ring.one(), ring.zero()
        return PolyMatrix(ring, [[one if j == p else zero for j in range(len(perm))] for p in perm])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ring != other.ring or self.cols != other.rows:
            raise ValueError("shape or ring mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def apply(self, polys) -> list:
        """Matrix-vector product against a list of polynomials."""
        polys = list(polys)
        if len(polys) != self.cols:
            raise ValueError(f"expected {self.cols} polynomials, got {len(polys)}")
        out = []
        for i in range(self.rows):
            acc = self.ring.zero()
            for k, g in enumerate(polys):
                e = self.entries[i][k]
                if e and g:
                    acc = acc + e * g
            out.append(acc)
        return out

    def is_unimodular_upper(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.ring.one()
        for i in range(self.rows):
            if self.entries[i][i] != one:
                return False
            for j in range(i):
                if self.entries[i][j]:
                    return False
        return True

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        one = self.ring.one()
        seen = set()
        for row in self.entries:
            hits = [j for j, p in enumerate(row) if p]
            if len(hits) != 1 or row[hits[0]] != one:
                return False
            seen.add(hits[0])
        return len(seen) == self.rows

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __repr__(self):
        return f"<PolyMatrix {self.rows}x{self.cols} over {self.ring}>"


@lru_cache(maxsize=None)
def _monomials_up_to(nvars: int, max_degree: int) -> tuple:
    """All exponent vectors with total degree <= max_degree, in a fixed order."""
    out = [
        exps
        for exps in itertools.product(range(max_degree + 1), repeat=nvars)
        if sum(exps) <= max_degree
    ]
    out.sort()
    return tuple(out)


def sample_entry(ring: PolyRing, spec: BackwardSpec, rng: random.Random) -> Polynomial:
    """One nonzero matrix entry: bounded degree, 1..max_entry_terms terms."""
    count = rng.randint(1, spec.max_entry_terms)
    terms = rng.sample(_monomials_up_to(ring.nvars, spec.max_entry_degree), count)
    pairs = []
    for t in sorted(terms, reverse=True):
        if ring.field.modulus is not None:
            c = rng.randrange(1, ring.field.modulus)
        else:
            lo, hi = spec.num_range
            num = 0
            while num == 0:
                num = rng.randint(lo, hi)
            c = Fraction(num, rng.randint(*spec.den_range))
        pairs.append((t, c))
    return ring.from_terms(pairs)


def sample_unimodular_upper(
    ring: PolyRing, size: int, spec: BackwardSpec, rng: random.Random, density: float | None = None
) -> PolyMatrix:
    """Unit diagonal, zero below, random sparse entries above."""
    if density is None:
        density = spec.density
    one, zero = ring.one(), ring.zero()
    entries = []
    for i in range(size):
        row = []
        for j in range(size):
            if j < i:
                row.append(zero)
            elif j == i:
                row.append(one)
            elif rng.random() < density:
                row.append(sample_entry(ring, spec, rng))
            else:
                row.append(zero)
        entries.append(row)
    return PolyMatrix(ring, entries)


def sample_permutation(size: int, rng: random.Random) -> list:
    """A uniform permutation of range(size) (Fisher-Yates via rng.shuffle)."""
    perm = list(range(size))
    rng.shuffle(perm)
    return perm


def matrix_apply(matrix: PolyMatrix, polys) -> list:
    return matrix.apply(polys)


@dataclass
class BackwardSample:
    """One scrambled system; G appears as F = U1 P U2 G."""

    F: list
    s: int
    over_range: bool = False
    retries: int = 0


def _coeffs_in_range(polys, limit: int) -> bool:
    for f in polys:
        for _, c in f.terms:
            if abs(c.numerator) > limit or c.denominator > limit:
                return False
    return True


def backward_transform(basis, spec: BackwardSpec, rng: random.Random) -> BackwardSample:
    """Scramble ``basis`` into an equivalent generating set of s polynomials.

    s is uniform on [n, s_max].  Over the rationals, output whose
    coefficients exceed ``coeff_limit`` is rejected and the three matrices
    are redrawn (same s) up to ``max_retries`` times; if the budget runs out
    the last draw is returned flagged ``over_range``.
    """
    basis = list(basis)
    n = len(basis)
    if n == 0:
        raise ValueError("need a nonempty basis")
    ring = basis[0].ring
    for g in basis:
        if g.ring != ring:
            raise ValueError("basis members must share one ring")
    if spec.s_max < n:
        raise ValueError(f"s_max {spec.s_max} below the basis size {n}")

    s = rng.randint(n, spec.s_max)
    check_range = ring.field.modulus is None and spec.coeff_limit is not None
    retries = 0
    while True:
        u1 = sample_unimodular_upper(ring, s, spec, rng, spec.u1_density)
        u2 = sample_unimodular_upper(ring, n, spec, rng, spec.u2_density)
        perm = sample_permutation(s, rng)

        padded = u2.apply(basis) + [ring.zero()] * (s - n)
        permuted = [padded[perm[i]] for i in range(s)]
        F = u1.apply(permuted)

        if not check_range or _coeffs_in_range(F, spec.coeff_limit):
            return BackwardSample(F, s, over_range=False, retries=retries)
        if retries >= spec.max_retries:
            return BackwardSample(F, s, over_range=True, retries=retries)
        retries += 1


def is_left_invertible_form(
    s: int, n: int, P: PolyMatrix, U1: PolyMatrix, U2: PolyMatrix
) -> bool:
    """Structural check that U1 P U2 admits the stacked-triangular left inverse.

    Requires s >= n >= 1, U1 an s x s unimodular upper triangle, P an s x s
    permutation, and U2 an s x n stack of an n x n unimodular upper triangle
    over zero rows.
    """
    if n < 1 or s < n:
        return False
    if U1.rows != s or not U1.is_unimodular_upper():
        return False
    if P.rows != s or P.cols != s or not P.is_permutation():
        return False
    if U2.rows != s or U2.cols != n:
        return False
    ring = U2.ring
    top = PolyMatrix(ring, U2.entries[:n])
    if not top.is_unimodular_upper():
        return False
    return all(not p for row in U2.entries[n:] for p in row)
