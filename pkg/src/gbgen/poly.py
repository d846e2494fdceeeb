"""Sparse multivariate polynomials with exact coefficients.

A polynomial lives in a ``PolyRing`` (field, number of variables, term
order) and stores its terms as a tuple of (exponent tuple, coefficient)
pairs sorted descending under the ring's order, with no zero coefficients.
The zero polynomial is the empty tuple.  Coefficients are the raw values
described in :mod:`gbgen.field` (int residues or Fractions), which keeps
the arithmetic loops cheap.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .field import Coeff, FieldElement, FieldSpec
from .orders import Term, TermOrder, term_divides, term_div

__all__ = [
    "PolyRing",
    "Polynomial",
    "ParseError",
    "normal_form",
]


class ParseError(ValueError):
    """Polynomial text that does not match the expected grammar."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"at position {pos} in {text!r}: {message}")
        self.pos = pos


@dataclass(frozen=True)
class PolyRing:
    """Context shared by a family of polynomials."""

    field: FieldSpec
    nvars: int
    order: TermOrder

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if self.order.arity != self.nvars:
            raise ValueError(f"order arity {self.order.arity} != nvars {self.nvars}")

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return Polynomial(self, (((0,) * self.nvars, self.field.one()),))

    def variable(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise ValueError(f"variable index {i} out of range for {self.nvars} variables")
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one()),))

    def monomial(self, coeff, term: Term) -> "Polynomial":
        c = self.field.canon(coeff.value if isinstance(coeff, FieldElement) else coeff)
        if not c:
            return self.zero()
        if len(term) != self.nvars or any(e < 0 for e in term):
            raise ValueError(f"bad exponent vector {term!r}")
        return Polynomial(self, ((tuple(term), c),))

    def from_terms(self, pairs) -> "Polynomial":
        """Build a polynomial from (term, coefficient) pairs in any order.

        Repeated terms are accumulated; zero coefficients drop out.
        """
        acc: dict[Term, Coeff] = {}
        field = self.field
        for term, coeff in dict(pairs).items() if isinstance(pairs, dict) else pairs:
            term = tuple(term)
            if len(term) != self.nvars or any(e < 0 for e in term):
                raise ValueError(f"bad exponent vector {term!r}")
            c = field.canon(coeff.value if isinstance(coeff, FieldElement) else coeff)
            if term in acc:
                c = field.add(acc[term], c)
            acc[term] = c
        return Polynomial(self, _canonical(self, acc))

    def with_order(self, order: TermOrder) -> "PolyRing":
        return PolyRing(self.field, self.nvars, order)

    def parse(self, text: str) -> "Polynomial":
        return _parse_polynomial(self, text)

    def __str__(self):
        return f"{self.field}[{', '.join(f'x{i}' for i in range(self.nvars))}]/{self.order.name()}"


def _canonical(ring: PolyRing, acc: dict) -> tuple:
    """Sort a term->coeff dict descending and drop zeros."""
    items = [(t, c) for t, c in acc.items() if c]
    if ring.order.kind.value == "lex":
        items.sort(reverse=True)
    else:
        key = ring.order.key
        items.sort(key=lambda pair: key(pair[0]), reverse=True)
    return tuple(items)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` is canonical and descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- inspection ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def leading_term(self) -> tuple[Term, Coeff]:
        """The (exponents, coefficient) pair largest under the ring order."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    @property
    def leading_monomial(self) -> Term:
        return self.leading_term[0]

    @property
    def leading_coefficient(self) -> Coeff:
        return self.leading_term[1]

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(t) for t, _ in self.terms)

    def num_terms(self) -> int:
        return len(self.terms)

    def coefficient(self, term: Term) -> Coeff:
        term = tuple(term)
        for t, c in self.terms:
            if t == term:
                return c
        return self.ring.field.zero()

    def variables_used(self) -> set[int]:
        used = set()
        for t, _ in self.terms:
            for i, e in enumerate(t):
                if e:
                    used.add(i)
        return used

    # -- arithmetic ----------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        field = self.ring.field
        acc = dict(self.terms)
        for t, c in other.terms:
            prev = acc.get(t)
            acc[t] = c if prev is None else field.add(prev, c)
        return Polynomial(self.ring, _canonical(self.ring, acc))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        field = self.ring.field
        acc = dict(self.terms)
        for t, c in other.terms:
            prev = acc.get(t)
            acc[t] = field.neg(c) if prev is None else field.sub(prev, c)
        return Polynomial(self.ring, _canonical(self.ring, acc))

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, tuple((t, neg(c)) for t, c in self.terms))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.scaled(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        mod = self.ring.field.modulus
        acc: dict[Term, Coeff] = {}
        for ta, ca in self.terms:
            for tb, cb in other.terms:
                t = tuple(x + y for x, y in zip(ta, tb))
                c = ca * cb if mod is None else (ca * cb) % mod
                prev = acc.get(t)
                if prev is None:
                    acc[t] = c
                else:
                    acc[t] = prev + c if mod is None else (prev + c) % mod
        return Polynomial(self.ring, _canonical(self.ring, acc))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not defined here")
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def scaled(self, coeff) -> "Polynomial":
        """Multiply by a scalar."""
        field = self.ring.field
        c = field.canon(coeff.value if isinstance(coeff, FieldElement) else coeff)
        if not c:
            return self.ring.zero()
        mul = field.mul
        return Polynomial(self.ring, tuple((t, mul(x, c)) for t, x in self.terms))

    def term_scaled(self, coeff: Coeff, term: Term) -> "Polynomial":
        """Multiply by coeff * x^term.  Order-preserving, so no re-sort."""
        if not coeff:
            return self.ring.zero()
        mod = self.ring.field.modulus
        if mod is None:
            return Polynomial(
                self.ring,
                tuple((tuple(x + y for x, y in zip(t, term)), c * coeff) for t, c in self.terms),
            )
        return Polynomial(
            self.ring,
            tuple((tuple(x + y for x, y in zip(t, term)), (c * coeff) % mod) for t, c in self.terms),
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading_coefficient
        if lc == self.ring.field.one():
            return self
        return self.scaled(self.ring.field.inv(lc))

    def resorted(self, order: TermOrder) -> "Polynomial":
        """The same polynomial viewed in the ring with ``order``."""
        ring = self.ring.with_order(order)
        return Polynomial(ring, _canonical(ring, dict(self.terms)))

    def evaluate(self, point) -> FieldElement:
        """Evaluate at a point given as a sequence of scalars."""
        field = self.ring.field
        values = [v.value if isinstance(v, FieldElement) else field.canon(v) for v in point]
        if len(values) != self.ring.nvars:
            raise ValueError(f"expected {self.ring.nvars} coordinates, got {len(values)}")
        total = field.zero()
        for t, c in self.terms:
            v = c
            for x, e in zip(values, t):
                if e:
                    v = field.mul(v, field.pow(x, e))
            total = field.add(total, v)
        return FieldElement(field, total)

    # -- comparisons and hashing ----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- rendering -------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        chunks = []
        for idx, (term, coeff) in enumerate(self.terms):
            sign, mag = field.sign_magnitude(coeff)
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(term) if e
            )
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                chunks.append(body if sign > 0 else "-" + body)
            else:
                chunks.append((" + " if sign > 0 else " - ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"<{self} over {self.ring}>"


# -- division ------------------------------------------------------------


def normal_form(f: Polynomial, divisors) -> tuple[Polynomial, list[Polynomial]]:
    """Multivariate division of ``f`` by an ordered list of divisors.

    Returns ``(remainder, quotients)`` with
    ``f == sum(q*d for q, d in zip(quotients, divisors)) + remainder`` and no
    remainder term divisible by any divisor's leading term.  Ties go to the
    first divisor in the list whose leading term divides, which makes the
    result deterministic for a fixed list order.
    """
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    ring = f.ring
    field = ring.field
    heads = []
    for d in divisors:
        if d.ring != ring:
            raise ValueError("divisors must share the dividend's ring")
        if not d:
            raise ValueError("zero polynomial among the divisors")
        heads.append(d.leading_term)

    quotients: list[dict[Term, Coeff]] = [{} for _ in divisors]
    remainder: list[tuple[Term, Coeff]] = []
    work = f
    while work.terms:
        lt, lc = work.terms[0]
        for i, (ht, hc) in enumerate(heads):
            if term_divides(ht, lt):
                factor_t = term_div(lt, ht)
                factor_c = field.div(lc, hc)
                work = work - divisors[i].term_scaled(factor_c, factor_t)
                q = quotients[i]
                prev = q.get(factor_t)
                q[factor_t] = factor_c if prev is None else field.add(prev, factor_c)
                break
        else:
            # head is irreducible: it moves to the remainder, and every later
            # head is strictly smaller, so appending keeps descending order
            remainder.append((lt, lc))
            work = Polynomial(ring, work.terms[1:])
    rem = Polynomial(ring, tuple(remainder))
    return rem, [Polynomial(ring, _canonical(ring, q)) for q in quotients]


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|x(\d+)|(\^)|(\*)|(/)|(\+)|(-))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise ParseError(text, pos, f"unexpected character {text[pos:].strip()[0]!r}")
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("var", int(m.group(2)), m.start(2)))
        elif m.group(3):
            out.append(("pow", None, m.start(3)))
        elif m.group(4):
            out.append(("mul", None, m.start(4)))
        elif m.group(5):
            out.append(("div", None, m.start(5)))
        elif m.group(6):
            out.append(("plus", None, m.start(6)))
        else:
            out.append(("minus", None, m.start(7)))
        pos = m.end()
    return out


def _parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse the renderer's grammar: signed *-separated coefficient/monomial terms."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError(text, 0, "empty input")
    field = ring.field
    acc: dict[Term, Coeff] = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        kind, _, pos = tokens[i]
        if kind == "plus":
            if first:
                raise ParseError(text, pos, "leading '+' is not part of the grammar")
            i += 1
        elif kind == "minus":
            sign = -1
            i += 1
        elif not first:
            raise ParseError(text, pos, "expected '+' or '-' between terms")
        first = False
        if i >= n:
            raise ParseError(text, len(text), "dangling sign")

        coeff = None
        exps = [0] * ring.nvars
        saw_factor = False
        while True:
            kind, val, pos = tokens[i]
            if kind == "int":
                num = val
                den = 1
                if i + 1 < n and tokens[i + 1][0] == "div":
                    if field.modulus is not None:
                        raise ParseError(text, tokens[i + 1][2], "fractions only make sense over the rationals")
                    if i + 2 >= n or tokens[i + 2][0] != "int":
                        raise ParseError(text, tokens[i + 1][2], "expected an integer denominator")
                    den = tokens[i + 2][1]
                    if den == 0:
                        raise ParseError(text, tokens[i + 2][2], "zero denominator")
                    i += 2
                value = Fraction(num, den) if field.modulus is None else num
                coeff = value if coeff is None else field.mul(field.canon(coeff), field.canon(value))
                i += 1
            elif kind == "var":
                if val >= ring.nvars:
                    raise ParseError(text, pos, f"variable x{val} out of range for {ring.nvars} variables")
                e = 1
                if i + 1 < n and tokens[i + 1][0] == "pow":
                    if i + 2 >= n or tokens[i + 2][0] != "int":
                        raise ParseError(text, tokens[i + 1][2], "expected an integer exponent after '^'")
                    e = tokens[i + 2][1]
                    i += 2
                exps[val] += e
                i += 1
            else:
                raise ParseError(text, pos, "expected a coefficient or variable")
            saw_factor = True
            if i < n and tokens[i][0] == "mul":
                i += 1
                if i >= n:
                    raise ParseError(text, len(text), "dangling '*'")
                continue
            break
        if not saw_factor:
            raise ParseError(text, len(text), "empty term")
        c = field.canon(coeff if coeff is not None else 1)
        if sign < 0:
            c = field.neg(c)
        t = tuple(exps)
        prev = acc.get(t)
        acc[t] = c if prev is None else field.add(prev, c)
    return Polynomial(ring, _canonical(ring, acc))
