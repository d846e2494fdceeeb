"""Buchberger's algorithm and Groebner basis predicates.

The completion loop follows the classic textbook shape: keep a pair queue
keyed by the total degree of the lcm of the leading terms (the "normal"
selection strategy), discard pairs with coprime leading terms, reduce the
S-polynomial against the whole working basis, and append nonzero remainders.
The returned basis is always fully interreduced, monic and sorted ascending
by leading term, so two runs over the same ideal agree member for member.
"""

import heapq
import time
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from math import gcd

from .orders import term_div, term_divides, term_lcm, total_degree
from .poly import Polynomial, normal_form

__all__ = [
    "GroebnerStats",
    "GroebnerResult",
    "GroebnerTimeout",
    "s_polynomial",
    "buchberger",
    "reduce_basis",
    "is_groebner",
    "is_reduced_groebner",
    "ideal_equal",
]


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    zero_reductions: int = 0
    pairs_skipped: int = 0
    basis_additions: int = 0
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {
            "pairs_processed": self.pairs_processed,
            "zero_reductions": self.zero_reductions,
            "pairs_skipped": self.pairs_skipped,
            "basis_additions": self.basis_additions,
            "elapsed": self.elapsed,
        }


@dataclass
class GroebnerResult:
    basis: list
    stats: GroebnerStats = dataclass_field(default_factory=GroebnerStats)


class GroebnerTimeout(Exception):
    """Completion exceeded its time budget; carries the stats so far."""

    def __init__(self, timeout: float, stats: GroebnerStats):
        super().__init__(f"no Groebner basis within {timeout} s")
        self.timeout = timeout
        self.stats = stats


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S(f, g): both leading terms lifted to their lcm and cancelled."""
    if not f or not g:
        raise ValueError("S-polynomials need nonzero inputs")
    if f.ring != g.ring:
        raise ValueError("ring mismatch")
    field = f.ring.field
    tf, cf = f.leading_term
    tg, cg = g.leading_term
    lcm = term_lcm(tf, tg)
    left = f.term_scaled(field.inv(cf), term_div(lcm, tf))
    right = g.term_scaled(field.inv(cg), term_div(lcm, tg))
    return left - right


def _pair_key(order, basis, i, j):
    lcm = term_lcm(basis[i].leading_monomial, basis[j].leading_monomial)
    return (total_degree(lcm), order.key(lcm), i, j)


def _primitive(f: Polynomial) -> Polynomial:
    """Scale a rational polynomial to coprime integer coefficients.

    Completion only ever needs basis members up to a nonzero scalar, and
    content-free integer coefficients stop the fraction growth that makes
    exact rational reductions crawl.  Prime-field input passes through.
    """
    if not f or f.ring.field.modulus is not None:
        return f
    den_lcm = 1
    for _, c in f.terms:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    num_gcd = 0
    for _, c in f.terms:
        num_gcd = gcd(num_gcd, c.numerator * (den_lcm // c.denominator))
    scale = Fraction(den_lcm, num_gcd)
    if f.leading_coefficient < 0:
        scale = -scale
    return f.scaled(scale)


def _int_form(g: Polynomial) -> list:
    """Terms of a rational polynomial with denominators cleared, head first."""
    den = 1
    for _, c in g.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    return [(t, c.numerator * (den // c.denominator)) for t, c in g.terms]


def _completion_reduce(f: Polynomial, divisors, int_divisors=None) -> Polynomial:
    """Reduce until the head is irreducible; the result is only used up to scale.

    Over prime fields this is the exact normal form.  Over the rationals it
    is a fraction-free pseudo-reduction run on plain integers (multiply
    through by the divisor's leading coefficient instead of dividing), with
    the content stripped after every scaling step so coefficient growth
    stays polynomial instead of compounding.  ``int_divisors`` carries the
    precomputed integer terms of ``divisors`` so callers in a loop do not
    re-clear denominators.
    """
    ring = f.ring
    if ring.field.modulus is not None:
        remainder, _ = normal_form(f, divisors)
        return remainder
    if int_divisors is None:
        int_divisors = [_int_form(g) for g in divisors]
    work = dict(_int_form(f))
    key = ring.order.key
    while work:
        t = max(work, key=key)
        c = work[t]
        hit = None
        for terms in int_divisors:
            if term_divides(terms[0][0], t):
                hit = terms
                break
        if hit is None:
            break
        (ht, hc), tail = hit[0], hit[1:]
        d = gcd(c, hc)
        a, b = hc // d, c // d
        if a != 1:
            work = {k: v * a for k, v in work.items()}
        del work[t]  # heads cancel exactly by construction
        shift = term_div(t, ht)
        for gt, gc in tail:
            k = tuple(x + y for x, y in zip(gt, shift))
            v = work.get(k, 0) - b * gc
            if v:
                work[k] = v
            else:
                work.pop(k, None)
        if a != 1 and work:
            content = 0
            for v in work.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                work = {k: v // content for k, v in work.items()}
    if not work:
        return ring.zero()
    content = 0
    for v in work.values():
        content = gcd(content, v)
        if content == 1:
            break
    head = max(work, key=key)
    if work[head] < 0:
        content = -content
    return ring.from_terms([(t, Fraction(v, content)) for t, v in work.items()])


def buchberger(polys, timeout: float | None = None, chain_criterion: bool = False) -> GroebnerResult:
    """Complete ``polys`` to the reduced Groebner basis of the ideal they generate.

    Zero polynomials in the input are skipped.  ``timeout`` (seconds) aborts
    the completion with GroebnerTimeout carrying partial statistics; the
    optional chain criterion prunes pairs whose lcm is divisible by the
    leading term of a third member whose own pairs were already handled.
    """
    gens = [f for f in polys if f]
    if not gens:
        raise ValueError("need at least one nonzero polynomial")
    ring = gens[0].ring
    for f in gens:
        if f.ring != ring:
            raise ValueError("generators must share one ring")

    start = time.monotonic()
    stats = GroebnerStats()
    basis = [_primitive(f) for f in gens]
    rational = ring.field.modulus is None
    int_basis = [_int_form(g) for g in basis] if rational else None
    order = ring.order
    queue: list = []
    done_pairs: set[tuple[int, int]] = set()
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            heapq.heappush(queue, _pair_key(order, basis, i, j))

    while queue:
        if timeout is not None and time.monotonic() - start > timeout:
            stats.elapsed = time.monotonic() - start
            raise GroebnerTimeout(timeout, stats)
        _, _, i, j = heapq.heappop(queue)
        fi, fj = basis[i], basis[j]
        ti, tj = fi.leading_monomial, fj.leading_monomial
        lcm = term_lcm(ti, tj)
        if lcm == tuple(a + b for a, b in zip(ti, tj)):
            # coprime leading terms: the S-polynomial always drops to zero
            stats.pairs_skipped += 1
            done_pairs.add((i, j))
            continue
        if chain_criterion and _chain_applies(basis, done_pairs, i, j, lcm):
            stats.pairs_skipped += 1
            done_pairs.add((i, j))
            continue
        remainder = _completion_reduce(s_polynomial(fi, fj), basis, int_basis)
        stats.pairs_processed += 1
        done_pairs.add((i, j))
        if not remainder:
            stats.zero_reductions += 1
            continue
        basis.append(remainder)
        if rational:
            int_basis.append(_int_form(remainder))
        stats.basis_additions += 1
        k = len(basis) - 1
        for m in range(k):
            heapq.heappush(queue, _pair_key(order, basis, m, k))

    reduced = reduce_basis(basis)
    stats.elapsed = time.monotonic() - start
    return GroebnerResult(reduced, stats)


def _chain_applies(basis, done_pairs, i, j, lcm) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if not term_divides(basis[k].leading_monomial, lcm):
            continue
        a = (min(i, k), max(i, k))
        b = (min(j, k), max(j, k))
        if a in done_pairs and b in done_pairs:
            return True
    return False


def reduce_basis(polys) -> list:
    """Interreduce a Groebner basis into its unique reduced form."""
    polys = [f.monic() for f in polys if f]
    if not polys:
        raise ValueError("nothing to reduce")
    order = polys[0].ring.order
    polys.sort(key=lambda f: order.key(f.leading_monomial))
    minimal: list[Polynomial] = []
    for f in polys:
        lt = f.leading_monomial
        if any(term_divides(g.leading_monomial, lt) for g in minimal):
            continue
        minimal.append(f)
    reduced: list[Polynomial] = []
    for idx, f in enumerate(minimal):
        others = reduced[:idx] + minimal[idx + 1 :]
        remainder, _ = normal_form(f, others) if others else (f, None)
        reduced.append(remainder.monic())
    reduced.sort(key=lambda f: order.key(f.leading_monomial))
    return reduced


def is_groebner(polys, timeout: float | None = None) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    gens = [f for f in polys if f]
    if not gens:
        raise ValueError("need at least one nonzero polynomial")
    start = time.monotonic()
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if timeout is not None and time.monotonic() - start > timeout:
                raise GroebnerTimeout(timeout, GroebnerStats())
            remainder, _ = normal_form(s_polynomial(gens[i], gens[j]), gens)
            if remainder:
                return False
    return True


def is_reduced_groebner(polys) -> bool:
    """True when ``polys`` is exactly a reduced Groebner basis.

    Requires: no zero member, every member monic, no term of one member
    divisible by another member's leading term, and the Buchberger criterion.
    """
    polys = list(polys)
    if not polys or any(not f for f in polys):
        return False
    one = polys[0].ring.field.one()
    if any(f.leading_coefficient != one for f in polys):
        return False
    heads = [f.leading_monomial for f in polys]
    for i, f in enumerate(polys):
        for j, h in enumerate(heads):
            if i == j:
                continue
            if any(term_divides(h, t) for t, _ in f.terms):
                return False
    return is_groebner(polys)


def ideal_equal(F, G, timeout: float | None = None) -> bool:
    """Whether two generating sets span the same ideal (via reduced bases)."""
    bf = buchberger(F, timeout=timeout, chain_criterion=True).basis
    bg = buchberger(G, timeout=timeout, chain_criterion=True).basis
    return bf == bg
