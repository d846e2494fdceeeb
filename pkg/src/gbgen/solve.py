"""Solving shape-position systems over prime fields.

Over GF(p) the variety of a shape-position basis falls out by hand: scan
all p residues for roots of the univariate member, then back-substitute
each root through the x_i - g_i(t) members.  Root scanning by exhaustion
is exact and entirely adequate for word-sized p.
"""

from dataclasses import dataclass

from .field import FieldElement
from .poly import Polynomial

__all__ = ["SolutionSet", "ShapeError", "univariate_roots_fp", "solve_shape"]


class ShapeError(ValueError):
    """Input basis is not in the expected shape-position form."""


@dataclass
class SolutionSet:
    """All points of the variety; ``complete`` records that the scan was exhaustive."""

    points: list[tuple[FieldElement, ...]]
    complete: bool


def univariate_roots_fp(h: Polynomial) -> list[FieldElement]:
    """All roots in GF(p) of a polynomial using at most one variable.

    A nonzero constant has no roots; the zero polynomial is rejected
    (every residue would vanish).
    """
    field = h.ring.field
    if field.modulus is None:
        raise ValueError("root scanning works over prime fields only")
    if not h:
        raise ValueError("the zero polynomial vanishes everywhere")
    if len(h.variables_used()) > 1:
        raise ValueError("expected a univariate polynomial")
    p = field.modulus
    roots = []
    zero = [0] * h.ring.nvars
    for r in range(p):
        point = list(zero)
        for i in h.variables_used():
            point[i] = r
        if not h.evaluate(point):
            roots.append(FieldElement(field, r))
    return roots


def solve_shape(basis) -> SolutionSet:
    """Enumerate the variety of a shape-position basis over GF(p).

    Expects [x0 - g0(t), ..., x{n-2} - g{n-2}(t), h(t)] in any order, with t
    the last variable.  Each returned point is checked against every basis
    member before it is admitted.
    """
    members = [g for g in basis if g]
    if not members:
        raise ShapeError("empty basis")
    ring = members[0].ring
    field = ring.field
    if field.modulus is None:
        raise ValueError("solving is implemented over prime fields only")
    for g in members:
        if g.ring != ring:
            raise ShapeError("basis members must share one ring")
    n = ring.nvars
    last = n - 1

    univariate = None
    offsets: dict[int, Polynomial] = {}
    for g in members:
        used = g.variables_used()
        if used <= {last}:
            if univariate is not None:
                raise ShapeError("two members use only the last variable")
            univariate = g
            continue
        head, coeff = g.leading_term
        if sum(head) == 1 and head[last] == 0:
            i = head.index(1)
            tail = g - ring.monomial(coeff, head)
            if tail and not tail.variables_used() <= {last}:
                raise ShapeError(f"member for x{i} has a tail outside the last variable")
            if i in offsets:
                raise ShapeError(f"two members lead with x{i}")
            # normalize to x_i - g_i: with monic head, tail moves across the sign
            offsets[i] = -tail.scaled(field.inv(coeff)) if tail else ring.zero()
            continue
        raise ShapeError(f"unexpected member {g}")

    if univariate is None:
        raise ShapeError("no univariate member found")
    if sorted(offsets) != list(range(n - 1)):
        missing = sorted(set(range(n - 1)) - set(offsets))
        raise ShapeError(f"missing members for variables {missing}")

    points = []
    for root in univariate_roots_fp(univariate):
        coords = [field.zero()] * n
        coords[last] = root.value
        base = [0] * n
        base[last] = root.value
        for i in range(n - 1):
            coords[i] = offsets[i].evaluate(base).value if offsets[i] else field.zero()
        point = tuple(FieldElement(field, v) for v in coords)
        for g in members:
            if g.evaluate([c.value for c in point]):
                raise RuntimeError(f"internal error: candidate {point} fails {g}")
        points.append(point)
    return SolutionSet(points=points, complete=True)
