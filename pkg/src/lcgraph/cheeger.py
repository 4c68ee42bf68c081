"""Exact Cheeger constants and the spectral estimates attached to them.

The Cheeger constant of a connected weighted graph is

    h = min over proper subsets S  of  b(boundary S) / min(b(S), b(V \\ S)),

where b(S) is the total vertex weight of S and b(boundary S) sums the
weights of edges leaving S.  Over an ordered series field the minimum is
taken in the field order, so enumeration must be exhaustive: there is no
useful rounding that would let a heuristic cut stand in for the true one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import GraphValidationError
from .graphs import OFGraph
from .reports import Report
from .series import LCNumber, NUMERIC, format_series
from .spectral import MAX_VERTICES, Spectrum


@dataclass(frozen=True)
class CheegerCut:
    """A minimizing cut: the subset, its constant, and the two ingredients.

    ``subset`` is the side of the cut with the smaller vertex-weight mass
    (ties go to the side with the lexicographically smaller index tuple),
    listed in graph vertex order.
    """

    subset: Tuple[str, ...]
    h: LCNumber
    boundary: LCNumber
    mass: LCNumber


def _boundary_weight(g: OFGraph, members: Tuple[bool, ...]) -> LCNumber:
    total = None
    for x, y, w in g.edges():
        if members[g.index(x)] != members[g.index(y)]:
            total = w if total is None else total + w
    # connected graphs always have a crossing edge for a proper subset
    return total


def cheeger_constant(g: OFGraph) -> CheegerCut:
    """Exhaustive minimum of b(dS)/min(b(S), b(V\\S)) over proper subsets.

    Only subsets avoiding the last vertex are enumerated; the complement
    symmetry S <-> V\\S covers the rest.  Ties between cuts with equal h
    are broken toward the lexicographically smallest representative.
    """
    if not g.is_connected():
        raise GraphValidationError("Cheeger constant needs a connected graph")
    n = g.n
    if n < 2:
        raise GraphValidationError("Cheeger constant needs at least 2 vertices")
    if n > MAX_VERTICES:
        raise GraphValidationError(
            f"graph has {n} vertices; cut enumeration is capped at {MAX_VERTICES}")

    weights = [g.vertex_weight(v) for v in g.vertices]
    total = g.total_weight()

    best: Optional[CheegerCut] = None
    best_indices: Optional[Tuple[int, ...]] = None
    # masks over the first n-1 vertices; vertex n-1 stays on the complement
    for mask in range(1, 1 << (n - 1)):
        members = tuple(bool(mask >> i & 1) for i in range(n - 1)) + (False,)
        mass_in = None
        for i in range(n - 1):
            if members[i]:
                mass_in = weights[i] if mass_in is None else mass_in + weights[i]
        mass_out = total - mass_in
        boundary = _boundary_weight(g, members)

        side = mass_in - mass_out
        if side.sign() < 0:
            mass, indices = mass_in, tuple(i for i in range(n) if members[i])
        elif side.sign() > 0:
            mass, indices = mass_out, tuple(i for i in range(n) if not members[i])
        else:
            inside = tuple(i for i in range(n) if members[i])
            outside = tuple(i for i in range(n) if not members[i])
            mass, indices = mass_in, min(inside, outside)

        ratio = boundary * mass.inverse()
        if best is None:
            better = True
        else:
            diff = (ratio - best.h).sign()
            better = diff < 0 or (diff == 0 and indices < best_indices)
        if better:
            subset = tuple(g.vertices[i] for i in indices)
            best = CheegerCut(subset=subset, h=ratio, boundary=boundary, mass=mass)
            best_indices = indices
    return best


def _match_mode(a: LCNumber, b: LCNumber) -> Tuple[LCNumber, LCNumber]:
    # lift the rational operand when exactly one side is numeric
    if a.mode == NUMERIC and b.mode not in (NUMERIC, None):
        return a, b.to_numeric()
    if b.mode == NUMERIC and a.mode not in (NUMERIC, None):
        return a.to_numeric(), b
    return a, b


def cheeger_inequality_check(g: OFGraph, spec: Spectrum, cut: CheegerCut) -> Report:
    """Both Cheeger-type estimates for lambda_1, plus the h <= 1 sanity bound.

    The strong form lambda_1 >= 1 - sqrt(1 - h^2) is checked square-free:
    with alpha_1 = 1 - lambda_1 it reads alpha_1 <= sqrt(1 - h^2), which is
    vacuous for alpha_1 <= 0 and otherwise equivalent to alpha_1^2 <= 1 - h^2
    since both sides are then non-negative.  This keeps rational inputs in
    exact arithmetic instead of forcing a numeric square root.
    """
    rep = Report(f"cheeger estimates on {g.n} vertices")
    h = cut.h
    lam1 = spec.lambdas[1]
    alpha1 = spec.alphas[1]

    rep.add("h-at-most-one", (h - 1).sign() <= 0,
            f"h = {format_series(h, digits=12)}")

    one_minus_h2, a1 = _match_mode(-(h * h) + 1, alpha1)
    if a1.sign() <= 0:
        strong = True
        detail = "alpha_1 <= 0, bound vacuous"
    else:
        strong = (one_minus_h2 - a1 * a1).sign() >= 0
        detail = (f"alpha_1^2 = {format_series(a1 * a1, digits=12)} vs "
                  f"1-h^2 = {format_series(one_minus_h2, digits=12)}")
    rep.add("strong-form", strong, detail)

    lhs, h2 = _match_mode(lam1 * 2, h * h)
    rep.add("weak-form", (lhs - h2).sign() >= 0,
            f"2*lambda_1 = {format_series(lhs, digits=12)} vs "
            f"h^2 = {format_series(h2, digits=12)}")

    if g.is_complete():
        rep.add("alpha1-bound-noncomplete", None, "complete graph, not applicable")
    else:
        ok = a1.sign() >= 0 and (a1.sign() <= 0 or (one_minus_h2 - a1 * a1).sign() >= 0)
        rep.add("alpha1-bound-noncomplete", ok,
                f"0 <= alpha_1 and alpha_1^2 <= 1-h^2 with "
                f"alpha_1 = {format_series(alpha1, digits=12)}")
    return rep
