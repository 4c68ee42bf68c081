#!/usr/bin/env python3
"""Profile mixing against the depth and position of a bottleneck edge.

Two families of weighted four-vertex paths: "boundary" carries the weak
edge eps^q at the end of the path, "center" in the middle.  For each
depth q the table reports the Cheeger constant and second eigenvalue
(leading terms), the limit classification of alpha_1, which convergence
guarantee the h ~ 1 theorems yield, and the leading order of the squared
deviation of P^6 delta_1 from the two-level equilibrium.  Both families
are bipartite, so the walk runs along even powers.

The contrast is the point: a weak edge at the boundary keeps h comparable
to 1 and the squared deviation after P^6 falls to order eps^(6q), while
the same edge in the middle makes h itself infinitesimal and alpha_1
infinitesimally close to 1, so no limit exists.  At q = 0 both families
degenerate to the unit path, whose real spectral gap is outside the
order-topology story.
"""

import sys
from fractions import Fraction

from lcgraph import (
    OFGraph,
    VertexFunction,
    cheeger_constant,
    compute_spectrum,
    format_series,
    h_convergence_verdict,
    iterate,
    monomial,
    one,
    truncation,
    zero,
)

TRUNC = Fraction(16)
DEPTHS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
M_MAX = 3  # even powers up to P^6

FAMILIES = {
    "boundary": lambda w: [("1", "2", one()), ("2", "3", one()), ("3", "4", w)],
    "center": lambda w: [("1", "2", one()), ("2", "3", w), ("3", "4", one())],
}


def lead_term(x) -> str:
    if x.is_zero:
        return "0"
    q, c = x.terms[0]
    return format_series(monomial(c, q), digits=6)


def profile(family: str, q: Fraction) -> list:
    g = OFGraph.from_edges(FAMILIES[family](monomial(Fraction(1), q)),
                           vertices=["1", "2", "3", "4"])
    spec = compute_spectrum(g, trunc_order=TRUNC)
    with truncation(TRUNC):
        cut = cheeger_constant(g)
        verdict = h_convergence_verdict(g, cut, spectrum=spec)
        delta1 = VertexFunction(g.vertices,
                                [one() if v == "1" else zero()
                                 for v in g.vertices])
        walk = iterate(g, delta1, m_max=M_MAX, mode="bipartite",
                       spectrum=spec, cut=cut)
    dev = walk.steps[-1].deviation_sq
    return [
        family,
        str(q),
        lead_term(cut.h),
        lead_term(spec.alphas[1]),
        verdict.alpha1_kind,
        verdict.guarantee,
        f">= {TRUNC}" if dev.is_zero else str(dev.lead_exp),
        "ok" if all(s.alpha_ok and s.cheeger_ok for s in walk.steps)
        else "VIOLATED",
    ]


def run() -> int:
    header = ["family", "q", "h lead", "alpha_1 lead", "alpha_1 limit",
              "guarantee", "dev^2 lead @ P^6", "bounds"]
    rows = [profile(family, q) for family in FAMILIES for q in DEPTHS]
    widths = [max(len(str(r[i])) for r in [header] + rows)
              for i in range(len(header))]
    line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    print(line)
    print("-" * len(line))
    for r in rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(r, widths)))
    return 0


if __name__ == "__main__":
    sys.exit(run())
