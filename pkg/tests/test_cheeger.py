"""Cheeger constant against brute-force enumeration and hand values."""

import itertools
import random
from fractions import Fraction

import pytest

from lcgraph import (
    GraphValidationError,
    cheeger_constant,
    cheeger_inequality_check,
    compute_spectrum,
    parse_graph,
    parse_series,
    zero,
)
from corpus import random_graph, random_nonbipartite

FIG1 = "1 2 1\n2 3 1\n3 4 eps\n"
FIG2 = "1 2 1\n2 3 eps\n3 4 1\n"


def _brute_force_h(g):
    # minimum of boundary/mass over every subset not heavier than its
    # complement, written independently of the package's mask walk
    total = g.total_weight()
    best = None
    for k in range(1, g.n):
        for sub in itertools.combinations(g.vertices, k):
            inside = set(sub)
            mass = sum((g.vertex_weight(x) for x in sub), start=zero())
            if (mass * 2 - total).sign() > 0:
                continue
            boundary = zero()
            for u, v, w in g.edges():
                if (u in inside) != (v in inside):
                    boundary = boundary + w
            ratio = boundary * mass.inverse()
            if best is None or (ratio - best).sign() < 0:
                best = ratio
    return best


def test_fig1_hand_value():
    cut = cheeger_constant(parse_graph(FIG1))
    # h = 1/(1+2*eps)
    assert (cut.h * parse_series("1 + 2*eps") - 1).is_zero
    assert cut.subset == ("3", "4")
    assert cut.boundary.identical(parse_series("1"))
    assert cut.mass.identical(parse_series("1 + 2*eps"))


def test_fig2_hand_value():
    cut = cheeger_constant(parse_graph(FIG2))
    # h = eps/(2+eps)
    assert (cut.h * parse_series("2 + eps") - parse_series("eps")).is_zero
    assert cut.subset == ("1", "2")


def test_k2_and_triangle_and_k4():
    assert (cheeger_constant(parse_graph("1 2 1\n")).h - 1).is_zero
    assert cheeger_constant(parse_graph("1 2 1\n")).subset == ("1",)
    tri = cheeger_constant(parse_graph("1 2 1\n1 3 1\n2 3 1\n"))
    assert (tri.h - 1).is_zero
    k4 = cheeger_constant(parse_graph("1 2 1\n1 3 1\n1 4 1\n2 3 1\n2 4 1\n3 4 1\n"))
    assert (k4.h - Fraction(2, 3)).is_zero
    assert k4.subset == ("1", "2")


def test_matches_brute_force_on_random_graphs():
    rng = random.Random(17)
    for _ in range(25):
        g = random_graph(rng)
        cut = cheeger_constant(g)
        want = _brute_force_h(g)
        assert (cut.h - want).is_zero


def test_reported_cut_is_consistent():
    rng = random.Random(19)
    for _ in range(10):
        g = random_graph(rng)
        cut = cheeger_constant(g)
        inside = set(cut.subset)
        mass = sum((g.vertex_weight(x) for x in cut.subset), start=zero())
        boundary = zero()
        for u, v, w in g.edges():
            if (u in inside) != (v in inside):
                boundary = boundary + w
        assert (mass - cut.mass).is_zero
        assert (boundary - cut.boundary).is_zero
        assert (cut.h * cut.mass - cut.boundary).is_zero
        # the reported side is not heavier than its complement
        assert (cut.mass * 2 - g.total_weight()).sign() <= 0


def test_h_at_most_one():
    rng = random.Random(29)
    for _ in range(15):
        cut = cheeger_constant(random_graph(rng))
        assert (cut.h - 1).sign() <= 0
        assert cut.h.sign() > 0


def test_inequality_report_on_fixtures_and_corpus():
    rng = random.Random(31)
    graphs = [parse_graph(FIG1), parse_graph(FIG2), parse_graph("1 2 1\n")]
    graphs += [random_graph(rng) for _ in range(8)]
    graphs += [random_nonbipartite(rng) for _ in range(4)]
    for g in graphs:
        cut = cheeger_constant(g)
        spec = compute_spectrum(g, trunc_order=4)
        rep = cheeger_inequality_check(g, spec, cut)
        assert rep.passed, rep.render()


def test_rejects_single_vertex_and_disconnected():
    with pytest.raises(GraphValidationError):
        cheeger_constant(parse_graph("1 2 1\n3 4 1\n"))
