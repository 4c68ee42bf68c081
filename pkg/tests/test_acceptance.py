"""End-to-end acceptance checks, one test per shipped guarantee.

Each test prints a single pass/fail line so a `pytest -s` run reads as a
checklist.  Values asserted here are either exact rational identities or
numeric comparisons at 256-bit precision with stated tolerances; the
random corpora are seeded and therefore reproducible.
"""

import contextlib
import random
from fractions import Fraction

import mpmath
import pytest

from lcgraph import (
    CONVERGES_TO_ZERO,
    NO_LIMIT,
    VertexFunction,
    cheeger_constant,
    classify_eigen_limit,
    comparable,
    compute_spectrum,
    eps,
    h_convergence_verdict,
    inner,
    iterate,
    laplacian_matrix,
    nonconvergence_witness,
    one,
    parse_series,
    run_selfcheck,
    set_numeric_precision,
    truncation,
)
from lcgraph.spectral import char_poly
from corpus import random_graph, random_monomial_weight, random_nonbipartite

set_numeric_precision(256)

TOL = mpmath.mpf("1e-30")


@contextlib.contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d} [{name}]: FAIL")
        raise
    print(f"criterion {num:2d} [{name}]: PASS")


@pytest.fixture(scope="module")
def corpus(fig1, fig2, k2, triangle):
    # the shared corpus for the trace/range/cheeger sweeps: the four
    # bundled graphs plus 200 seeded draws with single-monomial weights
    # c * eps^q, q in {0, 1/2, 1, 2}
    rng = random.Random(0)
    entries = []
    for g in (fig1, fig2, k2, triangle):
        entries.append((g, compute_spectrum(g, trunc_order=8), cheeger_constant(g)))
    for _ in range(200):
        g = random_graph(rng, weight=random_monomial_weight)
        entries.append((g, compute_spectrum(g, trunc_order=4), cheeger_constant(g)))
    return entries


def _num(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def test_criterion_1_eigenvalues_fig1(fig1):
    with criterion(1, "fig1 eigenvalue series at 256 bits"):
        spec = compute_spectrum(fig1, trunc_order=8, mode="numeric")
        alphas = spec.alphas
        assert len(alphas) == 4
        assert (alphas[0] - 1).is_zero
        assert (alphas[3] + 1).is_zero
        # the middle pair is +-alpha
        assert (alphas[1] + alphas[2]).is_zero

        alpha = alphas[1]
        q0, c0 = alpha.terms[0]
        q1, c1 = alpha.terms[1]
        assert q0 == Fraction(1, 2) and q1 == Fraction(3, 2)
        root_half = 1 / mpmath.sqrt(2)
        assert abs(_num(c0) - root_half) < TOL
        assert abs(_num(c1) + root_half / 2) < TOL

        assert spec.residual_order >= 4


def test_criterion_2_eigenvalues_fig2(fig2):
    with criterion(2, "fig2 alpha_1 exact rational series"):
        spec = compute_spectrum(fig2, trunc_order=8)
        assert spec.mode == "rational"
        alpha1 = spec.alphas[1]
        # 1 - eps + eps^2 - eps^3 + ...: six exact terms
        assert len(alpha1.terms) >= 6
        for k in range(6):
            q, c = alpha1.terms[k]
            assert q == k
            assert c == Fraction((-1) ** k)


def test_criterion_3_cheeger_constants(fig1, fig2):
    with criterion(3, "cheeger constants of fig1 and fig2"):
        cut1 = cheeger_constant(fig1)
        want = [(0, 1), (1, -2), (2, 4), (3, -8), (4, 16)]
        assert [(q, c) for q, c in cut1.h.terms[:5]] == \
            [(Fraction(q), Fraction(c)) for q, c in want]
        sides = {frozenset(cut1.subset),
                 frozenset(fig1.vertices) - frozenset(cut1.subset)}
        assert sides == {frozenset({"1", "2"}), frozenset({"3", "4"})}

        cut2 = cheeger_constant(fig2)
        want = [(1, Fraction(1, 2)), (2, Fraction(-1, 4)), (3, Fraction(1, 8)),
                (4, Fraction(-1, 16)), (5, Fraction(1, 32))]
        assert [(q, c) for q, c in cut2.h.terms[:5]] == \
            [(Fraction(q), c) for q, c in want]


def test_criterion_4_trace_identity(corpus):
    with criterion(4, "sum of eigenvalues equals n on 204 graphs"):
        for g, spec, _ in corpus:
            # exact: the Laplacian charpoly is rational whenever the graph
            # is, so the coefficient of lambda^(n-1) must be -n on the nose
            coeff = char_poly(laplacian_matrix(g)).coeffs[g.n - 1]
            assert coeff.is_exact
            assert (coeff + g.n).is_zero
            total = spec.lambdas[0]
            for lam in spec.lambdas[1:]:
                total = total + lam
            # the lifted sum is certified only to the residual order
            assert (total - g.n).truncate(spec.residual_order).is_zero


def test_criterion_5_range_and_bipartite_symmetry(corpus):
    with criterion(5, "eigenvalue range and bipartite symmetry on 204 graphs"):
        seen = {True: 0, False: 0}
        for g, spec, _ in corpus:
            lams = spec.lambdas
            n = len(lams)
            for lam in lams:
                assert lam.sign() >= 0
                assert (2 - lam).sign() >= 0
            # sorted eigenvalues are symmetric about 1 iff mirrored sums
            # are all exactly 2
            mirrored = all((lams[i] + lams[n - 1 - i] - 2).is_zero
                           for i in range(n))
            bip = g.is_bipartite()
            assert mirrored == bip
            if not bip:
                assert (2 - lams[-1]).sign() > 0
            seen[bip] += 1
        assert seen[True] and seen[False]


def test_criterion_6_strong_cheeger(corpus):
    with criterion(6, "alpha_1^2 <= 1 - h^2 on 204 graphs"):
        for g, spec, cut in corpus:
            a1 = spec.alphas[1]
            if a1.sign() < 0:
                # the bound presumes alpha_1 >= 0, which can only fail on
                # a complete graph
                assert g.is_complete()
                continue
            bound = -(cut.h * cut.h) + 1
            if a1.mode == "numeric":
                bound = bound.to_numeric()
            assert (bound - a1 * a1).sign() >= 0


def test_criterion_7_bipartite_walk_bounds(fig1):
    with criterion(7, "fig1 bipartite mixing bounds, exact, m = 1..8"):
        # alpha_1^2 = eps/(2+2*eps): check the numeric lift against that
        # closed form to 1e-30, then use the closed form exactly
        spec = compute_spectrum(fig1, trunc_order=8, mode="numeric")
        a1sq_num = spec.alphas[1] * spec.alphas[1]
        for k, (q, c) in enumerate(a1sq_num.terms[:8]):
            assert q == k + 1
            assert abs(_num(c) - _num(Fraction((-1) ** k, 2))) < TOL

        with truncation(24):
            a1sq = eps(1) * parse_series("2 + 2*eps").inverse()
            h = cheeger_constant(fig1).h
            base_h = -(h * h) + 1
            norm_cache = {}
            for x in fig1.vertices:
                f = VertexFunction.delta(fig1.vertices, x)
                norm_sq = inner(fig1, f, f)
                rep = iterate(fig1, f, m_max=8, mode="bipartite")
                for step in rep.steps:
                    alpha_bound = (a1sq ** step.power) * norm_sq
                    cheeger_bound = (base_h ** step.power) * norm_sq
                    assert (alpha_bound - step.deviation_sq).sign() >= 0
                    assert (cheeger_bound - step.deviation_sq).sign() >= 0
                norm_cache[x] = norm_sq
            # the bounds were not vacuous: every delta has positive norm
            assert all(v.sign() > 0 for v in norm_cache.values())


def test_criterion_8_limit_classifier(fig1, fig2):
    with criterion(8, "limit classifier agrees with the h verdicts"):
        spec1 = compute_spectrum(fig1, trunc_order=8, mode="numeric")
        v1 = classify_eigen_limit(spec1.alphas[1])
        assert v1.kind == CONVERGES_TO_ZERO
        assert v1.exponent == Fraction(1, 2)

        spec2 = compute_spectrum(fig2, trunc_order=8)
        v2 = classify_eigen_limit(spec2.alphas[1])
        assert v2.kind == NO_LIMIT

        cut1, cut2 = cheeger_constant(fig1), cheeger_constant(fig2)
        assert comparable(cut1.h, one())
        assert not comparable(cut2.h, one())
        verdict1 = h_convergence_verdict(fig1, cut1, spec1)
        assert verdict1.guarantee == "bipartite-all-f"
        assert verdict1.consistent is True
        verdict2 = h_convergence_verdict(fig2, cut2, spec2)
        assert verdict2.guarantee == "none"
        assert verdict2.alpha1_kind == NO_LIMIT


def test_criterion_9_nonconvergence_witness():
    with criterion(9, "divergence witness on 50 non-bipartite graphs"):
        rng = random.Random(0)
        for _ in range(50):
            g = random_nonbipartite(rng)
            spec = compute_spectrum(g, trunc_order=4)
            # raises if any gap |alpha^m v(x) - alpha^(m+l) v(x)| with
            # m + l <= 20 fails to clear eps * |1 + alpha| * |v(x)|
            v, x, bound = nonconvergence_witness(g, spec, max_total=20)
            assert bound.sign() > 0
            assert (abs(spec.alphas[-1]) - Fraction(1, g.n - 1)).sign() >= 0


def test_criterion_10_randomized_selfcheck():
    with criterion(10, "10000 randomized field checks"):
        rep = run_selfcheck(count=10000, seed=0)
        assert rep.passed
        assert not rep.failures
