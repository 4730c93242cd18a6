"""Exact kernel: flattening, spans, eigenspaces, signatures, lattices."""
import pytest
from hypothesis import given, settings, strategies as st

from visaction.errors import NonRationalSpectrum, NotDiagonalizable
from visaction.exact import (
    ExactMatrix,
    GaussianRational,
    RealSpan,
    flatten,
    gr,
    hermite_normal_form,
    integer_coordinates,
    intersect,
    linear_relations,
    membership,
    minimal_polynomial,
    rat,
    rational_eigenspaces,
    span_of,
    span_sum,
    symmetric_signature,
    unflatten,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


def q(x):
    return rat(x.numerator, x.denominator) if hasattr(x, "numerator") else rat(x)


class TestScalars:
    def test_arithmetic(self):
        a = gr(1, 2)
        b = gr(3, -1)
        assert a * b == gr(5, 5)
        assert (a / b) * b == a
        assert a.conjugate() == gr(1, -2)
        assert -a + a == gr(0)

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            gr(1) / gr(0)

    @given(rationals, rationals, rationals, rationals)
    @settings(max_examples=50, deadline=None)
    def test_field_axioms(self, a, b, c, d):
        x = GaussianRational(q(a), q(b))
        y = GaussianRational(q(c), q(d))
        assert x + y == y + x
        assert x * y == y * x
        if y:
            assert (x / y) * y == x


class TestFlatten:
    def test_i_matrix(self):
        M = ExactMatrix.from_rows([[gr(0, 1)]])
        assert flatten(M) == (rat(0), rat(1))

    def test_zero_matrix(self):
        M = ExactMatrix.from_rows([[gr(0)]])
        assert flatten(M) == (rat(0), rat(0))

    def test_identity_2x2(self):
        assert flatten(ExactMatrix.identity(2)) == tuple(
            rat(x) for x in (1, 0, 0, 1, 0, 0, 0, 0))

    @given(st.lists(st.tuples(rationals, rationals), min_size=4, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, entries):
        M = ExactMatrix(2, 2, [GaussianRational(q(a), q(b))
                               for a, b in entries])
        assert unflatten(flatten(M), 2, 2) == M


class TestSpans:
    def test_collinear(self):
        s = span_of([(rat(1), rat(0)), (rat(2), rat(0))])
        assert s.dim == 1
        assert s.basis == ((rat(1), rat(0)),)

    def test_empty(self):
        assert span_of([], ambient_dim=5).dim == 0

    def test_su21_flattened_dimension(self, su21):
        # oracle: dim su(p,q) = (p+q)^2 - 1, counted as echelon pivots
        flats = [flatten(b) for b in su21.algebra.basis]
        assert span_of(flats).dim == 8

    def test_membership_trivial(self):
        s = span_of([(rat(0), rat(1))])
        assert membership((rat(0), rat(0)), s)
        assert not membership((rat(1), rat(0)), s)

    def test_membership_bracket_closure(self, su21):
        # oracle: su is closed under bracket
        import random
        rng = random.Random(5)
        g = su21.algebra
        flats = span_of([flatten(b) for b in g.basis])
        for _ in range(20):
            X = g.basis[rng.randrange(g.dim)]
            Y = g.basis[rng.randrange(g.dim)]
            assert membership(flatten(X.bracket(Y)), flats)

    def test_intersect_idempotent(self):
        a = span_of([(rat(1), rat(2), rat(0)), (rat(0), rat(0), rat(1))])
        assert intersect(a, a) == a

    def test_intersect_complementary_axes(self):
        a = span_of([(rat(1), rat(0))])
        b = span_of([(rat(0), rat(1))])
        assert intersect(a, b).dim == 0

    @given(st.lists(st.lists(rationals, min_size=4, max_size=4),
                    min_size=1, max_size=3),
           st.lists(st.lists(rationals, min_size=4, max_size=4),
                    min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_grassmann_identity(self, rows_a, rows_b):
        a = span_of([tuple(q(x) for x in r) for r in rows_a], 4)
        b = span_of([tuple(q(x) for x in r) for r in rows_b], 4)
        inter = intersect(a, b)
        total = span_sum(a, b)
        assert inter.dim + total.dim == a.dim + b.dim
        assert inter.dim <= min(a.dim, b.dim)
        assert inter.is_subspace_of(a) and inter.is_subspace_of(b)

    @given(st.permutations(range(4)), st.integers(1, 7))
    @settings(max_examples=30, deadline=None)
    def test_span_invariance(self, perm, scale):
        vecs = [(rat(1), rat(0), rat(2)), (rat(0), rat(1), rat(1)),
                (rat(1), rat(1), rat(3)), (rat(2), rat(0), rat(4))]
        base = span_of(vecs)
        shuffled = [vecs[i] for i in perm]
        shuffled[0] = tuple(rat(scale) * x for x in shuffled[0])
        assert span_of(shuffled) == base


class TestEigenspaces:
    def test_identity(self):
        eigs = rational_eigenspaces([[rat(1), rat(0), rat(0)],
                                     [rat(0), rat(1), rat(0)],
                                     [rat(0), rat(0), rat(1)]])
        assert [(lam, s.dim) for lam, s in eigs] == [(rat(1), 3)]

    def test_diagonal_multiset(self):
        eigs = rational_eigenspaces([[rat(2), rat(0), rat(0)],
                                     [rat(0), rat(2), rat(0)],
                                     [rat(0), rat(0), rat(5)]])
        assert [(lam, s.dim) for lam, s in eigs] == [(rat(2), 2), (rat(5), 1)]

    def test_ad_split_torus_sp2(self, sp2):
        # oracle: C2 root values on the first torus direction are 0,+-1,+-2
        from visaction.liealg import fixed_subspace, maximal_abelian
        g = sp2.algebra
        p = fixed_subspace(g, sp2.theta, -1)
        torus = maximal_abelian(g, p, rational_torus=True)
        H = torus.basis[0]
        eigs = rational_eigenspaces(g.ad_rows(H))
        values = {lam for lam, _ in eigs}
        scale = max(abs(v) for v in values)
        normalized = {v / scale * 2 for v in values}
        assert normalized <= {rat(k) for k in (-2, -1, 0, 1, 2)}
        zero_dim = dict((lam, s.dim) for lam, s in eigs)[rat(0)]
        assert zero_dim >= 2

    def test_non_rational_spectrum(self):
        with pytest.raises(NonRationalSpectrum):
            rational_eigenspaces([[rat(0), rat(-1)], [rat(1), rat(0)]])

    def test_not_diagonalizable(self):
        with pytest.raises(NotDiagonalizable):
            rational_eigenspaces([[rat(1), rat(1)], [rat(0), rat(1)]])

    def test_minimal_polynomial_jordan(self):
        mp = minimal_polynomial([[rat(3), rat(1), rat(0)],
                                 [rat(0), rat(3), rat(0)],
                                 [rat(0), rat(0), rat(1)]])
        # (x-3)^2 (x-1) = x^3 - 7x^2 + 15x - 9
        assert mp == [rat(-9), rat(15), rat(-7), rat(1)]


class TestRelationsSignaturesLattices:
    def test_linear_relations(self):
        rel = linear_relations([(rat(1), rat(0)), (rat(2), rat(0)),
                                (rat(0), rat(1))])
        assert rel.dim == 1
        assert rel.contains((rat(2), rat(-1), rat(0)))

    def test_signature_indefinite(self):
        assert symmetric_signature([[rat(2), rat(0)], [rat(0), rat(-3)]]) \
            == (1, 1, 0)
        assert symmetric_signature([[rat(0), rat(1)], [rat(1), rat(0)]]) \
            == (1, 1, 0)
        assert symmetric_signature([[rat(0), rat(0)], [rat(0), rat(5)]]) \
            == (1, 0, 1)

    def test_hnf_and_coordinates(self):
        basis = hermite_normal_form([[2, 0], [0, 2], [1, 1]])
        assert basis == [[1, 1], [0, 2]]
        assert integer_coordinates([3, 1], basis) == [3, -1]
        assert integer_coordinates([1, 0], basis) is None
