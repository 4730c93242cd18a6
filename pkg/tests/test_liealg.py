"""Algebra core: closure certificates, fixed spaces, ranks, Killing data."""
import random

import pytest

from visaction.errors import NotCartan, NotClosedUnderBracket, NotInvolution
from visaction.exact import ExactMatrix, gr, rat, symmetric_signature
from visaction.families import build
from visaction.liealg import (
    LinearAlgebraMap,
    center,
    certify_cartan,
    fixed_subspace,
    fingerprint,
    killing,
    make_algebra,
    maximal_abelian,
    multi_fixed,
    real_rank,
    real_rank_of_pair,
)


class TestMakeAlgebra:
    def test_su2(self, su2):
        assert su2.dim == 3

    def test_single_nilpotent(self):
        alg = make_algebra([ExactMatrix.unit(2, 0, 1)], "n")
        assert alg.dim == 1
        assert not alg.structure()

    def test_not_closed(self):
        with pytest.raises(NotClosedUnderBracket) as err:
            make_algebra([ExactMatrix.unit(2, 0, 1),
                          ExactMatrix.unit(2, 1, 0)], "bad")
        assert err.value.witness == (0, 1)

    def test_dependent_basis_rejected(self):
        E = ExactMatrix.unit(2, 0, 1)
        with pytest.raises(ValueError):
            make_algebra([E, E.scale(rat(2))], "dep")


class TestFixedSubspaces:
    def test_identity_map(self, su2):
        ident = LinearAlgebraMap.identity(su2)
        assert fixed_subspace(su2, ident, +1).dim == su2.dim
        assert fixed_subspace(su2, ident, -1).dim == 0

    def test_su21_theta(self, su21):
        k = fixed_subspace(su21.algebra, su21.theta, +1)
        p = fixed_subspace(su21.algebra, su21.theta, -1)
        assert k.dim == 4  # u(2)
        assert p.dim == 4
        assert k.dim + p.dim == su21.algebra.dim

    def test_sp2_sigma_fixed_is_gl2(self, sp2):
        from visaction.catalog import catalog_sigma, dataset_row
        sigma = catalog_sigma(dataset_row(3, "sp_R"), (2,), sp2, sp2.theta)
        fixed = fixed_subspace(sp2.algebra, sigma, +1)
        assert fixed.dim == 4  # gl(2,R)

    def test_not_involution(self, su2):
        double = LinearAlgebraMap(
            su2, [[rat(2 if i == j else 0) for j in range(3)]
                  for i in range(3)], name="2id")
        with pytest.raises(NotInvolution):
            fixed_subspace(su2, double, +1)


class TestMultiFixed:
    def test_empty_constraints(self, su21):
        assert multi_fixed(su21.algebra, []).dim == su21.algebra.dim

    def test_opposite_signs(self, su21):
        th = su21.theta
        assert multi_fixed(su21.algebra, [(th, -1), (th, +1)]).dim == 0

    def test_su11_triple(self):
        # the p-part of su(1,1) fixed by complex conjugation is a line
        from visaction.catalog import catalog_sigma, dataset_row
        real = build("su", 1, 1)
        sigma = catalog_sigma(dataset_row(3, "su"), (1, 1), real, real.theta)
        space = multi_fixed(real.algebra,
                            [(real.theta, -1), (sigma, +1), (real.theta, -1)])
        assert space.dim == 1


class TestMaximalAbelian:
    def test_abelian_space_is_returned_whole(self):
        alg = make_algebra([ExactMatrix.unit(3, 0, 1),
                            ExactMatrix.unit(3, 0, 2)], "ab")
        V = alg.full_span()
        assert maximal_abelian(alg, V) == V

    def test_su21_rank_one(self, su21):
        p = fixed_subspace(su21.algebra, su21.theta, -1)
        assert maximal_abelian(su21.algebra, p).dim == 1

    def test_sp2_rank_two(self, sp2):
        p = fixed_subspace(sp2.algebra, sp2.theta, -1)
        assert maximal_abelian(sp2.algebra, p).dim == 2

    def test_output_is_abelian_and_maximal(self, sp2):
        from visaction.liealg import centralizer_in
        g = sp2.algebra
        p = fixed_subspace(g, sp2.theta, -1)
        a = maximal_abelian(g, p)
        for u in a.basis:
            for v in a.basis:
                assert not any(g.bracket_coords(u, v))
        assert centralizer_in(g, p, list(a.basis)) == a

    def test_dimension_under_20_shuffles(self):
        # rank well-definedness of the greedy under permuted basis order
        from visaction.catalog import catalog_involution, dataset_row
        real, tau = catalog_involution(dataset_row(1, "3"), (2,))
        g = real.algebra
        space = multi_fixed(g, [(real.theta, -1), (tau, -1)])
        rng = random.Random(7)
        dims = set()
        for _ in range(20):
            order = list(range(space.dim))
            rng.shuffle(order)
            dims.add(maximal_abelian(g, space, order=order).dim)
        assert len(dims) == 1


class TestRanks:
    def test_su31(self):
        real = build("su", 3, 1)
        assert real_rank(real.algebra, real.theta) == 1

    def test_so_star_6(self):
        real = build("so_star", 6)
        assert real_rank(real.algebra, real.theta) == 1

    def test_su22_sp_pair(self):
        from visaction.catalog import catalog_involution, dataset_row
        real, tau = catalog_involution(dataset_row(1, "3"), (2,))
        assert real_rank_of_pair(real.algebra, tau, real.theta) == 1

    def test_pair_requires_commuting(self):
        from visaction.recipes import ad_recipe
        real = build("sl_R", 2)
        M = ExactMatrix.from_rows([[1, 1], [0, -1]])  # M^2 = I, not orthogonal
        rho = real.map_from_recipe(ad_recipe(M), name="rho")
        rho.certify_involution()
        assert not rho.commutes_with(real.theta)
        with pytest.raises(NotInvolution):
            real_rank_of_pair(real.algebra, rho, real.theta)


class TestCenterKilling:
    def test_center_of_k_su21(self, su21):
        g = su21.algebra
        k = fixed_subspace(g, su21.theta, +1)
        from visaction.liealg import centralizer_in
        assert centralizer_in(g, k, list(k.basis)).dim == 1

    def test_center_abelian_algebra(self):
        alg = make_algebra([ExactMatrix.unit(3, 0, 1),
                            ExactMatrix.unit(3, 0, 2)], "ab")
        assert center(alg).dim == 2

    def test_center_semisimple_trivial(self, su2):
        assert center(su2).dim == 0

    def test_killing_negative_on_su2(self, su2):
        rng = random.Random(3)
        for _ in range(100):
            coords = tuple(rat(rng.randint(-9, 9)) for _ in range(3))
            if not any(coords):
                continue
            assert killing(su2, coords, coords) < 0

    def test_killing_signature_split(self, sp2):
        dim_k = fixed_subspace(sp2.algebra, sp2.theta, +1).dim
        dim_p = fixed_subspace(sp2.algebra, sp2.theta, -1).dim
        pos, neg, zero = symmetric_signature(sp2.algebra.killing_gram())
        assert (pos, neg, zero) == (dim_p, dim_k, 0)


class TestCartan:
    def test_certified_for_families(self):
        for family, params in (("su", (2, 2)), ("so_star", (4,)),
                               ("sp_R", (2,)), ("so2n", (3,))):
            real = build(family, *params)
            certify_cartan(real.algebra, real.theta)

    def test_non_cartan_rejected(self):
        from visaction.catalog import catalog_involution, dataset_row
        real, tau = catalog_involution(dataset_row(1, "9"), (2, 1))
        with pytest.raises(NotCartan):
            certify_cartan(real.algebra, tau)  # tau fixes a non-compact part

    def test_eigenspace_completeness_for_catalog(self):
        from visaction.catalog import (catalog_involution, dataset_row,
                                       enumerate_params, load_dataset)
        rows = load_dataset()
        for row in rows:
            if not row.implementable or row.table == 4:
                continue
            params = enumerate_params(row, 5)
            if not params:
                continue
            real, tau = catalog_involution(row, params[0],
                                           check_fingerprint=False)
            plus = fixed_subspace(real.algebra, tau, +1)
            minus = fixed_subspace(real.algebra, tau, -1)
            assert plus.dim + minus.dim == real.algebra.dim


class TestFingerprint:
    def test_u2_inside_su21(self, su21):
        from visaction.fingerprints import fp_u
        g = su21.algebra
        k = fixed_subspace(g, su21.theta, +1)
        assert fingerprint(g, k, su21.theta) == fp_u(2, 0)
