"""Compact Hermitian quotients: Grassmannian data and the Type II triples.

Type II covers the compact pairs whose tau cannot be conjugated to
commute with theta: (su(2n), sp(n), s(u(2p'+1)+u(2q'+1))) and
(so(2n), so(2p'+1)+so(2q'+1), u(n)) with n = p'+q'+1.  The workaround is
an embedded corank-one subalgebra on which the involutions do commute
and which carries the whole (-tau, -theta) eigenspace; all of that is
certified here by exact span identities.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConditionFailed, ParameterOutOfRange
from .exact import ExactMatrix, RealSpan, flatten, gr, intersect, rat, span_of
from .families import (
    CharacteristicElement,
    StandardRealization,
    build,
    su_basis,
    so_basis,
    signature_matrix,
    symplectic_J,
)
from .liealg import (
    LinearAlgebraMap,
    centralizer_in,
    fixed_subspace,
    maximal_abelian,
    multi_fixed,
)
from .recipes import InvolutionRecipe, ad_recipe, neg_transpose_recipe


def grassmann_theta(real: StandardRealization, p: int) -> LinearAlgebraMap:
    """Involution of su(m) with fixed algebra s(u(p)+u(m-p))."""
    (m,) = real.params
    if not 1 <= p <= m - 1:
        raise ParameterOutOfRange(f"need 1 <= p <= {m - 1}")
    rec = ad_recipe(signature_matrix(p, m - p))
    th = real.map_from_recipe(rec, name=f"theta[{p}|{m - p}]")
    th.certify_involution()
    return th


def so_hermitian_theta(real: StandardRealization) -> LinearAlgebraMap:
    """Involution of so(2n) with fixed algebra u(n)."""
    (m,) = real.params
    if m % 2:
        raise ParameterOutOfRange("so(m) needs even m for a Hermitian theta")
    rec = ad_recipe(symplectic_J(m // 2))
    th = real.map_from_recipe(rec, name="theta[u]")
    th.certify_involution()
    return th


def real_points_sigma(real: StandardRealization) -> LinearAlgebraMap:
    """sigma(X) = -X^T on a compact unitary family: fixed algebra so(m)."""
    rec = neg_transpose_recipe(size=real.algebra.m)
    sg = real.map_from_recipe(rec, name="sigma")
    sg.certify_involution()
    return sg


def characteristic_of_diag_theta(real: StandardRealization,
                                 theta: LinearAlgebraMap
                                 ) -> CharacteristicElement:
    from .families import characteristic_element
    return characteristic_element(real, theta)


# ---------------------------------------------------------------------------
# Type II
# ---------------------------------------------------------------------------

@dataclass
class CompactTypeII:
    variant: str
    p: int
    q: int
    real: StandardRealization
    theta: LinearAlgebraMap
    tau: LinearAlgebraMap
    sigma: LinearAlgebraMap
    char: CharacteristicElement
    sub_span: RealSpan            # the embedded corank-one subalgebra
    conditions: dict = field(default_factory=dict)
    dims: dict = field(default_factory=dict)

    @property
    def minus_minus(self) -> RealSpan:
        return multi_fixed(self.real.algebra,
                           [(self.tau, -1), (self.theta, -1)])

    def slice_torus(self) -> RealSpan:
        """Maximal abelian subspace of g^{sigma,-tau,-theta} inside g'."""
        g = self.real.algebra
        space = multi_fixed(g, [(self.sigma, +1), (self.tau, -1),
                                (self.theta, -1)])
        space = intersect(space, self.sub_span)
        return maximal_abelian(g, space)


def _g0_signs(p: int, q: int) -> list[int]:
    return [1] * p + [-1] * (q + 1) + [1] * (p + 1) + [-1] * q


def _embed_indices(p: int, q: int) -> list[int]:
    n = p + q + 1
    drop = {p, n + p}
    return [k for k in range(2 * n) if k not in drop]


def _embed_matrix(M: ExactMatrix, indices: list[int], size: int) -> ExactMatrix:
    rows = [[M[i, j] for j in range(M.cols)] for i in range(M.rows)]
    out = [[gr(0)] * size for _ in range(size)]
    for a, ia in enumerate(indices):
        for b, ib in enumerate(indices):
            out[ia][ib] = rows[a][b]
    return ExactMatrix.from_rows(out)


def compact_type2_data(variant: str, p: int, q: int,
                       max_ambient: int = 12) -> CompactTypeII:
    """The explicit Type II triple with its exact certificates.

    variant II-1: g = su(2n); variant II-2: g = so(2n); n = p+q+1.
    Raises ConditionFailed naming the first certificate that breaks.
    """
    if p < 1 or q < 1:
        raise ParameterOutOfRange("Type II needs p', q' >= 1")
    n = p + q + 1
    m = 2 * n
    if variant == "II-1":
        real = build("su_compact", m, max_ambient=max_ambient)
        sub_basis = su_basis(m - 2)
    elif variant == "II-2":
        real = build("so_compact", m, max_ambient=max_ambient)
        sub_basis = so_basis(m - 2)
    else:
        raise ParameterOutOfRange(f"unknown Type II variant {variant!r}")
    g = real.algebra
    g0 = ExactMatrix.diag([gr(s) for s in _g0_signs(p, q)])
    Jn = symplectic_J(n)
    Inn = signature_matrix(n, n)
    if variant == "II-1":
        theta = real.map_from_recipe(ad_recipe(g0), name="theta")
        tau = real.map_from_recipe(
            InvolutionRecipe(conjugator=Jn, conj=True), name="tau")
        # Z normalized from the +/-1 pattern of g0
        tr = 2 * (p - q)
        Z = (g0 - ExactMatrix.identity(m).scale(rat(tr, m))).scale(gr(0, rat(1, 2)))
    else:
        tau = real.map_from_recipe(ad_recipe(g0), name="tau")
        theta = real.map_from_recipe(
            InvolutionRecipe(conjugator=Jn, conj=True), name="theta")
        Z = Jn.scale(rat(1, 2))
    sigma = real.map_from_recipe(
        InvolutionRecipe(conjugator=Inn, conj=True), name="sigma")
    for mp in (theta, tau, sigma):
        mp.certify_involution()
    coordsZ = g.coordinates(Z)
    char = CharacteristicElement(Z=Z, coords=coordsZ, theta_name=theta.name)

    indices = _embed_indices(p, q)
    embedded = [_embed_matrix(B, indices, m) for B in sub_basis]
    sub_coords = []
    for B in embedded:
        c = g.coordinates(B)
        if c is None:
            raise ConditionFailed("embedded subalgebra leaves the span",
                                  condition="embedding")
        sub_coords.append(c)
    sub_span = span_of(sub_coords, g.dim)

    data = CompactTypeII(variant, p, q, real, theta, tau, sigma, char,
                         sub_span)
    _certify_type2(data)
    return data


def _certify_type2(data: CompactTypeII) -> None:
    g = data.real.algebra
    theta, tau, sigma = data.theta, data.tau, data.sigma
    # stability of the subalgebra under tau and theta
    for name, mp in (("tau", tau), ("theta", theta)):
        for v in data.sub_span.basis:
            if not data.sub_span.contains(mp.apply_coords(v)):
                raise ConditionFailed(
                    f"{name} does not stabilize the embedded subalgebra",
                    condition="stability")
    data.conditions["stability"] = True
    # tau and theta commute on the subalgebra (not globally)
    tt = [tau.apply_coords(theta.apply_coords(v)) for v in data.sub_span.basis]
    th = [theta.apply_coords(tau.apply_coords(v)) for v in data.sub_span.basis]
    if tt != th:
        raise ConditionFailed("tau and theta do not commute on the embedded "
                              "subalgebra", condition="commutation")
    data.conditions["commutation"] = True
    # the whole (-tau,-theta) space lives inside the subalgebra
    big = multi_fixed(g, [(tau, -1), (theta, -1)])
    small = intersect(big, data.sub_span)
    if big != small:
        raise ConditionFailed(
            "g^(-tau,-theta) is strictly larger than its part in the "
            "embedded subalgebra", condition="minus-minus-equality")
    data.conditions["minus-minus-equality"] = True
    # sigma commutes with tau and theta globally; reverses Z
    if not sigma.commutes_with(tau) or not sigma.commutes_with(theta):
        raise ConditionFailed("sigma does not commute with tau and theta",
                              condition="sigma-commutation")
    data.conditions["sigma-commutation"] = True
    img = sigma.apply_coords(data.char.coords)
    if img != tuple(-c for c in data.char.coords):
        raise ConditionFailed("sigma does not reverse the characteristic "
                              "element", condition="sigma-antiholomorphic")
    data.conditions["sigma-antiholomorphic"] = True
    # slice torus: maximal abelian of the sigma-fixed part must stay
    # maximal abelian in the full (-tau,-theta) space
    t_span = data.slice_torus()
    cz = centralizer_in(g, big, list(t_span.basis))
    if cz != t_span:
        raise ConditionFailed(
            "slice torus is not maximal abelian in g^(-tau,-theta)",
            condition="torus-maximality")
    data.conditions["torus-maximality"] = True
    data.dims = {
        "g": g.dim,
        "tau-theta-fixed": multi_fixed(g, [(tau, +1), (theta, +1)]).dim,
        "minus-minus": big.dim,
        "sigma-minus-minus": multi_fixed(
            g, [(sigma, +1), (tau, -1), (theta, -1)]).dim,
        "slice": t_span.dim,
        "sub": data.sub_span.dim,
    }
