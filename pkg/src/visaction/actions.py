"""Named actions the certifier knows how to set up.

Every builder re-derives its data from the exact catalog, so a numeric
certificate is always backed by the exact conditions (commutation, rank
equality, reversal of the characteristic element) checked beforehand.
"""
from __future__ import annotations

from dataclasses import dataclass

from .analysis import (
    compact_diagonal_setup,
    diagonal_setup,
    slice_subspace,
    verify_triple,
)
from .catalog import catalog_involution, catalog_sigma, dataset_row
from .certify import (
    IwasawaData,
    NumericAction,
    action_from_exact,
    basis_array,
)
from .compact import compact_type2_data, grassmann_theta
from .errors import ConditionFailed, UnsupportedFamily
from .families import StandardRealization, build, characteristic_element
from .liealg import (
    LinearAlgebraMap,
    centralizer_in,
    fixed_subspace,
    maximal_abelian,
    multi_fixed,
)
from .recipes import InvolutionRecipe, conj_recipe
from .roots import (
    generic_functional,
    nilpotent_part,
    positive_system,
    root_decomposition,
    stabilizes_nilpotent,
)


@dataclass
class PreparedAction:
    numeric: NumericAction
    iwasawa: IwasawaData | None = None
    notes: dict | None = None


def _symmetric(name: str, row_key: tuple, params: tuple) -> PreparedAction:
    row = dataset_row(*row_key)
    real, tau = catalog_involution(row, params)
    sigma = catalog_sigma(row, params, real, tau)
    ce = characteristic_element(real)
    rep = verify_triple(real, tau, sigma, ce=ce, label=name)
    if not rep.passed:
        raise ConditionFailed(f"{name}: exact precondition failed "
                              f"({rep.failed_condition})",
                              condition=rep.failed_condition)
    a = slice_subspace(real, tau, sigma)
    numeric = action_from_exact(name, "symmetric-subgroup", real, real.theta,
                                tau, sigma, a, ce)
    return PreparedAction(numeric=numeric,
                          notes={"rank": rep.rank_tau_theta})


def _unipotent(name: str, family: str, params: tuple) -> PreparedAction:
    real = build(family, *params)
    row3_key = {"sp_R": "sp_R", "su": "su", "so_star": "so_star",
                "so2n": "so2n"}.get(family)
    if row3_key is None:
        raise UnsupportedFamily(f"no unipotent setup for family {family}")
    row = dataset_row(3, row3_key)
    sigma = catalog_sigma(row, params, real, real.theta)
    g = real.algebra
    space = multi_fixed(g, [(sigma, +1), (real.theta, -1)])
    a = maximal_abelian(g, space, rational_torus=True)
    datum = root_decomposition(g, a)
    pos = positive_system(datum, generic_functional(datum))
    n_span = nilpotent_part(datum, pos)
    if not stabilizes_nilpotent(sigma, datum, pos):
        raise ConditionFailed(f"{name}: sigma does not stabilize n_+",
                              condition="sigma-nilpotent")
    ce = characteristic_element(real)
    numeric = action_from_exact(name, "unipotent", real, real.theta,
                                n_span, sigma, a, ce)
    k_span = fixed_subspace(g, real.theta, +1)
    iwa = IwasawaData.from_bases(
        basis_array(g, n_span), basis_array(g, a), basis_array(g, k_span))
    return PreparedAction(numeric=numeric, iwasawa=iwa,
                          notes={"n_dim": n_span.dim, "a_dim": a.dim})


def _diagonal(name: str, family: str, params: tuple,
              variant: str) -> PreparedAction:
    setup = diagonal_setup(build(family, *params), variant)
    if not setup.report.passed:
        raise ConditionFailed(f"{name}: exact precondition failed "
                              f"({setup.report.failed_condition})",
                              condition=setup.report.failed_condition)
    a = slice_subspace(setup.real, setup.tau, setup.sigma)
    kind = "diagonal" if variant == "DxD" else "diagonal-conjugate"
    numeric = action_from_exact(name, kind, setup.real, setup.theta,
                                setup.tau, setup.sigma, a, setup.char)
    return PreparedAction(numeric=numeric,
                          notes={"rank": setup.report.rank_tau_theta})


def _compact_pair(name: str, real: StandardRealization,
                  theta: LinearAlgebraMap, tau: LinearAlgebraMap,
                  sigma: LinearAlgebraMap, ce, slice_span) -> PreparedAction:
    g = real.algebra
    if not sigma.commutes_with(tau) or not sigma.commutes_with(theta):
        raise ConditionFailed(f"{name}: sigma does not commute",
                              condition="commutation")
    if sigma.apply_coords(ce.coords) != tuple(-c for c in ce.coords):
        raise ConditionFailed(f"{name}: sigma is not anti-holomorphic",
                              condition="sigma-Z")
    big = multi_fixed(g, [(tau, -1), (theta, -1)])
    if slice_span.dim:
        cz = centralizer_in(g, big, list(slice_span.basis))
        if cz != slice_span:
            raise ConditionFailed(f"{name}: slice torus is not maximal "
                                  "abelian", condition="torus-containment")
    numeric = action_from_exact(name, "compact", real, theta, tau, sigma,
                                slice_span, ce)
    return PreparedAction(numeric=numeric, notes={"slice": slice_span.dim})


def _compact_grassmann_so2(name: str) -> PreparedAction:
    real = build("su_compact", 2)
    theta = grassmann_theta(real, 1)
    tau = real.map_from_recipe(conj_recipe(size=2), name="tau")
    from .families import signature_matrix
    sigma = real.map_from_recipe(
        InvolutionRecipe(conjugator=signature_matrix(1, 1),
                         neg_transpose=True), name="sigma")
    ce = characteristic_element(real, theta)
    g = real.algebra
    small = multi_fixed(g, [(sigma, +1), (tau, -1), (theta, -1)])
    torus = maximal_abelian(g, small)
    return _compact_pair(name, real, theta, tau, sigma, ce, torus)


def _compact_type2_action(name: str, variant: str, p: int,
                          q: int) -> PreparedAction:
    data = compact_type2_data(variant, p, q)
    torus = data.slice_torus()
    numeric = action_from_exact(name, "compact", data.real, data.theta,
                                data.tau, data.sigma, torus, data.char)
    return PreparedAction(numeric=numeric,
                          notes={"dims": data.dims,
                                 "conditions": data.conditions})


def _compact_diag(name: str, m: int, p1: int, p2: int) -> PreparedAction:
    real = build("su_compact", m)
    th1 = grassmann_theta(real, p1)
    th2 = grassmann_theta(real, p2)
    setup = compact_diagonal_setup(real, th1, th2)
    g = setup.real.algebra
    small = multi_fixed(g, [(setup.sigma, +1), (setup.tau, -1),
                            (setup.theta, -1)])
    torus = maximal_abelian(g, small) if small.dim else small
    numeric = action_from_exact(name, "compact", setup.real, setup.theta,
                                setup.tau, setup.sigma, torus, setup.char)
    return PreparedAction(numeric=numeric, notes=dict(setup.conditions))


ACTIONS: dict[str, tuple] = {
    "sl2R:K": ("symmetric-subgroup", lambda: _symmetric("sl2R:K", (3, "sp_R"), (1,))),
    "sl2R:A": ("symmetric-subgroup", lambda: _symmetric("sl2R:A", (2, "26"), (1,))),
    "sl2R:N": ("unipotent", lambda: _unipotent("sl2R:N", "sp_R", (1,))),
    "sp2R:GL2R": ("symmetric-subgroup", lambda: _symmetric("sp2R:GL2R", (2, "26"), (2,))),
    "sp2R:U11": ("symmetric-subgroup", lambda: _symmetric("sp2R:U11", (1, "8"), (2, 1))),
    "sp2R:Sp1Sp1": ("symmetric-subgroup", lambda: _symmetric("sp2R:Sp1Sp1", (1, "9"), (2, 1))),
    "sp2R:Sp1C": ("symmetric-subgroup", lambda: _symmetric("sp2R:Sp1C", (2, "27"), (1,))),
    "sp2R:N": ("unipotent", lambda: _unipotent("sp2R:N", "sp_R", (2,))),
    "su21:K": ("symmetric-subgroup", lambda: _symmetric("su21:K", (3, "su"), (2, 1))),
    "diag-sl2R:DxD": ("diagonal", lambda: _diagonal("diag-sl2R:DxD", "sl_R", (2,), "DxD")),
    "diag-sl2R:DxDbar": ("diagonal-conjugate", lambda: _diagonal("diag-sl2R:DxDbar", "sl_R", (2,), "DxDbar")),
    "diag-su2:Gr1xGr1": ("compact", lambda: _compact_diag("diag-su2:Gr1xGr1", 2, 1, 1)),
    "su2:SO2": ("compact", lambda: _compact_grassmann_so2("su2:SO2")),
    "su6:Sp3": ("compact", lambda: _compact_type2_action("su6:Sp3", "II-1", 1, 1)),
}


def prepare_action(name: str) -> PreparedAction:
    if name not in ACTIONS:
        raise UnsupportedFamily(
            f"unsupported action {name!r}; known: {sorted(ACTIONS)}")
    return ACTIONS[name][1]()


def action_kind(name: str) -> str:
    return ACTIONS[name][0]
