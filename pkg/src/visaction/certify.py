"""Floating-point certification of strong visibility at desk scale.

Points of D = G/K are stored through the twisted embedding
P(g) = g * theta(g)^{-1}, which is constant on cosets and works for
compact and non-compact quotients alike.  Orbit and slice memberships
are certified by multi-restart nonlinear least squares on exponential
coordinates: a small residual certifies membership, a large one is
reported as inconclusive, never as a refutation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm, logm
from scipy.optimize import least_squares

from .errors import ConditionFailed, IwasawaNonConvergence
from .exact import ExactMatrix
from .families import CharacteristicElement, StandardRealization
from .liealg import LinearAlgebraMap, RealFormAlgebra, fixed_subspace
from .recipes import InvolutionRecipe

DEFAULT_TOL = 1e-6
DEFAULT_RESTARTS = 32
DEFAULT_SAMPLES = 100
MAX_SEARCH_DIM = 24


def antiholomorphy_exact(sigma: LinearAlgebraMap,
                         ce: CharacteristicElement) -> bool:
    """Exact check that sigma anti-commutes with the complex structure.

    Verifies sigma o ad(Z) = -ad(Z) o sigma as rational matrices (no
    floating point); for an automorphism commuting with theta this is
    equivalent to sigma(Z) = -Z.
    """
    from .exact import mat_eq, mat_mul
    g = sigma.algebra
    adz = g.ad_rows(ce.coords)
    lhs = mat_mul(sigma.action, adz)
    rhs = [[-x for x in row] for row in mat_mul(adz, sigma.action)]
    return mat_eq(lhs, rhs)


def to_complex(M: ExactMatrix) -> np.ndarray:
    return np.array([[complex(M[i, j].re, M[i, j].im)
                      for j in range(M.cols)] for i in range(M.rows)])


def basis_array(g: RealFormAlgebra, span=None) -> np.ndarray:
    """Stack of basis matrices; span rows are coordinate vectors of g."""
    if span is None:
        mats = [to_complex(b) for b in g.basis]
    else:
        mats = [to_complex(g.element(v)) for v in span.basis]
    return np.stack(mats) if mats else np.zeros((0, g.m, g.m), complex)


@dataclass
class NumericAction:
    """Everything the certifier needs about one group action."""

    name: str
    kind: str                      # symmetric-subgroup | diagonal | ...
    algebra: RealFormAlgebra
    g_basis: np.ndarray
    h_basis: np.ndarray            # subgroup directions (h, or n_+)
    slice_basis: np.ndarray        # the slice torus a (or t)
    p_basis: np.ndarray
    theta: InvolutionRecipe
    sigma: InvolutionRecipe
    Z: np.ndarray
    sigma_fixes_slice_exactly: bool
    extras: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return self.algebra.m

    def exp_combo(self, basis: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
        X = np.tensordot(coeffs, basis, axes=(0, 0))
        return expm(X)

    def point(self, gmat: np.ndarray) -> np.ndarray:
        return gmat @ np.linalg.inv(self.theta.group_apply(gmat))

    def act(self, hmat: np.ndarray, pt: np.ndarray) -> np.ndarray:
        return hmat @ pt @ np.linalg.inv(self.theta.group_apply(hmat))

    def sigma_point(self, pt: np.ndarray) -> np.ndarray:
        return self.sigma.group_apply(pt)

    def slice_point(self, t: np.ndarray) -> np.ndarray:
        return self.point(self.exp_combo(self.slice_basis, t))

    def random_point(self, rng: np.random.Generator,
                     radius: float = 1.0) -> np.ndarray:
        dim = self.g_basis.shape[0]
        coeffs = rng.normal(0.0, radius / np.sqrt(dim), size=dim)
        return self.point(self.exp_combo(self.g_basis, coeffs))


def action_from_exact(name: str, kind: str, real: StandardRealization,
                      theta: LinearAlgebraMap, tau_or_h,
                      sigma: LinearAlgebraMap, slice_span,
                      ce: CharacteristicElement) -> NumericAction:
    """Assemble the numeric data from certified exact objects.

    tau_or_h is either the involution whose +1 space is the subgroup, or
    a RealSpan of subgroup directions (the unipotent case).
    """
    g = real.algebra
    if isinstance(tau_or_h, LinearAlgebraMap):
        h_span = fixed_subspace(g, tau_or_h, +1)
    else:
        h_span = tau_or_h
    if h_span.dim > MAX_SEARCH_DIM:
        raise ConditionFailed(
            f"subgroup dimension {h_span.dim} exceeds the search cap "
            f"{MAX_SEARCH_DIM}", condition="search-dim")
    # exact check: sigma fixes the slice directions pointwise
    fixes = all(sigma.apply_coords(v) == tuple(v) for v in slice_span.basis)
    p_span = fixed_subspace(g, theta, -1)
    return NumericAction(
        name=name, kind=kind, algebra=g,
        g_basis=basis_array(g),
        h_basis=basis_array(g, h_span),
        slice_basis=basis_array(g, slice_span),
        p_basis=basis_array(g, p_span),
        theta=theta.recipe if theta.recipe is not None else _id_recipe(g.m),
        sigma=sigma.recipe if sigma.recipe is not None
        else _require_recipe(sigma),
        Z=to_complex(ce.Z),
        sigma_fixes_slice_exactly=fixes,
    )


def _id_recipe(m: int) -> InvolutionRecipe:
    return InvolutionRecipe(conjugator=ExactMatrix.identity(m))


def _require_recipe(mp: LinearAlgebraMap) -> InvolutionRecipe:
    if mp.recipe is None:
        raise ConditionFailed(f"{mp.name}: no structural recipe available",
                              condition="recipe")
    return mp.recipe


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    residual: float
    converged: bool
    restarts_used: int
    params: np.ndarray | None = None


def _lsq_min(objective, n_params: int, rng_seq: np.random.SeedSequence,
             restarts: int, stop_below: float,
             max_nfev: int | None = None, init: np.ndarray | None = None
             ) -> SearchResult:
    if max_nfev is None:
        max_nfev = max(400, 40 * n_params)
    best = np.inf
    best_params = None
    used = 0
    scales = (0.7, 0.3, 1.2)
    for r in range(restarts):
        used = r + 1
        child = np.random.Generator(np.random.PCG64(rng_seq.spawn(1)[0]))
        if r == 0 and init is not None and np.all(np.isfinite(init)):
            x0 = init
        elif r == 0 or (r == 1 and init is not None):
            x0 = np.zeros(n_params)
        else:
            x0 = child.normal(0.0, scales[r % 3], size=n_params)
        try:
            sol = least_squares(objective, x0, method="lm",
                                xtol=1e-15, ftol=1e-15, gtol=1e-15,
                                max_nfev=max_nfev)
            res = float(np.linalg.norm(sol.fun))
        except Exception:
            continue
        if res < best:
            best = res
            best_params = sol.x
        if best < stop_below:
            break
    if best_params is not None and not best < stop_below:
        # polish the best local solution with a larger budget
        try:
            sol = least_squares(objective, best_params, method="lm",
                                xtol=1e-15, ftol=1e-15, gtol=1e-15,
                                max_nfev=4 * max_nfev)
            res = float(np.linalg.norm(sol.fun))
            if res < best:
                best = res
                best_params = sol.x
        except Exception:
            pass
    return SearchResult(residual=best, converged=best < stop_below,
                        restarts_used=used, params=best_params)


def _mat_to_vec(M: np.ndarray) -> np.ndarray:
    return np.concatenate([M.real.ravel(), M.imag.ravel()])


def orbit_residual(action: NumericAction, px: np.ndarray, py: np.ndarray,
                   seed_seq: np.random.SeedSequence,
                   restarts: int = DEFAULT_RESTARTS,
                   stop_below: float = 1e-9,
                   init: np.ndarray | None = None) -> SearchResult:
    """min over s of || exp(s . h) . py - px ||_F; 0 certifies same orbit."""
    k = action.h_basis.shape[0]
    if k == 0:
        return SearchResult(residual=float(np.linalg.norm(py - px)),
                            converged=True, restarts_used=0)

    def objective(s):
        h = action.exp_combo(action.h_basis, s)
        return _mat_to_vec(action.act(h, py) - px)

    return _lsq_min(objective, k, seed_seq, restarts, stop_below, init=init)


def slice_residual(action: NumericAction, px: np.ndarray,
                   seed_seq: np.random.SeedSequence,
                   restarts: int = DEFAULT_RESTARTS,
                   stop_below: float = 1e-9) -> SearchResult:
    """min over (s, t) of || exp(s . h) . P(exp(t . a)) - px ||_F."""
    k = action.h_basis.shape[0]
    r = action.slice_basis.shape[0]

    def objective(st):
        h = action.exp_combo(action.h_basis, st[:k])
        pa = action.slice_point(st[k:])
        return _mat_to_vec(action.act(h, pa) - px)

    return _lsq_min(objective, k + r, seed_seq, restarts, stop_below)


def j_transversality_defect(action: NumericAction,
                            t_coeffs: np.ndarray) -> float:
    """Largest defect of J(T_x S) against T_x(H.x) at a slice point.

    Tangents at x = exp(t.a)K are represented in the twisted embedding:
    slice directions a A a, their J-images a [Z, A] a, and subgroup
    directions Y P(a) - P(a) theta(Y).
    """
    a = action.exp_combo(action.slice_basis, t_coeffs)
    pa = a @ a  # theta(a)^{-1} = a on the slice
    h_tangents = []
    for Y in action.h_basis:
        h_tangents.append(_mat_to_vec(Y @ pa - pa @ _theta_alg(action, Y)))
    H = np.stack(h_tangents).T if h_tangents else None
    worst = 0.0
    for A in action.slice_basis:
        JA = action.Z @ A - A @ action.Z
        v = _mat_to_vec(a @ JA @ a)
        nv = np.linalg.norm(v)
        if nv < 1e-14:
            continue
        if H is None:
            worst = max(worst, 1.0)
            continue
        coef, *_ = np.linalg.lstsq(H, v, rcond=None)
        defect = np.linalg.norm(H @ coef - v) / nv
        worst = max(worst, float(defect))
    return worst


def _theta_alg(action: NumericAction, Y: np.ndarray) -> np.ndarray:
    rec = action.theta
    X = Y
    if rec.neg_transpose:
        X = -X.T
    if rec.conj:
        X = X.conj()
    A = rec.conjugator_complex()
    return rec.sign * (A @ X @ rec.inverse_complex())


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass
class VisibilityCertificate:
    action: str
    kind: str
    seed: int
    tol: float
    samples: int
    restarts: int
    residuals: dict
    inconclusive_samples: list
    status: str
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_record(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "certificate",
            "action": self.action,
            "action_kind": self.kind,
            "seed": self.seed,
            "tol": self.tol,
            "samples": self.samples,
            "restarts": self.restarts,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "inconclusive_samples": list(self.inconclusive_samples),
            "status": self.status,
            **({"extras": self.extras} if self.extras else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_record(), sort_keys=True, indent=2)


def certify_strong_visibility(action: NumericAction, seed: int,
                              samples: int = DEFAULT_SAMPLES,
                              tol: float = DEFAULT_TOL,
                              restarts: int = DEFAULT_RESTARTS,
                              radius: float = 1.0) -> VisibilityCertificate:
    """Sample-based residual certificate for the four conditions.

    Per sample x = exp(X) . o: (a) distance from x to H . exp(a) . o,
    (b) exact fixed-slice check, (c) distance from sigma(x) to H . x,
    (d) J-transversality defect at the recovered slice pointewhere.
    Residuals above tol mark the sample inconclusive; the theorems are
    never reported as refuted.
    """
    if not action.sigma_fixes_slice_exactly:
        raise ConditionFailed("sigma does not fix the slice pointwise "
                              "(exact check failed)", condition="sigma-slice")
    root = np.random.SeedSequence([seed, _name_entropy(action.name)])
    sample_seqs = root.spawn(samples)
    maxima = {"slice_meets_orbit": 0.0, "sigma_fixes_slice": 0.0,
              "sigma_preserves_orbits": 0.0, "j_transversality": 0.0}
    inconclusive = []
    stop = min(tol * 1e-2, 1e-8)
    for idx, seq in enumerate(sample_seqs):
        rng = np.random.Generator(np.random.PCG64(seq.spawn(1)[0]))
        px = action.random_point(rng, radius=radius)
        res_slice = slice_residual(action, px, seq.spawn(1)[0],
                                   restarts=restarts, stop_below=stop)
        orbit_init = _sigma_orbit_seed(action, res_slice)
        res_orbit = orbit_residual(action, px, action.sigma_point(px),
                                   seq.spawn(1)[0], restarts=restarts,
                                   stop_below=stop, init=orbit_init)
        defect = (j_transversality_defect(action, res_slice.params[
            action.h_basis.shape[0]:])
            if res_slice.params is not None else 1.0)
        vals = {"slice_meets_orbit": res_slice.residual,
                "sigma_fixes_slice": 0.0,
                "sigma_preserves_orbits": res_orbit.residual,
                "j_transversality": defect}
        bad = [k for k, v in vals.items() if v >= tol]
        if bad:
            inconclusive.append({"sample": idx, "conditions": bad,
                                 "residuals": {k: float(vals[k])
                                               for k in bad}})
        for k, v in vals.items():
            maxima[k] = max(maxima[k], float(v))
    status = "pass" if not inconclusive else "inconclusive"
    return VisibilityCertificate(
        action=action.name, kind=action.kind, seed=seed, tol=tol,
        samples=samples, restarts=restarts, residuals=maxima,
        inconclusive_samples=inconclusive, status=status)


def _name_entropy(name: str) -> int:
    h = 0
    for ch in name:
        h = (h * 131 + ord(ch)) % (2 ** 31)
    return h


def _sigma_orbit_seed(action: NumericAction,
                      res_slice: SearchResult) -> np.ndarray | None:
    """Seed for the sigma-orbit search from a recovered factorization.

    If x = h0 . a . o then h0 sigma(h0)^{-1} carries sigma(x) back to x,
    so its log-coordinates land the optimizer next to the solution.
    """
    k = action.h_basis.shape[0]
    if res_slice.params is None or not res_slice.converged or k == 0:
        return None
    try:
        h0 = action.exp_combo(action.h_basis, res_slice.params[:k])
        hstar = h0 @ np.linalg.inv(action.sigma.group_apply(h0))
        w = logm(hstar)
        cols = np.stack([_mat_to_vec(B) for B in action.h_basis]).T
        coords, *_ = np.linalg.lstsq(cols, _mat_to_vec(w), rcond=None)
        return np.real(coords)
    except Exception:
        return None


def planted_slice_recovery(action: NumericAction, seed: int,
                           trials: int = 1000,
                           restarts: int = DEFAULT_RESTARTS,
                           threshold: float = 1e-8,
                           radius: float = 1.0) -> dict:
    """Recover x = h . a . o built from known factors; success rate report."""
    root = np.random.SeedSequence([seed, 77, _name_entropy(action.name)])
    ok = 0
    worst = 0.0
    for seq in root.spawn(trials):
        rng = np.random.Generator(np.random.PCG64(seq.spawn(1)[0]))
        k = action.h_basis.shape[0]
        r = action.slice_basis.shape[0]
        s = rng.normal(0.0, radius / max(1.0, np.sqrt(k)), size=k)
        t = rng.normal(0.0, radius / max(1.0, np.sqrt(max(r, 1))), size=r)
        h = action.exp_combo(action.h_basis, s)
        px = action.act(h, action.slice_point(t))
        res = slice_residual(action, px, seq.spawn(1)[0], restarts=restarts,
                             stop_below=min(threshold * 1e-2, 1e-10))
        if res.residual < threshold:
            ok += 1
        worst = max(worst, res.residual)
    return {"trials": trials, "recovered": ok, "rate": ok / trials,
            "worst_recovered_residual": worst}


# ---------------------------------------------------------------------------
# triangular (Iwasawa-style) decomposition
# ---------------------------------------------------------------------------

@dataclass
class IwasawaData:
    n_basis: np.ndarray
    a_basis: np.ndarray
    k_basis: np.ndarray
    pinv: np.ndarray               # projects a matrix onto full coordinates

    @classmethod
    def from_bases(cls, n_basis, a_basis, k_basis) -> "IwasawaData":
        full = np.concatenate([n_basis, a_basis, k_basis])
        cols = np.stack([_mat_to_vec(B) for B in full]).T
        pinv = np.linalg.pinv(cols)
        return cls(n_basis, a_basis, k_basis, pinv)

    @property
    def dims(self) -> tuple[int, int, int]:
        return (self.n_basis.shape[0], self.a_basis.shape[0],
                self.k_basis.shape[0])


def iwasawa_factor(data: IwasawaData, gmat: np.ndarray,
                   tol: float = 1e-10, max_nfev: int = 600) -> tuple:
    """Solve g = exp(n) exp(a) exp(k) by projection and Newton refinement."""
    dn, da, dk = data.dims

    def split(x):
        return x[:dn], x[dn:dn + da], x[dn + da:]

    def factors(x):
        u, t, kp = split(x)
        N = expm(np.tensordot(u, data.n_basis, axes=(0, 0)))
        A = expm(np.tensordot(t, data.a_basis, axes=(0, 0)))
        K = expm(np.tensordot(kp, data.k_basis, axes=(0, 0)))
        return N, A, K

    def objective(x):
        N, A, K = factors(x)
        return _mat_to_vec(N @ A @ K - gmat)

    X0 = logm(gmat)
    x0 = data.pinv @ _mat_to_vec(X0)
    x0 = np.real(x0)
    sol = least_squares(objective, x0, method="lm", xtol=1e-15, ftol=1e-15,
                        gtol=1e-15, max_nfev=max_nfev)
    res = float(np.linalg.norm(sol.fun))
    if res > tol:
        sol = least_squares(objective, np.zeros_like(x0), method="lm",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15,
                            max_nfev=max_nfev)
        res = float(np.linalg.norm(sol.fun))
    if res > tol:
        raise IwasawaNonConvergence(
            f"triangular decomposition residual {res:.3e} > {tol:.1e}")
    N, A, K = factors(sol.x)
    return N, A, K, res


def certify_unipotent_visibility(action: NumericAction, iwa: IwasawaData,
                                 seed: int, samples: int = DEFAULT_SAMPLES,
                                 tol: float = DEFAULT_TOL,
                                 restarts: int = DEFAULT_RESTARTS,
                                 radius: float = 1.0) -> VisibilityCertificate:
    """Strong-visibility certificate for the maximal unipotent subgroup.

    Adds a per-sample triangular-decomposition round trip on top of the
    usual residuals (the subgroup directions of the action are n_+).
    """
    cert = certify_strong_visibility(action, seed, samples=samples, tol=tol,
                                     restarts=restarts, radius=radius)
    root = np.random.SeedSequence([seed, 13, _name_entropy(action.name)])
    worst = 0.0
    for seq in root.spawn(min(samples, 50)):
        rng = np.random.Generator(np.random.PCG64(seq.spawn(1)[0]))
        dim = action.g_basis.shape[0]
        coeffs = rng.normal(0.0, radius / np.sqrt(dim), size=dim)
        g = expm(np.tensordot(coeffs, action.g_basis, axes=(0, 0)))
        N, A, K, res = iwasawa_factor(iwa, g)
        worst = max(worst, res)
    cert.residuals["iwasawa_round_trip"] = worst
    if worst >= tol:
        cert.status = "inconclusive"
    return cert
