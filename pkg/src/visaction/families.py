"""Matrix models of the supported classical families.

Non-compact Hermitian families su(p,q), so*(2n), sp(n,R), so(2,n) come
with their standard Cartan involution and characteristic element; the
compact families su(m), so(m), sp(n) and the split family sl(n,R) are
included for the compact quotients and the signature-twist demos.  All
entries are Gaussian rationals so every downstream check stays exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    NotHermitianType,
    ParameterOutOfRange,
    UnsupportedFamily,
)
from .exact import ExactMatrix, GR1, GRi, Q0, Q1, gr, rat
from .liealg import (
    LinearAlgebraMap,
    RealFormAlgebra,
    RealSpan,
    centralizer_in,
    certify_cartan,
    fixed_subspace,
    make_algebra,
)
from .recipes import InvolutionRecipe, ad_recipe, neg_transpose_recipe

FAMILIES = ("su", "so_star", "sp_R", "so2n", "sl_R",
            "su_compact", "so_compact", "sp_compact")

MAX_AMBIENT_DEFAULT = 8


# ---------------------------------------------------------------------------
# elementary building blocks
# ---------------------------------------------------------------------------

def _antisym(m, a, b):
    return ExactMatrix.unit(m, a, b) - ExactMatrix.unit(m, b, a)


def _sym(m, a, b):
    return ExactMatrix.unit(m, a, b) + ExactMatrix.unit(m, b, a)


def _i_sym(m, a, b):
    return _sym(m, a, b).scale(GRi)


def _i_antisym(m, a, b):
    return _antisym(m, a, b).scale(GRi)


def _i_diag_step(m, a):
    return (ExactMatrix.unit(m, a, a) - ExactMatrix.unit(m, a + 1, a + 1)).scale(GRi)


def su_basis(m: int) -> list[ExactMatrix]:
    basis = []
    for a in range(m):
        for b in range(a + 1, m):
            basis.append(_antisym(m, a, b))
            basis.append(_i_sym(m, a, b))
    for a in range(m - 1):
        basis.append(_i_diag_step(m, a))
    return basis


def su_pq_basis(p: int, q: int) -> list[ExactMatrix]:
    """Basis of su(p,q) for the form diag(I_p, -I_q)."""
    m = p + q
    basis = []
    for a in range(m):
        for b in range(a + 1, m):
            if (a < p) == (b < p):
                basis.append(_antisym(m, a, b))
                basis.append(_i_sym(m, a, b))
            else:
                basis.append(_sym(m, a, b))
                basis.append(_i_antisym(m, a, b))
    for a in range(m - 1):
        basis.append(_i_diag_step(m, a))
    return basis


def so_basis(m: int) -> list[ExactMatrix]:
    return [_antisym(m, a, b) for a in range(m) for b in range(a + 1, m)]


def signature_matrix(p: int, q: int) -> ExactMatrix:
    return ExactMatrix.diag([GR1] * p + [-GR1] * q)


def symplectic_J(n: int) -> ExactMatrix:
    """[[0, -I_n], [I_n, 0]] of size 2n."""
    Z = ExactMatrix.zeros(n)
    I = ExactMatrix.identity(n)
    return ExactMatrix.from_blocks([[Z, -I], [I, Z]])


def swap_matrix(m: int) -> ExactMatrix:
    """[[0, I_m], [I_m, 0]]: swaps the two factors of a direct sum."""
    Z = ExactMatrix.zeros(m)
    I = ExactMatrix.identity(m)
    return ExactMatrix.from_blocks([[Z, I], [I, Z]])


# ---------------------------------------------------------------------------
# standard realizations
# ---------------------------------------------------------------------------

@dataclass
class StandardRealization:
    """An algebra together with its standard Cartan data."""

    family: str
    params: tuple
    algebra: RealFormAlgebra
    theta: LinearAlgebraMap
    compact: bool
    char_matrix: ExactMatrix | None = None
    extras: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.algebra.label

    def map_from_recipe(self, recipe: InvolutionRecipe,
                        name: str = "") -> LinearAlgebraMap:
        return LinearAlgebraMap.from_matrix_function(
            self.algebra, recipe.apply, name=name, recipe=recipe)


@dataclass(frozen=True)
class CharacteristicElement:
    """Generator Z of c(k) normalized so ad(Z)^2 = -id on p."""

    Z: ExactMatrix
    coords: tuple
    theta_name: str = ""


def _check_params(family: str, params: tuple, ambient: int,
                  max_ambient: int) -> None:
    if any(x < 0 for x in params):
        raise ParameterOutOfRange(f"{family}{params}: negative parameter")
    if ambient > max_ambient:
        raise ParameterOutOfRange(
            f"{family}{params}: ambient size {ambient} exceeds bound "
            f"{max_ambient}; pass max_ambient to raise it")
    if ambient < 1:
        raise ParameterOutOfRange(f"{family}{params}: empty matrix model")


@lru_cache(maxsize=None)
def build(family: str, *params: int,
          max_ambient: int = MAX_AMBIENT_DEFAULT) -> StandardRealization:
    """Construct a standard realization; results are cached per parameters.

    Supported families: su(p,q), so_star(2n), sp_R(n), so2n(n) for
    so(2,n), sl_R(n), su_compact(m), so_compact(m), sp_compact(n).
    """
    if family == "su":
        p, q = params
        m = p + q
        _check_params(family, params, m, max_ambient)
        if p < 1 or q < 1:
            raise ParameterOutOfRange("su(p,q) needs p, q >= 1; use "
                                      "su_compact for q = 0")
        D = signature_matrix(p, q)
        alg = make_algebra(su_pq_basis(p, q), f"su({p},{q})")
        theta = LinearAlgebraMap.from_matrix_function(
            alg, ad_recipe(D).apply, name="theta", recipe=ad_recipe(D))
        zq, zp = rat(q, m), rat(-p, m)
        Z = ExactMatrix.diag([gr(0, zq)] * p + [gr(0, zp)] * q)
        real = StandardRealization(family, params, alg, theta, False,
                                   char_matrix=Z, extras={"form": D})
        certify_cartan(alg, theta)
        return real

    if family == "so_star":
        (two_n,) = params
        if two_n % 2 or two_n < 2:
            raise ParameterOutOfRange("so_star takes an even argument 2n >= 2")
        n = two_n // 2
        _check_params(family, params, 2 * n, max_ambient)
        basis = []
        un = []
        for a in range(n):
            for b in range(a + 1, n):
                un.append(_antisym(n, a, b))
                un.append(_i_sym(n, a, b))
        for a in range(n):
            un.append(ExactMatrix.unit(n, a, a, GRi))
        for A in un:
            basis.append(ExactMatrix.from_blocks(
                [[A, ExactMatrix.zeros(n)], [ExactMatrix.zeros(n), A.conj()]]))
        for a in range(n):
            for b in range(a + 1, n):
                for B in (_antisym(n, a, b), _i_antisym(n, a, b)):
                    basis.append(ExactMatrix.from_blocks(
                        [[ExactMatrix.zeros(n), B],
                         [-B.conj(), ExactMatrix.zeros(n)]]))
        D = signature_matrix(n, n)
        alg = make_algebra(basis, f"so*({2 * n})")
        theta = LinearAlgebraMap.from_matrix_function(
            alg, ad_recipe(D).apply, name="theta", recipe=ad_recipe(D))
        Z = D.scale(gr(0, rat(1, 2)))
        real = StandardRealization(family, params, alg, theta, False,
                                   char_matrix=Z, extras={"form": D})
        certify_cartan(alg, theta)
        return real

    if family == "sp_R":
        (n,) = params
        if n < 1:
            raise ParameterOutOfRange("sp_R needs n >= 1")
        _check_params(family, params, 2 * n, max_ambient)
        m = 2 * n
        basis = []
        for a in range(n):
            for b in range(n):
                basis.append(ExactMatrix.unit(m, a, b)
                             - ExactMatrix.unit(m, n + b, n + a))
        for a in range(n):
            for b in range(a, n):
                blk = _sym(n, a, b) if a != b else ExactMatrix.unit(n, a, a)
                Zn = ExactMatrix.zeros(n)
                basis.append(ExactMatrix.from_blocks([[Zn, blk], [Zn, Zn]]))
                basis.append(ExactMatrix.from_blocks([[Zn, Zn], [blk, Zn]]))
        J = symplectic_J(n)
        alg = make_algebra(basis, f"sp({n},R)")
        theta = LinearAlgebraMap.from_matrix_function(
            alg, ad_recipe(J).apply, name="theta", recipe=ad_recipe(J))
        Z = J.scale(rat(1, 2))
        real = StandardRealization(family, params, alg, theta, False,
                                   char_matrix=Z, extras={"J": J})
        certify_cartan(alg, theta)
        return real

    if family == "so2n":
        (n,) = params
        if n < 1:
            raise ParameterOutOfRange("so(2,n) needs n >= 1")
        m = 2 + n
        _check_params(family, params, m, max_ambient)
        basis = [_antisym(m, 0, 1)]
        for a in range(2, m):
            for b in range(a + 1, m):
                basis.append(_antisym(m, a, b))
        for r in range(2):
            for c in range(2, m):
                basis.append(_sym(m, r, c))
        D = signature_matrix(2, n)
        alg = make_algebra(basis, f"so(2,{n})")
        theta = LinearAlgebraMap.from_matrix_function(
            alg, ad_recipe(D).apply, name="theta", recipe=ad_recipe(D))
        Z = _antisym(m, 0, 1)
        real = StandardRealization(family, params, alg, theta, False,
                                   char_matrix=Z, extras={"form": D})
        certify_cartan(alg, theta)
        return real

    if family == "sl_R":
        (n,) = params
        if n < 2:
            raise ParameterOutOfRange("sl_R needs n >= 2")
        _check_params(family, params, n, max_ambient)
        basis = [ExactMatrix.unit(n, a, b)
                 for a in range(n) for b in range(n) if a != b]
        basis += [ExactMatrix.unit(n, a, a) - ExactMatrix.unit(n, a + 1, a + 1)
                  for a in range(n - 1)]
        alg = make_algebra(basis, f"sl({n},R)")
        rec = neg_transpose_recipe(size=n)
        theta = LinearAlgebraMap.from_matrix_function(
            alg, rec.apply, name="theta", recipe=rec)
        Z = _antisym(n, 0, 1).scale(rat(1, 2)) if n == 2 else None
        real = StandardRealization(family, params, alg, theta, False,
                                   char_matrix=Z, extras={})
        certify_cartan(alg, theta)
        return real

    if family == "su_compact":
        (m,) = params
        if m < 2:
            raise ParameterOutOfRange("su_compact needs m >= 2")
        _check_params(family, params, m, max_ambient)
        alg = make_algebra(su_basis(m), f"su({m})")
        theta = LinearAlgebraMap.identity(alg)
        theta.name = "theta"
        real = StandardRealization(family, params, alg, theta, True)
        certify_cartan(alg, theta)
        return real

    if family == "so_compact":
        (m,) = params
        if m < 3:
            raise ParameterOutOfRange("so_compact needs m >= 3")
        _check_params(family, params, m, max_ambient)
        alg = make_algebra(so_basis(m), f"so({m})")
        theta = LinearAlgebraMap.identity(alg)
        theta.name = "theta"
        real = StandardRealization(family, params, alg, theta, True)
        certify_cartan(alg, theta)
        return real

    if family == "sp_compact":
        (n,) = params
        if n < 1:
            raise ParameterOutOfRange("sp_compact needs n >= 1")
        _check_params(family, params, 2 * n, max_ambient)
        basis = []
        un = []
        for a in range(n):
            for b in range(a + 1, n):
                un.append(_antisym(n, a, b))
                un.append(_i_sym(n, a, b))
        for a in range(n):
            un.append(ExactMatrix.unit(n, a, a, GRi))
        Zn = ExactMatrix.zeros(n)
        for A in un:
            basis.append(ExactMatrix.from_blocks([[A, Zn], [Zn, A.conj()]]))
        syms = []
        for a in range(n):
            for b in range(a, n):
                blk = _sym(n, a, b) if a != b else ExactMatrix.unit(n, a, a)
                syms.append(blk)
                syms.append(blk.scale(GRi))
        for B in syms:
            basis.append(ExactMatrix.from_blocks([[Zn, B], [-B.conj(), Zn]]))
        alg = make_algebra(basis, f"sp({n})")
        theta = LinearAlgebraMap.identity(alg)
        theta.name = "theta"
        real = StandardRealization(family, params, alg, theta, True)
        certify_cartan(alg, theta)
        return real

    raise UnsupportedFamily(
        f"family {family!r} is not implementable (supported: {FAMILIES})")


# ---------------------------------------------------------------------------
# characteristic elements
# ---------------------------------------------------------------------------

def characteristic_element(real: StandardRealization,
                           theta: LinearAlgebraMap | None = None
                           ) -> CharacteristicElement:
    """Certified generator of c(k) acting as the complex structure on p.

    For the standard Cartan involution of a non-compact family the
    catalog matrix is used; otherwise (compact Hermitian quotients) Z is
    solved for inside the center of k.  Either way the defining
    properties are certified exactly.
    """
    g = real.algebra
    th = theta if theta is not None else real.theta
    use_catalog = theta is None or theta is real.theta
    if use_catalog and real.char_matrix is not None:
        Z = real.char_matrix
        coords = g.coordinates(Z)
        if coords is None:
            raise NotHermitianType(f"{g.label}: catalog Z outside algebra")
    else:
        coords = _solve_characteristic(g, th)
        Z = g.element(coords)
    _certify_characteristic(g, th, coords)
    return CharacteristicElement(Z=Z, coords=coords, theta_name=th.name)


def _solve_characteristic(g: RealFormAlgebra, theta: LinearAlgebraMap):
    k = fixed_subspace(g, theta, +1)
    p = fixed_subspace(g, theta, -1)
    if p.dim == 0:
        raise NotHermitianType(f"{g.label}: -1 eigenspace of theta is zero")
    cz = centralizer_in(g, k, list(k.basis))
    if cz.dim == 0:
        raise NotHermitianType(f"{g.label}: center of k is trivial")
    for cand in cz.basis:
        # ad(c)^2 must be a negative rational square multiple of id on p
        lam = None
        ok = True
        for v in p.basis:
            w = g.bracket_coords(cand, g.bracket_coords(cand, v))
            ratio = None
            for a, b in zip(w, v):
                if bool(a) != bool(b):
                    ok = False
                    break
                if b:
                    r = a / b
                    if ratio is None:
                        ratio = r
                    elif ratio != r:
                        ok = False
                        break
            if not ok:
                break
            lam = ratio if lam is None else lam
            if ratio != lam:
                ok = False
                break
        if not ok or lam is None or lam >= 0:
            continue
        num, den = -lam.numerator, lam.denominator
        s_num, s_den = _isqrt_exact(num), _isqrt_exact(den)
        if s_num is None or s_den is None:
            continue
        scale = rat(s_den, s_num)
        return tuple(c * scale for c in cand)
    raise NotHermitianType(
        f"{g.label}: no center element scales to a complex structure on p")


def _isqrt_exact(n) -> int | None:
    n = int(n)
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def _certify_characteristic(g: RealFormAlgebra, theta: LinearAlgebraMap,
                            coords) -> None:
    k = fixed_subspace(g, theta, +1)
    p = fixed_subspace(g, theta, -1)
    for kb in k.basis:
        if any(g.bracket_coords(coords, kb)):
            raise NotHermitianType(
                f"{g.label}: Z does not centralize k")
    for v in p.basis:
        w = g.bracket_coords(coords, g.bracket_coords(coords, v))
        if any(a + b for a, b in zip(w, v)):
            raise NotHermitianType(
                f"{g.label}: ad(Z)^2 is not -id on p")
    # zero eigenspace of ad(Z) must be exactly k
    ad = g.ad_rows(coords)
    from .exact import nullspace
    if nullspace(ad) != k:
        raise NotHermitianType(
            f"{g.label}: 0-eigenspace of ad(Z) differs from k")
