"""Restricted root decompositions, signatures, and twisted involutions.

Roots of a maximal abelian subspace a are stored as tuples of rational
eigenvalues on the ordered torus basis.  Signatures are +/-1 assignments
on a lattice basis of the root lattice (computed by Hermite normal
form), extended multiplicatively, and each signature twists tau into a
new involution on the root grading.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    DegenerateFunctional,
    NonRationalSpectrum,
    NotAutomorphism,
    NotInvolution,
)
from .exact import (
    Q0,
    Q1,
    RealSpan,
    Rational,
    hermite_normal_form,
    integer_coordinates,
    intersect,
    linear_relations,
    mat_inverse,
    mat_mul,
    rat,
    rational_eigenspaces,
    span_of,
)
from .liealg import (
    LinearAlgebraMap,
    RealFormAlgebra,
    fixed_subspace,
    multi_fixed,
)


@dataclass
class RestrictedRootDatum:
    algebra: RealFormAlgebra
    torus: RealSpan
    roots: tuple                      # sorted nonzero covectors
    root_spaces: dict                 # covector -> RealSpan (algebra coords)
    zero_space: RealSpan
    _basis_change: tuple | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.torus.dim

    def multiplicity(self, root) -> int:
        return self.root_spaces[root].dim

    def blocks(self) -> list:
        """(covector, RealSpan) with the zero space first, roots sorted."""
        zero = tuple([Q0] * self.rank)
        out = [(zero, self.zero_space)]
        out += [(r, self.root_spaces[r]) for r in self.roots]
        return out

    def new_basis_matrices(self):
        """Columns V of the adapted basis and V^{-1}, cached."""
        if self._basis_change is None:
            cols = []
            for _, space in self.blocks():
                cols.extend(space.basis)
            dim = self.algebra.dim
            V = [[cols[j][i] for j in range(dim)] for i in range(dim)]
            Vinv = mat_inverse(V)
            self._basis_change = (V, Vinv)
        return self._basis_change

    def block_labels(self) -> list:
        out = []
        for cov, space in self.blocks():
            out.extend([cov] * space.dim)
        return out


def root_decomposition(g: RealFormAlgebra,
                       torus: RealSpan) -> RestrictedRootDatum:
    """Simultaneous exact eigenspace decomposition of ad over the torus.

    The torus basis must act semisimply with rational joint spectrum;
    otherwise NonRationalSpectrum propagates with advice to use the
    catalog's standard torus.
    """
    for i, u in enumerate(torus.basis):
        for v in torus.basis[i:]:
            if any(g.bracket_coords(u, v)):
                raise NotInvolution("torus is not abelian")
    blocks = [((), g.full_span())]
    for H in torus.basis:
        refined = []
        for prefix, space in blocks:
            if space.dim == 0:
                continue
            rows = _restricted_ad(g, H, space)
            try:
                eigs = rational_eigenspaces(rows)
            except NonRationalSpectrum as exc:
                raise NonRationalSpectrum(
                    f"{exc}; replace the subspace by the catalog's standard "
                    "torus") from exc
            for lam, sub in eigs:
                vecs = [_combine(space, coeffs) for coeffs in sub.basis]
                refined.append((prefix + (lam,),
                                span_of(vecs, g.dim)))
        blocks = refined
    rank = torus.dim
    zero = tuple([Q0] * rank)
    root_spaces = {}
    zero_space = None
    total = 0
    for cov, space in blocks:
        total += space.dim
        if cov == zero:
            zero_space = space
        else:
            root_spaces[cov] = space
    if total != g.dim:
        raise NonRationalSpectrum("eigenspace dimensions do not fill the "
                                  "algebra")
    if zero_space is None:
        zero_space = RealSpan(g.dim, [], [])
    roots = tuple(sorted(root_spaces.keys()))
    for r in roots:
        neg = tuple(-x for x in r)
        if neg not in root_spaces:
            raise NonRationalSpectrum(f"root set is not symmetric: {r}")
    for H in torus.basis:
        if not zero_space.contains(H):
            raise NotInvolution("torus is not inside its own zero space")
    return RestrictedRootDatum(g, torus, roots, root_spaces, zero_space)


def _restricted_ad(g: RealFormAlgebra, H, space: RealSpan) -> list:
    n = space.dim
    rows = [[Q0] * n for _ in range(n)]
    for j, v in enumerate(space.basis):
        w = g.bracket_coords(H, v)
        coeffs = space.coefficients(w)
        if coeffs is None:
            raise NonRationalSpectrum("ad(H) does not preserve the joint "
                                      "eigenspace; torus is not abelian?")
        for i, c in enumerate(coeffs):
            rows[i][j] = c
    return rows


def _combine(space: RealSpan, coeffs):
    vec = [Q0] * space.ambient_dim
    for c, row in zip(coeffs, space.basis):
        if c:
            for idx, x in enumerate(row):
                if x:
                    vec[idx] += c * x
    return tuple(vec)


# ---------------------------------------------------------------------------
# signatures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Signature:
    """Multiplicative +/-1 assignment on the root lattice."""

    lattice_basis: tuple              # integer rows (scaled roots)
    denominator: int
    signs: tuple                      # +/-1 per lattice basis row
    values: dict = field(hash=False, compare=False, default_factory=dict)

    def __call__(self, root) -> int:
        key = tuple(root)
        if not any(key):
            return 1
        if key in self.values:
            return self.values[key]
        scaled = [int(x * self.denominator) for x in key]
        coords = integer_coordinates(scaled, self.lattice_basis)
        if coords is None:
            raise ValueError(f"{key} is not in the root lattice")
        val = 1
        for s, c in zip(self.signs, coords):
            if s < 0 and c % 2:
                val = -val
        self.values[key] = val
        return val

    @property
    def is_trivial(self) -> bool:
        return all(s > 0 for s in self.signs)

    def describe(self, datum: RestrictedRootDatum) -> str:
        vals = ",".join("+" if self(r) > 0 else "-" for r in datum.roots)
        return f"eps[{vals}]"


def signatures(datum: RestrictedRootDatum) -> list[Signature]:
    """All 2^s multiplicative signatures, s = rank of the root lattice."""
    if not datum.roots:
        return [Signature(lattice_basis=(), denominator=1, signs=())]
    den = 1
    for r in datum.roots:
        for x in r:
            d = int(x.denominator)
            den = den * d // _gcd(den, d)
    scaled = [[int(x * den) for x in r] for r in datum.roots]
    basis = hermite_normal_form(scaled)
    k = len(basis)
    out = []
    for mask in range(1 << k):
        signs = tuple(-1 if (mask >> i) & 1 else 1 for i in range(k))
        eps = Signature(lattice_basis=tuple(tuple(b) for b in basis),
                        denominator=den, signs=signs)
        _certify_signature(eps, datum)
        out.append(eps)
    return out


def _certify_signature(eps: Signature, datum: RestrictedRootDatum) -> None:
    roots = set(datum.roots)
    for a in datum.roots:
        neg = tuple(-x for x in a)
        if eps(a) != eps(neg):
            raise NotAutomorphism("signature breaks eps(-a) = eps(a)")
        for b in datum.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in roots and eps(s) != eps(a) * eps(b):
                raise NotAutomorphism("signature is not multiplicative")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


# ---------------------------------------------------------------------------
# twisted involutions
# ---------------------------------------------------------------------------

def signature_twist(tau: LinearAlgebraMap, eps: Signature,
                    datum: RestrictedRootDatum,
                    certify_brackets: bool | None = None) -> LinearAlgebraMap:
    """The involution acting as eps(root) * tau on each root space.

    Requires tau = -id on the torus.  The result is certified to square
    to the identity; bracket preservation is checked pairwise when the
    dimension is small (or when certify_brackets is forced), and follows
    from the lattice multiplicativity of eps on the certified grading
    otherwise.
    """
    g = datum.algebra
    for H in datum.torus.basis:
        if tau.apply_coords(H) != tuple(-x for x in H):
            raise NotInvolution("tau is not -id on the torus")
    for cov, space in datum.blocks():
        neg = tuple(-x for x in cov)
        target = datum.zero_space if not any(neg) else datum.root_spaces[neg]
        for v in space.basis:
            if not target.contains(tau.apply_coords(v)):
                raise NotAutomorphism(
                    "tau does not permute the root spaces compatibly")
    if eps.is_trivial:
        return tau
    V, Vinv = datum.new_basis_matrices()
    labels = datum.block_labels()
    tauV = mat_mul(tau.action, V)
    scaled = [[tauV[i][j] * (Q1 if eps(labels[j]) > 0 else -Q1)
               for j in range(len(labels))] for i in range(len(labels))]
    action = mat_mul(scaled, Vinv)
    name = tau.name + "_" + eps.describe(datum) if tau.name else "tau_eps"
    twist = LinearAlgebraMap(g, action, name=name)
    twist.certify_involution()
    if certify_brackets is None:
        certify_brackets = g.dim <= 24
    if certify_brackets and not twist.preserves_brackets():
        raise NotAutomorphism("twisted map does not preserve brackets; the "
                              "signature is inconsistent with the grading")
    return twist


@dataclass
class TwistReport:
    eps_description: str
    involutive: bool
    commutes_with_sigma: bool
    commutes_with_theta: bool
    rank_preserved: bool
    brackets_certified_directly: bool
    passed: bool = False


def verify_twist(sigma: LinearAlgebraMap, tau: LinearAlgebraMap,
                 theta: LinearAlgebraMap, datum: RestrictedRootDatum,
                 eps: Signature) -> TwistReport:
    """Exact check that (sigma, tau_eps) keeps commutation and rank.

    The torus must lie in g^(-theta, sigma, -tau); then the twisted pair
    satisfies the same commutation and rank conditions as (sigma, tau):
    sigma fixes the torus pointwise so it preserves every root space,
    and the twisted rank equality follows once the torus stays maximal
    abelian in g^(-theta, -tau_eps), which is checked directly.
    """
    g = datum.algebra
    for H in datum.torus.basis:
        if sigma.apply_coords(H) != tuple(H):
            raise NotInvolution("sigma is not id on the torus")
        if theta.apply_coords(H) != tuple(-x for x in H):
            raise NotInvolution("theta is not -id on the torus")
    direct = g.dim <= 24
    twist = signature_twist(tau, eps, datum)
    inv = twist.is_involution()
    if direct:
        comm_sigma = sigma.commutes_with(twist)
        comm_theta = theta.commutes_with(twist)
    else:
        # grading argument: sigma and theta act blockwise on root spaces
        # (identity resp. negation on the torus), tau commutes with both,
        # and eps is lattice-multiplicative, so commutation transfers.
        comm_sigma = (_stabilizes_blocks(sigma, datum, flip=False)
                      and sigma.commutes_with(tau))
        comm_theta = (_stabilizes_blocks(theta, datum, flip=True)
                      and theta.commutes_with(tau))
    # torus stays inside the twisted (-theta, -tau_eps) space by eps(0)=1;
    # rank is preserved iff it stays maximal abelian there
    minus = multi_fixed(g, [(theta, -1), (twist, -1)])
    cz = intersect(datum.zero_space, minus)
    rank_ok = all(minus.contains(H) for H in datum.torus.basis)
    rank_ok = rank_ok and cz == datum.torus
    rep = TwistReport(
        eps_description=eps.describe(datum),
        involutive=inv,
        commutes_with_sigma=comm_sigma,
        commutes_with_theta=comm_theta,
        rank_preserved=rank_ok,
        brackets_certified_directly=direct,
    )
    rep.passed = inv and comm_sigma and comm_theta and rank_ok
    return rep


def _stabilizes_blocks(mp: LinearAlgebraMap, datum: RestrictedRootDatum,
                       flip: bool) -> bool:
    for cov, space in datum.blocks():
        key = tuple(-x for x in cov) if flip else cov
        target = (datum.zero_space if not any(key)
                  else datum.root_spaces.get(key))
        if target is None:
            return False
        for v in space.basis:
            if not target.contains(mp.apply_coords(v)):
                return False
    return True


# ---------------------------------------------------------------------------
# positive systems and the nilpotent part
# ---------------------------------------------------------------------------

def generic_functional(datum: RestrictedRootDatum) -> tuple:
    """Deterministic functional non-vanishing on every root."""
    r = datum.rank
    for k in range(1, 1000):
        f = tuple(rat(k) ** (r - 1 - i) for i in range(r))
        if all(_pair(f, root) for root in datum.roots):
            return f
    raise DegenerateFunctional("could not find a generic functional")


def _pair(f, root) -> Rational:
    s = Q0
    for a, b in zip(f, root):
        if a and b:
            s += a * b
    return s


def positive_system(datum: RestrictedRootDatum, functional) -> list:
    """Roots with positive pairing; errors if the functional degenerates."""
    pos = []
    for root in datum.roots:
        v = _pair(functional, root)
        if not v:
            raise DegenerateFunctional(
                f"functional vanishes on the root {root}")
        if v > 0:
            pos.append(root)
    return pos


def nilpotent_part(datum: RestrictedRootDatum, pos_roots) -> RealSpan:
    """Sum of the positive root spaces, certified nilpotent."""
    g = datum.algebra
    vecs = []
    for root in pos_roots:
        vecs.extend(datum.root_spaces[root].basis)
    n_span = span_of(vecs, g.dim) if vecs else RealSpan(g.dim, [], [])
    # lower central series must reach zero
    current = n_span
    for _ in range(g.dim + 1):
        if current.dim == 0:
            return n_span
        brackets = []
        for u in n_span.basis:
            for v in current.basis:
                w = g.bracket_coords(u, v)
                if any(w):
                    brackets.append(w)
        nxt = span_of(brackets, g.dim) if brackets else RealSpan(g.dim, [], [])
        if nxt.dim >= current.dim and nxt == current:
            raise NotAutomorphism("positive part is not nilpotent")
        current = nxt
    raise NotAutomorphism("lower central series did not terminate")


def stabilizes_nilpotent(sigma: LinearAlgebraMap,
                         datum: RestrictedRootDatum, pos_roots) -> bool:
    """sigma(g(a;r)) = g(a;r) for each positive root (sigma fixes a)."""
    for root in pos_roots:
        space = datum.root_spaces[root]
        for v in space.basis:
            if not space.contains(sigma.apply_coords(v)):
                return False
    return True
