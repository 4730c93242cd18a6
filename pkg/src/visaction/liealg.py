"""Real Lie algebras as bracket-closed exact matrix spans.

A RealFormAlgebra is a list of exact matrices inside gl(m, C) whose real
span is closed under the commutator; closure is certified at construction
by expressing every basis bracket in basis coordinates.  All subspace
computations downstream (fixed spaces of involutions, centralizers,
maximal abelian subspaces, Killing signatures) happen in those rational
basis coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import (
    NotCartan,
    NotClosedUnderBracket,
    NotInvolution,
    NonRationalSpectrum,
)
from .exact import (
    ExactMatrix,
    Q0,
    Q1,
    RealSpan,
    Rational,
    _rref_with_transform,
    flatten,
    has_rational_spectrum,
    intersect,
    linear_relations,
    mat_eq,
    mat_is_identity,
    mat_mul,
    mat_vec,
    nullspace,
    span_of,
    symmetric_signature,
)


class RealFormAlgebra:
    """Bracket-closed real span of exact matrices in gl(m, C)."""

    def __init__(self, basis: Sequence[ExactMatrix], label: str,
                 certify: bool = True):
        if not basis:
            raise ValueError("empty basis")
        m = basis[0].rows
        if any(b.rows != m or b.cols != m for b in basis):
            raise ValueError("basis matrices must share one square shape")
        self.m = m
        self.basis = tuple(basis)
        self.label = label
        flat = [flatten(b) for b in basis]
        rref_rows, pivots, transform = _rref_with_transform(
            [list(f) for f in flat])
        if len(rref_rows) != len(basis):
            raise ValueError(f"{label}: basis is linearly dependent")
        self.span = RealSpan(2 * m * m, rref_rows, pivots)
        self._transform = transform
        self._structure: dict | None = None
        self._ad_table: list | None = None
        self._killing: list | None = None
        if certify:
            self.structure()

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- coordinates ---------------------------------------------------
    def coordinates(self, M: ExactMatrix):
        """Basis coordinates of M, or None when M is outside the span."""
        return self.coordinates_flat(flatten(M))

    def coordinates_flat(self, vec):
        mu = self.span.coefficients(vec)
        if mu is None:
            return None
        dim = self.dim
        out = [Q0] * dim
        for k, c in enumerate(mu):
            if c:
                tk = self._transform[k]
                for i in range(dim):
                    if tk[i]:
                        out[i] += c * tk[i]
        return tuple(out)

    def element(self, coords) -> ExactMatrix:
        """The matrix sum_i coords[i] * basis[i]."""
        acc = None
        for c, b in zip(coords, self.basis):
            if c:
                term = b.scale(c)
                acc = term if acc is None else acc + term
        return acc if acc is not None else ExactMatrix.zeros(self.m)

    def contains_matrix(self, M: ExactMatrix) -> bool:
        return self.span.contains(flatten(M))

    # -- structure -----------------------------------------------------
    def structure(self) -> dict:
        """Sparse structure constants {(i, j): {k: c}} for i < j.

        Computing these is the bracket-closure certificate: a bracket
        outside the span raises NotClosedUnderBracket with the offending
        pair.
        """
        if self._structure is None:
            dim = self.dim
            c: dict = {}
            for i in range(dim):
                for j in range(i + 1, dim):
                    br = self.basis[i].bracket(self.basis[j])
                    if br.is_zero():
                        continue
                    coords = self.coordinates(br)
                    if coords is None:
                        raise NotClosedUnderBracket(
                            f"{self.label}: [basis[{i}], basis[{j}]] is "
                            "outside the span", witness=(i, j))
                    entry = {k: v for k, v in enumerate(coords) if v}
                    if entry:
                        c[(i, j)] = entry
            self._structure = c
        return self._structure

    def _ads(self) -> list:
        """ad table: ads[i] = {j: {k: c(i,j,k)}} with ad_i(e_j)_k = c."""
        if self._ad_table is None:
            dim = self.dim
            ads: list = [dict() for _ in range(dim)]
            for (i, j), entry in self.structure().items():
                ads[i][j] = entry
                ads[j][i] = {k: -v for k, v in entry.items()}
            self._ad_table = ads
        return self._ad_table

    def bracket_coords(self, u, v):
        """Coordinates of [U, V] for U, V given in basis coordinates."""
        out: dict = {}
        structure = self.structure()
        ui = [(i, c) for i, c in enumerate(u) if c]
        vj = [(j, c) for j, c in enumerate(v) if c]
        for i, a in ui:
            for j, b in vj:
                if i == j:
                    continue
                key, sgn = ((i, j), 1) if i < j else ((j, i), -1)
                entry = structure.get(key)
                if not entry:
                    continue
                f = a * b if sgn == 1 else -(a * b)
                for k, val in entry.items():
                    out[k] = out.get(k, Q0) + f * val
        dim = self.dim
        return tuple(out.get(k, Q0) for k in range(dim))

    def ad_rows(self, u) -> list:
        """Matrix of ad(U) on basis coordinates, as rational rows."""
        dim = self.dim
        rows = [[Q0] * dim for _ in range(dim)]
        ads = self._ads()
        for i, a in enumerate(u):
            if not a:
                continue
            for j, entry in ads[i].items():
                for k, val in entry.items():
                    rows[k][j] += a * val
        return rows

    def killing_gram(self) -> list:
        """Gram matrix of the Killing form on the basis."""
        if self._killing is None:
            dim = self.dim
            ads = self._ads()
            g = [[Q0] * dim for _ in range(dim)]
            for i in range(dim):
                for j in range(i, dim):
                    s = Q0
                    for k, wl in ads[j].items():
                        adi = ads[i]
                        for l, v in wl.items():
                            row = adi.get(l)
                            if row:
                                w = row.get(k)
                                if w:
                                    s += v * w
                    g[i][j] = s
                    g[j][i] = s
            self._killing = g
        return self._killing

    def killing_form(self, X, Y) -> Rational:
        """Killing form of two elements given as matrices or coordinates."""
        u = self.coordinates(X) if isinstance(X, ExactMatrix) else X
        v = self.coordinates(Y) if isinstance(Y, ExactMatrix) else Y
        if u is None or v is None:
            raise ValueError("element outside the algebra")
        g = self.killing_gram()
        s = Q0
        for i, a in enumerate(u):
            if a:
                gi = g[i]
                for j, b in enumerate(v):
                    if b and gi[j]:
                        s += a * gi[j] * b
        return s

    def full_span(self) -> RealSpan:
        """The whole algebra as a coordinate-space span."""
        return span_of([tuple(Q1 if j == i else Q0 for j in range(self.dim))
                        for i in range(self.dim)], self.dim)

    def __repr__(self):
        return f"RealFormAlgebra({self.label}, dim={self.dim}, m={self.m})"


def make_algebra(basis: Sequence[ExactMatrix], label: str) -> RealFormAlgebra:
    """Build an algebra, certifying independence and bracket closure."""
    return RealFormAlgebra(basis, label, certify=True)


class LinearAlgebraMap:
    """Exact linear self-map of an algebra, stored on basis coordinates."""

    def __init__(self, algebra: RealFormAlgebra, action_rows, name: str = "",
                 recipe=None):
        self.algebra = algebra
        self.action = tuple(tuple(r) for r in action_rows)
        self.name = name
        self.recipe = recipe

    @classmethod
    def from_matrix_function(cls, algebra: RealFormAlgebra,
                             fn: Callable[[ExactMatrix], ExactMatrix],
                             name: str = "", recipe=None) -> "LinearAlgebraMap":
        cols = []
        for j, b in enumerate(algebra.basis):
            img = fn(b)
            coords = algebra.coordinates(img)
            if coords is None:
                from .errors import NotAutomorphism
                raise NotAutomorphism(
                    f"{name or 'map'} does not stabilize {algebra.label} "
                    f"(image of basis[{j}] leaves the span)")
            cols.append(coords)
        dim = algebra.dim
        rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
        return cls(algebra, rows, name=name, recipe=recipe)

    @classmethod
    def identity(cls, algebra: RealFormAlgebra) -> "LinearAlgebraMap":
        dim = algebra.dim
        rows = [[Q1 if i == j else Q0 for j in range(dim)] for i in range(dim)]
        return cls(algebra, rows, name="id")

    def apply_coords(self, u):
        return tuple(mat_vec(self.action, u))

    def apply_matrix(self, M: ExactMatrix) -> ExactMatrix:
        coords = self.algebra.coordinates(M)
        if coords is None:
            raise ValueError("matrix outside the algebra")
        return self.algebra.element(self.apply_coords(coords))

    def compose(self, other: "LinearAlgebraMap") -> "LinearAlgebraMap":
        if other.algebra is not self.algebra:
            raise ValueError("maps live on different algebras")
        rows = mat_mul(self.action, other.action)
        name = f"{self.name}*{other.name}" if self.name and other.name else ""
        rec = None
        if self.recipe is not None and other.recipe is not None:
            rec = self.recipe.compose(other.recipe)
        return LinearAlgebraMap(self.algebra, rows, name=name, recipe=rec)

    def commutes_with(self, other: "LinearAlgebraMap") -> bool:
        return mat_eq(mat_mul(self.action, other.action),
                      mat_mul(other.action, self.action))

    def is_involution(self) -> bool:
        return mat_is_identity(mat_mul(self.action, self.action))

    def certify_involution(self):
        if not self.is_involution():
            raise NotInvolution(f"{self.name or 'map'} does not square to id "
                                f"on {self.algebra.label}")

    def preserves_brackets(self) -> bool:
        """Direct bracket check on all basis pairs (quadratic in dim)."""
        g = self.algebra
        dim = g.dim
        cols = [self.apply_coords(tuple(Q1 if t == j else Q0
                                        for t in range(dim)))
                for j in range(dim)]
        for (i, j), entry in g.structure().items():
            lhs = self.apply_coords(
                tuple(entry.get(k, Q0) for k in range(dim)))
            rhs = g.bracket_coords(cols[i], cols[j])
            if lhs != rhs:
                return False
        # pairs with zero bracket must stay zero
        for i in range(dim):
            for j in range(i + 1, dim):
                if (i, j) not in g.structure():
                    if any(g.bracket_coords(cols[i], cols[j])):
                        return False
        return True

    def __eq__(self, other):
        return (isinstance(other, LinearAlgebraMap)
                and self.algebra is other.algebra
                and self.action == other.action)

    def __hash__(self):
        return hash(self.action)

    def __repr__(self):
        return f"LinearAlgebraMap({self.name or '?'} on {self.algebra.label})"


# ---------------------------------------------------------------------------
# Fixed spaces, centralizers, maximal abelian subspaces
# ---------------------------------------------------------------------------

def fixed_subspace(g: RealFormAlgebra, iota: LinearAlgebraMap,
                   sign: int) -> RealSpan:
    """Exact eigenspace {v : iota(v) = sign * v} in basis coordinates."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    iota.certify_involution()
    dim = g.dim
    shifted = [[iota.action[i][j] - (Q1 if i == j else Q0) * sign
                for j in range(dim)] for i in range(dim)]
    return nullspace(shifted)


def multi_fixed(g: RealFormAlgebra, constraints) -> RealSpan:
    """Intersection of signed eigenspaces of several involutions."""
    space = g.full_span()
    for iota, sign in constraints:
        space = intersect(space, fixed_subspace(g, iota, sign))
    return space


def centralizer_in(g: RealFormAlgebra, V: RealSpan, elems) -> RealSpan:
    """{v in V : [v, t] = 0 for all t in elems}; elems are coordinate rows."""
    if V.dim == 0 or not elems:
        return V
    rows = []
    for vb in V.basis:
        row: list = []
        for t in elems:
            row.extend(g.bracket_coords(vb, t))
        rows.append(tuple(row))
    # coefficients a with sum_k a_k rows[k] = 0 are exactly the elements
    # sum_k a_k V_k commuting with every t
    rel = linear_relations(rows)
    combos = []
    for coeff in rel.basis:
        vec = [Q0] * V.ambient_dim
        for k, c in enumerate(coeff):
            if c:
                for idx in range(V.ambient_dim):
                    if V.basis[k][idx]:
                        vec[idx] += c * V.basis[k][idx]
        combos.append(tuple(vec))
    return span_of(combos, V.ambient_dim)


def maximal_abelian(g: RealFormAlgebra, V: RealSpan,
                    rational_torus: bool = False,
                    order: Sequence[int] | None = None) -> RealSpan:
    """Greedy maximal abelian subspace of V (coordinates of g).

    Seeds with the first usable basis vector of V and extends by the first
    centralizer element outside the current span, in stored-basis order,
    so the result is deterministic.  With rational_torus=True every chosen
    generator must have ad-diagonalizable rational spectrum (candidates
    failing the test are skipped; pairwise sums are tried as a fallback).
    """
    if V.dim == 0:
        return V
    idxs = list(order) if order is not None else list(range(V.dim))
    seed = None
    for k in idxs:
        cand = V.basis[k]
        if not rational_torus or _rational_ad(g, cand):
            seed = cand
            break
    if seed is None:
        raise NonRationalSpectrum(
            "no basis vector of the subspace has rational ad-spectrum; "
            "replace the subspace by a standard torus")
    current = [seed]
    span = span_of(current, V.ambient_dim)
    while True:
        cz = centralizer_in(g, V, current)
        ext = _pick_extension(g, cz, span, rational_torus)
        if ext is None:
            if cz.dim != span.dim:
                # candidates exist but all failed the rational filter
                raise NonRationalSpectrum(
                    "cannot extend torus by an element with rational "
                    "ad-spectrum; replace the subspace by a standard torus")
            return span
        current.append(ext)
        span = span_of(current, V.ambient_dim)


def _pick_extension(g, cz: RealSpan, span: RealSpan, rational_torus: bool):
    outside = [v for v in cz.basis if not span.contains(v)]
    if not outside:
        return None
    if not rational_torus:
        return outside[0]
    for v in outside:
        if _rational_ad(g, v):
            return v
    for a in range(len(outside)):
        for b in range(a + 1, len(outside)):
            v = tuple(x + y for x, y in zip(outside[a], outside[b]))
            if span.contains(v):
                continue
            if _rational_ad(g, v):
                return v
    return None


def _rational_ad(g: RealFormAlgebra, v) -> bool:
    return has_rational_spectrum(g.ad_rows(v))


def center(g: RealFormAlgebra) -> RealSpan:
    """{v : [v, basis_j] = 0 for all j} in basis coordinates."""
    return centralizer_in(g, g.full_span(),
                          [tuple(Q1 if t == i else Q0 for t in range(g.dim))
                           for i in range(g.dim)])


def killing(g: RealFormAlgebra, X, Y) -> Rational:
    return g.killing_form(X, Y)


# ---------------------------------------------------------------------------
# Cartan certification and ranks
# ---------------------------------------------------------------------------

def restricted_gram(g: RealFormAlgebra, span: RealSpan) -> list:
    """Killing Gram matrix of g restricted to a coordinate subspace."""
    gram = g.killing_gram()
    rows = []
    for u in span.basis:
        gu = mat_vec(gram, u)
        rows.append([sum((a * b for a, b in zip(gu, v) if a and b), Q0)
                     for v in span.basis])
    return rows


def certify_cartan(g: RealFormAlgebra, theta: LinearAlgebraMap) -> None:
    """Check Killing definiteness: negative on g^theta, positive on g^-theta."""
    k = fixed_subspace(g, theta, +1)
    p = fixed_subspace(g, theta, -1)
    if k.dim + p.dim != g.dim:
        raise NotInvolution(
            f"{theta.name}: eigenspace dims {k.dim}+{p.dim} != {g.dim}")
    if k.dim:
        pos, neg, zero = symmetric_signature(restricted_gram(g, k))
        if pos or zero:
            raise NotCartan(
                f"{g.label}: Killing form is not negative definite on the "
                f"+1 eigenspace (signature {(pos, neg, zero)})")
    if p.dim:
        pos, neg, zero = symmetric_signature(restricted_gram(g, p))
        if neg or zero:
            raise NotCartan(
                f"{g.label}: Killing form is not positive definite on the "
                f"-1 eigenspace (signature {(pos, neg, zero)})")


def real_rank(g: RealFormAlgebra, theta: LinearAlgebraMap) -> int:
    """dim of a maximal abelian subspace of g^{-theta}."""
    certify_cartan(g, theta)
    return maximal_abelian(g, fixed_subspace(g, theta, -1)).dim


def real_rank_of_pair(g: RealFormAlgebra, tau: LinearAlgebraMap,
                      theta: LinearAlgebraMap) -> int:
    """dim of a maximal abelian subspace of g^{-theta, -tau}."""
    if not tau.commutes_with(theta):
        raise NotInvolution("tau and theta do not commute")
    certify_cartan(g, theta)
    space = multi_fixed(g, [(theta, -1), (tau, -1)])
    return maximal_abelian(g, space).dim


# ---------------------------------------------------------------------------
# Fingerprints of fixed subalgebras
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-class invariants: (dim, center dim, rank, Killing sig)."""

    dim: int
    center_dim: int
    rank: int
    signature: tuple[int, int, int]

    def __add__(self, other: "Fingerprint") -> "Fingerprint":
        return Fingerprint(
            self.dim + other.dim,
            self.center_dim + other.center_dim,
            self.rank + other.rank,
            tuple(a + b for a, b in zip(self.signature, other.signature)),
        )

    def __repr__(self):
        return (f"Fingerprint(dim={self.dim}, z={self.center_dim}, "
                f"rank={self.rank}, sig={self.signature})")


def subalgebra_structure(g: RealFormAlgebra, span: RealSpan):
    """ad tables of the subalgebra spanned by span (must be closed)."""
    n = span.dim
    ads: list = [dict() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            br = g.bracket_coords(span.basis[i], span.basis[j])
            if not any(br):
                continue
            coeff = span.coefficients(br)
            if coeff is None:
                raise NotClosedUnderBracket(
                    "subspace is not a subalgebra", witness=(i, j))
            entry = {k: v for k, v in enumerate(coeff) if v}
            if entry:
                ads[i][j] = entry
                ads[j][i] = {k: -v for k, v in entry.items()}
    return ads


def _sub_killing_gram(ads) -> list:
    n = len(ads)
    g = [[Q0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = Q0
            for k, wl in ads[j].items():
                for l, v in wl.items():
                    row = ads[i].get(l)
                    if row:
                        w = row.get(k)
                        if w:
                            s += v * w
            g[i][j] = s
            g[j][i] = s
    return g


def _sub_center_dim(ads) -> int:
    n = len(ads)
    rows = []
    for i in range(n):
        row = [Q0] * (n * n)
        for j, entry in ads[i].items():
            for k, v in entry.items():
                row[j * n + k] = v
        rows.append(tuple(row))
    return linear_relations(rows).dim


def fingerprint(g: RealFormAlgebra, span: RealSpan,
                theta: LinearAlgebraMap) -> Fingerprint:
    """Invariants of the subalgebra spanned by span, theta-stable assumed."""
    if span.dim == 0:
        return Fingerprint(0, 0, 0, (0, 0, 0))
    ads = subalgebra_structure(g, span)
    center_dim = _sub_center_dim(ads)
    sig = symmetric_signature(_sub_killing_gram(ads))
    minus = intersect(span, fixed_subspace(g, theta, -1))
    rank = maximal_abelian(g, minus).dim if minus.dim else 0
    return Fingerprint(span.dim, center_dim, rank, sig)
