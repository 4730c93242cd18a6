"""Exact linear algebra over the rationals and Gaussian rationals.

Everything here is arbitrary-precision rational arithmetic: no floating
point, no rounding.  Complex matrices flatten to real coordinate vectors
(real parts first, then imaginary parts) so that real spans of complex
matrices reduce to row echelon computations over Q.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NonRationalSpectrum, NotDiagonalizable

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _mpq

Rational = _mpq


def rat(a, b=None) -> Rational:
    """Build a rational from an int, string, Fraction or a pair a/b."""
    if b is None:
        return _mpq(a)
    return _mpq(a, b)


Q0 = rat(0)
Q1 = rat(1)


class GaussianRational:
    """Exact complex scalar re + im*sqrt(-1) with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(Q0) else rat(re)
        self.im = im if type(im) is type(Q0) else rat(im)

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, type(Q0))):
        return GaussianRational(x)
    if isinstance(x, complex):
        raise TypeError("floating complex numbers are not exact")
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


GR0 = GaussianRational(0)
GR1 = GaussianRational(1)
GRi = GaussianRational(0, 1)


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(rat(re), rat(im))


class ExactMatrix:
    """Dense matrix with GaussianRational entries, row-major, immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[GaussianRational]):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    # -- constructors ------------------------------------------------
    @classmethod
    def from_rows(cls, data) -> "ExactMatrix":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0])
        flat = []
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(_coerce(x) for x in r)
        return cls(rows, cols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [GR0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        e = [GR0] * (n * n)
        for i in range(n):
            e[i * n + i] = GR1
        return cls(n, n, e)

    @classmethod
    def diag(cls, values) -> "ExactMatrix":
        values = [_coerce(v) for v in values]
        n = len(values)
        e = [GR0] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls(n, n, e)

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=GR1) -> "ExactMatrix":
        """n x n matrix with a single entry at (i, j), zero-indexed."""
        e = [GR0] * (n * n)
        e[i * n + j] = _coerce(value)
        return cls(n, n, e)

    @classmethod
    def from_blocks(cls, blocks) -> "ExactMatrix":
        """Assemble from a 2D grid of ExactMatrix blocks."""
        row_counts = [grid_row[0].rows for grid_row in blocks]
        col_counts = [b.cols for b in blocks[0]]
        rows = sum(row_counts)
        cols = sum(col_counts)
        e = [GR0] * (rows * cols)
        r0 = 0
        for gi, grid_row in enumerate(blocks):
            c0 = 0
            for gj, blk in enumerate(grid_row):
                if blk.rows != row_counts[gi] or blk.cols != col_counts[gj]:
                    raise ValueError("inconsistent block shapes")
                for i in range(blk.rows):
                    base = (r0 + i) * cols + c0
                    brow = blk.entries[i * blk.cols:(i + 1) * blk.cols]
                    e[base:base + blk.cols] = brow
                c0 += blk.cols
            r0 += row_counts[gi]
        return cls(rows, cols, e)

    # -- access ------------------------------------------------------
    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    # -- arithmetic --------------------------------------------------
    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._shape_check(other)
        return ExactMatrix(
            self.rows, self.cols,
            [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "ExactMatrix":
        s = _coerce(s)
        return ExactMatrix(self.rows, self.cols, [s * a for a in self.entries])

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        n, m, k = self.rows, other.cols, self.cols
        out = [GR0] * (n * m)
        oe = other.entries
        for i in range(n):
            srow = self.entries[i * k:(i + 1) * k]
            base = i * m
            for t in range(k):
                a = srow[t]
                if not a:
                    continue
                orow = oe[t * m:(t + 1) * m]
                for j in range(m):
                    b = orow[j]
                    if b:
                        out[base + j] = out[base + j] + a * b
        return ExactMatrix(n, m, out)

    __matmul__ = __mul__

    def bracket(self, other: "ExactMatrix") -> "ExactMatrix":
        return self * other - other * self

    def transpose(self) -> "ExactMatrix":
        e = [GR0] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                e[j * self.rows + i] = self.entries[i * self.cols + j]
        return ExactMatrix(self.cols, self.rows, e)

    def conj(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols,
                           [a.conjugate() for a in self.entries])

    def conj_transpose(self) -> "ExactMatrix":
        return self.transpose().conj()

    def trace(self) -> GaussianRational:
        t = GR0
        for i in range(min(self.rows, self.cols)):
            t = t + self.entries[i * self.cols + i]
        return t

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [GR1 if j == i else GR0 for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = GR1 / aug[col][col]
            aug[col] = [inv * x for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix(n, n, [x for row in aug for x in row[n:]])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(
            " ".join(str(self.entries[i * self.cols + j]) for j in range(self.cols))
            for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    def _shape_check(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def flatten(M: ExactMatrix) -> tuple:
    """Flatten to a real vector of length 2*rows*cols: re parts, then im."""
    re = [a.re for a in M.entries]
    im = [a.im for a in M.entries]
    return tuple(re + im)


def unflatten(vec: Sequence, rows: int, cols: int) -> ExactMatrix:
    n = rows * cols
    if len(vec) != 2 * n:
        raise ValueError("vector length does not match 2*rows*cols")
    return ExactMatrix(rows, cols,
                       [GaussianRational(vec[k], vec[n + k]) for k in range(n)])


# ---------------------------------------------------------------------------
# Row echelon machinery over Q
# ---------------------------------------------------------------------------

def _rref(rows: list) -> tuple[list, list]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot cols).

    Rows are lists of Rational.  Output rows have leading coefficient 1,
    strictly increasing pivots, and zeros above and below each pivot, which
    makes the result canonical for the row space.
    """
    if not rows:
        return [], []
    ncols = len(rows[0])
    work = [list(r) for r in rows]
    pivots: list[int] = []
    prow = 0
    for col in range(ncols):
        sel = None
        for r in range(prow, len(work)):
            if work[r][col]:
                sel = r
                break
        if sel is None:
            continue
        work[prow], work[sel] = work[sel], work[prow]
        lead = work[prow][col]
        if lead != 1:
            inv = 1 / lead
            work[prow] = [x * inv if x else x for x in work[prow]]
        for r in range(len(work)):
            if r != prow:
                f = work[r][col]
                if f:
                    pr = work[prow]
                    wr = work[r]
                    work[r] = [wr[j] - f * pr[j] if pr[j] else wr[j]
                               for j in range(ncols)]
        pivots.append(col)
        prow += 1
        if prow == len(work):
            break
    return [work[i] for i in range(prow)], pivots


def _rref_with_transform(rows: list) -> tuple[list, list, list]:
    """RREF plus a transform E with E @ original = rref (nonzero part)."""
    if not rows:
        return [], [], []
    ncols = len(rows[0])
    k = len(rows)
    aug = [list(r) + [Q1 if j == i else Q0 for j in range(k)]
           for i, r in enumerate(rows)]
    red, pivots = _rref_table(aug, ncols)
    out_rows = [r[:ncols] for r in red[:len(pivots)]]
    transform = [r[ncols:] for r in red[:len(pivots)]]
    return out_rows, pivots, transform


def _rref_table(work: list, stop_col: int) -> tuple[list, list]:
    """RREF where pivots are only searched among the first stop_col columns.

    Returns all rows: the first len(pivots) rows are the canonical echelon
    rows, the remaining rows have an identically zero left block (their
    trailing columns carry dependency data for the callers that need it).
    """
    ncols = len(work[0])
    pivots: list[int] = []
    prow = 0
    for col in range(stop_col):
        sel = None
        for r in range(prow, len(work)):
            if work[r][col]:
                sel = r
                break
        if sel is None:
            continue
        work[prow], work[sel] = work[sel], work[prow]
        lead = work[prow][col]
        if lead != 1:
            inv = 1 / lead
            work[prow] = [x * inv if x else x for x in work[prow]]
        for r in range(len(work)):
            if r != prow:
                f = work[r][col]
                if f:
                    pr = work[prow]
                    wr = work[r]
                    work[r] = [wr[j] - f * pr[j] if pr[j] else wr[j]
                               for j in range(ncols)]
        pivots.append(col)
        prow += 1
        if prow == len(work):
            break
    return work, pivots


class RealSpan:
    """A subspace of Q^n stored as a canonical reduced echelon basis.

    Two equal spans have identical stored bases, so equality of subspaces
    is structural equality.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis, pivots):
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Sequence) -> tuple:
        """Residual of vec after subtracting its projection along the basis."""
        v = list(vec)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return tuple(v)

    def coefficients(self, vec: Sequence):
        """Coefficients of vec in the echelon basis, or None if not a member."""
        v = list(vec)
        coeffs = []
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        if any(v):
            return None
        return tuple(coeffs)

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    __contains__ = contains

    def is_subspace_of(self, other: "RealSpan") -> bool:
        return all(other.contains(r) for r in self.basis)

    def __eq__(self, other):
        return (isinstance(other, RealSpan)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"RealSpan(dim={self.dim}, ambient={self.ambient_dim})"


def span_of(vectors: Iterable[Sequence], ambient_dim: int | None = None) -> RealSpan:
    """Canonical span of real coordinate vectors (all of one length)."""
    vecs = [list(v) for v in vectors]
    if not vecs:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for an empty vector list")
        return RealSpan(ambient_dim, [], [])
    n = len(vecs[0])
    if any(len(v) != n for v in vecs):
        raise ValueError("vectors must all have the same length")
    if ambient_dim is not None and ambient_dim != n:
        raise ValueError("ambient_dim does not match vector length")
    rows, pivots = _rref(vecs)
    return RealSpan(n, rows, pivots)


def span_sum(a: RealSpan, b: RealSpan) -> RealSpan:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    return span_of(list(a.basis) + list(b.basis), a.ambient_dim)


def intersect(a: RealSpan, b: RealSpan) -> RealSpan:
    """Exact intersection via the Zassenhaus double-block reduction."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimensions differ")
    n = a.ambient_dim
    table = [list(r) + list(r) for r in a.basis]
    table += [list(r) + [Q0] * n for r in b.basis]
    if not table:
        return RealSpan(n, [], [])
    red, _ = _rref_table(table, n)
    inter_rows = [r[n:] for r in red if not any(r[:n])]
    rows, pivots = _rref(inter_rows)
    return RealSpan(n, rows, pivots)


def membership(vec: Sequence, span: RealSpan) -> bool:
    if len(vec) != span.ambient_dim:
        raise ValueError("vector length does not match ambient dimension")
    return span.contains(vec)


def linear_relations(vectors: Sequence[Sequence]) -> RealSpan:
    """Span of {c in Q^k : sum_i c_i v_i = 0} for vectors v_1..v_k."""
    k = len(vectors)
    if k == 0:
        return RealSpan(0, [], [])
    n = len(vectors[0])
    table = [list(v) + [Q1 if j == i else Q0 for j in range(k)]
             for i, v in enumerate(vectors)]
    red, _ = _rref_table(table, n)
    rel_rows = [r[n:] for r in red if not any(r[:n])]
    rows, pivots = _rref(rel_rows)
    return RealSpan(k, rows, pivots)


# ---------------------------------------------------------------------------
# Rational matrices as plain row tuples
# ---------------------------------------------------------------------------

def mat_identity(n: int) -> list:
    return [[Q1 if i == j else Q0 for j in range(n)] for i in range(n)]


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for r in rows:
        s = Q0
        for a, b in zip(r, v):
            if a and b:
                s += a * b
        out.append(s)
    return out


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = [[Q0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_is_identity(a) -> bool:
    return all(x == (Q1 if i == j else Q0)
               for i, r in enumerate(a) for j, x in enumerate(r))


def mat_inverse(rows: Sequence[Sequence]) -> list:
    n = len(rows)
    aug = [list(r) + [Q1 if j == i else Q0 for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = _rref_table(aug, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [r[n:] for r in red[:n]]


def nullspace(rows: Sequence[Sequence]) -> RealSpan:
    """Kernel {x : M x = 0} of a rational matrix given by rows."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    m = len(rows[0])
    cols = [[rows[i][j] for i in range(n)] for j in range(m)]
    return linear_relations(cols)


# ---------------------------------------------------------------------------
# Polynomials over Q (coefficient lists, lowest degree first)
# ---------------------------------------------------------------------------

def poly_normalize(p: list) -> list:
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def poly_mul(p: Sequence, q: Sequence) -> list:
    out = [Q0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return poly_normalize(out)


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    p = list(p)
    q = poly_normalize(list(q))
    if len(q) == 1 and not q[0]:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    lead = q[-1]
    quot = [Q0] * max(1, len(p) - dq)
    while len(p) - 1 >= dq and any(p):
        p = poly_normalize(p)
        if len(p) - 1 < dq:
            break
        c = p[-1] / lead
        k = len(p) - 1 - dq
        quot[k] = c
        for i in range(len(q)):
            p[k + i] -= c * q[i]
        p = poly_normalize(p)
    return poly_normalize(quot), poly_normalize(p)


def poly_gcd(p: Sequence, q: Sequence) -> list:
    a, b = poly_normalize(list(p)), poly_normalize(list(q))
    while any(b) and (len(b) > 1 or b[0]):
        _, r = poly_divmod(a, b)
        a, b = b, r
        if len(b) == 1 and not b[0]:
            break
    if a[-1] != 1 and any(a):
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_lcm(p: Sequence, q: Sequence) -> list:
    g = poly_gcd(p, q)
    quot, rem = poly_divmod(poly_mul(p, q), g)
    assert not any(rem)
    if quot[-1] != 1:
        lead = quot[-1]
        quot = [c / lead for c in quot]
    return quot


def poly_eval(p: Sequence, x) -> Rational:
    acc = Q0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(poly: Sequence) -> tuple[list, list]:
    """All rational roots with multiplicities, plus the deflated remainder.

    Returns (roots, remainder) where roots is a list of (root, multiplicity)
    and remainder is the monic factor with no rational roots.
    """
    p = poly_normalize([rat(c) for c in poly])
    if len(p) == 1:
        return [], p
    den_lcm = 1
    for c in p:
        den_lcm = den_lcm * c.denominator // _gcd_int(den_lcm, c.denominator)
    ip = [int(c * den_lcm) for c in p]
    # strip trailing/leading structure: handle root 0 first
    roots: list = []
    mult0 = 0
    while not ip[0] and len(ip) > 1:
        ip = ip[1:]
        mult0 += 1
    if mult0:
        roots.append((Q0, mult0))
    work = [rat(c) for c in ip]
    if len(work) > 1:
        candidates = []
        a0, ak = abs(ip[0]), abs(ip[-1])
        for num in _divisors(a0):
            for den in _divisors(ak):
                candidates.append(rat(num, den))
                candidates.append(rat(-num, den))
        seen = set()
        uniq = [c for c in candidates if not (c in seen or seen.add(c))]
        for cand in uniq:
            mult = 0
            while len(work) > 1 and not poly_eval(work, cand):
                work, rem = poly_divmod(work, [-cand, Q1])
                assert not any(rem)
                mult += 1
            if mult:
                roots.append((cand, mult))
            if len(work) == 1:
                break
    if any(work) and work[-1] != 1:
        lead = work[-1]
        work = [c / lead for c in work]
    roots.sort(key=lambda rm: rm[0])
    return roots, work


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a if a else 1


def minimal_polynomial(rows: Sequence[Sequence]) -> list:
    """Exact minimal polynomial of a square rational matrix.

    Computed as the lcm of the local minimal polynomials of the standard
    basis vectors; vectors already inside the accumulated invariant
    subspace are skipped, which keeps the total work near one Krylov
    sweep of the whole space.
    """
    n = len(rows)
    minpoly = [Q1]
    covered_rows: list = []
    covered = RealSpan(n, [], [])
    for i in range(n):
        e = [Q1 if j == i else Q0 for j in range(n)]
        if covered.contains(e):
            continue
        # Krylov chain of e: stop at first linear dependence
        chain = [e]
        table = [list(e) + [Q1 if j == 0 else Q0 for j in range(n + 1)]]
        red, pivots = _rref_table([list(t) for t in table], n)
        local = None
        v = e
        for step in range(1, n + 1):
            v = mat_vec(rows, v)
            aug = [list(r) for r in red]
            marker = [Q1 if j == step else Q0 for j in range(n + 1)]
            aug.append(list(v) + marker)
            red2, piv2 = _rref_table(aug, n)
            if len(piv2) == len(pivots):
                # dependence found: residual row encodes the relation
                resid = None
                for r in red2:
                    if not any(r[:n]):
                        resid = r[n:]
                        break
                assert resid is not None
                lead_idx = max(j for j in range(n + 1) if resid[j])
                local = [c / resid[lead_idx] for c in resid[:lead_idx + 1]]
                break
            red, pivots = red2, piv2
            chain.append(v)
        assert local is not None
        minpoly = poly_lcm(minpoly, local)
        covered_rows.extend(chain)
        covered = span_of(covered_rows, n)
        if covered.dim == n or len(minpoly) - 1 == n:
            break
    return minpoly


def rational_eigenspaces(L) -> list[tuple[Rational, RealSpan]]:
    """Complete eigenspace decomposition of a rational square matrix.

    Accepts an ExactMatrix with zero imaginary parts or plain rational
    rows.  Raises NonRationalSpectrum if the characteristic polynomial
    has an irreducible factor of degree >= 2, NotDiagonalizable if the
    eigenspaces do not fill the space.
    """
    rows = _as_rational_rows(L)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("matrix must be square and nonempty")
    mp = minimal_polynomial(rows)
    roots, remainder = rational_roots(mp)
    if len(remainder) > 1:
        raise NonRationalSpectrum(
            "characteristic polynomial has an irreducible factor of degree "
            f">= 2 (non-linear remainder of degree {len(remainder) - 1})")
    if any(m > 1 for _, m in roots):
        raise NotDiagonalizable(
            "minimal polynomial has a repeated root; eigenspace dimensions "
            "cannot sum to the ambient dimension")
    out = []
    total = 0
    for lam, _ in roots:
        shifted = [[rows[i][j] - (lam if i == j else Q0) for j in range(n)]
                   for i in range(n)]
        eig = nullspace(shifted)
        out.append((lam, eig))
        total += eig.dim
    if total != n:
        raise NotDiagonalizable(
            f"eigenspace dimensions sum to {total}, ambient is {n}")
    return out


def _as_rational_rows(L) -> list:
    if isinstance(L, ExactMatrix):
        if any(a.im for a in L.entries):
            raise ValueError("matrix has nonzero imaginary parts")
        return [[L[i, j].re for j in range(L.cols)] for i in range(L.rows)]
    return [list(r) for r in L]


def has_rational_spectrum(rows: Sequence[Sequence]) -> bool:
    """True iff the matrix is diagonalizable with all-rational eigenvalues."""
    try:
        rational_eigenspaces(rows)
        return True
    except (NonRationalSpectrum, NotDiagonalizable):
        return False


# ---------------------------------------------------------------------------
# Quadratic form signatures and integer lattices
# ---------------------------------------------------------------------------

def symmetric_signature(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """Exact (positive, negative, zero) inertia of a symmetric Q-matrix."""
    n = len(gram)
    g = [[rat(x) for x in row] for row in gram]
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        k = active[0]
        piv = None
        for idx in active:
            if g[idx][idx]:
                piv = idx
                break
        if piv is None:
            # all diagonal zero on the active block: find off-diagonal entry
            found = None
            for a_i, i in enumerate(active):
                for j in active[a_i + 1:]:
                    if g[i][j]:
                        found = (i, j)
                        break
                if found:
                    break
            if found is None:
                zero += len(active)
                break
            i, j = found
            # row/col addition creates a nonzero diagonal entry at i
            for t in range(n):
                g[i][t] += g[j][t]
            for t in range(n):
                g[t][i] += g[t][j]
            continue
        d = g[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            f = g[i][piv] / d
            if f:
                for j in active:
                    g[i][j] -= f * g[piv][j]
                g[i][piv] = Q0
        for j in active:
            g[piv][j] = Q0
    return pos, neg, zero


def hermite_normal_form(int_rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style HNF basis of the integer row lattice (nonzero rows only)."""
    rows = [[int(x) for x in r] for r in int_rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    for col in range(ncols):
        carry = [r for r in rows if r[col] != 0 and not any(r[:col])]
        rest = [r for r in rows if r[col] == 0 or any(r[:col])]
        if not carry:
            rows = rest
            continue
        # euclidean reduction on the carry set to a single generator
        while len(carry) > 1:
            carry.sort(key=lambda r: abs(r[col]))
            a = carry[0]
            new_carry = [a]
            for r in carry[1:]:
                qv = r[col] // a[col]
                rr = [x - qv * y for x, y in zip(r, a)]
                if rr[col] != 0:
                    new_carry.append(rr)
                elif any(rr):
                    rest.append(rr)
            carry = new_carry
        gen = carry[0]
        if gen[col] < 0:
            gen = [-x for x in gen]
        basis.append(gen)
        rows = rest
    # reduce entries above pivots to canonical representatives
    for i in range(len(basis) - 1, -1, -1):
        pcol = next(j for j, x in enumerate(basis[i]) if x)
        p = basis[i][pcol]
        for k in range(i):
            if basis[k][pcol]:
                qv = basis[k][pcol] // p
                if qv:
                    basis[k] = [x - qv * y for x, y in zip(basis[k], basis[i])]
    return basis


def integer_coordinates(vec: Sequence[int], hnf_basis: Sequence[Sequence[int]]):
    """Integer coordinates of vec in an HNF basis, or None."""
    v = [int(x) for x in vec]
    coords = []
    for row in hnf_basis:
        pcol = next(j for j, x in enumerate(row) if x)
        if v[pcol] % row[pcol] != 0:
            return None
        c = v[pcol] // row[pcol]
        coords.append(c)
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    if any(v):
        return None
    return coords
