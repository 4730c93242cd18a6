"""Closed-form fingerprints of the reductive algebras named in the catalog.

A fingerprint is (dimension, center dimension, real rank, Killing
signature); direct sums add componentwise.  The rank entry is the
dimension of a maximal abelian subspace of the intersection with the
ambient -1 Cartan eigenspace, so compact factors contribute 0 and split
central lines contribute 1.
"""
from __future__ import annotations

from .liealg import Fingerprint

ZERO = Fingerprint(0, 0, 0, (0, 0, 0))


def fp_sum(*fps: Fingerprint) -> Fingerprint:
    out = ZERO
    for f in fps:
        out = out + f
    return out


def fp_u1() -> Fingerprint:
    """Compact one-dimensional center."""
    return Fingerprint(1, 1, 0, (0, 0, 1))


def fp_R() -> Fingerprint:
    """Split one-dimensional center."""
    return Fingerprint(1, 1, 1, (0, 0, 1))


def fp_su(p: int, q: int) -> Fingerprint:
    m = p + q
    d = m * m - 1
    if d == 0:
        return ZERO
    return Fingerprint(d, 0, min(p, q), (2 * p * q, p * p + q * q - 1, 0))


def fp_u(p: int, q: int) -> Fingerprint:
    return fp_su(p, q) + fp_u1()


def fp_so(p: int, q: int) -> Fingerprint:
    m = p + q
    d = m * (m - 1) // 2
    if d == 0:
        return ZERO
    if d == 1:
        # so(2) or so(1,1): abelian line
        return Fingerprint(1, 1, min(p, q), (0, 0, 1))
    return Fingerprint(d, 0, min(p, q),
                       (p * q, (p * (p - 1) + q * (q - 1)) // 2, 0))


def fp_sp_R(n: int) -> Fingerprint:
    if n == 0:
        return ZERO
    return Fingerprint(n * (2 * n + 1), 0, n, (n * n + n, n * n, 0))


def fp_sp_pq(p: int, q: int) -> Fingerprint:
    m = p + q
    if m == 0:
        return ZERO
    return Fingerprint(m * (2 * m + 1), 0, min(p, q),
                       (4 * p * q, p * (2 * p + 1) + q * (2 * q + 1), 0))


def fp_so_star(n: int) -> Fingerprint:
    """so*(2n); the argument is n."""
    if n == 0:
        return ZERO
    if n == 1:
        return fp_u1()
    return Fingerprint(n * (2 * n - 1), 0, n // 2, (n * n - n, n * n, 0))


def fp_sl_R(n: int) -> Fingerprint:
    d = n * n - 1
    if d == 0:
        return ZERO
    return Fingerprint(d, 0, n - 1,
                       (n * (n + 1) // 2 - 1, n * (n - 1) // 2, 0))


def fp_gl_R(n: int) -> Fingerprint:
    if n == 0:
        return ZERO
    return fp_sl_R(n) + fp_R()


def fp_sl_C(n: int) -> Fingerprint:
    d = 2 * (n * n - 1)
    if d == 0:
        return ZERO
    return Fingerprint(d, 0, n - 1, (n * n - 1, n * n - 1, 0))


def fp_so_C(n: int) -> Fingerprint:
    d = n * (n - 1)
    if d == 0:
        return ZERO
    if n == 2:
        # abelian complex line: one compact and one split direction
        return Fingerprint(2, 2, 1, (0, 0, 2))
    h = n * (n - 1) // 2
    return Fingerprint(d, 0, n // 2, (h, h, 0))


def fp_sp_C(n: int) -> Fingerprint:
    if n == 0:
        return ZERO
    h = n * (2 * n + 1)
    return Fingerprint(2 * h, 0, n, (h, h, 0))


def fp_su_star(two_n: int) -> Fingerprint:
    """su*(2n); the argument is 2n."""
    n = two_n // 2
    if n == 0:
        return ZERO
    if n == 1:
        return fp_su(2, 0)
    return Fingerprint(4 * n * n - 1, 0, n - 1,
                       (2 * n * n - n - 1, 2 * n * n + n, 0))


def identify(fp: Fingerprint, candidates: dict[str, Fingerprint]) -> str | None:
    """Name of the unique candidate matching fp, or None."""
    hits = [name for name, c in candidates.items() if c == fp]
    if len(hits) == 1:
        return hits[0]
    return None


def so_family_candidates(n: int) -> dict[str, Fingerprint]:
    """Candidates so(p, n-p) for matching twisted fixed algebras."""
    out = {}
    for p in range(n + 1):
        q = n - p
        a, b = max(p, q), min(p, q)
        out.setdefault(f"so({a},{b})" if b else f"so({a})", fp_so(p, q))
    return out
