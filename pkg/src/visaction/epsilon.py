"""Signature-family listings: twisted fixed algebras, one entry per sign map."""
from __future__ import annotations

import re

from .analysis import slice_subspace
from .catalog import catalog_involution, catalog_sigma, dataset_row
from .errors import UnsupportedFamily
from .families import build
from .fingerprints import identify, so_family_candidates
from .liealg import fingerprint, fixed_subspace, maximal_abelian
from .roots import (
    root_decomposition,
    signature_twist,
    signatures,
    verify_twist,
)


def epsilon_listing(spec: str, params: tuple = ()) -> dict:
    """Deterministic listing of twisted fixed-algebra fingerprints.

    spec is either "slNR" (the compact-involution family of sl(N, R)) or
    "TABLE:LABEL" for a catalog row, with params giving the row
    parameters.
    """
    m = re.fullmatch(r"sl(\d+)R", spec)
    if m:
        return _sl_family(int(m.group(1)))
    m = re.fullmatch(r"(\d+):(\S+)", spec)
    if m:
        return _row_family(int(m.group(1)), m.group(2), params, spec)
    raise UnsupportedFamily(
        f"cannot parse family spec {spec!r}; expected slNR or TABLE:LABEL")


def _sl_family(n: int) -> dict:
    real = build("sl_R", n)
    g = real.algebra
    p = fixed_subspace(g, real.theta, -1)
    torus = maximal_abelian(g, p, rational_torus=True)
    datum = root_decomposition(g, torus)
    candidates = so_family_candidates(n)
    entries = []
    for eps in signatures(datum):
        twist = signature_twist(real.theta, eps, datum,
                                certify_brackets=True)
        fp = fingerprint(g, fixed_subspace(g, twist, +1), real.theta)
        entries.append({
            "signature": eps.describe(datum),
            "label": identify(fp, candidates),
            "fingerprint": repr(fp),
            "passed": twist.is_involution(),
        })
    return {"spec": f"sl{n}R", "rank": datum.rank,
            "roots": len(datum.roots), "entries": entries}


def _row_family(table: int, label: str, params: tuple, spec: str) -> dict:
    row = dataset_row(table, label)
    real, tau = catalog_involution(row, params)
    sigma = catalog_sigma(row, params, real, tau)
    torus = slice_subspace(real, tau, sigma, rational_torus=True)
    datum = root_decomposition(real.algebra, torus)
    g = real.algebra
    entries = []
    for eps in signatures(datum):
        rep = verify_twist(sigma, tau, real.theta, datum, eps)
        twist = signature_twist(tau, eps, datum)
        fp = fingerprint(g, fixed_subspace(g, twist, +1), real.theta)
        entries.append({
            "signature": rep.eps_description,
            "label": None,
            "fingerprint": repr(fp),
            "passed": rep.passed,
        })
    return {"spec": f"{spec}{params}", "rank": datum.rank,
            "roots": len(datum.roots), "entries": entries}
