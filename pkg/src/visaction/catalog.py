"""The involution catalog: table rows, their matrix recipes, and sweeps.

Each catalog row pairs a Hermitian family with a fixed-subalgebra class
and carries: the recipe for tau, the recipe for the orbit-reversing
sigma (rows of anti-holomorphic type take sigma = tau o theta), expected
fingerprints for the fixed algebras, a closed-form rank, and parameter
enumeration bounded by the ambient matrix size.  Exceptional rows ship
as data only.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .errors import (
    DatasetError,
    FingerprintMismatch,
    NotTypeStable,
    ParameterOutOfRange,
    UnsupportedRow,
)
from .exact import ExactMatrix, GR1
from .families import (
    CharacteristicElement,
    StandardRealization,
    build,
    characteristic_element,
    signature_matrix,
    symplectic_J,
)
from .fingerprints import (
    fp_R,
    fp_gl_R,
    fp_sl_C,
    fp_so,
    fp_so_C,
    fp_so_star,
    fp_sp_C,
    fp_sp_R,
    fp_sp_pq,
    fp_su,
    fp_su_star,
    fp_sum,
    fp_u,
    fp_u1,
)
from .liealg import Fingerprint, LinearAlgebraMap, fingerprint, fixed_subspace, multi_fixed
from .recipes import InvolutionRecipe, ad_recipe, conj_recipe

DATA_ENV_VAR = "VISIBILITY_DATASET"
_DEFAULT_DATASET = os.path.join(os.path.dirname(__file__), "data",
                                "involution_catalog.txt")


class HolomorphyType(Enum):
    HOLOMORPHIC = "holomorphic"
    ANTI_HOLOMORPHIC = "anti-holomorphic"


# ---------------------------------------------------------------------------
# dataset records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    table: int
    label: str
    g_label: str
    h_label: str
    sigma_label: str
    sigma_tau_label: str
    rank_formula: str | None
    constraints: str
    implementable: bool
    epsilon_family: str = ""
    notes: str = ""

    def rank_value(self, params: dict) -> int | None:
        if not self.rank_formula:
            return None
        return eval_rank_formula(self.rank_formula, params)


_FORMULA_TOKEN = re.compile(r"^[\sA-Za-z0-9_+\-*/(),]*$")


def eval_rank_formula(formula: str, params: dict) -> int:
    if not _FORMULA_TOKEN.match(formula):
        raise DatasetError(f"illegal characters in rank formula {formula!r}")
    names = {"min": min, "max": max, "floor": math.floor}
    names.update(params)
    try:
        value = eval(formula, {"__builtins__": {}}, names)
    except Exception as exc:
        raise DatasetError(f"cannot evaluate rank formula {formula!r}: {exc}")
    return int(value)


def parse_dataset(text: str) -> list[TableRow]:
    rows: list[TableRow] = []
    block: dict | None = None

    def close():
        if block is None:
            return
        try:
            rows.append(TableRow(
                table=int(block["table"]),
                label=block["label"],
                g_label=block.get("g", ""),
                h_label=block.get("h", ""),
                sigma_label=block.get("sigma", ""),
                sigma_tau_label=block.get("sigma_tau", ""),
                rank_formula=block.get("rank") or None,
                constraints=block.get("constraints", ""),
                implementable=block.get("implementable", "yes") == "yes",
                epsilon_family=block.get("epsilon_family", ""),
                notes=block.get("notes", ""),
            ))
        except KeyError as exc:
            raise DatasetError(f"dataset block missing key {exc}")

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[row]":
            close()
            block = {}
            continue
        if block is None:
            raise DatasetError(f"line {lineno}: key outside a [row] block")
        if "=" not in line:
            raise DatasetError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        block[key.strip()] = value.strip()
    close()
    seen = set()
    for r in rows:
        key = (r.table, r.label)
        if key in seen:
            raise DatasetError(f"duplicate row {key}")
        seen.add(key)
    return rows


def load_dataset(path: str | None = None) -> list[TableRow]:
    path = path or os.environ.get(DATA_ENV_VAR) or _DEFAULT_DATASET
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DatasetError(f"cannot read dataset {path}: {exc}")
    rows = parse_dataset(text)
    if not rows:
        raise DatasetError(f"dataset {path} contains no rows")
    return rows


def dataset_row(table: int, label: str,
                rows: list[TableRow] | None = None) -> TableRow:
    rows = rows if rows is not None else load_dataset()
    for r in rows:
        if r.table == table and r.label == str(label):
            return r
    raise DatasetError(f"no catalog row table={table} label={label}")


# ---------------------------------------------------------------------------
# recipe helpers
# ---------------------------------------------------------------------------

def diag_signs(signs) -> ExactMatrix:
    return ExactMatrix.diag([GR1 if s > 0 else -GR1 for s in signs])


def _row1_d(p, q, i, j):
    return diag_signs([1] * i + [-1] * (p - i) + [1] * j + [-1] * (q - j))


def _block_pair(d: ExactMatrix, negate_second: bool = False) -> ExactMatrix:
    Z = ExactMatrix.zeros(d.rows)
    other = -d if negate_second else d
    return ExactMatrix.from_blocks([[d, Z], [Z, other]])


def _u_structure(p: int, q: int) -> ExactMatrix:
    """[[0, -I_{p,q}], [I_{p,q}, 0]]: complex structure with signature."""
    dpq = signature_matrix(p, q)
    Z = ExactMatrix.zeros(p + q)
    return ExactMatrix.from_blocks([[Z, -dpq], [dpq, Z]])


def _so2n_time_split(n: int, plus: int) -> ExactMatrix:
    """diag(1, -1, +1^plus, -1^(n-plus)) on so(2,n) coordinates."""
    return diag_signs([1, -1] + [1] * plus + [-1] * (n - plus))


def _quaternion_block(parts: list[int]) -> ExactMatrix:
    """Block diagonal of symplectic structures, one 2k x 2k block per part."""
    blocks = [symplectic_J(k) for k in parts]
    mats = []
    for bi, blk in enumerate(blocks):
        row = [blk if bi == bj else ExactMatrix.zeros(blk.rows, other.cols)
               for bj, other in enumerate(blocks)]
        mats.append(row)
    return ExactMatrix.from_blocks(mats)


# ---------------------------------------------------------------------------
# the computational registry
# ---------------------------------------------------------------------------

@dataclass
class RowSpec:
    table: int
    label: str
    param_names: tuple
    realize: Callable
    tau_recipe: Callable
    sigma_recipe: Callable | None  # None: sigma = tau o theta (Case I)
    fp_tau: Callable
    fp_sigma: Callable | None
    fp_sigma_tau: Callable | None
    enum_params: Callable


def _spec(*args, **kwargs) -> RowSpec:
    return RowSpec(*args, **kwargs)


def _enum_su_pairs(M):
    return [(p, q) for q in range(1, M) for p in range(q, M - q + 1)]


def _enum_row1(M):
    out = []
    for p, q in _enum_su_pairs(M):
        for i in range(p + 1):
            for j in range(q + 1):
                s = i + j
                if not 1 <= s <= p + q - 1:
                    continue
                if (s, i, j) > (p + q - s, p - i, q - j):
                    continue  # same involution as the complementary block
                out.append((p, q, i, j))
    return out


def _enum_su_nn(M, nmin=1):
    return [(n,) for n in range(nmin, M // 2 + 1)]


def _enum_so_star(M, nmin=2):
    return [(n,) for n in range(nmin, M // 2 + 1)]


def _enum_so_star_split(M):
    out = []
    for n in range(2, M // 2 + 1):
        for p in range(1, n // 2 + 1):
            out.append((n, p))
    return out


def _enum_so_star_u(M):
    out = []
    for n in range(2, M // 2 + 1):
        for p in range(0, n // 2 + 1):
            out.append((n, p))
    return out


def _enum_so2n(M, pmin=0, pmax_off=0):
    out = []
    for n in range(3, M - 1):
        for p in range(pmin, n + pmax_off):
            out.append((n, p))
    return out


def _enum_so2n_row25(M):
    out = []
    for n in range(3, M - 1):
        for p in range(0, n // 2 + 1):
            out.append((n, p))
    return out


def _enum_sp(M, nmin=1):
    return [(n,) for n in range(nmin, M // 2 + 1)]


def _enum_sp_u(M):
    out = []
    for n in range(1, M // 2 + 1):
        for p in range(0, n // 2 + 1):
            out.append((n, p))
    return out


def _enum_sp_split(M):
    out = []
    for n in range(2, M // 2 + 1):
        for p in range(1, n // 2 + 1):
            out.append((n, p))
    return out


def _enum_su2p2q(M):
    return [(p, q) for q in range(1, M) for p in range(q, M)
            if 2 * (p + q) <= M]


def _enum_half(M, k, nmin=1):
    return [(n,) for n in range(nmin, M // k + 1)]


REGISTRY: dict[tuple[int, str], RowSpec] = {}


def _register(spec: RowSpec):
    REGISTRY[(spec.table, spec.label)] = spec


def _real_su(p, q):
    return build("su", p, q)


def _real_su_nn(n):
    return build("su", n, n)


def _real_so_star(n):
    return build("so_star", 2 * n)


def _real_sp(n):
    return build("sp_R", n)


def _real_so2n(n):
    return build("so2n", n)


_register(_spec(
    1, "1", ("p", "q", "i", "j"),
    realize=lambda p, q, i, j: _real_su(p, q),
    tau_recipe=lambda p, q, i, j: ad_recipe(_row1_d(p, q, i, j)),
    sigma_recipe=lambda p, q, i, j: conj_recipe(size=p + q),
    fp_tau=lambda p, q, i, j: fp_sum(fp_su(i, j), fp_su(p - i, q - j), fp_u1()),
    fp_sigma=lambda p, q, i, j: fp_so(p, q),
    fp_sigma_tau=lambda p, q, i, j: fp_sum(fp_so(i, j), fp_so(p - i, q - j)),
    enum_params=_enum_row1,
))

_register(_spec(
    1, "2", ("n",),
    realize=lambda n: _real_su_nn(n),
    tau_recipe=lambda n: InvolutionRecipe(
        conjugator=_swap(n), neg_transpose=True),
    sigma_recipe=lambda n: conj_recipe(size=2 * n),
    fp_tau=lambda n: fp_so_star(n),
    fp_sigma=lambda n: fp_so(n, n),
    fp_sigma_tau=lambda n: fp_so_C(n),
    enum_params=lambda M: _enum_su_nn(M, 1),
))

_register(_spec(
    1, "3", ("n",),
    realize=lambda n: _real_su_nn(n),
    tau_recipe=lambda n: InvolutionRecipe(
        conjugator=symplectic_J(n), neg_transpose=True),
    sigma_recipe=lambda n: ad_recipe(symplectic_J(n)),
    fp_tau=lambda n: fp_sp_R(n),
    fp_sigma=lambda n: fp_sum(fp_sl_C(n), fp_R()),
    fp_sigma_tau=lambda n: fp_gl_R(n),
    enum_params=lambda M: _enum_su_nn(M, 2),
))

_register(_spec(
    1, "4", ("n", "p"),
    realize=lambda n, p: _real_so_star(n),
    tau_recipe=lambda n, p: ad_recipe(
        _block_pair(signature_matrix(p, n - p))),
    sigma_recipe=lambda n, p: conj_recipe(size=2 * n),
    fp_tau=lambda n, p: fp_sum(fp_so_star(p), fp_so_star(n - p)),
    fp_sigma=lambda n, p: fp_so_C(n),
    fp_sigma_tau=lambda n, p: fp_sum(fp_so_C(p), fp_so_C(n - p)),
    enum_params=_enum_so_star_split,
))

_register(_spec(
    1, "5", ("n", "p"),
    realize=lambda n, p: _real_so_star(n),
    tau_recipe=lambda n, p: ad_recipe(
        _block_pair(signature_matrix(p, n - p), negate_second=True)),
    sigma_recipe=lambda n, p: conj_recipe(size=2 * n),
    fp_tau=lambda n, p: fp_u(p, n - p),
    fp_sigma=lambda n, p: fp_so_C(n),
    fp_sigma_tau=lambda n, p: fp_so(p, n - p),
    enum_params=_enum_so_star_u,
))

_register(_spec(
    1, "6", ("n", "p"),
    realize=lambda n, p: _real_so2n(n),
    tau_recipe=lambda n, p: ad_recipe(
        diag_signs([1, 1] + [1] * p + [-1] * (n - p))),
    sigma_recipe=lambda n, p: ad_recipe(_so2n_time_split(n, n - 1)),
    fp_tau=lambda n, p: fp_sum(fp_so(2, p), fp_so(n - p, 0)),
    fp_sigma=lambda n, p: fp_sum(fp_so(1, n - 1), fp_so(1, 1)),
    fp_sigma_tau=lambda n, p: fp_sum(fp_so(1, p), fp_so(n - p - 1, 0)),
    enum_params=lambda M: _enum_so2n(M, pmin=0, pmax_off=0),
))

_register(_spec(
    1, "7", ("n",),
    realize=lambda n: _real_so2n(2 * n),
    tau_recipe=lambda n: ad_recipe(ExactMatrix.from_blocks(
        [[_eps2(), ExactMatrix.zeros(2, 2 * n)],
         [ExactMatrix.zeros(2 * n, 2), symplectic_J(n)]])),
    sigma_recipe=lambda n: ad_recipe(
        diag_signs([1, -1] + [1] * n + [-1] * n)),
    fp_tau=lambda n: fp_u(1, n),
    fp_sigma=lambda n: fp_sum(fp_so(1, n), fp_so(1, n)),
    fp_sigma_tau=lambda n: fp_so(1, n),
    enum_params=lambda M: [(n,) for n in range(2, (M - 2) // 2 + 1)],
))

_register(_spec(
    1, "8", ("n", "p"),
    realize=lambda n, p: _real_sp(n),
    tau_recipe=lambda n, p: ad_recipe(_u_structure(p, n - p)),
    sigma_recipe=lambda n, p: ad_recipe(signature_matrix(n, n)),
    fp_tau=lambda n, p: fp_u(p, n - p),
    fp_sigma=lambda n, p: fp_gl_R(n),
    fp_sigma_tau=lambda n, p: fp_so(p, n - p),
    enum_params=_enum_sp_u,
))

_register(_spec(
    1, "9", ("n", "p"),
    realize=lambda n, p: _real_sp(n),
    tau_recipe=lambda n, p: ad_recipe(ExactMatrix.from_blocks(
        [[signature_matrix(p, n - p), ExactMatrix.zeros(n)],
         [ExactMatrix.zeros(n), signature_matrix(p, n - p)]])),
    sigma_recipe=lambda n, p: ad_recipe(signature_matrix(n, n)),
    fp_tau=lambda n, p: fp_sum(fp_sp_R(p), fp_sp_R(n - p)),
    fp_sigma=lambda n, p: fp_gl_R(n),
    fp_sigma_tau=lambda n, p: fp_sum(fp_gl_R(p), fp_gl_R(n - p)),
    enum_params=_enum_sp_split,
))

# --- anti-holomorphic rows (sigma = tau o theta) ---------------------------

_register(_spec(
    2, "20", ("p", "q"),
    realize=lambda p, q: _real_su(p, q),
    tau_recipe=lambda p, q: conj_recipe(size=p + q),
    sigma_recipe=None,
    fp_tau=lambda p, q: fp_so(p, q),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_su_pairs(M),
))

_register(_spec(
    2, "21", ("n",),
    realize=lambda n: _real_su_nn(n),
    tau_recipe=lambda n: ad_recipe(symplectic_J(n)),
    sigma_recipe=None,
    fp_tau=lambda n: fp_sum(fp_sl_C(n), fp_R()),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_su_nn(M, 1),
))

_register(_spec(
    2, "22", ("p", "q"),
    realize=lambda p, q: build("su", 2 * p, 2 * q),
    tau_recipe=lambda p, q: InvolutionRecipe(
        conjugator=_quaternion_block([p, q]), conj=True),
    sigma_recipe=None,
    fp_tau=lambda p, q: fp_sp_pq(p, q),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=_enum_su2p2q,
))

_register(_spec(
    2, "23", ("n",),
    realize=lambda n: _real_so_star(n),
    tau_recipe=lambda n: conj_recipe(size=2 * n),
    sigma_recipe=None,
    fp_tau=lambda n: fp_so_C(n),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_so_star(M, 2),
))

_register(_spec(
    2, "24", ("n",),
    realize=lambda n: _real_so_star(2 * n),
    tau_recipe=lambda n: InvolutionRecipe(
        conjugator=_quaternion_block([n, n]), conj=True),
    sigma_recipe=None,
    fp_tau=lambda n: fp_sum(fp_su_star(2 * n), fp_R()),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_half(M, 4, 1),
))

_register(_spec(
    2, "25", ("n", "p"),
    realize=lambda n, p: _real_so2n(n),
    tau_recipe=lambda n, p: ad_recipe(_so2n_time_split(n, p)),
    sigma_recipe=None,
    fp_tau=lambda n, p: fp_sum(fp_so(1, p), fp_so(1, n - p)),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=_enum_so2n_row25,
))

_register(_spec(
    2, "26", ("n",),
    realize=lambda n: _real_sp(n),
    tau_recipe=lambda n: ad_recipe(signature_matrix(n, n)),
    sigma_recipe=None,
    fp_tau=lambda n: fp_gl_R(n),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_sp(M, 1),
))

_register(_spec(
    2, "27", ("n",),
    realize=lambda n: _real_sp(2 * n),
    tau_recipe=lambda n: ad_recipe(_block_pair(symplectic_J(n),
                                               negate_second=True)),
    sigma_recipe=None,
    fp_tau=lambda n: fp_sp_C(n),
    fp_sigma=None,
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_half(M, 4, 1),
))

# --- sigma table for tau = theta --------------------------------------------

_register(_spec(
    3, "su", ("p", "q"),
    realize=lambda p, q: _real_su(p, q),
    tau_recipe="theta",
    sigma_recipe=lambda p, q: conj_recipe(size=p + q),
    fp_tau=None,
    fp_sigma=lambda p, q: fp_so(p, q),
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_su_pairs(M),
))

_register(_spec(
    3, "so_star", ("n",),
    realize=lambda n: _real_so_star(n),
    tau_recipe="theta",
    sigma_recipe=lambda n: conj_recipe(size=2 * n),
    fp_tau=None,
    fp_sigma=lambda n: fp_so_C(n),
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_so_star(M, 2),
))

_register(_spec(
    3, "sp_R", ("n",),
    realize=lambda n: _real_sp(n),
    tau_recipe="theta",
    sigma_recipe=lambda n: ad_recipe(signature_matrix(n, n)),
    fp_tau=None,
    fp_sigma=lambda n: fp_gl_R(n),
    fp_sigma_tau=None,
    enum_params=lambda M: _enum_sp(M, 1),
))

_register(_spec(
    3, "so2n", ("n",),
    realize=lambda n: _real_so2n(n),
    tau_recipe="theta",
    sigma_recipe=lambda n: ad_recipe(_so2n_time_split(n, n - 1)),
    fp_tau=None,
    fp_sigma=lambda n: fp_sum(fp_so(1, n - 1), fp_so(1, 1)),
    fp_sigma_tau=None,
    enum_params=lambda M: [(n,) for n in range(3, M - 1)],
))


def _swap(n: int) -> ExactMatrix:
    from .families import swap_matrix
    return swap_matrix(n)


def _eps2() -> ExactMatrix:
    return ExactMatrix.from_rows([[0, -1], [1, 0]])


# ---------------------------------------------------------------------------
# public construction entry points
# ---------------------------------------------------------------------------

def row_spec(row: TableRow) -> RowSpec:
    key = (row.table, row.label)
    if row.table == 4:
        key = (1, row.label)  # table 4 annotates the table-1 rows
    if not row.implementable:
        raise UnsupportedRow(
            f"row {key} is data-only (exceptional family {row.g_label})")
    if key not in REGISTRY:
        raise UnsupportedRow(f"row {key} has no computational recipe")
    return REGISTRY[key]


def params_dict(spec: RowSpec, params: tuple) -> dict:
    if len(params) != len(spec.param_names):
        raise ParameterOutOfRange(
            f"row ({spec.table},{spec.label}) expects parameters "
            f"{spec.param_names}, got {params}")
    return dict(zip(spec.param_names, params))


def catalog_involution(row: TableRow, params: tuple,
                       check_fingerprint: bool = True
                       ) -> tuple[StandardRealization, LinearAlgebraMap]:
    """Build the row's realization and certified tau."""
    spec = row_spec(row)
    real = spec.realize(*params)
    if spec.tau_recipe == "theta":
        tau = real.theta
    else:
        tau = real.map_from_recipe(spec.tau_recipe(*params), name="tau")
    tau.certify_involution()
    if not tau.commutes_with(real.theta):
        raise FingerprintMismatch(
            f"row ({row.table},{row.label}){params}: tau does not commute "
            "with theta")
    if check_fingerprint and spec.fp_tau is not None:
        got = fingerprint(real.algebra,
                          fixed_subspace(real.algebra, tau, +1), real.theta)
        want = spec.fp_tau(*params)
        if got != want:
            raise FingerprintMismatch(
                f"row ({row.table},{row.label}){params}: fixed algebra of "
                f"tau has fingerprint {got}, expected {want}")
    return real, tau


def catalog_sigma(row: TableRow, params: tuple,
                  real: StandardRealization | None = None,
                  tau: LinearAlgebraMap | None = None,
                  check_fingerprint: bool = True) -> LinearAlgebraMap:
    """The certified sigma paired with the row (Case I rows use tau o theta)."""
    spec = row_spec(row)
    if real is None or tau is None:
        real, tau = catalog_involution(row, params,
                                       check_fingerprint=check_fingerprint)
    if spec.sigma_recipe is None:
        sigma = tau.compose(real.theta)
        sigma.name = "sigma"
        sigma.certify_involution()
        return sigma
    sigma = real.map_from_recipe(spec.sigma_recipe(*params), name="sigma")
    sigma.certify_involution()
    if check_fingerprint and spec.fp_sigma is not None:
        got = fingerprint(real.algebra,
                          fixed_subspace(real.algebra, sigma, +1), real.theta)
        want = spec.fp_sigma(*params)
        if got != want:
            raise FingerprintMismatch(
                f"row ({row.table},{row.label}){params}: fixed algebra of "
                f"sigma has fingerprint {got}, expected {want}")
    return sigma


def sigma_tau_fingerprint_matches(row: TableRow, params: tuple,
                                  real: StandardRealization,
                                  tau: LinearAlgebraMap,
                                  sigma: LinearAlgebraMap) -> bool | None:
    """Check g^{sigma,tau} against the catalog's middle column, if any."""
    spec = row_spec(row)
    if spec.fp_sigma_tau is None:
        return None
    space = multi_fixed(real.algebra, [(sigma, +1), (tau, +1)])
    got = fingerprint(real.algebra, space, real.theta)
    want = spec.fp_sigma_tau(*params)
    if got != want:
        raise FingerprintMismatch(
            f"row ({row.table},{row.label}){params}: g^(sigma,tau) has "
            f"fingerprint {got}, expected {want}")
    return True


def holomorphy_type(tau: LinearAlgebraMap,
                    ce: CharacteristicElement) -> HolomorphyType:
    """Exact classification via the action on the characteristic element."""
    img = tau.apply_coords(ce.coords)
    if img == tuple(ce.coords):
        return HolomorphyType.HOLOMORPHIC
    if img == tuple(-c for c in ce.coords):
        return HolomorphyType.ANTI_HOLOMORPHIC
    raise NotTypeStable(
        f"{tau.name or 'involution'} does not send Z to +Z or -Z; it does "
        "not commute with theta or the recipe is wrong")


def enumerate_params(row: TableRow, max_ambient: int) -> list[tuple]:
    spec = row_spec(row)
    return spec.enum_params(max_ambient)
