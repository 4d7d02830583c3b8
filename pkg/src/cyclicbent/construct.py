"""Construction and certification of cyclic bent and cyclic semi-bent functions.

A function f on GF(2^{m-1}) x GF(2) (m even) is cyclic bent when
f(a x1, x2) + f(b x1, x2 + eps) is bent for every a != b and eps.  A function
g on GF(2^n) (n odd) is cyclic semi-bent when g(a x) + g(b x) is semi-bent
for every a != b.

Two certifiers are provided for each notion: a full one that scans every
ordered pair, and a reduced one that exploits homogeneity (and, in the bent
case, the affine-difference criterion that makes a single b-loop sufficient).
The reduced bent certifier first checks that f(x1, x2+1) + f(x1, x2) equals
tr(lam x1) + nu for some (lam, nu); if that hypothesis fails the reduced
route is inapplicable and AffineDifferenceError is raised, which is distinct
from a certificate that fails on bentness.

Cost control: full bent mode is O(4^m) Walsh transforms and is capped at
m <= 8 unless force=True; reduced mode is allowed to m <= 16.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from cyclicbent import boolfun as bf
from cyclicbent.boolfun import BoolFun, Domain, WalshClass
from cyclicbent.gf2 import GF2m, mk_field

FULL_MODE_MAX_M = 8
REDUCED_MODE_MAX_M = 16


class AffineDifferenceError(ValueError):
    """The x2-difference of f is not of the form tr(lam x1) + nu."""


@dataclass(frozen=True)
class ChainSpec:
    """Parameters of the divisor-chain construction.

    e is the chain e_0 = 1 | e_1 | ... | e_l = m-1 with strict divisibility
    steps; gamma = (gamma_0, ..., gamma_{l-1}) are elements of GF(2^{m-1})
    (as canonical indices) with gamma_j in the subfield GF(2^{e_j}) and every
    partial sum gamma_0 + ... + gamma_j nonzero.
    """

    m: int
    e: tuple[int, ...]
    gamma: tuple[int, ...]

    def __post_init__(self):
        m, e, gamma = self.m, self.e, self.gamma
        if m % 2 != 0 or m < 4:
            raise ValueError("m must be even and >= 4")
        if len(e) < 2 or e[0] != 1 or e[-1] != m - 1:
            raise ValueError("chain must run from e_0 = 1 to e_l = m-1")
        for a, b in zip(e, e[1:]):
            if b % a != 0 or a == b:
                raise ValueError(f"chain steps must strictly divide: {a} -> {b}")
        if len(gamma) != len(e) - 1:
            raise ValueError("need one gamma per chain level below the top")
        ctx = self.ctx
        psum = 0
        for j, g in enumerate(gamma):
            if not 0 <= g < ctx.order:
                raise ValueError(f"gamma_{j} out of range")
            if not ctx.subfield_test(g, e[j]):
                raise ValueError(f"gamma_{j} not in GF(2^{e[j]})")
            psum ^= g
            if psum == 0:
                raise ValueError(f"partial sum gamma_0 + ... + gamma_{j} is zero")

    @property
    def ctx(self) -> GF2m:
        return mk_field(self.m - 1)

    @property
    def level_count(self) -> int:
        return len(self.e) - 1

    def cofactors(self) -> list[int]:
        return [(self.m - 1) // ej for ej in self.e]

    def to_json_obj(self) -> dict:
        return {"m": self.m, "e": list(self.e), "gamma": list(self.gamma)}

    @staticmethod
    def from_json_obj(obj: dict) -> "ChainSpec":
        return ChainSpec(int(obj["m"]), tuple(obj["e"]), tuple(obj["gamma"]))


@dataclass(frozen=True)
class CyclicCertificate:
    kind: str  # "bent" | "semi-bent"
    mode: str  # "full" | "reduced"
    passed: bool
    verified_pairs: int
    witness: tuple | None = None  # failing (a, b, eps) / (a, b) / (b,)

    def __post_init__(self):
        if self.passed == (self.witness is not None):
            raise ValueError("witness must be present exactly when the check failed")

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "passed": self.passed,
            "verified_pairs": self.verified_pairs,
            "witness": list(self.witness) if self.witness else None,
        }


# -- constructions -----------------------------------------------------------------


def kerdock_fn(m: int) -> BoolFun:
    """K(x1,x2) = sum_{i=1}^{(m-2)/2} tr(x1^{2^i+1}) + x2 tr(x1) on GF(2^{m-1}) x GF(2)."""
    if m % 2 != 0 or m < 4:
        raise ValueError("m must be even and >= 4")
    ctx = mk_field(m - 1)
    acc = np.zeros(ctx.order, dtype=np.int64)
    for i in range(1, (m - 2) // 2 + 1):
        acc ^= ctx.pow_table((1 << i) + 1)
    tr1 = ctx.trace_table(1)
    quad = tr1[acc].astype(np.uint8)
    lin = tr1[np.arange(ctx.order)].astype(np.uint8)
    table = np.concatenate([quad, quad ^ lin])
    return BoolFun(Domain(ctx, with_bit=True), table)


def chain_fn(spec: ChainSpec) -> BoolFun:
    """The divisor-chain cyclic bent function sum_j Q_j(gamma_j x1) + x2 tr(x1).

    Q_j(y) = tr(sum_{i=1}^{(f_j-1)/2} y^{2^{i e_j}+1}) with f_j = (m-1)/e_j.
    Reduces to kerdock_fn for a length-one chain.
    """
    ctx = spec.ctx
    fj = spec.cofactors()
    acc = np.zeros(ctx.order, dtype=np.int64)
    x = np.arange(ctx.order, dtype=np.int64)
    for j in range(spec.level_count):
        y = ctx.mul_table(spec.gamma[j])[x]
        for i in range(1, (fj[j] - 1) // 2 + 1):
            acc ^= ctx.pow_table((1 << (i * spec.e[j])) + 1)[y]
    tr1 = ctx.trace_table(1)
    quad = tr1[acc].astype(np.uint8)
    lin = tr1[x].astype(np.uint8)
    table = np.concatenate([quad, quad ^ lin])
    return BoolFun(Domain(ctx, with_bit=True), table)


def divisor_chains(n: int) -> list[tuple[int, ...]]:
    """All chains 1 = e_0 < e_1 < ... < e_l = n with e_i | e_{i+1}."""
    if n == 1:
        return []
    chains = []

    def grow(prefix):
        last = prefix[-1]
        if last == n:
            chains.append(tuple(prefix))
            return
        for d in range(2 * last, n + 1, last):
            if d % last == 0 and n % d == 0:
                grow(prefix + [d])

    grow([1])
    return chains


def admissible_gammas(m: int, e: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All gamma vectors satisfying the partial-sum condition, as big-field indices."""
    ctx = mk_field(m - 1)
    levels = len(e) - 1
    out = []
    subfields = [ctx.subfield_elements(e[j]) for j in range(levels)]

    def grow(prefix, psum):
        j = len(prefix)
        if j == levels:
            out.append(tuple(prefix))
            return
        for g in subfields[j]:
            if psum ^ g != 0:
                grow(prefix + [g], psum ^ g)

    grow([], 0)
    return out


def normalize_zero(f: BoolFun) -> BoolFun:
    """f'(x1,x2) = f(x1,x2) + f(0,x2), forcing f'(0,0) = f'(0,1) = 0."""
    if not f.domain.with_bit:
        raise ValueError("normalize_zero needs a field-times-bit domain")
    half = f.domain.ctx.order
    table = f.table.copy()
    table[:half] ^= f.table[0]
    table[half:] ^= f.table[half]
    return BoolFun(f.domain, table)


def is_normalized(f: BoolFun) -> bool:
    half = f.domain.ctx.order
    return int(f.table[0]) == 0 and int(f.table[half]) == 0


def affine_bit_difference(f: BoolFun) -> tuple[int, int] | None:
    """If f(x1,x2+1)+f(x1,x2) = tr(lam x1) + nu for all x1, return (lam, nu)."""
    ctx = f.domain.ctx
    half = ctx.order
    diff = f.table[:half] ^ f.table[half:]
    nu = int(diff[0])
    lin = diff ^ nu
    # tr(lam . ) has bit pattern dual_index_table()[lam] on the basis points;
    # invert that bijection from the basis values, then verify everywhere.
    mask = 0
    for j in range(ctx.degree):
        if lin[1 << j]:
            mask |= 1 << j
    dual = ctx.dual_index_table()
    lam_candidates = np.nonzero(dual == mask)[0]
    if len(lam_candidates) != 1:
        return None
    lam = int(lam_candidates[0])
    tr1 = ctx.trace_table(1)
    if np.array_equal(tr1[ctx.mul_table(lam)], lin.astype(np.int64)):
        return lam, nu
    return None


# -- certifiers --------------------------------------------------------------------


def _first_failure(n_cases: int, eval_batch, batch: int, threads: int) -> int:
    """Smallest failing case index over [0, n_cases), or -1.

    eval_batch(start, stop) returns a local failing offset or -1.  Batches are
    independent, so the scan parallelizes; the min-reduction keeps the result
    (and hence any witness) deterministic regardless of schedule.
    """
    starts = list(range(0, n_cases, batch))
    if threads <= 1 or len(starts) <= 1:
        for s in starts:
            bad = eval_batch(s, min(s + batch, n_cases))
            if bad >= 0:
                return s + bad
        return -1
    failures = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = pool.map(
            lambda s: (s, eval_batch(s, min(s + batch, n_cases))), starts
        )
        for s, bad in results:
            if bad >= 0:
                failures.append(s + bad)
    return min(failures) if failures else -1


def _batched_bent_scan(sign_rows: np.ndarray, n_vars: int) -> int:
    """Return index of first non-bent row, or -1 if all rows are bent."""
    w = bf.walsh_many(sign_rows)
    peak = 1 << (n_vars // 2)
    ok = np.all(np.abs(w) == peak, axis=1)
    bad = np.nonzero(~ok)[0]
    return int(bad[0]) if len(bad) else -1


def is_cyclic_bent_full(f: BoolFun, force: bool = False, threads: int = 1) -> CyclicCertificate:
    """Exhaustive check of f(a x1, x2) + f(b x1, x2+eps) over all ordered a != b, eps."""
    ctx = f.domain.ctx
    m = f.n_vars
    if m % 2 != 0:
        raise ValueError("cyclic bent functions need an even number of variables")
    if m > FULL_MODE_MAX_M and not force:
        raise ValueError(
            f"full certification is O(4^m) Walsh transforms; m={m} exceeds the "
            f"default cap {FULL_MODE_MAX_M} (pass force=True to override)"
        )
    q = ctx.order
    tables = [bf.scale_compose(f, a, 0).table for a in range(q)]
    half = q
    flip = np.concatenate([np.arange(half, 2 * half), np.arange(half)])
    cases = [(a, b, eps) for a in range(q) for b in range(q) if a != b for eps in (0, 1)]

    def eval_batch(start: int, stop: int) -> int:
        chunk = cases[start:stop]
        rows = np.empty((len(chunk), 2 * q), dtype=np.int64)
        for i, (a, b, eps) in enumerate(chunk):
            tb = tables[b] if eps == 0 else tables[b][flip]
            rows[i] = 1 - 2 * (tables[a] ^ tb).astype(np.int64)
        return _batched_bent_scan(rows, m)

    batch = max(1, (1 << 22) // (2 * q))
    bad = _first_failure(len(cases), eval_batch, batch, threads)
    if bad >= 0:
        return CyclicCertificate("bent", "full", False, bad, cases[bad])
    return CyclicCertificate("bent", "full", True, len(cases))


def is_cyclic_bent_reduced(f: BoolFun) -> CyclicCertificate:
    """Certify via the affine-difference criterion: f bent and f + f(b.) bent
    for all b outside GF(2).

    Raises AffineDifferenceError when f(x1,x2+1)+f(x1,x2) is not of the form
    tr(lam x1) + nu, in which case the reduction does not apply.
    """
    ctx = f.domain.ctx
    m = f.n_vars
    if m % 2 != 0:
        raise ValueError("cyclic bent functions need an even number of variables")
    if m > REDUCED_MODE_MAX_M:
        raise ValueError(f"reduced certification capped at m <= {REDUCED_MODE_MAX_M}")
    if affine_bit_difference(f) is None:
        raise AffineDifferenceError(
            "f(x1,x2+1)+f(x1,x2) is not tr(lam x1) + nu; reduced certification "
            "does not apply"
        )
    if not bf.is_bent(f):
        # f + f(0 x1, x2) is EA-equivalent to f, so (a, b) = (1, 0) witnesses it
        return CyclicCertificate("bent", "reduced", False, 0, (1, 0, 0))
    q = ctx.order
    checked = 1
    sign_f = f.signs()
    rows = np.empty((q - 2, 2 * q), dtype=np.int64)
    for i, b in enumerate(range(2, q)):
        rows[i] = sign_f * bf.scale_compose(f, b, 0).signs()
    bad = _batched_bent_scan(rows, m)
    if bad >= 0:
        return CyclicCertificate("bent", "reduced", False, checked + bad, (1, bad + 2, 0))
    return CyclicCertificate("bent", "reduced", True, checked + q - 2)


def certify_cyclic_bent(f: BoolFun, mode: str = "auto", force: bool = False) -> CyclicCertificate:
    """Dispatch to the reduced certifier when its hypothesis holds, else full."""
    if mode == "reduced":
        return is_cyclic_bent_reduced(f)
    if mode == "full":
        return is_cyclic_bent_full(f, force=force)
    if mode != "auto":
        raise ValueError(f"unknown mode {mode!r}")
    try:
        return is_cyclic_bent_reduced(f)
    except AffineDifferenceError:
        return is_cyclic_bent_full(f, force=force)


def is_cyclic_semibent(g: BoolFun, mode: str = "reduced", threads: int = 1) -> CyclicCertificate:
    """Certify g(ax)+g(bx) semi-bent for all a != b on GF(2^n), n odd.

    reduced mode uses homogeneity: it checks g itself and g + g(c.) for all
    c outside {0, 1}; full mode scans every ordered pair.
    """
    if g.domain.with_bit:
        raise ValueError("cyclic semi-bent functions live on a plain field domain")
    n = g.n_vars
    if n % 2 != 1:
        raise ValueError("cyclic semi-bent functions need an odd number of variables")
    ctx = g.domain.ctx
    q = ctx.order
    peak = 1 << ((n + 1) // 2)

    def rows_semibent(rows: np.ndarray) -> int:
        w = np.abs(bf.walsh_many(rows))
        ok = np.all((w == 0) | (w == peak), axis=1)
        bad = np.nonzero(~ok)[0]
        return int(bad[0]) if len(bad) else -1

    if mode == "reduced":
        if not bf.is_semibent(g):
            return CyclicCertificate("semi-bent", "reduced", False, 0, (1, 0))
        sign_g = g.signs()
        rows = np.empty((q - 2, q), dtype=np.int64)
        for i, c in enumerate(range(2, q)):
            rows[i] = sign_g * bf.scale_field(g, c).signs()
        bad = rows_semibent(rows)
        if bad >= 0:
            return CyclicCertificate("semi-bent", "reduced", False, 1 + bad, (1, bad + 2))
        return CyclicCertificate("semi-bent", "reduced", True, q - 1)

    if mode != "full":
        raise ValueError(f"unknown mode {mode!r}")
    tables = [bf.scale_field(g, a).table for a in range(q)]
    cases = [(a, b) for a in range(q) for b in range(q) if a != b]

    def eval_batch(start: int, stop: int) -> int:
        chunk = cases[start:stop]
        rows = np.empty((len(chunk), q), dtype=np.int64)
        for i, (a, b) in enumerate(chunk):
            rows[i] = 1 - 2 * (tables[a] ^ tables[b]).astype(np.int64)
        return rows_semibent(rows)

    bad = _first_failure(len(cases), eval_batch, max(1, (1 << 22) // q), threads)
    if bad >= 0:
        return CyclicCertificate("semi-bent", "full", False, bad, cases[bad])
    return CyclicCertificate("semi-bent", "full", True, len(cases))


# -- derived families ---------------------------------------------------------------


def bent_family(f: BoolFun, eps: list[int] | np.ndarray) -> list[BoolFun]:
    """{ f(a x1, x2 + eps_a) : a in GF(2^{m-1})* }: 2^{m-1}-1 bent functions whose
    pairwise sums are bent (f must be cyclic bent).

    eps is indexed by a - 1 for a = 1 .. 2^{m-1}-1.
    """
    q = f.domain.ctx.order
    if len(eps) != q - 1:
        raise ValueError(f"eps vector must have length {q - 1}")
    return [bf.scale_compose(f, a, int(eps[a - 1])) for a in range(1, q)]


def derive_semibent(f: BoolFun, eps: int) -> BoolFun:
    """Restriction x1 -> f(x1, eps): cyclic semi-bent when f is cyclic bent."""
    return bf.restrict(f, eps)


def semibent_family(f: BoolFun, eps: list[int] | np.ndarray) -> list[BoolFun]:
    """{ x1 -> f(a x1, eps_a) : a in GF(2^{m-1})* }: semi-bent functions with
    semi-bent pairwise sums (f cyclic bent)."""
    q = f.domain.ctx.order
    if len(eps) != q - 1:
        raise ValueError(f"eps vector must have length {q - 1}")
    return [bf.restrict(bf.scale_compose(f, a, 0), int(eps[a - 1])) for a in range(1, q)]
