"""Exact codebooks and mutually unbiased bases from certified functions.

All vectors are stored unnormalized as Gaussian integers with entries in
{-1, 0, 1} x {-1, 0, 1} plus a per-row squared norm, so the true unit
vector is row / sqrt(norm_sq).  Inner products, correlation maxima and the
Levenshtein bounds are exact (integers and fractions); floats only appear
in CSV report output (12 significant digits).

Row ordering is fixed for reproducible serialization: the standard basis
first, then the character basis (a = 0), then the function bases in field
index order; within a basis, dual labels in canonical index order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from cyclicbent import boolfun as bf
from cyclicbent import construct as cn
from cyclicbent.boolfun import BoolFun


def levenshtein_real_sq(n_rows: int, k: int) -> Fraction:
    """Squared real Levenshtein bound (3N - K^2 - 2K) / ((N-K)(K+2)).

    Applicable only for N > K(K+1)/2.
    """
    if not n_rows > k * (k + 1) // 2:
        raise ValueError("real bound needs N > K(K+1)/2")
    return Fraction(3 * n_rows - k * k - 2 * k, (n_rows - k) * (k + 2))


def levenshtein_complex_sq(n_rows: int, k: int) -> Fraction:
    """Squared complex Levenshtein bound (2N - K^2 - K) / ((N-K)(K+1)).

    Applicable only for N > K^2.
    """
    if not n_rows > k * k:
        raise ValueError("complex bound needs N > K^2")
    return Fraction(2 * n_rows - k * k - k, (n_rows - k) * (k + 1))


@dataclass
class Codebook:
    """N unnormalized Gaussian-integer rows of length K with per-row norms."""

    re: np.ndarray  # int8 (N, K)
    im: np.ndarray  # int8 (N, K)
    norm_sq: np.ndarray  # int64 (N,)

    @property
    def n_rows(self) -> int:
        return self.re.shape[0]

    @property
    def length(self) -> int:
        return self.re.shape[1]

    def is_real(self) -> bool:
        return not self.im.any()

    def alphabet(self) -> set:
        """Distinct normalized entry values, as canonical (re, im, norm) keys.

        Zero entries compare equal across rows regardless of the row norm.
        """
        keys = set()
        for norm in np.unique(self.norm_sq):
            rows = self.norm_sq == norm
            pairs = np.unique(
                np.stack(
                    [self.re[rows].reshape(-1), self.im[rows].reshape(-1)], axis=1
                ),
                axis=0,
            )
            for a, b in pairs:
                keys.add((0, 0, 1) if a == 0 and b == 0 else (int(a), int(b), int(norm)))
        return keys

    @property
    def alphabet_size(self) -> int:
        return len(self.alphabet())

    def to_json_obj(self) -> dict:
        return {
            "n_rows": self.n_rows,
            "length": self.length,
            "norm_sq": [int(v) for v in self.norm_sq],
            "rows_re": self.re.tolist(),
            "rows_im": self.im.tolist(),
        }

    def write_csv(self, path: str) -> None:
        """Normalized float entries, 12 significant digits; complex as a+bj."""
        with open(path, "w") as fh:
            for i in range(self.n_rows):
                scale = 1.0 / float(np.sqrt(float(self.norm_sq[i])))
                cells = []
                for j in range(self.length):
                    a = float(self.re[i, j]) * scale
                    b = float(self.im[i, j]) * scale
                    cells.append(f"{a:.12g}" if b == 0 else f"{a:.12g}{b:+.12g}j")
                fh.write(",".join(cells) + "\n")


def _gram(cb1_re, cb1_im, cb2_re, cb2_im):
    """Exact Gaussian-integer Gram of rows1 against conj(rows2)."""
    a1 = cb1_re.astype(np.int64)
    b1 = cb1_im.astype(np.int64)
    a2 = cb2_re.astype(np.int64)
    b2 = cb2_im.astype(np.int64)
    gre = a1 @ a2.T + b1 @ b2.T
    gim = b1 @ a2.T - a1 @ b2.T
    return gre, gim


def imax_sq(cb: Codebook, block: int = 1024, threads: int = 1) -> Fraction:
    """Max over row pairs i < j of |<c_i, c_j>|^2 as an exact fraction.

    The block scan parallelizes over row-pair tiles; the max reduction is
    order independent, so the result is deterministic for any thread count.
    """
    if cb.n_rows < 2:
        raise ValueError("need at least two rows")
    n = cb.n_rows
    tiles = [
        (i0, j0)
        for i0 in range(0, n, block)
        for j0 in range(i0, n, block)
    ]

    def tile_best(tile) -> Fraction:
        i0, j0 = tile
        i1, j1 = min(i0 + block, n), min(j0 + block, n)
        gre, gim = _gram(cb.re[i0:i1], cb.im[i0:i1], cb.re[j0:j1], cb.im[j0:j1])
        mag = gre * gre + gim * gim
        ii = np.arange(i0, i1)[:, None]
        jj = np.arange(j0, j1)[None, :]
        mask = ii < jj
        best = Fraction(0)
        if not mask.any():
            return best
        norms = cb.norm_sq[i0:i1][:, None] * cb.norm_sq[j0:j1][None, :]
        for nval in np.unique(norms[mask]):
            sel = mask & (norms == nval)
            cand = Fraction(int(mag[sel].max()), int(nval))
            if cand > best:
                best = cand
        return best

    if threads > 1 and len(tiles) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return max(pool.map(tile_best, tiles))
    return max(map(tile_best, tiles))


def _char_sign_matrix(domain) -> np.ndarray:
    """S[dual index, point index] = (-1)^{<(lam,nu),(x1,x2)>}, int8."""
    ctx = domain.ctx
    q = ctx.order
    tr1 = ctx.trace_table(1)
    lam_x = np.empty((q, q), dtype=np.int8)
    for lam in range(q):
        lam_x[lam] = tr1[ctx.mul_table(lam)].astype(np.int8)
    if not domain.with_bit:
        return (1 - 2 * lam_x).astype(np.int8)
    size = 2 * q
    s = np.empty((size, size), dtype=np.int8)
    for nu in (0, 1):
        for x2 in (0, 1):
            blk = lam_x ^ (nu & x2)
            s[nu * q : (nu + 1) * q, x2 * q : (x2 + 1) * q] = 1 - 2 * blk
    return s


def _require_cyclic_bent(f: BoolFun, cert: cn.CyclicCertificate | None):
    if cert is None:
        cert = cn.certify_cyclic_bent(f)
    if not (cert.kind == "bent" and cert.passed):
        raise ValueError("f is not certified cyclic bent")
    return cert


def _require_cyclic_semibent(g: BoolFun, cert: cn.CyclicCertificate | None):
    if cert is None:
        cert = cn.is_cyclic_semibent(g, "reduced")
    if not (cert.kind == "semi-bent" and cert.passed):
        raise ValueError("g is not certified cyclic semi-bent")
    return cert


def build_real_codebook(
    f: BoolFun, eps=None, cert: cn.CyclicCertificate | None = None
) -> Codebook:
    """The (2^{2m-1} + 2^m, 2^m) real codebook from a cyclic bent function.

    Rows: standard basis, the characters (-1)^{tr(lam x1) + nu x2}, and for
    each a != 0 the rows (-1)^{f(a x1, x2 + eps_a) + tr(lam x1) + nu x2}.
    """
    _require_cyclic_bent(f, cert)
    dom = f.domain
    q = dom.ctx.order
    size = dom.size  # 2^m
    if eps is None:
        eps = [0] * (q - 1)
    if len(eps) != q - 1:
        raise ValueError(f"eps vector must have length {q - 1}")
    chars = _char_sign_matrix(dom)
    blocks = [np.eye(size, dtype=np.int8), chars]
    for a in range(1, q):
        fa = bf.scale_compose(f, a, int(eps[a - 1]))
        blocks.append((chars * fa.signs().astype(np.int8)[None, :]).astype(np.int8))
    re = np.concatenate(blocks, axis=0)
    im = np.zeros_like(re)
    norm = np.full(re.shape[0], size, dtype=np.int64)
    norm[:size] = 1
    return Codebook(re, im, norm)


@dataclass
class MubSet:
    """2^{m-1} + 1 orthonormal bases of C^{2^{m-1}}: standard + one per a."""

    k: int
    bases_re: list  # [K x K int8], index 0 = standard basis, then a = 0, 1, ...
    bases_im: list
    norms: list  # per-basis squared norm of every vector

    @property
    def n_bases(self) -> int:
        return len(self.bases_re)

    def to_json_obj(self) -> dict:
        return {
            "k": self.k,
            "bases": [
                {
                    "norm_sq": int(self.norms[i]),
                    "re": self.bases_re[i].tolist(),
                    "im": self.bases_im[i].tolist(),
                }
                for i in range(self.n_bases)
            ],
        }


def quaternary_entry_arrays(f: BoolFun, a: int):
    """A(a, x) = rho0 (-1)^{f(ax,0)} + rho1 (-1)^{f(ax,1)} in {1, -1, i, -i}.

    Returns (re, im) int8 vectors over x.
    """
    fa = bf.scale_compose(f, a, 0)
    q = f.domain.ctx.order
    f0 = fa.table[:q].astype(np.int8)
    f1 = fa.table[q:].astype(np.int8)
    d = f0 ^ f1
    sign = (1 - 2 * f0).astype(np.int8)
    return (sign * (1 - d)).astype(np.int8), (sign * d).astype(np.int8)


def build_mub(f: BoolFun, cert: cn.CyclicCertificate | None = None) -> MubSet:
    """Complete set of 2^{m-1} + 1 MUBs of C^{2^{m-1}} from a cyclic bent f."""
    _require_cyclic_bent(f, cert)
    ctx = f.domain.ctx
    k = ctx.order
    tr1 = ctx.trace_table(1)
    lam_signs = np.empty((k, k), dtype=np.int8)
    for lam in range(k):
        lam_signs[lam] = (1 - 2 * tr1[ctx.mul_table(lam)]).astype(np.int8)
    bases_re = [np.eye(k, dtype=np.int8)]
    bases_im = [np.zeros((k, k), dtype=np.int8)]
    norms = [1]
    for a in range(k):
        are, aim = quaternary_entry_arrays(f, a)
        bases_re.append((lam_signs * are[None, :]).astype(np.int8))
        bases_im.append((lam_signs * aim[None, :]).astype(np.int8))
        norms.append(k)
    return MubSet(k, bases_re, bases_im, norms)


def verify_mub(mubs: MubSet) -> dict:
    """Exact orthonormality and unbiasedness checks over every basis pair.

    Unnormalized |<v, v'>|^2 must be: norm_sq^2 on the self-Gram diagonal, 0
    off it, K between two function bases, and 1 between the standard basis
    and a function basis (norm product K, so normalized 1/K throughout).
    """
    k = mubs.k
    orthonormal = True
    unbiased = True
    for i in range(mubs.n_bases):
        gre, gim = _gram(
            mubs.bases_re[i], mubs.bases_im[i], mubs.bases_re[i], mubs.bases_im[i]
        )
        mag = gre * gre + gim * gim
        diag_ok = np.all(np.diag(gre) == mubs.norms[i]) and np.all(np.diag(gim) == 0)
        off = mag - np.diag(np.diag(mag))
        orthonormal = orthonormal and bool(diag_ok and not off.any())
    for i in range(mubs.n_bases):
        for j in range(i + 1, mubs.n_bases):
            gre, gim = _gram(
                mubs.bases_re[i], mubs.bases_im[i], mubs.bases_re[j], mubs.bases_im[j]
            )
            mag = gre * gre + gim * gim
            expected = 1 if (mubs.norms[i] == 1 or mubs.norms[j] == 1) else k
            unbiased = unbiased and bool(np.all(mag == expected))
    return {
        "bases": mubs.n_bases,
        "complete": mubs.n_bases == k + 1,
        "orthonormal": orthonormal,
        "unbiased": unbiased,
    }


def mub_gram_via_walsh(f: BoolFun, a: int, a2: int):
    """Cross-basis Gram by the Walsh route: 2 <r, r'> = W_{f0}(lam+lam', 0)
    + i W_{f1}(lam+lam', 1) with f0 = f(ax,.)+f(a'x,.) and
    f1 = f(ax,.)+f(a'x,.+1).

    Returns exact (re, im) int64 matrices indexed by (lam, lam') for the
    unnormalized rows; every division by 2 is checked exact.
    """
    if a == a2:
        raise ValueError("walsh route is for distinct bases")
    f0 = bf.xor(bf.scale_compose(f, a, 0), bf.scale_compose(f, a2, 0))
    f1 = bf.xor(bf.scale_compose(f, a, 0), bf.scale_compose(f, a2, 1))
    w0 = bf.walsh(f0)
    w1 = bf.walsh(f1)
    k = f.domain.ctx.order
    lam = np.arange(k)
    mix = lam[:, None] ^ lam[None, :]
    re2 = w0.values[mix]  # W at (lam+lam', nu=0)
    im2 = w1.values[mix + k]  # W at (lam+lam', nu=1)
    if (re2 % 2).any() or (im2 % 2).any():
        raise AssertionError("walsh-route inner products must be even integers")
    return re2 // 2, im2 // 2


def mub_to_codebook(mubs: MubSet) -> Codebook:
    """Stack every MUB vector into a (2^{2(m-1)} + 2^{m-1}, 2^{m-1}) codebook."""
    re = np.concatenate(mubs.bases_re, axis=0)
    im = np.concatenate(mubs.bases_im, axis=0)
    norm = np.concatenate(
        [np.full(mubs.k, n, dtype=np.int64) for n in mubs.norms]
    )
    return Codebook(re, im, norm)


def build_semibent_codebook(
    g: BoolFun, cert: cn.CyclicCertificate | None = None
) -> Codebook:
    """The (2^{2n} + 2^n, 2^n) real codebook from a cyclic semi-bent g (n odd).

    Its exact squared maximum crosscorrelation is 2^{1-n} (the semi-bent
    Walsh peak 2^{(n+1)/2} scaled by 2^{-n}, squared), which only *almost*
    meets the real Levenshtein bound.
    """
    _require_cyclic_semibent(g, cert)
    dom = g.domain
    q = dom.ctx.order
    chars = _char_sign_matrix(dom)
    blocks = [np.eye(q, dtype=np.int8), chars]
    for a in range(1, q):
        ga = bf.scale_field(g, a)
        blocks.append((chars * ga.signs().astype(np.int8)[None, :]).astype(np.int8))
    re = np.concatenate(blocks, axis=0)
    im = np.zeros_like(re)
    norm = np.full(re.shape[0], q, dtype=np.int64)
    norm[:q] = 1
    return Codebook(re, im, norm)


def optimality_report(cb: Codebook, kind: str, threads: int = 1) -> dict:
    """Compare imax_sq against the applicable Levenshtein bound, exactly."""
    actual = imax_sq(cb, threads=threads)
    if kind == "real":
        bound = levenshtein_real_sq(cb.n_rows, cb.length)
    elif kind == "complex":
        bound = levenshtein_complex_sq(cb.n_rows, cb.length)
    else:
        raise ValueError(f"unknown bound kind {kind!r}")
    return {
        "n_rows": cb.n_rows,
        "length": cb.length,
        "alphabet_size": cb.alphabet_size,
        "imax_sq": str(actual),
        "imax_sq_float": float(actual),
        "bound_sq": str(bound),
        "bound_sq_float": float(bound),
        "optimal": actual == bound,
        "ratio_sq": str(actual / bound),
    }
