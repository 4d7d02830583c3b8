"""Nonlinear binary codes from certified functions, their exact weight and
distance distributions, and support t-design verification.

Codewords are bit vectors of length v <= 64 packed into single uint64
words; the full pairwise distance scan and the design coverage counts are
exhaustive (no sampling), which is feasible for every size this package
certifies (v = 2^m with m <= 6, v = 2^n with n <= 5).

Design checking is direct: every t-subset's coverage is counted and
compared; nothing is inferred from general design-theoretic results.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from cyclicbent import boolfun as bf
from cyclicbent import construct as cn
from cyclicbent.boolfun import BoolFun

MAX_LENGTH = 64


@dataclass
class NonlinearCode:
    """M distinct codewords of length v, packed as uint64 bit masks."""

    length: int
    words: np.ndarray  # uint64 (M,)
    labels: list[tuple]

    @property
    def size(self) -> int:
        return len(self.words)

    def weight_of(self, i: int) -> int:
        return int(np.bitwise_count(self.words[i : i + 1])[0])

    def is_linear(self) -> bool:
        """Closure of the word set under XOR (0 must be a codeword)."""
        ws = set(int(w) for w in self.words)
        if 0 not in ws:
            return False
        lst = sorted(ws)
        return all((a ^ b) in ws for i, a in enumerate(lst) for b in lst[i:])

    def is_self_complementary(self) -> bool:
        full = (1 << self.length) - 1
        ws = set(int(w) for w in self.words)
        return all((w ^ full) in ws for w in ws)

    def to_json_obj(self) -> dict:
        width = (self.length + 3) // 4
        return {
            "length": self.length,
            "size": self.size,
            "words_hex": [format(int(w), f"0{width}x") for w in self.words],
        }


@dataclass
class DistributionReport:
    """Weight distribution A_i and distance distribution B_i.

    B_i = (1/M) #{(c, c'): d(c, c') = i} over ordered pairs; the division is
    checked exact, so entries are integers.
    """

    weight: dict[int, int]
    distance: dict[int, int]

    def min_distance(self) -> int:
        return min(i for i in self.distance if i > 0)


@dataclass
class DesignResult:
    t: int
    v: int
    k: int
    blocks: int
    lam: int | None  # None exactly when the coverage is not constant
    witness: tuple | None = None  # (t-subset, coverage, expected)

    @property
    def passed(self) -> bool:
        return self.lam is not None

    def to_json_obj(self) -> dict:
        return {
            "t": self.t,
            "v": self.v,
            "k": self.k,
            "b": self.blocks,
            "lambda": self.lam,
            "witness": list(self.witness[0]) if self.witness else None,
        }


def _pack_table(bits: np.ndarray) -> int:
    word = 0
    for i, b in enumerate(bits):
        if b:
            word |= 1 << i
    return word


def build_code_f(f: BoolFun, cert: cn.CyclicCertificate | None = None) -> NonlinearCode:
    """C(f): codewords (f(a x1, x2) + tr(lam x1) + u x2 + v) over all labels
    (a, lam, u, v); a (2^m, 2^{2m}) code when f is cyclic bent and normalized.
    """
    if not cn.is_normalized(f):
        raise ValueError("build_code_f needs f(0,0) = f(0,1) = 0")
    if cert is None:
        cert = cn.certify_cyclic_bent(f)
    if not (cert.passed and cert.kind == "bent"):
        raise ValueError("f is not certified cyclic bent")
    ctx = f.domain.ctx
    q = ctx.order
    size = f.domain.size
    if size > MAX_LENGTH:
        raise ValueError(f"code length {size} exceeds the packed-word cap {MAX_LENGTH}")
    tr1 = ctx.trace_table(1)
    lam_words = [_pack_table(np.concatenate([tr1[ctx.mul_table(l)]] * 2)) for l in range(q)]
    x2_word = _pack_table(np.concatenate([np.zeros(q, np.int64), np.ones(q, np.int64)]))
    full = (1 << size) - 1
    words = np.empty(q * q * 4, dtype=np.uint64)
    labels = []
    i = 0
    for a in range(q):
        base = _pack_table(bf.scale_compose(f, a, 0).table)
        for lam in range(q):
            bl = base ^ lam_words[lam]
            for u in (0, 1):
                blu = bl ^ (x2_word if u else 0)
                for v in (0, 1):
                    words[i] = blu ^ (full if v else 0)
                    labels.append((a, lam, u, v))
                    i += 1
    code = NonlinearCode(size, words, labels)
    if len(set(int(w) for w in words)) != len(words):
        raise AssertionError("codewords are not distinct")
    return code


def build_code_g(g: BoolFun, cert: cn.CyclicCertificate | None = None) -> NonlinearCode:
    """C(g): codewords (g(a x) + tr(lam x) + u) over labels (a, lam, u);
    a (2^n, 2^{2n+1}) code when g is cyclic semi-bent with g(0) = 0."""
    if int(g.table[0]) != 0:
        raise ValueError("build_code_g needs g(0) = 0")
    if cert is None:
        cert = cn.is_cyclic_semibent(g, "reduced")
    if not (cert.passed and cert.kind == "semi-bent"):
        raise ValueError("g is not certified cyclic semi-bent")
    ctx = g.domain.ctx
    q = ctx.order
    if q > MAX_LENGTH:
        raise ValueError(f"code length {q} exceeds the packed-word cap {MAX_LENGTH}")
    tr1 = ctx.trace_table(1)
    lam_words = [_pack_table(tr1[ctx.mul_table(l)]) for l in range(q)]
    full = (1 << q) - 1
    words = np.empty(q * q * 2, dtype=np.uint64)
    labels = []
    i = 0
    for a in range(q):
        base = _pack_table(bf.scale_field(g, a).table)
        for lam in range(q):
            bl = base ^ lam_words[lam]
            for u in (0, 1):
                words[i] = bl ^ (full if u else 0)
                labels.append((a, lam, u))
                i += 1
    code = NonlinearCode(q, words, labels)
    if len(set(int(w) for w in words)) != len(words):
        raise AssertionError("codewords are not distinct")
    return code


def weight_distance_distributions(code: NonlinearCode) -> DistributionReport:
    """Exact A_i and B_i by popcount scan over all ordered codeword pairs."""
    words = code.words
    m = code.size
    wts = np.bitwise_count(words)
    wvals, wcounts = np.unique(wts, return_counts=True)
    weight = {int(v): int(c) for v, c in zip(wvals, wcounts)}

    pair_counts = np.zeros(code.length + 1, dtype=np.int64)
    block = max(1, (1 << 22) // m)
    for i0 in range(0, m, block):
        x = np.bitwise_xor(words[i0 : i0 + block, None], words[None, :])
        d = np.bitwise_count(x)
        vals, cnts = np.unique(d, return_counts=True)
        for v, c in zip(vals, cnts):
            pair_counts[int(v)] += int(c)
    distance = {}
    for i, c in enumerate(pair_counts):
        if c:
            if c % m:
                raise AssertionError("distance counts must be divisible by M")
            distance[i] = int(c) // m
    return DistributionReport(weight, distance)


def supports_of_weight(code: NonlinearCode, k: int) -> np.ndarray:
    """Deduplicated supports of the weight-k codewords, as a (b, v) bool matrix."""
    wts = np.bitwise_count(code.words)
    sel = np.unique(code.words[wts == k])
    rows = np.zeros((len(sel), code.length), dtype=bool)
    for r, w in enumerate(sel):
        w = int(w)
        for j in range(code.length):
            if (w >> j) & 1:
                rows[r, j] = True
    return rows


def support_design(code: NonlinearCode, k: int, t: int) -> DesignResult:
    """Exhaustive coverage count: is (points, weight-k supports) a t-design?

    Every t-subset of coordinates is counted; the result carries lambda on
    success or the first deviating t-subset as a witness.
    """
    if not 1 <= t <= k:
        raise ValueError("need 1 <= t <= k")
    blocks = supports_of_weight(code, k)
    b = blocks.shape[0]
    if b == 0:
        raise ValueError(f"no codewords of weight {k}")
    v = code.length
    lam = None
    witness = None

    def scan():
        nonlocal lam, witness
        if t == 1:
            cov = blocks.sum(axis=0)
            for p in range(v):
                c = int(cov[p])
                if lam is None:
                    lam = c
                elif c != lam:
                    witness = ((p,), c, lam)
                    return
            return
        for head in combinations(range(v), t - 1):
            mask = blocks[:, head[0]]
            for p in head[1:]:
                mask = mask & blocks[:, p]
            cov = blocks[mask].sum(axis=0)
            for p in range(head[-1] + 1, v):
                c = int(cov[p])
                if lam is None:
                    lam = c
                elif c != lam:
                    witness = (head + (p,), c, lam)
                    return

    scan()
    if witness is not None:
        return DesignResult(t, v, k, b, None, witness)
    # design identity lambda C(v,t) = b C(k,t)
    from math import comb

    if lam * comb(v, t) != b * comb(k, t):
        raise AssertionError("coverage constant but design identity fails")
    return DesignResult(t, v, k, b, lam)
