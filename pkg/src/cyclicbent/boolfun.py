"""Truth-table Boolean functions, the fast Walsh transform, and bent/semi-bent
classification.

Index conventions (fixed across the whole package):

* On a plain field domain GF(2^d), the point x is stored at index int(x)
  (little-endian polynomial-basis bits).
* On a field-times-bit domain GF(2^{m-1}) x GF(2), the point (x1, x2) is
  stored at index x2 * 2^{m-1} + int(x1).
* Walsh spectra are indexed the same way: the value at dual point lam
  (resp. (lam, nu)) uses the inner product tr(lam*x) (resp.
  tr(lam*x1) + nu*x2).

Spectra are exact 64-bit signed integers, safe for n <= 24 variables;
classification is exact membership, no tolerances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from cyclicbent.gf2 import GF2m, mk_field


class WalshClass(Enum):
    BENT = "bent"
    SEMI_BENT = "semi-bent"
    NEITHER = "neither"


@dataclass(frozen=True)
class Domain:
    """Domain of a Boolean function: GF(2^d), optionally crossed with GF(2)."""

    ctx: GF2m
    with_bit: bool = False

    @property
    def n_vars(self) -> int:
        return self.ctx.degree + (1 if self.with_bit else 0)

    @property
    def size(self) -> int:
        return 1 << self.n_vars

    def index(self, x1: int, x2: int = 0) -> int:
        if self.with_bit:
            return (x2 << self.ctx.degree) + x1
        return x1

    def tag(self) -> str:
        return "field_x_bit" if self.with_bit else "field"


@dataclass(frozen=True)
class BoolFun:
    """A Boolean function as a 0/1 truth table over its domain."""

    domain: Domain
    table: np.ndarray  # uint8 array of length domain.size, values in {0, 1}

    def __post_init__(self):
        if self.table.shape != (self.domain.size,):
            raise ValueError("table length does not match domain size")

    @property
    def n_vars(self) -> int:
        return self.domain.n_vars

    def value(self, x1: int, x2: int = 0) -> int:
        return int(self.table[self.domain.index(x1, x2)])

    def signs(self) -> np.ndarray:
        """(-1)^f as an int64 vector."""
        return 1 - 2 * self.table.astype(np.int64)

    def __eq__(self, other):
        return (
            isinstance(other, BoolFun)
            and self.domain == other.domain
            and bool(np.array_equal(self.table, other.table))
        )

    def __hash__(self):
        return hash((self.domain, self.table.tobytes()))

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> str:
        packed = np.packbits(self.table, bitorder="little").tobytes()
        return json.dumps(
            {
                "n": self.n_vars,
                "domain": self.domain.tag(),
                "degree": self.domain.ctx.degree,
                "modulus": self.domain.ctx.modulus,
                "table_hex": packed.hex(),
            }
        )

    @staticmethod
    def from_json(s: str) -> "BoolFun":
        obj = json.loads(s)
        ctx = mk_field(obj["degree"], obj["modulus"])
        dom = Domain(ctx, obj["domain"] == "field_x_bit")
        raw = np.frombuffer(bytes.fromhex(obj["table_hex"]), dtype=np.uint8)
        table = np.unpackbits(raw, bitorder="little")[: dom.size].astype(np.uint8)
        return BoolFun(dom, table)


@dataclass(frozen=True)
class WalshSpectrum:
    domain: Domain
    values: np.ndarray  # int64, indexed like the truth table

    def value_at(self, lam: int, nu: int = 0) -> int:
        return int(self.values[self.domain.index(lam, nu)])

    def distribution(self) -> dict[int, int]:
        vals, counts = np.unique(self.values, return_counts=True)
        return {int(v): int(c) for v, c in zip(vals, counts)}

    def to_json(self) -> str:
        return json.dumps(
            {"values": [int(v) for v in self.values], "class": classify(self).value}
        )


def from_values(domain: Domain, values) -> BoolFun:
    return BoolFun(domain, np.asarray(values, dtype=np.uint8))


def from_field_bit_fn(ctx: GF2m, fn) -> BoolFun:
    """Build a BoolFun on GF(2^d) x GF(2) from a callable fn(x1, x2) -> bit."""
    dom = Domain(ctx, with_bit=True)
    table = np.zeros(dom.size, dtype=np.uint8)
    for x2 in (0, 1):
        for x1 in range(ctx.order):
            table[dom.index(x1, x2)] = fn(x1, x2) & 1
    return BoolFun(dom, table)


def from_field_fn(ctx: GF2m, fn) -> BoolFun:
    dom = Domain(ctx)
    return BoolFun(dom, np.array([fn(x) & 1 for x in range(ctx.order)], dtype=np.uint8))


def wht_inplace(v: np.ndarray) -> np.ndarray:
    """In-place fast Walsh-Hadamard butterfly along the last axis (length 2^n)."""
    n = v.shape[-1]
    h = 1
    while h < n:
        v = v.reshape(v.shape[:-1] + (n // (2 * h), 2, h))
        a = v[..., 0, :].copy()
        b = v[..., 1, :]
        v[..., 0, :] = a + b
        v[..., 1, :] = a - b
        v = v.reshape(v.shape[:-3] + (n,))
        h *= 2
    return v


def _dual_permutation(domain: Domain) -> np.ndarray:
    """P with P[index(lam, nu)] = bit mask realizing <(lam,nu), .> as a bit dot."""
    d = domain.ctx.dual_index_table()
    if not domain.with_bit:
        return d
    half = domain.ctx.order
    return np.concatenate([d, d + half])


def walsh(f: BoolFun) -> WalshSpectrum:
    """Exact Walsh spectrum W(a) = sum_x (-1)^{f(x) + <a,x>}.

    The butterfly computes the spectrum for the plain bit inner product;
    the field inner product tr(lam*x) is obtained by the linear reindexing
    of the dual points given by the trace pairing.
    """
    w = wht_inplace(f.signs())
    return WalshSpectrum(f.domain, w[_dual_permutation(f.domain)])


def walsh_many(signs: np.ndarray) -> np.ndarray:
    """Row-wise Walsh butterfly for a batch of sign vectors (no dual reindex).

    Only the value multiset is meaningful per row; use :func:`walsh` when
    dual indexing matters.
    """
    return wht_inplace(np.array(signs, dtype=np.int64, copy=True))


def classify_values(values: np.ndarray, n_vars: int) -> WalshClass:
    a = np.abs(values)
    if n_vars % 2 == 0 and bool(np.all(a == 1 << (n_vars // 2))):
        return WalshClass.BENT
    if n_vars % 2 == 1:
        peak = 1 << ((n_vars + 1) // 2)
        if bool(np.all((a == 0) | (a == peak))):
            return WalshClass.SEMI_BENT
    return WalshClass.NEITHER


def classify(spec: WalshSpectrum) -> WalshClass:
    return classify_values(spec.values, spec.domain.n_vars)


def is_bent(f: BoolFun) -> bool:
    return classify(walsh(f)) is WalshClass.BENT


def is_semibent(f: BoolFun) -> bool:
    return classify(walsh(f)) is WalshClass.SEMI_BENT


def scale_compose(f: BoolFun, a: int, eps: int = 0) -> BoolFun:
    """The function (x1, x2) -> f(a*x1, x2 + eps) on a field-times-bit domain."""
    if not f.domain.with_bit:
        raise ValueError("scale_compose needs a field-times-bit domain")
    ctx = f.domain.ctx
    perm = ctx.mul_table(a)
    half = ctx.order
    idx = np.empty(2 * half, dtype=np.int64)
    for x2 in (0, 1):
        src_x2 = x2 ^ (eps & 1)
        idx[x2 * half : (x2 + 1) * half] = src_x2 * half + perm
    return BoolFun(f.domain, f.table[idx])


def scale_field(f: BoolFun, a: int) -> BoolFun:
    """The function x -> f(a*x) on a plain field domain."""
    if f.domain.with_bit:
        raise ValueError("scale_field needs a plain field domain")
    return BoolFun(f.domain, f.table[f.domain.ctx.mul_table(a)])


def xor(f: BoolFun, g: BoolFun) -> BoolFun:
    if f.domain != g.domain:
        raise ValueError("domain mismatch in xor")
    return BoolFun(f.domain, f.table ^ g.table)


def xor_const(f: BoolFun, c: int) -> BoolFun:
    return BoolFun(f.domain, f.table ^ (c & 1))


def restrict(f: BoolFun, eps: int) -> BoolFun:
    """Fix x2 = eps, yielding a function on the field part alone."""
    if not f.domain.with_bit:
        raise ValueError("restrict needs a field-times-bit domain")
    half = f.domain.ctx.order
    dom = Domain(f.domain.ctx)
    return BoolFun(dom, f.table[eps * half : (eps + 1) * half].copy())
