"""Linearized polynomials, adjoints, skew-polynomial gcrd, and the
gcrd characterization of quadratic cyclic semi-bent functions.

A linearized polynomial L(x) = sum a_i x^{2^i} over GF(2^m) is stored as its
coefficient tuple (a_0, ..., a_{m-1}).  Its associated polynomial
l(x) = sum a_i x^i lives in the twisted (skew) ring GF(2^m)[x; Frobenius]
with the multiplication rule x * a = a^2 * x, i.e.
(a x^i)(b x^j) = a b^{2^i} x^{i+j}; composition of linearized maps matches
multiplication of associated polynomials under this twist.  Division here
is right division, and gcrd is the greatest common RIGHT divisor computed
by the right Euclidean algorithm.

The two routes to kernel dimensions - GF(2)-matrix rank and
deg gcrd(l, x^m - 1) - are both first class; tests force their agreement.
"""

from __future__ import annotations

from dataclasses import dataclass

from cyclicbent import boolfun as bf
from cyclicbent.boolfun import BoolFun, Domain
from cyclicbent.gf2 import GF2m


@dataclass(frozen=True)
class LinPoly:
    """L(x) = sum_{i<m} coeffs[i] * x^{2^i} over GF(2^m)."""

    ctx: GF2m
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.degree:
            raise ValueError("need exactly m coefficients")
        if any(not 0 <= c < self.ctx.order for c in self.coeffs):
            raise ValueError("coefficient out of range")

    @staticmethod
    def from_dict(ctx: GF2m, terms: dict[int, int]) -> "LinPoly":
        coeffs = [0] * ctx.degree
        for i, c in terms.items():
            coeffs[i % ctx.degree] ^= c
        return LinPoly(ctx, tuple(coeffs))

    def evaluate(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        y = x
        for c in self.coeffs:
            if c:
                acc ^= ctx.mul(c, y)
            y = ctx.sqr(y)
        return acc

    def add(self, other: "LinPoly") -> "LinPoly":
        if other.ctx != self.ctx:
            raise ValueError("context mismatch")
        return LinPoly(self.ctx, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_json_obj(self) -> dict:
        return {"m": self.ctx.degree, "coeffs": list(self.coeffs)}


def adjoint(L: LinPoly) -> LinPoly:
    """The unique L* with tr(x L(y)) = tr(y L*(x)): a_0 x + sum a_{m-i}^{2^i} x^{2^i}."""
    ctx = L.ctx
    m = ctx.degree
    a = L.coeffs
    out = [a[0]]
    for i in range(1, m):
        out.append(ctx.frobenius(a[m - i], i))
    return LinPoly(ctx, tuple(out))


def kernel_dim(L: LinPoly) -> int:
    """dim over GF(2) of ker L, via the rank of L's matrix in the polynomial basis."""
    ctx = L.ctx
    m = ctx.degree
    rows = [L.evaluate(1 << j) for j in range(m)]  # images of basis vectors
    rank = 0
    for col in range(m):
        piv = None
        for r in range(rank, m):
            if (rows[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(m):
            if r != rank and (rows[r] >> col) & 1:
                rows[r] ^= rows[rank]
        rank += 1
    return m - rank


def quad_form(L: LinPoly) -> BoolFun:
    """The Boolean function q(x) = tr(x L(x)) on GF(2^m)."""
    ctx = L.ctx
    return bf.from_field_fn(ctx, lambda x: ctx.trace(ctx.mul(x, L.evaluate(x))))


def phi_l_tau(L: LinPoly, tau: int) -> LinPoly:
    """phi_{L,tau}(x) = (L+L*)(x) + tau (L+L*)(tau x), for tau outside GF(2).

    Coefficientwise this is (a_i + a_{m-i}^{2^i}) (1 + tau^{2^i+1}) on x^{2^i}
    for i >= 1, with zero constant-level coefficient.
    """
    ctx = L.ctx
    if tau in (0, 1):
        raise ValueError("tau must lie outside GF(2)")
    m = ctx.degree
    a = L.coeffs
    out = [0]
    for i in range(1, m):
        ci = a[i] ^ ctx.frobenius(a[m - i], i)
        out.append(ctx.mul(ci, 1 ^ ctx.pow(tau, (1 << i) + 1)))
    return LinPoly(ctx, tuple(out))


# -- skew polynomials ---------------------------------------------------------------


@dataclass(frozen=True)
class SkewPoly:
    """Polynomial in the twisted ring GF(2^m)[x; x -> x^2], low-degree first.

    Invariant: the stored leading coefficient is nonzero (empty tuple = zero).
    """

    ctx: GF2m
    coeffs: tuple[int, ...]

    @staticmethod
    def make(ctx: GF2m, coeffs) -> "SkewPoly":
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return SkewPoly(ctx, tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "SkewPoly":
        """Left-scale by the inverse of the leading coefficient."""
        if self.is_zero():
            return self
        inv = self.ctx.inv(self.coeffs[-1])
        return SkewPoly.make(self.ctx, [self.ctx.mul(inv, c) for c in self.coeffs])

    def mul(self, other: "SkewPoly") -> "SkewPoly":
        """(a x^i)(b x^j) = a b^{2^i} x^{i+j}."""
        if self.is_zero() or other.is_zero():
            return SkewPoly(self.ctx, ())
        ctx = self.ctx
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                out[i + j] ^= ctx.mul(a, ctx.frobenius(b, i))
        return SkewPoly.make(ctx, out)


def assoc(L: LinPoly) -> SkewPoly:
    """Associated skew polynomial of a linearized polynomial: a_i x^{2^i} -> a_i x^i."""
    return SkewPoly.make(L.ctx, L.coeffs)


def x_pow_m_minus_1(ctx: GF2m) -> SkewPoly:
    """x^m - 1 (= x^m + 1 in characteristic 2); its linearized mate is x^{2^m} + x."""
    return SkewPoly.make(ctx, [1] + [0] * (ctx.degree - 1) + [1])


def rdivmod(a: SkewPoly, b: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Right division: a = q * b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("skew division by the zero polynomial")
    ctx = a.ctx
    r = list(a.coeffs)
    db = b.degree
    lead = b.coeffs[-1]
    q = [0] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        # (qk x^k)(lead x^db) = qk lead^{2^k} x^{deg r}
        qk = ctx.div(r[-1], ctx.frobenius(lead, k))
        q[k] = qk
        for j, bc in enumerate(b.coeffs):
            if bc:
                r[k + j] ^= ctx.mul(qk, ctx.frobenius(bc, k))
        while r and r[-1] == 0:
            r.pop()
    return SkewPoly.make(ctx, q), SkewPoly.make(ctx, r)


def skew_gcrd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    """Greatest common right divisor via the right Euclidean algorithm, monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcrd of two zero polynomials")
    while not b.is_zero():
        _, r = rdivmod(a, b)
        a, b = b, r
    return a.monic()


# -- the characterization -----------------------------------------------------------


def gcrd_kernel_dim(L: LinPoly) -> int:
    """dim ker L computed as deg gcrd(assoc(L), x^m - 1)."""
    if L.is_zero():
        return L.ctx.degree
    return skew_gcrd(assoc(L), x_pow_m_minus_1(L.ctx)).degree


def is_cyclic_semibent_quadratic(L: LinPoly, path: str = "gcrd") -> tuple[bool, dict]:
    """Decide whether q(x) = tr(x L(x)) is cyclic semi-bent (m odd).

    Condition (1): deg gcrd(l + l*, x^m - 1) = 1.
    Condition (2): deg gcrd(phi_{l,tau}, x^m - 1) = 1 for every tau outside GF(2).
    path 'rank' replaces each gcrd degree with the GF(2) kernel dimension of
    the matching linearized polynomial; the two must agree everywhere.
    """
    ctx = L.ctx
    m = ctx.degree
    if m % 2 == 0:
        raise ValueError("the characterization needs odd m")
    if path not in ("gcrd", "rank"):
        raise ValueError(f"unknown path {path!r}")

    def dim_of(lp: LinPoly) -> int:
        return gcrd_kernel_dim(lp) if path == "gcrd" else kernel_dim(lp)

    base = L.add(adjoint(L))
    d0 = dim_of(base)
    report = {"path": path, "base_dim": d0, "tau_failures": []}
    ok = d0 == 1
    if ok:
        for tau in range(2, ctx.order):
            d = dim_of(phi_l_tau(L, tau))
            if d != 1:
                report["tau_failures"].append((tau, d))
                ok = False
                break
    report["verdict"] = ok
    return ok, report
