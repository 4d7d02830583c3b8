"""Exact arithmetic in binary fields GF(2^d) for 1 <= d <= 24.

Field elements are plain Python ints: the integer is the little-endian
bit pattern of the polynomial-basis coordinates, so 0 and 1 are the field
zero and one, and ``2`` is the class of x (the generator beta of every
default field).  All arithmetic routines live on a :class:`GF2m` context
object that is immutable after construction and safe to share across
threads.

The default modulus for each degree comes from an embedded table of
primitive polynomials.  The table is untrusted: every modulus (default or
user-supplied) is re-verified for irreducibility at construction, and the
generator's multiplicative order is re-verified to be 2^d - 1.

Discrete-log/antilog tables are built for d <= 20; above that, multiply
falls back to carry-less polynomial multiplication plus reduction.
"""

from __future__ import annotations

import numpy as np

MAX_DEGREE = 24
LOG_TABLE_MAX_DEGREE = 20

# Primitive polynomials over GF(2), one per degree; bit i is the x^i coefficient.
DEFAULT_MODULUS = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
    17: 0b100000000000001001,
    18: 0b1000000000010000001,
    19: 0b10000000000000100111,
    20: 0b100000000000000001001,
    21: 0b1000000000000000000101,
    22: 0b10000000000000000000011,
    23: 0b100000000000000000100001,
    24: 0b1000000000000000010000111,
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials given as ints."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    """Reduce polynomial a modulo polynomial m over GF(2)."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_gcd(a: int, b: int) -> int:
    """gcd of two GF(2)[x] polynomials as ints."""
    while b:
        a = poly_mod(a, b)
        a, b = b, a
    return a


def _prime_factors(n: int) -> list[int]:
    fs = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            fs.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        fs.append(n)
    return fs


def is_irreducible(modulus: int, d: int) -> bool:
    """Ben-Or test: x^{2^d} = x mod p and gcd(x^{2^i} - x, p) = 1 for i <= d/2."""
    if modulus.bit_length() != d + 1:
        return False
    x = poly_mod(2, modulus)
    t = x
    for i in range(1, d + 1):
        t = poly_mod(clmul(t, t), modulus)
        if i <= d // 2 and i < d and poly_gcd(t ^ x, modulus) != 1:
            return False
    return t == x


class GF2m:
    """Context for GF(2^d) with a fixed modulus and generator beta = x.

    Attributes:
        degree: the extension degree d.
        modulus: the irreducible modulus polynomial as an int bit pattern.
        order: 2^d.
        generator: the primitive element beta (always the class of x, i.e.
            the int 2, except d = 1 where x reduces to 1).
    """

    def __init__(self, degree: int, modulus: int | None = None):
        if not 1 <= degree <= MAX_DEGREE:
            raise ValueError(f"degree must be in [1, {MAX_DEGREE}], got {degree}")
        if modulus is None:
            modulus = DEFAULT_MODULUS[degree]
        if modulus.bit_length() != degree + 1:
            raise ValueError(
                f"modulus must be monic of degree {degree}, got {bin(modulus)}"
            )
        if not is_irreducible(modulus, degree):
            raise ValueError(f"modulus {bin(modulus)} is reducible over GF(2)")
        self.degree = degree
        self.modulus = modulus
        self.order = 1 << degree
        self.generator = poly_mod(2, modulus)  # == 2 unless degree == 1

        self._exp = None
        self._log = None
        if degree <= LOG_TABLE_MAX_DEGREE:
            self._build_log_tables()
        self._check_generator_order()
        # Images of the basis 2^j under the absolute-trace bit, packed as a mask:
        # tr(x) = parity(x & trace_mask).
        self._trace1_mask = 0
        for j in range(degree):
            if self._trace_direct(1 << j) == 1:
                self._trace1_mask |= 1 << j
        self._trace_tables: dict[int, np.ndarray] = {}
        self._dual_index = None

    # -- construction-time checks -------------------------------------------------

    def _build_log_tables(self):
        order = self.order
        exp = np.zeros(order - 1, dtype=np.int64)
        log = np.full(order, -1, dtype=np.int64)
        v = 1
        for i in range(order - 1):
            exp[i] = v
            if log[v] != -1:
                raise ValueError(
                    f"generator of GF(2^{self.degree}) has order {i} < {order - 1}; "
                    "modulus is irreducible but x is not primitive"
                )
            log[v] = i
            v = self._mul_raw(v, self.generator)
        if v != 1:
            raise ValueError("generator order does not divide 2^d - 1")
        self._exp = exp
        self._log = log

    def _check_generator_order(self):
        q = self.order - 1
        if q == 1:
            return
        if self._log is not None:
            return  # log-table construction already proved the order
        for p in _prime_factors(q):
            if self.pow(self.generator, q // p) == 1:
                raise ValueError(
                    f"x has order dividing {q // p} in GF(2^{self.degree}); not primitive"
                )

    # -- scalar arithmetic --------------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])
        return self._mul_raw(a, b)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        q = self.order - 1
        e %= q
        if self._log is not None:
            return int(self._exp[(self._log[a] * e) % q])
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in GF(2^d)")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^{2^k} (k squarings; x -> x^{2^d} is the identity)."""
        for _ in range(k % self.degree):
            a = self.sqr(a)
        return a

    # -- traces and subfields -----------------------------------------------------

    def _trace_direct(self, x: int, r: int = 1) -> int:
        t = 0
        y = x
        for _ in range(self.degree // r):
            t ^= y
            for _ in range(r):
                y = self._mul_raw(y, y)
        return t

    def trace(self, x: int, r: int = 1) -> int:
        """Trace from GF(2^d) onto the subfield GF(2^r): sum of x^{2^{ir}}.

        Requires r | d.  The result is returned as an element of this field
        (it always lies in the subfield).  For r = 1 the result is 0 or 1.
        """
        if self.degree % r != 0:
            raise ValueError(f"subfield degree {r} does not divide {self.degree}")
        if r == 1:
            return bin(x & self._trace1_mask).count("1") & 1
        return self._trace_direct(x, r)

    def trace_table(self, r: int = 1) -> np.ndarray:
        """Vector of trace(x, r) over all x in index order (built by linearity)."""
        if r not in self._trace_tables:
            if self.degree % r != 0:
                raise ValueError(f"subfield degree {r} does not divide {self.degree}")
            t = np.zeros(self.order, dtype=np.int64)
            imgs = [self._trace_direct(1 << j, r) for j in range(self.degree)]
            for x in range(1, self.order):
                j = (x & -x).bit_length() - 1
                t[x] = t[x ^ (1 << j)] ^ imgs[j]
            self._trace_tables[r] = t
        return self._trace_tables[r]

    def subfield_test(self, x: int, r: int) -> bool:
        """True iff x lies in the subfield GF(2^r), i.e. x^{2^r} = x."""
        if self.degree % r != 0:
            raise ValueError(f"subfield degree {r} does not divide {self.degree}")
        y = x
        for _ in range(r):
            y = self.sqr(y)
        return y == x

    def subfield_elements(self, r: int) -> list[int]:
        """All elements of the subfield GF(2^r), sorted by index."""
        if self.degree % r != 0:
            raise ValueError(f"subfield degree {r} does not divide {self.degree}")
        if r == self.degree:
            return list(range(self.order))
        step = (self.order - 1) // ((1 << r) - 1)
        elems = {0} | {self.pow(self.generator, k * step) for k in range((1 << r) - 1)}
        return sorted(elems)

    def embed_from(self, small: "GF2m", x: int) -> int:
        """Embed an element of GF(2^r) (its own coordinates) into this field.

        The small field's generator is mapped to the smallest-index root of
        the small modulus inside this field, which fixes a field embedding.
        Requires small.degree | self.degree.
        """
        r = small.degree
        if self.degree % r != 0:
            raise ValueError(f"subfield degree {r} does not divide {self.degree}")
        root = self._subfield_root(small)
        img = 0
        for i in range(r):
            if (x >> i) & 1:
                img ^= self.pow(root, i)
        return img

    def _subfield_root(self, small: "GF2m") -> int:
        key = (small.degree, small.modulus)
        cache = getattr(self, "_embed_roots", None)
        if cache is None:
            cache = self._embed_roots = {}
        if key not in cache:
            for z in self.subfield_elements(small.degree):
                acc = 0
                for i in range(small.degree + 1):
                    if (small.modulus >> i) & 1:
                        acc ^= self.pow(z, i)
                if acc == 0 and (small.degree == 1 or z not in (0, 1)):
                    cache[key] = z
                    break
            else:  # pragma: no cover - impossible for verified irreducible moduli
                raise ValueError("no root of subfield modulus found")
        return cache[key]

    # -- vectorized helpers -------------------------------------------------------

    def mul_table(self, b: int) -> np.ndarray:
        """Vector P with P[x] = b*x over all x (multiplication permutation)."""
        if b == 0:
            return np.zeros(self.order, dtype=np.int64)
        if self._log is not None:
            q = self.order - 1
            p = np.empty(self.order, dtype=np.int64)
            p[0] = 0
            p[1:] = self._exp[(self._log[1:] + int(self._log[b])) % q]
            return p
        return np.array([self.mul(b, x) for x in range(self.order)], dtype=np.int64)

    def pow_table(self, e: int) -> np.ndarray:
        """Vector with x^e over all x."""
        if self._log is not None:
            q = self.order - 1
            p = np.empty(self.order, dtype=np.int64)
            p[0] = 0 if e != 0 else 1
            p[1:] = self._exp[(self._log[np.arange(1, self.order)] * (e % q)) % q]
            return p
        return np.array([self.pow(x, e) for x in range(self.order)], dtype=np.int64)

    def dual_index_table(self) -> np.ndarray:
        """D with D[lam] = bit mask (tr(lam*2^j))_j, linking tr(lam x) to bit dot products.

        D is a GF(2)-linear bijection of [0, 2^d); it converts between the
        field inner product tr(lam x) and the plain bit inner product used
        by the fast Walsh butterfly.
        """
        if self._dual_index is None:
            imgs = []
            for j in range(self.degree):
                mask = 0
                for i in range(self.degree):
                    if self.trace(self.mul(1 << j, 1 << i)) == 1:
                        mask |= 1 << i
                imgs.append(mask)
            d = np.zeros(self.order, dtype=np.int64)
            for x in range(1, self.order):
                j = (x & -x).bit_length() - 1
                d[x] = d[x ^ (1 << j)] ^ imgs[j]
            self._dual_index = d
        return self._dual_index

    def __repr__(self):
        return f"GF2m(degree={self.degree}, modulus={bin(self.modulus)})"

    def __eq__(self, other):
        return (
            isinstance(other, GF2m)
            and other.degree == self.degree
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.degree, self.modulus))


_ctx_cache: dict[tuple[int, int], GF2m] = {}


def mk_field(degree: int, modulus: int | None = None) -> GF2m:
    """Construct (or fetch a cached) validated GF(2^degree) context."""
    key = (degree, modulus if modulus is not None else DEFAULT_MODULUS.get(degree, -1))
    if key not in _ctx_cache:
        _ctx_cache[key] = GF2m(degree, modulus)
    return _ctx_cache[key]
