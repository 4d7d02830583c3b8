"""Walsh transform and classification tests against brute-force oracles."""

import numpy as np
import pytest

from cyclicbent import boolfun as bf
from cyclicbent.gf2 import mk_field

from oracles import walsh_bruteforce, walsh_spectrum_bruteforce


def tr_cube(ctx):
    """g(x) = tr(x^3), the classic quadratic on GF(2^n)."""
    return bf.from_field_fn(ctx, lambda x: ctx.trace(ctx.pow(x, 3)))


def test_zero_function_delta_spectrum():
    ctx = mk_field(3)
    f = bf.from_field_fn(ctx, lambda x: 0)
    spec = bf.walsh(f)
    assert spec.value_at(0) == 8
    assert all(spec.value_at(a) == 0 for a in range(1, 8))


def test_two_variable_product_is_bent():
    ctx = mk_field(1)
    f = bf.from_field_bit_fn(ctx, lambda x1, x2: x1 & x2)
    spec = bf.walsh(f)
    assert sorted(int(v) for v in spec.values) == [-2, 2, 2, 2]
    assert bf.classify(spec) is bf.WalshClass.BENT


def test_trace_cube_gf8_semibent_distribution():
    ctx = mk_field(3)
    spec = bf.walsh(tr_cube(ctx))
    dist = spec.distribution()
    assert dist[0] == 4
    assert sorted(c for v, c in dist.items() if v != 0) == [1, 3]
    assert {abs(v) for v in dist if v != 0} == {4}
    assert bf.classify(spec) is bf.WalshClass.SEMI_BENT


def test_affine_even_n_is_neither():
    ctx = mk_field(4)
    f = bf.from_field_fn(ctx, lambda x: ctx.trace(x))
    spec = bf.walsh(f)
    assert max(abs(int(v)) for v in spec.values) == 16
    assert bf.classify(spec) is bf.WalshClass.NEITHER


@pytest.mark.parametrize("with_bit", [False, True])
def test_walsh_matches_bruteforce(with_bit):
    ctx = mk_field(3)
    rng = np.random.default_rng(7)
    dom = bf.Domain(ctx, with_bit)
    for _ in range(5):
        f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
        spec = bf.walsh(f)
        assert list(spec.values) == walsh_spectrum_bruteforce(f)


def test_walsh_dual_indexing_field_inner_product():
    # W at (lam, nu) must use <(lam,nu),(x1,x2)> = tr(lam x1) + nu x2
    ctx = mk_field(4)
    rng = np.random.default_rng(11)
    dom = bf.Domain(ctx, with_bit=True)
    f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
    spec = bf.walsh(f)
    for lam in (0, 1, 5, 9):
        for nu in (0, 1):
            assert spec.value_at(lam, nu) == walsh_bruteforce(f, lam, nu)


def test_parseval_exact():
    for d, with_bit in [(3, False), (3, True), (5, False)]:
        ctx = mk_field(d)
        dom = bf.Domain(ctx, with_bit)
        rng = np.random.default_rng(d)
        f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
        spec = bf.walsh(f)
        n = dom.n_vars
        assert int(np.sum(spec.values.astype(object) ** 2)) == 1 << (2 * n)


def test_inverse_transform_recovers_signs():
    ctx = mk_field(4)
    dom = bf.Domain(ctx, with_bit=True)
    rng = np.random.default_rng(3)
    f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
    w = bf.wht_inplace(f.signs())
    again = bf.wht_inplace(w)
    assert np.array_equal(again // dom.size, f.signs())


def test_scale_compose_identity_and_zero():
    ctx = mk_field(3)
    rng = np.random.default_rng(5)
    dom = bf.Domain(ctx, with_bit=True)
    f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
    assert bf.scale_compose(f, 1, 0) == f
    g = bf.scale_compose(f, 0, 1)
    for x2 in (0, 1):
        vals = {g.value(x1, x2) for x1 in range(8)}
        assert vals == {f.value(0, x2 ^ 1)}


def test_scale_compose_against_direct_evaluation():
    # m=4 Kerdock-style check: scale_compose(K, beta, 0) equals pointwise K(beta*x1, x2)
    ctx = mk_field(3)
    K = bf.from_field_bit_fn(
        ctx,
        lambda x1, x2: ctx.trace(ctx.pow(x1, 3)) ^ (x2 & ctx.trace(x1)),
    )
    b = ctx.generator
    g = bf.scale_compose(K, b, 0)
    for x2 in (0, 1):
        for x1 in range(8):
            assert g.value(x1, x2) == K.value(ctx.mul(b, x1), x2)
    h = bf.scale_compose(K, b, 1)
    for x2 in (0, 1):
        for x1 in range(8):
            assert h.value(x1, x2) == K.value(ctx.mul(b, x1), x2 ^ 1)


def test_xor_and_restrict():
    ctx = mk_field(3)
    K = bf.from_field_bit_fn(
        ctx,
        lambda x1, x2: ctx.trace(ctx.pow(x1, 3)) ^ (x2 & ctx.trace(x1)),
    )
    assert np.all(bf.xor(K, K).table == 0)
    assert bf.restrict(K, 0) == tr_cube(ctx)
    assert bf.is_semibent(bf.restrict(K, 0))
    with pytest.raises(ValueError, match="mismatch"):
        bf.xor(K, tr_cube(ctx))


def test_json_roundtrip():
    ctx = mk_field(4)
    dom = bf.Domain(ctx, with_bit=True)
    rng = np.random.default_rng(1)
    f = bf.BoolFun(dom, rng.integers(0, 2, dom.size).astype(np.uint8))
    g = bf.BoolFun.from_json(f.to_json())
    assert g == f
    spec_json = bf.walsh(f).to_json()
    assert '"class"' in spec_json
