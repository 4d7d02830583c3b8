"""Sequence family tests.

The frozen m=4 / n=3 histograms below are the closed-form tables evaluated
by hand:
    quaternary, m=4:  7 -> 9, -1 -> 62, 1+2i / 1-2i -> 186, -3+2i / -3-2i -> 62
    semi-bent, n=3:   7 -> 9, -1 -> 310, 3 -> 186, -5 -> 62
Each total is (family size)^2 * period = 81*7 = 567 = 567.

The independent oracle for the scans is the Walsh-identity route: every
correlation value is recomputed from spectra of f(x1,x2)+f(b x1,x2+eps)
(quaternary / binary) or g(x)+g(beta^tau x) (semi-bent) and compared
entry for entry at m=4 / n=3.
"""

import math

import numpy as np
import pytest

from cyclicbent import boolfun as bf
from cyclicbent import construct as cn
from cyclicbent import seqfam as sf
from cyclicbent.gf2 import mk_field


def kerdock(m):
    return cn.kerdock_fn(m)


def trace_cube(n):
    ctx = mk_field(n)
    return bf.from_field_fn(ctx, lambda x: ctx.trace(ctx.pow(x, 3)))


# -- construction shapes -------------------------------------------------------------


def test_quaternary_shape_and_values():
    fam = sf.quaternary_family(kerdock(4))
    assert fam.size == 9 and fam.period == 7
    for mem in fam.members[:-1]:
        mag = mem.re.astype(int) ** 2 + mem.im.astype(int) ** 2
        assert np.all(mag == 1)  # unit Gaussian integers
    inf = fam.members[-1]
    assert inf.label == "inf" and not inf.im.any()


def test_quaternary_inf_autocorrelation():
    fam = sf.quaternary_family(kerdock(4))
    inf = fam.members[-1]
    assert sf.correlate(inf, inf, 0) == (7, 0)
    for tau in range(1, 7):
        assert sf.correlate(inf, inf, tau) == (-1, 0)


def test_quaternary_zero_shift_cross_correlations():
    # distinct lam, lam' at shift 0 always give -1
    fam = sf.quaternary_family(kerdock(4))
    for i in range(8):
        for j in range(8):
            want = (7, 0) if i == j else (-1, 0)
            assert sf.correlate(fam.members[i], fam.members[j], 0) == want


def test_quaternary_requires_normalization():
    f = bf.xor_const(kerdock(4), 1)
    with pytest.raises(ValueError, match="normalize"):
        sf.quaternary_family(f)
    assert sf.quaternary_family(cn.normalize_zero(f)).size == 9


def test_binary_shape_and_hypothesis():
    fam = sf.binary_family(kerdock(4))
    assert fam.size == 8 and fam.period == 14
    ctx = mk_field(5)
    # a cyclic bent function violating the x2-difference hypothesis:
    # scale the linear part by a constant c != 1
    c = ctx.generator
    f = bf.from_field_bit_fn(
        ctx,
        lambda x1, x2: _kerdock_quad(ctx, x1) ^ (x2 & ctx.trace(ctx.mul(c, x1))),
    )
    with pytest.raises(ValueError, match="tr"):
        sf.binary_family(f)


def _kerdock_quad(ctx, x1):
    acc = 0
    for i in range(1, (ctx.degree + 1 - 2) // 2 + 1):
        acc ^= ctx.trace(ctx.pow(x1, (1 << i) + 1))
    return acc


def test_chain_functions_satisfy_binary_hypothesis():
    for m in (4, 6):
        f = cn.chain_fn(cn.ChainSpec(m, (1, m - 1), (1,)))
        half = f.domain.ctx.order
        diff = f.table[:half] ^ f.table[half:]
        tr1 = f.domain.ctx.trace_table(1)
        assert np.array_equal(diff.astype(np.int64), tr1)


def test_semibent_family_shape():
    fam = sf.semibent_family(trace_cube(3))
    assert fam.size == 9 and fam.period == 7
    for mem in fam.members:
        assert not mem.im.any()
        assert set(np.unique(mem.re)) <= {-1, 1}
    inf = fam.members[-1]
    for tau in range(1, 7):
        assert sf.correlate(inf, inf, tau) == (-1, 0)


def test_semibent_family_requires_zero_at_zero():
    ctx = mk_field(3)
    g = bf.from_field_fn(ctx, lambda x: ctx.trace(ctx.pow(x, 3)) ^ 1)
    with pytest.raises(ValueError, match="g\\(0\\)"):
        sf.semibent_family(g)


# -- frozen distributions ------------------------------------------------------------


def test_quaternary_distribution_m4_frozen():
    dist = sf.full_distribution(sf.quaternary_family(kerdock(4)))
    expected = {
        (7, 0): 9,
        (-1, 0): 62,
        (1, 2): 186,
        (1, -2): 186,
        (-3, 2): 62,
        (-3, -2): 62,
    }
    assert dist.counts == expected
    assert dist.total == 567
    assert sf.expected_quaternary_distribution(4) == expected


def test_quaternary_distribution_m6_closed_form():
    dist = sf.full_distribution(sf.quaternary_family(kerdock(6)))
    assert dist.counts == sf.expected_quaternary_distribution(6)
    assert dist.total == 33 * 33 * 31


def test_quaternary_value_set():
    # observed values stay in {-1, -1+2^{m-1}, -1 + (+-1 +-i) 2^{(m-2)/2}}
    for m in (4, 6):
        dist = sf.full_distribution(sf.quaternary_family(kerdock(m)))
        r = 1 << ((m - 2) // 2)
        allowed = {(-1, 0), ((1 << (m - 1)) - 1, 0)}
        for s1 in (1, -1):
            for s2 in (1, -1):
                allowed.add((-1 + s1 * r, s2 * r))
        assert set(dist.counts) <= allowed


def test_quaternary_rmax_bound():
    # |R| <= 1 + sqrt(2^{m-1}) off the trivial peak, checked exactly:
    # r^2 <= (1+sqrt(h))^2  <=>  (r^2 - 1 - h)^2 <= 4h or r^2 <= 1 + h
    for m in (4, 6):
        fam = sf.quaternary_family(kerdock(m))
        rsq = sf.r_max_sq(fam)
        h = 1 << (m - 1)
        excess = rsq - 1 - h
        assert excess <= 0 or excess * excess <= 4 * h


def test_binary_distribution_m4_and_m6():
    d4 = sf.full_distribution(sf.binary_family(kerdock(4)))
    assert d4.total == 8 * 8 * 14
    assert d4.counts == sf.expected_binary_distribution(4)
    d6 = sf.full_distribution(sf.binary_family(kerdock(6)))
    assert d6.total == 32 * 32 * 62 == 63488
    expected6 = sf.expected_binary_distribution(6)
    assert d6.counts == expected6
    # the ten frozen frequencies of the m=6 table
    assert expected6[(62, 0)] == 32
    assert expected6[(-2, 0)] == 736
    assert expected6[(0, 0)] == 1024
    assert expected6[(2, 0)] == 256
    assert expected6[(6, 0)] == 14400
    assert expected6[(8, 0)] == 15360
    assert expected6[(10, 0)] == 2880
    assert expected6[(-10, 0)] == 8640
    assert expected6[(-8, 0)] == 15360
    assert expected6[(-6, 0)] == 4800


def test_binary_peak_count_and_rmax():
    for m in (4, 6):
        fam = sf.binary_family(kerdock(m))
        dist = sf.full_distribution(fam)
        peak = 2 * ((1 << (m - 1)) - 1)
        assert dist.counts[(peak, 0)] == 1 << (m - 1)  # trivial peaks only
        assert sf.r_max_sq(fam) == ((1 << (m // 2)) + 2) ** 2


def test_semibent_distribution_n3_frozen():
    dist = sf.full_distribution(sf.semibent_family(trace_cube(3)))
    expected = {(7, 0): 9, (-1, 0): 310, (3, 0): 186, (-5, 0): 62}
    assert dist.counts == expected
    assert sf.expected_semibent_distribution(3) == expected


def test_semibent_distribution_n5_closed_form():
    dist = sf.full_distribution(sf.semibent_family(trace_cube(5)))
    assert dist.counts == sf.expected_semibent_distribution(5)
    assert dist.total == 33 * 33 * 31
    fam = sf.semibent_family(trace_cube(5))
    assert sf.r_max_sq(fam) == (1 + (1 << 3)) ** 2  # (1 + sqrt(2^{n+1}))^2
    values = set(d for d in dist.counts)
    off_peak = {(-1, 0), (7, 0), (-9, 0)}
    assert values == off_peak | {(31, 0)}


# -- Walsh-identity oracles ----------------------------------------------------------


def test_quaternary_correlations_match_walsh_identity_m4():
    f = kerdock(4)
    ctx = f.domain.ctx
    fam = sf.quaternary_family(f)
    q = ctx.order
    period = q - 1
    for tau in range(period):
        bt = ctx.pow(ctx.generator, tau)
        f0 = bf.xor(f, bf.scale_compose(f, bt, 0))
        f1 = bf.xor(f, bf.scale_compose(f, bt, 1))
        w0 = bf.walsh(f0)
        w1 = bf.walsh(f1)
        fbt = bf.scale_compose(f, bt, 0)
        wb = bf.walsh(fbt)
        wf = bf.walsh(f)
        for li, lam in enumerate(range(q)):
            for lj, lam2 in enumerate(range(q)):
                got = sf.correlate(fam.members[li], fam.members[lj], tau)
                mix = ctx.mul(lam, bt) ^ lam2
                want_re = w0.value_at(mix, 0) // 2 - 1
                want_im = -w1.value_at(mix, 1) // 2
                assert got == (want_re + 0, want_im)
            # lam against infinity
            got = sf.correlate(fam.members[li], fam.members[-1], tau)
            mix = ctx.mul(lam, bt) ^ 1
            assert got == (
                wb.value_at(mix, 0) // 2 - 1,
                wb.value_at(mix, 1) // 2,
            )
            # infinity against lam
            got = sf.correlate(fam.members[-1], fam.members[li], tau)
            mix = lam ^ bt
            assert got == (
                wf.value_at(mix, 0) // 2 - 1,
                -wf.value_at(mix, 1) // 2,
            )


def test_binary_correlations_match_walsh_identity_m4():
    f = kerdock(4)
    ctx = f.domain.ctx
    fam = sf.binary_family(f)
    q = ctx.order
    half = q - 1
    labels = [tuple(int(v) for v in mem.label.split(",")) for mem in fam.members]
    off = 1 << (f.n_vars - 2)
    for (lam, nu), mem in zip(labels, fam.members):
        for (lam2, nu2), mem2 in zip(labels, fam.members):
            for tau0 in range(half):
                # even shift
                b = ctx.pow(ctx.generator, tau0)
                g0 = bf.xor(f, bf.scale_compose(f, b, 0))
                w = bf.walsh(g0)
                mix = ctx.mul(lam, b) ^ lam2
                want = w.value_at(mix, (nu + nu2) % 2) - 1 - (-1) ** ((nu + nu2) % 2)
                assert sf.correlate(mem, mem2, 2 * tau0) == (want, 0)
                # odd shift
                b1 = ctx.pow(ctx.generator, tau0 + off)
                g1 = bf.xor(f, bf.scale_compose(f, b1, 1))
                w1 = bf.walsh(g1)
                mix1 = ctx.mul(lam, b1) ^ lam2
                want1 = (
                    (-1) ** nu * w1.value_at(mix1, (nu + nu2) % 2)
                    - (-1) ** nu
                    - (-1) ** nu2
                )
                assert sf.correlate(mem, mem2, 2 * tau0 + 1) == (want1, 0)


def test_semibent_correlations_match_walsh_identity_n3():
    g = trace_cube(3)
    ctx = g.domain.ctx
    fam = sf.semibent_family(g)
    q = ctx.order
    wg = bf.walsh(g)
    for tau in range(q - 1):
        bt = ctx.pow(ctx.generator, tau)
        gd = bf.xor(g, bf.scale_field(g, bt))
        w = bf.walsh(gd)
        for lam in range(q):
            for lam2 in range(q):
                got = sf.correlate(fam.members[lam], fam.members[lam2], tau)
                assert got == (w.value_at(ctx.mul(lam, bt) ^ lam2) - 1, 0)
            got = sf.correlate(fam.members[lam], fam.members[-1], tau)
            binv = ctx.inv(bt)
            assert got == (wg.value_at(lam ^ binv) - 1, 0)
            got = sf.correlate(fam.members[-1], fam.members[lam], tau)
            assert got == (wg.value_at(lam ^ bt) - 1, 0)


def test_csv_export_and_dist_json(tmp_path):
    fam = sf.quaternary_family(kerdock(4))
    p = tmp_path / "fam.csv"
    fam.write_csv(str(p))
    lines = p.read_text().strip().split("\n")
    assert len(lines) == 9
    assert lines[0].split(",")[0] == "0"
    assert set(lines[0].split(",")[1:]) <= {"1", "-1", "i", "-i"}
    js = sf.full_distribution(fam).to_json()
    assert '"total": 567' in js
