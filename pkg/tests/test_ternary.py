import cmath
import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from minimalcodes.field import weight_distribution
from minimalcodes.krawtchouk import binom, lloyd
from minimalcodes.minimality import is_minimal_definitional, is_minimal_weight_criterion
from minimalcodes.ternary import (
    FieldFunction,
    GmkParams,
    WalshTable,
    build_cf,
    build_cf_general,
    dimension_ok,
    distribution_from_walsh,
    distribution_gmk_closed,
    equals_linear_form,
    gmk_certificate,
    is_minimal_walsh,
    make_gmk,
    points,
    walsh_table,
)

EXAMPLE_1 = {0: 1, 50: 2, 158: 320, 162: 242, 167: 144, 185: 20}


def complex_doubled_re(f):
    """2 Re f^(w) from the defining character sum, in floating point."""
    zeta = cmath.exp(2j * cmath.pi / 3)
    pts = list(itertools.product(range(3), repeat=f.m))
    out = []
    for w in pts:
        total = sum(zeta ** ((f.values[i] - sum(a * b for a, b in zip(w, x))) % 3) for i, x in enumerate(pts))
        out.append(round(2 * total.real))
    return out


def random_function(rng, p, m, density=None):
    while True:
        if density is None:
            vals = [0] + [rng.randrange(p) for _ in range(p**m - 1)]
        else:
            vals = [0] + [rng.randrange(1, p) if rng.random() < density else 0 for _ in range(p**m - 1)]
        f = FieldFunction(p, m, tuple(vals))
        if not equals_linear_form(f):
            return f


@st.composite
def ternary_functions(draw, max_m=4):
    m = draw(st.integers(1, max_m))
    rest = draw(st.lists(st.integers(0, 2), min_size=3**m - 1, max_size=3**m - 1))
    return FieldFunction.ternary(m, [0] + rest)


def linear_form(w, p=3):
    m = len(w)
    return FieldFunction(p, m, tuple(int(v) for v in (points(p, m) @ np.array(w)) % p))


class TestFunctionTable:
    def test_validation(self):
        with pytest.raises(ValueError):
            FieldFunction.ternary(1, [1, 0, 0])
        with pytest.raises(ValueError):
            FieldFunction.ternary(2, [0] * 8)
        with pytest.raises(ValueError):
            FieldFunction.ternary(1, [0, 3, 0])
        with pytest.raises(ValueError):
            FieldFunction(4, 1, (0, 1, 2, 3))

    def test_point_indexing(self):
        # (1, 2) sits at index 1*3 + 2 = 5
        f = FieldFunction.ternary(2, [0, 0, 0, 0, 0, 2, 0, 0, 0])
        assert f((1, 2)) == 2 and f((2, 1)) == 0
        assert list(points(3, 2)[5]) == [1, 2]


class TestWalshTable:
    def test_zero_function(self):
        table = walsh_table(FieldFunction.ternary(3, [0] * 27))
        assert table[0] == 2 * 27
        assert not dimension_ok(FieldFunction.ternary(3, [0] * 27))

    def test_gmk_values(self):
        table = walsh_table(make_gmk(5, 2))
        assert table[0] == 2 * 243 - 3 * 50 == 336
        # closed form -3 (Psi_2(i, 5) - 1) at weight-i points
        wts = np.count_nonzero(points(3, 5), axis=1)
        for w, i in enumerate(wts):
            if i:
                assert table[w] == -3 * (lloyd(3, 5, 2, int(i)) - 1)
        assert table[1] == -69

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matches_complex_sum(self, rng, m):
        for _ in range(5):
            f = random_function(rng, 3, m)
            assert list(walsh_table(f).doubled_re) == complex_doubled_re(f)
        f = make_gmk(3, 2)
        assert list(walsh_table(f).doubled_re) == complex_doubled_re(f)

    @given(ternary_functions())
    def test_invariants(self, f):
        full = f.size
        for d in walsh_table(f).doubled_re:
            assert (d + full) % 3 == 0
            assert abs(d) <= 2 * full

    def test_rejects_corrupt_table(self):
        with pytest.raises(ValueError):
            WalshTable(1, (6, 1, 0))

    def test_partitioned_build_matches(self, monkeypatch):
        import minimalcodes.ternary as mod

        f = make_gmk(5, 2)
        reference = walsh_table(f)
        monkeypatch.setattr(mod, "_CELLS", 243 * 7)
        assert walsh_table(f, threads=3) == reference


class TestDimension:
    @pytest.mark.parametrize("w", [(0, 0, 0), (1, 0, 2), (2, 2, 2), (0, 1, 0)])
    def test_linear_forms_rejected(self, w):
        f = linear_form(w)
        assert not dimension_ok(f)
        assert equals_linear_form(f)
        with pytest.raises(ValueError):
            build_cf(f)

    @pytest.mark.parametrize("m,k", [(5, 2), (6, 2), (7, 2), (7, 3)])
    def test_gmk_has_full_dimension(self, m, k):
        assert dimension_ok(make_gmk(m, k))

    @given(ternary_functions(max_m=3))
    def test_spectral_and_direct_checks_agree(self, f):
        assert dimension_ok(f) == (not equals_linear_form(f))


class TestBuildCf:
    def test_example_parameters(self):
        code = build_cf(make_gmk(5, 2))
        assert (code.q, code.n, code.k) == (3, 242, 6)

    def test_example_two_parameters(self):
        code = build_cf(make_gmk(7, 2))
        assert (code.q, code.n, code.k) == (3, 2186, 8)

    def test_generator_layout(self):
        f = FieldFunction.ternary(2, [0, 1, 0, 2, 0, 0, 1, 1, 0])
        code = build_cf(f)
        assert code.generator[0] == f.values[1:]
        assert code.generator[1] == (0, 0, 1, 1, 1, 2, 2, 2)
        assert code.generator[2] == (1, 2, 0, 1, 2, 0, 1, 2)

    def test_coordinate_rows_are_one_weight(self, rng):
        f = random_function(rng, 3, 4)
        code = build_cf(f)
        for i in range(1, 5):
            assert code.encode([0] + [int(j == i - 1) for j in range(4)]).weight() == 81 - 27

    def test_weights_equal_count_of_disagreements(self, rng):
        # weight of (u, v) equals 3^m - #{x : u f(x) + v.x = 0}
        f = random_function(rng, 3, 3)
        code = build_cf(f)
        pts = points(3, 3)
        vals = f.array()
        for u in range(3):
            for v in pts:
                zeros = np.count_nonzero((u * vals + pts @ v) % 3 == 0)
                assert code.encode([u, *v]).weight() == 27 - zeros


class TestDistributionFromWalsh:
    def test_example_one(self):
        assert distribution_from_walsh(make_gmk(5, 2)) == EXAMPLE_1

    def test_example_two(self):
        expected = {0: 1, 98: 2, 1451: 1344, 1454: 1120, 1457: 896, 1458: 2186,
                    1466: 560, 1472: 256, 1487: 168, 1517: 28}
        dist = distribution_from_walsh(make_gmk(7, 2))
        assert dist == expected and dist.total == 3**8

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_matches_enumeration(self, rng, m):
        for density in (None, 0.1, 0.3):
            for _ in range(8):
                f = random_function(rng, 3, m, density)
                assert distribution_from_walsh(f) == weight_distribution(build_cf(f))

    @given(ternary_functions(max_m=3))
    def test_matches_enumeration_property(self, f):
        if dimension_ok(f):
            assert distribution_from_walsh(f) == weight_distribution(build_cf(f))


class TestWalshMinimality:
    def test_examples(self):
        assert is_minimal_walsh(make_gmk(5, 2)).minimal

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matches_weight_criterion(self, rng, m):
        seen = set()
        for density in (None, 0.1, 0.25):
            for _ in range(40):
                f = random_function(rng, 3, m, density)
                walsh = is_minimal_walsh(f)
                truth = is_minimal_weight_criterion(build_cf(f)).minimal
                assert walsh.minimal == truth
                seen.add(truth)
                if not walsh.minimal:
                    w1, w2, w3 = walsh.triple
                    assert all((a + b + c) % 3 == 0 for a, b, c in zip(w1, w2, w3))
                    assert len({w1, w2, w3}) == 3
        if m == 3:
            assert seen == {True, False}

    def test_matches_at_m4(self, rng):
        for density in (0.05, 0.15, None):
            for _ in range(5):
                f = random_function(rng, 3, 4, density)
                assert is_minimal_walsh(f).minimal == is_minimal_weight_criterion(build_cf(f)).minimal

    def test_threads_do_not_change_triple(self, rng, monkeypatch):
        import minimalcodes.ternary as mod

        monkeypatch.setattr(mod, "_CELLS", 27 * 3 * 2)
        for _ in range(20):
            f = random_function(rng, 3, 3)
            assert is_minimal_walsh(f, threads=4) == is_minimal_walsh(f, threads=1)


class TestGmk:
    @pytest.mark.parametrize("m,k,size", [(5, 2, 50), (7, 2, 98), (4, 4, 80), (3, 1, 6)])
    def test_support_size(self, m, k, size):
        f = make_gmk(m, k)
        assert sum(f.values) == size and f.values[0] == 0
        assert set(f.values) <= {0, 1}

    @pytest.mark.parametrize("m,k", [(3, 0), (3, 4), (0, 0)])
    def test_bounds(self, m, k):
        with pytest.raises(ValueError):
            make_gmk(m, k)

    def test_closed_form_example_one(self):
        assert distribution_gmk_closed(5, 2) == EXAMPLE_1

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(1, 7) for k in range(1, m + 1)])
    def test_closed_form_matches_walsh_route(self, m, k):
        # the closed form is stated for every 1 <= k <= m
        f = make_gmk(m, k)
        closed = distribution_gmk_closed(m, k)
        assert closed.total == 3 ** (m + 1)
        if dimension_ok(f):
            assert closed == distribution_from_walsh(f)

    @pytest.mark.parametrize("m,k", [(5, 2), (6, 2)])
    def test_closed_form_matches_enumeration(self, m, k):
        assert distribution_gmk_closed(m, k) == weight_distribution(build_cf(make_gmk(m, k)))

    @pytest.mark.parametrize("m,k", [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 4)])
    def test_extreme_weights(self, m, k):
        dist = distribution_gmk_closed(m, k)
        assert dist.w_min == sum(2**j * binom(m, j) for j in range(1, k + 1))
        assert dist.w_max == 3**m - 3 ** (m - 1) + 2**k * binom(m - 1, k) - 1

    def test_params(self):
        p = GmkParams(7, 3)
        assert (p.n, p.dim, p.d) == (2186, 8, 14 + 84 + 280)
        for bad in [(4, 2), (5, 3), (6, 1), (7, 4)]:
            with pytest.raises(ValueError):
                GmkParams(*bad)


class TestCertificate:
    def test_example_one(self):
        c = gmk_certificate(5, 2)
        assert (c.n, c.dim, c.d, c.w_min, c.w_max) == (242, 6, 50, 50, 185)
        assert c.ratio_at_most_two_thirds and c.ratio_strictly_below and c.weight_gap_ok

    def test_example_two(self):
        c = gmk_certificate(7, 2)
        assert (c.n, c.dim, c.d, c.w_max) == (2186, 8, 98, 1517)
        assert c.ratio_at_most_two_thirds

    @pytest.mark.parametrize("m", range(5, 16))
    def test_k2_family(self, m):
        c = gmk_certificate(m, 2)
        assert c.ratio_strictly_below and c.ratio_at_most_two_thirds and c.weight_gap_ok
        assert (c.closed_form_w_min, c.closed_form_w_max) == (c.w_min, c.w_max)

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(5, 14) for k in range(2, (m - 1) // 2 + 1)])
    def test_all_in_range(self, m, k):
        c = gmk_certificate(m, k)
        assert c.weight_gap_ok
        assert (c.closed_form_w_min, c.closed_form_w_max) == (c.w_min, c.w_max)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            gmk_certificate(4, 2)


class TestGeneralPrime:
    def test_ternary_specialisation(self, rng):
        for _ in range(5):
            f = random_function(rng, 3, 3)
            assert build_cf_general(f) == build_cf(f)

    def test_binary_gmk_analogue(self):
        wt = np.count_nonzero(points(2, 6), axis=1)
        f = FieldFunction(2, 6, tuple(int(1 <= w <= 2) for w in wt))
        code = build_cf_general(f)
        assert (code.q, code.n, code.k) == (2, 63, 7)
        d = is_minimal_definitional(code)
        assert d.minimal == is_minimal_weight_criterion(code).minimal

    def test_quinary_random(self, rng):
        f = random_function(rng, 5, 3)
        code = build_cf_general(f)
        assert (code.q, code.n, code.k) == (5, 124, 4)
        dist = weight_distribution(code)
        assert dist.total == 625 and dist[0] == 1
        assert dist[100] >= 124  # u = 0 rows: 5^3 - 5^2

    def test_rejects_linear(self):
        with pytest.raises(ValueError):
            build_cf_general(linear_form((1, 3, 0), p=5))
        with pytest.raises(ValueError):
            FieldFunction(6, 1, tuple(range(6)))

    def test_walsh_rejects_other_primes(self, rng):
        f = random_function(rng, 5, 2)
        for fn in (walsh_table, build_cf, is_minimal_walsh, distribution_from_walsh):
            with pytest.raises(ValueError):
                fn(f)
