"""Groebner completion tests, checked against independent oracles.

The graded-dimension oracle spans the degree-n piece of the two-sided ideal
by padding every relation with all words on both sides and computing a rank;
dim A_n is then the number of degree-n words minus that rank.
"""

from fractions import Fraction
from itertools import product

import pytest

from gradreg.freealg import NcPoly, format_poly, generator_set, parse_poly
from gradreg.groebner import (
    AlgebraPresentation,
    compute_groebner,
    hilbert_series,
    verify_truncated_gb,
)
from gradreg.linalg import QQ, PrimeField, SparseMatrix, row_reduce


def algebra(gens_spec, rel_texts, label, field=QQ):
    gens = generator_set(gens_spec)
    rels = tuple(parse_poly(t, gens, field) for t in rel_texts)
    return AlgebraPresentation(gens, rels, label, field)


KXY = algebra([("x", 1), ("y", 1)], ["x*y - y*x"], "kxy")
DOWNUP = algebra([("x", 1), ("y", 1)], ["x*x*y - y*x*x", "x*y*y - y*y*x"], "downup")
KX3 = algebra([("x", 1)], ["x*x*x"], "kx3")
KX_DEG2 = algebra([("x", 2)], [], "kx2")
UALG = algebra([("x", 1), ("y", 1)], ["y*x - x*y - x*x"], "U")


def all_words_of_degree(gens, n):
    """Every word of weighted degree exactly n (not only normal ones)."""
    if n == 0:
        return [()]
    out = []
    for gi, gd in enumerate(gens.degrees):
        if gd <= n:
            out.extend((gi,) + w for w in all_words_of_degree(gens, n - gd))
    return out


def oracle_dims(pres, dmax):
    """Independent rank computation of dim A_n from the raw presentation."""
    gens, field = pres.gens, pres.field
    dims = []
    for n in range(dmax + 1):
        words = all_words_of_degree(gens, n)
        index = {w: i for i, w in enumerate(words)}
        rows = []
        for rel in pres.relations:
            d = rel.degree(gens)
            if d > n:
                continue
            # pad on both sides: u * rel * v over all degree splits
            for du in range(n - d + 1):
                for u in all_words_of_degree(gens, du):
                    for v in all_words_of_degree(gens, n - d - du):
                        row = {}
                        for w, c in rel.terms.items():
                            row[index[u + w + v]] = field.add(
                                row.get(index[u + w + v], field.zero), c)
                        rows.append({k: v2 for k, v2 in row.items() if v2 != field.zero})
        m = SparseMatrix(field, len(rows), len(words), rows)
        _, _, rk = row_reduce(m)
        dims.append(len(words) - rk)
    return dims


def test_commutative_plane_gb():
    g = compute_groebner(KXY, 6)
    assert g.gb_strings() == ["y*x - x*y"]
    assert hilbert_series(g) == [1, 2, 3, 4, 5, 6, 7]
    assert verify_truncated_gb(g)


def test_downup_dims_match_series_oracle():
    # oracle: power series expansion of 1/((1-t)^2 (1-t^2))
    dmax = 8
    series = [0] * (dmax + 1)
    for a in range(dmax + 1):  # (1-t)^-2 has coefficients a+1
        for b in range(0, dmax + 1 - a, 2):
            series[a + b] += a + 1
    g = compute_groebner(DOWNUP, dmax)
    assert hilbert_series(g) == series == [1, 2, 4, 6, 9, 12, 16, 20, 25]
    assert verify_truncated_gb(g)


def test_truncated_polynomial_ring():
    g = compute_groebner(KX3, 5)
    assert hilbert_series(g) == [1, 1, 1, 0, 0, 0]


def test_free_on_one_generator_degree_two():
    g = compute_groebner(KX_DEG2, 9)
    assert hilbert_series(g) == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0]


@pytest.mark.parametrize("pres", [KXY, DOWNUP, KX3, UALG])
def test_dims_against_ideal_span_oracle(pres):
    dmax = 6
    g = compute_groebner(pres, dmax)
    assert hilbert_series(g) == oracle_dims(pres, dmax)


def test_dims_agree_over_prime_field():
    f = PrimeField(32003)
    downup_p = algebra([("x", 1), ("y", 1)],
                       ["x*x*y - y*x*x", "x*y*y - y*y*x"], "downup_p", f)
    g = compute_groebner(downup_p, 8)
    assert hilbert_series(g) == [1, 2, 4, 6, 9, 12, 16, 20, 25]


def test_non_homogeneous_relation_rejected():
    with pytest.raises(ValueError):
        algebra([("x", 1), ("y", 1)], ["x*y - x"], "bad")


def test_nf_and_coords_roundtrip():
    g = compute_groebner(KXY, 6)
    p = parse_poly("y*x*y + x*x*y", KXY.gens, QQ)
    v = g.coords(p, 3)
    assert g.nf(g.decode(v, 3)) == g.nf(p)


def test_determinism_bit_exact():
    g1 = compute_groebner(DOWNUP, 8)
    g2 = compute_groebner(DOWNUP, 8)
    assert g1.gb_strings() == g2.gb_strings()
    assert g1.normal == g2.normal


def test_left_mult_matrices_k_xy():
    g = compute_groebner(KXY, 6)
    # normal words of degree 1: x, y; degree 2: xx, xy, yy
    assert g.normal[1] == [(0,), (1,)]
    assert g.normal[2] == [(0, 0), (0, 1), (1, 1)]
    mx = g.left_mult(0, 1)
    my = g.left_mult(1, 1)
    assert mx.column(0) == {0: Fraction(1)}       # x*x = xx
    assert mx.column(1) == {1: Fraction(1)}       # x*y = xy
    assert my.column(0) == {1: Fraction(1)}       # y*x -> xy
    assert my.column(1) == {2: Fraction(1)}       # y*y = yy
    assert mx.nrows == 3 and mx.ncols == 2


def test_left_mult_matrix_deg0_and_zero_target():
    gx = compute_groebner(algebra([("x", 1)], [], "kx"), 4)
    m = gx.left_mult(0, 0)
    assert m.nrows == 1 and m.ncols == 1 and m.entry(0, 0) == 1
    g3 = compute_groebner(KX3, 5)
    m3 = g3.left_mult(0, 2)  # A_2 -> A_3 = 0
    assert m3.nrows == 0 and m3.ncols == 1 and m3.is_zero()
    with pytest.raises(ValueError):
        g3.left_mult(0, 5)


def test_right_mult_contract():
    g = compute_groebner(DOWNUP, 6)
    n = 2
    for gi in range(2):
        m = g.right_mult(gi, n)
        for j, w in enumerate(g.normal[n]):
            prod = NcPoly.word(QQ, w + (gi,))
            assert m.column(j) == g.coords(prod, n + 1)


def test_left_and_right_dims_agree():
    g = compute_groebner(DOWNUP, 8)
    for n in range(0, 7):
        lm = g.left_mult(0, n)
        rm = g.right_mult(0, n)
        assert lm.nrows == rm.nrows and lm.ncols == rm.ncols


def test_ualg_is_as_regular_size():
    g = compute_groebner(UALG, 8)
    assert hilbert_series(g) == [n + 1 for n in range(9)]
    assert verify_truncated_gb(g)
