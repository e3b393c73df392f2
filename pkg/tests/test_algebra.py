"""Field tables, cyclotomic integers, weight polynomials and the
truncated series machinery."""

import pytest

from conftest import field
from wamkit.cyclotomic import CyclotomicInt, normalize, root_of_unity
from wamkit.errors import AlgebraError, FieldError
from wamkit.fields import FieldSpec, character, field_trace
from wamkit.poly import WeightPoly
from wamkit.polymatrix import PolyMatrix, series_inverse


# --- finite fields ---

def test_field_axioms_exhaustive():
    for p, r in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)]:
        spec = field(p, r)
        q = spec.q
        for a in range(q):
            assert spec.add[a][0] == a
            assert spec.mul[a][1] == a
            assert spec.mul[a][0] == 0
            assert spec.add[a][spec.neg[a]] == 0
            for b in range(q):
                assert spec.add[a][b] == spec.add[b][a]
                assert spec.mul[a][b] == spec.mul[b][a]
                for c in range(q):
                    assert (spec.mul[a][spec.add[b][c]]
                            == spec.add[spec.mul[a][b]][spec.mul[a][c]])
        for a in range(1, q):
            assert spec.mul[a][spec.inv[a]] == 1


def test_default_modulus_gf4():
    # least monic irreducible of degree 2 over GF(2) is 1 + x + x^2
    assert field(2, 2).modulus == (1, 1, 1)


def test_gf4_trace_values():
    spec = field(2, 2)
    # indices: 0, 1, alpha (=2), alpha+1 (=3); tr(a) = a + a^2
    assert [spec.trace[i] for i in range(4)] == [0, 0, 1, 1]


def test_trace_is_additive():
    for p, r in [(2, 3), (3, 2)]:
        spec = field(p, r)
        for a in range(spec.q):
            for b in range(spec.q):
                s = spec.add[a][b]
                assert spec.trace[s] == (spec.trace[a] + spec.trace[b]) % p


def test_bad_field_parameters():
    with pytest.raises(FieldError):
        FieldSpec(4)
    with pytest.raises(FieldError):
        FieldSpec(2, 0)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, modulus=[1, 0, 1])  # (1+x)^2 is reducible


def test_character_orthogonality():
    # sum_v chi(u, v) is q for u = 0 and 0 otherwise
    for p, r in [(2, 1), (3, 1), (2, 2), (5, 1)]:
        spec = field(p, r)
        elems = spec.elements()
        for u in elems:
            total = sum(character(u, v) for v in elems)
            total = normalize(total)
            assert total == (spec.q if u.index == 0 else 0)


def test_field_trace_prime_field_is_identity():
    spec = field(5)
    for a in spec.elements():
        assert field_trace(a) == a.index


# --- cyclotomic integers ---

def test_root_of_unity_binary_case_is_int():
    assert root_of_unity(2, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert isinstance(root_of_unity(2, 1), int)


def test_root_powers_sum_to_zero():
    for p in (3, 5, 7):
        acc = CyclotomicInt.from_int(p, 0)
        for k in range(p):
            acc = acc + CyclotomicInt.root_power(p, k)
        assert not acc


def test_cyclotomic_ring_laws():
    p = 5
    w = CyclotomicInt.root_power(p, 1)
    elems = [CyclotomicInt.from_int(p, 2), w, w * w - 3, w.conjugate() + 1]
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            for c in elems:
                assert (a + b) * c == a * c + b * c
                assert (a * b) * c == a * (b * c)


def test_conjugation_inverts_roots():
    for p in (3, 5):
        for k in range(p):
            w = CyclotomicInt.root_power(p, k)
            assert w * w.conjugate() == 1
            assert w.conjugate() == CyclotomicInt.root_power(p, p - k)


def test_norm_is_positive_integer():
    p = 3
    w = CyclotomicInt.root_power(p, 1)
    z = 2 + w
    n = z * z.conjugate()
    assert n.is_integer() and n.as_int() == 3  # (2+w)(2+w^2) = 4-2+1


def test_exact_div_errors_on_remainder():
    z = CyclotomicInt.from_int(3, 4)
    assert z.exact_div(2).as_int() == 2
    with pytest.raises(AlgebraError):
        z.exact_div(3)


def test_normalize_collapses_to_int():
    z = CyclotomicInt(3, (7, 0))
    assert normalize(z) == 7
    assert isinstance(normalize(z), int)


# --- weight polynomials ---

def test_poly_str_canonical_order():
    x, y, d = (WeightPoly.var(v) for v in ("x", "y", "D"))
    p = y ** 3 + 3 * x * y ** 2 + 1 + y ** 3 * d
    assert str(p) == "1 + 3*x*y^2 + y^3 + y^3*D"


def test_poly_str_negative_terms():
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    assert str(x - y) == "x - y"
    assert str(-(x * y)) == "-x*y"


def test_poly_arithmetic_identities():
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    p = (x + y) ** 2
    assert p == x ** 2 + 2 * x * y + y ** 2
    assert p - p == WeightPoly.zero()
    assert (x + y) * (x - y) == x ** 2 - y ** 2


def test_substitute_requires_full_mapping():
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    p = x * y
    with pytest.raises(AlgebraError):
        p.substitute({"x": 1})
    assert p.substitute({"x": 1, "y": y}) == y


def test_collapse_keeps_unmapped_variables():
    p = poly = WeightPoly.var("x_I") * WeightPoly.var("y_P")
    out = poly.collapse({"x_I": 1})
    assert out == WeightPoly.var("y_P")
    assert p.collapse({}) == p


def test_unknown_variable_rejected():
    with pytest.raises(AlgebraError):
        WeightPoly.var("z")
    with pytest.raises(AlgebraError):
        WeightPoly.var("x").substitute({"q": 1, "x": 1})


def test_d_truncation_drops_high_orders():
    d = WeightPoly.var("D", d_max=3)
    p = (1 + d) ** 5
    assert p.max_d_degree() == 3
    assert p.coefficient({"D": 3}) == 10
    assert p.coefficient({"D": 4}) == 0


def test_exact_div_poly():
    y = WeightPoly.var("y")
    assert (4 * y + 8).exact_div(4) == y + 2
    with pytest.raises(AlgebraError):
        (4 * y + 2).exact_div(4)


def test_y_degrees_cover_all_y_flavors():
    p = (WeightPoly.var("y_I") * WeightPoly.var("y_O") ** 2
         + WeightPoly.var("y") + 1)
    assert p.y_degrees() == [0, 1, 3]


def test_macwilliams_substitution_roundtrip():
    # the [3, 1] transform followed by the [3, 2] transform is a
    # round trip: divisors 2^k and 2^(n-k)
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    g = x ** 3 + 3 * x * y ** 2
    once = g.substitute({"x": x + y, "y": x - y}).exact_div(2)
    twice = once.substitute({"x": x + y, "y": x - y}).exact_div(4)
    assert twice == g


# --- polynomial matrices ---

def _two_state(entries):
    return PolyMatrix(["0", "1"], entries)


def test_matrix_label_mismatch_rejected():
    a = PolyMatrix.identity(["0", "1"])
    b = PolyMatrix.identity(["0", "2"])
    with pytest.raises(AlgebraError):
        a + b


def test_matrix_multiplication():
    y = WeightPoly.var("y")
    a = _two_state([[WeightPoly.const(1), y], [y, WeightPoly.zero()]])
    sq = a * a
    assert sq.entries[0][0] == 1 + y ** 2
    assert sq.entries[0][1] == y
    assert sq.entries[1][1] == y ** 2


def test_conjugate_by_fourier_is_scaled_identity():
    # F I F^dag = q^m I for the binary m = 1 character matrix
    f = [[1, 1], [1, -1]]
    ident = PolyMatrix.identity(["0", "1"])
    out = ident.conjugate_by(f)
    assert out == ident * 2


def test_series_inverse_geometric():
    y = WeightPoly.var("y")
    d = WeightPoly.var("D", d_max=4)
    lam = _two_state([[y, WeightPoly.zero()],
                      [WeightPoly.zero(), WeightPoly.zero()]])
    m = PolyMatrix.identity(["0", "1"], 4) - lam.map_entries(lambda e: e * d)
    inv = series_inverse(m, 4)
    expect = sum((y * d) ** i for i in range(5))
    assert inv.entries[0][0] == expect + 0  # coerce to WeightPoly
    assert inv.entries[1][1] == WeightPoly.const(1, 4)


def test_series_inverse_rejects_wrong_shape():
    y = WeightPoly.var("y")
    bad = _two_state([[y, WeightPoly.zero()],
                      [WeightPoly.zero(), WeightPoly.const(1)]])
    with pytest.raises(AlgebraError):
        series_inverse(bad, 3)
