import os
import random
import zlib

import pytest

from wamkit import gflinalg
from wamkit.block import LinearCode, SystematicCode
from wamkit.conv import ConvSeed, SystematicConvSeed, state_vectors
from wamkit.fields import FieldSpec
from wamkit.formats import (parse_block_code, parse_conv_seed,
                            parse_quantum_spec)
from wamkit.pauli import random_clifford_seed
from wamkit.poly import WeightPoly
from wamkit.polymatrix import PolyMatrix
from wamkit.quantum import EaqccSpec

FIXTURES = os.path.join(os.path.dirname(__file__), os.pardir, "fixtures")

_FIELD_CACHE = {}


def field(p, r=1):
    """FieldSpec with table reuse across tests (GF(4) etc. are cheap but
    there is no point rebuilding the tables hundreds of times)."""
    key = (p, r)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldSpec(p, r)
    return _FIELD_CACHE[key]


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def read_fixture(name):
    with open(fixture_path(name), "r", encoding="utf-8") as handle:
        return handle.read()


@pytest.fixture
def example1():
    return parse_conv_seed(read_fixture("example1.cc"))


@pytest.fixture
def example1_nonsys():
    return parse_conv_seed(read_fixture("example1-nonsys.cc"))


@pytest.fixture
def rep3():
    return parse_block_code(read_fixture("rep3.bc"))


@pytest.fixture
def u1():
    return parse_quantum_spec(read_fixture("u1.qcc"))


@pytest.fixture
def u2_ea():
    return parse_quantum_spec(read_fixture("u2-ea.qcc"))


@pytest.fixture
def u2_qcc():
    return parse_quantum_spec(read_fixture("u2-qcc.qcc"))


# --- matrix builders for frozen expected values ---

def poly_of(text):
    """Tiny monomial-sum parser for expected values: '1 + yI*yP' etc.

    Understands products of variable names (x, y, xI, yI, xP, yP, xO, yO)
    with ^ powers and integer coefficients; '0' is the zero polynomial.
    """
    alias = {"xI": "x_I", "yI": "y_I", "xP": "x_P", "yP": "y_P",
             "xO": "x_O", "yO": "y_O", "x": "x", "y": "y", "D": "D"}
    acc = WeightPoly.zero()
    for chunk in text.split("+"):
        chunk = chunk.strip()
        term = WeightPoly.const(1)
        for factor in chunk.split("*"):
            factor = factor.strip()
            if factor.isdigit():
                term = term * int(factor)
                continue
            if "^" in factor:
                name, power = factor.split("^")
                term = term * WeightPoly.var(alias[name]) ** int(power)
            else:
                term = term * WeightPoly.var(alias[factor])
        if chunk != "0":
            acc = acc + term
    return acc


def matrix_of(labels, rows):
    return PolyMatrix(labels, [[poly_of(cell) for cell in row]
                               for row in rows])


# --- randomized generators for the property suites ---

def random_linear_code(rng, spec, n, k):
    while True:
        gen = [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)]
        if gflinalg.rank(spec, gen) == k:
            return LinearCode(spec, gen)


def random_systematic_code(rng, spec, n, k):
    gen = [[1 if i == j else 0 for j in range(k)]
           + [rng.randrange(spec.q) for _ in range(n - k)]
           for i in range(k)]
    return SystematicCode(spec, gen)


def random_conv_seed(rng, spec, n, k, m):
    """Random seed with full-rank lower block, so G~ has rank m+k."""
    upper = [[rng.randrange(spec.q) for _ in range(n + m)] for _ in range(m)]
    while True:
        lower = [[rng.randrange(spec.q) for _ in range(n + m)]
                 for _ in range(k)]
        if gflinalg.rank(spec, lower) == k:
            return ConvSeed(spec, n, k, m, upper + lower)


def random_systematic_conv_seed(rng, spec, n, k, m):
    upper = [[0] * k + [rng.randrange(spec.q) for _ in range(n - k + m)]
             for _ in range(m)]
    lower = [[1 if i == j else 0 for j in range(k)]
             + [rng.randrange(spec.q) for _ in range(n - k + m)]
             for i in range(k)]
    return SystematicConvSeed(spec, n, k, m, upper + lower)


def random_eaqcc_spec(rng, n, k, c, m):
    """Random Clifford seed plus shuffled role assignments."""
    width = n + m
    seed = random_clifford_seed(width, rng)
    positions = list(range(1, width + 1))
    rng.shuffle(positions)
    a = n - k - c
    i_m = positions[:m]
    i_l = positions[m:m + k]
    i_a = positions[m + k:m + k + a]
    i_e = positions[m + k + a:]
    outputs = list(range(1, width + 1))
    rng.shuffle(outputs)
    return EaqccSpec(seed, n, k, c, m, i_m, i_l, i_a, i_e,
                     outputs[:m], outputs[m:])


def seeded_rng(salt):
    # str hashes are randomized per process; crc32 keeps runs reproducible
    return random.Random(0xC0DE ^ zlib.crc32(salt.encode()))


# --- brute-force oracles shared between suites ---

def span_words(spec, basis):
    """Every word in the row span of `basis`, by exhaustive combination."""
    if not basis:
        yield [0] * 0
        return
    width = len(basis[0])
    dim = len(basis)
    for combo in state_vectors(spec, dim):
        word = [0] * width
        for coeff, row in zip(combo, basis):
            if coeff:
                word = [spec.add[w][spec.mul[coeff][x]]
                        for w, x in zip(word, row)]
        yield word


def dual_constraint_words(seed):
    """All words of the dual constraint code of a conv seed.

    A word (w : p : w') is in the dual constraint code iff
    (w : p : -w') is orthogonal to every row of G~, so the basis is the
    nullspace of G~ with the trailing memory block negated.
    """
    spec = seed.spec
    cut = seed.m + seed.n
    basis = gflinalg.nullspace(spec, seed.gen_matrix())
    twisted = [row[:cut] + [spec.neg[x] for x in row[cut:]] for row in basis]
    return span_words(spec, twisted)


def brute_force_dual_wam(seed):
    """Dual WAM by direct enumeration, independent of the transform and
    of any dual seed in block shape."""
    from wamkit.conv import state_labels

    spec = seed.spec
    m, n = seed.m, seed.n
    states = state_vectors(spec, m)
    index = {v: i for i, v in enumerate(states)}
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    out = PolyMatrix.zero(state_labels(spec, m))
    for word in dual_constraint_words(seed):
        w, p, w2 = word[:m], word[m:m + n], word[m + n:]
        wt = sum(1 for s in p if s)
        i, j = index[tuple(w)], index[tuple(w2)]
        out.entries[i][j] = out.entries[i][j] + x ** (n - wt) * y ** wt
    return out
