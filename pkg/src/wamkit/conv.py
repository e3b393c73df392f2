"""Classical convolutional codes via memory/transition seeds.

A seed is the matrix T = (C A; E B) over GF(q): a time step takes the
current memory state w (length m) and an input block u (length k) to
the output block p = w C + u E (length n) and next state w' = w A + u B.
The associated constraint code C_(j) on (w_j : p_j : w_j+1) has
generator

    G~ = ( I_m | C  A )
         (  0  | E  B )

State labels enumerate GF(q)^m with the first coordinate varying
fastest, written as strings of element indices.
"""

from . import gflinalg
from .block import DEFAULT_BUDGET, LinearCode, make_code
from .errors import AlgebraError, BudgetError, ShapeError, WamkitError
from .fields import character
from .poly import WeightPoly
from .polymatrix import PolyMatrix, series_inverse


def state_vectors(spec, m):
    """All of GF(q)^m in canonical order: first coordinate fastest."""
    out = []
    for idx in range(spec.q ** m):
        v, t = [0] * m, idx
        for j in range(m):
            v[j] = t % spec.q
            t //= spec.q
        out.append(tuple(v))
    return out


def state_labels(spec, m):
    return ["".join(str(x) for x in v) for v in state_vectors(spec, m)]


class ConvSeed:
    """A convolutional encoder seed T = (C A; E B) over GF(q)."""

    def __init__(self, spec, n, k, m, t_matrix):
        self.spec = spec
        self.n, self.k, self.m = n, k, m
        t_matrix = [list(row) for row in t_matrix]
        if len(t_matrix) != m + k or any(len(r) != n + m for r in t_matrix):
            raise ShapeError("T must be (m+k) x (n+m)")
        self.t_matrix = t_matrix
        if gflinalg.rank(spec, self.gen_matrix()) != m + k:
            raise ShapeError("constraint-code generator is rank deficient")

    @property
    def c_block(self):
        return [row[:self.n] for row in self.t_matrix[:self.m]]

    @property
    def a_block(self):
        return [row[self.n:] for row in self.t_matrix[:self.m]]

    @property
    def e_block(self):
        return [row[:self.n] for row in self.t_matrix[self.m:]]

    @property
    def b_block(self):
        return [row[self.n:] for row in self.t_matrix[self.m:]]

    def gen_matrix(self):
        """Generator of the constraint code on m + n + m coordinates."""
        rows = []
        for i in range(self.m):
            e_i = [0] * self.m
            e_i[i] = 1
            rows.append(e_i + self.t_matrix[i])
        for i in range(self.k):
            rows.append([0] * self.m + self.t_matrix[self.m + i])
        return rows


class SystematicConvSeed(ConvSeed):
    """A seed whose output carries the input verbatim on k positions.

    Standard shape: the information positions are the first k output
    coordinates, i.e. (C; E) = (0 C0; I_k E0).  With `info_last` the
    identity block sits on the last k output coordinates instead, the
    shape a dual seed naturally arrives in.
    """

    def __init__(self, spec, n, k, m, t_matrix, info_last=False):
        super().__init__(spec, n, k, m, t_matrix)
        self.info_last = info_last
        if info_last:
            self.info_cols = list(range(n - k, n))
        else:
            self.info_cols = list(range(k))
        par = [j for j in range(n) if j not in self.info_cols]
        for i in range(m):
            for j in self.info_cols:
                if self.c_block[i][j] != 0:
                    raise ShapeError("C is nonzero on the information columns")
        for i in range(k):
            for jj, j in enumerate(self.info_cols):
                want = 1 if i == jj else 0
                if self.e_block[i][j] != want:
                    raise ShapeError("E is not the identity on the "
                                     "information columns")
        self.parity_cols = par

    @property
    def c0_block(self):
        return [[row[j] for j in self.parity_cols] for row in self.c_block]

    @property
    def e0_block(self):
        return [[row[j] for j in self.parity_cols] for row in self.e_block]

    @property
    def a0_block(self):
        return self.a_block

    @property
    def b0_block(self):
        return self.b_block


def constraint_code(seed):
    return LinearCode(seed.spec, seed.gen_matrix())


def _enumeration_guard(seed, budget):
    if seed.spec.q ** (seed.m + seed.k) > budget:
        raise BudgetError(
            "enumerating %d^%d constraint codewords exceeds the budget"
            % (seed.spec.q, seed.m + seed.k))


def _transitions(seed, budget=DEFAULT_BUDGET):
    """Yield (state_index, next_state_index, output_block) triples."""
    _enumeration_guard(seed, budget)
    spec = seed.spec
    states = state_vectors(spec, seed.m)
    index = {v: i for i, v in enumerate(states)}
    inputs = state_vectors(spec, seed.k)
    c, a = seed.c_block, seed.a_block
    e, b = seed.e_block, seed.b_block
    for si, w in enumerate(states):
        wc = gflinalg.vec_mat(spec, list(w), c) if seed.m else [0] * seed.n
        wa = gflinalg.vec_mat(spec, list(w), a) if seed.m else []
        for u in inputs:
            if seed.k:
                ue = gflinalg.vec_mat(spec, list(u), e)
                ub = gflinalg.vec_mat(spec, list(u), b)
            else:
                ue, ub = [0] * seed.n, [0] * seed.m
            p = [spec.add[x][y] for x, y in zip(wc, ue)]
            w2 = tuple(spec.add[x][y] for x, y in zip(wa, ub))
            yield si, index[w2], u, p


def wam(seed, budget=DEFAULT_BUDGET):
    """Weight adjacency matrix with homogeneous x/y entries."""
    labels = state_labels(seed.spec, seed.m)
    x = WeightPoly.var("x")
    y = WeightPoly.var("y")
    out = PolyMatrix.zero(labels)
    for si, sj, _u, p in _transitions(seed, budget):
        w = sum(1 for s in p if s)
        out.entries[si][sj] = out.entries[si][sj] + x ** (seed.n - w) * y ** w
    return out


def ipwam(seed, budget=DEFAULT_BUDGET):
    """Input-parity WAM of a systematic seed."""
    if not isinstance(seed, SystematicConvSeed):
        raise ShapeError("input-parity split needs a systematic seed")
    labels = state_labels(seed.spec, seed.m)
    xi, yi = WeightPoly.var("x_I"), WeightPoly.var("y_I")
    xp, yp = WeightPoly.var("x_P"), WeightPoly.var("y_P")
    n, k = seed.n, seed.k
    out = PolyMatrix.zero(labels)
    for si, sj, _u, p in _transitions(seed, budget):
        wi = sum(1 for j in seed.info_cols if p[j])
        wp = sum(1 for j in seed.parity_cols if p[j])
        mono = (xi ** (k - wi) * yi ** wi
                * xp ** (n - k - wp) * yp ** wp)
        out.entries[si][sj] = out.entries[si][sj] + mono
    return out


def iowam(seed, budget=DEFAULT_BUDGET):
    """Input-output WAM: tracks input weight and output weight."""
    labels = state_labels(seed.spec, seed.m)
    xi, yi = WeightPoly.var("x_I"), WeightPoly.var("y_I")
    xo, yo = WeightPoly.var("x_O"), WeightPoly.var("y_O")
    n, k = seed.n, seed.k
    out = PolyMatrix.zero(labels)
    for si, sj, u, p in _transitions(seed, budget):
        wu = sum(1 for s in u if s)
        wp = sum(1 for s in p if s)
        mono = (xi ** (k - wu) * yi ** wu
                * xo ** (n - wp) * yo ** wp)
        out.entries[si][sj] = out.entries[si][sj] + mono
    return out


# --- duality ---

def dual_seed(seed):
    """Seed of the dual constraint code.

    The dual constraint code consists of the words v with
    v . diag(I_m, I_n, -I_m) orthogonal to every row of G~.  Its basis
    is brought to the same (I_m | C' A'; 0 | E' B') block shape; when
    the first m coordinates cannot carry pivots this shape does not
    exist and a ShapeError reports the obstruction rather than silently
    permuting coordinates.
    """
    spec = seed.spec
    m, n, k = seed.m, seed.n, seed.k
    basis = gflinalg.nullspace(spec, seed.gen_matrix())
    # undo the sign twist on the trailing memory block
    twisted = [row[:m + n] + [spec.neg[x] for x in row[m + n:]] for row in basis]
    red, pivots = gflinalg.rref(spec, twisted)
    if pivots[:m] != list(range(m)):
        raise ShapeError("dual basis has no pivots on the memory block; "
                         "no seed of the required block shape exists")
    t_rows = [row[m:] for row in red]
    return ConvSeed(spec, n, n - k, m, t_rows)


def dual_systematic_seed(seed):
    """Dual seed in systematic form, information on the last n-k outputs."""
    if not isinstance(seed, SystematicConvSeed) or seed.info_last:
        raise ShapeError("expected a standard-form systematic seed")
    spec = seed.spec
    dual = dual_seed(seed)
    m, n, kd = dual.m, dual.n, dual.k
    work = [list(r) for r in dual.gen_matrix()]
    # bring the E' block to the identity on the last n-k output columns
    info_cols = [m + j for j in range(n - kd, n)]
    lower = work[m:]
    for t, col in enumerate(info_cols):
        pivot = next((i for i in range(t, kd) if lower[i][col]), None)
        if pivot is None:
            raise ShapeError("dual seed admits no systematic form on the "
                             "trailing information columns")
        lower[t], lower[pivot] = lower[pivot], lower[t]
        inv = spec.inv[lower[t][col]]
        lower[t] = [spec.mul[inv][x] for x in lower[t]]
        for i in range(kd):
            if i != t and lower[i][col]:
                f = lower[i][col]
                lower[i] = [spec.sub(x, spec.mul[f][y])
                            for x, y in zip(lower[i], lower[t])]
    # clear the info columns from the memory rows
    for i in range(m):
        for t, col in enumerate(info_cols):
            f = work[i][col]
            if f:
                work[i] = [spec.sub(x, spec.mul[f][y])
                           for x, y in zip(work[i], lower[t])]
    t_rows = [row[m:] for row in work[:m]] + [row[m:] for row in lower]
    return SystematicConvSeed(spec, n, kd, m, t_rows, info_last=True)


def orthogonality_check(seed, dual, d_max=10):
    """Verify the four block relations and G(D) H(1/D)^T = 0.

    Returns (ok, diagnostics): diagnostics is a list of strings, one per
    failed relation.  A dimension mismatch short circuits with its own
    diagnostic instead of raising.

    For feedback encoders the impulse responses are infinite and a
    naively truncated Laurent product never settles, so the product
    identity is checked with denominators cleared:

        [det(I - D A) G(D)] . [det(D I - A'^T) H(1/D)^T]

    is a product of honest polynomial matrices and must be identically
    zero.  `d_max` caps the degrees retained while multiplying.
    """
    spec = seed.spec
    diags = []
    if (seed.spec != dual.spec or seed.n != dual.n or seed.m != dual.m
            or dual.k != seed.n - seed.k):
        return False, ["dimension mismatch: dual of an (n=%d, k=%d, m=%d) "
                       "seed must be (n=%d, k=%d, m=%d)"
                       % (seed.n, seed.k, seed.m,
                          seed.n, seed.n - seed.k, seed.m)]
    mm = gflinalg.mat_mul
    tr = gflinalg.transpose
    c, a, e, b = seed.c_block, seed.a_block, seed.e_block, seed.b_block
    cd, ad = dual.c_block, dual.a_block
    ed, bd = dual.e_block, dual.b_block
    lhs = gflinalg.mat_add(spec, gflinalg.identity(seed.m),
                           gflinalg.mat_add(spec, mm(spec, c, tr(cd)),
                                            gflinalg.mat_neg(spec, mm(spec, a, tr(ad)))))
    if not gflinalg.is_zero(lhs):
        diags.append("I + C C'^T - A A'^T != 0")
    if not gflinalg.is_zero(gflinalg.mat_add(
            spec, mm(spec, e, tr(ed)), gflinalg.mat_neg(spec, mm(spec, b, tr(bd))))):
        diags.append("E E'^T - B B'^T != 0")
    if not gflinalg.is_zero(gflinalg.mat_add(
            spec, mm(spec, c, tr(ed)), gflinalg.mat_neg(spec, mm(spec, a, tr(bd))))):
        diags.append("C E'^T - A B'^T != 0")
    if not gflinalg.is_zero(gflinalg.mat_add(
            spec, mm(spec, e, tr(cd)), gflinalg.mat_neg(spec, mm(spec, b, tr(ad))))):
        diags.append("E C'^T - B A'^T != 0")
    prod = _dmat_mul(spec, _cleared_generator(spec, seed),
                     _cleared_dual_generator(spec, dual))
    if any(any(ent for ent in row) for row in prod):
        diags.append("G(D) H(1/D)^T is not identically zero")
    return not diags, diags


# --- polynomial matrices over GF(q)[D]: entries are {degree: element} ---

def _dp_add(spec, a, b):
    out = dict(a)
    for d, c in b.items():
        v = spec.add[out.get(d, 0)][c]
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


def _dp_mul(spec, a, b):
    out = {}
    for da, ca in a.items():
        for db, cb in b.items():
            v = spec.mul[ca][cb]
            if v:
                d = da + db
                w = spec.add[out.get(d, 0)][v]
                if w:
                    out[d] = w
                else:
                    out.pop(d, None)
    return out


def _dp_neg(spec, a):
    return {d: spec.neg[c] for d, c in a.items()}


def _dmat_mul(spec, a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[{} for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for t in range(inner):
            if a[i][t]:
                for j in range(cols):
                    if b[t][j]:
                        out[i][j] = _dp_add(spec, out[i][j],
                                            _dp_mul(spec, a[i][t], b[t][j]))
    return out


def _dmat_det(spec, m):
    n = len(m)
    if n == 0:
        return {0: 1}
    if n == 1:
        return dict(m[0][0])
    det = {}
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [[m[i][t] for t in range(n) if t != j] for i in range(1, n)]
        term = _dp_mul(spec, m[0][j], _dmat_det(spec, minor))
        if j % 2:
            term = _dp_neg(spec, term)
        det = _dp_add(spec, det, term)
    return det


def _dmat_adj(spec, m):
    n = len(m)
    if n == 0:
        return []
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            cof = _dmat_det(spec, minor)
            if (i + j) % 2:
                cof = _dp_neg(spec, cof)
            adj[j][i] = cof
    return adj


def _const_dmat(mat):
    return [[{0: x} if x else {} for x in row] for row in mat]


def _scalar_dmat_mul(spec, poly, mat):
    return [[_dp_mul(spec, poly, ent) for ent in row] for row in mat]


def _cleared_generator_blocks(spec, head, mem, a_blk, out_blk):
    """det(I - D A) head + D mem adj(I - D A) out_blk, a polynomial
    matrix given directly by its defining blocks."""
    m = len(a_blk)
    if m == 0:
        return _const_dmat(head)
    i_da = [[{} for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == j:
                i_da[i][j][0] = 1
            if a_blk[i][j]:
                neg = spec.neg[a_blk[i][j]]
                i_da[i][j][1] = neg
    det = _dmat_det(spec, i_da)
    adj = _dmat_adj(spec, i_da)
    core = _dmat_mul(spec, _const_dmat(mem),
                     _dmat_mul(spec, adj, _const_dmat(out_blk)))
    shifted = [[{d + 1: c for d, c in ent.items()} for ent in row]
               for row in core]
    head_mat = _scalar_dmat_mul(spec, det, _const_dmat(head))
    return [[_dp_add(spec, a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(head_mat, shifted)]


def _cleared_generator(spec, seed):
    """det(I - D A) G(D), a polynomial k x n matrix."""
    return _cleared_generator_blocks(spec, seed.e_block, seed.b_block,
                                     seed.a_block, seed.c_block)


def _cleared_dual_generator(spec, dual):
    """det(D I - A'^T) H(1/D)^T, a polynomial n x k' matrix."""
    m = dual.m
    if m == 0:
        return _const_dmat(gflinalg.transpose(dual.e_block))
    at = gflinalg.transpose(dual.a_block) if m else []
    di_at = [[{} for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i == j:
                di_at[i][j][1] = 1
            if at[i][j]:
                neg = spec.neg[at[i][j]]
                di_at[i][j] = _dp_add(spec, di_at[i][j], {0: neg})
    det = _dmat_det(spec, di_at)
    adj = _dmat_adj(spec, di_at)
    ct = _const_dmat(gflinalg.transpose(dual.c_block))
    bt = _const_dmat(gflinalg.transpose(dual.b_block))
    core = _dmat_mul(spec, ct, _dmat_mul(spec, adj, bt))
    head = _scalar_dmat_mul(spec, det,
                            _const_dmat(gflinalg.transpose(dual.e_block)))
    return [[_dp_add(spec, a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(head, core)]


def _gen_coeffs(seed, d_max):
    """Impulse response E, BC, BAC, BA^2 C, ... as k x n matrices."""
    spec = seed.spec
    coeffs = [seed.e_block]
    left = seed.b_block
    for _ in range(d_max):
        coeffs.append(gflinalg.mat_mul(spec, left, seed.c_block))
        left = gflinalg.mat_mul(spec, left, seed.a_block)
    return coeffs


class PolyGenMatrix:
    """k x n polynomial generator matrix, entries as {degree: element}."""

    def __init__(self, spec, entries, d_max):
        self.spec = spec
        self.entries = entries
        self.d_max = d_max
        self.k = len(entries)
        self.n = len(entries[0]) if entries else 0

    def entry_str(self, i, j):
        ent = self.entries[i][j]
        if not ent:
            return "0"
        parts = []
        for d in sorted(ent):
            c = ent[d]
            if d == 0:
                parts.append(str(c))
            else:
                dd = "D" if d == 1 else "D^%d" % d
                parts.append(dd if c == 1 else "%d*%s" % (c, dd))
        return " + ".join(parts)

    def __str__(self):
        rows = []
        for i in range(self.k):
            rows.append("( " + " , ".join(self.entry_str(i, j)
                                          for j in range(self.n)) + " )")
        return "\n".join(rows)


def poly_generator(seed, d_max=10):
    """Truncated expansion of G(D) = E + sum_i B A^(i-1) C D^i."""
    coeffs = _gen_coeffs(seed, d_max)
    entries = [[{} for _ in range(seed.n)] for _ in range(seed.k)]
    for d, mat in enumerate(coeffs):
        for i in range(seed.k):
            for j in range(seed.n):
                if mat[i][j]:
                    entries[i][j][d] = mat[i][j]
    return PolyGenMatrix(seed.spec, entries, d_max)


# --- MacWilliams transforms ---

def fourier_matrix(spec, m):
    """The q^m x q^m character matrix F[a][b] = w^tr(a . b)."""
    states = state_vectors(spec, m)
    elems = spec.elements()
    out = []
    for a in states:
        row = []
        for b in states:
            dot = 0
            for x, y in zip(a, b):
                dot = spec.add[dot][spec.mul[x][y]]
            row.append(character(elems[dot], elems[1]))
        out.append(row)
    return out


def macwilliams_wam(lam, q, n, k, m, spec=None):
    """Dual WAM: F Lam(x + (q-1)y, x - y) F^dagger / q^(m+k)."""
    from .fields import FieldSpec
    if spec is None:
        spec = FieldSpec(*_factor_prime_power(q))
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    image = lam.substitute({"x": x + (q - 1) * y, "y": x - y})
    f = fourier_matrix(spec, m)
    out = image.conjugate_by(f)
    return out.exact_div(q ** (m + k)).to_int_coeffs()


def macwilliams_ipwam(lam, q, n, k, m, spec=None):
    """Dual input-parity WAM; swaps the I and P roles under transform."""
    from .fields import FieldSpec
    if spec is None:
        spec = FieldSpec(*_factor_prime_power(q))
    xi, yi = WeightPoly.var("x_I"), WeightPoly.var("y_I")
    xp, yp = WeightPoly.var("x_P"), WeightPoly.var("y_P")
    image = lam.substitute({
        "x_I": xp + (q - 1) * yp,
        "y_I": xp - yp,
        "x_P": xi + (q - 1) * yi,
        "y_P": xi - yi,
    })
    f = fourier_matrix(spec, m)
    out = image.conjugate_by(f)
    return out.exact_div(q ** (m + k)).to_int_coeffs()


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            t = q
            while t % p == 0:
                t //= p
                r += 1
            if t != 1:
                raise WamkitError("%d is not a prime power" % q)
            return p, r
    raise WamkitError("%d is not a prime power" % q)


def iowam_from_systematic(seed, f_matrix, budget=DEFAULT_BUDGET):
    """IOWAM of the nonsystematic encoder G~ assembled from a systematic
    seed by feedback matrix F (m x k) and L = I_k.

    Entry (w, w') is the product of the systematic seed's input
    enumerator at (w, w' - w F B0) and its output enumerator at (w, w').
    The assembled encoder must have monomial IOWAM entries; a
    two-or-more-term entry is reported as an error.
    """
    if not isinstance(seed, SystematicConvSeed) or seed.info_last:
        raise ShapeError("expected a standard-form systematic seed")
    spec = seed.spec
    m, k, n = seed.m, seed.k, seed.n
    if len(f_matrix) != m or any(len(r) != k for r in f_matrix):
        raise ShapeError("feedback matrix must be m x k")
    assembled = assemble_encoder(seed, f_matrix)
    direct = iowam(assembled, budget)
    for row in direct.entries:
        for e in row:
            if len(e.terms) > 1:
                raise AlgebraError(
                    "assembled encoder has a non-monomial IOWAM entry; "
                    "the factorization formula does not apply")
    delta_s = iowam(seed, budget)
    input_part = delta_s.collapse({"x_O": 1, "y_O": 1})
    lam_out = wam(seed, budget).substitute(
        {"x": WeightPoly.var("x_O"), "y": WeightPoly.var("y_O")})
    fb = gflinalg.mat_mul(spec, f_matrix, seed.b_block)
    states = state_vectors(spec, m)
    index = {v: i for i, v in enumerate(states)}
    labels = state_labels(spec, m)
    out = PolyMatrix.zero(labels)
    for i, w in enumerate(states):
        shift = gflinalg.vec_mat(spec, list(w), fb) if m else []
        for j, w2 in enumerate(states):
            tgt = tuple(spec.sub(a, b) for a, b in zip(w2, shift))
            out.entries[i][j] = (input_part.entries[i][index[tgt]]
                                 * lam_out.entries[i][j])
    if out != direct:
        raise AlgebraError("factorized IOWAM disagrees with the direct "
                           "enumeration; the encoder violates the "
                           "factorization's hypotheses")
    return out


def assemble_encoder(seed, f_matrix):
    """Nonsystematic seed (I_m | F C0+F E0 | A0+F B0; 0 | I_k E0 | B0)."""
    spec = seed.spec
    m, k, n = seed.m, seed.k, seed.n
    c0, e0 = seed.c0_block, seed.e0_block
    fe0 = gflinalg.mat_mul(spec, f_matrix, e0)
    fb0 = gflinalg.mat_mul(spec, f_matrix, seed.b_block)
    c_new = [list(fr) + [spec.add[x][y] for x, y in zip(cr, fer)]
             for fr, cr, fer in zip(f_matrix, c0, fe0)]
    a_new = gflinalg.mat_add(spec, seed.a_block, fb0)
    ident = gflinalg.identity(k)
    e_new = [list(ir) + list(er) for ir, er in zip(ident, e0)]
    t_rows = ([cr + ar for cr, ar in zip(c_new, a_new)]
              + [er + br for er, br in zip(e_new, seed.b_block)])
    return ConvSeed(spec, n, k, m, t_rows)


# --- series enumerators ---

def total_wgf(lam, d_max=10):
    """<0| (I - Lam D)^(-1) |0> truncated at D^d_max."""
    d = WeightPoly.var("D", d_max=d_max)
    m = (PolyMatrix.identity(lam.labels, d_max)
         - lam.map_entries(lambda e: e.truncated(d_max) * d))
    inv = series_inverse(m, d_max)
    return inv.entries[0][0]


def dual_total_wgf(lam, q, n, k, m, d_max=10, spec=None):
    """Total WGF of the dual, routed through the homogeneous dual WAM."""
    dual_lam = macwilliams_wam(lam, q, n, k, m, spec)
    return total_wgf(dual_lam.collapse({"x": 1}), d_max)


def free_wgf(lam, d_max=10):
    """<0| [I - (Lam - |0><0|) D]^(-1) |0>, constant term kept.

    The projector subtraction removes only the zero-state self-loop
    weight 1; any extra terms of the (0, 0) entry stay.
    """
    labels = lam.labels
    hole = PolyMatrix.zero(labels)
    hole.entries[0][0] = WeightPoly.const(1)
    reduced = lam - hole
    d = WeightPoly.var("D", d_max=d_max)
    m = (PolyMatrix.identity(labels, d_max)
         - reduced.map_entries(lambda e: e.truncated(d_max) * d))
    return series_inverse(m, d_max).entries[0][0]


class FreeDistanceResult:
    """Outcome of a free-distance computation.

    `value` is the distance when `determined` is true and there is a
    nonzero fundamental path; value None with determined True means no
    fundamental path exists at all.  determined False means the
    truncation depth was too small to decide.
    """

    def __init__(self, value, determined, reason=""):
        self.value = value
        self.determined = determined
        self.reason = reason

    def __repr__(self):
        return ("FreeDistanceResult(value=%r, determined=%r)"
                % (self.value, self.determined))


def free_distance(lam, d_max=10):
    """Least positive y-degree among fundamental paths, if decidable."""
    w = free_wgf(lam, d_max)
    positive = [d for d in w.y_degrees() if d > 0]
    if positive:
        return FreeDistanceResult(min(positive), True)
    # no merged path with positive weight seen: are paths still open?
    labels = lam.labels
    hole = PolyMatrix.zero(labels)
    hole.entries[0][0] = WeightPoly.const(1)
    reduced = lam - hole
    power = PolyMatrix.identity(labels)
    alive = False
    for _ in range(d_max):
        power = power * reduced
    for i in range(len(labels)):
        if power.entries[i][0]:
            alive = True
    for j in range(len(labels)):
        if power.entries[0][j]:
            alive = True
    if alive:
        return FreeDistanceResult(None, False,
                                  "paths still open at depth %d; increase "
                                  "the truncation depth" % d_max)
    return FreeDistanceResult(None, True, "no nonzero fundamental path")


def ip_total_wgf(seed, d_max=10, budget=DEFAULT_BUDGET):
    """Input-parity total WGF and its dual, as a (primal, dual) pair."""
    if not isinstance(seed, SystematicConvSeed):
        raise ShapeError("input-parity split needs a systematic seed")
    lam = ipwam(seed, budget)
    primal = total_wgf(lam.collapse({"x_I": 1, "x_P": 1}), d_max)
    dual_lam = macwilliams_ipwam(lam, seed.spec.q, seed.n, seed.k, seed.m,
                                 seed.spec)
    dual = total_wgf(dual_lam.collapse({"x_I": 1, "x_P": 1}), d_max)
    return primal, dual
