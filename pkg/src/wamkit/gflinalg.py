"""Dense linear algebra over GF(q); matrices are lists of lists of
element indices into a FieldSpec's tables."""

from .errors import ShapeError


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = 1
    return m


def mat_add(spec, a, b):
    return [[spec.add[x][y] for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(spec, a):
    return [[spec.neg[x] for x in row] for row in a]


def mat_mul(spec, a, b):
    if a and b and len(a[0]) != len(b):
        raise ShapeError("matrix dimensions %dx%d and %dx%d do not chain"
                         % (len(a), len(a[0]), len(b), len(b[0])))
    cols = len(b[0]) if b else 0
    if not cols:
        # an empty right factor (n x 0, or 0 x 0 from transposing an
        # empty matrix) always yields rows of length zero
        return zeros(len(a), 0)
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        oi = out[i]
        for t, x in enumerate(row):
            if x:
                bt = b[t]
                mx = spec.mul[x]
                for j in range(cols):
                    if bt[j]:
                        oi[j] = spec.add[oi[j]][mx[bt[j]]]
    return out


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def vec_mat(spec, v, a):
    return mat_mul(spec, [list(v)], a)[0]


def rref(spec, a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = spec.inv[m[r][c]]
        m[r] = [spec.mul[inv][x] for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [spec.sub(x, spec.mul[f][y]) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(spec, a):
    return len(rref(spec, a)[1])


def nullspace(spec, a):
    """Basis of the right kernel {v : a v^T = 0}, one row per basis vector."""
    if not a:
        return []
    cols = len(a[0])
    red, pivots = rref(spec, a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = spec.neg[red[i][f]]
        basis.append(v)
    return basis


def is_zero(a):
    return all(all(x == 0 for x in row) for row in a)
