"""Quantum convolutional codes (entanglement assisted) from Clifford
seeds: weight adjacency matrices, duality, polynomial check matrices
and state diagrams.

A code uses a Clifford seed on n + m qubits.  Input qubits are split
into memory (I_M), logical (I_L), ancilla (I_A) and entangled (I_E)
roles; output qubits into next-memory (I_Mout) and physical (I_P).  The
WAM enumerates the image of M (x) L (x) S^Z (x) I over all memory words
M, logical words L and Z-type ancilla words S^Z, reading off the input
memory word, the physical output weight, and the output memory word.
The sum of all entries at x = y = 1 is therefore 4^m * 4^k * 2^a.
"""

from .errors import ShapeError
from .pauli import (PauliWord, pauli_state_labels, pauli_state_words,
                    symplectic_product)
from .poly import WeightPoly
from .polymatrix import PolyMatrix

# single-qubit transform kernel in the I, X, Y, Z basis
F1 = (
    (1, 1, 1, 1),
    (1, 1, -1, -1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
)


class EaqccSpec:
    """A Clifford seed plus role assignments for an ((n, k; c, m)) code.

    Role sets hold 1-based qubit positions.  Input roles partition
    1..n+m into I_M (size m), I_L (size k), I_A (size a = n-k-c) and
    I_E (size c); output roles partition the same range into I_Mout
    (size m) and I_P (size n).
    """

    def __init__(self, seed, n, k, c, m, i_m, i_l, i_a, i_e, i_mout, i_p):
        self.seed = seed
        self.n, self.k, self.c, self.m = n, k, c, m
        self.a = n - k - c
        if self.a < 0:
            raise ShapeError("need k + c <= n")
        if seed.width != n + m:
            raise ShapeError("seed acts on %d qubits, expected n + m = %d"
                             % (seed.width, n + m))
        self.i_m = tuple(sorted(i_m))
        self.i_l = tuple(sorted(i_l))
        self.i_a = tuple(sorted(i_a))
        self.i_e = tuple(sorted(i_e))
        self.i_mout = tuple(sorted(i_mout))
        self.i_p = tuple(sorted(i_p))
        full = set(range(1, n + m + 1))
        if (len(self.i_m), len(self.i_l), len(self.i_a), len(self.i_e)) != \
                (m, k, self.a, c):
            raise ShapeError("input role sizes do not match (k, c, m)")
        if set(self.i_m) | set(self.i_l) | set(self.i_a) | set(self.i_e) != full \
                or m + k + self.a + c != n + m:
            raise ShapeError("input roles do not partition the qubits")
        if (len(self.i_mout), len(self.i_p)) != (m, n) \
                or set(self.i_mout) | set(self.i_p) != full:
            raise ShapeError("output roles do not partition the qubits")

    def validate_clifford(self):
        return self.seed.validate()


def dual_spec(spec):
    """Dual code: logical and entangled roles trade places."""
    return EaqccSpec(spec.seed, spec.n, spec.c, spec.k, spec.m,
                     spec.i_m, spec.i_e, spec.i_a, spec.i_l,
                     spec.i_mout, spec.i_p)


def constraint_stabilizers(spec):
    """Generators of the constraint code's stabilizer group, as words on
    m + n + m qubits ordered (memory in : physical : memory out).

    Memory and entangled inputs contribute a Z-type and an X-type
    generator each; ancilla inputs contribute the Z-type one only.
    """
    out = []
    for t, pos in enumerate(spec.i_m):
        for kind in ("Z", "X"):
            head = PauliWord.single(spec.m, t, kind)
            out.append(_extend(spec, head, pos, kind))
    for pos in spec.i_e:
        for kind in ("Z", "X"):
            out.append(_extend(spec, PauliWord.identity(spec.m), pos, kind))
    for pos in spec.i_a:
        out.append(_extend(spec, PauliWord.identity(spec.m), pos, "Z"))
    return out


def _extend(spec, head, pos, kind):
    img = spec.seed.conjugate(
        PauliWord.single(spec.seed.width, pos - 1, kind))
    body = img.restrict([p - 1 for p in spec.i_p])
    tail = img.restrict([p - 1 for p in spec.i_mout])
    return PauliWord(head.pairs + body.pairs + tail.pairs)


def _enumerate_edges(spec):
    """Yield (mem_in, logical, physical, mem_out) over the enumeration
    set {U (M x L x S^Z x I) U^dagger}."""
    seed = spec.seed
    width = seed.width
    mem_words = pauli_state_words(spec.m)
    log_words = pauli_state_words(spec.k)
    anc_words = []
    for idx in range(2 ** spec.a):
        pairs, t = [], idx
        for _ in range(spec.a):
            pairs.append((t & 1, 0))
            t >>= 1
        anc_words.append(PauliWord(pairs))
    p_pos = [p - 1 for p in spec.i_p]
    mo_pos = [p - 1 for p in spec.i_mout]
    for mem in mem_words:
        for log in log_words:
            for anc in anc_words:
                pairs = [(0, 0)] * width
                for t, pos in enumerate(spec.i_m):
                    pairs[pos - 1] = mem.pairs[t]
                for t, pos in enumerate(spec.i_l):
                    pairs[pos - 1] = log.pairs[t]
                for t, pos in enumerate(spec.i_a):
                    pairs[pos - 1] = anc.pairs[t]
                img = seed.conjugate(PauliWord(pairs))
                yield (mem, log, img.restrict(p_pos), img.restrict(mo_pos))


def quantum_wam(spec):
    """WAM over the memory basis {I,X,Y,Z}^m, first qubit fastest."""
    labels = pauli_state_labels(spec.m)
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    out = PolyMatrix.zero(labels)
    for mem, _log, phys, mem_out in _enumerate_edges(spec):
        i, j = mem.state_index(), mem_out.state_index()
        w = phys.weight()
        out.entries[i][j] = out.entries[i][j] + x ** (spec.n - w) * y ** w
    return out


def _kron_f(m):
    """F1^(x)m in the canonical state order (first qubit fastest)."""
    words = pauli_state_words(m)
    size = 4 ** m
    out = [[1] * size for _ in range(size)]
    for i, wi in enumerate(words):
        for j, wj in enumerate(words):
            v = 1
            for a, b in zip(_single_indices(wi), _single_indices(wj)):
                v *= F1[a][b]
            out[i][j] = v
    return out


def _single_indices(word):
    from .pauli import LETTERS, _BITS_TO_LETTER
    return [LETTERS.index(_BITS_TO_LETTER[p]) for p in word.pairs]


def quantum_macwilliams(lam, n, k, a, m):
    """Dual WAM: F^(x)m Lam(x + 3y, x - y) F^(x)m / (4^m 4^k 2^a)."""
    x, y = WeightPoly.var("x"), WeightPoly.var("y")
    image = lam.substitute({"x": x + 3 * y, "y": x - y})
    f = _kron_f(m)
    out = image.conjugate_by(f)
    return out.exact_div(4 ** m * 4 ** k * 2 ** a).to_int_coeffs()


def dual_wam(spec):
    return quantum_macwilliams(quantum_wam(spec), spec.n, spec.k, spec.a,
                               spec.m)


# --- polynomial check matrices ---

class PolyCheckMatrix:
    """Rows of binary symplectic vectors with D coefficients.

    Each row is a dict degree -> tuple of (z, x) pairs on n qubits.
    """

    def __init__(self, n, rows):
        self.n = n
        self.rows = rows

    def row_str(self, i):
        row = self.rows[i]
        if not row:
            return "I" * self.n
        parts = []
        for d in sorted(row):
            word = PauliWord(row[d]).letters()
            parts.append(word if d == 0 else
                         ("D*%s" % word if d == 1 else "D^%d*%s" % (d, word)))
        return " + ".join(parts)

    def __str__(self):
        return "\n".join(self.row_str(i) for i in range(len(self.rows)))


def binary_symplectic_matrix(spec):
    """The seed's action as a binary matrix, rows (Z_i, X_i per input
    qubit in role order memory, logical, ancilla, entangled), columns
    (physical bit pairs, then output-memory bit pairs)."""
    seed = spec.seed
    p_pos = [p - 1 for p in spec.i_p]
    mo_pos = [p - 1 for p in spec.i_mout]
    rows = []
    order = list(spec.i_m) + list(spec.i_l) + list(spec.i_a) + list(spec.i_e)
    for pos in order:
        for kind in ("Z", "X"):
            img = seed.conjugate(PauliWord.single(seed.width, pos - 1, kind))
            bits = []
            for p in p_pos:
                bits.extend(img.pairs[p])
            for p in mo_pos:
                bits.extend(img.pairs[p])
            rows.append(bits)
    return rows


def _gf2_matmul(a, b):
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    out = []
    for row in a:
        acc = [0] * cols
        for t, v in enumerate(row):
            if v:
                bt = b[t]
                acc = [x ^ y for x, y in zip(acc, bt)]
        out.append(acc)
    return out


def poly_check_matrix(spec, d_max=10):
    """Truncated polynomial stabilizer/logical matrices.

    Returns (s_z, s_e, logical): the Z-type ancilla rows S^Z(D) (a of
    them), the entangled rows S^E(D) (2c), and the logical rows L(D)
    (2k), each a PolyCheckMatrix on the n physical qubits.
    """
    m2 = binary_symplectic_matrix(spec)
    n2, mm2 = 2 * spec.n, 2 * spec.m
    f_blk = [row[:n2] for row in m2[:mm2]]
    a_blk = [row[n2:] for row in m2[:mm2]]
    g_blk = [row[:n2] for row in m2[mm2:mm2 + 2 * spec.k]]
    b_blk = [row[n2:] for row in m2[mm2:mm2 + 2 * spec.k]]
    h_blk = [row[:n2] for row in m2[mm2 + 2 * spec.k:mm2 + 2 * spec.k + 2 * spec.a]]
    c_blk = [row[n2:] for row in m2[mm2 + 2 * spec.k:mm2 + 2 * spec.k + 2 * spec.a]]
    k_blk = [row[:n2] for row in m2[mm2 + 2 * spec.k + 2 * spec.a:]]
    e_blk = [row[n2:] for row in m2[mm2 + 2 * spec.k + 2 * spec.a:]]
    hz_blk = [h_blk[2 * i] for i in range(spec.a)]
    cz_blk = [c_blk[2 * i] for i in range(spec.a)]

    def expand(head, mem):
        """head + D mem (I - D A)^(-1) F as {degree: rows}."""
        coeffs = {0: head}
        cur = mem
        for d in range(1, d_max + 1):
            contrib = _gf2_matmul(cur, f_blk)
            if any(any(r) for r in contrib):
                coeffs[d] = contrib
            cur = _gf2_matmul(cur, a_blk)
        return coeffs

    def to_rows(coeffs, count):
        rows = []
        for i in range(count):
            row = {}
            for d, mat in coeffs.items():
                bits = mat[i]
                pairs = tuple((bits[2 * t], bits[2 * t + 1])
                              for t in range(spec.n))
                if any(z or x for z, x in pairs):
                    row[d] = pairs
            rows.append(row)
        return rows

    s_z = PolyCheckMatrix(spec.n, to_rows(expand(hz_blk, cz_blk), spec.a))
    s_e = PolyCheckMatrix(spec.n, to_rows(expand(k_blk, e_blk), 2 * spec.c))
    logical = PolyCheckMatrix(spec.n, to_rows(expand(g_blk, b_blk), 2 * spec.k))
    return s_z, s_e, logical


def _cleared_check_rows(spec):
    """det(I - D A)-cleared polynomial rows of L(D), S^Z(D), S^E(D).

    Memory loops make the raw impulse responses infinite, so the
    symplectic pairing is checked on these finite polynomial rows
    instead; clearing by the unit power series det(I - D A) preserves
    whether the pairing vanishes at every offset.
    """
    from .conv import (_cleared_generator_blocks, _dp_add, _dp_mul)
    from .fields import FieldSpec
    gf2 = FieldSpec(2)
    m2 = binary_symplectic_matrix(spec)
    n2, mm2 = 2 * spec.n, 2 * spec.m
    f_blk = [row[:n2] for row in m2[:mm2]]
    a_blk = [row[n2:] for row in m2[:mm2]]
    g_blk = [row[:n2] for row in m2[mm2:mm2 + 2 * spec.k]]
    b_blk = [row[n2:] for row in m2[mm2:mm2 + 2 * spec.k]]
    h_blk = [row[:n2] for row in m2[mm2 + 2 * spec.k:mm2 + 2 * spec.k + 2 * spec.a]]
    c_blk = [row[n2:] for row in m2[mm2 + 2 * spec.k:mm2 + 2 * spec.k + 2 * spec.a]]
    k_blk = [row[:n2] for row in m2[mm2 + 2 * spec.k + 2 * spec.a:]]
    e_blk = [row[n2:] for row in m2[mm2 + 2 * spec.k + 2 * spec.a:]]
    hz_blk = [h_blk[2 * i] for i in range(spec.a)]
    cz_blk = [c_blk[2 * i] for i in range(spec.a)]
    out = {}
    for name, head, mem in (("L", g_blk, b_blk), ("S^Z", hz_blk, cz_blk),
                            ("S^E", k_blk, e_blk)):
        out[name] = _cleared_generator_blocks(gf2, head, mem, a_blk, f_blk)
    return out


def _poly_row_pairing(row_a, row_b, n):
    """Offsets t where sum_d <a_d, b_(d+t)> is odd; rows are lists of
    {degree: bit} polynomial entries of width 2n."""
    degs_a = sorted({d for ent in row_a for d in ent})
    degs_b = sorted({d for ent in row_b for d in ent})
    if not degs_a or not degs_b:
        return []

    def word_at(row, d):
        bits = [ent.get(d, 0) for ent in row]
        return PauliWord(tuple((bits[2 * t], bits[2 * t + 1])
                               for t in range(n)))

    bad = []
    for t in range(degs_b[0] - degs_a[-1], degs_b[-1] - degs_a[0] + 1):
        acc = 0
        for d in degs_a:
            acc ^= symplectic_product(word_at(row_a, d), word_at(row_b, d + t))
        if acc:
            bad.append(t)
    return bad


def check_poly_orthogonality(spec, d_max=10):
    """Logical rows must commute with all stabilizer rows at every
    D-offset; returns (ok, diagnostics)."""
    rows = _cleared_check_rows(spec)
    diags = []
    for i, lrow in enumerate(rows["L"]):
        for name in ("S^Z", "S^E"):
            for j, srow in enumerate(rows[name]):
                bad = _poly_row_pairing(lrow, srow, spec.n)
                if bad:
                    diags.append("L row %d vs %s row %d: nonzero pairing at "
                                 "offsets %s" % (i + 1, name, j + 1, bad))
    return not diags, diags


# --- state diagram ---

def state_diagram_edges(spec):
    """Edges (mem_in, mem_out, logical_label, physical_label)."""
    edges = []
    for mem, log, phys, mem_out in _enumerate_edges(spec):
        edges.append((mem.letters() or "-", mem_out.letters() or "-",
                      log.letters() or "-", phys.letters()))
    return edges


def state_diagram_dot(spec):
    """Graphviz DOT text: one node per memory word, edges labelled
    'logical,physical'."""
    lines = ["digraph state_diagram {", "  rankdir=LR;"]
    for label in pauli_state_labels(spec.m):
        lines.append('  "%s";' % label)
    for src, dst, log, phys in state_diagram_edges(spec):
        lines.append('  "%s" -> "%s" [label="%s,%s"];' % (src, dst, log, phys))
    lines.append("}")
    return "\n".join(lines)
