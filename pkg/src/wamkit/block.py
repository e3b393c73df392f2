"""Linear block codes: codeword enumeration, duals, and weight
generating functions with their MacWilliams transforms.

All enumeration is exhaustive over the q^k messages, guarded by a
budget, and all transforms are exact integer computations with a final
checked division by q^k.
"""

from . import gflinalg
from .errors import BudgetError, FieldError, ShapeError, WamkitError
from .poly import WeightPoly

DEFAULT_BUDGET = 2 ** 26


class LinearCode:
    """An [n, k] code over GF(q), given by a full-rank generator matrix.

    The generator is a k x n list of lists of element indices.
    """

    def __init__(self, spec, generator):
        self.spec = spec
        self.generator = [list(row) for row in generator]
        self.k = len(self.generator)
        if self.k == 0:
            raise WamkitError("zero-row generator; pass n explicitly via the "
                              "(spec, [], n) constructor helper")
        self.n = len(self.generator[0])
        if any(len(row) != self.n for row in self.generator):
            raise ShapeError("ragged generator matrix")
        for row in self.generator:
            for x in row:
                if not 0 <= x < spec.q:
                    raise FieldError("entry %r is not an element index" % (x,))
        if gflinalg.rank(spec, self.generator) != self.k:
            raise ShapeError("generator rows are linearly dependent")

    def enumerate_codewords(self, budget=DEFAULT_BUDGET):
        """Yield all q^k codewords, messages in index order."""
        spec, k = self.spec, self.k
        if spec.q ** k > budget:
            raise BudgetError("enumeration of %d^%d codewords exceeds budget"
                              % (spec.q, k))
        for idx in range(spec.q ** k):
            msg, t = [0] * k, idx
            for j in range(k):
                msg[j] = t % spec.q
                t //= spec.q
            yield gflinalg.vec_mat(spec, msg, self.generator)


class _ZeroCode:
    """The trivial [n, 0] code; only needed so duals stay total."""

    def __init__(self, spec, n):
        self.spec = spec
        self.generator = []
        self.k = 0
        self.n = n

    def enumerate_codewords(self, budget=DEFAULT_BUDGET):
        yield [0] * self.n


def make_code(spec, generator, n=None):
    if generator:
        return LinearCode(spec, generator)
    if n is None:
        raise WamkitError("empty generator needs an explicit length")
    return _ZeroCode(spec, n)


class SystematicCode(LinearCode):
    """A code whose generator has the shape (I_k | A)."""

    def __init__(self, spec, generator):
        super().__init__(spec, generator)
        for i in range(self.k):
            for j in range(self.k):
                want = 1 if i == j else 0
                if self.generator[i][j] != want:
                    raise ShapeError("generator is not of the form (I_k | A)")

    @property
    def parity_part(self):
        return [row[self.k:] for row in self.generator]


def dual_code(code):
    """The dual code under the standard inner product.

    For a systematic (I_k | A) generator the result has the systematic
    dual generator (-A^T | I_{n-k}), which falls out of the kernel
    computation without special casing.
    """
    spec = code.spec
    if code.k == 0:
        return LinearCode(spec, gflinalg.identity(code.n))
    basis = gflinalg.nullspace(spec, code.generator)
    if not basis:
        return _ZeroCode(spec, code.n)
    return LinearCode(spec, basis)


def hwgf(code, budget=DEFAULT_BUDGET):
    """Homogeneous Hamming weight generating function sum x^(n-w) y^w."""
    x = WeightPoly.var("x")
    y = WeightPoly.var("y")
    counts = {}
    for word in code.enumerate_codewords(budget):
        w = sum(1 for s in word if s)
        counts[w] = counts.get(w, 0) + 1
    out = WeightPoly.zero()
    for w, c in counts.items():
        out = out + c * x ** (code.n - w) * y ** w
    return out


def macwilliams_hwgf(g, q, k):
    """Transform g(x, y) -> g(x + (q-1)y, x - y) / q^k, exactly."""
    x = WeightPoly.var("x")
    y = WeightPoly.var("y")
    image = g.substitute({"x": x + (q - 1) * y, "y": x - y})
    return image.exact_div(q ** k)


def ipwgf(code, info_last=False, budget=DEFAULT_BUDGET):
    """Input-parity split weight generating function.

    The information set is the first k coordinates (or the last k when
    `info_last` is set, which is the natural reading of a systematic
    dual generator).  Requires the generator to be the identity on that
    set so that the split is well defined.
    """
    k, n = code.k, code.n
    if info_last:
        info = list(range(n - k, n))
    else:
        info = list(range(k))
    parity = [j for j in range(n) if j not in info]
    for i in range(k):
        for jj, j in enumerate(info):
            want = 1 if i == jj else 0
            if code.generator[i][j] != want:
                raise ShapeError("generator is not systematic on the "
                                 "requested information set")
    xi = WeightPoly.var("x_I")
    yi = WeightPoly.var("y_I")
    xp = WeightPoly.var("x_P")
    yp = WeightPoly.var("y_P")
    out = WeightPoly.zero()
    for word in code.enumerate_codewords(budget):
        wi = sum(1 for j in info if word[j])
        wp = sum(1 for j in parity if word[j])
        out = out + (xi ** (k - wi) * yi ** wi
                     * xp ** (n - k - wp) * yp ** wp)
    return out


def macwilliams_ipwgf(g, q, k):
    """Input/parity MacWilliams transform; swaps the I and P roles."""
    xi = WeightPoly.var("x_I")
    yi = WeightPoly.var("y_I")
    xp = WeightPoly.var("x_P")
    yp = WeightPoly.var("y_P")
    image = g.substitute({
        "x_I": xp + (q - 1) * yp,
        "y_I": xp - yp,
        "x_P": xi + (q - 1) * yi,
        "y_P": xi - yi,
    })
    return image.exact_div(q ** k)
