"""Square matrices of WeightPoly entries indexed by state labels."""

from .cyclotomic import CyclotomicInt, cyc_conjugate
from .errors import AlgebraError
from .poly import WeightPoly, _D


class PolyMatrix:
    """A labelled square matrix with polynomial entries.

    Labels fix both the row and column order; two matrices only combine
    when their label lists agree exactly.
    """

    __slots__ = ("labels", "entries")

    def __init__(self, labels, entries):
        labels = list(labels)
        n = len(labels)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise AlgebraError("entries are not %dx%d" % (n, n))
        self.labels = labels
        self.entries = [list(row) for row in entries]

    @classmethod
    def zero(cls, labels, d_max=None):
        n = len(labels)
        return cls(labels, [[WeightPoly.zero(d_max) for _ in range(n)]
                            for _ in range(n)])

    @classmethod
    def identity(cls, labels, d_max=None):
        m = cls.zero(labels, d_max)
        for i in range(len(m.labels)):
            m.entries[i][i] = WeightPoly.const(1, d_max)
        return m

    @property
    def size(self):
        return len(self.labels)

    def _check(self, other):
        if not isinstance(other, PolyMatrix) or other.labels != self.labels:
            raise AlgebraError("matrix labels do not match")

    def __add__(self, other):
        self._check(other)
        return PolyMatrix(self.labels,
                          [[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return PolyMatrix(self.labels,
                          [[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __mul__(self, other):
        if isinstance(other, (int, WeightPoly, CyclotomicInt)):
            return self.map_entries(lambda e: e * other)
        self._check(other)
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = WeightPoly.zero()
                for t in range(n):
                    a = self.entries[i][t]
                    b = other.entries[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.labels, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix)
                and self.labels == other.labels
                and self.entries == other.entries)

    def map_entries(self, fn):
        return PolyMatrix(self.labels,
                          [[fn(e) for e in row] for row in self.entries])

    def substitute(self, mapping):
        return self.map_entries(lambda e: e.substitute(mapping))

    def collapse(self, mapping):
        return self.map_entries(lambda e: e.collapse(mapping))

    def exact_div(self, n):
        return self.map_entries(lambda e: e.exact_div(n))

    def to_int_coeffs(self):
        return self.map_entries(lambda e: e.to_int_coeffs())

    def entry_sum(self):
        acc = WeightPoly.zero()
        for row in self.entries:
            for e in row:
                acc = acc + e
        return acc

    def conjugate_by(self, f):
        """f . self . f^dagger for a scalar matrix f (ints/CyclotomicInt).

        f is given as a plain list of lists in the same basis; its
        conjugate transpose is formed internally.
        """
        n = self.size
        if len(f) != n or any(len(row) != n for row in f):
            raise AlgebraError("scalar matrix size does not match")
        # left = f . self
        left = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = WeightPoly.zero()
                for t in range(n):
                    s = f[i][t]
                    e = self.entries[t][j]
                    if s and e:
                        acc = acc + e * s
                left[i][j] = acc
        # right = left . f^dagger, (f^dagger)[t][j] = conj(f[j][t])
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = WeightPoly.zero()
                for t in range(n):
                    s = cyc_conjugate(f[j][t])
                    e = left[i][t]
                    if s and e:
                        acc = acc + e * s
                out[i][j] = acc
        return PolyMatrix(self.labels, out)

    def __str__(self):
        lines = ["states: " + " ".join(self.labels)]
        for label, row in zip(self.labels, self.entries):
            lines.append("%s: %s" % (label, " | ".join(str(e) for e in row)))
        return "\n".join(lines)

    def __repr__(self):
        return "PolyMatrix(%d states)" % self.size


def series_inverse(m, d_max):
    """Truncated inverse of a matrix of the form I - N*D.

    N must be D-free.  Returns sum_{i<=d_max} N^i D^i with every entry
    truncated at D^d_max.
    """
    n = m.size
    d_var = WeightPoly.var("D", d_max=d_max)
    # split: constant-in-D part must be the identity, linear part gives -N
    ident = PolyMatrix.identity(m.labels)
    const = m.map_entries(lambda e: e.d_coefficient(0))
    if const != ident:
        raise AlgebraError("matrix is not of the form I - N*D")
    neg_n = m.map_entries(lambda e: e.d_coefficient(1))
    for row in m.entries:
        for e in row:
            if any(exp[_D] > 1 for exp in e.terms):
                raise AlgebraError("matrix is not of the form I - N*D")
    big_n = neg_n.map_entries(lambda e: -e)
    result = PolyMatrix.identity(m.labels, d_max)
    power = PolyMatrix.identity(m.labels)
    d_pow = WeightPoly.const(1, d_max)
    for _ in range(d_max):
        power = power * big_n
        d_pow = d_pow * d_var
        result = result + power.map_entries(lambda e, dp=d_pow: e * dp)
    return result
