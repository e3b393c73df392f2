"""Exact arithmetic in Z[w]/Phi_p(w) for a primitive p-th root of unity w.

Elements are stored by their coefficients over the power basis
w^0, ..., w^(p-2).  For p = 2 the basis is just w^0 and w = -1, so every
value is an ordinary integer; helper functions below accept and return
plain ints whenever possible to keep the common binary case cheap.
"""

from .errors import AlgebraError


class CyclotomicInt:
    """An element of Z[w] where w is a primitive p-th root of unity."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p, coeffs):
        if p < 2:
            raise AlgebraError("p must be a prime >= 2, got %r" % (p,))
        coeffs = tuple(coeffs)
        if len(coeffs) != p - 1:
            raise AlgebraError(
                "need %d basis coefficients for p=%d, got %d"
                % (p - 1, p, len(coeffs)))
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, p, n):
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def root_power(cls, p, k):
        """w^k reduced into the power basis."""
        k %= p
        if k < p - 1:
            coeffs = [0] * (p - 1)
            coeffs[k] = 1
            return cls(p, coeffs)
        # w^(p-1) = -(1 + w + ... + w^(p-2))
        return cls(p, (-1,) * (p - 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicInt):
            if other.p != self.p:
                raise AlgebraError("mixing roots of unity of different order")
            return other
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.p, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicInt(
            self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicInt(
            self.p, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.p, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.p
        # convolve, exponents up to 2p-4
        raw = [0] * (2 * p - 3)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    raw[i + j] += a * b
        out = [0] * (p - 1)
        for e, c in enumerate(raw):
            if not c:
                continue
            e %= p
            if e < p - 1:
                out[e] += c
            else:
                for t in range(p - 1):
                    out[t] -= c
        return CyclotomicInt(p, out)

    __rmul__ = __mul__

    def conjugate(self):
        """Complex conjugation, w -> w^(p-1)."""
        p = self.p
        out = [0] * (p - 1)
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            e = (p - j) % p
            if e < p - 1:
                out[e] += c
            else:
                for t in range(p - 1):
                    out[t] -= c
        return CyclotomicInt(p, out)

    def is_integer(self):
        return all(c == 0 for c in self.coeffs[1:])

    def as_int(self):
        if not self.is_integer():
            raise AlgebraError("residual root-of-unity component in %r" % (self,))
        return self.coeffs[0]

    def exact_div(self, n):
        out = []
        for c in self.coeffs:
            q, r = divmod(c, n)
            if r:
                raise AlgebraError("non-exact division of %r by %d" % (self, n))
            out.append(q)
        return CyclotomicInt(self.p, out)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and self.coeffs[0] == other
        if isinstance(other, CyclotomicInt):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_integer():
            return hash(self.coeffs[0])
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return "CyclotomicInt(p=%d, %s)" % (self.p, list(self.coeffs))

    def __str__(self):
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            elif j == 1:
                parts.append("%d*w" % c if c != 1 else "w")
            else:
                parts.append("%d*w^%d" % (c, j) if c != 1 else "w^%d" % j)
        return " + ".join(parts) if parts else "0"


def normalize(value):
    """Collapse a CyclotomicInt with no w-component back to an int."""
    if isinstance(value, CyclotomicInt) and value.is_integer():
        return value.coeffs[0]
    return value


def cyc_conjugate(value):
    if isinstance(value, CyclotomicInt):
        return value.conjugate()
    return value


def root_of_unity(p, k):
    """w^k as an int when possible (always for p = 2)."""
    if p == 2:
        return 1 if k % 2 == 0 else -1
    return normalize(CyclotomicInt.root_power(p, k))
