"""Finite fields GF(p^r) in a polynomial basis.

An element is identified with an index in range(q): index i has
polynomial coefficients given by the base-p digits of i, least degree
first.  Index 0 is the zero element and index 1 the multiplicative unit.
Arithmetic is table driven, so FieldSpec construction does all the work
once and element operations are dictionary-free integer lookups.
"""

from .cyclotomic import root_of_unity
from .errors import FieldError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# --- polynomial helpers over GF(p), coefficient lists low degree first ---

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        c = (a[-1] * inv_lb) % p
        q[da - db] = c
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        _poly_trim(a)
    return q, a


def _poly_mulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    _, r = _poly_divmod(out, mod, p)
    return r


def _irreducible(poly, p):
    """Trial division test for a monic poly of degree r over GF(p)."""
    r = len(poly) - 1
    if r < 1:
        return False
    if poly[0] == 0:  # divisible by x
        return r == 1
    for deg in range(1, r // 2 + 1):
        for idx in range(p ** deg):
            cand = [0] * (deg + 1)
            t = idx
            for j in range(deg):
                cand[j] = t % p
                t //= p
            cand[deg] = 1
            _, rem = _poly_divmod(list(poly), cand, p)
            if not _poly_trim(rem):
                return False
    return True


def default_modulus(p, r):
    """Lexicographically least monic irreducible of degree r over GF(p)."""
    for idx in range(p ** r):
        cand = [0] * (r + 1)
        t = idx
        for j in range(r):
            cand[j] = t % p
            t //= p
        cand[r] = 1
        if _irreducible(cand, p):
            return tuple(cand)
    raise FieldError("no irreducible polynomial found (p=%d, r=%d)" % (p, r))


class FieldSpec:
    """GF(p^r) with precomputed add/mul/neg/inv/trace tables."""

    def __init__(self, p, r=1, modulus=None):
        if not _is_prime(p):
            raise FieldError("p=%r is not prime" % (p,))
        if r < 1:
            raise FieldError("extension degree must be >= 1, got %r" % (r,))
        self.p = p
        self.r = r
        self.q = p ** r
        if r == 1:
            self.modulus = (0, 1) if modulus is None else tuple(modulus)
        elif modulus is None:
            self.modulus = default_modulus(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of degree %d" % r)
            if not _irreducible(list(modulus), p):
                raise FieldError("modulus %r is reducible over GF(%d)" % (modulus, p))
            self.modulus = modulus
        self._build_tables()

    def _build_tables(self):
        p, r, q = self.p, self.r, self.q
        coeffs = []
        for i in range(q):
            c, t = [0] * r, i
            for j in range(r):
                c[j] = t % p
                t //= p
            coeffs.append(tuple(c))
        self._coeffs = coeffs

        def to_index(c):
            idx = 0
            for j in reversed(range(r)):
                idx = idx * p + (c[j] % p)
            return idx

        self._to_index = to_index
        self.add = [[to_index([(a + b) % p for a, b in zip(coeffs[i], coeffs[j])])
                     for j in range(q)] for i in range(q)]
        self.neg = [to_index([(-a) % p for a in coeffs[i]]) for i in range(q)]
        mod = list(self.modulus)
        self.mul = []
        for i in range(q):
            row = []
            for j in range(q):
                prod = _poly_mulmod(list(coeffs[i]) or [0], list(coeffs[j]) or [0], mod, p)
                prod += [0] * (r - len(prod))
                row.append(to_index(prod))
            self.mul.append(row)
        self.inv = [None] * q
        for i in range(1, q):
            self.inv[i] = self._pow(i, q - 2)
        self.trace = [self._trace(i) for i in range(q)]

    def _pow(self, i, e):
        acc = 1
        for _ in range(e):
            acc = self.mul[acc][i]
        return acc

    def _trace(self, i):
        p, r = self.p, self.r
        acc, frob = 0, i
        for _ in range(r):
            acc = self.add[acc][frob]
            frob = self._pow(frob, p)
        # trace lands in the prime subfield, whose elements are indices 0..p-1
        if acc >= p:
            raise FieldError("trace fell outside the prime subfield")
        return acc

    def sub(self, i, j):
        return self.add[i][self.neg[j]]

    def element(self, index):
        return FieldElement(self, index)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.q)]

    def from_coeffs(self, coeffs):
        coeffs = list(coeffs) + [0] * (self.r - len(coeffs))
        return FieldElement(self, self._to_index(coeffs))

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus))

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        return "FieldSpec(p=%d, r=%d, modulus=%s)" % (self.p, self.r, list(self.modulus))


class FieldElement:
    """A field element; thin wrapper over an index into the spec's tables."""

    __slots__ = ("spec", "index")

    def __init__(self, spec, index):
        if not 0 <= index < spec.q:
            raise FieldError("element index %r out of range for %r" % (index, spec))
        self.spec = spec
        self.index = index

    @property
    def coeffs(self):
        return self.spec._coeffs[self.index]

    def _check(self, other):
        if isinstance(other, int):
            other = FieldElement(self.spec, other % self.spec.q if self.spec.r == 1
                                 else other)
        if not isinstance(other, FieldElement) or other.spec != self.spec:
            raise FieldError("mixing elements of different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.add[self.index][other.index])

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.sub(self.index, other.index))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.spec, self.spec.mul[self.index][other.index])

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg[self.index])

    def inverse(self):
        if self.index == 0:
            raise FieldError("zero has no inverse")
        return FieldElement(self.spec, self.spec.inv[self.index])

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __bool__(self):
        return self.index != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.index == other
        return (isinstance(other, FieldElement)
                and self.spec == other.spec and self.index == other.index)

    def __hash__(self):
        return hash((self.spec, self.index))

    def __repr__(self):
        return "FieldElement(%d over GF(%d))" % (self.index, self.spec.q)


def field_trace(a):
    """Trace down to the prime subfield; returned as an int in range(p)."""
    return a.spec.trace[a.index]


def character(u, v):
    """Additive character pairing w^tr(u*v); exact, never floating point."""
    if u.spec != v.spec:
        raise FieldError("character arguments from different fields")
    spec = u.spec
    t = spec.trace[spec.mul[u.index][v.index]]
    return root_of_unity(spec.p, t)
