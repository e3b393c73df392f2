"""Sparse multivariate polynomials over a fixed variable alphabet.

The alphabet is x, y, x_I, y_I, x_P, y_P, x_O, y_O, D.  Terms are stored
in a dict keyed by the 9-tuple of exponents.  Coefficients are ints, or
CyclotomicInt during intermediate character-sum computations; any
coefficient whose root-of-unity part cancels is normalized back to int.

An optional degree cap on D truncates formal power series: terms with a
D-exponent above `d_max` are silently dropped at construction time, so
every arithmetic result stays truncated.
"""

from .cyclotomic import CyclotomicInt, cyc_conjugate, normalize
from .errors import AlgebraError

VARS = ("x", "y", "x_I", "y_I", "x_P", "y_P", "x_O", "y_O", "D")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_NVARS = len(VARS)
_D = _VAR_INDEX["D"]
_ZERO_EXP = (0,) * _NVARS


def _min_dmax(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class WeightPoly:
    """A polynomial (or D-truncated series) with exact coefficients."""

    __slots__ = ("terms", "d_max")

    def __init__(self, terms=None, d_max=None):
        self.d_max = d_max
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if d_max is not None and exp[_D] > d_max:
                    continue
                coeff = normalize(coeff)
                if coeff:
                    clean[exp] = coeff
        self.terms = clean

    # --- constructors ---

    @classmethod
    def zero(cls, d_max=None):
        return cls({}, d_max)

    @classmethod
    def const(cls, c, d_max=None):
        return cls({_ZERO_EXP: c}, d_max)

    @classmethod
    def var(cls, name, exp=1, d_max=None):
        if name not in _VAR_INDEX:
            raise AlgebraError("unknown variable %r" % (name,))
        e = [0] * _NVARS
        e[_VAR_INDEX[name]] = exp
        return cls({tuple(e): 1}, d_max)

    @classmethod
    def monomial(cls, coeff, exps, d_max=None):
        """`exps` maps variable names to exponents."""
        e = [0] * _NVARS
        for name, k in exps.items():
            if name not in _VAR_INDEX:
                raise AlgebraError("unknown variable %r" % (name,))
            e[_VAR_INDEX[name]] = k
        return cls({tuple(e): coeff}, d_max)

    # --- ring operations ---

    def _coerce(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            return WeightPoly.const(other, self.d_max)
        if isinstance(other, WeightPoly):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return WeightPoly(terms, _min_dmax(self.d_max, other.d_max))

    __radd__ = __add__

    def __neg__(self):
        return WeightPoly({e: -c for e, c in self.terms.items()}, self.d_max)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, CyclotomicInt)):
            return WeightPoly({e: other * c for e, c in self.terms.items()},
                              self.d_max)
        if not isinstance(other, WeightPoly):
            return NotImplemented
        d_max = _min_dmax(self.d_max, other.d_max)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                if d_max is not None and ea[_D] + eb[_D] > d_max:
                    continue
                e = tuple(a + b for a, b in zip(ea, eb))
                terms[e] = terms.get(e, 0) + ca * cb
        return WeightPoly(terms, d_max)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise AlgebraError("negative powers are not defined")
        acc = WeightPoly.const(1, self.d_max)
        for _ in range(n):
            acc = acc * self
        return acc

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # --- substitution and collapse ---

    def substitute(self, mapping):
        """Replace every variable occurring in self.

        `mapping` maps variable names to WeightPoly (or int) images.  A
        variable that occurs with positive exponent but has no image is
        an error, so accidental partial substitutions cannot slip by.
        """
        images = {}
        for name, img in mapping.items():
            if name not in _VAR_INDEX:
                raise AlgebraError("unknown variable %r" % (name,))
            if isinstance(img, int):
                img = WeightPoly.const(img, self.d_max)
            images[_VAR_INDEX[name]] = img
        out = WeightPoly.zero(self.d_max)
        for exp, coeff in self.terms.items():
            term = WeightPoly.const(coeff, self.d_max)
            for i, e in enumerate(exp):
                if not e:
                    continue
                if i not in images:
                    raise AlgebraError(
                        "variable %r occurs but has no image" % (VARS[i],))
                term = term * images[i] ** e
            out = out + term
        return out

    def collapse(self, mapping):
        """Like substitute, but variables without an image are kept."""
        full = {VARS[i]: WeightPoly.var(VARS[i], d_max=self.d_max)
                for i in range(_NVARS)}
        full.update(mapping)
        return self.substitute(full)

    # --- coefficient utilities ---

    def map_coeffs(self, fn):
        return WeightPoly({e: fn(c) for e, c in self.terms.items()}, self.d_max)

    def conjugate_coeffs(self):
        return self.map_coeffs(cyc_conjugate)

    def exact_div(self, n):
        """Divide every coefficient by the integer n; error if not exact."""
        out = {}
        for e, c in self.terms.items():
            if isinstance(c, CyclotomicInt):
                out[e] = c.exact_div(n)
            else:
                q, r = divmod(c, n)
                if r:
                    raise AlgebraError("coefficient %r not divisible by %d" % (c, n))
                out[e] = q
        return WeightPoly(out, self.d_max)

    def to_int_coeffs(self):
        """Assert every coefficient is a plain integer and return self."""
        for c in self.terms.values():
            if isinstance(c, CyclotomicInt):
                raise AlgebraError(
                    "residual root-of-unity coefficient %s" % (c,))
        return self

    def is_monomial(self):
        return len(self.terms) <= 1

    def coefficient(self, exps):
        e = [0] * _NVARS
        for name, k in exps.items():
            e[_VAR_INDEX[name]] = k
        return self.terms.get(tuple(e), 0)

    def d_coefficient(self, d):
        """The coefficient of D^d, as a WeightPoly in the other variables."""
        out = {}
        for e, c in self.terms.items():
            if e[_D] == d:
                out[e[:_D] + (0,)] = c
        return WeightPoly(out)

    def max_d_degree(self):
        return max((e[_D] for e in self.terms), default=0)

    def y_degrees(self):
        """Total degree in all y-flavored variables, per term."""
        ys = [_VAR_INDEX[v] for v in ("y", "y_I", "y_P", "y_O")]
        return sorted({sum(e[i] for i in ys) for e in self.terms})

    def truncated(self, d_max):
        return WeightPoly(self.terms, d_max)

    # --- canonical rendering ---

    def _sorted_terms(self):
        def key(item):
            exp = item[0]
            return (sum(exp), tuple(-e for e in exp))
        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for exp, coeff in self._sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(VARS[i])
                elif e > 1:
                    factors.append("%s^%d" % (VARS[i], e))
            if isinstance(coeff, CyclotomicInt):
                body = "(%s)" % coeff
                neg = False
            else:
                neg = coeff < 0
                mag = abs(coeff)
                body = None if mag == 1 and factors else str(mag)
            text = "*".join(([body] if body else []) + factors)
            if not chunks:
                chunks.append(("-" if neg else "") + text)
            else:
                chunks.append(("- " if neg else "+ ") + text)
        return " ".join(chunks)

    def __repr__(self):
        return "WeightPoly(%s)" % (self,)
