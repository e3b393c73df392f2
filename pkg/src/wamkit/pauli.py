"""Phase-free Pauli words and Clifford seeds in binary symplectic form.

A Pauli word on n qubits is a tuple of (z, x) bit pairs, one per qubit:
I = (0,0), X = (0,1), Z = (1,0), Y = (1,1).  Multiplication is bitwise
XOR since global phases are quotiented out.
"""

import random

from .errors import ShapeError, WamkitError

_LETTER_TO_BITS = {"I": (0, 0), "X": (0, 1), "Z": (1, 0), "Y": (1, 1)}
_BITS_TO_LETTER = {v: k for k, v in _LETTER_TO_BITS.items()}

# canonical single-qubit order used for state labels and the transform
LETTERS = ("I", "X", "Y", "Z")
_LETTER_INDEX = {s: i for i, s in enumerate(LETTERS)}


class PauliWord:
    """An element of the phase-free Pauli group on a fixed qubit count."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        pairs = tuple((z & 1, x & 1) for z, x in pairs)
        self.pairs = pairs

    @classmethod
    def from_str(cls, text):
        try:
            return cls(tuple(_LETTER_TO_BITS[c] for c in text))
        except KeyError as exc:
            raise WamkitError("bad Pauli letter %r" % (exc.args[0],)) from exc

    @classmethod
    def identity(cls, n):
        return cls(((0, 0),) * n)

    @classmethod
    def single(cls, n, pos, letter):
        """`letter` on qubit `pos` (0-based), identity elsewhere."""
        pairs = [(0, 0)] * n
        pairs[pos] = _LETTER_TO_BITS[letter]
        return cls(pairs)

    def __len__(self):
        return len(self.pairs)

    def __mul__(self, other):
        if len(other) != len(self):
            raise ShapeError("Pauli words of different lengths")
        return PauliWord(tuple((z1 ^ z2, x1 ^ x2) for (z1, x1), (z2, x2)
                               in zip(self.pairs, other.pairs)))

    def __eq__(self, other):
        return isinstance(other, PauliWord) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __bool__(self):
        return any(z or x for z, x in self.pairs)

    def weight(self):
        return sum(1 for z, x in self.pairs if z or x)

    def restrict(self, positions):
        return PauliWord(tuple(self.pairs[i] for i in positions))

    def letters(self):
        return "".join(_BITS_TO_LETTER[p] for p in self.pairs)

    def state_index(self):
        """Index in the {I,X,Y,Z}^m basis, first qubit varying fastest."""
        idx = 0
        for t in reversed(range(len(self.pairs))):
            idx = idx * 4 + _LETTER_INDEX[_BITS_TO_LETTER[self.pairs[t]]]
        return idx

    def __str__(self):
        return self.letters()

    def __repr__(self):
        return "PauliWord(%s)" % self.letters()


def symplectic_product(a, b):
    """0 when the words commute, 1 when they anticommute."""
    if len(a) != len(b):
        raise ShapeError("Pauli words of different lengths")
    acc = 0
    for (z1, x1), (z2, x2) in zip(a.pairs, b.pairs):
        acc ^= (z1 & x2) ^ (x1 & z2)
    return acc


def pauli_state_words(m):
    """All of {I,X,Y,Z}^m in canonical order, first qubit fastest."""
    out = []
    for idx in range(4 ** m):
        t = idx
        pairs = []
        for _ in range(m):
            pairs.append(_LETTER_TO_BITS[LETTERS[t % 4]])
            t //= 4
        out.append(PauliWord(pairs))
    return out


def pauli_state_labels(m):
    return [w.letters() for w in pauli_state_words(m)]


class CliffordSeed:
    """A Clifford unitary on `width` qubits, given by its action on the
    single-qubit Z and X generators (phase-free)."""

    def __init__(self, z_img, x_img):
        if len(z_img) != len(x_img):
            raise ShapeError("need equally many Z and X images")
        self.width = len(z_img)
        for w in list(z_img) + list(x_img):
            if len(w) != self.width:
                raise ShapeError("image width does not match qubit count")
        self.z_img = list(z_img)
        self.x_img = list(x_img)

    def validate(self):
        """Check the symplectic relations; returns (ok, diagnostics)."""
        diags = []
        for i in range(self.width):
            for j in range(self.width):
                if symplectic_product(self.z_img[i], self.z_img[j]):
                    diags.append("images of Z%d and Z%d anticommute" % (i + 1, j + 1))
                if symplectic_product(self.x_img[i], self.x_img[j]):
                    diags.append("images of X%d and X%d anticommute" % (i + 1, j + 1))
                want = 1 if i == j else 0
                if symplectic_product(self.z_img[i], self.x_img[j]) != want:
                    verb = "must anticommute" if want else "must commute"
                    diags.append("images of Z%d and X%d %s" % (i + 1, j + 1, verb))
        return not diags, diags

    def conjugate(self, word):
        """U P U^dagger for a phase-free input word P."""
        if len(word) != self.width:
            raise ShapeError("word width does not match the seed")
        out = PauliWord.identity(self.width)
        for i, (z, x) in enumerate(word.pairs):
            if z:
                out = out * self.z_img[i]
            if x:
                out = out * self.x_img[i]
        return out


def random_clifford_seed(width, rng=None, transvections=None):
    """A random Clifford seed built from symplectic transvections.

    Each transvection T_h maps v to v * h^<v,h>; a product of 20-50 of
    them applied to the identity tableau is symplectic by construction.
    """
    rng = rng or random.Random()
    if transvections is None:
        transvections = rng.randint(20, 50)
    z_img = [PauliWord.single(width, i, "Z") for i in range(width)]
    x_img = [PauliWord.single(width, i, "X") for i in range(width)]
    for _ in range(transvections):
        h = PauliWord(tuple((rng.randint(0, 1), rng.randint(0, 1))
                            for _ in range(width)))
        if not h:
            continue
        z_img = [v * h if symplectic_product(v, h) else v for v in z_img]
        x_img = [v * h if symplectic_product(v, h) else v for v in x_img]
    return CliffordSeed(z_img, x_img)
