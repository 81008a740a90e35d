"""Sparse exact-rational arithmetic in the free associative algebra.

Words are tuples of generator indices (the empty tuple is the unit);
polynomials map words to nonzero ``fractions.Fraction`` coefficients.
The base field is fixed to the rationals so every comparison made
downstream is a decision, never an approximation.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GeneratorMismatch

Scalar = Fraction
Word = tuple  # tuple[int, ...]


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def deglex_key(word: Word):
    """Degree first, then left-to-right index comparison."""
    return (len(word), word)


class FreeAlgebra:
    """Free associative algebra over Q on an ordered tuple of named generators."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"FreeAlgebra({', '.join(self.names)})"

    def ngens(self):
        return len(self.names)

    def poly(self, terms) -> "NCPoly":
        return NCPoly(self, terms)

    def zero(self) -> "NCPoly":
        return NCPoly(self, {})

    def one(self) -> "NCPoly":
        return NCPoly(self, {(): Fraction(1)})

    def gen(self, name) -> "NCPoly":
        return NCPoly(self, {(self.index[name],): Fraction(1)})

    def word(self, *names) -> Word:
        return tuple(self.index[n] for n in names)

    def render_word(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(self.names[i] for i in w)

    def render_terms(self, terms) -> str:
        """Canonical string for a word->coefficient mapping."""
        if not terms:
            return "0"
        parts = []
        for w in sorted(terms, key=deglex_key):
            c = terms[w]
            body = self.render_word(w)
            if c == 1:
                part = body
            elif c == -1:
                part = f"-{body}"
            elif not w:
                part = str(c)
            else:
                part = f"{c}*{body}"
            parts.append(part)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


class NCPoly:
    """Sparse linear combination of words; all arithmetic is exact.

    Instances are treated as immutable: operations return new polynomials
    and never mutate their arguments.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeAlgebra, terms):
        self.alg = alg
        clean = {}
        for w, c in terms.items():
            c = as_scalar(c)
            if c:
                clean[tuple(w)] = c
        self.terms = clean

    def _coerce(self, other):
        if isinstance(other, NCPoly):
            if other.alg != self.alg:
                raise GeneratorMismatch(f"{self.alg} vs {other.alg}")
            return other
        if isinstance(other, (int, Fraction)):
            return NCPoly(self.alg, {(): as_scalar(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return NCPoly(self.alg, terms)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if not c:
                return self.alg.zero()
            return NCPoly(self.alg, {w: c * v for w, v in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = terms.get(w, 0) + c1 * c2
                if s:
                    terms[w] = s
                else:
                    terms.pop(w, None)
        return NCPoly(self.alg, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NCPoly(self.alg, {(): as_scalar(other)})
        return (
            isinstance(other, NCPoly)
            and self.alg == other.alg
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Maximal word length; -1 for the zero polynomial."""
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=deglex_key)

    def leading_coeff(self) -> Fraction:
        return self.terms[self.leading_word()]

    def constant_coeff(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def as_scalar(self) -> Fraction:
        """The coefficient of 1, provided no other word occurs."""
        if any(w for w in self.terms):
            raise ValueError(f"not a scalar: {self}")
        return self.constant_coeff()

    def __repr__(self):
        return self.alg.render_terms(self.terms)
