"""Tensor squares and cubes over a presented algebra or an Ore extension.

A tensor element stores a sparse map from tuples of normal-form basis
words to rational coefficients.  Because normal-form words are a basis,
equality and the zero test are exact dictionary comparisons; that is what
lets every identity checked downstream be a decision.

The carrier (a ``Presentation`` or an ``OreExt``) supplies three hooks:
``tensor_normalize_word``, ``elem_from_word_terms`` and ``alg``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ArityError, CarrierMismatch
from .freealg import as_scalar, deglex_key

MAX_ARITY = 3


class TensorElem:
    """Element of carrier^(tensor arity), arity 1..3 supported, slots normal."""

    __slots__ = ("carrier", "arity", "terms")

    def __init__(self, carrier, arity: int, terms):
        if not 1 <= arity <= MAX_ARITY:
            raise ArityError(f"tensor arity {arity} outside 1..{MAX_ARITY}")
        self.carrier = carrier
        self.arity = arity
        clean = {}
        for key, c in terms.items():
            c = as_scalar(c)
            if not c:
                continue
            key = tuple(tuple(w) for w in key)
            if len(key) != arity:
                raise ArityError(f"key {key} does not match arity {arity}")
            clean[key] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_raw(cls, carrier, arity, raw_terms):
        """Build from possibly non-normal slot words, normalizing each slot."""
        acc = {}
        for key, c in raw_terms.items():
            partial = [((), as_scalar(c))]
            for w in key:
                nf = carrier.tensor_normalize_word(tuple(w))
                partial = [
                    (ws + (w2,), cc * c2)
                    for ws, cc in partial
                    for w2, c2 in nf.items()
                ]
            for ws, cc in partial:
                s = acc.get(ws, 0) + cc
                if s:
                    acc[ws] = s
                else:
                    acc.pop(ws, None)
        return cls(carrier, arity, acc)

    @classmethod
    def zero(cls, carrier, arity=2):
        return cls(carrier, arity, {})

    @classmethod
    def one(cls, carrier, arity=2):
        return cls(carrier, arity, {((),) * arity: Fraction(1)})

    # -- helpers ----------------------------------------------------------

    def _check_compatible(self, other):
        if self.carrier is not other.carrier:
            raise CarrierMismatch("tensors over different carriers")
        if self.arity != other.arity:
            raise ArityError(f"arity {self.arity} vs {other.arity}")

    def _coerce(self, other):
        if isinstance(other, TensorElem):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            return TensorElem(
                self.carrier, self.arity, {((),) * self.arity: c} if c else {}
            )
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return TensorElem(self.carrier, self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return TensorElem(
            self.carrier, self.arity, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Slotwise product: (a ox b)(c ox d) = ac ox bd, bilinearly."""
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            return TensorElem(
                self.carrier, self.arity, {k: c * v for k, v in self.terms.items()}
            )
        if not isinstance(other, TensorElem):
            return NotImplemented
        self._check_compatible(other)
        acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                partial = [((), c1 * c2)]
                for u, v in zip(k1, k2):
                    prod = self.carrier.tensor_normalize_word(u + v)
                    partial = [
                        (ws + (w,), cc * cw)
                        for ws, cc in partial
                        for w, cw in prod.items()
                    ]
                for ws, cc in partial:
                    s = acc.get(ws, 0) + cc
                    if s:
                        acc[ws] = s
                    else:
                        acc.pop(ws, None)
        return TensorElem(self.carrier, self.arity, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (
            isinstance(other, TensorElem)
            and self.carrier is other.carrier
            and self.arity == other.arity
            and self.terms == other.terms
        )

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def flip(self):
        """Reverse the slot order (used by the cocommutativity test)."""
        return TensorElem(
            self.carrier,
            self.arity,
            {tuple(reversed(k)): c for k, c in self.terms.items()},
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        render = self.carrier.alg.render_word
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(map(deglex_key, k))):
            c = self.terms[key]
            body = " ox ".join(render(w) for w in key)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def tensor_of(*factors):
    """Tensor product of algebra elements and scalars, one slot per factor.

    A scalar factor occupies a slot as a multiple of the unit.
    """
    carrier = None
    for f in factors:
        if not isinstance(f, (int, Fraction)):
            carrier = _carrier_of(f)
            break
    if carrier is None:
        raise ValueError("tensor_of needs at least one algebra element")
    partial = [((), Fraction(1))]
    for f in factors:
        if isinstance(f, (int, Fraction)):
            terms = {(): as_scalar(f)}
        else:
            if _carrier_of(f) is not carrier:
                raise CarrierMismatch("tensor factors over different carriers")
            terms = f.terms
        partial = [
            (ws + (w,), c * c2) for ws, c in partial for w, c2 in terms.items()
        ]
    acc = {}
    for ws, c in partial:
        if c:
            acc[ws] = acc.get(ws, 0) + c
    return TensorElem(carrier, len(factors), {k: c for k, c in acc.items() if c})


def tensor_concat(left, right):
    """Stack slots of two tensor-or-element values into one tensor."""
    lt = _as_tensor(left)
    rt = _as_tensor(right)
    if lt.carrier is not rt.carrier:
        raise CarrierMismatch("tensor factors over different carriers")
    acc = {}
    for k1, c1 in lt.terms.items():
        for k2, c2 in rt.terms.items():
            acc[k1 + k2] = acc.get(k1 + k2, 0) + c1 * c2
    return TensorElem(lt.carrier, lt.arity + rt.arity, {k: c for k, c in acc.items() if c})


def _carrier_of(value):
    if isinstance(value, TensorElem):
        return value.carrier
    pres = getattr(value, "pres", None)
    if pres is not None:
        return pres
    ore = getattr(value, "ore", None)
    if ore is not None:
        return ore
    raise TypeError(f"no carrier on {value!r}")


def _as_tensor(value):
    if isinstance(value, TensorElem):
        return value
    carrier = _carrier_of(value)
    return TensorElem(carrier, 1, {(w,): c for w, c in value.terms.items()})


def slot_map(t: TensorElem, maps):
    """Apply one map per slot and recombine multilinearly.

    Each entry of ``maps`` is None (identity) or a callable taking a
    carrier element; it may return a scalar (dropping the slot), an
    algebra element (keeping one slot), or a tensor square (splitting the
    slot in two).  The result is a scalar, an element, or a tensor,
    depending on the total arity.
    """
    if len(maps) != t.arity:
        raise ArityError(f"{len(maps)} maps for arity {t.arity}")
    carrier = t.carrier
    acc = {}
    for key, coeff in t.terms.items():
        partial = [((), coeff)]
        for w, f in zip(key, maps):
            if f is None:
                pieces = [((w,), Fraction(1))]
            else:
                val = f(carrier.elem_from_word_terms({w: Fraction(1)}))
                if isinstance(val, (int, Fraction)):
                    pieces = [((), as_scalar(val))]
                elif isinstance(val, TensorElem):
                    pieces = list(val.terms.items())
                else:
                    pieces = [((w2,), c2) for w2, c2 in val.terms.items()]
            partial = [
                (ws + k2, c * c2) for ws, c in partial for k2, c2 in pieces if c * c2
            ]
        for ws, c in partial:
            s = acc.get(ws, 0) + c
            if s:
                acc[ws] = s
            else:
                acc.pop(ws, None)
    arities = {len(k) for k in acc}
    if len(arities) > 1:
        raise ArityError(f"inconsistent result arities {arities}")
    arity = arities.pop() if arities else None
    if arity is None:
        # no surviving terms: infer arity from the maps on a probe term
        arity = 0
        for f in maps:
            if f is None:
                arity += 1
            else:
                arity += _map_arity(f, carrier)
    if arity == 0:
        return sum(acc.values(), Fraction(0))
    if arity == 1:
        return carrier.elem_from_word_terms({k[0]: c for k, c in acc.items()})
    if arity > MAX_ARITY:
        raise ArityError(f"result arity {arity} exceeds {MAX_ARITY}")
    return TensorElem(carrier, arity, acc)


def _map_arity(f, carrier):
    val = f(carrier.elem_from_word_terms({(): Fraction(1)}))
    if isinstance(val, (int, Fraction)):
        return 0
    if isinstance(val, TensorElem):
        return val.arity
    return 1


def merge_slots(t: TensorElem, i: int = 0):
    """Multiply slots i and i+1 together, lowering the arity by one."""
    if not 0 <= i < t.arity - 1:
        raise ArityError(f"cannot merge slots {i},{i+1} of arity {t.arity}")
    acc = {}
    for key, coeff in t.terms.items():
        prod = t.carrier.tensor_normalize_word(key[i] + key[i + 1])
        for w, c in prod.items():
            k2 = key[:i] + (w,) + key[i + 2 :]
            s = acc.get(k2, 0) + coeff * c
            if s:
                acc[k2] = s
            else:
                acc.pop(k2, None)
    if t.arity - 1 == 1:
        return t.carrier.elem_from_word_terms({k[0]: c for k, c in acc.items()})
    return TensorElem(t.carrier, t.arity - 1, acc)


def t_flatten(t: TensorElem):
    """Multiply all slots left to right down to a single algebra element."""
    out = t
    while isinstance(out, TensorElem) and out.arity > 1:
        out = merge_slots(out, 0)
    if isinstance(out, TensorElem):
        return t.carrier.elem_from_word_terms({k[0]: c for k, c in out.terms.items()})
    return out


def lift_tensor(t: TensorElem, carrier) -> TensorElem:
    """Reinterpret a tensor over a subalgebra inside a larger carrier whose
    normal words extend the original ones (coefficient ring inside its Ore
    extension)."""
    return TensorElem(carrier, t.arity, dict(t.terms))
