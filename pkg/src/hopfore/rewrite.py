"""Oriented word rewriting: finitely presented algebras with canonical
normal forms and bounded local-confluence certification.

Rules rewrite a word (the left side) to a polynomial that is strictly
smaller in degree-lexicographic order, so rewriting always terminates.
Confluence is certified by resolving overlap ambiguities up to a degree
bound; once every ambiguity two rules can form has been resolved, normal
forms are unique in every degree.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DegreeBoundExceeded,
    GeneratorMismatch,
    NotAUnit,
    UnorientableRelation,
)
from .freealg import FreeAlgebra, NCPoly, Word, as_scalar, deglex_key
from .report import Report


class RewriteRule:
    """One oriented rule lhs -> rhs with lhs deglex-greater than every rhs word."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Word, rhs: NCPoly):
        lhs = tuple(lhs)
        if not lhs:
            raise UnorientableRelation("empty left side (relation forces 1 = 0?)")
        for w in rhs.terms:
            if deglex_key(w) >= deglex_key(lhs):
                raise UnorientableRelation(
                    f"rule {rhs.alg.render_word(lhs)} -> {rhs} does not decrease"
                )
        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, other):
        return (
            isinstance(other, RewriteRule)
            and self.lhs == other.lhs
            and self.rhs == other.rhs
        )

    __hash__ = None

    def __repr__(self):
        return f"{self.rhs.alg.render_word(self.lhs)} -> {self.rhs}"


def orient_relation(lhs: NCPoly, rhs: NCPoly) -> RewriteRule | None:
    """Turn an equation lhs = rhs into a rule, larger leading word first.

    Returns None for the trivial relation 0 = 0.  Equal leading words on
    the two sides are rejected: neither side dominates, so the relation
    cannot be oriented by the declared generator order.
    """
    if lhs.alg != rhs.alg:
        raise GeneratorMismatch(f"{lhs.alg} vs {rhs.alg}")
    if lhs.is_zero() and rhs.is_zero():
        return None
    if rhs.is_zero():
        big, small = lhs, rhs
    elif lhs.is_zero():
        big, small = rhs, lhs
    else:
        lw, rw = lhs.leading_word(), rhs.leading_word()
        if lw == rw:
            raise UnorientableRelation(
                f"both sides lead with {lhs.alg.render_word(lw)}"
            )
        big, small = (lhs, rhs) if deglex_key(lw) > deglex_key(rw) else (rhs, lhs)
    top = big.leading_word()
    c = big.terms[top]
    # top -> top - (big - small)/c
    rest = (small - big) * (1 / c)
    rest += NCPoly(big.alg, {top: Fraction(1)})
    return RewriteRule(top, rest)


class Presentation:
    """An algebra given by generators and a confluent-up-to-degree rule set.

    Generators may carry a designated inverse symbol; the pair contributes
    the rules g*G -> 1 and G*g -> 1.  Rules are inter-reduced on
    construction so no left side overlaps the inside of another rule.
    """

    def __init__(self, alg: FreeAlgebra, rules, inverses=None, name=""):
        self.alg = alg
        self.name = name or "algebra"
        # inverses: dict index -> index, symmetric; self-inverse allowed
        self.inverses = dict(inverses or {})
        for i, j in list(self.inverses.items()):
            if self.inverses.get(j, i) != i:
                raise ValueError("inconsistent inverse pairing")
            self.inverses[j] = i
        self.rules = self._interreduce(list(rules))
        self.rules.sort(key=lambda r: deglex_key(r.lhs))
        self.confluence_degree = 0
        self.fully_confluent = False
        self._nf_cache: dict[Word, dict] = {}
        self._coords = self._coordinate_map()

    # -- construction -------------------------------------------------

    @classmethod
    def from_relations(cls, alg, relations, inverses=None, name=""):
        """Build from (lhs, rhs) polynomial pairs plus inverse pairings."""
        inv = dict(inverses or {})
        rules = []
        seen = set()
        for i, j in inv.items():
            for w in {(i, j), (j, i)}:
                if w not in seen:
                    seen.add(w)
                    rules.append(RewriteRule(w, alg.one()))
        for lhs, rhs in relations:
            rule = orient_relation(lhs, rhs)
            if rule is not None:
                rules.append(rule)
        return cls(alg, rules, inverses=inv, name=name)

    def _interreduce(self, rules):
        rules = list(rules)
        changed = True
        while changed:
            changed = False
            for i, rule in enumerate(rules):
                others = rules[:i] + rules[i + 1 :]
                lhs_poly = NCPoly(self.alg, {rule.lhs: Fraction(1)})
                red_lhs = _reduce_with(lhs_poly, others)
                red_rhs = _reduce_with(rule.rhs, others)
                if red_lhs == lhs_poly and red_rhs == rule.rhs:
                    continue
                new = orient_relation(red_lhs, red_rhs)
                rules = others
                if new is not None:
                    rules.append(new)
                changed = True
                break
        return rules

    def _coordinate_map(self):
        """Assign each generator a coordinate and sign for the signed
        exponent profile: an inverse symbol counts as -1 on the coordinate
        of its partner, self-inverse symbols count as ordinary +1."""
        coord = {}
        sign = {}
        next_c = 0
        for i in range(self.alg.ngens()):
            j = self.inverses.get(i)
            if j is not None and j < i:
                coord[i] = coord[j]
                sign[i] = -1
            else:
                coord[i] = next_c
                sign[i] = 1
                next_c += 1
        self._ncoords = next_c
        return coord, sign

    # -- rewriting ----------------------------------------------------

    def _find_redex(self, word: Word):
        for pos in range(len(word)):
            for rule in self.rules:
                n = len(rule.lhs)
                if word[pos : pos + n] == rule.lhs:
                    return pos, rule
        return None

    def word_is_normal(self, word: Word) -> bool:
        return self._find_redex(word) is None

    def _nf_word(self, word: Word) -> dict:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        hit = self._find_redex(word)
        if hit is None:
            result = {word: Fraction(1)}
        else:
            pos, rule = hit
            prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
            result = {}
            for w, c in rule.rhs.terms.items():
                for w2, c2 in self._nf_word(prefix + w + suffix).items():
                    s = result.get(w2, 0) + c * c2
                    if s:
                        result[w2] = s
                    else:
                        result.pop(w2, None)
        self._nf_cache[word] = result
        return result

    def reduce_terms(self, terms) -> dict:
        out = {}
        for w, c in terms.items():
            for w2, c2 in self._nf_word(tuple(w)).items():
                s = out.get(w2, 0) + c * c2
                if s:
                    out[w2] = s
                else:
                    out.pop(w2, None)
        return out

    def normal_form(self, p) -> "AlgebraElem":
        """Canonical representative; unique up to the certified degree."""
        if isinstance(p, AlgebraElem):
            p = p.poly
        if isinstance(p, (int, Fraction)):
            p = NCPoly(self.alg, {(): as_scalar(p)})
        if p.alg != self.alg:
            raise GeneratorMismatch(f"{p.alg} vs {self.alg}")
        if not self.fully_confluent and self.confluence_degree:
            if p.degree() > self.confluence_degree:
                raise DegreeBoundExceeded(
                    f"input degree {p.degree()} exceeds certified degree "
                    f"{self.confluence_degree} of an incompletely certified system"
                )
        return AlgebraElem(self, NCPoly(self.alg, self.reduce_terms(p.terms)))

    # -- element constructors ------------------------------------------

    def elem(self, x) -> "AlgebraElem":
        return self.normal_form(x)

    def gen_elem(self, name) -> "AlgebraElem":
        return self.normal_form(self.alg.gen(name))

    def one(self) -> "AlgebraElem":
        return AlgebraElem(self, self.alg.one())

    def zero(self) -> "AlgebraElem":
        return AlgebraElem(self, self.alg.zero())

    def inverse_elem(self, name) -> "AlgebraElem":
        """The designated inverse of a generator, if declared."""
        i = self.alg.index[name]
        j = self.inverses.get(i)
        if j is None:
            raise NotAUnit(f"{name} has no designated inverse")
        return AlgebraElem(self, NCPoly(self.alg, {(j,): Fraction(1)}))

    # -- enumeration ----------------------------------------------------

    def normal_words(self, max_degree: int) -> list:
        """All irreducible words of degree <= max_degree, deglex sorted."""
        out = [()]
        frontier = [()]
        for _ in range(max_degree):
            nxt = []
            for w in frontier:
                for i in range(self.alg.ngens()):
                    w2 = w + (i,)
                    if self.word_is_normal(w2):
                        nxt.append(w2)
            out.extend(nxt)
            frontier = nxt
        out.sort(key=deglex_key)
        return out

    # -- signed order for domain evidence --------------------------------

    def signed_exponents(self, word: Word):
        coord, sign = self._coords
        vec = [0] * self._ncoords
        for i in word:
            vec[coord[i]] += sign[i]
        return tuple(vec)

    def signed_order_key(self, word: Word):
        """Total order on normal words: signed degree, then signed exponent
        profile, then the word itself.  Translation compatible whenever
        leading exponents add under multiplication."""
        vec = self.signed_exponents(word)
        return (sum(vec), vec, word)

    # -- data for well-definedness checks ---------------------------------

    def defining_relation_polys(self):
        """(label, free polynomial that must map to zero) for every rule."""
        out = []
        for rule in self.rules:
            p = NCPoly(self.alg, {rule.lhs: Fraction(1)}) - rule.rhs
            out.append((repr(rule), p))
        return out

    # -- tensor carrier protocol ------------------------------------------

    def tensor_normalize_word(self, word: Word) -> dict:
        return self._nf_word(tuple(word))

    def elem_from_word_terms(self, terms) -> "AlgebraElem":
        return self.normal_form(NCPoly(self.alg, terms))

    def generator_indices(self):
        return range(self.alg.ngens())

    def max_overlap_degree(self) -> int:
        """Largest ambiguity degree two rules can form; certification at or
        beyond this bound makes the system confluent in every degree."""
        degs = [len(r.lhs) for r in self.rules]
        if not degs:
            return 0
        return max(a + b - 1 for a in degs for b in degs)

    def __repr__(self):
        return f"Presentation({self.name}: {', '.join(self.alg.names)}; {len(self.rules)} rules)"


def _reduce_with(p: NCPoly, rules) -> NCPoly:
    """Normal form of p under an explicit rule list (no caching)."""
    work = dict(p.terms)
    done = {}
    while work:
        word, coeff = work.popitem()
        hit = None
        for pos in range(len(word)):
            for rule in rules:
                n = len(rule.lhs)
                if word[pos : pos + n] == rule.lhs:
                    hit = (pos, rule)
                    break
            if hit:
                break
        if hit is None:
            s = done.get(word, 0) + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        pos, rule = hit
        prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
        for w, c in rule.rhs.terms.items():
            w2 = prefix + w + suffix
            s = work.get(w2, 0) + coeff * c
            if s:
                work[w2] = s
            else:
                work.pop(w2, None)
    return NCPoly(p.alg, done)


class AlgebraElem:
    """An element of a presented algebra, stored in normal form."""

    __slots__ = ("pres", "poly")

    def __init__(self, pres: Presentation, poly: NCPoly):
        self.pres = pres
        self.poly = poly

    def _coerce(self, other):
        if isinstance(other, AlgebraElem):
            if other.pres is not self.pres:
                raise GeneratorMismatch("elements of different presentations")
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraElem(self.pres, NCPoly(self.pres.alg, {(): as_scalar(other)}))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraElem(self.pres, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElem(self.pres, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElem(self.pres, self.poly * other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.pres.normal_form(self.poly * other.poly)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        return (
            isinstance(other, AlgebraElem)
            and self.pres is other.pres
            and self.poly == other.poly
        )

    __hash__ = None

    def is_zero(self):
        return self.poly.is_zero()

    def degree(self):
        return self.poly.degree()

    def leading_word(self):
        return self.poly.leading_word()

    def as_scalar(self):
        return self.poly.as_scalar()

    @property
    def terms(self):
        return self.poly.terms

    def __repr__(self):
        return repr(self.poly)


def check_confluence(pres: Presentation, degree: int) -> Report:
    """Resolve every overlap and inclusion ambiguity of degree <= degree.

    On success the presentation records the certified degree; if the bound
    covers the largest possible ambiguity, normal forms are unique in every
    degree and the presentation is marked fully confluent.
    """
    report = Report(context=f"confluence({pres.name}, d={degree})")
    max_rule_deg = max((len(r.lhs) for r in pres.rules), default=0)
    if degree < max_rule_deg:
        report.add(
            "degree_bound",
            False,
            f"bound {degree} below max rule degree {max_rule_deg}",
        )
        return report

    ambiguities = []
    rules = pres.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # proper overlap: a suffix of l1 is a prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    ambiguities.append((word, 0, r1, len(l1) - k, r2))
            # inclusion: l2 occurs strictly inside l1
            if r1 is not r2 and len(l2) < len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos : pos + len(l2)] == l2:
                        ambiguities.append((l1, 0, r1, pos, r2))

    checked = 0
    for word, p1, r1, p2, r2 in ambiguities:
        if len(word) > degree:
            continue
        checked += 1
        a = _apply_at(pres, word, p1, r1)
        b = _apply_at(pres, word, p2, r2)
        nf_a = pres.reduce_terms(a)
        nf_b = pres.reduce_terms(b)
        if nf_a != nf_b:
            diff = dict(nf_a)
            for w, c in nf_b.items():
                s = diff.get(w, 0) - c
                if s:
                    diff[w] = s
                else:
                    diff.pop(w, None)
            report.add(
                "local_confluence",
                False,
                f"ambiguity {pres.alg.render_word(word)} reduces to both "
                f"{pres.alg.render_terms(nf_a)} and {pres.alg.render_terms(nf_b)}",
            )
            return report

    report.add("local_confluence", True)
    pres.confluence_degree = max(pres.confluence_degree, degree)
    if degree >= pres.max_overlap_degree():
        pres.fully_confluent = True
    report.add("ambiguities_resolved", True, f"{checked} ambiguities at degree <= {degree}")
    return report


def _apply_at(pres, word, pos, rule):
    prefix, suffix = word[:pos], word[pos + len(rule.lhs) :]
    return {prefix + w + suffix: c for w, c in rule.rhs.terms.items()}
