"""Built-in example algebras and constructors for the standard families:
polynomial Hopf algebras, group algebras, enveloping algebras, smash
products of an enveloping algebra by a group action, plus bounded-degree
domain evidence.

Entries are shipped as presentation-language sources and built through
the same parser the CLI uses.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .errors import DegreeBoundExceeded
from .freealg import FreeAlgebra, NCPoly, as_scalar
from .hopf import SCALARS, GenMap, HopfAlg, TensorSquare
from .report import Report
from .rewrite import Presentation, check_confluence
from .tensor import TensorElem


class LieData:
    """A finite-dimensional Lie algebra by structure constants.

    ``brackets`` maps (i_name, j_name) to {k_name: coefficient} giving
    [x_i, x_j]; the antisymmetric closure is filled in and the Jacobi
    identity is verified exactly.
    """

    def __init__(self, names, brackets=None):
        self.names = list(names)
        n = len(self.names)
        idx = {name: i for i, name in enumerate(self.names)}
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for (a, b), val in (brackets or {}).items():
            i, j = idx[a], idx[b]
            for k_name, coeff in val.items():
                k = idx[k_name]
                coeff = as_scalar(coeff)
                if c[i][j][k] or c[j][i][k]:
                    if c[i][j][k] != coeff or c[j][i][k] != -coeff:
                        raise ValueError(f"antisymmetry violated at [{a},{b}]")
                c[i][j][k] = coeff
                c[j][i][k] = -coeff
        for i in range(n):
            if any(c[i][i]):
                raise ValueError(f"[{self.names[i]},{self.names[i]}] != 0")
        self.c = c
        self._check_jacobi()

    def _check_jacobi(self):
        n = len(self.names)
        c = self.c
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        total = sum(
                            c[i][j][m] * c[m][k][l]
                            + c[j][k][m] * c[m][i][l]
                            + c[k][i][m] * c[m][j][l]
                            for m in range(n)
                        )
                        if total:
                            raise ValueError(
                                "Jacobi identity fails on "
                                f"({self.names[i]},{self.names[j]},{self.names[k]})"
                            )

    def bracket(self, i, j):
        """[x_i, x_j] as a sparse index->coefficient map."""
        return {k: v for k, v in enumerate(self.c[i][j]) if v}

    def direct_sum(self, other, rename=None):
        """L (+) L' with commuting summands; names may be remapped."""
        rename = rename or (lambda side, name: f"{name}{side + 1}")
        names = [rename(0, n) for n in self.names] + [rename(1, n) for n in other.names]
        brackets = {}
        for L, offset in ((self, 0), (other, 1)):
            for i in range(len(L.names)):
                for j in range(i + 1, len(L.names)):
                    entry = {
                        rename(offset, L.names[k]): v
                        for k, v in L.bracket(i, j).items()
                    }
                    if entry:
                        brackets[(rename(offset, L.names[i]), rename(offset, L.names[j]))] = entry
        return LieData(names, brackets)


class GroupActionData:
    """Group generators with inverses acting linearly on a Lie basis.

    ``matrices[g]`` is row major: generator g sends basis vector i to
    sum_j M[i][j] x_j.  Inverse symbols act by the inverse matrix.
    """

    def __init__(self, generators, matrices, relations=()):
        self.generators = [tuple(p) for p in generators]
        self.matrices = {
            g: [[as_scalar(v) for v in row] for row in M] for g, M in matrices.items()
        }
        self.relations = [
            (tuple(lhs), tuple(rhs)) for lhs, rhs in relations
        ]  # words in group generator names

    def matrix_for(self, name):
        if name in self.matrices:
            return self.matrices[name]
        for g, ginv in self.generators:
            if name == ginv:
                return _mat_inv(self.matrices[g])
        raise KeyError(name)

    def word_matrix(self, word):
        mats = [self.matrix_for(s) for s in reversed(word)]
        n = len(next(iter(self.matrices.values())))
        return reduce(_mat_mul, mats, _mat_eye(n))


def _mat_eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)] for i in range(n)]


def _mat_inv(M):
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("action matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# --- constructors -----------------------------------------------------------


def _primitive_hopf_data(pres):
    """Delta, eps, S for an algebra whose generators are all primitive."""
    alg = pres.alg
    d_images, e_images, s_images = {}, {}, {}
    for i in range(alg.ngens()):
        d_images[i] = TensorElem(
            pres, 2, {((i,), ()): Fraction(1), ((), (i,)): Fraction(1)}
        )
        e_images[i] = Fraction(0)
        s_images[i] = pres.elem_from_word_terms({(i,): Fraction(-1)})
    return d_images, e_images, s_images


def build_enveloping(L: LieData, cert_degree: int = 8, name=None) -> HopfAlg:
    """Enveloping algebra with its straightening rules x_j x_i ->
    x_i x_j + [x_j, x_i] for j > i; generators primitive."""
    alg = FreeAlgebra(L.names)
    n = alg.ngens()
    relations = []
    for j in range(n):
        for i in range(j):
            lhs = NCPoly(alg, {(j, i): Fraction(1)})
            rhs_terms = {(i, j): Fraction(1)}
            for k, v in L.bracket(j, i).items():
                rhs_terms[(k,)] = rhs_terms.get((k,), 0) + v
            relations.append((lhs, NCPoly(alg, rhs_terms)))
    pres = Presentation.from_relations(alg, relations, name=name or "U(" + ",".join(L.names) + ")")
    rep = check_confluence(pres, cert_degree)
    if not rep.verdict:
        raise ValueError(rep.summary())
    d, e, s = _primitive_hopf_data(pres)
    return HopfAlg(
        pres,
        GenMap(pres, TensorSquare(pres), d, name="delta"),
        GenMap(pres, SCALARS, e, name="eps"),
        GenMap(pres, pres, s, antihom=True, name="S"),
        name=pres.name,
    )


def build_group_algebra(gens_with_inverses, relations=(), cert_degree: int = 8, name=None) -> HopfAlg:
    """Group algebra: every generator grouplike, antipode the inverse.

    ``relations`` are pairs of words (tuples of generator names).
    """
    names = []
    for g, ginv in gens_with_inverses:
        names.append(g)
        if ginv != g:
            names.append(ginv)
    alg = FreeAlgebra(names)
    inverses = {alg.index[g]: alg.index[ginv] for g, ginv in gens_with_inverses}
    rel_polys = []
    for lhs, rhs in relations:
        rel_polys.append(
            (
                NCPoly(alg, {alg.word(*lhs): Fraction(1)}),
                NCPoly(alg, {alg.word(*rhs): Fraction(1)}),
            )
        )
    pres = Presentation.from_relations(
        alg, rel_polys, inverses=inverses, name=name or "k[" + ",".join(names) + "]"
    )
    rep = check_confluence(pres, cert_degree)
    if not rep.verdict:
        raise ValueError(rep.summary())
    d_images, e_images, s_images = {}, {}, {}
    for i in range(alg.ngens()):
        d_images[i] = TensorElem(pres, 2, {((i,), (i,)): Fraction(1)})
        e_images[i] = Fraction(1)
        j = pres.inverses[i]
        s_images[i] = pres.elem_from_word_terms({(j,): Fraction(1)})
    return HopfAlg(
        pres,
        GenMap(pres, TensorSquare(pres), d_images, name="delta"),
        GenMap(pres, SCALARS, e_images, name="eps"),
        GenMap(pres, pres, s_images, antihom=True, name="S"),
        name=pres.name,
    )


def build_smash(L: LieData, A: GroupActionData, cert_degree: int = 8, name=None) -> HopfAlg:
    """Smash product of the enveloping algebra of L by the group action A.

    Lie generators come first and stay primitive; group generators follow
    with their inverses and are grouplike; the cross rules g x_i ->
    (g . x_i) g realize the action.
    """
    nlie = len(L.names)
    group_names = []
    for g, ginv in A.generators:
        group_names.append(g)
        if ginv != g:
            group_names.append(ginv)
    alg = FreeAlgebra(tuple(L.names) + tuple(group_names))
    inverses = {alg.index[g]: alg.index[ginv] for g, ginv in A.generators}

    # automorphism and relation-consistency checks
    for gname in [g for g, _ in A.generators]:
        M = A.matrix_for(gname)
        _check_lie_automorphism(L, M, gname)
    for lhs, rhs in A.relations:
        if A.word_matrix(lhs) != A.word_matrix(rhs):
            raise ValueError(f"action inconsistent on group relation {lhs} = {rhs}")

    relations = []
    for j in range(nlie):
        for i in range(j):
            lhs = NCPoly(alg, {(j, i): Fraction(1)})
            rhs_terms = {(i, j): Fraction(1)}
            for k, v in L.bracket(j, i).items():
                rhs_terms[(k,)] = rhs_terms.get((k,), 0) + v
            relations.append((lhs, NCPoly(alg, rhs_terms)))
    for gname in group_names:
        gi = alg.index[gname]
        M = A.matrix_for(gname)
        for i in range(nlie):
            lhs = NCPoly(alg, {(gi, i): Fraction(1)})
            rhs_terms = {}
            for j2, coeff in enumerate(M[i]):
                if coeff:
                    rhs_terms[(j2, gi)] = coeff
            relations.append((lhs, NCPoly(alg, rhs_terms)))
    for lhs_word, rhs_word in A.relations:
        relations.append(
            (
                NCPoly(alg, {alg.word(*lhs_word): Fraction(1)}),
                NCPoly(alg, {alg.word(*rhs_word): Fraction(1)}),
            )
        )

    pres = Presentation.from_relations(
        alg, relations, inverses=inverses, name=name or "smash"
    )
    rep = check_confluence(pres, cert_degree)
    if not rep.verdict:
        raise ValueError(rep.summary())

    d_images, e_images, s_images = {}, {}, {}
    for i in range(nlie):
        d_images[i] = TensorElem(pres, 2, {((i,), ()): Fraction(1), ((), (i,)): Fraction(1)})
        e_images[i] = Fraction(0)
        s_images[i] = pres.elem_from_word_terms({(i,): Fraction(-1)})
    for gname in group_names:
        i = alg.index[gname]
        d_images[i] = TensorElem(pres, 2, {((i,), (i,)): Fraction(1)})
        e_images[i] = Fraction(1)
        s_images[i] = pres.elem_from_word_terms({(pres.inverses[i],): Fraction(1)})
    return HopfAlg(
        pres,
        GenMap(pres, TensorSquare(pres), d_images, name="delta"),
        GenMap(pres, SCALARS, e_images, name="eps"),
        GenMap(pres, pres, s_images, antihom=True, name="S"),
        name=pres.name,
    )


def _check_lie_automorphism(L: LieData, M, gname):
    n = len(L.names)
    for i in range(n):
        for j in range(n):
            # [A x_i, A x_j] must equal A [x_i, x_j]
            lhs = [Fraction(0)] * n
            for p in range(n):
                for q in range(n):
                    cpq = L.c[p][q]
                    f = M[i][p] * M[j][q]
                    if f:
                        for k in range(n):
                            lhs[k] += f * cpq[k]
            rhs = [Fraction(0)] * n
            for m, v in L.bracket(i, j).items():
                for k in range(n):
                    rhs[k] += v * M[m][k]
            if lhs != rhs:
                raise ValueError(
                    f"action of {gname} is not a Lie automorphism at "
                    f"[{L.names[i]},{L.names[j]}]"
                )


def smash_tensor_square(L: LieData, A: GroupActionData, cert_degree: int = 8, name=None) -> HopfAlg:
    """The doubled smash product: L (+) L acted on componentwise by the
    product of the group with itself, with interleaved relations."""
    L2 = L.direct_sum(L)
    n = len(L.names)
    generators = []
    matrices = {}
    relations = []
    sides = []
    for side in (0, 1):
        for g, ginv in A.generators:
            g2 = f"{g}{side + 1}"
            ginv2 = f"{ginv}{side + 1}" if ginv != g else g2
            generators.append((g2, ginv2))
            M = A.matrices[g]
            big = _mat_eye(2 * n)
            for i in range(n):
                for j in range(n):
                    big[side * n + i][side * n + j] = M[i][j]
            matrices[g2] = big
            sides.append((side, g2))
    # the two factors commute
    for s1, g1 in sides:
        for s2, g2 in sides:
            if s1 == 0 and s2 == 1:
                relations.append(((g2, g1), (g1, g2)))
    return build_smash(
        L2,
        GroupActionData(generators, matrices, relations),
        cert_degree=cert_degree,
        name=name or "smash-square",
    )


# --- domain evidence ---------------------------------------------------------


def domain_evidence(H, degree: int) -> Report:
    """Bounded-degree zero-divisor search by leading-term cancellativity.

    Enumerates all ordered pairs of normal words of degree <= degree,
    requires every product to be nonzero, and requires the leading word of
    the product (inverse-aware signed degree-lex order) to be strictly
    monotone in each argument.  Passing certifies that no two nonzero
    elements supported in degree <= degree multiply to zero; it is
    evidence at this scale, not a proof for the whole algebra.
    """
    pres = H.carrier if isinstance(H, HopfAlg) else H
    need = 2 * degree
    if not pres.fully_confluent and pres.confluence_degree < need:
        raise DegreeBoundExceeded(
            f"need confluence certified to {need}, have {pres.confluence_degree}"
        )
    rep = Report(context=f"domain evidence for {pres.name} at degree {degree}")
    words = sorted(pres.normal_words(degree), key=pres.signed_order_key)
    n = len(words)
    lead = [[None] * n for _ in range(n)]
    for a, u in enumerate(words):
        for b, v in enumerate(words):
            prod = pres.tensor_normalize_word(u + v)
            if not prod:
                rep.add(
                    "no_zero_products",
                    False,
                    f"({pres.alg.render_word(u)}) * ({pres.alg.render_word(v)}) = 0",
                )
                return rep
            lead[a][b] = max(prod, key=pres.signed_order_key)

    def monotone(get, label):
        for o in range(n):
            prev_key = None
            prev_word = None
            for i in range(n):
                k = pres.signed_order_key(get(o, i))
                if prev_key is not None and k <= prev_key:
                    rep.add(
                        "leading_term_monotonicity",
                        False,
                        f"with {label} {pres.alg.render_word(words[o])} fixed: "
                        f"{pres.alg.render_word(prev_word)} -> "
                        f"{pres.alg.render_word(words[i])} does not increase the "
                        "leading word (zero-divisor evidence)",
                    )
                    return False
                prev_key, prev_word = k, words[i]
        return True

    rep.add("no_zero_products", True, f"{n * n} products checked")
    if monotone(lambda o, i: lead[o][i], "left factor") and monotone(
        lambda o, i: lead[i][o], "right factor"
    ):
        rep.add(
            "leading_term_monotonicity",
            True,
            f"no zero divisors among elements supported in degree <= {degree}",
        )
    return rep


# --- shipped entries ---------------------------------------------------------

_HEISENBERG = """\
algebra heisenberg
gen y z
rel z*y = y*z
delta y = y ox 1 + 1 ox y
delta z = z ox 1 + 1 ox z
counit y = 0
counit z = 0
antipode y = -y
antipode z = -z
ore x
auto sigma y = y
auto sigma z = z
autoinv sigma y = y
autoinv sigma z = z
der d y = 0
der d z = 0
deltaX = 1 ox x + x ox 1 + y ox z
hoe beta = 1
hoe chi y = 0
hoe chi z = 0
assert domain
assert noetherian
"""

_LAURENT_Q2 = """\
algebra laurent-q2
gen g inv G
delta g = g ox g
delta G = G ox G
counit g = 1
counit G = 1
antipode g = G
antipode G = g
ore x
auto sigma g = 2*g
auto sigma G = 1/2*G
autoinv sigma g = 1/2*g
autoinv sigma G = 2*G
der d g = 0
der d G = 0
deltaX = G ox x + x ox 1
hoe beta = g
hoe chi g = 2
hoe chi G = 1/2
assert domain
assert noetherian
"""

_LAURENT_TWISTED = """\
algebra laurent-twisted
gen g inv G
delta g = g ox g
delta G = G ox G
counit g = 1
counit G = 1
antipode g = G
antipode G = g
ore x
auto sigma g = g
auto sigma G = G
autoinv sigma g = g
autoinv sigma G = G
der d g = 0
der d G = 0
deltaX = g ox x + x ox g
assert domain
assert noetherian
"""

_POLY_SHIFT = """\
algebra poly-shift
gen h
delta h = h ox 1 + 1 ox h
counit h = 0
antipode h = -h
ore x
auto sigma h = h + 1
autoinv sigma h = h - 1
der d h = 0
deltaX = 1 ox x + x ox 1
hoe beta = 1
hoe chi h = 1
assert domain
assert noetherian
"""

_SMASH_Z_SCALE = """\
algebra smash-z-scale
gen h
gen g inv G
rel g*h = 2*h*g
rel G*h = 1/2*h*G
delta h = h ox 1 + 1 ox h
delta g = g ox g
delta G = G ox G
counit h = 0
counit g = 1
counit G = 1
antipode h = -h
antipode g = G
antipode G = g
assert domain
assert noetherian
"""

_SMASH_Z_SCALE_SQ = """\
algebra smash-z-scale-sq
gen h1 h2
gen g1 inv G1
gen g2 inv G2
rel h2*h1 = h1*h2
rel g1*h1 = 2*h1*g1
rel G1*h1 = 1/2*h1*G1
rel g1*h2 = h2*g1
rel G1*h2 = h2*G1
rel g2*h1 = h1*g2
rel G2*h1 = h1*G2
rel g2*h2 = 2*h2*g2
rel G2*h2 = 1/2*h2*G2
rel g2*g1 = g1*g2
rel g2*G1 = G1*g2
rel G2*g1 = g1*G2
rel G2*G1 = G1*G2
delta h1 = h1 ox 1 + 1 ox h1
delta h2 = h2 ox 1 + 1 ox h2
delta g1 = g1 ox g1
delta G1 = G1 ox G1
delta g2 = g2 ox g2
delta G2 = G2 ox G2
counit h1 = 0
counit h2 = 0
counit g1 = 1
counit G1 = 1
counit g2 = 1
counit G2 = 1
antipode h1 = -h1
antipode h2 = -h2
antipode g1 = G1
antipode G1 = g1
antipode g2 = G2
antipode G2 = g2
assert domain
assert noetherian
"""

_Z2_GROUP = """\
algebra z2-group
gen g inv g
delta g = g ox g
counit g = 1
antipode g = g
"""

_DUAL_NUMBERS = """\
algebra dual-numbers
gen y
rel y*y = 0
"""

ENTRIES = {
    "heisenberg": _HEISENBERG,
    "laurent-q2": _LAURENT_Q2,
    "laurent-twisted": _LAURENT_TWISTED,
    "poly-shift": _POLY_SHIFT,
    "smash-z-scale": _SMASH_Z_SCALE,
    "smash-z-scale-sq": _SMASH_Z_SCALE_SQ,
    "z2-group": _Z2_GROUP,
    "dual-numbers": _DUAL_NUMBERS,
}

_DESCRIPTIONS = {
    "heisenberg": "coordinate ring of unipotent 3x3 matrices as k[y,z][x]",
    "laurent-q2": "Laurent coefficients, x scaling by 2 (quantum-plane type)",
    "laurent-twisted": "Laurent coefficients with the variable twisted by g",
    "poly-shift": "k[h] with the shift automorphism h -> h + 1",
    "smash-z-scale": "U(<h>) smashed with Z acting by h -> 2h",
    "smash-z-scale-sq": "tensor square of smash-z-scale as a doubled smash product",
    "z2-group": "group algebra of Z/2 (torsion control, not a domain)",
    "dual-numbers": "k[y]/(y^2) (nilpotent control, not a domain)",
}

_CACHE = {}


def list_entries():
    return [(name, _DESCRIPTIONS[name]) for name in ENTRIES]


def get_source(name: str) -> str:
    if name not in ENTRIES:
        raise KeyError(f"unknown zoo entry {name!r}; try: {', '.join(ENTRIES)}")
    return ENTRIES[name]


def build(name: str, cert_degree: int = 8):
    """Parse and assemble a zoo entry (cached per entry and degree)."""
    from .parser import assemble, parse_presentation

    key = (name, cert_degree)
    if key not in _CACHE:
        _CACHE[key] = assemble(parse_presentation(get_source(name)), cert_degree)
    return _CACHE[key]
