"""Line-oriented presentation language: parsing, printing, assembly.

A source file declares an algebra (generators, relations), optional Hopf
structure lines, an optional Ore section (variable, automorphism,
derivation, the comultiplication of the variable) and candidate structure
data.  ``ox`` separates tensor slots; products use ``*``; rationals are
written p/q.  Parse errors carry line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError, UndeclaredSymbol
from .freealg import FreeAlgebra, NCPoly, deglex_key
from .hoe import DeltaXForm, HOEData, decompose_delta_x
from .hopf import SCALARS, GenMap, HopfAlg, TensorSquare
from .ore import Derivation, OreExt, validate_ore
from .report import Report
from .rewrite import Presentation, check_confluence
from .tensor import TensorElem

# raw expression value: (arity, {tuple-of-name-words: Fraction})
RawT = tuple

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|([*+\-=()]))")


@dataclass
class SourceFile:
    name: str = "unnamed"
    gens: list = field(default_factory=list)  # (name, inverse-name-or-None)
    rels: list = field(default_factory=list)  # (raw lhs, raw rhs)
    delta: dict = field(default_factory=dict)
    counit: dict = field(default_factory=dict)
    antipode: dict = field(default_factory=dict)
    ore_x: str | None = None
    auto_name: str | None = None
    sigma: dict = field(default_factory=dict)
    sigma_inv: dict = field(default_factory=dict)
    der_name: str | None = None
    der: dict = field(default_factory=dict)
    delta_x: RawT | None = None
    hoe_beta: RawT | None = None
    hoe_chi: dict = field(default_factory=dict)
    assertions: list = field(default_factory=list)

    def gen_names(self):
        out = []
        for n, inv in self.gens:
            out.append(n)
            if inv is not None and inv != n:
                out.append(inv)
        return out


class _Tokens:
    def __init__(self, text, line_no, offset=0):
        self.items = []  # (kind, value, col)
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                col = offset + pos + (len(text[pos:]) - len(stripped)) + 1
                raise ParseError(f"unexpected character {stripped[0]!r}", line_no, col)
            col = offset + m.start(m.lastindex) + 1
            if m.group(1):
                self.items.append(("num", m.group(1), col))
            elif m.group(2):
                self.items.append(("name", m.group(2), col))
            else:
                self.items.append(("op", m.group(3), col))
            pos = m.end()
        self.line = line_no
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None, None)

    def next(self):
        tok = self.peek()
        if tok[0] is None:
            raise ParseError("unexpected end of line", self.line)
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, col = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}", self.line, col)

    def expect_name(self):
        kind, val, col = self.next()
        if kind != "name":
            raise ParseError(f"expected a name, found {val!r}", self.line, col)
        return val, col

    def done(self):
        return self.i >= len(self.items)

    def require_done(self):
        if not self.done():
            kind, val, col = self.peek()
            raise ParseError(f"trailing input {val!r}", self.line, col)


class _ExprParser:
    """expr  := term (('+'|'-') term)*
    term  := factor ('ox' factor)*
    factor:= atom ('*' atom)*
    atom  := NUMBER | NAME | '-' atom | '(' expr ')'
    """

    def __init__(self, tokens: _Tokens, symbols: dict):
        self.t = tokens
        self.symbols = symbols  # name -> word tuple

    def parse(self) -> RawT:
        val = self.expr()
        return val

    def expr(self) -> RawT:
        val = self.term()
        while True:
            kind, op, _ = self.t.peek()
            if kind == "op" and op in "+-":
                self.t.next()
                rhs = self.term()
                val = _raw_add(val, rhs if op == "+" else _raw_neg(rhs), self.t.line)
            else:
                return val

    def term(self) -> RawT:
        val = self.factor()
        while True:
            kind, name, _ = self.t.peek()
            if kind == "name" and name == "ox":
                self.t.next()
                rhs = self.factor()
                val = _raw_ox(val, rhs)
            else:
                return val

    def factor(self) -> RawT:
        val = self.atom()
        while True:
            kind, op, _ = self.t.peek()
            if kind == "op" and op == "*":
                self.t.next()
                rhs = self.atom()
                val = _raw_mul(val, rhs, self.t.line)
            else:
                return val

    def atom(self) -> RawT:
        kind, val, col = self.t.next()
        if kind == "num":
            return (1, {((),): Fraction(val)})
        if kind == "name":
            if val == "ox":
                raise ParseError("dangling tensor separator", self.t.line, col)
            if val not in self.symbols:
                raise UndeclaredSymbol(f"undeclared symbol {val!r}", self.t.line, col)
            return (1, {(self.symbols[val],): Fraction(1)})
        if kind == "op" and val == "-":
            return _raw_neg(self.atom())
        if kind == "op" and val == "(":
            inner = self.expr()
            self.t.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}", self.t.line, col)


def _raw_is_scalar(a: RawT) -> bool:
    return a[0] == 1 and all(k == ((),) for k in a[1])


def _raw_scalar_value(a: RawT) -> Fraction:
    return a[1].get(((),), Fraction(0))


def _raw_neg(a: RawT) -> RawT:
    return (a[0], {k: -c for k, c in a[1].items()})


def _raw_add(a: RawT, b: RawT, line) -> RawT:
    if not a[1]:
        return b
    if not b[1]:
        return a
    if a[0] != b[0]:
        raise ParseError(f"cannot add a {a[0]}-slot and a {b[0]}-slot expression", line)
    terms = dict(a[1])
    for k, c in b[1].items():
        s = terms.get(k, 0) + c
        if s:
            terms[k] = s
        else:
            terms.pop(k, None)
    return (a[0], terms)


def _raw_mul(a: RawT, b: RawT, line) -> RawT:
    if _raw_is_scalar(a) and not _raw_is_scalar(b):
        c = _raw_scalar_value(a)
        return (b[0], {k: c * v for k, v in b[1].items() if c * v})
    if _raw_is_scalar(b) and not _raw_is_scalar(a):
        c = _raw_scalar_value(b)
        return (a[0], {k: c * v for k, v in a[1].items() if c * v})
    if a[0] != b[0]:
        raise ParseError(f"cannot multiply a {a[0]}-slot and a {b[0]}-slot expression", line)
    out = {}
    for k1, c1 in a[1].items():
        for k2, c2 in b[1].items():
            key = tuple(w1 + w2 for w1, w2 in zip(k1, k2))
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return (a[0], out)


def _raw_ox(a: RawT, b: RawT) -> RawT:
    out = {}
    for k1, c1 in a[1].items():
        for k2, c2 in b[1].items():
            out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
    return (a[0] + b[0], {k: c for k, c in out.items() if c})


def parse_presentation(text: str) -> SourceFile:
    """Parse source text into raw structured data (no algebra built yet)."""
    sf = SourceFile()
    symbols: dict[str, tuple] = {}  # name -> word over eventual indices
    index: dict[str, int] = {}

    def declare(name, line):
        if name in index:
            raise ParseError(f"symbol {name!r} already declared", line)
        index[name] = len(index)
        symbols[name] = (index[name],)

    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        head, _, rest = line.partition(" ")
        head = head.strip()

        if head == "algebra":
            if not rest.strip():
                raise ParseError("algebra line needs a name", line_no)
            sf.name = rest.strip()
            continue
        if head == "assert":
            word = rest.strip()
            if not word:
                raise ParseError("assert line needs a hypothesis name", line_no)
            sf.assertions.append(word)
            continue

        toks = _Tokens(rest, line_no, offset=len(head) + 1)

        if head == "gen":
            names = []
            while not toks.done():
                name, _ = toks.expect_name()
                if name == "inv":
                    if len(names) != 1:
                        raise ParseError("inv applies to exactly one generator", line_no)
                    inv_name, _ = toks.expect_name()
                    toks.require_done()
                    declare(names[0], line_no)
                    if inv_name != names[0]:
                        declare(inv_name, line_no)
                    sf.gens.append((names[0], inv_name))
                    break
                names.append(name)
            else:
                for n in names:
                    declare(n, line_no)
                    sf.gens.append((n, None))
                if not names:
                    raise ParseError("gen line needs at least one name", line_no)
            continue

        if head == "rel":
            lhs = _ExprParser(toks, symbols).parse()
            toks.expect_op("=")
            rhs = _ExprParser(toks, symbols).parse()
            toks.require_done()
            for side in (lhs, rhs):
                if side[0] != 1:
                    raise ParseError("relations are plain algebra equations", line_no)
            sf.rels.append((lhs, rhs))
            continue

        if head in ("delta", "counit", "antipode"):
            gname, col = toks.expect_name()
            if gname not in index:
                raise UndeclaredSymbol(f"undeclared symbol {gname!r}", line_no, col)
            if sf.ore_x == gname:
                raise ParseError(f"{head} of the Ore variable is implicit", line_no, col)
            toks.expect_op("=")
            val = _ExprParser(toks, symbols).parse()
            toks.require_done()
            if head == "delta":
                if val[0] != 2 and val[1]:
                    raise ParseError("delta image must have two slots", line_no)
                sf.delta[gname] = (2, val[1])
            elif head == "counit":
                if not _raw_is_scalar(val):
                    raise ParseError("counit image must be a scalar", line_no)
                sf.counit[gname] = _raw_scalar_value(val)
            else:
                if val[0] != 1:
                    raise ParseError("antipode image must be a plain element", line_no)
                sf.antipode[gname] = val
            continue

        if head == "ore":
            name, _ = toks.expect_name()
            toks.require_done()
            if sf.ore_x is not None:
                raise ParseError("only one ore line allowed", line_no)
            declare(name, line_no)
            sf.ore_x = name
            continue

        if head in ("auto", "autoinv", "der"):
            map_name, _ = toks.expect_name()
            gname, col = toks.expect_name()
            if gname not in index or gname == sf.ore_x:
                raise UndeclaredSymbol(f"undeclared coefficient symbol {gname!r}", line_no, col)
            toks.expect_op("=")
            restricted = {n: w for n, w in symbols.items() if n != sf.ore_x}
            val = _ExprParser(toks, restricted).parse()
            toks.require_done()
            if val[0] != 1:
                raise ParseError("map images must be plain elements", line_no)
            if head == "auto":
                sf.auto_name = sf.auto_name or map_name
                if map_name != sf.auto_name:
                    raise ParseError(f"automorphism renamed to {map_name!r}", line_no)
                sf.sigma[gname] = val
            elif head == "autoinv":
                if sf.auto_name is not None and map_name != sf.auto_name:
                    raise ParseError(f"autoinv name {map_name!r} does not match", line_no)
                sf.sigma_inv[gname] = val
            else:
                sf.der_name = sf.der_name or map_name
                if map_name != sf.der_name:
                    raise ParseError(f"derivation renamed to {map_name!r}", line_no)
                sf.der[gname] = val
            continue

        if head == "deltaX":
            if sf.ore_x is None:
                raise ParseError("deltaX requires an ore line first", line_no)
            toks.expect_op("=")
            val = _ExprParser(toks, symbols).parse()
            toks.require_done()
            if val[0] != 2 and val[1]:
                raise ParseError("deltaX must have two slots", line_no)
            sf.delta_x = (2, val[1])
            continue

        if head == "hoe":
            what, col = toks.expect_name()
            if what == "beta":
                toks.expect_op("=")
                val = _ExprParser(toks, {n: w for n, w in symbols.items() if n != sf.ore_x}).parse()
                toks.require_done()
                if val[0] != 1:
                    raise ParseError("beta must be a plain element", line_no)
                sf.hoe_beta = val
            elif what == "chi":
                gname, col = toks.expect_name()
                if gname not in index or gname == sf.ore_x:
                    raise UndeclaredSymbol(f"undeclared coefficient symbol {gname!r}", line_no, col)
                toks.expect_op("=")
                val = _ExprParser(toks, symbols).parse()
                toks.require_done()
                if not _raw_is_scalar(val):
                    raise ParseError("chi values are scalars", line_no)
                sf.hoe_chi[gname] = _raw_scalar_value(val)
            else:
                raise ParseError(f"unknown hoe field {what!r}", line_no, col)
            continue

        raise ParseError(f"unknown directive {head!r}", line_no, 1)

    if not sf.gens:
        raise ParseError("no generators declared", 1)
    return sf


# --- printing -------------------------------------------------------------


def print_source(sf: SourceFile) -> str:
    """Canonical rendering; parsing it back yields an equal SourceFile."""
    names = sf.gen_names() + ([sf.ore_x] if sf.ore_x else [])
    alg = FreeAlgebra(names)

    def rw(word):
        return alg.render_word(word)

    def render_raw(raw):
        arity, terms = raw
        if not terms:
            return "0"
        parts = []
        for key in sorted(terms, key=lambda k: tuple(map(deglex_key, k))):
            c = terms[key]
            body = " ox ".join(rw(w) for w in key)
            if c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            elif body == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    lines = [f"algebra {sf.name}"]
    for name, inv in sf.gens:
        lines.append(f"gen {name} inv {inv}" if inv else f"gen {name}")
    for lhs, rhs in sf.rels:
        lines.append(f"rel {render_raw(lhs)} = {render_raw(rhs)}")
    for name in sf.delta:
        lines.append(f"delta {name} = {render_raw(sf.delta[name])}")
    for name in sf.counit:
        lines.append(f"counit {name} = {sf.counit[name]}")
    for name in sf.antipode:
        lines.append(f"antipode {name} = {render_raw(sf.antipode[name])}")
    if sf.ore_x:
        lines.append(f"ore {sf.ore_x}")
        auto = sf.auto_name or "sigma"
        for name in sf.sigma:
            lines.append(f"auto {auto} {name} = {render_raw(sf.sigma[name])}")
        for name in sf.sigma_inv:
            lines.append(f"autoinv {auto} {name} = {render_raw(sf.sigma_inv[name])}")
        der = sf.der_name or "d"
        for name in sf.der:
            lines.append(f"der {der} {name} = {render_raw(sf.der[name])}")
        if sf.delta_x is not None:
            lines.append(f"deltaX = {render_raw(sf.delta_x)}")
    if sf.hoe_beta is not None:
        lines.append(f"hoe beta = {render_raw(sf.hoe_beta)}")
    for name, val in sf.hoe_chi.items():
        lines.append(f"hoe chi {name} = {val}")
    for a in sf.assertions:
        lines.append(f"assert {a}")
    return "\n".join(lines) + "\n"


# --- assembly --------------------------------------------------------------


@dataclass
class Assembled:
    source: SourceFile
    pres: Presentation
    confluence: Report
    hopf: HopfAlg | None = None
    ore: OreExt | None = None
    ore_report: Report | None = None
    form: DeltaXForm | None = None
    hoedata: HOEData | None = None

    @property
    def assertions(self):
        return list(self.source.assertions)


def _poly_from_raw(alg: FreeAlgebra, raw: RawT) -> NCPoly:
    return NCPoly(alg, {key[0]: c for key, c in raw[1].items()})


def assemble(sf: SourceFile, cert_degree: int = 8) -> Assembled:
    """Build and certify the object graph a source file describes."""
    r_names = sf.gen_names()
    alg = FreeAlgebra(r_names)
    inverses = {}
    for name, inv in sf.gens:
        if inv is not None:
            inverses[alg.index[name]] = alg.index[inv]
    relations = [
        (_poly_from_raw(alg, lhs), _poly_from_raw(alg, rhs)) for lhs, rhs in sf.rels
    ]
    pres = Presentation.from_relations(alg, relations, inverses=inverses, name=sf.name)
    confluence = check_confluence(pres, cert_degree)
    out = Assembled(source=sf, pres=pres, confluence=confluence)

    has_hopf = bool(sf.delta or sf.counit or sf.antipode)
    if has_hopf:
        for name in r_names:
            for section, label in ((sf.delta, "delta"), (sf.counit, "counit"), (sf.antipode, "antipode")):
                if name not in section:
                    raise ParseError(f"missing {label} image for generator {name!r}", 0)
        d_images = {
            alg.index[n]: TensorElem.from_raw(
                pres, 2, {key: c for key, c in sf.delta[n][1].items()}
            )
            for n in r_names
        }
        e_images = {alg.index[n]: sf.counit[n] for n in r_names}
        s_images = {
            alg.index[n]: pres.normal_form(_poly_from_raw(alg, sf.antipode[n]))
            for n in r_names
        }
        delta = GenMap(pres, TensorSquare(pres), d_images, name="delta")
        counit = GenMap(pres, SCALARS, e_images, name="eps")
        antipode = GenMap(pres, pres, s_images, antihom=True, name="S")
        out.hopf = HopfAlg(pres, delta, counit, antipode, name=sf.name)

    if sf.ore_x is not None:
        if out.hopf is None:
            raise ParseError("ore section requires Hopf structure lines", 0)
        for name in r_names:
            if name not in sf.sigma or name not in sf.sigma_inv or name not in sf.der:
                raise ParseError(
                    f"ore section incomplete: need auto/autoinv/der for {name!r}", 0
                )
        sig = GenMap(
            pres,
            pres,
            {alg.index[n]: pres.normal_form(_poly_from_raw(alg, sf.sigma[n])) for n in r_names},
            name=sf.auto_name or "sigma",
        )
        sig_inv = GenMap(
            pres,
            pres,
            {alg.index[n]: pres.normal_form(_poly_from_raw(alg, sf.sigma_inv[n])) for n in r_names},
            name=f"{sf.auto_name or 'sigma'}_inv",
        )
        der = Derivation(
            pres,
            sig,
            {alg.index[n]: pres.normal_form(_poly_from_raw(alg, sf.der[n])) for n in r_names},
            name=sf.der_name or "d",
        )
        out.ore_report = validate_ore(out.hopf, sig, sig_inv, der)
        out.ore = OreExt(out.hopf, sig, sig_inv, der, x_name=sf.ore_x, validate=False)

        if sf.delta_x is not None and out.ore_report.verdict:
            dx = TensorElem.from_raw(out.ore, 2, sf.delta_x[1])
            out.form = decompose_delta_x(out.hopf, dx)

    if sf.hoe_beta is not None and out.form is not None:
        beta = out.pres.normal_form(_poly_from_raw(alg, sf.hoe_beta))
        for name in r_names:
            if name not in sf.hoe_chi:
                raise ParseError(f"missing chi value for generator {name!r}", 0)
        chi = GenMap(
            pres,
            SCALARS,
            {alg.index[n]: sf.hoe_chi[n] for n in r_names},
            name="chi",
        )
        out.hoedata = HOEData(beta=beta, w=out.form.w, chi=chi)
    return out
