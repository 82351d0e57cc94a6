"""Text formats: scalar/element expressions and the presentation DSL.

Expression syntax: integers, ``q``, ``+ - * / ^`` (integer exponents,
negative allowed), parentheses, and dotted words of generator names
(``a.d``, ``del_a.a``); juxtaposition multiplies, so ``q b.c`` and
``(q - q^-1) b.c`` are products.  Division requires a scalar divisor,
``^`` a scalar base.

Presentation files are line oriented::

    name my-algebra          # optional
    extends glq2             # optional: start from a built-in preset
    order deglex             # or: order migration [left|right]
    gen x parity even        # declaration order fixes precedence
    gen f parity odd
    rule f.x -> q x.f        # LHS word  ->  element expression
    # comments run to end of line

Parsed presentations are validated (orientation, parity, generator
references) before being returned.
"""

from __future__ import annotations

import re

from .ncalg import (
    Element,
    Generator,
    Presentation,
    RewriteRule,
    TerminationOrder,
    validate_presentation,
)
from .presentations import PRESET_IDS, preset
from .qfield import ONE, Scalar

__all__ = [
    "DslError",
    "parse_scalar",
    "parse_expression",
    "parse_presentation",
    "export_presentation",
]


class DslError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column else "") + ")"
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([().+\-*/^]))")


def _tokenize(text, line=None):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise DslError(f"bad character {text[pos:].strip()[0]!r}",
                               line, pos + 1)
            break
        if m.group(1):
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            out.append(("ident", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return out


class _ExprParser:
    def __init__(self, tokens, names, line=None):
        self.toks = tokens
        self.i = 0
        self.names = names
        self.line = line

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg):
        _, _, col = self.peek()
        raise DslError(msg, self.line, (col + 1) if col is not None else None)

    def parse(self) -> Element:
        out = self.expr()
        if self.peek()[0] is not None:
            self.error(f"unexpected {self.peek()[1]!r}")
        return out

    def expr(self) -> Element:
        out = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                out = out + rhs if val == "+" else out - rhs
            else:
                return out

    def term(self) -> Element:
        out = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                out = out * self.unary()
            elif kind == "op" and val == "/":
                self.take()
                div = self.unary()
                try:
                    out = out.scale(ONE / div.as_scalar())
                except ValueError:
                    self.error("division requires a scalar divisor")
            elif kind in ("int", "ident") or (kind == "op" and val == "("):
                out = out * self.unary()
            else:
                return out

    def unary(self) -> Element:
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Element:
        base = self.primary()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val, _ = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
            kind, val, _ = self.peek()
            if kind != "int":
                self.error("integer exponent expected after '^'")
            self.take()
            try:
                return Element.term(base.as_scalar() ** (sign * val), ())
            except ValueError:
                self.error("'^' requires a scalar base")
        return base

    def primary(self) -> Element:
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return Element.term(Scalar.from_int(val), ())
        if kind == "op" and val == "(":
            self.take()
            out = self.expr()
            kind, val, _ = self.peek()
            if not (kind == "op" and val == ")"):
                self.error("')' expected")
            self.take()
            return out
        if kind == "ident":
            if val == "q":
                self.take()
                return Element.term(Scalar.q_power(1), ())
            return Element.word(*self.word())
        self.error("expression expected")

    def word(self):
        letters = []
        while True:
            kind, val, _ = self.peek()
            if kind != "ident":
                self.error("generator name expected")
            if val == "q":
                self.error("'q' is the deformation parameter, not a generator")
            if val not in self.names:
                self.error(f"unknown generator {val!r}")
            self.take()
            letters.append(val)
            kind, val, _ = self.peek()
            if kind == "op" and val == ".":
                self.take()
                continue
            return tuple(letters)


def _namespace(p) -> frozenset:
    if p is None:
        return frozenset()
    if isinstance(p, Presentation):
        return frozenset(g.name for g in p.generators)
    return frozenset(p)


def parse_expression(text: str, p=None, line=None) -> Element:
    """Parse an element expression (unnormalized) against a presentation
    or an iterable of generator names."""
    return _ExprParser(_tokenize(text, line), _namespace(p), line).parse()


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal (no generators allowed)."""
    return parse_expression(text, ()).as_scalar()


def parse_presentation(text: str) -> Presentation:
    """Parse, build, and validate a presentation from DSL text."""
    name = "user"
    order = None
    gens: list[Generator] = []
    rules: list[RewriteRule] = []
    base = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        head, rest = parts[0], (parts[1] if len(parts) > 1 else "")
        if head == "name":
            if not rest:
                raise DslError("name requires a value", lineno)
            name = rest.strip()
        elif head == "extends":
            pid = rest.strip()
            if pid not in PRESET_IDS:
                raise DslError(f"unknown preset {pid!r}", lineno)
            base = preset(pid)
            gens = list(base.generators)
            rules = list(base.rules)
            if order is None:
                order = base.order
        elif head == "order":
            bits = rest.split()
            if not bits or bits[0] not in ("deglex", "migration"):
                raise DslError("order must be 'deglex' or 'migration'", lineno)
            side = "right"
            if len(bits) > 1:
                if bits[0] != "migration" or bits[1] not in ("left", "right"):
                    raise DslError("order side must be 'left' or 'right'", lineno)
                side = bits[1]
            order = TerminationOrder(bits[0], side)
        elif head == "gen":
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)\s+parity\s+(even|odd)", rest)
            if not m:
                raise DslError("expected: gen <name> parity (even|odd)", lineno)
            gname, par = m.group(1), (0 if m.group(2) == "even" else 1)
            if gname == "q" or any(g.name == gname for g in gens):
                raise DslError(f"bad or duplicate generator {gname!r}", lineno)
            gens.append(Generator(gname, par, len(gens)))
        elif head == "rule":
            if "->" not in rest:
                raise DslError("expected: rule <word> -> <expression>", lineno)
            lhs_text, rhs_text = rest.split("->", 1)
            names = frozenset(g.name for g in gens)
            lhs_parser = _ExprParser(_tokenize(lhs_text.strip(), lineno), names, lineno)
            lhs = lhs_parser.word()
            if lhs_parser.peek()[0] is not None:
                raise DslError("rule LHS must be a single dotted word", lineno)
            rhs = parse_expression(rhs_text.strip(), names, lineno)
            rules.append(RewriteRule(lhs, rhs, f"user:{lineno}"))
        else:
            raise DslError(f"unknown directive {head!r}", lineno)
    if order is None:
        order = TerminationOrder("deglex")
    p = Presentation(name, gens, order,
                     rules, form_position=(base.form_position if base else None))
    report = validate_presentation(p)
    if not report.valid:
        msgs = "; ".join(f"[{i.rule}] {i.kind}: {i.message}" for i in report.issues)
        raise DslError(f"presentation invalid: {msgs}")
    return p


def export_presentation(p: Presentation) -> str:
    """Serialize a presentation to DSL text that reparses equivalently."""
    lines = [f"name {p.name}"]
    if p.order.kind == "migration":
        lines.append(f"order migration {p.order.form_side}")
    else:
        lines.append("order deglex")
    for g in sorted(p.generators, key=lambda g: g.precedence):
        lines.append(f"gen {g.name} parity {'odd' if g.parity else 'even'}")
    for r in p.rules:
        tag = f"  # {r.provenance}" if r.provenance else ""
        lines.append(f"rule {'.'.join(r.lhs)} -> {r.rhs}{tag}")
    return "\n".join(lines) + "\n"
