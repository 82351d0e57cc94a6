"""Graded free algebra over Q(q) with an oriented rewriting engine.

Words are tuples of generator names; elements are finite Q(q)-linear
combinations of words; a presentation bundles graded generators (with a
total precedence), a termination order, and oriented rewrite rules whose
left-hand sides are single words of length >= 2.

Normalization rewrites exhaustively with a leftmost-first strategy; on a
locally confluent presentation (checked, never assumed) the result is the
unique normal form regardless of strategy, which
:func:`random_strategy_normalize` exercises independently.

Presentations, rules, and elements are immutable after construction; the
per-presentation normal-form cache is an internal memo keyed by word.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .qfield import ONE, Scalar, ZERO

__all__ = [
    "Generator",
    "Element",
    "RewriteRule",
    "TerminationOrder",
    "Presentation",
    "ValidationReport",
    "ConfluenceReport",
    "CriticalPair",
    "normalize",
    "mul",
    "equal_mod_ideal",
    "random_strategy_normalize",
    "check_local_confluence",
    "validate_presentation",
    "normal_words",
    "StepBudgetExceededError",
    "UnknownGeneratorError",
    "DEFAULT_STEP_BUDGET",
]

DEFAULT_STEP_BUDGET = 10 ** 6

Word = tuple  # tuple[str, ...]


class StepBudgetExceededError(RuntimeError):
    """Rewriting exceeded its step cap; the rule set is suspect."""


class UnknownGeneratorError(KeyError):
    """A word references a generator the presentation does not declare."""


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int          # 0 even, 1 odd
    precedence: int


class Element:
    """Finite map word -> Scalar with zero coefficients absent."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None, _trusted=False):
        if terms is None:
            object.__setattr__(self, "_terms", {})
        elif _trusted:
            object.__setattr__(self, "_terms", dict(terms))
        else:
            clean = {}
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar.from_int(c)
                if not c.is_zero:
                    clean[tuple(w)] = clean.get(tuple(w), ZERO) + c
            object.__setattr__(self, "_terms",
                               {w: c for w, c in clean.items() if not c.is_zero})

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "Element":
        return _ZERO_ELEMENT

    @staticmethod
    def unit() -> "Element":
        return _UNIT_ELEMENT

    @staticmethod
    def word(*names: str) -> "Element":
        if len(names) == 1 and "." in names[0]:
            names = tuple(names[0].split("."))
        return Element({tuple(names): ONE}, _trusted=True)

    @staticmethod
    def term(coef, word: Iterable[str]) -> "Element":
        if not isinstance(coef, Scalar):
            coef = Scalar.from_int(coef)
        if coef.is_zero:
            return _ZERO_ELEMENT
        return Element({tuple(word): coef}, _trusted=True)

    # -- views ---------------------------------------------------------------

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coeff(self, word: Iterable[str]) -> Scalar:
        return self._terms.get(tuple(word), ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    # -- algebra -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(w, None)
            else:
                out[w] = s
        return Element(out, _trusted=True)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element({w: -c for w, c in self._terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, Element):
            out = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    s = out.get(w)
                    s = c if s is None else s + c
                    if s.is_zero:
                        out.pop(w, None)
                    else:
                        out[w] = s
            return Element(out, _trusted=True)
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coef) -> "Element":
        if not isinstance(coef, Scalar):
            coef = Scalar.from_int(coef)
        if coef.is_zero:
            return _ZERO_ELEMENT
        return Element({w: c * coef for w, c in self._terms.items()}, _trusted=True)

    def map_scalars(self, fn) -> "Element":
        out = {}
        for w, c in self._terms.items():
            c2 = fn(c)
            if not c2.is_zero:
                out[w] = c2
        return Element(out, _trusted=True)

    def substitute(self, images: Mapping[str, "Element"], scalar_fn=None) -> "Element":
        """Replace generators by elements (homomorphically on words)."""
        out = Element.zero()
        for w, c in self._terms.items():
            if scalar_fn is not None:
                c = scalar_fn(c)
                if c.is_zero:
                    continue
            acc = Element.term(c, ())
            for g in w:
                img = images.get(g)
                acc = acc * (img if img is not None else Element.word(g))
                if acc.is_zero:
                    break
            out = out + acc
        return out

    def as_scalar(self) -> Scalar:
        if not self._terms:
            return ZERO
        if set(self._terms) == {()}:
            return self._terms[()]
        raise ValueError(f"element {self} is not a scalar")

    # -- comparison / display --------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=lambda w: (len(w), w)):
            c = self._terms[w]
            neg = c.leading_sign() < 0
            mag = -c if neg else c
            ws = ".".join(w)
            cs = str(mag)
            if ws:
                if mag.is_one:
                    body = ws
                else:
                    if " " in cs or "/" in cs:
                        cs = f"({cs})"
                    body = f"{cs} {ws}"
            else:
                body = cs
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self}>"


_ZERO_ELEMENT = Element({}, _trusted=True)
_UNIT_ELEMENT = Element({(): ONE}, _trusted=True)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: Element
    provenance: str = ""

    def relation(self) -> Element:
        """LHS - RHS, the relation this rule orients."""
        return Element.word(*self.lhs) - self.rhs


@dataclass(frozen=True)
class TerminationOrder:
    """Well-founded word order used to orient rules.

    ``deglex`` compares word length, then precedence sequences.

    ``migration`` counts, for every odd generator, the even generators on
    its wrong side (the side opposite ``form_side``), then tie-breaks with
    deglex.  It orients degree-raising rules that move odd generators
    toward ``form_side``, which deglex cannot.
    """

    kind: str = "deglex"
    form_side: str = "right"

    def key(self, word: Word, parity: Mapping[str, int], prec: Mapping[str, int]):
        base = (len(word),) + tuple(prec[g] for g in word)
        if self.kind == "deglex":
            return base
        if self.kind != "migration":
            raise ValueError(f"unknown order kind {self.kind!r}")
        crossings = 0
        if self.form_side == "right":
            evens_after = 0
            for g in reversed(word):
                if parity[g]:
                    crossings += evens_after
                else:
                    evens_after += 1
        else:
            evens_before = 0
            for g in word:
                if parity[g]:
                    crossings += evens_before
                else:
                    evens_before += 1
        return (crossings,) + base

    def greater(self, w1: Word, w2: Word, parity, prec) -> bool:
        return self.key(w1, parity, prec) > self.key(w2, parity, prec)


@dataclass
class ValidationIssue:
    rule: str
    kind: str
    message: str


@dataclass
class ValidationReport:
    presentation: str
    issues: list

    @property
    def valid(self) -> bool:
        return not self.issues


@dataclass
class CriticalPair:
    rule1: str
    rule2: str
    word: Word
    branch1: Element
    branch2: Element

    @property
    def residual(self) -> Element:
        return self.branch1 - self.branch2

    @property
    def resolved(self) -> bool:
        return self.branch1 == self.branch2


@dataclass
class ConfluenceReport:
    presentation: str
    pairs: list

    @property
    def unresolved(self) -> list:
        return [p for p in self.pairs if not p.resolved]

    @property
    def confluent(self) -> bool:
        return not self.unresolved


class _Steps:
    __slots__ = ("count", "budget")

    def __init__(self, budget):
        self.count = 0
        self.budget = budget

    def tick(self, presentation):
        self.count += 1
        if self.count > self.budget:
            raise StepBudgetExceededError(
                f"step budget {self.budget} exceeded while normalizing under "
                f"{presentation!r}; the rule set may not terminate")


class Presentation:
    """Immutable bundle of generators, order, and oriented rules."""

    def __init__(self, name: str, generators: Iterable[Generator],
                 order: TerminationOrder, rules: Iterable[RewriteRule],
                 form_position: str | None = None, tags: tuple = ()):
        self.name = name
        self.generators = tuple(generators)
        self.order = order
        self.rules = tuple(rules)
        self.form_position = form_position  # where odd generators sit in normal form
        self.tags = tuple(tags)
        self.parity = {g.name: g.parity for g in self.generators}
        self.precedence = {g.name: g.precedence for g in self.generators}
        self._by_first = {}
        for r in self.rules:
            self._by_first.setdefault(r.lhs[0], []).append(r)
        self._max_lhs = max((len(r.lhs) for r in self.rules), default=0)
        self._nf_cache: dict = {}

    # -- generator helpers ----------------------------------------------------

    def generator(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise UnknownGeneratorError(name)

    def even_names(self):
        return [g.name for g in self.generators if g.parity == 0]

    def odd_names(self):
        return [g.name for g in self.generators if g.parity == 1]

    def word_parity(self, word: Word) -> int:
        p = 0
        for g in word:
            p ^= self.parity[g]
        return p

    def form_degree(self, word: Word) -> int:
        return sum(self.parity[g] for g in word)

    def check_word(self, word: Word):
        for g in word:
            if g not in self.parity:
                raise UnknownGeneratorError(g)

    # -- rewriting ------------------------------------------------------------

    def find_redex(self, word: Word):
        by_first = self._by_first
        n = len(word)
        for i in range(n):
            rules = by_first.get(word[i])
            if not rules:
                continue
            for r in rules:
                L = r.lhs
                if n - i >= len(L) and word[i:i + len(L)] == L:
                    return i, r
        return None

    def all_redexes(self, word: Word):
        by_first = self._by_first
        n = len(word)
        out = []
        for i in range(n):
            rules = by_first.get(word[i])
            if not rules:
                continue
            for j, r in enumerate(rules):
                L = r.lhs
                if n - i >= len(L) and word[i:i + len(L)] == L:
                    out.append((i, j, r))
        return out

    def is_normal(self, word: Word) -> bool:
        return self.find_redex(word) is None

    def word_normal_form(self, word: Word, steps: _Steps) -> Element:
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        stack = [word]
        while stack:
            steps.tick(self.name)
            cur = stack[-1]
            if cur in cache:
                stack.pop()
                continue
            m = self.find_redex(cur)
            if m is None:
                cache[cur] = Element.word(*cur) if cur else Element.unit()
                stack.pop()
                continue
            i, rule = m
            prefix, suffix = cur[:i], cur[i + len(rule.lhs):]
            children = [(prefix + w + suffix, c) for w, c in rule.rhs.items()]
            missing = [w for w, _ in children if w not in cache]
            if missing:
                stack.extend(missing)
                continue
            acc = Element.zero()
            for w, c in children:
                acc = acc + cache[w].scale(c)
            cache[cur] = acc
            stack.pop()
        return cache[word]

    def __repr__(self):
        return f"Presentation({self.name!r}, {len(self.rules)} rules)"


# ---------------------------------------------------------------------------
# module-level operations (the public engine surface)
# ---------------------------------------------------------------------------

def normalize(x: Element, p: Presentation, budget: int = DEFAULT_STEP_BUDGET) -> Element:
    """Unique rewriting fixed point of ``x`` under ``p`` (leftmost strategy)."""
    steps = _Steps(budget)
    out: dict = {}
    for w, c in x.items():
        p.check_word(w)
        for w2, c2 in p.word_normal_form(w, steps).items():
            s = out.get(w2)
            s = c * c2 if s is None else s + c * c2
            if s.is_zero:
                out.pop(w2, None)
            else:
                out[w2] = s
    return Element(out, _trusted=True)


def mul(x: Element, y: Element, p: Presentation,
        budget: int = DEFAULT_STEP_BUDGET) -> Element:
    """Product in the presented algebra: concatenation followed by normalize."""
    return normalize(x * y, p, budget)


def equal_mod_ideal(x: Element, y: Element, p: Presentation,
                    budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """True iff x - y rewrites to zero (complete only on confluent p)."""
    return normalize(x - y, p, budget).is_zero


def random_strategy_normalize(x: Element, p: Presentation, seed: int,
                              budget: int = DEFAULT_STEP_BUDGET) -> Element:
    """Rewrite with randomly chosen redexes; agrees with :func:`normalize`
    on locally confluent presentations.

    Deliberately shares no code with the cached leftmost normalizer so the
    two act as independent witnesses.
    """
    rng = random.Random(seed)
    terms = {w: c for w, c in x.items()}
    steps = 0
    while True:
        redexes = []
        for w in sorted(terms, key=lambda w: (len(w), w)):
            for i, j, r in p.all_redexes(w):
                redexes.append((w, i, j, r))
        if not redexes:
            break
        w, i, _, rule = redexes[rng.randrange(len(redexes))]
        steps += 1
        if steps > budget:
            raise StepBudgetExceededError(
                f"step budget {budget} exceeded in random-strategy rewriting")
        c = terms.pop(w)
        prefix, suffix = w[:i], w[i + len(rule.lhs):]
        for w2, c2 in rule.rhs.items():
            nw = prefix + w2 + suffix
            s = terms.get(nw)
            s = c * c2 if s is None else s + c * c2
            if s.is_zero:
                terms.pop(nw, None)
            else:
                terms[nw] = s
    return Element(terms, _trusted=True)


def validate_presentation(p: Presentation) -> ValidationReport:
    """Check rule orientation, parity consistency, and generator references."""
    issues = []
    seen_names = set()
    seen_prec = set()
    for g in p.generators:
        if g.name in seen_names:
            issues.append(ValidationIssue(g.name, "generator", "duplicate name"))
        if g.precedence in seen_prec:
            issues.append(ValidationIssue(g.name, "generator", "duplicate precedence"))
        if g.name == "q":
            issues.append(ValidationIssue(g.name, "generator", "name 'q' is reserved"))
        seen_names.add(g.name)
        seen_prec.add(g.precedence)
    seen_lhs = set()
    for r in p.rules:
        tag = r.provenance or ".".join(r.lhs)
        if len(r.lhs) < 2:
            issues.append(ValidationIssue(tag, "shape", "rule LHS shorter than 2"))
            continue
        unknown = [g for g in r.lhs if g not in p.parity]
        for w, _ in r.rhs.items():
            unknown.extend(g for g in w if g not in p.parity)
        if unknown:
            issues.append(ValidationIssue(
                tag, "unknown-generator", f"undeclared: {sorted(set(unknown))}"))
            continue
        if r.lhs in seen_lhs:
            issues.append(ValidationIssue(tag, "shape", "duplicate rule LHS"))
        seen_lhs.add(r.lhs)
        lp = p.word_parity(r.lhs)
        for w, _ in r.rhs.items():
            if p.word_parity(w) != lp:
                issues.append(ValidationIssue(
                    tag, "parity", f"RHS word {'.'.join(w) or '1'} parity differs"))
            if not p.order.greater(r.lhs, w, p.parity, p.precedence):
                issues.append(ValidationIssue(
                    tag, "orientation",
                    f"RHS word {'.'.join(w) or '1'} not smaller than LHS"))
    return ValidationReport(p.name, issues)


def check_local_confluence(p: Presentation,
                           budget: int = DEFAULT_STEP_BUDGET) -> ConfluenceReport:
    """Reduce both branches of every overlap/inclusion critical pair."""
    pairs = []
    for r1 in p.rules:
        u = r1.lhs
        for r2 in p.rules:
            v = r2.lhs
            # proper overlaps: a suffix of u equals a prefix of v
            for k in range(1, min(len(u), len(v))):
                if u[-k:] == v[:k]:
                    word = u + v[k:]
                    b1 = normalize(r1.rhs * Element.word(*v[k:]), p, budget)
                    b2 = normalize(Element.word(*u[:-k]) * r2.rhs, p, budget)
                    pairs.append(CriticalPair(_tag(r1), _tag(r2), word, b1, b2))
            # inclusions: v strictly inside u
            if r1 is not r2 and len(v) < len(u):
                for i in range(len(u) - len(v) + 1):
                    if u[i:i + len(v)] == v:
                        b1 = normalize(r1.rhs, p, budget)
                        mid = Element.word(*u[:i]) * r2.rhs * Element.word(*u[i + len(v):])
                        b2 = normalize(mid, p, budget)
                        pairs.append(CriticalPair(_tag(r1), _tag(r2), u, b1, b2))
    return ConfluenceReport(p.name, pairs)


def _tag(rule: RewriteRule) -> str:
    return rule.provenance or ".".join(rule.lhs)


def normal_words(p: Presentation, max_len: int,
                 alphabet: Iterable[str] | None = None) -> Iterator[Word]:
    """All normal-form words of length <= max_len (empty word included)."""
    letters = tuple(alphabet) if alphabet is not None else tuple(
        g.name for g in p.generators)
    level = [()]
    yield ()
    for _ in range(max_len):
        nxt = []
        for w in level:
            for g in letters:
                w2 = w + (g,)
                # w is normal, so any redex in w2 must end at the last letter
                reducible = False
                for L in range(2, min(p._max_lhs, len(w2)) + 1):
                    tail = w2[-L:]
                    for r in p._by_first.get(tail[0], ()):
                        if r.lhs == tail:
                            reducible = True
                            break
                    if reducible:
                        break
                if not reducible:
                    nxt.append(w2)
                    yield w2
        level = nxt
