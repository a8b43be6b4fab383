"""Words and noncommutative polynomials over weighted generators.

Words are tuples of generator indices.  The monomial order is fixed:
weighted degree first, then word length, then left lexicographic by
generator index.  It is a total order compatible with concatenation on
words of equal degree, which is what reduction and completion need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

Word = Tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered weighted generators of a connected graded algebra."""

    names: Tuple[str, ...]
    degrees: Tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be >= 1 (connected grading)")
        for n in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                raise ValueError(f"invalid generator name {n!r}")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word_degree(self, w: Word) -> int:
        degs = self.degrees
        return sum(degs[i] for i in w)

    def order_key(self, w: Word) -> Tuple[int, int, Word]:
        return (self.word_degree(w), len(w), w)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        return "*".join(self.names[i] for i in w)


def generator_set(spec: Sequence[Tuple[str, int]]) -> GeneratorSet:
    names = tuple(n for n, _ in spec)
    degs = tuple(d for _, d in spec)
    return GeneratorSet(names, degs)


def monomial_compare(gens: GeneratorSet, a: Word, b: Word) -> int:
    """-1, 0 or 1 according to the fixed degree-length-lex order."""
    ka, kb = gens.order_key(a), gens.order_key(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


class NcPoly:
    """A noncommutative polynomial: sparse map from words to scalars.

    No zero coefficients are stored.  Instances are immutable by
    convention; all arithmetic returns new objects and takes the field
    explicitly since coefficient arithmetic depends on it.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Word, object]] = None):
        self.terms = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls({})

    @classmethod
    def word(cls, field, w: Word, c=None) -> "NcPoly":
        c = field.one if c is None else field.of(c)
        return cls({tuple(w): c}) if c != field.zero else cls({})

    def is_zero(self) -> bool:
        return not self.terms

    def leading_word(self, gens: GeneratorSet) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=gens.order_key)

    def leading_coeff(self, gens: GeneratorSet):
        return self.terms[self.leading_word(gens)]

    def degree(self, gens: GeneratorSet) -> int:
        """Degree of a homogeneous polynomial (-1 placeholder never used for 0)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        degs = {gens.word_degree(w) for w in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def is_homogeneous(self, gens: GeneratorSet) -> bool:
        return len({gens.word_degree(w) for w in self.terms}) <= 1

    def add(self, other: "NcPoly", field) -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            x = field.add(out.get(w, field.zero), c)
            if x == field.zero:
                out.pop(w, None)
            else:
                out[w] = x
        return NcPoly(out)

    def sub(self, other: "NcPoly", field) -> "NcPoly":
        return self.add(other.scale(field.neg(field.one), field), field)

    def scale(self, c, field) -> "NcPoly":
        if c == field.zero:
            return NcPoly({})
        return NcPoly({w: field.mul(c, x) for w, x in self.terms.items()})

    def monic(self, gens: GeneratorSet, field) -> "NcPoly":
        c = self.leading_coeff(gens)
        return self if c == field.one else self.scale(field.inv(c), field)

    def lmul_word(self, u: Word) -> "NcPoly":
        if not u:
            return self
        u = tuple(u)
        return NcPoly({u + w: c for w, c in self.terms.items()})

    def rmul_word(self, v: Word) -> "NcPoly":
        if not v:
            return self
        v = tuple(v)
        return NcPoly({w + v: c for w, c in self.terms.items()})

    def mul(self, other: "NcPoly", field) -> "NcPoly":
        out: Dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                x = field.add(out.get(w, field.zero), field.mul(c1, c2))
                if x == field.zero:
                    out.pop(w, None)
                else:
                    out[w] = x
        return NcPoly(out)

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"NcPoly({self.terms!r})"


def format_poly(p: NcPoly, gens: GeneratorSet) -> str:
    """Render with terms in decreasing monomial order, e.g. ``y*x*x - x*x*y``."""
    if p.is_zero():
        return "0"
    parts: List[str] = []
    for w in sorted(p.terms, key=gens.order_key, reverse=True):
        c = p.terms[w]
        neg = c < 0
        mag = -c if neg else c
        body = gens.word_str(w)
        if w and mag == 1:
            text = body
        elif not w:
            text = str(mag)
        else:
            text = f"{mag}*{body}"
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[*+/-])")


class PolyParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (column {pos + 1})")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def parse_poly(text: str, gens: GeneratorSet, field) -> NcPoly:
    """Parse ``2*x*y - 1/2*y*x + 3`` style input.

    Terms are products of integer/rational coefficients and generator
    names joined by ``*``; ``+`` and ``-`` separate terms.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)
    result = NcPoly.zero()
    i = 0
    n = len(tokens)
    while i < n:
        sign = field.one
        while i < n and tokens[i][0] in "+-":
            if tokens[i][0] == "-":
                sign = field.neg(sign)
            i += 1
        if i >= n:
            raise PolyParseError("dangling sign", tokens[-1][1])
        coeff = sign
        word: List[int] = []
        saw_factor = False
        while True:
            tok, pos = tokens[i]
            if tok.isdigit():
                num = int(tok)
                i += 1
                if i < n and tokens[i][0] == "/":
                    i += 1
                    if i >= n or not tokens[i][0].isdigit():
                        raise PolyParseError("expected denominator", pos)
                    den = int(tokens[i][0])
                    if den == 0:
                        raise PolyParseError("zero denominator", tokens[i][1])
                    i += 1
                    coeff = field.mul(coeff, field.of(Fraction(num, den)))
                else:
                    coeff = field.mul(coeff, field.of(num))
            elif tok not in "+-*/":
                if tok not in gens.names:
                    raise PolyParseError(f"unknown generator {tok!r}", pos)
                word.append(gens.index(tok))
                i += 1
            else:
                raise PolyParseError(f"unexpected token {tok!r}", pos)
            saw_factor = True
            if i < n and tokens[i][0] == "*":
                i += 1
                if i >= n:
                    raise PolyParseError("dangling '*'", tokens[-1][1])
                continue
            break
        if not saw_factor:
            raise PolyParseError("empty term", tokens[i][1] if i < n else 0)
        result = result.add(NcPoly.word(field, tuple(word), coeff), field)
    return result


class _ReducerIndex:
    """Leading words bucketed by length for fast subword search.

    Reducers are normalized to be monic so that rewriting cancels the
    matched word exactly.
    """

    __slots__ = ("by_length", "lengths")

    def __init__(self, gens: GeneratorSet, reducers: Iterable[NcPoly], field):
        self.by_length: Dict[int, Dict[Word, NcPoly]] = {}
        for g in reducers:
            lw = g.leading_word(gens)
            self.by_length.setdefault(len(lw), {})[lw] = g.monic(gens, field)
        self.lengths = sorted(self.by_length)

    def find(self, w: Word):
        """Leftmost occurrence of any leading word inside ``w``.

        Returns ``(position, lead, poly)`` or None.  At a fixed position
        shorter leads are preferred; the scan order makes reduction
        deterministic.
        """
        nw = len(w)
        for pos in range(nw):
            for L in self.lengths:
                if pos + L > nw:
                    break
                g = self.by_length[L].get(w[pos:pos + L])
                if g is not None:
                    return pos, w[pos:pos + L], g
        return None


def reduce_poly(f: NcPoly, reducers: Sequence[NcPoly], gens: GeneratorSet, field,
                index: Optional[_ReducerIndex] = None) -> NcPoly:
    """Two-sided normal form of ``f`` modulo monic homogeneous reducers.

    Rewrites the order-largest reducible word first; the result contains no
    leading word of any reducer as a subword and is congruent to ``f``
    modulo the two-sided ideal the reducers generate.
    """
    if index is None:
        index = _ReducerIndex(gens, reducers, field)
    if not index.lengths:
        return f
    terms = dict(f.terms)
    key = gens.order_key
    while True:
        hit = None
        for w in sorted(terms, key=key, reverse=True):
            found = index.find(w)
            if found is not None:
                hit = (w, found)
                break
        if hit is None:
            return NcPoly(terms)
        w, (pos, lead, g) = hit
        c = terms[w]
        u, v = w[:pos], w[pos + len(lead):]
        # f -= c * u*g*v ; the leading term of g cancels w exactly
        for t, d in g.terms.items():
            key_word = u + t + v
            x = field.sub(terms.get(key_word, field.zero), field.mul(c, d))
            if x == field.zero:
                terms.pop(key_word, None)
            else:
                terms[key_word] = x
