"""Degree-truncated noncommutative Groebner bases and graded dimensions.

Completion runs Buchberger-Mora overlap resolution on homogeneous two-sided
ideals, truncated by total degree.  A ``GroebnerData`` is valid only for
conclusions about degrees up to its ``dmax``; every downstream result
carries this window.  The completed basis is the unique reduced truncated
basis for the fixed monomial order, and the overlap queue is processed in a
fixed order, so identical inputs give bit-identical results.
"""

from __future__ import annotations

import hashlib
import heapq
import json
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import (
    GeneratorSet,
    NcPoly,
    Word,
    _ReducerIndex,
    format_poly,
    reduce_poly,
)
from .linalg import SparseMatrix, Vec

CACHE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class AlgebraPresentation:
    """A connected graded algebra given by weighted generators and relations.

    Relations must be homogeneous of degree >= 2 (generators are assumed
    minimal).  ``valid_through`` is set on presentations that were computed
    degreewise (Veronese and subalgebra outputs) and bounds the degrees in
    which the presentation is certified to agree with the intended algebra.
    """

    gens: GeneratorSet
    relations: Tuple[NcPoly, ...]
    label: str
    field: object
    valid_through: Optional[int] = None

    def __post_init__(self):
        for r in self.relations:
            if r.is_zero():
                raise ValueError("zero relation")
            if not r.is_homogeneous(self.gens):
                raise ValueError(f"relation {format_poly(r, self.gens)} is not homogeneous")
            if r.degree(self.gens) < 2:
                raise ValueError("relations must have degree >= 2")

    def max_relation_degree(self) -> int:
        return max((r.degree(self.gens) for r in self.relations), default=2)

    def cache_key(self, dmax: int) -> str:
        rel_strs = sorted(format_poly(r, self.gens) for r in self.relations)
        payload = json.dumps(
            {
                "field": repr(self.field),
                "gens": list(zip(self.gens.names, self.gens.degrees)),
                "relations": rel_strs,
                "dmax": dmax,
                "format": CACHE_FORMAT_VERSION,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()


class _Elt:
    __slots__ = ("poly", "lead", "alive", "eid")

    def __init__(self, poly: NcPoly, lead: Word, eid: int):
        self.poly = poly
        self.lead = lead
        self.alive = True
        self.eid = eid


def _contains_subword(w: Word, sub: Word) -> bool:
    L = len(sub)
    return any(w[i:i + L] == sub for i in range(len(w) - L + 1))


class GroebnerData:
    """Truncated reduced Groebner basis plus normal-word bases per degree.

    ``normal[n]`` lists the words of degree ``n`` avoiding every basis
    leading word as a subword, in increasing monomial order; they form a
    basis of the degree-``n`` piece of the algebra.  Immutable once built;
    multiplication matrices are cached on demand.
    """

    def __init__(self, algebra: AlgebraPresentation, dmax: int,
                 gb: List[NcPoly]):
        self.algebra = algebra
        self.dmax = dmax
        self.gb = gb
        gens = algebra.gens
        self._index = _ReducerIndex(gens, gb, algebra.field)
        self._leads = [g.leading_word(gens) for g in gb]
        self.normal: List[List[Word]] = []
        self.word_index: List[Dict[Word, int]] = []
        self._build_normal_words()
        self.dims: List[int] = [len(ws) for ws in self.normal]
        self._lmult: Dict[Tuple[int, int], SparseMatrix] = {}
        self._rmult: Dict[Tuple[int, int], SparseMatrix] = {}

    # -- normal words ---------------------------------------------------

    def _lead_prefix(self, w: Word) -> bool:
        by_len = self._index.by_length
        for L in self._index.lengths:
            if L > len(w):
                break
            if w[:L] in by_len[L]:
                return True
        return False

    def _lead_suffix(self, w: Word) -> bool:
        by_len = self._index.by_length
        for L in self._index.lengths:
            if L > len(w):
                break
            if w[len(w) - L:] in by_len[L]:
                return True
        return False

    def _build_normal_words(self):
        gens = self.algebra.gens
        by_degree: List[List[Word]] = [[()]]
        for n in range(1, self.dmax + 1):
            words: List[Word] = []
            for gi, gd in enumerate(gens.degrees):
                if gd > n:
                    continue
                for w0 in by_degree[n - gd]:
                    w = (gi,) + w0
                    # w0 has no forbidden subword, so only prefixes matter
                    if not self._lead_prefix(w):
                        words.append(w)
            words.sort(key=gens.order_key)
            by_degree.append(words)
        self.normal = by_degree
        self.word_index = [{w: i for i, w in enumerate(ws)} for ws in by_degree]

    def is_normal_word(self, w: Word) -> bool:
        L = len(w)
        by_len = self._index.by_length
        for sub_len in self._index.lengths:
            if sub_len > L:
                break
            bucket = by_len[sub_len]
            for i in range(L - sub_len + 1):
                if w[i:i + sub_len] in bucket:
                    return False
        return True

    # -- normal forms and coordinates -----------------------------------

    def nf(self, p: NcPoly) -> NcPoly:
        return reduce_poly(p, self.gb, self.algebra.gens, self.algebra.field,
                           index=self._index)

    def coords(self, p: NcPoly, n: int) -> Vec:
        """Coordinates of a homogeneous degree-``n`` element in the normal basis.

        The input need not be in normal form.
        """
        if n > self.dmax:
            raise ValueError(f"degree {n} exceeds window dmax={self.dmax}")
        p = self.nf(p)
        idx = self.word_index[n]
        out: Vec = {}
        for w, c in p.terms.items():
            out[idx[w]] = c
        return out

    def decode(self, v: Vec, n: int) -> NcPoly:
        words = self.normal[n]
        return NcPoly({words[i]: c for i, c in v.items()})

    # -- multiplication matrices -----------------------------------------

    def left_mult(self, gi: int, n: int) -> SparseMatrix:
        """Matrix of left multiplication by generator ``gi``: A_n -> A_{n+deg}."""
        key = (gi, n)
        m = self._lmult.get(key)
        if m is None:
            gd = self.algebra.gens.degrees[gi]
            if n + gd > self.dmax:
                raise ValueError("multiplication exceeds window")
            tgt_idx = self.word_index[n + gd]
            field = self.algebra.field
            cols: List[Vec] = []
            for w in self.normal[n]:
                ww = (gi,) + w
                if not self._lead_prefix(ww):
                    cols.append({tgt_idx[ww]: field.one})
                else:
                    cols.append(self.coords(NcPoly.word(field, ww), n + gd))
            m = SparseMatrix.from_columns(field, self.dims[n + gd], cols)
            self._lmult[key] = m
        return m

    def right_mult(self, gi: int, n: int) -> SparseMatrix:
        """Matrix of right multiplication by generator ``gi``."""
        key = (gi, n)
        m = self._rmult.get(key)
        if m is None:
            gd = self.algebra.gens.degrees[gi]
            if n + gd > self.dmax:
                raise ValueError("multiplication exceeds window")
            tgt_idx = self.word_index[n + gd]
            field = self.algebra.field
            cols: List[Vec] = []
            for w in self.normal[n]:
                ww = w + (gi,)
                if not self._lead_suffix(ww):
                    cols.append({tgt_idx[ww]: field.one})
                else:
                    cols.append(self.coords(NcPoly.word(field, ww), n + gd))
            m = SparseMatrix.from_columns(field, self.dims[n + gd], cols)
            self._rmult[key] = m
        return m

    def mult(self, gi: int, n: int, side: str) -> SparseMatrix:
        return self.left_mult(gi, n) if side == "left" else self.right_mult(gi, n)

    def gb_strings(self) -> List[str]:
        return [format_poly(g, self.algebra.gens) for g in self.gb]


def hilbert_series(g: GroebnerData) -> List[int]:
    """Graded dimensions in degrees 0..dmax."""
    return list(g.dims)


def _overlaps(gens: GeneratorSet, e1: _Elt, e2: _Elt):
    """Proper overlaps: a suffix of lead(e1) equals a prefix of lead(e2)."""
    w1, w2 = e1.lead, e2.lead
    top = min(len(w1), len(w2))
    if e1.eid == e2.eid:
        top = len(w1)
    for k in range(1, top):
        if w1[len(w1) - k:] == w2[:k]:
            yield k, w1 + w2[k:]


def compute_groebner(algebra: AlgebraPresentation, dmax: int) -> GroebnerData:
    """Truncated reduced Groebner basis of the defining ideal.

    All overlap ambiguities whose overlap word has degree <= dmax are
    resolved; S-polynomials above the bound are discarded, so basis
    elements with leading word of degree > dmax are never produced.
    """
    gens = algebra.gens
    field = algebra.field
    if algebra.relations and dmax < algebra.max_relation_degree():
        raise ValueError("dmax below maximal relation degree")
    if algebra.valid_through is not None and dmax > algebra.valid_through:
        raise ValueError(
            f"presentation of {algebra.label} is only valid through degree "
            f"{algebra.valid_through}; requested dmax={dmax}")

    elts: List[_Elt] = []
    queue: List[Tuple[int, Tuple[int, int, Word], int, int, int]] = []

    def alive_polys() -> List[NcPoly]:
        return [e.poly for e in elts if e.alive]

    def push_overlaps(e1: _Elt, e2: _Elt):
        for k, word in _overlaps(gens, e1, e2):
            d = gens.word_degree(word)
            if d <= dmax:
                heapq.heappush(queue, (d, gens.order_key(word)[1:],
                                       e1.eid, e2.eid, k))

    def add_poly(p: NcPoly):
        """Insert a nonzero reduced polynomial, retiring implied elements."""
        p = p.monic(gens, field)
        lead = p.leading_word(gens)
        requeue: List[NcPoly] = []
        for e in elts:
            if e.alive and _contains_subword(e.lead, lead) and e.lead != lead:
                e.alive = False
                requeue.append(e.poly)
        new = _Elt(p, lead, len(elts))
        elts.append(new)
        for e in elts:
            if e.alive and e.eid != new.eid:
                push_overlaps(e, new)
                push_overlaps(new, e)
        push_overlaps(new, new)
        # tail-reduce everything against the updated alive set
        for e in elts:
            if not e.alive or e.eid == new.eid:
                continue
            others = [x.poly for x in elts if x.alive and x.eid != e.eid]
            r = reduce_poly(e.poly, others, gens, field)
            if r.is_zero() or r.leading_word(gens) != e.lead:
                # lead changed: retire and recycle through full insertion
                e.alive = False
                if not r.is_zero():
                    requeue.append(r)
            else:
                e.poly = r.monic(gens, field)
        for q in requeue:
            r = reduce_poly(q, alive_polys(), gens, field)
            if not r.is_zero():
                add_poly(r)

    for r in sorted(algebra.relations,
                    key=lambda p: gens.order_key(p.leading_word(gens))):
        rr = reduce_poly(r, alive_polys(), gens, field)
        if not rr.is_zero():
            add_poly(rr)

    while queue:
        _, _, i, j, k = heapq.heappop(queue)
        e1, e2 = elts[i], elts[j]
        if not (e1.alive and e2.alive):
            continue
        # S-polynomial of the overlap word lead1 + lead2[k:]
        s = e1.poly.rmul_word(e2.lead[k:]).sub(
            e2.poly.lmul_word(e1.lead[:len(e1.lead) - k]), field)
        r = reduce_poly(s, alive_polys(), gens, field)
        if not r.is_zero():
            add_poly(r)

    basis = sorted(alive_polys(), key=lambda p: gens.order_key(p.leading_word(gens)))
    return GroebnerData(algebra, dmax, basis)


def verify_truncated_gb(g: GroebnerData) -> bool:
    """Post-condition check: every overlap of degree <= dmax reduces to zero
    and no leading word divides another.  Used by the test suite."""
    gens = g.algebra.gens
    field = g.algebra.field
    leads = g._leads
    for a, la in enumerate(leads):
        for b, lb in enumerate(leads):
            if a != b and _contains_subword(la, lb):
                return False
    elts = [_Elt(p, p.leading_word(gens), i) for i, p in enumerate(g.gb)]
    for e1 in elts:
        for e2 in elts:
            for k, word in _overlaps(gens, e1, e2):
                if gens.word_degree(word) > g.dmax:
                    continue
                s = e1.poly.rmul_word(e2.lead[k:]).sub(
                    e2.poly.lmul_word(e1.lead[:len(e1.lead) - k]), field)
                if not g.nf(s).is_zero():
                    return False
    return True
