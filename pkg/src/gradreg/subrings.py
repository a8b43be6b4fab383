"""Veronese and subalgebra presentations, algebra maps, restriction of scalars.

All presentations here are produced degreewise and certified only within
their window.  The subalgebra engine keeps a presented approximation of the
subalgebra and, level by level, evaluates its normal words into the ambient
algebra: kernel vectors over normal words are exactly the relations that
are new modulo consequences of lower-degree ones, so no two-sided ideal
span is ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import GeneratorSet, NcPoly, Word, format_poly
from .groebner import AlgebraPresentation, GroebnerData, compute_groebner
from .linalg import EchelonSpan, SparseMatrix, Vec, kernel_basis
from .modules import (
    FreeModulePieces,
    MappedPieces,
    ModulePresentation,
    QuotientPieces,
    kernel_generators,
    min_generators,
    presentation_from_kernel,
)


@dataclass(frozen=True)
class AlgebraMap:
    """A graded algebra map given by generator images of matching degree."""

    source: AlgebraPresentation
    target: AlgebraPresentation
    images: Tuple[NcPoly, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.gens):
            raise ValueError("one image per source generator required")
        tg = self.target.gens
        for i, p in enumerate(self.images):
            if p.is_zero() or not p.is_homogeneous(tg):
                raise ValueError("generator images must be nonzero homogeneous")
            if p.degree(tg) != self.source.gens.degrees[i]:
                raise ValueError(
                    f"image of {self.source.gens.names[i]} has degree "
                    f"{p.degree(tg)}, expected {self.source.gens.degrees[i]}")

    def apply_word(self, w: Word, field) -> NcPoly:
        out = NcPoly.word(field, ())
        for i in w:
            out = out.mul(self.images[i], field)
        return out

    def apply(self, p: NcPoly, field) -> NcPoly:
        out = NcPoly.zero()
        for w, c in p.terms.items():
            out = out.add(self.apply_word(w, field).scale(c, field), field)
        return out

    def check(self, g_target: GroebnerData) -> None:
        """Verify that source relations map to zero, within the window."""
        field = self.target.field
        for r in self.source.relations:
            d = r.degree(self.source.gens)
            if d > g_target.dmax:
                raise ValueError(
                    f"cannot verify relation of degree {d} beyond window "
                    f"{g_target.dmax}")
            if not g_target.nf(self.apply(r, field)).is_zero():
                raise ValueError(
                    f"relation {format_poly(r, self.source.gens)} does not "
                    "map to zero")


def identity_map(a: AlgebraPresentation) -> AlgebraMap:
    field = a.field
    return AlgebraMap(a, a, tuple(NcPoly.word(field, (i,))
                                  for i in range(len(a.gens))))


@dataclass
class SubalgebraResult:
    """A windowed presentation plus the generator images in the ambient algebra.

    ``degree_factor`` is 1 for subalgebras at native degrees and ``d`` for
    Veronese regrading (presentation degree times factor = ambient degree).
    """

    presentation: AlgebraPresentation
    images: Tuple[NcPoly, ...]
    degree_factor: int


def _fresh_names(count_hint: str, taken: List[str]) -> str:
    i = 0
    while f"{count_hint}{i}" in taken:
        i += 1
    return f"{count_hint}{i}"


class _SubalgebraEngine:
    """Iteratively presents the subalgebra generated by chosen elements."""

    def __init__(self, g: GroebnerData, factor: int, label: str):
        self.g = g
        self.factor = factor
        self.label = label
        self.field = g.algebra.field
        self.names: List[str] = []
        self.degrees: List[int] = []
        self.images: List[NcPoly] = []
        self.relations: List[NcPoly] = []
        self.ambient = FreeModulePieces(g, (0,))
        self._ev: Dict[Word, Vec] = {(): {0: self.field.one}}
        self._pgb: Optional[GroebnerData] = None
        self._pgb_dmax = 0

    def add_generator(self, name: str, level: int, image: NcPoly) -> None:
        self.names.append(name)
        self.degrees.append(level)
        self.images.append(image)
        self._pgb = None

    def presentation(self, valid_through: Optional[int]) -> AlgebraPresentation:
        gens = GeneratorSet(tuple(self.names), tuple(self.degrees))
        return AlgebraPresentation(gens, tuple(self.relations), self.label,
                                   self.field, valid_through=valid_through)

    def _gb(self, through: int) -> GroebnerData:
        if self._pgb is None or self._pgb_dmax < through:
            self._pgb = compute_groebner(self.presentation(None), through)
            self._pgb_dmax = through
        return self._pgb

    def _eval(self, w: Word) -> Vec:
        got = self._ev.get(w)
        if got is None:
            gi, rest = w[0], w[1:]
            prev = self._eval(rest)
            level_rest = sum(self.degrees[i] for i in rest)
            ambient_deg = self.factor * level_rest
            mat = _poly_left_action(self.ambient, self.images[gi], ambient_deg)
            got = mat.apply(prev)
            self._ev[w] = got
        return got

    def image_span(self, level: int, through: int) -> Tuple[EchelonSpan, List[Word]]:
        pgb = self._gb(through)
        words = list(pgb.normal[level]) if level <= pgb.dmax else []
        span = EchelonSpan(self.field)
        for w in words:
            span.insert(self._eval(w))
        return span, words

    def detect_generators(self, level: int, through: int, prefix: str) -> int:
        """Add ambient normal words not yet in the generated span; returns count."""
        span, _ = self.image_span(level, through)
        ambient_n = self.factor * level
        missing = span.nonpivot_columns(self.g.dims[ambient_n])
        for c in missing:
            w = self.g.normal[ambient_n][c]
            name = _fresh_names(prefix, self.names)
            self.add_generator(name, level, NcPoly.word(self.field, w))
        return len(missing)

    def detect_relations(self, level: int, through: int) -> int:
        """Kernel of evaluation over current normal words; returns count added."""
        pgb = self._gb(through)
        words = pgb.normal[level]
        if not words:
            return 0
        cols = [self._eval(w) for w in words]
        ambient_n = self.factor * level
        mat = SparseMatrix.from_columns(self.field, self.g.dims[ambient_n], cols)
        added = 0
        for kv in kernel_basis(mat):
            poly = NcPoly({words[i]: c for i, c in kv.items()})
            self.relations.append(poly)
            added += 1
        if added:
            self._pgb = None
        return added


def _poly_left_action(pieces: FreeModulePieces, poly: NcPoly, t: int) -> SparseMatrix:
    """Matrix of left multiplication by a homogeneous element on a piece."""
    g = pieces.g
    field = pieces.field
    gd = poly.degree(g.algebra.gens)
    cols: List[Vec] = []
    for i in range(pieces.dim(t)):
        acc: Vec = {}
        for w, c in poly.terms.items():
            v = {i: field.one}
            cur = t
            for gi in reversed(w):
                v = pieces.act(gi, cur).apply(v)
                cur += g.algebra.gens.degrees[gi]
            for k, x in v.items():
                y = field.add(acc.get(k, field.zero), field.mul(c, x))
                if y == field.zero:
                    acc.pop(k, None)
                else:
                    acc[k] = y
        cols.append(acc)
    return SparseMatrix.from_columns(field, pieces.dim(t + gd), cols)


def veronese_presentation(g: GroebnerData, d: int, gen_bound: int,
                          rel_bound: int) -> SubalgebraResult:
    """Presentation of the d-th Veronese, regraded so ambient degree d*i
    becomes degree i.

    Generators start with the normal-word basis of the degree-``d`` piece;
    minimal new generators are detected degreewise through ``gen_bound``.
    Relations are found degreewise through ``rel_bound``; each is new
    modulo consequences of lower-degree ones by construction.
    """
    if d < 1:
        raise ValueError("Veronese index must be positive")
    if d * rel_bound > g.dmax:
        raise ValueError(
            f"bounds exceeded: need ambient degrees through {d * rel_bound}, "
            f"window is {g.dmax}")
    eng = _SubalgebraEngine(g, d, f"{g.algebra.label}^({d})")
    for level in range(1, rel_bound + 1):
        if level <= gen_bound:
            eng.detect_generators(level, rel_bound, "v")
        else:
            span, _ = eng.image_span(level, rel_bound)
            if span.dim < g.dims[d * level]:
                raise ValueError(
                    f"gen_bound={gen_bound} too small: new generators needed "
                    f"at regraded degree {level}")
        eng.detect_relations(level, rel_bound)
    return SubalgebraResult(eng.presentation(rel_bound), tuple(eng.images), d)


def subalgebra_presentation(g: GroebnerData, subgens: Sequence[NcPoly],
                            gen_bound: int, rel_bound: int,
                            names: Optional[Sequence[str]] = None,
                            label: Optional[str] = None) -> SubalgebraResult:
    """Presentation of the subalgebra generated by the given homogeneous
    elements, kept at their native degrees.

    ``gen_bound`` is accepted for interface symmetry but no generators are
    auto-detected: the supplied elements define the subalgebra.
    """
    gens = g.algebra.gens
    if rel_bound > g.dmax:
        raise ValueError(f"bounds exceeded: rel_bound {rel_bound} > window {g.dmax}")
    degs = []
    for p in subgens:
        if p.is_zero() or not p.is_homogeneous(gens):
            raise ValueError("subalgebra generators must be nonzero homogeneous")
        d = p.degree(gens)
        if d < 1:
            raise ValueError("subalgebra generators must have positive degree")
        degs.append(d)
    eng = _SubalgebraEngine(g, 1, label or f"{g.algebra.label}_sub")
    if names is None:
        names = []
        for i in range(len(subgens)):
            names.append(_fresh_names("s", list(names)))
    for name, d, p in zip(names, degs, subgens):
        eng.add_generator(name, d, g.nf(p))
    for level in range(1, rel_bound + 1):
        eng.detect_relations(level, rel_bound)
    return SubalgebraResult(eng.presentation(rel_bound), tuple(eng.images), 1)


def restrict_scalars(g_target: GroebnerData, phi: AlgebraMap,
                     m: ModulePresentation, gen_bound: int, rel_bound: int,
                     g_source: Optional[GroebnerData] = None
                     ) -> ModulePresentation:
    """Present a module over the map's source algebra.

    Generators are module elements not in the source-action span of lower
    pieces; relations are the degreewise kernel of the evaluation from the
    source free cover, certified through ``rel_bound``.
    """
    if phi.target != m.algebra:
        raise ValueError("module must live over the map's target algebra")
    if rel_bound > g_target.dmax:
        raise ValueError("bounds exceeded: rel_bound beyond target window")
    phi.check(g_target)
    if g_source is None:
        g_source = compute_groebner(phi.source, rel_bound)
    base = QuotientPieces(m, g_target, rel_bound)
    mapped = MappedPieces(base, phi.images, phi.source.gens.degrees, g_target)
    gen_positions = min_generators(mapped, min(gen_bound, rel_bound))
    gen_degrees = [t for t, _ in gen_positions]
    images = [(t, {idx: g_target.algebra.field.one}) for t, idx in gen_positions]
    cover = FreeModulePieces(g_source, gen_degrees, m.side)
    kres = kernel_generators(cover, images, mapped, rel_bound)
    return presentation_from_kernel(phi.source, m.side, cover, gen_degrees,
                                    kres, f"{m.label}|{phi.source.label}",
                                    rel_bound)
