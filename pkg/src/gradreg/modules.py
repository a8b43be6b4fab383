"""Graded module presentations and their degreewise linear algebra.

A module is the cokernel of a matrix of homogeneous polynomials over a
presented algebra.  All constructions here reduce to exact linear algebra
on graded pieces:

* ``FreeModulePieces``: pieces of a shifted free module with the generator
  actions assembled from multiplication matrices;
* ``QuotientPieces``: pieces of a cokernel, as coset-representative
  coordinates modulo the relation span;
* ``MappedPieces``: pieces of a module acted on through homogeneous images
  of a different generator set (restriction of scalars, evaluation maps).

``kernel_generators`` is the shared engine extracting minimal generators of
the kernel of a graded map degree by degree; resolutions, truncations and
subalgebra presentations are all built on it.  Everything is pure over
immutable inputs and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import NcPoly, Word, format_poly
from .groebner import AlgebraPresentation, GroebnerData
from .linalg import EchelonSpan, SparseMatrix, Vec, kernel_basis


@dataclass(frozen=True)
class ModulePresentation:
    """A graded module as coker of a relation matrix over a free cover.

    ``shifts[j]`` is the internal degree of cover generator ``j`` (the
    cover is the direct sum of copies of the algebra shifted by ``-shifts[j]``).
    Each relation row is homogeneous: entry ``(r, j)`` has degree
    ``deg(row r) - shifts[j]``.  ``valid_through`` bounds the degrees in
    which a degreewise-computed presentation is certified.
    """

    algebra: AlgebraPresentation
    side: str
    shifts: Tuple[int, ...]
    relations: Tuple[Tuple[NcPoly, ...], ...]
    label: str
    valid_through: Optional[int] = None

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        gens = self.algebra.gens
        for row in self.relations:
            if len(row) != len(self.shifts):
                raise ValueError("relation row width does not match cover rank")
            degs = set()
            for j, p in enumerate(row):
                if p.is_zero():
                    continue
                if not p.is_homogeneous(gens):
                    raise ValueError("relation entries must be homogeneous")
                degs.add(p.degree(gens) + self.shifts[j])
            if len(degs) > 1:
                raise ValueError(f"relation row is not homogeneous: degrees {sorted(degs)}")

    def row_degree(self, r: int) -> Optional[int]:
        gens = self.algebra.gens
        for j, p in enumerate(self.relations[r]):
            if not p.is_zero():
                return p.degree(gens) + self.shifts[j]
        return None

    def min_shift(self) -> int:
        return min(self.shifts) if self.shifts else 0


def trivial_module(algebra: AlgebraPresentation) -> ModulePresentation:
    """The trivial module: the algebra modulo its augmentation ideal."""
    field = algebra.field
    rows = tuple((NcPoly.word(field, (gi,)),) for gi in range(len(algebra.gens)))
    return ModulePresentation(algebra, "left", (0,), rows, "k")


def free_module(algebra: AlgebraPresentation, shifts: Sequence[int],
                label: Optional[str] = None) -> ModulePresentation:
    label = label or ("A" if tuple(shifts) == (0,) else f"A{list(shifts)}")
    return ModulePresentation(algebra, "left", tuple(shifts), (), label)


def cyclic_quotient(algebra: AlgebraPresentation, polys: Sequence[NcPoly],
                    label: str) -> ModulePresentation:
    """A / (left ideal generated by the given homogeneous elements)."""
    rows = tuple((p,) for p in polys)
    return ModulePresentation(algebra, "left", (0,), rows, label)


def shift_module(m: ModulePresentation, ell: int) -> ModulePresentation:
    """Internal shift: piece ``n`` of the result is piece ``n + ell`` of ``m``."""
    if ell == 0:
        return m
    return ModulePresentation(
        m.algebra, m.side, tuple(s - ell for s in m.shifts), m.relations,
        f"{m.label}({ell})",
        None if m.valid_through is None else m.valid_through - ell)


class FreeModulePieces:
    """Graded pieces of a shifted free module, with generator actions.

    The degree-``t`` basis is ``(j, w)`` over cover generators ``j`` and
    normal words ``w`` of degree ``t - shifts[j]``, ordered by ``j`` then by
    the monomial order.  For a left module the action is left
    multiplication; for a right module, right multiplication.
    """

    def __init__(self, g: GroebnerData, shifts: Sequence[int], side: str = "left"):
        self.g = g
        self.shifts = tuple(shifts)
        self.side = side
        self.acting_degrees = g.algebra.gens.degrees
        self._basis: Dict[int, List[Tuple[int, Word]]] = {}
        self._index: Dict[int, Dict[Tuple[int, Word], int]] = {}
        self._act: Dict[Tuple[int, int], SparseMatrix] = {}

    @property
    def field(self):
        return self.g.algebra.field

    def max_degree(self) -> int:
        if not self.shifts:
            return self.g.dmax
        return self.g.dmax + min(self.shifts)

    def min_degree(self) -> int:
        return min(self.shifts) if self.shifts else 0

    def basis(self, t: int) -> List[Tuple[int, Word]]:
        b = self._basis.get(t)
        if b is None:
            b = []
            for j, s in enumerate(self.shifts):
                n = t - s
                if 0 <= n <= self.g.dmax:
                    b.extend((j, w) for w in self.g.normal[n])
                elif n > self.g.dmax:
                    raise ValueError(f"piece {t} outside window")
            self._basis[t] = b
            self._index[t] = {bw: i for i, bw in enumerate(b)}
        return b

    def index(self, t: int) -> Dict[Tuple[int, Word], int]:
        self.basis(t)
        return self._index[t]

    def dim(self, t: int) -> int:
        return len(self.basis(t))

    def act(self, gi: int, t: int) -> SparseMatrix:
        key = (gi, t)
        m = self._act.get(key)
        if m is None:
            g = self.g
            gd = self.acting_degrees[gi]
            src = self.basis(t)
            tgt_index = self.index(t + gd)
            field = self.field
            # block offsets in the target piece
            offsets = []
            off = 0
            for j, s in enumerate(self.shifts):
                offsets.append(off)
                n = t + gd - s
                if 0 <= n <= g.dmax:
                    off += g.dims[n]
            cols: List[Vec] = []
            blocks: Dict[int, SparseMatrix] = {}
            local_pos: Dict[int, int] = {}
            for (j, w) in src:
                n = t - self.shifts[j]
                if j not in blocks:
                    blocks[j] = g.mult(gi, n, self.side)
                    local_pos[j] = 0
                block = blocks[j]
                col = block.columns().get(local_pos[j], {})
                local_pos[j] += 1
                base = offsets[j]
                cols.append({base + i: v for i, v in col.items()})
            m = SparseMatrix.from_columns(field, self.dim(t + gd), cols)
            self._act[key] = m
        return m

    def decode(self, v: Vec, t: int) -> Tuple[NcPoly, ...]:
        """Coordinate vector -> tuple of polynomials over the cover."""
        b = self.basis(t)
        comps: List[Dict[Word, object]] = [dict() for _ in self.shifts]
        for i, c in v.items():
            j, w = b[i]
            comps[j][w] = c
        return tuple(NcPoly(d) for d in comps)

    def encode(self, polys: Sequence[NcPoly], t: int) -> Vec:
        g = self.g
        idx = self.index(t)
        out: Vec = {}
        for j, p in enumerate(polys):
            if p.is_zero():
                continue
            n = t - self.shifts[j]
            for w, c in g.nf(p).terms.items():
                out[idx[(j, w)]] = c
        return out


class QuotientPieces:
    """Pieces of the cokernel of a presentation, with induced actions.

    Degree-``t`` coordinates are indexed by the non-pivot columns of the
    relation span inside the cover piece (a canonical complement).
    """

    def __init__(self, pres: ModulePresentation, g: GroebnerData, through: int):
        if pres.algebra != g.algebra:
            raise ValueError("presentation and Groebner data disagree on the algebra")
        bound = through
        if pres.valid_through is not None:
            bound = min(bound, pres.valid_through)
        self.pres = pres
        self.g = g
        self.side = pres.side
        self.through = bound
        self.cover = FreeModulePieces(g, pres.shifts, pres.side)
        self.acting_degrees = g.algebra.gens.degrees
        field = g.algebra.field
        gens = g.algebra.gens
        rel_by_degree: Dict[int, List[Vec]] = {}
        for r, row in enumerate(pres.relations):
            d = pres.row_degree(r)
            if d is None:
                continue
            rel_by_degree.setdefault(d, []).append(self.cover.encode(row, d))
        self._span: Dict[int, EchelonSpan] = {}
        self._reps: Dict[int, List[int]] = {}
        self._pos: Dict[int, Dict[int, int]] = {}
        self._act: Dict[Tuple[int, int], SparseMatrix] = {}
        lo = pres.min_shift()
        for t in range(lo, bound + 1):
            span = EchelonSpan(field)
            for gi, gd in enumerate(self.acting_degrees):
                prev = self._span.get(t - gd)
                if prev is None or prev.dim == 0:
                    continue
                mat = self.cover.act(gi, t - gd)
                for row_vec in prev.basis_rows():
                    span.insert(mat.apply(row_vec))
            for vec in rel_by_degree.get(t, []):
                span.insert(vec)
            self._span[t] = span
            reps = span.nonpivot_columns(self.cover.dim(t))
            self._reps[t] = reps
            self._pos[t] = {c: i for i, c in enumerate(reps)}

    @property
    def field(self):
        return self.g.algebra.field

    def max_degree(self) -> int:
        return self.through

    def min_degree(self) -> int:
        return self.pres.min_shift()

    def dim(self, t: int) -> int:
        if t < self.pres.min_shift():
            return 0
        if t > self.through:
            raise ValueError(f"piece {t} outside certified window {self.through}")
        return len(self._reps[t])

    def dims(self) -> List[int]:
        lo = self.pres.min_shift()
        return [self.dim(t) if t >= lo else 0 for t in range(0, self.through + 1)]

    def class_vec(self, cover_vec: Vec, t: int) -> Vec:
        """Image of a cover vector in coset-representative coordinates."""
        if t > self.through:
            raise ValueError(f"piece {t} outside certified window {self.through}")
        if t < self.pres.min_shift():
            return {}
        r = self._span[t].reduce(cover_vec)
        pos = self._pos[t]
        return {pos[c]: v for c, v in r.items()}

    def rep_vec(self, local: Vec, t: int) -> Vec:
        reps = self._reps[t]
        return {reps[i]: c for i, c in local.items()}

    def act(self, gi: int, t: int) -> SparseMatrix:
        key = (gi, t)
        m = self._act.get(key)
        if m is None:
            gd = self.acting_degrees[gi]
            cover_act = self.cover.act(gi, t)
            cols = [self.class_vec(cover_act.columns().get(c, {}), t + gd)
                    for c in self._reps.get(t, [])]
            m = SparseMatrix.from_columns(self.field, self.dim(t + gd), cols)
            self._act[key] = m
        return m

    def generator_class(self, j: int) -> Tuple[int, Vec]:
        """Class of cover generator ``j`` as (degree, local coordinates)."""
        t = self.pres.shifts[j]
        idx = self.cover.index(t)[(j, ())]
        return t, self.class_vec({idx: self.field.one}, t)


class MappedPieces:
    """A module's pieces acted on through homogeneous images of new generators.

    ``actions[i]`` is a homogeneous element of the base algebra; the new
    generator ``i`` of degree ``degrees[i]`` acts by multiplying (on the
    module side) by that element.  This is restriction of scalars along a
    graded algebra map.
    """

    def __init__(self, base, actions: Sequence[NcPoly], degrees: Sequence[int],
                 base_gb: GroebnerData):
        self.base = base
        self.actions = tuple(actions)
        self.acting_degrees = tuple(degrees)
        self.base_gb = base_gb
        self.side = base.side
        self._act: Dict[Tuple[int, int], SparseMatrix] = {}

    @property
    def field(self):
        return self.base.field

    def max_degree(self) -> int:
        return self.base.max_degree()

    def min_degree(self) -> int:
        return self.base.min_degree()

    def dim(self, t: int) -> int:
        return self.base.dim(t)

    def _word_apply(self, w: Word, v: Vec, t: int) -> Vec:
        """Apply a base-algebra word to a vector (module-side order)."""
        degs = self.base_gb.algebra.gens.degrees
        letters = reversed(w) if self.side == "left" else iter(w)
        cur = t
        for gi in letters:
            v = self.base.act(gi, cur).apply(v)
            cur += degs[gi]
        return v

    def act(self, gi: int, t: int) -> SparseMatrix:
        key = (gi, t)
        m = self._act.get(key)
        if m is None:
            field = self.field
            poly = self.actions[gi]
            gd = self.acting_degrees[gi]
            cols: List[Vec] = []
            for i in range(self.base.dim(t)):
                acc: Vec = {}
                for w, c in poly.terms.items():
                    img = self._word_apply(w, {i: field.one}, t)
                    for k, x in img.items():
                        y = field.add(acc.get(k, field.zero), field.mul(c, x))
                        if y == field.zero:
                            acc.pop(k, None)
                        else:
                            acc[k] = y
                cols.append(acc)
            m = SparseMatrix.from_columns(field, self.base.dim(t + gd), cols)
            self._act[key] = m
        return m


def min_generators(pieces, through: int) -> List[Tuple[int, int]]:
    """Minimal generator positions of a graded module given by pieces.

    Returns ``(degree, local index)`` pairs: the canonical complement of the
    augmentation-ideal multiples inside each piece, lowest degrees first.
    """
    field = pieces.field
    out: List[Tuple[int, int]] = []
    lo = pieces.min_degree()
    for t in range(lo, through + 1):
        n = pieces.dim(t)
        if n == 0:
            continue
        span = EchelonSpan(field)
        for gi, gd in enumerate(pieces.acting_degrees):
            if t - gd < lo or pieces.dim(t - gd) == 0:
                continue
            mat = pieces.act(gi, t - gd)
            for col in mat.columns().values():
                span.insert(col)
        for c in span.nonpivot_columns(n):
            out.append((t, c))
    return out


class KernelResult:
    """Minimal generators of the kernel of a graded map, degree by degree."""

    def __init__(self):
        self.generators: List[Tuple[int, Vec]] = []
        self.scanned_through: int = -1


def kernel_generators(source: FreeModulePieces,
                      images: Sequence[Tuple[int, Vec]],
                      target, through: int) -> KernelResult:
    """Minimal homogeneous generators of ker(source free module -> target).

    ``images[k]`` is the target-coordinate value of source generator ``k``
    at its degree.  The kernel is scanned in increasing degree; within each
    degree, new generators are the canonical completion of the span of
    multiples of earlier ones, taken in the order of the canonical kernel
    basis of the degree slice.
    """
    field = source.field
    res = KernelResult()
    if not source.shifts:
        res.scanned_through = through
        return res
    degs = source.acting_degrees
    maxd = max(degs)
    img_by_deg: Dict[int, List[Vec]] = {}
    spans: Dict[int, EchelonSpan] = {}
    lo = min(source.shifts)
    for t in range(lo, through + 1):
        basis = source.basis(t)
        imgs: List[Vec] = []
        for (k, w) in basis:
            if not w:
                imgs.append(dict(images[k][1]))
            else:
                if source.side == "left":
                    gi, w0 = w[0], w[1:]
                else:
                    gi, w0 = w[-1], w[:-1]
                gd = degs[gi]
                prev_imgs = img_by_deg.get(t - gd)
                pi = prev_imgs[source.index(t - gd)[(k, w0)]]
                imgs.append(target.act(gi, t - gd).apply(pi))
        img_by_deg[t] = imgs
        for old in [d for d in img_by_deg if d < t - maxd]:
            del img_by_deg[old]

        span = spans.get(t)
        if span is None:
            span = EchelonSpan(field)
        for gi, gd in enumerate(degs):
            lower = spans.get(t - gd)
            if lower is None or lower.dim == 0:
                continue
            mat = source.act(gi, t - gd)
            for row_vec in lower.basis_rows():
                span.insert(mat.apply(row_vec))
        spans[t] = span

        image_rank = EchelonSpan(field)
        for v in imgs:
            image_rank.insert(v)
        dim_kernel = len(basis) - image_rank.dim
        if dim_kernel > span.dim:
            slice_matrix = SparseMatrix.from_columns(field, target.dim(t), imgs)
            for kv in kernel_basis(slice_matrix):
                stored = span.insert(kv)
                if stored is not None:
                    res.generators.append((t, stored))
        res.scanned_through = t
    return res


def presentation_from_kernel(algebra: AlgebraPresentation, side: str,
                             cover: FreeModulePieces,
                             gen_degrees: Sequence[int],
                             kres: KernelResult, label: str,
                             valid_through: int) -> ModulePresentation:
    rows = tuple(cover.decode(vec, t) for t, vec in kres.generators)
    return ModulePresentation(algebra, side, tuple(gen_degrees), rows, label,
                              valid_through=valid_through)


def truncate_module(m: ModulePresentation, s: int, g: GroebnerData,
                    rel_bound: int) -> ModulePresentation:
    """Presentation of the submodule of elements in degrees >= ``s``.

    Generators: a basis of each piece in ``[s, s + spread)`` where spread is
    the largest generator degree of the algebra, plus classes of original
    cover generators sitting in degrees >= ``s + spread``.  Relations are
    the degreewise kernel of the evaluation map, certified through
    ``rel_bound``.
    """
    spread = max(g.algebra.gens.degrees)
    if rel_bound > g.dmax or s + spread - 1 > rel_bound:
        raise ValueError("window too small to truncate: need pieces through "
                         f"{max(rel_bound, s + spread - 1)}")
    pieces = QuotientPieces(m, g, rel_bound)
    gen_degrees: List[int] = []
    images: List[Tuple[int, Vec]] = []
    for t in range(s, s + spread):
        for i in range(pieces.dim(t)):
            gen_degrees.append(t)
            images.append((t, {i: pieces.field.one}))
    for j, sigma in enumerate(m.shifts):
        if sigma >= s + spread:
            t, cls = pieces.generator_class(j)
            if cls:
                gen_degrees.append(t)
                images.append((t, cls))
    if not gen_degrees:
        return ModulePresentation(m.algebra, m.side, (), (), f"{m.label}>={s}",
                                  valid_through=rel_bound)
    cover = FreeModulePieces(g, gen_degrees, m.side)
    kres = kernel_generators(cover, images, pieces, rel_bound)
    return presentation_from_kernel(m.algebra, m.side, cover, gen_degrees, kres,
                                    f"{m.label}>={s}", rel_bound)


def tensor_algebra(t: AlgebraPresentation, a: AlgebraPresentation) -> AlgebraPresentation:
    """Presentation of the tensor product, with cross commutators.

    Generator names from the second factor are renamed on collision.
    """
    if t.field != a.field:
        raise ValueError("tensor factors must share the base field")
    field = t.field
    names = list(t.gens.names)
    degrees = list(t.gens.degrees)
    rename: Dict[str, str] = {}
    for n, d in zip(a.gens.names, a.gens.degrees):
        nn = n
        while nn in names:
            nn += "_r"
        rename[n] = nn
        names.append(nn)
        degrees.append(d)
    from .freealg import GeneratorSet
    gens = GeneratorSet(tuple(names), tuple(degrees))
    nt = len(t.gens)

    def lift_t(p: NcPoly) -> NcPoly:
        return NcPoly(dict(p.terms))

    def lift_a(p: NcPoly) -> NcPoly:
        return NcPoly({tuple(i + nt for i in w): c for w, c in p.terms.items()})

    rels: List[NcPoly] = [lift_t(r) for r in t.relations]
    rels += [lift_a(r) for r in a.relations]
    for i in range(nt):
        for j in range(nt, len(names)):
            comm = NcPoly({(i, j): field.one, (j, i): field.neg(field.one)})
            rels.append(comm)
    vt = None
    for v in (t.valid_through, a.valid_through):
        if v is not None:
            vt = v if vt is None else min(vt, v)
    return AlgebraPresentation(gens, tuple(rels), f"{t.label}_x_{a.label}",
                               field, valid_through=vt)
