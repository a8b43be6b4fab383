"""Minimal free resolutions, Betti tables, dual complexes and cohomology.

Resolutions are computed by degreewise linear algebra: at each homological
step the kernel of the previous differential is scanned degree by degree
and minimal generators are extracted.  Termination is claimed only as "no
syzygy generators in degrees <= dmax"; it upgrades to a certified table
when the Euler characteristic identity also holds through the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from .freealg import NcPoly, format_poly
from .groebner import GroebnerData
from .linalg import SparseMatrix, Vec, rank
from .modules import (
    FreeModulePieces,
    ModulePresentation,
    QuotientPieces,
    kernel_generators,
    min_generators,
)
from .values import EXACT, NEG_INF, OBSERVED, POS_INF, UPPER


@dataclass
class BettiTable:
    """Multiplicities beta_{i,j} of a minimal resolution within a window.

    ``terminated_at`` is the last homological index with generators when the
    next kernel scan found nothing through ``dmax``.  ``euler_ok`` records
    that the alternating sum of the rows reproduces the module's Hilbert
    function through the window; together with termination this certifies
    the rows as complete.
    """

    entries: Dict[Tuple[int, int], int]
    hmax: int
    dmax: int
    terminated_at: Optional[int] = None
    euler_ok: bool = False
    label: str = ""

    @property
    def certified(self) -> bool:
        return self.terminated_at is not None and self.euler_ok

    @property
    def complete_rows(self) -> frozenset:
        if self.certified:
            return frozenset(i for i, _ in self.entries)
        return frozenset()

    def rows(self) -> List[int]:
        return sorted({i for i, _ in self.entries})

    def row(self, i: int) -> Dict[int, int]:
        return {j: b for (ii, j), b in self.entries.items() if ii == i}

    def max_degree_of_row(self, i: int):
        row = self.row(i)
        return max(row) if row else NEG_INF

    def min_degree_of_row(self, i: int):
        row = self.row(i)
        return min(row) if row else POS_INF

    def support(self) -> List[Tuple[int, int]]:
        return sorted(self.entries)

    def window(self) -> Tuple[int, int]:
        return (self.hmax, self.dmax)

    def to_json(self) -> dict:
        rows = []
        for i in self.rows():
            row = self.row(i)
            rows.append({"i": i, "entries": [{"j": j, "beta": row[j]}
                                             for j in sorted(row)]})
        return {
            "hmax": self.hmax,
            "dmax": self.dmax,
            "terminated_at": self.terminated_at,
            "rows": rows,
        }

    def format_text(self) -> str:
        if not self.entries:
            return "(zero module: empty Betti table)"
        js = sorted({j for _, j in self.entries})
        lines = ["i\\j " + " ".join(f"{j:>4}" for j in js)]
        for i in self.rows():
            row = self.row(i)
            lines.append(f"{i:>3} " + " ".join(
                f"{row.get(j, '.'):>4}" for j in js))
        status = []
        if self.terminated_at is not None:
            status.append(f"terminated at i={self.terminated_at}")
        status.append(f"window h<={self.hmax}, d<={self.dmax}")
        status.append("certified" if self.certified else "observed")
        lines.append("(" + "; ".join(status) + ")")
        return "\n".join(lines)


@dataclass
class FreeComplex:
    """A bounded complex of shifted free modules in cochain convention.

    ``terms[p]`` lists the generator degrees of the position-``p`` term;
    ``diffs[p]`` is the matrix of the map from position ``p`` to ``p + 1``,
    with rows indexed by source generators so that entry ``(a, b)`` carries
    generator ``a`` to that multiple of target generator ``b``.  Minimal
    resolutions of modules sit in positions ``-pdim .. 0``.
    """

    algebra: object
    side: str
    lo: int
    hi: int
    terms: Dict[int, Tuple[int, ...]]
    diffs: Dict[int, Tuple[Tuple[NcPoly, ...], ...]]

    def term(self, p: int) -> Tuple[int, ...]:
        return self.terms.get(p, ())

    def positions(self) -> List[int]:
        return [p for p in range(self.lo, self.hi + 1) if self.term(p)]

    def is_minimal(self) -> bool:
        """Every differential entry has zero constant term."""
        for mat in self.diffs.values():
            for row in mat:
                for p in row:
                    if () in p.terms:
                        return False
        return True

    def check_dd_zero(self, g: GroebnerData) -> bool:
        field = self.algebra.field
        for p in range(self.lo, self.hi - 1 + 1):
            m1 = self.diffs.get(p)
            m2 = self.diffs.get(p + 1)
            if not m1 or not m2:
                continue
            for a in range(len(m1)):
                for c in range(len(m2[0]) if m2 else 0):
                    acc = NcPoly.zero()
                    for b in range(len(m2)):
                        if self.side == "left":
                            prod = m1[a][b].mul(m2[b][c], field)
                        else:
                            prod = m2[b][c].mul(m1[a][b], field)
                        acc = acc.add(prod, field)
                    if not g.nf(acc).is_zero():
                        return False
        return True

    def dualize(self) -> "FreeComplex":
        """Apply Hom(-, algebra): negate shifts, transpose, swap sides.

        Requires a minimal bounded complex; the output is minimal again and
        dualizing twice returns the original terms and differentials.
        """
        if not self.is_minimal():
            raise ValueError("dualize requires a minimal complex")
        new_terms = {-p: tuple(-s for s in self.term(p))
                     for p in range(self.lo, self.hi + 1) if self.term(p)}
        new_diffs: Dict[int, Tuple[Tuple[NcPoly, ...], ...]] = {}
        for p, mat in self.diffs.items():
            if not mat or not mat[0]:
                continue
            # original map: term(p) -> term(p+1); dual: -(p+1) -> -p
            nrows = len(mat[0])
            ncols = len(mat)
            new_diffs[-(p + 1)] = tuple(
                tuple(mat[b][a] for b in range(ncols)) for a in range(nrows))
        side = "right" if self.side == "left" else "left"
        return FreeComplex(self.algebra, side, -self.hi, -self.lo,
                           new_terms, new_diffs)

    def shift_homological(self, ell: int) -> "FreeComplex":
        """Complex shift: position ``p`` of the result is ``p + ell`` of self."""
        field = self.algebra.field
        sign = field.neg(field.one) if ell % 2 else field.one
        terms = {p - ell: s for p, s in self.terms.items()}
        diffs = {}
        for p, mat in self.diffs.items():
            diffs[p - ell] = tuple(tuple(q.scale(sign, field) for q in row)
                                   for row in mat)
        return FreeComplex(self.algebra, self.side, self.lo - ell,
                           self.hi - ell, terms, diffs)

    def shift_internal(self, ell: int) -> "FreeComplex":
        terms = {p: tuple(s - ell for s in shifts) for p, shifts in self.terms.items()}
        return FreeComplex(self.algebra, self.side, self.lo, self.hi,
                           terms, self.diffs)


def minimal_free_resolution(m: ModulePresentation, g: GroebnerData,
                            hmax: int, dmax: int
                            ) -> Tuple[FreeComplex, BettiTable]:
    """Minimal graded free resolution of the presented module.

    Stops at ``hmax`` or when a kernel scan finds no generators in degrees
    <= ``dmax`` (setting ``terminated_at``).  The returned complex carries
    the actual differentials; the table carries the multiplicities.
    """
    if dmax > g.dmax:
        raise ValueError(f"dmax={dmax} exceeds Groebner window {g.dmax}")
    if hmax < 1:
        raise ValueError("hmax must be >= 1")
    effective = dmax
    if m.valid_through is not None:
        effective = min(effective, m.valid_through)
    pieces = QuotientPieces(m, g, effective)
    field = g.algebra.field

    entries: Dict[Tuple[int, int], int] = {}
    diffs: Dict[int, Tuple[Tuple[NcPoly, ...], ...]] = {}
    terms: Dict[int, Tuple[int, ...]] = {}

    gens0 = min_generators(pieces, effective)
    terminated: Optional[int] = None
    if not gens0:
        table = BettiTable({}, hmax, effective, terminated_at=-1,
                           euler_ok=True, label=m.label)
        return FreeComplex(g.algebra, m.side, 0, 0, {}, {}), table

    shifts = tuple(t for t, _ in gens0)
    images = [(t, {idx: field.one}) for t, idx in gens0]
    terms[0] = shifts
    for t, _ in gens0:
        entries[(0, t)] = entries.get((0, t), 0) + 1

    target = pieces
    cover = FreeModulePieces(g, shifts, m.side)
    step = 1
    while step <= hmax:
        kres = kernel_generators(cover, images, target, effective)
        if not kres.generators:
            terminated = step - 1
            break
        new_shifts = tuple(t for t, _ in kres.generators)
        mat = tuple(cover.decode(vec, t) for t, vec in kres.generators)
        terms[-step] = new_shifts
        diffs[-step] = mat
        for t, _ in kres.generators:
            entries[(step, t)] = entries.get((step, t), 0) + 1
        target = cover
        cover = FreeModulePieces(g, new_shifts, m.side)
        images = [(t, dict(vec)) for t, vec in kres.generators]
        step += 1

    lo = -max(i for i, _ in entries)
    complex_ = FreeComplex(g.algebra, m.side, lo, 0, terms, diffs)
    euler_ok = False
    if terminated is not None:
        euler_ok = _euler_check(entries, pieces, g, effective)
    table = BettiTable(entries, hmax, effective, terminated_at=terminated,
                       euler_ok=euler_ok, label=m.label)
    return complex_, table


def _euler_check(entries: Dict[Tuple[int, int], int], pieces: QuotientPieces,
                 g: GroebnerData, through: int) -> bool:
    """Alternating sum of free-term Hilbert functions equals the module's."""
    lo = pieces.min_degree()
    for n in range(lo, through + 1):
        acc = 0
        for (i, j), b in entries.items():
            d = n - j
            if 0 <= d <= g.dmax:
                acc += (-1) ** i * b * g.dims[d]
        if acc != (pieces.dim(n) if n >= lo else 0):
            return False
    return True


def tor_table_of_minimal_complex(f: FreeComplex) -> BettiTable:
    """Generator multiplicities of a minimal complex as a Betti table.

    The term at position ``-s`` contributes at homological index ``s``; for
    a minimal complex these are exactly the Tor multiplicities against the
    trivial module.
    """
    if not f.is_minimal():
        raise ValueError("tor table requires a minimal complex")
    entries: Dict[Tuple[int, int], int] = {}
    for p in range(f.lo, f.hi + 1):
        for s in f.term(p):
            entries[(-p, s)] = entries.get((-p, s), 0) + 1
    hmax = max((-p for p in f.terms), default=0)
    return BettiTable(entries, hmax, 0, terminated_at=hmax, euler_ok=True,
                      label="complex")


@dataclass
class ExtDegreeTable:
    """Cohomology dimensions of a free complex over a degree window.

    For each position the first and last nonzero internal degrees are
    derived with certification flags: a first-nonzero is exact when the
    scan provably started at the least possible degree of the term (its
    window floor); positions outside the complex are exactly zero.
    """

    dims: Dict[Tuple[int, int], int]
    lo: int
    hi: int
    n_lo: int
    n_hi: int
    floors: Dict[int, Optional[int]]

    def dim(self, i: int, n: int) -> int:
        return self.dims.get((i, n), 0)

    def is_structural_zero(self, i: int) -> bool:
        return self.floors.get(i, None) is None

    def ged(self, i: int) -> Tuple[object, str]:
        """(value, status) for the least nonzero degree at position i."""
        if self.is_structural_zero(i):
            return (POS_INF, EXACT)
        floor = self.floors[i]
        hits = sorted(n for (ii, n), d in self.dims.items() if ii == i and d > 0)
        if hits:
            if self.n_lo <= floor:
                return (hits[0], EXACT)
            return (hits[0], UPPER)
        return (POS_INF, OBSERVED)

    def deg(self, i: int) -> Tuple[object, str]:
        if self.is_structural_zero(i):
            return (NEG_INF, EXACT)
        hits = sorted(n for (ii, n), d in self.dims.items() if ii == i and d > 0)
        if hits:
            return (hits[-1], OBSERVED)
        return (NEG_INF, OBSERVED)

    def nonzero_positions(self) -> List[int]:
        return sorted({i for (i, _), d in self.dims.items() if d > 0})


def complex_cohomology(f: FreeComplex, g: GroebnerData,
                       n_lo: int, n_hi: int) -> ExtDegreeTable:
    """Cohomology dimensions of each position over internal degrees
    ``n_lo..n_hi`` via rank-nullity on degree slices."""
    all_shifts = [s for shifts in f.terms.values() for s in shifts]
    if all_shifts and n_hi - min(all_shifts) > g.dmax:
        raise ValueError(
            f"window insufficient: need algebra degrees through "
            f"{n_hi - min(all_shifts)} > dmax={g.dmax}")
    pieces = {p: FreeModulePieces(g, f.term(p), f.side)
              for p in range(f.lo, f.hi + 1)}
    field = g.algebra.field

    rank_cache: Dict[Tuple[int, int], int] = {}

    def slice_rank(p: int, n: int) -> int:
        mat = f.diffs.get(p)
        if mat is None or not f.term(p) or not f.term(p + 1):
            return 0
        key = (p, n)
        got = rank_cache.get(key)
        if got is None:
            src = pieces[p]
            dst = pieces[p + 1]
            cols: List[Vec] = []
            for (j, w) in src.basis(n):
                if f.side == "left":
                    polys = [NcPoly.word(field, w).mul(q, field) for q in mat[j]]
                else:
                    polys = [q.mul(NcPoly.word(field, w), field) for q in mat[j]]
                cols.append(dst.encode(polys, n))
            got = rank(SparseMatrix.from_columns(field, dst.dim(n), cols))
            rank_cache[key] = got
        return got

    dims: Dict[Tuple[int, int], int] = {}
    floors: Dict[int, Optional[int]] = {}
    for p in range(f.lo, f.hi + 1):
        shifts = f.term(p)
        floors[p] = min(shifts) if shifts else None
        if not shifts:
            continue
        for n in range(n_lo, n_hi + 1):
            d_here = pieces[p].dim(n)
            if d_here == 0:
                continue
            h = d_here - slice_rank(p, n) - slice_rank(p - 1, n)
            if h:
                dims[(p, n)] = h
    return ExtDegreeTable(dims, f.lo, f.hi, n_lo, n_hi, floors)
