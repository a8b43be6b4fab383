"""Weighted regularity invariants read off Betti tables and dual complexes.

Conventions: a Betti entry at homological index i and internal degree j
contributes ``xi0*j - xi1*i`` to the Tor-regularity sup; local cohomology
degrees contribute ``xi0*deg + xi1*j`` to the CM-regularity sup.  CM data
for modules is only available through duality over a certified AS
Gorenstein algebra with a terminated resolution; anything else raises
``UnsupportedComputation``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complexes import (
    BettiTable,
    ExtDegreeTable,
    FreeComplex,
    complex_cohomology,
    minimal_free_resolution,
)
from .groebner import GroebnerData
from .modules import ModulePresentation, trivial_module
from .values import (
    EXACT,
    NEG_INF,
    OBSERVED,
    POS_INF,
    UPPER,
    ExtendedValue,
    Weight,
    worst_status,
)


class UnsupportedComputation(Exception):
    """Raised when a value is outside the engine's certified reach."""


def weighted_extremum(support: Iterable[Tuple[int, int]], w: Weight,
                      mode: str = "sup") -> ExtendedValue:
    """Extremum of ``xi0*m + xi1*n`` over (internal m, homological n) pairs."""
    best = None
    for m, n in support:
        v = w.xi0 * m + w.xi1 * n
        if best is None or (v > best if mode == "sup" else v < best):
            best = v
    if best is None:
        return ExtendedValue(NEG_INF if mode == "sup" else POS_INF, EXACT)
    return ExtendedValue(best, EXACT)


def _table_status(b: BettiTable) -> str:
    return EXACT if b.certified else OBSERVED


def torreg(b: BettiTable, w: Weight, infinite_gldim: bool = False) -> ExtendedValue:
    """Sup of ``xi0*j - xi1*i`` over the Betti table.

    ``infinite_gldim`` is a user assertion about the algebra (for the
    trivial module's table); with ``xi1 < xi0`` it certifies the value
    ``+inf`` since generator degrees grow at least linearly.
    """
    if infinite_gldim and w.xi1 < w.xi0:
        return ExtendedValue(POS_INF, EXACT, b.window())
    best = None
    for (i, j) in b.entries:
        v = w.xi0 * j - w.xi1 * i
        if best is None or v > best:
            best = v
    if best is None:
        return ExtendedValue(NEG_INF, EXACT, b.window())
    return ExtendedValue(best, _table_status(b), b.window())


def extreg(b: BettiTable, w: Weight) -> ExtendedValue:
    """Ext-regularity; equals Tor-regularity for modules with finitely
    generated minimal free resolutions, which is the only case here."""
    return torreg(b, w)


def pdim(b: BettiTable) -> ExtendedValue:
    rows = b.rows()
    if not rows:
        return ExtendedValue(NEG_INF, EXACT, b.window())
    status = EXACT if b.terminated_at is not None else OBSERVED
    return ExtendedValue(Fraction(max(rows)), status, b.window())


def ged_tor(b: BettiTable, i: int):
    return b.min_degree_of_row(i)


def deg_tor(b: BettiTable, i: int):
    return b.max_degree_of_row(i)


@dataclass(frozen=True)
class KoszulVerdict:
    koszul_through_window: bool
    witness: Optional[Tuple[int, int]]
    window: Tuple[int, int]

    def __str__(self):
        if self.koszul_through_window:
            return f"koszul through window h<={self.window[0]}, d<={self.window[1]}"
        return f"not koszul: beta{self.witness} != 0"


def koszul_check(b: BettiTable) -> KoszulVerdict:
    """Linearity of the table of the trivial module; any entry off the
    diagonal disproves Koszulness outright."""
    for (i, j) in sorted(b.entries):
        if i != j:
            return KoszulVerdict(False, (i, j), b.window())
    return KoszulVerdict(True, None, b.window())


def rate(b: BettiTable) -> ExtendedValue:
    """max{1, sup over i >= 2 of (t_i - 1)/(i - 1)} for the trivial module."""
    best = Fraction(1)
    for i in b.rows():
        if i < 2:
            continue
        t = b.max_degree_of_row(i)
        val = Fraction(t - 1, i - 1)
        if val > best:
            best = val
    return ExtendedValue(best, _table_status(b), b.window())


def slope(b: BettiTable) -> ExtendedValue:
    """sup over i >= 1 of (t_i - t_0)/i; empty sup gives -inf."""
    rows = b.rows()
    if not rows or 0 not in rows:
        return ExtendedValue(NEG_INF, _table_status(b), b.window())
    t0 = b.max_degree_of_row(0)
    best = None
    for i in rows:
        if i < 1:
            continue
        val = Fraction(b.max_degree_of_row(i) - t0, i)
        if best is None or val > best:
            best = val
    if best is None:
        return ExtendedValue(NEG_INF, _table_status(b), b.window())
    return ExtendedValue(best, _table_status(b), b.window())


AS_REGULAR = "AS_regular"
AS_GORENSTEIN_ASSUMED = "AS_Gorenstein_assumed"
UNCERTIFIED = "uncertified"


@dataclass
class ASType:
    """(global dimension, index) certification for the Gorenstein condition.

    ``kind`` records how the type was obtained: a full window certification
    of the dual-resolution cohomology, a user assumption, or a failure with
    its reason.  Diagnostic artifacts of the certification are attached for
    reuse.
    """

    d: int
    l: int
    kind: str
    window: Tuple[int, int]
    reason: Optional[str] = None
    trivial_table: Optional[BettiTable] = None
    trivial_complex: Optional[FreeComplex] = None
    ext_table: Optional[ExtDegreeTable] = None

    @property
    def certified(self) -> bool:
        return self.kind in (AS_REGULAR, AS_GORENSTEIN_ASSUMED)

    def __str__(self):
        if self.kind == AS_REGULAR:
            return f"AS regular, type ({self.d},{self.l})"
        if self.kind == AS_GORENSTEIN_ASSUMED:
            return f"AS Gorenstein (assumed), type ({self.d},{self.l})"
        return f"uncertified: {self.reason}"


def check_as_regular(g: GroebnerData, hmax: int, dmax: int) -> ASType:
    """Certify the regularity conditions within the window.

    Resolves the trivial module (termination required), dualizes, and
    requires the dual cohomology to be one-dimensional, concentrated in
    homological index d and internal degree -t_d.  The index is
    cross-checked against the top generator degree of the resolution.
    """
    k = trivial_module(g.algebra)
    cx, table = minimal_free_resolution(k, g, hmax, dmax)
    window = (hmax, dmax)
    if table.terminated_at is None:
        return ASType(-1, 0, UNCERTIFIED, window,
                      reason="resolution of the trivial module did not "
                             f"terminate within homological bound {hmax}",
                      trivial_table=table, trivial_complex=cx)
    d = table.terminated_at
    if d < 0:
        return ASType(-1, 0, UNCERTIFIED, window, reason="zero module",
                      trivial_table=table, trivial_complex=cx)
    l = int(table.max_degree_of_row(d))
    dual = cx.dualize()
    n_lo = -l
    n_hi = g.dmax - l
    ext = complex_cohomology(dual, g, n_lo, n_hi)
    nonzero = ext.nonzero_positions()
    if nonzero != [d]:
        return ASType(d, l, UNCERTIFIED, window,
                      reason=f"dual cohomology not concentrated in index {d}: "
                             f"nonzero at {nonzero}",
                      trivial_table=table, trivial_complex=cx, ext_table=ext)
    total = sum(v for (i, n), v in ext.dims.items() if i == d)
    if total != 1 or ext.dim(d, -l) != 1:
        return ASType(d, l, UNCERTIFIED, window,
                      reason="dual cohomology at the top index is not a "
                             f"single one-dimensional piece in degree {-l}",
                      trivial_table=table, trivial_complex=cx, ext_table=ext)
    return ASType(d, l, AS_REGULAR, window, trivial_table=table,
                  trivial_complex=cx, ext_table=ext)


def cmreg_algebra(t: ASType, w: Weight) -> ExtendedValue:
    """CM regularity of the algebra itself: ``xi1*d - xi0*l``."""
    if not t.certified:
        raise UnsupportedComputation(
            "unsupported: no balanced-dualizing-complex machinery; "
            "CM regularity of an algebra needs a certified Gorenstein type "
            f"({t.reason})")
    return ExtendedValue(w.xi1 * t.d - w.xi0 * t.l, EXACT, t.window)


@dataclass
class LocalCohomologyDegrees:
    """Top degrees of local cohomology in each cohomological index.

    Obtained through duality: ``deg H^j = -ged Ext^{d-j}(M, A) - l``.
    Indices beyond the resolution length are exactly zero.
    """

    values: Dict[int, ExtendedValue]
    d: int
    l: int
    window: Tuple[int, int]
    module_label: str = ""

    def nonvanishing(self) -> List[int]:
        return [j for j in sorted(self.values) if self.values[j].value != NEG_INF]

    def entry(self, j: int) -> ExtendedValue:
        return self.values[j]


def local_cohomology_degrees(m: ModulePresentation, t: ASType, g: GroebnerData,
                             hmax: int, dmax: int) -> LocalCohomologyDegrees:
    """Degrees of local cohomology of a finite-projective-dimension module
    over a certified Gorenstein algebra, via the dualized resolution."""
    if not t.certified:
        raise UnsupportedComputation(
            "unsupported: no balanced-dualizing-complex machinery; "
            "local cohomology needs a certified Gorenstein type")
    cx, table = minimal_free_resolution(m, g, hmax, dmax)
    if table.terminated_at is None:
        raise UnsupportedComputation(
            "module resolution did not terminate within the window; "
            "infinite projective dimension is unsupported here")
    window = (hmax, dmax)
    if table.terminated_at < 0:
        return LocalCohomologyDegrees(
            {j: ExtendedValue(NEG_INF, EXACT, window) for j in range(t.d + 1)},
            t.d, t.l, window, m.label)
    p = table.terminated_at
    dual = cx.dualize()
    top = max(int(table.max_degree_of_row(i)) for i in table.rows())
    n_lo = -top
    n_hi = g.dmax - top
    ext = complex_cohomology(dual, g, n_lo, n_hi)
    values: Dict[int, ExtendedValue] = {}
    for j in range(t.d + 1):
        i = t.d - j
        if i > p:
            values[j] = ExtendedValue(NEG_INF, EXACT, window)
            continue
        val, status = ext.ged(i)
        if val == POS_INF:
            values[j] = ExtendedValue(
                NEG_INF, EXACT if status == EXACT else OBSERVED, window)
        else:
            # -(an upper bound on ged) is a lower bound on the degree
            values[j] = ExtendedValue(
                -Fraction(val) - t.l,
                EXACT if status == EXACT else OBSERVED, window)
    return LocalCohomologyDegrees(values, t.d, t.l, window, m.label)


def cmreg_module(lc: LocalCohomologyDegrees, w: Weight) -> ExtendedValue:
    """Sup of ``xi0*deg H^j + xi1*j`` over the duality table."""
    if w.xi0 < 0:
        raise UnsupportedComputation(
            "CM regularity via duality requires xi0 >= 0")
    best = None
    statuses = []
    for j, ev in lc.values.items():
        statuses.append(ev.status)
        if ev.value == NEG_INF:
            continue
        v = w.xi0 * ev.value + w.xi1 * j
        if best is None or v > best:
            best = v
    if best is None:
        return ExtendedValue(NEG_INF, EXACT, lc.window)
    status = EXACT if all(s == EXACT for s in statuses) else OBSERVED
    return ExtendedValue(best, status, lc.window)


def depth(lc: LocalCohomologyDegrees) -> ExtendedValue:
    """Least cohomological index with nonvanishing local cohomology."""
    for j in sorted(lc.values):
        ev = lc.values[j]
        if ev.value != NEG_INF:
            below_exact = all(lc.values[i].status == EXACT
                              for i in range(j))
            status = EXACT if (ev.status == EXACT and below_exact) else OBSERVED
            return ExtendedValue(Fraction(j), status, lc.window)
    return ExtendedValue(POS_INF, OBSERVED, lc.window)


def asreg(k_table: BettiTable, t: ASType, w: Weight,
          infinite_gldim: bool = False) -> ExtendedValue:
    """Tor-regularity of the trivial module plus CM regularity of the algebra."""
    return torreg(k_table, w, infinite_gldim=infinite_gldim).plus(
        cmreg_algebra(t, w))


def kunneth_torreg(a: ExtendedValue, b: ExtendedValue) -> ExtendedValue:
    """Additivity of Tor-regularity of trivial modules across tensor factors
    (valid for weights with positive first component)."""
    return a.plus(b)


def prop58_bound(b: BettiTable) -> Fraction:
    """The finite-map bound: max of t_0 and t_s/s over 1 <= s <= pdim."""
    if b.terminated_at is None:
        raise UnsupportedComputation(
            "finite-map bound needs a terminated restriction table")
    rows = b.rows()
    if not rows:
        return Fraction(0)
    c = Fraction(int(b.max_degree_of_row(0))) if 0 in rows else Fraction(0)
    for i in rows:
        if i >= 1:
            c = max(c, Fraction(int(b.max_degree_of_row(i)), i))
    return c


def rate_bound(a: Fraction, xi: Fraction) -> Fraction:
    """Upper bound for the rate given a finite Tor-regularity value ``a`` at
    weight (1, xi): max{1, max(a, 1 - xi) + 2 xi - 1}."""
    a = Fraction(a)
    xi = Fraction(xi)
    a_prime = max(a, 1 - xi)
    return max(Fraction(1), a_prime + 2 * xi - 1)


def concavity(t: ASType, w: Weight) -> ExtendedValue:
    """Negated CM regularity of a regular algebra, exact for weights with
    0 <= xi1 <= xi0 after scaling."""
    if w.xi0 <= 0 or not (0 <= w.xi1 <= w.xi0):
        raise UnsupportedComputation(
            "concavity formula requires 0 <= xi1 <= xi0 with xi0 > 0")
    ev = cmreg_algebra(t, w)
    return ExtendedValue(-ev.value, EXACT, t.window)


def concavity_upper_bound(types: Sequence[ASType], w: Weight) -> ExtendedValue:
    """Min of -CMreg over user-supplied regular algebras with finite maps in;
    an upper bound for the true infimum.  Empty list gives +inf."""
    best = None
    window = None
    for t in types:
        ev = cmreg_algebra(t, w)
        v = -ev.value
        window = window or t.window
        if best is None or v < best:
            best = v
    if best is None:
        return ExtendedValue(POS_INF, UPPER)
    return ExtendedValue(best, UPPER, window)


@dataclass(frozen=True)
class AffineForm:
    """An affine profile ``intercept + slope * xi1`` valid for ``xi1`` below
    the crossover of the finitely many candidate lines."""

    intercept: Fraction
    slope: Fraction
    valid_below: Optional[Fraction]

    def at(self, xi1) -> Fraction:
        return self.intercept + self.slope * Fraction(xi1)


def cmreg_affine(lc: LocalCohomologyDegrees) -> AffineForm:
    """Asymptotic CM-regularity line for strongly negative xi1
    (xi0 = 1): intercept is the degree at the depth index, slope the depth."""
    lines = [(j, Fraction(ev.value)) for j, ev in lc.values.items()
             if ev.value != NEG_INF]
    if not lines:
        raise UnsupportedComputation("zero module has no affine profile")
    for j, ev in lc.values.items():
        if ev.value != NEG_INF and ev.status != EXACT:
            raise UnsupportedComputation("affine profile needs exact degrees")
    j0, a0 = min(lines)
    crossings = [Fraction(a0 - aj, j - j0) for j, aj in lines if j != j0]
    return AffineForm(a0, Fraction(j0), min(crossings) if crossings else None)


def torreg_affine(b: BettiTable) -> AffineForm:
    """Asymptotic Tor-regularity line for strongly negative xi1:
    intercept t_pdim, slope -pdim."""
    if b.terminated_at is None:
        raise UnsupportedComputation("affine profile needs a terminated table")
    rows = b.rows()
    if not rows:
        raise UnsupportedComputation("zero module has no affine profile")
    p = max(rows)
    tp = Fraction(int(b.max_degree_of_row(p)))
    crossings = []
    for i in rows:
        if i != p:
            ti = Fraction(int(b.max_degree_of_row(i)))
            crossings.append(Fraction(tp - ti, p - i))
    return AffineForm(tp, Fraction(-p), min(crossings) if crossings else None)


def torreg_support(b: BettiTable) -> List[Tuple[int, int]]:
    """Betti support as (internal, homological) pairs of the derived tensor
    with the trivial module (homological index negated)."""
    return [(j, -i) for (i, j) in sorted(b.entries)]
