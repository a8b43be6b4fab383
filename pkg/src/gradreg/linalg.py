"""Exact scalar fields and deterministic sparse linear algebra.

Scalars are plain ``Fraction`` values over QQ, or ints in ``[0, p)`` over a
prime field.  Vectors are sparse dicts ``{index: scalar}`` with no stored
zeros; matrices store one dict per row.  Every operation is a pure function
of its inputs and the reduced row echelon form is the unique canonical one,
so results are bit-identical between runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

Vec = Dict[int, object]


class RationalField:
    """The field QQ; scalars are ``Fraction`` instances."""

    prime: Optional[int] = None
    name = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, n) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return Fraction(1) / a

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField:
    """The field F_p; scalars are ints reduced to ``[0, p)``."""

    name = "F"

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modulus {p} is not prime")
        self.prime = p
        self.zero = 0
        self.one = 1 % p

    def of(self, n) -> int:
        if isinstance(n, Fraction):
            return (n.numerator * pow(n.denominator, -1, self.prime)) % self.prime
        return n % self.prime

    def add(self, a, b):
        return (a + b) % self.prime

    def sub(self, a, b):
        return (a - b) % self.prime

    def mul(self, a, b):
        return (a * b) % self.prime

    def neg(self, a):
        return (-a) % self.prime

    def inv(self, a):
        return pow(a, -1, self.prime)

    def __repr__(self):
        return f"GF({self.prime})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.prime == self.prime

    def __hash__(self):
        return hash(("F", self.prime))


QQ = RationalField()


def parse_field(text: str):
    """Parse ``"Q"`` or ``"F <p>"`` / ``"F<p>"`` into a field object."""
    parts = text.replace(",", " ").split()
    if parts and parts[0].upper() == "Q":
        return QQ
    if parts and parts[0].upper().startswith("F"):
        rest = parts[0][1:] or (parts[1] if len(parts) > 1 else "")
        return PrimeField(int(rest))
    raise ValueError(f"unknown field {text!r}")


def vec_add_scaled(field, target: Vec, source: Vec, c) -> None:
    """In place ``target += c * source``, dropping zero entries."""
    if c == field.zero:
        return
    mul, add, zero = field.mul, field.add, field.zero
    for k, v in source.items():
        w = add(target.get(k, zero), mul(c, v))
        if w == zero:
            target.pop(k, None)
        else:
            target[k] = w


def vec_scale(field, v: Vec, c) -> Vec:
    if c == field.zero:
        return {}
    mul = field.mul
    return {k: mul(c, x) for k, x in v.items()}


class SparseMatrix:
    """Immutable-by-convention sparse matrix over a fixed field.

    ``rows[i]`` maps column index to a nonzero scalar.  Construction drops
    explicit zeros and checks index bounds.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "_cols")

    def __init__(self, field, nrows: int, ncols: int,
                 rows: Optional[List[Vec]] = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        self._cols = None

    @classmethod
    def from_entries(cls, field, nrows: int, ncols: int,
                     entries: Dict[Tuple[int, int], object]) -> "SparseMatrix":
        m = cls(field, nrows, ncols)
        for (i, j), v in entries.items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i},{j}) out of bounds")
            v = field.of(v)
            if v != field.zero:
                m.rows[i][j] = v
        return m

    @classmethod
    def from_dense(cls, field, data: List[List[object]]) -> "SparseMatrix":
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        m = cls(field, nrows, ncols)
        for i, row in enumerate(data):
            for j, v in enumerate(row):
                v = field.of(v)
                if v != field.zero:
                    m.rows[i][j] = v
        return m

    @classmethod
    def from_columns(cls, field, nrows: int, columns: List[Vec]) -> "SparseMatrix":
        m = cls(field, nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != field.zero:
                    m.rows[i][j] = v
        return m

    def entry(self, i: int, j: int):
        return self.rows[i].get(j, self.field.zero)

    def entries(self) -> Iterable[Tuple[int, int, object]]:
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                yield i, j, v

    def column(self, j: int) -> Vec:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def columns(self) -> Dict[int, Vec]:
        """Column layout, built once on demand."""
        if self._cols is None:
            cols: Dict[int, Vec] = {}
            for i, row in enumerate(self.rows):
                for j, v in row.items():
                    cols.setdefault(j, {})[i] = v
            self._cols = cols
        return self._cols

    def apply(self, v: Vec) -> Vec:
        """Matrix times sparse column vector."""
        field = self.field
        cols = self.columns()
        out: Vec = {}
        for j, c in v.items():
            col = cols.get(j)
            if col is not None:
                vec_add_scaled(field, out, col, c)
        return out

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.field, self.ncols, self.nrows,
                         [dict() for _ in range(self.ncols)])
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                t.rows[j][i] = v
        return t

    def is_zero(self) -> bool:
        return all(not row for row in self.rows)

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix)
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, {sum(len(r) for r in self.rows)} nz)"


def row_reduce(m: SparseMatrix) -> Tuple[SparseMatrix, List[Tuple[int, int]], int]:
    """Unique reduced row echelon form of ``m``.

    Returns ``(reduced, pivots, rank)`` where ``pivots`` lists
    ``(row, col)`` with pivot columns in increasing order.  Pivot search
    scans columns left to right and rows top to bottom; since the RREF of a
    matrix is unique the output does not depend on that choice, but the scan
    makes the algorithm itself deterministic.
    """
    field = m.field
    work = [dict(r) for r in m.rows]
    placed: List[Vec] = []
    pivots: List[Tuple[int, int]] = []
    remaining = list(range(m.nrows))
    for col in range(m.ncols):
        hit = None
        for idx in remaining:
            if col in work[idx]:
                hit = idx
                break
        if hit is None:
            continue
        remaining.remove(hit)
        piv = work[hit]
        c = field.inv(piv[col])
        if c != field.one:
            piv = vec_scale(field, piv, c)
        for idx in remaining:
            row = work[idx]
            x = row.get(col)
            if x is not None:
                vec_add_scaled(field, row, piv, field.neg(x))
        for row in placed:
            x = row.get(col)
            if x is not None:
                vec_add_scaled(field, row, piv, field.neg(x))
        placed.append(piv)
        pivots.append((len(placed) - 1, col))
    reduced_rows = placed + [dict() for _ in range(m.nrows - len(placed))]
    reduced = SparseMatrix(field, m.nrows, m.ncols, reduced_rows)
    return reduced, pivots, len(pivots)


def kernel_basis(m: SparseMatrix) -> List[Vec]:
    """Canonical basis of the right null space of ``m``.

    In the form induced by ``row_reduce``: for each free column, in
    increasing order, the basis vector has that free variable set to 1 and
    pivot variables solved by back substitution.
    """
    field = m.field
    reduced, pivots, _ = row_reduce(m)
    pivot_cols = {c for _, c in pivots}
    basis: List[Vec] = []
    for fc in range(m.ncols):
        if fc in pivot_cols:
            continue
        v: Vec = {fc: field.one}
        for pr, pc in pivots:
            x = reduced.rows[pr].get(fc)
            if x is not None:
                v[pc] = field.neg(x)
        basis.append(v)
    return basis


def rank(m: SparseMatrix) -> int:
    return row_reduce(m)[2]


class EchelonSpan:
    """A growing subspace held in reduced row echelon form.

    Rows are normalized with leading coefficient 1, fully reduced against
    each other, and indexed by pivot column.  The stored basis is the
    canonical RREF basis of the span, so the state after any insertion
    sequence depends only on the subspace spanned.
    """

    __slots__ = ("field", "rows_by_pivot")

    def __init__(self, field):
        self.field = field
        self.rows_by_pivot: Dict[int, Vec] = {}

    @property
    def dim(self) -> int:
        return len(self.rows_by_pivot)

    def reduce(self, v: Vec) -> Vec:
        """Residual of ``v`` modulo the span (a fresh dict).

        Basis rows are in RREF, so subtracting the row with pivot ``c`` only
        introduces entries at non-pivot columns; one increasing sweep over
        the original support of ``v`` therefore clears every pivot column.
        """
        field = self.field
        out = dict(v)
        if not self.rows_by_pivot:
            return out
        for c in sorted(v):
            x = out.get(c)
            if x is None:
                continue
            row = self.rows_by_pivot.get(c)
            if row is not None:
                vec_add_scaled(field, out, row, field.neg(x))
        return out

    def insert(self, v: Vec) -> Optional[Vec]:
        """Add ``v`` to the span.

        Returns a snapshot of the new normalized basis row if the span grew,
        else None.  Existing rows are updated so the basis stays in RREF.
        """
        field = self.field
        v = self.reduce(v)
        if not v:
            return None
        c = min(v)
        v = vec_scale(field, v, field.inv(v[c]))
        for row in self.rows_by_pivot.values():
            x = row.get(c)
            if x is not None:
                vec_add_scaled(field, row, v, field.neg(x))
        self.rows_by_pivot[c] = v
        return dict(v)

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def basis_rows(self) -> List[Vec]:
        return [dict(self.rows_by_pivot[c]) for c in sorted(self.rows_by_pivot)]

    def pivot_columns(self) -> List[int]:
        return sorted(self.rows_by_pivot)

    def nonpivot_columns(self, ncols: int) -> List[int]:
        piv = self.rows_by_pivot
        return [c for c in range(ncols) if c not in piv]
