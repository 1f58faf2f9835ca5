"""Exact dense linear algebra over the rationals and prime fields.

Every structure map in the package is a :class:`Matrix` over one
:class:`Field`.  Tensor products of based spaces use the lexicographic
mixed-radix convention with the last factor varying fastest, so
``e_i (x) e_j`` sits at flat index ``i * dim2 + j``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _rational = Fraction


class FieldMismatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotInvertible(ArithmeticError):
    """Raised by :func:`inverse` for a singular square matrix."""

    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix of size {size} is singular (rank {rank})")
        self.rank = rank
        self.size = size


# ---------------------------------------------------------------------------
# fields


class Field:
    name: str
    characteristic: int

    def __call__(self, value):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self):
        return f"<field {self.name}>"


class RationalField(Field):
    name = "rational"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return _rational(value.numerator, value.denominator)
        if isinstance(value, FpElement):
            raise FieldMismatch("cannot coerce a prime-field residue into Q")
        return _rational(value)

    def parse(self, text: str):
        text = text.strip()
        try:
            return _rational(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {text!r}") from exc

    def format(self, x) -> str:
        x = _rational(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


QQ = RationalField()


class FpElement:
    """Residue class modulo a prime; subclassed once per modulus."""

    __slots__ = ("v",)
    p = 0

    def __init__(self, v: int):
        self.v = v % self.p

    def _coerce(self, other):
        if type(other) is type(self):
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, FpElement):
            raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(o - self.v)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(self.v * o)

    __rmul__ = __mul__

    def __neg__(self):
        return type(self)(-self.v)

    def __pos__(self):
        return self

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return type(self)(pow(self.v, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * type(self)(o).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return type(self)(o) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return type(self)(pow(self.v, n, self.p))

    def __eq__(self, other):
        if type(other) is type(self):
            return self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    __str__ = lambda self: str(self.v)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"gf {p}"
        self.element = type(f"GF{p}", (FpElement,), {"__slots__": (), "p": p})

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, self.element):
            return value
        if isinstance(value, FpElement):
            raise FieldMismatch(f"GF({value.p}) element used in GF({self.p})")
        if isinstance(value, int):
            return self.element(value)
        # rationals reduce through their denominator
        num, den = int(value.numerator), int(value.denominator)
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in GF({self.p})")
        return self.element(num * pow(den, -1, self.p))

    def parse(self, text: str):
        text = text.strip()
        try:
            return self(Fraction(text))
        except ValueError as exc:
            raise ValueError(f"not an element of GF({self.p}): {text!r}") from exc

    def format(self, x) -> str:
        return str(self(x).v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"rational"``, ``"gf 7"`` or ``"gf7"``."""
    s = spec.strip().lower()
    if s in ("rational", "q", "qq"):
        return QQ
    if s.startswith("gf"):
        rest = s[2:].strip()
        if rest.isdigit():
            return GF(int(rest))
    raise ValueError(f"unknown field spec {spec!r} (expected 'rational' or 'gf <p>')")


# ---------------------------------------------------------------------------
# tensor index convention


class TensorIndex:
    """Mixed-radix flat indexing with the last factor fastest."""

    __slots__ = ("dims", "size", "_strides")

    def __init__(self, dims: Sequence[int]):
        self.dims = tuple(dims)
        strides = []
        s = 1
        for d in reversed(self.dims):
            strides.append(s)
            s *= d
        self._strides = tuple(reversed(strides))
        self.size = s

    def flat(self, *idx: int) -> int:
        if len(idx) != len(self.dims):
            raise DimensionMismatch(f"expected {len(self.dims)} indices, got {len(idx)}")
        return sum(i * s for i, s in zip(idx, self._strides))

    def split(self, flat: int) -> tuple[int, ...]:
        out = []
        for s in self._strides:
            q, flat = divmod(flat, s)
            out.append(q)
        return tuple(out)

    def __iter__(self):
        for f in range(self.size):
            yield self.split(f)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense matrix over a field.  Treated as immutable."""

    __slots__ = ("field", "rows", "cols", "_data", "_cols_sparse")

    def __init__(self, field: Field, rows: int, cols: int, data: list[list]):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data
        self._cols_sparse = None

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        data = [[field(x) for x in r] for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise DimensionMismatch("ragged rows")
        return cls(field, len(data), cols, data)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        one = field.one
        for i in range(n):
            m._data[i][i] = one
        return m

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: Iterable[Mapping[int, object]]) -> "Matrix":
        """Assemble from sparse columns ``{row: value}``."""
        cols = list(columns)
        m = cls.zeros(field, rows, len(cols))
        data = m._data
        for j, col in enumerate(cols):
            for i, v in col.items():
                if v:
                    data[i][j] = field(v) if not _same_field(field, v) else v
        return m

    @classmethod
    def from_function(cls, field: Field, rows: int, cols: int,
                      column: Callable[[int], Mapping[int, object]]) -> "Matrix":
        return cls.from_columns(field, rows, (column(j) for j in range(cols)))

    @classmethod
    def from_sparse(cls, field: Field, rows: int, cols: int,
                    entries: Iterable[tuple[int, int, object]]) -> "Matrix":
        m = cls.zeros(field, rows, cols)
        for i, j, v in entries:
            m._data[i][j] = m._data[i][j] + field(v)
        return m

    # access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> list:
        return list(self._data[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self._data]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self._data]

    def column_sparse(self, j: int) -> dict[int, object]:
        return self.sparse_columns()[j]

    def sparse_columns(self) -> list[dict[int, object]]:
        if self._cols_sparse is None:
            cols = [dict() for _ in range(self.cols)]
            for i, r in enumerate(self._data):
                for j, v in enumerate(r):
                    if v:
                        cols[j][i] = v
            self._cols_sparse = cols
        return self._cols_sparse

    def nonzero_entries(self):
        for i, r in enumerate(self._data):
            for j, v in enumerate(r):
                if v:
                    yield i, j, v

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        """Image of a sparse vector."""
        cols = self.sparse_columns()
        out: dict[int, object] = {}
        for j, c in vec.items():
            for i, v in cols[j].items():
                out[i] = out.get(i, 0) + c * v
        return {i: v for i, v in out.items() if v}

    # arithmetic -----------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.field, self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [[-a for a in r] for r in self._data])

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, [[c * a for a in r] for r in self._data])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows,
                      [list(c) for c in zip(*self._data)] if self.rows else
                      [[] for _ in range(self.cols)])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self._data)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._data)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i, r in enumerate(self._data):
            for j, a in enumerate(r):
                if a != (1 if i == j else 0):
                    return False
        return True

    def first_difference(self, other: "Matrix") -> tuple[int, int] | None:
        """First (row, col) where two equal-shape matrices differ."""
        for i, (r, s) in enumerate(zip(self._data, other._data)):
            for j, (a, b) in enumerate(zip(r, s)):
                if a != b:
                    return i, j
        return None

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, self.rows, len(idx), [[r[j] for j in idx] for r in self._data])

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, len(idx), self.cols, [list(self._data[i]) for i in idx])

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.rows != other.rows:
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [r + s for r, s in zip(self._data, other._data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.cols:
            raise DimensionMismatch("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols,
                      [list(r) for r in self._data] + [list(r) for r in other._data])

    def __repr__(self):
        f = self.field.format
        body = "; ".join(" ".join(f(x) for x in r) for r in self._data[:8])
        more = " ..." if self.rows > 8 else ""
        return f"Matrix<{self.field.name}>({self.rows}x{self.cols}: [{body}{more}])"


def _same_field(field: Field, v) -> bool:
    if isinstance(field, PrimeField):
        return isinstance(v, field.element)
    return type(v) is type(_rational(0))


def vstack_all(field: Field, cols: int, mats: Sequence[Matrix]) -> Matrix:
    data = []
    for m in mats:
        if m.field != field:
            raise FieldMismatch("vstack field mismatch")
        if m.cols != cols:
            raise DimensionMismatch("vstack column mismatch")
        data.extend(list(r) for r in m._data)
    return Matrix(field, len(data), cols, data)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    zero = a.field.zero
    bdata = b._data
    brows_sparse = [[(j, v) for j, v in enumerate(r) if v] for r in bdata]
    out = []
    for r in a._data:
        acc = [zero] * b.cols
        for k, x in enumerate(r):
            if x:
                for j, v in brows_sparse[k]:
                    acc[j] = acc[j] + x * v
        out.append(acc)
    return Matrix(a.field, a.rows, b.cols, out)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: ``kron(a, b)(v (x) w) = a(v) (x) b(w)``."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    zero = a.field.zero
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    data = [[zero] * cols for _ in range(rows)]
    for i, ar in enumerate(a._data):
        for j, x in enumerate(ar):
            if not x:
                continue
            for k, br in enumerate(b._data):
                row = data[i * b.rows + k]
                off = j * b.cols
                for l, y in enumerate(br):
                    if y:
                        row[off + l] = x * y
    return Matrix(a.field, rows, cols, data)


def kron_all(*ms: Matrix) -> Matrix:
    out = ms[0]
    for m in ms[1:]:
        out = kron(out, m)
    return out


# ---------------------------------------------------------------------------
# elimination


def _rref_sparse(rows: list[dict[int, object]], ncols: int):
    """Gauss-Jordan on sparse rows.  Returns (reduced nonzero rows, pivots)."""
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    reduced: list[dict[int, object]] = []
    # column-by-column pivoting keeps the output canonical
    by_col: dict[int, list[int]] = {}
    for idx, r in enumerate(rows):
        by_col.setdefault(min(r), []).append(idx)
    alive = [True] * len(rows)
    for c in range(ncols):
        cand = [i for i in by_col.pop(c, []) if alive[i] and rows[i] and min(rows[i]) == c]
        if not cand:
            continue
        p = cand[0]
        alive[p] = False
        prow = rows[p]
        inv = 1 / prow[c]
        prow = {k: v * inv for k, v in prow.items()}
        for i in cand[1:]:
            r = rows[i]
            f = r[c]
            for k, v in prow.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            if r:
                by_col.setdefault(min(r), []).append(i)
            else:
                alive[i] = False
        # back-substitute into rows already reduced
        for r in reduced:
            f = r.get(c)
            if f:
                for k, v in prow.items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        reduced.append(prow)
        pivots.append(c)
    return reduced, pivots


def _sparse_rows(m: Matrix) -> list[dict[int, object]]:
    return [{j: v for j, v in enumerate(r) if v} for r in m._data]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    red, piv = _rref_sparse(_sparse_rows(a), a.cols)
    zero = a.field.zero
    data = []
    for r in red:
        row = [zero] * a.cols
        for k, v in r.items():
            row[k] = v
        data.append(row)
    return Matrix(a.field, len(data), a.cols, data), piv


def rank(a: Matrix) -> int:
    return len(_rref_sparse(_sparse_rows(a), a.cols)[1])


def row_space(a: Matrix) -> Matrix:
    """Canonical basis (rows, reduced echelon) of the row space."""
    return rref(a)[0]


def kernel_basis(a: Matrix) -> Matrix:
    """Basis of ``{v : a v = 0}`` as columns in reduced column-echelon form."""
    red, piv = _rref_sparse(_sparse_rows(a), a.cols)
    pivset = set(piv)
    free = [c for c in range(a.cols) if c not in pivset]
    field = a.field
    one = field.one
    vecs = []
    for f in free:
        v = {f: one}
        for r, p in zip(red, piv):
            x = r.get(f)
            if x:
                v[p] = -x
        vecs.append(v)
    # canonicalize: reduced echelon basis of the span, returned as columns
    basis, _ = _rref_sparse(vecs, a.cols)
    return Matrix.from_columns(field, a.cols, basis)


def inverse(a: Matrix) -> Matrix:
    """Exact inverse; raises :class:`NotInvertible` carrying the rank."""
    if a.rows != a.cols:
        raise DimensionMismatch(f"non-square matrix {a.shape}")
    n = a.rows
    one = a.field.one
    aug = []
    for i, r in enumerate(a._data):
        row = {j: v for j, v in enumerate(r) if v}
        row[n + i] = one
        aug.append(row)
    red, piv = _rref_sparse(aug, 2 * n)
    rk = sum(1 for p in piv if p < n)
    if rk < n:
        raise NotInvertible(rk, n)
    zero = a.field.zero
    data = []
    for r in red:
        row = [zero] * n
        for k, v in r.items():
            if k >= n:
                row[k - n] = v
        data.append(row)
    return Matrix(a.field, n, n, data)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """A particular solution ``x`` of ``a x = b`` (free variables zero), or None."""
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row mismatch")
    n = a.cols
    aug = []
    for r, s in zip(a._data, b._data):
        row = {j: v for j, v in enumerate(r) if v}
        for j, v in enumerate(s):
            if v:
                row[n + j] = v
        aug.append(row)
    red, piv = _rref_sparse(aug, n + b.cols)
    if any(p >= n for p in piv):
        return None
    x = Matrix.zeros(a.field, n, b.cols)
    for r, p in zip(red, piv):
        for k, v in r.items():
            if k >= n:
                x._data[p][k - n] = v
    return x


def column_space(a: Matrix) -> Matrix:
    """Canonical basis (columns, reduced column-echelon) of the column space."""
    return row_space(a.transpose()).transpose() if a.cols else Matrix.zeros(a.field, a.rows, 0)


def same_subspace(a: Matrix, b: Matrix) -> bool:
    """Equality of the column spans of ``a`` and ``b``."""
    return column_space(a) == column_space(b)


def coordinates(basis: Matrix, vectors: Matrix) -> Matrix:
    """Coordinates of the columns of ``vectors`` in a column basis (must lie in the span)."""
    x = solve(basis, vectors)
    if x is None:
        raise ValueError("vectors are not in the span of the basis")
    return x


def restrict(op: Matrix, basis: Matrix, target_basis: Matrix | None = None) -> Matrix:
    """Matrix of ``op`` restricted to span(basis), in coordinates of ``target_basis``."""
    if target_basis is None:
        target_basis = basis
    return coordinates(target_basis, op @ basis)


def direct_sum_basis(field: Field, n: int) -> Matrix:
    return Matrix.identity(field, n)


class Subspace:
    """A subspace of k^n held by a reduced column-echelon basis.

    Coordinates of a member vector are read off at the pivot rows.
    """

    def __init__(self, basis: Matrix):
        self.basis = basis
        self.field = basis.field
        self.ambient = basis.rows
        self.dim = basis.cols
        self.columns = [dict(c) for c in basis.sparse_columns()]
        self.pivots = [min(c) for c in self.columns]
        for k, (c, p) in enumerate(zip(self.columns, self.pivots)):
            if c[p] != 1 or any(o.get(p) for j, o in enumerate(self.columns) if j != k):
                raise ValueError("basis is not in reduced column-echelon form")

    @classmethod
    def kernel(cls, a: Matrix) -> "Subspace":
        return cls(kernel_basis(a))

    @classmethod
    def span(cls, a: Matrix) -> "Subspace":
        return cls(column_space(a))

    def vector(self, k: int) -> dict:
        return self.columns[k]

    def coords(self, v: Mapping[int, object]) -> dict[int, object] | None:
        """Coordinates of ``v``, or None when ``v`` is not in the subspace."""
        out = {k: v[p] for k, p in enumerate(self.pivots) if v.get(p)}
        acc: dict = {}
        for k, c in out.items():
            for i, x in self.columns[k].items():
                y = acc.get(i, 0) + c * x
                if y:
                    acc[i] = y
                else:
                    acc.pop(i, None)
        clean = {i: x for i, x in v.items() if x}
        return out if acc == clean else None

    def contains(self, v: Mapping[int, object]) -> bool:
        return self.coords(v) is not None

    def embed(self, coords: Mapping[int, object]) -> dict:
        acc: dict = {}
        for k, c in coords.items():
            for i, x in self.columns[k].items():
                y = acc.get(i, 0) + c * x
                if y:
                    acc[i] = y
                else:
                    acc.pop(i, None)
        return acc

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __repr__(self):
        return f"<subspace dim {self.dim} of {self.ambient}>"
