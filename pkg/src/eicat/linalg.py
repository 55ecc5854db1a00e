"""Exact dense linear algebra over Q and the prime fields F_p.

Scalars are `fractions.Fraction` in characteristic 0 and plain ints in
[0, p) in characteristic p.  Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """A field given by its characteristic: 0 means Q, p means F_p."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic must be 0 or prime, got {self.characteristic}")

    @property
    def zero(self):
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self):
        return 1 if self.characteristic else Fraction(1)

    def of(self, n):
        """Canonicalize an int or Fraction into this field."""
        p = self.characteristic
        if p:
            if isinstance(n, Fraction):
                if n.denominator % p == 0:
                    raise ZeroDivisionError(f"denominator {n.denominator} not invertible mod {p}")
                return (n.numerator * pow(n.denominator, -1, p)) % p
            return n % p
        return Fraction(n)

    def add(self, a, b):
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a, b):
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a, b):
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg(self, a):
        p = self.characteristic
        return (-a) % p if p else -a

    def inv(self, a):
        p = self.characteristic
        if p:
            return pow(a, -1, p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def invertible(self, n: int) -> bool:
        """Whether the integer n is invertible in this field."""
        p = self.characteristic
        return n % p != 0 if p else n != 0


QQ = Field(0)


class Matrix:
    """Dense matrix over a Field; row-major list-of-lists storage."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data):
        self.field = field
        self.data = [[field.of(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, field, rows, cols):
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        z = field.zero
        m.data = [[z] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        nr = len(columns[0])
        if nr == 0:
            return cls.zeros(field, 0, len(columns))
        return cls(field, [[col[i] for col in columns] for i in range(nr)])

    def copy(self):
        m = Matrix.__new__(Matrix)
        m.field = self.field
        m.rows = self.rows
        m.cols = self.cols
        m.data = [row[:] for row in self.data]
        return m

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix(self.field, [[self.data[i][j] for i in range(self.rows)]
                                   for j in range(self.cols)])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.data))))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data})"

    def __add__(self, other):
        f = self.field
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        f = self.field
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)])

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return Matrix(f, [[f.mul(c, x) for x in row] for row in self.data])

    def __mul__(self, other):
        f = self.field
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        p = f.characteristic
        out = Matrix.zeros(f, self.rows, other.cols)
        bdata = other.data
        for i in range(self.rows):
            arow = self.data[i]
            orow = out.data[i]
            for t in range(self.cols):
                a = arow[t]
                if a == 0:
                    continue
                brow = bdata[t]
                if p:
                    for j in range(other.cols):
                        orow[j] = (orow[j] + a * brow[j]) % p
                else:
                    for j in range(other.cols):
                        orow[j] = orow[j] + a * brow[j]
        return out

    def mul_vec(self, v):
        f = self.field
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        out = []
        for row in self.data:
            s = f.zero
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def is_zero(self):
        return all(x == 0 for row in self.data for x in row)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("col mismatch")
        return Matrix(self.field, self.data + other.data)

    def rref(self):
        """Reduced row echelon form.  Returns (matrix, rank, pivot_columns)."""
        f = self.field
        m = self.copy()
        data = m.data
        pivots = []
        r = 0
        for c in range(m.cols):
            piv = None
            for i in range(r, m.rows):
                if data[i][c] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            data[r], data[piv] = data[piv], data[r]
            inv = f.inv(data[r][c])
            if inv != 1:
                data[r] = [f.mul(inv, x) for x in data[r]]
            for i in range(m.rows):
                if i != r and data[i][c] != 0:
                    fac = data[i][c]
                    row_r = data[r]
                    data[i] = [f.sub(x, f.mul(fac, y)) for x, y in zip(data[i], row_r)]
            pivots.append(c)
            r += 1
            if r == m.rows:
                break
        return m, r, pivots

    def rank(self):
        return self.rref()[1]

    def kernel_basis(self):
        """Basis (list of column vectors) of the right null space."""
        f = self.field
        R, rank, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for c in free:
            v = [f.zero] * self.cols
            v[c] = f.one
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.data[r][c])
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution x of self * x = b, or None if inconsistent."""
        f = self.field
        if len(b) != self.rows:
            raise ValueError("length mismatch")
        aug = Matrix(f, [row + [bi] for row, bi in zip(self.data, b)]) \
            if self.rows else Matrix.zeros(f, 0, self.cols + 1)
        R, rank, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [f.zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        return x


class Subspace:
    """Subspace of k^n held as a reduced row echelon basis."""

    def __init__(self, field: Field, ambient_dim: int, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        if vectors:
            R, rank, pivots = Matrix(field, list(vectors)).rref()
            self.basis = R.data[:rank]
            self.pivots = pivots
        else:
            self.basis = []
            self.pivots = []

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return self.coords(v) is not None

    def coords(self, v):
        """Coordinates of v in the rref basis, or None if v is outside."""
        f = self.field
        c = [f.of(x) for x in v]
        out = []
        for row, pc in zip(self.basis, self.pivots):
            a = c[pc]
            out.append(a)
            if a != 0:
                c = [f.sub(x, f.mul(a, y)) for x, y in zip(c, row)]
        if any(x != 0 for x in c):
            return None
        return out

    def from_coords(self, coords):
        f = self.field
        v = [f.zero] * self.ambient_dim
        for a, row in zip(coords, self.basis):
            if a != 0:
                v = [f.add(x, f.mul(a, y)) for x, y in zip(v, row)]
        return v

    def complement_pivots(self):
        """Standard coordinates not used as pivots; their e_i span a complement."""
        pivset = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in pivset]


class QuotientSpace:
    """k^n modulo the span of relation vectors, with explicit projection and
    a section picking standard basis vectors as class representatives."""

    def __init__(self, field: Field, ambient_dim: int, relations=()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.sub = Subspace(field, ambient_dim, relations)
        self.reps = self.sub.complement_pivots()
        self.dim = len(self.reps)

    def project(self, v):
        """Coordinates of the class of v in the representative basis."""
        f = self.field
        c = [f.of(x) for x in v]
        for row, pc in zip(self.sub.basis, self.sub.pivots):
            a = c[pc]
            if a != 0:
                c = [f.sub(x, f.mul(a, y)) for x, y in zip(c, row)]
        return [c[i] for i in self.reps]

    def lift(self, coords):
        """The representative of a class: a combination of the chosen e_i."""
        f = self.field
        v = [f.zero] * self.ambient_dim
        for a, i in zip(coords, self.reps):
            v[i] = a
        return v
