"""Sparse matrices over LaurentPoly, with super tensor products.

Tensor basis vectors are flattened row-major: on V(x) (x) V(y) the vector
v_i (x) v_j has index ``4*i + j``.
"""

from sl21inv.ring import LaurentPoly, QuadExponent, Scalar

PARITY = (0, 1, 0, 1)


def tensor_parity(dims_parities):
    """Parity list of a tensor product basis given the factors' parity lists."""
    out = [0]
    for par in dims_parities:
        out = [(a + b) & 1 for a in out for b in par]
    return out


class Mat:
    """Immutable sparse matrix; ``e`` maps (row, col) to a nonzero LaurentPoly."""

    __slots__ = ("rows", "cols", "e")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        e = {}
        for (i, j), v in (entries or {}).items():
            if isinstance(v, int):
                v = LaurentPoly.const(v)
            if not v.is_zero:
                e[(i, j)] = v
        self.e = e

    @classmethod
    def identity(cls, n):
        one = LaurentPoly.one()
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def diag(cls, values):
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows):
        return cls(len(rows), len(rows[0]),
                   {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    def __getitem__(self, ij):
        return self.e.get(ij, LaurentPoly.zero())

    @property
    def is_zero(self):
        return not self.e

    def columns(self):
        """col -> list of (row, value)."""
        out = {}
        for (i, j), v in self.e.items():
            out.setdefault(j, []).append((i, v))
        return out

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row = {}
        for (k, j), v in other.e.items():
            by_row.setdefault(k, []).append((j, v))
        acc = {}
        for (i, k), a in self.e.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                prev = acc.get(key)
                acc[key] = a * b if prev is None else prev + a * b
        return Mat(self.rows, other.cols, acc)

    def __add__(self, other):
        self._same_shape(other)
        acc = dict(self.e)
        for k, v in other.e.items():
            acc[k] = acc[k] + v if k in acc else v
        return Mat(self.rows, self.cols, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Mat(self.rows, self.cols, {k: -v for k, v in self.e.items()})

    def scale(self, c):
        return Mat(self.rows, self.cols, {k: v * c for k, v in self.e.items()})

    def map(self, f):
        return Mat(self.rows, self.cols, {k: f(v) for k, v in self.e.items()})

    def transpose(self):
        return Mat(self.cols, self.rows, {(j, i): v for (i, j), v in self.e.items()})

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.e == other.e

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.e.items())))

    def _same_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def power(self, n):
        out = Mat.identity(self.rows)
        for _ in range(n):
            out = out @ self
        return out

    def kron(self, other, dom_parity=None, other_parity=0):
        """Super tensor product X (x) Y.

        (X (x) Y)(v_i (x) w_j) = (-1)**(|Y| |v_i|) X v_i (x) Y w_j, where
        ``dom_parity[i]`` is |v_i| and ``other_parity`` is |Y|.
        """
        if isinstance(other, PMat):
            return PMat.plain(self).kron(other, dom_parity, other_parity)
        out = {}
        for (k, i), x in self.e.items():
            sign = -1 if other_parity and dom_parity and dom_parity[i] else 1
            for (l, j), y in other.e.items():
                out[(k * other.rows + l, i * other.cols + j)] = (x * y) * sign
        return Mat(self.rows * other.rows, self.cols * other.cols, out)

    def to_rows(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, nnz={len(self.e)})"


class PMat:
    """Matrix of scalars sharing one quadratic prefactor: q**prefactor * mat."""

    __slots__ = ("prefactor", "mat")

    def __init__(self, prefactor, mat):
        self.prefactor = prefactor
        self.mat = mat

    @classmethod
    def plain(cls, mat):
        return cls(QuadExponent(), mat)

    @property
    def rows(self):
        return self.mat.rows

    @property
    def cols(self):
        return self.mat.cols

    def entry(self, i, j):
        return Scalar(self.prefactor, self.mat[i, j])

    def __matmul__(self, other):
        if isinstance(other, Mat):
            other = PMat.plain(other)
        return PMat(self.prefactor + other.prefactor, self.mat @ other.mat)

    def __rmatmul__(self, other):
        if isinstance(other, Mat):
            return PMat.plain(other) @ self
        return NotImplemented

    def kron(self, other, dom_parity=None, other_parity=0):
        if isinstance(other, Mat):
            other = PMat.plain(other)
        return PMat(self.prefactor + other.prefactor,
                    self.mat.kron(other.mat, dom_parity, other_parity))

    def __eq__(self, other):
        if not isinstance(other, PMat):
            return NotImplemented
        if self.mat.is_zero and other.mat.is_zero:
            return (self.rows, self.cols) == (other.rows, other.cols)
        return self.prefactor == other.prefactor and self.mat == other.mat

    def __hash__(self):
        return hash((self.prefactor, self.mat))

    def __repr__(self):
        return f"PMat(q^({self.prefactor}), {self.mat!r})"
