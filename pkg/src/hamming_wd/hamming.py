"""The q-ary Hamming code H(m, q): parameters and matrices."""

from dataclasses import dataclass
from itertools import product

from .errors import InvalidM, RankDeficient, TooLarge
from .gf import Field, make_field, prime_power

MAX_MATERIALIZED_LENGTH = 2**20


@dataclass(frozen=True)
class CodeParams:
    q: int
    m: int
    n: int
    k: int
    d: int = 3

    @property
    def size(self):
        """Number of codewords, q**k."""
        return self.q**self.k

    def __str__(self):
        return f"H({self.m},{self.q}) [{self.n},{self.k},{self.d}]"


def code_params(q, m):
    prime_power(q)
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise InvalidM(m)
    n, rem = divmod(q**m - 1, q - 1)
    assert rem == 0
    return CodeParams(q=q, m=m, n=n, k=n - m)


@dataclass(frozen=True)
class Matrix:
    field: Field
    entries: tuple  # row-major tuple of row tuples

    @classmethod
    def from_rows(cls, field, rows):
        rows = tuple(tuple(int(a) for a in row) for row in rows)
        for row in rows:
            if len(row) != len(rows[0]):
                raise ValueError("ragged matrix")
            for a in row:
                if not 0 <= a < field.q:
                    raise ValueError(f"{a} is not an element of {field}")
        return cls(field, rows)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        return Matrix(self.field, tuple(zip(*self.entries)))

    def __matmul__(self, other):
        F = self.field
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for row in self.entries:
            new = []
            for j in range(other.cols):
                acc = 0
                for a, b_row in zip(row, other.entries):
                    acc = F.add(acc, F.mul(a, b_row[j]))
                new.append(acc)
            out.append(tuple(new))
        return Matrix(F, tuple(out))

    def is_zero(self):
        return all(a == 0 for row in self.entries for a in row)


def projective_points(F, m):
    """Normalized representatives of the 1-dimensional subspaces of F^m.

    A vector is normalized when its first nonzero coordinate is 1. Vectors are
    listed lexicographically in the field's element order.
    """
    if m < 2:
        raise InvalidM(m)
    points = []
    for lead in range(m):
        for tail in product(F.elements(), repeat=m - lead - 1):
            points.append((0,) * lead + (1,) + tail)
    points.sort()
    return points


def parity_check_matrix(params, field=None):
    if params.n > MAX_MATERIALIZED_LENGTH:
        raise TooLarge("parity-check matrix length", params.n, MAX_MATERIALIZED_LENGTH)
    F = field or make_field(params.q)
    cols = projective_points(F, params.m)
    assert len(cols) == params.n
    return Matrix(F, tuple(zip(*cols)))


def rref(A):
    """Reduced row echelon form over the matrix's field.

    Returns (R, pivots); pivots are chosen as the leftmost nonzero column.
    """
    F = A.field
    rows = [list(r) for r in A.entries]
    pivots = []
    r = 0
    for c in range(A.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return Matrix(F, tuple(tuple(row) for row in rows)), pivots


def null_space(A):
    """Basis (as matrix rows) of {v : A v^T = 0}."""
    F = A.field
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * A.cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R[i, f])
        basis.append(tuple(v))
    return Matrix(F, tuple(basis))


def generator_matrix(H):
    _, pivots = rref(H)
    if len(pivots) != H.rows:
        raise RankDeficient(f"parity-check matrix has rank {len(pivots)} < {H.rows}")
    G = null_space(H)
    assert (G @ H.transpose()).is_zero()
    return G


def scale_columns(H, scalars):
    """Multiply column j of H by the nonzero field element scalars[j]."""
    F = H.field
    if len(scalars) != H.cols or any(s == 0 for s in scalars):
        raise ValueError("need one nonzero scalar per column")
    return Matrix(F, tuple(tuple(F.mul(a, s) for a, s in zip(row, scalars)) for row in H.entries))
