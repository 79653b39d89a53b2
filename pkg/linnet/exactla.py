"""
Exact linear algebra over the rationals.

Matrices keep their entries as sympy QQ elements and hand the heavy lifting
(rref, rank, determinant, inverse, products) to DomainMatrix. A Subspace is
stored as the nonzero rows of its reduced row echelon form, so two equal
subspaces always carry identical bases.
"""

import numbers

from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix

from linnet.util import NetError, NotASubnet

# set up logging
import logging
logger = logging.getLogger(__name__)

# returned by proportional_nonzero when both matrices vanish
BOTH_ZERO = 'both zero'


def rational(x):
    """
    Convert an int, a Fraction, a "p/q" string or a QQ element to a QQ element.
    Floats are refused: nothing here is ever rounded.
    """
    if QQ.of_type(x):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise NetError("Not an exact rational: {!r}".format(x))
    if isinstance(x, int):
        return QQ(x)
    if isinstance(x, (str, numbers.Rational)):
        try:
            x = Rational(x.strip() if isinstance(x, str) else x)
        except (TypeError, ValueError, ZeroDivisionError):
            raise NetError("Invalid rational '{}'".format(x))
        if not x.is_Rational:
            raise NetError("Invalid rational '{}'".format(x))
    try:
        return QQ.from_sympy(x)
    except Exception:
        raise NetError("Cannot read {!r} as a rational".format(x))

def rational_to_json(q):
    """ integers stay integers, everything else becomes a "p/q" string """
    num, den = int(q.numerator), int(q.denominator)
    if den == 1:
        return num
    return "{}/{}".format(num, den)

def rational_str(q):
    return str(rational_to_json(q))

def vector(values):
    return tuple(rational(x) for x in values)

def unit_vector(n, i):
    return tuple(QQ.one if j == i else QQ.zero for j in range(n))

def vector_str(v):
    return "(" + ",".join(rational_str(x) for x in v) + ")"


class RMatrix(object):
    """
    An immutable rows x cols matrix of rationals.
    0-row and 0-column matrices are allowed; they are the maps to and from the zero space.
    """

    def __init__(self, rows, cols, entries=None, domain_matrix=None):
        if rows < 0 or cols < 0:
            raise NetError("Matrix shape {}x{} is negative".format(rows, cols))
        self.rows = rows
        self.cols = cols
        # entries and the DomainMatrix are each filled in on first use
        self._dm = domain_matrix
        self._entries = None
        if domain_matrix is not None:
            pass
        elif entries is None:
            self._entries = tuple(tuple(QQ.zero for _ in range(cols)) for _ in range(rows))
        else:
            entries = [list(r) for r in entries]
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise NetError("Entries do not form a {}x{} matrix".format(rows, cols))
            self._entries = tuple(tuple(rational(x) for x in r) for r in entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def from_rows(cls, vectors, cols):
        vectors = list(vectors)
        return cls(len(vectors), cols, vectors)

    @classmethod
    def from_columns(cls, vectors, rows):
        return cls.from_rows(vectors, rows).transpose()

    @classmethod
    def vstack(cls, matrices, cols):
        rows = []
        for m in matrices:
            if m.cols != cols:
                raise NetError("Cannot stack a matrix with {} columns onto {}".format(m.cols, cols))
            rows.extend(m.entries)
        return cls(len(rows), cols, rows)

    @classmethod
    def block_diagonal(cls, blocks):
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        entries = []
        offset = 0
        for b in blocks:
            for r in b.entries:
                entries.append((QQ.zero,) * offset + r + (QQ.zero,) * (cols - offset - b.cols))
            offset += b.cols
        return cls(rows, cols, entries)

    @classmethod
    def _from_domain(cls, dm):
        rows, cols = dm.shape
        return cls(rows, cols, domain_matrix=dm)

    def _domain(self):
        if self._dm is None:
            self._dm = DomainMatrix([list(r) for r in self.entries], (self.rows, self.cols), QQ)
        return self._dm

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        if self._entries is None:
            m = self._dm.to_Matrix()
            self._entries = tuple(tuple(QQ.from_sympy(m[i, j]) for j in range(self.cols))
                                  for i in range(self.rows))
        return self._entries

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def is_empty(self):
        return self.rows == 0 or self.cols == 0

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def transpose(self):
        return RMatrix(self.cols, self.rows, [self.column(j) for j in range(self.cols)])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise NetError("Cannot compose {}x{} with {}x{}".format(self.rows, self.cols, other.rows, other.cols))
        if self.is_empty() or other.is_empty():
            return RMatrix.zeros(self.rows, other.cols)
        return RMatrix._from_domain(self._domain().matmul(other._domain()))

    def scale(self, c):
        c = rational(c)
        return RMatrix(self.rows, self.cols, [[c * x for x in r] for r in self.entries])

    def apply(self, v):
        """ the image of a column vector """
        v = vector(v)
        if len(v) != self.cols:
            raise NetError("Vector of length {} for a matrix with {} columns".format(len(v), self.cols))
        return tuple(sum((a * b for a, b in zip(r, v)), QQ.zero) for r in self.entries)

    def rref(self):
        """ (reduced row echelon form, pivot columns) """
        if self.is_empty():
            return self, ()
        dm, pivots = self._domain().rref()
        return RMatrix._from_domain(dm), tuple(pivots)

    def rank(self):
        if self.is_empty():
            return 0
        return self._domain().rank()

    def det(self):
        if self.rows != self.cols:
            raise NetError("Determinant of a non-square {}x{} matrix".format(self.rows, self.cols))
        if self.rows == 0:
            return QQ.one
        return self._domain().det()

    def inverse(self):
        if self.det() == 0:
            raise NetError("Matrix {} is singular".format(self))
        if self.rows == 0:
            return self
        return RMatrix._from_domain(self._domain().inv())

    def is_injective(self):
        return self.rank() == self.cols

    def is_surjective(self):
        return self.rank() == self.rows

    def to_json(self):
        return [[rational_to_json(x) for x in r] for r in self.entries]

    def __eq__(self, other):
        try:
            return self.shape == other.shape and self.entries == other.entries
        except AttributeError:
            return False
    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(rational_str(x) for x in r) + "]" for r in self.entries) + "]"
    def __repr__(self):
        return 'RMatrix({}x{}, {})'.format(self.rows, self.cols, str(self))


class Subspace(object):
    """
    A subspace of QQ^ambient_dim, held as the nonzero rows of its reduced row
    echelon form. pivots[i] is the leading column of vectors[i].
    """

    def __init__(self, ambient_dim, vectors=()):
        vectors = [vector(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vectors):
            raise NetError("Vectors do not live in dimension {}".format(ambient_dim))
        self.ambient_dim = ambient_dim
        if vectors and ambient_dim:
            reduced, pivots = RMatrix.from_rows(vectors, ambient_dim).rref()
            self.vectors = reduced.entries[:len(pivots)]
            self.pivots = pivots
        else:
            self.vectors = ()
            self.pivots = ()

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, [unit_vector(n, i) for i in range(n)])

    @property
    def dim(self):
        return len(self.vectors)

    @property
    def basis(self):
        """ the basis vectors as the rows of a matrix """
        return RMatrix(self.dim, self.ambient_dim, self.vectors)

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient_dim

    def __contains__(self, v):
        v = vector(v)
        if len(v) != self.ambient_dim:
            raise NetError("Vector of length {} tested against dimension {}".format(len(v), self.ambient_dim))
        rest = list(v)
        for row, p in zip(self.vectors, self.pivots):
            c = rest[p]
            if c:
                rest = [a - c * b for a, b in zip(rest, row)]
        return not any(rest)

    def coordinates(self, v):
        """ coordinates of a member vector in the echelon basis """
        if v not in self:
            raise NetError("Vector {} is not in {}".format(vector_str(v), self))
        return tuple(rational(v[p]) for p in self.pivots)

    def __add__(self, other):
        return add(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __eq__(self, other):
        try:
            return self.ambient_dim == other.ambient_dim and self.vectors == other.vectors
        except AttributeError:
            return False
    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def to_json(self):
        return [[rational_to_json(x) for x in v] for v in self.vectors]

    def __str__(self):
        if self.is_zero():
            return "0"
        return "span{" + ", ".join(vector_str(v) for v in self.vectors) + "}"
    def __repr__(self):
        return 'Subspace({}, {})'.format(self.ambient_dim, str(self))


def _same_ambient(subspaces):
    dims = set(s.ambient_dim for s in subspaces)
    if len(dims) > 1:
        raise NetError("Subspaces of different ambient dimensions {}".format(sorted(dims)))
    return dims.pop()


def kernel(M):
    if M.cols == 0:
        return Subspace.zero(0)
    if M.rows == 0:
        return Subspace.full(M.cols)
    reduced, pivots = M.rref()
    vectors = []
    for f in range(M.cols):
        if f in pivots:
            continue
        v = [QQ.zero] * M.cols
        v[f] = QQ.one
        for i, p in enumerate(pivots):
            v[p] = -reduced[i, f]
        vectors.append(v)
    return Subspace(M.cols, vectors)

def image(M):
    """ the column span """
    return Subspace(M.rows, [M.column(j) for j in range(M.cols)])

def annihilator(A):
    """ a matrix whose kernel is A """
    return RMatrix.from_rows(kernel(A.basis).vectors, A.ambient_dim)

def add(*subspaces):
    n = _same_ambient(subspaces)
    return Subspace(n, [v for s in subspaces for v in s.vectors])

def intersect(A, B):
    n = _same_ambient([A, B])
    if A.is_zero() or B.is_zero():
        return Subspace.zero(n)
    return kernel(RMatrix.vstack([annihilator(A), annihilator(B)], n))

def preimage(M, B):
    """ all x with Mx in B """
    if B.ambient_dim != M.rows:
        raise NetError("Preimage of a subspace of dimension {} under a map into {}".format(B.ambient_dim, M.rows))
    return kernel(annihilator(B) * M)

def contains(A, B):
    """ True iff B is a subspace of A """
    _same_ambient([A, B])
    return all(v in A for v in B.vectors)

def complement(A):
    """
    A complement spanned by unit vectors: the standard basis is scanned in
    ascending order and e_i is kept whenever it is not yet in the span.
    """
    n = A.ambient_dim
    chosen = []
    current = A
    for i in range(n):
        if current.is_full():
            break
        e = unit_vector(n, i)
        if e not in current:
            chosen.append(e)
            current = Subspace(n, current.vectors + (e,))
    return Subspace(n, chosen)

def complement_within(A, B):
    """ a complement of A inside B, extending A by B's echelon basis vectors in order """
    if not contains(B, A):
        raise NetError("{} is not contained in {}".format(A, B))
    chosen = []
    current = A
    for v in B.vectors:
        if v not in current:
            chosen.append(v)
            current = Subspace(A.ambient_dim, current.vectors + (v,))
    return Subspace(A.ambient_dim, chosen)

def projection(W, C):
    """
    The matrix sending y = sum(a_k c_k) + w (w in W, c_k the basis of C) to (a_k).
    C must be a complement of W.
    """
    n = _same_ambient([W, C])
    basis = RMatrix.from_rows(C.vectors + W.vectors, n)
    if basis.rows != n:
        raise NetError("{} is not a complement of {}".format(C, W))
    coords = basis.inverse().transpose()
    return RMatrix.from_rows(coords.entries[:C.dim], n)

def quotient_matrix(M, W_src, W_dst):
    """
    The map induced by M between the quotients, written in the unit-vector
    complement bases of W_src and W_dst.
    """
    if W_src.ambient_dim != M.cols or W_dst.ambient_dim != M.rows:
        raise NetError("Subspaces do not match a {}x{} matrix".format(M.rows, M.cols))
    for v in W_src.vectors:
        if M.apply(v) not in W_dst:
            raise NotASubnet("{} does not carry {} into {}".format(M, W_src, W_dst))
    P = projection(W_dst, complement(W_dst))
    return P * M * complement(W_src).basis.transpose()

def proportional_nonzero(A, B):
    """
    The nonzero c with A = cB, BOTH_ZERO if both vanish, None otherwise.
    """
    if A.shape != B.shape:
        raise NetError("Cannot compare {}x{} with {}x{}".format(A.rows, A.cols, B.rows, B.cols))
    a_zero, b_zero = A.is_zero(), B.is_zero()
    if a_zero and b_zero:
        return BOTH_ZERO
    if a_zero or b_zero:
        return None
    i, j = next((i, j) for i in range(B.rows) for j in range(B.cols) if B[i, j] != 0)
    c = A[i, j] / B[i, j]
    if c == 0:
        return None
    if all(A[r, s] == c * B[r, s] for r in range(A.rows) for s in range(A.cols)):
        return c
    return None
