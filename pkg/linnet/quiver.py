"""
The canonical Z^n-quiver.

A vertex is a normalized twist tuple (l_0, ..., l_n): nonnegative integers with
minimum 0. The arrow of type i leaving a vertex adds 1 to twist i and
normalizes again, so each vertex has exactly one arrow of each type leaving it
and one arriving. Type sets are frozensets of integers in [0, n].
"""

import itertools

from linnet.exactla import RMatrix
from linnet.util import NetError, vertex_str, type_set_str

# set up logging
import logging
logger = logging.getLogger(__name__)


class Vertex(tuple):
    """ A normalized twist tuple """

    def __new__(cls, twists):
        twists = tuple(twists)
        if len(twists) < 2:
            raise NetError("A vertex needs at least two twists, got {}".format(twists))
        if any(not isinstance(x, int) or isinstance(x, bool) for x in twists):
            raise NetError("Twists must be integers, got {}".format(twists))
        if min(twists) != 0:
            raise NetError("Twists {} are not normalized".format(twists))
        return super(Vertex, cls).__new__(cls, twists)

    @property
    def n(self):
        return len(self) - 1

    def __str__(self):
        return "(" + vertex_str(self) + ")"
    def __repr__(self):
        return 'Vertex{}'.format(str(self))


class PathTypeVector(tuple):
    """
    Number of arrows of each type on a path. Paths with equal endpoints and an
    admissible type have equal type vectors.
    """

    def __new__(cls, counts):
        counts = tuple(counts)
        if any(c < 0 for c in counts):
            raise NetError("Arrow counts must be nonnegative, got {}".format(counts))
        return super(PathTypeVector, cls).__new__(cls, counts)

    @property
    def is_admissible(self):
        return 0 in self

    @property
    def is_simple(self):
        return all(c <= 1 for c in self)

    @property
    def is_minimal_circuit(self):
        return all(c == 1 for c in self)

    @property
    def support(self):
        """ the essential type """
        return frozenset(i for i, c in enumerate(self) if c)

    @property
    def length(self):
        return sum(self)

    def __repr__(self):
        return 'PathTypeVector({})'.format(vertex_str(self))


def check_n(n):
    if not isinstance(n, int) or n < 1:
        raise NetError("The quiver parameter n must be an integer >= 1, got {!r}".format(n))
    return n

def all_types(n):
    return frozenset(range(check_n(n) + 1))

def check_type(n, t):
    if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t <= n:
        raise NetError("Arrow type {!r} is not in [0, {}]".format(t, n))
    return t

def type_set(types, n):
    return frozenset(check_type(n, t) for t in types)

def type_set_key(types, n):
    """ the indicator vector; every ordering of type sets in the package sorts by it """
    return tuple(1 if i in types else 0 for i in range(n + 1))

def proper_type_sets(n, nonempty=False):
    res = []
    for r in range(0 if not nonempty else 1, n + 1):
        res.extend(frozenset(c) for c in itertools.combinations(range(n + 1), r))
    return sorted(res, key=lambda I: type_set_key(I, n))

def _check_same_n(*vertices):
    ns = set(len(v) for v in vertices)
    if len(ns) > 1:
        raise NetError("Vertices {} live on different quivers".format(", ".join(str(v) for v in vertices)))


def normalize(raw):
    raw = tuple(raw)
    if len(raw) < 2:
        raise NetError("A twist tuple needs length n+1 >= 2, got {}".format(raw))
    m = min(raw)
    return Vertex(x - m for x in raw)

def arrow_target(v, t):
    check_type(v.n, t)
    raw = list(v)
    raw[t] += 1
    return normalize(raw)

def arrow_source(v, t):
    """ the source of the type-t arrow arriving at v """
    check_type(v.n, t)
    raw = list(v)
    raw[t] -= 1
    return normalize(raw)

def delta(u, w):
    """ the type vector of the admissible paths from u to w """
    _check_same_n(u, w)
    return PathTypeVector(normalize(b - a for a, b in zip(u, w)))

def distance(u, w):
    """ length of the admissible paths from u to w """
    return delta(u, w).length

def is_neighbor(u, w):
    d = delta(u, w)
    return d.length > 0 and d.is_simple

def move_by(v, types):
    """ I.v: the end of the simple paths leaving v with essential type I """
    types = type_set(types, v.n)
    return normalize(x + (1 if i in types else 0) for i, x in enumerate(v))

def cone_contains(v, types, w):
    types = type_set(types, v.n)
    if types == all_types(v.n):
        return True
    return delta(v, w).support <= types

def canonical_path(v, t):
    """ the path of type t from v taking its arrows in ascending type order """
    if len(t) != len(v):
        raise NetError("Type vector {} does not match vertex {}".format(t, v))
    steps = []
    current = v
    for i, count in enumerate(t):
        for _ in range(count):
            steps.append((current, i))
            current = arrow_target(current, i)
    return steps


def hull(H):
    """
    All vertices v such that for every type some z in H reaches v by a path
    avoiding that type. Candidates come from the bounding box of H in the
    coordinates x_i = l_i - l_0.
    """
    H = list(H)
    if not H:
        raise NetError("The hull of an empty set is undefined")
    _check_same_n(*H)
    n = H[0].n
    lo = [min(z[i] - z[0] for z in H) for i in range(1, n + 1)]
    hi = [max(z[i] - z[0] for z in H) for i in range(1, n + 1)]
    res = set()
    for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        v = normalize((0,) + x)
        deltas = [delta(z, v) for z in H]
        if all(any(d[a] == 0 for d in deltas) for a in range(n + 1)):
            res.add(v)
    logger.debug("Hull of {} vertices has {} vertices".format(len(H), len(res)))
    return frozenset(res)

def ball(S, r):
    """ vertices reached from S by paths of length at most r """
    seen = set(S)
    frontier = set(S)
    for _ in range(r):
        reached = set()
        for v in frontier:
            for t in range(v.n + 1):
                w = arrow_target(v, t)
                if w not in seen:
                    reached.add(w)
        seen |= reached
        frontier = reached
    return frozenset(seen)

def required_window(H):
    """ the hull of H enlarged by every vertex within distance n+1 """
    H = list(H)
    return ball(hull(H), H[0].n + 1)


def is_polygon(S):
    S = list(S)
    if not S:
        return False
    _check_same_n(*S)
    return all(is_neighbor(u, w) for u, w in itertools.combinations(S, 2))

def orient_polygon(polygon, start):
    """
    The cyclic ordering v_1 = start, ..., v_m of a polygon and the ordered
    partition I_1, ..., I_m of the types with v_{i+1} = I_i.v_i (indices mod m).
    Each next vertex is the closest remaining one.
    """
    polygon = frozenset(polygon)
    if not is_polygon(polygon):
        raise NetError("Not a polygon: {}".format(sorted(polygon)))
    if start not in polygon:
        raise NetError("Start vertex {} is not in the polygon".format(start))
    T = all_types(start.n)

    ordering = [start]
    blocks = []
    remaining = set(polygon - {start})
    current = start
    while remaining:
        dists = sorted((distance(current, w), w) for w in remaining)
        if len(dists) > 1 and dists[0][0] == dists[1][0]:
            raise NetError("Two polygon vertices at distance {} from {}".format(dists[0][0], current))
        following = dists[0][1]
        blocks.append(delta(current, following).support)
        ordering.append(following)
        remaining.remove(following)
        current = following
    if len(ordering) == 1:
        blocks.append(T)
    else:
        blocks.append(delta(current, start).support)

    if sum(len(b) for b in blocks) != len(T) or frozenset().union(*blocks) != T:
        raise NetError("Polygon {} does not orient to a partition of the types".format(sorted(polygon)))
    return ordering, blocks

def polygon_from_partition(v, blocks):
    """ the polygon v, I_1.v, I_2.I_1.v, ... of an ordered partition of the types """
    blocks = [type_set(b, v.n) for b in blocks]
    if (any(not b for b in blocks) or sum(len(b) for b in blocks) != v.n + 1
            or frozenset().union(*blocks) != all_types(v.n)):
        raise NetError("{} is not an ordered partition of the types".format(
            ", ".join(type_set_str(b) for b in blocks)))
    vertices = [v]
    for b in blocks[:-1]:
        vertices.append(move_by(vertices[-1], b))
    return vertices

def extend_polygon(polygon):
    """ a (p+1)-gon containing the given p-gon, splitting the first block with two or more types """
    start = min(polygon)
    ordering, blocks = orient_polygon(polygon, start)
    if len(ordering) == start.n + 1:
        raise NetError("An {}-gon cannot be extended".format(len(ordering)))
    for v, b in zip(ordering, blocks):
        if len(b) >= 2:
            return frozenset(polygon) | {move_by(v, {min(b)})}


class MultidegreeFrame(object):
    """
    Affine coordinates for the lattice: the multidegree of the vertex with
    twists l is base + sum(l_i * generators[i]).
    """

    def __init__(self, base, generators):
        self.base = tuple(int(x) for x in base)
        self.generators = tuple(tuple(int(x) for x in g) for g in generators)
        n = check_n(len(self.generators) - 1)
        if any(len(g) != len(self.base) for g in self.generators):
            raise NetError("Frame generators must have the length of the base, {}".format(len(self.base)))
        if any(sum(g) != 0 for g in self.generators):
            raise NetError("Each frame generator must sum to zero")
        if any(sum(col) != 0 for col in zip(*self.generators)):
            raise NetError("Frame generators must sum to zero")
        for dropped in range(n + 1):
            others = [g for i, g in enumerate(self.generators) if i != dropped]
            if RMatrix.from_rows(others, len(self.base)).rank() != n:
                raise NetError("Frame generators other than {} are linearly dependent".format(dropped))

    @property
    def n(self):
        return len(self.generators) - 1

    def to_multidegree(self, v):
        if len(v) != self.n + 1:
            raise NetError("Vertex {} does not match a frame with n={}".format(v, self.n))
        return tuple(b + sum(l * g[j] for l, g in zip(v, self.generators))
                     for j, b in enumerate(self.base))

    def to_twists(self, multidegree):
        """ solve multidegree = base + sum(l_i v_i) with l_0 = 0, then normalize """
        multidegree = tuple(multidegree)
        if len(multidegree) != len(self.base):
            raise NetError("Multidegree {} has the wrong length".format(multidegree))
        n = self.n
        rhs = tuple(d - b for d, b in zip(multidegree, self.base))
        system = RMatrix.from_columns(list(self.generators[1:]) + [rhs], len(self.base))
        reduced, pivots = system.rref()
        if n in pivots:
            raise NetError("Multidegree {} is not in the lattice of the frame".format(multidegree))
        solution = [reduced[r, n] for r in range(len(pivots))]
        if any(x.denominator != 1 for x in solution):
            raise NetError("Multidegree {} is not in the lattice of the frame".format(multidegree))
        return normalize((0,) + tuple(int(x.numerator) for x in solution))

    def to_json(self):
        return {'base': list(self.base), 'generators': [list(g) for g in self.generators]}

    def __eq__(self, other):
        try:
            return self.base == other.base and self.generators == other.generators
        except AttributeError:
            return False
    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.base, self.generators))

    def __repr__(self):
        return 'MultidegreeFrame({}, {})'.format(self.base, self.generators)
