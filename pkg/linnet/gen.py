"""
Seeded construction of simple and semisimple nets, and the bundled
non-semisimple example.
"""

import random

from linnet.exactla import RMatrix, rational
from linnet.quiver import Vertex, MultidegreeFrame, arrow_target, ball, delta, hull, polygon_from_partition
from linnet.net import ArrowRef, NetPresentation, check_all, conjugate as conjugate_net, direct_sum
from linnet.util import NetError, list_str

# set up logging
import logging
logger = logging.getLogger(__name__)

SCALARS = tuple(rational(x) for x in (1, -1, 2, -2, '1/2', '-1/2', 3, '1/3'))
BASIS_ENTRIES = tuple(rational(x) for x in (0, 1, -1, 2, '1/2'))


def _rng(rng):
    return rng if isinstance(rng, random.Random) else random.Random(rng)

def origin(n):
    return Vertex((0,) * (n + 1))

def generated_window(seeds, radius):
    return ball(hull(seeds), radius)


def random_simple_net(n, seed_vertex, window, rng):
    """
    A net of lines faithfully generated at seed_vertex. The arrow of type i at u
    is nonzero when some type other than i is missing from the admissible path
    seed -> u, so that stepping along i keeps it admissible; otherwise it is
    zero. Each vertex u carries a random scalar c(u) and a nonzero arrow u -> w
    is c(w)/c(u), so any two routes between the same vertices agree exactly.
    """
    rng = _rng(rng)
    window = frozenset(window)
    if seed_vertex not in window:
        raise NetError("Seed {} is not in the window".format(seed_vertex))
    scale = dict((u, rng.choice(SCALARS)) for u in sorted(window))
    arrows = {}
    for u in sorted(window):
        d = delta(seed_vertex, u)
        for i in range(n + 1):
            w = arrow_target(u, i)
            if w not in window:
                continue
            if any(c == 0 for j, c in enumerate(d) if j != i):
                arrows[ArrowRef(u, i)] = RMatrix(1, 1, [[scale[w] / scale[u]]])
            else:
                arrows[ArrowRef(u, i)] = RMatrix.zeros(1, 1)
    dims = dict((u, 1) for u in window)
    return NetPresentation(n, window, dims, arrows, [seed_vertex])


def random_invertible(d, rng):
    while True:
        m = RMatrix(d, d, [[rng.choice(BASIS_ENTRIES) for _ in range(d)] for _ in range(d)])
        if m.det() != 0:
            return m


class GenSpec(object):
    """
    What to generate: one simple summand per seed on the window
    ball(hull(seeds), window_radius), optionally conjugated.
    """

    def __init__(self, n, seeds, seed_rng=0, window_radius=None, conjugate=False):
        self.n = n
        self.seeds = [Vertex(s) for s in seeds]
        if not self.seeds:
            raise NetError("A generator spec needs at least one seed")
        if any(s.n != n for s in self.seeds):
            raise NetError("Seeds must have {} twists".format(n + 1))
        if len(set(self.seeds)) != len(self.seeds):
            raise NetError("Seeds must be distinct")
        self.window_radius = n + 1 if window_radius is None else window_radius
        if self.window_radius < n + 1:
            raise NetError("The window radius must be at least {}".format(n + 1))
        self.seed_rng = seed_rng
        self.conjugate = conjugate

    @classmethod
    def from_random(cls, n, k, rng_seed, conjugate=False, spread=1, window_radius=None):
        """
        k distinct seeds drawn from the vertices within spread of the origin.
        Windows grow quickly with spread for n = 3; spread 1 keeps them small.
        """
        rng = random.Random(rng_seed)
        pool = sorted(ball([origin(n)], spread))
        if k > len(pool):
            raise NetError("Cannot draw {} seeds from {} vertices".format(k, len(pool)))
        return cls(n, sorted(rng.sample(pool, k)), rng_seed, window_radius, conjugate)

    def to_json(self):
        return {'n': self.n, 'seeds': [list(s) for s in self.seeds], 'seed_rng': self.seed_rng,
                'window_radius': self.window_radius, 'conjugate': self.conjugate}

    def __str__(self):
        return "GenSpec(n={}, seeds={}, rng={}, radius={}{})".format(
            self.n, list_str(self.seeds), self.seed_rng, self.window_radius,
            ", conjugated" if self.conjugate else "")


def random_semisimple_net(spec):
    """
    (presentation, number of simple summands). The result is run through
    check_all, and NetError is raised if any axiom fails.
    """
    rng = random.Random(spec.seed_rng)
    window = generated_window(spec.seeds, spec.window_radius)
    parts = [random_simple_net(spec.n, s, window, rng) for s in spec.seeds]
    p = direct_sum(parts).with_generators(hull(spec.seeds))
    if spec.conjugate:
        basis = dict((v, random_invertible(p.dims[v], rng)) for v in p.vertices)
        p = conjugate_net(p, basis)
    report = check_all(p)
    if not report.passed:
        raise NetError("Generated net from {} fails its axiom checks: {}".format(spec, report))
    logger.debug("Generated {} from {}".format(p, spec))
    return p, len(spec.seeds)


def random_partition(n, rng, size):
    """ an ordered partition of the n+1 types into size nonempty blocks """
    if not 1 <= size <= n + 1:
        raise NetError("A partition of {} types has 1 to {} blocks".format(n + 1, n + 1))
    types = list(range(n + 1))
    rng.shuffle(types)
    cuts = sorted(rng.sample(range(1, n + 1), size - 1))
    bounds = [0] + cuts + [n + 1]
    return [frozenset(types[a:b]) for a, b in zip(bounds, bounds[1:])]

def random_polygon(n, rng, size):
    rng = _rng(rng)
    blocks = random_partition(n, rng, size)
    start = rng.choice(sorted(ball([origin(n)], 2)))
    return polygon_from_partition(start, blocks)


FIXTURE_FRAME = ((2, 2, 2), ((-2, 1, 1), (1, -2, 1), (1, 1, -2)))

FIXTURE_ARROWS = [
    ((0, 0, 0), 0, [[1, 0], [0, 1]]),
    ((0, 0, 0), 1, [[1, 0], [0, 1]]),
    ((0, 0, 0), 2, [[1, 0], [0, 1]]),
    ((1, 0, 1), 1, [[0, 1], [0, 1]]),
    ((0, 1, 1), 0, [[1, 0], [0, 0]]),
    ((1, 1, 0), 2, [[0, 0], [0, 1]]),
    ((1, 0, 0), 2, [[1, -1], [0, 0]]),
    ((1, 0, 0), 1, [[1, 0], [0, 0]]),
    ((0, 1, 0), 0, [[1, 0], [0, 0]]),
    ((0, 1, 0), 2, [[0, 0], [0, 1]]),
    ((0, 0, 1), 1, [[0, 0], [0, 1]]),
    ((0, 0, 1), 0, [[1, -1], [0, 0]]),
]

# zero maps arriving at the hexagon from the outer triangle
FIXTURE_BOUNDARY = [((0, 2, 2), 0), ((2, 2, 0), 2), ((2, 0, 2), 1)]


def fixture_nonsemisimple():
    """
    An exact linked net over the Z^2-quiver with 2-dimensional spaces on the
    center (0,0,0) and its hexagon, which fails the intersection property at
    the center. Labels are multidegrees of the frame with base (2,2,2).
    """
    window = [Vertex(t) for t in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 0)]]
    frame = MultidegreeFrame(*FIXTURE_FRAME)
    arrows = dict((ArrowRef(Vertex(v), t), RMatrix(2, 2, m)) for v, t, m in FIXTURE_ARROWS)
    boundary = dict((ArrowRef(Vertex(v), t), RMatrix.zeros(2, 2)) for v, t in FIXTURE_BOUNDARY)
    labels = dict((v, frame.to_multidegree(v)) for v in window)
    dims = dict((v, 2) for v in window)
    return NetPresentation(2, window, dims, arrows, window, labels, frame, boundary)
