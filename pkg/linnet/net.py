"""
Finite presentations of linked nets on a window of the quiver.

A NetPresentation gives a vector space dimension at each window vertex and a
matrix for each arrow with both ends in the window. Everything here is a
function of the presentation; checkers return CheckReports and never raise for
a failed condition.
"""

import collections
import itertools

from linnet.exactla import (RMatrix, Subspace, kernel, image, complement, projection,
                            quotient_matrix, proportional_nonzero)
from linnet.quiver import (Vertex, MultidegreeFrame, all_types, arrow_target, arrow_source, check_type,
                           delta, move_by, proper_type_sets, type_set_key, required_window)
from linnet.util import NetError, WindowInsufficient, NotASubnet, type_set_str, count_str

# set up logging
import logging
logger = logging.getLogger(__name__)


class ArrowRef(collections.namedtuple('ArrowRef', ['source', 'type'])):
    """ the arrow of a given type leaving source """
    __slots__ = ()

    @property
    def target(self):
        return arrow_target(self.source, self.type)

    def to_json(self):
        return {'from': list(self.source), 'type': self.type}

    def __str__(self):
        return "{}-{}->{}".format(self.source, self.type, self.target)


class NetPresentation(object):
    """
    A net of vector spaces on a finite window.

    arrows maps ArrowRef -> RMatrix for arrows inside the window. boundary holds
    arrows arriving at the window from outside; they only complete the sums of
    arriving images. embedding (vertex -> Subspace of the parent) is set on
    subnets, section (vertex -> complement in the parent) on quotients.
    Presentations are never changed after construction.
    """

    def __init__(self, n, window, dims, arrows, generators, labels=None, frame=None, boundary=None,
                 embedding=None, section=None):
        self.n = n
        self.window = frozenset(window)
        self.dims = dict(dims)
        self.arrows = dict((ArrowRef(*ref), m) for ref, m in arrows.items())
        self.generators = frozenset(generators)
        self.labels = dict(labels) if labels else {}
        self.frame = frame
        self.boundary = dict((ArrowRef(*ref), m) for ref, m in (boundary or {}).items())
        self.embedding = embedding
        self.section = section

        self._paths = {}
        self._routes = {}
        self._kernels = {}

    @property
    def vertices(self):
        """ the window in sorted order """
        return sorted(self.window)

    @property
    def dim(self):
        """ the common dimension, or None if the net is not pure """
        dims = set(self.dims.values())
        return dims.pop() if len(dims) == 1 else None

    def arriving(self, v, t):
        """ (ArrowRef, matrix) of the type-t arrow arriving at v, matrix None if not presented """
        ref = ArrowRef(arrow_source(v, t), t)
        m = self.arrows.get(ref)
        if m is None:
            m = self.boundary.get(ref)
        return ref, m

    def with_arrows(self, changes):
        """ a copy with some arrow matrices replaced """
        arrows = dict(self.arrows)
        arrows.update((ArrowRef(*ref), m) for ref, m in changes.items())
        return NetPresentation(self.n, self.window, self.dims, arrows, self.generators, self.labels,
                               self.frame, self.boundary)

    def with_generators(self, generators):
        return NetPresentation(self.n, self.window, self.dims, self.arrows, generators, self.labels,
                               self.frame, self.boundary, self.embedding, self.section)

    def __eq__(self, other):
        try:
            return (self.n == other.n and self.window == other.window and self.dims == other.dims
                    and self.arrows == other.arrows and self.generators == other.generators
                    and self.labels == other.labels and self.frame == other.frame
                    and self.boundary == other.boundary)
        except AttributeError:
            return False
    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        return "NetPresentation(n={}, {}, {})".format(
            self.n, count_str(len(self.window), 'vertex'), count_str(len(self.arrows), 'arrow'))
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


def _jsonable(x):
    if hasattr(x, 'to_json'):
        return x.to_json()
    if isinstance(x, frozenset):
        return sorted(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return dict((k, _jsonable(y)) for k, y in x.items())
    if isinstance(x, (int, str)) or x is None:
        return x
    return str(x)


class CheckReport(object):
    """
    The verdict of a checker: witnesses for failed conditions and coverage
    entries for conditions skipped because the window is too small.
    A report passes iff it has no witnesses.
    """

    def __init__(self, name):
        self.name = name
        self.witnesses = []
        self.coverage = []
        self.data = {}

    def fail(self, condition, vertex=None, types=(), **details):
        entry = {'check': self.name, 'condition': condition, 'vertex': vertex, 'types': tuple(types)}
        entry.update(details)
        self.witnesses.append(entry)
        logger.debug("{} failed: {} at {}".format(self.name, condition, vertex))

    def skip(self, condition, vertex=None, types=(), missing=()):
        self.coverage.append({'check': self.name, 'condition': condition, 'vertex': vertex,
                              'types': tuple(types), 'missing': sorted(set(missing))})

    @property
    def passed(self):
        return not self.witnesses

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def merge(self, *others):
        for other in others:
            self.witnesses.extend(other.witnesses)
            self.coverage.extend(other.coverage)
            for k, v in other.data.items():
                self.data.setdefault(k, v)
        return self

    @staticmethod
    def _key(entry):
        v = entry['vertex']
        n = len(v) - 1 if v is not None else 0
        return (tuple(v) if v is not None else (), tuple(type_set_key(I, n) for I in entry['types']),
                entry['check'], entry['condition'])

    def to_json(self):
        def entry_json(e):
            res = dict((k, _jsonable(x)) for k, x in e.items() if k not in ('vertex', 'types'))
            res['vertex'] = list(e['vertex']) if e['vertex'] is not None else None
            res['types'] = [sorted(I) for I in e['types']]
            return res
        res = {'check': self.name, 'verdict': self.verdict,
               'witnesses': [entry_json(e) for e in sorted(self.witnesses, key=self._key)],
               'coverage': [entry_json(e) for e in sorted(self.coverage, key=self._key)]}
        if self.data:
            res['data'] = _jsonable(self.data)
        return res

    def __str__(self):
        return "CheckReport({}: {}, {}, {})".format(self.name, self.verdict,
                                                    count_str(len(self.witnesses), 'witness'),
                                                    count_str(len(self.coverage), 'skip'))
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


def validate(p):
    """ structural checks only: shapes, normalization, generator containment """
    report = CheckReport('validate')
    if not isinstance(p.n, int) or isinstance(p.n, bool) or p.n < 1:
        report.fail("n must be an integer >= 1", n=p.n)
        return report
    if not p.window:
        report.fail("window is empty")
        return report

    for v in p.window:
        if not isinstance(v, Vertex) or v.n != p.n:
            report.fail("window vertex is not a normalized twist tuple of length {}".format(p.n + 1),
                        tuple(v) if isinstance(v, tuple) else None)
    if not report.passed:
        return report

    if set(p.dims) != p.window:
        for v in sorted(set(p.dims) ^ p.window):
            report.fail("dims and window disagree", v)
    for v in p.vertices:
        d = p.dims.get(v)
        if d is not None and (not isinstance(d, int) or isinstance(d, bool) or d < 0):
            report.fail("dimension must be a nonnegative integer", v, dim=d)

    if not p.generators:
        report.fail("generators are empty")
    for g in sorted(p.generators - p.window):
        report.fail("generator outside the window", g)

    for ref, m in sorted(p.arrows.items()):
        _check_arrow(p, report, ref, m, inside=True)
    for ref, m in sorted(p.boundary.items()):
        _check_arrow(p, report, ref, m, inside=False)

    for v, label in sorted(p.labels.items()):
        if v not in p.window:
            report.fail("label on a vertex outside the window", v)
        elif p.frame is not None and tuple(p.frame.to_multidegree(v)) != tuple(label):
            report.fail("label disagrees with the frame", v, label=list(label),
                        expected=list(p.frame.to_multidegree(v)))
    if p.frame is not None and (not isinstance(p.frame, MultidegreeFrame) or p.frame.n != p.n):
        report.fail("frame does not match n={}".format(p.n))
    return report

def _check_arrow(p, report, ref, m, inside):
    try:
        check_type(p.n, ref.type)
        target = ref.target
    except (NetError, AttributeError):
        report.fail("arrow type out of range", ref.source if isinstance(ref.source, Vertex) else None,
                    arrow=[list(ref.source), ref.type])
        return
    if inside and (ref.source not in p.window or target not in p.window):
        report.fail("arrow leaves the window", ref.source, [frozenset([ref.type])], arrow=ref)
        return
    if not inside and (ref.source in p.window or target not in p.window):
        report.fail("boundary arrow must arrive at the window from outside", ref.source,
                    [frozenset([ref.type])], arrow=ref)
        return
    rows = p.dims.get(target)
    cols = p.dims.get(ref.source, m.cols) if inside else m.cols
    if m.shape != (rows, cols):
        report.fail("matrix shape {}x{} should be {}x{}".format(m.rows, m.cols, rows, cols),
                    ref.source, [frozenset([ref.type])], arrow=ref)


def compose_path(p, v, types):
    """ the composite along the arrows of the given types, taken in the given order """
    current = v
    res = RMatrix.identity(p.dims[v])
    for t in types:
        ref = ArrowRef(current, t)
        m = p.arrows.get(ref)
        if m is None:
            raise WindowInsufficient("Arrow {} is not in the window".format(ref), [ref])
        res = m * res
        current = ref.target
    return res

def _route(p, current, remaining):
    """
    (composite, missing arrows) from current along some in-window ordering of
    the remaining counts; the composite is None if every ordering leaves the
    window. Results are kept on p, keyed by the remaining counts.
    """
    key = (current, remaining)
    if key in p._routes:
        return p._routes[key]
    if not any(remaining):
        res = (RMatrix.identity(p.dims[current]), frozenset())
    else:
        composite, missing = None, set()
        for t, count in enumerate(remaining):
            if not count:
                continue
            ref = ArrowRef(current, t)
            m = p.arrows.get(ref)
            if m is None:
                missing.add(ref)
                continue
            rest = remaining[:t] + (count - 1,) + remaining[t + 1:]
            tail, tail_missing = _route(p, ref.target, rest)
            if tail is not None:
                composite = tail * m
                break
            missing.update(tail_missing)
        res = (composite, frozenset(missing) if composite is None else frozenset())
    p._routes[key] = res
    return res

def path_map(p, u, w):
    """
    The map along an admissible path from u to w inside the window. Orderings
    of the arrow types are tried with the smallest type first.
    """
    key = (u, w)
    if key in p._paths:
        return p._paths[key]
    if u not in p.window:
        d = delta(u, w)
        leaving = [ArrowRef(u, t) for t in range(p.n + 1) if d[t] or u == w]
        raise WindowInsufficient("Vertex {} is not in the window".format(u), leaving)
    if u == w:
        res = RMatrix.identity(p.dims[u])
    else:
        res, missing = _route(p, u, tuple(delta(u, w)))
        if res is None:
            raise WindowInsufficient("No path from {} to {} stays inside the window".format(u, w),
                                     sorted(missing))
    p._paths[key] = res
    return res

def simple_map(p, v, types):
    """ the map from v to I.v; the identity for the empty set """
    types = frozenset(types)
    if types == all_types(p.n):
        raise NetError("Simple maps need a proper type set, got {}".format(type_set_str(types)))
    return path_map(p, v, move_by(v, types))

def simple_kernel(p, v, types):
    key = (v, frozenset(types))
    if key not in p._kernels:
        p._kernels[key] = kernel(simple_map(p, v, types))
    return p._kernels[key]


def check_weakly_linked(p):
    """
    Squares of two distinct types commute up to a nonzero scalar (or both
    vanish), and the ascending minimal circuit at each vertex is zero.
    """
    report = CheckReport('weakly_linked')
    for v in p.vertices:
        for a, b in itertools.combinations(range(p.n + 1), 2):
            pair = frozenset([a, b])
            try:
                first = compose_path(p, v, [a, b])
                second = compose_path(p, v, [b, a])
            except WindowInsufficient as e:
                report.skip("square", v, [pair], e.missing)
                continue
            if proportional_nonzero(first, second) is None:
                report.fail("square", v, [pair], routes={'{},{}'.format(a, b): first, '{},{}'.format(b, a): second})
        try:
            circuit = compose_path(p, v, range(p.n + 1))
        except WindowInsufficient as e:
            report.skip("minimal circuit", v, [], e.missing)
            continue
        if not circuit.is_zero():
            report.fail("minimal circuit", v, [], matrix=circuit)
    return report

def check_linked(p):
    """ type-disjoint simple maps leaving the same vertex have kernels meeting in 0 """
    report = CheckReport('linked')
    sets = proper_type_sets(p.n, nonempty=True)
    for v in p.vertices:
        for I, J in itertools.combinations(sets, 2):
            if I & J:
                continue
            try:
                KI, KJ = simple_kernel(p, v, I), simple_kernel(p, v, J)
            except WindowInsufficient as e:
                report.skip("disjoint kernels", v, [I, J], e.missing)
                continue
            if KI.is_zero() or KJ.is_zero():
                continue
            common = KI & KJ
            if not common.is_zero():
                report.fail("disjoint kernels", v, [I, J], vector=list(common.vectors[0]))
    return report

def neighbor_pairs(p):
    """ window pairs (u, w), u < w, that are neighbors """
    res = set()
    for u in p.vertices:
        for I in proper_type_sets(p.n, nonempty=True):
            w = move_by(u, I)
            if w in p.window and u < w:
                res.add((u, w))
    return sorted(res)

def check_exact(p):
    """ for neighbors u, w: ker(u -> w) = im(w -> u) and ker(w -> u) = im(u -> w) """
    report = CheckReport('exact')
    for u, w in neighbor_pairs(p):
        I = delta(u, w).support
        try:
            there = path_map(p, u, w)
            back = path_map(p, w, u)
        except WindowInsufficient as e:
            report.skip("neighbor pair", u, [I], e.missing)
            continue
        K, L = kernel(there), image(back)
        if K != L:
            report.fail("ker(u->w) = im(w->u)", u, [I], neighbor=w, kernel=K, image=L)
        K, L = kernel(back), image(there)
        if K != L:
            report.fail("ker(w->u) = im(u->w)", u, [I], neighbor=w, kernel=K, image=L)
    return report

def _surjecting_generators(p, report=None):
    """ vertex -> generators whose path map onto it is surjective """
    res = {}
    for v in p.vertices:
        res[v] = set()
        missing = []
        for g in sorted(p.generators):
            try:
                if path_map(p, g, v).is_surjective():
                    res[v].add(g)
            except WindowInsufficient as e:
                missing.extend(e.missing)
        if not res[v] and missing and report is not None:
            report.skip("1-generation", v, [], missing)
    return res

def minimal_generators(p, surjecting=None):
    """ drop generators in sorted order while the rest still 1-generate """
    if surjecting is None:
        surjecting = _surjecting_generators(p)
    kept = set(p.generators)
    for g in sorted(p.generators):
        rest = kept - {g}
        if all(s & rest for s in surjecting.values()):
            kept = rest
    return sorted(kept)

def check_pure_and_generated(p):
    """
    Constant dimension on the window, and every window vertex surjected from a
    single generator. The minimal generating subset found is in data.
    """
    report = CheckReport('pure_and_generated')
    vertices = p.vertices
    d = p.dims[vertices[0]]
    for v in vertices[1:]:
        if p.dims[v] != d:
            report.fail("constant dimension", v, dim=p.dims[v], expected=d)

    surjecting = _surjecting_generators(p, report)
    for v in vertices:
        if not surjecting[v] and not any(e['vertex'] == v for e in report.coverage):
            report.fail("1-generation", v)
    if all(surjecting.values()):
        report.data['minimal_generators'] = minimal_generators(p, surjecting)
    return report

def check_all(p):
    """ validate, then every axiom checker, merged into one report """
    report = validate(p)
    if not report.passed:
        return report
    report.name = 'all'
    return report.merge(check_weakly_linked(p), check_linked(p), check_exact(p), check_pure_and_generated(p))

def window_report(p):
    """ coverage entries for vertices of the required window that p lacks """
    report = CheckReport('window')
    required = required_window(sorted(p.generators))
    for v in sorted(required - p.window):
        report.skip("required window", v)
    report.data['required'] = len(required)
    return report


def subnet_spaces(p, seeds):
    """
    The smallest family of subspaces containing the seeds and carried into
    itself by every in-window arrow.
    """
    spaces = dict((v, Subspace.zero(p.dims[v])) for v in p.vertices)
    queue = collections.deque()
    for v, S in seeds:
        if v not in p.window:
            raise WindowInsufficient("Seed vertex {} is not in the window".format(v))
        if S.ambient_dim != p.dims[v]:
            raise NetError("Seed subspace at {} lives in dimension {}, not {}".format(v, S.ambient_dim, p.dims[v]))
        spaces[v] = spaces[v] + S
        queue.append(v)
    while queue:
        v = queue.popleft()
        for t in range(p.n + 1):
            ref = ArrowRef(v, t)
            m = p.arrows.get(ref)
            if m is None:
                continue
            w = ref.target
            pushed = spaces[w] + Subspace(p.dims[w], [m.apply(x) for x in spaces[v].vectors])
            if pushed != spaces[w]:
                spaces[w] = pushed
                queue.append(w)
    return spaces

def restrict(p, spaces):
    """ the subnet on the given subspaces, written in their echelon bases """
    arrows = {}
    for ref, m in p.arrows.items():
        src, tgt = spaces[ref.source], spaces[ref.target]
        columns = []
        for x in src.vectors:
            y = m.apply(x)
            if y not in tgt:
                raise NotASubnet("Arrow {} does not carry {} into {}".format(ref, src, tgt), ref)
            columns.append(tgt.coordinates(y))
        arrows[ref] = RMatrix.from_columns(columns, tgt.dim)
    dims = dict((v, spaces[v].dim) for v in p.vertices)
    return NetPresentation(p.n, p.window, dims, arrows, p.generators, p.labels, p.frame,
                           embedding=dict(spaces))

def subnet_generated(p, seeds, strict=False):
    """
    The subnet generated by (vertex, Subspace) seeds. With strict, every path
    from a seed to a window vertex must be computable.
    """
    seeds = list(seeds)
    if strict:
        for v, _ in seeds:
            for w in p.vertices:
                path_map(p, v, w)
    return restrict(p, subnet_spaces(p, seeds))

def quotient(p, w):
    """
    p divided by a subnet, given as a presentation from subnet_generated or as
    a mapping vertex -> Subspace. Quotient spaces are written in unit-vector
    complement bases, kept in section.
    """
    spaces = w.embedding if isinstance(w, NetPresentation) else w
    if spaces is None:
        raise NetError("{} carries no embedding into the net".format(w))
    spaces = dict((v, spaces.get(v, Subspace.zero(p.dims[v]))) for v in p.vertices)

    arrows = {}
    for ref, m in p.arrows.items():
        try:
            arrows[ref] = quotient_matrix(m, spaces[ref.source], spaces[ref.target])
        except NotASubnet as e:
            raise NotASubnet("Arrow {}: {}".format(ref, e), ref)
    boundary = {}
    for ref, m in p.boundary.items():
        W = spaces[ref.target]
        boundary[ref] = projection(W, complement(W)) * m
    dims = dict((v, p.dims[v] - spaces[v].dim) for v in p.vertices)
    section = dict((v, complement(spaces[v])) for v in p.vertices)
    return NetPresentation(p.n, p.window, dims, arrows, p.generators, p.labels, p.frame, boundary,
                           section=section)

def direct_sum(ps):
    ps = list(ps)
    if not ps:
        raise NetError("The direct sum needs at least one net")
    first = ps[0]
    for q in ps[1:]:
        if q.n != first.n or q.window != first.window:
            raise NetError("Direct summands must share n and the window")
    dims = dict((v, sum(q.dims[v] for q in ps)) for v in first.vertices)
    arrows = {}
    for ref in first.arrows:
        if any(ref not in q.arrows for q in ps):
            raise NetError("Arrow {} is missing from a summand".format(ref))
        arrows[ref] = RMatrix.block_diagonal([q.arrows[ref] for q in ps])
    boundary = {}
    for ref in first.boundary:
        if all(ref in q.boundary for q in ps):
            boundary[ref] = RMatrix.block_diagonal([q.boundary[ref] for q in ps])
    generators = frozenset().union(*[q.generators for q in ps])
    return NetPresentation(first.n, first.window, dims, arrows, generators, first.labels, first.frame, boundary)

def conjugate(p, basis):
    """ change of basis: arrow M becomes basis(target) M basis(source)^-1 """
    B = {}
    for v in p.vertices:
        b = basis.get(v)
        if b is None:
            b = RMatrix.identity(p.dims[v])
        if b.shape != (p.dims[v], p.dims[v]):
            raise NetError("Basis change at {} must be {}x{}".format(v, p.dims[v], p.dims[v]))
        B[v] = b
    inverses = dict((v, b.inverse()) for v, b in B.items())
    arrows = dict((ref, B[ref.target] * m * inverses[ref.source]) for ref, m in p.arrows.items())
    boundary = dict((ref, B[ref.target] * m) for ref, m in p.boundary.items())
    return NetPresentation(p.n, p.window, p.dims, arrows, p.generators, p.labels, p.frame, boundary)
