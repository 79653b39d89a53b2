"""
Decision procedures on linked nets: kernel profiles, the intersection
property, primitive vertices, simple subnet extraction and the decomposition
of a semisimple net into simple summands.
"""

import itertools

from linnet.exactla import Subspace, add, image, preimage, unit_vector, rational_to_json
from linnet.quiver import all_types, delta, move_by, proper_type_sets, type_set_key
from linnet.net import (CheckReport, check_all, check_pure_and_generated, neighbor_pairs, path_map,
                        quotient, simple_kernel, subnet_spaces)
from linnet.util import (WindowInsufficient, PreconditionError, DecompositionError, list_str,
                         type_set_str, count_str)

# set up logging
import logging
logger = logging.getLogger(__name__)

# largest n checked without allow_large, and the largest n checked at all
MAX_N = 3
MAX_LARGE_N = 4


def _sets_json(sets):
    return [sorted(I) for I in sets]


class KernelProfile(object):
    """ the kernels of all simple maps leaving a vertex, keyed by proper type set """

    def __init__(self, vertex, kernels):
        self.vertex = vertex
        self.kernels = dict((frozenset(I), K) for I, K in kernels.items())

    def __getitem__(self, types):
        return self.kernels[frozenset(types)]

    def is_zero(self):
        return all(K.is_zero() for K in self.kernels.values())

    def to_json(self):
        n = self.vertex.n
        return {'vertex': list(self.vertex),
                'kernels': [{'types': sorted(I), 'kernel': self.kernels[I].to_json()}
                            for I in sorted(self.kernels, key=lambda I: type_set_key(I, n))]}

    def __str__(self):
        n = self.vertex.n
        return "KernelProfile({}: {})".format(self.vertex, ", ".join(
            "{}={}".format(type_set_str(I), self.kernels[I])
            for I in sorted(self.kernels, key=lambda I: type_set_key(I, n))))


def kernel_profile(p, v):
    kernels = {}
    missing = []
    complete = True
    for I in proper_type_sets(p.n):
        try:
            kernels[I] = simple_kernel(p, v, I)
        except WindowInsufficient as e:
            complete = False
            missing.extend(e.missing)
    if not complete:
        raise WindowInsufficient("Kernel profile at {} leaves the window".format(v), missing)
    return KernelProfile(v, kernels)


def _sides(profile, I0, summands):
    K = profile.kernels
    lhs = add(Subspace.zero(K[I0].ambient_dim), *[K[I] for I in summands]) & K[I0]
    rhs = add(Subspace.zero(K[I0].ambient_dim), *[K[I & I0] for I in summands])
    return lhs, rhs


class ViolationCertificate(object):
    """
    A failure of the intersection property at vertex: the kernels of the simple
    maps for the summand type sets, summed and cut with the kernel for I0 (lhs),
    differ from the sum of the kernels for their intersections with I0 (rhs).
    """

    def __init__(self, vertex, I0, summands, lhs, rhs):
        self.vertex = vertex
        self.I0 = frozenset(I0)
        self.summands = [frozenset(I) for I in summands]
        self.lhs = lhs
        self.rhs = rhs

    def recheck(self, p):
        """ True iff both sides recomputed from p equal the stored ones and differ """
        lhs, rhs = _sides(kernel_profile(p, self.vertex), self.I0, self.summands)
        return lhs == self.lhs and rhs == self.rhs and lhs != rhs

    def to_json(self):
        return {'vertex': list(self.vertex), 'I0': sorted(self.I0), 'summands': _sets_json(self.summands),
                'lhs': self.lhs.to_json(), 'rhs': self.rhs.to_json()}

    def __eq__(self, other):
        try:
            return (self.vertex == other.vertex and self.I0 == other.I0 and self.summands == other.summands
                    and self.lhs == other.lhs and self.rhs == other.rhs)
        except AttributeError:
            return False
    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        return "Violation at {}: I0={}, summands {}: {} != {}".format(
            self.vertex, type_set_str(self.I0), "[" + ", ".join(type_set_str(I) for I in self.summands) + "]",
            self.lhs, self.rhs)
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


def _check_size(n, allow_large):
    if n > MAX_LARGE_N:
        raise PreconditionError("The intersection property is not checked for n={} > {}".format(n, MAX_LARGE_N))
    if n > MAX_N and not allow_large:
        raise PreconditionError("n={} needs allow_large".format(n))


class _Lattice(object):
    """ memoized sums and intersections of canonical subspaces """

    def __init__(self):
        self._sums = {}
        self._meets = {}

    def add(self, A, B):
        key = (A, B)
        if key not in self._sums:
            self._sums[key] = A + B
        return self._sums[key]

    def meet(self, A, B):
        key = (A, B)
        if key not in self._meets:
            self._meets[key] = A & B
        return self._meets[key]


def intersection_property_at(p, v, allow_large=False):
    """
    The first violation of the intersection property at v, or None.

    I0 runs over nonempty proper type sets, the summand families over antichains
    of nonempty proper type sets not inside I0, by size and then member order.
    Members with a zero kernel, and members repeating the kernel pair of an
    earlier member, are left out: the family without them has the same sides
    and comes earlier.
    """
    n = p.n
    _check_size(n, allow_large)
    profile = kernel_profile(p, v)
    if profile.is_zero():
        return None
    K = profile.kernels
    zero = Subspace.zero(p.dims[v])
    lattice = _Lattice()
    sets = proper_type_sets(n, nonempty=True)

    for I0 in sets:
        if K[I0].is_zero():
            continue
        candidates = []
        seen = set()
        for J in sets:
            if J <= I0 or K[J].is_zero():
                continue
            pair = (K[J], K[J & I0])
            if pair in seen:
                continue
            seen.add(pair)
            candidates.append(J)

        for size in range(1, len(candidates) + 1):
            for family in itertools.combinations(candidates, size):
                if any(a < b or b < a for a, b in itertools.combinations(family, 2)):
                    continue
                total, meets = zero, zero
                for J in family:
                    total = lattice.add(total, K[J])
                    meets = lattice.add(meets, K[J & I0])
                lhs = lattice.meet(total, K[I0])
                if lhs != meets:
                    cert = ViolationCertificate(v, I0, family, lhs, meets)
                    logger.debug(str(cert))
                    return cert
    return None


def check_intersection_property(p, mode='generators', generation=None, allow_large=False):
    """
    Check the intersection property at the generators (mode 'generators') or at
    every window vertex (mode 'window'). The generators mode needs a passing
    purity and 1-generation report, computed here if not given.
    The returned report carries the first violation as its certificate.
    """
    if mode not in ('generators', 'window'):
        raise ValueError("mode must be 'generators' or 'window', got {!r}".format(mode))
    _check_size(p.n, allow_large)
    if mode == 'generators':
        if generation is None:
            generation = check_pure_and_generated(p)
        if not generation.passed:
            raise PreconditionError("Checking only at the generators needs a pure 1-generated net",
                                    [generation])
        vertices = sorted(p.generators)
    else:
        vertices = p.vertices

    report = CheckReport('intersection_property')
    report.certificate = None
    for v in vertices:
        try:
            cert = intersection_property_at(p, v, allow_large)
        except WindowInsufficient as e:
            report.skip("intersection property", v, [], e.missing)
            continue
        if cert is not None:
            report.fail("intersection property", v, [cert.I0] + cert.summands, certificate=cert)
            report.certificate = cert
            break
    logger.debug("Intersection property over {}: {}".format(count_str(len(vertices), 'vertex'), report.verdict))
    return report


def comap(p, v, types):
    """ the simple map arriving at v with essential type J; the identity for the empty set """
    T = all_types(p.n)
    return path_map(p, move_by(v, T - frozenset(types)), v)

def check_preimage_identity(p, u, v, families):
    """
    Both sides of the preimage-of-sum identity for in-window u, v: the preimage
    under u -> v of the sum of images of the simple maps arriving at v with the
    given types, and the sum of images of those arriving at u with the types
    outside the essential type of u -> v.
    """
    families = [frozenset(J) for J in families]
    outside = all_types(p.n) - delta(u, v).support
    ambient = Subspace.zero(p.dims[v])
    target = add(ambient, *[image(comap(p, v, J)) for J in families])
    lhs = preimage(path_map(p, u, v), target)
    rhs = add(Subspace.zero(p.dims[u]), *[image(comap(p, u, J & outside)) for J in families])
    return lhs, rhs


def arriving_images(p, v, strict=True):
    """
    The sum of the images of the arrows arriving at v. If a source is outside
    the presentation the sum is returned only when already full; otherwise
    WindowInsufficient is raised, or None returned when not strict.
    """
    total = Subspace.zero(p.dims[v])
    missing = []
    for t in range(p.n + 1):
        ref, m = p.arriving(v, t)
        if m is None:
            missing.append(ref)
        else:
            total = total + image(m)
    if missing and not total.is_full():
        if strict:
            raise WindowInsufficient("Arrows arriving at {} are not presented".format(v), missing)
        return None
    return total

def primitive_vertices(p, scope='generators'):
    """
    Vertices whose space is not the sum of the images of the arriving arrows.
    In a 1-generated net a vertex outside the generators is surjected through
    an arriving arrow, so searching the generators suffices. scope='window'
    scans the whole window and passes over vertices whose arrivals are not
    all presented.
    """
    if scope not in ('generators', 'window'):
        raise ValueError("scope must be 'generators' or 'window', got {!r}".format(scope))
    candidates = sorted(p.generators) if scope == 'generators' else p.vertices
    res = []
    for v in candidates:
        if p.dims[v] == 0:
            continue
        total = arriving_images(p, v, strict=(scope == 'generators'))
        if total is not None and not total.is_full():
            res.append(v)
    return res


class SimpleSummand(object):
    """
    A simple subnet: spaces of dimension 1 at every window vertex, generated by
    generator_vector at generator_vertex.
    """

    def __init__(self, generator_vertex, generator_vector, spaces):
        self.generator_vertex = generator_vertex
        self.generator_vector = tuple(generator_vector)
        self.spaces = spaces

    def to_json(self):
        return {'generator_vertex': list(self.generator_vertex),
                'generator_vector': [rational_to_json(x) for x in self.generator_vector],
                'spaces': [{'vertex': list(v), 'basis': self.spaces[v].to_json()} for v in sorted(self.spaces)]}

    def __str__(self):
        return "SimpleSummand(at {}, {})".format(self.generator_vertex,
                                                 "(" + ",".join(str(x) for x in self.generator_vector) + ")")
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


def _faithful_spaces(p, v, x):
    """ the subnet spaces generated by x at v, required to be lines everywhere """
    spaces = subnet_spaces(p, [(v, Subspace(p.dims[v], [x]))])
    for u in p.vertices:
        if spaces[u].dim == 1:
            continue
        pushed = path_map(p, v, u).apply(x)
        raise DecompositionError("The subnet generated at {} has dimension {} at {} (pushforward {})".format(
            v, spaces[u].dim, u, "nonzero" if any(pushed) else "zero"))
    return spaces

def extract_simple_subnet(p, v):
    """
    The simple subnet generated by the first unit vector at v outside the sum
    of the arriving images. A proper subspace never contains every unit vector.
    """
    total = arriving_images(p, v)
    if total.is_full():
        raise PreconditionError("Vertex {} is not primitive".format(v))
    d = p.dims[v]
    x = next(e for e in (unit_vector(d, i) for i in range(d)) if e not in total)
    logger.debug("Generating a simple subnet at {} from e_{}".format(v, x.index(1)))
    return SimpleSummand(v, x, _faithful_spaces(p, v, x))


class DecompositionResult(object):
    """ either the simple summands of a semisimple net, or why it is not semisimple """

    def __init__(self, summands=None, violation=None):
        if (summands is None) == (violation is None):
            raise ValueError("A decomposition result holds summands or a violation")
        self.summands = summands
        self.violation = violation

    @property
    def semisimple(self):
        return self.violation is None

    def to_json(self):
        if self.semisimple:
            return {'semisimple': True, 'summands': [s.to_json() for s in self.summands]}
        return {'semisimple': False, 'violation': self.violation.to_json()}

    def __str__(self):
        if self.semisimple:
            return "DecompositionResult({})".format(count_str(len(self.summands), 'summand'))
        return "DecompositionResult({})".format(self.violation)


def _verify_direct_sum(p, summands):
    for u in p.vertices:
        lines = [s.spaces[u].vectors[0] for s in summands]
        if len(lines) != p.dims[u] or Subspace(p.dims[u], lines).dim != p.dims[u]:
            raise DecompositionError("Summands do not split the space at {}".format(u))

def decompose(p, allow_large=False):
    """
    Split p into simple summands, or return the violation of the intersection
    property that prevents it.

    Each round takes the first primitive vertex of the working quotient,
    extracts a simple subnet there, lifts its generator back to p and divides
    it out. The lifted generator is asserted to stay outside the arriving
    images in p.
    """
    reports = check_all(p)
    if not reports.passed:
        first = reports.to_json()['witnesses'][0]
        raise PreconditionError("The net fails its axiom checks: {}, first {} {} at {}".format(
            reports, first['check'], first['condition'], first['vertex']), [reports])
    ip = check_intersection_property(p, 'generators', reports, allow_large)
    if ip.certificate is not None:
        return DecompositionResult(violation=ip.certificate)

    if p.dim is None:
        raise DecompositionError("The net is not pure")
    lift = dict((v, None) for v in p.vertices)
    q = p
    summands = []
    while q.dim != 0:
        if q.dim is None:
            raise DecompositionError("A quotient of the net is not pure")
        primitive = primitive_vertices(q)
        if not primitive:
            raise DecompositionError("No primitive vertex among the generators of a nonzero net")
        v = primitive[0]
        local = extract_simple_subnet(q, v)
        x = local.generator_vector if lift[v] is None else lift[v].apply(local.generator_vector)
        if x in arriving_images(p, v):
            raise DecompositionError("Lifted generator at {} lies in the arriving images".format(v))
        summand = SimpleSummand(v, x, _faithful_spaces(p, v, x))
        summands.append(summand)
        logger.info("Summand {} found at {}".format(len(summands), v))

        q = quotient(q, local.spaces)
        for u in p.vertices:
            step = q.section[u].basis.transpose()
            lift[u] = step if lift[u] is None else lift[u] * step

    _verify_direct_sum(p, summands)
    logger.debug("Decomposed into {}".format(list_str(summands)))
    return DecompositionResult(summands=summands)


def is_simple(p):
    """ a vertex faithfully generating p if every dimension is 1, else None """
    if any(d != 1 for d in p.dims.values()):
        return None
    for v in p.vertices:
        try:
            if all(not path_map(p, v, u).is_zero() for u in p.vertices):
                return v
        except WindowInsufficient:
            continue
    return None

def is_binary(p):
    """
    Every arrow is zero or injective, and of each neighbor pair with both maps
    computable one direction is an isomorphism.
    """
    for m in p.arrows.values():
        if not (m.is_zero() or m.is_injective()):
            return False
    for u, w in neighbor_pairs(p):
        try:
            maps = [path_map(p, u, w), path_map(p, w, u)]
        except WindowInsufficient:
            continue
        if not any(m.rows == m.cols and m.is_injective() for m in maps):
            return False
    return True
