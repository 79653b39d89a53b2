import itertools
import random
import unittest

from hypothesis import given, settings, strategies as st

from linnet.analysis import (MAX_LARGE_N, KernelProfile, ViolationCertificate, arriving_images,
                             check_intersection_property, check_preimage_identity, comap, decompose,
                             extract_simple_subnet, intersection_property_at, is_binary, is_simple, kernel_profile,
                             primitive_vertices)
from linnet.exactla import RMatrix, Subspace
from linnet.gen import (GenSpec, fixture_nonsemisimple, generated_window, random_invertible, random_polygon,
                        random_semisimple_net, random_simple_net)
from linnet.net import (ArrowRef, NetPresentation, check_exact, check_linked, check_pure_and_generated,
                        check_weakly_linked, conjugate, quotient)
from linnet.quiver import Vertex, hull, is_polygon, move_by, proper_type_sets
from linnet.util import PreconditionError, WindowInsufficient


def V(*twists):
    return Vertex(twists)

CENTER = V(0, 0, 0)

def S(*vectors):
    return Subspace(len(vectors[0]), vectors)

def _verdicts(p):
    """ the axiom verdicts, and the intersection verdict with its violation vertex """
    checks = [check_weakly_linked(p), check_linked(p), check_exact(p), check_pure_and_generated(p)]
    ip = check_intersection_property(p, 'window')
    return [r.verdict for r in checks], ip.verdict, ip.certificate.vertex if ip.certificate is not None else None


@st.composite
def gen_specs(draw, max_n=3, max_k=4, conjugate=None):
    """ spread 1 draws from n+2 vertices, so n = 1 uses spread 2 to reach 4 seeds """
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, max_k))
    rng_seed = draw(st.integers(0, 2 ** 16))
    if conjugate is None:
        conjugate = draw(st.booleans())
    return GenSpec.from_random(n, k, rng_seed, conjugate, spread=2 if n == 1 else 1)


class TestAnalysis(unittest.TestCase):

    def setUp(self):
        print(("===== Setting up test %s  " % self._testMethodName).ljust(100, '='))
        self.p = fixture_nonsemisimple()
        print(("===== Starting test %s  " % self._testMethodName).ljust(100, '='))

    def tearDown(self):
        del self.p
        print(("===== End test %s  " % self._testMethodName).ljust(100, '='))


    def test_kernel_profile(self):
        profile = kernel_profile(self.p, CENTER)
        self.assertIsInstance(profile, KernelProfile)
        self.assertEqual(profile[{0, 2}], S((1, 1)))
        self.assertEqual(profile[{1, 2}], S((1, 0)))
        self.assertEqual(profile[{0, 1}], S((0, 1)))
        for I in [{0}, {1}, {2}, set()]:
            self.assertTrue(profile[I].is_zero())
        self.assertFalse(profile.is_zero())
        self.assertEqual(len(profile.to_json()['kernels']), 7)

        self.assertRaises(WindowInsufficient, kernel_profile, self.p, V(1, 0, 1))

    def test_kernel_intersections(self):
        profile = kernel_profile(self.p, CENTER)
        for I, J in itertools.combinations(proper_type_sets(2), 2):
            self.assertEqual(profile[I] & profile[J], profile[I & J])

    def test_violation(self):
        cert = intersection_property_at(self.p, CENTER)
        self.assertIsInstance(cert, ViolationCertificate)
        self.assertEqual(cert.I0, frozenset({1, 2}))
        self.assertEqual(cert.summands, [frozenset({0, 2}), frozenset({0, 1})])
        self.assertEqual(cert.lhs, S((1, 0)))
        self.assertTrue(cert.rhs.is_zero())
        self.assertTrue(cert.recheck(self.p))
        self.assertEqual(cert.to_json(), {'vertex': [0, 0, 0], 'I0': [1, 2], 'summands': [[0, 2], [0, 1]],
                                          'lhs': [[1, 0]], 'rhs': []})

        fixed = self.p.with_arrows({ArrowRef(V(1, 0, 0), 2): RMatrix.identity(2)})
        self.assertFalse(cert.recheck(fixed))

    def test_check_intersection_property(self):
        report = check_intersection_property(self.p)
        self.assertFalse(report.passed)
        self.assertEqual(report.certificate, intersection_property_at(self.p, CENTER))
        self.assertEqual(len(report.witnesses), 1)

        report = check_intersection_property(self.p, 'window')
        self.assertEqual(report.certificate.vertex, CENTER)

        self.assertRaises(ValueError, check_intersection_property, self.p, 'everywhere')
        self.assertRaises(PreconditionError, check_intersection_property, self.p.with_generators([CENTER]))

    def test_size_limits(self):
        n = MAX_LARGE_N
        window = generated_window([V(*[0] * (n + 1))], n)
        p = random_simple_net(n, V(*[0] * (n + 1)), window, 0)
        self.assertRaises(PreconditionError, intersection_property_at, p, V(*[0] * (n + 1)))
        self.assertIsNone(intersection_property_at(p, V(*[0] * (n + 1)), allow_large=True))

    def test_decompose_violation(self):
        result = decompose(self.p)
        self.assertFalse(result.semisimple)
        self.assertEqual(result.violation.I0, frozenset({1, 2}))
        self.assertEqual(result.to_json()['semisimple'], False)

        broken = self.p.with_arrows({ArrowRef(V(1, 0, 1), 1): RMatrix.zeros(2, 2)})
        with self.assertRaises(PreconditionError) as cm:
            decompose(broken)
        self.assertFalse(cm.exception.reports[0].passed)

    def test_primitive_vertices(self):
        self.assertEqual(primitive_vertices(self.p), [V(0, 1, 1), V(1, 0, 1), V(1, 1, 0)])
        self.assertEqual(primitive_vertices(self.p, 'window'), [V(0, 1, 1), V(1, 0, 1), V(1, 1, 0)])
        self.assertTrue(arriving_images(self.p, CENTER).is_full())
        self.assertEqual(arriving_images(self.p, V(0, 1, 1)), S((0, 1)))
        self.assertEqual(arriving_images(self.p, V(1, 0, 1)), S((1, 0)))

        cut = NetPresentation(2, self.p.window, self.p.dims, self.p.arrows, self.p.generators)
        self.assertRaises(WindowInsufficient, arriving_images, cut, V(1, 0, 1))
        self.assertIsNone(arriving_images(cut, V(1, 0, 1), strict=False))
        self.assertRaises(ValueError, primitive_vertices, self.p, 'somewhere')

    def test_extract_simple_subnet(self):
        s = extract_simple_subnet(self.p, V(0, 1, 1))
        self.assertEqual(s.generator_vector, (1, 0))
        self.assertEqual(s.spaces[CENTER], S((1, 0)))
        self.assertEqual(s.to_json()['generator_vertex'], [0, 1, 1])
        self.assertRaises(PreconditionError, extract_simple_subnet, self.p, V(1, 0, 0))

    def test_is_simple_and_binary(self):
        self.assertIsNone(is_simple(self.p))
        self.assertFalse(is_binary(self.p))

        seed = V(0, 0)
        p = random_simple_net(1, seed, generated_window([seed], 2), 7)
        self.assertEqual(is_simple(p), seed)
        self.assertTrue(is_binary(p))
        self.assertTrue(kernel_profile(p, seed).is_zero())


class TestAnalysisLaws(unittest.TestCase):

    def setUp(self):
        print(("===== Setting up test %s  " % self._testMethodName).ljust(100, '='))

    def tearDown(self):
        print(("===== End test %s  " % self._testMethodName).ljust(100, '='))


    @settings(max_examples=25, deadline=None)
    @given(gen_specs())
    def test_decompose_generated(self, spec):
        p, k = random_semisimple_net(spec)
        result = decompose(p)
        self.assertTrue(result.semisimple, str(spec))
        self.assertEqual(len(result.summands), k)
        self.assertEqual(sorted(s.generator_vertex for s in result.summands), sorted(spec.seeds))
        for s in result.summands:
            self.assertTrue(all(W.dim == 1 for W in s.spaces.values()))

    def test_decompose_largest_generated(self):
        spec = GenSpec(3, [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 9, conjugate=True)
        p, k = random_semisimple_net(spec)
        result = decompose(p)
        self.assertTrue(result.semisimple)
        self.assertEqual(len(result.summands), 4)

    @settings(max_examples=15, deadline=None)
    @given(gen_specs(max_n=2, max_k=3))
    def test_generator_and_window_modes_agree(self, spec):
        p, _ = random_semisimple_net(spec)
        self.assertTrue(check_intersection_property(p, 'generators').passed)
        self.assertTrue(check_intersection_property(p, 'window').passed)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 2 ** 16), st.booleans())
    def test_whole_window_for_n1(self, k, rng_seed, conjugate):
        p, _ = random_semisimple_net(GenSpec.from_random(1, k, rng_seed, conjugate, spread=2))
        report = check_intersection_property(p, 'window')
        self.assertTrue(report.passed)
        self.assertFalse(report.witnesses)
        self.assertFalse(set(c['vertex'] for c in report.coverage) & p.generators)

    @settings(max_examples=15, deadline=None)
    @given(gen_specs())
    def test_kernel_intersections(self, spec):
        p, _ = random_semisimple_net(spec)
        sets = proper_type_sets(p.n)
        for v in p.vertices:
            try:
                profile = kernel_profile(p, v)
            except WindowInsufficient:
                continue
            for I, J in itertools.combinations(sets, 2):
                self.assertEqual(profile[I] & profile[J], profile[I & J])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(2, 3), st.integers(0, 2 ** 16))
    def test_polygon_seeds(self, size, rng_seed):
        rng = random.Random(rng_seed)
        seeds = random_polygon(2, rng, size)
        self.assertTrue(is_polygon(seeds))
        p, k = random_semisimple_net(GenSpec(2, seeds, rng_seed))
        self.assertEqual(k, size)
        self.assertEqual(p.generators, frozenset(hull(seeds)))
        result = decompose(p)
        self.assertTrue(result.semisimple)
        self.assertEqual(len(result.summands), k)

    @settings(max_examples=50, deadline=None)
    @given(gen_specs(max_n=2, max_k=3, conjugate=False))
    def test_conjugated_twins_agree(self, spec):
        p, k = random_semisimple_net(spec)
        twin, _ = random_semisimple_net(GenSpec(spec.n, spec.seeds, spec.seed_rng, spec.window_radius, True))
        self.assertEqual(_verdicts(p), _verdicts(twin))
        first, second = decompose(p), decompose(twin)
        self.assertEqual(len(first.summands), len(second.summands))
        self.assertEqual([s.generator_vertex for s in first.summands], [s.generator_vertex for s in second.summands])

    @settings(max_examples=10, deadline=None)
    @given(st.integers(0, 2 ** 16))
    def test_conjugated_fixture_keeps_violation(self, rng_seed):
        p = fixture_nonsemisimple()
        rng = random.Random(rng_seed)
        twin = conjugate(p, dict((v, random_invertible(2, rng)) for v in p.vertices))
        self.assertEqual(_verdicts(p), _verdicts(twin))
        cert = decompose(twin).violation
        self.assertEqual((cert.vertex, cert.I0, cert.summands), (CENTER, frozenset({1, 2}),
                                                                 [frozenset({0, 2}), frozenset({0, 1})]))
        self.assertTrue(cert.recheck(twin))

    @settings(max_examples=50, deadline=None)
    @given(gen_specs(max_k=3))
    def test_quotients_stay_linked(self, spec):
        p, k = random_semisimple_net(spec)
        v = primitive_vertices(p)[0]
        s = extract_simple_subnet(p, v)
        q = quotient(p, s.spaces)
        self.assertEqual(q.dim, k - 1)
        self.assertTrue(check_weakly_linked(q).passed)
        self.assertTrue(check_linked(q).passed)
        self.assertTrue(check_exact(q).passed)
        if spec.n < 3:
            self.assertTrue(check_intersection_property(q, 'window').passed)

    @settings(max_examples=10, deadline=None)
    @given(gen_specs(max_n=1, max_k=2), st.data())
    def test_preimage_identity(self, spec, data):
        p, _ = random_semisimple_net(spec)
        sets = proper_type_sets(p.n)
        families = data.draw(st.lists(st.sampled_from(sets), min_size=1, max_size=2))
        near = set(p.generators)
        for s in spec.seeds:
            near.update(move_by(s, {t}) for t in range(p.n + 1))
        for u, v in itertools.permutations(sorted(near), 2):
            try:
                lhs, rhs = check_preimage_identity(p, u, v, families)
            except WindowInsufficient:
                continue
            self.assertEqual(lhs, rhs, "{} -> {} with {}".format(u, v, families))

        s = spec.seeds[0]
        self.assertEqual(comap(p, s, set()), RMatrix.identity(p.dims[s]))


if __name__ == "__main__":
    unittest.main()
