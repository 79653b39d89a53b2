import itertools
import random
import unittest

from hypothesis import given, settings, strategies as st

from linnet.quiver import (Vertex, MultidegreeFrame, arrow_target, arrow_source, ball, canonical_path, cone_contains,
                           delta, distance, extend_polygon, hull, is_neighbor, is_polygon, move_by, normalize,
                           orient_polygon, polygon_from_partition, proper_type_sets, required_window)
from linnet.gen import random_partition, random_polygon
from linnet.util import NetError


def V(*twists):
    return Vertex(twists)

@st.composite
def vertex_sets(draw, max_size=5):
    n = draw(st.integers(1, 3))
    raw = draw(st.lists(st.lists(st.integers(0, 3), min_size=n + 1, max_size=n + 1), min_size=1, max_size=max_size))
    return [normalize(r) for r in raw]

def brute_hull(H):
    """ membership straight from the definition, over a generously enlarged box """
    n = H[0].n
    lo = [min(z[i] - z[0] for z in H) - 2 for i in range(1, n + 1)]
    hi = [max(z[i] - z[0] for z in H) + 2 for i in range(1, n + 1)]
    res = set()
    for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        v = normalize((0,) + x)
        if all(any(delta(z, v)[a] == 0 for z in H) for a in range(n + 1)):
            res.add(v)
    return res


class TestQuiver(unittest.TestCase):

    def setUp(self):
        print(("===== Setting up test %s  " % self._testMethodName).ljust(100, '='))
        self.triangle = [V(0, 0, 0), V(1, 0, 0), V(1, 1, 0)]
        print(("===== Starting test %s  " % self._testMethodName).ljust(100, '='))

    def tearDown(self):
        print(("===== End test %s  " % self._testMethodName).ljust(100, '='))


    def test_vertex(self):
        self.assertEqual(V(0, 1, 1).n, 2)
        self.assertEqual(str(V(0, 1, 1)), "(0,1,1)")
        self.assertRaises(NetError, Vertex, (1, 1, 2))
        self.assertRaises(NetError, Vertex, (0,))
        self.assertRaises(NetError, Vertex, (0, 1.5))
        self.assertEqual(normalize((3, 4, 3)), V(0, 1, 0))

    def test_arrows(self):
        self.assertEqual(arrow_target(V(0, 0, 0), 1), V(0, 1, 0))
        self.assertEqual(arrow_target(V(1, 1, 0), 2), V(0, 0, 0))
        self.assertEqual(arrow_source(V(0, 0, 0), 2), V(1, 1, 0))
        for t in range(3):
            self.assertEqual(arrow_target(arrow_source(V(0, 1, 1), t), t), V(0, 1, 1))
        self.assertRaises(NetError, arrow_target, V(0, 0, 0), 3)

    def test_delta_and_move(self):
        self.assertEqual(delta(V(0, 0, 0), V(1, 0, 1)), (1, 0, 1))
        self.assertEqual(delta(V(1, 0, 0), V(0, 0, 0)), (0, 1, 1))
        self.assertEqual(distance(V(1, 0, 0), V(0, 0, 0)), 2)
        self.assertEqual(delta(V(0, 0, 0), V(0, 0, 0)).length, 0)
        self.assertTrue(delta(V(0, 0, 0), V(2, 0, 1)).is_admissible)
        self.assertEqual(move_by(V(0, 0, 0), {1, 2}), V(0, 1, 1))
        self.assertEqual(move_by(V(0, 0, 0), set()), V(0, 0, 0))
        self.assertEqual(move_by(V(0, 0, 0), {0, 1, 2}), V(0, 0, 0))

        self.assertTrue(is_neighbor(V(0, 0, 0), V(1, 0, 1)))
        self.assertFalse(is_neighbor(V(0, 0, 0), V(2, 0, 0)))
        self.assertFalse(is_neighbor(V(0, 0, 0), V(0, 0, 0)))

    def test_type_set_order(self):
        sets = proper_type_sets(2, nonempty=True)
        self.assertEqual(sets, [frozenset(s) for s in [{2}, {1}, {1, 2}, {0}, {0, 2}, {0, 1}]])
        self.assertEqual(proper_type_sets(2)[0], frozenset())
        self.assertEqual(len(proper_type_sets(3)), 15)

    def test_cone_and_paths(self):
        self.assertTrue(cone_contains(V(0, 0, 0), {0, 2}, V(1, 0, 1)))
        self.assertFalse(cone_contains(V(0, 0, 0), {0}, V(1, 0, 1)))
        self.assertTrue(cone_contains(V(0, 0, 0), {0, 1, 2}, V(5, 0, 2)))
        steps = canonical_path(V(0, 0, 0), delta(V(0, 0, 0), V(1, 0, 1)))
        self.assertEqual(steps, [(V(0, 0, 0), 0), (V(1, 0, 0), 2)])

    def test_hull(self):
        self.assertEqual(hull([V(0, 1, 1)]), {V(0, 1, 1)})
        self.assertEqual(hull([V(0, 0), V(3, 0)]), {V(0, 0), V(1, 0), V(2, 0), V(3, 0)})
        self.assertEqual(hull(self.triangle), set(self.triangle))
        self.assertRaises(NetError, hull, [])

    def test_ball_and_window(self):
        self.assertEqual(ball([V(0, 0)], 1), {V(0, 0), V(1, 0), V(0, 1)})
        self.assertEqual(len(ball([V(0, 0)], 2)), 5)
        self.assertEqual(ball([V(0, 0, 0)], 0), {V(0, 0, 0)})
        window = required_window([V(0, 0, 0)])
        self.assertIn(V(0, 2, 1), window)
        self.assertTrue(all(distance(V(0, 0, 0), w) <= 3 for w in window))

    def test_polygons(self):
        self.assertTrue(is_polygon(self.triangle))
        self.assertFalse(is_polygon([V(0, 0, 0), V(2, 0, 0)]))

        ordering, blocks = orient_polygon(self.triangle, V(0, 0, 0))
        self.assertEqual(ordering, self.triangle)
        self.assertEqual(blocks, [{0}, {1}, {2}])
        ordering, blocks = orient_polygon(self.triangle, V(1, 1, 0))
        self.assertEqual(ordering, [V(1, 1, 0), V(0, 0, 0), V(1, 0, 0)])
        self.assertEqual(blocks, [{2}, {0}, {1}])

        self.assertEqual(orient_polygon([V(0, 1, 1)], V(0, 1, 1)), ([V(0, 1, 1)], [{0, 1, 2}]))
        self.assertEqual(polygon_from_partition(V(0, 0, 0), [{0}, {1}, {2}]), self.triangle)
        self.assertRaises(NetError, polygon_from_partition, V(0, 0, 0), [{0}, {0, 1, 2}])

        self.assertEqual(extend_polygon([V(0, 0, 0), V(1, 0, 0)]), set(self.triangle))
        self.assertRaises(NetError, extend_polygon, self.triangle)

    def test_multidegree_frame(self):
        frame = MultidegreeFrame((2, 2, 2), [(-2, 1, 1), (1, -2, 1), (1, 1, -2)])
        self.assertEqual(frame.to_twists((4, 1, 1)), V(0, 1, 1))
        self.assertEqual(frame.to_twists((2, 2, 2)), V(0, 0, 0))
        self.assertEqual(frame.to_twists((1, 4, 1)), V(1, 0, 1))
        self.assertEqual(frame.to_multidegree(V(1, 1, 0)), (1, 1, 4))
        self.assertRaises(NetError, frame.to_twists, (3, 2, 2))
        self.assertRaises(NetError, MultidegreeFrame, (0, 0), [(1, -1), (1, -1)])
        for v in ball([V(0, 0, 0)], 3):
            self.assertEqual(frame.to_twists(frame.to_multidegree(v)), v)


class TestQuiverLaws(unittest.TestCase):

    def setUp(self):
        print(("===== Setting up test %s  " % self._testMethodName).ljust(100, '='))

    def tearDown(self):
        print(("===== End test %s  " % self._testMethodName).ljust(100, '='))


    @settings(max_examples=200, deadline=None)
    @given(vertex_sets())
    def test_hull_laws(self, H):
        P = hull(H)
        self.assertTrue(set(H) <= P)
        self.assertEqual(hull(P), P)
        self.assertEqual(brute_hull(H), P)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 2 ** 32), st.data())
    def test_orient_polygon_recovers_partition(self, n, seed, data):
        rng = random.Random(seed)
        size = data.draw(st.integers(1, n + 1))
        blocks = random_partition(n, rng, size)
        start = normalize([rng.randint(0, 2) for _ in range(n + 1)])
        polygon = polygon_from_partition(start, blocks)
        self.assertEqual(hull(polygon), set(polygon))
        for i, v in enumerate(polygon):
            ordering, found = orient_polygon(polygon, v)
            self.assertEqual(ordering, polygon[i:] + polygon[:i])
            self.assertEqual(found, blocks[i:] + blocks[:i])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 3), st.integers(0, 2 ** 32))
    def test_random_polygon_extends(self, n, seed):
        rng = random.Random(seed)
        size = rng.randint(1, n)
        polygon = random_polygon(n, rng, size)
        self.assertTrue(is_polygon(polygon))
        bigger = extend_polygon(polygon)
        self.assertEqual(len(bigger), size + 1)
        self.assertTrue(is_polygon(bigger))
        self.assertTrue(set(polygon) <= bigger)


if __name__ == "__main__":
    unittest.main()
