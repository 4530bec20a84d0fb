"""Cones, polytopes, duals, polars, faces, and normal fans."""

from itertools import combinations, product

import pytest

import oracles
from qtoric import (Cone, Polytope, dual_cone, faces, is_simplicial,
                    is_strongly_convex, multiqubit_polytope, normal_fan,
                    polar, polytope_hull, pos_hull, validate_fan)
from qtoric.geometry import cone_contains, face_cone, intersect_cones


def C(*gens, dim=None):
    return pos_hull(list(gens), dim=dim)


class TestPosHull:
    def test_already_minimal(self):
        c = C((1, 0), (0, 1))
        assert c.generators == ((0, 1), (1, 0))

    def test_redundant_generator_removed(self):
        # (1,1) = (1,0)/2 + (1,2)/2
        c = C((1, 0), (1, 2), (1, 1))
        assert c.generators == ((1, 0), (1, 2))

    def test_empty_hull_is_zero_cone(self):
        c = pos_hull([], dim=2)
        assert c.generators == ()
        assert cone_contains(c, (0, 0))
        assert not cone_contains(c, (1, 0))

    def test_generators_canonicalized_primitive(self):
        c = C((2, 4), (3, 0))
        assert c.generators == ((1, 0), (1, 2))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pos_hull([(1, 0), (1, 2, 3)])

    def test_membership_matches_input_hull(self, rng):
        for _ in range(20):
            dim = rng.choice((2, 3))
            vecs = [tuple(rng.randint(-4, 4) for _ in range(dim))
                    for _ in range(rng.randint(1, 5))]
            vecs = [v for v in vecs if any(v)]
            if not vecs:
                continue
            c = pos_hull(vecs, dim)
            for x in oracles.ball(dim, 3):
                assert cone_contains(c, x) == oracles.cone_contains(vecs, dim, x)


class TestDualCone:
    def test_first_quadrant_self_dual(self):
        c = C((1, 0), (0, 1))
        assert dual_cone(c) == c

    def test_zero_cone_dual_is_everything(self):
        d = dual_cone(pos_hull([], dim=2))
        assert d.generators == ((-1, 0), (0, -1), (0, 1), (1, 0))

    def test_wedge_dual_frozen_value(self):
        # derived via the sign-check oracle below
        d = dual_cone(C((1, 0), (1, 2)))
        assert d.generators == ((0, 1), (2, -1))

    def test_dual_by_inner_product_signs(self):
        c = C((1, 0), (1, 2))
        d = dual_cone(c)
        for x in oracles.ball(2, 5):
            definitional = all(oracles.dot(g, x) >= 0 for g in c.generators)
            assert oracles.cone_contains(d.generators, 2, x) == definitional

    def test_double_dual_involution(self, rng):
        for _ in range(25):
            dim = rng.choice((2, 3))
            vecs = [tuple(rng.randint(-4, 4) for _ in range(dim))
                    for _ in range(rng.randint(1, 5))]
            vecs = [v for v in vecs if any(v)]
            if not vecs:
                continue
            c = pos_hull(vecs, dim)
            if not is_strongly_convex(c):
                continue
            assert dual_cone(dual_cone(c)) == c

    def test_membership_consistency_via_dual(self, rng):
        # x in pos(V) by exact LP  <=>  <x,y> >= 0 for all dual generators y
        for _ in range(8):
            dim = rng.choice((2, 3))
            vecs = [tuple(rng.randint(-3, 3) for _ in range(dim))
                    for _ in range(rng.randint(2, 4))]
            vecs = [v for v in vecs if any(v)]
            if not vecs:
                continue
            c = pos_hull(vecs, dim)
            d = dual_cone(c)
            for x in oracles.ball(dim, 3):
                lp = cone_contains(c, x)
                signs = all(oracles.dot(x, y) >= 0 for y in d.generators)
                assert lp == signs


class TestPolar:
    def test_cube_polar_is_octahedron(self):
        cross = polytope_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                               (0, 0, 1), (0, 0, -1)])
        assert polar(multiqubit_polytope(3)) == cross

    def test_square_polar_by_inequalities(self):
        square = multiqubit_polytope(2)
        p = polar(square)
        assert p.vertices == ((-1, 0), (0, -1), (0, 1), (1, 0))
        for y in p.vertices:
            assert all(oracles.dot(x, y) >= -1 for x in square.vertices)
        # lattice points just outside fail the defining inequality
        for y in [(1, 1), (-1, 1), (2, 0)]:
            assert any(oracles.dot(x, y) < -1 for x in square.vertices)

    def test_segment_self_polar(self):
        seg = polytope_hull([(-1,), (1,)])
        assert polar(seg) == seg

    def test_polar_involution(self):
        for m in (1, 2, 3, 4):
            cube = multiqubit_polytope(m)
            assert polar(polar(cube)) == cube

    def test_origin_not_interior_rejected(self):
        with pytest.raises(ValueError, match="interior"):
            polar(polytope_hull([(0,), (2,)]))
        with pytest.raises(ValueError, match="interior"):
            polar(polytope_hull([(0, 0), (1, 0), (0, 1)]))

    def test_non_lattice_polar_rejected(self):
        # facet x + y <= 2 gives the polar a half-integer vertex
        p = polytope_hull([(2, 0), (0, 2), (-1, 0), (0, -1)])
        with pytest.raises(ValueError, match="lattice"):
            polar(p)


class TestFaces:
    def test_square_faces_against_hyperplane_oracle(self):
        square = multiqubit_polytope(2)
        got = {frozenset(f.indices) for f in faces(square)}
        assert got == oracles.supporting_faces(square.vertices, 2)
        assert len(faces(square)) == 9

    def test_cube_face_count(self):
        cube = multiqubit_polytope(3)
        fs = faces(cube)
        assert len(fs) == 27
        by_dim = {}
        for f in fs:
            by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
        assert by_dim == {0: 8, 1: 12, 2: 6, 3: 1}
        assert {frozenset(f.indices) for f in fs} == \
            oracles.supporting_faces(cube.vertices, 3)

    def test_quadrant_cone_faces(self):
        c = C((1, 0), (0, 1))
        fs = faces(c)
        assert [(f.dim, f.indices) for f in fs] == \
            [(0, ()), (1, (0,)), (1, (1,)), (2, (0, 1))]

    def test_line_cone_has_only_improper_face(self):
        c = C((1, 0), (-1, 0))
        fs = faces(c)
        assert [(f.dim, f.indices) for f in fs] == [(1, (0, 1))]

    def test_octahedron_faces_against_oracle(self):
        octa = polytope_hull([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
                              (0, 0, 1), (0, 0, -1)])
        fs = faces(octa)
        assert len(fs) == 27
        assert {frozenset(f.indices) for f in fs} == \
            oracles.supporting_faces(octa.vertices, 3)

    def test_random_polytope_faces_match_hyperplane_oracle(self, rng):
        done = 0
        while done < 8:
            dim = 2 if done < 5 else 3
            pts = [tuple(rng.randint(-3, 3) for _ in range(dim))
                   for _ in range(rng.randint(dim + 1, dim + 4))]
            p = polytope_hull(pts, dim)
            if p.rank < dim:
                continue
            got = {frozenset(f.indices) for f in faces(p)}
            assert got == oracles.polytope_faces(p.vertices, dim), p.vertices
            done += 1

    def test_lower_dimensional_polytope_faces(self):
        # a segment embedded in 3-D still has two vertices and itself
        seg = polytope_hull([(0, 0, 0), (2, 2, 0), (1, 1, 0)])
        assert seg.vertices == ((0, 0, 0), (2, 2, 0))
        assert [(f.dim, f.indices) for f in faces(seg)] == \
            [(0, (0,)), (0, (1,)), (1, (0, 1))]

    def test_face_lattice_closed_under_intersection(self):
        for obj in (multiqubit_polytope(3), C((1, 0), (1, 2)),
                    polytope_hull([(0, 0), (2, 0), (0, 3), (2, 3)])):
            sets = {frozenset(f.indices) for f in faces(obj)}
            for a, b in combinations(sets, 2):
                inter = a & b
                if inter or isinstance(obj, Cone):
                    assert inter in sets


class TestNormalFan:
    def test_cube_normal_fan_is_octant_fan(self):
        fan = normal_fan(multiqubit_polytope(3))
        maximal = fan.maximal_cones()
        assert len(maximal) == 8
        octants = {tuple(sorted(tuple(s * int(i == a) for i in range(3))
                                for a, s in enumerate(signs)))
                   for signs in product((1, -1), repeat=3)}
        assert {c.generators for c in maximal} == octants

    def test_simplex_normal_fan_is_projective_fan(self):
        from qtoric import projective_space_fan
        for n in (1, 2, 3):
            simplex = polytope_hull(
                [tuple(0 for _ in range(n))] +
                [tuple(-int(i == j) for i in range(n)) for j in range(n)])
            assert normal_fan(simplex) == projective_space_fan(n)

    def test_segment_fan(self):
        fan = normal_fan(polytope_hull([(-1,), (1,)]))
        assert [c.generators for c in fan.cones] == [(), ((-1,),), ((1,),)]

    def test_lower_dimensional_rejected(self):
        with pytest.raises(ValueError, match="full-dimensional"):
            normal_fan(polytope_hull([(0, 0), (1, 0)]))

    def test_completeness_on_ball(self):
        for p in (multiqubit_polytope(2), multiqubit_polytope(3),
                  polytope_hull([(0, 0), (-1, 0), (0, -1)])):
            fan = normal_fan(p)
            maximal = fan.maximal_cones()
            for x in oracles.ball(p.dim, 5):
                assert any(oracles.cone_contains(c.generators, c.dim, x)
                           for c in maximal)

    def test_normal_cone_dimensions(self):
        p = multiqubit_polytope(3)
        fan = normal_fan(p)
        dims = sorted(c.rank for c in fan.cones)
        # one zero cone (improper face), 6 rays (facets), 12 2-D (edges), 8 3-D
        assert dims == [0] + [1] * 6 + [2] * 12 + [3] * 8

    def test_normal_cone_dimension_formula(self):
        # dim N(F) = n - dim F, checked face by face
        from qtoric.geometry import _homog_dual_rays
        for p in (multiqubit_polytope(2), multiqubit_polytope(3),
                  polytope_hull([(0, 0), (-1, 0), (0, -1)])):
            facet_data = []
            for r in _homog_dual_rays(p):
                c, y = r[0], r[1:]
                if any(x != 0 for x in y):
                    tight = frozenset(i for i, v in enumerate(p.vertices)
                                      if c + oracles.dot(y, v) == 0)
                    facet_data.append((tight, tuple(-x for x in y)))
            for f in faces(p):
                fs = frozenset(f.indices)
                normals = [n for tight, n in facet_data if fs <= tight]
                ncone = pos_hull(normals, p.dim) if normals \
                    else pos_hull([], dim=p.dim)
                assert ncone.rank == p.dim - f.dim

    def test_validate_fan_on_small_normal_fans(self):
        validate_fan(normal_fan(multiqubit_polytope(2)))
        validate_fan(normal_fan(polytope_hull([(0, 0), (-1, 0), (0, -1)])))

    def test_random_polygon_fans_match_edge_walk_oracle(self, rng):
        done = 0
        while done < 10:
            pts = [tuple(rng.randint(-5, 5) for _ in range(2))
                   for _ in range(rng.randint(3, 8))]
            p = polytope_hull(pts, 2)
            if p.rank < 2:
                continue
            maximal = {c.generators for c in normal_fan(p).maximal_cones()}
            assert maximal == oracles.polygon_normal_fan_maximal(p.vertices), \
                p.vertices
            done += 1

    def test_random_polytope_fans_are_valid_and_complete(self, rng):
        done = 0
        while done < 5:
            dim = 2 if done < 4 else 3
            pts = [tuple(rng.randint(-4, 4) for _ in range(dim))
                   for _ in range(rng.randint(dim + 1, dim + 4))]
            p = polytope_hull(pts, dim)
            if p.rank < dim:
                continue
            fan = normal_fan(p)
            validate_fan(fan)
            for x in oracles.ball(dim, 3):
                assert any(oracles.cone_contains(c.generators, dim, x)
                           for c in fan.maximal_cones())
            done += 1


class TestPredicates:
    def test_strongly_convex(self):
        assert is_strongly_convex(C((1, 0), (0, 1)))
        assert not is_strongly_convex(C((1, 0), (-1, 0)))
        assert is_strongly_convex(pos_hull([], dim=2))
        assert not is_strongly_convex(C((1, 0), (-1, 1), (0, -1)))

    def test_simplicial(self):
        assert is_simplicial(C((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert not is_simplicial(C((1, 0), (0, 1), (-1, -1)))
        assert is_simplicial(C((1, 0), (1, 2)))
        assert is_simplicial(pos_hull([], dim=2))

    def test_intersect_cones(self):
        a = C((1, 0), (1, 2))
        b = C((1, 2), (-1, 0))
        assert intersect_cones(a, b) == C((1, 2))
        assert intersect_cones(a, C((-1, -1), (0, -1))).generators == ()


class TestValidateFanRejections:
    def test_missing_faces_detected(self):
        from qtoric import make_fan
        fan = make_fan([C((1, 0), (0, 1))], 2)
        with pytest.raises(ValueError, match="closed under faces"):
            validate_fan(fan)

    def test_bad_intersection_detected(self):
        from qtoric import fan_from_maximal, make_fan
        a = C((1, 0), (0, 1))
        b = C((1, 1), (-1, 1))
        cones = list(fan_from_maximal([a]).cones) + \
            list(fan_from_maximal([b]).cones)
        with pytest.raises(ValueError, match="not a common face"):
            validate_fan(make_fan(cones, 2))


class TestCanonicalForms:
    def test_cone_equality_is_canonical(self):
        assert C((2, 0), (1, 2), (1, 1)) == C((1, 0), (1, 2))

    def test_invalid_direct_construction_rejected(self):
        with pytest.raises(ValueError):
            Cone(2, ((2, 0),))  # not primitive
        with pytest.raises(ValueError):
            Cone(2, ((1, 0), (1, 0)))  # duplicate
        with pytest.raises(ValueError):
            Polytope(2, ())  # empty

    def test_polytope_hull_drops_interior_points(self):
        p = polytope_hull([(0, 0), (1, 1), (2, 2), (0, 2), (2, 0)])
        assert p.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))

    def test_face_cone_roundtrip(self):
        c = C((1, 0), (1, 2))
        ray_faces = [f for f in faces(c) if f.dim == 1]
        assert {face_cone(f) for f in ray_faces} == {C((1, 0)), C((1, 2))}
