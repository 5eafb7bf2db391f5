"""k-values, profiles, invariant edges, the deletion recursion, and bounds."""

from math import comb

import pytest

from corpus import convex, cylindrical, rectilinear, sample_faces
from oracles import (ccw_k_value, far_point, harary_hill_closed_form,
                     winding_orientation)
from shellcert.drawing import (child_drawing, edge_key, trace_faces,
                               vertices_on_face)
from shellcert.kedges import (cumulative_bound_check, edge_side_partition,
                              harary_hill_bound, invariant_edges,
                              k_edge_profile, k_value, max_k, recursion_check,
                              triangle_orientation, vertex_k_profile)
from shellcert.planarize import locate_face, outer_face


class TestHararyHillBound:
    def test_table(self):
        want = (0, 0, 1, 3, 9, 18, 36, 60, 100, 150, 225, 315)
        got = tuple(harary_hill_bound(n) for n in range(3, 15))
        assert got == want

    def test_against_closed_forms(self):
        for n in range(1, 40):
            assert harary_hill_bound(n) == harary_hill_closed_form(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            harary_hill_bound(0)


class TestTriangleOrientation:
    def test_reversal_flips(self):
        d = convex(5)
        fs = trace_faces(d)
        for f in (outer_face(d), 0):
            assert (triangle_orientation(d, fs, f, (0, 1), 2)
                    is not triangle_orientation(d, fs, f, (1, 0), 2))

    def test_matches_winding_oracle_everywhere(self):
        for d in (convex(5), cylindrical(6), rectilinear(7, 2)):
            fs = trace_faces(d)
            face = outer_face(d)
            point = far_point(d)
            for u in d.vertices:
                for v in d.vertices:
                    if u >= v:
                        continue
                    for w in d.vertices:
                        if w in (u, v):
                            continue
                        assert (triangle_orientation(d, fs, face, (u, v), w)
                                is winding_orientation(d, point, u, v, w))

    def test_matches_winding_oracle_on_bounded_faces(self):
        import random
        rng = random.Random(7)
        for d in (convex(5), rectilinear(6, 9)):
            pos = d.geometry.points
            xs = [p[0] for p in pos.values()]
            for _ in range(8):
                point = (rng.randint(min(xs), max(xs)),
                         rng.randint(min(xs), max(xs)))
                try:
                    face = locate_face(d, point)
                except ValueError:
                    continue  # point on the drawing
                fs = trace_faces(d)
                for w in d.vertices:
                    if w in (0, 1):
                        continue
                    assert (triangle_orientation(d, fs, face, (0, 1), w)
                            is winding_orientation(d, point, 0, 1, w))

    def test_hull_edge_witnesses_agree(self):
        d = convex(4)
        fs = trace_faces(d)
        face = outer_face(d)
        assert (triangle_orientation(d, fs, face, (0, 1), 2)
                is triangle_orientation(d, fs, face, (0, 1), 3))

    def test_rejects_bad_arguments(self):
        d = convex(4)
        fs = trace_faces(d)
        with pytest.raises(ValueError):
            triangle_orientation(d, fs, 0, (0, 1), 1)
        with pytest.raises(ValueError):
            triangle_orientation(d, fs, 0, (0, 9), 2)


class TestKValue:
    def test_triangle_edges_are_0_edges(self):
        from test_drawing import triangle_doc
        from shellcert.documents import load_drawing
        d = load_drawing(triangle_doc())
        fs = trace_faces(d)
        for f in fs.face_ids():
            for e in d.edges():
                assert k_value(d, fs, f, e) == 0

    def test_convex_k4(self):
        d = convex(4)
        fs = trace_faces(d)
        face = outer_face(d)
        assert k_value(d, fs, face, (0, 1)) == 0
        assert k_value(d, fs, face, (0, 2)) == 1

    def test_direction_independent(self):
        d = rectilinear(6, 5)
        fs = trace_faces(d)
        for f in sample_faces(d):
            for u, v in d.edges():
                assert k_value(d, fs, f, (u, v)) == k_value(d, fs, f, (v, u))

    def test_matches_ccw_oracle_with_unbounded_face(self):
        for d in (convex(5), convex(8), rectilinear(6, 1), rectilinear(7, 2)):
            fs = trace_faces(d)
            face = outer_face(d)
            for u, v in d.edges():
                assert k_value(d, fs, face, (u, v)) == ccw_k_value(d, u, v)


class TestProfiles:
    def test_triangle_profile(self):
        from test_drawing import triangle_doc
        from shellcert.documents import load_drawing
        d = load_drawing(triangle_doc())
        fs = trace_faces(d)
        for f in fs.face_ids():
            prof = k_edge_profile(d, fs, f)
            assert prof.counts == (3,)
            assert prof.cumulated == (3,)
            assert prof.crossings == 0

    def test_convex_k5_outer(self):
        d = convex(5)
        fs = trace_faces(d)
        prof = k_edge_profile(d, fs, outer_face(d))
        assert prof.counts == (5, 5)
        assert prof.cumulated == (5, 15)
        assert prof.crossings == 5

    def test_crossings_field_counts_crossing_nodes(self):
        for d in (convex(6), cylindrical(8)):
            fs = trace_faces(d)
            prof = k_edge_profile(d, fs, 0)
            assert prof.crossings == d.crossing_count() == len(d.crossings)

    def test_counts_sum_to_edge_count(self):
        for d in (convex(6), cylindrical(7), rectilinear(7, 3)):
            fs = trace_faces(d)
            for f in sample_faces(d):
                prof = k_edge_profile(d, fs, f)
                assert sum(prof.counts) == d.n * (d.n - 1) // 2

    def test_cylindrical_k6_is_optimal(self):
        d = cylindrical(6)
        assert d.crossing_count() == harary_hill_bound(6) == 3

    def test_k_values_bounded(self):
        d = rectilinear(7, 8)
        fs = trace_faces(d)
        prof = k_edge_profile(d, fs, 0)
        assert all(0 <= k <= max_k(7) for k in prof.k_values.values())


class TestVertexProfile:
    def test_face_incident_vertex_closed_form(self):
        # a vertex on the reference face has exactly two i-edges per level,
        # so the cumulated value is 2*C(k+2, 2) for k <= n//2 - 2
        for d in (convex(6), cylindrical(8), rectilinear(7, 13)):
            fs = trace_faces(d)
            for f in sample_faces(d):
                for v in vertices_on_face(d, fs, f):
                    prof = vertex_k_profile(d, fs, f, v)
                    for k in range(d.n // 2 - 1):
                        assert prof[k] == 2 * comb(k + 2, 2)

    def test_off_face_vertex_profile_is_plain_summation(self):
        d = rectilinear(7, 29)
        fs = trace_faces(d)
        for f in sample_faces(d):
            on_face = vertices_on_face(d, fs, f)
            for v in d.vertices:
                if v in on_face:
                    continue
                prof = vertex_k_profile(d, fs, f, v)
                for k in range(max_k(7) + 1):
                    direct = sum(
                        (k + 1 - k_value(d, fs, f, (u, v)))
                        for u in d.vertices if u != v
                        and k_value(d, fs, f, (u, v)) <= k)
                    assert prof[k] == direct

    def test_rotation_order_k_values(self):
        # edges at a face vertex, read counterclockwise from the face,
        # carry k-values min(i, n-2-i)
        for d in (convex(6), cylindrical(6), rectilinear(7, 17)):
            fs = trace_faces(d)
            n = d.n
            for f in sample_faces(d):
                prof = k_edge_profile(d, fs, f)
                for v in vertices_on_face(d, fs, f):
                    rot = d.rotations[v]
                    at = [i for i, x in enumerate(rot)
                          if fs.dart_face[(v, x)] == f]
                    assert len(at) == 1
                    start = at[0]
                    order = [rot[(start + 1 + j) % len(rot)] for j in range(len(rot))]
                    for i, nbr in enumerate(order):
                        e = _edge_of_dart(d, v, nbr)
                        assert prof.k_values[e] == min(i, n - 2 - i)


def _edge_of_dart(d, v, nbr):
    from shellcert.drawing import seg_key
    return d.segment_edge[seg_key(v, nbr)]


class TestInvariantEdges:
    def test_drop_by_at_most_one_and_flags(self):
        d = rectilinear(7, 23)
        fs = trace_faces(d)
        for f in sample_faces(d):
            for v in d.vertices:
                child, _, face_map = child_drawing(d, v)
                report = invariant_edges(d, child, face_map, f, v)
                for e in child.edges():
                    assert report.child_k[e] in (report.parent_k[e],
                                                 report.parent_k[e] - 1)
                    assert report.flags[e] == (report.child_k[e] == report.parent_k[e])
                assert report.invariant_edges == {
                    e for e, keep in report.flags.items() if keep}

    def test_shared_face_lower_bound(self):
        # deleting v leaves at least n//2 - 1 invariant edges at every
        # other vertex w on the same face
        for d in (convex(5), convex(6), cylindrical(8), rectilinear(7, 31)):
            fs = trace_faces(d)
            n = d.n
            for f in sample_faces(d):
                verts = sorted(vertices_on_face(d, fs, f))
                for v in verts:
                    child, _, face_map = child_drawing(d, v)
                    report = invariant_edges(d, child, face_map, f, v)
                    for w in verts:
                        if w == v:
                            continue
                        at_w = sum(1 for e in report.invariant_edges if w in e)
                        assert at_w >= n // 2 - 1


class TestRecursion:
    def test_zero_residual_everywhere(self):
        for d in (convex(5), convex(6), cylindrical(6), cylindrical(8),
                  rectilinear(7, 41), rectilinear(7, 42)):
            fs = trace_faces(d)
            for f in sample_faces(d, want=4):
                for v in d.vertices:
                    for k in range(d.n // 2 - 1):
                        assert recursion_check(d, f, v, k) == 0

    def test_k_range_enforced(self):
        d = convex(6)
        with pytest.raises(ValueError):
            recursion_check(d, 0, 0, 2)


class TestBoundCheck:
    def test_thresholds(self):
        d = convex(10)
        fs = trace_faces(d)
        rows = cumulative_bound_check(d, fs, outer_face(d), 3)
        assert [r.threshold for r in rows] == [3, 12, 30, 60]
        assert all(r.ok for r in rows)

    def test_level0_holds_on_every_face(self):
        for d in (convex(6), cylindrical(7), rectilinear(6, 2)):
            fs = trace_faces(d)
            for f in fs.face_ids():
                rows = cumulative_bound_check(d, fs, f, 0)
                assert rows[0].ok and rows[0].cumulated >= 3

    def test_kmax_range(self):
        d = convex(6)
        fs = trace_faces(d)
        with pytest.raises(ValueError):
            cumulative_bound_check(d, fs, 0, 2)


class TestEdgeSidePartition:
    def test_j_edge_side_counts(self):
        # for u, v both on the face, the curve of uv closed through the face
        # has exactly j or n-2-j vertices on the face's side of the split
        for d in (convex(6), cylindrical(6), rectilinear(7, 3)):
            fs = trace_faces(d)
            n = d.n
            for f in sample_faces(d):
                prof = k_edge_profile(d, fs, f)
                verts = sorted(vertices_on_face(d, fs, f))
                for i, u in enumerate(verts):
                    for v in verts[i + 1:]:
                        j = prof.k_values[edge_key(u, v)]
                        side = edge_side_partition(d, fs, f, u, v)
                        assert len(side) in {j, n - 2 - j}

    def test_requires_face_incidence(self):
        d = convex(5)
        fs = trace_faces(d)
        inner = next(f for f in fs.face_ids()
                     if not vertices_on_face(d, fs, f))
        with pytest.raises(ValueError):
            edge_side_partition(d, fs, inner, 0, 1)
