"""Shared, cached test fixtures: reference drawings reused across modules."""

from functools import lru_cache

from shellcert.drawing import trace_faces, vertices_on_face
from shellcert.generators import (convex_drawing, cylindrical_drawing,
                                  random_rectilinear)
from shellcert.planarize import outer_face


@lru_cache(maxsize=None)
def convex(n):
    return convex_drawing(n)


@lru_cache(maxsize=None)
def cylindrical(n):
    return cylindrical_drawing(n)


@lru_cache(maxsize=None)
def rectilinear(n, seed):
    return random_rectilinear(n, seed)


def sample_faces(drawing, want=3):
    """A deterministic face sample: the unbounded face plus the smallest
    face ids, at least `want` faces where the drawing has them."""
    faces = trace_faces(drawing)
    chosen = [outer_face(drawing)]
    for f in faces.face_ids():
        if len(chosen) >= want:
            break
        if f not in chosen:
            chosen.append(f)
    return chosen


def faces_with_vertices(drawing, minimum=2):
    faces = trace_faces(drawing)
    return [f for f in faces.face_ids()
            if len(vertices_on_face(drawing, faces, f)) >= minimum]
