"""Simple sequences, seq-shellability and bishellability.

A simple sequence of a vertex v (with respect to a reference face F) is a
sequence of distinct other vertices that can be deleted one by one, each
incident to the face containing F at its turn. A drawing is k-seq-shellable
if some face F admits vertices a_0..a_k, each a_i incident to the face
containing F after deleting a_0..a_{i-1} and owning a simple sequence of
length k-i+1 that avoids a_0..a_i. Bishellability asks instead for two
deletion sequences a_0..a_s and b_0..b_s with index-wise disjointness
(a_i != b_j whenever i + j <= s).

Deciders run complete depth-first searches over faces (ascending id) and
candidate vertices (ascending id), so the emitted certificate is
deterministic. Face identity across deletions is tracked exclusively
through face maps, never by boundary similarity. Searches memoize failures
on the frozen set of removed vertices where that is sound (the single-chain
searches); the interleaved bishellability search keeps plain backtracking
because its disjointness constraint depends on positions, not sets.

Drawings with three vertices cannot be shrunk further, but every vertex of
such a drawing (and of the conceptual one- and two-vertex subdrawings) is
incident to every face, so the searches switch to a trivial "free" regime
there instead of deleting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .drawing import Drawing, child_drawing, trace_faces, vertices_on_face
from .errors import CertificateMismatchError, ShellcertError


@dataclass(frozen=True)
class SimpleSequence:
    owner: int
    vertices: tuple


@dataclass(frozen=True)
class SeqShellCertificate:
    """Witness of k-seq-shellability: sequences[i] is the simple sequence
    of vertices[i], of length k - i + 1."""

    face: int
    vertices: tuple
    sequences: tuple

    @property
    def k(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class BishellCertificate:
    """Witness of s-bishellability: two deletion sequences of length s + 1."""

    face: int
    a_sequence: tuple
    b_sequence: tuple

    @property
    def s(self) -> int:
        return len(self.a_sequence) - 1


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    violations: tuple

    def __bool__(self) -> bool:
        return self.ok


# -- deletion-chain states -------------------------------------------------
#
# A state is ("d", drawing, faces, face) while at least four vertices are
# left, or ("free", available) afterwards, where every remaining vertex is
# incident to every face.

def _initial_state(drawing, faces, face):
    return ("d", drawing, faces, face)


def _state_candidates(state):
    if state[0] == "free":
        return sorted(state[1])
    _, drawing, faces, face = state
    return sorted(vertices_on_face(drawing, faces, face))


def _state_vertices(state):
    if state[0] == "free":
        return state[1]
    return state[1].vertex_set


def _state_advance(state, v):
    if state[0] == "free":
        return ("free", state[1] - {v})
    _, drawing, faces, face = state
    if drawing.n == 3:
        return ("free", drawing.vertex_set - {v})
    child, child_faces, face_map = child_drawing(drawing, v)
    return ("d", child, child_faces, face_map[face])


# -- simple sequences ------------------------------------------------------

def find_simple_sequence(drawing: Drawing, faces, ref_face: int, v: int,
                         length: int, excluded=()) -> SimpleSequence | None:
    """Complete backtracking search for a simple sequence of v.

    Returns the lexicographically smallest sequence of the requested length
    whose members avoid ``excluded``, or None if none exists.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    if v not in drawing.vertex_set:
        raise ValueError(f"{v} is not a vertex of the drawing")
    if v not in vertices_on_face(drawing, faces, ref_face):
        raise ValueError(f"vertex {v} is not incident to face {ref_face}")
    excluded = frozenset(excluded)
    pool = drawing.vertex_set - excluded - {v}
    if length > len(pool):
        return None
    seq = _simple_search(_initial_state(drawing, faces, ref_face),
                         v, length, excluded, frozenset(), {})
    if seq is None:
        return None
    return SimpleSequence(v, seq)


def _simple_search(state, owner, length, excluded, used, memo):
    remaining = length - len(used)
    if remaining == 0:
        return ()
    if used in memo:
        return None
    for u in _state_candidates(state):
        if u == owner or u in excluded or u in used:
            continue
        if remaining == 1:
            return (u,)
        rest = _simple_search(_state_advance(state, u), owner, length,
                              excluded, used | {u}, memo)
        if rest is not None:
            return (u,) + rest
    memo[used] = None
    return None


def _simple_in_state(state, owner, length, excluded=frozenset()):
    """Simple-sequence search from an arbitrary chain state."""
    if state[0] == "free":
        pool = sorted(state[1] - {owner} - excluded)
        if length > len(pool):
            return None
        return tuple(pool[:length])
    _, drawing, faces, face = state
    if owner not in vertices_on_face(drawing, faces, face):
        return None
    pool = drawing.vertex_set - excluded - {owner}
    if length > len(pool):
        return None
    return _simple_search(state, owner, length, excluded, frozenset(), {})


# -- seq-shellability ------------------------------------------------------

def decide_seq_shellable(drawing: Drawing, k: int,
                         face_filter: int | None = None) -> SeqShellCertificate | None:
    """Complete search for a k-seq-shellability certificate.

    Scans reference faces in ascending id (or only ``face_filter``); the
    returned certificate always verifies.
    """
    if not 0 <= k <= drawing.n - 2:
        raise ValueError(f"k must lie in 0..{drawing.n - 2}")
    faces = trace_faces(drawing)
    face_ids = _face_selection(faces, face_filter)
    for face in face_ids:
        found = _seq_search(_initial_state(drawing, faces, face), k, frozenset(), {})
        if found is not None:
            cert = SeqShellCertificate(face,
                                       tuple(a for a, _ in found),
                                       tuple(s for _, s in found))
            result = verify_seq_certificate(drawing, cert)
            if not result:
                raise ShellcertError(
                    f"internal error: emitted certificate failed: {result.violations}")
            return cert
    return None


def _seq_search(state, k, removed, memo):
    if removed in memo:
        return None
    for a in _state_candidates(state):
        seq = _simple_in_state(state, a, k + 1)
        if seq is None:
            continue
        if k == 0:
            return ((a, seq),)
        rest = _seq_search(_state_advance(state, a), k - 1, removed | {a}, memo)
        if rest is not None:
            return ((a, seq),) + rest
    memo[removed] = None
    return None


# -- bishellability --------------------------------------------------------

def decide_bishellable(drawing: Drawing, s: int,
                       face_filter: int | None = None) -> BishellCertificate | None:
    """Complete search for an s-bishellability certificate.

    The two deletion chains are explored interleaved (a_0, b_0, a_1, ...);
    the disjointness constraint a_i != b_j for i + j <= s prunes choices as
    soon as they are placed.
    """
    if not 0 <= s <= drawing.n - 2:
        raise ValueError(f"s must lie in 0..{drawing.n - 2}")
    faces = trace_faces(drawing)
    for face in _face_selection(faces, face_filter):
        start = _initial_state(drawing, faces, face)
        found = _bishell_search(start, start, s, (), ())
        if found is not None:
            cert = BishellCertificate(face, found[0], found[1])
            result = verify_bishell_certificate(drawing, cert)
            if not result:
                raise ShellcertError(
                    f"internal error: emitted certificate failed: {result.violations}")
            return cert
    return None


def _bishell_search(a_state, b_state, s, a_seq, b_seq):
    if len(a_seq) == s + 1 and len(b_seq) == s + 1:
        return (a_seq, b_seq)
    if len(a_seq) <= len(b_seq):
        i = len(a_seq)
        forbidden = set(b_seq[: s - i + 1])
        for a in _state_candidates(a_state):
            if a in forbidden:
                continue
            next_state = _state_advance(a_state, a) if i < s else a_state
            found = _bishell_search(next_state, b_state, s, a_seq + (a,), b_seq)
            if found is not None:
                return found
    else:
        j = len(b_seq)
        forbidden = set(a_seq[: s - j + 1])
        for b in _state_candidates(b_state):
            if b in forbidden:
                continue
            next_state = _state_advance(b_state, b) if j < s else b_state
            found = _bishell_search(a_state, next_state, s, a_seq, b_seq + (b,))
            if found is not None:
                return found
    return None


def _face_selection(faces, face_filter):
    if face_filter is None:
        return range(len(faces.faces))
    if not 0 <= face_filter < len(faces.faces):
        raise ValueError(f"face {face_filter} does not exist")
    return (face_filter,)


# -- verification ----------------------------------------------------------

def verify_seq_certificate(drawing: Drawing, cert: SeqShellCertificate) -> VerificationResult:
    """Re-execute every incidence and exclusion check from scratch.

    Unknown vertex or face references raise CertificateMismatchError;
    violated conditions yield an unverified result with the trace naming
    each failed condition.
    """
    faces = trace_faces(drawing)
    _check_refs(drawing, faces, cert.face,
                tuple(cert.vertices) + tuple(x for s in cert.sequences for x in s))
    if len(cert.vertices) < 1 or len(cert.sequences) != len(cert.vertices):
        raise CertificateMismatchError(
            "certificate must carry one simple sequence per vertex")

    violations = []
    k = cert.k
    if len(set(cert.vertices)) != len(cert.vertices):
        violations.append("vertex sequence repeats a vertex")
    state = _initial_state(drawing, faces, cert.face)
    for i, (a, seq) in enumerate(zip(cert.vertices, cert.sequences)):
        where = (f"a_{i} = {a}")
        if a not in _state_vertices(state):
            violations.append(f"{where} was already deleted")
            break
        if a not in _state_candidates(state):
            violations.append(
                f"{where} is not incident to the face containing the reference face")
        violations.extend(_check_simple(state, a, seq, set(cert.vertices[: i + 1]),
                                        k - i + 1, f"S_{i}"))
        if i < k:
            state = _state_advance(state, a)
    return VerificationResult(not violations, tuple(violations))


def _check_simple(state, owner, seq, banned, want_len, label):
    """Conditions for ``seq`` to be a simple sequence of ``owner`` avoiding
    ``banned``, checked in the drawing/face of ``state``."""
    violations = []
    if len(seq) != want_len:
        violations.append(f"{label} must have length {want_len}, has {len(seq)}")
    if len(set(seq)) != len(seq):
        violations.append(f"{label} repeats a vertex")
    if owner in seq:
        violations.append(f"{label} contains its owner {owner}")
    hits = sorted(set(seq) & banned)
    if hits:
        violations.append(f"{label} contains excluded vertices {hits}")
    for j, u in enumerate(seq):
        if u not in _state_vertices(state):
            violations.append(f"{label}[{j}] = {u} is not present in the subdrawing")
            break
        if u not in _state_candidates(state):
            violations.append(
                f"{label}[{j}] = {u} is not incident to the face containing "
                f"the reference face")
        if j < len(seq) - 1:
            state = _state_advance(state, u)
    return violations


def verify_bishell_certificate(drawing: Drawing, cert: BishellCertificate) -> VerificationResult:
    faces = trace_faces(drawing)
    _check_refs(drawing, faces, cert.face,
                tuple(cert.a_sequence) + tuple(cert.b_sequence))
    if len(cert.a_sequence) < 1 or len(cert.a_sequence) != len(cert.b_sequence):
        raise CertificateMismatchError(
            "certificate must carry two sequences of equal length")

    violations = []
    s = cert.s
    for name, seq in (("a", cert.a_sequence), ("b", cert.b_sequence)):
        if len(set(seq)) != len(seq):
            violations.append(f"{name}-sequence repeats a vertex")
        state = _initial_state(drawing, faces, cert.face)
        for i, x in enumerate(seq):
            if x not in _state_vertices(state):
                violations.append(f"{name}_{i} = {x} was already deleted")
                break
            if x not in _state_candidates(state):
                violations.append(
                    f"{name}_{i} = {x} is not incident to the face containing "
                    f"the reference face")
            if i < s:
                state = _state_advance(state, x)
    for i, a in enumerate(cert.a_sequence):
        for j, b in enumerate(cert.b_sequence):
            if i + j <= s and a == b:
                violations.append(
                    f"disjointness fails: a_{i} = b_{j} = {a} with i + j <= s")
    return VerificationResult(not violations, tuple(violations))


def _check_refs(drawing, faces, face, vertices):
    if not isinstance(face, int) or not 0 <= face < len(faces.faces):
        raise CertificateMismatchError(f"face {face!r} does not exist in the drawing")
    unknown = sorted(set(vertices) - drawing.vertex_set)
    if unknown:
        raise CertificateMismatchError(f"unknown vertices {unknown}")


# -- transformation --------------------------------------------------------

def bishell_to_seq(cert: BishellCertificate) -> SeqShellCertificate:
    """Reuse a bishellability witness as a seq-shellability witness: keep
    the a-sequence and hand prefixes of the b-sequence to its members,
    sequences[i] being the first s - i + 1 entries of b."""
    s = cert.s
    if len(cert.b_sequence) != s + 1:
        raise ValueError("certificate sequences must have equal length")
    sequences = tuple(tuple(cert.b_sequence[: s - i + 1]) for i in range(s + 1))
    return SeqShellCertificate(cert.face, tuple(cert.a_sequence), sequences)
