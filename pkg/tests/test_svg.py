"""SVG rendering."""

import pytest

from corpus import convex, cylindrical
from shellcert.documents import drawing_to_document, load_drawing
from shellcert.errors import CapabilityError
from shellcert.planarize import outer_face
from shellcert.shellability import decide_seq_shellable
from shellcert.svg import render_svg


def test_basic_render_counts():
    d = cylindrical(6)
    text = render_svg(d)
    assert text.startswith("<svg ")
    assert text.count("<polyline") == 15  # one per edge
    assert text.count('fill="white" stroke="#666"') == 3  # crossing marks
    assert text.count("<circle") == 6 + 3  # vertex dots + crossing marks


def test_deterministic():
    d = convex(5)
    assert render_svg(d) == render_svg(d)


def test_labels_and_highlight():
    d = cylindrical(6)
    face = outer_face(d)
    text = render_svg(d, face_highlight=face, label_face=face)
    assert "<text" in text
    assert 'stroke="#d81b60"' in text


def test_certificate_overlay():
    d = convex(8)
    cert = decide_seq_shellable(d, 2)
    text = render_svg(d, certificate=cert)
    assert text.count("<rect") >= 1 + len(set(cert.vertices))


def test_requires_geometry():
    d = load_drawing(drawing_to_document(convex(4), "combinatorial"))
    with pytest.raises(CapabilityError):
        render_svg(d)


def test_bad_face_rejected():
    d = convex(4)
    with pytest.raises(ValueError):
        render_svg(d, face_highlight=10 ** 6)
