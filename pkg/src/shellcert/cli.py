"""Command-line frontend.

Subcommands: analyze, decide, verify, generate, export. Exit codes:
0 success / certificate verified / certificate found, 1 decided negative
or certificate unverified, 2 invalid input or usage, 3 certificate does
not belong to the drawing, 4 required capability missing (e.g. rendering
a drawing without geometry). Outputs carry no timestamps, so identical
inputs and flags produce identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .documents import (certificate_from_document, certificate_to_document,
                        load_drawing)
from .drawing import trace_faces, validate_goodness, vertices_on_face
from .errors import (CapabilityError, CertificateMismatchError, DocumentError,
                     EmbeddingError, GenerationError)
from .generators import (DEFAULT_SCALE, convex_document, cylindrical_document,
                         rectilinear_document)
from .kedges import cumulative_bound_check, harary_hill_bound, k_edge_profile, max_k
from .planarize import locate_face
from .shellability import (decide_bishellable, decide_seq_shellable,
                           verify_bishell_certificate, verify_seq_certificate)
from .svg import render_svg

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_MISMATCH = 3
EXIT_CAPABILITY = 4


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, EmbeddingError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CertificateMismatchError as exc:
        print(f"certificate mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellcert",
        description="Analyze good drawings of complete graphs: k-edge "
                    "profiles, crossing bounds, and shellability certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="validate a drawing and report k-edge profiles")
    p.add_argument("--input", required=True, help="drawing document (JSON)")
    p.add_argument("--face", default="auto",
                   help='face selector: a face id, "auto" (all faces), or "at:x,y"')
    p.add_argument("--kmax", type=int, default=None,
                   help="largest k for the bound table (default n//2-2)")
    p.add_argument("--output", default=None, help="report path (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="search for a shellability certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=("seq", "bishell"), required=True)
    p.add_argument("--k", type=int, default=None,
                   help="sequence parameter (default n//2-2)")
    p.add_argument("--face", default="auto",
                   help='face selector: a face id, "auto", or "at:x,y"')
    p.add_argument("--output", default=None, help="certificate path (default stdout)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("verify", help="check a certificate against a drawing")
    p.add_argument("--input", required=True)
    p.add_argument("--certificate", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit a reference drawing document")
    p.add_argument("--family", choices=("convex", "cylindrical", "rectilinear"),
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0, help="seed (rectilinear only)")
    p.add_argument("--scale", type=int, default=DEFAULT_SCALE)
    p.add_argument("--output", default=None, help="document path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("export", help="render a drawing to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="SVG path")
    p.add_argument("--face", default=None, help="face to highlight (id or at:x,y)")
    p.add_argument("--certificate", default=None, help="certificate overlay")
    p.add_argument("--labels", default=None,
                   help="label edges with k-values for this face (id or at:x,y)")
    p.add_argument("--size", type=int, default=720)
    p.set_defaults(func=cmd_export)
    return parser


def _read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: not valid JSON: {exc}") from None


def _sha256(path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        digest.update(fh.read())
    return digest.hexdigest()


def _emit(payload, path) -> None:
    text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_face(selector, drawing, faces):
    """Face selector: an id, "auto" for all faces, or "at:x,y" (geometric)."""
    if selector == "auto":
        return list(faces.face_ids())
    if selector.startswith("at:"):
        try:
            sx, sy = selector[3:].split(",")
            point = (int(sx), int(sy))
        except ValueError:
            raise ValueError(f'bad point selector {selector!r}; want "at:x,y"') from None
        return [locate_face(drawing, point)]
    try:
        face = int(selector)
    except ValueError:
        raise ValueError(f"bad face selector {selector!r}") from None
    if not 0 <= face < faces.face_count():
        raise ValueError(f"face {face} does not exist (drawing has {faces.face_count()})")
    return [face]


def cmd_analyze(args) -> int:
    drawing = load_drawing(_read_json(args.input))
    report = validate_goodness(drawing)
    faces = trace_faces(drawing)
    payload = {
        "input": {"path": args.input, "sha256": _sha256(args.input)},
        "n": drawing.n,
        "goodness": {
            "pass": report.ok,
            "violations": [{"condition": c, "edges": [list(e) for e in pair]}
                           for c, pair in report.violations],
        },
        "faces": {"count": faces.face_count()},
        "crossings": drawing.crossing_count(),
        "harary_hill": harary_hill_bound(drawing.n),
        "profiles": [],
        "deciders": None,
    }
    if not report.ok:
        _emit(payload, args.output)
        print("drawing failed goodness validation", file=sys.stderr)
        return EXIT_INVALID

    kmax = args.kmax if args.kmax is not None else max_k(drawing.n) - 1
    selected = _parse_face(args.face, drawing, faces)
    payload["faces"]["analyzed"] = selected
    for face in selected:
        prof = k_edge_profile(drawing, faces, face)
        # drawings on up to 4 vertices have no bound levels to check
        rows = () if kmax < 0 else cumulative_bound_check(drawing, faces, face, kmax)
        payload["profiles"].append({
            "face": face,
            "face_vertices": sorted(vertices_on_face(drawing, faces, face)),
            "k_values": {f"{u}-{v}": k for (u, v), k in sorted(prof.k_values.items())},
            "counts": list(prof.counts),
            "cumulated": list(prof.cumulated),
            "bounds": [{"k": r.k, "cumulated": r.cumulated,
                        "threshold": r.threshold, "pass": r.ok} for r in rows],
        })
    _emit(payload, args.output)
    return EXIT_OK


def cmd_decide(args) -> int:
    drawing = load_drawing(_read_json(args.input))
    k = args.k if args.k is not None else max_k(drawing.n) - 1
    if not 0 <= k <= drawing.n - 2:
        raise ValueError(f"k must lie in 0..{drawing.n - 2}, got {k}")
    faces = trace_faces(drawing)
    selected = _parse_face(args.face, drawing, faces)
    face_filter = None if args.face == "auto" else selected[0]

    if args.mode == "seq":
        cert = decide_seq_shellable(drawing, k, face_filter)
    else:
        cert = decide_bishellable(drawing, k, face_filter)
    if cert is None:
        print(f"none: not {k}-{'seq-shellable' if args.mode == 'seq' else 'bishellable'}"
              f"{' for any face' if face_filter is None else f' for face {face_filter}'}",
              file=sys.stderr)
        return EXIT_NEGATIVE
    _emit(certificate_to_document(cert, drawing_sha256=_sha256(args.input)), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    drawing = load_drawing(_read_json(args.input))
    cert, digest = certificate_from_document(_read_json(args.certificate))
    if digest is not None and digest != _sha256(args.input):
        raise CertificateMismatchError(
            "certificate was issued for a different drawing document")
    from .shellability import SeqShellCertificate
    if isinstance(cert, SeqShellCertificate):
        result = verify_seq_certificate(drawing, cert)
    else:
        result = verify_bishell_certificate(drawing, cert)
    if result.ok:
        print("certificate verified")
        return EXIT_OK
    for line in result.violations:
        print(f"violation: {line}", file=sys.stderr)
    return EXIT_NEGATIVE


def cmd_generate(args) -> int:
    if args.family == "convex":
        doc = convex_document(args.n, args.scale)
    elif args.family == "cylindrical":
        doc = cylindrical_document(args.n, args.scale)
    else:
        doc = rectilinear_document(args.n, args.seed, args.scale)
    _emit(doc, args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    drawing = load_drawing(_read_json(args.input))
    faces = trace_faces(drawing)
    face_highlight = None
    if args.face is not None:
        face_highlight = _parse_face(args.face, drawing, faces)[0]
    label_face = None
    if args.labels is not None:
        label_face = _parse_face(args.labels, drawing, faces)[0]
    certificate = None
    if args.certificate is not None:
        certificate, _ = certificate_from_document(_read_json(args.certificate))
    text = render_svg(drawing, size=args.size, face_highlight=face_highlight,
                      certificate=certificate, label_face=label_face)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
