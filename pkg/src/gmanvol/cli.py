"""Command line front end: gmanvol <verb> <file...> [flags].

Verbs
    validate      print the violation report of a graph document
    invariants    print per-piece filled invariants and the absolute Euler number
    cover         print a finite cover with its certificate
    volume-bound  print a Seifert-volume lower-bound certificate
    classify      print a mapping-degree finiteness verdict

Output is canonical JSON on stdout, one document per input file, identical
bytes on identical inputs; --pretty switches to indented rendering.  Errors
are reported as JSON on stderr.  Exit codes: 0 success, 1 validation
failure, 2 unsupported input, 3 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import classify as classify_mod
from .coverings import characteristic_cover, covered_graph_to_document, genus_raising_cover
from .errors import GmanvolError, ParseError, ValidationError
from .graph import (
    absolute_euler_number,
    canonical_framing,
    filled_piece_invariants,
    graph_from_document,
    parse_graph,
    validate,
)
from .seifert import (
    SeifertInvariants,
    euler_number,
    geometry_type,
    orbifold_euler_char,
)
from .serialize import canonical_json_bytes, format_rational
from .volume import VolumeConfig, volume_lower_bound

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_UNSUPPORTED = 2
EXIT_PARSE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmanvol",
        description="Invariants, coverings and Seifert-volume certificates "
        "for decorated graph manifolds.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("files", nargs="+", type=Path, help="input JSON document(s)")
        p.add_argument("--pretty", action="store_true", help="indented output")
        p.add_argument(
            "--jobs", type=int, default=1, help="process input files in parallel"
        )

    add_common(sub.add_parser("validate", help="report structural violations"))
    add_common(sub.add_parser("invariants", help="filled invariants per piece"))

    cover = sub.add_parser("cover", help="construct a finite cover")
    add_common(cover)
    cover.add_argument(
        "--mode",
        choices=("characteristic", "genus-raising"),
        required=True,
    )
    cover.add_argument("--prime", type=int, required=True)
    cover.add_argument("--center", help="center piece id (genus-raising mode)")

    volume = sub.add_parser("volume-bound", help="emit a volume certificate")
    add_common(volume)
    volume.add_argument("--alpha-bound", type=int, default=VolumeConfig().alpha_bound)

    add_common(sub.add_parser("classify", help="mapping-degree finiteness verdict"))
    return parser


def _load_document(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _run_validate(path: Path, args) -> tuple[dict | list, int]:
    gm = graph_from_document(_load_document(path))
    report = validate(gm)
    return report, (EXIT_OK if not report else EXIT_VALIDATION)


def _run_invariants(path: Path, args) -> tuple[dict, int]:
    gm = parse_graph(canonical_json_bytes(_load_document(path)))
    pieces = {}
    for piece in gm.pieces:
        framing = canonical_framing(gm, piece.id)
        filled = filled_piece_invariants(gm, piece.id, framing)
        pieces[piece.id] = {
            "genus": piece.genus,
            "boundary": piece.boundary,
            "canonical_framing": [[s.a, s.b] for s in framing],
            "filled_euler_number": format_rational(euler_number(filled)),
            "filled_orbifold_euler_char": format_rational(orbifold_euler_char(filled)),
            "filled_geometry": geometry_type(filled).value,
        }
    doc = {
        "absolute_euler_number": format_rational(absolute_euler_number(gm)),
        "pieces": pieces,
    }
    return doc, EXIT_OK


def _run_cover(path: Path, args) -> tuple[dict, int]:
    gm = parse_graph(canonical_json_bytes(_load_document(path)))
    if args.mode == "characteristic":
        cov = characteristic_cover(gm, args.prime)
    else:
        if args.center is None:
            raise GmanvolError("--center is required in genus-raising mode")
        cov = genus_raising_cover(gm, args.center, args.prime)
    return covered_graph_to_document(cov), EXIT_OK


def _run_volume_bound(path: Path, args) -> tuple[dict, int]:
    gm = parse_graph(canonical_json_bytes(_load_document(path)))
    cert = volume_lower_bound(gm, VolumeConfig(alpha_bound=args.alpha_bound))
    return cert.to_document(), EXIT_OK


def _description_from_document(doc) -> classify_mod.PrimeManifoldDescription:
    if isinstance(doc, dict) and "pieces" in doc and "edges" in doc:
        gm = graph_from_document(doc)
        return classify_mod.PrimeManifoldDescription.from_graph(gm)
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError(
            'classify input must be a graph document or carry a "kind" field'
        )
    kind = doc["kind"]
    if kind == classify_mod.KIND_SEIFERT:
        try:
            inv = SeifertInvariants(
                genus=doc["genus"],
                exceptional=tuple((a, b) for a, b in doc.get("exceptional", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed Seifert description: {exc}") from exc
        return classify_mod.PrimeManifoldDescription.from_seifert(inv)
    if kind == classify_mod.KIND_TORUS_BUNDLE_COVERED:
        return classify_mod.PrimeManifoldDescription.torus_bundle_covered()
    if kind == classify_mod.KIND_HYPERBOLIC:
        return classify_mod.PrimeManifoldDescription.hyperbolic()
    raise ParseError(f"unknown manifold kind {kind!r}")


def _run_classify(path: Path, args) -> tuple[dict, int]:
    desc = _description_from_document(_load_document(path))
    verdict = classify_mod.mapping_degree_finiteness(desc)
    return verdict.to_document(), EXIT_OK


_RUNNERS = {
    "validate": _run_validate,
    "invariants": _run_invariants,
    "cover": _run_cover,
    "volume-bound": _run_volume_bound,
    "classify": _run_classify,
}


def _error_document(exc: GmanvolError) -> dict:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ValidationError):
        doc["violations"] = exc.violations
    return doc


def _exit_code_for(exc: GmanvolError) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, ValidationError):
        return EXIT_VALIDATION
    return EXIT_UNSUPPORTED


def run(argv, stdout=None, stderr=None) -> int:
    """Execute one command; returns the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    args = _build_parser().parse_args(argv)
    runner = _RUNNERS[args.verb]

    def process(path: Path):
        try:
            return runner(path, args), None
        except GmanvolError as exc:
            return None, exc

    if args.jobs > 1 and len(args.files) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(process, args.files))
    else:
        results = [process(path) for path in args.files]

    # Outputs are flushed in input order; the first failure wins.
    for path, (result, exc) in zip(args.files, results):
        if exc is not None:
            doc = _error_document(exc)
            doc["file"] = str(path)
            stderr.write(canonical_json_bytes(doc).decode("utf-8") + "\n")
            return _exit_code_for(exc)
        document, code = result
        stdout.write(
            canonical_json_bytes(document, pretty=args.pretty).decode("utf-8") + "\n"
        )
        if code != EXIT_OK:
            return code
    return EXIT_OK


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
