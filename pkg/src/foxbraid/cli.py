"""Command-line front end.

Subcommands:

    foxbraid lm        --braid B --colors C --rep R [--reduced] [--format F]
    foxbraid alexander (--braid B --colors C | --presentation FILE) --rep R
                       [--via definition|longmoody|both] [--format F]
    foxbraid preset    NAME [--q Q --r R | --sweep]

Exit codes: 0 success, 1 preset mismatch, 2 parse error, 3 coloring
violation, 4 invalid representation, 5 failed theorem hypothesis.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .alexander import (
    WordImages,
    invariant_from_closure,
    theorem48_rhs,
    twisted_alexander,
    verify_theorem48,
)
from .braids import parse_braid, parse_coloring, is_colored
from .errors import (
    ColoringError,
    FoxbraidError,
    HypothesisError,
    ParseError,
    RepresentationError,
)
from .literals import descriptor_from_json, parse_element
from .longmoody import lm_reduced, lm_unreduced
from .matrices import RingMatrix
from .presets import PRESET_NAMES, preset_case, run_preset
from .reps import AbelianizationMap, ColoredAugmentation, load_representation
from .rings import format_element
from .words import Alphabet, Kind, parse_word

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_COLORING = 3
EXIT_INVALID_REP = 4
EXIT_HYPOTHESIS = 5


def _load_rep(spec):
    if spec in ("trefoil_burau", "fig8_f7", "fig8_cyclotomic12"):
        from .presets import load_preset_representation

        return load_preset_representation(spec)
    return load_representation(spec)


def _matrix_to_json(matrix):
    return [[format_element(e) for e in row] for row in matrix.entries]


def _print_matrix(matrix, fmt):
    if fmt == "json":
        print(json.dumps({"rows": matrix.rows, "cols": matrix.cols, "entries": _matrix_to_json(matrix)}))
    else:
        print(matrix)


def _invariant_to_json(value):
    out = {
        "numerator": format_element(value.numerator),
        "denominator": format_element(value.denominator),
    }
    if value.simplified is not None:
        out["simplified"] = format_element(value.simplified)
    return out


def _print_invariant(value, fmt):
    if fmt == "json":
        print(json.dumps(_invariant_to_json(value)))
    else:
        print(f"numerator:   {value.numerator}")
        print(f"denominator: {value.denominator}")
        if value.simplified is not None:
            print(f"simplified:  {value.simplified}")
        else:
            print("simplified:  (not divisible)")


def cmd_lm(args):
    rep = _load_rep(args.rep)
    braid = parse_braid(args.braid, rep.strands)
    coloring = parse_coloring(args.colors)
    if not is_colored(braid, coloring):
        raise ColoringError(f"braid {braid} does not preserve coloring {coloring}")
    aug = ColoredAugmentation(coloring)
    matrix = (
        lm_reduced(rep, aug, braid) if args.reduced else lm_unreduced(rep, aug, braid)
    )
    _print_matrix(matrix, args.format)
    return EXIT_OK


def _presentation_invariant(args):
    with open(args.presentation) as fh:
        data = json.load(fh)
    kind = Kind(data["alphabet"]["kind"])
    alphabet = Alphabet(data["alphabet"]["rank"], kind)
    relators = tuple(parse_word(text, alphabet) for text in data["relators"])
    ring = descriptor_from_json(data["ring"])
    images = WordImages(
        ring,
        len(data["images"][0]),
        [
            RingMatrix.from_rows(
                ring, [[parse_element(e, ring) for e in row] for row in m]
            )
            for m in data["images"]
        ],
    )
    abmap = AbelianizationMap(
        tuple(data["variables"]),
        {i + 1: tuple(exps) for i, exps in enumerate(data["abelianization"])},
    )
    from .alexander import GroupPresentation

    presentation = GroupPresentation(alphabet, relators)
    return twisted_alexander(presentation, images, abmap)


def cmd_alexander(args):
    if args.presentation:
        value = _presentation_invariant(args)
        _print_invariant(value, args.format)
        return EXIT_OK
    rep = _load_rep(args.rep)
    braid = parse_braid(args.braid, rep.strands)
    coloring = parse_coloring(args.colors)
    aug = ColoredAugmentation(coloring)
    if args.via == "definition":
        _print_invariant(invariant_from_closure(rep, aug, braid), args.format)
    elif args.via == "longmoody":
        _print_invariant(theorem48_rhs(rep, aug, braid), args.format)
    else:
        report = verify_theorem48(rep, aug, braid)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "definition": _invariant_to_json(report.lhs),
                        "longmoody": _invariant_to_json(report.rhs),
                        "equal_up_to_unit": report.equal,
                    }
                )
            )
        else:
            print("via definition:")
            _print_invariant(report.lhs, "text")
            print("via the reduced construction:")
            _print_invariant(report.rhs, "text")
            print(f"equal_up_to_unit: {str(report.equal).lower()}")
    return EXIT_OK


def _run_one_preset(name, q, r):
    case = preset_case(name, q=q, r=r)
    result = run_preset(case)
    label = case.representation.label or name
    status = "pass" if result.passed else "FAIL"
    lines = [f"{label}: {status}"]
    lines.append(f"  value: {result.report.rhs}")
    if not result.passed:
        lines.append(f"  expected numerator   ~ {case.expected_numerator}")
        lines.append(f"  expected denominator ~ {case.expected_denominator}")
        lines.append(f"  lhs normal form: {result.report.lhs_cross_normal}")
        lines.append(f"  rhs normal form: {result.report.rhs_cross_normal}")
    return result.passed, "\n".join(lines)


def cmd_preset(args):
    if args.name != "torus2q":
        if args.q is not None or args.r is not None or args.sweep:
            raise FoxbraidError("--q/--r/--sweep only apply to torus2q")
        passed, text = _run_one_preset(args.name, None, None)
        print(text)
        return EXIT_OK if passed else EXIT_MISMATCH
    if args.q is not None and (args.q < 3 or args.q % 2 == 0):
        raise FoxbraidError("torus2q needs odd q >= 3")
    if args.r is not None and (args.r % 2 == 0 or args.q is None or not 0 < args.r < args.q):
        raise FoxbraidError("torus2q needs odd r with 0 < r < q")
    if args.sweep:
        q_values = [args.q] if args.q is not None else [3, 5, 7]
        jobs = [(q, r) for q in q_values for r in range(1, q, 2)]
        threads = int(os.environ.get("FOXBRAID_THREADS", "0"))
        if threads > 0:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                outcomes = list(
                    pool.map(lambda qr: _run_one_preset("torus2q", *qr), jobs)
                )
        else:
            outcomes = [_run_one_preset("torus2q", q, r) for q, r in jobs]
        all_passed = True
        for passed, text in outcomes:
            print(text)
            all_passed = all_passed and passed
        return EXIT_OK if all_passed else EXIT_MISMATCH
    if args.q is None or args.r is None:
        raise FoxbraidError("torus2q needs --q and --r, or --sweep")
    passed, text = _run_one_preset("torus2q", args.q, args.r)
    print(text)
    return EXIT_OK if passed else EXIT_MISMATCH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="foxbraid",
        description="Exact Long-Moody construction matrices and twisted Alexander invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lm = sub.add_parser("lm", help="print a Long-Moody construction matrix")
    lm.add_argument("--braid", required=True, help='braid word, e.g. "s1^3"')
    lm.add_argument("--colors", required=True, help='strand coloring, e.g. "1,1"')
    lm.add_argument("--rep", required=True, help="preset name or representation file")
    lm.add_argument("--reduced", action="store_true")
    lm.add_argument("--format", choices=("text", "json"), default="text")
    lm.set_defaults(func=cmd_lm)

    alex = sub.add_parser("alexander", help="compute a twisted Alexander invariant")
    alex.add_argument("--braid", help="braid word whose closure is taken")
    alex.add_argument("--presentation", help="presentation file (general entry point)")
    alex.add_argument("--colors", help="strand coloring")
    alex.add_argument("--rep", help="preset name or representation file")
    alex.add_argument(
        "--via", choices=("definition", "longmoody", "both"), default="both"
    )
    alex.add_argument("--format", choices=("text", "json"), default="text")
    alex.set_defaults(func=cmd_alexander)

    preset = sub.add_parser("preset", help="run a shipped example against its pinned value")
    preset.add_argument("name", choices=PRESET_NAMES)
    preset.add_argument("--q", type=int)
    preset.add_argument("--r", type=int)
    preset.add_argument("--sweep", action="store_true")
    preset.set_defaults(func=cmd_preset)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ColoringError as exc:
        print(f"coloring error: {exc}", file=sys.stderr)
        return EXIT_COLORING
    except RepresentationError as exc:
        print(f"invalid representation: {exc}", file=sys.stderr)
        for violation in exc.violations:
            print(f"  violated: {violation}", file=sys.stderr)
        return EXIT_INVALID_REP
    except HypothesisError as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except FoxbraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
