"""Command-line front end over the JSON schemas.

Commands: certify, group-eval, check-law, lipschitz, stone, additive,
converge.  All input and output is JSON with big integers as decimal
strings; output is byte-identical across runs for a fixed config and
seed.  Exit codes: 0 success, 1 malformed input, 2 mathematical refusal
(a hypothesis of the requested construction is violated), 3 precision
exhaustion.

A group file is either a bundle {"certificate": ..., "budget": ...} as
produced by the stone command, or a bare matrix in the matrix schema,
which is certified on the fly under the configured budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from . import __version__
from .errors import PadicError, PrecisionFailure, Refusal
from .functions import SeriesBudget, digit_truncation_error
from .groups import OneParamGroup, stone_recover
from .linalg import PadicMatrix
from .sampling import sample_principal_unit
from .spectral import certify_strongly_normal

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUSAL = 2
EXIT_PRECISION = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for refusals here
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_global_flags(parser, suppress: bool) -> None:
    # the same flags work before or after the subcommand; the subcommand
    # copies use SUPPRESS so an absent flag never clobbers the root value
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--p", type=int, default=d(5), help="prime (odd, default 5)")
    parser.add_argument(
        "--prec", type=int, default=d(32), help="target digits (default 32)"
    )
    parser.add_argument(
        "--guard",
        type=int,
        default=d(None),
        help="guard digits (default: sized automatically from p and prec)",
    )
    parser.add_argument("--seed", type=int, default=d(42), help="sampling seed")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="padic-spectral",
        description="Spectral certificates and one-parameter unitary groups over Z_p.",
    )
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="spectral certificate for a matrix")
    c.add_argument("matrix_file")

    c = sub.add_parser("group-eval", help="evaluate U(s) for a group")
    c.add_argument("group_file")
    c.add_argument("--s", required=True, help="principal unit as a decimal integer")

    c = sub.add_parser("check-law", help="sampled group-law verification")
    c.add_argument("group_file")
    c.add_argument("--samples", type=int, default=100)

    c = sub.add_parser("lipschitz", help="sampled continuity-bound verification")
    c.add_argument("group_file")
    c.add_argument("--samples", type=int, default=100)

    c = sub.add_parser("stone", help="recover the generator from U(1+p)")
    c.add_argument("matrix_file")

    c = sub.add_parser("additive", help="evaluate W(z) = U(e^(pz))")
    c.add_argument("group_file")
    c.add_argument("--z", required=True, help="additive parameter, decimal integer")

    c = sub.add_parser("converge", help="digit-truncation convergence table")
    c.add_argument("group_file")
    c.add_argument("--s", required=True, help="principal unit as a decimal integer")
    c.add_argument("--max-n", type=int, default=10)

    for command in sub.choices.values():
        _add_global_flags(command, suppress=True)
    return parser


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("top-level JSON value must be an object")
    return data


def _budget(args, p: int) -> SeriesBudget:
    if args.guard is None:
        return SeriesBudget.auto(args.prec, p)
    return SeriesBudget(args.prec, args.guard)


def _load_group(path: str, args) -> OneParamGroup:
    data = _load_json(path)
    if "certificate" in data:
        return OneParamGroup.from_dict(data)
    matrix = PadicMatrix.from_dict(data)
    cert = certify_strongly_normal(matrix)
    return OneParamGroup(cert, _budget(args, matrix.p))


def _config(args, p: int, budget: SeriesBudget) -> dict:
    return {
        "p": p,
        "precision": budget.target,
        "guard": budget.guard,
        "seed": args.seed,
        "version": __version__,
    }


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _cmd_certify(args) -> int:
    matrix = PadicMatrix.from_dict(_load_json(args.matrix_file))
    budget = _budget(args, matrix.p)
    cert = certify_strongly_normal(matrix)
    _emit({"config": _config(args, matrix.p, budget), "certificate": cert.to_dict()})
    return EXIT_OK


def _cmd_group_eval(args) -> int:
    group = _load_group(args.group_file, args)
    s = int(args.s)
    u = group.evaluate(s)
    _emit(
        {
            "config": _config(args, group.p, group.budget),
            "s": str(s),
            "matrix": u.matrix.to_dict(),
            "unit_spectrum": [x.to_dict() for x in u.unit_spectrum()],
        }
    )
    return EXIT_OK


def _sampled_check(args, check: str) -> int:
    group = _load_group(args.group_file, args)
    rng = Random(args.seed)
    prec = group.budget.target
    results = []
    for i in range(args.samples):
        s1 = sample_principal_unit(rng, group.p, prec)
        s2 = sample_principal_unit(rng, group.p, prec)
        if check == "group-law":
            results.append((i, group.verify_group_law(s1, s2)))
        else:
            results.append((i, group.lipschitz_check(s1, s2)))
    results.sort(key=lambda t: t[0])
    margins = [r.margin for _, r in results]
    _emit(
        {
            "config": _config(args, group.p, group.budget),
            "check": check,
            "samples": args.samples,
            "seed": args.seed,
            "min_margin_valuation": min(margins) if margins else 0,
            "pass": all(r.ok for _, r in results),
        }
    )
    return EXIT_OK if all(r.ok for _, r in results) else EXIT_REFUSAL


def _cmd_stone(args) -> int:
    matrix = PadicMatrix.from_dict(_load_json(args.matrix_file))
    budget = _budget(args, matrix.p)
    group = stone_recover(matrix, budget)
    _emit({"config": _config(args, matrix.p, budget), **group.to_dict()})
    return EXIT_OK


def _cmd_additive(args) -> int:
    group = _load_group(args.group_file, args)
    w = group.additive_evaluate(int(args.z))
    _emit(
        {
            "config": _config(args, group.p, group.budget),
            "z": args.z,
            "matrix": w.matrix.to_dict(),
        }
    )
    return EXIT_OK


def _cmd_converge(args) -> int:
    group = _load_group(args.group_file, args)
    s = int(args.s)
    reference = group.evaluate(s).matrix
    rows = []
    for n in range(args.max_n + 1):
        approx = group.digit_limit_approx(s, n)
        err = (approx - reference).op_norm()
        rows.append(
            {
                "n": n,
                "error_valuation": err.value,
                "error_exact": err.is_finite,
                "proven_bound": digit_truncation_error(n, group.p),
            }
        )
    _emit(
        {
            "config": _config(args, group.p, group.budget),
            "s": str(s),
            "table": rows,
        }
    )
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "certify": _cmd_certify,
        "group-eval": _cmd_group_eval,
        "check-law": lambda a: _sampled_check(a, "group-law"),
        "lipschitz": lambda a: _sampled_check(a, "lipschitz"),
        "stone": _cmd_stone,
        "additive": _cmd_additive,
        "converge": _cmd_converge,
    }
    try:
        return handlers[args.command](args)
    except Refusal as e:
        _emit(
            {
                "config": _config(args, args.p, _budget(args, args.p)),
                "refusal": {"type": type(e).__name__, "message": str(e)},
            }
        )
        return EXIT_REFUSAL
    except PrecisionFailure as e:
        _emit(
            {
                "config": _config(args, args.p, _budget(args, args.p)),
                "error": {"type": type(e).__name__, "message": str(e)},
            }
        )
        return EXIT_PRECISION
    except (OSError, ValueError, KeyError, TypeError, PadicError, json.JSONDecodeError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
