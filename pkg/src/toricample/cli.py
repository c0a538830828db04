"""Command line interface.

Every command prints a JSON report on stdout.  Exit codes: 0 success,
1 input or parse error, 2 validation failure (not smooth, not complete,
divisor not ample), 3 internal-consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .documents import parse_divisor, parse_fan
from .errors import ConsistencyError, DocumentError, ValidationError
from .fan import is_complete, is_smooth, require_complete
from .polytope import (all_angle_signs, all_two_faces_triangular, anticanonical, is_simplex,
                       normal_fan, polytope_from_divisor, splitting_summand_for_face)
from .splitting import all_splittings, classify_tangent, splitting_type
from .svg import render_svg
from .theorem import census, verify_theorem

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise DocumentError(f"usage: {message}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(f"cannot read {path}: {e}") from None


def _fan(path):
    return parse_fan(_read(path)).to_fan()


def _divisor(args, fan, required=True):
    if getattr(args, "anticanonical", False):
        return anticanonical(fan)
    if args.divisor is not None:
        return parse_divisor(_read(args.divisor), len(fan.rays)).coeffs
    if required:
        raise DocumentError("one of --divisor or --anticanonical is required")
    return None


def cmd_validate(args):
    fan = _fan(args.fan)
    complete = is_complete(fan)
    report = {"valid": complete, "smooth": is_smooth(fan)[0], "complete": complete,
              "rays": len(fan.rays), "max_cones": len(fan.max_cones)}
    if complete:
        report["walls"] = len(fan.walls)
    return report, EXIT_OK if complete else EXIT_INVALID


def cmd_splitting(args):
    fan = _fan(args.fan)
    require_complete(fan)
    if args.wall is not None:
        return splitting_type(fan, fan.wall_for(args.wall)).to_dict(), EXIT_OK
    return {"walls": [st.to_dict() for st in all_splittings(fan)]}, EXIT_OK


def cmd_classify(args):
    return classify_tangent(_fan(args.fan)).to_dict(), EXIT_OK


def cmd_polytope(args):
    fan = _fan(args.fan)
    P = polytope_from_divisor(fan, _divisor(args, fan))
    normal_fan(P)
    tri, _ = all_two_faces_triangular(P)
    report = P.to_dict()
    report.update(all_two_faces_triangular=tri, simplex=is_simplex(P), normal_fan_matches=True)
    return report, EXIT_OK


def cmd_angles(args):
    fan = _fan(args.fan)
    P = polytope_from_divisor(fan, _divisor(args, fan))
    rows = []
    for s in all_angle_signs(P):
        face = P.two_faces[s.face]
        a_j = splitting_summand_for_face(fan, s.wall, face)
        if (a_j > 0) - (a_j < 0) != s.sign:
            raise ConsistencyError(f"angle sign {s.sign} disagrees with splitting summand {a_j}")
        rows.append({"wall": list(s.wall.shared_rays), "face": list(s.face), "sign": s.sign, "a": a_j})
    return {"divisor": list(P.divisor), "angles": rows}, EXIT_OK


def cmd_verify(args):
    fan = _fan(args.fan)
    report = verify_theorem(fan, _divisor(args, fan, required=False))
    return report.to_dict(), EXIT_OK if report.passed else EXIT_INTERNAL


def cmd_census(args):
    if args.max_rays < 3 or args.max_abs_d < 1:
        raise DocumentError("census needs --max-rays >= 3 and --max-abs-d >= 1")
    return census(args.max_rays, args.max_abs_d, workers=args.workers).to_dict(), EXIT_OK


def cmd_render(args):
    fan = _fan(args.fan)
    text = render_svg(fan, _divisor(args, fan, required=False))
    Path(args.output).write_text(text, encoding="utf-8")
    return {"output": args.output, "bytes": len(text.encode("utf-8"))}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toricample", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fan_cmd(name, func, divisor=None):
        s = sub.add_parser(name)
        s.add_argument("fan")
        if divisor == "required":
            g = s.add_mutually_exclusive_group(required=True)
            g.add_argument("--divisor")
            g.add_argument("--anticanonical", action="store_true")
        elif divisor == "optional":
            s.add_argument("--divisor")
        s.set_defaults(func=func)
        return s

    fan_cmd("validate", cmd_validate)
    fan_cmd("splitting", cmd_splitting).add_argument(
        "--wall", type=int, nargs="+", help="ray indices spanning the wall")
    fan_cmd("classify", cmd_classify)
    fan_cmd("polytope", cmd_polytope, "required")
    fan_cmd("angles", cmd_angles, "required")
    fan_cmd("verify", cmd_verify, "optional")
    r = fan_cmd("render", cmd_render, "optional")
    r.add_argument("--anticanonical", action="store_true")
    r.add_argument("-o", "--output", required=True)
    c = sub.add_parser("census")
    c.add_argument("--max-rays", type=int, required=True)
    c.add_argument("--max-abs-d", type=int, required=True)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_census)
    return p


def run(argv: list[str]) -> tuple[str, int]:
    """Execute one command; return the JSON report text and the exit code."""
    try:
        args = build_parser().parse_args(argv)
        report, code = args.func(args)
    except DocumentError as e:
        report, code = {"error": str(e)}, EXIT_INPUT
    except ValidationError as e:
        report, code = {"error": str(e)}, EXIT_INVALID
    except ConsistencyError as e:
        report, code = {"error": str(e)}, EXIT_INTERNAL
    return json.dumps(report, ensure_ascii=False) + "\n", code


def main(argv: list[str] | None = None) -> int:
    text, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    if code:
        print(f"toricample: exit {code}: {json.loads(text).get('error', 'check failed')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
