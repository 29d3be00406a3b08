"""Command-line interface with JSON input and output.

Exit codes: 0 success, 1 usage or input error, 2 a negative mathematical
answer, such as a code outside the fiber or a collision.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import SCHEMA_VERSION
from . import audits
from .codes import LinearCode, dual
from .errors import GoppaError, MathematicalFailure
from .fields import Field, parse_field
from .level_structures import (
    LevelStructure,
    RawLevelStructure,
    canonical_differential_structure,
    check_annihilation,
    classical_to_canonical,
    code,
    dual_structure,
    encode,
    generator_matrix,
    is_self_dual,
    is_self_dual_direct,
    make_structure,
    parity_check_matrix,
    tensor,
)
from .moduli_analytics import parameter_report, sweep
from .pluecker import pluecker_closed_form, pluecker_of_code, recover_scalars


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# input helpers


def parse_value(F: Field, text: str):
    """One field element from the command line.

    Accepts a JSON value (an integer, a digit list, or ``{"num", "den"}``)
    and, over a rational function field, the bare symbol ``z``.
    """
    text = text.strip()
    if F.kind == "rational_function" and text == "z":
        return F.z.value
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise UsageError(f"cannot parse field element {text!r}") from None
    return F.coerce(obj)


def parse_values(F: Field, text: str | None) -> tuple:
    """A comma-separated list, or a JSON array for structured elements."""
    if text is None or text.strip() == "":
        return ()
    text = text.strip()
    if text.startswith("["):
        return tuple(F.coerce(v) for v in json.loads(text))
    return tuple(parse_value(F, t) for t in text.split(","))


def read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def load_structure(args) -> LevelStructure:
    path = args.structure
    if path:
        obj = read_json(path)
        if obj.get("type") != "level_structure":
            raise UsageError(f"{path} does not hold a level structure")
        return LevelStructure.from_json(obj)
    missing = [f for f in ("field", "n", "d") if getattr(args, f) is None]
    if missing:
        raise UsageError("give --structure or all of --field, --n, --d (missing "
                         + ", ".join("--" + m for m in missing) + ")")
    F = parse_field(args.field)
    scalars = parse_values(F, args.scalars) if args.scalars else None
    return make_structure(F, args.n, args.d, parse_values(F, args.alphas), scalars)


def load_code(path: str) -> LinearCode:
    obj = read_json(path)
    if obj.get("type") != "code":
        raise UsageError(f"{path} does not hold a code")
    return LinearCode.from_json(obj)


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args):
    g = load_structure(args)
    return code(g).to_json() if args.code else g.to_json()


def cmd_encode(args):
    g = load_structure(args)
    F = g.field
    word = encode(g, parse_values(F, args.message))
    return {"type": "codeword", "field": F.spec, "n": g.n,
            "word": [F.to_json_value(x) for x in word]}


def cmd_gen_matrix(args):
    return generator_matrix(load_structure(args)).to_json()


def cmd_parity_matrix(args):
    return parity_check_matrix(load_structure(args)).to_json()


def cmd_dual(args):
    if args.code:
        return dual(load_code(args.code)).to_json()
    g = load_structure(args)
    out = dual_structure(g).to_json()
    if args.check:
        out["annihilation"] = check_annihilation(g)
        out["dual_code_matches"] = code(dual_structure(g)) == dual(code(g))
    return out


def cmd_tensor(args):
    g1 = LevelStructure.from_json(read_json(args.left))
    g2 = LevelStructure.from_json(read_json(args.right))
    return tensor(g1, g2).to_json()


def cmd_canonical_diff(args):
    F = parse_field(args.field)
    return canonical_differential_structure(F, args.n, parse_values(F, args.alphas)).to_json()


def cmd_selfdual_check(args):
    g = load_structure(args)
    return {"type": "selfdual_check", "structure": g.to_json(),
            "self_dual": is_self_dual(g), "direct": is_self_dual_direct(g)}


def cmd_classical_normalize(args):
    obj = read_json(args.raw)
    if obj.get("type") != "raw_level_structure":
        raise UsageError(f"{args.raw} does not hold a raw level structure")
    return classical_to_canonical(RawLevelStructure.from_json(obj)).to_json()


def cmd_pluecker(args):
    if args.code:
        return pluecker_of_code(load_code(args.code)).to_json()
    return pluecker_closed_form(load_structure(args)).to_json()


def cmd_recover_scalars(args):
    C = load_code(args.code)
    F = C.field
    alphas = parse_values(F, args.alphas)
    scalars = recover_scalars(C, alphas, args.d)
    return LevelStructure(F, C.n, args.d, alphas, scalars).to_json()


def cmd_xi(args):
    if args.sweep:
        if args.g is None or args.n is None:
            raise UsageError("--sweep needs --g and --n")
        return {"type": "xi_sweep", "g": args.g, "n": args.n,
                "reports": [r.to_json() for r in sweep(args.g, args.n)]}
    if None in (args.g, args.n, args.d):
        raise UsageError("xi needs --g, --n and --d (or --sweep)")
    out = parameter_report(args.g, args.n, args.d).to_json()
    out["type"] = "xi"
    return out


def cmd_audit(args):
    kind = args.kind
    if args.field is None:
        raise UsageError("audit needs --field")
    if kind == "delsarte":
        rep = audits.delsarte_audit(args.field, args.n_max, samples=args.samples, seed=args.seed)
        out, clean = rep.to_json(), rep.clean
    else:
        if args.n is None or args.d is None:
            raise UsageError(f"audit {kind} needs --n and --d")
        if kind == "injectivity":
            rep = audits.injectivity_audit(args.field, args.n, args.d, jobs=args.jobs)
            clean = rep.clean
        elif kind == "census":
            rep = audits.image_census(args.field, args.n, args.d, jobs=args.jobs)
            clean = True
        elif kind == "selfdual":
            rep = audits.selfdual_census(args.field, args.n, args.d)
            clean = rep.clean
        else:
            rep = audits.identity_audit(args.field, args.n, args.d)
            clean = rep.failures == 0
        out = rep.to_json()
        # wall-clock time would break byte-identical reruns
        out.pop("elapsed_seconds", None)
        out.pop("elapsed", None)
    out["type"] = f"audit_{kind}"
    out["clean"] = clean
    return out, 0 if clean else 2


# ---------------------------------------------------------------------------
# parser


def _structure_args(p):
    p.add_argument("--structure", metavar="PATH", help="level structure JSON ('-' for stdin)")
    p.add_argument("--field", help='field spec, e.g. "7", "2^3/1,1,0,1", "ratfun(2)"')
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--alphas", help="alpha_4..alpha_n, comma separated or a JSON array")
    p.add_argument("--scalars", help="l_1..l_{n-1} (default all ones)")


def build_parser() -> argparse.ArgumentParser:
    def common_flags(defaults: bool):
        # subcommands repeat the global flags without defaults, so a value
        # given before the subcommand is not overwritten
        p = _Parser(add_help=False)
        p.add_argument("--out", metavar="PATH", default=None if defaults else argparse.SUPPRESS,
                       help="write JSON here instead of stdout")
        p.add_argument("--seed", type=int, default=0 if defaults else argparse.SUPPRESS,
                       help="seed for sampled audits")
        p.add_argument("--jobs", type=int, default=1 if defaults else argparse.SUPPRESS,
                       help="worker processes for audits")
        return p

    common = common_flags(False)
    parser = _Parser(prog="goppa-levels", description=__doc__.splitlines()[0],
                     parents=[common_flags(True)])
    parser.add_argument("--version", action="version", version=f"schema {SCHEMA_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    p = add("construct", cmd_construct, "validate a structure and print it (or its code)")
    _structure_args(p)
    p.add_argument("--code", action="store_true", help="print the Goppa code instead")

    p = add("encode", cmd_encode, "codeword of a message polynomial")
    _structure_args(p)
    p.add_argument("--message", required=True, help="coefficients m_0..m_d")

    _structure_args(add("gen-matrix", cmd_gen_matrix, "generator matrix"))
    _structure_args(add("parity-matrix", cmd_parity_matrix, "parity-check matrix"))

    p = add("dual", cmd_dual, "dual structure, or dual code with --code")
    _structure_args(p)
    p.add_argument("--code", metavar="PATH", help="code JSON to dualize")
    p.add_argument("--check", action="store_true", help="also report G H = 0 and code duality")

    p = add("tensor", cmd_tensor, "product of two structures over the same points")
    p.add_argument("--left", required=True, metavar="PATH")
    p.add_argument("--right", required=True, metavar="PATH")

    p = add("canonical-diff", cmd_canonical_diff, "canonical differential structure")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphas")

    _structure_args(add("selfdual-check", cmd_selfdual_check, "self-duality by criterion and directly"))

    p = add("classical-normalize", cmd_classical_normalize, "canonical form of a raw structure")
    p.add_argument("--raw", required=True, metavar="PATH")

    p = add("pluecker", cmd_pluecker, "closed-form Plücker vector, or minors of a code with --code")
    _structure_args(p)
    p.add_argument("--code", metavar="PATH")

    p = add("recover-scalars", cmd_recover_scalars, "structure over given points whose code is C")
    p.add_argument("--code", required=True, metavar="PATH")
    p.add_argument("--alphas")
    p.add_argument("--d", type=int, required=True)

    p = add("xi", cmd_xi, "dimension count and unsafe degrees")
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--sweep", action="store_true", help="all degrees 2g-1 < d < n")

    p = add("audit", cmd_audit, "exhaustive and sampled experiments")
    p.add_argument("kind", choices=["injectivity", "census", "selfdual", "delsarte", "identities"])
    p.add_argument("--field")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--n-max", type=int, default=3, help="largest length for delsarte")
    p.add_argument("--samples", type=int, default=None, help="random codes for delsarte (default exhaustive)")
    return parser


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return int(exc.code or 0)
    try:
        result = args.func(args)
        status = 0
        if isinstance(result, tuple):
            result, status = result
    except MathematicalFailure as exc:
        result = {"type": "failure", "error": type(exc).__name__, "message": str(exc)}
        status = 2
    except (UsageError, GoppaError, ValueError, ZeroDivisionError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        sys.stderr.write(f"{parser.prog}: error: {type(exc).__name__}: {exc}\n")
        return 1
    text = dumps(result)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
