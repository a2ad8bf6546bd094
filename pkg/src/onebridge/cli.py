"""Command line front end.

One executable, one verb per invocation.  Normal forms travel as the
shared literals (Schubert "S(r,s,t,rho)+", Conway "C[(a,b,a,b),...]"
with an optional ":1" suffix), ambient spaces as "--lens p/q", and every
verb can emit either plain text or a JSON object with the fixed fields
input, ambient, result and engine.

Exit codes: 0 success; 1 for anything wrong with the invocation itself
(unknown flags, malformed literals, bad integers); 2 when the input is
well formed but the requested computation does not apply to it (a link
instead of a knot, a double cover that does not exist); 3 when a
cross-check the user asked for disagrees (the components oracle, or any
failure inside a verification sweep).
"""

import argparse
import json
import random
import sys
from math import gcd

from .alexander import alexander_poly
from .doublecover import (
    closed_z_component,
    h1_double_cover,
    h1_double_cover_snf,
    s3_determinant,
    z_components,
)
from .exactalg import evaluate
from .knotgroup import (
    S3,
    LensSpace,
    double_cover_exists_schubert,
    h1_exterior,
    h1_exterior_snf,
    kfold_cover_exists,
    parse_lens,
    presentation,
)
from .mcg import ConwayForm, format_conway, parse_conway, two_bridge_to_conway
from .schubert import (
    SchubertForm,
    count_components_fast,
    count_components_oracle,
    format_schubert,
    from_satellite,
    from_torus_knot,
    from_two_bridge,
    is_knot,
    mirror,
    normalize,
    parse_schubert,
    swap_st,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    """Bad invocation: malformed literal, flag, or argument value."""


class MismatchError(Exception):
    """A requested cross-check failed."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with its own status 2 on bad usage; route everything
    # through UsageError instead so usage problems exit 1 uniformly.
    def error(self, message):
        raise UsageError(message)


def parse_form(text):
    """Parse either normal-form literal, dispatching on the first letter.

    >>> parse_form("S(1,3,0,2)+")
    SchubertForm(r=1, s=3, t=0, rho=2, eps=1)
    >>> parse_form("C[(0,0,0,0)]").a
    (0, 0)
    """
    stripped = text.lstrip()
    if stripped.startswith("S"):
        return parse_schubert(text)
    if stripped.startswith("C"):
        return parse_conway(text)
    raise ValueError("expected a literal starting with S(...) or C[...], "
                     "got %r" % text)


def _validated(fn, *args):
    # input-parsing stage: ValueError here is the caller's bad invocation
    try:
        return fn(*args)
    except ValueError as exc:
        raise UsageError(str(exc))


def _schubert_arg(text):
    form = _validated(parse_form, text)
    if not isinstance(form, SchubertForm):
        raise UsageError("this verb needs a Schubert literal S(...), got %r"
                         % text)
    return form


def _conway_arg(text):
    form = _validated(parse_form, text)
    if not isinstance(form, ConwayForm):
        raise UsageError("this verb needs a Conway literal C[...], got %r"
                         % text)
    return form


def _int_list(text, count=None, what="integer list"):
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise UsageError("%s must be comma-separated integers, got %r"
                         % (what, text))
    if count is not None and len(values) not in count:
        raise UsageError("%s needs %s integers, got %d"
                         % (what, " or ".join(map(str, count)), len(values)))
    return values


def _homology_json(inv):
    return {"free_rank": inv.free_rank, "torsion": list(inv.torsion),
            "display": str(inv)}


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def _cmd_components(args):
    form = _schubert_arg(args.form)
    fast = count_components_fast(form)
    if not args.oracle:
        return {"count": fast}, "leaf-count", str(fast)
    oracle = count_components_oracle(form)
    if oracle != fast:
        raise MismatchError(
            "component count mismatch on %s: leaf-count %d, trace %d"
            % (format_schubert(form), fast, oracle))
    text = "leaf-count: %d\ntrace: %d" % (fast, oracle)
    return {"count": fast, "oracle": oracle}, "leaf-count+trace", text


def _cmd_group(args):
    form = _schubert_arg(args.form)
    pres = presentation(form, args.lens)
    lines = ["generators: " + " ".join(pres.generators), "relators:"]
    lines += ["  " + str(rel) for rel in pres.relators]
    result = {"generators": list(pres.generators),
              "relators": [str(rel) for rel in pres.relators]}
    return result, "annulus-trace", "\n".join(lines)


def _cmd_h1_exterior(args):
    form = _schubert_arg(args.form)
    inv = h1_exterior(form, args.lens)
    return _homology_json(inv), "exponent-sums", str(inv)


def _cmd_alexander(args):
    form = _schubert_arg(args.form)
    poly = alexander_poly(form)
    coeffs = [[e, poly.coefficient(e)] for e in
              range(poly.min_exp(), poly.max_exp() + 1)] if not poly.is_zero() else []
    return ({"polynomial": str(poly), "coefficients": coeffs},
            "fox-calculus", str(poly))


def _cmd_cover_exists(args):
    form = _schubert_arg(args.form)
    if args.k < 2:
        raise UsageError("-k must be at least 2, got %d" % args.k)
    exists = kfold_cover_exists(form, args.lens, args.k)
    return ({"k": args.k, "exists": exists}, "exponent-sums",
            "yes" if exists else "no")


def _cmd_double_h1(args):
    form = _conway_arg(args.form)
    inv = h1_double_cover(form, args.lens)
    return _homology_json(inv), "z-divisors", str(inv)


def _cmd_determinant(args):
    form = _validated(parse_form, args.form)
    if isinstance(form, SchubertForm):
        det = abs(evaluate(alexander_poly(form), -1))
        engine = "fox-calculus"
    else:
        det = s3_determinant(form)
        engine = "z-recursion"
    return {"determinant": det}, engine, str(det)


def _cmd_convert(args):
    chosen = [(name, value) for name, value in [
        ("--move", args.move), ("--torus-knot", args.torus_knot),
        ("--two-bridge", args.two_bridge), ("--satellite", args.satellite),
        ("--two-bridge-word", args.two_bridge_word),
    ] if value is not None]
    if len(chosen) != 1:
        raise UsageError("convert needs exactly one of --move, --torus-knot, "
                         "--two-bridge, --satellite, --two-bridge-word")
    if args.move is not None:
        if args.form is None:
            raise UsageError("--move needs a Schubert literal argument")
        form = _schubert_arg(args.form)
        moved = {"normalize": normalize, "swap-st": swap_st,
                 "mirror": mirror}[args.move](form)
        return ({"form": format_schubert(moved)}, "normal-form-moves",
                format_schubert(moved))
    if args.form is not None:
        raise UsageError("constructor flags take no literal argument")
    # make the JSON input field say what was built rather than "convert"
    args.form = "%s %s" % chosen[0]
    if args.torus_knot is not None:
        p, q = _int_list(args.torus_knot, {2}, "--torus-knot")
        built = _validated(from_torus_knot, p, q)
    elif args.two_bridge is not None:
        vals = _int_list(args.two_bridge, {2, 3}, "--two-bridge")
        built = _validated(from_two_bridge, *vals)
    elif args.satellite is not None:
        vals = _int_list(args.satellite, {5}, "--satellite")
        built = _validated(from_satellite, *vals)
    else:
        word = _int_list(args.two_bridge_word, None, "--two-bridge-word")
        conway = _validated(two_bridge_to_conway, word)
        return ({"form": format_conway(conway)}, "slide-rewriting",
                format_conway(conway))
    return ({"form": format_schubert(built)}, "normal-form-moves",
            format_schubert(built))


def _lens_spaces_up_to(max_p):
    spaces = [S3]
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                spaces.append(LensSpace(p, q))
    return spaces


def _sweep_counts(bound):
    checked = failures = 0
    examples = []
    for eps in (1, -1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                for t in range(bound + 1):
                    n = 2 * r + 1 + s + t
                    for rho in range(n):
                        form = SchubertForm(r, s, t, rho, eps)
                        checked += 1
                        if count_components_fast(form) != \
                                count_components_oracle(form):
                            failures += 1
                            if len(examples) < 5:
                                examples.append(format_schubert(form))
    return checked, failures, examples


def _sweep_exterior(bound, max_p):
    spaces = _lens_spaces_up_to(max_p)
    checked = failures = 0
    examples = []
    for eps in (1, -1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                for t in range(bound + 1):
                    n = 2 * r + 1 + s + t
                    for rho in range(n):
                        form = SchubertForm(r, s, t, rho, eps)
                        if not is_knot(form):
                            continue
                        for space in spaces:
                            checked += 1
                            ok = (h1_exterior(form, space) ==
                                  h1_exterior_snf(form, space))
                            ok = ok and (kfold_cover_exists(form, space, 2) ==
                                         double_cover_exists_schubert(form,
                                                                      space))
                            if not ok:
                                failures += 1
                                if len(examples) < 5:
                                    examples.append("%s in %s" % (
                                        format_schubert(form), space))
    return checked, failures, examples


def _sweep_covers(samples, max_p, rng):
    spaces = _lens_spaces_up_to(max_p)
    checked = failures = 0
    examples = []
    for _ in range(samples):
        m = 2 * rng.randrange(1, 6)
        a = tuple(rng.randrange(-5, 6) for _ in range(m))
        first, second = z_components(a)
        ok = (closed_z_component(a, 1) == first and
              closed_z_component(a, 2) == second)
        form = ConwayForm(a, tuple(0 for _ in range(m)))
        space = rng.choice(spaces)
        ok = ok and (h1_double_cover(form, space) ==
                     h1_double_cover_snf(form, space))
        checked += 1
        if not ok:
            failures += 1
            if len(examples) < 5:
                examples.append("%s in %s" % (format_conway(form), space))
    return checked, failures, examples


def _sweep_alexander(bound):
    checked = failures = 0
    examples = []
    for eps in (1, -1):
        for r in range(bound + 1):
            for s in range(bound + 1):
                for t in range(bound + 1):
                    n = 2 * r + 1 + s + t
                    for rho in range(n):
                        form = SchubertForm(r, s, t, rho, eps)
                        if not is_knot(form):
                            continue
                        checked += 1
                        if abs(evaluate(alexander_poly(form), 1)) != 1:
                            failures += 1
                            if len(examples) < 5:
                                examples.append(format_schubert(form))
    return checked, failures, examples


def _cmd_sweep(args):
    rng = random.Random(args.seed)
    suites = [
        ("components", _sweep_counts(args.max_rst)),
        ("exterior", _sweep_exterior(min(args.max_rst, 3), args.max_lens_p)),
        ("covers", _sweep_covers(args.samples, args.max_lens_p, rng)),
        ("alexander", _sweep_alexander(min(args.max_rst, 2))),
    ]
    lines = []
    result = []
    bad = []
    for name, (checked, failures, examples) in suites:
        lines.append("%s: checked %d, failures %d" % (name, checked, failures))
        entry = {"suite": name, "checked": checked, "failures": failures}
        if examples:
            entry["examples"] = examples
            bad.extend("%s: %s" % (name, e) for e in examples)
        result.append(entry)
    if bad:
        raise MismatchError("sweep failures:\n" + "\n".join(bad))
    return {"suites": result}, "dual-route-sweeps", "\n".join(lines)


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------


def _build_parser():
    parser = _Parser(prog="onebridge",
                     description="exact invariants of 1-bridge torus knots")
    sub = parser.add_subparsers(dest="verb", metavar="verb")
    sub.required = True

    def add(name, handler, help_text, form=None, lens=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        if form:
            p.add_argument("form", help=form)
        if lens:
            p.add_argument("--lens", default="1/0", metavar="p/q",
                           help="ambient lens space (default 1/0, the "
                                "3-sphere)")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default text)")
        p.add_argument("--out", metavar="PATH",
                       help="write the JSON output to a file "
                            "(requires --format json)")
        return p

    p = add("components", _cmd_components,
            "number of link components of a Schubert form",
            form="Schubert literal, e.g. \"S(0,0,2,-3)+\"")
    p.add_argument("--oracle", action="store_true",
                   help="also run the cylinder trace and compare "
                        "(mismatch exits 3)")

    add("group", _cmd_group, "knot group presentation",
        form="Schubert literal", lens=True)
    add("h1-exterior", _cmd_h1_exterior, "first homology of the exterior",
        form="Schubert literal", lens=True)
    add("alexander", _cmd_alexander,
        "Alexander polynomial in the 3-sphere", form="Schubert literal")
    p = add("cover-exists", _cmd_cover_exists,
            "whether the k-fold cyclic cover branched over the knot exists",
            form="Schubert literal", lens=True)
    p.add_argument("-k", type=int, default=2, metavar="K",
                   help="covering degree (default 2)")
    add("double-h1", _cmd_double_h1,
        "first homology of the double branched cover",
        form="Conway literal, e.g. \"C[(3,0,1,0),(-1,0,1,0)]\"", lens=True)
    add("determinant", _cmd_determinant,
        "knot determinant in the 3-sphere (either literal)",
        form="Schubert or Conway literal")

    p = add("convert", _cmd_convert,
            "apply a normal-form move or build a form from standard data")
    p.add_argument("form", nargs="?",
                   help="Schubert literal (only with --move)")
    p.add_argument("--move", choices=("normalize", "swap-st", "mirror"),
                   help="move to apply to the literal argument")
    p.add_argument("--torus-knot", metavar="P,Q",
                   help="Schubert form of the (P,Q) torus knot")
    p.add_argument("--two-bridge", metavar="A,B[,E]",
                   help="Schubert form of the 2-bridge knot with odd "
                        "parameters A, B and optional sign E")
    p.add_argument("--satellite", metavar="A,B,E,P,Q",
                   help="Schubert form of the satellite with even A")
    p.add_argument("--two-bridge-word", metavar="W1,W2,...",
                   help="Conway form from an even 2-bridge twist sequence")

    p = add("sweep", _cmd_sweep,
            "run the dual-route verification suites (failures exit 3)")
    p.add_argument("--max-rst", type=int, default=4, metavar="N",
                   help="bound on r, s, t in the exhaustive suites "
                        "(default 4)")
    p.add_argument("--max-lens-p", type=int, default=6, metavar="P",
                   help="largest lens space order (default 6)")
    p.add_argument("--samples", type=int, default=200, metavar="K",
                   help="random Conway forms in the cover suite "
                        "(default 200)")
    p.add_argument("--seed", type=int, default=0, metavar="S",
                   help="seed for the random suite (default 0)")
    return parser


def run(args):
    """Dispatch a parsed command; returns the process exit code."""
    try:
        if args.out is not None and args.format != "json":
            raise UsageError("--out is only meaningful with --format json")
        if hasattr(args, "lens"):
            args.lens = _validated(parse_lens, args.lens)
        payload, engine, text = args.handler(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except MismatchError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION
    if args.format == "json":
        ambient = str(args.lens) if hasattr(args, "lens") else None
        blob = json.dumps({
            "input": getattr(args, "form", None) or args.verb,
            "ambient": ambient,
            "result": payload,
            "engine": engine,
        }, indent=2, sort_keys=True)
        if args.out is not None:
            with open(args.out, "w") as handle:
                handle.write(blob + "\n")
        else:
            print(blob)
    else:
        print(text)
    return EXIT_OK


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
