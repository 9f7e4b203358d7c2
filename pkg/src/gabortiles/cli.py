"""Command-line interface.

Exit status: 0 on success, 2 when a check fails with a witness, 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2

THREAD_VARS = ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS")

log = logging.getLogger("gabortiles")


class UsageError(Exception):
    pass


def _apply_thread_cap():
    raw = os.environ.get("GABORTILES_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
        if n < 1:
            raise ValueError
    except ValueError:
        raise UsageError(f"GABORTILES_THREADS must be a positive integer, got {raw!r}") from None
    for var in THREAD_VARS:
        os.environ.setdefault(var, str(n))


def _scalar(text: str, name: str, warn: bool = False):
    from .intervals import to_scalar
    try:
        x = to_scalar(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"--{name}: cannot parse {text!r} ({e})") from None
    if warn and isinstance(x, float):
        log.warning("--%s %s parsed as a float; results use tolerance mode. Pass p/q for exact arithmetic.",
                    name, text)
    return x


def _pair(text: str, name: str):
    bits = text.split(",")
    if len(bits) != 2:
        raise UsageError(f"--{name} expects two comma-separated values, got {text!r}")
    return tuple(_scalar(b.strip(), name) for b in bits)


def _box(text: str, name: str):
    bits = [b.strip() for b in text.split(",")]
    if len(bits) == 2:
        return tuple(_scalar(b, name) for b in bits)
    if len(bits) == 4:
        v = [_scalar(b, name) for b in bits]
        return ((v[0], v[1]), (v[2], v[3]))
    raise UsageError(f"--{name} expects lo,hi or x0,x1,y0,y1, got {text!r}")


def _load_json(path: str, what: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {what} file {path!r}: {e}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{what} file {path!r} is not valid JSON: {e}") from None


def _load_lambda(path: str):
    from .tiling import TranslationSet1D, TranslationSet2D
    d = _load_json(path, "translation set")
    try:
        if isinstance(d, dict) and d.get("dim") == 2:
            return TranslationSet2D.from_json(d)
        return TranslationSet1D.from_json(d)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise UsageError(f"schema error in {path!r}: {e}. Expected "
                         '{"dim":1,"points":[...],"cosets":[{"p":"2","o":"1/2"}]} or '
                         '{"dim":2,"fibers":[{"t":"0","set":{...}}],"t_period":"1"}') from None


def _window(args):
    from .window import WindowParams
    try:
        return WindowParams(_scalar(args.alpha, "alpha", True), _scalar(args.beta, "beta", True))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    from .output import dumps
    _emit(args, dumps(obj) + "\n")


# subcommands ---------------------------------------------------------------------

def cmd_classify(args) -> int:
    from .tiling import laba_classify
    a, b = _scalar(args.alpha, "alpha", True), _scalar(args.beta, "beta", True)
    tol = args.tol if (isinstance(a, float) or isinstance(b, float)) else None
    try:
        c = laba_classify(a, b, tol)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_json(args, c.to_json())
    return EXIT_OK


def cmd_zeros(args) -> int:
    from .output import dumps, zeros_csv, zeros_svg
    from .zerosets import sample, zero_catalog
    w = _window(args)
    zs = zero_catalog(w)
    if zs is None:
        raise UsageError("no zero catalog for this regime: need 0 < alpha < 1/2 with integer beta, "
                         "or alpha = 1/2 with beta >= 1/2")
    t_max, nu_max = float(_scalar(args.tmax, "tmax")), float(_scalar(args.numax, "numax"))
    pts = sample(zs, t_max, nu_max, args.resolution)
    if args.format == "csv":
        _emit(args, zeros_csv(pts))
    elif args.format == "svg":
        _emit(args, zeros_svg(pts, t_max, nu_max, w.alpha, w.beta))
    else:
        _emit(args, dumps({"catalog": zs.to_json(),
                           "points": [[p.t, p.nu, p.component_id, p.component_kind] for p in pts]}) + "\n")
    return EXIT_OK


def _lambda_2d(path):
    from .tiling import TranslationSet2D
    lam = _load_lambda(path)
    if not isinstance(lam, TranslationSet2D):
        raise UsageError(f"{path!r} holds a 1-D set; this command needs a 2-D translation set (dim 2)")
    return lam


def cmd_certify(args) -> int:
    from .gabor import CertificationError, GaborSystem, certify_basis
    w = _window(args)
    lam = _lambda_2d(args.lam)
    box = _box(args.window, "window")
    try:
        rep = certify_basis(GaborSystem(w, lam), box, args.tol, args.probes, args.trunc)
    except (CertificationError, ValueError) as e:
        raise UsageError(str(e)) from None
    _emit_json(args, rep.to_json())
    return EXIT_OK if rep.certified else EXIT_FAIL


def cmd_framesum(args) -> int:
    from .gabor import frame_sum
    w = _window(args)
    lam = _lambda_2d(args.lam)
    omega = _pair(args.omega, "omega")
    try:
        fs = frame_sum(w, lam, omega, args.trunc)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_json(args, {"omega": list(omega), **fs.to_json()})
    log.info("frame sum %.12f +/- %.3g", fs.value, fs.tail_bound)
    return EXIT_OK


def cmd_tile_check(args) -> int:
    from .intervals import IntervalUnion
    from .tiling import ProductRegion2D, TranslationSet1D, check_packing_1d, check_tiling_1d, check_tiling_2d
    lam = _load_lambda(args.lam)
    box = _box(args.window, "window")
    try:
        if isinstance(lam, TranslationSet1D):
            if args.region:
                A = IntervalUnion.from_json(_load_json(args.region, "region"))
            elif args.alpha and args.beta:
                A = _window(args).omega
            else:
                raise UsageError("a 1-D check needs --region (interval union JSON) or --alpha/--beta")
            if len(box) != 2 or isinstance(box[0], tuple):
                raise UsageError("a 1-D check needs --window lo,hi")
            check = check_packing_1d if args.packing else check_tiling_1d
            v = check(A, lam, box)
        else:
            if args.region:
                d = _load_json(args.region, "region")
                R = ProductRegion2D.from_json(d.get("region", d) if isinstance(d, dict) else d)
            elif args.alpha and args.beta:
                from .gabor import packing_region
                R = packing_region(_window(args)).region
            else:
                raise UsageError("a 2-D check needs --region or --alpha/--beta")
            if len(box) != 2 or not isinstance(box[0], tuple):
                raise UsageError("a 2-D check needs --window x0,x1,y0,y1")
            v = check_tiling_2d(R, lam, box)
    except UsageError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(str(e)) from None
    _emit_json(args, v.to_json())
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_pack_region(args) -> int:
    from .gabor import packing_region
    w = _window(args)
    try:
        D = packing_region(w)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit_json(args, {"window": w.to_json(), **D.to_json()})
    return EXIT_OK


# parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gabortiles", description="Orthonormal Gabor bases with two-interval windows.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, window=True):
        if window:
            sp.add_argument("--alpha", required=True, help="alpha in (0, 1/2], as p/q or decimal")
            sp.add_argument("--beta", required=True, help="beta > 0, as p/q or decimal")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")

    sp = sub.add_parser("classify", help="does the two-interval window tile the line?")
    common(sp)
    sp.add_argument("--tol", type=float, default=1e-9, help="tolerance used when the input is decimal")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("zeros", help="sample the zero set of V_g g")
    common(sp)
    sp.add_argument("--tmax", required=True)
    sp.add_argument("--numax", required=True)
    sp.add_argument("--resolution", type=int, default=200, help="points per continuous component")
    sp.add_argument("--format", choices=("csv", "svg", "json"), default="csv")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("certify", help="certify an orthonormal basis on a box")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True, help="2-D translation set JSON")
    sp.add_argument("--window", default="-4,4,-4,4", help="x0,x1,y0,y1")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--probes", type=int, default=25, help="frame-sum probes when certified")
    sp.add_argument("--trunc", type=int, default=200)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("framesum", help="sum of |V_g g(omega - lambda)|^2 over lambda")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--omega", required=True, help="t,nu")
    sp.add_argument("--trunc", type=int, default=200)
    sp.set_defaults(func=cmd_framesum)

    sp = sub.add_parser("tile-check", help="packing/tiling verdict for a set and translation set")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--region", help="interval union JSON (1-D) or region / pack-region JSON (2-D)")
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.add_argument("--window", required=True, help="lo,hi or x0,x1,y0,y1")
    sp.add_argument("--packing", action="store_true", help="1-D only: check packing instead of tiling")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_tile_check)

    sp = sub.add_parser("pack-region", help="emit the tight orthogonal packing region")
    common(sp)
    sp.set_defaults(func=cmd_pack_region)
    return p


VALUE_OPTIONS = ("--window", "--omega")


def _glue_values(argv: list) -> list:
    """Join value options to their argument so "-4,4,..." is not read as a flag."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="gabortiles: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        _apply_thread_cap()
        return args.func(args)
    except UsageError as e:
        print(f"gabortiles: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
