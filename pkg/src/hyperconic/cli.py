"""Command-line interface.

    hyperconic generate --preset ellipse --output data.csv
    hyperconic fit      --input five_points.csv [--svg fit.svg]
    hyperconic dual     --input five_points.csv
    hyperconic train    --input data.csv --output model.txt [--svg train.svg]
    hyperconic classify --model model.txt --input data.csv

Exit status: 0 success, 1 usage or input-file error, 2 numeric failure
(degenerate configuration, ambiguous fit, divergence, sampling budget).
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import _backend, formats
from .conic_space import conic_dim, embed_points, tau_inv
from .datasets import PRESETS, DatasetSpec, generate_dataset
from .errors import HyperconicError
from .fit import classify_conic, dual_vector, fit_exact, fit_oracle
from .perceptron import (
    ELLIPTICAL,
    FLAVORS,
    LabeledDataset,
    TrainConfig,
    TransferFunction,
    decision_matrix,
    extract_conic,
    predict,
    train,
)
from .svg import PlotSpec, render

EXIT_USAGE = 1
EXIT_NUMERIC = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _floats(text: str) -> np.ndarray:
    try:
        return formats.parse_vector(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _fmt_row(v, digits=6):
    return "  ".join(f"{x: .{digits}g}" for x in v)


def _print_matrix(A, out):
    for row in np.asarray(A):
        print("  [" + _fmt_row(row) + "]", file=out)


def _standard_form_lines(A, out):
    if A.shape != (3, 3):
        print("standard form: only plane conics are classified", file=out)
        return
    sf = classify_conic(A)
    print(f"kind: {sf.kind}", file=out)
    print(f"equation: {sf.equation()}", file=out)
    if sf.kind in ("ellipse", "hyperbola", "parabola"):
        cx, cy = sf.center + 0.0
        print(f"center: ({cx:.6g}, {cy:.6g})", file=out)
        print(f"rotation: {sf.rotation:.6g} rad", file=out)


def cmd_generate(args, out):
    if args.preset and args.matrix is not None:
        raise UsageError("give either --preset or --matrix, not both")
    kw = dict(per_class=args.per_class, margin=args.margin, noise=args.noise, seed=args.seed)
    if args.preset:
        spec = DatasetSpec.from_preset(args.preset, **kw)
        if args.lo is not None or args.hi is not None:
            lo = args.lo if args.lo is not None else spec.lo
            hi = args.hi if args.hi is not None else spec.hi
            spec = DatasetSpec(spec.matrix, lo, hi, name=args.preset, **kw)
    elif args.matrix is not None:
        if args.lo is None or args.hi is None:
            raise UsageError("--matrix needs --lo and --hi")
        spec = DatasetSpec(formats.matrix_from_upper(args.matrix), args.lo, args.hi, **kw)
    else:
        raise UsageError("one of --preset or --matrix is required")
    data = generate_dataset(spec)
    formats.write_dataset(args.output, data)
    print(f"wrote {len(data)} points ({spec.per_class} per class) to {args.output}", file=out)
    if args.svg:
        formats.atomic_write(args.svg, render(data.points, data.labels, spec.matrix, lo=spec.lo, hi=spec.hi))


def _read_fit_points(path):
    X, _ = formats.read_points(path)
    return X


def cmd_fit(args, out):
    X = _read_fit_points(args.input)
    D = conic_dim(X.shape[1])
    if X.shape[0] == D - 1:
        res = fit_exact(X)
        conic, residuals = res.conic, res.residuals
        method = "wedge-and-dual"
    else:
        conic = fit_oracle(X)
        residuals = embed_points(X) @ conic
        method = "least-squares (minimal-residual direction)"
    A = tau_inv(conic)
    print(f"method: {method}", file=out)
    print(f"conic vector: {formats.format_vector(conic)}", file=out)
    print("matrix:", file=out)
    _print_matrix(A, out)
    _standard_form_lines(A, out)
    print(f"residuals: {_fmt_row(residuals, 3)}", file=out)
    print(f"max |residual| / |conic|: {np.max(np.abs(residuals)) / np.linalg.norm(conic):.3g}", file=out)
    if args.output:
        formats.atomic_write(args.output, formats.format_vector(conic) + "\n")
    if args.svg and X.shape[1] == 2:
        formats.atomic_write(args.svg, render(X, None, A))


def cmd_dual(args, out):
    X = _read_fit_points(args.input)
    conic, _ = dual_vector(X)
    print(formats.format_vector(conic), file=out)


def cmd_train(args, out):
    data = formats.read_dataset(args.input)
    cfg = TrainConfig(
        eta=args.eta,
        max_epochs=args.epochs,
        target_accuracy=args.target_accuracy,
        seed=args.seed,
        transfer=TransferFunction(args.transfer, args.beta),
        standardize=not args.no_standardize,
    )
    model, report = train(data, cfg, args.flavor)
    formats.write_model(args.output, model)
    print(f"backend: {_backend.BACKEND}", file=out)
    print(f"epochs: {report.epochs}  accuracy: {report.accuracy:.4f}  "
          f"converged: {'yes' if report.converged else 'no'}  time: {report.seconds:.3f}s", file=out)
    n = len(model.weights)
    sym = "ω" if model.flavor == ELLIPTICAL else "w"
    print(f"weights ({sym}1,...,{sym}{n}) = ({', '.join(f'{w:.2f}' for w in model.weights)})", file=out)
    if model.flavor == ELLIPTICAL:
        A, _ = extract_conic(model)
        print("matrix:", file=out)
        _print_matrix(A, out)
        _standard_form_lines(A, out)
    print(f"model written to {args.output}", file=out)
    if args.svg and data.m == 2:
        formats.atomic_write(args.svg, render(data.points, data.labels, decision_matrix(model)))


def cmd_classify(args, out):
    model = formats.read_model(args.model)
    X, y = formats.read_points(args.input)
    if X.shape[1] != model.m:
        raise UsageError(f"model is for R^{model.m}, points are in R^{X.shape[1]}")
    pred = predict(model, X)
    header = [f"x{i + 1}" for i in range(model.m)] + ["predicted"]
    print(",".join(header), file=out)
    for p, lab in zip(X, pred):
        print(",".join([formats.format_float(v) for v in p] + ["+1" if lab > 0 else "-1"]), file=out)
    if y is not None:
        print(f"accuracy: {np.mean(pred == y):.4f}", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperconic", description="Hyperconic fitting and the elliptical perceptron.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="sample a labelled dataset around a ground-truth conic")
    g.add_argument("--preset", choices=sorted(PRESETS))
    g.add_argument("--matrix", type=_floats, help="upper triangle of A, row-major, comma-separated")
    g.add_argument("--lo", type=_floats, help="box lower corner, comma-separated")
    g.add_argument("--hi", type=_floats, help="box upper corner, comma-separated")
    g.add_argument("--per-class", type=int, default=100)
    g.add_argument("--margin", type=float, default=0.05)
    g.add_argument("--noise", type=float, default=0.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", required=True)
    g.add_argument("--svg")
    g.set_defaults(func=cmd_generate)

    f = sub.add_parser("fit", help="exact conic through D-1 points (least squares if more)")
    f.add_argument("--input", required=True)
    f.add_argument("--output", help="write the conic vector line here")
    f.add_argument("--svg")
    f.set_defaults(func=cmd_fit)

    d = sub.add_parser("dual", help="raw Clifford dual of the wedge of D-1 embedded points")
    d.add_argument("--input", required=True)
    d.set_defaults(func=cmd_dual)

    t = sub.add_parser("train", help="train a perceptron on a labelled CSV dataset")
    t.add_argument("--input", required=True)
    t.add_argument("--output", required=True, help="model file")
    t.add_argument("--flavor", choices=FLAVORS, default=ELLIPTICAL)
    t.add_argument("--eta", type=float, default=0.05)
    t.add_argument("--epochs", type=int, default=5000)
    t.add_argument("--target-accuracy", type=float, default=1.0)
    t.add_argument("--transfer", choices=TransferFunction.KINDS, default="bipolar-sigmoid")
    t.add_argument("--beta", type=float, default=1.0)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--no-standardize", action="store_true",
                   help="train on raw coordinates instead of centred and scaled ones")
    t.add_argument("--svg")
    t.set_defaults(func=cmd_train)

    c = sub.add_parser("classify", help="label points with a trained model")
    c.add_argument("--model", required=True)
    c.add_argument("--input", required=True)
    c.set_defaults(func=cmd_classify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except HyperconicError as exc:
        print(f"hyperconic: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, ValueError, OSError) as exc:
        print(f"hyperconic: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
