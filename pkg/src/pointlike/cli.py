"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 domain error, 4 internal invariant
failure. Data goes to stdout (or ``--output``), messages to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import extensions as ext
from . import massjump as mj
from . import regularization as reg
from . import scattering as sc
from . import spincurrent as spin
from .core import JunctionMatrix, PointlikeError

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INTERNAL = 4

FAMILIES = {
    "delta": ext.DeltaPotential,
    "delta-prime": ext.DeltaPrime,
    "flux": ext.MagneticFlux,
    "delta-one": ext.DeltaOne,
}

TABLE = [
    ("I", "delta", "[[1, 0], [X1, 1]]", "(1,0)", ext.ExtensionClass.PURE_POTENTIAL, 2.0),
    ("II", "delta-prime", "[[1, -X4], [0, 1]]", "R+", ext.ExtensionClass.MASS_JUMP, 2.0),
    ("III", "flux", "exp(2 pi i alpha) [[1, 0], [0, 1]]", "U(1)", ext.ExtensionClass.MAGNETIC, 0.3),
    ("IV", "delta-one", "[[(2+X2)/(2-X2), 0], [0, (2-X2)/(2+X2)]]", "R+ x Z",
     ext.ExtensionClass.MAGNETIC_MASS_JUMP, 0.5),
]


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


def _complex_json(z):
    return {"re": float(z.real), "im": float(z.imag)}


def _matrix_json(a):
    return [[_complex_json(z) for z in row] for row in np.asarray(a)]


def _parse_matrix(text):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"--matrix expects 8 comma-separated reals, got {text!r}")
    if len(vals) != 8:
        raise UsageError(f"--matrix expects 8 reals (row-major re,im), got {len(vals)}")
    z = [complex(vals[i], vals[i + 1]) for i in range(0, 8, 2)]
    return np.array([[z[0], z[1]], [z[2], z[3]]])


def _parse_floats(text, name):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{name} expects a comma-separated list of numbers")


def _junction(args):
    """Family instance (canonical) or JunctionMatrix (raw) from the flags."""
    family = getattr(args, "family", None)
    matrix = getattr(args, "matrix", None)
    if family == "raw" or (family is None and matrix is not None):
        if matrix is None:
            raise UsageError("raw junction needs --matrix re,im,re,im,re,im,re,im")
        return JunctionMatrix(_parse_matrix(matrix))
    if family is None:
        raise UsageError("give --family <name> --param <v> or --matrix")
    if args.param is None:
        raise UsageError(f"--family {family} needs --param")
    return FAMILIES[family](args.param)


def cmd_smatrix(args):
    j = _junction(args)
    s = sc.smatrix(j, args.k)
    p = sc.reflection_transmission(s)
    closed = None
    if not isinstance(j, JunctionMatrix):
        closed = float(np.max(np.abs(s.matrix - sc.closed_form_smatrix(j, args.k).matrix)))
    return {
        "k": s.k,
        "S": _matrix_json(s.matrix),
        "R": p.R,
        "T": p.T,
        "unitarity_residual": s.unitarity_residual(),
        "generic_vs_closed_residual": closed,
    }


def cmd_sweep(args):
    if not (0 < args.kmin < args.kmax):
        raise UsageError("need 0 < kmin < kmax")
    if args.steps < 2:
        raise UsageError("need --steps >= 2")
    ks = np.linspace(args.kmin, args.kmax, args.steps)
    rows = sc.sweep(_junction(args), ks)
    return [dict(zip(("k", "R", "T", "unitarity_residual"), r)) for r in rows]


def cmd_regularize(args):
    widths = _parse_floats(args.widths, "--widths")
    rows = reg.convergence_study(args.alpha, args.epsilon, widths, steps=args.steps)
    return [
        {"width": r.width, "deviation": r.deviation, "empirical_order": r.empirical_order}
        for r in rows
    ]


def cmd_massjump(args):
    c = mj.correspondence(args.mu)
    return {
        "mu": c["mu"],
        "b": c["b"],
        "lambda": c["lambda"],
        "X2": c["X2"],
        "M_massjump": _matrix_json(c["M_massjump"]),
        "M_rescaled": _matrix_json(c["M_rescaled"]),
        "delta_one_match_residual": c["delta_one_match_residual"],
    }


def cmd_classify(args):
    r = spin.classify(_junction(args))
    return {
        "label": r.label.value,
        "time_reversal_ok": r.time_reversal_ok,
        "time_reversal_deviation": r.time_reversal_deviation,
        "sesquilinear_ok": r.sesquilinear_ok,
        "M": _matrix_json(r.matrix),
    }


def table_rows():
    """Table I with the classification recomputed live at representative parameters."""
    rows = []
    for row, name, form, group, label, param in TABLE:
        fam = FAMILIES[name](param)
        report = spin.classify(fam)
        if report.label is not label or fam.group != group:
            raise InternalError(
                f"row {row}: live classification {report.label.value!r} "
                f"disagrees with table label {label.value!r}"
            )
        rows.append({
            "row": row,
            "family": name,
            "matrix": form,
            "group": group,
            "label": label.value,
            "parameter": param,
            "live_label": report.label.value,
            "preserves_pairing": report.sesquilinear_ok,
            "time_reversal_ok": report.time_reversal_ok,
        })
    return rows


def cmd_table(args):
    return table_rows()


def _flatten(d, prefix=""):
    out = {}
    for key, v in d.items():
        name = f"{prefix}{key}"
        if isinstance(v, dict):
            out.update(_flatten(v, name + "_"))
        elif isinstance(v, list):
            for i, row in enumerate(v):
                for jdx, z in enumerate(row):
                    out.update(_flatten(z, f"{name}{i + 1}{jdx + 1}_"))
        else:
            out[name] = v
    return out


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(data, fmt):
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
    rows = data if isinstance(data, list) else [data]
    rows = [_flatten(r) for r in rows]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(rows[0]))
    for r in rows:
        w.writerow([_csv_value(v) for v in r.values()])
    return buf.getvalue()


COMMANDS = {
    "smatrix": (cmd_smatrix, "json"),
    "sweep": (cmd_sweep, "csv"),
    "regularize": (cmd_regularize, "csv"),
    "massjump": (cmd_massjump, "json"),
    "classify": (cmd_classify, "json"),
    "table": (cmd_table, "json"),
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pointlike",
        description="Point interactions of the 1D free Schrodinger operator.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--output", default=None, help="write to this file instead of stdout")

    def junction_flags(p, raw=True):
        names = list(FAMILIES) + (["raw"] if raw else [])
        p.add_argument("--family", choices=names)
        p.add_argument("--param", type=float)
        p.add_argument("--matrix", help="re,im,re,im,re,im,re,im (row-major)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smatrix", parents=[common], help="S-matrix at one wavenumber")
    junction_flags(p)
    p.add_argument("--k", type=float, required=True)

    p = sub.add_parser("sweep", parents=[common], help="R and T over a linear k grid")
    junction_flags(p)
    p.add_argument("--kmin", type=float, required=True)
    p.add_argument("--kmax", type=float, required=True)
    p.add_argument("--steps", type=int, default=50)

    p = sub.add_parser("regularize", parents=[common], help="finite-width flux strip convergence")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--widths", required=True)
    p.add_argument("--steps", type=int, default=reg.DEFAULT_STEPS)

    p = sub.add_parser("massjump", parents=[common], help="mass ratio -> delta^(1) strength")
    p.add_argument("--mu", type=float, required=True)

    p = sub.add_parser("classify", parents=[common], help="potential/magnetic classification")
    junction_flags(p)

    sub.add_parser("table", parents=[common], help="classification table, recomputed live")
    return parser


def _emit(text, path):
    if path is None:
        out = getattr(sys.stdout, "buffer", None)
        if out is None:
            sys.stdout.write(text)
        else:
            sys.stdout.flush()
            out.write(text.encode("utf-8"))
            out.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad flags
    func, default_fmt = COMMANDS[args.command]
    try:
        data = func(args)
        text = render(data, args.format or default_fmt)
    except UsageError as e:
        print(f"pointlike {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PointlikeError, ValueError) as e:
        print(f"pointlike {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalError as e:
        print(f"pointlike {args.command}: internal invariant failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(text, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
