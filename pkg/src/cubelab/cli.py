"""Command-line surface: matrix building, spectra, claim verification,
activation tables, Poisson search, sequences, Eulerian circuits, and plot
data emission (CSV only; rendering is out of scope).
"""

import argparse
import json
import sys
from fractions import Fraction

from . import sequences, verify
from .cubegraphs import (
    eulerian_circuit,
    hamming_distance_matrix,
    matrix_to_csv,
    matrix_to_json,
    ncube_adjacency,
    pow_cube_adjacency,
    pow_hamming_matrix,
    pow_tricube_laplacian,
    regular_tricube_adjacency,
    tricube_laplacian,
)
from .harmonic import min_energy_search
from .predicates import caf_table
from .spectra import eig_sym, spectrum_to_csv

FAMILIES = {
    "ncube": (ncube_adjacency, "binary"),
    "hamming": (hamming_distance_matrix, "binary"),
    "tricube": (tricube_laplacian, "binary"),
    "regtricube": (regular_tricube_adjacency, "binary"),
    "powcube": (pow_cube_adjacency, "ternary"),
    "powtri": (pow_tricube_laplacian, "ternary"),
    "powhamming": (pow_hamming_matrix, "ternary"),
}

SEQ_TAGS = {
    "trinomial": sequences.TRINOMIAL,
    "powtrimult": sequences.POW_TRI_MULT,
    "A013609": sequences.A013609,
    "A038220": sequences.A038220,
    "A080956neg": sequences.A080956_NEG,
    "A075848": sequences.A075848,
    "A072221": sequences.A072221,
    "A120908": sequences.A120908,
    "prodseq": sequences.PROD_SEQ,
    "A003946neg": sequences.A003946_NEG,
    "A060188": sequences.A060188,
    "A279019": sequences.A279019,
    "ballcoeff": sequences.BALL_COEFF,
}


def _build_matrix(family: str, n: int, ordering: str | None):
    constructor, default_ordering = FAMILIES[family]
    return constructor(n, ordering or default_ordering)


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(text)
    return range(value, value + 1)


def cmd_build(args) -> int:
    gm = _build_matrix(args.family, args.n, args.ordering)
    if args.format == "json":
        matrix_to_json(gm, args.out)
    else:
        matrix_to_csv(gm, args.out)
    print(f"wrote {gm.family} {gm.kind} n={gm.n} ({gm.N}x{gm.N}) to {args.out}")
    return 0


def cmd_spectrum(args) -> int:
    gm = _build_matrix(args.family, args.n, args.ordering)
    spec = eig_sym(gm, tol=args.tol)
    spectrum_to_csv(spec, args.out)
    print(f"wrote {gm.N} eigenvalues to {args.out}")
    return 0


def cmd_verify(args) -> int:
    claims = args.claims.split(",") if args.claims else None
    n_range = _parse_range(args.n_range) if args.n_range else None
    report = verify.run_verification(claims=claims, n_range=n_range, offline=args.offline)
    if args.report:
        report.write(args.report)
    for e in report.entries:
        n = "-" if e["n"] is None else e["n"]
        print(f"[{e['status']:>17}] {e['claim']:<12} n={n:<4} err={e['max_abs_err']:.3e}  {e['details']}")
    counts = report.summary()
    print(f"pass={counts['pass']} fail={counts['fail']} noted={counts['discrepancy-noted']}")
    return 0 if report.ok else 1


def cmd_activation(args) -> int:
    p_values = list(_parse_range(args.p)) if args.p else None
    rows = caf_table(args.n, p_values, mu=args.mu, scale=args.scale)
    with open(args.out, "w") as fh:
        fh.write("r,p,numerator,denominator,value,logistic\n")
        for r, p, num, den, value, ref in rows:
            fh.write(f"{r},{p},{num},{den},{value!r},{ref!r}\n")
    print(f"wrote {len(rows)} activation rows to {args.out}")
    return 0


def cmd_poisson(args) -> int:
    result = min_energy_search(args.n, args.ordering or "binary")
    energy = result.energy_as_fraction()
    exact = abs(float(energy) - result.best_energy) <= 1e-12
    payload = {
        "n": result.n,
        "best_energy_float": result.best_energy,
        "best_energy_num": energy.numerator if exact else None,
        "best_energy_den": energy.denominator if exact else None,
        "patterns": [[i + 1 for i in pattern] for pattern in result.best_patterns],
        "norm_l2": result.norm_l2,
    }
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(text, end="")
    return 0


def cmd_seq(args) -> int:
    tag = SEQ_TAGS[args.id]
    values = sequences.generate(tag, args.count)
    lines = []
    if tag in sequences.TRIANGLE_TAGS:
        index = 0
        for row in values:
            for v in row:
                lines.append(f"{index} {v}")
                index += 1
    else:
        start = sequences.START_INDEX[tag]
        for i, v in enumerate(values):
            if isinstance(v, Fraction):
                lines.append(f"{start + i} {v.numerator}/{v.denominator}")
            else:
                lines.append(f"{start + i} {v}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def cmd_euler(args) -> int:
    circuit = eulerian_circuit(args.n)
    if circuit is None:
        print(f"no Eulerian circuit: degree n(n+1)/2 = {args.n * (args.n + 1) // 2} is odd")
        return 0
    shift = 1 if args.one_based else 0
    print(" ".join(str(v + shift) for v in circuit))
    print(f"{len(circuit) - 1} edges")
    return 0


def cmd_plotdata(args) -> int:
    if args.what == "caf":
        return cmd_activation(args)
    if args.what == "extremes":
        n_range = _parse_range(args.n_range) if args.n_range else range(2, 8)
        with open(args.out, "w") as fh:
            fh.write("n,lambda_min,lambda_max,sum,product\n")
            for n in n_range:
                e = sequences.pow_hamming_extremes(n)
                fh.write(f"{n},{e.lambda_min!r},{e.lambda_max!r},{e.sum},{e.product}\n")
        print(f"wrote extremes for n in {list(n_range)} to {args.out}")
        return 0
    return cmd_spectrum(args)


def _add_common(parser, ordering=True, tol=False):
    if ordering:
        parser.add_argument(
            "--ordering",
            choices=["binary", "gray", "ternary", "ternary-gray"],
            default=None,
            help="vertex ordering (family default when omitted)",
        )
    if tol:
        parser.add_argument("--tol", type=float, default=1e-8, help="eigensolve residual tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a family matrix to CSV or JSON")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("spectrum", help="eigendecompose a family matrix to CSV")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    _add_common(p, tol=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run the claim verification harness")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--n-range", help="override dimension range, e.g. 2..6")
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--online", dest="offline", action="store_false", default=True,
                   help="allow network OEIS fetches (offline by default)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("activation", help="emit activation-function CSV data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", help="active-vertex counts, e.g. 1..8 (default: all)")
    p.add_argument("--mu", type=float, default=1.0, help="logistic steepness")
    p.add_argument("--scale", type=float, default=1.0,
                   help="x-axis scale for the logistic comparison column")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_activation)

    p = sub.add_parser("poisson", help="minimum-energy balanced sign-pattern search")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--out")
    _add_common(p)
    p.set_defaults(func=cmd_poisson)

    p = sub.add_parser("seq", help="emit sequence terms, b-file style")
    p.add_argument("--id", choices=sorted(SEQ_TAGS), required=True)
    p.add_argument("--count", type=int, default=15)
    p.add_argument("--out")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("euler", help="Eulerian circuit of the cube plus both diagonals")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--one-based", action="store_true")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("plotdata", help="emit plottable CSV (caf, spectrum, extremes)")
    p.add_argument("--what", choices=["caf", "spectrum", "extremes"], required=True)
    p.add_argument("--family", choices=sorted(FAMILIES), default="powtri")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--n-range", help="for extremes, e.g. 2..7")
    p.add_argument("--p", help="for caf")
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--out", required=True)
    _add_common(p, tol=True)
    p.set_defaults(func=cmd_plotdata)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
