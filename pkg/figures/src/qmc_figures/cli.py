"""Command line front end: ``figures <kind> --in <csv...> --out <png/svg>``."""

from __future__ import annotations

import argparse
import sys

from .plots import KINDS, FigureDataError, PlotSpec, render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render multicore sweep CSVs into the standard figure layouts.",
    )
    parser.add_argument("kind", choices=KINDS, help="figure layout to render")
    parser.add_argument("--in", dest="inputs", nargs="+", required=True,
                        metavar="CSV", help="input CSV files (checkpoint and/or summary)")
    parser.add_argument("--out", required=True, help="output image path (.png or .svg)")
    parser.add_argument("--group-keys", default=None,
                        help="comma-separated columns that must exist for grouping")
    parser.add_argument("--qubits-per-core", type=int, default=None,
                        help="restrict the scaling layout to one core size")
    return parser


def cli_main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    group_keys = tuple(k for k in (args.group_keys or "").split(",") if k)
    try:
        spec = PlotSpec(
            figure_kind=args.kind,
            inputs=tuple(args.inputs),
            output=args.out,
            group_keys=group_keys,
            qubits_per_core=args.qubits_per_core,
        )
        render(spec)
    except (FigureDataError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
