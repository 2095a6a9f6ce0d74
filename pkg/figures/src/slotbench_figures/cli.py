"""Command-line entry: figures {bars|curves} --in <csv> --out <image>."""
import argparse
import sys

from .render import MissingColumns, render_bars, render_curves, save_figure


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render slotbench result CSVs into SVG/PNG figures",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("bars", "collapse bar chart from fig_bars.csv"),
                            ("curves", "training curves from fig_curves.csv")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="input", required=True,
                       help="input CSV path")
        p.add_argument("--out", dest="output", required=True,
                       help="output image path (.svg default, .png allowed)")
    args = parser.parse_args(argv)

    render = render_bars if args.command == "bars" else render_curves
    try:
        fig, info = render(args.input)
    except FileNotFoundError:
        print(f"error: no such file: {args.input}", file=sys.stderr)
        return 2
    except (MissingColumns, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = save_figure(fig, args.output)
    detail = (f"{info['n_bars']} bars" if args.command == "bars"
              else f"{info['n_lines']} lines")
    print(f"wrote {path} ({detail})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
