"""Render the bundled dataset to an SVG chart, the library way.

Run from the repository root:

    python3 demos/render_chart.py

The same figure is available from the command line as:

    quadfit -i data/pm25_monthly.csv --svg chart.svg \
        --metric "PM2.5" --y-label "PM2.5 Index" \
        --description "Kyiv, Shcherbakovskaya St."
"""

from pathlib import Path

from quadfit import PlotSpec, fit_polynomial, fit_report, parse_csv, render_plot

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data" / "pm25_monthly.csv"


def main() -> None:
    series = parse_csv(DATA.read_bytes())
    model, _ = fit_polynomial(series)
    report = fit_report(model, series)

    spec = PlotSpec(
        description="Kyiv, Shcherbakovskaya St.",
        metric_name="PM2.5",
        y_label="PM2.5 Index",
    )
    svg = render_plot(series, model, report, spec)

    out = Path(__file__).resolve().parent / "chart.svg"
    out.write_text(svg, encoding="utf-8")
    print(f"wrote {out} ({len(svg)} bytes)")
    print("render is deterministic: the same inputs always produce these exact bytes")


if __name__ == "__main__":
    main()
