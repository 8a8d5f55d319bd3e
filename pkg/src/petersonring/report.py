"""CSV tables and matplotlib figures written next to the text output."""

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def write_csv(path, rows, fields):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for row in rows:
            writer.writerow({k: row.get(k, "") for k in fields})
    return path


def plot_betti(series, path, title=""):
    """Bar chart of Betti numbers; ``series`` maps a label to a list b_0, b_2, ..."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    width = 0.8 / max(len(series), 1)
    for k, (label, betti) in enumerate(series.items()):
        xs = [2 * i + (k - (len(series) - 1) / 2) * width * 2 for i in range(len(betti))]
        ax.bar(xs, betti, width=2 * width, label=label)
    ax.set_xlabel("cohomological degree")
    ax.set_ylabel("Betti number")
    if title:
        ax.set_title(title)
    if len(series) > 1:
        ax.legend(fontsize="small", ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def suite_outputs(results, peterson_rows, out_dir):
    """summary.csv for the checks plus betti.png for the Peterson rings."""
    out = Path(out_dir)
    rows = [{"check": r.name, "passed": r.passed, "cases": r.cases} for r in results]
    files = [write_csv(out / "summary.csv", rows, ["check", "passed", "cases"])]
    if peterson_rows:
        series = {row["type"]: row["betti"] for row in peterson_rows}
        files.append(plot_betti(series, out / "betti.png", "Peterson rings"))
    return files
