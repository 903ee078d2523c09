#!/usr/bin/env python3
"""
Benchmark charts
Plot closed vs classical timings from the benchmark history.
"""

from pathlib import Path

import matplotlib.pyplot as plt

from .bench import get_runs, get_trials
from .config import BENCH_DB, CHARTS_DIR
from .utils import log


def plot_medians(save_path=None, show=True, shape=None, db_path=BENCH_DB):
    """Scatter of median straightening time per run against the Kostka number."""
    rows = [r for r in get_runs(shape, db_path) if r[5] is not None]

    if not rows:
        log("No benchmark runs to plot")
        return

    kostka = [r[3] for r in rows]
    closed = [r[5] for r in rows]
    classical = [r[6] for r in rows]

    fig, ax = plt.subplots(figsize=(10, 6))

    ax.scatter(kostka, closed, color='#1f77b4', s=30, label='Closed formula', alpha=0.7)
    ax.scatter(kostka, classical, color='#ff7f0e', s=30, label='Classical rewriting', alpha=0.7)

    ax.set_xlabel('Kostka number K', fontsize=12)
    ax.set_ylabel('Median time per filling (ms)', fontsize=12)
    ax.set_yscale('log')
    title = 'Straightening time by basis size'
    if shape:
        title += f' (shape {shape})'
    ax.set_title(title, fontsize=14, fontweight='bold')
    ax.legend(loc='upper left')
    ax.grid(True, alpha=0.3)

    plt.tight_layout()

    if save_path:
        Path(save_path).parent.mkdir(parents=True, exist_ok=True)
        plt.savefig(save_path, dpi=150)
        log(f"Chart saved to {save_path}")

    if show:
        plt.show()

    return fig


def plot_ratio_histogram(save_path=None, show=True, run_id=None, db_path=BENCH_DB):
    """Histogram of classical/closed time ratios over the trials of one run."""
    trials = get_trials(run_id, db_path)
    ratios = [classical / closed for _, closed, classical, _, _ in trials if closed > 0]

    if not ratios:
        log("No trials to plot")
        return

    fig, ax = plt.subplots(figsize=(10, 6))

    ax.hist(ratios, bins=20, edgecolor='black', alpha=0.7, color='#2ecc71')

    ax.set_xlabel('Classical time / closed time', fontsize=12)
    ax.set_ylabel('Number of fillings', fontsize=12)
    ax.set_title('Speedup of the closed formula per filling', fontsize=14, fontweight='bold')
    ax.axvline(1.0, color='black', linestyle='--', alpha=0.6)
    ax.grid(True, axis='y', alpha=0.3)

    plt.tight_layout()

    if save_path:
        Path(save_path).parent.mkdir(parents=True, exist_ok=True)
        plt.savefig(save_path, dpi=150)
        log(f"Chart saved to {save_path}")

    if show:
        plt.show()

    return fig


def main():
    """CLI entry point."""
    import argparse

    parser = argparse.ArgumentParser(description="Chart straightening benchmark history")
    parser.add_argument("--type", choices=["scatter", "histogram"], default="scatter",
                        help="Chart type: scatter (medians per run) or histogram (ratios of one run)")
    parser.add_argument("--save", type=str, help="Save chart to file (e.g., chart.png)")
    parser.add_argument("--no-show", action="store_true", help="Don't display the chart")
    parser.add_argument("--shape", type=str, help="Only runs of this shape, e.g. 4,3,2")
    parser.add_argument("--run", type=int, help="Run id for the histogram (default: latest)")

    args = parser.parse_args()

    if args.type == "scatter":
        save_path = Path(args.save) if args.save else CHARTS_DIR / "medians.png"
        plot_medians(save_path=save_path, show=not args.no_show, shape=args.shape)
    elif args.type == "histogram":
        save_path = Path(args.save) if args.save else CHARTS_DIR / "ratios.png"
        plot_ratio_histogram(save_path=save_path, show=not args.no_show, run_id=args.run)


if __name__ == "__main__":
    main()
