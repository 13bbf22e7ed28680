#!/usr/bin/env python3
"""Summarize and plot the CSV output of `qaoalab experiment`.

Reads pooled_<strategy>.csv, aggregate_<strategy>.csv and drift_pf.csv from
an experiment output directory, prints per-depth tables, and (when
matplotlib is installed) writes PNG figures next to the tables:

  alpha_vs_depth.png   pooled mean approximation ratio per depth, one line
                       per strategy, shaded by one standard deviation
  std_vs_depth.png     pooled std of the approximation ratio per depth
  drift.png            optimal-angle drift across depths (parameters fixing)

Only the Python standard library is required for the tables; figures are
skipped with a notice if matplotlib is missing.
"""

import argparse
import collections
import csv
import os
import sys

STRATEGIES = ("random", "pf")


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def load_pooled(out_dir):
    pooled = {}
    for strategy in STRATEGIES:
        path = os.path.join(out_dir, f"pooled_{strategy}.csv")
        if os.path.exists(path):
            pooled[strategy] = read_rows(path)
    return pooled


def print_pooled_tables(pooled):
    for strategy, rows in pooled.items():
        print(f"\n== pooled ({strategy}) ==")
        print(f"{'n':>4} {'depth':>5} {'trials':>6} {'mean_alpha':>12} {'std_alpha':>12}")
        for r in rows:
            print(
                f"{r['n']:>4} {r['depth']:>5} {r['n_trials']:>6} "
                f"{float(r['mean_alpha']):>12.6f} {float(r['std_alpha']):>12.6f}"
            )


def group_by_n(rows):
    by_n = collections.defaultdict(list)
    for r in rows:
        by_n[int(r["n"])].append((int(r["depth"]), float(r["mean_alpha"]), float(r["std_alpha"])))
    for series in by_n.values():
        series.sort()
    return by_n


def make_figures(out_dir, pooled, save_dir):
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not available; skipping figures", file=sys.stderr)
        return

    fig, ax = plt.subplots(figsize=(6, 4))
    for strategy, rows in pooled.items():
        for n, series in sorted(group_by_n(rows).items()):
            depths = [d for d, _, _ in series]
            means = [m for _, m, _ in series]
            stds = [s for _, _, s in series]
            line = ax.plot(depths, means, marker="o", label=f"{strategy}, n={n}")[0]
            ax.fill_between(
                depths,
                [m - s for m, s in zip(means, stds)],
                [m + s for m, s in zip(means, stds)],
                alpha=0.15,
                color=line.get_color(),
            )
    ax.set_xlabel("depth p")
    ax.set_ylabel("mean approximation ratio")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(os.path.join(save_dir, "alpha_vs_depth.png"), dpi=150)
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6, 4))
    for strategy, rows in pooled.items():
        for n, series in sorted(group_by_n(rows).items()):
            ax.plot(
                [d for d, _, _ in series],
                [s for _, _, s in series],
                marker="o",
                label=f"{strategy}, n={n}",
            )
    ax.set_xlabel("depth p")
    ax.set_ylabel("std of approximation ratio")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(os.path.join(save_dir, "std_vs_depth.png"), dpi=150)
    plt.close(fig)

    drift_path = os.path.join(out_dir, "drift_pf.csv")
    if os.path.exists(drift_path):
        drift = collections.defaultdict(list)
        for r in read_rows(drift_path):
            key = (r["instance_id"], r["kind"], int(r["index"]))
            drift[key].append((int(r["depth"]), float(r["value"])))
        fig, ax = plt.subplots(figsize=(6, 4))
        for (instance, kind, index), series in sorted(drift.items()):
            series.sort()
            ax.plot(
                [d for d, _ in series],
                [v for _, v in series],
                marker=".",
                alpha=0.6,
                label=f"{instance} {kind}{index}",
            )
        ax.set_xlabel("depth p")
        ax.set_ylabel("canonical angle")
        if len(drift) <= 12:
            ax.legend(fontsize=7)
        ax.grid(True, alpha=0.3)
        fig.tight_layout()
        fig.savefig(os.path.join(save_dir, "drift.png"), dpi=150)
        plt.close(fig)

    print(f"\nfigures written to {save_dir}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out_dir", help="experiment output directory")
    parser.add_argument("--save-dir", default=None, help="directory for PNGs (default: out_dir)")
    args = parser.parse_args()

    pooled = load_pooled(args.out_dir)
    if not pooled:
        sys.exit(f"no pooled_*.csv found in {args.out_dir}")
    print_pooled_tables(pooled)
    save_dir = args.save_dir or args.out_dir
    os.makedirs(save_dir, exist_ok=True)
    make_figures(args.out_dir, pooled, save_dir)


if __name__ == "__main__":
    main()
