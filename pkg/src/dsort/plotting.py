"""Figure rendering for the report-producing CLI paths.

Each plotter takes the already-computed rows that back a CSV report and
writes one figure file next to it.  The Agg backend is forced so runs are
headless-safe and the bytes written for a fixed input are reproducible.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

# mean of the scaled-fluctuation limit law for reference lines
GUE_FLUCTUATION_MEAN = -1.7711


def plot_exact(rows, path: str, variant: str) -> None:
    """Exact expectation against n.

    ``rows`` are (n, Fraction) pairs from one of the exact engines.
    """
    ns = [n for n, _ in rows]
    vals = [float(v) for _, v in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(ns, vals, "o-", color="tab:blue", label=f"exact {variant.upper()}")
    ax.set_xlabel("n")
    ax.set_ylabel("expected passes")
    ax.set_title(f"Exact expected {variant.upper()} pass count")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_simulation(rows, path: str) -> None:
    """Monte Carlo means with error bars, with the exact curve overlaid.

    ``rows`` are dicts with keys n, mean, std_error and optionally an exact
    float (None when the exact engine bound was exceeded).
    """
    ns = [r["n"] for r in rows]
    means = [r["mean"] for r in rows]
    errs = [r["std_error"] for r in rows]
    variant = rows[0]["variant"] if rows else "ds"
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.errorbar(ns, means, yerr=errs, fmt="o", color="tab:orange",
                capsize=3, label=f"simulated {variant.upper()}")
    exact_pts = [(r["n"], r["exact"]) for r in rows if r.get("exact") is not None]
    if exact_pts:
        ax.plot([p[0] for p in exact_pts], [p[1] for p in exact_pts],
                "-", color="tab:blue", label="exact")
    ax.set_xlabel("n")
    ax.set_ylabel("mean passes")
    ax.set_title(f"{variant.upper()} pass count: simulation vs exact")
    ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def plot_asymptotics(rows, path: str) -> None:
    """Square-root scaling diagnostics: ratio and scaled fluctuation vs n."""
    ns = [r.n for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.0, 4.2))
    ax1.plot(ns, [r.ratio for r in rows], "o-", color="tab:green")
    ax1.axhline(1.0, color="gray", linestyle="--", linewidth=1)
    ax1.set_xscale("log")
    ax1.set_xlabel("n")
    ax1.set_ylabel("mean / (2 sqrt n)")
    ax1.set_title("Approach to the 2 sqrt(n) law")
    ax1.grid(True, alpha=0.3)
    ax2.plot(ns, [r.scaled_fluct for r in rows], "s-", color="tab:red")
    ax2.axhline(GUE_FLUCTUATION_MEAN, color="gray", linestyle="--",
                linewidth=1, label="limit mean")
    ax2.set_xscale("log")
    ax2.set_xlabel("n")
    ax2.set_ylabel("(mean - 2 sqrt n) / n^(1/6)")
    ax2.set_title("Scaled fluctuation")
    ax2.legend()
    ax2.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
