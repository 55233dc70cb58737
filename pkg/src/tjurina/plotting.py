"""Figures written next to the delimited reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_profiles(report, path):
    """k-th Milnor/Tjurina profiles with the closed-form values overlaid."""
    ks = [r.k for r in report.profiles]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.plot(ks, report.column("mu"), "o-", label=r"$\mu_k$ (oracle)")
    ax.plot(ks, report.column("tau"), "s-", label=r"$\tau_k$ (oracle)")
    ax.plot(ks, report.column("tangent"), "^--", label="tangent dim", alpha=0.7)
    closed = [(r.k, r.mu_closed, r.tau_closed) for r in report.profiles if r.mu_closed is not None]
    if closed:
        ax.plot([c[0] for c in closed], [c[1] for c in closed], "kx", ms=9, label="closed form")
        ax.plot([c[0] for c in closed], [c[2] for c in closed], "kx", ms=9)
        ax.axvline(report.multiplicity["m0"], color="grey", lw=0.8, ls=":")
    ax.set_xlabel("k")
    ax.set_ylabel("dimension")
    ax.set_title(f"${report.polynomial.replace('*', '')}$", fontsize=10)
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)


def plot_homology(table, path, title=""):
    """Bar chart of ``dim H_0`` by weighted degree; higher homology drawn if present."""
    degs = [d for d, _, _ in table]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    nmax = len(table[0][2]) if table else 0
    for p in range(nmax):
        vals = [hom[p] for _, _, hom in table]
        if any(vals):
            ax.bar(degs, vals, label=f"$H_{p}$", alpha=0.8 if p == 0 else 0.5)
    ax.set_xlabel("weighted degree")
    ax.set_ylabel("dimension")
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(frameon=False, fontsize=8)
    return _save(fig, path)
