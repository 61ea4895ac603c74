"""Render figure data to image files with matplotlib."""

from __future__ import annotations

from pathlib import Path

from .figures import FigureData

TITLES = {
    "usc-bound": "USC bound, n={n}, q={q}",
    "uic-bound": "UIC bound, n={n}, q={q}",
    "udc-bound": "UDC bound, n={n}, d={d}",
    "vt-weight": "UIC weight bound vs exact, VT_{a}({n})",
}


def render(data: FigureData, path: str | Path) -> Path:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.ticker import MaxNLocator

    spec = data.spec
    wide = spec.figure == "vt-weight"
    fig, ax = plt.subplots(figsize=(6.5 if wide else 5, 3.5))
    if spec.figure == "vt-weight":
        weights = sorted({row[1] for row in data.rows})
        colors = plt.cm.viridis([i / max(1, len(weights) - 1) for i in range(len(weights))])
        for w, color in zip(weights, colors):
            rows = [r for r in data.rows if r[1] == w]
            ts = [r[0] for r in rows]
            ax.plot(ts, [float(r[2]) for r in rows], "--", color=color, label=f"bound w={w}")
            ax.plot(ts, [float(r[4]) for r in rows], "o-", color=color, ms=4, label=f"exact w={w}")
            ax.plot(ts, [float(r[3]) for r in rows], "o", color=color, ms=4, mfc="none")
        ax.legend(fontsize=6, loc="upper left", bbox_to_anchor=(1.02, 1), borderaxespad=0)
    else:
        ts = [r[0] for r in data.rows]
        ax.plot(ts, [float(r[1]) for r in data.rows], "o-", ms=3)
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("t")
    ax.set_ylabel("probability of unique decoding")
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(TITLES[spec.figure].format(n=spec.n, q=spec.q, d=spec.d, a=spec.a))
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
