"""Small helpers shared by the gallery scripts."""
import warnings
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent / "out"


def quiet(fn, *a, **k):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        return fn(*a, **k)


def plot_surface(s, contours, path, title):
    """Surface coloured by sign of sigma with the singular curves on top."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig = plt.figure(figsize=(9, 4))
    ax = fig.add_subplot(1, 2, 1, projection="3d")
    f = np.nan_to_num(s.f)
    sig = np.nan_to_num(s.sigma)
    colors = plt.cm.coolwarm(0.5 + 0.5 * np.tanh(sig / (np.abs(sig).max() or 1) * 8))
    k = max(1, s.grid.shape[0] // 60)
    ax.plot_surface(f[::k, ::k, 0], f[::k, ::k, 1], f[::k, ::k, 2],
                    facecolors=colors[::k, ::k], linewidth=0, antialiased=False, shade=False)
    for c in contours:
        ax.plot(*c.f.T, "k", lw=1.2)
    ax.set_title(title)
    ax2 = fig.add_subplot(1, 2, 2)
    X, Y = s.grid.mesh()
    ax2.contourf(X, Y, sig, 30, cmap="coolwarm")
    for c in contours:
        ax2.plot(*c.xy.T, "k", lw=1.2)
    ax2.set_aspect("equal")
    ax2.set_title("sigma and its zero set")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=110)
    plt.close(fig)
