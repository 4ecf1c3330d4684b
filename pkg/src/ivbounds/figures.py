"""Tabulated data behind the six diagnostic plots.

Each ``figure_*`` function returns ``(header, rows)``; :func:`write_csv`
serialises them with 17 significant digits so identical runs give
byte-identical files. Axis ranges are reconstructions (the plots only hint at
them):

========  ==========================================================
chat      c = i/(n+1), i = 1..n, at k = 0.2 (n odd puts c = 0.5 on the grid)
long      c in [0.01, 0.999], log-spaced in 1 - c, k = 0.2
short     c in [1e-12, 0.5], log-spaced, k = 0.2
wing-vg   k in [0, 2.5], variance gamma (sigma .1213, nu .1686, theta -.1436, T 5)
left-jtd  k in [-3.5, 0], jump to default (sigma .60, lam .05, T 4)
cobweb    fixed-point iterates at k = 0.2, c = 0.3
========  ==========================================================
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from . import asymptotics as asym
from . import bounds
from .models import JTD_EXAMPLE, VG_CALIBRATED, JumpToDefaultParams, VarianceGammaParams, jtd_call, vg_call
from .solver import SolverConfig, fixed_point, fixed_point_map, implied_y
from .symmetry import c_hat

FIGURES = ("chat", "long", "short", "wing-vg", "left-jtd", "cobweb")
DEFAULT_POINTS = {
    "chat": 199,
    "long": 200,
    "short": 200,
    "wing-vg": 200,
    "left-jtd": 200,
    "cobweb": 8,
}
K_FIXED = 0.2
BOUND_HEADER = ("y_upper", "y_true", "y_lower", "y_asym")

Rows = list[tuple[float, ...]]


def figure_chat(n: int = DEFAULT_POINTS["chat"], k: float = K_FIXED) -> tuple[tuple[str, ...], Rows]:
    cs = [i / (n + 1) for i in range(1, n + 1)]
    return ("c", "c_hat"), [(c, c_hat(k, c)) for c in cs]


def figure_long(n: int = DEFAULT_POINTS["long"], k: float = K_FIXED):
    one_minus = np.logspace(math.log10(0.99), -3.0, n)
    rows = []
    for q in one_minus:
        c = 1.0 - float(q)
        rows.append(
            (
                c,
                bounds.upper_cto1(k, c),
                implied_y(k, c).y,
                bounds.lower_cto1(k, c),
                asym.asym_price_to_one(c),
            )
        )
    return ("c", *BOUND_HEADER), rows


def figure_short(n: int = DEFAULT_POINTS["short"], k: float = K_FIXED):
    rows = []
    for c in np.logspace(-12.0, math.log10(0.5), n):
        c = float(c)
        br = bounds.bracket_short1(k, c)
        rows.append((c, br.upper, implied_y(k, c).y, br.lower, asym.asym_price_to_zero(k, c)))
    return ("c", *BOUND_HEADER), rows


def figure_wing_vg(n: int = DEFAULT_POINTS["wing-vg"], params: VarianceGammaParams = VG_CALIBRATED):
    rows = []
    for k in np.linspace(0.0, 2.5, n):
        k = float(k)
        c = vg_call(params, k)
        br = bounds.bracket_gul(k, c)
        rows.append((k, br.upper, implied_y(k, c).y, br.lower, asym.asym_wing(k, c)))
    return ("k", *BOUND_HEADER), rows


def figure_left_jtd(n: int = DEFAULT_POINTS["left-jtd"], params: JumpToDefaultParams = JTD_EXAMPLE):
    u = params.default_probability
    rows = []
    for k in np.linspace(-3.5, 0.0, n):
        k = float(k)
        c = jtd_call(params, k)
        rows.append(
            (
                k,
                bounds.upper_lee(k, c),
                implied_y(k, c).y,
                bounds.bracket_gul(k, c).lower,
                asym.asym_fixed_u(k, u),
            )
        )
    return ("k", *BOUND_HEADER), rows


def figure_cobweb(
    n: int = DEFAULT_POINTS["cobweb"],
    k: float = K_FIXED,
    c: float = 0.3,
    y0: float | None = None,
):
    """Iterates y_0, y_1, ... with F(y_n) alongside, for a cobweb plot.

    The default seed sits between y_min and the root, so the first step
    overshoots and the rest descend.
    """
    if y0 is None:
        y_min = bounds.bracket_gul(k, c).lower
        y0 = y_min + 0.5 * (implied_y(k, c).y - y_min)
    rep = fixed_point(k, c, y0, SolverConfig(method="fixed-point"))
    ys = rep.trace[:n]
    return ("n", "y_n", "F_y_n"), [(i, y, fixed_point_map(y, k, c)) for i, y in enumerate(ys)]


def build(name: str, n: int | None = None):
    if name not in FIGURES:
        raise ValueError(f"unknown figure {name!r}; choose from {FIGURES}")
    n = DEFAULT_POINTS[name] if n is None else n
    fn = {
        "chat": figure_chat,
        "long": figure_long,
        "short": figure_short,
        "wing-vg": figure_wing_vg,
        "left-jtd": figure_left_jtd,
        "cobweb": figure_cobweb,
    }[name]
    return fn(n)


def fmt(x: float) -> str:
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def to_csv(header: Sequence[str], rows: Rows) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_csv(path, header: Sequence[str], rows: Rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_csv(header, rows))
