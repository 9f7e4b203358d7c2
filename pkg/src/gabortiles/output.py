"""Deterministic JSON, CSV and SVG writers."""

from __future__ import annotations

import io
import math
from fractions import Fraction

from .intervals import format_scalar


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if "e" not in s and "." not in s and "n" not in s:
        s += ".0"
    return s


def _encode(obj, out: list):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, Fraction):
        _encode(format_scalar(obj), out)
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt_float(obj))
    elif isinstance(obj, str):
        import json
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, dict):
        out.append("{")
        for i, k in enumerate(sorted(obj, key=str)):
            if i:
                out.append(",")
            _encode(str(k), out)
            out.append(":")
            _encode(obj[k], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _encode(v, out)
        out.append("]")
    elif hasattr(obj, "__float__"):
        out.append(_fmt_float(float(obj)))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    """Compact JSON with sorted keys and floats at 17 significant digits."""
    out: list = []
    _encode(obj, out)
    return "".join(out)


def zeros_csv(points) -> str:
    buf = io.StringIO()
    buf.write("t,nu,component_id,component_kind\n")
    for p in points:
        buf.write(f"{_fmt_float(p.t)},{_fmt_float(p.nu)},{p.component_id},{p.component_kind}\n")
    return buf.getvalue()


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f")


def zeros_svg(points, t_max: float, nu_max: float, alpha, beta, width: int = 640, height: int = 480) -> str:
    """One point group per component, with axes labelled by α and β."""
    pad = 50
    sx = (width - 2 * pad) / float(t_max)
    sy = (height - 2 * pad) / float(nu_max)

    def X(t):
        return f"{pad + t * sx:.3f}"

    def Y(nu):
        return f"{height - pad - nu * sy:.3f}"

    groups: dict = {}
    for p in points:
        groups.setdefault((p.component_id, p.component_kind), []).append(p)
    lines = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">',
             '<rect width="100%" height="100%" fill="white"/>',
             f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
             f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
             f'<text x="{width / 2:.0f}" y="{height - 12}" font-size="14" text-anchor="middle">t</text>',
             f'<text x="14" y="{height / 2:.0f}" font-size="14">&#957;</text>',
             f'<text x="{pad}" y="24" font-size="14">zeros of V_g g, alpha = {format_scalar(alpha)}, '
             f'beta = {format_scalar(beta)}</text>']
    for tick in range(int(math.floor(float(t_max))) + 1):
        lines.append(f'<text x="{X(tick)}" y="{height - pad + 16}" font-size="10" text-anchor="middle">{tick}</text>')
    for tick in range(int(math.floor(float(nu_max))) + 1):
        lines.append(f'<text x="{pad - 8}" y="{Y(tick)}" font-size="10" text-anchor="end">{tick}</text>')
    for (cid, kind), pts in sorted(groups.items()):
        color = _COLORS[cid % len(_COLORS)]
        lines.append(f'<g id="component-{cid}" class="{kind}" fill="{color}">')
        for p in pts:
            lines.append(f'<circle cx="{X(p.t)}" cy="{Y(p.nu)}" r="1.2"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
