"""CSV/SVG emission and flat key=value config files.

CSV: UTF-8, LF line endings, `%.17g` decimals, first line `# bezier-ifs v1`,
then `# key = value` metadata lines, then data rows.  SVG: one small dot
per point on a fitted canvas, imaginary axis pointing up.
"""

from __future__ import annotations

from typing import Dict, Iterable, Optional, Sequence

import numpy as np

from .ifs import PointCloud
from .scaling import ConvergenceRow

CSV_HEADER = "# bezier-ifs v1"
SVG_CANVAS = 1000.0
SVG_MARGIN = 0.05
DOT_RADIUS = 0.5


def _fmt(x: float) -> str:
    return "%.17g" % x


def _metadata_lines(metadata: Optional[Dict[str, object]]) -> list:
    if not metadata:
        return []
    return [f"# {key} = {metadata[key]}" for key in sorted(metadata)]


def write_cloud_csv(path: str, cloud: PointCloud,
                    metadata: Optional[Dict[str, object]] = None) -> None:
    lines = [CSV_HEADER]
    lines += _metadata_lines(dict(metadata or {},
                                  generation=cloud.generation,
                                  subsampled=cloud.subsampled))
    lines += [f"{_fmt(z.real)},{_fmt(z.imag)}" for z in cloud.points]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_cloud_csv(path: str) -> PointCloud:
    points = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            re_s, im_s = line.split(",")
            points.append(complex(float(re_s), float(im_s)))
    return PointCloud(points=np.array(points))


def write_rows_csv(path: str, rows: Sequence[ConvergenceRow],
                   metadata: Optional[Dict[str, object]] = None) -> None:
    lines = [CSV_HEADER]
    lines += _metadata_lines(metadata)
    lines.append("beta,depth,grid,d_H,envelope,allowance,pass")
    for r in rows:
        env = _fmt(r.envelope) if r.envelope is not None else "undefined"
        lines.append(",".join([_fmt(r.beta), str(r.depth), str(r.grid),
                               _fmt(r.d_h), env, _fmt(r.allowance),
                               "true" if r.passed else "false"]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def write_table_csv(path: str, columns: Sequence[str],
                    rows: Iterable[Sequence[object]],
                    metadata: Optional[Dict[str, object]] = None) -> None:
    lines = [CSV_HEADER]
    lines += _metadata_lines(metadata)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt(x) if isinstance(x, float) else str(x)
                              for x in row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def _svg_transform(points: np.ndarray):
    """Map the cloud bbox (plus 5% margin) onto a fixed-width canvas, y up."""
    re, im = points.real, points.imag
    x0, x1 = float(re.min()), float(re.max())
    y0, y1 = float(im.min()), float(im.max())
    w = max(x1 - x0, 1e-9)
    h = max(y1 - y0, 1e-9)
    x0 -= w * SVG_MARGIN
    x1 += w * SVG_MARGIN
    y0 -= h * SVG_MARGIN
    y1 += h * SVG_MARGIN
    scale = SVG_CANVAS / (x1 - x0)
    width = SVG_CANVAS
    height = (y1 - y0) * scale

    def to_canvas(z: complex):
        return ((z.real - x0) * scale, height - (z.imag - y0) * scale)

    return to_canvas, width, height


def write_cloud_svg(path: str, cloud: PointCloud,
                    control_polygon: Optional[Sequence[complex]] = None) -> None:
    pts = cloud.points
    if control_polygon is not None:
        pts = np.concatenate([pts, np.asarray(control_polygon, dtype=complex)])
    to_canvas, width, height = _svg_transform(pts)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'viewBox="0 0 {width:.2f} {height:.2f}">']
    if control_polygon is not None:
        coords = " ".join("%.3f,%.3f" % to_canvas(complex(z)) for z in control_polygon)
        parts.append(f'<polyline points="{coords}" fill="none" '
                     f'stroke="#e08020" stroke-width="1.5"/>')
    for z in cloud.points:
        x, y = to_canvas(complex(z))
        parts.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{DOT_RADIUS}" fill="#1060c0"/>')
    parts.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")


def load_config(path: str) -> Dict[str, str]:
    """Flat `key = value` file; `#` starts a comment; later keys win."""
    out: Dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out
