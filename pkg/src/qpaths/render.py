"""Text, JSON, CSV and SVG renderings for the CLI."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from qpaths.cyclic import Orbit
from qpaths.distributions import ResidueDistribution
from qpaths.errors import InvalidArgumentError
from qpaths.paths import NORTH, LatticePath, column_partition

FORMATS = ("table", "json", "csv", "svg")
CELL = 24
MARGIN = 12
LABEL_HEIGHT = 20


@dataclass(frozen=True)
class RenderSpec:
    format: str = "table"
    output: str | None = None

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InvalidArgumentError(f"format must be one of {FORMATS}, got {self.format!r}")

    def write(self, text: str) -> None:
        if self.output is None or self.output == "-":
            print(text, end="" if text.endswith("\n") else "\n")
        else:
            with open(self.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")


def table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def csv_text(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def distribution_json(dist: ResidueDistribution) -> dict:
    return {
        "modulus": dist.modulus,
        "counts": [str(c) for c in dist.counts],
        "total": str(dist.total),
        "uniform": dist.uniform(),
    }


def render_distribution(dist: ResidueDistribution, fmt: str) -> str:
    rows = [[r, c] for r, c in zip(dist.residues, dist.counts)]
    if fmt == "json":
        return json.dumps(distribution_json(dist), indent=2) + "\n"
    if fmt == "csv":
        return csv_text(["residue", "count"], rows)
    if fmt == "table":
        text = table(["residue", "count"], rows)
        verdict = "uniform" if dist.uniform() else "not uniform"
        extra = "" if dist.applicable else " (theorem does not apply)"
        return text + f"modulus {dist.modulus}, total {dist.total}, {verdict}{extra}\n"
    raise InvalidArgumentError(f"{fmt} output is not available for distributions")


# --- SVG ---------------------------------------------------------------------


def _path_group(path: LatticePath, x0: int, y0: int, label: str, box: int | None = None) -> list[str]:
    """SVG elements for one path drawn with its lower-left grid corner at (x0, y0 + h*CELL)."""
    w, h = path.width, path.height
    base = y0 + h * CELL

    def px(x: int, y: int) -> str:
        return f"{x0 + x * CELL},{base - y * CELL}"

    out = [f'<g class="path" data-steps="{path.steps}">']
    for col, height in enumerate(column_partition(path)):
        if height:
            out.append(
                f'<rect x="{x0 + col * CELL}" y="{base - height * CELL}" width="{CELL}" '
                f'height="{height * CELL}" fill="#8a9a3c" fill-opacity="0.3" stroke="none"/>'
            )
    for x in range(w + 1):
        out.append(f'<line x1="{x0 + x * CELL}" y1="{y0}" x2="{x0 + x * CELL}" y2="{base}" stroke="#999" stroke-width="1"/>')
    for y in range(h + 1):
        out.append(f'<line x1="{x0}" y1="{base - y * CELL}" x2="{x0 + w * CELL}" y2="{base - y * CELL}" stroke="#999" stroke-width="1"/>')
    if box:
        out.append(
            f'<rect x="{x0}" y="{base - box * CELL}" width="{box * CELL}" height="{box * CELL}" '
            f'fill="none" stroke="#000" stroke-width="3"/>'
        )
    points = " ".join(px(x, y) for x, y in path.vertices())
    out.append(f'<polyline points="{points}" fill="none" stroke="#d00" stroke-width="4" stroke-linejoin="round"/>')
    out.append(
        f'<text x="{x0 + w * CELL / 2:g}" y="{base + LABEL_HEIGHT - 4}" font-family="sans-serif" '
        f'font-size="13" text-anchor="middle">{label}</text>'
    )
    out.append("</g>")
    return out


def _svg_document(width: int, height: int, body: list[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, f'<rect width="{width}" height="{height}" fill="#fff"/>', *body, "</svg>"]) + "\n"


def path_svg(path: LatticePath, label: str) -> str:
    w, h = path.width, path.height
    body = _path_group(path, MARGIN, MARGIN, label)
    return _svg_document(2 * MARGIN + w * CELL, 2 * MARGIN + h * CELL + LABEL_HEIGHT, body)


def as_path(obj) -> LatticePath:
    """Draw any orbit element as a lattice path (words by digit, sequences by position)."""
    if isinstance(obj, LatticePath):
        return obj
    if isinstance(obj, str):
        return LatticePath.from_word(obj)
    seq = set(obj)
    return LatticePath("".join(NORTH if i in seq else "E" for i in range(1, 2 * len(seq) + 1)))


def orbit_svg(orbit: Orbit, stat_name: str) -> str:
    paths = [as_path(e) for e in orbit.elements]
    w = max(p.width for p in paths)
    h = max(p.height for p in paths)
    box = paths[0].height if orbit.map_name == "catalan" else None
    step = max(w * CELL, 180) + 2 * MARGIN
    body = []
    for i, (p, v) in enumerate(zip(paths, orbit.statistic_values)):
        label = f"{stat_name} {v} ≡ {v % orbit.modulus} (mod {orbit.modulus})"
        body.extend(_path_group(p, MARGIN + i * step, MARGIN, label, box))
    return _svg_document(len(paths) * step + MARGIN, 2 * MARGIN + h * CELL + LABEL_HEIGHT, body)
