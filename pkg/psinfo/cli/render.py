# -*- coding: utf-8 -*-
"""Heatmaps of phase-space fields as SVG or binary PPM."""
import numpy as np

from ..phasespace.objects import PhaseSpaceField
from .constants import NEGATIVE_COLOUR
from .constants import POSITIVE_COLOUR
from .constants import ZERO_COLOUR
from .iobytes import BinaryWriter


def colour_map(values: np.ndarray) -> np.ndarray:
    """Diverging RGB map symmetric about zero, shape (..., 3) uint8."""
    values = np.asarray(values, dtype=np.float64)
    scale = float(np.max(np.abs(values))) if values.size else 0.0
    t = values / scale if scale > 0 else np.zeros_like(values)
    zero = np.array(ZERO_COLOUR, dtype=np.float64)
    pole = np.where(t[..., None] < 0, np.array(NEGATIVE_COLOUR, dtype=np.float64),
                    np.array(POSITIVE_COLOUR, dtype=np.float64))
    rgb = zero + np.abs(t)[..., None] * (pole - zero)
    return np.rint(rgb).astype(np.uint8)


def image_pixels(field: PhaseSpaceField) -> np.ndarray:
    """Rows run from high to low p, columns from low to high x."""
    return colour_map(np.flipud(field.values.T))


def render_ppm(field: PhaseSpaceField) -> bytes:
    pixels = image_pixels(field)
    height, width, _ = pixels.shape
    writer = BinaryWriter()
    writer.write_line("P6")
    writer.write_line(f"{width} {height}")
    writer.write_line("255")
    writer.write(pixels.tobytes())
    return writer.buffer


def render_svg(field: PhaseSpaceField) -> bytes:
    """One rect per run of equal colour along each image row."""
    pixels = image_pixels(field)
    height, width, _ = pixels.shape
    writer = BinaryWriter()
    writer.write_line('<?xml version="1.0" encoding="UTF-8"?>')
    writer.write_line(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" shape-rendering="crispEdges">')
    if field.label:
        title = field.label.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        writer.write_line(f"<title>{field.kind.value} {title}</title>")
    for y in range(height):
        row = pixels[y]
        cuts = np.flatnonzero(np.any(row[1:] != row[:-1], axis=1)) + 1
        edges = [0] + [int(c) for c in cuts] + [width]
        for start, stop in zip(edges[:-1], edges[1:]):
            r, g, b = (int(c) for c in row[start])
            writer.write_line(
                f'<rect x="{start}" y="{y}" width="{stop - start}" height="1" '
                f'fill="#{r:02x}{g:02x}{b:02x}"/>')
    writer.write_line("</svg>")
    return writer.buffer
