# trigonal/schemas/render.py
"""Drawing options shared by the dessin and locus renderers"""
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, Field

from trigonal.core.config import settings


class RenderStyle(BaseModel):
    canvas: int = Field(default_factory=lambda: settings.SVG_CANVAS, ge=64)
    margin: int = 16
    edge_width: float = 1.2
    edge_color: str = "#455a64"
    vertex_radius: float = 4.5
    cross_size: float = 5.0
    cross_color: str = "#d32f2f"
    black_colors: Dict[str, str] = {"cyan": "#00acc1", "yellow": "#fbc02d"}
    white_colors: Dict[str, str] = {"red": "#e53935", "blue": "#1e88e5", "green": "#43a047"}
    monochrome_color: str = "#6a1b9a"
    suppress_bivalent: bool = False
    # projection center on the unit sphere; chosen automatically when unset
    center: Optional[Tuple[float, float, float]] = None
    min_clearance: float = 0.1  # radians
