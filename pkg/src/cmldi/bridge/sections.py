"""Beam cross-section properties.

Local axes follow the usual space-frame convention: x along the member,
y and z transverse.  ``iy`` bends the member in the local x-z plane,
``iz`` in the local x-y plane, ``j`` is the St. Venant torsion constant.
"""

from dataclasses import dataclass

from cmldi.errors import InvalidInput


@dataclass(frozen=True)
class Section:
    area: float
    iy: float
    iz: float
    j: float
    name: str = ""

    def __post_init__(self):
        for field in ("area", "iy", "iz", "j"):
            if getattr(self, field) <= 0.0:
                raise InvalidInput(f"section {field} must be positive")


def box_section(width: float, height: float, thickness: float, name: str = "box") -> Section:
    """Rectangular hollow section, width along local y, height along local z."""
    if thickness <= 0 or 2 * thickness >= min(width, height):
        raise InvalidInput("box wall thickness must fit inside the outline")
    wi, hi = width - 2 * thickness, height - 2 * thickness
    area = width * height - wi * hi
    iy = (width * height**3 - wi * hi**3) / 12.0
    iz = (height * width**3 - hi * wi**3) / 12.0
    # Thin-wall closed-cell torsion constant, midline dimensions.
    bm, hm = width - thickness, height - thickness
    j = 4.0 * (bm * hm) ** 2 * thickness / (2.0 * (bm + hm))
    return Section(area, iy, iz, j, name)


def pipe_section(radius: float, thickness: float, name: str = "pipe") -> Section:
    if thickness <= 0 or thickness >= radius:
        raise InvalidInput("pipe wall thickness must be in (0, radius)")
    ri = radius - thickness
    area = 3.141592653589793 * (radius**2 - ri**2)
    i = 3.141592653589793 * (radius**4 - ri**4) / 4.0
    return Section(area, i, i, 2.0 * i, name)


def tee_section(flange_width: float, depth: float, thickness: float, name: str = "tee") -> Section:
    """T section: flange on top, web below, both of the given thickness."""
    if thickness <= 0 or thickness >= depth or thickness >= flange_width:
        raise InvalidInput("tee thickness must fit inside the outline")
    a_f = flange_width * thickness
    a_w = (depth - thickness) * thickness
    area = a_f + a_w
    # Centroid measured down from the flange mid-plane.
    z_f = 0.0
    z_w = thickness / 2.0 + (depth - thickness) / 2.0
    zc = (a_f * z_f + a_w * z_w) / area
    iy = (
        flange_width * thickness**3 / 12.0
        + a_f * (zc - z_f) ** 2
        + thickness * (depth - thickness) ** 3 / 12.0
        + a_w * (z_w - zc) ** 2
    )
    iz = thickness * flange_width**3 / 12.0 + (depth - thickness) * thickness**3 / 12.0
    j = (flange_width * thickness**3 + (depth - thickness) * thickness**3) / 3.0
    return Section(area, iy, iz, j, name)
