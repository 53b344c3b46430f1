"""Parametric space-frame surrogate of a single-span tied-arch rail bridge.

The structure is deliberately simple: two parabolic arch ribs tied by the
deck girders, vertical axial hangers, a deck grillage with a dedicated
stringer line under the loaded track, and a handful of rib-to-rib
connectors.  One rib carries the nine damage part tags; three lateral
accelerometers (A1, A2, A3) sit on that rib.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from cmldi.bridge.sections import Section, box_section, tee_section
from cmldi.errors import InvalidInput

# Degrees of freedom per node: ux, uy, uz, rx, ry, rz.
DOF_PER_NODE = 6
LATERAL = 1  # y translation, the sensor component
VERTICAL = 2  # z translation, the load component


@dataclass(frozen=True)
class MaterialSpec:
    youngs_modulus: float  # Pa
    density: float  # kg/m^3
    rayleigh_alpha: float = 0.0  # 1/s, mass-proportional damping
    rayleigh_beta: float = 0.0  # s, stiffness-proportional damping
    poisson: float = 0.3

    def __post_init__(self):
        if self.youngs_modulus <= 0.0:
            raise InvalidInput("youngs_modulus must be positive")
        if self.density <= 0.0:
            raise InvalidInput("density must be positive")
        if self.rayleigh_alpha < 0.0 or self.rayleigh_beta < 0.0:
            raise InvalidInput("rayleigh coefficients must be non-negative")
        if not 0.0 <= self.poisson < 0.5:
            raise InvalidInput("poisson ratio must be in [0, 0.5)")

    @property
    def shear_modulus(self) -> float:
        return self.youngs_modulus / (2.0 * (1.0 + self.poisson))


@dataclass(frozen=True)
class BeamElement:
    """One member. ``kind`` 'beam' is a 12-dof Euler-Bernoulli element,
    'bar' an axial-only 6-dof truss element (used for hangers).

    Tagged rib segments are modeled as two parallel chords: a removable
    main chord carrying most of the box section and a thin residual chord
    (``removable=False``) that keeps the rib connected when the main chord
    fails, the beam-model stand-in for losing most but not all of a box
    cross-section.
    """

    node_i: int
    node_j: int
    section: Section
    material: MaterialSpec
    part: int = 0  # 0 = not a tagged arch part, 1..9 = arch damage parts
    kind: str = "beam"
    extra_mass_per_length: float = 0.0  # non-structural (ballast) line mass
    removable: bool = True

    def __post_init__(self):
        if self.kind not in ("beam", "bar"):
            raise InvalidInput(f"unknown element kind {self.kind!r}")
        if self.node_i == self.node_j:
            raise InvalidInput("element endpoints must differ")
        if not 0 <= self.part <= 9:
            raise InvalidInput("part tag must be in 0..9")
        if self.extra_mass_per_length < 0.0:
            raise InvalidInput("extra mass must be non-negative")


@dataclass(frozen=True)
class FrameModel:
    nodes: np.ndarray  # (n_nodes, 3) coordinates, read-only
    elements: tuple[BeamElement, ...]
    support_nodes: tuple[int, ...]  # translations fixed at these nodes
    sensor_nodes: tuple[int, int, int] | None = None  # A1, A2, A3
    track_nodes: tuple[int, ...] | None = None  # loaded deck line, ordered by x
    span: float = 0.0
    extra_fixed_dofs: tuple[int, ...] = ()

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        if nodes.ndim != 2 or nodes.shape[1] != 3:
            raise InvalidInput("nodes must be an (n, 3) array")
        nodes = nodes.copy()
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        n = nodes.shape[0]
        for e in self.elements:
            if not (0 <= e.node_i < n and 0 <= e.node_j < n):
                raise InvalidInput("element references a missing node")
            if self.element_length(e) <= 1e-9:
                raise InvalidInput("zero-length element")
        if not self.support_nodes:
            raise InvalidInput("model needs at least one support")

    @property
    def n_nodes(self) -> int:
        return self.nodes.shape[0]

    @property
    def n_dof(self) -> int:
        return DOF_PER_NODE * self.n_nodes

    def element_length(self, e: BeamElement) -> float:
        return float(np.linalg.norm(self.nodes[e.node_j] - self.nodes[e.node_i]))

    def elements_in_part(self, part: int) -> list[BeamElement]:
        return [e for e in self.elements if e.part == part]

    def removable_in_part(self, part: int) -> list[BeamElement]:
        return [e for e in self.elements if e.part == part and e.removable]

    def part_element_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for e in self.elements:
            if e.part > 0:
                counts[e.part] = counts.get(e.part, 0) + 1
        return counts

    def fixed_dofs(self) -> np.ndarray:
        dofs = list(self.extra_fixed_dofs)
        for node in self.support_nodes:
            for comp in range(3):  # pinned: translations only
                dofs.append(DOF_PER_NODE * node + comp)
        return np.array(sorted(set(dofs)), dtype=int)

    def with_elements(self, elements: tuple[BeamElement, ...]) -> "FrameModel":
        return replace(self, elements=elements)


def dof_index(node: int, comp: int) -> int:
    return DOF_PER_NODE * node + comp


STEEL = MaterialSpec(
    youngs_modulus=210e9, density=7750.0, rayleigh_alpha=0.7, rayleigh_beta=0.5
)


@dataclass(frozen=True)
class ArchBridgeParams:
    """Geometry and member catalogue for the arch-bridge surrogate.

    Defaults follow the real structure where dimensions are public
    (115 m span, 12.4 m deck) and stay generic elsewhere.  The nine arch
    parts split the tagged rib into segments of ``part_elem_counts``
    elements each; their sum is the number of removable elements.
    """

    span: float = 115.0
    deck_width: float = 12.4
    arch_rise: float = 16.0
    # Cubic skew of the arch profile; a nonzero value (with the one-way
    # brace lean below) breaks the mirror symmetry of the span so that
    # mirrored damage parts carry distinct modal fingerprints, standing in
    # for asymmetries of the real structure that the surrogate omits.
    arch_skew: float = 0.3
    part_elem_counts: tuple[int, ...] = (7, 4, 4, 4, 4, 4, 4, 4, 7)
    deck_station_stride: int = 1  # deck nodes at every k-th arch station
    # 'boundaries': braces at the part boundaries, so a removal anywhere in
    # a part redistributes through that part's boundary braces (part-wise
    # fingerprints); 'stride': braces at every hanger_stride-th station.
    hanger_layout: str = "boundaries"
    hanger_stride: int = 2
    hanger_lean: int = 1  # stations of one-way brace lean toward -x (0 = vertical)
    n_connectors: int = 7  # rib-to-rib cross members
    track_offset: float = -3.1  # y of the loaded track line (south of axis)
    sensor_fracs: tuple[float, float, float] = (0.25, 0.5, 0.75)
    material: MaterialSpec = STEEL
    arch_box: tuple[float, float, float] = (0.86, 1.3, 0.045)  # width, height, wall
    # Per-part scaling of the arch wall thickness (both ribs), mimicking the
    # stepped plate thickness of a fabricated box arch.  Ones = uniform.
    arch_part_thickness_scale: tuple[float, ...] = (1.0,) * 9
    # Fraction of the tagged rib section that survives a main-chord failure,
    # per part.  Distinct values give each part a distinct post-failure
    # fingerprint (differing local hinge compliance), standing in for the
    # part-to-part construction differences of the real arch.
    rib_residual_share: tuple[float, ...] = (
        0.26, 0.21, 0.17, 0.14, 0.115, 0.095, 0.078, 0.064, 0.053,
    )
    girder_section: Section = field(default_factory=lambda: tee_section(0.6, 1.235, 0.08, "girder"))
    stringer_section: Section = field(default_factory=lambda: tee_section(0.6, 1.235, 0.08, "stringer"))
    crossbeam_section: Section = field(default_factory=lambda: box_section(0.345, 0.35, 0.016, "crossbeam"))
    connector_section: Section = field(default_factory=lambda: box_section(0.345, 0.35, 0.016, "connector"))
    hanger_area: float = 0.0222  # m^2, axial bars
    ballast_mass_per_length: float = 14000.0  # kg/m over the full deck width
    ballast_split: tuple[float, float, float] = (0.45, 0.10, 0.45)  # girder S, stringer, girder N

    def __post_init__(self):
        if self.span <= 0.0 or self.arch_rise <= 0.0 or self.deck_width <= 0.0:
            raise InvalidInput("span, rise and width must be positive")
        if len(self.part_elem_counts) != 9:
            raise InvalidInput("exactly nine arch parts are required")
        if any(c < 3 for c in self.part_elem_counts):
            raise InvalidInput("each arch part needs at least 3 elements")
        n_arch = sum(self.part_elem_counts)
        if n_arch % self.deck_station_stride != 0:
            raise InvalidInput("deck_station_stride must divide the arch element count")
        if self.hanger_layout not in ("boundaries", "stride"):
            raise InvalidInput("hanger_layout must be 'boundaries' or 'stride'")
        if not -self.deck_width / 2 < self.track_offset < self.deck_width / 2:
            raise InvalidInput("track line must lie inside the deck")
        if any(not 0.0 < f < 1.0 for f in self.sensor_fracs):
            raise InvalidInput("sensor fractions must be inside (0, 1)")
        if self.hanger_area <= 0.0:
            raise InvalidInput("hanger area must be positive")
        if len(self.arch_part_thickness_scale) != 9 or any(
            s <= 0.0 for s in self.arch_part_thickness_scale
        ):
            raise InvalidInput("arch_part_thickness_scale needs nine positive factors")
        if len(self.rib_residual_share) != 9 or any(
            not 0.0 < r < 0.5 for r in self.rib_residual_share
        ):
            raise InvalidInput("rib_residual_share needs nine factors in (0, 0.5)")


def _arch_z(x: np.ndarray, span: float, rise: float, skew: float = 0.0) -> np.ndarray:
    xi = x / span
    return 4.0 * rise * xi * (1.0 - xi) * (1.0 + skew * (xi - 0.5))


def build_arch_model(params: ArchBridgeParams = ArchBridgeParams()) -> FrameModel:
    """Assemble the tied-arch space frame.

    Node layout: girder South, stringer (track B), girder North at z = 0,
    one node per deck station; arch ribs above the girders with one node
    per arch station.  The south rib carries part tags 1..9 and the three
    sensors; supports are pinned at the four deck corners.
    """
    p = params
    n_arch = sum(p.part_elem_counts)
    arch_x = np.linspace(0.0, p.span, n_arch + 1)
    arch_z = _arch_z(arch_x, p.span, p.arch_rise, p.arch_skew)
    station_ids = list(range(0, n_arch + 1, p.deck_station_stride))
    if station_ids[-1] != n_arch:
        station_ids.append(n_arch)
    y_s, y_n = -p.deck_width / 2.0, p.deck_width / 2.0

    coords: list[tuple[float, float, float]] = []

    def add_node(x: float, y: float, z: float) -> int:
        coords.append((x, y, z))
        return len(coords) - 1

    girder_s = [add_node(arch_x[i], y_s, 0.0) for i in station_ids]
    stringer = [add_node(arch_x[i], p.track_offset, 0.0) for i in station_ids]
    girder_n = [add_node(arch_x[i], y_n, 0.0) for i in station_ids]

    # Arch ribs share their spring nodes with the girder corners (the tie).
    def rib_nodes(girder_line: list[int], y: float) -> list[int]:
        ids = [girder_line[0]]
        for i in range(1, n_arch):
            ids.append(add_node(arch_x[i], y, arch_z[i]))
        ids.append(girder_line[-1])
        return ids

    rib_s = rib_nodes(girder_s, y_s)
    rib_n = rib_nodes(girder_n, y_n)

    nodes = np.array(coords, dtype=float)
    if len(np.unique(np.round(nodes, 9), axis=0)) != len(nodes):
        raise InvalidInput("coincident nodes in generated geometry")

    elements: list[BeamElement] = []
    mat = p.material

    # Arch ribs.  The tagged (south) rib is a twin chord per segment: the
    # removable main chord plus the thin residual chord.  The north rib has
    # the identical total section in single elements.
    bw, bh, bt = p.arch_box
    part_of_elem = np.repeat(np.arange(1, 10), p.part_elem_counts)
    for k in range(n_arch):
        part = int(part_of_elem[k])
        t_part = bt * p.arch_part_thickness_scale[part - 1]
        share = p.rib_residual_share[part - 1]
        main = box_section(bw, bh, t_part * (1.0 - share), f"arch-p{part}-main")
        rest = box_section(bw, bh, t_part * share, f"arch-p{part}-residual")
        elements.append(BeamElement(rib_s[k], rib_s[k + 1], main, mat, part=part))
        elements.append(
            BeamElement(rib_s[k], rib_s[k + 1], rest, mat, part=part, removable=False)
        )
    for k in range(n_arch):
        part = int(part_of_elem[k])
        sec = box_section(bw, bh, bt * p.arch_part_thickness_scale[part - 1], "arch")
        elements.append(BeamElement(rib_n[k], rib_n[k + 1], sec, mat, part=0))

    # Deck grillage: girders, stringer, cross beams.
    total_ballast = p.ballast_mass_per_length
    mu_s, mu_t, mu_n = (s * total_ballast for s in p.ballast_split)
    for line, sec, mu in (
        (girder_s, p.girder_section, mu_s),
        (stringer, p.stringer_section, mu_t),
        (girder_n, p.girder_section, mu_n),
    ):
        for a, b in zip(line[:-1], line[1:]):
            elements.append(BeamElement(a, b, sec, mat, extra_mass_per_length=mu))
    for gs, tr, gn in zip(girder_s, stringer, girder_n):
        elements.append(BeamElement(gs, tr, p.crossbeam_section, mat))
        elements.append(BeamElement(tr, gn, p.crossbeam_section, mat))

    # Inclined axial braces from arch stations down to the girders; the
    # uniform lean makes the bracing pattern one-way.
    hanger_sec = Section(p.hanger_area, 1e-8, 1e-8, 1e-8, "hanger")
    if p.hanger_layout == "boundaries":
        hanger_ids = list(np.cumsum(p.part_elem_counts)[:-1])
    else:
        hanger_ids = list(range(p.hanger_stride, n_arch, p.hanger_stride))
    station_lookup = {arch_i: k for k, arch_i in enumerate(station_ids)}
    for i in hanger_ids:
        if i not in station_lookup:
            continue
        anchor = i - p.hanger_lean * p.deck_station_stride
        k = station_lookup.get(anchor, station_lookup[i])
        elements.append(BeamElement(rib_s[i], girder_s[k], hanger_sec, mat, kind="bar"))
        elements.append(BeamElement(rib_n[i], girder_n[k], hanger_sec, mat, kind="bar"))

    # Rib-to-rib connectors spread over the central region of the arch.
    if p.n_connectors > 0:
        conn_ids = np.unique(
            np.round(np.linspace(0.12, 0.88, p.n_connectors) * n_arch).astype(int)
        )
        for i in conn_ids:
            elements.append(BeamElement(rib_s[i], rib_n[i], p.connector_section, mat))

    sensor_nodes = tuple(rib_s[int(round(f * n_arch))] for f in p.sensor_fracs)
    supports = (girder_s[0], girder_s[-1], girder_n[0], girder_n[-1])

    return FrameModel(
        nodes=nodes,
        elements=tuple(elements),
        support_nodes=supports,
        sensor_nodes=sensor_nodes,  # type: ignore[arg-type]
        track_nodes=tuple(stringer),
        span=p.span,
    )


def build_beam_model(
    length: float,
    n_elements: int,
    section: Section,
    material: MaterialSpec,
) -> FrameModel:
    """Simply supported straight beam along x, used for solver verification."""
    if length <= 0.0 or n_elements < 1:
        raise InvalidInput("beam needs positive length and at least one element")
    x = np.linspace(0.0, length, n_elements + 1)
    nodes = np.column_stack([x, np.zeros_like(x), np.zeros_like(x)])
    elements = tuple(
        BeamElement(k, k + 1, section, material) for k in range(n_elements)
    )
    # Pinned translations at both ends leave a rigid twist about the beam
    # axis; restrain it at the first node.
    return FrameModel(
        nodes=nodes,
        elements=elements,
        support_nodes=(0, n_elements),
        span=length,
        extra_fixed_dofs=(dof_index(0, 3),),
    )
