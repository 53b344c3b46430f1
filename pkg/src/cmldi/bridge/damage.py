"""Damage scenarios: part-wise stiffness reduction and element removal."""

from __future__ import annotations

from dataclasses import dataclass, replace

from cmldi.bridge.model import BeamElement, FrameModel
from cmldi.errors import InvalidInput

MODERATE_LEVELS = (5, 10, 15, 20, 25, 30, 35, 40)


@dataclass(frozen=True)
class DamageScenario:
    """``kind`` is one of 'intact', 'moderate', 'failure'.

    Moderate damage reduces the Young's modulus of every element of the
    named part by ``level`` percent.  Failure removes the single element
    with index ``element_ordinal`` inside the part (build order).
    """

    kind: str
    part: int | None = None
    level: float | None = None
    element_ordinal: int | None = None

    def __post_init__(self):
        if self.kind == "intact":
            if self.part is not None or self.level is not None or self.element_ordinal is not None:
                raise InvalidInput("intact scenario takes no part or level")
            return
        if self.part is None or not 1 <= self.part <= 9:
            raise InvalidInput("damage scenarios need a part in 1..9")
        if self.kind == "moderate":
            if self.level is None or not 0.0 < self.level <= 40.0:
                raise InvalidInput("moderate damage level must be in (0, 40] percent")
            if self.element_ordinal is not None:
                raise InvalidInput("moderate damage has no element ordinal")
        elif self.kind == "failure":
            if self.element_ordinal is None or self.element_ordinal < 0:
                raise InvalidInput("failure needs a non-negative element ordinal")
            if self.level is not None:
                raise InvalidInput("failure has no damage level")
        else:
            raise InvalidInput(f"unknown scenario kind {self.kind!r}")

    @classmethod
    def intact(cls) -> "DamageScenario":
        return cls("intact")

    @classmethod
    def moderate(cls, part: int, level: float) -> "DamageScenario":
        return cls("moderate", part=part, level=level)

    @classmethod
    def failure(cls, part: int, element_ordinal: int) -> "DamageScenario":
        return cls("failure", part=part, element_ordinal=element_ordinal)

    def key(self) -> str:
        if self.kind == "intact":
            return "intact"
        if self.kind == "moderate":
            level = self.level
            text = f"{level:g}"
            return f"moderate-p{self.part}-dl{text}"
        return f"failure-p{self.part}-e{self.element_ordinal}"


def _reduced_material(element: BeamElement, level_percent: float) -> BeamElement:
    # E* = E0 * (1 - DL/100)
    factor = 1.0 - level_percent / 100.0
    material = replace(element.material, youngs_modulus=element.material.youngs_modulus * factor)
    return replace(element, material=material)


def _connectivity_ok(model: FrameModel, elements: tuple[BeamElement, ...]) -> bool:
    """Every node that still carries an element must be reachable from a support."""
    adjacency: dict[int, list[int]] = {}
    for e in elements:
        adjacency.setdefault(e.node_i, []).append(e.node_j)
        adjacency.setdefault(e.node_j, []).append(e.node_i)
    seen = set()
    stack = [n for n in model.support_nodes if n in adjacency]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(adjacency.get(node, ()))
    return seen == set(adjacency)


def apply_damage(model: FrameModel, scenario: DamageScenario) -> FrameModel:
    if scenario.kind == "intact":
        return model

    part_elements = model.elements_in_part(scenario.part)
    if not part_elements:
        raise InvalidInput(f"model has no elements tagged part {scenario.part}")

    if scenario.kind == "moderate":
        new_elements = tuple(
            _reduced_material(e, scenario.level) if e.part == scenario.part else e
            for e in model.elements
        )
        return model.with_elements(new_elements)

    # failure: drop one removable element entirely (stiffness and mass)
    removable = model.removable_in_part(scenario.part)
    if scenario.element_ordinal >= len(removable):
        raise InvalidInput(
            f"part {scenario.part} has {len(removable)} removable elements, "
            f"ordinal {scenario.element_ordinal} is out of range"
        )
    doomed = removable[scenario.element_ordinal]
    new_elements = tuple(e for e in model.elements if e is not doomed)

    used_nodes = set()
    for e in new_elements:
        used_nodes.add(e.node_i)
        used_nodes.add(e.node_j)
    for node in (doomed.node_i, doomed.node_j):
        if node not in used_nodes:
            raise InvalidInput("element removal would orphan a free node")
    if not _connectivity_ok(model, new_elements):
        raise InvalidInput("element removal disconnects an unconstrained region")
    return model.with_elements(new_elements)
