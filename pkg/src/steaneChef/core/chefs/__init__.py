"""Pipelines that drive synthesis, verification, simulation and injection."""

from steaneChef.core.chefs.base_chef import BaseChef
from steaneChef.core.chefs.steane_chef import RunManifest, SteaneChef, load_circuits, resolve_code

__all__ = [
    "BaseChef",
    "RunManifest",
    "SteaneChef",
    "load_circuits",
    "resolve_code",
]
