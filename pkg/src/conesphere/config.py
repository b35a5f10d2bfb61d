"""Run-wide tolerances and budgets.

All numerical decisions in the library go through a RunConfig so the CLI (and
tests) can override them in one place. The defaults are desk-scale: meshes
with tens of vertices and coordinates of order one.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class RunConfig:
    # Angle comparisons (radians, absolute): a vertex is essential when its
    # deficit exceeds eps_angle; admissibility allows theta up to 2*pi + eps_angle.
    eps_angle: float = 1e-9
    # A face is rejected when its Heron area falls below
    # area_floor * (longest side)^2.
    area_floor: float = 1e-12
    # Generic relative tolerance for length/area comparisons.
    rel_tol: float = 1e-9
    # Cap on expanded face sequences per geodesic search.
    search_budget: int = 1_000_000
    # Cap on triangulations visited by the realization flip search.
    flip_budget: int = 10_000
    # Seed recorded for reproducibility of generator-driven workflows.
    seed: int = 0

    def with_overrides(self, **kwargs) -> "RunConfig":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs) if kwargs else self


DEFAULT = RunConfig()
