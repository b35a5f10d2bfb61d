"""Backend selection for the numeric kernels.

Prefers the compiled extension, falls back to the pure-Python twin when the
extension is missing or when CONESPHERE_PURE_PYTHON is set. Both backends are
bit-identical by construction; `BACKEND` reports which one is active.
"""

import os

if os.environ.get("CONESPHERE_PURE_PYTHON", "").strip() in ("1", "true", "yes"):
    from conesphere import _kernels_py as _impl
else:
    try:
        from conesphere import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from conesphere import _kernels_py as _impl

BACKEND = _impl.BACKEND

corner_angle = _impl.corner_angle
triangle_area = _impl.triangle_area
place_apex = _impl.place_apex
point_segment_distance = _impl.point_segment_distance
clip_wedge = _impl.clip_wedge
segment_intersection_params = _impl.segment_intersection_params
