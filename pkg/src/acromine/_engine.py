"""Selects the PPM engine: compiled kernel when built, pure Python otherwise.

Set ACROMINE_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the engine-equivalence tests).
"""

import os

if os.environ.get("ACROMINE_PURE_PYTHON") == "1":
    from . import _ppm_pure as engine
else:
    try:
        from . import _ppm_kernel as engine  # type: ignore[attr-defined]
    except ImportError:
        from . import _ppm_pure as engine

PpmCore = engine.PpmCore
BACKEND = engine.BACKEND
