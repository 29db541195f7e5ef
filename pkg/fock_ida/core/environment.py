"""Environment capture for run summaries."""

import os
import platform
from importlib import metadata
from typing import Any

import numpy as np

_PACKAGES = ("numpy", "scipy", "pydantic", "click", "fock-ida")


def _version(package: str) -> str | None:
    try:
        return metadata.version(package)
    except metadata.PackageNotFoundError:
        return None


def get_platform_info() -> dict[str, Any]:
    """Collect static system information."""
    info: dict[str, Any] = {
        "system": platform.system(),
        "machine": platform.machine(),
        "python_version": platform.python_version(),
        "cpu_count": os.cpu_count(),
        "packages": {name: _version(name) for name in _PACKAGES},
    }

    # BLAS backs every eigen-solve; record which one numpy was built against
    try:
        config = np.show_config(mode="dicts")
        blas = (config or {}).get("Build Dependencies", {}).get("blas", {})
        info["blas"] = blas.get("name")
    except (TypeError, AttributeError):
        info["blas"] = None

    return info
