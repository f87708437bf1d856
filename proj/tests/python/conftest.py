"""Make the in-tree package importable without installing the wheel.

If ``qselect`` is not installed, fall back to the source package under
``python/`` and link the compiled extension from ``build/`` into it.
"""

import importlib.util
import pathlib
import sys

if importlib.util.find_spec("qselect") is None:
    root = pathlib.Path(__file__).resolve().parents[2]
    pkg = root / "python" / "qselect"
    for so in (root / "build").glob("_qselect*.so"):
        link = pkg / so.name
        if not link.exists():
            link.symlink_to(so)
    sys.path.insert(0, str(root / "python"))
