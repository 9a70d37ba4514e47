"""Select the kernel backend at import time.

The compiled extension is used when it was built; otherwise the pure-Python
module. Setting ``GSACDS_PURE_PYTHON=1`` forces the fallback.
"""

import os

from gsacds import _pykernels

if os.environ.get("GSACDS_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from gsacds import _ckernels as kernels
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"
