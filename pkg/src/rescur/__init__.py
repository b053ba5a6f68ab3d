"""rescur: exact computer algebra for the residue-current toolchain.

Subpackages cover sparse polynomial arithmetic, Groebner bases and syzygies,
free resolutions, determinantal exactness checks, membership certificates,
Hefer form towers, a formal residue-current algebra, and polynomial solution
spaces of constant-coefficient PDE systems.
"""

__version__ = "0.1.0"

from rescur._kernel import BACKEND as KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND", "__version__"]
