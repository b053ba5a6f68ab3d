"""Kernel selection: compiled extension when available, pure Python otherwise.

Set RESCUR_PURE=1 to force the pure-Python kernel (used by the benchmark and
by tests that check the two backends agree).
"""

import os

if os.environ.get("RESCUR_PURE"):
    from rescur import _kernel_py as _impl
else:
    try:
        from rescur import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from rescur import _kernel_py as _impl

BACKEND = _impl.BACKEND

exp_add = _impl.exp_add
exp_sub = _impl.exp_sub
exp_divides = _impl.exp_divides
exp_lcm = _impl.exp_lcm
total_deg = _impl.total_deg
key_lex = _impl.key_lex
key_grlex = _impl.key_grlex
key_grevlex = _impl.key_grevlex
heap_lex = _impl.heap_lex
heap_grlex = _impl.heap_grlex
heap_grevlex = _impl.heap_grevlex
merge_terms = _impl.merge_terms
mul_terms = _impl.mul_terms
sub_scaled = _impl.sub_scaled
sub_scaled_vec = _impl.sub_scaled_vec
