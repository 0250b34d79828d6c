"""Backend selection for the table kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Set ``GTLAB_BACKEND=python`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("GTLAB_BACKEND", "").lower() == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

join_below = _impl.join_below
meet_above = _impl.meet_above
adherence_closure = _impl.adherence_closure
semi_open_flags = _impl.semi_open_flags
semi_open_witness_flags = _impl.semi_open_witness_flags
meet_fixed_flags = _impl.meet_fixed_flags
contained_flags = _impl.contained_flags
fixed_flags = _impl.fixed_flags
complement_flags = _impl.complement_flags
flagged_members = _impl.flagged_members
first_escape = _impl.first_escape
union_closed_pair = _impl.union_closed_pair

__all__ = [
    "BACKEND",
    "join_below",
    "meet_above",
    "adherence_closure",
    "semi_open_flags",
    "semi_open_witness_flags",
    "meet_fixed_flags",
    "contained_flags",
    "fixed_flags",
    "complement_flags",
    "flagged_members",
    "first_escape",
    "union_closed_pair",
]
