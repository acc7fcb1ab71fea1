"""Kernel selection: compiled extension if built, pure Python otherwise."""

try:
    from selfint import _speedups as _impl
except ImportError:  # extension not built; the pure twin is always available
    from selfint import _purekernel as _impl

KERNEL_NAME = _impl.KERNEL_NAME

is_canonical = _impl.is_canonical
canonical_rotation = _impl.canonical_rotation
smallest_period = _impl.smallest_period
cmp_endpoints = _impl.cmp_endpoints
linked_code = _impl.linked_code
h_counts = _impl.h_counts
closed_form = _impl.closed_form
word_stats = _impl.word_stats
necklaces = _impl.necklaces


def kernel_name() -> str:
    """Name of the active kernel implementation ("cython" or "python")."""
    return KERNEL_NAME
