"""Operational genericity: distinct points with generic Hilbert functions."""

from ..algebra.hilbert import is_generic_hf


def certify_genericity(S, extra_subsets=(), field=None):
    """True iff S has no repeated points and S and every nonempty listed subset have generic HF."""
    S = list(S)
    if len(set(S)) != len(S):
        return False
    if not S:
        return True
    if field is None:
        raise ValueError("a field is required")
    for subset in [S] + [list(T) for T in extra_subsets]:
        if subset and not is_generic_hf(subset, field):
            return False
    return True
