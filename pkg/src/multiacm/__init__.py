"""Decide and explain the ACM property of points in multiprojective space."""

from .config import (
    Configuration,
    FactorShape,
    MultiPoint,
    ProjPoint,
    ab_partition,
    d_membership,
    eta,
    has_inclusion,
    has_star,
    level_sets,
    pi,
    staircase,
    thm47_hypotheses,
    vz_chains,
)

__version__ = "0.1.0"
