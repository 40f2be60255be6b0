"""Expansions at infinity of fibers, branch images, and critical values."""

from .classify import CriticalClassification, classify_critical_values, classify_resultant
from .expansion import PuiseuxBranch, expand_at_infinity, fiber_equation
from .fields import RootClass, factor_over_extension, root_classes
from .image import BranchImage, branch_image
from .numeric import complex_roots
from .probe import BoundedBranch, kraus_probe, proper_on_fiber

__all__ = [
    "BoundedBranch",
    "BranchImage",
    "CriticalClassification",
    "PuiseuxBranch",
    "RootClass",
    "branch_image",
    "classify_critical_values",
    "classify_resultant",
    "complex_roots",
    "expand_at_infinity",
    "factor_over_extension",
    "fiber_equation",
    "kraus_probe",
    "proper_on_fiber",
    "root_classes",
]
