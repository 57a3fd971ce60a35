"""Freeness of plane curves made of lines and smooth conics.

Exact arithmetic throughout: singularity census of an arrangement, Milnor
algebra and freeness verdict, spectral and orbifold bounds, and the
enumeration of admissible weak combinatorics.
"""

from .bounds import bounds_report
from .classify import admissible_pairs, classify_pair, enumerate_candidates
from .geometry import Arrangement, catalog, census, load, loads, names, validate
from .milnor import FREE, NEARLY_FREE, NEITHER, freeness
from .report import VERSION, AnalysisReport, analyze

__version__ = VERSION

__all__ = [
    "__version__",
    "Arrangement",
    "load",
    "loads",
    "validate",
    "catalog",
    "names",
    "census",
    "freeness",
    "FREE",
    "NEARLY_FREE",
    "NEITHER",
    "bounds_report",
    "enumerate_candidates",
    "classify_pair",
    "admissible_pairs",
    "analyze",
    "AnalysisReport",
]
