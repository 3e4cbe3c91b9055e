"""braidmono - braid monodromy and Zariski-van Kampen presentations of plane curve complements."""

from braidmono.exactpoly import BivariatePoly, UnivariatePoly
from braidmono.vankampen import BraidWord, FreeWord

__version__ = "0.1.0"

__all__ = ["BivariatePoly", "BraidWord", "FreeWord", "UnivariatePoly", "__version__"]
