"""Graph widths under diameter bounds: constructions, solvers, classifier."""

__version__ = "0.1.0"
