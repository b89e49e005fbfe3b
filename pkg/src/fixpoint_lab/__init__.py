"""Fixed-point iteration laboratory."""
__version__ = "0.1.0"
