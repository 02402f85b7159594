"""corado: exact matroid computations around the coRado construction."""

__version__ = "0.1.0"
