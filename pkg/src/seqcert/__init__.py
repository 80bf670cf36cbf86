"""Two-level autocorrelation sequences, cyclic difference sets, and
re-checkable nonexistence certificates."""

__version__ = "0.1.0"
