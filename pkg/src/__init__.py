"""qfimeter - maximal quantum Fisher information of a double-well interferometer."""

__version__ = "1.0.0"
__author__ = "qfimeter developers"
