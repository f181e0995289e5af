"""Core modules initialization."""
