"""Exceptions shared by the compiled and pure kernel backends."""


class DegenerateError(ValueError):
    """Point configuration the deterministic perturbation did not resolve."""
