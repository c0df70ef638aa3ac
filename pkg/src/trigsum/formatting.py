"""Deterministic float formatting shared by the serializers."""


def fmt17(x: float) -> str:
    """Render with 17 significant digits (value-preserving round trip)."""
    return format(x, ".17g")


def fmt12(x: float) -> str:
    """Render with exactly 12 decimal places (SVG coordinate contract)."""
    return format(x, ".12f")
