"""Exact computations around positive scalar curvature on projective-space
bundles: connection-metric curvature, characteristic numbers of cobordism
generators, and integer homological algebra."""

__version__ = "0.1.0"
