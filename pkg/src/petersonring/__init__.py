"""Presentations of cohomology rings of Peterson-Richardson intersections."""

__version__ = "0.1.0"
