"""Exact tropical wave fronts and caustics of convex lattice domains."""
