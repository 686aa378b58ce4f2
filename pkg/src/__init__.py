"""
transmat: transition matroids of 4-regular graphs
=================================================

Circuit partitions, Euler systems and their transition matroids, with the
polynomials, planarity tests, ribbon graphs and knot diagrams built on them.
"""

__version__ = "1.0.0"
__author__ = "transmat contributors"
