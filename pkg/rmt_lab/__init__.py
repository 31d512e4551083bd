"""
RMT-Lab: Random Matrix Theory Laboratory

Exact finite-N and asymptotic eigenvalue statistics of random matrix
ensembles, each cross-validated against Monte Carlo simulation.
"""

__version__ = "0.1.0"

from rmt_lab.config import config

__all__ = ["config"]
