"""Hermite functions, kernels and exact finite-N densities"""
