"""Eigensolvers, spectral measures and Stieltjes transforms"""
