"""Harer-Zagier recursion and largest-eigenvalue bounds"""
