"""Exact enumeration: pairings, partitions, genus, Wick and freeness"""
