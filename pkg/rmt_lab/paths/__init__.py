"""Determinantal path counting"""
