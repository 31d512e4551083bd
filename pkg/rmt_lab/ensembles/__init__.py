"""Seed-reproducible matrix ensemble samplers"""
