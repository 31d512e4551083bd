"""Core orchestration, errors and Monte Carlo plumbing"""
