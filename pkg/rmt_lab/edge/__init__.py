"""Airy function, Painleve II and Tracy-Widom edge statistics"""
