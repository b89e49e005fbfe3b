"""
Equivalence unit tests
"""
