"""
Fixed-point laboratory unit tests
"""
