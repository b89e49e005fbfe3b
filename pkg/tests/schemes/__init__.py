"""
Iteration scheme unit tests
"""
