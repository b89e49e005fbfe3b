"""
Contractive condition unit tests
"""
