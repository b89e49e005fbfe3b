"""
Corpus and report unit tests
"""
