"""
Convergence lemma and bound unit tests
"""
