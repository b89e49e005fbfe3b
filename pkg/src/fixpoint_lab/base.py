"""Shared declarations"""
CONDITION_SLACK = 1e-12
AUDIT_SLACK = 1e-10
FIXED_POINT_TOLERANCE = 1e-12
DOMAIN_SLACK = 1e-12
DISTINCT_POINT_DISTANCE = 1e-8
DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ITERS = 10000
DIVERGENCE_BOUND = 1e12
DEFAULT_SEED = 42
GRID_POINT_BUDGET = 100
