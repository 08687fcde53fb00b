"""Default size bounds.

All enumerations are exact, so the only protection against runaway work is
an explicit bound on the group order.  These are defaults: every entry point
that enumerates accepts an override.
"""

# Upper bound on n for order-scanning formula work (enumerate_groups,
# count_matrix).  Closed-form evaluation on explicit descriptors has no
# bound: Python integers are exact at any size.
FORMULA_N_LIMIT = 10**6

# Generic regular-subgroup search closes |Hol(A)|^2 generator pairs; this is
# the only superlinear hot spot, hence the tighter default.
GENERIC_N_BOUND = 30

# Parametrized (quintuple) enumeration scales with e^2 * g^2 * phi(e).
QUINTUPLE_N_BOUND = 60
