# %% [markdown]
# Point counts for Borel reductions of the trivial SL_2 bundle on P^1
#
# A reduction of numerical type -n times the coroot is a degree-n map
# P^1 -> P^1. We count them over small fields, fold the counts into the
# truncated Eisenstein series and look at its denominator.

# %%
from parared import CurveData, build_parabolic, build_root_datum
from parared.eisenstein import (
    assemble_series,
    denominator_Q,
    growth_exponent,
    log_ratio_exponents,
    rationality_check,
)
from parared.oracle_sl2 import count_sections
from parared.parabolic import restrict_cocharacter

# %%
for q in (2, 3, 4, 5):
    print(q, [count_sections(q, n).count for n in range(3)])

# %% [markdown]
# n = 0 gives the q+1 constant maps, n = 1 gives |PGL_2(F_q)| = q^3 - q.
# The two enumeration strategies agree:

# %%
print(count_sections(3, 2, method="gcd").count == count_sections(3, 2).count)

# %% [markdown]
# Growth in q: the exponent at degree n should be 2n + 1.

# %%
for n in range(3):
    counts = {q: count_sections(q, n).count for q in (2, 3, 4, 5)}
    print(n, log_ratio_exponents(counts), growth_exponent(counts, 2))

# %% [markdown]
# Assemble the series in tau up to degree 8 and multiply by Q = 1 - q tau^2.

# %%
sl2 = build_root_datum(preset="SL2")
B = build_parabolic(sl2)
q = 3
counts = {restrict_cocharacter(B, (-n,)): count_sections(q, n).count for n in range(5)}
curve = CurveData(q)
E, rejected = assemble_series(sl2, counts, (0,), curve, window=((-2, 8),))
print(sorted(E.terms.items()))

# %%
report = rationality_check(E, denominator_Q(sl2, curve), 0, 2)
print("offending:", list(report.offending))
print("numerator:", sorted(report.numerator.terms.items()))
