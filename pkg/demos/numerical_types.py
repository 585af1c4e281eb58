# %% [markdown]
# Numerical types, topological types and dimension bounds
#
# A small tour on A_2 and its adjoint form.

# %%
from parared import build_parabolic, build_root_datum, enumerate_types, leq, topological_type
from parared.bounds import hilbert_bound, star_constants
from parared.numtype import class_group_invariants, coroot_chain, satisfies_star
from parared.parabolic import degree_functional

a2 = build_root_datum(preset="A2")
a2_ad = build_root_datum(preset="A2", isogeny="ad")
print(a2.cartan)

# %% [markdown]
# pi_1 as the cokernel of the coroot lattice: trivial for sc, Z/3 for ad.

# %%
print(class_group_invariants(a2), class_group_invariants(a2_ad))
print(topological_type(a2_ad, (1, 0)), topological_type(a2_ad, (0, 1)))

# %% [markdown]
# Types of degree 0..6 in the trivial class, Borel case.

# %%
B = build_parabolic(a2)
types = enumerate_types(B, topological_type(a2, (0, 0)), 0, 6, w_upper=2)
for t in types[:8]:
    print(t.values, degree_functional(B, t), satisfies_star(t, 0))

# %%
pairs = sum(leq(s, t) for s in types for t in types)
print(len(types), "types,", pairs, "comparable pairs")

# %% [markdown]
# A chain of simple coroots from nu up to mu staying in the region where
# every step pairs to at least 2g - 1.

# %%
sl2 = build_root_datum(preset="SL2")
print(coroot_chain(sl2, (0,), (3,), 0))
print(coroot_chain(a2, (0, 0), (1, 1), 0))

# %% [markdown]
# The dimension bound for SL_2 with sigma = -2 coroot against the trivial
# minimal type; it equals the growth exponent of the degree-2 counts.

# %%
from parared.parabolic import restrict_cocharacter

Bs = build_parabolic(sl2)
rep = hilbert_bound(Bs, restrict_cocharacter(Bs, (-2,)), [restrict_cocharacter(Bs, (0,))], 0)
print(rep.upper_bound, rep.expected_dim)

# %% [markdown]
# Constants for the parabolic of A_2 with Levi generated by the first
# simple root.

# %%
print(star_constants(a2, build_parabolic(a2, [0]), 11, 13))
