# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Linear codes
#
# A code is stored by its reduced row echelon generator, so two codes are
# equal exactly when their canonical generators agree.

# %%
from goppa_levels import Matrix, dual, from_generator, parse_field, subfield_subcode, trace_code

F4 = parse_field("4")
w = F4.elements()[2]
C = from_generator(Matrix.from_rows(F4, [[1, w, 0], [0, 1, 1]]))
print(C.gen)
print(C.n, C.k)

# %%
D = dual(C)
print(D.gen)
dual(D) == C

# %% [markdown]
# Delsarte's theorem ties the trace map to subfield subcodes:
# the trace of the dual equals the dual of the subfield subcode.

# %%
trace_code(dual(C)) == dual(subfield_subcode(C))

# %%
print(subfield_subcode(C).gen)
print(trace_code(C).gen)
