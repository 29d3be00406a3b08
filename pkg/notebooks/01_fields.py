# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Fields
#
# Three kinds of exact field are available: prime fields, extensions given
# by an irreducible modulus, and rational function fields over a finite
# base.  All of them are built from a short spec string.

# %%
from goppa_levels import enumerate_elements, parse_field, trace_to_prime

F7 = parse_field("7")
F8 = parse_field("2^3/1,1,0,1")  # modulus 1 + x + x^3, low to high
F9 = parse_field("9")  # bare prime power: default modulus
F2z = parse_field("ratfun(2)")
F7, F8, F9, F2z

# %% [markdown]
# Elements support the usual operators.  Extension elements print as
# polynomials in the generator.

# %%
a, b = enumerate_elements(F8)[2], enumerate_elements(F8)[5]
print(a, b, a * b, a / b, a ** 7)

# %%
# every nonzero element of F9 has order dividing 8
all(x ** 8 == 1 for x in enumerate_elements(F9)[1:])

# %% [markdown]
# The absolute trace lands in the prime subfield.

# %%
[int(trace_to_prime(x).value) for x in enumerate_elements(F8)]

# %% [markdown]
# Rational functions are kept reduced with a monic denominator, so equal
# values compare equal.

# %%
z = F2z.z
print(z / (z + 1) + F2z(1) / (z + 1))
print((z * z + 1) / (z + 1))
