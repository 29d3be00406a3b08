# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Level structures and duality
#
# A canonical structure on the projective line fixes the points
# inf, 0, 1 and then alpha_4..alpha_n, with scalars l_1..l_{n-1} (l_n = 1).
# Its code is a generalized Reed-Solomon code of dimension d + 1.

# %%
from goppa_levels import (
    classical_to_canonical,
    code,
    dual,
    dual_structure,
    encode,
    generator_matrix,
    is_self_dual,
    make_raw,
    make_structure,
    parity_check_matrix,
    tensor,
)

g = make_structure("7", 5, 2, [2, 3], [1, 2, 3, 4])
print(generator_matrix(g))

# %%
encode(g, [1, 0, 1])

# %% [markdown]
# The parity-check matrix annihilates the generator, and the dual structure
# has degree n - d - 2 and produces the dual code.

# %%
print((generator_matrix(g) @ parity_check_matrix(g)).is_zero())
gd = dual_structure(g)
print(gd.d, gd.scalars)
code(gd) == dual(code(g))

# %%
dual_structure(gd) == g

# %% [markdown]
# Structures over the same points multiply: degrees add and scalars
# multiply.  A structure is self-dual when its square is the canonical
# differential structure.

# %%
h = make_structure("7", 4, 1, [3], [1, 3, 2])
print(tensor(h, h))
is_self_dual(h), code(h) == dual(code(h))

# %% [markdown]
# Classical data (arbitrary points and a divisor away from them) is moved
# to canonical form by a Möbius map.

# %%
raw = make_raw("7", ["inf", 0, 1, 2, 3], [(5, 2)])
c = classical_to_canonical(raw)
c, code(c).gen.to_list()
