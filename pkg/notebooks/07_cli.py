# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Command line
#
# Every command reads and writes JSON.  ``run`` is the in-process entry
# point behind the ``goppa-levels`` script.

# %%
from goppa_levels.cli import run

run(["construct", "--field", "7", "--n", "5", "--d", "2", "--alphas", "2,3", "--code"])

# %%
run(["pluecker", "--field", "7", "--n", "5", "--d", "2", "--alphas", "2,3"])

# %%
run(["dual", "--field", "ratfun(2)", "--n", "4", "--d", "1", "--alphas", "z", "--scalars", "1,1,z", "--check"])

# %%
run(["xi", "--g", "0", "--n", "10", "--d", "4"])

# %%
# audits report "clean"; a negative answer would exit with status 2
run(["audit", "selfdual", "--field", "7", "--n", "4", "--d", "1"])
