# %% [markdown]
# # The 2+1 universes
#
# Two subjects S1, S2 and one object O1. Each subject senses O1 (one label
# each) and talks to the other (one label each). Four comparisons give a
# 4-digit pattern; 0 means the two labels agree.

# %%
from universes import (
    SystemShape,
    enumerate_classes,
    enumerate_patterns,
    is_feasible,
    paper_order_convert,
    schema_digits,
)
from universes.model import TO_PAPER

shape = SystemShape(2, 1)
s = schema_digits(shape)
print([str(d) for d in s.digits])

# %% [markdown]
# Digits are stored internally as (SS, SC1, SC2, CC). The display order
# used in the literature puts CC third, so we convert when printing.

# %%
def shown(p):
    return str(paper_order_convert(p, shape, TO_PAPER))


for p in enumerate_patterns(s):
    print(shown(p), "feasible" if is_feasible(p, s) else "contradictory")

# %% [markdown]
# Four patterns are contradictory: each has a single "different" digit on a
# cycle of "same" digits. Renaming the subjects merges three pairs, leaving
# nine classes.

# %%
for c in enumerate_classes(s):
    print(shown(c.canonical), c.orbit_size, c.name)
