# %% [markdown]
# # Naming universes
#
# Six 2+1 patterns carry a name; the rest stay unclassified. Larger systems
# are described by the multiset of names of their 2+1 projections.

# %%
from universes import LabelAssignment, SystemShape, classify_2_1, classify_system

for bits in ["0000", "1111", "0111", "1101", "0101", "1001", "1100", "1010"]:
    print(bits, classify_2_1(bits))

# %% [markdown]
# Three subjects who all sense the object differently but share one word for
# it: every pair is a personal universe.

# %%
a = LabelAssignment(SystemShape(3, 1), ((0,), (1,), (2,)), (7, 7, 7))
print(classify_system(a).as_dict())

# %% [markdown]
# A second object nobody can sense adds the super_real tag.

# %%
hidden = LabelAssignment(SystemShape(2, 2, observable=[0]), ((0,), (0,)), (0, 0))
print(classify_system(hidden, dogmatic=True).as_dict())
