# %% [markdown]
# # Agreeing without sharing
#
# Two subjects perceive events a..e privately (a1 vs a2, ...) yet map their
# percepts to the same words u..y. Comparing words never reveals the
# difference.

# %%
import json

from universes import check_personal_universe, run_agreement_simulation
from universes.simulate import table1_scenario

sc = table1_scenario()
t = run_agreement_simulation(sc["events"], sc["perceptions"], sc["languages"], sc["alphabet"])
for step in t.steps:
    print(step.event, step.percepts, step.tokens, step.agree)
print(check_personal_universe(t))

# %% [markdown]
# One crossed wire in the second vocabulary is immediately detectable.

# %%
sc["languages"][1]["b2"] = "w"
t = run_agreement_simulation(sc["events"], sc["perceptions"], sc["languages"], sc["alphabet"])
print(check_personal_universe(t), t.non_injective)

# %% [markdown]
# The same scenario as a file for `universes simulate --scenario`.

# %%
with open("table1_scenario.json", "w") as fh:
    json.dump(table1_scenario(), fh, indent=2)
