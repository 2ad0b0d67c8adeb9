"""Searchers versus forcing: on G_k the parallel model needs 2 searchers, the plain one k - 2."""

from zeroforce.forcing import Rule, derived_set
from zeroforce.generators import fig1_unicyclic
from zeroforce.io import format_strategy
from zeroforce.search import min_fms_placements, min_pfms_placements, pzf_to_pfms, simulate_pfms

for k in range(4, 9):
    g = fig1_unicyclic(k)
    print(f"k={k}: fms={min_fms_placements(g)[0]} pfms={min_pfms_placements(g)}")

g = fig1_unicyclic(6)
_, trace = derived_set(g, {1, 5}, Rule.POSITIVE)
strategy = pzf_to_pfms(g, trace)
print(format_strategy(strategy), end="")
print("cleared:", simulate_pfms(g, strategy).cleared)
