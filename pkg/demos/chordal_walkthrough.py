"""Optimal positive zero forcing on chordal graphs, checked against brute force."""

from zeroforce.exact import brute_cc, brute_z, brute_zplus
from zeroforce.generators import fig1_unicyclic, random_chordal
from zeroforce.io import format_trace
from zeroforce.zplus_chordal import forcing_process_from_result, t_black, zplus_chordal


def show(name, g):
    res = zplus_chordal(g)
    print(f"{name}: n={g.n} m={g.m}")
    print(f"  black set      {sorted(res.black_set)}  (Z+ = {res.zplus})")
    print(f"  clique cover   {[sorted(c) for c in res.clique_cover]}")
    print(f"  black forest   {[sorted(t.vertices) for t in t_black(res)]}")
    if g.n <= 14:
        print(f"  brute force    Z+ = {brute_zplus(g)}, n - cc = {g.n - brute_cc(g)}, Z = {brute_z(g)}")
    return res


g5 = fig1_unicyclic(5)
res = show("unicyclic G_5", g5)
print(format_trace(forcing_process_from_result(g5, res)))

for seed in range(3):
    show(f"random chordal #{seed}", random_chordal(12, 0.5, seed))
