"""
Randomized falsification and the radius of validity
===================================================

The falsifier draws random tails, rescales them so the hypothesis is
certified with a margin, and then looks for conclusion violations; for a
sound result it must come back empty, and the minimum conclusion margin
measures how close it got. The radius search bisects for the largest
subdisk scale at which a given function still satisfies a hypothesis
with certainty.
"""

from diskcheck import (
    FalsifyConfig,
    Params,
    SeriesA,
    Theorem,
    falsify,
    radius_of_validity,
)

cfg = FalsifyConfig(trials=300, seed=1, margin=0.9, tail_len=6)
out = falsify(Theorem.THM2, 1, Params(alpha=0.25), cfg)
print("falsifying thm2 (n=1, alpha=0.25), 300 trials:")
print("  holds:", out.holds, " inconclusive:", out.inconclusive, " fails:", out.fails)
print("  closest conclusion margin:", out.min_conclusion_margin)

# same seed, same answer
again = falsify(Theorem.THM2, 1, Params(alpha=0.25), cfg)
print("  reproducible:", out == again)

# f = z + z^2 satisfies the thm1 hypothesis only on disks of scale < 1/2:
# the hypothesis coefficient is 2r against a threshold of 1
f = SeriesA.from_tail(1, [1.0])
rep = radius_of_validity(Theorem.THM1, f, Params(alpha=0.0))
print("\nradius of validity for z + z^2 under thm1:", rep.r_star)
print("  status:", rep.status, " iterations:", rep.iterations)

# shrinking the coefficient enlarges the certified subdisk until it
# saturates at the full disk
for c in (1.0, 0.75, 0.5, 0.4):
    rep = radius_of_validity(Theorem.THM1, SeriesA.from_tail(1, [c]), Params())
    print(f"  c={c}: r_star={rep.r_star:.6f} ({rep.status})")
