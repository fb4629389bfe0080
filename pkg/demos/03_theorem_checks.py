"""
Sufficient-condition checks and the witnesses that make them sharp
==================================================================

Each result says: if a certain sup stays below a threshold, f lands in a
named class (starlike, convex, bounded turning, or a plain bound). The
checker certifies the hypothesis side and samples the conclusion side,
returning Holds / Fails / Inconclusive. The witness functions
z + c z^{n+1} push the hypothesis arbitrarily close to its threshold
while the conclusion still holds, so the constants cannot be improved.
"""

from diskcheck import (
    Params,
    SeriesA,
    Theorem,
    Witness,
    check,
    make_witness,
    membership,
    FunctionClass,
    witness_closed_forms,
)

# a comfortable case: small coefficient, wide margins
f = SeriesA.from_tail(1, [0.2])
rep = check(Theorem.THM1, f, Params(alpha=0.25))
print("thm1 on z + 0.2 z^2, alpha=0.25")
print("  hypothesis sup  <=", rep.hyp.upper, " threshold", rep.hyp_threshold)
print("  conclusion  max  =", rep.concl.lower, " bound", rep.concl_bound)
print("  verdict:", rep.verdict.state.value)

# the sharp witness sits just inside at every r < 1
alpha = 0.5
w = make_witness(Witness.EX1, 1, alpha)
rep = check(Theorem.THM1, w, Params(alpha=alpha))
print("\nthm1 witness z + z^2/3, alpha=0.5")
print("  hypothesis margin:", rep.verdict.hypothesis_margin)
print("  conclusion margin:", rep.verdict.conclusion_margin)
print("  verdict:", rep.verdict.state.value)

# closed forms show the hypothesis/threshold ratio is exactly r^n
for r in (0.9, 0.99, 0.999):
    forms = witness_closed_forms(Witness.EX1, 1, alpha, 0j, r)
    print(f"  r={r}: hypothesis sup = {forms.hyp_sup_on_circle:.6f}"
          f" (threshold {rep.hyp_threshold:.6f})")

# a function that is NOT starlike of order 0.6, caught by membership
g = SeriesA.from_tail(1, [1.0 / 3.0])
out = membership(FunctionClass.STARLIKE, g, 0.6)
print("\nmembership star(0.6) on z + z^2/3:", out.state.value,
      "witness near", out.witness)

# too large a coefficient: hypothesis cannot be certified, never 'Fails'
big = SeriesA.from_tail(1, [1.0])
rep = check(Theorem.THM1, big, Params(alpha=0.0))
print("\nthm1 on z + z^2:", rep.verdict.state.value,
      "(hypothesis margin", f"{rep.verdict.hypothesis_margin:.4f})")
