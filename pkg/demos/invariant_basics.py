"""Tour of the tensor type and the ten invariants.

Builds harmonic tensors on both scalar backends, shows the trace
completion at work, evaluates the invariants with the optimized and the
naive evaluator, and reconstructs the quartic invariant from the mixed
set.

Run with:  python demos/invariant_basics.py
"""

from fractions import Fraction

import harmonic4 as h4

# --- A harmonic tensor is fixed by 9 components; the other 6 slots follow
#     from the vanishing traces.
d = h4.from_independent((8, 0, 0, -4, 0, 5, 5, 3, 0), backend=h4.EXACT)
print("independent components:", d.indep)
print("completed slots:")
for slot, value in sorted(d.expand().items()):
    print(f"   D{''.join(map(str, slot))} = {value}")
print("max trace violation:", h4.check_traceless(d), "(exact backend: always 0)")

# --- Any index order works; the canonical key is the sorted one.
print("\nD_3113 =", d.component(3, 1, 1, 3), " canonical key:",
      h4.canonical_index(3, 1, 1, 3))

# --- The ten invariants.  This tensor kills three odd invariants but not
#     the cubic one, which is what makes it a sign witness.
vec = h4.invariants(d)
print("\ninvariants (exact):")
for name, value in vec.as_dict().items():
    print(f"   {name:>3} = {value}")

# --- The optimized evaluator (weighted canonical slots) agrees with the
#     naive full-loop oracle, exactly, on the exact backend.
print("\noptimized == naive oracle:", vec == h4.invariants_oracle(d))

# --- Float backend: same API, binary64 scalars, numpy fast path.
unit = h4.from_independent((1, 0, 0, 0, 0, 0, 0, 0, 0), backend=h4.FLOAT)
print("\nunit D1111 tensor (float):", h4.invariants(unit).as_dict())

# --- Scaling by c multiplies each invariant by c^degree.
scaled = h4.invariants(unit.scale(2**0.5))
print("after scaling by sqrt(2): J2 =", round(scaled.j2, 12),
      " K6 =", round(scaled.k6, 9))

# --- The quartic invariant is a function of the mixed set {J2, J3, J6, K6}.
vec = h4.invariants(h4.random_harmonic(123, backend=h4.EXACT))
rebuilt = h4.j4_from_mixed(vec.j2, vec.j3, vec.j6, vec.k6)
print("\nJ4 reconstructed from (J2, J3, J6, K6):", rebuilt == vec.j4,
      f"  (J4 = {vec.j4})")

# --- Tensors serialize to JSON with exact "p/q" strings on the exact backend.
print("\nJSON form:", h4.to_json_dict(h4.from_independent(
    (0, 1, 0, 0, 0, Fraction(-3, 4), Fraction(1, 4), 1, 0), backend=h4.EXACT)))
