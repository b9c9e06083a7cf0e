"""Convexity bounds as checkable objects.

Every inequality in this package comes back as a Certificate: both
sides, the slack between them, and flags for holding or collapsing to
equality.  This script runs the main bounds on one distribution, then
visits the symmetric case where a peeled-mean chain sits at equality
without the distribution being anywhere near uniform.
"""

from neglab import (
    NEG_LOG,
    SQUARE,
    concave_mixture_bound,
    get_function,
    make_dist,
    mixture_bound,
    partial_mean_chain,
    pointwise_bound,
    self_information_bound,
)


def describe(cert, indent=0):
    pad = " " * indent
    mark = "=" if cert.equality else ("ok" if cert.holds else "FAIL")
    print(f"{pad}[{mark:>4}] {cert.name}: {cert.lhs:.9f} <= {cert.rhs:.9f}  (slack {cert.slack:.2e})")
    for sub in cert.detail:
        describe(sub, indent + 4)


p = make_dist([1 / 3, 1 / 6, 1 / 6, 1 / 3])

print("Mixture bounds for two convex functions and one concave one:")
describe(mixture_bound(NEG_LOG, p))
describe(mixture_bound(SQUARE, p))
describe(concave_mixture_bound(get_function("x_log_x"), p))
describe(self_information_bound(p))
print()

print("The same inequality holds one coordinate at a time:")
for i in range(p.n):
    describe(pointwise_bound(NEG_LOG, p, i), indent=2)
print()

# The peeled-mean chain interpolates between the coarse bound and the
# plain mean of f, one entry at a time.  Each intermediate value is
# itself a valid upper bound, so the sequence can only grow.
chain, cert = partial_mean_chain(NEG_LOG, p, 0)
print(f"Chain excluding index 0: bounds grow from {cert.lhs:.6f} to {cert.rhs:.6f}")
print("  partial means:", [round(z, 6) for z in chain.zetas])
print("  bound ladder: ", [round(b, 6) for b in chain.bounds])
print()

print("A symmetric peak makes the chain collapse to equality at 3 bits exactly,")
print("even though the distribution is far from uniform:")
peak = make_dist([1 / 8, 1 / 8, 1 / 2, 1 / 8, 1 / 8])
_, level = partial_mean_chain(NEG_LOG, peak, 2)
describe(level, indent=2)

print("\n...and a 1% bump on the first coordinate breaks it:")
bumped = [v + 0.01 if i == 0 else v for i, v in enumerate(peak.tolist())]
total = sum(bumped)
_, broken = partial_mean_chain(NEG_LOG, make_dist([v / total for v in bumped]), 2)
describe(broken, indent=2)
