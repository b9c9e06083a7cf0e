"""Entropy never drops under negation.

Two experiments.  First: repeated negation pushes Shannon entropy up
toward the log2(n) ceiling, and the whole path is certified by
entropy_chain_check.  Second: padding a distribution with impossible
outcomes leaves its entropy alone but still changes what negation does
to it, because the padded zeros soak up mass.
"""

from neglab import (
    entropy_chain_check,
    make_dist,
    negate,
    pad_with_zeros,
    shannon_entropy,
    zero_padding_entropy_check,
)

p = make_dist([1 / 3, 1 / 6, 1 / 6, 1 / 3])
print(f"H(p)                = {shannon_entropy(p):.6f} bits")
print(f"H(negate(p))        = {shannon_entropy(negate(p)):.6f} bits")
print(f"H(negate(negate(p)))= {shannon_entropy(negate(negate(p))):.6f} bits")
print("ceiling for n=4     = 2.000000 bits")
print()

chain = entropy_chain_check(p)
print(f"certificate {chain.name!r}: holds={chain.holds}, equality={chain.equality}")
for sub in chain.detail:
    print(f"  {sub.name}: slack={sub.slack:.3e}")
print()

# Now the padding experiment.  Appending zero-probability outcomes is
# cosmetically inert: the entropy stays put to the last bit.  But the
# negation now has more places to park mass, so its entropy jumps.
p3 = make_dist([2 / 3, 1 / 6, 1 / 6])
q5 = pad_with_zeros(p3, 2)
print(f"H(p3)  = {shannon_entropy(p3):.12f}")
print(f"H(q5)  = {shannon_entropy(q5):.12f}   (identical)")
print(f"H(negate(p3)) = {shannon_entropy(negate(p3)):.6f}")
print(f"H(negate(q5)) = {shannon_entropy(negate(q5)):.6f}   (larger)")

cert = zero_padding_entropy_check(p3, 2)
print(f"\ncertificate {cert.name!r}: holds={cert.holds}")
for sub in cert.detail:
    print(f"  {sub.name}: lhs={sub.lhs:.6f} rhs={sub.rhs:.6f}")
