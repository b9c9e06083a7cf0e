"""A first tour of distribution negation.

Negating a distribution hands each outcome's probability to everybody
else, in equal shares.  Run this to watch what that does to a few small
examples, why doing it twice does not come back, and where the process
is heading.
"""

from neglab import make_dist, negate, negate_iterated, negate_twice, uniform


def show(label, dist):
    body = ", ".join(f"{v:.6f}" for v in dist.tolist())
    print(f"  {label:<18} [{body}]")


p = make_dist([1 / 3, 1 / 6, 1 / 6, 1 / 3])

print("One negation redistributes mass toward the middle:")
show("p", p)
show("negate(p)", negate(p))
show("negate twice", negate_twice(p))
print()

# Unlike logical negation, this one is not an involution.  Each round
# shrinks the deviation from uniform by a factor 1/(n-1) and flips its
# sign, so the iterates spiral inward instead of bouncing back.
print("Deviation of the first coordinate from 1/4 across iterates:")
for k in range(6):
    dev = negate_iterated(p, k)[0] - 0.25
    print(f"  k={k}:  {dev:+.2e}")
print()

u = uniform(4)
print("The uniform distribution is the one fixed point:")
show("u", u)
show("negate(u)", negate(u))
print()

print("Two outcomes are special: negation just swaps the pair.")
coin = make_dist([0.9, 0.1])
show("coin", coin)
show("negate(coin)", negate(coin))
show("negate twice", negate_twice(coin))
