"""Shannon entropy in bits and entropy-ordering certificates.

All logarithms are base 2 and the summand for a zero probability is taken
as its limit, 0 * log(0) = 0.  Negating a distribution never decreases its
entropy (for n >= 3 it strictly increases unless already uniform), which
yields the chain H(p) <= H(negate(p)) <= H(negate(negate(p))) <= log2(n)
certified below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .certificates import Certificate, compare
from .distribution import DimensionError, DomainError, ProbDist, pad_with_zeros, is_uniform
from .negation import negate, negate_twice

__all__ = [
    "shannon_entropy",
    "self_information",
    "EntropyReport",
    "entropy_report",
    "cross_entropy_check",
    "entropy_chain_check",
    "zero_padding_entropy_check",
]


def shannon_entropy(p: ProbDist) -> float:
    """Entropy in bits, zero-probability outcomes contributing nothing."""
    pos = p.probs[p.probs > 0]
    return float(-np.sum(pos * np.log2(pos))) + 0.0


def self_information(prob: float) -> float:
    """-log2 of a single probability, in bits.

    An impossible outcome carries infinite information, so 0 maps to
    ``inf`` rather than raising.  Values outside [0, 1] raise
    :class:`DomainError`.
    """
    if not 0.0 <= prob <= 1.0:
        raise DomainError(f"probability must lie in [0, 1], got {prob!r}")
    if prob == 0.0:
        return math.inf
    return -math.log2(prob) + 0.0


@dataclass(frozen=True)
class EntropyReport:
    """Entropy of a distribution next to the ceiling for its size."""

    n: int
    entropy_bits: float
    max_entropy_bits: float
    gap_bits: float

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "entropy_bits": self.entropy_bits,
            "max_entropy_bits": self.max_entropy_bits,
            "gap_bits": self.gap_bits,
        }


def entropy_report(p: ProbDist) -> EntropyReport:
    """Entropy, the log2(n) ceiling, and the gap between them."""
    h = shannon_entropy(p)
    h_max = math.log2(p.n)
    return EntropyReport(n=p.n, entropy_bits=h, max_entropy_bits=h_max, gap_bits=h_max - h)


def cross_entropy_check(p: ProbDist, q: ProbDist) -> Certificate:
    """Certify H(p) <= H(p, q), the cross entropy of p relative to q.

    When q assigns zero probability to an outcome p can produce, the cross
    entropy diverges; the certificate then carries ``infinite=True`` and
    the bound holds trivially.  Equality is flagged when p and q agree
    element-wise within 1e-12.
    """
    if p.n != q.n:
        raise DimensionError(f"size mismatch: {p.n} vs {q.n}")
    support = p.probs > 0
    lhs = shannon_entropy(p)
    if np.any(q.probs[support] == 0.0):
        rhs = math.inf
    else:
        rhs = float(-np.sum(p.probs[support] * np.log2(q.probs[support])))
    same = bool(np.max(np.abs(p.probs - q.probs)) <= 1e-12)
    return compare("cross_entropy", lhs, rhs, equality=same and not math.isinf(rhs))


def entropy_chain_check(p: ProbDist) -> Certificate:
    """Certify H(p) <= H(negate(p)) <= H(negate(negate(p))) <= log2(n).

    The three links are attached as sub-certificates; the top-level sides
    are the ends of the chain.  Every link collapses to equality exactly
    when p is uniform.
    """
    h0 = shannon_entropy(p)
    h1 = shannon_entropy(negate(p))
    h2 = shannon_entropy(negate_twice(p))
    h_max = math.log2(p.n)
    links = (
        compare("entropy_le_negation_entropy", h0, h1),
        compare("negation_entropy_le_double_negation_entropy", h1, h2),
        compare("double_negation_entropy_le_log_n", h2, h_max),
    )
    holds = all(c.holds for c in links)
    equality = all(c.equality for c in links)
    return Certificate(
        name="entropy_chain",
        lhs=h0,
        rhs=h_max,
        slack=h_max - h0,
        holds=holds or equality,
        equality=equality,
        infinite=False,
        detail=links,
    )


def zero_padding_entropy_check(p: ProbDist, k: int) -> Certificate:
    """Compare entropy before and after appending ``k`` zero outcomes.

    Padding leaves the entropy itself untouched (sub-certificate one, an
    equality claim at 1e-12), but feeds the negation extra room: the
    negation of the padded distribution has strictly larger entropy
    whenever p is not uniform (sub-certificate two).  For uniform p the
    second comparison is recorded without being asserted.
    """
    if k < 1:
        raise DomainError(f"padding count must be >= 1, got {k}")
    padded = pad_with_zeros(p, k)
    h = shannon_entropy(p)
    h_padded = shannon_entropy(padded)
    preserved = Certificate(
        name="padding_preserves_entropy",
        lhs=h,
        rhs=h_padded,
        slack=h_padded - h,
        holds=abs(h_padded - h) <= 1e-12,
        equality=abs(h_padded - h) <= 1e-12,
        infinite=False,
    )
    g = shannon_entropy(negate(p))
    g_padded = shannon_entropy(negate(padded))
    strict = not is_uniform(p)
    raised = Certificate(
        name="padding_raises_negation_entropy",
        lhs=g,
        rhs=g_padded,
        slack=g_padded - g,
        holds=(g_padded > g) if strict else True,
        equality=abs(g_padded - g) <= 1e-9 if not strict else False,
        infinite=False,
    )
    holds = preserved.holds and raised.holds
    return Certificate(
        name="zero_padding_entropy",
        lhs=h,
        rhs=h_padded,
        slack=h_padded - h,
        holds=holds,
        equality=preserved.equality and holds,
        infinite=False,
        detail=(preserved, raised),
    )
