"""Exact independence-polynomial computation.

Two independent routes are kept deliberately: a deletion-contraction
engine (the workhorse) and a subset-counting brute force (the oracle the
engine is tested against).  Both return exact integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import EnumerationLimitError, Graph
from .polynomials import ONE, IntPolynomial

BRUTE_FORCE_LIMIT = 26


def independence_polynomial(g: Graph) -> IntPolynomial:
    """Coefficient of x^i counts the independent sets of size i.

    Uses the recursion P(G) = P(G - v) + x * P(G - N[v]) with a
    maximum-degree pivot, after splitting the current induced subgraph
    into connected components (disjoint parts multiply).  Subgraphs are
    bitmasks over the original vertex set; results are cached per mask
    for the duration of one call, which keeps path- and cycle-like
    instances polynomial-time.  No state survives between calls.
    """
    n = g.n
    if n == 0:
        return ONE
    adj = g._adj
    cache: dict[int, IntPolynomial] = {}

    def components(mask: int) -> list[int]:
        comps = []
        remaining = mask
        while remaining:
            comp = remaining & -remaining
            frontier = comp
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & remaining & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def solve(mask: int) -> IntPolynomial:
        if mask == 0:
            return ONE
        hit = cache.get(mask)
        if hit is not None:
            return hit
        comps = components(mask)
        if len(comps) > 1:
            result = ONE
            for comp in comps:
                result = result * solve(comp)
        else:
            # connected piece: pivot on a maximum-degree vertex
            best_v = -1
            best_deg = -1
            m = mask
            while m:
                b = m & -m
                m ^= b
                v = b.bit_length() - 1
                d = (adj[v] & mask).bit_count()
                if d > best_deg:
                    best_deg, best_v = d, v
            if best_deg == 0:
                result = IntPolynomial((1, 1))  # single vertex
            else:
                bit = 1 << best_v
                without_v = solve(mask & ~bit)
                without_closed = solve(mask & ~(bit | adj[best_v]))
                result = without_v + without_closed.shift(1)
        cache[mask] = result
        return result

    return solve((1 << n) - 1)


def independence_polynomial_bruteforce(
    g: Graph, limit: int = BRUTE_FORCE_LIMIT
) -> IntPolynomial:
    """Count independent sets directly over all 2^n subsets."""
    n = g.n
    if n > limit:
        raise EnumerationLimitError(f"brute-force counting capped at n = {limit}")
    adj = g._adj
    counts = [0] * (n + 1)
    counts[0] = 1
    independent = bytearray(1 << n)
    independent[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if independent[rest] and not adj[low.bit_length() - 1] & rest:
            independent[mask] = 1
            counts[mask.bit_count()] += 1
    return IntPolynomial(counts)


def independence_number(g: Graph) -> int:
    """Size of a largest independent set; 0 for the empty graph."""
    return max(independence_polynomial(g).degree, 0)


@dataclass(frozen=True)
class MinusOneProfile:
    """Exact value at -1 together with the multiplicity of -1 as a root."""

    value: int
    multiplicity: int


def minus_one_profile(p: IntPolynomial) -> MinusOneProfile:
    """Evaluate p(-1) and count how often (x + 1) divides p exactly.

    Repeated synthetic division; the zero polynomial is rejected.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no minus-one profile")
    value = p(-1)
    multiplicity = 0
    q = p
    while q(-1) == 0 and not q.is_zero():
        q, _ = q.divide_linear_root(-1)
        multiplicity += 1
    return MinusOneProfile(value=value, multiplicity=multiplicity)
