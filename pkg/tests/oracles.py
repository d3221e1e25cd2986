"""Independent oracles used by the test suite.

These deliberately avoid the production code paths they check: the Hopf
bracket oracle resolves an explicit diagram crossing by crossing, and the
satellite oracle expands over all coefficient tuples instead of collapsing
multiplicities.
"""

from __future__ import annotations

import cmath
import itertools
from functools import lru_cache

from skeincalc.cyclotomic import CycInt, CycNum, from_int, ring_modulus
from skeincalc.skein import A_power, SkeinElem, delta, hopf_bracket, twist


def numeric(x, N=None):
    """Evaluate at zeta_N = exp(2 pi i / N); for approximate cross-checks."""
    if isinstance(x, CycNum):
        return numeric(x.num) / x.p ** x.k
    if N is None:
        N = x.modulus
    z = cmath.exp(2j * cmath.pi / N)
    return sum(c * z ** i for i, c in enumerate(x.coeffs))


@lru_cache(maxsize=None)
def hopf_state_sum_data(n: int) -> tuple:
    """Kauffman state sum of the n-fiber diagram, as ((A-exponent, loops), count).

    The diagram is the closure of the braid (s_1 ... s_(n-1))^n — n strands,
    pairwise linking +1 — with one positive kink inserted into each closure
    arc for the +1 framings: n(n-1) + n crossings, each resolved both ways.
    """
    arcs = itertools.count()
    cur = [next(arcs) for _ in range(n)]
    bottom = list(cur)
    crossings = []  # (bottom-left, bottom-right, top-left, top-right)
    for _ in range(n):
        for i in range(n - 1):
            tl, tr = next(arcs), next(arcs)
            crossings.append((cur[i], cur[i + 1], tl, tr))
            cur[i], cur[i + 1] = tl, tr
    for j in range(n):
        loop = next(arcs)
        crossings.append((cur[j], loop, bottom[j], loop))
    total_arcs = next(arcs)

    # positive crossing: A keeps the strands parallel, A^-1 joins them
    a_pairs = [((bl, tl), (br, tr)) for bl, br, tl, tr in crossings]
    b_pairs = [((bl, br), (tl, tr)) for bl, br, tl, tr in crossings]

    counter: dict[tuple[int, int], int] = {}
    for state in range(2 ** len(crossings)):
        parent = list(range(total_arcs))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        exp = 0
        for idx in range(len(crossings)):
            if state >> idx & 1:
                exp -= 1
                pairs = b_pairs[idx]
            else:
                exp += 1
                pairs = a_pairs[idx]
            for a, b in pairs:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        loops = len({find(x) for x in range(total_arcs)})
        key = (exp, loops)
        counter[key] = counter.get(key, 0) + 1
    return tuple(sorted(counter.items()))


def hopf_state_sum(p: int, n: int) -> CycInt:
    """Evaluate the state-sum data in the ring at p (loop value delta)."""
    N = ring_modulus(p)
    total = from_int(N, 0)
    d = delta(p)
    dpow = [from_int(N, 1)]
    for (exp, loops), count in hopf_state_sum_data(n):
        while len(dpow) <= loops:
            dpow.append(dpow[-1] * d)
        total = total + A_power(p, exp) * dpow[loops] * count
    return total


def satellite_direct(p: int, cable_decors, zero_decor) -> CycNum:
    """Satellite bracket by expanding every cable-coefficient tuple directly."""
    tz = twist(zero_decor, -1)
    total = CycNum(from_int(ring_modulus(p), 0), p, 0)
    ranges = [range(len(c.coeffs)) for c in cable_decors]
    for m, cm in enumerate(tz.coeffs):
        if cm.is_zero:
            continue
        for combo in itertools.product(*ranges):
            term = cm
            for dec, j in zip(cable_decors, combo):
                term = term * dec.coeffs[j]
            total = total + term * hopf_bracket(p, m + sum(combo))
    return total


def random_cycint(rng, N: int, lo: int = -9, hi: int = 9) -> CycInt:
    from skeincalc.cyclotomic import euler_phi
    return CycInt(N, [rng.randint(lo, hi) for _ in range(euler_phi(N))])


def random_skein(rng, p: int, max_degree: int = 3) -> SkeinElem:
    N = ring_modulus(p)
    deg = rng.randint(0, max_degree)
    return SkeinElem(p, [random_cycint(rng, N, -4, 4) for _ in range(deg + 1)])
