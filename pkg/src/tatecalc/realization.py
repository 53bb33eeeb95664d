"""Topological shadow of the motive catalog: integer rank tables.

Complex realization forgets the weight, so a motive's realization is the map
degree -> rank obtained by collapsing (p, q) to p.  On the topology side the
same tables arise from the exterior algebra on odd unitary classes graded by
word length, and from Grassmannian Betti numbers shifted by a Thom-space
dimension.  Everything here is free of torsion, so ranks tell the whole
story.

The Gaussian binomial is computed by the classical product formula with exact
polynomial division; it deliberately shares no code with the partition
enumeration in the catalog or the box-counting recurrence used for Betti
numbers, so the three routes cross-check each other.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .tate import Poly2, TateMotive


def unitary_word_length_ranks(n: int, m: int) -> dict:
    """Ranks by degree of the word-length-m part of the exterior algebra on
    generators of degree 2i - 1, i = 1..n."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    ranks: dict[int, int] = {}
    for I in itertools.combinations(range(1, n + 1), m):
        deg = sum(2 * i - 1 for i in I)
        ranks[deg] = ranks.get(deg, 0) + 1
    return ranks


@lru_cache(maxsize=None)
def _box_partition_counts(rows: int, width: int) -> tuple:
    """counts[N] = partitions of N fitting in a rows x width box.

    Recurrence: either every part is < width (shrink the box) or some part
    equals width (remove it).
    """
    if rows == 0 or width == 0:
        return (1,)
    smaller = _box_partition_counts(rows, width - 1)
    removed = _box_partition_counts(rows - 1, width)
    total = rows * width
    counts = [0] * (total + 1)
    for N, c in enumerate(smaller):
        counts[N] += c
    for N, c in enumerate(removed):
        counts[N + width] += c
    return tuple(counts)


def grassmannian_betti(m: int, n: int) -> dict:
    """Betti numbers of the complex Grassmannian Gr(m, n).

    Rank in degree 2N is the number of partitions of N in an m x (n-m) box;
    computed by the box recurrence, not by listing tuples.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    counts = _box_partition_counts(m, n - m)
    return {2 * N: c for N, c in enumerate(counts) if c}


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict[int, int] = {}
    for a, ca in f.items():
        for b, cb in g.items():
            out[a + b] = out.get(a + b, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def _poly_div_exact(f: dict, i: int) -> dict:
    """Exact division of f by (1 - q^i); raises if the division leaves a
    remainder."""
    if not f:
        return {}
    deg = max(f)
    g: dict[int, int] = {}
    for k in range(deg - i + 1):
        g[k] = f.get(k, 0) + g.get(k - i, 0)
    g = {k: c for k, c in g.items() if c}
    check = dict(g)
    for k, c in g.items():
        check[k + i] = check.get(k + i, 0) - c
    check = {k: c for k, c in check.items() if c}
    if check != {k: c for k, c in f.items() if c}:
        raise ArithmeticError("division by 1 - q^%d is not exact" % i)
    return g


def gaussian_binomial(n: int, m: int) -> dict:
    """The Gaussian binomial [n choose m]_q as {exponent: coefficient}.

    Product formula: prod_{i=1..m} (1 - q^(n-i+1)) / (1 - q^i), expanded with
    exact division at every step.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    result = {0: 1}
    for i in range(1, m + 1):
        result = _poly_mul(result, {0: 1, n - i + 1: -1})
        result = _poly_div_exact(result, i)
    return result


def thom_decomposition_check(n: int) -> dict:
    """Compare, for each m, word-length ranks against Betti numbers shifted by
    the Thom dimension m^2.

    The underlying index bijection sends a box partition to the sequence
    (l_1 + 1, ..., l_m + m), whose degree is 2N + m^2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    per_m = []
    ok = True
    for m in range(0, n + 1):
        word = unitary_word_length_ranks(n, m)
        shifted = {deg + m * m: r for deg, r in grassmannian_betti(m, n).items()}
        equal = word == shifted
        ok = ok and equal
        per_m.append(
            {"m": m, "shift": m * m, "equal": equal, "rank": sum(word.values())}
        )
    return {"n": n, "pass": ok, "per_m": per_m}


def realize_motive(a: TateMotive) -> dict:
    """Collapse a motive to its realization ranks: degree p -> total
    multiplicity over all weights."""
    ranks: dict[int, int] = {}
    for b, mult in a.summands():
        ranks[b.p] = ranks.get(b.p, 0) + mult
    return ranks


def q_series_identity(n: int):
    """Both sides of the product/sum identity underlying the splitting:

        prod_{i=1..n} (1 + t^(2i-1) u^i)
          = sum_{m=0..n} t^(m^2) u^(m(m+1)/2) * G_{m,n}(t^2 u)

    with G_{m,n} the Gaussian binomial from the product-formula oracle.
    Returns (lhs, rhs) as polynomials; they are expected to be equal.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lhs = Poly2.one()
    for i in range(1, n + 1):
        lhs = lhs * (Poly2.one() + Poly2.term(1, 2 * i - 1, i))
    rhs = Poly2({})
    for m in range(0, n + 1):
        gauss = Poly2({(deg, 0): c for deg, c in gaussian_binomial(n, m).items()})
        rhs = rhs + Poly2.term(1, m * m, m * (m + 1) // 2) * gauss.substitute_tu(2, 1)
    return lhs, rhs
