"""Constructors for the motives of linear groups, Grassmannians, flag
varieties and their torsor bundles, plus the Chow-height bookkeeping that
makes the splitting theorem an exact multiset identity.

Every constructor enumerates its index set lexicographically and returns a
TateMotive, so reports built from these values are reproducible byte for
byte.
"""

from __future__ import annotations

import itertools

from .tate import (
    Bidegree,
    TateMotive,
    bidegree_d,
    chow_height,
    cone_of_inclusion,
    tensor,
    twist,
)


def check_signature(sig) -> tuple:
    """Validate a strictly increasing signature of nonnegative integers."""
    sig = tuple(int(x) for x in sig)
    if not sig:
        raise ValueError("signature must be nonempty")
    if any(x < 0 for x in sig):
        raise ValueError("signature entries must be nonnegative: %r" % (sig,))
    for a, b in zip(sig, sig[1:]):
        if a >= b:
            raise ValueError(
                "signature must be strictly increasing: %r" % (sig,)
            )
    return sig


def motive_gl(n: int) -> TateMotive:
    """Motive of GL(n): one Tate summand d(I) per increasing sequence I.

    Runs over all 2^n strictly increasing sequences in {1..n}, the empty one
    included.  The summand attached to I has Chow height len(I).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts: dict[Bidegree, int] = {}
    for size in range(n + 1):
        for I in itertools.combinations(range(1, n + 1), size):
            b = bidegree_d(I)
            counts[b] = counts.get(b, 0) + 1
    return TateMotive(counts)


def motive_gr(m: int, n: int) -> TateMotive:
    """Motive of the Grassmannian Gr(m, n): summands (2N, N) over partitions.

    One summand per weakly increasing m-tuple 0 <= l_1 <= ... <= l_m <= n-m
    with N the tuple sum; C(n, m) summands in total, all of Chow height 0.
    """
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    counts: dict[Bidegree, int] = {}
    for lam in itertools.combinations_with_replacement(range(n - m + 1), m):
        N = sum(lam)
        b = Bidegree(2 * N, N)
        counts[b] = counts.get(b, 0) + 1
    return TateMotive(counts)


def motive_fl(sig) -> TateMotive:
    """Motive of the partial flag variety: product of consecutive Grassmannians.

    A leading 0 in the signature is dropped (the flag variety on
    (0, n_2, ..., n_r) is the one on (n_2, ..., n_r)); a length-1 signature
    gives a point.
    """
    sig = check_signature(sig)
    if sig[0] == 0:
        sig = sig[1:]
    result = TateMotive.unit()
    for a, b in zip(sig, sig[1:]):
        result = tensor(result, motive_gr(a, b))
    return result


def motive_v(m: int, n: int) -> TateMotive:
    """Motive of the Stiefel variety V(m, n): summands d(S) over subsets S of
    the top m indices {n-m+1..n}."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    counts: dict[Bidegree, int] = {}
    for size in range(m + 1):
        for S in itertools.combinations(range(n - m + 1, n + 1), size):
            b = bidegree_d(S)
            counts[b] = counts.get(b, 0) + 1
    return TateMotive(counts)


def motive_a(sig) -> TateMotive:
    """Motive of the frame-bundle total space on a signature:
    motive_gl(n_1) tensored with the flag-variety motive."""
    sig = check_signature(sig)
    return tensor(motive_gl(sig[0]), motive_fl(sig))


def reduced_motive_x(m: int, sig) -> TateMotive:
    """The m-th filtration quotient: flag motives twisted by d(I), |I| >= m.

    Sums twist(motive_fl(sig), d(I)) over strictly increasing sequences I in
    {1..n_1} of length at least m.  With m = 0 the empty sequence is included,
    so the result is the full (unreduced) bundle motive; callers wanting the
    reduced object at m = 0 subtract the unit summand themselves.
    """
    sig = check_signature(sig)
    n1 = sig[0]
    if not 0 <= m <= n1:
        raise ValueError("need 0 <= m <= n_1 = %d" % n1)
    fl = motive_fl(sig)
    result = TateMotive.zero()
    for size in range(m, n1 + 1):
        for I in itertools.combinations(range(1, n1 + 1), size):
            result = result + twist(fl, bidegree_d(I))
    return result


def height_bijection(m: int, n1: int) -> list:
    """The pairing of box partitions with index sequences of length m.

    Sends each weakly increasing m-tuple bounded by n1 - m to the strictly
    increasing sequence (l_1 + 1, ..., l_m + m).  The returned list covers
    each side exactly once, and the map matches bidegrees:
    d(1..m) + (2N, N) = d(l_1 + 1, ..., l_m + m).
    """
    if not 0 <= m <= n1:
        raise ValueError("need 0 <= m <= n1")
    pairs = []
    for lam in itertools.combinations_with_replacement(range(n1 - m + 1), m):
        image = tuple(l + j for j, l in enumerate(lam, start=1))
        pairs.append((lam, image))
    return pairs


def verify_splitting(n: int) -> dict:
    """Check the splitting of the reduced GL(n) motive into twisted
    Grassmannian pieces, as an exact multiset identity.

    The left side is motive_gl(n) minus its unit summand; the right side is
    the direct sum over m = 1..n of twist(motive_gr(m, n), d(1..m)).  The
    report lists per-m summand counts, the total, and the first mismatch in
    canonical order if the two multisets differ.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs = cone_of_inclusion(TateMotive.unit(), motive_gl(n))
    rhs = TateMotive.zero()
    per_m = []
    for m in range(1, n + 1):
        piece = twist(motive_gr(m, n), bidegree_d(range(1, m + 1)))
        per_m.append({"m": m, "summands": piece.total_rank()})
        rhs = rhs + piece
    ok = lhs == rhs
    report = {
        "n": n,
        "pass": ok,
        "per_m": per_m,
        "total_summands": rhs.total_rank(),
        "mismatch": None,
    }
    if not ok:
        left = dict(lhs.summands())
        right = dict(rhs.summands())
        for b in sorted(set(left) | set(right), key=lambda b: (b.q, b.p)):
            if left.get(b, 0) != right.get(b, 0):
                report["mismatch"] = {
                    "p": b.p,
                    "q": b.q,
                    "lhs_mult": left.get(b, 0),
                    "rhs_mult": right.get(b, 0),
                }
                break
    return report


def splitting_pieces(n: int) -> list:
    """The twisted Grassmannian pieces of the splitting, m = 1..n, with the
    Chow height of each piece (every summand of piece m has height m)."""
    pieces = []
    for m in range(1, n + 1):
        piece = twist(motive_gr(m, n), bidegree_d(range(1, m + 1)))
        heights = {chow_height(b) for b, _ in piece.summands()}
        pieces.append({"m": m, "motive": piece, "heights": sorted(heights)})
    return pieces
