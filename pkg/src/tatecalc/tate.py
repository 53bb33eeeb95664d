"""Exact arithmetic of bidegrees, tridegrees and pure Tate motives.

A pure Tate motive is modeled as a finite multiset of bidegrees (p, q) with
positive integer multiplicities.  Direct sum is multiset union, tensor product
is the multiset of pairwise sums, and the two-variable Poincare polynomial
P(t, u) = sum mult * t^p * u^q is a complete invariant.  All values are
immutable and all operations are pure functions.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple


class Bidegree(NamedTuple):
    """Cohomological degree p and weight q."""

    p: int
    q: int

    def plus(self, other) -> "Bidegree":
        return Bidegree(self.p + other[0], self.q + other[1])


class Tridegree(NamedTuple):
    """Filtration degree l on top of a bidegree (p, q)."""

    l: int
    p: int
    q: int


def chow_height(b) -> int:
    """The Chow height 2q - p of a bidegree (p, q)."""
    p, q = b
    return 2 * q - p


def total_chow_height(t) -> int:
    """The total Chow height 2q - p - l of a tridegree (l, p, q)."""
    l, p, q = t
    return 2 * q - p - l


def bidegree_d(indices) -> Bidegree:
    """Bidegree attached to a strictly increasing index sequence.

    d(i_1, ..., i_m) = (sum (2 i_j - 1), sum i_j); the empty sequence gives
    (0, 0).  Its Chow height is m, the length of the sequence.

    >>> bidegree_d(())
    Bidegree(p=0, q=0)
    >>> bidegree_d((1, 2))
    Bidegree(p=4, q=3)
    """
    seq = tuple(indices)
    for a, b in zip(seq, seq[1:]):
        if a >= b:
            raise ValueError("index sequence must be strictly increasing: %r" % (seq,))
    if seq and seq[0] < 1:
        raise ValueError("indices must be positive integers: %r" % (seq,))
    return Bidegree(sum(2 * i - 1 for i in seq), sum(seq))


class NotASubmotive(ValueError):
    """Raised by cone_of_inclusion when the first motive does not embed."""


class TateMotive:
    """A finite multiset of bidegrees with positive multiplicities.

    Equality is multiset equality; the canonical summand order (sorted by
    (q, p)) is used for serialization and reports.
    """

    __slots__ = ("_summands",)

    def __init__(self, summands: Iterable = ()):
        counts: dict[Bidegree, int] = {}
        if isinstance(summands, Mapping):
            items = summands.items()
        else:
            items = ((b, 1) for b in summands)
        for b, mult in items:
            if mult < 0:
                raise ValueError("multiplicities must be nonnegative")
            if mult:
                key = Bidegree(b[0], b[1])
                counts[key] = counts.get(key, 0) + mult
        self._summands = counts

    @classmethod
    def zero(cls) -> "TateMotive":
        return cls()

    @classmethod
    def unit(cls) -> "TateMotive":
        """The motive with the single summand (0, 0)."""
        return cls([(0, 0)])

    def summands(self) -> list[tuple[Bidegree, int]]:
        """Summands with multiplicities in canonical (q, p) order."""
        return sorted(self._summands.items(), key=lambda it: (it[0].q, it[0].p))

    def multiplicity(self, b) -> int:
        return self._summands.get(Bidegree(b[0], b[1]), 0)

    def total_rank(self) -> int:
        """Number of summands counted with multiplicity."""
        return sum(self._summands.values())

    def is_zero(self) -> bool:
        return not self._summands

    def __eq__(self, other):
        if not isinstance(other, TateMotive):
            return NotImplemented
        return self._summands == other._summands

    def __hash__(self):
        return hash(frozenset(self._summands.items()))

    def __add__(self, other: "TateMotive") -> "TateMotive":
        """Direct sum: multiset union."""
        counts = dict(self._summands)
        for b, mult in other._summands.items():
            counts[b] = counts.get(b, 0) + mult
        return TateMotive(counts)

    def __mul__(self, other: "TateMotive") -> "TateMotive":
        return tensor(self, other)

    def __repr__(self):
        body = ", ".join(
            "(%d,%d)x%d" % (b.p, b.q, m) if m > 1 else "(%d,%d)" % (b.p, b.q)
            for b, m in self.summands()
        )
        return "TateMotive{%s}" % body

    def to_json_dict(self) -> dict:
        return {
            "summands": [
                {"p": b.p, "q": b.q, "mult": m} for b, m in self.summands()
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "TateMotive":
        counts: dict[Bidegree, int] = {}
        for entry in data["summands"]:
            key = Bidegree(int(entry["p"]), int(entry["q"]))
            counts[key] = counts.get(key, 0) + int(entry["mult"])
        return cls(counts)


def tensor(a: TateMotive, b: TateMotive) -> TateMotive:
    """Tensor product: pairwise bidegree sums, multiplicities multiplied."""
    counts: dict[Bidegree, int] = {}
    for x, mx in a._summands.items():
        for y, my in b._summands.items():
            key = Bidegree(x.p + y.p, x.q + y.q)
            counts[key] = counts.get(key, 0) + mx * my
    return TateMotive(counts)


def twist(a: TateMotive, b) -> TateMotive:
    """Shift every summand by the bidegree b."""
    dp, dq = b
    return TateMotive(
        {Bidegree(x.p + dp, x.q + dq): m for x, m in a._summands.items()}
    )


def height_filter(a: TateMotive, m: int, mode: str = "eq") -> TateMotive:
    """Summands of Chow height equal to m ('eq') or at least m ('ge')."""
    if mode not in ("eq", "ge"):
        raise ValueError("mode must be 'eq' or 'ge'")
    if mode == "eq":
        keep = lambda b: chow_height(b) == m
    else:
        keep = lambda b: chow_height(b) >= m
    return TateMotive({b: mult for b, mult in a._summands.items() if keep(b)})


def cone_of_inclusion(m: TateMotive, n: TateMotive) -> TateMotive:
    """Multiset difference n minus m, defined only when m embeds in n."""
    counts = dict(n._summands)
    for b, mult in m._summands.items():
        have = counts.get(b, 0)
        if mult > have:
            raise NotASubmotive(
                "summand (%d,%d) has multiplicity %d, need %d" % (b.p, b.q, have, mult)
            )
        if mult == have:
            del counts[b]
        else:
            counts[b] = have - mult
    return TateMotive(counts)


class Poly2:
    """Sparse polynomial in t, u with integer coefficients.

    Used as the Poincare polynomial of a motive; also handy for the generating
    function identities checked by the realization module.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        data: dict[tuple[int, int], int] = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    k = (int(key[0]), int(key[1]))
                    data[k] = data.get(k, 0) + c
        self._coeffs = {k: c for k, c in data.items() if c}

    @classmethod
    def term(cls, coeff: int, p: int, q: int) -> "Poly2":
        return cls({(p, q): coeff})

    @classmethod
    def one(cls) -> "Poly2":
        return cls({(0, 0): 1})

    def coefficient(self, p: int, q: int) -> int:
        return self._coeffs.get((p, q), 0)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda it: (it[0][1], it[0][0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "Poly2") -> "Poly2":
        data = dict(self._coeffs)
        for k, c in other._coeffs.items():
            data[k] = data.get(k, 0) + c
        return Poly2(data)

    def __sub__(self, other: "Poly2") -> "Poly2":
        data = dict(self._coeffs)
        for k, c in other._coeffs.items():
            data[k] = data.get(k, 0) - c
        return Poly2(data)

    def __mul__(self, other: "Poly2") -> "Poly2":
        data: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self._coeffs.items():
            for (p2, q2), c2 in other._coeffs.items():
                k = (p1 + p2, q1 + q2)
                data[k] = data.get(k, 0) + c1 * c2
        return Poly2(data)

    def truncate_weight(self, max_weight: int) -> "Poly2":
        """Drop all terms with u-exponent above max_weight."""
        return Poly2({k: c for k, c in self._coeffs.items() if k[1] <= max_weight})

    def substitute_tu(self, p_scale: int, q_scale: int) -> "Poly2":
        """View a one-variable polynomial in x as one in (t, u).

        The input must be stored with q = 0 throughout; a term c * x^k becomes
        c * t^(p_scale*k) u^(q_scale*k), i.e. x is read as t^p_scale u^q_scale.
        """
        data: dict[tuple[int, int], int] = {}
        for (p, q), c in self._coeffs.items():
            if q != 0:
                raise ValueError("substitute_tu needs a one-variable polynomial")
            k = (p_scale * p, q_scale * p)
            data[k] = data.get(k, 0) + c
        return Poly2(data)

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (p, q), c in self.items():
            factors = []
            if abs(c) != 1 or (p == 0 and q == 0):
                factors.append(str(abs(c)))
            if p == 1:
                factors.append("t")
            elif p:
                factors.append("t^%d" % p)
            if q == 1:
                factors.append("u")
            elif q:
                factors.append("u^%d" % q)
            text = "*".join(factors)
            if not parts:
                parts.append(text if c > 0 else "-" + text)
            else:
                parts.append(("+ " if c > 0 else "- ") + text)
        return " ".join(parts)

    __repr__ = __str__


def poincare(a: TateMotive) -> Poly2:
    """Poincare polynomial sum mult * t^p * u^q; a complete invariant."""
    return Poly2({(b.p, b.q): m for b, m in a._summands.items()})
