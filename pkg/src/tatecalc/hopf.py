"""Monomial algebra of the cohomology of general linear and Stiefel varieties.

The ring is generated over the formal coefficient ring Z[eps] (eps is
2-torsion: 2*eps^k = 0 for k >= 1) by odd classes rho_i / alpha_i of bidegree
(2i - 1, i).  Products are normalized to a canonical basis of strictly
increasing index words; a repeated index i rewrites through the square
relation

    alpha_i^2 = 0            if 2i - 1 > n,
    alpha_i^2 = eps * alpha_{2i-1}   otherwise.

eps models a weight-(1,1) 2-torsion scalar and is treated as central: since
2*eps = 0, the Koszul sign on eps is invisible, so centrality is exact.  Every
application of the square relation introduces an eps factor, after which all
integer coefficients live mod 2 and sign bookkeeping becomes trivial; this is
what makes the rewriting confluent (checked exhaustively in the tests rather
than assumed).

On top of the ring sit the Hopf structure maps (comultiply, antipode), the
symbolic derivation of the conjugation coaction, the Stiefel-variety coaction
formula, and the dual exterior algebra obtained by pairing dual classes
against comultiplication.
"""

from __future__ import annotations

import itertools
from bisect import insort
from dataclasses import dataclass, field
from typing import NamedTuple

from .tate import Bidegree


class IndexOutOfRange(ValueError):
    """An index fell outside the generator range of the ring."""


class Coefficient(NamedTuple):
    """A scalar c * eps^k; c is an integer, reduced mod 2 once k >= 1."""

    c: int
    k: int

    def normalized(self) -> "Coefficient":
        c = self.c % 2 if self.k >= 1 else self.c
        if c == 0:
            return Coefficient(0, 0)
        return Coefficient(c, self.k)

    @property
    def bidegree(self) -> Bidegree:
        return Bidegree(self.k, self.k)


class Monomial(NamedTuple):
    """A canonical basis word with its scalar: coeff * rho_{i_1} ... rho_{i_l}."""

    indices: tuple
    coeff: Coefficient

    @property
    def bidegree(self) -> Bidegree:
        p = sum(2 * i - 1 for i in self.indices) + self.coeff.k
        q = sum(self.indices) + self.coeff.k
        return Bidegree(p, q)

    @property
    def first_degree(self) -> int:
        return sum(2 * i - 1 for i in self.indices) + self.coeff.k


@dataclass(frozen=True)
class RingPresentation:
    """Generator range and relation table for GL(n) or V(m, n) cohomology.

    kind 'gl' has generators indexed 1..n; kind 'v' (the Stiefel variety of
    m-frames in n-space) has generators n-m+1..n.  In both cases the square of
    a generator is zero when 2i - 1 > n and eps times the generator 2i - 1
    otherwise.
    """

    kind: str
    n: int
    m: int

    @classmethod
    def gl(cls, n: int) -> "RingPresentation":
        if n < 0:
            raise ValueError("n must be nonnegative")
        return cls("gl", n, n)

    @classmethod
    def stiefel(cls, m: int, n: int) -> "RingPresentation":
        if not 0 <= m <= n:
            raise ValueError("need 0 <= m <= n")
        return cls("v", n, m)

    @property
    def generators(self) -> range:
        return range(self.n - self.m + 1, self.n + 1)

    @property
    def symbol(self) -> str:
        return "ρ" if self.kind == "gl" else "α"

    def square_target(self, i: int):
        """Index of the generator appearing in alpha_i^2, or None for zero."""
        return 2 * i - 1 if 2 * i - 1 <= self.n else None

    def check_indices(self, indices):
        lo, hi = self.n - self.m + 1, self.n
        for i in indices:
            if not lo <= i <= hi:
                raise IndexOutOfRange(
                    "index %d outside generator range %d..%d" % (i, lo, hi)
                )


def _merge_words(I, J):
    """Stable merge of two increasing words, counting Koszul inversions.

    Returns (merged list, number of pairs (i in I, j in J) with j < i).  All
    generators are odd in the first grading, so the sign of the merge is
    (-1)^inversions.
    """
    merged = []
    inv = 0
    a, b = list(I), list(J)
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        if b[ib] < a[ia]:
            merged.append(b[ib])
            ib += 1
            inv += len(a) - ia
        else:
            merged.append(a[ia])
            ia += 1
    merged.extend(a[ia:])
    merged.extend(b[ib:])
    return merged, inv


def _normalize_word(word, c, k, ring):
    """Rewrite repeated indices until the word is strictly increasing.

    Each rewrite replaces two equal letters by at most one letter, so the loop
    runs at most len(word) times; the budget assertion makes that termination
    argument executable.

    Returns (indices tuple, c, k) or None for a zero result.
    """
    word = list(word)
    budget = len(word) + 1
    for _ in range(budget):
        dup = -1
        for idx in range(len(word) - 1):
            if word[idx] == word[idx + 1]:
                dup = idx
                break
        if dup < 0:
            if k >= 1:
                c %= 2
            return (tuple(word), c, k) if c else None
        i = word[dup]
        target = ring.square_target(i)
        if target is None:
            return None
        k += 1
        c %= 2
        if c == 0:
            return None
        del word[dup : dup + 2]
        insort(word, target)
    raise RuntimeError("rewriting failed to terminate")  # unreachable


class Element:
    """A formal sum of canonical monomials over Z[eps]."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[tuple[int, tuple], int] = {}
        if terms:
            for (k, indices), c in terms.items():
                if k >= 1:
                    c %= 2
                if c:
                    key = (k, tuple(indices))
                    c0 = data.get(key, 0) + c
                    if k >= 1:
                        c0 %= 2
                    if c0:
                        data[key] = c0
                    else:
                        data.pop(key, None)
        self._terms = data

    @classmethod
    def from_monomial(cls, mono: Monomial) -> "Element":
        coeff = mono.coeff.normalized()
        return cls({(coeff.k, tuple(mono.indices)): coeff.c})

    @classmethod
    def generator(cls, i: int) -> "Element":
        return cls({(0, (i,)): 1})

    @classmethod
    def one(cls) -> "Element":
        return cls({(0, ()): 1})

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    def terms(self) -> list[Monomial]:
        out = [
            Monomial(indices, Coefficient(c, k))
            for (k, indices), c in self._terms.items()
        ]
        out.sort(key=lambda m: (m.coeff.k, m.indices))
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Element") -> "Element":
        data = dict(self._terms)
        for key, c in other._terms.items():
            data[key] = data.get(key, 0) + c
        return Element(data)

    def scaled(self, factor: int) -> "Element":
        return Element({key: c * factor for key, c in self._terms.items()})

    def __repr__(self):
        return "Element(%s)" % render_element(self)


def _as_terms(x):
    if isinstance(x, Element):
        return x._terms
    if isinstance(x, Monomial):
        coeff = x.coeff.normalized()
        return {(coeff.k, tuple(x.indices)): coeff.c}
    raise TypeError("expected Element or Monomial, got %r" % type(x))


def multiply(x, y, ring: RingPresentation) -> Element:
    """Product in the ring presentation, fully normalized.

    The index words are merged with the Koszul sign of the interleaving, then
    repeated indices are rewritten through the square relation (innermost,
    i.e. smallest, repeat first).
    """
    xt, yt = _as_terms(x), _as_terms(y)
    for (_, I) in xt:
        ring.check_indices(I)
    for (_, J) in yt:
        ring.check_indices(J)
    data: dict[tuple[int, tuple], int] = {}
    for (kx, I), cx in xt.items():
        for (ky, J), cy in yt.items():
            merged, inv = _merge_words(I, J)
            c = -cx * cy if inv % 2 else cx * cy
            normalized = _normalize_word(merged, c, kx + ky, ring)
            if normalized is None:
                continue
            word, c, k = normalized
            key = (k, word)
            c0 = data.get(key, 0) + c
            if k >= 1:
                c0 %= 2
            if c0:
                data[key] = c0
            else:
                data.pop(key, None)
    return Element(data)


def antipode(x) -> Element:
    """The inversion map: each word picks up (-1)^(word length)."""
    data = {}
    for (k, I), c in _as_terms(x).items():
        data[(k, I)] = -c if len(I) % 2 else c
    return Element(data)


def _split_sign(I, mask):
    """Sign of unshuffling I into (S, T) by the subset mask.

    Moving every S-letter left past the T-letters that precede it costs one
    transposition of odd classes each, so the sign is (-1)^#{(t, s): t in T,
    s in S, t before s}.
    """
    inv = 0
    seen_t = 0
    for pos in range(len(I)):
        if (mask >> pos) & 1:
            inv += seen_t
        else:
            seen_t += 1
    return -1 if inv % 2 else 1


class Tensor:
    """A formal sum of elementary tensors of canonical words.

    Terms are keyed by (eps power, tuple of index words); the arity is fixed
    per instance.  Slot operations (comultiply a slot, apply the antipode,
    swap adjacent slots, multiply adjacent slots) implement induced maps on
    tensor factors with Koszul signs in the first grading.
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        data: dict[tuple[int, tuple], int] = {}
        if terms:
            for (k, words), c in terms.items():
                if len(words) != arity:
                    raise ValueError("wrong arity")
                if k >= 1:
                    c %= 2
                if c:
                    key = (k, tuple(tuple(w) for w in words))
                    c0 = data.get(key, 0) + c
                    if k >= 1:
                        c0 %= 2
                    if c0:
                        data[key] = c0
                    else:
                        data.pop(key, None)
        self._terms = data

    @classmethod
    def of_words(cls, *words, coeff: int = 1, eps: int = 0) -> "Tensor":
        return cls(len(words), {(eps, tuple(tuple(w) for w in words)): coeff})

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        data = dict(self._terms)
        for key, c in other._terms.items():
            data[key] = data.get(key, 0) + c
        return Tensor(self.arity, data)

    def __repr__(self):
        return "Tensor(%s)" % render_tensor(self)

    def bidegree_of_term(self, key) -> Bidegree:
        k, words = key
        p = sum(2 * i - 1 for w in words for i in w) + k
        q = sum(i for w in words for i in w) + k
        return Bidegree(p, q)

    def comultiply_slot(self, slot: int, n: int) -> "Tensor":
        """Replace slot by its comultiplication, increasing arity by one."""
        data: dict[tuple[int, tuple], int] = {}
        for (k, words), c in self._terms.items():
            I = words[slot]
            if I and I[-1] > n:
                raise IndexOutOfRange("index %d outside 1..%d" % (I[-1], n))
            for mask in range(1 << len(I)):
                S = tuple(I[pos] for pos in range(len(I)) if (mask >> pos) & 1)
                T = tuple(I[pos] for pos in range(len(I)) if not (mask >> pos) & 1)
                sign = _split_sign(I, mask)
                new_words = words[:slot] + (S, T) + words[slot + 1 :]
                key = (k, new_words)
                c0 = data.get(key, 0) + sign * c
                if k >= 1:
                    c0 %= 2
                if c0:
                    data[key] = c0
                else:
                    data.pop(key, None)
        return Tensor(self.arity + 1, data)

    def antipode_slot(self, slot: int) -> "Tensor":
        data = {}
        for (k, words), c in self._terms.items():
            sign = -1 if len(words[slot]) % 2 else 1
            data[(k, words)] = sign * c
        return Tensor(self.arity, data)

    def swap_slots(self, a: int, b: int) -> "Tensor":
        """Swap adjacent slots a and b = a + 1 with the Koszul sign."""
        if b != a + 1:
            raise ValueError("only adjacent slots swap")
        data: dict[tuple[int, tuple], int] = {}
        for (k, words), c in self._terms.items():
            da = sum(2 * i - 1 for i in words[a])
            db = sum(2 * i - 1 for i in words[b])
            sign = -1 if (da * db) % 2 else 1
            new_words = (
                words[:a] + (words[b], words[a]) + words[b + 1 :]
            )
            key = (k, new_words)
            c0 = data.get(key, 0) + sign * c
            if k >= 1:
                c0 %= 2
            if c0:
                data[key] = c0
            else:
                data.pop(key, None)
        return Tensor(self.arity, data)

    def multiply_slots(self, slot: int, ring: RingPresentation) -> "Tensor":
        """Multiply slots slot and slot+1 together, decreasing arity by one."""
        data: dict[tuple[int, tuple], int] = {}
        for (k, words), c in self._terms.items():
            I, J = words[slot], words[slot + 1]
            merged, inv = _merge_words(I, J)
            c1 = -c if inv % 2 else c
            normalized = _normalize_word(merged, c1, k, ring)
            if normalized is None:
                continue
            word, c1, k1 = normalized
            new_words = words[:slot] + (word,) + words[slot + 2 :]
            key = (k1, new_words)
            c0 = data.get(key, 0) + c1
            if k1 >= 1:
                c0 %= 2
            if c0:
                data[key] = c0
            else:
                data.pop(key, None)
        return Tensor(self.arity - 1, data)


def comultiply(x, n: int) -> Tensor:
    """Comultiplication on GL(n) classes: rho_i is primitive.

    Extends rho_i -> rho_i x 1 + 1 x rho_i multiplicatively: each word splits
    over all subset/complement pairs with the sign of the unshuffle.
    """
    ring = RingPresentation.gl(n)
    data: dict[tuple[int, tuple], int] = {}
    for (k, I), c in _as_terms(x).items():
        ring.check_indices(I)
        for mask in range(1 << len(I)):
            S = tuple(I[pos] for pos in range(len(I)) if (mask >> pos) & 1)
            T = tuple(I[pos] for pos in range(len(I)) if not (mask >> pos) & 1)
            sign = _split_sign(I, mask)
            key = (k, (S, T))
            c0 = data.get(key, 0) + sign * c
            if k >= 1:
                c0 %= 2
            if c0:
                data[key] = c0
            else:
                data.pop(key, None)
    return Tensor(2, data)


ADJOINT_STEPS = (
    "comultiply",
    "comultiply first slot",
    "swap slots 2,3",
    "antipode middle slot",
    "multiply first two slots",
)


@dataclass
class CoactionFormula:
    """A coaction written out on ring generators.

    images maps a generator index to a rank-2 Tensor whose left slot lives in
    the coacting group's cohomology and whose right slot lives in the module
    ring.  name records how the formula was produced.
    """

    group: RingPresentation
    module: RingPresentation
    images: dict
    name: str = ""
    assumes: tuple = ()

    def is_trivial(self) -> bool:
        """True when every generator maps to 1 (x) generator."""
        return all(
            img == Tensor.of_words((), (i,)) for i, img in self.images.items()
        )

    def preserves_bidegrees(self) -> bool:
        for i, img in self.images.items():
            src = Monomial((i,), Coefficient(1, 0)).bidegree
            for key in img._terms:
                if img.bidegree_of_term(key) != src:
                    return False
        return True

    def to_json_dict(self) -> dict:
        images = {}
        for i in sorted(self.images):
            images[str(i)] = [
                {"eps": k, "left": list(words[0]), "right": list(words[1]), "coeff": c}
                for (k, words), c in self.images[i].terms()
            ]
        return {
            "name": self.name,
            "group": {"kind": self.group.kind, "n": self.group.n, "m": self.group.m},
            "module": {"kind": self.module.kind, "n": self.module.n, "m": self.module.m},
            "assumes": list(self.assumes),
            "images": images,
        }


def derive_adjoint_coaction(n: int, with_trace: bool = False):
    """Derive the conjugation coaction on GL(n) generators symbolically.

    The conjugation action (h, g) -> h g h^{-1} factors through the diagonal,
    the inversion on the middle factor, the swap of the last two factors, and
    a double multiplication; pulling back through those maps in order gives a
    five-step symbolic pipeline on each generator.  The derived formula always
    normalizes to the trivial coaction rho_i -> 1 (x) rho_i: the conjugation
    terms cancel.

    With with_trace=True also returns, per generator, the intermediate Tensor
    after each pipeline step (the second step is a three-term rank-3 tensor
    before the cancellation happens).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ring = RingPresentation.gl(n)
    images = {}
    traces = {}
    for i in range(1, n + 1):
        x = Element.generator(i)
        t1 = comultiply(x, n)
        t2 = t1.comultiply_slot(0, n)
        t3 = t2.swap_slots(1, 2)
        t4 = t3.antipode_slot(1)
        t5 = t4.multiply_slots(0, ring)
        images[i] = t5
        if with_trace:
            traces[i] = [t1, t2, t3, t4, t5]
    formula = CoactionFormula(ring, ring, images, name="adjoint")
    if with_trace:
        return formula, traces
    return formula


def stiefel_coaction(m: int, n: int) -> CoactionFormula:
    """Coaction of GL(m) on the Stiefel variety V(m, n).

    Generators alpha_i for i in n-m+1..n; the image is rho_i (x) 1 +
    1 (x) alpha_i when i <= m and 1 (x) alpha_i otherwise.
    """
    if not 0 < m <= n:
        raise ValueError("need 0 < m <= n")
    module = RingPresentation.stiefel(m, n)
    group = RingPresentation.gl(m)
    images = {}
    for i in module.generators:
        img = Tensor.of_words((), (i,))
        if i <= m:
            img = img + Tensor.of_words((i,), ())
        images[i] = img
    return CoactionFormula(group, module, images, name="stiefel")


@dataclass
class DualExterior:
    """Structure constants of the dual basis under the pairing with comultiply.

    table maps a pair of index words (I, J) to {K: c} meaning
    dual(I) * dual(J) = sum c * dual(K); the coefficient is read off as the
    (rho_I, rho_J) component of the comultiplication of rho_K.
    """

    n: int
    max_word: int
    table: dict = field(repr=False)

    def product(self, I, J) -> dict:
        return dict(self.table.get((tuple(I), tuple(J)), {}))

    def square(self, i: int) -> dict:
        return self.product((i,), (i,))

    def to_json_dict(self) -> dict:
        entries = []
        for (I, J) in sorted(self.table):
            prods = self.table[(I, J)]
            entries.append(
                {
                    "left": list(I),
                    "right": list(J),
                    "products": [
                        {"indices": list(K), "coeff": prods[K]} for K in sorted(prods)
                    ],
                }
            )
        return {"n": self.n, "max_word": self.max_word, "entries": entries}


def dual_algebra(n: int, max_word: int) -> DualExterior:
    """Compute dual-basis structure constants by exhaustive pairing.

    For every basis word K of length <= max_word, expand its comultiplication
    and record each (S, T) component as a contribution to dual(S) * dual(T).
    The dual of a primitively generated exterior-type basis comes out exterior
    again: in particular the square of every dual generator is zero because no
    comultiplication contains a rho_i (x) rho_i term (strictly increasing
    words hold each index at most once).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    table: dict[tuple, dict] = {}
    for size in range(0, min(n, max_word) + 1):
        for K in itertools.combinations(range(1, n + 1), size):
            expansion = comultiply(Element({(0, K): 1}), n)
            for (k, (S, T)), c in expansion._terms.items():
                assert k == 0
                table.setdefault((S, T), {})[K] = c
    return DualExterior(n=n, max_word=max_word, table=table)


def render_coefficient(coeff: Coefficient) -> str:
    c, k = coeff.c, coeff.k
    parts = []
    if k == 1:
        parts.append("ε")
    elif k >= 2:
        parts.append("ε^%d" % k)
    if abs(c) != 1 or not parts:
        parts.insert(0, str(abs(c)))
    return "·".join(parts)


def render_element(x: Element, symbol: str = "ρ") -> str:
    """Text form like 'ρ[1,2] + ε·ρ[3]'."""
    if x.is_zero():
        return "0"
    parts = []
    for mono in x.terms():
        c, k = mono.coeff
        factors = []
        if k or abs(c) != 1 or not mono.indices:
            factors.append(render_coefficient(mono.coeff))
        if mono.indices:
            factors.append("%s[%s]" % (symbol, ",".join(map(str, mono.indices))))
        text = "·".join(factors)
        if not parts:
            parts.append(text if c > 0 else "-" + text)
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


def render_tensor(t: Tensor, symbols=None) -> str:
    """Text form like 'ρ[1]⊗1 + 1⊗ρ[1]'; one symbol per slot."""
    if t.is_zero():
        return "0"
    if symbols is None:
        symbols = ("ρ",) * t.arity
    parts = []
    for (k, words), c in t.terms():
        factors = []
        if k or abs(c) != 1:
            factors.append(render_coefficient(Coefficient(c, k)))
        slot_texts = [
            "%s[%s]" % (sym, ",".join(map(str, w))) if w else "1"
            for sym, w in zip(symbols, words)
        ]
        factors.append("⊗".join(slot_texts))
        text = "·".join(factors)
        if not parts:
            parts.append(text if c > 0 else "-" + text)
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)
