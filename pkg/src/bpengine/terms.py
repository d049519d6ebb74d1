"""Words in the Bockstein b and the powers P^k, and their F_p-linear combinations.

A letter is an ``int``: ``BETA == -1`` and ``k >= 0`` stands for P^k, so the
natural integer order gives b < P^0 < P^1 < ...  A monomial is a tuple of
letters; the empty tuple is the unit.  P^0 is an ordinary letter and is never
identified with the unit.

Words are reduced to admissible normal form with the relations

    b b = 0
    P^a P^b = sum_t A(b,a,t) P^(a+b-t) P^t                              (a < pb)
    P^a b P^b = sum_t B(b,a,t) b P^(a+b-t) P^t
                + sum_t A(b,a-1,t) P^(a+b-t) b P^t                      (a <= pb)
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .modular import adem_coeff, adem_coeff_beta, check_prime

__all__ = [
    "BETA",
    "Word",
    "Element",
    "Grading",
    "FuelExhausted",
    "InvalidGrading",
    "DEFAULT_FUEL",
    "letter_name",
    "word_str",
    "bidegree_of",
    "is_admissible",
    "find_redex",
    "rewrite_step",
    "normalize",
    "normalize_word",
    "multiply",
    "element_add",
    "element_scale",
    "admissible_basis",
    "counit",
    "monomial_key",
    "clear_cache",
    "set_default_fuel",
    "concat",
    "relation_rhs",
    "all_words",
]

BETA = -1
Word = Tuple[int, ...]

DEFAULT_FUEL = 10**6


_fuel_override: Optional[int] = None


def set_default_fuel(n: Optional[int]) -> None:
    """Override the per-call budget; ``None`` restores $BP_ENGINE_FUEL or the built-in default."""
    global _fuel_override
    _fuel_override = n


def _default_fuel() -> int:
    if _fuel_override is not None:
        return _fuel_override
    env = os.environ.get("BP_ENGINE_FUEL")
    return int(env) if env else DEFAULT_FUEL


class FuelExhausted(RuntimeError):
    """Raised when a normalization exceeds its budget of rewrite steps."""


class InvalidGrading(ValueError):
    pass


def letter_name(x: int) -> str:
    return "b" if x == BETA else f"P{x}"


def word_str(w: Word) -> str:
    return " ".join(letter_name(x) for x in w) if w else "1"


# ---------------------------------------------------------------------------
# gradings


@dataclass(frozen=True)
class Grading:
    """Bidegree assignment on letters: |b| = beta, |P^k| = power_base + k * power_step.

    A ``symbolic`` grading only fixes first-degree parities (used when the
    actual bidegrees are unknown); ``bidegree_of`` refuses to evaluate it.
    """

    name: str
    beta: Tuple[int, int]
    power_base: Tuple[int, int]
    power_step: Tuple[int, int]
    symbolic: bool = False

    @classmethod
    def standard(cls, p: int) -> "Grading":
        """|P^k| = (2k(p-1), 1), |b| = (1, 0)."""
        return cls("standard", (1, 0), (0, 1), (2 * (p - 1), 0))

    @classmethod
    def subalgebra_c(cls, p: int) -> "Grading":
        """|P^k| = (2k(p-1), 1), |b P^k| = (2k(p-1)+1, 2); forces |b| = (1, 1)."""
        return cls("subalgebra-c", (1, 1), (0, 1), (2 * (p - 1), 0))

    @classmethod
    def parities(cls, beta_parity: int, p0_parity: int) -> "Grading":
        """First-degree parities only: b has ``beta_parity``, every P^k has ``p0_parity``."""
        return cls(
            f"parity({beta_parity % 2},{p0_parity % 2})",
            (beta_parity % 2, 0),
            (p0_parity % 2, 0),
            (0, 0),
            symbolic=True,
        )

    def letter(self, x: int) -> Tuple[int, int]:
        if x == BETA:
            return self.beta
        return (
            self.power_base[0] + x * self.power_step[0],
            self.power_base[1] + x * self.power_step[1],
        )

    def first_parity(self, w: Word) -> int:
        n = 0
        for x in w:
            n += self.letter(x)[0]
        return n % 2


def bidegree_of(m: Word, g: Grading) -> Tuple[int, int]:
    if g.symbolic:
        raise InvalidGrading(f"grading {g.name} only carries parities")
    n = s = 0
    for x in m:
        dn, ds = g.letter(x)
        n += dn
        s += ds
    return (n, s)


def monomial_key(m: Word, p: int):
    """Display order: internal degree, then length, then letters (b < P0 < P1 ...)."""
    n = sum(1 if x == BETA else 2 * x * (p - 1) for x in m)
    return (n, len(m), m)


# ---------------------------------------------------------------------------
# elements


class Element:
    """A finite F_p-linear combination of words.

    ``terms`` maps words to nonzero residues.  ``+``, ``-`` and scalar ``*`` are
    formal; ``e1 * e2`` concatenates and normalizes.  Use :func:`concat` for the
    free (unreduced) product.
    """

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Optional[Dict[Word, int]] = None):
        self.p = p
        self.terms: Dict[Word, int] = {}
        if terms:
            for w, c in terms.items():
                c %= p
                if c:
                    self.terms[tuple(w)] = c

    @classmethod
    def word(cls, p: int, *letters: int, coeff: int = 1) -> "Element":
        return cls(p, {tuple(letters): coeff})

    @classmethod
    def one(cls, p: int) -> "Element":
        return cls(p, {(): 1})

    @classmethod
    def zero(cls, p: int) -> "Element":
        return cls(p)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Word, int]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Element):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other: "Element") -> "Element":
        return element_add(self, other)

    def __neg__(self) -> "Element":
        return element_scale(-1, self)

    def __sub__(self, other: "Element") -> "Element":
        return element_add(self, element_scale(-1, other))

    def __rmul__(self, c: int) -> "Element":
        return element_scale(c, self)

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return element_scale(other, self)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0], self.p))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append(word_str(w) if c == 1 else f"{c} {word_str(w)}" if w else str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"Element(p={self.p}, {self})"


def element_add(e1: Element, e2: Element, p: Optional[int] = None) -> Element:
    p = e1.p if p is None else p
    if e2.p != p:
        raise ValueError("elements over different primes")
    out = dict(e1.terms)
    for w, c in e2.terms.items():
        v = (out.get(w, 0) + c) % p
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return Element(p, out)


def element_scale(c: int, e: Element) -> Element:
    return Element(e.p, {w: c * v for w, v in e.terms.items()})


def concat(e1: Element, e2: Element) -> Element:
    """Free-algebra product (no reduction)."""
    out: Dict[Word, int] = {}
    for w1, c1 in e1.terms.items():
        for w2, c2 in e2.terms.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return Element(e1.p, out)


# ---------------------------------------------------------------------------
# admissibility and rewriting


def is_admissible(m: Word, p: int) -> bool:
    n = len(m)
    for i in range(n - 1):
        x, y = m[i], m[i + 1]
        if x == BETA:
            if y == BETA:
                return False
            continue
        if y != BETA:
            if x < p * y:
                return False
        elif i + 2 < n and m[i + 2] != BETA and x <= p * m[i + 2]:
            return False
    return True


def _redex_at(m: Word, i: int, p: int) -> int:
    """Length of the reducible pattern starting at ``i`` (0 if none)."""
    x = m[i]
    if i + 1 >= len(m):
        return 0
    y = m[i + 1]
    if x == BETA:
        return 2 if y == BETA else 0
    if y != BETA:
        return 2 if x < p * y else 0
    if i + 2 < len(m):
        z = m[i + 2]
        if z != BETA and x <= p * z:
            return 3
    return 0


def find_redex(m: Word, p: int, strategy: str = "leftmost") -> Optional[Tuple[int, int]]:
    """(start, length) of the first reducible pattern, scanning from the chosen end."""
    idx = range(len(m)) if strategy == "leftmost" else range(len(m) - 1, -1, -1)
    for i in idx:
        k = _redex_at(m, i, p)
        if k:
            return i, k
    return None


def relation_rhs(pattern: Word, p: int) -> Dict[Word, int]:
    """Right-hand side of the relation whose left-hand side is ``pattern``."""
    if len(pattern) == 2 and pattern[0] == BETA:
        return {}
    out: Dict[Word, int] = {}
    if len(pattern) == 2:
        a, b = pattern
        for t in range(a // p + 1):
            c = adem_coeff(p, b, a, t)
            if c:
                out[(a + b - t, t)] = c
        return out
    a, _, b = pattern
    for t in range(a // p + 1):
        c = adem_coeff_beta(p, b, a, t)
        if c:
            out[(BETA, a + b - t, t)] = c
    for t in range((a - 1) // p + 1):
        c = adem_coeff(p, b, a - 1, t)
        if c:
            w = (a + b - t, BETA, t)
            out[w] = (out.get(w, 0) + c) % p
    return out


def rewrite_step(m: Word, p: int, strategy: str = "leftmost") -> Optional[Element]:
    """Apply one relation at the first reducible pattern; ``None`` if ``m`` is admissible."""
    hit = find_redex(m, p, strategy)
    if hit is None:
        return None
    i, k = hit
    pre, post = m[:i], m[i + k:]
    return Element(p, {pre + w + post: c for w, c in relation_rhs(m[i:i + k], p).items()})


_CACHE: Dict[Tuple[int, str, Word], Dict[Word, int]] = {}


def clear_cache() -> None:
    _CACHE.clear()


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted("rewrite-step budget exhausted")


def _nf(m: Word, p: int, strategy: str, fuel: _Fuel) -> Dict[Word, int]:
    key = (p, strategy, m)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    # explicit stack: (word, pending rewrite terms, accumulated result)
    out: Dict[Word, int]
    stack = [(m, None, None)]
    result: Optional[Dict[Word, int]] = None
    while stack:
        w, todo, acc = stack.pop()
        if todo is None:
            cached = _CACHE.get((p, strategy, w))
            if cached is not None:
                result = cached
                continue
            hit2 = find_redex(w, p, strategy)
            if hit2 is None:
                result = {w: 1}
                _CACHE[(p, strategy, w)] = result
                continue
            fuel.spend()
            i, k = hit2
            pre, post = w[:i], w[i + k:]
            todo = [(pre + r + post, c) for r, c in relation_rhs(w[i:i + k], p).items()]
            acc = {}
            result = None
        elif result is not None:
            c = todo.pop()[1]
            for u, v in result.items():
                acc[u] = (acc.get(u, 0) + c * v) % p
            result = None
        if todo:
            stack.append((w, todo, acc))
            stack.append((todo[-1][0], None, None))
        else:
            out = {u: v for u, v in acc.items() if v}
            _CACHE[(p, strategy, w)] = out
            result = out
    assert result is not None
    return result


def normalize_word(m: Word, p: int, fuel: Optional[int] = None, strategy: str = "leftmost") -> Element:
    return Element(p, _nf(tuple(m), p, strategy, _Fuel(_default_fuel() if fuel is None else fuel)))


def normalize(e: Element, p: Optional[int] = None, fuel: Optional[int] = None,
              strategy: str = "leftmost") -> Element:
    """Reduce ``e`` to its admissible representative.

    ``fuel`` bounds the number of rewrite steps actually performed (cached
    normal forms are free).  Raises :class:`FuelExhausted` when exceeded.
    """
    p = e.p if p is None else p
    budget = _Fuel(_default_fuel() if fuel is None else fuel)
    if budget.left <= 0:
        raise ValueError("fuel must be positive")
    out: Dict[Word, int] = {}
    for w, c in e.terms.items():
        for u, v in _nf(w, p, strategy, budget).items():
            out[u] = (out.get(u, 0) + c * v) % p
    return Element(p, out)


def multiply(e1: Element, e2: Element, p: Optional[int] = None, fuel: Optional[int] = None) -> Element:
    return normalize(concat(e1, e2), p, fuel)


# ---------------------------------------------------------------------------
# basis and counit


def admissible_basis(p: int, n: int, s: int, g: Optional[Grading] = None):
    """Admissible words with ``s`` power letters and internal degree ``n``.

    Only defined for the standard grading, where the second degree counts the
    P letters.
    """
    p = check_prime(p)
    if g is not None and g != Grading.standard(p):
        raise InvalidGrading("basis enumeration needs the standard grading")
    if n < 0 or s < 0:
        return []
    q = 2 * (p - 1)
    found = []

    # build from the right: choose (t_s, eps_s), then (t_{s-1}, eps_{s-1}), ..., eps_0
    def descend(j: int, tail: Word, deg: int, t_next: int):
        if j == 0:
            for e0 in (0, 1):
                if deg + e0 == n:
                    found.append(((BETA,) if e0 else ()) + tail)
            return
        for eps in (0, 1):
            # eps_j sits right after P^(t_j); constraint t_j >= p t_(j+1) + eps_j when j < s
            lo = p * t_next + eps if j < s else 0
            t = lo
            while deg + eps + q * t <= n:
                w = (t,) + ((BETA,) if eps else ()) + tail
                descend(j - 1, w, deg + eps + q * t, t)
                t += 1

    descend(s, (), 0, 0)
    return sorted(set(found), key=lambda w: monomial_key(w, p))


def counit(m: Word) -> int:
    """1 when every letter is P^0 (including the empty word), else 0."""
    return 1 if all(x == 0 for x in m) else 0


def all_words(letters: Iterable[int], max_len: int) -> Iterator[Word]:
    letters = list(letters)
    for n in range(max_len + 1):
        yield from product(letters, repeat=n)
