"""Tensor square of the operation algebra with the Koszul-signed product

    (a (x) b)(c (x) d) = (-1)^(deg b * deg c) ac (x) bd

where ``deg`` is the first (internal) component of the bidegree.  Only its
parity matters, so a parity-only :class:`~bpengine.terms.Grading` is enough.
"""
from __future__ import annotations

from typing import Dict, Optional, Tuple

from .terms import Element, Grading, Word, _Fuel, _default_fuel, _nf, word_str, monomial_key

__all__ = ["TensorElement", "tensor_multiply", "normalize_tensor", "tensor_power"]

Pair = Tuple[Word, Word]


class TensorElement:
    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Optional[Dict[Pair, int]] = None):
        self.p = p
        self.terms: Dict[Pair, int] = {}
        if terms:
            for (l, r), c in terms.items():
                c %= p
                if c:
                    self.terms[(tuple(l), tuple(r))] = c

    @classmethod
    def pure(cls, p: int, left: Word, right: Word, coeff: int = 1) -> "TensorElement":
        return cls(p, {(tuple(left), tuple(right)): coeff})

    @classmethod
    def one(cls, p: int) -> "TensorElement":
        return cls(p, {((), ()): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.p, out)

    def __neg__(self):
        return TensorElement(self.p, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c: int):
        return TensorElement(self.p, {k: c * v for k, v in self.terms.items()})

    def sorted_terms(self):
        p = self.p
        return sorted(self.terms.items(),
                      key=lambda t: (monomial_key(t[0][0], p), monomial_key(t[0][1], p)))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in self.sorted_terms():
            s = f"{word_str(l)} | {word_str(r)}"
            parts.append(s if c == 1 else f"{c} ({s})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement(p={self.p}, {self})"


def _side_nf(w: Word, p: int, fuel: _Fuel) -> Dict[Word, int]:
    return _nf(w, p, "leftmost", fuel)


def normalize_tensor(t: TensorElement, p: Optional[int] = None, fuel: Optional[int] = None) -> TensorElement:
    """Normalize both sides of every term and collect coefficients."""
    p = t.p if p is None else p
    budget = _Fuel(_default_fuel() if fuel is None else fuel)
    out: Dict[Pair, int] = {}
    for (l, r), c in t.terms.items():
        ln = _side_nf(l, p, budget)
        if not ln:
            continue
        rn = _side_nf(r, p, budget)
        for u, cu in ln.items():
            for v, cv in rn.items():
                out[(u, v)] = (out.get((u, v), 0) + c * cu * cv) % p
    return TensorElement(p, out)


def tensor_multiply(t1: TensorElement, t2: TensorElement, g: Grading, p: Optional[int] = None,
                    fuel: Optional[int] = None) -> TensorElement:
    p = t1.p if p is None else p
    budget = _Fuel(_default_fuel() if fuel is None else fuel)
    out: Dict[Pair, int] = {}
    par_right = {r: g.first_parity(r) for (_, r) in t1.terms}
    par_left = {l: g.first_parity(l) for (l, _) in t2.terms}
    for (a, b), c1 in t1.terms.items():
        for (c, d), c2 in t2.terms.items():
            coeff = c1 * c2
            if par_right[b] and par_left[c]:
                coeff = -coeff
            left = _side_nf(a + c, p, budget)
            if not left:
                continue
            right = _side_nf(b + d, p, budget)
            for u, cu in left.items():
                for v, cv in right.items():
                    out[(u, v)] = (out.get((u, v), 0) + coeff * cu * cv) % p
    return TensorElement(p, out)


def tensor_power(t: TensorElement, n: int, g: Grading) -> TensorElement:
    out = TensorElement.one(t.p)
    for _ in range(n):
        out = tensor_multiply(out, t, g)
    return out


def tensor_from_elements(left: Element, right: Element) -> TensorElement:
    out: Dict[Pair, int] = {}
    for u, cu in left.terms.items():
        for v, cv in right.terms.items():
            out[(u, v)] = cu * cv
    return TensorElement(left.p, out)
