"""The graded free associative algebra over the integers.

Words are tuples of variable ids; polynomials are sparse integer
combinations of words.  A Context fixes the grading tuple and the degree
of every declared variable.  Lie words and weak (degree-preserving,
Lie-valued) substitutions live here as well.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .groups import GradingTuple

Word = tuple[int, ...]


class DeclarationError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


@dataclass(frozen=True)
class Context:
    """Variable declarations: id -> group element index, under a grading."""

    grading: GradingTuple
    degrees: dict[int, int]

    def __post_init__(self):
        n = self.grading.group.order
        for k, d in self.degrees.items():
            if k < 1:
                raise DeclarationError(f"variable id {k} must be positive")
            if not (0 <= d < n):
                raise DeclarationError(f"degree {d} of x{k} out of group range")

    def degree(self, var: int) -> int:
        try:
            return self.degrees[var]
        except KeyError:
            raise DeclarationError(f"variable x{var} is not declared") from None

    def extend(self, more: dict[int, int]) -> "Context":
        degrees = dict(self.degrees)
        for k, d in more.items():
            if k in degrees and degrees[k] != d:
                raise DeclarationError(f"x{k} redeclared with a different degree")
            degrees[k] = d
        return Context(self.grading, degrees)

    def fresh_id(self) -> int:
        return max(self.degrees, default=0) + 1

    def declare(self, k: int, d: int) -> int:
        """Monotone in-place declaration; conflicts with existing ids raise."""
        if k in self.degrees:
            if self.degrees[k] != d:
                raise DeclarationError(f"x{k} redeclared with a different degree")
        else:
            if k < 1:
                raise DeclarationError(f"variable id {k} must be positive")
            self.degrees[k] = d
        return k

    def compatible(self, other: "Context") -> bool:
        return self.grading == other.grading and self.degrees == other.degrees


def word_degree(ctx: Context, w: Word) -> int:
    """Product of the factor degrees in word order; empty word -> identity."""
    return ctx.grading.group.product(ctx.degree(v) for v in w)


def word_key(w: Word):
    """Length-lexicographic canonical order on words."""
    return (len(w), w)


def multidegree(w: Word):
    """Per-variable occurrence counts, as a hashable key."""
    return tuple(sorted(Counter(w).items()))


def is_multilinear_word(w: Word) -> bool:
    return len(set(w)) == len(w)


class FreePoly:
    """Sparse integer polynomial in noncommuting graded variables."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: Context, terms: dict[Word, int] | None = None):
        self.ctx = ctx
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}
        for w in self.terms:
            for v in w:
                ctx.degree(v)  # raises on undeclared ids

    @classmethod
    def zero(cls, ctx: Context) -> "FreePoly":
        return cls(ctx)

    @classmethod
    def word(cls, ctx: Context, w, coeff: int = 1) -> "FreePoly":
        return cls(ctx, {tuple(w): coeff})

    @classmethod
    def var(cls, ctx: Context, k: int) -> "FreePoly":
        return cls(ctx, {(k,): 1})

    @classmethod
    def one(cls, ctx: Context) -> "FreePoly":
        return cls(ctx, {(): 1})

    def _check(self, other: "FreePoly"):
        if self.ctx is not other.ctx and not self.ctx.compatible(other.ctx):
            raise DeclarationError("operands declared over different contexts")

    def __add__(self, other: "FreePoly") -> "FreePoly":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FreePoly(self.ctx, terms)

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        return self + (-other)

    def __neg__(self) -> "FreePoly":
        return FreePoly(self.ctx, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        terms: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return FreePoly(self.ctx, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "FreePoly":
        return FreePoly(self.ctx, {w: c * v for w, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FreePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Word]:
        return sorted(self.terms, key=word_key)

    def variables(self) -> set[int]:
        return {v for w in self.terms for v in w}

    def is_multilinear(self) -> bool:
        return all(is_multilinear_word(w) for w in self.terms)

    def is_multihomogeneous(self) -> bool:
        return len({multidegree(w) for w in self.terms}) <= 1

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            c = self.terms[w]
            body = "*".join(f"x{v}" for v in w) if w else "1"
            parts.append(f"{'+' if c >= 0 else '-'} {abs(c) if abs(c) != 1 or not w else ''}{body}".strip())
        return " ".join(parts).lstrip("+ ")


def bracket(p: FreePoly, q: FreePoly) -> FreePoly:
    """Lie bracket [p, q] = pq - qp."""
    return p * q - q * p


def multihomogeneous_components(p: FreePoly) -> list[FreePoly]:
    """Split into summands of pairwise different multidegree; sum is p."""
    buckets: dict[tuple, dict[Word, int]] = {}
    for w, c in p.terms.items():
        buckets.setdefault(multidegree(w), {})[w] = c
    return [FreePoly(p.ctx, terms) for _, terms in sorted(buckets.items())]


# --- Lie words and weak substitutions ---------------------------------------
#
# A LieWord is either a variable id (int) or a pair (left, right) meaning a
# bracket.  Weak substitutions map variables to LieWords of equal degree.

LieWord = object  # int | tuple[LieWord, LieWord]


def lie_degree(ctx: Context, lw) -> int:
    if isinstance(lw, int):
        return ctx.degree(lw)
    l, r = lw
    return ctx.grading.group.mul(lie_degree(ctx, l), lie_degree(ctx, r))


def lie_expand(ctx: Context, lw) -> FreePoly:
    if isinstance(lw, int):
        return FreePoly.var(ctx, lw)
    l, r = lw
    return bracket(lie_expand(ctx, l), lie_expand(ctx, r))


def lie_variables(lw) -> set[int]:
    if isinstance(lw, int):
        return {lw}
    l, r = lw
    return lie_variables(l) | lie_variables(r)


@dataclass(frozen=True)
class WeakSubstitution:
    """A graded endomorphism sending selected variables into the Lie algebra.

    Every image must have the same degree as the variable it replaces;
    unmapped variables are fixed.
    """

    ctx: Context
    images: dict[int, object]

    def __post_init__(self):
        for k, lw in self.images.items():
            want = self.ctx.degree(k)
            got = lie_degree(self.ctx, lw)
            if want != got:
                raise SubstitutionError(
                    f"image of x{k} has degree {got}, expected {want}")

    def image_poly(self, var: int) -> FreePoly:
        if var in self.images:
            return lie_expand(self.ctx, self.images[var])
        return FreePoly.var(self.ctx, var)

    def __call__(self, p: FreePoly) -> FreePoly:
        if p.ctx is not self.ctx and not p.ctx.compatible(self.ctx):
            raise SubstitutionError("substitution context does not match")
        out = FreePoly.zero(self.ctx)
        cache: dict[int, FreePoly] = {}
        for w, c in p.terms.items():
            acc = FreePoly.one(self.ctx).scale(c)
            for v in w:
                if v not in cache:
                    cache[v] = self.image_poly(v)
                acc = acc * cache[v]
            out = out + acc
        return out


def apply_substitution(p: FreePoly, s: WeakSubstitution) -> FreePoly:
    return s(p)
