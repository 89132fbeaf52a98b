"""Deciding graded identities of the pair, and the generator family.

Membership in the identity ideal of the pair is decided by exact
evaluation at generic matrices: a polynomial is an identity iff its
evaluation is the zero matrix.  The generator family has two kinds:

  type 1:  [h1, h2]              both parts of trivial degree
  type 2:  h1*h2*h3 - h3*h2*h1   outer parts of degree inverse to the middle

with the concatenation of the parts multilinear.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .freealg import (Context, FreePoly, Word, is_multilinear_word,
                      multihomogeneous_components, word_degree)
from .genmat import ScalarPoly, eval_poly


class GeneratorError(ValueError):
    pass


class ContractError(ValueError):
    pass


class GeneratorKind(Enum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class Witness:
    """A nonzero entry of the evaluation, disproving identity membership."""
    row: int
    col: int
    value: ScalarPoly


@dataclass(frozen=True)
class GeneratorInstance:
    kind: GeneratorKind
    ctx: Context
    parts: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))
        validate_generator(self.kind, self.ctx, self.parts)

    def part_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def is_reduced(self, max_part_len: int = 3) -> bool:
        return all(len(p) <= max_part_len for p in self.parts)


def validate_generator(kind: GeneratorKind, ctx: Context, parts):
    group = ctx.grading.group
    one = group.identity_index
    if any(len(p) == 0 for p in parts):
        raise GeneratorError("generator parts must be nonempty monomials")
    concat = tuple(v for p in parts for v in p)
    if not is_multilinear_word(concat):
        raise GeneratorError("the concatenation of the parts must be multilinear")
    degs = [word_degree(ctx, p) for p in parts]
    if kind is GeneratorKind.TYPE1:
        if len(parts) != 2:
            raise GeneratorError("type-1 generators take two parts")
        if degs[0] != one or degs[1] != one:
            raise GeneratorError("type-1 parts must both have trivial degree")
    else:
        if len(parts) != 3:
            raise GeneratorError("type-2 generators take three parts")
        if degs[0] != degs[2] or degs[0] != group.inv(degs[1]):
            raise GeneratorError(
                "type-2 outer parts must have degree inverse to the middle")


def make_generator(kind: GeneratorKind, ctx: Context, parts) -> GeneratorInstance:
    return GeneratorInstance(kind, ctx, tuple(tuple(p) for p in parts))


def expand(g: GeneratorInstance) -> FreePoly:
    """[h1,h2] for type 1; h1h2h3 - h3h2h1 for type 2."""
    if g.kind is GeneratorKind.TYPE1:
        h1, h2 = g.parts
        return FreePoly(g.ctx, {h1 + h2: 1, h2 + h1: -1})
    h1, h2, h3 = g.parts
    return FreePoly(g.ctx, {h1 + h2 + h3: 1, h3 + h2 + h1: -1})


def is_graded_identity(p: FreePoly) -> bool:
    return eval_poly(p).is_zero()


def identity_witness(p: FreePoly) -> Witness | None:
    """None when p is an identity, otherwise a nonzero evaluation entry."""
    mat = eval_poly(p)
    for i in range(mat.n):
        for j in range(mat.n):
            if not mat.entries[i][j].is_zero():
                return Witness(i, j, mat.entries[i][j])
    return None


def components_are_identities(p: FreePoly) -> bool:
    """Every multihomogeneous component of an identity is one as well."""
    if not is_graded_identity(p):
        raise ContractError("input must be a graded identity")
    return all(is_graded_identity(c) for c in multihomogeneous_components(p))
