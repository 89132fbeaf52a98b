"""Deciding graded polynomial identities by exact evaluation.

A polynomial is a graded identity of the pair precisely when its
evaluation at the generic matrices is the zero matrix; otherwise a
nonzero entry is produced as a witness.
"""

from gpi import (Context, FreePoly, GeneratorKind, bracket, cyclic_group,
                 default_grading, expand, identity_witness, is_graded_identity,
                 make_generator)

grading = default_grading(cyclic_group(3))

# [x1, x2] with both variables of trivial degree: an identity
ctx0 = Context(grading, {1: 0, 2: 0})
comm = bracket(FreePoly.var(ctx0, 1), FreePoly.var(ctx0, 2))
print("[x1,x2], degrees (0,0):  identity?", is_graded_identity(comm))

# the same commutator with degrees (1,2) is not an identity
ctx12 = Context(grading, {1: 1, 2: 2})
comm12 = bracket(FreePoly.var(ctx12, 1), FreePoly.var(ctx12, 2))
w = identity_witness(comm12)
print("[x1,x2], degrees (1,2):  identity?", w is None)
print("  witness entry ({},{}): {}".format(w.row + 1, w.col + 1, w.value))

# no single monomial is ever an identity
mono = FreePoly.word(ctx12, (1, 2, 2))
print("x1*x2*x2:                identity?", is_graded_identity(mono))

# the two generator families of the weak T-ideal
print()
g1 = make_generator(GeneratorKind.TYPE1, ctx0, ((1,), (2,)))
print("type-1 generator expands to:", expand(g1))
ctx = Context(grading, {1: 1, 2: 2, 3: 1})
g2 = make_generator(GeneratorKind.TYPE2, ctx, ((1,), (2,), (3,)))
print("type-2 generator expands to:", expand(g2))
print("both are identities:",
      is_graded_identity(expand(g1)) and is_graded_identity(expand(g2)))
