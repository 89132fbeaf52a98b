"""Evaluating words at generic matrices, two ways.

Builds the order-3 cyclic grading of the 3x3 matrix algebra, shows the
generic matrices themselves, and checks the closed-form evaluation
against plain matrix multiplication.
"""

from gpi import Context, cyclic_group, default_grading, generic
from gpi.genmat import eval_word_closed, eval_word_direct

grading = default_grading(cyclic_group(3))

print("grading tuple:", grading.tuple_)
print()
print("A_{1,1} (degree 1, one variable per allowed position):")
print(generic(grading, 1, 1))
print()

# x1 of degree 1, x2 of degree 2, x3 of degree 1
ctx = Context(grading, {1: 1, 2: 2, 3: 1})
word = (1, 2, 3)

print("evaluation of x1*x2*x3 by matrix products:")
direct = eval_word_direct(ctx, word)
print(direct)
print()
print("same evaluation via the per-row path walk:")
closed = eval_word_closed(ctx, word)
print(closed)
print()
print("closed form agrees with the product:", closed == direct)
print("number of nonzero entries (always n):", len(closed.nonzero_positions()))
