"""Reducing generators over the order-3 cyclic group to short parts.

A type-2 generator with an oversized part is rewritten as a combination
of generators whose parts have length at most three.  The result is a
certificate tree (sums, contexts, substitutions over reduced leaves)
that replays symbolically to the original expansion.
"""

from gpi import (Context, GeneratorKind, cyclic_group, default_grading,
                 enumerate_reduced, expand, make_generator, reduce_type2,
                 verify_certificate)
from gpi.z3reduce import (CertContext, CertLeaf, CertSubst, CertSum,
                          cert_leaves)

grading = default_grading(cyclic_group(3))

ctx = Context(grading, {1: 1, 2: 1, 3: 0, 4: 1, 5: 0, 6: 2})
gen = make_generator(GeneratorKind.TYPE2, ctx, ((1, 2, 5, 3), (4,), (6,)))
print("target generator parts:", gen.parts, "lengths", gen.part_lengths())
print("expansion:", expand(gen))
print()

cert = reduce_type2(gen)


def describe(node, depth=0):
    pad = "  " * depth
    if isinstance(node, CertLeaf):
        print(pad + f"leaf {node.generator.parts}")
    elif isinstance(node, CertSum):
        print(pad + f"sum of {len(node.children)}")
        for coeff, child in node.children:
            print(pad + f"  coeff {coeff:+d}:")
            describe(child, depth + 2)
    elif isinstance(node, CertContext):
        print(pad + f"context left={node.left} right={node.right}")
        describe(node.child, depth + 1)
    elif isinstance(node, CertSubst):
        print(pad + f"substitution {dict(node.images)}")
        describe(node.child, depth + 1)


describe(cert.root)
print()
leaves = list(cert_leaves(cert.root))
print("leaves:", len(leaves), "- all parts of length <= 3:",
      all(leaf.is_reduced() for leaf in leaves))
print("certificate verifies by symbolic replay:", verify_certificate(cert))

print()
shapes = enumerate_reduced(grading)
t1 = sum(1 for g in shapes if g.kind is GeneratorKind.TYPE1)
print(f"reduced shapes with parts <= 3: {len(shapes)}"
      f" ({t1} of type 1, {len(shapes) - t1} of type 2)")
