"""JSON (de)serialization of contexts and certificates.

Every certificate embeds its full context (group table, grading tuple,
variable degrees) so that verification needs no side files.  Matrix
positions are 1-based on the wire; group elements and variable degrees are
element indices into the embedded table.
"""

from __future__ import annotations

import json

from .freealg import Context, FreePoly, Word
from .genmat import GenericMatrix
from .groups import FiniteGroup, GradingTuple
from .identity import GeneratorInstance, GeneratorKind, make_generator
from .rewrite import JCombination, JTerm, Move, RewriteChain
from .z3reduce import (CertContext, CertLeaf, CertNode, CertSubst, CertSum,
                       ReductionCertificate)

FORMAT_VERSION = 1


class CertificateFormatError(ValueError):
    pass


# --- context ------------------------------------------------------------------

def context_to_json(ctx: Context) -> dict:
    return {
        "group": {
            "order": ctx.grading.group.order,
            "table": [list(row) for row in ctx.grading.group.table],
            "names": list(ctx.grading.group.names),
        },
        "grading": list(ctx.grading.tuple_),
        "vars": {str(k): d for k, d in sorted(ctx.degrees.items())},
    }


def context_from_json(doc: dict) -> Context:
    try:
        gdoc = doc["group"]
        group = FiniteGroup(tuple(tuple(r) for r in gdoc["table"]),
                           tuple(gdoc.get("names", ())))
        grading = GradingTuple(group, tuple(doc["grading"]))
        degrees = {int(k): int(d) for k, d in doc["vars"].items()}
    except (KeyError, TypeError) as exc:
        raise CertificateFormatError(f"malformed context: {exc}") from exc
    return Context(grading, degrees)


# --- words, polynomials, matrices ---------------------------------------------

def word_to_json(w: Word) -> list[int]:
    return list(w)


def poly_to_json(p: FreePoly) -> list[dict]:
    return [{"coeff": p.terms[w], "word": list(w)} for w in p.support()]


def matrix_to_json(mat: GenericMatrix) -> dict:
    entries = []
    for i in range(mat.n):
        for j in range(mat.n):
            e = mat.entries[i][j]
            if e.is_zero():
                continue
            terms = [{"coeff": c,
                      "vars": [[k, a + 1, b + 1, exp] for (k, a, b), exp in m]}
                     for m, c in sorted(e.terms.items())]
            entries.append({"row": i + 1, "col": j + 1, "terms": terms})
    return {"n": mat.n, "entries": entries}


# --- rewrite chains and combinations ------------------------------------------

def move_to_json(mv: Move) -> dict:
    return {"kind": mv.kind, "left": list(mv.left),
            "blocks": [list(b) for b in mv.blocks], "right": list(mv.right)}


def move_from_json(doc: dict) -> Move:
    return Move(doc["kind"], tuple(doc["left"]),
                tuple(tuple(b) for b in doc["blocks"]), tuple(doc["right"]))


def chain_payload(chain: RewriteChain) -> dict:
    return {"start": list(chain.start), "end": list(chain.end),
            "moves": [move_to_json(m) for m in chain.moves]}


def chain_from_payload(ctx: Context, doc: dict) -> RewriteChain:
    return RewriteChain(ctx, tuple(doc["start"]),
                        tuple(move_from_json(m) for m in doc["moves"]),
                        tuple(doc["end"]))


def chain_to_json(chain: RewriteChain) -> dict:
    out = {"version": FORMAT_VERSION, "kind": "chain"}
    out.update(context_to_json(chain.ctx))
    out["payload"] = chain_payload(chain)
    return out


def jcomb_payload(comb: JCombination) -> dict:
    return {"terms": [{"coeff": t.coeff, "source": list(t.source),
                       "target": list(t.target), "chain": chain_payload(t.chain)}
                      for t in comb.terms]}


def jcomb_from_payload(ctx: Context, doc: dict) -> JCombination:
    terms = tuple(JTerm(int(t["coeff"]), tuple(t["source"]), tuple(t["target"]),
                        chain_from_payload(ctx, t["chain"]))
                  for t in doc["terms"])
    return JCombination(ctx, terms)


def jcomb_to_json(comb: JCombination) -> dict:
    out = {"version": FORMAT_VERSION, "kind": "jcomb"}
    out.update(context_to_json(comb.ctx))
    out["payload"] = jcomb_payload(comb)
    return out


# --- reduction certificates ----------------------------------------------------

def generator_to_json(g: GeneratorInstance) -> dict:
    return {"kind": g.kind.value, "parts": [list(p) for p in g.parts]}


def generator_from_json(ctx: Context, doc: dict) -> GeneratorInstance:
    return make_generator(GeneratorKind(doc["kind"]), ctx,
                          tuple(tuple(p) for p in doc["parts"]))


def _lieword_to_json(lw):
    if isinstance(lw, int):
        return lw
    l, r = lw
    return [_lieword_to_json(l), _lieword_to_json(r)]


def _lieword_from_json(doc):
    if isinstance(doc, int):
        return doc
    l, r = doc
    return (_lieword_from_json(l), _lieword_from_json(r))


def node_to_json(node: CertNode) -> dict:
    if isinstance(node, CertLeaf):
        return {"op": "leaf", "generator": generator_to_json(node.generator)}
    if isinstance(node, CertSum):
        return {"op": "sum",
                "children": [[c, node_to_json(ch)] for c, ch in node.children]}
    if isinstance(node, CertContext):
        return {"op": "context", "left": list(node.left), "right": list(node.right),
                "child": node_to_json(node.child)}
    if isinstance(node, CertSubst):
        return {"op": "subst",
                "images": [[v, _lieword_to_json(lw)] for v, lw in node.images],
                "child": node_to_json(node.child)}
    raise CertificateFormatError(f"unknown node {type(node).__name__}")


def node_from_json(ctx: Context, doc: dict) -> CertNode:
    op = doc.get("op")
    if op == "leaf":
        return CertLeaf(generator_from_json(ctx, doc["generator"]))
    if op == "sum":
        return CertSum(tuple((int(c), node_from_json(ctx, ch))
                             for c, ch in doc["children"]))
    if op == "context":
        return CertContext(tuple(doc["left"]), tuple(doc["right"]),
                           node_from_json(ctx, doc["child"]))
    if op == "subst":
        return CertSubst(tuple((int(v), _lieword_from_json(lw))
                               for v, lw in doc["images"]),
                         node_from_json(ctx, doc["child"]))
    raise CertificateFormatError(f"unknown certificate op {op!r}")


def reduction_to_json(cert: ReductionCertificate) -> dict:
    out = {"version": FORMAT_VERSION, "kind": "reduction"}
    out.update(context_to_json(cert.ctx))
    out["payload"] = {"target": generator_to_json(cert.target),
                      "root": node_to_json(cert.root)}
    return out


# --- top-level load -------------------------------------------------------------

def certificate_from_json(doc: dict):
    """Load any certificate document; returns a chain, combination or reduction."""
    if doc.get("version") != FORMAT_VERSION:
        raise CertificateFormatError(f"unsupported version {doc.get('version')!r}")
    ctx = context_from_json(doc)
    kind = doc.get("kind")
    payload = doc.get("payload", {})
    if kind == "chain":
        return chain_from_payload(ctx, payload)
    if kind == "jcomb":
        return jcomb_from_payload(ctx, payload)
    if kind == "reduction":
        return ReductionCertificate(ctx, generator_from_json(ctx, payload["target"]),
                                    node_from_json(ctx, payload["root"]))
    raise CertificateFormatError(f"unknown certificate kind {kind!r}")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
