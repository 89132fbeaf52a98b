"""Shared helpers for the test suite: seeded RNG and random object builders."""

from __future__ import annotations

import os
import random

from gpi.freealg import Context, WeakSubstitution, word_degree
from gpi.groups import cyclic_group, default_grading
from gpi.identity import GeneratorInstance, GeneratorKind, make_generator
from gpi.rewrite import Move, apply_move

DEFAULT_SEED = 20260823


def seed() -> int:
    return int(os.environ.get("GPI_SEED", DEFAULT_SEED))


def rng(salt: int = 0) -> random.Random:
    return random.Random(seed() + salt)


def configs():
    """The two desk-scale group configurations."""
    return [default_grading(cyclic_group(2)), default_grading(cyclic_group(3))]


def random_context(rand: random.Random, grading, nvars: int) -> Context:
    order = grading.group.order
    return Context(grading, {k: rand.randrange(order) for k in range(1, nvars + 1)})


def random_word(rand: random.Random, ctx: Context, length: int):
    ids = sorted(ctx.degrees)
    return tuple(rand.choice(ids) for _ in range(length))


def random_multilinear_word(rand: random.Random, ctx: Context, length: int):
    ids = sorted(ctx.degrees)
    return tuple(rand.sample(ids, length))


# --- random congruences -------------------------------------------------------

def enumerate_moves(ctx: Context, w):
    """All context moves applicable to w (valid degree side-conditions)."""
    group = ctx.grading.group
    one = group.identity_index
    l = len(w)
    out = []
    for a in range(l):
        for b in range(a + 1, l):
            for c in range(b + 1, l + 1):
                b1, b2 = w[a:b], w[b:c]
                if word_degree(ctx, b1) == one and word_degree(ctx, b2) == one:
                    out.append(Move("swap0", w[:a], (b1, b2), w[c:]))
                for d in range(c + 1, l + 1):
                    b3 = w[c:d]
                    mv = Move("reverse3", w[:a], (b1, b2, b3), w[d:])
                    if mv.degree_conditions_hold(ctx):
                        out.append(mv)
    return out


def random_congruent_pair(rand: random.Random, ctx: Context, word,
                          max_moves: int = 3):
    """(m, n): n obtained from m by random valid moves, hence congruent."""
    m = tuple(word)
    n = m
    for _ in range(rand.randint(1, max_moves)):
        moves = enumerate_moves(ctx, n)
        if not moves:
            break
        n = apply_move(ctx, n, rand.choice(moves))
    return m, n


# --- random generators and substitutions --------------------------------------

def random_generator(rand: random.Random, grading, kind: GeneratorKind,
                     max_part_len: int, spare: int = 0) -> GeneratorInstance:
    """A random generator instance; `spare` extra variables are declared
    (degrees random) for later use in contexts and substitution images."""
    group = grading.group
    one = group.identity_index
    nparts = 2 if kind is GeneratorKind.TYPE1 else 3
    lens = [rand.randint(1, max_part_len) for _ in range(nparts)]
    degrees = {}
    nxt = 1
    parts = []
    for ln in lens:
        ids = tuple(range(nxt, nxt + ln))
        nxt += ln
        degs = [rand.randrange(group.order) for _ in range(ln)]
        parts.append((ids, degs))
    if kind is GeneratorKind.TYPE1:
        targets = [one, one]
    else:
        mid = rand.randrange(group.order)
        targets = [group.inv(mid), mid, group.inv(mid)]
    words = []
    for (ids, degs), target in zip(parts, targets):
        # fix the last degree of the part so the part degree hits the target
        head = group.product(degs[:-1])
        degs[-1] = next(e for e in range(group.order)
                        if group.mul(head, e) == target)
        for k, dg in zip(ids, degs):
            degrees[k] = dg
        words.append(ids)
    for k in range(nxt, nxt + spare):
        degrees[k] = rand.randrange(group.order)
    ctx = Context(grading, degrees)
    return make_generator(kind, ctx, tuple(words))


def random_lieword(rand: random.Random, ctx: Context, target_deg: int,
                   pool, depth: int):
    """A LieWord over `pool` of the given degree and bracket depth <= depth."""
    group = ctx.grading.group
    if depth == 0:
        cands = [k for k in pool if ctx.degree(k) == target_deg]
        return rand.choice(cands) if cands else None
    for _ in range(20):
        a_deg = rand.randrange(group.order)
        b_deg = next(e for e in range(group.order)
                     if group.mul(a_deg, e) == target_deg)
        a = random_lieword(rand, ctx, a_deg, pool, rand.randint(0, depth - 1))
        b = random_lieword(rand, ctx, b_deg, pool, rand.randint(0, depth - 1))
        if a is not None and b is not None:
            return (a, b)
    return None


def random_weak_substitution(rand: random.Random, ctx: Context, targets,
                             pool, depth: int = 2) -> WeakSubstitution:
    """Map a few of `targets` to random LieWords built from `pool`."""
    images = {}
    for k in targets:
        lw = random_lieword(rand, ctx, ctx.degree(k), pool, rand.randint(0, depth))
        if lw is not None:
            images[k] = lw
    return WeakSubstitution(ctx, images)
