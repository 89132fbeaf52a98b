"""Rewriting monomials modulo the generator ideal, with certificates.

Two monomials with the same multidegree whose evaluations share a nonzero
entry are congruent modulo the generator ideal.  The congruence is made
effective: a permutation is extracted by matching scalar variables along
the two evaluation paths, and the recursion emits context moves

  swap0:     u (b1)(b2) v     ->  u (b2)(b1) v      both blocks of trivial degree
  reverse3:  u (b1)(b2)(b3) v ->  u (b3)(b2)(b1) v  outer blocks inverse to middle

each of which is a context multiple of a generator, hence preserves the
evaluation matrix exactly.  The cancellation loop then expresses any
multihomogeneous identity as an integer combination of certified
differences source - target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import Context, FreePoly, Word, multidegree, word_degree, word_key
from .genmat import eval_poly, eval_word_closed, word_entry_monomial
from .identity import ContractError, Witness, identity_witness


class NotCongruentError(ValueError):
    pass


class MoveError(ValueError):
    pass


class NoExpressionError(ValueError):
    def __init__(self, msg, witness: Witness | None = None):
        super().__init__(msg)
        self.witness = witness


@dataclass(frozen=True)
class SigmaWitness:
    """Permutation matching the evaluation paths of two monomials.

    sigma[h] is the 0-based position in m whose scalar variable equals the
    one at position h in n; both unit paths start at the shared row.
    """

    sigma: tuple[int, ...]
    position: tuple[int, int]
    unit_path_m: tuple[tuple[int, int], ...]
    unit_path_n: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Move:
    kind: str  # "swap0" | "reverse3"
    left: Word
    blocks: tuple[Word, ...]
    right: Word

    def __post_init__(self):
        if self.kind not in ("swap0", "reverse3"):
            raise MoveError(f"unknown move kind {self.kind!r}")
        want = 2 if self.kind == "swap0" else 3
        if len(self.blocks) != want:
            raise MoveError(f"{self.kind} takes {want} blocks")
        if any(len(b) == 0 for b in self.blocks):
            raise MoveError("move blocks must be nonempty")

    def source(self) -> Word:
        return self.left + tuple(v for b in self.blocks for v in b) + self.right

    def target(self) -> Word:
        return self.left + tuple(v for b in reversed(self.blocks) for v in b) + self.right

    def degree_conditions_hold(self, ctx: Context) -> bool:
        group = ctx.grading.group
        one = group.identity_index
        degs = [word_degree(ctx, b) for b in self.blocks]
        if self.kind == "swap0":
            return degs[0] == one and degs[1] == one
        return degs[0] == degs[2] and degs[0] == group.inv(degs[1])


def apply_move(ctx: Context, w: Word, mv: Move) -> Word:
    if mv.source() != tuple(w):
        raise MoveError("move context does not match the word")
    if not mv.degree_conditions_hold(ctx):
        raise MoveError("move violates its degree side-conditions")
    return mv.target()


@dataclass(frozen=True)
class RewriteChain:
    """Certified congruence: applying the moves transforms start into end."""

    ctx: Context
    start: Word
    moves: tuple[Move, ...]
    end: Word


def verify_chain(chain: RewriteChain) -> bool:
    """Replay the chain and cross-check the endpoint evaluations."""
    w = tuple(chain.start)
    try:
        for mv in chain.moves:
            w = apply_move(chain.ctx, w, mv)
    except MoveError:
        return False
    if w != tuple(chain.end):
        return False
    return eval_word_closed(chain.ctx, chain.start) == eval_word_closed(chain.ctx, chain.end)


# --- shared entries and permutation extraction -------------------------------

def shared_entry(ctx: Context, m: Word, n: Word) -> tuple[int, int] | None:
    """First position (row-major) where both evaluations carry the same monomial."""
    if multidegree(m) != multidegree(n):
        raise ContractError("monomials must have the same multidegree")
    for row in range(ctx.grading.n):
        mono_m, col_m = word_entry_monomial(ctx, m, row)
        mono_n, col_n = word_entry_monomial(ctx, n, row)
        if col_m == col_n and mono_m == mono_n:
            return (row, col_m)
    return None


def _unit_path(ctx: Context, w: Word, row: int):
    """Scalar-variable occurrences (var id, from, to) along the word's path."""
    grading = ctx.grading
    path = []
    i = row
    g_acc = grading.group.identity_index
    for v in w:
        g_acc = grading.group.mul(ctx.degree(v), g_acc)
        j = grading.phi(g_acc, row)
        path.append((v, i, j))
        i = j
    return path


def extract_sigma(ctx: Context, m: Word, n: Word, pos: tuple[int, int]) -> SigmaWitness:
    """Match equal scalar variables between the two unit paths from pos.

    Repeated variables are disambiguated by the least unused match, so the
    result is deterministic; multilinear words never have ties.
    """
    row, col = pos
    mono_m, col_m = word_entry_monomial(ctx, m, row)
    mono_n, col_n = word_entry_monomial(ctx, n, row)
    if col_m != col_n or mono_m != mono_n or col != col_m:
        raise ContractError("monomials share no entry at the given position")
    path_m = _unit_path(ctx, m, row)
    path_n = _unit_path(ctx, n, row)
    used = [False] * len(path_m)
    sigma = []
    for triple in path_n:
        for s, cand in enumerate(path_m):
            if not used[s] and cand == triple:
                used[s] = True
                sigma.append(s)
                break
        else:
            raise ContractError("paths do not match at the shared entry")
    return SigmaWitness(
        sigma=tuple(sigma),
        position=(row, col),
        unit_path_m=tuple((a, b) for _, a, b in path_m),
        unit_path_n=tuple((a, b) for _, a, b in path_n),
    )


# --- the congruence recursion -------------------------------------------------

def congruence_chain(ctx: Context, m: Word, n: Word) -> RewriteChain:
    """A certified chain of moves transforming n into m.

    Requires a shared nonzero entry; raises NotCongruentError otherwise.
    """
    m, n = tuple(m), tuple(n)
    if multidegree(m) != multidegree(n):
        raise ContractError("monomials must have the same multidegree")
    se = shared_entry(ctx, m, n)
    if se is None:
        raise NotCongruentError("evaluations share no nonzero entry")
    moves = _chain_moves(ctx, m, n, se[0], ())
    return RewriteChain(ctx, start=n, moves=tuple(moves), end=m)


def _chain_moves(ctx: Context, m: Word, n: Word, row: int, prefix: Word):
    moves: list[Move] = []
    while True:
        # strip the common first variables, shifting the shared row along
        while m and n and m[0] == n[0]:
            g = ctx.degree(m[0])
            row = ctx.grading.phi(g, row)
            prefix = prefix + (m[0],)
            m, n = m[1:], n[1:]
        if m == n:
            return moves
        _, col = word_entry_monomial(ctx, m, row)
        witness = extract_sigma(ctx, m, n, (row, col))
        sigma = witness.sigma
        inv = [0] * len(sigma)
        for h, s in enumerate(sigma):
            inv[s] = h
        r0 = inv[0]
        if r0 == 0:
            raise ContractError("first variables differ but sigma fixes position 1")
        t = next(k for k in range(1, len(inv)) if inv[k] < r0)
        p0, s0 = inv[t], inv[t - 1]
        b1, b2, b3, b4 = n[:p0], n[p0:r0], n[r0:s0 + 1], n[s0 + 1:]
        if b1:
            mv = Move("reverse3", prefix, (b1, b2, b3), b4)
            replaced = b3 + b2 + b1 + b4
        else:
            mv = Move("swap0", prefix, (b2, b3), b4)
            replaced = b3 + b2 + b4
        if not mv.degree_conditions_hold(ctx):
            raise ContractError("computed blocks violate the degree conditions")
        moves.append(mv)
        n = replaced


# --- expressing identities in the generator ideal ------------------------------

@dataclass(frozen=True)
class JTerm:
    coeff: int
    source: Word
    target: Word
    chain: RewriteChain


@dataclass(frozen=True)
class JCombination:
    """Expression of an identity as sum of coeff * (source - target)."""

    ctx: Context
    terms: tuple[JTerm, ...]

    def expansion(self) -> FreePoly:
        out = FreePoly.zero(self.ctx)
        for t in self.terms:
            out = out + FreePoly(self.ctx, {t.source: t.coeff, t.target: -t.coeff})
        return out


def verify_combination(comb: JCombination, claimed: FreePoly | None = None) -> bool:
    for t in comb.terms:
        if tuple(t.chain.start) != tuple(t.source) or tuple(t.chain.end) != tuple(t.target):
            return False
        if not verify_chain(t.chain):
            return False
    if claimed is not None and comb.expansion() != claimed:
        return False
    return True


def express_in_J(f: FreePoly) -> JCombination:
    """Express a multihomogeneous identity through certified congruent pairs.

    Follows the cancellation loop: repeatedly eliminate the least word of
    the support against a partner sharing an evaluation entry.  The support
    strictly shrinks each round, so the loop terminates.
    """
    if not f.is_multihomogeneous():
        raise ContractError("input must be multihomogeneous; split into components first")
    w = identity_witness(f)
    if w is not None:
        raise NoExpressionError("input is not a graded identity", witness=w)
    ctx = f.ctx
    work = dict(f.terms)
    terms: list[JTerm] = []
    while work:
        support = sorted(work, key=word_key)
        if len(support) == 1:
            raise AssertionError("single-monomial identity encountered; evaluation bug")
        m1 = support[0]
        partner = None
        for cand in support[1:]:
            if shared_entry(ctx, m1, cand) is not None:
                partner = cand
                break
        if partner is None:
            raise AssertionError("no partner with a shared entry; evaluation bug")
        lam = work[m1]
        chain = congruence_chain(ctx, partner, m1)  # start=m1, end=partner
        terms.append(JTerm(coeff=lam, source=m1, target=partner, chain=chain))
        before = len(work)
        del work[m1]
        work[partner] = work.get(partner, 0) + lam
        if work[partner] == 0:
            del work[partner]
        if len(work) >= before:
            raise AssertionError("support did not shrink; elimination bug")
    return JCombination(ctx, tuple(terms))
