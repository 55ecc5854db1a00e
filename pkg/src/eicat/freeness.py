"""Unfactorizable morphisms and freeness of a skeletal EI category, both by
the factorization-conjugacy criterion and by a direct unique-factorization
brute-force check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .category import SkeletalEIPresentation


class IsIsomorphism(Exception):
    pass


def _non_isos(c):
    return [name for name in c.morphisms if not c.is_isomorphism(name)]


def is_unfactorizable(c, alpha) -> bool:
    if c.is_isomorphism(alpha):
        return False
    for (f, g), h in c.comp.items():
        if h == alpha and not c.is_isomorphism(f) and not c.is_isomorphism(g):
            return False
    return True


def unfactorizables(p: SkeletalEIPresentation):
    """The table (i, j) -> Hom^0(x_j, x_i) of unfactorizable morphisms."""
    c = p.category
    table = {}
    for i in range(p.n):
        for j in range(i + 1, p.n):
            table[(i, j)] = [m for m in p.hom_set(i, j) if is_unfactorizable(c, m)]
    return table


def decompose(p: SkeletalEIPresentation, alpha):
    """A shortest chain u_1, ..., u_m of unfactorizables with
    alpha = u_m ∘ ... ∘ u_1; first found in deterministic scan order."""
    c = p.category
    if c.is_isomorphism(alpha):
        raise IsIsomorphism(alpha)
    unf = [m for m in c.morphisms if is_unfactorizable(c, m)]
    src = c.morphisms[alpha].src
    queue = [([u], c.morphisms[u].dst) for u in unf if c.morphisms[u].src == src]
    while queue:
        next_queue = []
        for chain, at in queue:
            composite = chain[0]
            for u in chain[1:]:
                composite = c.compose(u, composite)
            if composite == alpha:
                return chain
            for u in unf:
                if c.morphisms[u].src == at:
                    next_queue.append((chain + [u], c.morphisms[u].dst))
        queue = next_queue
    raise AssertionError(f"no decomposition found for {alpha!r}")


def _first_step_factorizations(c, alpha):
    """All (a1, a2) with alpha = a2 ∘ a1 and a1 unfactorizable."""
    out = []
    for (f, g), h in c.comp.items():
        if h == alpha and is_unfactorizable(c, g):
            out.append((g, f))
    return out


def is_free_from(p: SkeletalEIPresentation, x):
    """Whether any two first-step factorizations of a non-isomorphism out of x
    agree up to an automorphism of the intermediate object.

    Returns (flag, counterexample); the counterexample is
    (alpha, (a1, a2), (b1, b2))."""
    c = p.category
    for alpha in _non_isos(c):
        if c.morphisms[alpha].src != x:
            continue
        facts = _first_step_factorizations(c, alpha)
        for (a1, a2), (b1, b2) in product(facts, repeat=2):
            z1 = c.morphisms[a1].dst
            if c.morphisms[b1].dst != z1:
                return False, (alpha, (a1, a2), (b1, b2))
            aut = p.aut[z1]
            ok = any(c.compose(h, a1) == b1 and c.compose(a2, aut.inverse(h)) == b2
                     for h in aut.elements)
            if not ok:
                return False, (alpha, (a1, a2), (b1, b2))
    return True, None


@dataclass
class FreenessReport:
    free: bool
    free_from: dict  # object -> bool
    counterexample: tuple | None


def is_free(p: SkeletalEIPresentation) -> FreenessReport:
    """Free iff free from every object."""
    free_from = {}
    counterexample = None
    for x in p.ordering:
        ok, witness = is_free_from(p, x)
        free_from[x] = ok
        if not ok and counterexample is None:
            counterexample = witness
    return FreenessReport(all(free_from.values()), free_from, counterexample)


def _all_decompositions(c, alpha, unf):
    """All chains of unfactorizables composing to alpha (DFS)."""
    src = c.morphisms[alpha].src
    out = []
    stack = [([u], c.morphisms[u].dst) for u in reversed(unf) if c.morphisms[u].src == src]
    while stack:
        chain, at = stack.pop()
        composite = chain[0]
        for u in chain[1:]:
            composite = c.compose(u, composite)
        if composite == alpha:
            out.append(chain)
            continue
        # EI: any longer chain strictly descends, so depth is bounded by n
        for u in unf:
            if c.morphisms[u].src == at:
                stack.append((chain + [u], c.morphisms[u].dst))
    return out


def _conjugating_sequence_exists(c, p, d1, d2):
    """Whether automorphisms h_i turn the chain d1 into d2."""
    n = len(d1)
    if n != len(d2):
        return False
    for a, b in zip(d1, d2):
        ma, mb = c.morphisms[a], c.morphisms[b]
        if (ma.src, ma.dst) != (mb.src, mb.dst):
            return False
    if n == 1:
        return d1[0] == d2[0]
    # enumerate h_1, ..., h_{n-1} level by level
    partial = [()]
    for i in range(n - 1):
        obj = c.morphisms[d1[i]].dst
        aut = p.aut[obj]
        grown = []
        for hs in partial:
            prev_inv = aut_prev = None
            if i > 0:
                aut_prev = p.aut[c.morphisms[d1[i - 1]].dst]
                prev_inv = aut_prev.inverse(hs[-1])
            for h in aut.elements:
                cand = c.compose(h, d1[i]) if i == 0 else \
                    c.compose(c.compose(h, d1[i]), prev_inv)
                if cand == d2[i]:
                    grown.append(hs + (h,))
        partial = grown
        if not partial:
            return False
    last_obj = c.morphisms[d1[n - 2]].dst
    aut = p.aut[last_obj]
    return any(c.compose(d1[n - 1], aut.inverse(hs[-1])) == d2[n - 1] for hs in partial)


def ufp_direct(p: SkeletalEIPresentation) -> bool:
    """Brute-force unique factorization property: every pair of maximal
    decompositions of every non-isomorphism is conjugate."""
    c = p.category
    unf = [m for m in c.morphisms if is_unfactorizable(c, m)]
    for alpha in _non_isos(c):
        decs = _all_decompositions(c, alpha, unf)
        for d1 in decs:
            for d2 in decs:
                if not _conjugating_sequence_exists(c, p, d1, d2):
                    return False
    return True


def disjoint_union_holds(p: SkeletalEIPresentation, i, j) -> bool:
    """Hom(x_j, x_i) = disjoint union over l of Hom(x_l, x_i) ∘ Hom^0(x_j, x_l),
    reading Hom(x_i, x_i) as Aut(x_i).  0-based indices, i < j."""
    if not i < j:
        raise ValueError("need i < j")
    c = p.category
    unf = unfactorizables(p)
    pieces = []
    for l in range(i, j):
        left = p.hom_set(i, l) if l > i else c.hom(p.ordering[i], p.ordering[i])
        right = unf[(l, j)]
        pieces.append({c.compose(f, g) for f in left for g in right})
    total = set(p.hom_set(i, j))
    union = set()
    for s in pieces:
        if union & s:
            return False
        union |= s
    return union == total
