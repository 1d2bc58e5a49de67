"""Independent brute-force oracles used to derive expected test values.

Each oracle deliberately takes a different route than the library code it
checks: matrix-only group closure, subword enumeration, exhaustive extension
enumeration, box scans.
"""

from __future__ import annotations

import itertools

from eqcohom.root_system import (
    RootDatum,
    Weight,
    WeylElement,
    WeylGroup,
    _identity,
    _matmul,
    _matvec,
    _reflection_matrix,
    weyl_act_weight,
)


def weyl_matrices_by_closure(datum: RootDatum) -> set:
    """All Weyl-group matrices via right-multiplication closure (no words)."""
    rank = datum.rank
    gens = [_reflection_matrix(datum.cartan, i) for i in range(rank)]
    seen = {_identity(rank)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for m in frontier:
            for g in gens:
                prod = _matmul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    fresh.append(prod)
        frontier = fresh
    return seen


def bruhat_leq_subword(u: WeylElement, v: WeylElement) -> bool:
    """u <= v iff some subword of v's reduced word multiplies to u."""
    cartan = u.cartan
    rank = len(cartan)
    gens = [_reflection_matrix(cartan, i) for i in range(rank)]
    for positions in itertools.combinations(range(len(v.word)), u.length):
        m = _identity(rank)
        for p in positions:
            m = _matmul(m, gens[v.word[p]])
        if m == u.matrix:
            return True
    return u.length == 0


def inversion_count(w: WeylElement, datum: RootDatum) -> int:
    """Number of positive roots sent negative by w's matrix."""
    positives = datum.positive_root_set
    return sum(1 for beta in datum.positive_roots if _matvec(w.matrix, beta.coords) not in positives)


def weyl_orbit_weights(mu: Weight, weyl: WeylGroup) -> list[Weight]:
    """The Weyl orbit of a weight: the representation's weight support seen by valuations."""
    seen = {weyl_act_weight(w, mu).coords for w in weyl}
    return [Weight(c) for c in sorted(seen)]


def all_maximal_first_orders(leq) -> list[tuple[str, ...]]:
    """Every ordering that repeatedly removes some maximal element.

    ``leq`` maps each label to the set of labels below-or-equal to it.
    """
    labels = set(leq)

    def rec(remaining: frozenset) -> list[tuple[str, ...]]:
        if not remaining:
            return [()]
        out = []
        for beta in sorted(remaining):
            if all(beta not in leq[g] or g == beta for g in remaining):
                for rest in rec(remaining - {beta}):
                    out.append((beta,) + rest)
        return out

    return rec(frozenset(labels))
