"""Fixed points of loop-group valuation levels and the direct-limit bookkeeping.

Levels are indexed by a non-negative integer n; a coweight point t^mu lies in
level n exactly when its dominant representative pairs at least -n against
the lowest weight of a chosen dominant representation.  Enumeration reduces
to dominant coweights in an explicit simplex followed by Weyl-orbit
expansion, so every level set is provably complete.

The extended torus carries one loop-rotation circle on top of the maximal
torus; it changes no fixed-point count and shows up only in the documented
base ring (one extra variable) and in the t^mu labelling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotDominant
from .root_system import (
    Coweight,
    RootDatum,
    RootSystemSpec,
    Weight,
    WeylElement,
    WeylGroup,
    build_root_datum,
    dominant_representative,
    generate_weyl,
    is_dominant_coweight,
    longest_element,
    pairing,
    weyl_act_coweight,
    weyl_act_weight,
)


@dataclass(frozen=True)
class GrSpec:
    """A loop Grassmannian level: root system, dominant highest weight, level index."""

    spec: RootSystemSpec
    alpha: Weight
    level: int

    def __post_init__(self):
        if self.alpha.rank != self.spec.rank:
            raise ValueError(f"alpha has rank {self.alpha.rank}, expected {self.spec.rank}")
        if any(c < 0 for c in self.alpha.coords) or self.alpha.is_zero:
            raise ValueError("alpha must be dominant and nonzero")
        if self.level < 0:
            raise ValueError("level must be non-negative")


@dataclass(frozen=True)
class GrFixedPoint:
    """A torus-fixed point t^mu with its dominant conjugate and a witness."""

    coweight: Coweight
    dominant_rep: Coweight
    witness: WeylElement

    @property
    def label(self) -> str:
        return coweight_label(self.coweight)


def coweight_label(lam: Coweight) -> str:
    return "t^(" + ",".join(str(c) for c in lam.coords) + ")"


def default_alpha(spec: RootSystemSpec) -> Weight | None:
    """The default representation choice: the first fundamental weight for A-types."""
    if spec.family == "A":
        return Weight(tuple(1 if j == 0 else 0 for j in range(spec.rank)))
    return None


@lru_cache(maxsize=None)
def _context(spec: RootSystemSpec) -> tuple[RootDatum, WeylGroup, WeylElement]:
    datum = build_root_datum(spec)
    weyl = generate_weyl(datum)
    return datum, weyl, longest_element(weyl)


def _invert_rational(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [
        [Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        factor = aug[col][col]
        aug[col] = [v / factor for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                scale = aug[r][col]
                aug[r] = [v - scale * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def val_coweight(lam: Coweight, alpha: Weight, datum: RootDatum) -> int:
    """Minimal valuation of t^lam on the representation: the pairing with the lowest weight."""
    if not is_dominant_coweight(lam, datum):
        raise NotDominant(f"coweight {lam.coords} is not dominant")
    _, _, w0 = _context(datum.spec)
    return pairing(lam, weyl_act_weight(w0, alpha))


def _dominant_levels(spec: RootSystemSpec, alpha: Weight, n: int) -> list[Coweight]:
    """All dominant coweights of the coroot lattice with valuation >= -n.

    Dominance pins down the vector m of simple-root pairings, m >= 0; the
    budget is sum(m_j * k_j) <= n with k the (strictly positive) simple-root
    coordinates of the dual highest weight, so m ranges over a finite box.
    A candidate m is kept when it comes from an integral coroot vector.
    """
    datum, _, w0 = _context(spec)
    rank = spec.rank
    theta = -weyl_act_weight(w0, alpha)  # dominant, nonzero
    cartan_inv = _invert_rational(datum.cartan)
    k = [sum(cartan_inv[j][i] * theta.coords[i] for i in range(rank)) for j in range(rank)]
    assert all(v > 0 for v in k)
    bounds = [int(Fraction(n) / v) for v in k]
    out = []
    for m in itertools.product(*(range(b + 1) for b in bounds)):
        if sum(Fraction(mj) * kj for mj, kj in zip(m, k)) > n:
            continue
        # coroot coordinates a solve m = C^T a, i.e. a = (C^-1)^T m
        a = [sum(cartan_inv[j][i] * m[j] for j in range(rank)) for i in range(rank)]
        if all(v.denominator == 1 for v in a):
            out.append(Coweight(tuple(int(v) for v in a)))
    return sorted(out, key=lambda c: c.coords)


def gr_fixed_points(gs: GrSpec) -> list[GrFixedPoint]:
    """The complete fixed-point set of the level, sorted by coweight coordinates."""
    _, weyl, _ = _context(gs.spec)
    seen = {}
    for dom in _dominant_levels(gs.spec, gs.alpha, gs.level):
        for w in weyl:
            mu = weyl_act_coweight(w, dom)
            if mu.coords not in seen:
                seen[mu.coords] = dom
    points = []
    for coords in sorted(seen):
        mu = Coweight(coords)
        dom, witness = dominant_representative(mu, weyl)
        assert dom == seen[coords]
        points.append(GrFixedPoint(mu, dom, witness))
    return points


def gr_level_count(gs: GrSpec) -> int:
    return len(gr_fixed_points(gs))


def gr_filtration_check(spec: RootSystemSpec, alpha: Weight, n_max: int, box_radius: int = 2) -> bool:
    """Nesting across levels 0..n_max plus box exhaustion.

    Every coweight in the test box must first appear exactly at the level
    equal to minus its valuation, and each level set must contain the last.
    """
    _, weyl, _ = _context(spec)
    datum = weyl.datum
    levels = [
        {p.coweight.coords for p in gr_fixed_points(GrSpec(spec, alpha, n))}
        for n in range(n_max + 1)
    ]
    for n in range(n_max):
        if not levels[n] <= levels[n + 1]:
            return False
    for coords in itertools.product(range(-box_radius, box_radius + 1), repeat=spec.rank):
        mu = Coweight(coords)
        dom, _ = dominant_representative(mu, weyl)
        entry = -val_coweight(dom, alpha, datum)
        if entry <= n_max:
            if coords not in levels[entry]:
                return False
            if entry > 0 and coords in levels[entry - 1]:
                return False
    return True


@dataclass(frozen=True)
class LevelRecord:
    level: int
    rank: int
    labels: tuple[str, ...]


@dataclass(frozen=True)
class ProjectionRecord:
    """Restriction from one level's generators onto the previous level's."""

    source_level: int
    target_level: int
    dropped: tuple[str, ...]


@dataclass(frozen=True)
class LimitModulePresentation:
    """Per-level free ranks with the label bookkeeping of the inverse system."""

    theory: str
    levels: tuple[LevelRecord, ...]
    projections: tuple[ProjectionRecord, ...]
    index_description: str
    base_ring: str

    def verify(self) -> bool:
        """Nesting of label sets and commutation of the restriction squares."""
        by_level = {rec.level: set(rec.labels) for rec in self.levels}
        for rec in self.levels:
            if rec.rank != len(rec.labels):
                return False
        for proj in self.projections:
            src = by_level[proj.source_level]
            dst = by_level[proj.target_level]
            if not dst <= src:
                return False
            if set(proj.dropped) != src - dst:
                return False
        # two consecutive squares compose: dropped labels accumulate
        ordered = sorted(self.projections, key=lambda p: p.target_level)
        for first, second in zip(ordered, ordered[1:]):
            if first.source_level != second.target_level:
                return False
            composite = set(first.dropped) | set(second.dropped)
            if composite != by_level[second.source_level] - by_level[first.target_level]:
                return False
        return True

    def to_json(self):
        return {
            "theory": self.theory,
            "levels": [
                {"level": r.level, "rank": r.rank, "labels": list(r.labels)} for r in self.levels
            ],
            "projections": [
                {
                    "source_level": p.source_level,
                    "target_level": p.target_level,
                    "dropped": list(p.dropped),
                }
                for p in self.projections
            ],
            "index_description": self.index_description,
            "base_ring": self.base_ring,
        }


_BASE_RINGS = {
    "H": "integer polynomial ring on {n} degree-2 generators (torus rank {r} + loop rotation)",
    "K": "Laurent polynomial ring on {n} invertible characters (torus rank {r} + loop rotation)",
    "MU": "truncated formal-group-law coefficient ring over {n} Chern variables (torus rank {r} + loop rotation)",
}


def base_ring_description(theory: str, rank: int) -> str:
    """The documented base ring over the extended torus (one loop-rotation circle)."""
    if theory not in _BASE_RINGS:
        raise ValueError(f"unknown theory {theory!r}")
    return _BASE_RINGS[theory].format(n=rank + 1, r=rank)


def gr_limit_module(
    spec: RootSystemSpec, alpha: Weight, n_max: int, theory: str = "H"
) -> LimitModulePresentation:
    """Level-by-level free ranks and the projections of the inverse system.

    Each level is free of rank equal to its fixed-point count; consecutive
    projections restrict the generator label set, realizing the commuting
    squares whose inverse limit is the full product over the coweight lattice.
    """
    base_ring = base_ring_description(theory, spec.rank)
    levels = []
    label_sets = []
    for n in range(n_max + 1):
        labels = tuple(p.label for p in gr_fixed_points(GrSpec(spec, alpha, n)))
        levels.append(LevelRecord(n, len(labels), labels))
        label_sets.append(set(labels))
    projections = tuple(
        ProjectionRecord(
            source_level=n + 1,
            target_level=n,
            dropped=tuple(sorted(label_sets[n + 1] - label_sets[n])),
        )
        for n in range(n_max)
    )
    index = (
        f"coweight lattice of {spec.name} (free abelian group of rank {spec.rank}); "
        "the limit module is the direct product of one base-ring copy per coweight, "
        "presented through the level filtration above"
    )
    return LimitModulePresentation(
        theory=theory,
        levels=tuple(levels),
        projections=projections,
        index_description=index,
        base_ring=base_ring,
    )
