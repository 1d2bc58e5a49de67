"""From fixed-point tangent data to stratum posets and free-module structures.

A variety enters as its combinatorial shadow: finitely many fixed-point
labels, each with the weight multiset of its tangent representation, plus an
optional closure order.  A coweight pairing nonzero against every tangent
weight plays the role of a one-parameter subgroup whose attracting sets
stratify the space; positive-pairing directions span the stratum, the
negative-pairing ones its normal bundle, whose Euler class we compute.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .errors import NonGenericCoweight, NotClosed, SearchExhausted, ZeroTangentWeight
from .rings import FGLTruncation, euler_class
from .root_system import Coweight, Weight, pairing
from .stratification import (
    GradedModuleDecomposition,
    StratumData,
    StratumPoset,
    assemble_module,
)


@dataclass(frozen=True)
class FixedPointData:
    """A fixed point: label plus the weight multiset of its tangent space."""

    label: str
    tangent_weights: tuple[Weight, ...]


@dataclass(frozen=True)
class VarietyModel:
    """Combinatorial stand-in for a smooth projective variety with isolated fixed points.

    ``closure_order`` maps each label to the set of labels lying in the
    closure of its stratum (a down-set map, including the label itself); when
    absent, stratification falls back on the codimension order and warns.
    ``rank`` may be given explicitly for zero-dimensional models, where no
    tangent weight exists to infer it from.
    """

    dimension: int
    points: tuple[FixedPointData, ...]
    closure_order: dict | None = None
    rank: int | None = None

    def __post_init__(self):
        labels = [p.label for p in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate fixed-point labels")
        for p in self.points:
            if len(p.tangent_weights) != self.dimension:
                raise ValueError(
                    f"point {p.label!r} has {len(p.tangent_weights)} tangent weights, "
                    f"expected {self.dimension}"
                )
        ranks = {w.rank for p in self.points for w in p.tangent_weights}
        if len(ranks) > 1:
            raise ValueError(f"mixed weight ranks {sorted(ranks)}")
        if ranks:
            inferred = ranks.pop()
            if self.rank is None:
                object.__setattr__(self, "rank", inferred)
            elif self.rank != inferred:
                raise ValueError(f"declared rank {self.rank} != weight rank {inferred}")
        elif self.rank is None:
            raise ValueError("rank is required when the model carries no tangent weights")
        if self.closure_order is not None:
            known = set(labels)
            if set(self.closure_order) != known:
                raise ValueError("closure order keys differ from the labels")
            order = {b: frozenset(s) for b, s in self.closure_order.items()}
            object.__setattr__(self, "closure_order", order)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.points)

    def to_json(self):
        data = {
            "dimension": self.dimension,
            "rank": self.rank,
            "points": [
                {"label": p.label, "weights": [list(w.coords) for w in p.tangent_weights]}
                for p in self.points
            ],
        }
        if self.closure_order is not None:
            covers = []
            for b in self.labels:
                strictly_below = self.closure_order[b] - {b}
                for a in sorted(strictly_below):
                    if not any(
                        c != a and a in self.closure_order[c] for c in strictly_below
                    ):
                        covers.append([a, b])
            data["closure_covers"] = sorted(covers)
        return data

    @classmethod
    def from_json(cls, data) -> "VarietyModel":
        points = tuple(
            FixedPointData(p["label"], tuple(Weight(tuple(c)) for c in p["weights"]))
            for p in data["points"]
        )
        closure = None
        if "closure_covers" in data:
            labels = [p.label for p in points]
            poset = StratumPoset.from_covers(labels, data["closure_covers"])
            closure = dict(poset.down)
        return cls(
            dimension=data["dimension"],
            points=points,
            closure_order=closure,
            rank=data.get("rank"),
        )


def generic_coweight(model: VarietyModel) -> Coweight:
    """The first coweight pairing nonzero with every tangent weight.

    Deterministic search over coroot-coordinate vectors by increasing
    max-norm, lexicographic within each shell.  The bad set is a finite union
    of hyperplanes, so a counting bound on the shell radius guarantees the
    search succeeds for nonzero weights.
    """
    weights = []
    for p in model.points:
        for w in p.tangent_weights:
            if w.is_zero:
                raise ZeroTangentWeight(p.label)
            weights.append(w)
    rank = model.rank
    distinct = {w.coords for w in weights}
    if not distinct:
        return Coweight((0,) * rank)
    # shells up to B suffice: a box of side 2B+1 meets each of the m weight
    # hyperplanes in at most (2B+1)^(rank-1) points, so 2B+1 > m leaves a gap;
    # the coordinate-sum term is the bound documented for the simple cases.
    coord_bound = 1 + max(sum(abs(c) for c in coords) for coords in distinct)
    bound = max(coord_bound, len(distinct) // 2 + 1)
    for shell in range(bound + 1):
        for coords in itertools.product(range(-shell, shell + 1), repeat=rank):
            if max((abs(c) for c in coords), default=0) != shell:
                continue
            lam = Coweight(coords)
            if all(pairing(lam, w) != 0 for w in weights):
                return lam
    raise SearchExhausted(f"no generic coweight within max-norm {bound}")


def _codim_order(codims: dict) -> dict:
    # larger codimension = deeper in the closure order; equal codims incomparable
    return {
        b: frozenset([b] + [a for a in codims if codims[a] > codims[b]]) for b in codims
    }


def bb_stratify(
    model: VarietyModel,
    lam: Coweight,
    theory: str = "H",
    fgl: FGLTruncation | None = None,
) -> StratumPoset:
    """One stratum per fixed point, graded by the sign of the tangent pairings.

    The stratum at a fixed point spans the positive-pairing directions; its
    codimension counts the negative ones, and the payload Euler class is the
    class of the negative-pairing weight multiset in the requested theory.
    """
    if theory == "MU" and fgl is None:
        # keep every normal class visible below the cutoff
        fgl = FGLTruncation(max(6, 2 * model.dimension))
    codims = {}
    payloads = {}
    for p in model.points:
        negative = []
        for w in p.tangent_weights:
            s = pairing(lam, w)
            if s == 0:
                raise NonGenericCoweight(p.label, w)
            if s < 0:
                negative.append(w)
        codims[p.label] = len(negative)
        payloads[p.label] = StratumData(
            len(negative), euler_class(theory, negative, nvars=model.rank, fgl=fgl)
        )
    if model.closure_order is not None:
        down = model.closure_order
    else:
        warnings.warn(
            "model has no closure order; falling back on the codimension order",
            stacklevel=2,
        )
        down = _codim_order(codims)
    return StratumPoset(model.labels, down, payloads)


def module_structure(
    model: VarietyModel,
    theory: str = "H",
    fgl: FGLTruncation | None = None,
) -> GradedModuleDecomposition:
    """Free-module decomposition with one generator per fixed point."""
    lam = generic_coweight(model)
    poset = bb_stratify(model, lam, theory, fgl)
    return assemble_module(poset, theory)


@dataclass(frozen=True)
class RelativeFreenessReport:
    """Bookkeeping checks for a closed invariant submodel inside a larger one."""

    outer_rank: int
    inner_rank: int
    relative_rank: int
    relative_shifts: tuple[int, ...]
    shifts_all_even: bool
    projection_labels_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.relative_rank == self.outer_rank - self.inner_rank
            and self.shifts_all_even
            and self.projection_labels_ok
        )


def check_relative_freeness(
    outer: VarietyModel, inner_labels, theory: str = "H"
) -> RelativeFreenessReport:
    """Verify the rank/parity/surjectivity bookkeeping for a closed submodel.

    ``inner_labels`` must be a down-set of the closure order (a closed
    invariant union of strata).  The relative module gets one generator per
    outer-only fixed point, all in even shifts, and the outer decomposition
    restricts onto the inner labels generator-by-generator.
    """
    inner = set(inner_labels)
    unknown = inner - set(outer.labels)
    if unknown:
        raise NotClosed(f"labels {sorted(unknown)} are not in the model")
    lam = generic_coweight(outer)
    poset = bb_stratify(outer, lam, theory)
    for b in inner:
        if not poset.down[b] <= inner:
            raise NotClosed(f"label {b!r} has closure outside the subset")
    dec = assemble_module(poset, theory)
    relative = [g for g in dec.generators if g.label not in inner]
    restricted = [g for g in dec.generators if g.label in inner]
    return RelativeFreenessReport(
        outer_rank=dec.rank,
        inner_rank=len(inner),
        relative_rank=len(relative),
        relative_shifts=tuple(sorted(g.shift for g in relative)),
        shifts_all_even=all(g.shift % 2 == 0 for g in relative),
        projection_labels_ok=sorted(g.label for g in restricted) == sorted(inner),
    )
