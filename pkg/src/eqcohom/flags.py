"""Variety models for partial flag manifolds with their Bruhat closure order.

Fixed points are the minimal-length coset representatives; the tangent
weights at the base point are the negative roots outside the parabolic
subsystem, and at a general fixed point their image under it.  The sign
convention makes the big cell the open stratum for a dominant regular
one-parameter subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bb import FixedPointData, VarietyModel
from .root_system import (
    RootDatum,
    RootSystemSpec,
    Weight,
    WeylElement,
    WeylGroup,
    bruhat_leq,
    build_root_datum,
    coset_representatives,
    generate_weyl,
    weyl_act_weight,
    word_label,
)


@dataclass(frozen=True)
class FlagSpec:
    """A partial flag variety: root system plus parabolic simple-root indices (0-based)."""

    spec: RootSystemSpec
    parabolic: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "parabolic", frozenset(int(i) for i in self.parabolic))
        for i in self.parabolic:
            if not 0 <= i < self.spec.rank:
                raise ValueError(f"parabolic index {i} out of range for {self.spec.name}")


@lru_cache(maxsize=None)
def _datum_and_weyl(spec: RootSystemSpec) -> tuple[RootDatum, WeylGroup]:
    datum = build_root_datum(spec)
    return datum, generate_weyl(datum)


def flag_fixed_points(fs: FlagSpec) -> list[WeylElement]:
    """Minimal-length coset representatives, one per fixed point."""
    _, weyl = _datum_and_weyl(fs.spec)
    return coset_representatives(weyl, fs.parabolic)


def _complement_positive_roots(datum: RootDatum, parabolic: frozenset[int]) -> list[Weight]:
    """Positive roots whose simple-root support leaves the parabolic subset."""
    out = []
    for root, coords in zip(datum.positive_roots, datum.positive_root_coords):
        support = {j for j, c in enumerate(coords) if c}
        if not support <= parabolic:
            out.append(root)
    return out


def flag_tangent_weights(fs: FlagSpec, w: WeylElement) -> tuple[Weight, ...]:
    """Tangent weights at the fixed point of w: w applied to the complement negatives."""
    datum, _ = _datum_and_weyl(fs.spec)
    return tuple(
        weyl_act_weight(w, -beta) for beta in _complement_positive_roots(datum, fs.parabolic)
    )


def flag_model(fs: FlagSpec) -> VarietyModel:
    """The variety model: fixed points, tangent weights, Bruhat closure order."""
    datum, _ = _datum_and_weyl(fs.spec)
    reps = flag_fixed_points(fs)
    labels = [word_label(w) for w in reps]
    points = tuple(
        FixedPointData(label, flag_tangent_weights(fs, w)) for label, w in zip(labels, reps)
    )
    by_label = dict(zip(labels, reps))
    closure = {
        b: frozenset(a for a in labels if bruhat_leq(by_label[a], by_label[b]))
        for b in labels
    }
    dimension = len(_complement_positive_roots(datum, fs.parabolic))
    return VarietyModel(dimension=dimension, points=points, closure_order=closure)
