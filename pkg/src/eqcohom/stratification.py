"""Poset machinery for equivariant stratifications and free-module assembly.

A stratified space is carried here purely as a finite poset of stratum labels
(the closure order: smaller = contained in more closures) together with a
per-stratum payload (codimension and equivariant Euler class of the normal
directions).  Walking the strata from maximal downward, each step contributes
one free rank-1 summand shifted by twice the codimension, provided the Euler
class is not a zero divisor; that hypothesis is enforced, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingPayload, UnknownLabel, ZeroDivisorEulerClass
from .rings import IntPolynomial, RingElement, is_nonzero_divisor


@dataclass(frozen=True)
class StratumData:
    """Per-stratum payload: complex codimension and normal Euler class."""

    codim: int
    euler: RingElement


class StratumPoset:
    """Finite labelled poset with optional stratum payloads.

    ``down[label]`` is the set of labels <= label (the closure of the
    stratum, including itself).  Payload Euler classes must sit in degree
    2*codim; that is checked on construction.
    """

    def __init__(self, labels, down, payloads=None):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate stratum labels")
        known = set(self.labels)
        if set(down) != known:
            raise UnknownLabel("closure map keys differ from the label set")
        self.down = {b: frozenset(down[b]) for b in self.labels}
        for b, below in self.down.items():
            if not below <= known:
                raise UnknownLabel(f"closure of {b!r} mentions unknown labels")
            if b not in below:
                raise ValueError(f"closure order not reflexive at {b!r}")
        for b in self.labels:
            for g in self.down[b]:
                if b in self.down[g] and b != g:
                    raise ValueError(f"closure order not antisymmetric on {b!r}, {g!r}")
                if not self.down[g] <= self.down[b]:
                    raise ValueError(f"closure order not transitive below {b!r}")
        self.up = {
            b: frozenset(g for g in self.labels if b in self.down[g]) for b in self.labels
        }
        self.payloads = {}
        for label, data in (payloads or {}).items():
            if label not in known:
                raise UnknownLabel(f"payload for unknown label {label!r}")
            if data.codim < 0:
                raise ValueError(f"negative codimension at {label!r}")
            if data.euler.degree != 2 * data.codim:
                raise ValueError(
                    f"payload at {label!r}: Euler degree {data.euler.degree} != 2*{data.codim}"
                )
            self.payloads[label] = data

    @classmethod
    def from_covers(cls, labels, covers, payloads=None) -> "StratumPoset":
        """Build from cover pairs [a, b] meaning a < b (a lies in the closure of b)."""
        labels = tuple(labels)
        known = set(labels)
        lower: dict[str, set[str]] = {b: set() for b in labels}
        for a, b in covers:
            if a not in known or b not in known:
                raise UnknownLabel(f"cover ({a!r}, {b!r}) mentions unknown labels")
            lower[b].add(a)
        down: dict[str, frozenset] = {}

        def close(b, trail):
            if b in down:
                return down[b]
            if b in trail:
                raise ValueError("closure order contains a cycle")
            acc = {b}
            for a in lower[b]:
                acc |= close(a, trail | {b})
            down[b] = frozenset(acc)
            return down[b]

        for b in labels:
            close(b, frozenset())
        return cls(labels, down, payloads)

    def leq(self, a, b) -> bool:
        return a in self.down[b]

    def to_json(self):
        covers = []
        for b in self.labels:
            strictly_below = self.down[b] - {b}
            for a in sorted(strictly_below):
                # keep only covering pairs: no c with a < c < b
                if not any(c != a and a in self.down[c] for c in strictly_below):
                    covers.append([a, b])
        return {
            "labels": list(self.labels),
            "covers": sorted(covers),
            "payload": {
                b: {"codim": d.codim, "euler": d.euler.to_json()}
                for b, d in sorted(self.payloads.items())
            },
        }

    @classmethod
    def from_json(cls, data) -> "StratumPoset":
        payloads = {
            label: StratumData(p["codim"], RingElement.from_json(p["euler"]))
            for label, p in data.get("payload", {}).items()
        }
        return cls.from_covers(data["labels"], data.get("covers", []), payloads)


def is_open(poset: StratumPoset, subset) -> bool:
    """Whether the label subset is upward closed (its union of strata is open)."""
    subset = set(subset)
    unknown = subset - set(poset.labels)
    if unknown:
        raise UnknownLabel(f"unknown labels {sorted(unknown)}")
    return all(poset.up[b] <= subset for b in subset)


def linear_extension(poset: StratumPoset) -> list:
    """Maximal-first ordering; ties broken by declared label order.

    Every prefix of the result is upward closed, which is exactly what the
    inductive assembly needs.
    """
    remaining = set(poset.labels)
    order = []
    while remaining:
        for b in poset.labels:
            if b in remaining and all(g == b or g not in remaining for g in poset.up[b]):
                order.append(b)
                remaining.discard(b)
                break
    return order


@dataclass(frozen=True)
class Generator:
    """One free summand: stratum label, degree shift 2*codim, ideal generator."""

    label: str
    shift: int
    euler: RingElement


@dataclass(frozen=True)
class GradedModuleDecomposition:
    """A free module decomposition, one generator per stratum."""

    theory: str
    generators: tuple[Generator, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def shifts(self) -> list[int]:
        return sorted(g.shift for g in self.generators)

    def to_json(self):
        return {
            "theory": self.theory,
            "rank": self.rank,
            "generators": [
                {"label": g.label, "shift": g.shift, "euler": g.euler.to_json()}
                for g in self.generators
            ],
        }


def assemble_module(poset: StratumPoset, theory: str, order=None) -> GradedModuleDecomposition:
    """Walk a maximal-first order and emit one free generator per stratum.

    Each stratum must carry a payload in the requested theory whose Euler class
    passes :func:`is_nonzero_divisor`; that is the injectivity hypothesis that
    collapses each long exact sequence step to a short exact one.  ``order``
    may supply an alternative walk, which must itself be a legal maximal-first
    sequence (every prefix open).
    """
    if order is None:
        order = linear_extension(poset)
    else:
        order = list(order)
        if sorted(order) != sorted(poset.labels):
            raise ValueError("order must enumerate exactly the poset labels")
        for k in range(1, len(order) + 1):
            if not is_open(poset, order[:k]):
                raise ValueError(f"prefix {order[:k]} is not open")
    generators = []
    for label in order:
        data = poset.payloads.get(label)
        if data is None:
            raise MissingPayload(label)
        if data.euler.theory != theory:
            raise MissingPayload(label)
        if not is_nonzero_divisor(data.euler):
            detail = "zero element" if data.euler.is_zero else "sufficient criterion failed"
            raise ZeroDivisorEulerClass(label, detail)
        generators.append(Generator(label, 2 * data.codim, data.euler))
    return GradedModuleDecomposition(theory, tuple(generators))


def poincare_series(dec: GradedModuleDecomposition) -> IntPolynomial:
    """Sum of q^shift over the generators, as a one-variable polynomial in q."""
    terms: dict[tuple[int], int] = {}
    for g in dec.generators:
        key = (g.shift,)
        terms[key] = terms.get(key, 0) + 1
    return IntPolynomial(1, terms)


def render_poincare(series: IntPolynomial) -> str:
    if series.is_zero:
        return "0"
    parts = []
    for (shift,), count in sorted(series.terms.items()):
        if shift == 0:
            parts.append(str(count))
        else:
            q = f"q^{shift}" if shift != 1 else "q"
            parts.append(q if count == 1 else f"{count}*{q}")
    return " + ".join(parts)


def check_stratification(poset: StratumPoset, closures) -> bool:
    """Whether the given closure sets match the poset's down-sets exactly."""
    missing = set(poset.labels) - set(closures)
    if missing:
        raise UnknownLabel(f"no closure given for {sorted(missing)}")
    extra = set(closures) - set(poset.labels)
    if extra:
        raise UnknownLabel(f"closures for unknown labels {sorted(extra)}")
    return all(frozenset(closures[b]) == poset.down[b] for b in poset.labels)
