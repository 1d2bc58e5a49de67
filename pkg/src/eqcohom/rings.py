"""Exact arithmetic in the three coefficient rings, with equivariant Euler classes.

Element kinds and their variable conventions:

* ``IntPolynomial`` — ZZ[x1..xr].  Variable xj is the degree-2 class attached
  to the j-th basis character of the torus (the j-th fundamental weight), so a
  weight with coordinates (n1..nr) has linear form n1*x1 + ... + nr*xr.
* ``LaurentPolynomial`` — the group ring of the character lattice, basis
  monomials e^(n1,...,nr).  Carries no internal grading; the even degree tag
  travels on the wrapping :class:`RingElement`.
* ``TruncatedMUElement`` — polynomial in the Chern variables x1..xr (degree 2
  each) and the universal formal-group-law coefficients a_ij (degree
  -2(i+j-1)), truncated above Chern degree D: monomials whose x-exponents sum
  past D/2 are dropped.  The a_ij are kept as free symmetric generators; the
  first relation among them that associativity would impose lies beyond
  Chern degree 6, so formal-sum identities hold on the nose for D <= 6.

All coefficients are arbitrary-precision integers; nothing here floats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RankMismatch, TruncationMismatch, ZeroWeight
from .root_system import Weight

THEORIES = ("H", "K", "MU")


def _validate_exponents(terms, nvars, allow_negative):
    clean = {}
    for exp, coeff in terms.items():
        exp = tuple(int(e) for e in exp)
        if len(exp) != nvars:
            raise RankMismatch(f"exponent vector {exp} has length != {nvars}")
        if not allow_negative and any(e < 0 for e in exp):
            raise ValueError(f"negative exponent in {exp}")
        coeff = int(coeff)
        if coeff:
            clean[exp] = clean.get(exp, 0) + coeff
    return {e: c for e, c in clean.items() if c}


class IntPolynomial:
    """Sparse integer polynomial; map from exponent vectors to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = int(nvars)
        self.terms = _validate_exponents(terms or {}, self.nvars, allow_negative=False)

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "IntPolynomial":
        return cls.constant(1, nvars)

    @classmethod
    def variable(cls, j: int, nvars: int) -> "IntPolynomial":
        return cls(nvars, {tuple(1 if k == j else 0 for k in range(nvars)): 1})

    @classmethod
    def linear_form(cls, coords) -> "IntPolynomial":
        coords = tuple(coords)
        n = len(coords)
        return cls(n, {tuple(1 if k == j else 0 for k in range(n)): c for j, c in enumerate(coords) if c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def graded_degree(self):
        """Cohomological degree 2*(top total exponent); None for the zero polynomial."""
        if not self.terms:
            return None
        return 2 * max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def _coerce(self, other):
        if isinstance(other, int):
            return IntPolynomial.constant(other, self.nvars)
        if isinstance(other, IntPolynomial):
            if other.nvars != self.nvars:
                raise RankMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return IntPolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return IntPolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPolynomial.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other, self.nvars)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        """Graded-lex ordering on exponent vectors, top degree first."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def render(self, names=None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{j + 1}" for j in range(self.nvars)]
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = [
                names[j] if e == 1 else f"{names[j]}^{e}" for j, e in enumerate(exp) if e
            ]
            body = "*".join(factors)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self.render()})"


class LaurentPolynomial:
    """Sparse Laurent polynomial: integer combinations of e^(n1..nr), nj in ZZ."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = int(nvars)
        self.terms = _validate_exponents(terms or {}, self.nvars, allow_negative=True)

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls.constant(1, nvars)

    @classmethod
    def character(cls, coords) -> "LaurentPolynomial":
        """The basis monomial e^mu for a weight with the given coordinates."""
        coords = tuple(int(c) for c in coords)
        return cls(len(coords), {coords: 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.nvars)
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise RankMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other, self.nvars)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            if any(exp):
                body = "e^(" + ",".join(str(e) for e in exp) + ")"
                text = body if abs(coeff) == 1 else f"{abs(coeff)}*{body}"
            else:
                text = str(abs(coeff))
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"LaurentPolynomial({self.render()})"


# ---------------------------------------------------------------------------
# Ordinary cohomology and K-theory Euler classes


def _weights_nvars(weights, nvars):
    ws = list(weights)
    ranks = {w.rank for w in ws}
    if len(ranks) > 1:
        raise RankMismatch(f"mixed weight ranks {sorted(ranks)}")
    if nvars is None:
        if not ws:
            raise RankMismatch("empty weight multiset needs an explicit nvars")
        nvars = ws[0].rank
    elif ws and ws[0].rank != nvars:
        raise RankMismatch(f"weights have rank {ws[0].rank}, expected {nvars}")
    for w in ws:
        if w.is_zero:
            raise ZeroWeight("zero weight in Euler-class multiset")
    return ws, nvars


def euler_H(weights, nvars=None) -> IntPolynomial:
    """Product of the weights as degree-2 linear forms."""
    ws, nvars = _weights_nvars(weights, nvars)
    out = IntPolynomial.one(nvars)
    for w in ws:
        out = out * IntPolynomial.linear_form(w.coords)
    return out


def euler_K(weights, nvars=None) -> LaurentPolynomial:
    """Product of 1 - e^mu over the multiset."""
    ws, nvars = _weights_nvars(weights, nvars)
    out = LaurentPolynomial.one(nvars)
    for w in ws:
        out = out * (LaurentPolynomial.one(nvars) - LaurentPolynomial.character(w.coords))
    return out


# ---------------------------------------------------------------------------
# Truncated universal formal group law


@dataclass(frozen=True)
class FGLTruncation:
    """The universal one-dimensional commutative formal group law, truncated.

    ``degree`` is the even Chern-degree cutoff D.  Coefficients a_ij (i <= j,
    kept symmetric) are opaque generators; only those that can appear below
    the cutoff, i.e. with 2*(i+j) <= D, are ever instantiated.
    """

    degree: int = 6

    def __post_init__(self):
        if self.degree < 2 or self.degree % 2:
            raise ValueError("truncation degree must be an even integer >= 2")

    @property
    def max_x_exponent(self) -> int:
        return self.degree // 2

    def generators(self):
        """Index pairs (i, j), i <= j, of the coefficients surviving truncation."""
        out = []
        for total in range(2, self.max_x_exponent + 1):
            for i in range(1, total // 2 + 1):
                out.append((i, total - i))
        return out


def _normalize_mu_terms(terms, nvars, max_x):
    clean = {}
    for (xexp, aexp), coeff in terms.items():
        xexp = tuple(int(e) for e in xexp)
        if len(xexp) != nvars:
            raise RankMismatch(f"x-exponent vector {xexp} has length != {nvars}")
        if sum(xexp) > max_x:
            continue
        aexp = tuple(sorted(((i, j), int(p)) for (i, j), p in aexp if p))
        coeff = int(coeff)
        if not coeff:
            continue
        key = (xexp, aexp)
        clean[key] = clean.get(key, 0) + coeff
    return {k: c for k, c in clean.items() if c}


class TruncatedMUElement:
    """Polynomial in Chern variables and formal-group-law coefficients.

    Term keys are ``(x_exponents, a_exponents)`` with ``a_exponents`` a sorted
    tuple of ``((i, j), power)``.  Monomials whose Chern degree 2*sum(x_exp)
    exceeds the truncation are dropped on construction, so all arithmetic is
    automatically reduced.
    """

    __slots__ = ("nvars", "truncation", "terms")

    def __init__(self, nvars: int, truncation: int, terms=None):
        self.nvars = int(nvars)
        self.truncation = int(truncation)
        self.terms = _normalize_mu_terms(terms or {}, self.nvars, self.truncation // 2)

    @classmethod
    def zero(cls, nvars: int, truncation: int) -> "TruncatedMUElement":
        return cls(nvars, truncation)

    @classmethod
    def constant(cls, c: int, nvars: int, truncation: int) -> "TruncatedMUElement":
        return cls(nvars, truncation, {((0,) * nvars, ()): c})

    @classmethod
    def one(cls, nvars: int, truncation: int) -> "TruncatedMUElement":
        return cls.constant(1, nvars, truncation)

    @classmethod
    def variable(cls, j: int, nvars: int, truncation: int) -> "TruncatedMUElement":
        xexp = tuple(1 if k == j else 0 for k in range(nvars))
        return cls(nvars, truncation, {(xexp, ()): 1})

    @classmethod
    def fgl_coefficient(cls, i: int, j: int, nvars: int, truncation: int) -> "TruncatedMUElement":
        i, j = min(i, j), max(i, j)
        return cls(nvars, truncation, {((0,) * nvars, (((i, j), 1),)): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> int:
        return self.terms.get(((0,) * self.nvars, ()), 0)

    def _mixed_degree(self, key) -> int:
        xexp, aexp = key
        return 2 * sum(xexp) - sum(2 * (i + j - 1) * p for (i, j), p in aexp)

    def graded_degree(self):
        """Common mixed degree (Chern minus coefficient degrees); None if zero or mixed."""
        if not self.terms:
            return None
        degrees = {self._mixed_degree(k) for k in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def additive_part(self) -> IntPolynomial:
        """Terms free of formal-group-law coefficients, as an ordinary polynomial."""
        return IntPolynomial(
            self.nvars, {xexp: c for (xexp, aexp), c in self.terms.items() if not aexp}
        )

    def _coerce(self, other):
        if isinstance(other, int):
            return TruncatedMUElement.constant(other, self.nvars, self.truncation)
        if isinstance(other, TruncatedMUElement):
            if other.nvars != self.nvars:
                raise RankMismatch(f"{self.nvars} vs {other.nvars} Chern variables")
            if other.truncation != self.truncation:
                raise TruncationMismatch(f"{self.truncation} vs {other.truncation}")
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return TruncatedMUElement(self.nvars, self.truncation, terms)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedMUElement(self.nvars, self.truncation, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        max_x = self.truncation // 2
        terms = {}
        for (x1, a1), c1 in self.terms.items():
            for (x2, a2), c2 in other.terms.items():
                xexp = tuple(p + q for p, q in zip(x1, x2))
                if sum(xexp) > max_x:
                    continue
                powers = dict(a1)
                for ij, p in a2:
                    powers[ij] = powers.get(ij, 0) + p
                key = (xexp, tuple(sorted(powers.items())))
                terms[key] = terms.get(key, 0) + c1 * c2
        return TruncatedMUElement(self.nvars, self.truncation, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = TruncatedMUElement.one(self.nvars, self.truncation)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncatedMUElement.constant(other, self.nvars, self.truncation)
        if not isinstance(other, TruncatedMUElement):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.truncation == other.truncation
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.truncation, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0][0]), tuple(-e for e in kv[0][0]), kv[0][1]),
        )

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xexp, aexp), coeff in self.sorted_terms():
            factors = [f"a{i}{j}" if p == 1 else f"a{i}{j}^{p}" for (i, j), p in aexp]
            factors += [f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(xexp) if e]
            body = "*".join(factors)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)}*{body}"
            parts.append(("-" if coeff < 0 else "+", text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"TruncatedMUElement(D={self.truncation}, {self.render()})"


def _check_fgl_args(u: TruncatedMUElement, v: TruncatedMUElement, fgl: FGLTruncation):
    if u.truncation != fgl.degree or v.truncation != fgl.degree:
        raise TruncationMismatch(
            f"elements truncated at {u.truncation}/{v.truncation}, law at {fgl.degree}"
        )
    if u.nvars != v.nvars:
        raise RankMismatch(f"{u.nvars} vs {v.nvars} Chern variables")
    if u.constant_term or v.constant_term:
        raise ValueError("formal sums are defined only for elements without constant term")


def fgl_sum(u: TruncatedMUElement, v: TruncatedMUElement, fgl: FGLTruncation) -> TruncatedMUElement:
    """F(u, v) = u + v + sum a_ij u^i v^j, truncated.  Unital and commutative."""
    _check_fgl_args(u, v, fgl)
    out = u + v
    for i, j in fgl.generators():
        a = TruncatedMUElement.fgl_coefficient(i, j, u.nvars, fgl.degree)
        cross = a * (u**i) * (v**j)
        if i != j:
            cross = cross + a * (u**j) * (v**i)
        out = out + cross
    return out


def fgl_inverse(u: TruncatedMUElement, fgl: FGLTruncation) -> TruncatedMUElement:
    """The formal inverse: the unique i(u) with F(u, i(u)) = 0 up to truncation."""
    _check_fgl_args(u, u, fgl)
    inv = -u
    # each pass clears one more Chern degree; D/2 passes reach the cutoff
    for _ in range(fgl.max_x_exponent):
        inv = inv - fgl_sum(u, inv, fgl)
    return inv


def fgl_multiple(n: int, u: TruncatedMUElement, fgl: FGLTruncation) -> TruncatedMUElement:
    """The n-series [n](u): the n-fold formal sum, with [-n](u) = [n](inverse)."""
    if n < 0:
        return fgl_multiple(-n, fgl_inverse(u, fgl), fgl)
    out = TruncatedMUElement.zero(u.nvars, u.truncation)
    for _ in range(n):
        out = fgl_sum(out, u, fgl)
    return out


def euler_MU(weights, fgl: FGLTruncation | None = None, nvars=None) -> TruncatedMUElement:
    """Product over the multiset of per-weight classes [n1](x1) +_F ... +_F [nr](xr).

    A weight with coordinates (n1..nr) in the character basis contributes the
    formal sum of the nj-series of the matching Chern variables; formal sums
    are folded in ascending variable order.
    """
    fgl = fgl or FGLTruncation()
    ws, nvars = _weights_nvars(weights, nvars)
    out = TruncatedMUElement.one(nvars, fgl.degree)
    for w in ws:
        cls = TruncatedMUElement.zero(nvars, fgl.degree)
        for j, n in enumerate(w.coords):
            if n:
                term = fgl_multiple(n, TruncatedMUElement.variable(j, nvars, fgl.degree), fgl)
                cls = fgl_sum(cls, term, fgl)
        out = out * cls
    return out


# ---------------------------------------------------------------------------
# The tagged union and cross-theory operations


@dataclass(frozen=True)
class RingElement:
    """A coefficient-ring element tagged with its theory and even degree."""

    theory: str
    value: object
    degree: int

    _VARIANTS = {"H": IntPolynomial, "K": LaurentPolynomial, "MU": TruncatedMUElement}

    def __post_init__(self):
        if self.theory not in THEORIES:
            raise ValueError(f"unknown theory {self.theory!r}")
        if not isinstance(self.value, self._VARIANTS[self.theory]):
            raise ValueError(
                f"theory {self.theory} requires {self._VARIANTS[self.theory].__name__}, "
                f"got {type(self.value).__name__}"
            )
        if self.degree % 2:
            raise ValueError("grading degrees are even")

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def render(self) -> str:
        return self.value.render()

    def to_json(self):
        if self.theory == "MU":
            terms = [
                {"x": list(x), "a": [[list(ij), p] for ij, p in a], "coeff": c}
                for (x, a), c in self.value.sorted_terms()
            ]
            extra = {"truncation": self.value.truncation}
        else:
            terms = [{"exp": list(e), "coeff": c} for e, c in self.value.sorted_terms()]
            extra = {}
        return {
            "theory": self.theory,
            "degree": self.degree,
            "nvars": self.value.nvars,
            "render": self.render(),
            "terms": terms,
            **extra,
        }

    @classmethod
    def from_json(cls, data) -> "RingElement":
        theory = data["theory"]
        nvars = data["nvars"]
        if theory == "MU":
            terms = {
                (tuple(t["x"]), tuple((tuple(ij), p) for ij, p in t["a"])): t["coeff"]
                for t in data["terms"]
            }
            value = TruncatedMUElement(nvars, data["truncation"], terms)
        elif theory == "K":
            value = LaurentPolynomial(nvars, {tuple(t["exp"]): t["coeff"] for t in data["terms"]})
        else:
            value = IntPolynomial(nvars, {tuple(t["exp"]): t["coeff"] for t in data["terms"]})
        return cls(theory, value, data["degree"])


def euler_class(theory: str, weights, nvars=None, fgl: FGLTruncation | None = None) -> RingElement:
    """The equivariant Euler class of a weight multiset in the chosen theory."""
    ws = list(weights)
    degree = 2 * len(ws)
    if theory == "H":
        return RingElement("H", euler_H(ws, nvars), degree)
    if theory == "K":
        return RingElement("K", euler_K(ws, nvars), degree)
    if theory == "MU":
        return RingElement("MU", euler_MU(ws, fgl, nvars), degree)
    raise ValueError(f"unknown theory {theory!r}")


def is_nonzero_divisor(elem: RingElement) -> bool:
    """Whether the element is certified not to divide zero.

    H and K live in integral domains, so nonzero suffices and is exact.  For
    the truncated MU model the test is the documented sufficient criterion:
    the additive specialization (the ordinary-cohomology image, the lowest
    Chern-degree part) must be nonzero.
    """
    if elem.theory in ("H", "K"):
        return not elem.value.is_zero
    return not elem.value.additive_part().is_zero


def specialize_fgl(elem, target: str) -> RingElement:
    """Push a truncated MU element along a formal-group-law specialization.

    ``additive`` kills every a_ij, landing in the ordinary-cohomology
    polynomial ring on the same variables.  ``multiplicative`` sends a11 to
    -beta and the other a_ij to zero, where beta is a formal unit appended as
    one extra polynomial variable after the Chern variables.
    """
    if isinstance(elem, RingElement):
        if elem.theory != "MU":
            raise ValueError("specialize_fgl expects an MU element")
        value, degree = elem.value, elem.degree
    else:
        value = elem
        degree = value.graded_degree() or 0
    if target == "additive":
        return RingElement("H", value.additive_part(), degree)
    if target != "multiplicative":
        raise ValueError(f"unknown specialization target {target!r}")
    nvars = value.nvars
    terms = {}
    for (xexp, aexp), coeff in value.terms.items():
        others = [(ij, p) for ij, p in aexp if ij != (1, 1)]
        if others:
            continue
        beta_power = dict(aexp).get((1, 1), 0)
        key = xexp + (beta_power,)
        terms[key] = terms.get(key, 0) + coeff * (-1) ** beta_power
    return RingElement("H", IntPolynomial(nvars + 1, terms), degree)
