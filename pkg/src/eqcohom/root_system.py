"""Exact root-system and Weyl-group combinatorics for the supported finite types.

Coordinate conventions, fixed once for the whole package:

* a ``Weight`` is stored in the fundamental-weight basis,
  ``mu = sum(c[j] * omega_j)``;
* a ``Coweight`` is stored in the basis dual to the fundamental weights.
  For the simply-connected group the coweight lattice is the coroot lattice
  and this dual basis is the simple-coroot basis, so coweight coordinates
  are plain coroot coordinates.

With these bases the lattice pairing is the integer dot product, the simple
coroots are the standard basis vectors, and the simple roots have coordinates
equal to the columns of the Cartan matrix.  Everything stays in exact integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import IncompleteGroup, RankMismatch, UnsupportedType

Matrix = tuple[tuple[int, ...], ...]

SUPPORTED_FAMILIES = "ABCDFG"

# positive-root counts per family, used as a generation cross-check
_POSITIVE_ROOT_COUNT = {
    "A": lambda r: r * (r + 1) // 2,
    "B": lambda r: r * r,
    "C": lambda r: r * r,
    "D": lambda r: r * (r - 1),
    "F": lambda r: 24,
    "G": lambda r: 6,
}


@dataclass(frozen=True)
class RootSystemSpec:
    """An irreducible finite root system named by family letter and rank."""

    family: str
    rank: int

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.upper())
        fam, rank = self.family, self.rank
        if fam == "E":
            raise UnsupportedType("family E is not supported (desk-scale cap)")
        if fam not in SUPPORTED_FAMILIES:
            raise UnsupportedType(f"unknown family {fam!r}")
        bounds = {"A": (1, 6), "B": (2, 6), "C": (2, 6), "D": (3, 6), "F": (4, 4), "G": (2, 2)}
        lo, hi = bounds[fam]
        if not lo <= rank <= hi:
            raise UnsupportedType(f"family {fam} supports rank {lo}..{hi}, got {rank}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, name: str) -> "RootSystemSpec":
        """Parse names like "A2", "b3", "G2" (family letter case-insensitive)."""
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise UnsupportedType(f"cannot parse root system name {name!r}")
        return cls(name[0], int(name[1:]))


@dataclass(frozen=True)
class Weight:
    """Integer vector in the fundamental-weight basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def __rmul__(self, n: int) -> "Weight":
        return Weight(tuple(n * c for c in self.coords))


@dataclass(frozen=True)
class Coweight:
    """Integer vector in the basis dual to the fundamental weights (coroot coordinates)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def from_coroot_coords(cls, coords) -> "Coweight":
        """Named constructor for callers thinking in coroot coordinates.

        Storage already uses the simple-coroot basis, so this is the identity;
        it exists to make the convention explicit at call sites.
        """
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Coweight") -> "Coweight":
        _check_rank(self, other)
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-c for c in self.coords))

    def __rmul__(self, n: int) -> "Coweight":
        return Coweight(tuple(n * c for c in self.coords))


def _check_rank(a, b):
    if len(a.coords) != len(b.coords):
        raise RankMismatch(f"rank {len(a.coords)} vs {len(b.coords)}")


def pairing(lam: Coweight, mu: Weight) -> int:
    """Lattice pairing <lam, mu>; a plain dot product in the chosen bases."""
    if lam.rank != mu.rank:
        raise RankMismatch(f"coweight rank {lam.rank} vs weight rank {mu.rank}")
    return sum(a * c for a, c in zip(lam.coords, mu.coords))


@dataclass(frozen=True)
class RootDatum:
    """Cartan data of an irreducible root system in the package bases.

    ``positive_root_coords[k]`` gives the simple-root coordinates of
    ``positive_roots[k]``; these are needed for parabolic-support tests.
    """

    spec: RootSystemSpec
    cartan: Matrix
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Coweight, ...]
    fundamental_weights: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    positive_root_coords: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def positive_root_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(r.coords for r in self.positive_roots)


def _cartan_matrix(spec: RootSystemSpec) -> Matrix:
    fam, r = spec.family, spec.rank
    m = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def link(i, j, down=-1, up=-1):
        m[i][j] = down
        m[j][i] = up

    if fam in ("A", "B", "C"):
        for i in range(r - 1):
            link(i, i + 1)
        if fam == "B":
            # last simple root short: <a_{r-1}^, a_r> = -1, <a_r^, a_{r-1}> = -2
            m[r - 1][r - 2] = -2
        elif fam == "C":
            # last simple root long
            m[r - 2][r - 1] = -2
    elif fam == "D":
        for i in range(r - 2):
            link(i, i + 1)
        link(r - 3, r - 1)
    elif fam == "G":
        m[0][1] = -1
        m[1][0] = -3
    elif fam == "F":
        link(0, 1)
        link(2, 3)
        m[1][2] = -1
        m[2][1] = -2
    return tuple(tuple(row) for row in m)


def _generate_positive_roots(cartan: Matrix) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates.

    Closes the simple roots under the simple reflections, keeping vectors with
    non-negative coordinates; every positive root arises this way.
    """
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for k in frontier:
            for i in range(rank):
                p = sum(cartan[i][j] * k[j] for j in range(rank))
                refl = tuple(k[j] - (p if j == i else 0) for j in range(rank))
                if refl not in seen and all(c >= 0 for c in refl) and any(refl):
                    seen.add(refl)
                    fresh.append(refl)
        frontier = fresh
    return sorted(seen, key=lambda k: (sum(k), k))


def build_root_datum(spec: RootSystemSpec) -> RootDatum:
    """Construct the full root datum for a supported type."""
    cartan = _cartan_matrix(spec)
    r = spec.rank
    pos_coords = _generate_positive_roots(cartan)
    expected = _POSITIVE_ROOT_COUNT[spec.family](r)
    assert len(pos_coords) == expected, (spec.name, len(pos_coords), expected)
    # fundamental-weight coordinates of sum(k_j * alpha_j) are C @ k
    pos_roots = tuple(
        Weight(tuple(sum(cartan[i][j] * k[j] for j in range(r)) for i in range(r)))
        for k in pos_coords
    )
    return RootDatum(
        spec=spec,
        cartan=cartan,
        simple_roots=tuple(Weight(tuple(cartan[i][j] for i in range(r))) for j in range(r)),
        simple_coroots=tuple(
            Coweight(tuple(1 if j == i else 0 for j in range(r))) for i in range(r)
        ),
        fundamental_weights=tuple(
            Weight(tuple(1 if j == i else 0 for j in range(r))) for i in range(r)
        ),
        positive_roots=pos_roots,
        positive_root_coords=tuple(pos_coords),
    )


# ---------------------------------------------------------------------------
# Weyl elements and the group


def _matvec(m: Matrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _reflection_matrix(cartan: Matrix, i: int) -> Matrix:
    # s_i on weight coordinates: c |-> c - c_i * (column i of the Cartan matrix)
    n = len(cartan)
    return tuple(
        tuple((1 if k == j else 0) - (cartan[k][i] if j == i else 0) for j in range(n))
        for k in range(n)
    )


def _coreflection_matrix(cartan: Matrix, i: int) -> Matrix:
    # s_i on coweight coordinates is the transpose of the weight action
    n = len(cartan)
    return tuple(
        tuple((1 if k == j else 0) - (cartan[j][i] if k == i else 0) for j in range(n))
        for k in range(n)
    )


@dataclass(frozen=True)
class WeylElement:
    """A Weyl-group element with its canonical (lex-smallest) reduced word.

    ``matrix`` acts on weight coordinates, ``comatrix`` on coweight
    coordinates; the two are inverse-transposes of each other, so the pairing
    is preserved.  Word letters are 0-based simple-reflection indices.
    """

    word: tuple[int, ...]
    matrix: Matrix
    comatrix: Matrix
    cartan: Matrix = field(repr=False, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word


def word_label(w: WeylElement) -> str:
    """Stable human-readable label: "e" or 1-based letters like "121"."""
    if not w.word:
        return "e"
    return "".join(str(i + 1) for i in w.word)


def weyl_act_weight(w: WeylElement, mu: Weight) -> Weight:
    if len(w.matrix) != mu.rank:
        raise RankMismatch(f"element rank {len(w.matrix)} vs weight rank {mu.rank}")
    return Weight(_matvec(w.matrix, mu.coords))


def weyl_act_coweight(w: WeylElement, lam: Coweight) -> Coweight:
    if len(w.comatrix) != lam.rank:
        raise RankMismatch(f"element rank {len(w.comatrix)} vs coweight rank {lam.rank}")
    return Coweight(_matvec(w.comatrix, lam.coords))


class WeylGroup:
    """The complete Weyl group of a root datum, deduplicated by matrix.

    Iterates in (length, word) order.  Construct through :func:`generate_weyl`.
    """

    def __init__(self, datum: RootDatum, elements: list[WeylElement]):
        self.datum = datum
        self.elements = tuple(sorted(elements, key=lambda w: (w.length, w.word)))
        self._by_matrix = {w.matrix: w for w in self.elements}
        self._refl = [_reflection_matrix(datum.cartan, i) for i in range(datum.rank)]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w.matrix in self._by_matrix

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def simple_reflection(self, i: int) -> WeylElement:
        return self._by_matrix[self._refl[i]]

    def element_by_matrix(self, m: Matrix) -> WeylElement:
        return self._by_matrix[m]

    def left_multiply(self, i: int, w: WeylElement) -> WeylElement:
        """The canonical element s_i * w."""
        return self._by_matrix[_matmul(self._refl[i], w.matrix)]


def generate_weyl(datum: RootDatum) -> WeylGroup:
    """Generate the whole group by breadth-first closure under the simple reflections.

    Each element receives the lexicographically smallest reduced word: the
    word of w is the smallest left descent i followed by the word of s_i w.
    """
    rank = datum.rank
    cartan = datum.cartan
    refl = [_reflection_matrix(cartan, i) for i in range(rank)]
    corefl = [_coreflection_matrix(cartan, i) for i in range(rank)]

    ident = WeylElement(word=(), matrix=_identity(rank), comatrix=_identity(rank), cartan=cartan)
    elements = {ident.matrix: ident}
    frontier = {ident.matrix: ident}
    while frontier:
        discovered: dict[Matrix, Matrix] = {}
        for w in frontier.values():
            for i in range(rank):
                m = _matmul(refl[i], w.matrix)
                if m not in elements and m not in discovered:
                    discovered[m] = m
        fresh = {}
        for m in discovered:
            # smallest left descent: smallest i with s_i * (this) one level down
            for i in range(rank):
                down = _matmul(refl[i], m)
                if down in frontier:
                    parent = frontier[down]
                    elem = WeylElement(
                        word=(i,) + parent.word,
                        matrix=m,
                        comatrix=_matmul(corefl[i], parent.comatrix),
                        cartan=cartan,
                    )
                    fresh[m] = elem
                    break
        elements.update(fresh)
        frontier = fresh
    return WeylGroup(datum, list(elements.values()))


def longest_element(weyl: WeylGroup) -> WeylElement:
    """The unique element of maximal length."""
    top = max(w.length for w in weyl)
    maximal = [w for w in weyl if w.length == top]
    if len(maximal) != 1:
        raise IncompleteGroup(f"{len(maximal)} elements of maximal length {top}")
    return maximal[0]


def dominant_representative(lam: Coweight, weyl: WeylGroup) -> tuple[Coweight, WeylElement]:
    """The dominant Weyl conjugate of ``lam`` and a witness w with w(lam) dominant.

    Greedy: while some simple-root pairing is negative, reflect at the
    smallest offending index.  Idempotent on dominant input (witness e).
    """
    cartan = weyl.datum.cartan
    rank = weyl.datum.rank
    coords = list(lam.coords)
    matrix = _identity(rank)
    while True:
        for j in range(rank):
            p = sum(coords[i] * cartan[i][j] for i in range(rank))
            if p < 0:
                coords[j] -= p
                matrix = _matmul(_reflection_matrix(cartan, j), matrix)
                break
        else:
            return Coweight(tuple(coords)), weyl.element_by_matrix(matrix)


def is_dominant_coweight(lam: Coweight, datum: RootDatum) -> bool:
    """True iff the pairing with every simple root is non-negative."""
    return all(pairing(lam, alpha) >= 0 for alpha in datum.simple_roots)


def coset_representatives(weyl: WeylGroup, parabolic) -> list[WeylElement]:
    """Minimal-length representatives of the cosets modulo the parabolic subgroup.

    ``parabolic`` is a set of 0-based simple-root indices; w represents its
    coset minimally iff it sends every parabolic simple root to a positive root.
    """
    parabolic = sorted(set(parabolic))
    rank = weyl.datum.rank
    for i in parabolic:
        if not 0 <= i < rank:
            raise ValueError(f"parabolic index {i} out of range for rank {rank}")
    positives = weyl.datum.positive_root_set
    reps = [
        w
        for w in weyl
        if all(
            _matvec(w.matrix, weyl.datum.simple_roots[i].coords) in positives for i in parabolic
        )
    ]
    return reps


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the subword criterion, evaluated by descent lifting.

    Recursion: for a left descent i of v, u <= v iff (s_i u <= s_i v when i is
    a descent of u) else (u <= s_i v).  Equivalent to the reduced-subword
    criterion; the brute-force subword enumeration lives in the tests as an
    independent oracle.
    """
    if u.cartan != v.cartan:
        raise RankMismatch("elements come from different root data")
    cartan = u.cartan
    refl = [_reflection_matrix(cartan, i) for i in range(len(cartan))]

    def rec(u_mat: Matrix, u_len: int, v_word: tuple[int, ...]) -> bool:
        if u_len > len(v_word):
            return False
        if u_len == 0:
            return True
        i = v_word[0]  # first letter of a reduced word is a left descent
        su = _matmul(refl[i], u_mat)
        su_len = _length_from_matrix(su, cartan)
        if su_len < u_len:
            return rec(su, su_len, v_word[1:])
        return rec(u_mat, u_len, v_word[1:])

    return rec(u.matrix, u.length, v.word)


@lru_cache(maxsize=None)
def _positive_fw_roots(cartan: Matrix) -> tuple[tuple[tuple[int, ...], ...], frozenset]:
    """Positive roots in fundamental-weight coordinates, plus a membership set."""
    r = len(cartan)
    roots = tuple(
        tuple(sum(cartan[i][j] * k[j] for j in range(r)) for i in range(r))
        for k in _generate_positive_roots(cartan)
    )
    return roots, frozenset(roots)


def _length_from_matrix(m: Matrix, cartan: Matrix) -> int:
    """Inversion count: positive roots sent to negative roots."""
    roots, positives = _positive_fw_roots(cartan)
    return sum(1 for c in roots if _matvec(m, c) not in positives)


