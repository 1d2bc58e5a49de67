from collections import Counter

import pytest

from eqcohom.bb import module_structure
from eqcohom.flags import FlagSpec, flag_fixed_points, flag_model, flag_tangent_weights
from eqcohom.rings import IntPolynomial
from eqcohom.root_system import (
    RootSystemSpec,
    Weight,
    build_root_datum,
    coset_representatives,
    generate_weyl,
    weyl_act_weight,
    word_label,
)
from eqcohom.stratification import check_stratification, poincare_series


def fs(name, parabolic=()):
    return FlagSpec(RootSystemSpec.parse(name), frozenset(parabolic))


def brute_length_series(name, parabolic=()):
    """Oracle: sum of q^(2*length) over minimal coset representatives."""
    weyl = generate_weyl(build_root_datum(RootSystemSpec.parse(name)))
    terms = {}
    for w in coset_representatives(weyl, parabolic):
        key = (2 * w.length,)
        terms[key] = terms.get(key, 0) + 1
    return IntPolynomial(1, terms)


def test_flag_spec_validation():
    with pytest.raises(ValueError):
        fs("A2", [5])


def test_flag_fixed_points():
    assert [word_label(w) for w in flag_fixed_points(fs("A1"))] == ["e", "1"]
    assert len(flag_fixed_points(fs("A2"))) == 6
    assert len(flag_fixed_points(fs("A2", [0]))) == 3


def test_flag_tangent_weights_a1():
    reps = {word_label(w): w for w in flag_fixed_points(fs("A1"))}
    assert flag_tangent_weights(fs("A1"), reps["e"]) == (Weight((-2,)),)
    assert flag_tangent_weights(fs("A1"), reps["1"]) == (Weight((2,)),)


def test_flag_tangent_weights_a2_base_point():
    reps = {word_label(w): w for w in flag_fixed_points(fs("A2"))}
    datum = build_root_datum(RootSystemSpec.parse("A2"))
    expected = {(-w).coords for w in datum.positive_roots}
    got = {w.coords for w in flag_tangent_weights(fs("A2"), reps["e"])}
    assert got == expected


def test_flag_model_shapes():
    m = flag_model(fs("A1"))
    assert m.dimension == 1 and len(m.points) == 2
    # the projective-line model: weight multisets are {alpha} and {-alpha}
    assert Counter(p.tangent_weights for p in m.points) == Counter(
        [(Weight((2,)),), (Weight((-2,)),)]
    )
    m2 = flag_model(fs("A2"))
    assert m2.dimension == 3 and len(m2.points) == 6
    m3 = flag_model(fs("A2", [0]))
    assert m3.dimension == 2 and len(m3.points) == 3


def test_closure_order_is_bruhat_downsets():
    m = flag_model(fs("A2"))
    from eqcohom.bb import bb_stratify, generic_coweight

    poset = bb_stratify(m, generic_coweight(m), "H")
    closures = {b: set(m.closure_order[b]) for b in m.labels}
    assert check_stratification(poset, closures)


def test_weights_transform_under_weyl():
    spec = fs("B2")
    reps = flag_fixed_points(spec)
    base = flag_tangent_weights(spec, reps[0])
    assert reps[0].is_identity
    for w in reps:
        expected = Counter(weyl_act_weight(w, beta).coords for beta in base)
        got = Counter(beta.coords for beta in flag_tangent_weights(spec, w))
        assert got == expected, word_label(w)


@pytest.mark.parametrize(
    "name,parabolic",
    [
        ("A2", ()),
        ("A2", (0,)),
        ("A2", (1,)),
        ("B2", ()),
        ("B2", (0,)),
        ("B2", (1,)),
        ("A3", ()),
        ("A3", (0,)),
        ("A3", (1,)),
        ("A3", (2,)),
    ],
)
def test_flag_series_matches_length_enumeration(name, parabolic):
    model = flag_model(fs(name, parabolic))
    dec = module_structure(model, "H")
    assert dec.rank == len(model.points)
    assert poincare_series(dec) == brute_length_series(name, parabolic)


def test_flag_series_all_theories_agree():
    model = flag_model(fs("B2"))
    series = {t: poincare_series(module_structure(model, t)) for t in ("H", "K", "MU")}
    assert series["H"] == series["K"] == series["MU"]
