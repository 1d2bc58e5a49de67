import random

import pytest

from eqcohom.errors import IncompleteGroup, RankMismatch, UnsupportedType
from eqcohom.root_system import (
    Coweight,
    RootSystemSpec,
    Weight,
    bruhat_leq,
    build_root_datum,
    coset_representatives,
    dominant_representative,
    generate_weyl,
    is_dominant_coweight,
    longest_element,
    pairing,
    weyl_act_coweight,
    weyl_act_weight,
    word_label,
)

from oracles import bruhat_leq_subword, inversion_count, weyl_matrices_by_closure


def datum(name):
    return build_root_datum(RootSystemSpec.parse(name))


# -- specs and data ---------------------------------------------------------


def test_spec_validation():
    assert RootSystemSpec.parse("a2").name == "A2"
    with pytest.raises(UnsupportedType):
        RootSystemSpec("E", 6)
    with pytest.raises(UnsupportedType):
        RootSystemSpec("A", 7)
    with pytest.raises(UnsupportedType):
        RootSystemSpec("G", 3)
    with pytest.raises(UnsupportedType):
        RootSystemSpec("D", 2)
    with pytest.raises(UnsupportedType):
        RootSystemSpec.parse("Q2")


def test_a1_datum():
    d = datum("A1")
    assert d.cartan == ((2,),)
    assert d.positive_roots == (Weight((2,)),)  # alpha = 2*omega


def test_positive_root_counts_match_longest_length():
    # independent route: |Phi+| equals the length of the longest element
    for name in ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"]:
        d = datum(name)
        w0 = longest_element(generate_weyl(d))
        assert len(d.positive_roots) == w0.length, name


def test_datum_duality_invariants():
    for name in ["A2", "B2", "G2", "C3", "D4", "F4"]:
        d = datum(name)
        r = d.rank
        for i in range(r):
            for j in range(r):
                assert pairing(d.simple_coroots[i], d.simple_roots[j]) == d.cartan[i][j]
                assert pairing(d.simple_coroots[i], d.fundamental_weights[j]) == (i == j)


def test_pairing_examples():
    a1 = datum("A1")
    assert pairing(a1.simple_coroots[0], a1.fundamental_weights[0]) == 1
    assert pairing(a1.simple_coroots[0], a1.simple_roots[0]) == 2
    a2 = datum("A2")
    # rho-check = alpha1-check + alpha2-check against the highest root alpha1+alpha2
    rho_check = a2.simple_coroots[0] + a2.simple_coroots[1]
    theta = a2.simple_roots[0] + a2.simple_roots[1]
    assert pairing(rho_check, theta) == 2


def test_pairing_rank_mismatch():
    with pytest.raises(RankMismatch):
        pairing(Coweight((1,)), Weight((1, 0)))


# -- Weyl groups ------------------------------------------------------------

GROUP_ORDERS = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "B3": 48, "D4": 192}


def test_group_orders_against_closure_oracle():
    for name, order in GROUP_ORDERS.items():
        d = datum(name)
        weyl = generate_weyl(d)
        assert len(weyl) == order, name
        assert {w.matrix for w in weyl} == weyl_matrices_by_closure(d), name


def test_group_orders_desk_scale():
    # the larger supported ranks, against the closed-form orders
    for name, order in [("A5", 720), ("B5", 3840), ("C5", 3840), ("D5", 1920), ("F4", 1152), ("D6", 23040)]:
        weyl = generate_weyl(datum(name))
        assert len(weyl) == order, name


def test_words_are_reduced_and_lex_smallest():
    for name in ["A2", "B2", "G2", "A3"]:
        weyl = generate_weyl(datum(name))
        seen = set()
        for w in weyl:
            assert w.word not in seen
            seen.add(w.word)
            assert w.length == inversion_count(w, weyl.datum), (name, w.word)
            # lex-smallest: no strictly smaller first letter gives a shorter element
            if w.word:
                for i in range(w.word[0]):
                    assert weyl.left_multiply(i, w).length > w.length


def test_length_equals_inversion_count_rank_four_groups():
    for name in ["A4", "B4", "C4", "D4", "F4"]:
        weyl = generate_weyl(datum(name))
        for w in weyl:
            assert w.length == inversion_count(w, weyl.datum)


def test_longest_element():
    a1 = generate_weyl(datum("A1"))
    assert longest_element(a1).length == 1
    a2 = generate_weyl(datum("A2"))
    w0 = longest_element(a2)
    assert w0.length == 3
    b2 = generate_weyl(datum("B2"))
    assert longest_element(b2).length == 4
    # w0 sends every positive root negative
    positives = a2.datum.positive_root_set
    for beta in a2.datum.positive_roots:
        assert weyl_act_weight(w0, beta).coords not in positives


def test_longest_element_incomplete_group():
    weyl = generate_weyl(datum("A2"))
    crippled = type(weyl)(weyl.datum, [w for w in weyl if w.length <= 1])
    with pytest.raises(IncompleteGroup):
        longest_element(crippled)


def test_weyl_action_examples():
    a1 = generate_weyl(datum("A1"))
    s = a1.simple_reflection(0)
    alpha = a1.datum.simple_roots[0]
    assert weyl_act_weight(a1.identity, alpha) == alpha
    assert weyl_act_weight(s, alpha) == -alpha
    a2 = generate_weyl(datum("A2"))
    w0 = longest_element(a2)
    omega1, omega2 = a2.datum.fundamental_weights
    assert weyl_act_weight(w0, omega1) == -omega2


def test_pairing_invariance_random():
    rng = random.Random(7)
    for name in ["A2", "B2", "G2", "A3", "C3", "D4", "F4", "A5"]:
        weyl = generate_weyl(datum(name))
        r = weyl.datum.rank
        elements = list(weyl)
        for _ in range(100):
            w = rng.choice(elements)
            lam = Coweight(tuple(rng.randint(-4, 4) for _ in range(r)))
            mu = Weight(tuple(rng.randint(-4, 4) for _ in range(r)))
            assert pairing(weyl_act_coweight(w, lam), weyl_act_weight(w, mu)) == pairing(lam, mu)


# -- dominant representatives ------------------------------------------------


def test_dominant_representative_examples():
    a1 = generate_weyl(datum("A1"))
    lam = Coweight((3,))
    dom, wit = dominant_representative(lam, a1)
    assert dom == lam and wit.is_identity
    dom, wit = dominant_representative(Coweight((-1,)), a1)
    assert dom == Coweight((1,)) and wit.length == 1


def test_dominant_representative_against_orbit_oracle():
    for name in ["A2", "B2", "G2"]:
        weyl = generate_weyl(datum(name))
        r = weyl.datum.rank
        for coords in [(1, 0), (0, -2), (-1, 3), (2, -1), (-2, -2), (1, 1)]:
            lam = Coweight(coords[:r])
            dom, wit = dominant_representative(lam, weyl)
            assert weyl_act_coweight(wit, lam) == dom
            assert is_dominant_coweight(dom, weyl.datum)
            # oracle: the dominant conjugate, found by scanning the orbit, is unique
            orbit_doms = {
                weyl_act_coweight(w, lam).coords
                for w in weyl
                if is_dominant_coweight(weyl_act_coweight(w, lam), weyl.datum)
            }
            assert orbit_doms == {dom.coords}
            # idempotence
            dom2, wit2 = dominant_representative(dom, weyl)
            assert dom2 == dom and wit2.is_identity


# -- cosets and Bruhat order --------------------------------------------------


def test_coset_representatives():
    a2 = generate_weyl(datum("A2"))
    assert [w.word for w in coset_representatives(a2, range(2))] == [()]
    assert len(coset_representatives(a2, [])) == 6
    reps = coset_representatives(a2, [0])
    assert len(reps) == 3
    positives = a2.datum.positive_root_set
    for w in reps:
        assert weyl_act_weight(w, a2.datum.simple_roots[0]).coords in positives


def test_coset_representative_counts():
    for name, parabolic, count in [
        ("B2", [0], 4),
        ("B2", [1], 4),
        ("A3", [0], 12),
        ("A3", [0, 1], 4),
        ("A3", [0, 2], 6),
    ]:
        weyl = generate_weyl(datum(name))
        assert len(coset_representatives(weyl, parabolic)) == count, (name, parabolic)


def test_bruhat_examples():
    a2 = generate_weyl(datum("A2"))
    by_label = {word_label(w): w for w in a2}
    e, s1, s2, s12 = by_label["e"], by_label["1"], by_label["2"], by_label["12"]
    for w in a2:
        assert bruhat_leq(e, w)
        assert bruhat_leq(w, w)
    assert bruhat_leq(s1, s12)
    assert not bruhat_leq(s1, s2)


def test_bruhat_against_subword_oracle_all_pairs():
    for name in ["A2", "B2", "A3"]:
        weyl = generate_weyl(datum(name))
        for u in weyl:
            for v in weyl:
                assert bruhat_leq(u, v) == bruhat_leq_subword(u, v), (name, u.word, v.word)


def test_bruhat_antisymmetry_and_transitivity():
    weyl = generate_weyl(datum("B2"))
    elems = list(weyl)
    for u in elems:
        for v in elems:
            if bruhat_leq(u, v) and bruhat_leq(v, u):
                assert u == v
            for w in elems:
                if bruhat_leq(u, v) and bruhat_leq(v, w):
                    assert bruhat_leq(u, w)
