"""Diagram words, straightening, bending, and hom-space operations."""

import random

import pytest

from skeinhc.errors import DomainError
from skeinhc.hecke_clifford import (
    e_element,
    identity_element,
    multiply,
    t_element,
)
from skeinhc.scalars import I, ONE, QIQ
from skeinhc.skein import (
    Cap,
    Crossing,
    Cup,
    HomElement,
    Ladder,
    basis_indices,
    evaluate,
    format_diagram_word,
    g_projection,
    hom_basis_element,
    hom_from_json,
    hom_to_json,
    identity_hom,
    insert_random_identities,
    ladder_normalization,
    parse_diagram_word,
    random_diagram_word,
    straighten,
)
from skeinhc.trace_gram import categorical_trace, markov_trace

D = QIQ.loop
Z = QIQ.z


def t_hom(n=2, j=0):
    return HomElement.unbend(t_element(n, j), "+" * n, "+" * n)


def e_hom(n=2, j=0):
    return HomElement.unbend(e_element(n, j), "+" * n, "+" * n)


# -- rigidity, loops, curls --------------------------------------------------


def test_zig_zags():
    assert evaluate([Cup(0, "+-"), Cap(1)], "+") == identity_hom("+")
    assert evaluate([Cup(1, "-+"), Cap(0)], "+") == identity_hom("+")
    assert evaluate([Cup(2, "+-"), Cap(1)], "+-") == identity_hom("+-")
    assert evaluate([Cup(0, "-+"), Cap(1)], "-") == identity_hom("-")


def test_loops():
    for pair in ("+-", "-+"):
        loop = evaluate([Cup(0, pair), Cap(0)], "")
        assert loop == identity_hom("").scale(D)
    beside = evaluate([Cup(2, "+-"), Cap(2)], "+-")
    assert beside == identity_hom("+-").scale(D)


def test_curls():
    assert straighten(
        [Cup(1, "+-"), Crossing(0, True), Cap(1)], 1
    ) == identity_element(1).scale(I)
    assert straighten(
        [Cup(1, "+-"), Crossing(0, False), Cap(1)], 1
    ) == identity_element(1).scale(-I)
    assert straighten(
        [Cup(0, "-+"), Crossing(1, True), Cap(0)], 1
    ) == identity_element(1).scale(I)


def test_single_leg_ladder_closures_vanish():
    assert straighten([Cup(1, "+-"), Ladder(0), Cap(1)], 1).is_zero
    assert straighten([Cup(0, "-+"), Ladder(1), Cap(0)], 1).is_zero


def test_closed_loop_beside_identity():
    word = [Cup(1, "+-"), Cap(1)]
    assert straighten(word, 1) == identity_element(1).scale(D)


# -- straighten --------------------------------------------------------------


def test_straighten_letters():
    assert straighten([Crossing(0, True)], 2) == t_element(2, 0)
    assert straighten([Crossing(0, False)], 2) == t_element(2, 0, inverse=True)
    assert straighten([Ladder(0)], 2) == e_element(2, 0)


def test_straighten_requires_endomorphism():
    with pytest.raises(DomainError):
        straighten([Cup(0, "+-")], 1)


def test_straighten_well_defined_under_rewrites():
    rng = random.Random(101)
    for _ in range(25):
        n = rng.randint(1, 3)
        word = random_diagram_word(n, rng, length=rng.randint(3, 7),
                                   max_cups=1 if n == 3 else 2)
        base = straighten(word, n)
        rewritten = insert_random_identities(word, "+" * n, rng, count=2)
        assert straighten(rewritten, n) == base


def test_word_concatenation_matches_compose():
    w1 = [Cup(1, "+-"), Crossing(0, False), Cap(1)]
    w2 = [Ladder(0), Crossing(0, True)]
    whole = evaluate(w1 + w2, "++")
    split = evaluate(w1, "++").compose(evaluate(w2, "++"))
    assert whole == split


def test_ladder_slides_under_crossings_at_word_level():
    # a ladder below a pair of crossings equals the slid ladder above them
    lhs = straighten([Crossing(0, True), Crossing(1, True), Ladder(0)], 3)
    rhs = straighten([Ladder(1), Crossing(0, True), Crossing(1, True)], 3)
    assert lhs == rhs


def test_straighten_spectator_strand():
    # evaluating beside an untouched strand embeds the result
    rng = random.Random(55)
    for _ in range(10):
        n = rng.randint(1, 2)
        word = random_diagram_word(n, rng, length=rng.randint(3, 6))
        small = straighten(word, n)
        big = straighten(word, n + 1)
        embedded = {
            (w + (n,), emask): c for (w, emask), c in small.terms.items()
        }
        assert big.terms == embedded


# -- hom elements ------------------------------------------------------------


def test_basis_enumeration():
    assert len(basis_indices("+-", "-+")) == 4
    assert basis_indices("+", "-") == []
    assert len(basis_indices("+++", "+++")) == 24


def test_compose_plus_only_is_algebra_product():
    a, b = t_hom(), e_hom()
    assert a.compose(b).bend() == multiply(t_element(2, 0), e_element(2, 0))
    assert b.compose(b).bend() == identity_element(2).scale(-ONE)
    assert a.compose(a).bend() == identity_element(2) + t_element(2, 0).scale(Z)


def test_identity_laws():
    # the (+--, -) pair exercises two nested chains on the source side
    for s1, s2 in (("+-", "+-"), ("++", "++"), ("+--", "-"), ("-", "+--")):
        for key in basis_indices(s1, s2):
            b = hom_basis_element(s1, s2, key)
            assert identity_hom(s1).compose(b) == b
            assert b.compose(identity_hom(s2)) == b


def test_compose_associative_mixed():
    rng = random.Random(7)
    keys = basis_indices("+-", "+-")
    f = QIQ

    def rand_hom():
        return HomElement(
            "+-", "+-", {k: f.q ** rng.randint(-1, 1) for k in rng.sample(keys, 2)}
        )

    for _ in range(8):
        a, b, c = rand_hom(), rand_hom(), rand_hom()
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_bend_unbend_round_trip():
    rng = random.Random(1)
    f = QIQ
    for s1, s2 in (("+-", "+-"), ("++", "++"), ("+--", "-")):
        keys = basis_indices(s1, s2)
        for _ in range(17):
            coeffs = {k: f.q ** rng.randint(-2, 2) for k in rng.sample(keys, 2)}
            h = HomElement(s1, s2, coeffs)
            assert HomElement.unbend(h.bend(), s1, s2) == h


def test_bend_identity_golden():
    # regression anchor for the fixed bending convention
    bent = identity_hom("+-").bend()
    assert bent == identity_element(2)


def test_rotation():
    assert t_hom().rotate_180() == t_hom()
    assert e_hom().rotate_180() == e_hom()
    t3 = HomElement.unbend(t_element(3, 0), "+++", "+++")
    assert t3.rotate_180().bend() == t_element(3, 1)
    rng = random.Random(3)
    keys = basis_indices("+-", "+-")
    for _ in range(10):
        h = HomElement(
            "+-", "+-", {k: QIQ.q ** rng.randint(-1, 1) for k in rng.sample(keys, 2)}
        )
        assert h.rotate_180().rotate_180() == h
        assert categorical_trace(h.rotate_180()) == categorical_trace(h)


def test_rotation_contravariant_on_endomorphisms():
    rng = random.Random(19)
    for _ in range(10):
        letters1 = [Crossing(rng.randrange(2), rng.random() < 0.5) for _ in range(2)]
        letters2 = [Ladder(rng.randrange(2))]
        a = evaluate(letters1, "+++")
        b = evaluate(letters2, "+++")
        assert a.compose(b).rotate_180() == b.rotate_180().compose(a.rotate_180())


def test_tensor():
    assert e_hom().tensor(e_hom()).bend() == multiply(e_element(4, 0), e_element(4, 2))
    assert t_hom().tensor(t_hom()).bend() == multiply(t_element(4, 0), t_element(4, 2))
    unit = identity_hom("")
    assert t_hom().tensor(unit) == t_hom()
    assert unit.tensor(t_hom()) == t_hom()
    mixed = identity_hom("+-").tensor(identity_hom(""))
    assert mixed == identity_hom("+-")


def test_tensor_then_trace_multiplicative():
    a, b = t_hom(), e_hom().compose(e_hom())
    ab = a.tensor(b)
    assert categorical_trace(ab) == categorical_trace(a) * categorical_trace(b)


def test_equals():
    hecke_lhs = t_hom().compose(t_hom())
    hecke_rhs = identity_hom("++") + t_hom().scale(Z)
    assert hecke_lhs.equals(hecke_rhs)
    assert not t_hom().equals(e_hom())


def test_charge_conservation():
    assert HomElement("+", "-").is_zero
    with pytest.raises(DomainError):
        HomElement("+", "-", {((0, 1), 0): ONE})


def test_categorical_trace():
    assert categorical_trace(identity_hom("+-")) == D * D
    assert categorical_trace(identity_hom("++")) == D * D
    zero = HomElement("+-", "+-")
    assert categorical_trace(zero).is_zero
    with pytest.raises(DomainError):
        categorical_trace(hom_basis_element("+-", "-+", ((0, 1), 0)))


def test_categorical_trace_cyclic_on_mixed_signature():
    rng = random.Random(37)
    keys = basis_indices("+-", "+-")

    def rand_hom():
        return HomElement(
            "+-", "+-", {k: QIQ.q ** rng.randint(-1, 1) for k in rng.sample(keys, 2)}
        )

    for _ in range(6):
        a, b = rand_hom(), rand_hom()
        assert categorical_trace(a.compose(b)) == categorical_trace(b.compose(a))


def test_g_projection():
    P = g_projection()
    assert categorical_trace(P) == ONE
    assert P.compose(P) == P
    P1 = evaluate([Cap(0), Cup(0, "+-")], "+-").scale(ONE / D)
    assert P1.compose(P1) == P1
    assert P.compose(P1).is_zero and P1.compose(P).is_zero
    assert ladder_normalization() == QIQ.from_int(-2) / Z


def _close_minus_strand(hom):
    """Partial closure of the downward strand of an End(+-) element."""
    from skeinhc.skein import _State, _apply_hom_word

    total = None
    for key, c in hom.coeffs.items():
        st = _State("+", QIQ)
        st.cup(1, "-+")
        _apply_hom_word(st, key, "+-", "+-", 0)
        st.cap(1)
        piece = st.x.scale(c)
        total = piece if total is None else total + piece
    return total


def test_g_projection_partial_closure_value():
    # closing the downward strand of the projection gives (q - q^(-1))/(2i),
    # whose product with the loop value is the trace 1 = dim of the
    # invertible object
    P = g_projection()
    closed = _close_minus_strand(P)
    value = Z / (2 * I)
    assert closed == identity_element(1).scale(value)
    assert value * D == ONE


def test_identity_partial_closure_is_loop():
    closed = _close_minus_strand(identity_hom("+-"))
    assert closed == identity_element(1).scale(D)


def test_grammar_round_trip():
    text = "x1 x2' e1 cup2< cap2 cup1> cap1"
    letters = parse_diagram_word(text)
    assert format_diagram_word(letters) == text
    with pytest.raises(DomainError):
        parse_diagram_word("cup2")
    with pytest.raises(DomainError):
        parse_diagram_word("y3")


def test_hom_json_round_trip():
    rng = random.Random(10)
    keys = basis_indices("+-", "+-")
    h = HomElement(
        "+-", "+-", {k: QIQ.q ** rng.randint(-2, 2) for k in rng.sample(keys, 3)}
    )
    assert hom_from_json(hom_to_json(h)) == h
    assert hom_from_json(hom_to_json(HomElement("+", "-"))) == HomElement("+", "-")
