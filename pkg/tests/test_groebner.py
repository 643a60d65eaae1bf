"""Buchberger engine: reduced bases, normal forms, initial ideals,
standard monomials, elimination."""

import itertools
from fractions import Fraction

import pytest

from koszulforge.errors import InputError, ResourceCapError
from koszulforge.groebner import (IdealPresentation, eliminate,
                                  initial_ideal, monomial_ideal,
                                  multiplication_table, normal_form,
                                  reduced_gb, spolynomial, standard_monomials)
from koszulforge.polyring import Polynomial, TermOrder, mono_divides
from koszulforge.toric import closed_form_generators


def P(width, *terms):
    out = Polynomial.zero(width)
    for mono, c in terms:
        out = out + Polynomial.monomial(tuple(mono), Fraction(c))
    return out


@pytest.fixture(scope="module")
def heptagon():
    return closed_form_generators("cbar", 3)


@pytest.fixture(scope="module")
def heptagon_gb(heptagon):
    order = TermOrder.grevlex(heptagon.presentation.width)
    return reduced_gb(heptagon.presentation, order)


def test_empty_ideal():
    pres = IdealPresentation(("x", "y"), ())
    gb = reduced_gb(pres, TermOrder.grevlex(2))
    assert gb.elements == ()
    assert gb.is_quadratic


def test_hand_reduced_lex_example():
    # I = (y1 - y2, y2 - y3) under lex y3 < y2 < y1 reduces to {y1-y3, y2-y3}
    pres = IdealPresentation(
        ("y1", "y2", "y3"),
        (P(3, ((1, 0, 0), 1), ((0, 1, 0), -1)),
         P(3, ((0, 1, 0), 1), ((0, 0, 1), -1))))
    gb = reduced_gb(pres, TermOrder.lex(3, ranking=(2, 1, 0)))
    want = {P(3, ((1, 0, 0), 1), ((0, 0, 1), -1)),
            P(3, ((0, 1, 0), 1), ((0, 0, 1), -1))}
    assert set(gb.elements) == want


def test_textbook_grevlex_twisted_cubic():
    # kernel of t -> (t, t^2, t^3): x^2 - y, xy - z, xz - y^2, y^3 - z^2 ...
    pres = IdealPresentation(
        ("x", "y", "z"),
        (P(3, ((2, 0, 0), -1), ((0, 1, 0), 1)),
         P(3, ((3, 0, 0), -1), ((0, 0, 1), 1))))
    gb = reduced_gb(pres, TermOrder.grevlex(3, ranking=(2, 1, 0)))
    lms = set(gb.leading_monomials())
    assert (2, 0, 0) in lms
    for g in pres.generators:
        assert normal_form(g, gb).is_zero()


def test_reduced_gb_idempotent(heptagon_gb):
    pres = IdealPresentation(tuple(f"v{i}" for i in range(15)),
                             heptagon_gb.elements)
    again = reduced_gb(pres, heptagon_gb.order)
    assert again.elements == heptagon_gb.elements


def test_spairs_reduce_to_zero(heptagon_gb):
    els = heptagon_gb.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            s = spolynomial(els[i], els[j], heptagon_gb.order)
            assert normal_form(s, heptagon_gb).is_zero()


def test_autoreduced(heptagon_gb):
    lms = heptagon_gb.leading_monomials()
    for i, g in enumerate(heptagon_gb.elements):
        for mono in g.terms:
            for j, lm in enumerate(lms):
                if i != j:
                    assert not mono_divides(lm, mono)


def test_normal_form_membership(heptagon, heptagon_gb):
    for g in heptagon.presentation.generators:
        assert normal_form(g, heptagon_gb).is_zero()
    one = Polynomial.constant(15, 1)
    assert normal_form(one, heptagon_gb) == one


def test_normal_form_multiplicative(heptagon_gb):
    import random
    rng = random.Random(3)
    width = 15
    for _ in range(10):
        f = Polynomial.monomial(tuple(rng.randint(0, 1) for _ in range(width)),
                                rng.choice([1, 2, -1]))
        g = Polynomial.monomial(tuple(rng.randint(0, 1) for _ in range(width)),
                                rng.choice([1, 3]))
        lhs = normal_form(f * g, heptagon_gb)
        rhs = normal_form(normal_form(f, heptagon_gb)
                          * normal_form(g, heptagon_gb), heptagon_gb)
        assert lhs == rhs


def test_standard_monomial_of_artinian_reduction():
    # y1*y3*y5 avoids all 18 initial monomials of the 7-variable reduction
    from koszulforge.hilbert import apply_linear_forms
    from koszulforge.paper_suite import cbar_ideal, paper_linear_forms
    ideal = cbar_ideal(3)
    art, regular, _ = apply_linear_forms(ideal.presentation,
                                         paper_linear_forms(ideal.presentation, 3))
    assert all(regular)
    gb = reduced_gb(art, TermOrder.grevlex(7))
    m = (1, 0, 1, 0, 1, 0, 0)
    nf = normal_form(Polynomial.monomial(m), gb)
    assert nf == Polynomial.monomial(m)


def test_initial_ideal_flags(heptagon_gb):
    ini = initial_ideal(heptagon_gb)
    assert not ini.is_quadratic or heptagon_gb.is_quadratic
    # minimal generating set is an antichain
    for a, b in itertools.combinations(ini.generators, 2):
        assert not mono_divides(a, b) and not mono_divides(b, a)


def test_monomial_ideal_minimalization():
    ideal = monomial_ideal(2, [(1, 0), (1, 1), (2, 0), (0, 3)])
    assert set(ideal.generators) == {(1, 0), (0, 3)}
    assert ideal.contains((5, 0))
    assert not ideal.contains((0, 2))


def test_standard_monomials_counts():
    all_vars = monomial_ideal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert standard_monomials(all_vars, 1) == []
    empty = monomial_ideal(3, [])
    assert len(standard_monomials(empty, 2)) == 6  # C(4,2)


def test_eliminate_kernel_of_injection():
    # I = (x - y^2) in K[x, y]: dropping x leaves the zero ideal
    pres = IdealPresentation(("x", "y"),
                             (P(2, ((1, 0), 1), ((0, 2), -1)),))
    out = eliminate(pres, {0})
    assert out.labels == ("y",)
    assert out.generators == ()


def test_eliminate_hand_example():
    # I = (y1 - t, y2 - t^2): dropping t gives (y1^2 - y2)
    pres = IdealPresentation(
        ("y1", "y2", "t"),
        (P(3, ((1, 0, 0), 1), ((0, 0, 1), -1)),
         P(3, ((0, 1, 0), 1), ((0, 0, 2), -1))))
    out = eliminate(pres, {2})
    assert out.labels == ("y1", "y2")
    assert len(out.generators) == 1
    g = out.generators[0]
    assert g == P(2, ((2, 0), 1), ((0, 1), -1)) or \
        g == P(2, ((2, 0), -1), ((0, 1), 1))


def test_spair_cap_is_hard_failure():
    ideal = closed_form_generators("cbar", 3)
    with pytest.raises(ResourceCapError):
        reduced_gb(ideal.presentation, TermOrder.grevlex(15), spair_cap=2)


def test_gb_requires_global_order():
    pres = IdealPresentation(("x", "y"), (P(2, ((1, 0), 1), ((0, 1), -1)),))
    with pytest.raises(InputError):
        reduced_gb(pres, TermOrder.revlex_nongraded(2))


def test_multiplication_table_dims(heptagon_gb):
    table = multiplication_table(heptagon_gb, 2)
    assert table.dimension(0) == 1
    assert table.dimension(1) == 15
    assert table.dimension(2) == 106


def test_gb_json_stable(heptagon_gb):
    import json
    a = json.dumps(heptagon_gb.to_json(), sort_keys=True)
    b = json.dumps(heptagon_gb.to_json(), sort_keys=True)
    assert a == b
    data = heptagon_gb.to_json()
    assert set(data) == {"order", "elements", "initial_ideal", "flags"}


def test_quadratic_generation_is_an_ideal_property():
    from koszulforge.groebner import is_quadratically_generated
    from koszulforge.graphs import complement, cycle
    from koszulforge.toric import monomial_map, toric_ideal
    # the elimination output carries cubic basis elements, but the ideal is
    # quadratically generated
    elim = toric_ideal(monomial_map(complement(cycle(7))))
    assert any(g.degree() > 2 for g in elim.presentation.generators)
    assert is_quadratically_generated(elim.presentation)
    # a genuinely cubic ideal
    cubic = IdealPresentation(("y",), (P(1, ((3,), 1)),))
    assert not is_quadratically_generated(cubic)


def test_quadratic_flag_consistent_with_betti_row_two():
    # quadraticity matches the vanishing of beta_{2,j} for j > 2
    from koszulforge.betti import betti_table, graded_basis
    from koszulforge.groebner import is_quadratically_generated
    from koszulforge.paper_suite import paper_artinian_reduction
    art = paper_artinian_reduction(3)
    assert is_quadratically_generated(art)
    table = betti_table(graded_basis(art, degree_cap=4), 2, 4)
    assert table.get(2, 3) == 0 and table.get(2, 4) == 0
    cubic = IdealPresentation(("y",), (P(1, ((3,), 1)),))
    assert not is_quadratically_generated(cubic)
    t2 = betti_table(graded_basis(cubic, degree_cap=4), 2, 4)
    assert t2.get(2, 3) == 1
