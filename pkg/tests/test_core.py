from hypothesis import given, strategies as st

from twocat.builders import pt, walking_arrow, walking_two_cell
from twocat.core import (check_cell_map, discrete, hom_category,
                         identity_functor, opposite, product, validate,
                         validate_diagram, validate_diagram_morphism,
                         TwoFunctor)


def test_terminal_validates():
    assert validate(pt()).ok


def test_walking_arrow_validates():
    assert validate(walking_arrow()).ok


def test_walking_two_cell_validates():
    assert validate(walking_two_cell()).ok


def test_malformed_vcomp_pair_reported():
    C = walking_two_cell()
    C.vcomp2[("phi", "phi")] = "phi"  # phi is not vertically self-composable
    rep = validate(C)
    assert not rep.ok
    assert any("non-composable" in v for v in rep.violations)


def test_corrupted_table_entry_reported():
    C = walking_two_cell()
    C.hcomp1[("g", "1a")] = "f"
    assert not validate(C).ok


def test_interchange_checked_exhaustively(cx):
    # flipping one horizontal composite on WTC must surface as an
    # interchange or unit violation
    C = walking_two_cell()
    C.hcomp2[("e1b", "phi")] = "ef"
    rep = validate(C)
    assert not rep.ok


def test_opposite_is_involution():
    for C in (pt(), walking_arrow(), walking_two_cell()):
        D = opposite(opposite(C))
        assert D.objects == C.objects
        assert D.one_cells == C.one_cells
        assert D.two_cells == C.two_cells
        assert D.hcomp1 == C.hcomp1
        assert D.hcomp2 == C.hcomp2


def test_opposite_reverses_one_cells_only():
    C = walking_arrow()
    D = opposite(C)
    assert D.one_cells["a"] == ("1", "0")
    assert D.two_cells == C.two_cells
    assert validate(D).ok


def test_product_counts_multiply():
    wa = walking_arrow()
    P = product([wa, wa])
    assert P.counts() == (4, 9, 9)
    assert validate(P).ok


def test_product_single_factor_is_identity():
    C = walking_two_cell()
    assert product([C]) is C


def test_product_with_terminal_same_counts():
    C = walking_two_cell()
    P = product([C, pt()])
    assert P.counts() == C.counts()
    assert validate(P).ok


def test_hom_category_of_wtc():
    H = hom_category(walking_two_cell(), "a", "b")
    assert set(H.objects) == {"f", "g"}
    assert len(H.one_cells) == 3  # ef, eg, phi
    assert validate(H).ok


def test_hom_category_empty():
    H = hom_category(walking_two_cell(), "b", "a")
    assert H.counts() == (0, 0, 0)


def test_hom_category_terminal():
    H = hom_category(pt(), "*", "*")
    assert H.counts() == (1, 1, 1)


def test_identity_functor_passes():
    C = walking_two_cell()
    assert check_cell_map("two_functor", identity_functor(C)).ok


def test_broken_two_cell_map_reported():
    C = walking_two_cell()
    F = identity_functor(C)
    bad = TwoFunctor(C, C, dict(F.on_obj), dict(F.on_one),
                     dict(F.on_two, phi="ef"))
    rep = check_cell_map("two_functor", bad)
    assert not rep.ok
    assert any("boundary" in v for v in rep.violations)


def test_corpus_diagrams_validate(cx):
    assert validate_diagram(cx.Dcov).ok
    assert validate_diagram(cx.Drep).ok


def test_corpus_morphisms_validate(cx):
    assert validate_diagram_morphism(cx.collapse).ok
    assert validate_diagram_morphism(cx.renaming).ok


def test_functor_fixture_validates(cx):
    assert check_cell_map("two_functor", cx.F).ok


@given(st.integers(min_value=1, max_value=6))
def test_discrete_counts(n):
    C = discrete([f"x{i}" for i in range(n)])
    assert C.counts() == (n, n, n)
    assert validate(C).ok


def test_modification_axiom():
    from twocat.core import Modification, TwoNaturalTransformation
    P, C = pt(), walking_two_cell()
    Fa = TwoFunctor(P, C, {"*": "a"}, {"1": "1a"}, {"11": "e1a"}, name="ka")
    Fb = TwoFunctor(P, C, {"*": "b"}, {"1": "1b"}, {"11": "e1b"}, name="kb")
    eta_f = TwoNaturalTransformation(Fa, Fb, {"*": "f"})
    eta_g = TwoNaturalTransformation(Fa, Fb, {"*": "g"})
    assert check_cell_map("two_natural", eta_f).ok
    good = Modification(eta_f, eta_g, {"*": "phi"})
    assert check_cell_map("modification", good).ok
    bad = Modification(eta_f, eta_g, {"*": "ef"})
    rep = check_cell_map("modification", bad)
    assert not rep.ok


def test_oplax_direction_field_checked():
    from twocat.core import OplaxTransformation
    C = walking_two_cell()
    I = identity_functor(C)
    unit = OplaxTransformation(I, I, {c: C.id1[c] for c in C.objects},
                               {f: C.id2[f] for f in C.one_cells},
                               direction="gf_first")
    assert check_cell_map("oplax", unit).ok
    unit.direction = "sideways"
    assert not check_cell_map("oplax", unit).ok


@given(st.data())
def test_random_single_entry_corruption_detected(data):
    C = walking_two_cell()
    key = data.draw(st.sampled_from(sorted(C.hcomp1, key=repr)))
    wrong = data.draw(st.sampled_from(sorted(C.one_cells)))
    if wrong == C.hcomp1[key]:
        wrong = next(f for f in sorted(C.one_cells) if f != C.hcomp1[key])
    C.hcomp1[key] = wrong
    assert not validate(C).ok
