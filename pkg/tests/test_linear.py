"""Words, elements, sparse maps, exact elimination, serialization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybalg.linear import (DegreeMismatch, Element, LinMap, Singular, Space,
                          column_echelon_basis, element_from_obj,
                          element_to_obj, in_span, linmap_from_obj,
                          linmap_to_obj, map_invert_exact, map_kernel_basis,
                          tensor_elements, term_sort_key)
from ybalg.scalars import Scalar, parse_scalar


def test_words_enumeration():
    sp = Space(["a", "b"])
    assert sp.words(0) == [()]
    assert sp.words(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_duplicate_basis_rejected():
    with pytest.raises(ValueError):
        Space(["a", "a"])


def test_element_arithmetic():
    x = Element.basis((0, 1))
    y = Element.basis((1, 0), coeff=parse_scalar("q"))
    s = x + y
    assert s - x == y
    assert (x - x).is_zero()
    assert (-x + x).is_zero()
    assert x.scale(Scalar.zero()).is_zero()


def test_tensor_shifts_cuts():
    x = Element.basis((0,), cuts=(1,))
    y = Element.basis((1, 0), cuts=(1,))
    t = tensor_elements(x, y)
    assert t == Element.basis((0, 1, 0), cuts=(1, 2))


def test_component_and_degrees():
    x = Element.basis((0,)) + Element.basis((0, 1))
    assert x.degrees() == [1, 2]
    assert x.component(1) == Element.basis((0,))


def test_linmap_compose_tensor():
    sp = Space(["a", "b"])
    f = LinMap(1, {(0,): Element.basis((1,)), (1,): Element.basis((0,))})
    assert f.compose(f).equals(LinMap.identity(sp, 1), sp, 1)
    ff = f.tensor(f)
    assert ff.apply_word((0, 1)) == Element.basis((1, 0))


def test_apply_degree_checks():
    f = LinMap(1, {(0,): Element.basis((0,))})
    with pytest.raises(DegreeMismatch):
        f.apply(Element.basis((0, 0)))


def test_invert_exact():
    sp = Space(["a", "b"])
    q = parse_scalar("q")
    f = LinMap(1, {(0,): Element.basis((0,), coeff=q) + Element.basis((1,)),
                   (1,): Element.basis((1,), coeff=q)})
    inv = map_invert_exact(f, sp, 1)
    assert f.compose(inv).equals(LinMap.identity(sp, 1), sp, 1)
    assert inv.compose(f).equals(LinMap.identity(sp, 1), sp, 1)


def test_invert_singular():
    sp = Space(["a", "b"])
    f = LinMap(1, {(0,): Element.basis((0,)), (1,): Element.basis((0,))})
    with pytest.raises(Singular):
        map_invert_exact(f, sp, 1)


def test_kernel_basis():
    sp = Space(["a", "b"])
    f = LinMap(1, {(0,): Element.basis((0,)), (1,): Element.basis((0,))})
    ker = map_kernel_basis(f, sp, 1)
    assert len(ker) == 1
    assert f.apply(ker[0]).is_zero()


def test_echelon_and_span():
    sp = Space(["a", "b"])
    v1 = Element.basis((0, 0)) + Element.basis((1, 1))
    v2 = Element.basis((1, 1))
    basis = column_echelon_basis([v1, v2, v1 + v2], sp, 2)
    assert len(basis) == 2
    assert in_span(v1.scale(parse_scalar("q")), basis, sp, 2)
    assert not in_span(Element.basis((0, 1)), basis, sp, 2)


def test_term_sort_key_grading():
    keys = [((1, 0), ()), ((0,), ()), ((0, 1), (1,))]
    assert sorted(keys, key=term_sort_key) == [
        ((0,), ()), ((0, 1), (1,)), ((1, 0), ())]


def test_element_roundtrip():
    x = (Element.basis((0, 1), cuts=(1,), coeff=parse_scalar("q^-1"))
         + Element.basis((1, 0, 1), cuts=(1, 2)))
    assert element_from_obj(element_to_obj(x)) == x


def test_linmap_roundtrip():
    f = LinMap(2, {(0, 1): Element.basis((1, 0), coeff=parse_scalar("1-q"))})
    g = linmap_from_obj(linmap_to_obj(f), 2)
    assert g.equals(f)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(0, 1), min_size=0, max_size=3),
                          st.integers(-3, 3)),
                min_size=0, max_size=4))
def test_linearity_of_apply(data):
    sp = Space(["a", "b"])
    f = LinMap(2, {w: Element.basis(tuple(reversed(w)))
                   for w in sp.words(2)})
    x = Element()
    y = Element()
    for word, c in data:
        word = tuple(word[:2]) if len(word) >= 2 else (0, 0)
        x.add_term((word, ()), Scalar.from_int(c))
        y.add_term((word, ()), Scalar.from_int(c * 2))
    assert f.apply(x + y) == f.apply(x) + f.apply(y)
