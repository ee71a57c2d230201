"""Permutations, reduced words, braid lifts, and the Yang-Baxter check."""

from itertools import permutations

import pytest

from conftest import flip_braiding, symbolic_diagonal
from ybalg.braid import (Braiding, Perm, UnvalidatedBraiding,
                         all_reduced_words, apply_beta_letters,
                         beta_component, braid_lift, braid_lift_word,
                         check_yang_baxter, chi, enumerate_shuffles,
                         perm_reduced_word, w_block)
from ybalg.catalog import exterior_braiding
from ybalg.linear import Element, LinMap, Space
from ybalg.scalars import Scalar


def all_perms(n):
    return [Perm(p) for p in permutations(range(1, n + 1))]


def test_perm_basics():
    w = Perm((2, 3, 1))
    assert w(1) == 2
    assert (w * w.inverse()) == Perm.identity(3)
    assert w.inversions() == 2


def test_reduced_word_is_reduced():
    for w in all_perms(4):
        word = perm_reduced_word(w)
        assert len(word) == w.inversions()
        rebuilt = Perm.identity(4)
        for i in word:
            rebuilt = rebuilt * Perm.transposition(4, i)
        assert rebuilt == w


def test_all_reduced_words_longest_element():
    w0 = Perm((3, 2, 1))
    words = all_reduced_words(w0)
    assert sorted(map(tuple, words)) == [(1, 2, 1), (2, 1, 2)]


def test_shuffle_count():
    assert len(enumerate_shuffles(2, 2)) == 6
    for w in enumerate_shuffles(2, 3):
        assert list(w.images[:2]) == sorted(w.images[:2])
        assert list(w.images[2:]) == sorted(w.images[2:])


def test_chi_images():
    assert chi(2, 1).images == (2, 3, 1)
    assert chi(1, 2).images == (3, 1, 2)
    assert chi(2, 2).inversions() == 4


def test_w_block_interleaves():
    assert w_block(2).images == (1, 3, 2, 4)
    assert w_block(3).images == (1, 3, 5, 2, 4, 6)


def test_flip_is_braiding():
    b = flip_braiding(2)
    assert b.validated
    ok, _ = check_yang_baxter(b.fwd, b.space)
    assert ok


def test_braiding_rejects_broken_yb():
    sp = Space(["a", "b"])
    # swap with an asymmetric scalar on one diagonal entry only: fails YBE
    cols = {w: Element.basis((w[1], w[0])) for w in sp.words(2)}
    cols[(0, 1)] = Element.basis((1, 0), coeff=Scalar.q_power(1))
    cols[(0, 0)] = Element.basis((0, 0)) + Element.basis((1, 1))
    with pytest.raises(ValueError):
        Braiding(sp, LinMap(2, cols))


def test_lift_respects_word_order():
    # sigma_{i_1} o ... o sigma_{i_l}: the rightmost generator acts first
    b = symbolic_diagonal(2)
    x = Element.basis((0, 1, 0))
    direct = b.sigma_i(1, 3)(b.sigma_i(2, 3)(x))
    assert braid_lift_word(b, [1, 2], x) == direct


def test_matsumoto_small():
    b = exterior_braiding(2)
    for w in all_perms(3):
        images = {}
        for word in all_reduced_words(w):
            for letters in b.space.words(3):
                res = braid_lift_word(b, word, Element.basis(letters))
                images.setdefault(letters, res)
                assert images[letters] == res


def test_beta_unit_components_are_identity():
    b = symbolic_diagonal(2)
    assert beta_component(0, 2, b).equals(LinMap.identity(b.space, 2),
                                          b.space, 2)
    assert apply_beta_letters(b, 2, 0, (0, 1)) == Element.basis((0, 1))


def test_beta_diagonal_scalar():
    b = symbolic_diagonal(2)
    # beta_{11} = sigma
    assert beta_component(1, 1, b).equals(b.fwd, b.space, 2)
    # on a diagonal braiding, beta_{ij} is the block flip times the product
    res = apply_beta_letters(b, 2, 1, (0, 1, 0))
    coeff = Scalar.q_power(1) * Scalar.q_power(3)  # q_{00} q_{10}
    assert res == Element.basis((0, 0, 1), coeff=coeff)


def test_unvalidated_braiding_refuses_lifts():
    b = symbolic_diagonal(2)
    raw = Braiding(b.space, b.fwd, b.inv, validate=False)
    with pytest.raises(UnvalidatedBraiding):
        braid_lift(chi(1, 1), raw)


def test_inverse_braiding():
    b = exterior_braiding(3)
    ib = b.inverse_braiding()
    assert b.fwd.compose(ib.fwd).equals(LinMap.identity(b.space, 2),
                                        b.space, 2)
    ok, _ = check_yang_baxter(ib.fwd, ib.space)
    assert ok


def test_beta_factorization():
    # beta_{i+j,k} = (beta_{ik} (x) id^j)(id^i (x) beta_{jk})
    b = exterior_braiding(2)
    i, j, k = 1, 1, 1
    lhs = beta_component(i + j, k, b)
    step1 = LinMap.identity(b.space, i).tensor(beta_component(j, k, b))
    step2 = beta_component(i, k, b).tensor(LinMap.identity(b.space, j))
    assert lhs.equals(step2.compose(step1), b.space, i + j + k)
