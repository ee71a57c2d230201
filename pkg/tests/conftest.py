"""Shared fixtures: small braided spaces and algebra bases used across tests."""

from ybalg.binfty import TwoYB, YBBase
from ybalg.catalog import diagonal_braiding
from ybalg.linear import Element, LinMap, Space
from ybalg.scalars import Scalar


def symbolic_diagonal(n):
    """Diagonal braiding with independent monomial entries q^{in+j+1}."""
    Q = [[Scalar.q_power(i * n + j + 1) for j in range(n)]
         for i in range(n)]
    return diagonal_braiding(Q)


def flip_braiding(n):
    """The plain transposition tau as a diagonal braiding."""
    one = Scalar.one()
    return diagonal_braiding([[one] * n for _ in range(n)])


def zero_base(braiding):
    """Base with the zero product: quasi-shuffle collapses to the shuffle."""
    return YBBase(braiding.space, LinMap(2), braiding)


def graded_base():
    """dim-2 base with weights (1, 2): q_ij = q^{w_i w_j}, e1 e1 = e2.

    The single product column is weight-homogeneous, so the compatibility
    rows with the diagonal braiding close up exactly.
    """
    w = (1, 2)
    Q = [[Scalar.q_power(w[i] * w[j]) for j in range(2)] for i in range(2)]
    b = diagonal_braiding(Q)
    mult = LinMap(2, {(0, 0): Element.basis((1,))})
    return YBBase(b.space, mult, b)


def dual_numbers_twoyb():
    """K[e]/(e^2) with both products equal: unit g0, g1^2 = 0.

    Braiding is diagonal with weights (0, 1), so only the g1 (x) g1 column
    carries a q.
    """
    w = (0, 1)
    Q = [[Scalar.q_power(w[i] * w[j]) for j in range(2)] for i in range(2)]
    b = diagonal_braiding(Q)
    cols = {(0, 0): Element.basis((0,)),
            (0, 1): Element.basis((1,)),
            (1, 0): Element.basis((1,))}
    mult = LinMap(2, cols)
    unit = Element.basis((0,))
    return TwoYB(b.space, b, mult, mult, unit)
