"""Ready-made braidings and Hopf algebras on small spaces.

Diagonal braidings from a scalar matrix, the one-parameter deformation of the
exterior flip with its quadratic relation, the signed flip on wedge-monomial
bases, Cartan-matrix q-data, and cyclic group algebras.  Everything is built
over the symbolic parameter q and validated at construction.
"""

from __future__ import annotations

import json
from itertools import combinations

from .braid import Braiding
from .hopf import AxiomReport, HopfPresentation
from .linear import (Element, LinMap, Space, column_echelon_basis, in_span,
                     map_kernel_basis)
from .scalars import Scalar, parse_scalar
from .tensoralg import symmetrizer_image


class ZeroEntry(ValueError):
    pass


class NotSymmetrizable(ValueError):
    pass


def diagonal_braiding(Q):
    """sigma(e_i (x) e_j) = q_ij e_j (x) e_i for a matrix of nonzero scalars."""
    n = len(Q)
    for row in Q:
        if len(row) != n:
            raise ValueError("Q must be square")
        for entry in row:
            if entry.is_zero():
                raise ZeroEntry("diagonal braiding entries must be nonzero")
    space = Space(["e%d" % (i + 1) for i in range(n)])
    fwd = {}
    inv = {}
    for i in range(n):
        for j in range(n):
            fwd[(i, j)] = Element.basis((j, i), coeff=Q[i][j])
            inv[(j, i)] = Element.basis((i, j), coeff=Q[i][j].invert())
    return Braiding(space, LinMap(2, fwd), LinMap(2, inv))


def exterior_braiding(N):
    """Deformed flip on an N-dimensional space, with the quadratic relation.

    e_i (x) e_i is fixed; e_i (x) e_j (i < j) goes to q^{-1} e_j (x) e_i;
    e_i (x) e_j (i > j) picks up the extra rank-one term (1 - q^{-2})
    e_i (x) e_j.  Satisfies (sigma - id)(sigma + q^{-2} id) = 0.
    """
    space = Space(["e%d" % (i + 1) for i in range(N)])
    qinv = Scalar.q_power(-1)
    extra = Scalar.one() - Scalar.q_power(-2)
    cols = {}
    for i in range(N):
        for j in range(N):
            if i == j:
                cols[(i, j)] = Element.basis((i, j))
            elif i < j:
                cols[(i, j)] = Element.basis((j, i), coeff=qinv)
            else:
                cols[(i, j)] = (Element.basis((j, i), coeff=qinv)
                                + Element.basis((i, j), coeff=extra))
    fwd = LinMap(2, cols)
    b = Braiding(space, fwd)
    ident = LinMap.identity(space, 2)
    quad = fwd.add(ident.scale(-Scalar.one())).compose(
        fwd.add(ident.scale(Scalar.q_power(-2))))
    if not quad.equals(LinMap(2), space, 2):
        raise ValueError("quadratic relation fails for the deformed flip")
    return b


def exterior_relations_check(N):
    """Degree-2 relations of the quadratic exterior algebra.

    In the signed-symmetrizer model of the quotient, a relation holds
    exactly when sum_w (-1)^{l(w)} T_w kills its tensor representative:
    e_i (x) e_i and e_j (x) e_i + q^{-1} e_i (x) e_j (i < j) must map to
    zero, and together they must span the fixed space Ker(id - sigma).
    """
    b = exterior_braiding(N)
    space = b.space
    sym = symmetrizer_image(2, b, sign=-1)
    qinv = Scalar.q_power(-1)
    entries = []
    relations = []
    for i in range(N):
        x = Element.basis((i, i))
        relations.append(x)
        img = sym.apply(x)
        entries.append({"axiom": "square e%d" % (i + 1),
                        "ok": img.is_zero(),
                        "witness": None if img.is_zero() else img})
    for i in range(N):
        for j in range(i + 1, N):
            x = Element.basis((j, i)) + Element.basis((i, j), coeff=qinv)
            relations.append(x)
            img = sym.apply(x)
            entries.append({"axiom": "skew e%d e%d" % (i + 1, j + 1),
                            "ok": img.is_zero(),
                            "witness": None if img.is_zero() else img})
    # the relations span the full fixed space of sigma
    fixer = LinMap.identity(space, 2).add(b.fwd.scale(-Scalar.one()))
    kernel = map_kernel_basis(fixer, space, 2)
    span = column_echelon_basis(relations, space, 2)
    spans = (len(kernel) == len(span)
             and all(in_span(v, kernel, space, 2) for v in span))
    entries.append({"axiom": "fixed-space span", "ok": spans,
                    "witness": None})
    return AxiomReport(entries)


def signed_symmetrizer_rank(N, degree):
    """Rank of sum_w (-1)^{l(w)} T_w on `degree` letters."""
    b = exterior_braiding(N)
    sym = symmetrizer_image(degree, b, sign=-1)
    image = column_echelon_basis(
        [sym.column(w) for w in b.space.words(degree)], b.space, degree)
    return len(image)


# -- signed flip on wedge monomials ----------------------------------------

def _neg_q_power(k):
    return Scalar.q_power(k, -1 if k % 2 else 1)


def _flip_exponent(I, J):
    """Exponent (I|J): zero on overlapping index sets, otherwise twice the
    number of descending cross pairs minus the product of the lengths.

    The zero case makes the map the plain flip there, which is what squares
    to the identity.
    """
    if set(I) & set(J):
        return 0
    return 2 * sum(1 for a in I for b in J if a > b) - len(I) * len(J)


def _cross_inversions(I, J):
    return sum(1 for a in I for b in J if a > b)


class WedgeAlgebra:
    """Wedge-monomial basis of the quadratic exterior algebra on N letters.

    One Space letter per increasing index subset (the empty set is the
    unit).  Carries the signed-flip braiding, the wedge product, and the
    unshuffle coproduct; the braiding squares to the identity.
    """

    def __init__(self, N):
        self.N = N
        self.subsets = [()]
        for k in range(1, N + 1):
            self.subsets.extend(combinations(range(1, N + 1), k))
        self.index = {s: i for i, s in enumerate(self.subsets)}
        self.space = Space(["w" + "".join(map(str, s)) for s in self.subsets])
        self.unit = Element.basis((self.index[()],))

        cols = {}
        for a, I in enumerate(self.subsets):
            for b, J in enumerate(self.subsets):
                cols[(a, b)] = Element.basis(
                    (b, a), coeff=_neg_q_power(_flip_exponent(I, J)))
        self.braiding = Braiding(self.space, LinMap(2, cols))

        wcols = {}
        for a, I in enumerate(self.subsets):
            for b, J in enumerate(self.subsets):
                if set(I) & set(J):
                    continue
                merged = tuple(sorted(I + J))
                coeff = _neg_q_power(-_cross_inversions(I, J))
                wcols[(a, b)] = Element.basis((self.index[merged],),
                                              coeff=coeff)
        self.wedge = LinMap(2, wcols)

        dcols = {}
        ccols = {}
        for a, J in enumerate(self.subsets):
            res = Element()
            for k in range(len(J) + 1):
                for S in combinations(J, k):
                    rest = tuple(x for x in J if x not in S)
                    coeff = _neg_q_power(-_cross_inversions(S, rest))
                    res.add_term(((self.index[S], self.index[rest]), ()),
                                 coeff)
            dcols[(a,)] = res
            if J == ():
                ccols[(a,)] = Element.unit()
        self.coproduct = LinMap(1, dcols)
        self.counit = LinMap(1, ccols)

    def wedge_element(self, I):
        """Basis monomial for an index sequence, sorted with the sign rule."""
        I = tuple(I)
        if len(set(I)) != len(I):
            return Element.zero()
        inv = sum(1 for x in range(len(I)) for y in range(x + 1, len(I))
                  if I[x] > I[y])
        return Element.basis((self.index[tuple(sorted(I))],),
                             coeff=_neg_q_power(-inv))


def qflip_braiding(N):
    """The signed flip on wedge monomials, as a validated braiding."""
    return WedgeAlgebra(N).braiding


def qflip_compat_check(wa):
    """Wedge and unshuffle compatibility of the signed flip.

    The identities hold on triples where the bystander monomial is disjoint
    from the other two; on overlapping index sets the flip degenerates to
    the plain transposition and the product rows do not apply.  Checked:
    both product rows, both coproduct rows, and the unit/counit rows.
    """
    sig = wa.braiding.fwd

    def flip_at(pos, x):
        out = Element()
        for (letters, cuts), c in x.terms.items():
            img = sig.apply_word(letters[pos:pos + 2])
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 2:], cuts),
                             a * c)
        return out

    def wedge_at(pos, x):
        out = Element()
        for (letters, cuts), c in x.terms.items():
            img = wa.wedge.apply_word(letters[pos:pos + 2])
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 2:], cuts),
                             a * c)
        return out

    def delta_at(pos, x):
        out = Element()
        for (letters, cuts), c in x.terms.items():
            img = wa.coproduct.apply_word(letters[pos:pos + 1])
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 1:], cuts),
                             a * c)
        return out

    entries = []

    def record(axiom, ok, witness=None):
        entries.append({"axiom": axiom, "ok": ok, "witness": witness})

    def check(axiom, cases):
        for w, lhs, rhs in cases:
            if lhs != rhs:
                record(axiom, False, (w, lhs, rhs))
                return
        record(axiom, True)

    subs = wa.subsets

    def wedge_left():
        for a, I in enumerate(subs):
            for b, J in enumerate(subs):
                for c, K in enumerate(subs):
                    if set(I) & (set(J) | set(K)):
                        continue
                    x = Element.basis((a, b, c))
                    yield ((I, J, K),
                           wedge_at(0, flip_at(1, flip_at(0, x))),
                           flip_at(0, wedge_at(1, x)))

    def wedge_right():
        for a, I in enumerate(subs):
            for b, J in enumerate(subs):
                for c, K in enumerate(subs):
                    if set(K) & (set(I) | set(J)):
                        continue
                    x = Element.basis((a, b, c))
                    yield ((I, J, K),
                           wedge_at(1, flip_at(0, flip_at(1, x))),
                           flip_at(0, wedge_at(0, x)))

    def coproduct_left():
        for a, I in enumerate(subs):
            for b, J in enumerate(subs):
                if set(I) & set(J):
                    continue
                x = Element.basis((a, b))
                yield ((I, J),
                       flip_at(1, flip_at(0, delta_at(1, x))),
                       delta_at(0, flip_at(0, x)))

    def coproduct_right():
        for a, I in enumerate(subs):
            for b, J in enumerate(subs):
                if set(I) & set(J):
                    continue
                x = Element.basis((a, b))
                yield ((I, J),
                       flip_at(0, flip_at(1, delta_at(0, x))),
                       delta_at(1, flip_at(0, x)))

    check("wedge-left", wedge_left())
    check("wedge-right", wedge_right())
    check("coproduct-left", coproduct_left())
    check("coproduct-right", coproduct_right())

    unit_idx = wa.index[()]
    ok = all(sig.apply_word((a, unit_idx)) == Element.basis((unit_idx, a))
             and sig.apply_word((unit_idx, a)) == Element.basis((a, unit_idx))
             for a in range(len(subs)))
    record("unit-flip", ok)
    return AxiomReport(entries)


def cartan_qmatrix(A, d):
    """q_ij = q^{d_i a_ij} from a symmetrizable integer Cartan matrix."""
    n = len(A)
    if len(d) != n:
        raise ValueError("d must match the size of A")
    for i in range(n):
        for j in range(n):
            if d[i] * A[i][j] != d[j] * A[j][i]:
                raise NotSymmetrizable(
                    "d_i a_ij != d_j a_ji at (%d, %d)" % (i, j))
    return [[Scalar.q_power(d[i] * A[i][j]) for j in range(n)]
            for i in range(n)]


def group_algebra_hopf(n):
    """K[Z/n]: group-like basis g^0, ..., g^{n-1} with S(g) = g^{-1}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    space = Space(["g%d" % i for i in range(n)])
    mult = LinMap(2, {(i, j): Element.basis(((i + j) % n,))
                      for i in range(n) for j in range(n)})
    comult = LinMap(1, {(i,): Element.basis((i, i)) for i in range(n)})
    counit = LinMap(1, {(i,): Element.unit() for i in range(n)})
    antipode = LinMap(1, {(i,): Element.basis(((-i) % n,))
                          for i in range(n)})
    return HopfPresentation(space, mult, Element.basis((0,)), comult,
                            counit, antipode)


# -- address resolution ----------------------------------------------------

def resolve_catalog(address):
    """Build a catalog object from an address like `exterior:N=3`.

    Supported kinds: exterior (Braiding), qflip (WedgeAlgebra), diagonal
    (Braiding from a JSON file of scalar strings), groupalgebra
    (HopfPresentation), cartan (matrix of Scalars from a JSON file with
    "A" and "d").
    """
    kind, _, rest = address.partition(":")
    params = {}
    if rest:
        for piece in rest.split(","):
            key, _, value = piece.partition("=")
            if not _:
                raise ValueError("malformed catalog parameter %r" % piece)
            params[key.strip()] = value.strip()
    if kind == "exterior":
        return exterior_braiding(int(params["N"]))
    if kind == "qflip":
        return WedgeAlgebra(int(params["N"]))
    if kind == "diagonal":
        with open(params["file"]) as fh:
            rows = json.load(fh)
        return diagonal_braiding([[parse_scalar(entry) for entry in row]
                                  for row in rows])
    if kind == "groupalgebra":
        return group_algebra_hopf(int(params["n"]))
    if kind == "cartan":
        with open(params["file"]) as fh:
            data = json.load(fh)
        return cartan_qmatrix(data["A"], data["d"])
    raise ValueError("unknown catalog kind %r" % kind)
