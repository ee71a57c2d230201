"""Symmetric group combinatorics and braid lifts.

Permutations are 1-indexed (images tuple), matching the standard two-row
notation.  The canonical reduced word is derived from descent stripping,
which is deterministic and linear in the inversion number.
"""

from __future__ import annotations

from itertools import combinations

from .linear import Element, LinMap, map_compose, map_invert_exact


class UnvalidatedBraiding(ValueError):
    pass


class Perm:
    """Permutation of {1,...,n}, stored by its sequence of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..%d: %r" % (n, images))
        self.images = images

    @staticmethod
    def identity(n):
        return Perm(range(1, n + 1))

    @staticmethod
    def transposition(n, i):
        """Adjacent transposition s_i in S_n."""
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return Perm(im)

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        """Composition: (self * other)(i) = self(other(i))."""
        return Perm(self.images[other.images[i - 1] - 1]
                    for i in range(1, self.n + 1))

    def inverse(self):
        im = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            im[v - 1] = i
        return Perm(im)

    def inversions(self):
        im = self.images
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n)
                   if im[i] > im[j])

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Perm%r" % (self.images,)


def perm_reduced_word(w):
    """Canonical reduced expression of w as a list of generator indices.

    Repeatedly strips the first descent: if w(i) > w(i+1) then
    w = (w s_i) s_i with l(w s_i) = l(w) - 1.
    """
    images = list(w.images)
    rev = []
    while True:
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                rev.append(i + 1)
                images[i], images[i + 1] = images[i + 1], images[i]
                break
        else:
            break
    return rev[::-1]


def all_reduced_words(w):
    """Every reduced expression of w (exhaustive, for Matsumoto checks)."""
    if w.inversions() == 0:
        return [[]]
    out = []
    n = w.n
    for i in range(1, n):
        if w(i) > w(i + 1):
            shorter = w * Perm.transposition(n, i)
            for word in all_reduced_words(shorter):
                out.append(word + [i])
    return out


def enumerate_shuffles(p, q):
    """All (p,q)-shuffles in S_{p+q}, lexicographic on image sequences."""
    n = p + q
    out = []
    for first in combinations(range(1, n + 1), p):
        rest = [v for v in range(1, n + 1) if v not in first]
        out.append(Perm(list(first) + rest))
    out.sort(key=lambda w: w.images)
    return out


def chi(i, j):
    """chi_{ij} in S_{i+j}: k -> k+j for k <= i, k -> k-i otherwise."""
    return Perm([k + j for k in range(1, i + 1)]
                + [k - i for k in range(i + 1, i + j + 1)])


def w_block(i):
    """w_i in S_{2i}: 1..i -> odd positions, i+1..2i -> even positions."""
    im = [0] * (2 * i)
    for k in range(1, i + 1):
        im[k - 1] = 2 * k - 1
        im[i + k - 1] = 2 * k
    return Perm(im)


class Braiding:
    """Invertible degree-2 map with a validated Yang-Baxter flag.

    The inverse is computed exactly at construction unless supplied, and the
    YBE is checked unless `validate=False`.
    """

    _next_id = 0

    def __init__(self, space, fwd, inv=None, validate=True):
        self.space = space
        self.fwd = fwd
        self.inv = inv if inv is not None else map_invert_exact(fwd, space, 2)
        ident = LinMap.identity(space, 2)
        if not map_compose(self.fwd, self.inv).equals(ident, space, 2):
            raise ValueError("supplied inverse is not a right inverse")
        if not map_compose(self.inv, self.fwd).equals(ident, space, 2):
            raise ValueError("supplied inverse is not a left inverse")
        if validate:
            ok, witness = check_yang_baxter(self.fwd, space)
            if not ok:
                raise ValueError("Yang-Baxter equation fails at %r" % (witness,))
            self.validated = True
        else:
            self.validated = False
        self.uid = Braiding._next_id
        Braiding._next_id += 1
        self._lift_cache = {}
        self._inv_braiding = None

    def inverse_braiding(self):
        if self._inv_braiding is None:
            b = Braiding(self.space, self.inv, self.fwd,
                         validate=False)
            b.validated = self.validated
            self._inv_braiding = b
        return self._inv_braiding

    def sigma_i(self, i, n):
        """id^{i-1} (x) sigma (x) id^{n-i-1} applied to an Element."""
        def act(x):
            out = Element()
            for (letters, cuts), c in x.terms.items():
                pair = letters[i - 1:i + 1]
                img = self.fwd.apply_word(pair)
                for (pw, _), a in img.terms.items():
                    out.add_term(
                        (letters[:i - 1] + pw + letters[i + 1:], cuts), a * c)
            return out
        return act


def braid_lift_word(braiding, word, x):
    """Apply sigma_{i_1} o ... o sigma_{i_l} for an explicit generator word."""
    for i in reversed(word):
        x = braiding.sigma_i(i, None)(x)
    return x


def braid_lift_apply(braiding, w, letters):
    """T_w applied to a single basis word, memoized per (braiding, w)."""
    if not braiding.validated:
        raise UnvalidatedBraiding(
            "braid lifts require a braiding with a validated YBE")
    key = (w.images, letters)
    cached = braiding._lift_cache.get(key)
    if cached is not None:
        return cached
    x = Element.basis(letters)
    res = braid_lift_word(braiding, perm_reduced_word(w), x)
    braiding._lift_cache[key] = res
    return res


def braid_lift(w, braiding, degree=None):
    """T_w as a LinMap on V^{(x) n} with n = w.n (or the given degree)."""
    n = degree if degree is not None else w.n
    if n != w.n:
        raise ValueError("degree must match the permutation size")
    cols = {}
    for word in braiding.space.words(n):
        res = braid_lift_apply(braiding, w, word)
        if not res.is_zero():
            cols[word] = res
    return LinMap(n, cols)


def beta_component(i, j, braiding):
    """beta_{ij} = T_{chi_{ij}} on V^{(x)i} (x) V^{(x)j} (plain letters).

    For i = 0 or j = 0 this is the identity on letters; the split-tag move
    is the caller's bookkeeping.
    """
    if i == 0 or j == 0:
        return LinMap.identity(braiding.space, i + j)
    return braid_lift(chi(i, j), braiding, i + j)


def apply_beta_letters(braiding, i, j, letters):
    """beta_{ij} applied to a single concatenated word of degree i+j."""
    if i == 0 or j == 0:
        return Element.basis(letters)
    return braid_lift_apply(braiding, chi(i, j), tuple(letters))


def check_yang_baxter(sigma, space):
    """Exact YBE check on V^{(x)3}; returns (ok, witness).

    On failure the witness is (word, lhs_image, rhs_image).
    """
    def act(pos, letters_coeff):
        out = Element()
        for (letters, cuts), c in letters_coeff.terms.items():
            pair = letters[pos:pos + 2]
            img = sigma.apply_word(pair)
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 2:], cuts),
                             a * c)
        return out

    for word in space.words(3):
        x = Element.basis(word)
        lhs = act(0, act(1, act(0, x)))
        rhs = act(1, act(0, act(1, x)))
        if lhs != rhs:
            return False, (word, lhs, rhs)
    return True, None
