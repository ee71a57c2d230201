"""Quantum B-infinity structures on a braided vector space.

A QBStructure is a family of component maps M_pq: V^{(x)p} (x) V^{(x)q} -> V
with fixed boundary values.  It induces a product on the tensor algebra via
iterated reduced braided coproducts; validation checks the compatibility
with the braiding and the associativity condition, degree by degree.
"""

from __future__ import annotations

from itertools import combinations

from .braid import apply_beta_letters
from .linear import Element, LinMap
from .scalars import Scalar
from .tensoralg import (DegreeCapExceeded, InvalidBase, check_yb_algebra,
                        counit, delta_beta_iter, delta_beta_via_w,
                        slot_bounds)


class QBStructure:
    """Component maps M_pq up to a degree cap, boundary values enforced.

    M_00 = 0, M_10 = M_01 = id, and M_n0 = M_0n = 0 for n >= 2.  Supplied
    components must have min(p, q) >= 1.
    """

    _next_id = 0

    def __init__(self, braiding, components=None, degree_cap=6):
        if not braiding.validated:
            raise ValueError("braiding must be validated")
        self.space = braiding.space
        self.braiding = braiding
        self.degree_cap = degree_cap
        self.components = {}
        if components:
            for (p, q), f in components.items():
                if p < 1 or q < 1:
                    raise ValueError(
                        "boundary component (%d, %d) is fixed" % (p, q))
                if p + q > degree_cap:
                    raise ValueError(
                        "component (%d, %d) exceeds cap %d" % (p, q,
                                                               degree_cap))
                if f.in_degree != p + q:
                    raise ValueError("component (%d, %d) has wrong in-degree"
                                     % (p, q))
                self.components[(p, q)] = f
        self._id_v = LinMap.identity(self.space, 1)
        self.uid = QBStructure._next_id
        QBStructure._next_id += 1
        self._star_cache = {}

    def component(self, p, q):
        """M_pq as a LinMap, or None for an identically zero component."""
        if p == 0 or q == 0:
            if (p, q) in ((1, 0), (0, 1)):
                return self._id_v
            return None
        return self.components.get((p, q))


def _block_degrees(letters, cuts):
    """Degrees (p_t, q_t) of the consecutive pair factors of a term."""
    b = slot_bounds(letters, cuts)
    return [(b[2 * t + 1] - b[2 * t], b[2 * t + 2] - b[2 * t + 1])
            for t in range(len(b) // 2)]


def _apply_m_blocks(M, x):
    """M^{(x)n} on an element with 2n-1 cuts; output is a plain element."""
    out = Element()
    for (letters, cuts), c in x.terms.items():
        b = slot_bounds(letters, cuts)
        degrees = _block_degrees(letters, cuts)
        maps = []
        dead = False
        for (p, q) in degrees:
            f = M.component(p, q)
            if f is None:
                dead = True
                break
            maps.append(f)
        if dead:
            continue
        acc = [((), c)]
        for t, f in enumerate(maps):
            seg = letters[b[2 * t]:b[2 * t + 2]]
            img = f.apply_word(seg)
            nxt = []
            for (wl, s) in acc:
                for (fl, _), a in img.terms.items():
                    nxt.append((wl + fl, s * a))
            acc = nxt
        for (wl, s) in acc:
            if not s.is_zero():
                out.add_term((wl, ()), s)
    return out


def _star_pair_word(M, letters, cut, form):
    key = (letters, cut, form)
    cached = M._star_cache.get(key)
    if cached is not None:
        return cached
    total = len(letters)
    if total > M.degree_cap:
        raise DegreeCapExceeded(
            "degree %d exceeds cap %d" % (total, M.degree_cap))
    if total == 0:
        res = Element.unit()
    else:
        res = Element()
        z = Element.basis(letters, (cut,))
        for n in range(1, total + 1):
            if form == "reduced":
                d = delta_beta_iter(M.braiding, z, n - 1, reduced=True)
            else:
                d = delta_beta_via_w(M.braiding, z, n - 1)
            res = res + _apply_m_blocks(M, d)
    M._star_cache[key] = res
    return res


def star_product(M, x, y, form="reduced"):
    """The induced product on T(V), evaluated exactly.

    `form` selects between the reduced-coproduct expansion and the
    block-braid expansion; the two agree (cross-checked in the test suite).
    """
    out = Element()
    for (lw, lc), a in x.terms.items():
        for (rw, rc), b in y.terms.items():
            if lc or rc:
                raise ValueError("star_product expects uncut elements")
            res = _star_pair_word(M, lw + rw, len(lw), form)
            coeff = a * b
            for key, s in res.terms.items():
                out.add_term(key, s * coeff)
    return out


def star_power(n, M):
    """v_1 (x) ... (x) v_{n+1} -> v_1 * ... * v_{n+1}, left-nested."""
    if n + 1 > M.degree_cap:
        raise DegreeCapExceeded("power %d exceeds cap %d" % (n + 1,
                                                             M.degree_cap))
    cols = {}
    for word in M.space.words(n + 1):
        acc = Element.basis(word[:1])
        for t in range(1, n + 1):
            acc = star_product(M, acc, Element.basis(word[t:t + 1]))
        if not acc.is_zero():
            cols[word] = acc
    return LinMap(n + 1, cols)


# -- validation ------------------------------------------------------------

class QBReport:
    """Outcome of qb_validate: one entry per identity instance."""

    def __init__(self, entries):
        self.entries = entries

    @property
    def ok(self):
        return all(e["ok"] for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e["ok"]]


def _eq5_side(M, letters, i, j, k, left):
    """One side of the associativity condition on a basis word.

    `left` selects the sum over inner products of the first two blocks;
    otherwise the last two.  Also returns whether the term one past the
    stated summation limit vanishes.
    """
    out = Element()
    if left:
        head, tail = letters[:i + j], letters[i + j:]
        pair_cut, inner_deg, outer = i, i + j, k
    else:
        head, tail = letters[i:], letters[:i]
        pair_cut, inner_deg, outer = j, j + k, i
    z = Element.basis(head, (pair_cut,))
    for r in range(1, inner_deg + 1):
        d = delta_beta_iter(M.braiding, z, r - 1, reduced=True)
        inner = _apply_m_blocks(M, d)
        f = M.component(r, outer) if left else M.component(outer, r)
        if f is None:
            continue
        for (wl, _), c in inner.terms.items():
            arg = wl + tail if left else tail + wl
            img = f.apply_word(arg)
            for key, s in img.terms.items():
                out.add_term(key, s * c)
    beyond = delta_beta_iter(M.braiding, z, inner_deg, reduced=True)
    return out, beyond.is_zero()


def qb_validate(M, degree_bound=None):
    """Check the braiding-compatibility and associativity conditions.

    All identities are verified on every basis word with i+j+k up to the
    bound; each instance yields a report entry, failures carry a witness.
    """
    bound = degree_bound if degree_bound is not None else M.degree_cap
    if bound > M.degree_cap:
        raise ValueError("bound exceeds degree cap")
    space = M.space
    entries = []
    triples = sorted((i, j, k)
                     for i in range(1, bound + 1)
                     for j in range(1, bound + 1)
                     for k in range(1, bound + 1)
                     if i + j + k <= bound)
    for (i, j, k) in triples:
        # beta_{1k}(M_ij (x) id^k) = (id^k (x) M_ij) beta_{i+j,k}
        f = M.component(i, j)
        witness = None
        for z in space.words(i + j + k):
            lhs = Element()
            rhs = Element()
            if f is not None:
                img = f.apply_word(z[:i + j])
                for (wl, _), c in img.terms.items():
                    br = apply_beta_letters(M.braiding, 1, k, wl + z[i + j:])
                    for key, s in br.terms.items():
                        lhs.add_term(key, s * c)
                br = apply_beta_letters(M.braiding, i + j, k, z)
                for (bl, _), c in br.terms.items():
                    img = f.apply_word(bl[k:])
                    for (wl, _), s in img.terms.items():
                        rhs.add_term((bl[:k] + wl, ()), s * c)
            if lhs != rhs:
                witness = z
                break
        entries.append({"identity": "yb-left", "triple": (i, j, k),
                        "ok": witness is None, "witness": witness})
        # beta_{i1}(id^i (x) M_jk) = (M_jk (x) id^i) beta_{i,j+k}
        f = M.component(j, k)
        witness = None
        for z in space.words(i + j + k):
            lhs = Element()
            rhs = Element()
            if f is not None:
                img = f.apply_word(z[i:])
                for (wl, _), c in img.terms.items():
                    br = apply_beta_letters(M.braiding, i, 1, z[:i] + wl)
                    for key, s in br.terms.items():
                        lhs.add_term(key, s * c)
                br = apply_beta_letters(M.braiding, i, j + k, z)
                for (bl, _), c in br.terms.items():
                    img = f.apply_word(bl[:j + k])
                    for (wl, _), s in img.terms.items():
                        rhs.add_term((wl + bl[j + k:], ()), s * c)
            if lhs != rhs:
                witness = z
                break
        entries.append({"identity": "yb-right", "triple": (i, j, k),
                        "ok": witness is None, "witness": witness})
        # associativity condition, with vanishing of the next summand
        witness = None
        vanish_ok = True
        for z in space.words(i + j + k):
            lhs, v1 = _eq5_side(M, z, i, j, k, left=True)
            rhs, v2 = _eq5_side(M, z, i, j, k, left=False)
            vanish_ok = vanish_ok and v1 and v2
            if lhs != rhs:
                witness = z
                break
        entries.append({"identity": "assoc", "triple": (i, j, k),
                        "ok": witness is None, "witness": witness})
        entries.append({"identity": "assoc-vanishing", "triple": (i, j, k),
                        "ok": vanish_ok, "witness": None})
    entries.sort(key=lambda e: (e["identity"], e["triple"]))
    return QBReport(entries)


# -- quasi-shuffle ---------------------------------------------------------

class YBBase:
    """A product on V compatible with the braiding (rows of the product
    compatibility diagram; no unit is required)."""

    _next_id = 0

    def __init__(self, space, mult, braiding, validate=True):
        if mult.in_degree != 2:
            raise InvalidBase("base product must have in-degree 2")
        self.space = space
        self.mult = mult
        self.braiding = braiding
        if validate:
            fails = _base_row_failures(space, mult, braiding)
            if fails:
                raise InvalidBase("base fails compatibility at %r"
                                  % (fails[0],))
        self.uid = YBBase._next_id
        YBBase._next_id += 1
        self._memo = {}

    def qb_structure(self, degree_cap=6):
        """The induced structure whose only interior component is M_11."""
        comps = {}
        if self.mult.columns:
            comps[(1, 1)] = self.mult
        return QBStructure(self.braiding, comps, degree_cap)


def _base_row_failures(space, mult, braiding):
    sig = braiding.fwd

    def act(pos, x):
        out = Element()
        for (letters, cuts), c in x.terms.items():
            img = sig.apply_word(letters[pos:pos + 2])
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 2:], cuts),
                             a * c)
        return out

    def mul_at(pos, x):
        out = Element()
        for (letters, cuts), c in x.terms.items():
            img = mult.apply_word(letters[pos:pos + 2])
            for (pw, _), a in img.terms.items():
                out.add_term((letters[:pos] + pw + letters[pos + 2:], cuts),
                             a * c)
        return out

    fails = []
    for word in space.words(3):
        x = Element.basis(word)
        if act(0, mul_at(0, x)) != mul_at(1, act(0, act(1, x))):
            fails.append(("row-1", word))
        if act(0, mul_at(1, x)) != mul_at(0, act(1, act(0, x))):
            fails.append(("row-2", word))
    return fails


def quasi_shuffle(x, y, base):
    """Three-term recursive product mixing the braiding with base.mult."""
    out = Element()
    for (lw, lc), a in x.terms.items():
        for (rw, rc), b in y.terms.items():
            if lc or rc:
                raise ValueError("quasi_shuffle expects uncut elements")
            res = _qsh_words(base, lw, rw)
            coeff = a * b
            for key, s in res.terms.items():
                out.add_term(key, s * coeff)
    return out


def _qsh_words(base, u, v):
    key = (u, v)
    cached = base._memo.get(key)
    if cached is not None:
        return cached
    if not v:
        res = Element.basis(u)
    elif not u:
        res = Element.basis(v)
    else:
        i, j = len(u), len(v)
        res = Element()
        # last letter of v split off before any braiding
        t1 = _qsh_words(base, u, v[:-1])
        for (wl, _), c in t1.terms.items():
            res.add_term((wl + v[-1:], ()), c)
        # migrate the last letter of u to the end, then recurse on the rest
        z = Element.basis(u + v)
        for pos in range(i, i + j):
            z = base.braiding.sigma_i(pos, None)(z)
        for (wl, _), c in z.terms.items():
            rec = _qsh_words(base, wl[:i - 1], wl[i - 1:i + j - 1])
            for (rl, _), s in rec.terms.items():
                res.add_term((rl + wl[i + j - 1:], ()), s * c)
        # migrate one step less and close with the base product
        z = Element.basis(u + v)
        for pos in range(i, i + j - 1):
            z = base.braiding.sigma_i(pos, None)(z)
        for (wl, _), c in z.terms.items():
            prod = base.mult.apply_word(wl[i + j - 2:])
            if prod.is_zero():
                continue
            rec = _qsh_words(base, wl[:i - 1], wl[i - 1:i + j - 2])
            for (rl, _), s in rec.terms.items():
                for (pl, _), t in prod.terms.items():
                    res.add_term((rl + pl, ()), s * t * c)
    base._memo[key] = res
    return res


# -- the two-product construction ------------------------------------------

class TwoYB:
    """One space, two associative unital products, one braiding.

    Both products must be compatible with the braiding; the unit element is
    shared.  Validation is exhaustive over basis words.
    """

    def __init__(self, space, braiding, star, dot, unit, validate=True):
        self.space = space
        self.braiding = braiding
        self.star = star
        self.dot = dot
        self.unit = unit
        if validate:
            for name, f in (("star", star), ("dot", dot)):
                if not _is_associative(space, f):
                    raise InvalidBase("%s product is not associative" % name)
                if not _is_unital(space, f, unit):
                    raise InvalidBase("%s product is not unital" % name)
                fails = check_yb_algebra(space, f, unit, braiding)
                if fails:
                    raise InvalidBase(
                        "%s product fails compatibility at %r"
                        % (name, fails[0][:2]))


def _mult_elems(f, x, y):
    out = Element()
    for (lw, _), a in x.terms.items():
        for (rw, _), b in y.terms.items():
            img = f.apply_word(lw + rw)
            for key, s in img.terms.items():
                out.add_term(key, s * (a * b))
    return out


def _is_associative(space, f):
    for word in space.words(3):
        a, b, c = (Element.basis(word[t:t + 1]) for t in range(3))
        if _mult_elems(f, _mult_elems(f, a, b), c) != \
                _mult_elems(f, a, _mult_elems(f, b, c)):
            return False
    return True


def _is_unital(space, f, unit):
    for j in range(space.dim):
        x = Element.basis((j,))
        if _mult_elems(f, unit, x) != x or _mult_elems(f, x, unit) != x:
            return False
    return True


def _fold_dot(a, x):
    """Left fold of the dot product over the letters of each term."""
    out = Element()
    for (letters, _), c in x.terms.items():
        acc = Element.basis(letters[:1], (), c)
        for t in range(1, len(letters)):
            acc = _mult_elems(a.dot, acc, Element.basis(letters[t:t + 1]))
        out = out + acc
    return out


def from_2yb(a, degree_bound):
    """Component maps obtained by peeling the star product of two algebras.

    M_pq is the star product of the dot-collapsed blocks minus all shorter
    factorizations through previously built components.
    """
    comps = {}

    def component(p, q):
        if p == 0 or q == 0:
            if (p, q) in ((1, 0), (0, 1)):
                return LinMap.identity(a.space, 1)
            return None
        return comps.get((p, q))

    for total in range(2, degree_bound + 1):
        for p in range(1, total):
            q = total - p
            cols = {}
            for z in a.space.words(total):
                left = _fold_dot(a, Element.basis(z[:p]))
                right = _fold_dot(a, Element.basis(z[p:]))
                col = _mult_elems(a.star, left, right)
                pair = Element.basis(z, (p,))
                for k in range(2, total + 1):
                    d = delta_beta_iter(a.braiding, pair, k - 1,
                                        reduced=True)
                    for (letters, cuts), c in d.terms.items():
                        degrees = _block_degrees(letters, cuts)
                        maps = [component(dp, dq) for (dp, dq) in degrees]
                        if any(f is None for f in maps):
                            continue
                        b = slot_bounds(letters, cuts)
                        acc = Element.basis((), (), c)
                        for t, f in enumerate(maps):
                            seg = letters[b[2 * t]:b[2 * t + 2]]
                            acc = _mult_pointwise(acc, f.apply_word(seg))
                        folded = _fold_dot(a, acc)
                        col = col - folded
                if not col.is_zero():
                    cols[z] = col
            if cols:
                comps[(p, q)] = LinMap(total, cols)
    return QBStructure(a.braiding, comps, degree_bound)


def _mult_pointwise(acc, factor):
    out = Element()
    for (aw, _), s in acc.terms.items():
        for (fw, _), t in factor.terms.items():
            out.add_term((aw + fw, ()), s * t)
    return out


# -- antipode --------------------------------------------------------------

def reduced_deconcat_iter(x, n):
    """All splits into n+1 nonempty blocks (n strictly increasing cuts)."""
    out = Element()
    for (letters, cuts), c in x.terms.items():
        if cuts:
            raise ValueError("expects uncut elements")
        for cts in combinations(range(1, len(letters)), n):
            out.add_term((letters, cts), c)
    return out


def antipode(x, M):
    """Convolution inverse of the identity for the star-product bialgebra."""
    eps = counit(x)
    out = Element()
    if not eps.is_zero():
        out.add_term(((), ()), eps)
    xbar = x - Element.basis((), (), eps) if not eps.is_zero() else x
    degrees = xbar.degrees()
    if not degrees:
        return out
    for n in range(0, max(degrees)):
        d = reduced_deconcat_iter(xbar, n)
        sign = Scalar.from_int((-1) ** (n + 1))
        for (letters, cuts), c in d.terms.items():
            b = (0,) + cuts + (len(letters),)
            acc = Element.basis(letters[b[0]:b[1]])
            for t in range(1, n + 1):
                acc = star_product(M, acc,
                                   Element.basis(letters[b[t]:b[t + 1]]))
            coeff = c * sign
            for key, s in acc.terms.items():
                out.add_term(key, s * coeff)
    return out


# -- serialization ---------------------------------------------------------

def qb_to_obj(M):
    from .linear import linmap_to_obj
    entries = [{"p": p, "q": q, "map": linmap_to_obj(f)}
               for (p, q), f in sorted(M.components.items())]
    return {"M": entries, "degree_cap": M.degree_cap}


def qb_from_obj(obj, braiding):
    from .linear import linmap_from_obj
    comps = {}
    for e in obj["M"]:
        comps[(e["p"], e["q"])] = linmap_from_obj(e["map"], e["p"] + e["q"])
    return QBStructure(braiding, comps, obj["degree_cap"])
