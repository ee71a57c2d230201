"""Finite-dimensional spaces, tensor words, and exact sparse linear maps.

Everything is basis-driven: a Word is a tuple of basis indices, an Element is
a finitely supported linear combination of words with Scalar coefficients,
and a LinMap is a sparse column map defined on words of one fixed degree.

Elements may carry "cuts": a tuple of split positions marking how the word is
distributed over tensor factors of T(V) (one cut for T(V) x T(V), more for
iterated coproducts).  All map machinery works on the plain letters; cut
bookkeeping is handled by the callers in tensoralg.
"""

from __future__ import annotations

from .scalars import Scalar


class DegreeMismatch(ValueError):
    pass


class Singular(ValueError):
    pass


class Space:
    """Finite-dimensional vector space with a named basis."""

    def __init__(self, basis_names):
        names = list(basis_names)
        if not names:
            raise ValueError("dimension must be at least 1")
        if len(set(names)) != len(names):
            raise ValueError("basis labels must be distinct")
        self.basis_names = names
        self.dim = len(names)

    def words(self, degree):
        """All basis words of the given degree, lexicographic order."""
        if degree == 0:
            return [()]
        out = [()]
        for _ in range(degree):
            out = [w + (i,) for w in out for i in range(self.dim)]
        return out

    def __repr__(self):
        return "Space(%r)" % (self.basis_names,)


class Element:
    """Finitely supported linear combination of (word, cuts) pairs.

    `terms` maps (letters, cuts) -> Scalar with no stored zeros.  Plain
    elements of T(V) use cuts = ().
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if not c.is_zero():
                    self.terms[key] = c

    @staticmethod
    def zero():
        return Element()

    @staticmethod
    def basis(letters, cuts=(), coeff=None):
        c = coeff if coeff is not None else Scalar.one()
        return Element({(tuple(letters), tuple(cuts)): c})

    @staticmethod
    def unit():
        """The empty word, representing 1 in K = V^{0}."""
        return Element.basis(())

    def is_zero(self):
        return not self.terms

    def add_term(self, key, coeff):
        # in-place accumulation; callers must not share the dict
        cur = self.terms.get(key)
        new = coeff if cur is None else cur + coeff
        if new.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = new

    def __add__(self, other):
        out = Element(dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def __sub__(self, other):
        out = Element(dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, -c)
        return out

    def __neg__(self):
        return Element({k: -c for k, c in self.terms.items()})

    def scale(self, s):
        if s.is_zero():
            return Element.zero()
        return Element({k: c * s for k, c in self.terms.items()})

    def drop_cuts(self):
        out = Element()
        for (letters, _cuts), c in self.terms.items():
            out.add_term((letters, ()), c)
        return out

    def degrees(self):
        return sorted({len(k[0]) for k in self.terms})

    def component(self, degree):
        return Element({k: c for k, c in self.terms.items()
                        if len(k[0]) == degree})

    def __eq__(self, other):
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("%s*%s|%s" % (c, k[0], k[1])
                          for k, c in sorted(self.terms.items()))


def tensor_elements(x, y):
    """Concatenate words of x and y; cuts of y are shifted accordingly."""
    out = Element()
    for (lw, lc), a in x.terms.items():
        n = len(lw)
        for (rw, rc), b in y.terms.items():
            out.add_term((lw + rw, lc + tuple(p + n for p in rc)), a * b)
    return out


class LinMap:
    """Sparse exact linear map defined on basis words of one degree.

    Absent columns are zero.  Columns are plain Elements (no cuts).
    """

    def __init__(self, in_degree, columns=None, name=None):
        self.in_degree = in_degree
        self.columns = dict(columns) if columns else {}
        self.name = name

    @staticmethod
    def identity(space, degree):
        cols = {w: Element.basis(w) for w in space.words(degree)}
        return LinMap(degree, cols, name="id")

    def column(self, word):
        return self.columns.get(tuple(word), Element.zero())

    def apply(self, x):
        """Linear extension to an Element (plain words only)."""
        out = Element()
        for (letters, cuts), c in x.terms.items():
            if cuts:
                raise DegreeMismatch("LinMap.apply expects uncut elements")
            if len(letters) != self.in_degree:
                raise DegreeMismatch(
                    "word degree %d, map expects %d" % (len(letters),
                                                        self.in_degree))
            col = self.columns.get(letters)
            if col is None:
                continue
            for key, a in col.terms.items():
                out.add_term(key, a * c)
        return out

    def apply_word(self, letters):
        return self.columns.get(tuple(letters), Element.zero())

    def compose(self, other):
        """self o other."""
        cols = {}
        for w, col in other.columns.items():
            res = self.apply(col)
            if not res.is_zero():
                cols[w] = res
        return LinMap(other.in_degree, cols)

    def tensor(self, other):
        """Kronecker product acting on concatenated words."""
        cols = {}
        for w1, c1 in self.columns.items():
            for w2, c2 in other.columns.items():
                res = tensor_elements(c1, c2)
                if not res.is_zero():
                    cols[w1 + w2] = res
        return LinMap(self.in_degree + other.in_degree, cols)

    def add(self, other):
        if self.in_degree != other.in_degree:
            raise DegreeMismatch("cannot add maps of different in-degrees")
        cols = {w: Element(dict(c.terms)) for w, c in self.columns.items()}
        for w, c in other.columns.items():
            cur = cols.get(w, Element.zero())
            s = cur + c
            if s.is_zero():
                cols.pop(w, None)
            else:
                cols[w] = s
        return LinMap(self.in_degree, cols)

    def scale(self, s):
        return LinMap(self.in_degree,
                      {w: c.scale(s) for w, c in self.columns.items()})

    def equals(self, other, space=None, degree=None):
        deg = degree if degree is not None else self.in_degree
        words = set(self.columns) | set(other.columns)
        if space is not None:
            words = set(space.words(deg))
        for w in words:
            if self.column(w) != other.column(w):
                return False
        return True

    def __repr__(self):
        return "LinMap(deg=%d, %d cols)" % (self.in_degree, len(self.columns))


def map_apply(f, x):
    return f.apply(x)


def map_compose(f, g):
    return f.compose(g)


def map_tensor(f, g):
    return f.tensor(g)


def map_invert_exact(f, space, degree=None):
    """Exact inverse on one degree component via Gaussian elimination.

    Raises Singular when the map is not invertible on that component.
    """
    deg = degree if degree is not None else f.in_degree
    words = space.words(deg)
    index = {w: i for i, w in enumerate(words)}
    n = len(words)
    zero, one = Scalar.zero(), Scalar.one()
    # dense matrix: rows indexed by output word, columns by input word
    mat = [[zero] * n for _ in range(n)]
    for w, col in f.columns.items():
        j = index[w]
        for (letters, _), c in col.terms.items():
            mat[index[letters]][j] = c
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not mat[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            raise Singular("map is singular on degree %d" % deg)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        p = mat[col][col].invert()
        mat[col] = [v * p for v in mat[col]]
        inv[col] = [v * p for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = mat[r][col]
            if factor.is_zero():
                continue
            mat[r] = [a - factor * b for a, b in zip(mat[r], mat[col])]
            inv[r] = [a - factor * b for a, b in zip(inv[r], inv[col])]
    cols = {}
    for j, w in enumerate(words):
        e = Element()
        for i in range(n):
            if not inv[i][j].is_zero():
                e.add_term((words[i], ()), inv[i][j])
        if not e.is_zero():
            cols[w] = e
    return LinMap(deg, cols)


def column_echelon_basis(vectors, space, degree):
    """Echelon basis of the span of the given Elements.

    Deterministic pivot order: graded lexicographic on words.  Returns a list
    of Elements whose leading words are distinct.
    """
    words = space.words(degree)
    index = {w: i for i, w in enumerate(words)}
    basis = []  # list of (pivot_index, Element)
    for v in vectors:
        cur = v
        changed = True
        while changed and not cur.is_zero():
            changed = False
            lead = min(cur.terms, key=lambda k: index[k[0]])
            for piv, b in basis:
                if piv == index[lead[0]]:
                    cur = cur - b.scale(cur.terms[lead])
                    changed = True
                    break
        if cur.is_zero():
            continue
        lead = min(cur.terms, key=lambda k: index[k[0]])
        cur = cur.scale(cur.terms[lead].invert())
        basis.append((index[lead[0]], cur))
    basis.sort(key=lambda t: t[0])
    return [b for _, b in basis]


def map_kernel_basis(f, space, degree=None):
    """Echelon basis of the kernel of f on one degree component."""
    deg = degree if degree is not None else f.in_degree
    words = space.words(deg)
    # run column reduction on the columns, tracking combinations
    combos = {w: Element.basis(w) for w in words}
    cols = {w: Element(dict(f.column(w).terms)) for w in words}
    index = {}
    out_words = sorted({k[0] for c in cols.values() for k in c.terms})
    index = {w: i for i, w in enumerate(out_words)}
    pivots = {}  # pivot row index -> column word
    kernel = []
    for w in words:
        cur = cols[w]
        comb = combos[w]
        while not cur.is_zero():
            lead = min(cur.terms, key=lambda k: index[k[0]])
            piv = index[lead[0]]
            other = pivots.get(piv)
            if other is None:
                break
            factor = cur.terms[lead]
            cur = cur - cols[other].scale(factor)
            comb = comb - combos[other].scale(factor)
        if cur.is_zero():
            kernel.append(comb)
        else:
            lead = min(cur.terms, key=lambda k: index[k[0]])
            inv = cur.terms[lead].invert()
            cols[w] = cur.scale(inv)
            combos[w] = comb.scale(inv)
            pivots[index[lead[0]]] = w
    return column_echelon_basis(kernel, space, deg)


def in_span(x, basis, space, degree):
    """Exact membership of x in the span of an echelon basis."""
    words = space.words(degree)
    index = {w: i for i, w in enumerate(words)}
    cur = x
    for piv, b in sorted(((min(index[k[0]] for k in b.terms), b)
                          for b in basis), key=lambda t: t[0]):
        if cur.is_zero():
            return True
        pivot_word = words[piv]
        c = cur.terms.get((pivot_word, ()))
        if c is not None:
            cur = cur - b.scale(c)
    return cur.is_zero()


# -- serialization ---------------------------------------------------------

def term_sort_key(key):
    """Canonical order: total degree, then letters, then split positions."""
    letters, cuts = key
    return (len(letters), letters, cuts)


def element_to_obj(x):
    out = []
    for key in sorted(x.terms, key=term_sort_key):
        letters, cuts = key
        entry = {"word": list(letters), "coeff": str(x.terms[key])}
        if len(cuts) == 1:
            entry["split"] = cuts[0]
        elif cuts:
            entry["split"] = list(cuts)
        out.append(entry)
    return out


def element_from_obj(obj):
    from .scalars import parse_scalar
    x = Element()
    for entry in obj:
        cuts = entry.get("split", ())
        if isinstance(cuts, int):
            cuts = (cuts,)
        x.add_term((tuple(entry["word"]), tuple(cuts)),
                   parse_scalar(entry["coeff"]))
    return x


def linmap_to_obj(f):
    out = []
    for w in sorted(f.columns):
        col = f.columns[w]
        outs = [{"word": list(k[0]), "coeff": str(col.terms[k])}
                for k in sorted(col.terms, key=term_sort_key)]
        out.append({"in": list(w), "out": outs})
    return out


def linmap_from_obj(obj, in_degree):
    from .scalars import parse_scalar
    cols = {}
    for entry in obj:
        col = Element()
        for t in entry["out"]:
            col.add_term((tuple(t["word"]), ()), parse_scalar(t["coeff"]))
        cols[tuple(entry["in"])] = col
    return LinMap(in_degree, cols)
