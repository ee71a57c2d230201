"""Command-line front end: sessions, verification suites, computations.

A session is a JSON file declaring named objects (braidings, Hopf algebras,
Yetter-Drinfel'd modules, tower structures, base algebras).  `verify` runs
an exhaustive identity suite against one object and reports each identity
with a deterministic JSON document; `compute` evaluates a small expression
language over the session and prints the exact result.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import binfty, catalog, hopf, tensoralg
from .braid import Braiding, beta_component, check_yang_baxter
from .linear import Element, LinMap, Space, element_to_obj, linmap_from_obj
from .scalars import Scalar, ScalarParseError, parse_scalar


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, column)
        super().__init__(message)


class ValidationError(ValueError):
    def __init__(self, obj_name, axiom, witness=None):
        self.obj_name = obj_name
        self.axiom = axiom
        self.witness = witness
        super().__init__("object %r fails %s at %r"
                         % (obj_name, axiom, witness))


class UnknownTarget(KeyError):
    pass


class SuiteMismatch(ValueError):
    pass


class Session:
    """Named objects plus a global degree cap."""

    def __init__(self, objects=None, degree_cap=6):
        self.objects = dict(objects) if objects else {}
        self.degree_cap = degree_cap

    def get(self, name):
        if name not in self.objects:
            raise UnknownTarget(name)
        return self.objects[name]

    def unique(self, kinds):
        """The single object of one of the given types, if unambiguous."""
        found = [(n, o) for n, o in sorted(self.objects.items())
                 if isinstance(o, kinds)]
        if len(found) != 1:
            raise UnknownTarget(
                "expected exactly one %s in the session, found %d"
                % ("/".join(k.__name__ for k in kinds), len(found)))
        return found[1 - 1][1]


def load_session(path):
    """Build and validate every declared object; abort on the first failure.

    Construction-time invariant violations surface as ValidationError naming
    the object and axiom; malformed files as ParseError with a location.
    """
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno)
    if data.get("version") != 1:
        raise ParseError("unsupported session version %r"
                         % (data.get("version"),))
    session = Session(degree_cap=data.get("degree_cap", 6))
    for decl in data.get("objects", []):
        name = decl.get("name")
        if not name or name in session.objects:
            raise ParseError("missing or duplicate object name %r" % (name,))
        try:
            session.objects[name] = _build_object(decl, session)
        except ScalarParseError as e:
            raise ParseError(str(e))
        except (ParseError, ValidationError):
            raise
        except (ValueError, KeyError) as e:
            raise ValidationError(name, "construction", str(e))
    return session


def _build_object(decl, session):
    kind = decl.get("kind")
    if kind == "catalog":
        return catalog.resolve_catalog(decl["address"])
    if kind == "diagonal":
        matrix = [[parse_scalar(entry) for entry in row]
                  for row in decl["matrix"]]
        return catalog.diagonal_braiding(matrix)
    if kind == "hopf":
        h = hopf.hopf_from_obj(decl["data"])
        report = hopf.hopf_validate(h)
        if not report.ok:
            bad = report.failures()[0]
            raise ValidationError(decl["name"], bad["axiom"], bad["witness"])
        return h
    if kind == "yd":
        m = hopf.yd_from_obj(decl["data"])
        report = hopf.yd_validate(m)
        if not report.ok:
            bad = report.failures()[0]
            raise ValidationError(decl["name"], bad["axiom"], bad["witness"])
        return m
    if kind == "yb-base":
        braiding = session.get(decl["braiding"])
        mult = linmap_from_obj(decl["mult"], 2)
        return binfty.YBBase(braiding.space, mult, braiding)
    if kind == "quasishuffle":
        base = session.get(decl["base"])
        cap = decl.get("degree_cap", session.degree_cap)
        return base.qb_structure(cap)
    if kind == "qb":
        braiding = session.get(decl["braiding"])
        return binfty.qb_from_obj(decl["data"], braiding)
    raise ParseError("unknown object kind %r" % (kind,))


# -- verify ----------------------------------------------------------------

def _witness_obj(w):
    if w is None:
        return None
    if isinstance(w, Element):
        return element_to_obj(w)
    if isinstance(w, tuple):
        return [_witness_obj(p) for p in w]
    if isinstance(w, (int, str)):
        return w
    return repr(w)


def _suite_entries(session, target, suite, bound):
    obj = session.get(target)
    entries = []

    def add(identity, ok, witness=None):
        entries.append({"identity": identity, "ok": bool(ok),
                        "witness": _witness_obj(witness)})

    def braiding_suites(b):
        ran = False
        if suite in ("yb-algebra", "all"):
            ran = True
            ok, wit = check_yang_baxter(b.fwd, b.space)
            add("yang-baxter", ok, wit)
            for i in range(1, bound + 1):
                for j in range(1, bound + 1):
                    for k in range(1, bound + 1):
                        if i + j + k > bound:
                            continue
                        fails = tensoralg.check_tensor_yb_product(
                            lambda x, y: tensoralg.qshuffle_product(x, y, b),
                            b, i, j, k)
                        add("shuffle-product %d,%d,%d" % (i, j, k),
                            not fails, fails[0] if fails else None)
        if suite in ("yb-coalgebra", "all"):
            ran = True
            ok, wit = check_yang_baxter(b.fwd, b.space)
            add("yang-baxter", ok, wit)
            for p in range(1, bound + 1):
                for q in range(1, bound + 1):
                    for r in range(1, bound + 1):
                        if p + q + r > bound:
                            continue
                        fails = tensoralg.check_tensor_yb_coproduct(
                            b, p, q, r)
                        add("unshuffle-coproduct %d,%d,%d" % (p, q, r),
                            not fails, fails[0] if fails else None)
        if not ran:
            raise SuiteMismatch("suite %r does not apply to a braiding"
                                % (suite,))

    if isinstance(obj, Braiding):
        braiding_suites(obj)
    elif isinstance(obj, binfty.QBStructure):
        if suite not in ("qb-infinity", "all"):
            raise SuiteMismatch("suite %r does not apply to a tower"
                                % (suite,))
        report = binfty.qb_validate(obj, bound)
        for e in report.entries:
            add("%s %s" % (e["identity"], ",".join(map(str, e["triple"]))),
                e["ok"], e.get("witness"))
    elif isinstance(obj, hopf.HopfPresentation):
        if suite not in ("hopf", "all"):
            raise SuiteMismatch("suite %r does not apply to a Hopf algebra"
                                % (suite,))
        report = hopf.hopf_validate(obj)
        for e in report.entries:
            add(e["axiom"], e["ok"], e["witness"])
    elif isinstance(obj, hopf.YDModule):
        if suite not in ("yd", "all"):
            raise SuiteMismatch("suite %r does not apply to a YD module"
                                % (suite,))
        report = hopf.yd_validate(obj)
        for e in report.entries:
            add(e["axiom"], e["ok"], e["witness"])
    elif isinstance(obj, catalog.WedgeAlgebra):
        if suite not in ("yb-algebra", "yb-coalgebra", "all"):
            raise SuiteMismatch("suite %r does not apply to the signed flip"
                                % (suite,))
        ok, wit = check_yang_baxter(obj.braiding.fwd, obj.space)
        add("yang-baxter", ok, wit)
        report = catalog.qflip_compat_check(obj)
        for e in report.entries:
            add(e["axiom"], e["ok"], e["witness"])
    else:
        raise SuiteMismatch("no suite applies to objects of type %s"
                            % type(obj).__name__)
    return entries


def cmd_verify(session, target, suite, bound):
    """Run one suite; returns (exit_code, report dict)."""
    entries = _suite_entries(session, target, suite, bound)
    ok = all(e["ok"] for e in entries)
    report = {"target": target, "suite": suite, "bound": bound,
              "ok": ok, "entries": entries}
    return (0 if ok else 1), report


# -- compute ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*([(),]|[^\s(),]+)")


def _tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def _parse_element(text, space):
    """`e1*e2` words with optional scalar weights, joined by + and -.

    A term is an optional scalar literal followed by a `*`-joined word of
    basis names; the bare scalar `1` denotes the empty word.
    """
    stripped = text.strip()
    if not stripped or stripped[0] not in "+-":
        stripped = "+" + stripped
    terms = re.split(r"\s*(?<![\^*(])([+-])\s*", stripped)
    out = Element.zero()
    index = {n: i for i, n in enumerate(space.basis_names)}
    it = iter(terms[1:] if terms[0] == "" else terms)
    for sign, chunk in zip(it, it):
        chunk = chunk.strip()
        if not chunk:
            raise ParseError("empty term in element literal %r" % text)
        pieces = chunk.split()
        if len(pieces) > 2:
            raise ParseError("malformed term %r" % chunk)
        if len(pieces) == 2:
            coeff_text, word_text = pieces
        elif pieces[0].split("*")[0] in index:
            coeff_text, word_text = "1", pieces[0]
        else:
            coeff_text, word_text = pieces[0], ""
        try:
            coeff = parse_scalar(coeff_text)
        except ScalarParseError as e:
            raise ParseError(str(e))
        if sign == "-":
            coeff = -coeff
        if word_text:
            letters = []
            for name in word_text.split("*"):
                if name not in index:
                    raise ParseError("unknown basis name %r" % name)
                letters.append(index[name])
            out.add_term((tuple(letters), ()), coeff)
        else:
            out.add_term(((), ()), coeff)
    return out


def _split_args(text):
    """Top-level comma split of a parenthesized argument list."""
    args = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "," and depth == 0:
            args.append("".join(cur).strip())
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        cur.append(ch)
    tail = "".join(cur).strip()
    if tail or args:
        args.append(tail)
    return args


def _space_of(obj):
    if isinstance(obj, Braiding):
        return obj.space
    if isinstance(obj, binfty.QBStructure):
        return obj.braiding.space
    if isinstance(obj, binfty.YBBase):
        return obj.space
    raise SuiteMismatch("object has no underlying braided space")


def _session_space(session):
    """The single space underlying the session's objects, if unambiguous."""
    spaces = []
    for obj in session.objects.values():
        try:
            spaces.append(_space_of(obj))
        except SuiteMismatch:
            continue
    named = {tuple(sp.basis_names) for sp in spaces}
    if len(named) != 1:
        raise UnknownTarget(
            "expected a single underlying space, found %d" % len(named))
    return spaces[0]


def compute_expression(session, text, cap=None):
    """Evaluate one expression; returns an Element."""
    text = text.strip()
    m = re.match(r"^(\w+)\((.*)\)$", text, re.S)
    if not m:
        raise ParseError("expected op(args), got %r" % text)
    op, argtext = m.group(1), m.group(2)
    args = _split_args(argtext)
    cap = cap if cap is not None else session.degree_cap

    def want(n):
        if len(args) != n:
            raise ParseError("%s expects %d arguments, got %d"
                             % (op, n, len(args)))

    def check_cap(x):
        degs = x.degrees()
        if degs and max(degs) > cap:
            raise tensoralg.DegreeCapExceeded(
                "result degree %d exceeds cap %d" % (max(degs), cap))
        return x

    if op == "shuffle":
        if len(args) == 3:
            b = session.get(args[2])
        else:
            want(2)
            b = session.unique((Braiding,))
        sp = b.space
        x = _parse_element(args[0], sp)
        y = _parse_element(args[1], sp)
        return check_cap(tensoralg.qshuffle_product(x, y, b))
    if op == "quasishuffle":
        if len(args) == 3:
            base = session.get(args[2])
        else:
            want(2)
            base = session.unique((binfty.YBBase,))
        sp = base.space
        x = _parse_element(args[0], sp)
        y = _parse_element(args[1], sp)
        return check_cap(binfty.quasi_shuffle(x, y, base))
    if op == "star":
        want(3)
        M = session.get(args[0])
        if not isinstance(M, binfty.QBStructure):
            raise SuiteMismatch("star expects a tower structure first")
        sp = M.braiding.space
        x = _parse_element(args[1], sp)
        y = _parse_element(args[2], sp)
        return check_cap(binfty.star_product(M, x, y))
    if op == "coproduct":
        if len(args) == 2:
            sp = _space_of(session.get(args[1]))
        else:
            want(1)
            sp = _session_space(session)
        x = _parse_element(args[0], sp)
        return tensoralg.deconcatenate(x)
    if op == "antipode":
        want(2)
        M = session.get(args[0])
        if not isinstance(M, binfty.QBStructure):
            raise SuiteMismatch("antipode expects a tower structure first")
        x = _parse_element(args[1], M.braiding.space)
        return check_cap(binfty.antipode(x, M))
    if op == "braid":
        want(4)
        b = session.get(args[0])
        if not isinstance(b, Braiding):
            raise SuiteMismatch("braid expects a braiding first")
        i, j = int(args[1]), int(args[2])
        x = _parse_element(args[3], b.space)
        return beta_component(i, j, b).apply(x)
    raise ParseError("unknown operation %r" % op)


def format_element(x, space):
    """Canonical text: graded lexicographic terms, splits shown as `|`."""
    from .linear import term_sort_key
    if x.is_zero():
        return "0"
    parts = []
    for key in sorted(x.terms, key=term_sort_key):
        letters, cuts = key
        coeff = x.terms[key]
        bounds = (0,) + cuts + (len(letters),)
        blocks = []
        for t in range(len(bounds) - 1):
            seg = letters[bounds[t]:bounds[t + 1]]
            blocks.append("*".join(space.basis_names[i] for i in seg)
                          if seg else "1")
        word = "|".join(blocks)
        cs = str(coeff)
        if word == "1":
            parts.append(cs)
        elif cs == "1":
            parts.append(word)
        elif cs == "-1":
            parts.append("-%s" % word)
        else:
            # a sign that is not an exponent sign means a sum of monomials
            if re.search(r"(?<!\^)[+-]", cs[1:]):
                cs = "(%s)" % cs
            parts.append("%s %s" % (cs, word))
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def cmd_compute(session, expression, fmt="text", cap=None):
    """Evaluate and render; returns (exit_code, text)."""
    x = compute_expression(session, expression, cap)
    if fmt == "json":
        return 0, json.dumps(element_to_obj(x), sort_keys=True)
    # find a space to name the letters: any object sharing the session
    space = None
    for obj in session.objects.values():
        try:
            space = _space_of(obj)
            break
        except SuiteMismatch:
            continue
    if space is None:
        space = Space(["e%d" % (i + 1)
                       for i in range(1 + max((max(k[0]) for k in x.terms
                                               if k[0]), default=0))])
    return 0, format_element(x, space)


def main(argv=None):
    parser = argparse.ArgumentParser(prog="ybalg")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized sampling (unused by the "
                             "exhaustive suites)")
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run an identity suite on one object")
    pv.add_argument("session")
    pv.add_argument("target")
    pv.add_argument("--suite", default="all",
                    choices=["yb-algebra", "yb-coalgebra", "qb-infinity",
                             "hopf", "yd", "all"])
    pv.add_argument("--bound", type=int, default=4)

    pc = sub.add_parser("compute", help="evaluate an expression")
    pc.add_argument("session")
    pc.add_argument("expression")
    pc.add_argument("--format", default="text", choices=["text", "json"])
    pc.add_argument("--cap", type=int, default=None)

    args = parser.parse_args(argv)
    try:
        session = load_session(args.session)
        if args.command == "verify":
            code, report = cmd_verify(session, args.target, args.suite,
                                      args.bound)
            print(json.dumps(report, sort_keys=True, indent=2))
            return code
        code, text = cmd_compute(session, args.expression,
                                 fmt=args.format, cap=args.cap)
        print(text)
        return code
    except (ParseError, ValidationError, UnknownTarget, SuiteMismatch,
            tensoralg.DegreeCapExceeded) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
