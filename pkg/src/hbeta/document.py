"""Self-contained JSON documents describing fields, gradings and structures.

Layout (every section except ``field``, ``group`` and ``defaults_ack`` is
optional)::

    {
      "format": "hbeta-document/1",
      "defaults_ack": true,
      "field": "Fp:5",
      "group": [2],
      "beta": [[[1], [1], "4"]],
      "cocycles": {"sigma": [[[1], [1], "2"]]},
      "spaces": {"A": [["a1", [1]], ["a2", [0]]]},
      "algebras": {"M": {"space": "M", "product": [...], "unit": [["E11", "1"]]}},
      "lie_algebras": {"A": {"space": "A", "bracket": [["a1", "a1", [["a2", "1"]]]]}},
      "coalgebras": {"C": {"space": "C", "coproduct": [["c", [["c", "c", "1"]]]], "counit": [["c", "1"]]}},
      "cobrackets": {"d": {"space": "L", "cobracket": [["X", [["X", "H0", "1"]]]]}},
      "bialgebras": {"B": {"lie": "L", "cobracket": "d"}},
      "actions": {"act": {"kind": "left", "acting": "H", "on": "A", "table": [...]}},
      "pairs": {"P": {"A": "A", "H": "H", "left": "act", "right": null,
                      "deltaA": null, "deltaH": null}}
    }

Omitted bicharacter and cocycle entries are 1 and omitted structure
constants are 0.  ``defaults_ack`` must be ``true`` to confirm that these
defaults are intended.  Scalars are strings (``"a/b"`` over Q, residues over
F_p); integers are also accepted on input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .colie import CobracketTable, GradedCoalgebra
from .errors import HBetaError
from .gradedalg import BilinearTable, GradedAlgebra, GradedBasis, GradedLieAlgebra
from .grading import Bicharacter, FiniteAbelianGroup, TwoCocycle
from .matched import CobrackedPair, LeftAction, MatchedPair, RightAction
from .scalars import FieldDescriptor

FORMAT = "hbeta-document/1"

SECTIONS = ("cocycles", "spaces", "algebras", "lie_algebras", "coalgebras", "cobrackets",
            "bialgebras", "actions", "pairs")


class DocumentError(HBetaError, ValueError):
    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


@dataclass
class Document:
    field: FieldDescriptor
    group: FiniteAbelianGroup
    beta: Bicharacter
    cocycles: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)
    algebras: dict = field(default_factory=dict)
    lie_algebras: dict = field(default_factory=dict)
    coalgebras: dict = field(default_factory=dict)
    cobrackets: dict = field(default_factory=dict)
    bialgebras: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    pairs: dict = field(default_factory=dict)

    @classmethod
    def empty(cls, field_: FieldDescriptor, beta: Bicharacter) -> "Document":
        return cls(field_, beta.group, beta)

    def space_name(self, basis: GradedBasis, suggestion: str) -> str:
        """Name of ``basis`` in this document, registering it if new."""
        for name, b in self.spaces.items():
            if b == basis:
                return name
        name = suggestion
        k = 2
        while name in self.spaces:
            name = f"{suggestion}{k}"
            k += 1
        self.spaces[name] = basis
        return name

    def _fresh(self, section: str, name: str) -> str:
        table = getattr(self, section)
        out, k = name, 2
        while out in table:
            out = f"{name}{k}"
            k += 1
        return out

    def add(self, section: str, name: str, obj, space_hint: Optional[str] = None) -> str:
        """Insert ``obj`` under a fresh variant of ``name``; returns the name used."""
        name = self._fresh(section, name)
        for attr in ("basis", "acting", "acted_on"):
            basis = getattr(obj, attr, None)
            if isinstance(basis, GradedBasis):
                self.space_name(basis, space_hint or name)
        getattr(self, section)[name] = obj
        return name

    def matched_pair(self, name: str) -> MatchedPair:
        return self.pairs[name][0]

    def cobracked_pair(self, name: str) -> CobrackedPair:
        pair, dA, dH = self.pairs[name]
        if dA is None or dH is None:
            raise DocumentError("pair has no cobrackets (deltaA and deltaH required)", f"pairs.{name}")
        return CobrackedPair(pair, dA, dH)


# parsing --------------------------------------------------------------------

class _Reader:
    def __init__(self, raw: dict):
        self.raw = raw

    def need(self, obj, key, where, kind=None):
        if not isinstance(obj, dict) or key not in obj:
            raise DocumentError(f"missing key {key!r}", where)
        value = obj[key]
        if kind is not None and not isinstance(value, kind):
            raise DocumentError(f"{key!r} must be a {kind.__name__}", where)
        return value


def _scalar(F, text, where):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise DocumentError(f"scalar must be a string or integer, got {text!r}", where)
    try:
        return F(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc), where) from None


def _degree(G, value, where):
    if not isinstance(value, list) or len(value) != G.rank or \
            not all(isinstance(r, int) and not isinstance(r, bool) for r in value):
        raise DocumentError(f"degree {value!r} is not a residue list of length {G.rank}", where)
    if not G.is_canonical(tuple(value)):
        raise DocumentError(f"degree {value!r} out of range for {G}", where)
    return tuple(value)


def _list(value, where):
    if not isinstance(value, list):
        raise DocumentError("expected a list", where)
    return value


def _named_map(raw, key):
    value = raw.get(key, {})
    if not isinstance(value, dict):
        raise DocumentError("expected an object mapping names to definitions", key)
    return value


def _form(cls, G, F, entries, where):
    triples = []
    for n, entry in enumerate(_list(entries, where)):
        w = f"{where}[{n}]"
        if not isinstance(entry, list) or len(entry) != 3:
            raise DocumentError("entry must be [x, y, value]", w)
        triples.append((_degree(G, entry[0], w), _degree(G, entry[1], w), _scalar(F, entry[2], w)))
    try:
        return cls.from_entries(G, F, triples)
    except ValueError as exc:
        raise DocumentError(str(exc), where) from None


def _lookup(table, name, where, what):
    if not isinstance(name, str) or name not in table:
        raise DocumentError(f"unknown name {name!r} (no such {what})", where)
    return table[name]


def _index(basis, name, where):
    if not isinstance(name, str):
        raise DocumentError(f"basis name must be a string, got {name!r}", where)
    try:
        return basis.index(name)
    except KeyError:
        raise DocumentError(f"unknown name {name!r}", where) from None


def _bilinear(left, right, out, F, rows, where) -> BilinearTable:
    entries = {}
    for n, row in enumerate(_list(rows, where)):
        w = f"{where}[{n}]"
        if not isinstance(row, list) or len(row) != 3:
            raise DocumentError("entry must be [left, right, [[out, coeff], ...]]", w)
        key = (_index(left, row[0], w), _index(right, row[1], w))
        vec = entries.setdefault(key, {})
        for m, term in enumerate(_list(row[2], w)):
            tw = f"{w}[2][{m}]"
            if not isinstance(term, list) or len(term) != 2:
                raise DocumentError("term must be [name, coeff]", tw)
            k = _index(out, term[0], tw)
            vec[k] = vec.get(k, F.zero) + _scalar(F, term[1], tw)
    return BilinearTable(left, right, out, F, entries)


def _tensor_rows(basis, F, rows, where) -> dict:
    entries = {}
    for n, row in enumerate(_list(rows, where)):
        w = f"{where}[{n}]"
        if not isinstance(row, list) or len(row) != 2:
            raise DocumentError("entry must be [name, [[out1, out2, coeff], ...]]", w)
        tensor = entries.setdefault(_index(basis, row[0], w), {})
        for m, term in enumerate(_list(row[1], w)):
            tw = f"{w}[1][{m}]"
            if not isinstance(term, list) or len(term) != 3:
                raise DocumentError("term must be [out1, out2, coeff]", tw)
            key = (_index(basis, term[0], tw), _index(basis, term[1], tw))
            tensor[key] = tensor.get(key, F.zero) + _scalar(F, term[2], tw)
    return entries


def _vector(basis, F, terms, where) -> dict:
    out = {}
    for m, term in enumerate(_list(terms, where)):
        tw = f"{where}[{m}]"
        if not isinstance(term, list) or len(term) != 2:
            raise DocumentError("term must be [name, coeff]", tw)
        k = _index(basis, term[0], tw)
        out[k] = out.get(k, F.zero) + _scalar(F, term[1], tw)
    return {k: v for k, v in out.items() if v}


def parse(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(raw, dict):
        raise DocumentError("document must be a JSON object")
    r = _Reader(raw)
    fmt = raw.get("format", FORMAT)
    if fmt != FORMAT:
        raise DocumentError(f"unsupported format {fmt!r}", "format")
    if raw.get("defaults_ack") is not True:
        raise DocumentError("defaults_ack must be true (omitted beta/sigma entries are 1, "
                            "omitted structure constants are 0)", "defaults_ack")
    try:
        F = FieldDescriptor.parse(r.need(raw, "field", "", str))
    except ValueError as exc:
        raise DocumentError(str(exc), "field") from None
    orders = r.need(raw, "group", "", list)
    try:
        G = FiniteAbelianGroup(tuple(orders))
    except ValueError as exc:
        raise DocumentError(str(exc), "group") from None
    beta = _form(Bicharacter, G, F, raw.get("beta", []), "beta")
    doc = Document(F, G, beta)

    for name, entries in _named_map(raw, "cocycles").items():
        doc.cocycles[name] = _form(TwoCocycle, G, F, entries, f"cocycles.{name}")

    for name, items in _named_map(raw, "spaces").items():
        w = f"spaces.{name}"
        pairs = []
        for n, item in enumerate(_list(items, w)):
            iw = f"{w}[{n}]"
            if not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], str):
                raise DocumentError("basis entry must be [name, degree]", iw)
            pairs.append((item[0], _degree(G, item[1], iw)))
        try:
            doc.spaces[name] = GradedBasis.from_pairs(G, pairs)
        except ValueError as exc:
            raise DocumentError(str(exc), w) from None

    def space(defn, where):
        return _lookup(doc.spaces, r.need(defn, "space", where), f"{where}.space", "space")

    for name, defn in _named_map(raw, "algebras").items():
        w = f"algebras.{name}"
        B = space(defn, w)
        product = _bilinear(B, B, B, F, defn.get("product", []), f"{w}.product")
        unit = defn.get("unit")
        unit = None if unit is None else _vector(B, F, unit, f"{w}.unit")
        doc.algebras[name] = GradedAlgebra(B, product, unit)

    for name, defn in _named_map(raw, "lie_algebras").items():
        w = f"lie_algebras.{name}"
        B = space(defn, w)
        doc.lie_algebras[name] = GradedLieAlgebra(B, _bilinear(B, B, B, F, defn.get("bracket", []), f"{w}.bracket"), beta)

    for name, defn in _named_map(raw, "coalgebras").items():
        w = f"coalgebras.{name}"
        B = space(defn, w)
        coproduct = _tensor_rows(B, F, defn.get("coproduct", []), f"{w}.coproduct")
        counit = _vector(B, F, defn.get("counit", []), f"{w}.counit")
        doc.coalgebras[name] = GradedCoalgebra(B, F, coproduct, counit)

    for name, defn in _named_map(raw, "cobrackets").items():
        w = f"cobrackets.{name}"
        B = space(defn, w)
        doc.cobrackets[name] = CobracketTable(B, F, _tensor_rows(B, F, defn.get("cobracket", []), f"{w}.cobracket"))

    for name, defn in _named_map(raw, "bialgebras").items():
        w = f"bialgebras.{name}"
        L = _lookup(doc.lie_algebras, r.need(defn, "lie", w), f"{w}.lie", "Lie algebra")
        d = _lookup(doc.cobrackets, r.need(defn, "cobracket", w), f"{w}.cobracket", "cobracket")
        if d.basis != L.basis:
            raise DocumentError("Lie algebra and cobracket are on different spaces", w)
        doc.bialgebras[name] = (L, d)

    for name, defn in _named_map(raw, "actions").items():
        w = f"actions.{name}"
        kind = r.need(defn, "kind", w)
        if kind not in ("left", "right"):
            raise DocumentError("kind must be 'left' or 'right'", f"{w}.kind")
        Hb = _lookup(doc.spaces, r.need(defn, "acting", w), f"{w}.acting", "space")
        Ab = _lookup(doc.spaces, r.need(defn, "on", w), f"{w}.on", "space")
        out = Ab if kind == "left" else Hb
        table = _bilinear(Hb, Ab, out, F, defn.get("table", []), f"{w}.table")
        doc.actions[name] = (LeftAction if kind == "left" else RightAction)(table)

    for name, defn in _named_map(raw, "pairs").items():
        w = f"pairs.{name}"
        A = _lookup(doc.lie_algebras, r.need(defn, "A", w), f"{w}.A", "Lie algebra")
        H = _lookup(doc.lie_algebras, r.need(defn, "H", w), f"{w}.H", "Lie algebra")

        def action(key, cls):
            ref = defn.get(key)
            if ref is None:
                return cls.zero(H.basis, A.basis, F)
            act = _lookup(doc.actions, ref, f"{w}.{key}", "action")
            if not isinstance(act, cls):
                raise DocumentError(f"action {ref!r} is not a {cls.__name__}", f"{w}.{key}")
            return act

        def cobracket(key, basis):
            ref = defn.get(key)
            if ref is None:
                return None
            d = _lookup(doc.cobrackets, ref, f"{w}.{key}", "cobracket")
            if d.basis != basis:
                raise DocumentError(f"cobracket {ref!r} is on the wrong space", f"{w}.{key}")
            return d

        try:
            pair = MatchedPair(A, H, action("left", LeftAction), action("right", RightAction))
        except ValueError as exc:
            raise DocumentError(str(exc), w) from None
        doc.pairs[name] = (pair, cobracket("deltaA", A.basis), cobracket("deltaH", H.basis))

    unknown = set(raw) - {"format", "defaults_ack", "field", "group", "beta", *SECTIONS}
    if unknown:
        raise DocumentError(f"unknown keys {sorted(unknown)}")
    return doc


# serialization --------------------------------------------------------------

def _name_of(table: dict, obj, what: str) -> str:
    for name, candidate in table.items():
        if candidate is obj:
            return name
    for name, candidate in table.items():
        if candidate == obj:
            return name
    raise DocumentError(f"{what} referenced but not present in the document")


def _table_rows(t: BilinearTable):
    return [[l, r, [[o, str(c)] for o, c in terms]] for l, r, terms in t.rows()]


def _vec_rows(basis, vec):
    return [[basis.names[k], str(vec[k])] for k in sorted(vec)]


def _tensor_out(rows):
    return [[n, [[a, b, str(c)] for a, b, c in terms]] for n, terms in rows]


def to_json(doc: Document) -> dict:
    def space_ref(basis):
        return _name_of(doc.spaces, basis, "space")

    out = {
        "format": FORMAT,
        "defaults_ack": True,
        "field": str(doc.field),
        "group": list(doc.group.orders),
        "beta": [[list(x), list(y), str(v)] for x, y, v in doc.beta.entries()],
    }
    if doc.cocycles:
        out["cocycles"] = {n: [[list(x), list(y), str(v)] for x, y, v in s.entries()]
                           for n, s in doc.cocycles.items()}
    if doc.spaces:
        out["spaces"] = {n: [[name, list(d)] for name, d in zip(b.names, b.degrees)]
                         for n, b in doc.spaces.items()}
    if doc.algebras:
        out["algebras"] = {}
        for n, A in doc.algebras.items():
            entry = {"space": space_ref(A.basis), "product": _table_rows(A.product)}
            if A.unit is not None:
                entry["unit"] = _vec_rows(A.basis, A.unit)
            out["algebras"][n] = entry
    if doc.lie_algebras:
        out["lie_algebras"] = {n: {"space": space_ref(L.basis), "bracket": _table_rows(L.bracket)}
                               for n, L in doc.lie_algebras.items()}
    if doc.coalgebras:
        out["coalgebras"] = {n: {"space": space_ref(C.basis), "coproduct": _tensor_out(C.rows()),
                                 "counit": _vec_rows(C.basis, C.counit)}
                             for n, C in doc.coalgebras.items()}
    if doc.cobrackets:
        out["cobrackets"] = {n: {"space": space_ref(d.basis), "cobracket": _tensor_out(d.rows())}
                             for n, d in doc.cobrackets.items()}
    if doc.bialgebras:
        out["bialgebras"] = {n: {"lie": _name_of(doc.lie_algebras, L, "Lie algebra"),
                                 "cobracket": _name_of(doc.cobrackets, d, "cobracket")}
                             for n, (L, d) in doc.bialgebras.items()}
    if doc.actions:
        out["actions"] = {
            n: {"kind": "left" if isinstance(a, LeftAction) else "right",
                "acting": space_ref(a.acting), "on": space_ref(a.acted_on),
                "table": _table_rows(a.table)}
            for n, a in doc.actions.items()
        }
    if doc.pairs:
        out["pairs"] = {}
        for n, (pair, dA, dH) in doc.pairs.items():
            entry = {
                "A": _name_of(doc.lie_algebras, pair.A, "Lie algebra"),
                "H": _name_of(doc.lie_algebras, pair.H, "Lie algebra"),
                "left": _action_ref(doc, pair.left),
                "right": _action_ref(doc, pair.right),
            }
            if dA is not None:
                entry["deltaA"] = _name_of(doc.cobrackets, dA, "cobracket")
            if dH is not None:
                entry["deltaH"] = _name_of(doc.cobrackets, dH, "cobracket")
            out["pairs"][n] = entry
    return out


def _action_ref(doc, act):
    if not act.table.entries:
        for name, candidate in doc.actions.items():
            if candidate is act:
                return name
        return None
    return _name_of(doc.actions, act, "action")


def dumps(value, indent: int = 0) -> str:
    """JSON with objects indented and short dict-free lists kept on one line."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(k, ensure_ascii=False)}: {dumps(v, indent + 1)}"
                          for k, v in value.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(value, list):
        flat = json.dumps(value, ensure_ascii=False, separators=(", ", ": "))
        if len(flat) + len(inner) <= 100 and "{" not in flat:
            return flat
        return "[\n" + ",\n".join(inner + dumps(v, indent + 1) for v in value) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def serialize(doc: Document) -> str:
    return dumps(to_json(doc)) + "\n"
