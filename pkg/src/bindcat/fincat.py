"""Finite categories as explicit composition tables, plus functors and
natural transformations over them, with exhaustive law checking.

Everything here is decidable by enumeration: a law checker walks every
instance of every law and reports all failures, so an empty report means
the data passed exhaustively.

Composition is stored in classical order throughout the package:
``comp[(g, f)]`` is "g after f", defined exactly when ``tgt(f) == src(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .report import LawReport


class TableError(Exception):
    """Structural defect in a table: a dangling id, a missing entry, a
    duplicate, or a malformed document.  Distinct from law violations,
    which are reported through LawReport."""


@dataclass
class FinCategory:
    """A category presented by finite tables of opaque string ids.

    ``morphisms`` keeps declaration order (hom_enumerate relies on it);
    ``comp[(g, f)]`` stores the composite g after f.
    """

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...]  # (id, src, tgt)
    identity: dict[str, str]
    comp: dict[tuple[str, str], str]
    _by_id: dict[str, tuple[str, str]] = field(init=False, repr=False)

    def __post_init__(self):
        by_id: dict[str, tuple[str, str]] = {}
        for mid, src, tgt in self.morphisms:
            if mid in by_id:
                raise TableError(f"duplicate morphism id {mid!r}")
            by_id[mid] = (src, tgt)
        self._by_id = by_id
        if len(set(self.objects)) != len(self.objects):
            raise TableError("duplicate object id")

    def has_mor(self, mid: str) -> bool:
        return mid in self._by_id

    def src(self, mid: str) -> str:
        return self._by_id[mid][0]

    def tgt(self, mid: str) -> str:
        return self._by_id[mid][1]

    def id_of(self, obj: str) -> str:
        try:
            return self.identity[obj]
        except KeyError:
            raise TableError(f"no identity morphism recorded for object {obj!r}") from None

    def compose(self, g: str, f: str) -> str:
        """g after f; raises TableError when the entry is absent."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise TableError(f"composite ({g!r} after {f!r}) not in table") from None

    def validate(self) -> None:
        """Referential integrity only; laws are check_category_laws' job."""
        objs = set(self.objects)
        for mid, src, tgt in self.morphisms:
            if src not in objs:
                raise TableError(f"morphism {mid!r} has unknown source {src!r}")
            if tgt not in objs:
                raise TableError(f"morphism {mid!r} has unknown target {tgt!r}")
        for obj in self.objects:
            if obj not in self.identity:
                raise TableError(f"no identity morphism recorded for object {obj!r}")
        for obj, mid in self.identity.items():
            if obj not in objs:
                raise TableError(f"identity table mentions unknown object {obj!r}")
            if mid not in self._by_id:
                raise TableError(f"identity of {obj!r} is unknown morphism {mid!r}")
        for (g, f), h in self.comp.items():
            for mid in (g, f, h):
                if mid not in self._by_id:
                    raise TableError(f"comp table mentions unknown morphism {mid!r}")


@dataclass
class FinFunctor:
    source: FinCategory
    target: FinCategory
    on_obj: dict[str, str]
    on_mor: dict[str, str]
    name: str = ""

    def obj(self, x: str) -> str:
        try:
            return self.on_obj[x]
        except KeyError:
            raise TableError(f"functor {self.name or '<anon>'} has no image for object {x!r}") from None

    def mor(self, f: str) -> str:
        try:
            return self.on_mor[f]
        except KeyError:
            raise TableError(f"functor {self.name or '<anon>'} has no image for morphism {f!r}") from None

    def validate(self) -> None:
        objs = set(self.target.objects)
        for x in self.source.objects:
            if self.obj(x) not in objs:
                raise TableError(f"functor maps {x!r} to unknown object {self.on_obj[x]!r}")
        for mid, _, _ in self.source.morphisms:
            if not self.target.has_mor(self.mor(mid)):
                raise TableError(f"functor maps {mid!r} to unknown morphism {self.on_mor[mid]!r}")


@dataclass
class FinNatTrans:
    source: FinFunctor
    target: FinFunctor
    components: dict[str, str]
    name: str = ""

    def at(self, x: str) -> str:
        try:
            return self.components[x]
        except KeyError:
            raise TableError(f"natural transformation missing component at {x!r}") from None


def mapping_tables_equal(F: FinFunctor, G: FinFunctor) -> bool:
    """Exact equality of the object and morphism mappings."""
    return F.on_obj == G.on_obj and F.on_mor == G.on_mor


# --- law checking ----------------------------------------------------------

def check_category_laws(C: FinCategory) -> LawReport:
    """Exhaustive check of every category law instance.

    Raises TableError on dangling ids; law failures land in the report.
    """
    C.validate()
    rep = LawReport()
    for x in C.objects:
        i = C.identity[x]
        rep.check(C.src(i) == x and C.tgt(i) == x, "identity-endpoints",
                  lambda x=x, i=i: f"id_{x} = {i} has endpoints {C.src(i)}→{C.tgt(i)}")

    mor_ids = [m for m, _, _ in C.morphisms]
    for (g, f), h in C.comp.items():
        rep.check(C.tgt(f) == C.src(g), "comp-composable",
                  f"comp entry ({g} after {f}) on a non-composable pair")
        rep.check(C.src(h) == C.src(f) and C.tgt(h) == C.tgt(g), "comp-endpoints",
                  f"({g} after {f}) = {h} should run {C.src(f)}→{C.tgt(g)}")
    for g in mor_ids:
        for f in mor_ids:
            if C.tgt(f) == C.src(g):
                rep.check((g, f) in C.comp, "comp-totality",
                          f"composable pair ({g} after {f}) missing from comp table")

    for f, x, y in C.morphisms:
        gf = C.comp.get((C.identity.get(y, ""), f))
        if gf is not None:
            rep.check(gf == f, "unit-left", f"(id_{y} after {f}) = {gf}, expected {f}")
        fg = C.comp.get((f, C.identity.get(x, "")))
        if fg is not None:
            rep.check(fg == f, "unit-right", f"({f} after id_{x}) = {fg}, expected {f}")

    for h in mor_ids:
        for g in mor_ids:
            if C.tgt(g) != C.src(h):
                continue
            hg = C.comp.get((h, g))
            for f in mor_ids:
                if C.tgt(f) != C.src(g):
                    continue
                gf = C.comp.get((g, f))
                if hg is None or gf is None:
                    continue  # already reported by comp-totality
                left = C.comp.get((h, gf))
                right = C.comp.get((hg, f))
                if left is None or right is None:
                    continue
                rep.check(left == right, "assoc",
                          f"({h} after ({g} after {f})) = {left} but "
                          f"(({h} after {g}) after {f}) = {right}")
    return rep


def check_functor(F: FinFunctor) -> LawReport:
    F.validate()
    rep = LawReport()
    C, D = F.source, F.target
    for f, x, y in C.morphisms:
        ff = F.mor(f)
        rep.check(D.src(ff) == F.obj(x) and D.tgt(ff) == F.obj(y), "functor-endpoints",
                  f"image of {f}: {x}→{y} is {ff}: {D.src(ff)}→{D.tgt(ff)}, "
                  f"expected {F.obj(x)}→{F.obj(y)}")
    for x in C.objects:
        rep.check(F.mor(C.id_of(x)) == D.id_of(F.obj(x)), "functor-identity",
                  f"image of id_{x} is {F.mor(C.id_of(x))}, expected id_{F.obj(x)}")
    for (g, f), h in C.comp.items():
        img = D.comp.get((F.mor(g), F.mor(f)))
        rep.check(img is not None and F.mor(h) == img, "functor-composition",
                  f"image of ({g} after {f}) is {F.mor(h)}, "
                  f"but ({F.mor(g)} after {F.mor(f)}) = {img}")
    return rep


def check_nat_trans(t: FinNatTrans) -> LawReport:
    F, G = t.source, t.target
    if F.source is not G.source and F.source != G.source:
        raise TableError("natural transformation between functors with different sources")
    if F.target is not G.target and F.target != G.target:
        raise TableError("natural transformation between functors with different targets")
    C, D = F.source, F.target
    rep = LawReport()
    for x in C.objects:
        cx = t.at(x)
        rep.check(D.src(cx) == F.obj(x) and D.tgt(cx) == G.obj(x), "component-endpoints",
                  f"component at {x} is {cx}: {D.src(cx)}→{D.tgt(cx)}, "
                  f"expected {F.obj(x)}→{G.obj(x)}")
    for f, x, y in C.morphisms:
        left = D.comp.get((t.at(y), F.mor(f)))
        right = D.comp.get((G.mor(f), t.at(x)))
        rep.check(left is not None and left == right, "naturality",
                  f"square at {f}: {x}→{y}: ({t.at(y)} after {F.mor(f)}) = {left} "
                  f"but ({G.mor(f)} after {t.at(x)}) = {right}")
    return rep


# --- constructions ---------------------------------------------------------

def pair_obj(x: str, y: str) -> str:
    return f"({x},{y})"


def pair_mor(f: str, g: str) -> str:
    return f"({f},{g})"


def product_category(C: FinCategory, D: FinCategory) -> FinCategory:
    """Product category with pairwise tables; ids are rendered pairs."""
    objects = tuple(pair_obj(x, y) for x in C.objects for y in D.objects)
    morphisms = tuple(
        (pair_mor(f, g), pair_obj(fx, gx), pair_obj(fy, gy))
        for f, fx, fy in C.morphisms
        for g, gx, gy in D.morphisms
    )
    identity = {
        pair_obj(x, y): pair_mor(C.identity[x], D.identity[y])
        for x in C.objects
        for y in D.objects
    }
    comp = {
        (pair_mor(g1, g2), pair_mor(f1, f2)): pair_mor(h1, h2)
        for (g1, f1), h1 in C.comp.items()
        for (g2, f2), h2 in D.comp.items()
    }
    return FinCategory(objects, morphisms, identity, comp)


def hom_enumerate(C: FinCategory, x: str, y: str) -> list[str]:
    """Morphisms x → y in table order."""
    if x not in C.objects:
        raise TableError(f"unknown object {x!r}")
    if y not in C.objects:
        raise TableError(f"unknown object {y!r}")
    return [m for m, s, t in C.morphisms if s == x and t == y]


def identity_functor(C: FinCategory, name: str = "Id") -> FinFunctor:
    return FinFunctor(C, C, {x: x for x in C.objects},
                      {m: m for m, _, _ in C.morphisms}, name=name)


def constant_functor(C: FinCategory, D: FinCategory, obj: str, name: str = "") -> FinFunctor:
    i = D.id_of(obj)
    return FinFunctor(C, D, {x: obj for x in C.objects},
                      {m: i for m, _, _ in C.morphisms},
                      name=name or f"const_{obj}")


def compose_functors(G: FinFunctor, F: FinFunctor, name: str = "") -> FinFunctor:
    """G after F."""
    if F.target != G.source:
        raise TableError("functors not composable")
    return FinFunctor(
        F.source, G.target,
        {x: G.obj(F.obj(x)) for x in F.source.objects},
        {m: G.mor(F.mor(m)) for m, _, _ in F.source.morphisms},
        name=name or (f"{G.name}∘{F.name}" if G.name and F.name else ""),
    )


def identity_nat_trans(F: FinFunctor, name: str = "") -> FinNatTrans:
    return FinNatTrans(F, F, {x: F.target.id_of(F.obj(x)) for x in F.source.objects},
                       name=name)


# --- ready-made small categories -------------------------------------------

def terminal_category() -> FinCategory:
    return FinCategory(("*",), (("id_*", "*", "*"),), {"*": "id_*"},
                       {("id_*", "id_*"): "id_*"})


def walking_arrow() -> FinCategory:
    """Two objects a, b and a single arrow f: a → b."""
    return FinCategory(
        ("a", "b"),
        (("id_a", "a", "a"), ("id_b", "b", "b"), ("f", "a", "b")),
        {"a": "id_a", "b": "id_b"},
        {
            ("id_a", "id_a"): "id_a",
            ("id_b", "id_b"): "id_b",
            ("f", "id_a"): "f",
            ("id_b", "f"): "f",
        },
    )


def chain_category(n: int) -> FinCategory:
    """The poset 0 < 1 < … < n-1 as a category with one arrow per ≤-pair."""
    if n < 1:
        raise ValueError("chain needs at least one object")
    objects = tuple(str(i) for i in range(n))

    def arrow(i: int, j: int) -> str:
        return f"id_{i}" if i == j else f"le_{i}_{j}"

    morphisms = tuple((arrow(i, j), str(i), str(j))
                      for i in range(n) for j in range(i, n))
    identity = {str(i): f"id_{i}" for i in range(n)}
    comp = {}
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                comp[(arrow(j, k), arrow(i, j))] = arrow(i, k)
    return FinCategory(objects, morphisms, identity, comp)


def discrete_category(objects) -> FinCategory:
    objs = tuple(objects)
    return FinCategory(
        objs,
        tuple((f"id_{x}", x, x) for x in objs),
        {x: f"id_{x}" for x in objs},
        {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objs},
    )


# --- JSON interchange -------------------------------------------------------

_DOC_FIELDS = {"objects", "morphisms", "identity", "comp"}


def from_doc(doc) -> FinCategory:
    """Build a FinCategory from the JSON document shape; structural errors
    (wrong shape, unknown fields, dangling ids) raise TableError."""
    if not isinstance(doc, dict):
        raise TableError("category document must be a JSON object")
    unknown = set(doc) - _DOC_FIELDS
    if unknown:
        raise TableError(f"unknown fields in category document: {sorted(unknown)}")
    missing = _DOC_FIELDS - set(doc)
    if missing:
        raise TableError(f"category document missing fields: {sorted(missing)}")
    objects = doc["objects"]
    if not isinstance(objects, list) or not all(isinstance(x, str) for x in objects):
        raise TableError("'objects' must be an array of strings")
    mor_rows = doc["morphisms"]
    if not isinstance(mor_rows, list):
        raise TableError("'morphisms' must be an array")
    morphisms = []
    for row in mor_rows:
        if (not isinstance(row, dict) or set(row) != {"id", "src", "tgt"}
                or not all(isinstance(row[k], str) for k in ("id", "src", "tgt"))):
            raise TableError(f"bad morphism row: {row!r}")
        morphisms.append((row["id"], row["src"], row["tgt"]))
    ident = doc["identity"]
    if not isinstance(ident, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in ident.items()):
        raise TableError("'identity' must map object ids to morphism ids")
    comp_rows = doc["comp"]
    if not isinstance(comp_rows, list):
        raise TableError("'comp' must be an array")
    comp = {}
    for row in comp_rows:
        if (not isinstance(row, dict) or set(row) != {"after", "first", "result"}
                or not all(isinstance(row[k], str) for k in ("after", "first", "result"))):
            raise TableError(f"bad comp row: {row!r}")
        key = (row["after"], row["first"])
        if key in comp:
            raise TableError(f"duplicate comp entry for ({row['after']}, {row['first']})")
        comp[key] = row["result"]
    C = FinCategory(tuple(objects), tuple(morphisms), dict(ident), comp)
    C.validate()
    return C


def to_doc(C: FinCategory) -> dict:
    return {
        "objects": list(C.objects),
        "morphisms": [{"id": m, "src": s, "tgt": t} for m, s, t in C.morphisms],
        "identity": dict(C.identity),
        "comp": [{"after": g, "first": f, "result": h} for (g, f), h in C.comp.items()],
    }
