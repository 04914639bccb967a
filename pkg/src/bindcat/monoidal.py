"""Tensors in whiskered (curried) form, monoidal categories over finite
tables, monoids, and the endofunctor instance where monoids are monads.

The whiskered presentation is the canonical one here: a tensor is an
object table plus left and right whiskering tables.  The classical
bifunctor on a product category exists only at the conversion boundary
(`whiskered_from_classical` / `classical_from_whiskered`), and the two
forms are exact inverses on lawful data.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .fincat import (
    FinCategory,
    FinFunctor,
    FinNatTrans,
    TableError,
    check_category_laws,
    check_functor,
    check_nat_trans,
    compose_functors,
    from_doc,
    hom_enumerate,
    identity_functor,
    pair_mor,
    pair_obj,
    product_category,
    to_doc,
)
from .report import LawReport

DEFAULT_ENUM_BOUND = 10_000


class EnumerationOverflow(Exception):
    """Raised when materializing a functor category would exceed the bound."""


@dataclass
class WhiskeredBifunctor:
    """A tensor given by its curried data: object table, left whiskers
    x ⊗ f, and right whiskers f ⊗ z.

    ``lwhisker[(x, f)]`` with f: y→z is a morphism x⊗y → x⊗z;
    ``rwhisker[(f, z)]`` with f: x→y is a morphism x⊗z → y⊗z.
    """

    base: FinCategory
    obj_table: dict[tuple[str, str], str]
    lwhisker: dict[tuple[str, str], str]
    rwhisker: dict[tuple[str, str], str]

    def obj(self, x: str, y: str) -> str:
        try:
            return self.obj_table[(x, y)]
        except KeyError:
            raise TableError(f"tensor object table missing entry ({x!r}, {y!r})") from None

    def on_obj(self, x: str):
        """Curried object action: the map y ↦ x⊗y."""
        return lambda y: self.obj(x, y)

    def lw(self, x: str, f: str) -> str:
        try:
            return self.lwhisker[(x, f)]
        except KeyError:
            raise TableError(f"left whisker table missing entry ({x!r}, {f!r})") from None

    def rw(self, f: str, z: str) -> str:
        try:
            return self.rwhisker[(f, z)]
        except KeyError:
            raise TableError(f"right whisker table missing entry ({f!r}, {z!r})") from None

    def validate(self) -> None:
        C = self.base
        objs = set(C.objects)
        for x in C.objects:
            for y in C.objects:
                if self.obj(x, y) not in objs:
                    raise TableError(f"tensor maps ({x!r},{y!r}) to unknown object")
        for x in C.objects:
            for f, _, _ in C.morphisms:
                if not C.has_mor(self.lw(x, f)):
                    raise TableError(f"left whisker ({x!r},{f!r}) is an unknown morphism")
                if not C.has_mor(self.rw(f, x)):
                    raise TableError(f"right whisker ({f!r},{x!r}) is an unknown morphism")


def check_whiskered_bifunctor(T: WhiskeredBifunctor) -> LawReport:
    """Identity, composition, endpoint, and interchange laws, exhaustively."""
    T.validate()
    C = T.base
    rep = LawReport()
    comp = C.comp.get

    for x in C.objects:
        for f, y, z in C.morphisms:
            m = T.lw(x, f)
            rep.check(C.src(m) == T.obj(x, y) and C.tgt(m) == T.obj(x, z),
                      "lwhisker-endpoints",
                      f"{x}⊗{f} = {m}: {C.src(m)}→{C.tgt(m)}, "
                      f"expected {T.obj(x, y)}→{T.obj(x, z)}")
            m = T.rw(f, x)
            rep.check(C.src(m) == T.obj(y, x) and C.tgt(m) == T.obj(z, x),
                      "rwhisker-endpoints",
                      f"{f}⊗{x} = {m}: {C.src(m)}→{C.tgt(m)}, "
                      f"expected {T.obj(y, x)}→{T.obj(z, x)}")

    for x in C.objects:
        for y in C.objects:
            i = C.id_of(y)
            rep.check(T.lw(x, i) == C.id_of(T.obj(x, y)), "lwhisker-identity",
                      f"{x}⊗id_{y} = {T.lw(x, i)}, expected id_{T.obj(x, y)}")
            i = C.id_of(x)
            rep.check(T.rw(i, y) == C.id_of(T.obj(x, y)), "rwhisker-identity",
                      f"id_{x}⊗{y} = {T.rw(i, y)}, expected id_{T.obj(x, y)}")

    for (g, f), h in C.comp.items():
        for x in C.objects:
            lhs = T.lw(x, h)
            rhs = comp((T.lw(x, g), T.lw(x, f)))
            if rhs is not None:
                rep.check(lhs == rhs, "lwhisker-composition",
                          f"{x}⊗({g} after {f}) = {lhs} but "
                          f"({x}⊗{g} after {x}⊗{f}) = {rhs}")
            lhs = T.rw(h, x)
            rhs = comp((T.rw(g, x), T.rw(f, x)))
            if rhs is not None:
                rep.check(lhs == rhs, "rwhisker-composition",
                          f"({g} after {f})⊗{x} = {lhs} but "
                          f"({g}⊗{x} after {f}⊗{x}) = {rhs}")

    # interchange: for f: y→y' and g: x→x',
    #   (g ⊗ y') ∘ (x ⊗ f)  =  (x' ⊗ f) ∘ (g ⊗ y)
    for f, y, y1 in C.morphisms:
        for g, x, x1 in C.morphisms:
            lhs = comp((T.rw(g, y1), T.lw(x, f)))
            rhs = comp((T.lw(x1, f), T.rw(g, y)))
            if lhs is None or rhs is None:
                continue  # endpoint breakage already reported above
            rep.check(lhs == rhs, "interchange",
                      f"at f={f}: {y}→{y1}, g={g}: {x}→{x1}: "
                      f"({g}⊗{y1} after {x}⊗{f}) = {lhs} but "
                      f"({x1}⊗{f} after {g}⊗{y}) = {rhs}")
    return rep


def whiskered_from_classical(F: FinFunctor) -> WhiskeredBifunctor:
    """Curry a functor C×C → C (with product ids as built by
    product_category) into its whiskered form."""
    C = F.target
    obj_table = {(x, y): F.obj(pair_obj(x, y)) for x in C.objects for y in C.objects}
    lwhisker = {(x, f): F.mor(pair_mor(C.id_of(x), f))
                for x in C.objects for f, _, _ in C.morphisms}
    rwhisker = {(f, z): F.mor(pair_mor(f, C.id_of(z)))
                for z in C.objects for f, _, _ in C.morphisms}
    return WhiskeredBifunctor(C, obj_table, lwhisker, rwhisker)


def classical_from_whiskered(T: WhiskeredBifunctor) -> FinFunctor:
    """Uncurry to a functor C×C → C; pair action is left-then-right."""
    C = T.base
    P = product_category(C, C)
    on_obj = {pair_obj(x, y): T.obj(x, y) for x in C.objects for y in C.objects}
    on_mor = {}
    for f, x, x1 in C.morphisms:
        for g, y, y1 in C.morphisms:
            first = T.lw(x, g)          # x⊗y → x⊗y'
            second = T.rw(f, y1)        # x⊗y' → x'⊗y'
            on_mor[pair_mor(f, g)] = C.compose(second, first)
    return FinFunctor(P, C, on_obj, on_mor, name="uncurried")


@dataclass
class Monoid:
    carrier: str
    unit_map: str
    mult: str


@dataclass
class Monad:
    endofunctor: FinFunctor
    unit: FinNatTrans
    mult: FinNatTrans


@dataclass
class MonoidalCategory:
    """A finite category with unit object, whiskered tensor, and the
    structural isomorphisms with their designated inverses.

    ``associator[(x, y, z)]`` is the morphism (x⊗y)⊗z → x⊗(y⊗z).
    """

    base: FinCategory
    unit: str
    tensor: WhiskeredBifunctor
    lunitor: dict[str, str]
    lunitor_inv: dict[str, str]
    runitor: dict[str, str]
    runitor_inv: dict[str, str]
    associator: dict[tuple[str, str, str], str]
    associator_inv: dict[tuple[str, str, str], str]
    name: str = ""

    def validate(self) -> None:
        self.tensor.validate()
        C = self.base
        if self.unit not in C.objects:
            raise TableError(f"unit object {self.unit!r} is not in the category")
        for label, table in (("lunitor", self.lunitor), ("lunitor_inv", self.lunitor_inv),
                             ("runitor", self.runitor), ("runitor_inv", self.runitor_inv)):
            for x in C.objects:
                if x not in table:
                    raise TableError(f"{label} missing component at {x!r}")
                if not C.has_mor(table[x]):
                    raise TableError(f"{label} at {x!r} is unknown morphism {table[x]!r}")
        for label, table in (("associator", self.associator),
                             ("associator_inv", self.associator_inv)):
            for key in itertools.product(C.objects, repeat=3):
                if key not in table:
                    raise TableError(f"{label} missing component at {key}")
                if not C.has_mor(table[key]):
                    raise TableError(f"{label} at {key} is unknown morphism {table[key]!r}")


def check_monoidal_laws(M: MonoidalCategory) -> LawReport:
    """Whiskered-bifunctor laws for the tensor, then the structural-iso,
    naturality, triangle, and pentagon laws.  Exhaustive on the tables."""
    M.validate()
    C, T, I = M.base, M.tensor, M.unit
    rep = check_whiskered_bifunctor(T)
    comp = C.comp.get

    def iso(fwd: str, bwd: str, src: str, tgt: str, law: str, where: str) -> None:
        rep.check(C.src(fwd) == src and C.tgt(fwd) == tgt, law + "-endpoints",
                  f"{where}: {fwd}: {C.src(fwd)}→{C.tgt(fwd)}, expected {src}→{tgt}")
        one = comp((fwd, bwd))
        rep.check(one == C.id_of(tgt), law + "-iso",
                  f"{where}: ({fwd} after {bwd}) = {one}, expected id_{tgt}")
        other = comp((bwd, fwd))
        rep.check(other == C.id_of(src), law + "-iso",
                  f"{where}: ({bwd} after {fwd}) = {other}, expected id_{src}")

    for x in C.objects:
        iso(M.lunitor[x], M.lunitor_inv[x], T.obj(I, x), x, "lunitor", f"lunitor at {x}")
        iso(M.runitor[x], M.runitor_inv[x], T.obj(x, I), x, "runitor", f"runitor at {x}")
    for x, y, z in itertools.product(C.objects, repeat=3):
        iso(M.associator[(x, y, z)], M.associator_inv[(x, y, z)],
            T.obj(T.obj(x, y), z), T.obj(x, T.obj(y, z)),
            "associator", f"associator at ({x},{y},{z})")

    for f, x, y in C.morphisms:
        lhs = comp((M.lunitor[y], T.lw(I, f)))
        rhs = comp((f, M.lunitor[x]))
        if lhs is not None and rhs is not None:
            rep.check(lhs == rhs, "lunitor-naturality",
                      f"at {f}: {x}→{y}: ({M.lunitor[y]} after {I}⊗{f}) = {lhs} "
                      f"but ({f} after {M.lunitor[x]}) = {rhs}")
        lhs = comp((M.runitor[y], T.rw(f, I)))
        rhs = comp((f, M.runitor[x]))
        if lhs is not None and rhs is not None:
            rep.check(lhs == rhs, "runitor-naturality",
                      f"at {f}: {x}→{y}: ({M.runitor[y]} after {f}⊗{I}) = {lhs} "
                      f"but ({f} after {M.runitor[x]}) = {rhs}")

    for f, x, x1 in C.morphisms:
        for y, z in itertools.product(C.objects, repeat=2):
            # naturality in the first argument
            lhs = comp((M.associator[(x1, y, z)], T.rw(T.rw(f, y), z)))
            rhs = comp((T.rw(f, T.obj(y, z)), M.associator[(x, y, z)]))
            if lhs is not None and rhs is not None:
                rep.check(lhs == rhs, "associator-naturality",
                          f"first slot, f={f}, (y,z)=({y},{z}): {lhs} vs {rhs}")
            # second argument
            lhs = comp((M.associator[(y, x1, z)], T.rw(T.lw(y, f), z)))
            rhs = comp((T.lw(y, T.rw(f, z)), M.associator[(y, x, z)]))
            if lhs is not None and rhs is not None:
                rep.check(lhs == rhs, "associator-naturality",
                          f"second slot, f={f}, (y,z)=({y},{z}): {lhs} vs {rhs}")
            # third argument
            lhs = comp((M.associator[(y, z, x1)], T.lw(T.obj(y, z), f)))
            rhs = comp((T.lw(y, T.lw(z, f)), M.associator[(y, z, x)]))
            if lhs is not None and rhs is not None:
                rep.check(lhs == rhs, "associator-naturality",
                          f"third slot, f={f}, (y,z)=({y},{z}): {lhs} vs {rhs}")

    for x, z in itertools.product(C.objects, repeat=2):
        lhs = comp((T.lw(x, M.lunitor[z]), M.associator[(x, I, z)]))
        rhs = T.rw(M.runitor[x], z)
        if lhs is not None:
            rep.check(lhs == rhs, "triangle",
                      f"at ({x},{z}): ({x}⊗lunitor_{z} after α_({x},{I},{z})) = {lhs} "
                      f"but runitor_{x}⊗{z} = {rhs}")

    for w, x, y, z in itertools.product(C.objects, repeat=4):
        lhs = comp((M.associator[(w, x, T.obj(y, z))], M.associator[(T.obj(w, x), y, z)]))
        inner = comp((M.associator[(w, T.obj(x, y), z)],
                      T.rw(M.associator[(w, x, y)], z)))
        rhs = None if inner is None else comp((T.lw(w, M.associator[(x, y, z)]), inner))
        if lhs is not None and rhs is not None:
            rep.check(lhs == rhs, "pentagon",
                      f"at ({w},{x},{y},{z}): two-step side = {lhs}, "
                      f"three-step side = {rhs}")
    return rep


def check_monoid(M: MonoidalCategory, m: Monoid) -> LawReport:
    """Unit and associativity diagrams for a monoid object, via the
    stored unitors/associator."""
    C, T = M.base, M.tensor
    rep = LawReport()
    if not (C.has_mor(m.unit_map) and C.has_mor(m.mult)) or m.carrier not in C.objects:
        raise TableError("monoid data references unknown ids")
    rep.check(C.src(m.unit_map) == M.unit and C.tgt(m.unit_map) == m.carrier,
              "monoid-unit-endpoints",
              f"unit {m.unit_map}: {C.src(m.unit_map)}→{C.tgt(m.unit_map)}, "
              f"expected {M.unit}→{m.carrier}")
    mm = T.obj(m.carrier, m.carrier)
    rep.check(C.src(m.mult) == mm and C.tgt(m.mult) == m.carrier,
              "monoid-mult-endpoints",
              f"mult {m.mult}: {C.src(m.mult)}→{C.tgt(m.mult)}, "
              f"expected {mm}→{m.carrier}")
    if rep.violations:
        return rep
    comp = C.comp.get

    lhs = comp((m.mult, T.rw(m.unit_map, m.carrier)))
    rep.check(lhs == M.lunitor[m.carrier], "monoid-unit-left",
              f"(mult after unit⊗{m.carrier}) = {lhs}, "
              f"expected lunitor = {M.lunitor[m.carrier]}")
    lhs = comp((m.mult, T.lw(m.carrier, m.unit_map)))
    rep.check(lhs == M.runitor[m.carrier], "monoid-unit-right",
              f"(mult after {m.carrier}⊗unit) = {lhs}, "
              f"expected runitor = {M.runitor[m.carrier]}")
    lhs = comp((m.mult, T.rw(m.mult, m.carrier)))
    inner = comp((T.lw(m.carrier, m.mult),
                  M.associator[(m.carrier, m.carrier, m.carrier)]))
    rhs = None if inner is None else comp((m.mult, inner))
    rep.check(lhs is not None and lhs == rhs, "monoid-assoc",
              f"(mult after mult⊗{m.carrier}) = {lhs} but "
              f"(mult after {m.carrier}⊗mult after α) = {rhs}")
    return rep


def enumerate_monoids(M: MonoidalCategory) -> list[Monoid]:
    """All monoid objects in M, by exhaustive search over the tables."""
    out = []
    for carrier in M.base.objects:
        mm = M.tensor.obj(carrier, carrier)
        for eta in hom_enumerate(M.base, M.unit, carrier):
            for mu in hom_enumerate(M.base, mm, carrier):
                cand = Monoid(carrier, eta, mu)
                if check_monoid(M, cand).ok:
                    out.append(cand)
    return out


# --- endofunctor categories -------------------------------------------------

def functor_table_key(F: FinFunctor) -> tuple:
    return (tuple(sorted(F.on_obj.items())), tuple(sorted(F.on_mor.items())))


def _nat_key(src_name: str, tgt_name: str, components: dict[str, str]) -> tuple:
    return (src_name, tgt_name, tuple(sorted(components.items())))


def enumerate_endofunctors(C: FinCategory, bound: int = DEFAULT_ENUM_BOUND) -> list[FinFunctor]:
    """Every functor C → C, found by exhaustive search over object maps
    and hom-constrained morphism maps."""
    found: list[FinFunctor] = []
    non_id = [row for row in C.morphisms if row[0] != C.identity[row[1]] or row[1] != row[2]]
    id_rows = [row for row in C.morphisms if row not in non_id]
    for obj_images in itertools.product(C.objects, repeat=len(C.objects)):
        on_obj = dict(zip(C.objects, obj_images))
        choices = [hom_enumerate(C, on_obj[s], on_obj[t]) for _, s, t in non_id]
        if math.prod(len(c) for c in choices) == 0:
            continue
        for picks in itertools.product(*choices):
            on_mor = {m: C.id_of(on_obj[s]) for m, s, _ in id_rows}
            on_mor.update({row[0]: img for row, img in zip(non_id, picks)})
            cand = FinFunctor(C, C, on_obj, dict(on_mor))
            if check_functor(cand).ok:
                found.append(cand)
                if len(found) > bound:
                    raise EnumerationOverflow(
                        f"more than {bound} endofunctors; raise the bound to proceed")
    return found


def enumerate_nat_transes(C: FinCategory, functors: list[FinFunctor],
                          bound: int = DEFAULT_ENUM_BOUND) -> list[FinNatTrans]:
    found: list[FinNatTrans] = []
    for F in functors:
        for G in functors:
            choices = [hom_enumerate(C, F.obj(x), G.obj(x)) for x in C.objects]
            if math.prod(len(c) for c in choices) == 0:
                continue
            for picks in itertools.product(*choices):
                cand = FinNatTrans(F, G, dict(zip(C.objects, picks)))
                if check_nat_trans(cand).ok:
                    found.append(cand)
                    if len(found) > bound:
                        raise EnumerationOverflow(
                            f"more than {bound} natural transformations; "
                            f"raise the bound to proceed")
    return found


@dataclass
class EndofunctorMonoidal:
    """The monoidal category of all endofunctors of a finite category,
    together with the registries that let monoid data be read back as
    monad data (and back) without recomputation."""

    category: FinCategory
    monoidal: MonoidalCategory
    functors: dict[str, FinFunctor]
    nats: dict[str, FinNatTrans]
    _fkey_to_name: dict[tuple, str] = field(repr=False, default_factory=dict)
    _nkey_to_id: dict[tuple, str] = field(repr=False, default_factory=dict)

    def functor_name(self, F: FinFunctor) -> str:
        try:
            return self._fkey_to_name[functor_table_key(F)]
        except KeyError:
            raise TableError("functor is not in this endofunctor category") from None

    def nat_id(self, src_name: str, tgt_name: str, components: dict[str, str]) -> str:
        try:
            return self._nkey_to_id[_nat_key(src_name, tgt_name, components)]
        except KeyError:
            raise TableError("transformation is not in this endofunctor category") from None


def _functor_display_name(C: FinCategory, F: FinFunctor, index: int, used: set[str]) -> str:
    name = None
    if all(F.on_obj[x] == x for x in C.objects) and \
            all(F.on_mor[m] == m for m, _, _ in C.morphisms):
        name = "Id"
    else:
        targets = set(F.on_obj.values())
        if len(targets) == 1:
            y = next(iter(targets))
            if all(F.on_mor[m] == C.id_of(y) for m, _, _ in C.morphisms):
                name = f"const_{y}"
    if name is None or name in used:
        name = f"F{index}"
    return name


def endofunctor_monoidal(C: FinCategory, bound: int = DEFAULT_ENUM_BOUND) -> EndofunctorMonoidal:
    """Materialize the endofunctor category of C as a MonoidalCategory:
    objects are the functors C→C, morphisms the natural transformations,
    tensor is composition, and every structural component is a pointwise
    identity (the tensor is strictly unital and associative on tables)."""
    functors = enumerate_endofunctors(C, bound)
    f_names: dict[str, FinFunctor] = {}
    fkey_to_name: dict[tuple, str] = {}
    for i, F in enumerate(functors):
        name = _functor_display_name(C, F, i, set(f_names))
        F.name = name
        f_names[name] = F
        fkey_to_name[functor_table_key(F)] = name

    nats = enumerate_nat_transes(C, functors, bound)
    n_ids: dict[str, FinNatTrans] = {}
    nkey_to_id: dict[tuple, str] = {}
    pair_counts: dict[tuple[str, str], int] = {}
    for t in nats:
        src, tgt = t.source.name, t.target.name
        if src == tgt and all(t.components[x] == C.id_of(t.source.obj(x)) for x in C.objects):
            nid = f"id_{src}"
        else:
            k = pair_counts.get((src, tgt), 0)
            pair_counts[(src, tgt)] = k + 1
            nid = f"{src}=>{tgt}" if k == 0 else f"{src}=>{tgt}#{k}"
        t.name = nid
        n_ids[nid] = t
        nkey_to_id[_nat_key(src, tgt, t.components)] = nid

    objects = tuple(f_names)
    morphisms = tuple((nid, t.source.name, t.target.name) for nid, t in n_ids.items())
    identity = {name: f"id_{name}" for name in f_names}
    comp: dict[tuple[str, str], str] = {}
    for b_id, beta in n_ids.items():
        for a_id, alpha in n_ids.items():
            if alpha.target.name != beta.source.name:
                continue
            composite = {x: C.compose(beta.components[x], alpha.components[x])
                         for x in C.objects}
            comp[(b_id, a_id)] = nkey_to_id[
                _nat_key(alpha.source.name, beta.target.name, composite)]
    base = FinCategory(objects, morphisms, identity, comp)

    obj_table = {}
    for fn, F in f_names.items():
        for gn, G in f_names.items():
            obj_table[(fn, gn)] = fkey_to_name[functor_table_key(compose_functors(F, G))]
    lwhisker = {}
    rwhisker = {}
    for fn, F in f_names.items():
        for a_id, alpha in n_ids.items():
            gn, hn = alpha.source.name, alpha.target.name
            # F ⊗ α : F∘G ⇒ F∘G' with components F(α_x)
            comps = {x: F.mor(alpha.components[x]) for x in C.objects}
            lwhisker[(fn, a_id)] = nkey_to_id[
                _nat_key(obj_table[(fn, gn)], obj_table[(fn, hn)], comps)]
            # α ⊗ F : G∘F ⇒ G'∘F with components α_{F(x)}
            comps = {x: alpha.components[F.obj(x)] for x in C.objects}
            rwhisker[(a_id, fn)] = nkey_to_id[
                _nat_key(obj_table[(gn, fn)], obj_table[(hn, fn)], comps)]
    tensor = WhiskeredBifunctor(base, obj_table, lwhisker, rwhisker)

    lunitor = {fn: identity[obj_table[("Id", fn)]] for fn in f_names}
    runitor = {fn: identity[obj_table[(fn, "Id")]] for fn in f_names}
    associator = {}
    for fn, gn, hn in itertools.product(f_names, repeat=3):
        o = obj_table[(obj_table[(fn, gn)], hn)]
        associator[(fn, gn, hn)] = identity[o]
    M = MonoidalCategory(
        base, "Id", tensor,
        lunitor, dict(lunitor), runitor, dict(runitor),
        associator, dict(associator),
        name="endofunctors",
    )
    return EndofunctorMonoidal(C, M, f_names, n_ids, fkey_to_name, nkey_to_id)


def check_monad(T: Monad) -> LawReport:
    """Functor and naturality laws for the data, then the unit and
    associativity laws componentwise."""
    rep = check_functor(T.endofunctor)
    rep.merge(check_nat_trans(T.unit))
    rep.merge(check_nat_trans(T.mult))
    C = T.endofunctor.source
    F = T.endofunctor
    rep.check(all(T.unit.source.obj(x) == x for x in C.objects)
              and all(T.unit.source.mor(m) == m for m, _, _ in C.morphisms),
              "monad-unit-shape", "unit transformation does not start at the identity functor")
    FF = compose_functors(F, F)
    rep.check(T.mult.source.on_obj == FF.on_obj and T.mult.source.on_mor == FF.on_mor,
              "monad-mult-shape", "mult transformation does not start at the square")
    for x in C.objects:
        tx = F.obj(x)
        lhs = C.comp.get((T.mult.at(x), T.unit.at(tx)))
        rep.check(lhs == C.id_of(tx), "monad-unit-left",
                  f"at {x}: (mult after unit_{tx}) = {lhs}, expected id_{tx}")
        lhs = C.comp.get((T.mult.at(x), F.mor(T.unit.at(x))))
        rep.check(lhs == C.id_of(tx), "monad-unit-right",
                  f"at {x}: (mult after F(unit_{x})) = {lhs}, expected id_{tx}")
        lhs = C.comp.get((T.mult.at(x), T.mult.at(tx)))
        rhs = C.comp.get((T.mult.at(x), F.mor(T.mult.at(x))))
        rep.check(lhs is not None and lhs == rhs, "monad-assoc",
                  f"at {x}: (mult after mult_{tx}) = {lhs} but "
                  f"(mult after F(mult_{x})) = {rhs}")
    return rep


def monoid_to_monad(E: EndofunctorMonoidal, m: Monoid) -> Monad:
    """Read monoid data as monad data through the registries; nothing is
    recomputed."""
    if m.carrier not in E.functors:
        raise TableError("monoid is not over an endofunctor monoidal category instance")
    return Monad(E.functors[m.carrier], E.nats[m.unit_map], E.nats[m.mult])


def monad_to_monoid(E: EndofunctorMonoidal, T: Monad) -> Monoid:
    carrier = E.functor_name(T.endofunctor)
    unit_id = E.nat_id("Id", carrier, T.unit.components)
    sq = E.monoidal.tensor.obj(carrier, carrier)
    mult_id = E.nat_id(sq, carrier, T.mult.components)
    return Monoid(carrier, unit_id, mult_id)


# --- JSON interchange -------------------------------------------------------

_MONOIDAL_FIELDS = {"objects", "morphisms", "identity", "comp", "unit", "tensor",
                    "lunitor", "lunitor_inv", "runitor", "runitor_inv",
                    "associator", "associator_inv"}


def from_monoidal_doc(doc) -> MonoidalCategory:
    if not isinstance(doc, dict):
        raise TableError("monoidal document must be a JSON object")
    unknown = set(doc) - _MONOIDAL_FIELDS
    if unknown:
        raise TableError(f"unknown fields in monoidal document: {sorted(unknown)}")
    missing = _MONOIDAL_FIELDS - set(doc)
    if missing:
        raise TableError(f"monoidal document missing fields: {sorted(missing)}")
    base = from_doc({k: doc[k] for k in ("objects", "morphisms", "identity", "comp")})
    unit = doc["unit"]
    if not isinstance(unit, str):
        raise TableError("'unit' must be an object id string")
    tdoc = doc["tensor"]
    if not isinstance(tdoc, dict) or set(tdoc) != {"obj", "lwhisker", "rwhisker"}:
        raise TableError("'tensor' must have exactly obj/lwhisker/rwhisker tables")

    def rows(entries, keys, what):
        if not isinstance(entries, list):
            raise TableError(f"tensor {what} table must be an array")
        out = {}
        for row in entries:
            if not isinstance(row, dict) or set(row) != set(keys) \
                    or not all(isinstance(row[k], str) for k in keys):
                raise TableError(f"bad {what} row: {row!r}")
            key = (row[keys[0]], row[keys[1]])
            if key in out:
                raise TableError(f"duplicate {what} entry {key}")
            out[key] = row[keys[2]]
        return out

    tensor = WhiskeredBifunctor(
        base,
        rows(tdoc["obj"], ("left", "right", "result"), "obj"),
        rows(tdoc["lwhisker"], ("obj", "mor", "result"), "lwhisker"),
        rows(tdoc["rwhisker"], ("mor", "obj", "result"), "rwhisker"),
    )

    def unitor(field_name):
        table = doc[field_name]
        if not isinstance(table, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in table.items()):
            raise TableError(f"'{field_name}' must map object ids to morphism ids")
        return dict(table)

    def assoc(field_name):
        entries = doc[field_name]
        if not isinstance(entries, list):
            raise TableError(f"'{field_name}' must be an array")
        out = {}
        for row in entries:
            if not isinstance(row, dict) or set(row) != {"x", "y", "z", "result"} \
                    or not all(isinstance(row[k], str) for k in ("x", "y", "z", "result")):
                raise TableError(f"bad {field_name} row: {row!r}")
            out[(row["x"], row["y"], row["z"])] = row["result"]
        return out

    M = MonoidalCategory(base, unit, tensor,
                         unitor("lunitor"), unitor("lunitor_inv"),
                         unitor("runitor"), unitor("runitor_inv"),
                         assoc("associator"), assoc("associator_inv"))
    M.validate()
    return M


def to_monoidal_doc(M: MonoidalCategory) -> dict:
    doc = to_doc(M.base)
    doc["unit"] = M.unit
    doc["tensor"] = {
        "obj": [{"left": x, "right": y, "result": o}
                for (x, y), o in M.tensor.obj_table.items()],
        "lwhisker": [{"obj": x, "mor": f, "result": m}
                     for (x, f), m in M.tensor.lwhisker.items()],
        "rwhisker": [{"mor": f, "obj": z, "result": m}
                     for (f, z), m in M.tensor.rwhisker.items()],
    }
    doc["lunitor"] = dict(M.lunitor)
    doc["lunitor_inv"] = dict(M.lunitor_inv)
    doc["runitor"] = dict(M.runitor)
    doc["runitor_inv"] = dict(M.runitor_inv)
    doc["associator"] = [{"x": x, "y": y, "z": z, "result": m}
                         for (x, y, z), m in M.associator.items()]
    doc["associator_inv"] = [{"x": x, "y": y, "z": z, "result": m}
                             for (x, y, z), m in M.associator_inv.items()]
    return doc
