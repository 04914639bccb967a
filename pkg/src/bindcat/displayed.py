"""Displayed categories over a finite base, displayed monoidal structure,
the total category with its projection, and sections.

All displayed data is indexed by base ids with exact equality — there is
no transport of displayed objects along base equalities anywhere in the
model.  Displayed object and morphism ids are globally unique, so tables
can key on them directly.  Fibers may be empty.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .fincat import FinCategory, FinFunctor, TableError, from_doc, pair_mor, pair_obj
from .monoidal import MonoidalCategory, WhiskeredBifunctor
from .report import LawReport


@dataclass
class DisplayedCategory:
    """Fibers of objects over base objects and buckets of displayed
    morphisms over base morphisms, with identity/composition tables.

    ``disp_hom[(f, xx, yy)]`` lists the displayed morphisms over f that
    run xx → yy; absent keys mean empty buckets.
    """

    base: FinCategory
    fiber_obj: dict[str, list[str]]
    disp_hom: dict[tuple[str, str, str], list[str]]
    disp_id: dict[str, str]
    disp_comp: dict[tuple[str, str], str]
    _obj_over: dict[str, str] = field(init=False, repr=False)
    _mor_info: dict[str, tuple[str, str, str]] = field(init=False, repr=False)

    def __post_init__(self):
        over: dict[str, str] = {}
        for x, fiber in self.fiber_obj.items():
            for xx in fiber:
                if xx in over:
                    raise TableError(f"displayed object id {xx!r} used twice")
                over[xx] = x
        self._obj_over = over
        info: dict[str, tuple[str, str, str]] = {}
        for key, bucket in self.disp_hom.items():
            for ff in bucket:
                if ff in info:
                    raise TableError(f"displayed morphism id {ff!r} used twice")
                info[ff] = key
        self._mor_info = info

    def fiber(self, x: str) -> list[str]:
        return self.fiber_obj.get(x, [])

    def bucket(self, f: str, xx: str, yy: str) -> list[str]:
        return self.disp_hom.get((f, xx, yy), [])

    def obj_over(self, xx: str) -> str:
        try:
            return self._obj_over[xx]
        except KeyError:
            raise TableError(f"unknown displayed object {xx!r}") from None

    def mor_info(self, ff: str) -> tuple[str, str, str]:
        """(base morphism, displayed source, displayed target) of ff."""
        try:
            return self._mor_info[ff]
        except KeyError:
            raise TableError(f"unknown displayed morphism {ff!r}") from None

    def validate(self) -> None:
        objs = set(self.base.objects)
        for x in self.fiber_obj:
            if x not in objs:
                raise TableError(f"fiber over unknown base object {x!r}")
        for (f, xx, yy) in self.disp_hom:
            if not self.base.has_mor(f):
                raise TableError(f"displayed hom bucket over unknown morphism {f!r}")
            if self.obj_over(xx) != self.base.src(f):
                raise TableError(
                    f"bucket ({f!r}, {xx!r}, {yy!r}): {xx!r} is not over the source")
            if self.obj_over(yy) != self.base.tgt(f):
                raise TableError(
                    f"bucket ({f!r}, {xx!r}, {yy!r}): {yy!r} is not over the target")
        for xx, ff in self.disp_id.items():
            self.obj_over(xx)
            self.mor_info(ff)
        for (gg, ff), hh in self.disp_comp.items():
            for m in (gg, ff, hh):
                self.mor_info(m)


def check_displayed_category(D: DisplayedCategory) -> LawReport:
    """Exhaustive displayed-category laws; assumes a lawful base (missing
    base composites are simply skipped — the base checker owns those)."""
    D.validate()
    C = D.base
    rep = LawReport()

    for x in C.objects:
        for xx in D.fiber(x):
            ff = D.disp_id.get(xx)
            if not rep.check(ff is not None, "disp-id-totality",
                             f"no displayed identity for {xx} over {x}"):
                continue
            rep.check(D.mor_info(ff) == (C.id_of(x), xx, xx), "disp-id-over",
                      f"disp_id({xx}) = {ff} has profile {D.mor_info(ff)}, "
                      f"expected ({C.id_of(x)}, {xx}, {xx})")

    for (g, f), h in C.comp.items():
        x, y, z = C.src(f), C.tgt(f), C.tgt(g)
        if C.tgt(f) != C.src(g):
            continue
        for xx in D.fiber(x):
            for yy in D.fiber(y):
                for zz in D.fiber(z):
                    for ff in D.bucket(f, xx, yy):
                        for gg in D.bucket(g, yy, zz):
                            hh = D.disp_comp.get((gg, ff))
                            if not rep.check(
                                    hh is not None, "disp-comp-totality",
                                    f"no composite for ({gg} over {g}) after "
                                    f"({ff} over {f}) at fibers ({xx}, {yy}, {zz})"):
                                continue
                            rep.check(D.mor_info(hh) == (h, xx, zz), "disp-comp-over",
                                      f"({gg} after {ff}) = {hh} has profile "
                                      f"{D.mor_info(hh)}, expected ({h}, {xx}, {zz})")

    for (gg, ff), hh in D.disp_comp.items():
        g, s_g, _ = D.mor_info(gg)
        f, _, t_f = D.mor_info(ff)
        rep.check((g, f) in C.comp and t_f == s_g, "disp-comp-composable",
                  f"disp_comp entry ({gg}, {ff}) over non-composable pair ({g}, {f})")

    for ff, (f, xx, yy) in D._mor_info.items():
        iy = D.disp_id.get(yy)
        if iy is not None and (iy, ff) in D.disp_comp:
            got = D.disp_comp[(iy, ff)]
            rep.check(got == ff, "disp-unit-left",
                      f"(disp_id({yy}) after {ff}) = {got}, expected {ff}")
        ix = D.disp_id.get(xx)
        if ix is not None and (ff, ix) in D.disp_comp:
            got = D.disp_comp[(ff, ix)]
            rep.check(got == ff, "disp-unit-right",
                      f"({ff} after disp_id({xx})) = {got}, expected {ff}")

    for (gg, ff) in list(D.disp_comp):
        for hh, (h, s_h, _) in D._mor_info.items():
            _, _, t_g = D.mor_info(gg)
            if t_g != s_h:
                continue
            gf = D.disp_comp.get((gg, ff))
            hg = D.disp_comp.get((hh, gg))
            if gf is None or hg is None:
                continue
            left = D.disp_comp.get((hh, gf))
            right = D.disp_comp.get((hg, ff))
            if left is None or right is None:
                continue
            rep.check(left == right, "disp-assoc",
                      f"({hh} after ({gg} after {ff})) = {left} but "
                      f"(({hh} after {gg}) after {ff}) = {right}")
    return rep


def total_category(D: DisplayedCategory) -> tuple[FinCategory, FinFunctor]:
    """Pair base data with displayed data: objects (x, xx), morphisms
    (f, ff); second component of the result is the projection functor."""
    D.validate()
    C = D.base
    objects = tuple(pair_obj(x, xx) for x in C.objects for xx in D.fiber(x))
    morphisms = []
    proj_mor = {}
    for f, x, y in C.morphisms:
        for xx in D.fiber(x):
            for yy in D.fiber(y):
                for ff in D.bucket(f, xx, yy):
                    mid = pair_mor(f, ff)
                    morphisms.append((mid, pair_obj(x, xx), pair_obj(y, yy)))
                    proj_mor[mid] = f
    identity = {}
    for x in C.objects:
        for xx in D.fiber(x):
            ff = D.disp_id.get(xx)
            if ff is not None:
                identity[pair_obj(x, xx)] = pair_mor(C.id_of(x), ff)
    comp = {}
    for (g, f), h in C.comp.items():
        for (gg, ff), hh in D.disp_comp.items():
            if D.mor_info(gg)[0] != g or D.mor_info(ff)[0] != f:
                continue
            if D.mor_info(ff)[2] != D.mor_info(gg)[1]:
                continue
            comp[(pair_mor(g, gg), pair_mor(f, ff))] = pair_mor(h, hh)
    total = FinCategory(objects, tuple(morphisms), identity, comp)
    proj = FinFunctor(
        total, C,
        {pair_obj(x, xx): x for x in C.objects for xx in D.fiber(x)},
        proj_mor,
        name="projection",
    )
    return total, proj


@dataclass
class Section:
    """A functorial choice of displayed data over every base object and
    morphism; lifting it and projecting back is the identity."""

    disp_cat: DisplayedCategory
    on_obj: dict[str, str]
    on_mor: dict[str, str]


def lift_section(s: Section) -> FinFunctor:
    """Mechanical lift base → total; lawfulness of the section is exactly
    lawfulness (check_functor) of the returned functor."""
    D = s.disp_cat
    C = D.base
    total, _ = total_category(D)
    on_obj = {}
    for x in C.objects:
        if x not in s.on_obj:
            raise TableError(f"section chooses no displayed object over {x!r}")
        on_obj[x] = pair_obj(x, s.on_obj[x])
    on_mor = {}
    for f, _, _ in C.morphisms:
        if f not in s.on_mor:
            raise TableError(f"section chooses no displayed morphism over {f!r}")
        on_mor[f] = pair_mor(f, s.on_mor[f])
    return FinFunctor(C, total, on_obj, on_mor, name="section-lift")


def projection_functor(D: DisplayedCategory) -> FinFunctor:
    return total_category(D)[1]


# --- displayed monoidal ------------------------------------------------------

@dataclass
class DisplayedMonoidal:
    """Displayed monoidal structure: a displayed unit, a displayed tensor
    in whiskered form, and displayed structural morphisms over the base
    ones, each with a designated inverse."""

    base_monoidal: MonoidalCategory
    disp_cat: DisplayedCategory
    disp_unit: str
    disp_tensor: dict[tuple[str, str], str]
    disp_lwhisker: dict[tuple[str, str], str]
    disp_rwhisker: dict[tuple[str, str], str]
    disp_lunitor: dict[str, str]
    disp_lunitor_inv: dict[str, str]
    disp_runitor: dict[str, str]
    disp_runitor_inv: dict[str, str]
    disp_associator: dict[tuple[str, str, str], str]
    disp_associator_inv: dict[tuple[str, str, str], str]

    def validate(self) -> None:
        self.disp_cat.validate()
        D = self.disp_cat
        D.obj_over(self.disp_unit)
        for (xx, yy), oo in self.disp_tensor.items():
            D.obj_over(xx), D.obj_over(yy), D.obj_over(oo)
        for (xx, ff), mm in self.disp_lwhisker.items():
            D.obj_over(xx), D.mor_info(ff), D.mor_info(mm)
        for (ff, zz), mm in self.disp_rwhisker.items():
            D.mor_info(ff), D.obj_over(zz), D.mor_info(mm)
        for table in (self.disp_lunitor, self.disp_lunitor_inv,
                      self.disp_runitor, self.disp_runitor_inv):
            for xx, mm in table.items():
                D.obj_over(xx), D.mor_info(mm)
        for table in (self.disp_associator, self.disp_associator_inv):
            for (xx, yy, zz), mm in table.items():
                D.obj_over(xx), D.obj_over(yy), D.obj_over(zz), D.mor_info(mm)


def _all_disp_objects(D: DisplayedCategory) -> list[str]:
    return [xx for x in D.base.objects for xx in D.fiber(x)]


def check_displayed_monoidal(DM: DisplayedMonoidal) -> LawReport:
    """Displayed-category laws, then displayed whiskering/structural laws
    mirroring the base monoidal laws fiberwise."""
    DM.validate()
    D = DM.disp_cat
    M = DM.base_monoidal
    T = M.tensor
    rep = check_displayed_category(D)
    dobjs = _all_disp_objects(D)
    dcomp = D.disp_comp.get

    rep.check(D.obj_over(DM.disp_unit) == M.unit, "disp-unit-over",
              f"displayed unit {DM.disp_unit} lies over "
              f"{D.obj_over(DM.disp_unit)}, expected {M.unit}")

    def ten(xx: str, yy: str):
        oo = DM.disp_tensor.get((xx, yy))
        if oo is None:
            rep.fail("disp-tensor-totality", f"no displayed tensor for ({xx}, {yy})")
            rep.tally()
        return oo

    for xx in dobjs:
        for yy in dobjs:
            oo = ten(xx, yy)
            if oo is None:
                continue
            want = T.obj(D.obj_over(xx), D.obj_over(yy))
            rep.check(D.obj_over(oo) == want, "disp-tensor-over",
                      f"{xx}⊗̂{yy} = {oo} lies over {D.obj_over(oo)}, expected {want}")

    def lw(xx: str, ff: str):
        mm = DM.disp_lwhisker.get((xx, ff))
        if mm is None:
            rep.fail("disp-lwhisker-totality", f"no displayed left whisker ({xx}, {ff})")
            rep.tally()
        return mm

    def rw(ff: str, zz: str):
        mm = DM.disp_rwhisker.get((ff, zz))
        if mm is None:
            rep.fail("disp-rwhisker-totality", f"no displayed right whisker ({ff}, {zz})")
            rep.tally()
        return mm

    all_dmors = list(D._mor_info.items())

    for xx in dobjs:
        x = D.obj_over(xx)
        for ff, (f, yy, zz) in all_dmors:
            mm = lw(xx, ff)
            if mm is not None:
                s, t = DM.disp_tensor.get((xx, yy)), DM.disp_tensor.get((xx, zz))
                if s is not None and t is not None:
                    rep.check(D.mor_info(mm) == (T.lw(x, f), s, t), "disp-lwhisker-over",
                              f"{xx}⊗̂{ff} = {mm} has profile {D.mor_info(mm)}, "
                              f"expected ({T.lw(x, f)}, {s}, {t})")
            mm = rw(ff, xx)
            if mm is not None:
                s, t = DM.disp_tensor.get((yy, xx)), DM.disp_tensor.get((zz, xx))
                if s is not None and t is not None:
                    rep.check(D.mor_info(mm) == (T.rw(f, x), s, t), "disp-rwhisker-over",
                              f"{ff}⊗̂{xx} = {mm} has profile {D.mor_info(mm)}, "
                              f"expected ({T.rw(f, x)}, {s}, {t})")

    for xx in dobjs:
        for yy in dobjs:
            oo = DM.disp_tensor.get((xx, yy))
            io = None if oo is None else D.disp_id.get(oo)
            iy = D.disp_id.get(yy)
            if iy is not None and io is not None:
                mm = DM.disp_lwhisker.get((xx, iy))
                if mm is not None:
                    rep.check(mm == io, "disp-lwhisker-identity",
                              f"{xx}⊗̂disp_id({yy}) = {mm}, expected disp_id({oo})")
            ix = D.disp_id.get(xx)
            if ix is not None and io is not None:
                mm = DM.disp_rwhisker.get((ix, yy))
                if mm is not None:
                    rep.check(mm == io, "disp-rwhisker-identity",
                              f"disp_id({xx})⊗̂{yy} = {mm}, expected disp_id({oo})")

    for (gg, ff), hh in D.disp_comp.items():
        for xx in dobjs:
            l_g, l_f, l_h = DM.disp_lwhisker.get((xx, gg)), \
                DM.disp_lwhisker.get((xx, ff)), DM.disp_lwhisker.get((xx, hh))
            if None not in (l_g, l_f, l_h):
                got = dcomp((l_g, l_f))
                rep.check(got == l_h, "disp-lwhisker-composition",
                          f"{xx}⊗̂({gg} after {ff}) = {l_h} but "
                          f"({xx}⊗̂{gg} after {xx}⊗̂{ff}) = {got}")
            r_g, r_f, r_h = DM.disp_rwhisker.get((gg, xx)), \
                DM.disp_rwhisker.get((ff, xx)), DM.disp_rwhisker.get((hh, xx))
            if None not in (r_g, r_f, r_h):
                got = dcomp((r_g, r_f))
                rep.check(got == r_h, "disp-rwhisker-composition",
                          f"({gg} after {ff})⊗̂{xx} = {r_h} but "
                          f"({gg}⊗̂{xx} after {ff}⊗̂{xx}) = {got}")

    for ff, (f, yy, yy1) in all_dmors:
        for gg, (g, xx, xx1) in all_dmors:
            a = DM.disp_rwhisker.get((gg, yy1))
            b = DM.disp_lwhisker.get((xx, ff))
            c = DM.disp_lwhisker.get((xx1, ff))
            d = DM.disp_rwhisker.get((gg, yy))
            if None in (a, b, c, d):
                continue
            lhs, rhs = dcomp((a, b)), dcomp((c, d))
            if lhs is None or rhs is None:
                continue
            rep.check(lhs == rhs, "disp-interchange",
                      f"at ff={ff}, gg={gg}: ({gg}⊗̂{yy1} after {xx}⊗̂{ff}) = {lhs} "
                      f"but ({xx1}⊗̂{ff} after {gg}⊗̂{yy}) = {rhs}")

    def disp_iso(fwd, bwd, src_oo, tgt_oo, law, where):
        if None in (fwd, bwd, src_oo, tgt_oo):
            return
        i_t, i_s = D.disp_id.get(tgt_oo), D.disp_id.get(src_oo)
        one = dcomp((fwd, bwd))
        rep.check(one == i_t, law + "-iso",
                  f"{where}: ({fwd} after {bwd}) = {one}, expected disp_id({tgt_oo})")
        other = dcomp((bwd, fwd))
        rep.check(other == i_s, law + "-iso",
                  f"{where}: ({bwd} after {fwd}) = {other}, expected disp_id({src_oo})")

    uu = DM.disp_unit
    for xx in dobjs:
        lu = DM.disp_lunitor.get(xx)
        if lu is None:
            rep.fail("disp-lunitor-totality", f"no displayed lunitor at {xx}")
            rep.tally()
        else:
            want = (M.lunitor[D.obj_over(xx)], DM.disp_tensor.get((uu, xx)), xx)
            rep.check(D.mor_info(lu) == want, "disp-lunitor-over",
                      f"disp lunitor at {xx} = {lu} has profile {D.mor_info(lu)}, "
                      f"expected {want}")
        disp_iso(lu, DM.disp_lunitor_inv.get(xx), DM.disp_tensor.get((uu, xx)), xx,
                 "disp-lunitor", f"lunitor at {xx}")
        ru = DM.disp_runitor.get(xx)
        if ru is None:
            rep.fail("disp-runitor-totality", f"no displayed runitor at {xx}")
            rep.tally()
        else:
            want = (M.runitor[D.obj_over(xx)], DM.disp_tensor.get((xx, uu)), xx)
            rep.check(D.mor_info(ru) == want, "disp-runitor-over",
                      f"disp runitor at {xx} = {ru} has profile {D.mor_info(ru)}, "
                      f"expected {want}")
        disp_iso(ru, DM.disp_runitor_inv.get(xx), DM.disp_tensor.get((xx, uu)), xx,
                 "disp-runitor", f"runitor at {xx}")

    def dten2(a, b, c):
        ab = DM.disp_tensor.get((a, b))
        return None if ab is None else DM.disp_tensor.get((ab, c))

    def dten2r(a, b, c):
        bc = DM.disp_tensor.get((b, c))
        return None if bc is None else DM.disp_tensor.get((a, bc))

    for xx, yy, zz in itertools.product(dobjs, repeat=3):
        al = DM.disp_associator.get((xx, yy, zz))
        if al is None:
            rep.fail("disp-associator-totality",
                     f"no displayed associator at ({xx}, {yy}, {zz})")
            rep.tally()
        else:
            base_al = M.associator[(D.obj_over(xx), D.obj_over(yy), D.obj_over(zz))]
            s, t = dten2(xx, yy, zz), dten2r(xx, yy, zz)
            if s is not None and t is not None:
                rep.check(D.mor_info(al) == (base_al, s, t), "disp-associator-over",
                          f"disp associator at ({xx},{yy},{zz}) = {al} has profile "
                          f"{D.mor_info(al)}, expected ({base_al}, {s}, {t})")
        disp_iso(al, DM.disp_associator_inv.get((xx, yy, zz)),
                 dten2(xx, yy, zz), dten2r(xx, yy, zz),
                 "disp-associator", f"associator at ({xx},{yy},{zz})")

    for xx, zz in itertools.product(dobjs, repeat=2):
        lu_z = DM.disp_lunitor.get(zz)
        al = DM.disp_associator.get((xx, uu, zz))
        ru_x = DM.disp_runitor.get(xx)
        if None in (lu_z, al, ru_x):
            continue
        w = DM.disp_lwhisker.get((xx, lu_z))
        r = DM.disp_rwhisker.get((ru_x, zz))
        if w is None or r is None:
            continue
        lhs = dcomp((w, al))
        rep.check(lhs == r, "disp-triangle",
                  f"at ({xx},{zz}): ({xx}⊗̂lunitor after associator) = {lhs} "
                  f"but runitor⊗̂{zz} = {r}")

    for ww, xx, yy, zz in itertools.product(dobjs, repeat=4):
        yz = DM.disp_tensor.get((yy, zz))
        wx = DM.disp_tensor.get((ww, xx))
        xy = DM.disp_tensor.get((xx, yy))
        if None in (yz, wx, xy):
            continue
        a1 = DM.disp_associator.get((ww, xx, yz))
        a2 = DM.disp_associator.get((wx, yy, zz))
        a3 = DM.disp_associator.get((xx, yy, zz))
        a4 = DM.disp_associator.get((ww, xy, zz))
        a5 = DM.disp_associator.get((ww, xx, yy))
        if None in (a1, a2, a3, a4, a5):
            continue
        lw_w = DM.disp_lwhisker.get((ww, a3))
        rw_z = DM.disp_rwhisker.get((a5, zz))
        if lw_w is None or rw_z is None:
            continue
        lhs = dcomp((a1, a2))
        inner = dcomp((a4, rw_z))
        rhs = None if inner is None else dcomp((lw_w, inner))
        if lhs is None or rhs is None:
            continue
        rep.check(lhs == rhs, "disp-pentagon",
                  f"at ({ww},{xx},{yy},{zz}): two-step side = {lhs}, "
                  f"three-step side = {rhs}")
    return rep


def total_monoidal(DM: DisplayedMonoidal) -> MonoidalCategory:
    """Monoidal structure on the total category; the projection from
    total_category is strict monoidal for it by construction."""
    DM.validate()
    D = DM.disp_cat
    M = DM.base_monoidal
    T = M.tensor
    total, _ = total_category(D)

    def pobj(xx: str) -> str:
        return pair_obj(D.obj_over(xx), xx)

    def pmor(mm: str) -> str:
        return pair_mor(D.mor_info(mm)[0], mm)

    dobjs = _all_disp_objects(D)
    obj_table = {(pobj(xx), pobj(yy)): pobj(DM.disp_tensor[(xx, yy)])
                 for xx in dobjs for yy in dobjs}
    lwhisker = {(pobj(xx), pmor(ff)): pmor(DM.disp_lwhisker[(xx, ff)])
                for xx in dobjs for ff in D._mor_info}
    rwhisker = {(pmor(ff), pobj(zz)): pmor(DM.disp_rwhisker[(ff, zz)])
                for zz in dobjs for ff in D._mor_info}
    tensor = WhiskeredBifunctor(total, obj_table, lwhisker, rwhisker)
    return MonoidalCategory(
        total,
        pobj(DM.disp_unit),
        tensor,
        {pobj(xx): pmor(DM.disp_lunitor[xx]) for xx in dobjs},
        {pobj(xx): pmor(DM.disp_lunitor_inv[xx]) for xx in dobjs},
        {pobj(xx): pmor(DM.disp_runitor[xx]) for xx in dobjs},
        {pobj(xx): pmor(DM.disp_runitor_inv[xx]) for xx in dobjs},
        {(pobj(a), pobj(b), pobj(c)): pmor(DM.disp_associator[(a, b, c)])
         for a in dobjs for b in dobjs for c in dobjs},
        {(pobj(a), pobj(b), pobj(c)): pmor(DM.disp_associator_inv[(a, b, c)])
         for a in dobjs for b in dobjs for c in dobjs},
        name="total",
    )


# --- canonical small instances ----------------------------------------------

def trivial_displayed(C: FinCategory) -> DisplayedCategory:
    """One displayed object over every base object, one displayed morphism
    over every base morphism; the total category mirrors the base."""
    star = lambda ident: f"{ident}^"
    fiber_obj = {x: [star(x)] for x in C.objects}
    disp_hom = {(f, star(x), star(y)): [star(f)] for f, x, y in C.morphisms}
    disp_id = {star(x): star(C.id_of(x)) for x in C.objects}
    disp_comp = {(star(g), star(f)): star(h) for (g, f), h in C.comp.items()}
    return DisplayedCategory(C, fiber_obj, disp_hom, disp_id, disp_comp)


def trivial_displayed_monoidal(M: MonoidalCategory) -> DisplayedMonoidal:
    C = M.base
    D = trivial_displayed(C)
    star = lambda ident: f"{ident}^"
    dobjs = _all_disp_objects(D)
    return DisplayedMonoidal(
        base_monoidal=M,
        disp_cat=D,
        disp_unit=star(M.unit),
        disp_tensor={(star(x), star(y)): star(M.tensor.obj(x, y))
                     for x in C.objects for y in C.objects},
        disp_lwhisker={(star(x), star(f)): star(M.tensor.lw(x, f))
                       for x in C.objects for f, _, _ in C.morphisms},
        disp_rwhisker={(star(f), star(z)): star(M.tensor.rw(f, z))
                       for z in C.objects for f, _, _ in C.morphisms},
        disp_lunitor={star(x): star(M.lunitor[x]) for x in C.objects},
        disp_lunitor_inv={star(x): star(M.lunitor_inv[x]) for x in C.objects},
        disp_runitor={star(x): star(M.runitor[x]) for x in C.objects},
        disp_runitor_inv={star(x): star(M.runitor_inv[x]) for x in C.objects},
        disp_associator={(star(x), star(y), star(z)): star(M.associator[(x, y, z)])
                         for x in C.objects for y in C.objects for z in C.objects},
        disp_associator_inv={(star(x), star(y), star(z)): star(M.associator_inv[(x, y, z)])
                             for x in C.objects for y in C.objects for z in C.objects},
    )


# --- JSON interchange --------------------------------------------------------

_DISP_FIELDS = {"base", "fiber_obj", "disp_hom", "disp_id", "disp_comp"}


def from_displayed_doc(doc, base: FinCategory) -> DisplayedCategory:
    if not isinstance(doc, dict):
        raise TableError("displayed document must be a JSON object")
    unknown = set(doc) - _DISP_FIELDS
    if unknown:
        raise TableError(f"unknown fields in displayed document: {sorted(unknown)}")
    missing = _DISP_FIELDS - set(doc)
    if missing:
        raise TableError(f"displayed document missing fields: {sorted(missing)}")
    fibers = doc["fiber_obj"]
    if not isinstance(fibers, dict) or not all(
            isinstance(k, str) and isinstance(v, list) and
            all(isinstance(e, str) for e in v) for k, v in fibers.items()):
        raise TableError("'fiber_obj' must map base objects to arrays of ids")
    hom_rows = doc["disp_hom"]
    if not isinstance(hom_rows, list):
        raise TableError("'disp_hom' must be an array")
    disp_hom = {}
    for row in hom_rows:
        if not isinstance(row, dict) or set(row) != {"over", "src", "tgt", "mors"} \
                or not all(isinstance(row[k], str) for k in ("over", "src", "tgt")) \
                or not isinstance(row["mors"], list) \
                or not all(isinstance(e, str) for e in row["mors"]):
            raise TableError(f"bad disp_hom row: {row!r}")
        key = (row["over"], row["src"], row["tgt"])
        if key in disp_hom:
            raise TableError(f"duplicate disp_hom bucket {key}")
        disp_hom[key] = list(row["mors"])
    ids = doc["disp_id"]
    if not isinstance(ids, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in ids.items()):
        raise TableError("'disp_id' must map displayed objects to displayed morphisms")
    comp_rows = doc["disp_comp"]
    if not isinstance(comp_rows, list):
        raise TableError("'disp_comp' must be an array")
    disp_comp = {}
    for row in comp_rows:
        if not isinstance(row, dict) or set(row) != {"after", "first", "result"} \
                or not all(isinstance(row[k], str) for k in ("after", "first", "result")):
            raise TableError(f"bad disp_comp row: {row!r}")
        key = (row["after"], row["first"])
        if key in disp_comp:
            raise TableError(f"duplicate disp_comp entry {key}")
        disp_comp[key] = row["result"]
    D = DisplayedCategory(base, dict(fibers), disp_hom, dict(ids), disp_comp)
    D.validate()
    return D


def load_displayed(path) -> DisplayedCategory:
    """Read a displayed-category document; its 'base' field is a path to a
    category document, resolved relative to the displayed file."""
    p = Path(path)
    doc = json.loads(p.read_text(encoding="utf-8"))
    if not isinstance(doc, dict) or "base" not in doc:
        raise TableError("displayed document must reference a 'base' file")
    if not isinstance(doc["base"], str):
        raise TableError("'base' must be a file path string")
    base_doc = json.loads((p.parent / doc["base"]).read_text(encoding="utf-8"))
    return from_displayed_doc(doc, from_doc(base_doc))
