"""Monoidal structure: whiskered tensors, coherence laws, monoid objects,
and the endofunctor instance with its monoid/monad correspondence."""

import itertools
import json

import pytest

from bindcat import (
    EnumerationOverflow,
    FinCategory,
    Monoid,
    TableError,
    WhiskeredBifunctor,
    chain_category,
    check_functor,
    check_monad,
    check_monoid,
    check_monoidal_laws,
    check_whiskered_bifunctor,
    classical_from_whiskered,
    endofunctor_monoidal,
    enumerate_endofunctors,
    enumerate_monoids,
    from_monoidal_doc,
    monad_to_monoid,
    monoid_to_monad,
    to_monoidal_doc,
    walking_arrow,
    whiskered_from_classical,
)

# --- tensors on the walking arrow ------------------------------------------------
#
# Hom sets in the walking arrow have at most one element, so a whiskered
# table with correct endpoints is determined by its object part alone.

ORDER = {"a": 0, "b": 1}


def _unique_mor(x, y):
    if x == y:
        return f"id_{x}"
    if (x, y) == ("a", "b"):
        return "f"
    raise AssertionError(f"no morphism {x} -> {y}")


def _tensor_from_obj(obj_fn) -> WhiskeredBifunctor:
    W = walking_arrow()
    obj_table = {(x, y): obj_fn(x, y) for x in W.objects for y in W.objects}
    lwhisker = {(x, g): _unique_mor(obj_fn(x, W.src(g)), obj_fn(x, W.tgt(g)))
                for x in W.objects for g, _, _ in W.morphisms}
    rwhisker = {(g, z): _unique_mor(obj_fn(W.src(g), z), obj_fn(W.tgt(g), z))
                for z in W.objects for g, _, _ in W.morphisms}
    return WhiskeredBifunctor(W, obj_table, lwhisker, rwhisker)


def _arrow_tensor_corpus():
    return {
        "min": _tensor_from_obj(lambda x, y: x if ORDER[x] <= ORDER[y] else y),
        "max": _tensor_from_obj(lambda x, y: x if ORDER[x] >= ORDER[y] else y),
        "const_a": _tensor_from_obj(lambda x, y: "a"),
        "const_b": _tensor_from_obj(lambda x, y: "b"),
        "proj_left": _tensor_from_obj(lambda x, y: x),
        "proj_right": _tensor_from_obj(lambda x, y: y),
    }


def _tables(T: WhiskeredBifunctor):
    return (T.obj_table, T.lwhisker, T.rwhisker)


@pytest.mark.parametrize("name", list(_arrow_tensor_corpus()))
def test_arrow_tensor_is_lawful(name):
    assert check_whiskered_bifunctor(_arrow_tensor_corpus()[name]).ok


@pytest.mark.parametrize("name", list(_arrow_tensor_corpus()))
def test_arrow_tensor_roundtrips_exactly(name):
    T = _arrow_tensor_corpus()[name]
    F = classical_from_whiskered(T)
    assert check_functor(F).ok
    assert _tables(whiskered_from_classical(F)) == _tables(T)
    G = classical_from_whiskered(whiskered_from_classical(F))
    assert (G.on_obj, G.on_mor) == (F.on_obj, F.on_mor)


def test_sabotaged_tensor_fails_both_presentations():
    T = _arrow_tensor_corpus()["min"]
    T.rwhisker[("f", "a")] = "f"  # should be id_a
    assert not check_whiskered_bifunctor(T).ok
    assert not check_functor(classical_from_whiskered(T)).ok


def test_whiskered_lawful_iff_classical_lawful_and_stable():
    # One object, one involution: every whisker table has valid endpoints,
    # so all sixteen candidates can be swept.  A table is a lawful tensor
    # exactly when its uncurried functor is lawful AND re-currying gives the
    # table back; uncurrying alone can launder a broken identity whisker
    # (the two constants cancel in the composite).
    Z = FinCategory(
        ("e",), (("id_e", "e", "e"), ("s", "e", "e")), {"e": "id_e"},
        {("id_e", "id_e"): "id_e", ("id_e", "s"): "s",
         ("s", "id_e"): "s", ("s", "s"): "id_e"})
    n_lawful = n_classical = n_stable = 0
    for li, ls, ri, rs in itertools.product(["id_e", "s"], repeat=4):
        T = WhiskeredBifunctor(Z, {("e", "e"): "e"},
                               {("e", "id_e"): li, ("e", "s"): ls},
                               {("id_e", "e"): ri, ("s", "e"): rs})
        w_ok = check_whiskered_bifunctor(T).ok
        F = classical_from_whiskered(T)
        c_ok = check_functor(F).ok
        stable = _tables(whiskered_from_classical(F)) == _tables(T)
        assert w_ok == (c_ok and stable)
        n_lawful += w_ok
        n_classical += c_ok
        n_stable += stable
    assert (n_lawful, n_classical, n_stable) == (4, 8, 4)


# --- the endofunctor instance ----------------------------------------------------

@pytest.fixture(scope="module")
def two_chain_endo():
    return endofunctor_monoidal(chain_category(2))


def test_endofunctor_instance_shape(two_chain_endo):
    E = two_chain_endo
    assert sorted(E.functors) == ["Id", "const_0", "const_1"]
    assert len(E.nats) == 6


def test_endofunctor_instance_is_lawful(two_chain_endo):
    rep = check_monoidal_laws(two_chain_endo.monoidal)
    assert rep.ok
    assert rep.checks_run == 513


def test_endofunctor_structure_is_strict(two_chain_endo):
    # tensor is functor composition, so the unitors and associator are
    # all identity transformations, componentwise
    M = two_chain_endo.monoidal
    C = M.base
    for x in C.objects:
        assert M.lunitor[x] == C.id_of(x)
        assert M.runitor[x] == C.id_of(x)
    for key in itertools.product(C.objects, repeat=3):
        assert M.associator[key] == C.id_of(C.tgt(M.associator[key]))


def test_endofunctor_tensor_roundtrips(two_chain_endo):
    T = two_chain_endo.monoidal.tensor
    F = classical_from_whiskered(T)
    assert check_functor(F).ok
    assert _tables(whiskered_from_classical(F)) == _tables(T)


def test_monoids_of_the_endofunctor_instance(two_chain_endo):
    monoids = enumerate_monoids(two_chain_endo.monoidal)
    assert sorted(m.carrier for m in monoids) == ["Id", "const_1"]


def test_monoid_monad_correspondence(two_chain_endo):
    E = two_chain_endo
    for m in enumerate_monoids(E.monoidal):
        T = monoid_to_monad(E, m)
        assert check_monad(T).ok
        assert monad_to_monoid(E, T) == m


def test_monad_components_of_identity_monoid(two_chain_endo):
    E = two_chain_endo
    (ident,) = [m for m in enumerate_monoids(E.monoidal) if m.carrier == "Id"]
    T = monoid_to_monad(E, ident)
    C = E.category
    for x in C.objects:
        assert T.unit.at(x) == C.id_of(x)
        assert T.mult.at(x) == C.id_of(x)


def test_broken_monoid_candidate_is_reported(two_chain_endo):
    M = two_chain_endo.monoidal
    bad = Monoid("const_1", "id_Id", "id_const_1")
    rep = check_monoid(M, bad)
    assert {v.law for v in rep.violations} == {"monoid-unit-endpoints"}


def test_monoid_with_unknown_ids_is_structural(two_chain_endo):
    with pytest.raises(TableError):
        check_monoid(two_chain_endo.monoidal, Monoid("Id", "nope", "id_Id"))


def test_enumeration_bound():
    with pytest.raises(EnumerationOverflow):
        enumerate_endofunctors(chain_category(2), bound=2)


# --- coherence fixtures ------------------------------------------------------------

def test_broken_pentagon_fixture(fixtures):
    doc = json.loads((fixtures / "broken_pentagon.json").read_text())
    rep = check_monoidal_laws(from_monoidal_doc(doc))
    assert {v.law for v in rep.violations} == {"pentagon"}
    (v,) = rep.violations
    assert "(e,e,e,e)" in v.witness


def test_monoidal_doc_roundtrip(fixtures):
    doc = json.loads((fixtures / "broken_pentagon.json").read_text())
    assert to_monoidal_doc(from_monoidal_doc(doc)) == doc


def test_monoidal_doc_missing_structure_is_structural(fixtures):
    doc = json.loads((fixtures / "broken_pentagon.json").read_text())
    doc["associator"] = []
    with pytest.raises(TableError):
        from_monoidal_doc(doc)


def test_monoidal_doc_unknown_field(fixtures):
    doc = json.loads((fixtures / "broken_pentagon.json").read_text())
    doc["extra"] = 1
    with pytest.raises(TableError):
        from_monoidal_doc(doc)
