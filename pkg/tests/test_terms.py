"""Well-scoped terms over a binding signature: construction, enumeration,
renaming, substitution, and the substitution monad laws."""

import pytest
from hypothesis import given, settings, strategies as st

import bindcat.terms
from bindcat import (
    Ctor,
    ParseError,
    ScopeError,
    Substitution,
    Var,
    check_term,
    construct,
    enumerate_terms,
    load_signature,
    parse_signature,
    parse_term,
    render_term,
    substitute,
)
from bindcat.terms import (
    binder_nesting,
    check_monad_laws,
    check_subst_via_mendler,
    compose_substitutions,
    identity_renaming,
    lift_renaming,
    lift_substitution,
    nat_signature,
    nat_term,
    rename,
    render_substitution,
    run_evenness_demo,
    subst_via_mendler,
    substitution_pool,
    term_depth,
    unit_substitution,
    weakening,
)

LAM = parse_signature("sig lam { app : [0, 0]; abs : [1]; }")


def lam_term(scope, text):
    return parse_term(LAM, scope, text)


# ------------- construction and scope checking -------------


def test_construct_app():
    t = construct(LAM, 1, "app", Var(1, 0), Var(1, 0))
    assert t.scope == 1 and t.name == "app"
    check_term(LAM, t)


def test_construct_abs_binds_one():
    t = construct(LAM, 0, "abs", Var(1, 0))
    assert t.scope == 0
    assert t.args[0].scope == 1
    check_term(LAM, t)


def test_construct_rejects_wrong_child_scope():
    with pytest.raises(ScopeError):
        construct(LAM, 0, "abs", Var(2, 0))


def test_construct_rejects_wrong_arity():
    with pytest.raises(ValueError):
        construct(LAM, 0, "app", Var(0, 0))


def test_var_index_must_be_in_scope():
    with pytest.raises(ScopeError):
        Var(0, 0)
    with pytest.raises(ScopeError):
        Var(2, 2)


def test_check_term_rejects_foreign_child():
    bad = Ctor(0, "abs", (42,))
    with pytest.raises(ScopeError):
        check_term(LAM, bad)


def test_term_depth():
    assert term_depth(Var(1, 0)) == 0
    assert term_depth(lam_term(0, "abs(var 0)")) == 1
    assert term_depth(lam_term(0, "abs(app(var 0, var 0))")) == 2
    assert term_depth(nat_term(0)) == 0  # nullary constructor


# ------------- printing and parsing -------------


def test_render_examples():
    assert render_term(Var(3, 2)) == "var 2"
    assert render_term(lam_term(0, "abs(var 0)")) == "abs(var 0)"
    assert render_term(nat_term(2)) == "succ(succ(zero()))"


def test_parse_whitespace_insensitive():
    assert lam_term(1, "app(var 0,abs(var  1))") == \
        lam_term(1, "app( var 0 , abs( var 1 ) )")


@pytest.mark.parametrize("text,fragment", [
    ("var 1", "scope"),
    ("foo(var 0)", "unknown constructor"),
    ("app(var 0)", "','"),
    ("abs(var 0", "')'"),
    ("abs(var 0) var", "trailing input"),
    ("abs()", "expected a term"),
])
def test_parse_rejections(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_term(LAM, 1, text)
    assert fragment in str(exc.value)


@settings(max_examples=60)
@given(scope=st.integers(0, 2), data=st.data())
def test_render_parse_roundtrip(scope, data):
    pool = enumerate_terms(LAM, scope, 3)
    t = data.draw(st.sampled_from(pool))
    assert parse_term(LAM, scope, render_term(t)) == t


# ------------- enumeration -------------


def test_enumeration_counts():
    assert [len(enumerate_terms(LAM, n, 2)) for n in range(3)] == [1, 4, 9]
    assert [len(enumerate_terms(LAM, n, 3)) for n in range(3)] == [5, 26, 99]


def test_enumeration_smallest_closed_term():
    assert enumerate_terms(LAM, 0, 2) == [lam_term(0, "abs(var 0)")]
    assert enumerate_terms(LAM, 0, 1) == []


def test_enumeration_is_cumulative():
    small = set(enumerate_terms(LAM, 1, 2))
    assert small <= set(enumerate_terms(LAM, 1, 3))


def test_enumeration_nat():
    nat = nat_signature()
    assert [len(enumerate_terms(nat, 0, d)) for d in (1, 2, 3)] == [1, 2, 3]
    assert nat_term(2) in enumerate_terms(nat, 0, 3)


# ------------- renamings -------------


def test_weakening_shifts_free_variables():
    t = lam_term(1, "abs(app(var 0, var 1))")
    shifted = rename(t, weakening(1, 1))
    assert shifted == lam_term(2, "abs(app(var 0, var 2))")


def test_rename_identity_is_identity():
    for t in enumerate_terms(LAM, 2, 3):
        assert rename(t, identity_renaming(2)) == t


def test_lift_identity_renaming():
    assert lift_renaming(identity_renaming(2), 1) == identity_renaming(3)


def test_renaming_validation():
    with pytest.raises(ScopeError):
        bindcat.terms.Renaming(2, 1, (0, 1))


# ------------- substitution -------------


def test_render_substitution():
    assert render_substitution(unit_substitution(1)) == "{0 -> var 0} : 1->1"


def test_substitute_variable():
    s = Substitution(1, 0, (lam_term(0, "abs(var 0)"),))
    assert substitute(Var(1, 0), s) == lam_term(0, "abs(var 0)")


def test_substitute_under_binder_avoids_capture():
    # the free var 1 is replaced by a closed term; the bound var 0 stays put
    t = lam_term(1, "abs(app(var 0, var 1))")
    s = Substitution(1, 0, (lam_term(0, "abs(var 0)"),))
    assert substitute(t, s) == lam_term(0, "abs(app(var 0, abs(var 0)))")


def test_lift_unit_is_unit():
    assert lift_substitution(unit_substitution(1), 1) == unit_substitution(2)


def test_lift_shifts_old_images():
    s = Substitution(1, 1, (lam_term(1, "abs(app(var 0, var 1))"),))
    lifted = lift_substitution(s, 1)
    assert lifted.images[0] == Var(2, 0)
    assert lifted.images[1] == lam_term(2, "abs(app(var 0, var 2))")


def test_substitute_scope_mismatch():
    with pytest.raises(ScopeError):
        substitute(Var(2, 0), unit_substitution(1))


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_composition_agrees_with_sequencing(data):
    terms = enumerate_terms(LAM, 1, 2)
    images1 = enumerate_terms(LAM, 2, 2)
    images2 = enumerate_terms(LAM, 1, 2)
    t = data.draw(st.sampled_from(terms))
    sigma = Substitution(1, 2, (data.draw(st.sampled_from(images1)),))
    tau = Substitution(2, 1, tuple(data.draw(st.sampled_from(images2))
                                   for _ in range(2)))
    composed = compose_substitutions(tau, sigma)
    assert substitute(t, composed) == substitute(substitute(t, sigma), tau)


# ------------- the monad-law suite -------------


def test_monad_laws_small_counts():
    rep = check_monad_laws(LAM, 2, 1)
    assert rep.ok and rep.checks_run == 13
    rep = check_monad_laws(LAM, 2, 2)
    assert rep.ok and rep.checks_run == 297
    rep = check_monad_laws(LAM, 3, 1, image_depth=2)
    assert rep.ok and rep.checks_run == 643


def test_monad_laws_nat():
    rep = check_monad_laws(nat_signature(), 3, 2)
    assert rep.ok


# fault injection: re-scope images without shifting their indices, i.e.
# substitution under a binder captures what it should have avoided

def shift_scope(t, k):
    if isinstance(t, Var):
        return Var(t.scope + k, t.index)
    return Ctor(t.scope + k, t.name, tuple(shift_scope(a, k) for a in t.args))


def broken_substitute(t, s):
    if isinstance(t, Var):
        return s.images[t.index]
    out = []
    for a in t.args:
        k = a.scope - t.scope
        if k == 0:
            out.append(broken_substitute(a, s))
        else:
            bad = Substitution(
                s.source + k, s.target + k,
                tuple(Var(s.target + k, i) for i in range(k))
                + tuple(shift_scope(img, k) for img in s.images))
            out.append(broken_substitute(a, bad))
    return Ctor(s.target, t.name, tuple(out))


def test_fault_injection_is_detected():
    rep = check_monad_laws(LAM, 2, 2, subst=broken_substitute)
    assert rep.checks_run == 297
    assert len(rep.violations) == 26
    assert {v.law for v in rep.violations} <= {"monad-assoc", "monad-right-unit"}
    assert any(v.law == "monad-assoc" for v in rep.violations)
    assert all("abs" in v.witness for v in rep.violations)


def test_fault_injection_invisible_without_binders():
    # nat has no binders, so the broken lift is never exercised
    rep = check_monad_laws(nat_signature(), 3, 2, subst=broken_substitute)
    assert rep.ok


# ------------- substitution via the iteration scheme -------------


def test_binder_nesting():
    assert binder_nesting(Var(1, 0)) == 0
    assert binder_nesting(lam_term(0, "abs(var 0)")) == 1
    assert binder_nesting(lam_term(0, "abs(abs(app(var 0, var 1)))")) == 2
    assert binder_nesting(lam_term(0, "app(abs(var 0), abs(abs(var 0)))")) == 2


def test_substitution_pool_generations():
    pool = substitution_pool(LAM, 1, 1, 1)
    assert len(pool) == 5
    assert sorted(pool.values()) == [0, 0, 0, 1, 1]
    deeper = substitution_pool(LAM, 1, 1, 2)
    assert set(pool) <= set(deeper)
    assert len(deeper) == 7


def test_subst_via_mendler_agrees():
    rep = check_subst_via_mendler(LAM, 2, 1, 1)
    assert rep.ok and rep.checks_run == 14
    rep = check_subst_via_mendler(LAM, 2, 2, 1)
    assert rep.ok
    rep = check_subst_via_mendler(nat_signature(), 3, 1, 1)
    assert rep.ok


def test_subst_via_mendler_values():
    h = subst_via_mendler(LAM, 2, 1, 1)
    t = lam_term(1, "abs(var 1)")
    s = Substitution(1, 1, (Var(1, 0),))
    assert h[(t, s)] == substitute(t, s) == lam_term(1, "abs(var 1)")


# ------------- the evenness instance -------------


def test_evenness_demo():
    rep = run_evenness_demo(depth=5)
    assert rep.ok
    assert rep.checks_run == 13
