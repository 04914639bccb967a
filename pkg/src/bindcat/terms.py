"""Well-scoped terms over a binding signature, with renaming,
capture-avoiding substitution, and exhaustive monad-law checking.

A term carries the scope it lives in: ``Var(n, i)`` is variable i among
n, and a constructor argument with binding arity k lives in scope n + k.
Substitutions are total maps from variables to terms in a target scope;
going under a binder lifts the substitution, weakening its images.

``subst_via_mendler`` rebuilds substitution without structural recursion
on terms, as a generalized Mendler iteration over the term chain; it is
checked against the direct implementation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .omega import (DEFAULT_MAX_STAGE, EnumEndofunctor, EnumSetObj,
                    adamek_initial_algebra, check_mendler_fixed_point,
                    const_enum_set, count_mendler_solutions,
                    gen_mendler_iteration, identity_endofunctor)
from .report import LawReport
from .signature import BindingSignature, Constructor, ParseError, _Parser

# When enabled (test builds), every Var construction checks its index
# and every Ctor construction checks its argument shapes.
CHECK_SCOPES = False


class ScopeError(ValueError):
    """A term or substitution was used at the wrong scope."""


@dataclass(frozen=True)
class Term:
    scope: int


@dataclass(frozen=True)
class Var(Term):
    index: int

    def __post_init__(self):
        if CHECK_SCOPES and not 0 <= self.index < self.scope:
            raise ScopeError(
                f"variable index {self.index} out of range for scope {self.scope}")


@dataclass(frozen=True)
class Ctor(Term):
    name: str
    args: tuple[Term, ...]

    def __post_init__(self):
        # args may hold non-term values: the term functor's action on a
        # map into an arbitrary set reuses Ctor as the cell constructor.
        if CHECK_SCOPES:
            for a in self.args:
                if isinstance(a, Term) and a.scope < self.scope:
                    raise ScopeError(
                        f"argument of {self.name} at scope {self.scope} "
                        f"has scope {a.scope}")


def construct(sig: BindingSignature, scope: int, name: str, *args: Term) -> Ctor:
    """Build a constructor application, validating arity and scopes."""
    c = sig.constructor(name)
    if len(args) != len(c.arity):
        raise ScopeError(f"{name} takes {len(c.arity)} arguments, got {len(args)}")
    for a, k in zip(args, c.arity):
        if a.scope != scope + k:
            raise ScopeError(
                f"argument of {name} binding {k} must be in scope {scope + k}, "
                f"got scope {a.scope}")
    return Ctor(scope, name, tuple(args))


def check_term(sig: BindingSignature, t: Term) -> None:
    """Raise ScopeError unless t is well-scoped over sig."""
    if isinstance(t, Var):
        if not 0 <= t.index < t.scope:
            raise ScopeError(
                f"variable index {t.index} out of range for scope {t.scope}")
        return
    c = sig.constructor(t.name)
    if len(t.args) != len(c.arity):
        raise ScopeError(f"{t.name} takes {len(c.arity)} arguments, got {len(t.args)}")
    for a, k in zip(t.args, c.arity):
        if not isinstance(a, Term):
            raise ScopeError(f"argument of {t.name} is not a term: {a!r}")
        if a.scope != t.scope + k:
            raise ScopeError(
                f"argument of {t.name} at scope {t.scope} binding {k} "
                f"has scope {a.scope}")
        check_term(sig, a)


def term_depth(t: Term) -> int:
    if isinstance(t, Var) or not t.args:
        return 0
    return 1 + max(term_depth(a) for a in t.args)


def render_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"var {t.index}"
    return f"{t.name}({', '.join(render_term(a) for a in t.args)})"


def _parse_term(p: _Parser, sig: BindingSignature, scope: int) -> Term:
    tok = p.peek()
    if tok[0] == "ident" and tok[1] == "var":
        p.next()
        num = p.peek()
        i = int(p.expect("nat", "a variable index"))
        if not 0 <= i < scope:
            raise ParseError(num[2], num[3],
                             f"variable index {i} out of range for scope {scope}")
        return Var(scope, i)
    if tok[0] != "ident":
        p.error("expected a term")
    name = p.next()[1]
    try:
        c = sig.constructor(name)
    except KeyError:
        raise ParseError(tok[2], tok[3], f"unknown constructor {name!r}") from None
    p.expect("(", "'('")
    args = []
    for j, k in enumerate(c.arity):
        if j:
            p.expect(",", "','")
        args.append(_parse_term(p, sig, scope + k))
    p.expect(")", "')'")
    return Ctor(scope, name, tuple(args))


def parse_term(sig: BindingSignature, scope: int, text: str) -> Term:
    """Parse the surface syntax ``var i`` / ``name(t1, …, tk)``; raises
    ParseError with 1-based position info."""
    p = _Parser(text)
    t = _parse_term(p, sig, scope)
    if p.peek()[0] != "eof":
        p.error("trailing input after term")
    return t


@lru_cache(maxsize=None)
def _enum(sig: BindingSignature, scope: int, depth: int) -> tuple[Term, ...]:
    if depth <= 0:
        return ()
    out: list[Term] = [Var(scope, i) for i in range(scope)]
    for c in sig.constructors:
        pools = [_enum(sig, scope + k, depth - 1) for k in c.arity]
        for args in itertools.product(*pools):
            out.append(Ctor(scope, c.name, args))
    return tuple(out)


def enumerate_terms(sig: BindingSignature, scope: int, depth: int) -> list[Term]:
    """All terms of depth < depth in the given scope, in a deterministic
    order: variables first, then constructors in signature order."""
    return list(_enum(sig, scope, depth))


# --- renaming -----------------------------------------------------------------

@dataclass(frozen=True)
class Renaming:
    source: int
    target: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source:
            raise ScopeError(
                f"renaming from scope {self.source} needs {self.source} images, "
                f"got {len(self.images)}")
        for i in self.images:
            if not 0 <= i < self.target:
                raise ScopeError(f"renaming image {i} out of range for scope {self.target}")


def identity_renaming(n: int) -> Renaming:
    return Renaming(n, n, tuple(range(n)))


def weakening(n: int, k: int) -> Renaming:
    """Shift scope n into scope n + k, freeing the first k indices."""
    return Renaming(n, n + k, tuple(i + k for i in range(n)))


def lift_renaming(r: Renaming, k: int) -> Renaming:
    """Extend a renaming under a binder of k fresh variables, which map
    to themselves."""
    if k == 0:
        return r
    return Renaming(r.source + k, r.target + k,
                    tuple(range(k)) + tuple(i + k for i in r.images))


def rename(t: Term, r: Renaming) -> Term:
    if t.scope != r.source:
        raise ScopeError(f"term in scope {t.scope} renamed from scope {r.source}")
    if isinstance(t, Var):
        return Var(r.target, r.images[t.index])
    return Ctor(r.target, t.name,
                tuple(rename(a, lift_renaming(r, a.scope - t.scope)) for a in t.args))


# --- substitution -------------------------------------------------------------

@dataclass(frozen=True)
class Substitution:
    source: int
    target: int
    images: tuple[Term, ...]

    def __post_init__(self):
        if len(self.images) != self.source:
            raise ScopeError(
                f"substitution from scope {self.source} needs {self.source} images, "
                f"got {len(self.images)}")
        for img in self.images:
            if img.scope != self.target:
                raise ScopeError(
                    f"substitution image {render_term(img)} is in scope {img.scope}, "
                    f"not the target scope {self.target}")


def render_substitution(s: Substitution) -> str:
    body = ", ".join(f"{i} -> {render_term(img)}" for i, img in enumerate(s.images))
    return f"{{{body}}} : {s.source}->{s.target}"


@lru_cache(maxsize=None)
def unit_substitution(n: int) -> Substitution:
    return Substitution(n, n, tuple(Var(n, i) for i in range(n)))


@lru_cache(maxsize=8192)
def lift_substitution(s: Substitution, k: int) -> Substitution:
    """Extend a substitution under a binder of k fresh variables: bound
    indices map to themselves, images are weakened past them."""
    if k == 0:
        return s
    w = weakening(s.target, k)
    fresh = tuple(Var(s.target + k, j) for j in range(k))
    return Substitution(s.source + k, s.target + k,
                        fresh + tuple(rename(img, w) for img in s.images))


def substitute(t: Term, s: Substitution) -> Term:
    """Capture-avoiding simultaneous substitution."""
    if t.scope != s.source:
        raise ScopeError(
            f"term in scope {t.scope} substituted from scope {s.source}")
    if isinstance(t, Var):
        return s.images[t.index]
    return Ctor(s.target, t.name,
                tuple(substitute(a, lift_substitution(s, a.scope - t.scope))
                      for a in t.args))


def compose_substitutions(tau: Substitution, sigma: Substitution,
                          subst=substitute) -> Substitution:
    """The substitution doing sigma first, then tau."""
    if sigma.target != tau.source:
        raise ScopeError(
            f"cannot compose: first substitution targets scope {sigma.target}, "
            f"second starts from scope {tau.source}")
    return Substitution(sigma.source, tau.target,
                        tuple(subst(img, tau) for img in sigma.images))


def check_monad_laws(sig: BindingSignature, depth: int, max_scope: int,
                     image_depth: int | None = None, subst=None) -> LawReport:
    """Exhaustive unit and associativity laws for substitution.

    Terms range over depth < depth at scopes ≤ max_scope; substitution
    images range over depth < image_depth (default depth − 1, so the
    instance count stays polynomial rather than doubly exponential).
    ``subst`` swaps in an alternative substitute for fault injection.
    """
    if subst is None:
        subst = substitute
    if image_depth is None:
        image_depth = max(depth - 1, 1)
    rep = LawReport()
    scopes = range(max_scope + 1)
    terms_at = {n: enumerate_terms(sig, n, depth) for n in scopes}
    subs_from: dict[int, list[Substitution]] = {n: [] for n in scopes}
    for n in scopes:
        for m in scopes:
            pool = enumerate_terms(sig, m, image_depth)
            for images in itertools.product(pool, repeat=n):
                subs_from[n].append(Substitution(n, m, images))

    for n in scopes:
        u = unit_substitution(n)
        for t in terms_at[n]:
            rep.check(subst(t, u) == t, "monad-right-unit",
                      lambda t=t: f"t = {render_term(t)} changed under the "
                                  f"identity substitution")
    for n in scopes:
        for s in subs_from[n]:
            for i in range(n):
                got = subst(Var(n, i), s)
                rep.check(got == s.images[i], "monad-left-unit",
                          lambda i=i, s=s, got=got:
                          f"var {i} under sigma = {render_substitution(s)} "
                          f"gives {render_term(got)}")
    for n in scopes:
        ts = terms_at[n]
        for s in subs_from[n]:
            mid = [subst(t, s) for t in ts]
            for tau in subs_from[s.target]:
                comp = compose_substitutions(tau, s, subst)
                for t, ti in zip(ts, mid):
                    rep.check(
                        subst(ti, tau) == subst(t, comp), "monad-assoc",
                        lambda t=t, s=s, tau=tau:
                        f"t = {render_term(t)}; sigma = {render_substitution(s)}; "
                        f"tau = {render_substitution(tau)}")
    return rep


# --- the term functor and chain-based substitution ----------------------------

def _by_scope(elems) -> dict[int, list]:
    out: dict[int, list] = {}
    for e in elems:
        out.setdefault(e.scope, []).append(e)
    return out


def scoped_signature_functor(sig: BindingSignature, max_scope: int,
                             depth_budget: int) -> EnumEndofunctor:
    """The signature's term-building endofunctor on scope-tagged element
    sets: level d holds variables at every tracked scope plus
    constructor applications whose arguments come from level d − 1.

    Scopes are tracked up to max_scope plus the headroom binders can add
    within depth_budget, so every term of depth < depth_budget at scope
    ≤ max_scope is reachable.
    """
    cap = max_scope + max(depth_budget - 1, 0) * sig.max_binding()

    def apply(X: EnumSetObj) -> EnumSetObj:
        def level(d: int) -> list:
            if d == 0:
                return []
            out: list[Term] = [Var(n, i) for n in range(cap + 1) for i in range(n)]
            below = _by_scope(X.level(d - 1))
            for c in sig.constructors:
                for n in range(cap + 1):
                    pools = [below.get(n + k, []) for k in c.arity]
                    for args in itertools.product(*pools):
                        out.append(Ctor(n, c.name, args))
            return out
        return EnumSetObj(level, name=f"F({X.name})")

    def apply_map(h):
        def go(t: Term) -> Term:
            if isinstance(t, Var):
                return t
            return Ctor(t.scope, t.name, tuple(h(a) for a in t.args))
        return go

    return EnumEndofunctor(f"terms({sig.name})", apply, apply_map,
                           lambda d: max(d - 1, 0))


def binder_nesting(t: Term) -> int:
    """Deepest chain of binder crossings on any path into the term: the
    number of times a substitution gets lifted while traversing it."""
    if isinstance(t, Var):
        return 0
    best = 0
    for a in t.args:
        crossed = 1 if a.scope > t.scope else 0
        best = max(best, crossed + binder_nesting(a))
    return best


def substitution_pool(sig: BindingSignature, max_scope: int, image_depth: int,
                      rounds: int) -> dict[Substitution, int]:
    """Every substitution between scopes ≤ max_scope with images of
    depth < image_depth, closed under binder lifts for the given number
    of rounds; values record each entry's lift generation."""
    pool: dict[Substitution, int] = {}
    for n in range(max_scope + 1):
        for m in range(max_scope + 1):
            for images in itertools.product(enumerate_terms(sig, m, image_depth),
                                            repeat=n):
                pool[Substitution(n, m, images)] = 0
    arities = sorted({k for c in sig.constructors for k in c.arity if k > 0})
    frontier = sorted(pool, key=render_substitution)
    for r in range(1, rounds + 1):
        grown = []
        for s in frontier:
            for k in arities:
                lifted = lift_substitution(s, k)
                if lifted not in pool:
                    pool[lifted] = r
                    grown.append(lifted)
        if not grown:
            break
        frontier = grown
    return pool


def subst_via_mendler(sig: BindingSignature, depth: int, max_scope: int,
                      image_depth: int = 1,
                      max_stage: int = DEFAULT_MAX_STAGE) -> dict:
    """Substitution recovered by generalized Mendler iteration, without
    structural recursion on terms.

    The iteration runs over pairs (term, substitution) drawn from a
    finite lift-closed pool; the step sends a variable to its image and
    a constructor application to itself rebuilt with the recursive
    results under lifted substitutions.  Returns the full graph of the
    resulting map as a dict keyed by (term, substitution).
    """
    mb = sig.max_binding()
    rounds = max(depth - 1, 0)
    result_level = depth + max(image_depth - 1, 0)
    F = scoped_signature_functor(sig, max_scope, result_level)
    alg = adamek_initial_algebra(F, max_stage)
    pool = substitution_pool(sig, max_scope, image_depth, rounds)
    by_source: dict[int, list[tuple[Substitution, int]]] = {}
    for s, gen in pool.items():
        by_source.setdefault(s.source, []).append((s, gen))

    # results can be deeper and wider in scope than the inputs, so the
    # target is a plain enumeration with the extra headroom
    cap_big = max_scope + rounds * mb + max(result_level - 1, 0) * mb

    def target_level(d: int) -> list:
        return [t for n in range(cap_big + 1) for t in enumerate_terms(sig, n, d)]

    X = EnumSetObj(target_level, name="terms")

    # a pair is admitted only if the lifts its binder spine will demand
    # stay inside the pool's closure; this set of pairs is closed under
    # the recursion's child steps
    def l_apply(A: EnumSetObj) -> EnumSetObj:
        def level(d: int) -> list:
            return [(t, s) for t in A.level(min(d, depth))
                    for (s, gen) in by_source.get(t.scope, ())
                    if gen + binder_nesting(t) <= rounds]
        return EnumSetObj(level, name=f"Subst({A.name})")

    L = EnumEndofunctor("Subst", l_apply,
                        lambda h: (lambda p: (h(p[0]), p[1])),
                        lambda d: min(d, depth))

    def psi(A: EnumSetObj, h: dict):
        def go(pair):
            w, s = pair
            if isinstance(w, Var):
                return s.images[w.index]
            return Ctor(s.target, w.name,
                        tuple(h[(a, lift_substitution(s, a.scope - w.scope))]
                              for a in w.args))
        return go

    return gen_mendler_iteration(F, alg, L, X, psi, result_level, max_stage)


def check_subst_via_mendler(sig: BindingSignature, depth: int, max_scope: int,
                            image_depth: int = 1) -> LawReport:
    """The Mendler-built substitution agrees with the direct one on its
    whole domain."""
    h = subst_via_mendler(sig, depth, max_scope, image_depth)
    rep = LawReport()
    for (t, s), got in h.items():
        want = substitute(t, s)
        rep.check(got == want, "mendler-subst-agreement",
                  lambda t=t, s=s, got=got, want=want:
                  f"t = {render_term(t)}; sigma = {render_substitution(s)}; "
                  f"iteration gives {render_term(got)}, "
                  f"substitute gives {render_term(want)}")
    return rep


# --- a tiny arithmetic instance used by the iteration demos --------------------

def nat_signature() -> BindingSignature:
    return BindingSignature("nat", (Constructor("zero", ()), Constructor("succ", (0,))))


def nat_term(k: int) -> Term:
    t: Term = Ctor(0, "zero", ())
    for _ in range(k):
        t = Ctor(0, "succ", (t,))
    return t


def evenness_instance(depth: int):
    """Closed unary numerals with the step deciding evenness: zero maps
    to True and succ flips the recursive answer.  Returns
    (F, algebra, L, X, psi) ready for the Mendler machinery."""
    sig = nat_signature()
    F = scoped_signature_functor(sig, 0, depth)
    alg = adamek_initial_algebra(F)
    X = const_enum_set([False, True], "bool")

    def psi(A: EnumSetObj, h: dict):
        def go(e: Term):
            if e.name == "zero":
                return True
            return not h[e.args[0]]
        return go

    return F, alg, identity_endofunctor(), X, psi


def run_evenness_demo(depth: int = 6, uniqueness_level: int = 4,
                      bound: int = 1_000_000) -> LawReport:
    """Evenness end to end: fixed-point equation at the given level,
    spot values at 3 and 4, and brute-force uniqueness at a level small
    enough to enumerate every candidate map."""
    F, alg, L, X, psi = evenness_instance(depth)
    h = gen_mendler_iteration(F, alg, L, X, psi, depth)
    rep = check_mendler_fixed_point(F, alg, L, X, psi, h, depth)
    if depth >= 5:
        rep.check(h[nat_term(3)] is False, "evenness-value",
                  "h(3) should be False")
        rep.check(h[nat_term(4)] is True, "evenness-value",
                  "h(4) should be True")
    Fu, algu, Lu, Xu, psiu = evenness_instance(uniqueness_level)
    n = count_mendler_solutions(Fu, algu, Lu, Xu, psiu, uniqueness_level, bound)
    rep.check(n == 1, "mendler-uniqueness",
              f"{n} maps satisfy the equation at level {uniqueness_level}")
    return rep
