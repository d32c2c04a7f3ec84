"""Conjugacy classes of the extended affine Weyl group.

This module owns the invariants that classify classes and the reduction to
minimal length elements:

* the Newton point nu_w (dominant rational coweight with w^n = t^{n nu}-orbit),
* the pair invariant f(w) = (kappa(w), nu_w), constant on conjugacy classes,
* straightness: l(w) equals <nu_w, 2 rho> exactly,
* breadth-first reduction through length-preserving simple-reflection
  conjugation orbits, descending whenever a strict length drop appears; the
  terminal elements are of minimal length in their class,
* an exact conjugacy decision procedure (finite Weyl part matching plus an
  integer-lattice membership test for the translation parts), used to group
  reduction terminals into classes without ever trusting invariant equality,
* windowed class enumeration and the two combinatorial partial orders on
  straight classes (Bruhat on minimal elements, and the dominance order on
  invariants over the cone spanned by the simple coroots).

Class identifiers are canonical minimal representatives: the least
minimal-length element of the class in the canonical element encoding order,
prefixed by the datum hash.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .affine_weyl import (
    AffElt,
    affine_simple_reflections,
    bruhat_leq,
    encode_element,
    kottwitz,
    length,
    omega_element,
)
from .errors import InputError, PreconditionError, ResourceLimitError
from .intlinalg import IntRowSpan, solve_fraction, vec_add, vec_sub
from .root_datum import PiOneElt, RootDatum

MAX_ORBIT = 200_000
MAX_COSET_ELEMENTS = 500_000

RatVec = tuple[Fraction, ...]


def _cache(datum: RootDatum, name: str) -> dict:
    got = getattr(datum, name, None)
    if got is None:
        got = {}
        setattr(datum, name, got)
    return got


# -- invariants ---------------------------------------------------------------


def newton(w: AffElt) -> RatVec:
    """The dominant Newton point of w.

    Uses n = order of the finite part: w^n = t^{sum_{i<n} u^i(lam)}, and any
    valid n yields the same point by proportionality (taking the full group
    order instead is only exponentially more work; the two are compared in
    tests).
    """
    datum = w.datum
    u = w.finite
    total = w.translation
    acc = w.translation
    power = u
    n = 1
    while not power.is_identity():
        acc = u.act(acc)
        total = vec_add(total, acc)
        power = power * u
        n += 1
    dom, _ = datum.dominant_rep(tuple(Fraction(x, n) for x in total))
    return dom


@dataclass(frozen=True)
class ClassInvariant:
    """The pair (Kottwitz image, Newton point); exact equality."""

    kappa: PiOneElt
    newton: RatVec

    def as_json(self) -> dict:
        return {"kappa": list(self.kappa.coords),
                "nu": [str(x) for x in self.newton]}


def class_invariant(w: AffElt) -> ClassInvariant:
    cache = _cache(w.datum, "_invariant_cache")
    got = cache.get(w)
    if got is None:
        got = ClassInvariant(kottwitz(w), newton(w))
        cache[w] = got
    return got


def is_straight(w: AffElt) -> bool:
    """True when l(w) equals <nu_w, 2 rho> exactly."""
    return length(w) == w.datum.two_rho_pairing(newton(w))


# -- length-preserving conjugation orbits --------------------------------------


def conjugation_orbit(w: AffElt) -> tuple[AffElt, ...]:
    """The orbit of w under length-preserving conjugation by simple reflections.

    Returned sorted by the canonical order; the first entry is the orbit
    fingerprint used as a memo key by the reduction engine.
    """
    datum = w.datum
    by_elt = _cache(datum, "_orbit_key_of")
    members = _cache(datum, "_orbit_members")
    key = by_elt.get(w)
    if key is not None:
        return members[key]
    simples = affine_simple_reflections(datum)
    lw = length(w)
    seen = {w}
    frontier = [w]
    while frontier:
        new = []
        for x in frontier:
            for s in simples:
                y = s * x * s
                if y not in seen and length(y) == lw:
                    seen.add(y)
                    new.append(y)
                    if len(seen) > MAX_ORBIT:
                        raise ResourceLimitError("conjugation orbit exceeds the configured bound")
        frontier = new
    orbit = tuple(sorted(seen, key=AffElt.sort_key))
    for x in orbit:
        by_elt[x] = orbit[0]
    members[orbit[0]] = orbit
    return orbit


def find_descent(orbit, simple_order=None, orbit_order=None):
    """First (member, simple) with l(s * member * s) = l(member) - 2, or None.

    The default scan order is the canonical one: orbit members in encoding
    order, simple reflections in index order; that default is cached per
    orbit fingerprint.
    """
    datum = orbit[0].datum
    canonical = simple_order is None and orbit_order is None
    cache = _cache(datum, "_descent_cache")
    if canonical and orbit[0] in cache:
        return cache[orbit[0]]
    simples = affine_simple_reflections(datum)
    simple_idx = simple_order if simple_order is not None else range(len(simples))
    scan = orbit_order if orbit_order is not None else orbit
    lw = length(orbit[0])
    found = None
    for x in scan:
        for i in simple_idx:
            s = simples[i]
            if length(s * x * s) < lw:
                found = (x, i)
                break
        if found:
            break
    if canonical:
        cache[orbit[0]] = found
    return found


def is_minimal(w: AffElt) -> bool:
    """True when no strict descent is reachable through the length-preserving orbit."""
    return find_descent(conjugation_orbit(w)) is None


@dataclass(frozen=True)
class ConjStep:
    """One conjugation step: conjugating by the indexed simple gave ``element``."""

    element: AffElt
    simple: int
    delta: int


def _path_within_orbit(w: AffElt, target: AffElt) -> list[ConjStep]:
    if w == target:
        return []
    datum = w.datum
    simples = affine_simple_reflections(datum)
    lw = length(w)
    parents: dict[AffElt, tuple[AffElt, int]] = {w: None}
    frontier = [w]
    while frontier:
        new = []
        for x in frontier:
            for i, s in enumerate(simples):
                y = s * x * s
                if y not in parents and length(y) == lw:
                    parents[y] = (x, i)
                    if y == target:
                        steps = []
                        cur = y
                        while parents[cur] is not None:
                            prev, idx = parents[cur]
                            steps.append(ConjStep(cur, idx, 0))
                            cur = prev
                        steps.reverse()
                        return steps
                    new.append(y)
        frontier = new
    raise AssertionError("target not in the conjugation orbit")


def minimize(w: AffElt) -> tuple[AffElt, list[ConjStep]]:
    """Reduce w to a minimal length element of its conjugacy class.

    Breadth-first exploration of each length level; whenever some orbit
    member admits a strictly length-reducing simple conjugation the walk
    descends there and recurses.  The chain records every conjugation step
    taken (resulting element, simple index, length delta).
    """
    chain: list[ConjStep] = []
    simples = affine_simple_reflections(w.datum)
    while True:
        orbit = conjugation_orbit(w)
        descent = find_descent(orbit)
        if descent is None:
            return w, chain
        member, i = descent
        chain.extend(_path_within_orbit(w, member))
        s = simples[i]
        w = s * member * s
        chain.append(ConjStep(w, i, length(w) - length(member)))


# -- exact conjugacy test -------------------------------------------------------


def _one_minus_u_span(datum: RootDatum, u) -> IntRowSpan:
    cache = _cache(datum, "_one_minus_u_cache")
    got = cache.get(u)
    if got is None:
        n = datum.rank
        rows = []
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            rows.append(vec_sub(e, u.act(e)))
        got = IntRowSpan(rows, width=n)
        cache[u] = got
    return got


def are_conjugate(a: AffElt, b: AffElt) -> bool:
    """Exact decision: is b = x a x^-1 for some x = t^mu y in the extended group?

    For each finite y with y u_a y^-1 = u_b the translation condition is
    lam_b - y(lam_a) in (1 - u_b) X, an integer lattice membership test.
    """
    if a.datum is not b.datum:
        raise InputError("elements of different root data")
    if a == b:
        return True
    datum = a.datum
    if class_invariant(a) != class_invariant(b):
        # f is constant on classes; used only as a sound fast reject
        return False
    ua, ub = a.finite, b.finite
    for y in datum.weyl_group():
        if y * ua * y.inv() != ub:
            continue
        diff = vec_sub(b.translation, y.act(a.translation))
        if diff in _one_minus_u_span(datum, ub):
            return True
    return False


# -- windowed enumeration --------------------------------------------------------


def coset_elements_by_length(datum: RootDatum, kappa: PiOneElt, max_len: int):
    """Levels [0..max_len] of the W_a-coset with the given Kottwitz image.

    The cache stores an immutable tuple of levels and republishes a longer
    tuple when extended; concurrent extensions compute equal values, so a
    lost update only costs recomputation, never a wrong table.
    """
    cache = _cache(datum, "_coset_levels")
    levels = cache.get(kappa)
    if levels is None:
        levels = (tuple([omega_element(datum, kappa)]),)
        cache.setdefault(kappa, levels)
    if len(levels) <= max_len:
        simples = affine_simple_reflections(datum)
        work = [list(lv) for lv in levels]
        total = sum(len(lv) for lv in work)
        while len(work) <= max_len:
            n = len(work)
            seen = set()
            for x in work[n - 1]:
                for s in simples:
                    y = s * x
                    if length(y) == n:
                        seen.add(y)
            total += len(seen)
            if total > MAX_COSET_ELEMENTS:
                raise ResourceLimitError("coset enumeration exceeds the configured bound")
            work.append(sorted(seen, key=AffElt.sort_key))
        levels = tuple(tuple(lv) for lv in work)
        cache[kappa] = levels
    return [list(lv) for lv in levels[:max_len + 1]]


def elements_of_length(datum: RootDatum, kappa: PiOneElt, n: int) -> list[AffElt]:
    return coset_elements_by_length(datum, kappa, n)[n]


# -- classes ----------------------------------------------------------------------


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class, identified by its canonical minimal representative."""

    rep: AffElt
    min_length: int
    invariant: ClassInvariant
    straight: bool
    min_elements: tuple[AffElt, ...]

    @property
    def class_id(self) -> str:
        return f"{self.rep.datum.datum_hash}:{encode_element(self.rep)}"

    def __repr__(self):
        return f"ConjClass({self.class_id!r}, len={self.min_length})"


def resolve_class(datum: RootDatum, w: AffElt) -> ConjClass:
    """The class of w, with the canonical representative and all minimal elements.

    The minimal length is found by reduction; the full set of minimal-length
    elements is the level set of that length in the kappa-coset filtered by
    the exact conjugacy test (minimal elements need not form one conjugation
    orbit for non-straight classes, so the filter is over the whole level).
    """
    by_orbit = _cache(datum, "_class_by_orbit")
    m, _ = minimize(w)
    orbit = conjugation_orbit(m)
    got = by_orbit.get(orbit[0])
    if got is None:
        lm = length(m)
        level = elements_of_length(datum, kottwitz(m), lm)
        mins = tuple(x for x in level if are_conjugate(x, m))
        inv = class_invariant(m)
        straight = length(m) == datum.two_rho_pairing(inv.newton)
        got = ConjClass(mins[0], lm, inv, straight, mins)
        for x in mins:
            by_orbit[conjugation_orbit(x)[0]] = got
        _cache(datum, "_class_by_id")[got.class_id] = got
    return got


def class_by_id(datum: RootDatum, class_id: str) -> ConjClass:
    got = _cache(datum, "_class_by_id").get(class_id)
    if got is None:
        prefix = f"{datum.datum_hash}:"
        if not class_id.startswith(prefix):
            raise InputError(f"class id {class_id!r} does not belong to this datum")
        from .affine_weyl import parse_element

        w = parse_element(datum, class_id[len(prefix):])
        got = resolve_class(datum, w)
        if got.class_id != class_id:
            raise InputError(f"{class_id!r} is not a canonical class identifier")
    return got


def _kappa_scope(datum: RootDatum, kappa_window) -> tuple[PiOneElt, ...]:
    if datum.pi1_is_finite():
        return datum.pi1_all()
    if kappa_window is None:
        raise InputError("X/Q is infinite; pass an explicit kappa window")
    if isinstance(kappa_window, int):
        return datum.pi1_window(kappa_window)
    return tuple(kappa_window)


def enumerate_classes(datum: RootDatum, max_len: int, kappa_window=None) -> list[ConjClass]:
    """All conjugacy classes possessing an element of length <= max_len."""
    if max_len < 0:
        raise InputError("max_len must be nonnegative")
    out: dict[str, ConjClass] = {}
    for kappa in _kappa_scope(datum, kappa_window):
        for level in coset_elements_by_length(datum, kappa, max_len):
            for w in level:
                cls = resolve_class(datum, w)
                out.setdefault(cls.class_id, cls)
    return sorted(out.values(), key=lambda c: (c.min_length, c.rep.sort_key()))


def straight_classes(datum: RootDatum, max_pairing: int, kappa_window=None) -> list[ConjClass]:
    """All straight classes with <nu, 2 rho> <= max_pairing (windowed kappa)."""
    return [c for c in enumerate_classes(datum, max_pairing, kappa_window) if c.straight]


# -- partial orders ---------------------------------------------------------------


def invariant_leq(datum: RootDatum, a: ClassInvariant, b: ClassInvariant) -> bool:
    """Dominance order: equal kappa and nu_b - nu_a in the cone over simple coroots.

    Decided by exact linear algebra: solve for the cone coefficients and check
    nonnegativity (inconsistent systems compare as incomparable).
    """
    if a.kappa != b.kappa:
        return False
    diff = vec_sub(b.newton, a.newton)
    coroots = datum.simple_coroots
    if not coroots:
        return not any(diff)
    cols = tuple(tuple(coroots[j][i] for j in range(len(coroots)))
                 for i in range(datum.rank))
    sol = solve_fraction(cols, diff)
    if sol is None:
        return False
    return all(c >= 0 for c in sol)


def straight_class_leq(a: ConjClass, b: ConjClass) -> bool:
    """Order via Bruhat comparison of minimal length elements."""
    if not (a.straight and b.straight):
        raise PreconditionError("straight_class_leq needs straight classes")
    return any(bruhat_leq(x, y) for x in a.min_elements for y in b.min_elements)
