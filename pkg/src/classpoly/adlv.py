"""Nonemptiness and dimension of affine Deligne-Lusztig varieties X_w(b).

The parameter b is a sigma-conjugacy class, carried here through its
combinatorial avatar: the straight conjugacy class of the extended affine
Weyl group with the same invariant (kappa, nu).  The evaluator of record is
the dimension=degree route:

    dim X_w(b) = max over classes O with f(O) = f(b) of
                 (l(w) + l(O) + deg f_{w,O}) / 2  -  <nu_b, 2 rho>,

empty exactly when no such O carries a nonzero class polynomial.  Every
closed-form route implemented below (minimal length elements, P-alcove
criterion, shrunken-chamber criterion, longest coset element, split-b and
basic-vs-nonbasic scans) is computed independently and reported against that
oracle; agreement flags are carried in the reports rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .affine_weyl import (
    AffElt,
    alcove_point,
    chamber_of,
    dominant_decomposition,
    encode_element,
    eta,
    finite_element,
    is_shrunken,
    kottwitz,
    length,
    translation_element,
)
from .conjugacy import (
    ClassInvariant,
    ConjClass,
    class_by_id,
    class_invariant,
    coset_elements_by_length,
    elements_of_length,
    invariant_leq,
    is_minimal,
    is_straight,
    minimize,
    resolve_class,
    straight_class_leq,
)
from .errors import InputError, PreconditionError
from .hecke_cocenter import ReductionEngine, get_engine
from .intlinalg import dot, fraction_rank, identity_matrix, vec_scale, vec_sub
from .laurent import NEG_INFINITY, LaurentPoly
from .root_datum import RootDatum, WeylElt


# -- sigma-conjugacy classes ---------------------------------------------------


@dataclass(frozen=True)
class SigmaClass:
    """A sigma-conjugacy class label: invariant, straight partner, basic flag, defect."""

    invariant: ClassInvariant
    straight_class: ConjClass
    basic: bool
    defect: int

    @property
    def datum(self) -> RootDatum:
        return self.straight_class.rep.datum

    def describe(self) -> str:
        inv = self.invariant
        nu = ",".join(str(x) for x in inv.newton)
        kap = ",".join(str(c) for c in inv.kappa.coords)
        return f"kappa=[{kap}] nu=[{nu}]"

    def __repr__(self):
        return f"SigmaClass({self.describe()})"


def _standard_levi_simples(datum: RootDatum, nu) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(datum.simple_roots) if dot(nu, a) == 0)


def levi_subdatum(datum: RootDatum, J) -> RootDatum:
    """The standard Levi of the simple subset J as a root datum of its own.

    Same rank and lattice; the root system is restricted to the roots
    supported on J.  Weyl matrices of the parent act unchanged, so elements
    of the Levi's extended affine Weyl group are re-tagged parent elements.
    """
    J = tuple(sorted(J))
    cache = getattr(datum, "_levi_data", None)
    if cache is None:
        cache = datum._levi_data = {}
    got = cache.get(J)
    if got is None:
        if len(J) == datum.num_simples:
            got = datum
        else:
            jset = set(J)
            pairs = [(a, b) for a, b in zip(datum.roots, datum.coroots)
                     if set(datum.root_support(a)) <= jset]
            roots = [p[0] for p in pairs]
            simple_idx = [roots.index(datum.simple_roots[j]) for j in J]
            got = RootDatum(f"{datum.name}|levi{list(J)}", datum.rank, pairs, simple_idx)
        cache[J] = got
    return got


def _slope(w: AffElt):
    """The unnormalized Newton vector: the finite-part-orbit average of the
    translation part.  Fixed by the finite part; W-conjugation moves it."""
    u = w.finite
    total = w.translation
    acc = w.translation
    power = u
    n = 1
    while not power.is_identity():
        acc = u.act(acc)
        total = tuple(t + c for t, c in zip(total, acc))
        power = power * u
        n += 1
    return tuple(Fraction(x, n) for x in total)


def defect_of_class(cls: ConjClass) -> int:
    """Rank minus the fixed-space dimension of the finite part of the
    length-zero representative inside the centralizer Levi of the Newton point.

    Construction: conjugating the straight representative by the Weyl witness
    that makes its slope dominant lands it in the extended affine Weyl group
    of the standard centralizer Levi (the finite part then fixes the slope);
    reducing to minimal length inside that Levi reaches the length-zero
    element.  The Levi length-zero representative need not be of minimal
    length in the ambient group, so the reduction genuinely runs in the Levi.
    """
    datum = cls.rep.datum
    w = cls.rep
    slope = _slope(w)
    dom, v = datum.dominant_rep(slope)
    if dom != cls.invariant.newton:
        raise AssertionError("slope of a minimal representative off its Newton point")
    J = _standard_levi_simples(datum, dom)
    levi = levi_subdatum(datum, J)
    moved = finite_element(datum, v) * w * finite_element(datum, v.inv())
    m, _ = minimize(AffElt(levi, moved.translation, moved.finite))
    if length(m) != 0:
        raise AssertionError("Levi reduction of a straight class missed length zero")
    action = m.finite.action
    ident = identity_matrix(datum.rank)
    diff = tuple(tuple(action[i][j] - ident[i][j] for j in range(datum.rank))
                 for i in range(datum.rank))
    return fraction_rank(diff)


def _is_basic_invariant(datum: RootDatum, inv: ClassInvariant) -> bool:
    return all(dot(inv.newton, a) == 0 for a in datum.positive_roots)


def sigma_class_from_invariant(datum: RootDatum, inv: ClassInvariant) -> SigmaClass:
    """Resolve the unique straight class with the given invariant.

    The search window is pinned by <nu, 2 rho>: straight representatives
    have exactly that length.  Invariants outside the image are rejected.
    """
    pairing = datum.two_rho_pairing(inv.newton)
    if pairing < 0 or Fraction(pairing).denominator != 1:
        raise InputError(f"invariant with <nu,2rho> = {pairing} is not realizable")
    target_len = int(pairing)
    for w in elements_of_length(datum, inv.kappa, target_len):
        if class_invariant(w) == inv and is_straight(w):
            cls = resolve_class(datum, w)
            return SigmaClass(inv, cls, _is_basic_invariant(datum, inv),
                              defect_of_class(cls))
    raise InputError("invariant is not in the image of f for this datum")


def sigma_class_of(w: AffElt) -> SigmaClass:
    return sigma_class_from_invariant(w.datum, class_invariant(w))


def sigma_classes_window(datum: RootDatum, max_pairing: int, kappa_window=None):
    """All sigma-classes with <nu, 2 rho> <= max_pairing (finite kappa window)."""
    from .conjugacy import straight_classes

    out = []
    for cls in straight_classes(datum, max_pairing, kappa_window):
        out.append(SigmaClass(cls.invariant, cls,
                              _is_basic_invariant(datum, cls.invariant),
                              defect_of_class(cls)))
    return out


def bg_leq(b: SigmaClass, b2: SigmaClass) -> bool:
    """Partial order on sigma-classes, decided on invariants (dominance order)."""
    return invariant_leq(b.datum, b.invariant, b2.invariant)


def bg_leq_via_bruhat(b: SigmaClass, b2: SigmaClass) -> bool:
    """The same order through Bruhat comparison of minimal elements (cross-check)."""
    return straight_class_leq(b.straight_class, b2.straight_class)


# -- dimension = degree ----------------------------------------------------------


@dataclass(frozen=True)
class ReportTerm:
    class_id: str
    len_O: int
    invariant: ClassInvariant
    poly: LaurentPoly
    value: int


@dataclass
class ADLVReport:
    """Verdict for one pair (w, b), with the contributing classes recorded."""

    w_key: str
    b: SigmaClass
    nonempty: bool
    dim: object  # int or NEG_INFINITY
    terms: tuple[ReportTerm, ...]
    methods: dict
    agreement: bool | None

    def to_json_dict(self) -> dict:
        return {
            "w": self.w_key,
            "b": self.b.invariant.as_json(),
            "nonempty": self.nonempty,
            "dim": "-inf" if self.dim == NEG_INFINITY else int(self.dim),
            "terms": [
                {
                    "class_id": t.class_id,
                    "len_O": t.len_O,
                    "deg_f": "-inf" if t.poly.degree() == NEG_INFINITY else int(t.poly.degree()),
                    "f": [list(p) for p in t.poly.to_pairs()],
                }
                for t in self.terms
            ],
            "methods": self.methods,
            "agreement": self.agreement,
        }


def _dim_value(lw: int, cls: ConjClass, poly: LaurentPoly, b: SigmaClass) -> int:
    datum = cls.rep.datum
    val = Fraction(lw + cls.min_length + poly.degree(), 2) \
        - datum.two_rho_pairing(b.invariant.newton)
    if val.denominator != 1:
        raise AssertionError("non-integral dimension term")
    return int(val)


def dim_adlv(w: AffElt, b: SigmaClass, engine: ReductionEngine | None = None,
             with_methods: bool = True) -> ADLVReport:
    """The dimension=degree evaluation of X_w(b).

    Keeps exactly the decomposition terms whose class has invariant f(b);
    class identifiers already separate non-conjugate classes sharing an
    invariant, so the fiber is grouped by exact conjugacy, never by the
    invariant alone.
    """
    datum = w.datum
    if engine is None:
        engine = get_engine(datum)
    dec = engine.class_polynomials(w)
    lw = length(w)
    terms = []
    for cid, poly in dec.items():
        cls = class_by_id(datum, cid)
        if cls.invariant == b.invariant:
            terms.append(ReportTerm(cid, cls.min_length, cls.invariant, poly,
                                    _dim_value(lw, cls, poly, b)))
    terms.sort(key=lambda t: (t.len_O, t.class_id))
    nonempty = bool(terms)
    dim = max(t.value for t in terms) if terms else NEG_INFINITY
    methods = {"dim_degree": {"nonempty": nonempty,
                              "dim": "-inf" if not terms else dim}}
    report = ADLVReport(encode_element(w), b, nonempty, dim, tuple(terms), methods, None)
    if with_methods:
        _attach_methods(report, w, b, engine)
    return report


def _attach_methods(report: ADLVReport, w: AffElt, b: SigmaClass,
                    engine: ReductionEngine) -> None:
    datum = w.datum
    agreements = []
    if b.basic:
        ok = basic_nonempty_via_alcoves(w, b)
        agree = ok == report.nonempty
        report.methods["p_alcove"] = {"nonempty": ok, "agrees": agree}
        agreements.append(agree)
        if len(datum.components) == 1 and is_shrunken(w):
            ne = shrunken_nonempty(w, b)
            dim = shrunken_dim(w, b)
            agree = ne == report.nonempty and dim == report.dim
            report.methods["shrunken"] = {
                "nonempty": ne,
                "dim": "-inf" if dim == NEG_INFINITY else dim,
                "agrees": agree,
            }
            agreements.append(agree)
    x, mu, y = dominant_decomposition(w)
    if y.is_identity() and x == datum.longest_element() and datum.num_simples > 0:
        ne, dim = _longest_coset_formula(datum, mu, b)
        agree = ne == report.nonempty and (not ne or dim == report.dim)
        report.methods["longest_coset"] = {
            "nonempty": ne,
            "dim": "-inf" if dim == NEG_INFINITY else dim,
            "agrees": agree,
        }
        agreements.append(agree)
    report.agreement = all(agreements) if agreements else None


def dim_min_length(w: AffElt, b: SigmaClass) -> ADLVReport:
    """Closed form on minimal length elements.

    Empty unless w lies in the sigma-class b itself, in which case the
    dimension is l(w) - <nu_w, 2 rho>.
    """
    if not is_minimal(w):
        raise PreconditionError("dim_min_length needs a minimal length element")
    datum = w.datum
    inv = class_invariant(w)
    if inv != b.invariant:
        return ADLVReport(encode_element(w), b, False, NEG_INFINITY, (),
                          {"min_length": {"nonempty": False, "dim": "-inf"}}, None)
    val = length(w) - datum.two_rho_pairing(inv.newton)
    if Fraction(val).denominator != 1:
        raise AssertionError("non-integral minimal-length dimension")
    val = int(val)
    return ADLVReport(encode_element(w), b, True, val, (),
                      {"min_length": {"nonempty": True, "dim": val}}, None)


# -- semistandard parabolic data and P-alcoves -------------------------------------


@dataclass(frozen=True)
class ParabolicDatum:
    """A semistandard parabolic: Levi root subsystem plus a choice of N-roots."""

    levi_roots: tuple[tuple[int, ...], ...]
    n_roots: tuple[tuple[int, ...], ...]
    witness_simples: tuple[int, ...]
    witness: WeylElt

    def is_full(self) -> bool:
        return not self.n_roots


def semistandard_parabolics(datum: RootDatum) -> tuple[ParabolicDatum, ...]:
    """All W-conjugates of standard parabolic data, deduplicated by root sets.

    Contains the full group (empty N) and all Borel-type data (Levi = torus).
    """
    cached = getattr(datum, "_parabolics", None)
    if cached is not None:
        return cached
    k = datum.num_simples
    seen = {}
    subsets = [tuple(j for j in range(k) if mask >> j & 1) for mask in range(1 << k)]
    for J in subsets:
        jset = set(J)
        levi = tuple(sorted(a for a in datum.roots
                            if set(datum.root_support(a)) <= jset))
        n_pos = tuple(sorted(a for a in datum.positive_roots
                             if not set(datum.root_support(a)) <= jset))
        for v in datum.weyl_group():
            lv = tuple(sorted(v.act_root(a) for a in levi))
            nv = tuple(sorted(v.act_root(a) for a in n_pos))
            key = (lv, nv)
            if key not in seen:
                seen[key] = ParabolicDatum(lv, nv, J, v)
    out = tuple(sorted(seen.values(),
                       key=lambda p: (len(p.levi_roots), p.levi_roots, p.n_roots)))
    datum._parabolics = out
    return out


def _levi_weyl_group(datum: RootDatum, levi_roots) -> frozenset[WeylElt]:
    cache = getattr(datum, "_levi_groups", None)
    if cache is None:
        cache = datum._levi_groups = {}
    got = cache.get(levi_roots)
    if got is None:
        gens = [datum.reflection(a) for a in levi_roots]
        seen = {datum.identity_weyl}
        frontier = [datum.identity_weyl]
        while frontier:
            new = []
            for w in frontier:
                for g in gens:
                    x = w * g
                    if x not in seen:
                        seen.add(x)
                        new.append(x)
            frontier = new
        got = cache[levi_roots] = frozenset(seen)
    return got


def is_p_alcove(w: AffElt, p: ParabolicDatum) -> bool:
    """The alcove-side containment criterion.

    Membership of the finite part in the Levi Weyl group, plus, for every
    N-root alpha, floor(<alpha, alcove point of w>) bounded by the base
    alcove value (0 for positive alpha, -1 for negative alpha).
    """
    datum = w.datum
    if w.finite not in _levi_weyl_group(datum, p.levi_roots):
        return False
    pt = alcove_point(w)
    for a in p.n_roots:
        bound = 0 if datum.is_positive_root(a) else -1
        if floor(dot(pt, a)) > bound:
            return False
    return True


def _induced_invariant(datum: RootDatum, w: AffElt, p: ParabolicDatum) -> ClassInvariant:
    """G-invariant induced by the basic Levi class with kappa_M = kappa_M(w).

    The Levi-basic class with the Kottwitz image of the translation part has
    Newton point equal to the average of that translation over the Levi Weyl
    group; its ambient invariant is the dominant representative together with
    the ambient Kottwitz image.
    """
    lam = w.translation
    wm = _levi_weyl_group(datum, p.levi_roots)
    total = (Fraction(0),) * datum.rank
    for u in wm:
        total = tuple(t + c for t, c in zip(total, u.act(lam)))
    avg = tuple(t / len(wm) for t in total)
    dom, _ = datum.dominant_rep(avg)
    return ClassInvariant(datum.pi1_class(lam), dom)


def basic_nonempty_via_alcoves(w: AffElt, b: SigmaClass) -> bool:
    """P-alcove nonemptiness criterion for basic b.

    For every semistandard parabolic whose alcove condition w satisfies, the
    basic Levi class carried by w must induce exactly b; the verdict is the
    conjunction over all applicable parabolics.
    """
    if not b.basic:
        raise PreconditionError("the P-alcove criterion needs a basic class")
    datum = w.datum
    for p in semistandard_parabolics(datum):
        if is_p_alcove(w, p) and _induced_invariant(datum, w, p) != b.invariant:
            return False
    return True


# -- shrunken chamber criterion ------------------------------------------------------


def _support_generates_w(datum: RootDatum, u: WeylElt) -> bool:
    return set(datum.reduced_word(u)) == set(range(datum.num_simples))


def shrunken_nonempty(w: AffElt, b: SigmaClass) -> bool:
    """Shrunken-chamber nonemptiness for basic b: matching kappa and full support of eta(w)."""
    datum = w.datum
    if not b.basic:
        raise PreconditionError("shrunken criterion needs a basic class")
    if not is_shrunken(w):
        raise PreconditionError("shrunken criterion needs a shrunken alcove")
    if len(datum.components) != 1:
        raise PreconditionError("shrunken criterion needs a connected diagram")
    return kottwitz(w) == b.invariant.kappa and _support_generates_w(datum, eta(w))


def shrunken_dim(w: AffElt, b: SigmaClass):
    """(l(w) + l(eta(w)) - defect(b)) / 2 when nonempty, else NEG_INFINITY."""
    if not shrunken_nonempty(w, b):
        return NEG_INFINITY
    datum = w.datum
    val = Fraction(length(w) + datum.finite_length(eta(w)) - b.defect, 2)
    if val.denominator != 1:
        raise AssertionError("non-integral shrunken dimension")
    return int(val)


# -- longest coset element -------------------------------------------------------------


def _longest_coset_formula(datum: RootDatum, mu, b: SigmaClass):
    t_mu = translation_element(datum, mu)
    nonempty = invariant_leq(datum, b.invariant, class_invariant(t_mu))
    if not nonempty:
        return False, NEG_INFINITY
    diff = vec_sub(mu, b.invariant.newton)
    val = dot(diff, datum.rho) + datum.finite_length(datum.longest_element()) \
        - Fraction(b.defect, 2)
    if Fraction(val).denominator != 1:
        raise AssertionError("non-integral longest-coset dimension")
    return True, int(val)


def longest_coset_case(datum: RootDatum, mu, b: SigmaClass,
                       engine: ReductionEngine | None = None) -> ADLVReport:
    """Verdict for the maximal element w0 t^mu of its double coset, mu dominant.

    The closed form (nonempty iff f(b) <= f(t^mu), with the explicit
    dimension) is evaluated alongside the dimension=degree oracle; the
    returned report carries both plus the agreement flag.
    """
    mu = tuple(mu)
    if not datum.is_dominant(mu):
        raise PreconditionError("longest_coset_case needs a dominant coweight")
    w = finite_element(datum, datum.longest_element()) * translation_element(datum, mu)
    report = dim_adlv(w, b, engine=engine, with_methods=False)
    ne, dim = _longest_coset_formula(datum, mu, b)
    agree = ne == report.nonempty and (not ne or dim == report.dim)
    report.methods["longest_coset"] = {
        "nonempty": ne,
        "dim": "-inf" if dim == NEG_INFINITY else dim,
        "agrees": agree,
    }
    report.agreement = agree if report.agreement is None else (report.agreement and agree)
    return report


# -- split-b comparison (report only) ---------------------------------------------------


@dataclass(frozen=True)
class SplitBRow:
    scale: int
    assembly: str
    chamber_on: str
    element_key: str
    chamber_ok: bool
    formula_nonempty: bool
    formula_dim: object
    oracle_nonempty: bool
    oracle_dim: object
    agree: bool


@dataclass
class SplitBReport:
    """Per-variant comparison records; never asserted, only reported."""

    rows: tuple[SplitBRow, ...]
    stable_from: dict

    def variant_rows(self, assembly: str, chamber_on: str, scale: int = 1):
        return [r for r in self.rows
                if r.assembly == assembly and r.chamber_on == chamber_on
                and r.scale == scale]


def split_b_checker(datum: RootDatum, x: WeylElt, y: WeylElt, mu, lam,
                    regularity_threshold: int = 1,
                    engine: ReductionEngine | None = None) -> SplitBReport:
    """Compare the split-b dimension formula against the oracle, variant by variant.

    Four convention variants are evaluated for each scaling k*lam,
    k = 1..regularity_threshold: the element assembled as x t^{mu+k lam} y or
    y t^{mu+k lam} x, with the dominant-chamber condition checked on the
    right factor or on the swapped one.  Rows carry formula and oracle
    verdicts with agreement flags; ``stable_from`` records, per variant, the
    smallest scale from which all evaluated larger scales agree (None when
    the largest evaluated scale still disagrees).
    """
    mu = tuple(mu)
    lam = tuple(lam)
    if len(datum.components) != 1:
        raise PreconditionError("split-b comparison needs a connected diagram")
    if not datum.is_dominant(mu):
        raise PreconditionError("mu must be dominant")
    if not datum.in_coroot_lattice(lam):
        raise PreconditionError("lam must lie in the coroot lattice")
    if any(dot(lam, a) < 1 for a in datum.simple_roots):
        raise PreconditionError("lam must pair at least 1 with every simple root")
    if regularity_threshold < 1:
        raise PreconditionError("regularity_threshold must be positive")
    b = sigma_class_of(translation_element(datum, mu))
    lx, ly = datum.finite_length(x), datum.finite_length(y)
    rows = []
    for k in range(1, regularity_threshold + 1):
        shift = tuple(m + k * c for m, c in zip(mu, lam))
        t_shift = translation_element(datum, shift)
        for assembly, first, second, prod in (
            ("x-t-y", x, y, y * x),
            ("y-t-x", y, x, x * y),
        ):
            w = finite_element(datum, first) * t_shift * finite_element(datum, second)
            oracle = dim_adlv(w, b, engine=engine, with_methods=False)
            f_ne = _support_generates_w(datum, prod)
            f_dim = dot(vec_scale(k, lam), datum.rho) \
                + Fraction(lx + ly + datum.finite_length(prod), 2)
            f_dim = int(f_dim) if Fraction(f_dim).denominator == 1 else f_dim
            for chamber_on, factor in (("t-y" if assembly == "x-t-y" else "t-x",
                                        second),
                                       ("t-x" if assembly == "x-t-y" else "t-y",
                                        first)):
                chamber_elt = t_shift * finite_element(datum, factor)
                chamber_ok = chamber_of(chamber_elt).is_identity()
                agree = (f_ne == oracle.nonempty
                         and (not f_ne or f_dim == oracle.dim))
                rows.append(SplitBRow(k, assembly, chamber_on, encode_element(w),
                                      chamber_ok, f_ne,
                                      f_dim if f_ne else NEG_INFINITY,
                                      oracle.nonempty, oracle.dim, agree))
    stable: dict = {}
    for assembly in ("x-t-y", "y-t-x"):
        for chamber_on in ("t-y", "t-x"):
            seq = [r for r in rows
                   if r.assembly == assembly and r.chamber_on == chamber_on]
            seq.sort(key=lambda r: r.scale)
            k0 = None
            for r in reversed(seq):
                if r.agree:
                    k0 = r.scale
                else:
                    break
            stable[(assembly, chamber_on)] = k0
    return SplitBReport(tuple(rows), stable)


# -- basic-vs-nonbasic comparison scan (report only) --------------------------------------


@dataclass(frozen=True)
class ComparisonRow:
    w_key: str
    length: int
    nonempty_b: bool
    dim_b: object
    nonempty_basic: bool
    dim_basic: object
    predicted_dim_b: object
    agree: bool


@dataclass
class BasicComparisonReport:
    """Comparison of X_w(b) against X_w(b_basic) with the conjectured offset.

    Convention: rows where both sides are empty count as agreements.
    ``stable_length`` is the least length above which no disagreement was
    observed in the scanned window.
    """

    b: SigmaClass
    b_basic: SigmaClass
    max_len: int
    rows: tuple[ComparisonRow, ...]
    stable_length: int


def basic_comparison_scan(datum: RootDatum, b: SigmaClass, b_basic: SigmaClass, max_len: int,
              engine: ReductionEngine | None = None) -> BasicComparisonReport:
    if not b_basic.basic:
        raise PreconditionError("comparison class must be basic")
    if b.invariant.kappa != b_basic.invariant.kappa:
        raise InputError("kappa mismatch between the two classes")
    offset = -dot(b.invariant.newton, datum.rho) \
        + Fraction(b_basic.defect - b.defect, 2)
    rows = []
    for level in coset_elements_by_length(datum, b.invariant.kappa, max_len):
        for w in level:
            rb = dim_adlv(w, b, engine=engine, with_methods=False)
            rb0 = dim_adlv(w, b_basic, engine=engine, with_methods=False)
            if rb0.nonempty:
                predicted = rb0.dim + offset
                predicted = int(predicted) if Fraction(predicted).denominator == 1 \
                    else predicted
            else:
                predicted = NEG_INFINITY
            agree = (rb.nonempty == rb0.nonempty
                     and (not rb.nonempty or rb.dim == predicted))
            rows.append(ComparisonRow(encode_element(w), length(w), rb.nonempty, rb.dim,
                                rb0.nonempty, rb0.dim, predicted, agree))
    stable = 0
    for r in rows:
        if not r.agree:
            stable = max(stable, r.length + 1)
    return BasicComparisonReport(b, b_basic, max_len, tuple(rows), stable)
