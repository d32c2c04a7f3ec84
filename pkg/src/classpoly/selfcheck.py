"""The acceptance suite: ten machine-checked criteria at pinned windows.

Each criterion is a closed computation with an exact expected outcome; the
suite prints one pass/fail line per criterion and is exposed both to pytest
(tests/test_acceptance.py) and to the CLI (``classpoly selfcheck``).  The
``quick`` flag shrinks the windows for smoke runs; the acceptance gate is the
full-window run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .adlv import (
    basic_nonempty_via_alcoves,
    dim_adlv,
    dim_min_length,
    basic_comparison_scan,
    is_p_alcove,
    longest_coset_case,
    semistandard_parabolics,
    _induced_invariant,
    sigma_class_from_invariant,
    sigma_class_of,
    sigma_classes_window,
    shrunken_dim,
    shrunken_nonempty,
    split_b_checker,
)
from .affine_weyl import (
    identity_element,
    is_shrunken,
    length,
    parse_element,
    translation_element,
)
from .conjugacy import (
    ClassInvariant,
    coset_elements_by_length,
    invariant_leq,
    is_minimal,
    resolve_class,
    straight_class_leq,
    straight_classes,
)
from .hecke_cocenter import get_engine
from .root_datum import build_root_datum

CORE_PRESETS = ("SL2", "PGL2", "SL3", "C2")


@dataclass
class CheckResult:
    cid: str
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.cid} {self.title}: {status}"


class AcceptanceSuite:
    """Shared-state runner for the ten criteria."""

    def __init__(self, quick: bool = False, max_len: int | None = None):
        self.quick = quick
        self.max_len = max_len if max_len is not None else (6 if quick else 10)
        self.mu_bound = 4 if quick else 8
        self.gl_max = 3 if quick else 5
        self._data = {}

    def datum(self, preset):
        got = self._data.get(preset)
        if got is None:
            got = self._data[preset] = build_root_datum(preset)
        return got

    def window_elements(self, preset, max_len=None):
        datum = self.datum(preset)
        max_len = self.max_len if max_len is None else max_len
        out = []
        for kappa in datum.pi1_all():
            for level in coset_elements_by_length(datum, kappa, max_len):
                out.extend(level)
        return out

    # -- criteria -------------------------------------------------------

    def c1(self) -> CheckResult:
        res = CheckResult("C1", "pivot independence of class polynomials", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engines = [get_engine(datum, p) for p in
                       ("canonical", "reversed", "seeded:7")]
            bad = 0
            for w in self.window_elements(preset):
                decs = [e.class_polynomials(w).terms for e in engines]
                if not (decs[0] == decs[1] == decs[2]):
                    bad += 1
            res.details.append(f"{preset}: {bad} mismatching decompositions")
            res.passed &= bad == 0
        return res

    def c2(self) -> CheckResult:
        res = CheckResult("C2", "shrunken-route calibration against the oracle", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engine = get_engine(datum)
            basics = [b for b in sigma_classes_window(datum, self.max_len) if b.basic]
            bad = 0
            checked = 0
            for w in self.window_elements(preset):
                if not is_shrunken(w):
                    continue
                for b in basics:
                    oracle = dim_adlv(w, b, engine=engine, with_methods=False)
                    ne = shrunken_nonempty(w, b)
                    dim = shrunken_dim(w, b)
                    checked += 1
                    if ne != oracle.nonempty or dim != oracle.dim:
                        bad += 1
            res.details.append(f"{preset}: {checked} shrunken pairs, {bad} mismatches")
            res.passed &= bad == 0
        pgl2 = self.datum("PGL2")
        engine = get_engine(pgl2)
        b1 = sigma_class_of(identity_element(pgl2))
        btau = sigma_class_from_invariant(
            pgl2, ClassInvariant(pgl2.pi1_element((1,)), (Fraction(0),)))
        pin1 = dim_adlv(parse_element(pgl2, "s0 s1 s0"), b1, engine=engine).dim
        pin2 = dim_adlv(parse_element(pgl2, "t[3] s1"), btau, engine=engine).dim
        res.details.append(f"pinned: dim X_(s0 s1 s0)([1]) = {pin1} (want 2), "
                           f"dim X_(t^3w s1)([tau]) = {pin2} (want 1)")
        res.passed &= pin1 == 2 and pin2 == 1
        return res

    def c3(self) -> CheckResult:
        res = CheckResult("C3", "minimal-length route equals the oracle", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engine = get_engine(datum)
            bs = sigma_classes_window(datum, self.max_len)
            bad = 0
            for w in self.window_elements(preset):
                if not is_minimal(w):
                    continue
                for b in bs:
                    r1 = dim_min_length(w, b)
                    r2 = dim_adlv(w, b, engine=engine, with_methods=False)
                    if (r1.nonempty, r1.dim) != (r2.nonempty, r2.dim):
                        bad += 1
            res.details.append(f"{preset}: {bad} mismatches")
            res.passed &= bad == 0
        sl2 = self.datum("SL2")
        b1 = sigma_class_of(identity_element(sl2))
        empty = dim_adlv(translation_element(sl2, (1,)), b1,
                         engine=get_engine(sl2), with_methods=False)
        dim_s0 = dim_min_length(parse_element(sl2, "s0"), b1).dim
        res.details.append(f"pinned: X_(t^a)([1]) empty = {not empty.nonempty}, "
                           f"dim X_(s0)([1]) = {dim_s0} (want 1)")
        res.passed &= (not empty.nonempty) and dim_s0 == 1
        return res

    def c4(self) -> CheckResult:
        res = CheckResult("C4", "longest-coset formula equals the oracle", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engine = get_engine(datum)
            bs = sigma_classes_window(datum, self.mu_bound)
            mus = [c for c in itertools.product(range(-self.mu_bound, self.mu_bound + 1),
                                                repeat=datum.rank)
                   if datum.is_dominant(c) and datum.two_rho_pairing(c) <= self.mu_bound]
            bad = 0
            for mu in mus:
                for b in bs:
                    rep = longest_coset_case(datum, mu, b, engine=engine)
                    if not rep.methods["longest_coset"]["agrees"]:
                        bad += 1
            res.details.append(f"{preset}: {len(mus)} coweights x {len(bs)} classes, "
                               f"{bad} mismatches")
            res.passed &= bad == 0
        sl2 = self.datum("SL2")
        b1 = sigma_class_of(identity_element(sl2))
        bta = sigma_class_of(translation_element(sl2, (1,)))
        w = parse_element(sl2, "s1 s0 s1")
        d1 = dim_adlv(w, b1, engine=get_engine(sl2)).dim
        d2 = dim_adlv(w, bta, engine=get_engine(sl2)).dim
        res.details.append(f"pinned: dim X_(s1 s0 s1)([1]) = {d1} (want 2), "
                           f"dim X_(s1 s0 s1)([t^a]) = {d2} (want 1)")
        res.passed &= d1 == 2 and d2 == 1
        return res

    def c5(self) -> CheckResult:
        res = CheckResult("C5", "straight classes biject with invariants", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            sc = straight_classes(datum, self.max_len)
            invs = [c.invariant for c in sc]
            inj = len(set(invs)) == len(invs)
            hit = all(sigma_class_from_invariant(datum, c.invariant)
                      .straight_class.class_id == c.class_id for c in sc)
            res.details.append(f"{preset}: {len(sc)} straight classes, injective={inj}, "
                               f"resolved={hit}")
            res.passed &= inj and hit
        sl2 = self.datum("SL2")
        c_s0 = resolve_class(sl2, parse_element(sl2, "s0"))
        c_s1 = resolve_class(sl2, parse_element(sl2, "s1"))
        collide = (c_s0.class_id != c_s1.class_id
                   and c_s0.invariant == c_s1.invariant
                   and not c_s0.straight and not c_s1.straight)
        res.details.append(f"SL2 non-straight collision detected: {collide}")
        res.passed &= collide
        return res

    def c6(self) -> CheckResult:
        res = CheckResult("C6", "positivity, degree bounds, v=1 weight", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engine = get_engine(datum)
            bad = 0
            for w in self.window_elements(preset):
                dec = engine.class_polynomials(w)
                total = Fraction(0)
                for cid, poly in dec.items():
                    cls = engine.class_info(cid)
                    try:
                        zc = poly.rebase_in_z()
                    except ValueError:
                        bad += 1
                        continue
                    if any(c < 0 for c in zc.values()):
                        bad += 1
                    if poly.degree() > length(w) - cls.min_length:
                        bad += 1
                    total += poly.evaluate(1)
                if total != 1:
                    bad += 1
            res.details.append(f"{preset}: {bad} violations")
            res.passed &= bad == 0
        return res

    def c7(self) -> CheckResult:
        res = CheckResult("C7", "Bruhat order and invariant order agree on straight classes", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            sc = straight_classes(datum, self.mu_bound)
            bad = sum(1 for a in sc for b in sc
                      if straight_class_leq(a, b) != invariant_leq(datum, a.invariant,
                                                                   b.invariant))
            res.details.append(f"{preset}: {len(sc)}^2 pairs, {bad} mismatches")
            res.passed &= bad == 0
        return res

    def c8(self) -> CheckResult:
        res = CheckResult("C8", "defect matches the GL_n gcd oracle", True)
        for n in range(1, self.gl_max + 1):
            datum = self.datum(f"GL{n}")
            bad = 0
            for k in range(-n, n + 1):
                inv = ClassInvariant(datum.pi1_element((k,)),
                                     tuple(Fraction(k, n) for _ in range(n)))
                b = sigma_class_from_invariant(datum, inv)
                if b.defect != n - gcd(n, abs(k)):
                    bad += 1
            res.details.append(f"GL{n}: {bad} mismatches")
            res.passed &= bad == 0
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            mu = tuple(sum(datum.simple_coroots[i][j] for i in range(datum.num_simples))
                       for j in range(datum.rank))
            b = sigma_class_of(translation_element(datum, mu))
            res.passed &= b.defect == 0
            res.details.append(f"{preset}: translation class defect {b.defect} (want 0)")
        return res

    def c9(self) -> CheckResult:
        res = CheckResult("C9", "P-alcove criterion: only-if direction and biconditional", True)
        for preset in CORE_PRESETS:
            datum = self.datum(preset)
            engine = get_engine(datum)
            parabolics = semistandard_parabolics(datum)
            basics = [b for b in sigma_classes_window(datum, self.max_len) if b.basic]
            bad_onlyif = 0
            bad_iff = 0
            for w in self.window_elements(preset):
                applicable = [p for p in parabolics if is_p_alcove(w, p)]
                for b in basics:
                    oracle = dim_adlv(w, b, engine=engine, with_methods=False)
                    if oracle.nonempty:
                        if any(_induced_invariant(datum, w, p) != b.invariant
                               for p in applicable):
                            bad_onlyif += 1
                    if basic_nonempty_via_alcoves(w, b) != oracle.nonempty:
                        bad_iff += 1
            res.details.append(f"{preset}: only-if violations {bad_onlyif}, "
                               f"biconditional mismatches {bad_iff}")
            res.passed &= bad_onlyif == 0 and bad_iff == 0
        return res

    def c10(self) -> CheckResult:
        res = CheckResult("C10", "report-only scanners: pinned rows and table shape", True)
        sl2 = self.datum("SL2")
        s1 = sl2.simple_reflection(0)
        rep_agree = split_b_checker(sl2, s1, sl2.identity_weyl, (0,), (1,))
        row_a = rep_agree.variant_rows("x-t-y", "t-y")[0]
        rep_dis = split_b_checker(sl2, sl2.identity_weyl, s1, (0,), (1,))
        row_d = rep_dis.variant_rows("x-t-y", "t-y")[0]
        res.details.append(f"split-b (s1,1,0,a): agree={row_a.agree} (want True); "
                           f"(1,s1,0,a): agree={row_d.agree} (want False)")
        res.passed &= row_a.agree and not row_d.agree
        res.passed &= len(rep_agree.rows) == 4 and len(rep_dis.rows) == 4

        b1 = sigma_class_of(identity_element(sl2))
        bta = sigma_class_of(translation_element(sl2, (1,)))
        scan = basic_comparison_scan(sl2, bta, b1, self.max_len, engine=get_engine(sl2))
        shape_ok = (len(scan.rows) > 0
                    and all(r.length <= self.max_len for r in scan.rows)
                    and all(isinstance(r.agree, bool) for r in scan.rows))
        res.details.append(f"comparison scan rows: {len(scan.rows)}, "
                           f"stable from length {scan.stable_length}")
        res.passed &= shape_ok
        ident = basic_comparison_scan(sl2, b1, b1, 4, engine=get_engine(sl2))
        all_agree = all(r.agree for r in ident.rows)
        res.details.append(f"identity comparison all-agree: {all_agree}")
        res.passed &= all_agree
        return res

    # -- runner ------------------------------------------------------------

    CRITERIA = ("C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10")

    def run(self, only=None) -> list[CheckResult]:
        selected = [c.upper() for c in only] if only else list(self.CRITERIA)
        results = []
        for cid in self.CRITERIA:
            if cid in selected:
                results.append(getattr(self, cid.lower())())
        return results


def run_acceptance(only=None, quick=False, max_len=None, verbose=True) -> list[CheckResult]:
    suite = AcceptanceSuite(quick=quick, max_len=max_len)
    results = suite.run(only=only)
    if verbose:
        for r in results:
            print(r.line())
            for d in r.details:
                print(f"    {d}")
    return results
