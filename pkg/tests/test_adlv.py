from fractions import Fraction

import pytest

from classpoly import (
    InputError,
    NEG_INFINITY,
    PreconditionError,
    basic_nonempty_via_alcoves,
    bg_leq,
    bg_leq_via_bruhat,
    dim_adlv,
    dim_min_length,
    get_engine,
    basic_comparison_scan,
    identity_element,
    is_minimal,
    is_p_alcove,
    is_shrunken,
    longest_coset_case,
    omega_element,
    parse_element,
    semistandard_parabolics,
    shrunken_dim,
    shrunken_nonempty,
    sigma_class_from_invariant,
    sigma_class_of,
    sigma_classes_window,
    split_b_checker,
    translation_element,
)
from classpoly.conjugacy import ClassInvariant, coset_elements_by_length


def b_identity(datum):
    return sigma_class_of(identity_element(datum))


# -- sigma classes -------------------------------------------------------------


def test_sigma_class_trivial(sl2):
    b = sigma_class_from_invariant(
        sl2, ClassInvariant(sl2.pi1_zero(), (Fraction(0),)))
    assert b.basic and b.defect == 0
    assert b.straight_class.min_length == 0


def test_sigma_class_tau(pgl2):
    b = sigma_class_from_invariant(
        pgl2, ClassInvariant(pgl2.pi1_element((1,)), (Fraction(0),)))
    assert b.basic and b.defect == 1
    tau = omega_element(pgl2, pgl2.pi1_element((1,)))
    assert b.straight_class.rep == tau


def test_sigma_class_translation(sl2):
    b = sigma_class_of(translation_element(sl2, (1,)))
    assert not b.basic
    assert b.defect == 0
    assert set(b.straight_class.min_elements) == {
        translation_element(sl2, (1,)), translation_element(sl2, (-1,))}


def test_sigma_class_bad_invariant(sl2):
    # nu = 1/3 alpha-check has non-integral pairing with 2 rho
    with pytest.raises(InputError):
        sigma_class_from_invariant(
            sl2, ClassInvariant(sl2.pi1_zero(), (Fraction(1, 3),)))
    # integral pairing but not a Newton point of any class
    with pytest.raises(InputError):
        sigma_class_from_invariant(
            sl2, ClassInvariant(sl2.pi1_zero(), (Fraction(1, 2),)))


def test_bg_leq_two_routes_agree(sl2, pgl2):
    for datum in (sl2, pgl2):
        bs = sigma_classes_window(datum, 6)
        for a in bs:
            for b in bs:
                assert bg_leq(a, b) == bg_leq_via_bruhat(a, b)


# -- defect ---------------------------------------------------------------------


def test_defect_gl_oracle():
    from math import gcd

    from classpoly import build_root_datum

    for n in (2, 3, 4):
        datum = build_root_datum(f"GL{n}")
        for k in range(-n, n + 1):
            inv = ClassInvariant(datum.pi1_element((k,)),
                                 tuple(Fraction(k, n) for _ in range(n)))
            b = sigma_class_from_invariant(datum, inv)
            assert b.defect == n - gcd(n, abs(k))


def test_defect_translation_class(sl3, sp4):
    for datum in (sl3, sp4):
        b = sigma_class_of(translation_element(datum, (1, 1)))
        assert b.defect == 0


def test_defect_levi_rep_above_minimal_length():
    # In G2 the straight class with Newton point (1, 1/2) has no Levi
    # length-zero element among its ambient-minimal representatives; the
    # reduction inside the Levi must still reach it (defect 1).
    from classpoly import build_root_datum
    from classpoly.conjugacy import straight_classes
    from classpoly.adlv import defect_of_class

    g2 = build_root_datum("G2")
    half = [c for c in straight_classes(g2, 4)
            if any(x.denominator == 2 for x in c.invariant.newton)]
    assert len(half) == 1 and half[0].min_length == 3
    assert defect_of_class(half[0]) == 1


def test_defect_torsion_kappa_basics():
    from classpoly import build_root_datum

    so5 = build_root_datum("SO5")
    b = sigma_class_from_invariant(
        so5, ClassInvariant(so5.pi1_element((1,)), (Fraction(0), Fraction(0))))
    assert b.basic and b.defect == 1
    pgl3 = build_root_datum("PGL3")
    for k in (1, 2):
        b = sigma_class_from_invariant(
            pgl3, ClassInvariant(pgl3.pi1_element((k,)), (Fraction(0), Fraction(0))))
        assert b.basic and b.defect == 2


# -- dimension = degree -------------------------------------------------------------


def test_dim_adlv_examples(pgl2, sl2):
    w = parse_element(pgl2, "s0 s1 s0")
    r = dim_adlv(w, b_identity(pgl2))
    assert r.nonempty and r.dim == 2
    assert len(r.terms) == 1 and r.terms[0].len_O == 1

    b_t = sigma_class_of(parse_element(pgl2, "t[2]"))
    r2 = dim_adlv(w, b_t)
    assert r2.nonempty and r2.dim == 1

    r3 = dim_adlv(parse_element(sl2, "t[1]"), b_identity(sl2))
    assert not r3.nonempty and r3.dim == NEG_INFINITY and r3.terms == ()


def test_dim_adlv_report_shape(pgl2):
    w = parse_element(pgl2, "s0 s1 s0")
    doc = dim_adlv(w, b_identity(pgl2)).to_json_dict()
    assert doc["w"] == "t[4].u[1]"
    assert doc["b"] == {"kappa": [0], "nu": ["0"]}
    assert doc["dim"] == 2 and doc["nonempty"] is True
    (term,) = doc["terms"]
    assert set(term) == {"class_id", "len_O", "deg_f", "f"}
    assert doc["methods"]["dim_degree"] == {"nonempty": True, "dim": 2}
    assert doc["agreement"] is True


def test_dim_min_length_examples(sl2, pgl2):
    tau = omega_element(pgl2, pgl2.pi1_element((1,)))
    r = dim_min_length(tau, sigma_class_of(tau))
    assert r.nonempty and r.dim == 0

    s0 = parse_element(sl2, "s0")
    r2 = dim_min_length(s0, b_identity(sl2))
    assert r2.nonempty and r2.dim == 1

    t_neg = parse_element(sl2, "t[-1]")
    r3 = dim_min_length(t_neg, sigma_class_of(t_neg))
    assert r3.nonempty and r3.dim == 0

    with pytest.raises(PreconditionError):
        dim_min_length(parse_element(sl2, "s0 s1 s0"), b_identity(sl2))


# -- parabolics and P-alcoves ----------------------------------------------------------


def test_semistandard_parabolics_a1(sl2):
    ps = semistandard_parabolics(sl2)
    assert len(ps) == 3
    full = [p for p in ps if p.is_full()]
    assert len(full) == 1 and full[0].n_roots == ()


def test_semistandard_parabolics_a2(sl3):
    ps = semistandard_parabolics(sl3)
    assert len(ps) == 13
    borel_like = [p for p in ps if not p.levi_roots]
    assert len(borel_like) == 6
    levi_a1 = [p for p in ps if len(p.levi_roots) == 2]
    assert len(levi_a1) == 6


def test_parabolic_root_partition(sl3, sp4):
    for datum in (sl3, sp4):
        for p in semistandard_parabolics(datum):
            n_set = set(p.n_roots)
            neg_n = {tuple(-x for x in a) for a in n_set}
            assert not n_set & neg_n
            assert set(p.levi_roots) | n_set | neg_n == set(datum.roots)


def test_is_p_alcove_examples(sl2):
    ps = semistandard_parabolics(sl2)
    full = next(p for p in ps if p.is_full())
    t_a = parse_element(sl2, "t[1]")
    s1 = parse_element(sl2, "s1")
    for w in (t_a, s1, parse_element(sl2, "s0 s1 s0")):
        assert is_p_alcove(w, full)
    neg_root = tuple(-x for x in sl2.simple_roots[0])
    p_neg = next(p for p in ps if p.n_roots == (neg_root,))
    p_pos = next(p for p in ps if p.n_roots == (sl2.simple_roots[0],))
    assert is_p_alcove(t_a, p_neg)
    assert not is_p_alcove(t_a, p_pos)
    assert not is_p_alcove(s1, p_neg) and not is_p_alcove(s1, p_pos)


def test_basic_nonempty_examples(sl2, pgl2):
    assert not basic_nonempty_via_alcoves(parse_element(sl2, "t[1]"), b_identity(sl2))
    tau = omega_element(pgl2, pgl2.pi1_element((1,)))
    assert basic_nonempty_via_alcoves(tau, sigma_class_of(tau))
    # kappa mismatch fails through the full-group clause
    assert not basic_nonempty_via_alcoves(tau, b_identity(pgl2))
    with pytest.raises(PreconditionError):
        basic_nonempty_via_alcoves(tau, sigma_class_of(parse_element(pgl2, "t[2]")))


def test_p_alcove_biconditional_window(pgl2):
    engine = get_engine(pgl2)
    basics = [b for b in sigma_classes_window(pgl2, 6) if b.basic]
    for kappa in pgl2.pi1_all():
        for level in coset_elements_by_length(pgl2, kappa, 6):
            for w in level:
                for b in basics:
                    oracle = dim_adlv(w, b, engine=engine, with_methods=False)
                    assert basic_nonempty_via_alcoves(w, b) == oracle.nonempty


# -- shrunken route ---------------------------------------------------------------------


def test_shrunken_examples(pgl2):
    w = parse_element(pgl2, "s0 s1 s0")
    b1 = b_identity(pgl2)
    assert shrunken_nonempty(w, b1)
    assert shrunken_dim(w, b1) == 2

    w2 = parse_element(pgl2, "t[3] s1")
    btau = sigma_class_of(omega_element(pgl2, pgl2.pi1_element((1,))))
    assert shrunken_nonempty(w2, btau)
    assert shrunken_dim(w2, btau) == 1
    # kappa mismatch
    assert not shrunken_nonempty(w2, b1)
    assert shrunken_dim(w2, b1) == NEG_INFINITY


def test_shrunken_preconditions(sl2, pgl2):
    with pytest.raises(PreconditionError):
        shrunken_nonempty(identity_element(sl2), b_identity(sl2))  # not shrunken
    w = parse_element(sl2, "s0 s1 s0")
    with pytest.raises(PreconditionError):
        shrunken_nonempty(w, sigma_class_of(parse_element(sl2, "t[1]")))  # not basic


# -- longest coset route -----------------------------------------------------------------


def test_longest_coset_examples(sl2):
    rep = longest_coset_case(sl2, (1,), b_identity(sl2))
    assert rep.nonempty and rep.dim == 2
    assert rep.methods["longest_coset"] == {"nonempty": True, "dim": 2, "agrees": True}

    b_t = sigma_class_of(parse_element(sl2, "t[1]"))
    rep2 = longest_coset_case(sl2, (1,), b_t)
    assert rep2.dim == 1 and rep2.methods["longest_coset"]["agrees"]

    rep3 = longest_coset_case(sl2, (0,), b_identity(sl2))
    lw0 = sl2.finite_length(sl2.longest_element())
    assert rep3.dim == lw0 and rep3.methods["longest_coset"]["agrees"]

    with pytest.raises(PreconditionError):
        longest_coset_case(sl2, (-1,), b_identity(sl2))


def test_longest_coset_method_attaches_in_dim_adlv(sl2):
    w = parse_element(sl2, "s1 s0 s1")  # w0 t^a
    rep = dim_adlv(w, b_identity(sl2))
    assert "longest_coset" in rep.methods
    assert rep.methods["longest_coset"]["agrees"]


# -- split-b checker -----------------------------------------------------------------------


def test_split_b_pinned_rows(sl2):
    s1 = sl2.simple_reflection(0)
    rep = split_b_checker(sl2, s1, sl2.identity_weyl, (0,), (1,))
    (row,) = rep.variant_rows("x-t-y", "t-y")
    assert row.agree and row.formula_dim == 2 and row.oracle_dim == 2

    rep2 = split_b_checker(sl2, sl2.identity_weyl, s1, (0,), (1,))
    (row2,) = rep2.variant_rows("x-t-y", "t-y")
    assert not row2.agree and row2.formula_dim == 2 and row2.oracle_dim == 1
    assert len(rep2.rows) == 4  # all four convention variants present


def test_split_b_threshold_scan(sl2):
    s1 = sl2.simple_reflection(0)
    rep = split_b_checker(sl2, sl2.identity_weyl, s1, (0,), (1,), regularity_threshold=3)
    assert {r.scale for r in rep.rows} == {1, 2, 3}
    # the x-t-y assembly stays off by l(y) at every scale: recorded, never asserted
    assert rep.stable_from[("x-t-y", "t-y")] is None
    for r in rep.rows:
        if r.assembly == "x-t-y":
            assert not r.agree and r.formula_dim == r.oracle_dim + 1
    # the swapped assembly matches the oracle at every evaluated scale
    assert rep.stable_from[("y-t-x", "t-x")] == 1
    for r in rep.rows:
        if r.assembly == "y-t-x":
            assert r.agree


def test_split_b_preconditions(sl2):
    s1 = sl2.simple_reflection(0)
    with pytest.raises(PreconditionError):
        split_b_checker(sl2, s1, s1, (0,), (0,))  # lam not regular
    with pytest.raises(PreconditionError):
        split_b_checker(sl2, s1, s1, (-1,), (1,))  # mu not dominant


def test_split_b_proper_parabolic_rows_empty(sl3):
    # y x = identity generates nothing: formula predicts empty; oracle agrees
    rep = split_b_checker(sl3, sl3.identity_weyl, sl3.identity_weyl, (0, 0), (1, 1))
    for row in rep.variant_rows("x-t-y", "t-y"):
        assert not row.formula_nonempty
        assert not row.oracle_nonempty and row.agree


def test_routes_agree_on_extended_presets():
    # outside the acceptance presets: triple bond (G2) and adjoint B2 (SO5)
    from classpoly import build_root_datum

    for name in ("G2", "SO5"):
        datum = build_root_datum(name)
        engine = get_engine(datum)
        bs = sigma_classes_window(datum, 6)
        basics = [b for b in bs if b.basic]
        for kappa in datum.pi1_all():
            for level in coset_elements_by_length(datum, kappa, 6):
                for w in level:
                    for b in basics:
                        oracle = dim_adlv(w, b, engine=engine, with_methods=False)
                        assert basic_nonempty_via_alcoves(w, b) == oracle.nonempty
                        if is_shrunken(w):
                            assert shrunken_nonempty(w, b) == oracle.nonempty
                            assert shrunken_dim(w, b) == oracle.dim
                    if is_minimal(w):
                        for b in bs:
                            r1 = dim_min_length(w, b)
                            r2 = dim_adlv(w, b, engine=engine, with_methods=False)
                            assert (r1.nonempty, r1.dim) == (r2.nonempty, r2.dim)


def test_dimension_integral_and_nonnegative_when_nonempty(pgl2, sl3):
    for datum in (pgl2, sl3):
        engine = get_engine(datum)
        bs = sigma_classes_window(datum, 6)
        for kappa in datum.pi1_all():
            for level in coset_elements_by_length(datum, kappa, 6):
                for w in level:
                    for b in bs:
                        rep = dim_adlv(w, b, engine=engine, with_methods=False)
                        if rep.nonempty:
                            assert isinstance(rep.dim, int) and rep.dim >= 0
                        else:
                            assert rep.dim == NEG_INFINITY


# -- basic-vs-nonbasic scan -------------------------------------------------------------------


def test_basic_comparison_scan_identity_comparison(sl2):
    b1 = b_identity(sl2)
    rep = basic_comparison_scan(sl2, b1, b1, 6)
    assert all(r.agree for r in rep.rows)
    assert rep.stable_length == 0


def test_basic_comparison_scan_table_shape(sl2):
    b1 = b_identity(sl2)
    b_t = sigma_class_of(parse_element(sl2, "t[1]"))
    rep = basic_comparison_scan(sl2, b_t, b1, 10)
    assert len(rep.rows) == 21
    # rows with both sides empty count as agreements
    for r in rep.rows:
        if not r.nonempty_b and not r.nonempty_basic:
            assert r.agree
    assert rep.stable_length <= 10


def test_basic_comparison_scan_preconditions(sl2, pgl2):
    b1 = b_identity(sl2)
    b_t = sigma_class_of(parse_element(sl2, "t[1]"))
    with pytest.raises(PreconditionError):
        basic_comparison_scan(sl2, b1, b_t, 4)  # comparison class not basic
    btau = sigma_class_of(omega_element(pgl2, pgl2.pi1_element((1,))))
    with pytest.raises(InputError):
        basic_comparison_scan(pgl2, b_identity(pgl2), btau, 4)  # kappa mismatch
