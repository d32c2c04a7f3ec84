import itertools
import json

from fractions import Fraction

import pytest

from classpoly import InputError, ResourceLimitError, build_root_datum, load_root_datum
from classpoly.intlinalg import dot


def test_preset_a2_adjoint():
    d = build_root_datum("PGL3")
    assert len(d.weyl_group()) == 6
    assert len(d.positive_roots) == 3
    assert d.pi1_moduli == (3,)


def test_preset_rank_two_bc():
    for name in ("B2", "C2", "Sp4", "SO5"):
        d = build_root_datum(name)
        assert len(d.weyl_group()) == 8
        assert len(d.positive_roots) == 4


def test_preset_gl3_quotient_free_rank_one(gl3):
    # X/Q computed through integer normal form: one free factor, no torsion
    assert gl3.rank == 3
    assert gl3.pi1_moduli == (0,)
    # roots are the e_i - e_j pattern: each has one +1 and one -1 entry
    for a in gl3.roots:
        assert sorted(a) == [-1, 0, 1]


def test_preset_g2_f4_orders():
    assert len(build_root_datum("G2").weyl_group()) == 12
    assert len(build_root_datum("F4").weyl_group()) == 1152


def test_unknown_and_invalid_presets():
    with pytest.raises(InputError):
        build_root_datum("XYZ9")
    with pytest.raises(InputError):
        build_root_datum("SL1")
    with pytest.raises(InputError):
        build_root_datum("F5")
    with pytest.raises(ResourceLimitError):
        build_root_datum("E7")


def test_invalid_explicit_data():
    # non-crystallographic pairing
    with pytest.raises(InputError):
        build_root_datum({"rank": 2, "roots": [[1, 0], [-1, 1], [-1, 0], [1, -1]],
                          "coroots": [[2, 1], [0, 1], [-2, -1], [0, -1]],
                          "simple": [0, 1]})
    # lattice not containing the coroot lattice
    with pytest.raises(InputError):
        build_root_datum({"rank": 1, "roots": [[1], [-1]], "coroots": [[2], [-2]],
                          "simple": [0], "lattice_basis": [[4]]})
    # rank mismatch
    with pytest.raises(InputError):
        build_root_datum({"rank": 2, "roots": [[2], [-2]], "coroots": [[1], [-1]],
                          "simple": [0]})


def test_explicit_intermediate_lattice_datum():
    # SL4/Z2: the index-2 lattice between the coroot and coweight lattices of A3
    from classpoly import sigma_class_from_invariant
    from classpoly.conjugacy import ClassInvariant
    from classpoly.intlinalg import IntRowSpan

    pgl4 = build_root_datum("PGL4")
    span = IntRowSpan([list(r) for r in pgl4.simple_coroots] + [[2, 0, 0]], width=3)
    so6 = build_root_datum({
        "format": "root-datum/1", "rank": 3,
        "roots": [list(a) for a in pgl4.roots],
        "coroots": [list(b) for b in pgl4.coroots],
        "simple": list(pgl4.simple_indices),
        "lattice_basis": [list(r) for r in span.basis],
    })
    assert so6.pi1_moduli == (2,)
    assert len(so6.weyl_group()) == 24 and len(so6.positive_roots) == 6
    b = sigma_class_from_invariant(
        so6, ClassInvariant(so6.pi1_element((1,)), (Fraction(0),) * 3))
    assert b.basic and b.defect == 2


def test_torus_datum_gl1():
    from classpoly import (dim_adlv, enumerate_classes, sigma_class_of,
                           translation_element)

    gl1 = build_root_datum("GL1")
    assert gl1.positive_roots == () and len(gl1.weyl_group()) == 1
    classes = enumerate_classes(gl1, 0, kappa_window=2)
    assert len(classes) == 5 and all(c.straight for c in classes)
    t = translation_element(gl1, (1,))
    rep = dim_adlv(t, sigma_class_of(t))
    assert rep.nonempty and rep.dim == 0


def test_explicit_datum_normalization_matches_preset(tmp_path):
    # PGL2 given in a nonstandard ambient basis: alpha-check = (2), lattice = Z*(1)
    spec = {"format": "root-datum/1", "rank": 1, "roots": [[1], [-1]],
            "coroots": [[2], [-2]], "simple": [0], "lattice_basis": [[1]]}
    d = build_root_datum(spec)
    ref = build_root_datum("PGL2")
    assert d.roots == ref.roots and d.coroots == ref.coroots
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(spec))
    assert load_root_datum(path).datum_hash == ref.datum_hash


def test_length_is_inversion_count(sl3, sp4):
    for d in (sl3, sp4):
        for w in d.weyl_group():
            inv = sum(1 for a in d.positive_roots
                      if w.act_root(a) not in d._pos_set)
            assert d.finite_length(w) == inv
        # BFS word length agrees
        for w in d.weyl_group():
            assert len(d.reduced_word(w)) == d.finite_length(w)


def test_longest_element(sl2, sl3, sp4):
    assert sl2.finite_length(sl2.longest_element()) == 1
    assert sl3.finite_length(sl3.longest_element()) == 3
    assert sp4.finite_length(sp4.longest_element()) == 4
    # w0 sends every positive root to a negative root
    w0 = sl3.longest_element()
    assert all(w0.act_root(a) not in sl3._pos_set for a in sl3.positive_roots)


def test_dominant_rep_trivial_and_reflection(sl2):
    zero = (0,)
    dom, x = sl2.dominant_rep(zero)
    assert dom == (0,) and x.is_identity()
    dom, x = sl2.dominant_rep((-1,))
    assert dom == (1,)
    assert x.act((-1,)) == (1,)


def test_dominant_rep_orbit_invariance(sl3):
    v = (3, 1)  # regular coweight: pairs nonzero with both simple roots
    results = {sl3.dominant_rep(w.act(v))[0] for w in sl3.weyl_group()}
    assert len(results) == 1
    assert len({w.act(v) for w in sl3.weyl_group()}) == 6


def test_two_rho_pairing(sl2, sl3):
    assert sl2.two_rho_pairing((0,)) == 0
    assert sl2.two_rho_pairing((1,)) == 2
    assert sl3.two_rho_pairing((1, 1)) == 4  # sum of simple coroots


def test_two_rho_dominance_monotonicity(sl3):
    for coords in itertools.product(range(-2, 3), repeat=2):
        dom, _ = sl3.dominant_rep(coords)
        assert sl3.two_rho_pairing(dom) >= sl3.two_rho_pairing(coords)


def test_two_rho_integral_on_presets():
    for name in ("SL2", "PGL2", "GL3", "Sp4", "SO5", "G2", "PGL3"):
        d = build_root_datum(name)
        for i in range(d.rank):
            basis_vec = tuple(int(i == j) for j in range(d.rank))
            assert Fraction(d.two_rho_pairing(basis_vec)).denominator == 1


def test_root_coroot_pairing_is_two():
    for name in ("SL3", "Sp4", "G2", "GL3"):
        d = build_root_datum(name)
        for a, b in zip(d.roots, d.coroots):
            assert dot(b, a) == 2


def test_pi1_group_law(pgl2, gl3):
    one = pgl2.pi1_element((1,))
    assert (one + one).is_zero()
    k = gl3.pi1_element((2,))
    assert (k + (-k)).is_zero()
    assert (k + k).coords == (4,)
    # lift goes back to the declared class
    assert gl3.pi1_class(gl3.pi1_lift(k)) == k


def test_descent_queries(sl3):
    w0 = sl3.longest_element()
    assert sl3.left_descents(w0) == (0, 1)
    assert sl3.right_descents(w0) == (0, 1)
    assert sl3.left_descents(sl3.identity_weyl) == ()
    s0 = sl3.simple_reflection(0)
    assert sl3.left_descents(s0) == (0,)
    assert sl3.reduced_word(s0 * sl3.simple_reflection(1)) == (0, 1)


def test_weyl_group_is_a_group(sl3):
    group = set(sl3.weyl_group())
    for w in group:
        assert w.inv() in group
        assert (w * w.inv()).is_identity()
    for a in list(group)[:4]:
        for b in list(group)[:4]:
            assert a * b in group
