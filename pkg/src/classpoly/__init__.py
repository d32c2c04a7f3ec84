"""Exact engine for class polynomials of extended affine Weyl groups and
nonemptiness/dimension of affine Deligne-Lusztig varieties.

Quick start::

    from classpoly import build_root_datum, parse_element, sigma_class_of, dim_adlv
    datum = build_root_datum("PGL2")
    w = parse_element(datum, "s0 s1 s0")
    b = sigma_class_of(parse_element(datum, "t[0]"))
    report = dim_adlv(w, b)         # nonempty, dim 2

All arithmetic is exact (integers and fractions); every closed-form criterion
is cross-reported against the class-polynomial evaluation.
"""

from .adlv import (
    ADLVReport,
    BasicComparisonReport,
    ParabolicDatum,
    SigmaClass,
    SplitBReport,
    basic_nonempty_via_alcoves,
    bg_leq,
    bg_leq_via_bruhat,
    defect_of_class,
    dim_adlv,
    dim_min_length,
    basic_comparison_scan,
    is_p_alcove,
    longest_coset_case,
    semistandard_parabolics,
    shrunken_dim,
    shrunken_nonempty,
    sigma_class_from_invariant,
    sigma_class_of,
    sigma_classes_window,
    split_b_checker,
)
from .affine_weyl import (
    AffElt,
    affine_simple_labels,
    affine_simple_reflections,
    alcove_point,
    barycenter,
    bruhat_leq,
    chamber_of,
    conj_by_simple,
    dominant_decomposition,
    encode_element,
    eta,
    eta1,
    eta2,
    finite_element,
    identity_element,
    is_shrunken,
    kottwitz,
    length,
    omega_element,
    parse_element,
    reduced_word,
    translation_element,
)
from .cache import ClassPolyCache
from .conjugacy import (
    ClassInvariant,
    ConjClass,
    are_conjugate,
    class_invariant,
    conjugation_orbit,
    enumerate_classes,
    invariant_leq,
    is_minimal,
    is_straight,
    minimize,
    newton,
    resolve_class,
    straight_class_leq,
    straight_classes,
)
from .errors import (
    ClasspolyError,
    InputError,
    IntegrityError,
    PreconditionError,
    ResourceLimitError,
)
from .hecke_cocenter import (
    ClassDecomposition,
    ReductionEngine,
    class_polynomials,
    generator_product,
    get_engine,
)
from .laurent import NEG_INFINITY, LaurentPoly
from .root_datum import PiOneElt, RootDatum, WeylElt, build_root_datum, load_root_datum

__version__ = "0.1.0"
