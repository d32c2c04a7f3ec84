"""Arithmetic of the extended affine Weyl group X ⋊ W.

An element is a pair t^lam * u with lam in the (co)weight lattice X and u in
the finite Weyl group; the canonical representation is exactly that pair, so
equality is componentwise.  The group acts on the coweight space by
``w . p = lam + u(p)`` and multiplies by ``t^lam u . t^mu v = t^{lam + u(mu)} uv``.

Conventions fixed here and relied on everywhere else:

* The base alcove A0 is the set of points with 0 < <alpha, x> < 1 for every
  positive root alpha (dominant side).
* Length is the Iwahori-Matsumoto count
  ``sum_{a>0, u^-1 a>0} |<lam,a>| + sum_{a>0, u^-1 a<0} |<lam,a> - 1|``,
  which equals the number of affine hyperplanes separating A0 from w(A0);
  the length-zero elements form the stabilizer Omega of A0.
* ``alcove_point(w)`` is the image under w of a canonical rational interior
  point of A0 (a height-normalized point; alcoves of reductive data with
  central directions are unbounded, so a simplex barycenter does not always
  exist, while every floor/chamber predicate used below is constant on the
  open alcove and therefore blind to the difference).
* The shrunken region is the complement of the critical strips
  -1 < <alpha, x> < 1 around the finite root hyperplanes: an alcove is
  shrunken when floor(<alpha, point>) is not in {-1, 0} for every positive
  root alpha.

Canonical element encoding (used in caches, CLI I/O and fixtures, versioned
as part of the cache format): ``t[c1,...,cr].u[i1,...]`` with c_i the lattice
coordinates in the declared basis and i_k the normalized (lexicographically
least) reduced word of the finite part in 1-based simple indices.
"""

from __future__ import annotations

import re
from math import floor

from .errors import InputError
from .intlinalg import vec_add
from .root_datum import PiOneElt, RootDatum, WeylElt

IntVec = tuple[int, ...]


class AffElt:
    """An element t^lam * u of the extended affine Weyl group of a datum."""

    __slots__ = ("datum", "translation", "finite", "_hash")

    def __init__(self, datum: RootDatum, translation, finite: WeylElt):
        self.datum = datum
        self.translation = tuple(translation)
        self.finite = finite
        self._hash = hash((self.translation, finite.action))

    def __eq__(self, other):
        return (isinstance(other, AffElt)
                and self.datum is other.datum
                and self.translation == other.translation
                and self.finite == other.finite)

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "AffElt") -> "AffElt":
        if self.datum is not other.datum:
            raise InputError("elements of different root data")
        lam = vec_add(self.translation, self.finite.act(other.translation))
        return AffElt(self.datum, lam, self.finite * other.finite)

    def inv(self) -> "AffElt":
        ui = self.finite.inv()
        return AffElt(self.datum, tuple(-x for x in ui.act(self.translation)), ui)

    def is_identity(self) -> bool:
        return not any(self.translation) and self.finite.is_identity()

    def apply(self, point):
        """Affine action on a point of the coweight space."""
        return vec_add(self.translation, self.finite.act(point))

    def length(self) -> int:
        return length(self)

    def sort_key(self):
        """Total order key inducing the canonical element encoding order."""
        return (self.translation, self.datum.reduced_word(self.finite))

    def __repr__(self):
        return f"AffElt({encode_element(self)!r})"


def identity_element(datum: RootDatum) -> AffElt:
    return AffElt(datum, (0,) * datum.rank, datum.identity_weyl)


def translation_element(datum: RootDatum, lam) -> AffElt:
    return AffElt(datum, lam, datum.identity_weyl)


def finite_element(datum: RootDatum, w: WeylElt) -> AffElt:
    return AffElt(datum, (0,) * datum.rank, w)


# -- length and simple reflections -------------------------------------------


def length(w: AffElt) -> int:
    """Iwahori-Matsumoto length of ``w`` (cached on the datum)."""
    datum = w.datum
    cache = getattr(datum, "_aff_len_cache", None)
    if cache is None:
        cache = datum._aff_len_cache = {}
    val = cache.get(w)
    if val is None:
        lam, u = w.translation, w.finite
        total = 0
        uinv = u.inv()
        for a in datum.positive_roots:
            pairing = sum(x * y for x, y in zip(lam, a))
            if uinv.act_root(a) in datum._pos_set:
                total += abs(pairing)
            else:
                total += abs(pairing - 1)
        cache[w] = val = total
    return val


def affine_simple_reflections(datum: RootDatum) -> tuple[AffElt, ...]:
    """Finite simple reflections followed by one affine reflection per component.

    Labels: ``s1`` .. ``sk`` for the finite simples, ``s0`` for the affine
    simple of the first irreducible component, ``s0.J`` for component J.
    """
    cached = getattr(datum, "_aff_simples", None)
    if cached is None:
        gens = [finite_element(datum, datum.simple_reflection(i))
                for i in range(datum.num_simples)]
        labels = [f"s{i + 1}" for i in range(datum.num_simples)]
        for j, comp in enumerate(datum.components):
            theta = datum.highest_root(comp)
            gens.append(AffElt(datum, datum.coroot(theta), datum.reflection(theta)))
            labels.append("s0" if j == 0 else f"s0.{j}")
        cached = datum._aff_simples = (tuple(gens), tuple(labels))
    return cached[0]


def affine_simple_labels(datum: RootDatum) -> tuple[str, ...]:
    affine_simple_reflections(datum)
    return datum._aff_simples[1]


def conj_by_simple(s: AffElt, w: AffElt) -> AffElt:
    """s * w * s for an (involutive) simple reflection s."""
    return s * w * s


# -- Kottwitz map -------------------------------------------------------------


def kottwitz(w: AffElt) -> PiOneElt:
    """Class of the translation part in X/Q; a homomorphism, zero exactly on W_a."""
    return w.datum.pi1_class(w.translation)


def omega_element(datum: RootDatum, kappa: PiOneElt) -> AffElt:
    """The unique length-zero element with the given Kottwitz image.

    Obtained by greedy left division of a translation representative by
    affine simple reflections until the length reaches zero.
    """
    cache = getattr(datum, "_omega_cache", None)
    if cache is None:
        cache = datum._omega_cache = {}
    got = cache.get(kappa)
    if got is None:
        w = translation_element(datum, datum.pi1_lift(kappa))
        simples = affine_simple_reflections(datum)
        lw = length(w)
        while lw > 0:
            for s in simples:
                sw = s * w
                lsw = length(sw)
                if lsw < lw:
                    w, lw = sw, lsw
                    break
            else:
                raise AssertionError("positive-length element without left descent")
        cache[kappa] = got = w
    return got


# -- reduced words and encoding ----------------------------------------------


def reduced_word(w: AffElt) -> tuple[tuple[int, ...], AffElt]:
    """Greedy reduced word over the affine simple reflections.

    Returns (indices, tau) with ``w == prod(s_indices) * tau`` and tau of
    length zero.  Indices refer to ``affine_simple_reflections``.
    """
    simples = affine_simple_reflections(w.datum)
    word = []
    lw = length(w)
    while lw > 0:
        for i, s in enumerate(simples):
            sw = s * w
            lsw = length(sw)
            if lsw < lw:
                word.append(i)
                w, lw = sw, lsw
                break
        else:
            raise AssertionError("positive-length element without left descent")
    return tuple(word), w


def encode_element(w: AffElt) -> str:
    """Canonical, bit-exact string form ``t[c1,...,cr].u[i1,...]``."""
    coords = ",".join(str(c) for c in w.translation)
    word = ",".join(str(i + 1) for i in w.datum.reduced_word(w.finite))
    return f"t[{coords}].u[{word}]"


_KEY_RE = re.compile(r"^t\[([-0-9,]*)\]\.u\[([0-9,]*)\]$")
_GEN_RE = re.compile(r"^s(\d+)(?:\.(\d+))?$")
_TRANS_RE = re.compile(r"^t\[([-0-9,]*)\]$")


def _generator_by_name(datum: RootDatum, token: str) -> AffElt:
    m = _GEN_RE.match(token)
    if not m:
        raise InputError(f"bad generator token {token!r}")
    idx, comp = int(m.group(1)), m.group(2)
    simples = affine_simple_reflections(datum)
    if idx == 0:
        j = int(comp) if comp is not None else 0
        if j >= len(datum.components):
            raise InputError(f"no affine simple for component {j}")
        return simples[datum.num_simples + j]
    if comp is not None:
        raise InputError(f"bad generator token {token!r}")
    if not 1 <= idx <= datum.num_simples:
        raise InputError(f"finite simple index out of range in {token!r}")
    return simples[idx - 1]


def parse_element(datum: RootDatum, text: str) -> AffElt:
    """Parse the CLI element grammar.

    Accepts whitespace-separated generator words (``s0 s1 s0``), translation
    literals (``t[1,0] s1``), and the canonical encoding itself
    (``t[1,0].u[1]``); tokens multiply left to right.
    """
    w = identity_element(datum)
    for token in text.split():
        if m := _KEY_RE.match(token):
            coords = [int(x) for x in m.group(1).split(",")] if m.group(1) else []
            word = [int(x) for x in m.group(2).split(",")] if m.group(2) else []
            if len(coords) != datum.rank:
                raise InputError(f"translation arity mismatch in {token!r}")
            part = translation_element(datum, tuple(coords))
            for i in word:
                if not 1 <= i <= datum.num_simples:
                    raise InputError(f"finite simple index out of range in {token!r}")
                part = part * finite_element(datum, datum.simple_reflection(i - 1))
            w = w * part
        elif m := _TRANS_RE.match(token):
            coords = [int(x) for x in m.group(1).split(",")] if m.group(1) else []
            if len(coords) != datum.rank:
                raise InputError(f"translation arity mismatch in {token!r}")
            w = w * translation_element(datum, tuple(coords))
        else:
            w = w * _generator_by_name(datum, token)
    return w


# -- Bruhat order -------------------------------------------------------------


def bruhat_leq(a: AffElt, b: AffElt) -> bool:
    """Bruhat order on the extended group.

    Elements are comparable only inside one Omega-coset of W_a; there the
    standard left-descent recursion applies.  Memoized on the datum.
    """
    if a.datum is not b.datum:
        raise InputError("elements of different root data")
    datum = a.datum
    if kottwitz(a) != kottwitz(b):
        return False
    memo = getattr(datum, "_bruhat_cache", None)
    if memo is None:
        memo = datum._bruhat_cache = {}
    simples = affine_simple_reflections(datum)

    def rec(x: AffElt, y: AffElt) -> bool:
        lx, ly = length(x), length(y)
        if lx > ly:
            return False
        if ly == 0:
            return x == y
        key = (x, y)
        got = memo.get(key)
        if got is None:
            for s in simples:
                sy = s * y
                if length(sy) < ly:
                    sx = s * x
                    got = rec(sx, sy) if length(sx) < lx else rec(x, sy)
                    break
            memo[key] = got
        return got

    return rec(a, b)


# -- alcove geometry -----------------------------------------------------------


def alcove_point(w: AffElt):
    """Canonical rational interior point of the alcove w(A0).

    Never lies on a reflection hyperplane: <alpha, point> is not an integer
    for any root alpha.
    """
    return w.apply(w.datum.base_point)


def barycenter(w: AffElt):
    """Alias for ``alcove_point``; see the module docstring for the convention."""
    return alcove_point(w)


def chamber_of(w: AffElt) -> WeylElt:
    """The unique finite x with x^-1 applied to the alcove point dominant."""
    _, witness = w.datum.dominant_rep(alcove_point(w))
    return witness.inv()


def is_shrunken(w: AffElt) -> bool:
    """True when the alcove avoids every critical strip -1 < <alpha, x> < 1."""
    p = alcove_point(w)
    for a in w.datum.positive_roots:
        val = sum(x * y for x, y in zip(p, a))
        if floor(val) in (-1, 0):
            return False
    return True


# -- eta maps and the canonical dominant factorization -------------------------


def eta1(w: AffElt) -> WeylElt:
    """Projection to the finite Weyl group."""
    return w.finite


def eta2(w: AffElt) -> WeylElt:
    """The chamber witness: eta2(w)^-1 moves the alcove into the dominant chamber."""
    return chamber_of(w)


def eta(w: AffElt) -> WeylElt:
    e2 = eta2(w)
    return e2.inv() * eta1(w) * e2


def dominant_decomposition(w: AffElt) -> tuple[WeylElt, IntVec, WeylElt]:
    """The unique triple (x, mu, y) with w = x t^mu y and t^mu y(A0) dominant.

    The chamber witness of w forces x; the rest is read off the product, and
    reassembly round-trips exactly.
    """
    x = chamber_of(w)
    rest = finite_element(w.datum, x.inv()) * w
    return x, rest.translation, rest.finite


def assemble(datum: RootDatum, x: WeylElt, mu, y: WeylElt) -> AffElt:
    return finite_element(datum, x) * translation_element(datum, mu) * finite_element(datum, y)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
