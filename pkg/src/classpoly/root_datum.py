"""Split reductive root data and finite Weyl group arithmetic.

Conventions used throughout the package:

* The ambient space V is the rational span of the (co)weight lattice X.  A
  datum is always normalized so that X = Z^rank in its own coordinates; the
  coordinates appearing in element encodings are exactly these.
* Coweights are vectors in V (tuples of int or Fraction).  Roots live in the
  dual space and are stored in the dual basis, so the natural pairing is the
  plain dot product ``<lam, alpha> = dot(lam, alpha)``.
* Weyl group elements act on V by integer matrices (column convention); the
  action on roots is contragredient and is computed from the cached inverse
  matrix.  Matrices are faithful, canonical, and hashable.
* All arithmetic is exact.  Floats never appear.

The preset catalog is data-driven: Cartan matrices are embedded tables, and
the root system is generated from them by closing the simple (root, coroot)
pairs under simple reflections.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, ResourceLimitError
from .intlinalg import (
    IntRowSpan,
    dot,
    fraction_rank,
    identity_matrix,
    mat_fraction_inverse,
    mat_int_inverse,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_fraction,
    vec_add,
    vec_scale,
    vec_sub,
)

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]

DATUM_FORMAT = "root-datum/1"

# Enumeration guards; exceeding them raises ResourceLimitError, never truncates.
MAX_ROOTS = 2400
MAX_WEYL_ORDER = 60_000


class WeylElt:
    """A finite Weyl group element, canonically represented by its action matrix."""

    __slots__ = ("action", "inverse_action", "_hash")

    def __init__(self, action, inverse_action):
        self.action = action
        self.inverse_action = inverse_action
        self._hash = hash(action)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return WeylElt(mat_mul(self.action, other.action),
                       mat_mul(other.inverse_action, self.inverse_action))

    def inv(self) -> "WeylElt":
        return WeylElt(self.inverse_action, self.action)

    def act(self, v):
        """Apply to a coweight vector."""
        return mat_vec(self.action, v)

    def act_root(self, a):
        """Apply to a root (dual-basis coordinates)."""
        n = len(a)
        m = self.inverse_action
        return tuple(sum(a[i] * m[i][j] for i in range(n)) for j in range(n))

    def is_identity(self) -> bool:
        n = len(self.action)
        return self.action == identity_matrix(n)

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.action == other.action

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"WeylElt({self.action!r})"


@dataclass(frozen=True)
class PiOneElt:
    """An element of X/Q in canonical normal-form coordinates.

    ``moduli`` lists, per coordinate, the order of the cyclic factor (0 for a
    free factor); coordinates at torsion positions are reduced representatives
    in [0, modulus).  Coordinates of modulus-1 factors are dropped entirely,
    so the trivial group has empty coordinates.
    """

    coords: IntVec
    moduli: IntVec

    def __post_init__(self):
        if len(self.coords) != len(self.moduli):
            raise InputError("coordinate/modulus length mismatch")

    def _norm(self, coords):
        return tuple(c % m if m else c for c, m in zip(coords, self.moduli))

    def __add__(self, other: "PiOneElt") -> "PiOneElt":
        if self.moduli != other.moduli:
            raise InputError("component group mismatch")
        return PiOneElt(self._norm(vec_add(self.coords, other.coords)), self.moduli)

    def __neg__(self) -> "PiOneElt":
        return PiOneElt(self._norm(tuple(-c for c in self.coords)), self.moduli)

    def __sub__(self, other: "PiOneElt") -> "PiOneElt":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_list(self) -> list[int]:
        return list(self.coords)


class RootDatum:
    """A validated split reductive root datum.

    Immutable after construction; lazy caches are only ever populated with
    idempotent values, so unrestricted concurrent reads are safe.
    """

    def __init__(self, name, rank, root_pairs, simple_indices):
        self.name = name
        self.rank = rank
        # roots sorted for canonical layout; coroots ride along
        order = sorted(range(len(root_pairs)), key=lambda i: root_pairs[i][0])
        simple_set = {root_pairs[i][0] for i in simple_indices}
        self.roots: tuple[IntVec, ...] = tuple(root_pairs[i][0] for i in order)
        self.coroots: tuple[IntVec, ...] = tuple(root_pairs[i][1] for i in order)
        self.simple_indices: IntVec = tuple(i for i, r in enumerate(self.roots) if r in simple_set)
        self._validate_basics()
        self._finish()

    # -- construction ---------------------------------------------------

    def _validate_basics(self):
        for a, b in zip(self.roots, self.coroots):
            if len(a) != self.rank or len(b) != self.rank:
                raise InputError("rank mismatch in root data")
            if not any(a):
                raise InputError("zero root")
            if dot(b, a) != 2:
                raise InputError("root/coroot pairing is not 2")
        if len(set(self.roots)) != len(self.roots):
            raise InputError("duplicate roots")

    def _finish(self):
        k = len(self.simple_indices)
        self.simple_roots = tuple(self.roots[i] for i in self.simple_indices)
        self.simple_coroots = tuple(self.coroots[i] for i in self.simple_indices)
        self.cartan = tuple(tuple(dot(self.simple_coroots[i], self.simple_roots[j])
                                  for j in range(k)) for i in range(k))
        for i in range(k):
            for j in range(k):
                a = self.cartan[i][j]
                if i == j:
                    if a != 2:
                        raise InputError("Cartan diagonal must be 2")
                elif a > 0 or (a == 0) != (self.cartan[j][i] == 0):
                    raise InputError("non-crystallographic pairing matrix")

        # simple-root coefficients of every root: the positivity criterion
        self._coeffs = {}
        basis_cols = tuple(tuple(self.simple_roots[j][i] for j in range(k))
                           for i in range(self.rank))
        for a in self.roots:
            sol = solve_fraction(basis_cols, a)
            if sol is None:
                raise InputError("root outside the span of the simple roots")
            self._coeffs[a] = sol
        pos = []
        for a in self.roots:
            c = self._coeffs[a]
            if all(x >= 0 for x in c):
                pos.append(a)
            elif not all(x <= 0 for x in c):
                raise InputError("root with mixed-sign simple coefficients")
        if 2 * len(pos) != len(self.roots):
            raise InputError("positive roots are not half of all roots")
        self.positive_roots = tuple(sorted(pos))
        self._root_set = frozenset(self.roots)
        self._pos_set = frozenset(self.positive_roots)
        self._coroot_of = dict(zip(self.roots, self.coroots))

        two_rho = (0,) * self.rank
        for a in self.positive_roots:
            two_rho = vec_add(two_rho, a)
        self.two_rho: IntVec = two_rho
        self.rho: RatVec = tuple(Fraction(x, 2) for x in two_rho)

        # height-normalized interior point of the base alcove
        two_rho_check = (0,) * self.rank
        for a in self.positive_roots:
            two_rho_check = vec_add(two_rho_check, self._coroot_of[a])
        heights = [dot(two_rho_check, a) for a in self.positive_roots]
        denom = (max(heights) // 2 + 1) if heights else 1
        self.base_point: RatVec = tuple(Fraction(x, 2 * denom) for x in two_rho_check)

        self._simple_refl = tuple(self._reflection_pair(self.simple_roots[i],
                                                        self.simple_coroots[i])
                                  for i in range(k))
        self.identity_weyl = WeylElt(identity_matrix(self.rank), identity_matrix(self.rank))

        # component decomposition of the Dynkin diagram
        comps = []
        unseen = set(range(k))
        while unseen:
            comp = {unseen.pop()}
            grew = True
            while grew:
                grew = False
                for j in list(unseen):
                    if any(self.cartan[i][j] != 0 for i in comp):
                        comp.add(j)
                        unseen.discard(j)
                        grew = True
            comps.append(tuple(sorted(comp)))
        self.components: tuple[IntVec, ...] = tuple(sorted(comps))

        # quotient X/Q via Smith normal form of the simple coroot rows
        if k:
            d, _u, v = smith_normal_form(self.simple_coroots)
        else:
            d, v = [], identity_matrix(self.rank)
        moduli = list(d) + [0] * (self.rank - len(d))
        self._pi1_v = v
        self._pi1_vinv = mat_int_inverse(v)
        self._pi1_moduli_full = tuple(moduli)
        self._pi1_keep = tuple(i for i, m in enumerate(moduli) if m != 1)
        self.pi1_moduli: IntVec = tuple(moduli[i] for i in self._pi1_keep)
        self._coroot_span = IntRowSpan(self.simple_coroots, width=self.rank)

        # lazy caches
        self._weyl_cache = None
        self._longest = None
        self._len_cache: dict[WeylElt, int] = {}

    def _reflection_pair(self, root, coroot):
        n = self.rank
        m = tuple(tuple((1 if i == j else 0) - coroot[i] * root[j] for j in range(n))
                  for i in range(n))
        return WeylElt(m, m)

    # -- basic structure -------------------------------------------------

    def reflection(self, root) -> WeylElt:
        """Reflection in a root of the system."""
        if root not in self._root_set:
            raise InputError("not a root of this datum")
        return self._reflection_pair(root, self._coroot_of[root])

    def simple_reflection(self, i: int) -> WeylElt:
        return self._simple_refl[i]

    @property
    def num_simples(self) -> int:
        return len(self.simple_indices)

    def coroot(self, root) -> IntVec:
        return self._coroot_of[root]

    def is_positive_root(self, a) -> bool:
        return a in self._pos_set

    def root_height(self, a) -> Fraction:
        return sum(self._coeffs[a])

    def root_support(self, a) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self._coeffs[a]) if c != 0)

    def highest_root(self, component) -> IntVec:
        cands = [a for a in self.positive_roots
                 if set(self.root_support(a)) <= set(component)]
        return max(cands, key=lambda a: (self.root_height(a), a))

    def in_coroot_lattice(self, lam) -> bool:
        return tuple(lam) in self._coroot_span

    # -- Weyl group operations -------------------------------------------

    def finite_length(self, w: WeylElt) -> int:
        """Coxeter length = number of positive roots sent to negative roots."""
        cached = self._len_cache.get(w)
        if cached is None:
            cached = sum(1 for a in self.positive_roots
                         if w.act_root(a) not in self._pos_set)
            self._len_cache[w] = cached
        return cached

    def left_descents(self, w: WeylElt) -> tuple[int, ...]:
        lw = self.finite_length(w)
        return tuple(i for i in range(self.num_simples)
                     if self.finite_length(self._simple_refl[i] * w) < lw)

    def right_descents(self, w: WeylElt) -> tuple[int, ...]:
        lw = self.finite_length(w)
        return tuple(i for i in range(self.num_simples)
                     if self.finite_length(w * self._simple_refl[i]) < lw)

    def reduced_word(self, w: WeylElt) -> tuple[int, ...]:
        """The lexicographically least reduced word, by greedy left descents."""
        word = []
        while not w.is_identity():
            lw = self.finite_length(w)
            for i in range(self.num_simples):
                sw = self._simple_refl[i] * w
                if self.finite_length(sw) < lw:
                    word.append(i)
                    w = sw
                    break
            else:
                raise AssertionError("non-identity element without left descent")
        return tuple(word)

    def from_word(self, word) -> WeylElt:
        w = self.identity_weyl
        for i in word:
            w = w * self._simple_refl[i]
        return w

    def weyl_group(self) -> tuple[WeylElt, ...]:
        """Exhaustive, duplicate-free enumeration of W (cached)."""
        if self._weyl_cache is None:
            seen = {self.identity_weyl}
            frontier = [self.identity_weyl]
            order = [self.identity_weyl]
            while frontier:
                new = []
                for w in frontier:
                    for s in self._simple_refl:
                        x = w * s
                        if x not in seen:
                            seen.add(x)
                            new.append(x)
                            order.append(x)
                            if len(seen) > MAX_WEYL_ORDER:
                                raise ResourceLimitError(
                                    f"Weyl group exceeds {MAX_WEYL_ORDER} elements")
                frontier = new
            self._weyl_cache = tuple(order)
        return self._weyl_cache

    def longest_element(self) -> WeylElt:
        """The longest element of W, via the witness of the antidominant chamber."""
        if self._longest is None:
            neg = tuple(-x for x in self.base_point)
            _, x = self.dominant_rep(neg)
            self._longest = x
        return self._longest

    # -- coweight operations ----------------------------------------------

    def is_dominant(self, v) -> bool:
        return all(dot(v, a) >= 0 for a in self.simple_roots)

    def dominant_rep(self, v) -> tuple[RatVec, WeylElt]:
        """The dominant element of W*v together with a witness x, x.act(v) dominant."""
        cur = tuple(v)
        x = self.identity_weyl
        while True:
            for i, a in enumerate(self.simple_roots):
                if dot(cur, a) < 0:
                    s = self._simple_refl[i]
                    cur = s.act(cur)
                    x = s * x
                    break
            else:
                return cur, x

    def two_rho_pairing(self, v):
        """Exact value of <v, 2*rho>."""
        return dot(v, self.two_rho)

    # -- X/Q --------------------------------------------------------------

    def pi1_class(self, lam) -> PiOneElt:
        y = [sum(lam[i] * self._pi1_v[i][j] for i in range(self.rank))
             for j in range(self.rank)]
        coords = []
        for i in self._pi1_keep:
            m = self._pi1_moduli_full[i]
            coords.append(y[i] % m if m else y[i])
        return PiOneElt(tuple(coords), self.pi1_moduli)

    def pi1_zero(self) -> PiOneElt:
        return PiOneElt((0,) * len(self.pi1_moduli), self.pi1_moduli)

    def pi1_element(self, coords) -> PiOneElt:
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.pi1_moduli):
            raise InputError(
                f"component group of {self.name} has {len(self.pi1_moduli)} coordinates")
        return PiOneElt(tuple(c % m if m else c for c, m in zip(coords, self.pi1_moduli)),
                        self.pi1_moduli)

    def pi1_lift(self, elt: PiOneElt) -> IntVec:
        """A lattice vector representing the given class of X/Q."""
        y = [0] * self.rank
        for pos, i in enumerate(self._pi1_keep):
            y[i] = elt.coords[pos]
        return tuple(sum(y[i] * self._pi1_vinv[i][j] for i in range(self.rank))
                     for j in range(self.rank))

    def pi1_is_finite(self) -> bool:
        return all(m != 0 for m in self.pi1_moduli)

    def pi1_all(self) -> tuple[PiOneElt, ...]:
        if not self.pi1_is_finite():
            raise InputError("X/Q is infinite; an explicit kappa window is required")
        combos = [()]
        for m in self.pi1_moduli:
            combos = [c + (i,) for c in combos for i in range(m)]
        return tuple(PiOneElt(c, self.pi1_moduli) for c in combos)

    def pi1_window(self, bound: int) -> tuple[PiOneElt, ...]:
        """All classes with free coordinates in [-bound, bound]."""
        combos = [()]
        for m in self.pi1_moduli:
            rng = range(m) if m else range(-bound, bound + 1)
            combos = [c + (i,) for c in combos for i in rng]
        return tuple(PiOneElt(c, self.pi1_moduli) for c in combos)

    # -- identity ----------------------------------------------------------

    def canonical_dict(self) -> dict:
        return {
            "format": DATUM_FORMAT,
            "rank": self.rank,
            "roots": [list(a) for a in self.roots],
            "coroots": [list(b) for b in self.coroots],
            "simple": list(self.simple_indices),
            "lattice_basis": [list(r) for r in identity_matrix(self.rank)],
        }

    @property
    def datum_hash(self) -> str:
        text = json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()[:12]

    def __repr__(self):
        return f"RootDatum({self.name!r}, rank={self.rank}, roots={len(self.roots)})"


# -- generation from simple data -------------------------------------------


def _generate_root_pairs(rank, simple_roots, simple_coroots):
    pairs = {(tuple(a), tuple(b)) for a, b in zip(simple_roots, simple_coroots)}
    frontier = set(pairs)
    while frontier:
        new = set()
        for a, b in frontier:
            for sr, sc in zip(simple_roots, simple_coroots):
                ra = vec_sub(a, vec_scale(dot(sc, a), sr))
                rb = vec_sub(b, vec_scale(dot(b, sr), sc))
                p = (ra, rb)
                if p not in pairs:
                    pairs.add(p)
                    new.add(p)
                    if len(pairs) > MAX_ROOTS:
                        raise InputError("root system is not of finite type")
        frontier = new
    neg = {(tuple(-x for x in a), tuple(-x for x in b)) for a, b in pairs}
    pairs |= neg
    return sorted(pairs)


def _build_from_simples(name, rank, simple_roots, simple_coroots):
    pairs = _generate_root_pairs(rank, simple_roots, simple_coroots)
    roots = [p[0] for p in pairs]
    simple_idx = [roots.index(tuple(a)) for a in simple_roots]
    return RootDatum(name, rank, pairs, simple_idx)


# -- preset catalog ----------------------------------------------------------


def _cartan_matrix(family: str, n: int):
    """Embedded Cartan tables, a[i][j] = <coroot_i, root_j>."""
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def link(i, j, down=-1, up=-1):
        a[i][j] = down
        a[j][i] = up

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        # last simple root short
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2:
            a[n - 1][n - 2] = -2
    elif family == "C":
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2:
            a[n - 2][n - 1] = -2
    elif family == "D":
        if n < 2:
            raise InputError("type D needs rank >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 1)
        if n == 2:
            a[0][1] = a[1][0] = 0
    elif family == "E":
        if n not in (6, 7, 8):
            raise InputError("type E needs rank 6, 7 or 8")
        # chain 0-1-2-3-... with node n-1 attached to node 2
        for i in range(n - 2):
            link(i, i + 1)
        link(2, n - 1)
    elif family == "F":
        if n != 4:
            raise InputError("type F needs rank 4")
        link(0, 1)
        link(1, 2, down=-2, up=-1)
        link(2, 3)
    elif family == "G":
        if n != 2:
            raise InputError("type G needs rank 2")
        a[0][1] = -1
        a[1][0] = -3
    else:
        raise InputError(f"unknown family {family!r}")
    return a


_PRESET_RE = re.compile(r"^([A-G])(\d+)(?:-(sc|adjoint))?$")


def _weyl_order(family: str, n: int) -> int:
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    if family == "A":
        return fact * (n + 1)
    if family in ("B", "C"):
        return 2 ** n * fact
    if family == "D":
        return 2 ** max(n - 1, 0) * fact
    if family == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if family == "F":
        return 1152
    return 12  # G2


def _guard_weyl_order(family: str, n: int) -> None:
    order = _weyl_order(family, n)
    if order > MAX_WEYL_ORDER:
        raise ResourceLimitError(
            f"type {family}{n} has a Weyl group of order {order}, beyond the "
            f"configured bound {MAX_WEYL_ORDER}")


def _preset_simply_connected(name, family, n):
    cartan = _cartan_matrix(family, n)
    _guard_weyl_order(family, n)
    coroots = identity_matrix(n)
    roots = tuple(tuple(cartan[i][j] for i in range(n)) for j in range(n))
    return _build_from_simples(name, n, roots, coroots)


def _preset_adjoint(name, family, n):
    cartan = _cartan_matrix(family, n)
    _guard_weyl_order(family, n)
    roots = identity_matrix(n)
    coroots = tuple(tuple(cartan[i][j] for j in range(n)) for i in range(n))
    return _build_from_simples(name, n, roots, coroots)


def _preset_gl(name, n):
    if n < 1:
        raise InputError("GL_n needs n >= 1")
    roots = []
    coroots = []
    for i in range(n - 1):
        a = [0] * n
        a[i], a[i + 1] = 1, -1
        roots.append(tuple(a))
        coroots.append(tuple(a))
    return _build_from_simples(name, n, roots, coroots)


def _resolve_preset(name: str) -> RootDatum:
    key = name.strip()
    if m := re.match(r"^SL(\d+)$", key):
        n = int(m.group(1))
        if n < 2:
            raise InputError("SL_n needs n >= 2")
        return _preset_simply_connected(key, "A", n - 1)
    if m := re.match(r"^PGL(\d+)$", key):
        n = int(m.group(1))
        if n < 2:
            raise InputError("PGL_n needs n >= 2")
        return _preset_adjoint(key, "A", n - 1)
    if m := re.match(r"^GL(\d+)$", key):
        return _preset_gl(key, int(m.group(1)))
    if key == "Sp4":
        return _preset_simply_connected(key, "C", 2)
    if key == "SO5":
        return _preset_adjoint(key, "B", 2)
    if m := _PRESET_RE.match(key):
        family, n, form = m.group(1), int(m.group(2)), m.group(3) or "sc"
        if form == "sc":
            return _preset_simply_connected(key, family, n)
        return _preset_adjoint(key, family, n)
    raise InputError(f"unknown preset {name!r}")


def preset_names() -> list[str]:
    return ["SL<n>", "PGL<n>", "GL<n>", "Sp4", "SO5",
            "A<r>[-sc|-adjoint]", "B<r>", "C<r>", "D<r>", "E6", "F4", "G2"]


# -- explicit data -----------------------------------------------------------


def _build_explicit(spec: dict, name="custom") -> RootDatum:
    fmt = spec.get("format", DATUM_FORMAT)
    if fmt != DATUM_FORMAT:
        raise InputError(f"unsupported datum format {fmt!r}")
    try:
        rank = int(spec["rank"])
        roots = [tuple(int(x) for x in r) for r in spec["roots"]]
        coroots = [tuple(int(x) for x in r) for r in spec["coroots"]]
        simple = [int(i) for i in spec["simple"]]
        basis = [tuple(int(x) for x in r) for r in spec.get("lattice_basis",
                                                            identity_matrix(rank))]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed datum description: {exc}") from exc
    if len(roots) != len(coroots):
        raise InputError("roots and coroots must be in bijection")
    if any(len(a) != rank for a in roots) or any(len(b) != rank for b in coroots):
        raise InputError("rank mismatch in root data")
    if len(basis) != rank or any(len(r) != rank for r in basis):
        raise InputError("lattice basis must be a square matrix of the ambient rank")
    if fraction_rank(basis) != rank:
        raise InputError("lattice basis is not full rank")

    # normalize: rewrite everything in coordinates of the declared lattice basis
    binv = mat_fraction_inverse(basis)

    def to_lattice_coords(v):
        out = tuple(sum(Fraction(v[i]) * binv[i][j] for i in range(rank))
                    for j in range(rank))
        if any(x.denominator != 1 for x in out):
            raise InputError("lattice does not contain the coroot lattice")
        return tuple(int(x) for x in out)

    new_coroots = [to_lattice_coords(b) for b in coroots]
    new_roots = [tuple(sum(basis[i][j] * a[j] for j in range(rank)) for i in range(rank))
                 for a in roots]

    simple_roots = [new_roots[i] for i in simple]
    simple_coroots = [new_coroots[i] for i in simple]
    datum = _build_from_simples(name, rank, simple_roots, simple_coroots)
    if set(datum.roots) != set(new_roots):
        raise InputError("declared roots are not the reflection closure of the simple roots")
    pair_given = set(zip(new_roots, new_coroots))
    pair_built = set(zip(datum.roots, datum.coroots))
    if pair_given != pair_built:
        raise InputError("declared coroots disagree with the generated root system")
    return datum


def build_root_datum(spec) -> RootDatum:
    """Construct a datum from a preset name or an explicit description dict.

    >>> build_root_datum("SL2").rank
    1
    """
    if isinstance(spec, str):
        return _resolve_preset(spec)
    if isinstance(spec, dict):
        return _build_explicit(spec)
    raise InputError("spec must be a preset name or a datum description dict")


def load_root_datum(path) -> RootDatum:
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    return _build_explicit(spec, name=str(path))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
