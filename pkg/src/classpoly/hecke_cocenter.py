"""Class polynomials of the affine Hecke algebra by memoized reduction.

The Hecke algebra over Z[v, v^-1] has basis T_w with T_w T_w' = T_{ww'} when
lengths add and (T_s - v)(T_s + v^-1) = 0 for simple reflections.  The image
of T_w in the cocenter decomposes over conjugacy classes with Laurent
polynomial coefficients f_{w,O}; this module computes that decomposition by
the reduction recursion:

* if w is of minimal length in its conjugacy class, the decomposition is
  {class(w): 1};
* otherwise some member w' of the length-preserving conjugation orbit of w
  admits a simple reflection s with l(s w' s) = l(w') - 2, and
  f_{w,O} = (v - v^-1) f_{s w', O} + f_{s w' s, O}.

The decomposition is independent of the choice of pivot (w', s); the engine
exposes deterministic pivot rules precisely so that independence can be
checked rather than assumed.  Memoization is keyed by the orbit fingerprint
(the canonical-least orbit member): every orbit member shares one cached
result, which is sound because equal-length conjugates have equal images in
the cocenter (itself a tested invariant).

The memo table tolerates idempotent concurrent inserts, so batch scans may
evaluate different elements from multiple threads against one engine.
"""

from __future__ import annotations

import threading
import zlib
from dataclasses import dataclass, field
from random import Random

from .affine_weyl import AffElt, affine_simple_reflections, encode_element, length
from .conjugacy import conjugation_orbit, find_descent, resolve_class
from .errors import InputError, ResourceLimitError
from .laurent import LaurentPoly
from .root_datum import RootDatum

ENGINE_VERSION = "0.1.0"


def generator_product(s: AffElt, w: AffElt, side: str = "left"):
    """T_s * T_w (or T_w * T_s) as a formal sum [(element, coefficient), ...].

    Single term T_{sw} when the length goes up; the quadratic relation
    contributes (v - v^-1) T_w + T_{sw} when it goes down.
    """
    if side not in ("left", "right"):
        raise InputError("side must be 'left' or 'right'")
    if length(s) != 1:
        raise InputError("generator_product needs a simple reflection")
    sw = s * w if side == "left" else w * s
    if length(sw) > length(w):
        return [(sw, LaurentPoly.one())]
    return [(w, LaurentPoly.z()), (sw, LaurentPoly.one())]


def _parse_pivot(pivot: str):
    if pivot == "canonical":
        return ("canonical", None)
    if pivot == "reversed":
        return ("reversed", None)
    if pivot.startswith("seeded:"):
        try:
            return ("seeded", int(pivot.split(":", 1)[1]))
        except ValueError as exc:
            raise InputError(f"bad pivot spec {pivot!r}") from exc
    raise InputError(f"unknown pivot rule {pivot!r} (canonical|reversed|seeded:N)")


@dataclass
class ClassDecomposition:
    """The map class-identifier -> f_{w,O} for one source element."""

    element_key: str
    datum_hash: str
    terms: dict[str, LaurentPoly] = field(default_factory=dict)

    def items(self):
        return sorted(self.terms.items())

    def to_pairs(self) -> dict[str, list[list[int]]]:
        return {cid: [list(p) for p in poly.to_pairs()] for cid, poly in self.items()}

    @classmethod
    def from_pairs(cls, element_key, datum_hash, pairs) -> "ClassDecomposition":
        return cls(element_key, datum_hash,
                   {cid: LaurentPoly.from_pairs(p) for cid, p in pairs.items()})

    def __eq__(self, other):
        return (isinstance(other, ClassDecomposition)
                and self.datum_hash == other.datum_hash
                and self.terms == other.terms)


class ReductionEngine:
    """Shared-memo evaluator of class polynomials for one datum and pivot rule."""

    def __init__(self, datum: RootDatum, pivot: str = "canonical",
                 max_nodes: int | None = None, cache=None):
        self.datum = datum
        self.pivot = pivot
        self._pivot_kind, self._pivot_seed = _parse_pivot(pivot)
        self.max_nodes = max_nodes
        self.cache = cache
        self._memo: dict[AffElt, dict[str, LaurentPoly]] = {}
        self._nodes = 0
        self._node_lock = threading.Lock()

    # -- pivot selection --------------------------------------------------

    def _choose_descent(self, orbit):
        simples = affine_simple_reflections(self.datum)
        if self._pivot_kind == "canonical":
            return find_descent(orbit)
        if self._pivot_kind == "reversed":
            return find_descent(orbit, simple_order=range(len(simples) - 1, -1, -1))
        # seeded: shuffle both scan orders, deterministically across processes
        seed = zlib.crc32(encode_element(orbit[0]).encode()) ^ self._pivot_seed
        rng = Random(seed)
        members = list(orbit)
        rng.shuffle(members)
        order = list(range(len(simples)))
        rng.shuffle(order)
        return find_descent(orbit, simple_order=order, orbit_order=members)

    # -- evaluation ---------------------------------------------------------

    def _bump_nodes(self):
        with self._node_lock:
            self._nodes += 1
            if self.max_nodes is not None and self._nodes > self.max_nodes:
                raise ResourceLimitError(
                    f"reduction exceeded the configured node limit {self.max_nodes}")

    def _reduce(self, w: AffElt) -> dict[str, LaurentPoly]:
        orbit = conjugation_orbit(w)
        key = orbit[0]
        got = self._memo.get(key)
        if got is not None:
            return got
        self._bump_nodes()
        descent = self._choose_descent(orbit)
        if descent is None:
            cls = resolve_class(self.datum, key)
            result = {cls.class_id: LaurentPoly.one()}
        else:
            member, i = descent
            s = affine_simple_reflections(self.datum)[i]
            shorter = self._reduce(s * member)          # length l(w) - 1
            shortest = self._reduce(s * member * s)     # length l(w) - 2
            z = LaurentPoly.z()
            result = {cid: z * poly for cid, poly in shorter.items()}
            for cid, poly in shortest.items():
                merged = result.get(cid, LaurentPoly.zero()) + poly
                if merged:
                    result[cid] = merged
                else:
                    del result[cid]
        self._memo[key] = result
        return result

    def class_polynomials(self, w: AffElt) -> ClassDecomposition:
        """The full decomposition for w, consulting the persistent cache first."""
        key = encode_element(w)
        if self.cache is not None:
            hit = self.cache.get(self.datum.datum_hash, key)
            if hit is not None:
                return ClassDecomposition.from_pairs(key, self.datum.datum_hash, hit)
        terms = self._reduce(w)
        dec = ClassDecomposition(key, self.datum.datum_hash, dict(terms))
        if self.cache is not None:
            self.cache.put(self.datum.datum_hash, key, dec.to_pairs())
        return dec

    def class_info(self, class_id: str):
        from .conjugacy import class_by_id

        return class_by_id(self.datum, class_id)


def get_engine(datum: RootDatum, pivot: str = "canonical",
               max_nodes: int | None = None, cache=None) -> ReductionEngine:
    """Datum-attached engine registry; one shared memo per (pivot, limits, cache)."""
    reg = getattr(datum, "_engines", None)
    if reg is None:
        reg = datum._engines = {}
    key = (pivot, max_nodes, id(cache) if cache is not None else None)
    engine = reg.get(key)
    if engine is None:
        engine = reg[key] = ReductionEngine(datum, pivot, max_nodes, cache)
    return engine


def class_polynomials(w: AffElt, pivot: str = "canonical",
                      max_nodes: int | None = None, cache=None) -> ClassDecomposition:
    return get_engine(w.datum, pivot, max_nodes, cache).class_polynomials(w)
