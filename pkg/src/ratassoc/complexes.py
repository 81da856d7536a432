"""Simplicial complexes over diagonal ground sets, and the two rational
associahedron models.

Faces are stored as integer bitmasks over a canonically ordered ground set
(diagonals sorted by (j, i)), so membership, subset tests, and deletions
are single integer operations.  The empty face (mask 0) is always present.

``build_hat_ass`` materializes the noncrossing model: every mutually
noncrossing set of admissible diagonals is a face.  ``build_ass``
materializes the lattice-path model: facets are the laser sets of Dyck
paths, closed downward.  The second is a subcomplex of the first, pure of
dimension a-2, with Kirkman/Narayana face counts; the first is flag by
construction but in general not pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple

from .errors import CapExceededError, InvariantViolationError, NonIntegralError
from .lattice import enumerate_dyck_paths, facet_of
from .polygon import (
    Diagonal,
    all_admissible_diagonals,
    check_slope_pair,
    crosses,
)

DEFAULT_FACE_CAP = 10**7
DEFAULT_MAX_B = 14

Face = frozenset  # faces travel as frozensets of Diagonal


def face_key(face: Iterable[Diagonal]) -> tuple[tuple[int, int], ...]:
    """Canonical encoding of a face: its diagonals' (j, i) keys, sorted."""
    return tuple(sorted(d.key() for d in face))


def face_text(face: Iterable[Diagonal]) -> str:
    """Text form like ``"0-4,2-4"`` in canonical order."""
    return ",".join(f"{i}-{j}" for j, i in face_key(face))


def parse_face(text: str, b: int) -> frozenset[Diagonal]:
    """Parse the text form produced by :func:`face_text`; "" is the empty face."""
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(Diagonal.parse(part.strip(), b) for part in text.split(","))


def face_to_lists(face: Iterable[Diagonal]) -> list[list[int]]:
    """JSON form: [[i, j], ...] in canonical order."""
    return [[i, j] for j, i in face_key(face)]


class SimplicialComplex:
    """Explicit face family over an ordered ground set of diagonals.

    The ground set is canonically sorted at construction; every face is a
    bitmask over that order.  Instances behave as immutable values; the
    collapse machinery works on private copies of the mask set.
    """

    __slots__ = ("ground", "a", "b", "_bit", "_masks", "_facet_masks")

    def __init__(
        self,
        ground: Iterable[Diagonal],
        faces: Iterable[Iterable[Diagonal]],
        a: int | None = None,
        b: int | None = None,
    ):
        ground_sorted = tuple(sorted(set(ground), key=lambda d: d.key()))
        self.ground = ground_sorted
        self.a = a
        self.b = b if b is not None else (ground_sorted[0].b if ground_sorted else None)
        self._bit = {d: 1 << i for i, d in enumerate(ground_sorted)}
        masks = set()
        for face in faces:
            masks.add(self._mask_of(face))
        self._masks = _downward_closure(masks)
        self._facet_masks: list[int] | None = None

    @classmethod
    def _trusted(
        cls,
        ground: tuple[Diagonal, ...],
        bit: dict[Diagonal, int],
        masks: set[int],
        a: int | None,
        b: int | None,
    ) -> "SimplicialComplex":
        """Internal constructor for mask sets already closed downward."""
        self = object.__new__(cls)
        self.ground = ground
        self.a = a
        self.b = b
        self._bit = bit
        self._masks = masks
        self._facet_masks = None
        return self

    def _mask_of(self, face: Iterable[Diagonal]) -> int:
        m = 0
        for d in face:
            m |= self._bit[d]
        return m

    def _face_of(self, mask: int) -> frozenset[Diagonal]:
        out = []
        while mask:
            bit = mask & -mask
            out.append(self.ground[bit.bit_length() - 1])
            mask ^= bit
        return frozenset(out)

    # -- queries ---------------------------------------------------------

    @property
    def n_faces(self) -> int:
        return len(self._masks)

    @property
    def dim(self) -> int:
        """Max face dimension; -1 when only the empty face is present."""
        if not self._masks:
            return -2  # void complex, reachable only by collapsing everything
        return max(m.bit_count() for m in self._masks) - 1

    def has_face(self, face: Iterable[Diagonal]) -> bool:
        try:
            return self._mask_of(face) in self._masks
        except KeyError:
            return False

    __contains__ = has_face

    def faces(self) -> Iterator[frozenset[Diagonal]]:
        """All faces, empty face included, in mask order."""
        for m in sorted(self._masks):
            yield self._face_of(m)

    @property
    def mask_set(self) -> set[int]:
        """The internal mask set.  Callers must not mutate it."""
        return self._masks

    def copy_mask_set(self) -> set[int]:
        return set(self._masks)

    def _compute_facet_masks(self) -> list[int]:
        if self._facet_masks is None:
            full = (1 << len(self.ground)) - 1
            facets = []
            for m in self._masks:
                rest = full & ~m
                maximal = True
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    if (m | bit) in self._masks:
                        maximal = False
                        break
                if maximal:
                    facets.append(m)
            facets.sort(key=lambda m: (m.bit_count(), m))
            self._facet_masks = facets
        return self._facet_masks

    def facets(self) -> list[frozenset[Diagonal]]:
        """Inclusion-maximal faces, smallest dimension first."""
        return [self._face_of(m) for m in self._compute_facet_masks()]

    def f_vector_counts(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) by direct counting."""
        counts = [0] * (self.dim + 2)
        for m in self._masks:
            counts[m.bit_count()] += 1
        return tuple(counts)

    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self._compute_facet_masks()}
        return len(sizes) <= 1

    # -- constructions ---------------------------------------------------

    def deletion(self, avoid: Iterable[Iterable[Diagonal]]) -> "SimplicialComplex":
        """Faces containing no member of ``avoid`` (deletion of a face set)."""
        avoid_masks = [self._mask_of(f) for f in avoid]
        kept = {
            m for m in self._masks if not any(m & am == am for am in avoid_masks)
        }
        return SimplicialComplex._trusted(self.ground, self._bit, kept, self.a, self.b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.ground == other.ground and self._masks == other._masks

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        tag = f"a={self.a}, b={self.b}, " if self.a is not None else ""
        return f"SimplicialComplex({tag}{len(self.ground)} vertices, {self.n_faces} faces)"

    # -- serialization ---------------------------------------------------

    def to_json(self, include_faces: bool = False) -> dict:
        doc = {
            "schema": 1,
            "a": self.a,
            "b": self.b,
            "ground": [[d.i, d.j] for d in self.ground],
            "facets": [face_to_lists(f) for f in self.facets()],
        }
        if include_faces:
            doc["faces"] = [face_to_lists(f) for f in self.faces()]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "SimplicialComplex":
        b = doc["b"]
        ground = [Diagonal(i, j, b) for i, j in doc["ground"]]
        source = doc.get("faces") or doc["facets"]
        faces = [[Diagonal(i, j, b) for i, j in face] for face in source]
        return cls(ground, faces, a=doc.get("a"), b=b)


def _downward_closure(masks: set[int]) -> set[int]:
    closed: set[int] = set()
    stack = list(masks)
    while stack:
        m = stack.pop()
        if m in closed:
            continue
        closed.add(m)
        mm = m
        while mm:
            bit = mm & -mm
            mm ^= bit
            sub = m ^ bit
            if sub not in closed:
                stack.append(sub)
    closed.add(0)
    return closed


def deletion(cpx: SimplicialComplex, avoid: Iterable[Iterable[Diagonal]]) -> SimplicialComplex:
    """Module-level alias for :meth:`SimplicialComplex.deletion`."""
    return cpx.deletion(avoid)


# -- builders -------------------------------------------------------------


def compatibility_masks(ground: tuple[Diagonal, ...]) -> list[int]:
    """For each ground index, the bitmask of noncrossing partners."""
    n = len(ground)
    compat = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if not crosses(ground[u], ground[v]):
                compat[u] |= 1 << v
                compat[v] |= 1 << u
    return compat


def build_hat_ass(
    a: int,
    b: int,
    *,
    max_faces: int = DEFAULT_FACE_CAP,
    max_b: int = DEFAULT_MAX_B,
) -> SimplicialComplex:
    """The noncrossing model: all noncrossing sets of admissible diagonals."""
    check_slope_pair(a, b)
    if b > max_b:
        raise CapExceededError(f"b = {b} exceeds the size guard {max_b}")
    ground = all_admissible_diagonals(a, b)
    n = len(ground)
    compat = compatibility_masks(ground)
    masks = {0}
    all_bits = (1 << n) - 1
    stack = [(0, all_bits)]
    while stack:
        mask, cand = stack.pop()
        while cand:
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            child = mask | bit
            masks.add(child)
            if len(masks) > max_faces:
                raise CapExceededError(
                    f"noncrossing family of ({a},{b}) exceeds the face cap {max_faces}"
                )
            # candidates above v keep the DFS duplicate-free
            child_cand = cand & compat[v]
            if child_cand:
                stack.append((child, child_cand))
    bit = {d: 1 << i for i, d in enumerate(ground)}
    return SimplicialComplex._trusted(ground, bit, masks, a, b)


def build_ass(
    a: int,
    b: int,
    *,
    max_faces: int = DEFAULT_FACE_CAP,
    max_b: int = DEFAULT_MAX_B,
    max_words: int = 10**7,
) -> SimplicialComplex:
    """The lattice-path model: downward closure of the Dyck path facets."""
    check_slope_pair(a, b)
    if b > max_b:
        raise CapExceededError(f"b = {b} exceeds the size guard {max_b}")
    predicted = sum(rational_kirkman(a, b, i) for i in range(1, a + 1))
    if predicted > max_faces:
        raise CapExceededError(f"({a},{b}) has {predicted} faces, over the cap {max_faces}")
    ground = all_admissible_diagonals(a, b)
    bit = {d: 1 << i for i, d in enumerate(ground)}
    facet_masks = set()
    for path in enumerate_dyck_paths(a, b, max_words):
        m = 0
        for d in facet_of(path):
            m |= bit[d]
        facet_masks.add(m)
    if len(facet_masks) != rational_catalan(a, b):
        raise InvariantViolationError(
            f"({a},{b}) facets do not biject with Dyck paths: {len(facet_masks)}"
        )
    masks = _downward_closure(facet_masks)
    cpx = SimplicialComplex._trusted(ground, bit, masks, a, b)
    cpx._facet_masks = sorted(facet_masks, key=lambda m: (m.bit_count(), m))
    return cpx


# -- counting -------------------------------------------------------------


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegralError(f"{what}: {num} is not divisible by {den}")
    return q


def rational_catalan(a: int, b: int) -> int:
    """C(a+b, a) / (a+b), the facet count of the lattice-path model."""
    check_slope_pair(a, b)
    return _exact_div(comb(a + b, a), a + b, f"catalan({a},{b})")


def rational_kirkman(a: int, b: int, i: int) -> int:
    """C(a, i) * C(b+i-1, i-1) / a, the number of faces with i diagonals."""
    check_slope_pair(a, b)
    if not 1 <= i <= a:
        raise ValueError(f"need 1 <= i <= a, got i={i}")
    return _exact_div(comb(a, i) * comb(b + i - 1, i - 1), a, f"kirkman({a},{b},{i})")


def rational_narayana(a: int, b: int, i: int) -> int:
    """C(a, i) * C(b-1, i-1) / a, the h-vector entries of the path model."""
    check_slope_pair(a, b)
    if not 1 <= i <= a:
        raise ValueError(f"need 1 <= i <= a, got i={i}")
    return _exact_div(comb(a, i) * comb(b - 1, i - 1), a, f"narayana({a},{b},{i})")


@dataclass(frozen=True)
class FHVector:
    """Face and h-count vectors of a complex of dimension d.

    ``f`` is (f_-1, f_0, ..., f_d) and ``h`` is (h_0, ..., h_{d+1}),
    related by h_k = sum_i (-1)^{k-i} C(d+1-i, k-i) f_{i-1}.  Equivalently
    sum_k h_k t^{D-k} = sum_i f_{i-1} (t-1)^{D-i} with D = d+1, which pins
    the top entry: sum(h) = f_d.
    """

    f: tuple[int, ...]
    h: tuple[int, ...]

    def __post_init__(self):
        cap = len(self.f) - 1
        expect = tuple(
            sum((-1) ** (k - i) * comb(cap - i, k - i) * self.f[i] for i in range(k + 1))
            for k in range(cap + 1)
        )
        if self.h != expect:
            raise InvariantViolationError(f"h-vector {self.h} does not match f-vector {self.f}")
        if sum(self.h) != self.f[-1]:
            raise InvariantViolationError("h-vector top-term consistency failed")

    @classmethod
    def from_f(cls, f: tuple[int, ...]) -> "FHVector":
        cap = len(f) - 1
        h = tuple(
            sum((-1) ** (k - i) * comb(cap - i, k - i) * f[i] for i in range(k + 1))
            for k in range(cap + 1)
        )
        return cls(tuple(f), h)

    @classmethod
    def of(cls, cpx: SimplicialComplex) -> "FHVector":
        return cls.from_f(cpx.f_vector_counts())


def f_vector(cpx: SimplicialComplex) -> FHVector:
    """Face counts by dimension (with the h part alongside)."""
    return FHVector.of(cpx)


def h_vector(cpx: SimplicialComplex) -> FHVector:
    """Alias of :func:`f_vector`; both parts live on the same object."""
    return FHVector.of(cpx)


# -- flagness --------------------------------------------------------------


class FlagReport(NamedTuple):
    is_flag: bool
    witness: frozenset[Diagonal] | None


def is_flag(cpx: SimplicialComplex) -> FlagReport:
    """Search the 1-skeleton's cliques for an empty face.

    A witness is a vertex set, every two of whose members span a face,
    which is itself not a face.  The search walks cliques in index order
    and stops at the first miss, so flag complexes cost O(number of faces).
    """
    n = len(cpx.ground)
    masks = cpx.mask_set
    adj = [0] * n
    for m in masks:
        if m.bit_count() == 2:
            low = m & -m
            u = low.bit_length() - 1
            v = (m ^ low).bit_length() - 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    present = [i for i in range(n) if (1 << i) in masks]
    stack = [(1 << i, adj[i] & ~((1 << (i + 1)) - 1)) for i in present]
    while stack:
        mask, cand = stack.pop()
        while cand:
            bit = cand & -cand
            cand ^= bit
            v = bit.bit_length() - 1
            clique = mask | bit
            if clique.bit_count() >= 3 and clique not in masks:
                return FlagReport(False, cpx._face_of(clique))
            child_cand = cand & adj[v]
            if child_cand:
                stack.append((clique, child_cand))
    return FlagReport(True, None)
