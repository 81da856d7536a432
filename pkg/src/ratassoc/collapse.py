"""Elementary-collapse machinery and the certified collapse of the
noncrossing model onto the lattice-path model.

A pair (G, F') with F' one smaller than G is free when G is the only face
properly containing F'; removing both is an elementary collapse.  In a
downward-closed family, uniqueness of the proper superface is equivalent
to uniqueness of the one-bigger superface: any strictly larger superface
would contribute a second cofacet by closure.  The engine checks freeness
through that cofacet test at every single step rather than trusting the
structural results that imply it.

Batches come from cone vertices.  When c extends every face containing F
to another face, the faces containing F pair up as (F', F' + {c}); taking
pairs largest first, each pair is free at its turn, and the batch realizes
the deletion of F.  The full schedule walks the obstruction-graph edges in
descending order; for the edge {i-k, j-k} it first clears the crossing
triples {i-k, s-k, j-k} (cone vertex i-s) and then the edge itself (cone
vertex i-j).  The terminal complex must equal the lattice-path model
exactly, face set for face set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .complexes import (
    SimplicialComplex,
    build_ass,
    build_hat_ass,
    compatibility_masks,
    face_to_lists,
)
from .errors import (
    InvariantViolationError,
    NotAFaceError,
    NotConeVertexError,
    NotPerfectMatchingError,
    ScheduleFailedError,
)
from .obstruction import (
    ObstructionGraph,
    build_obstruction_graph,
    crossing_indices,
    half_wedge_completion,
    wedge_completion,
)
from .polygon import Diagonal, all_admissible_diagonals, check_slope_pair


@dataclass(frozen=True)
class FreePair:
    """One elementary collapse: the facet and its free codimension-1 face."""

    facet: frozenset[Diagonal]
    subface: frozenset[Diagonal]


@dataclass(frozen=True)
class StageRecord:
    """One cone-vertex batch of the schedule.

    ``r`` is the 1-based edge index in the ascending edge order (stages run
    r = N down to 1); ``q`` counts the crossing-face batches 1..p, with
    q = p+1 the closing batch for the edge itself; ``target`` is the face
    whose containing faces the batch removes.
    """

    r: int
    q: int
    cone: Diagonal
    target: frozenset[Diagonal]
    n_steps: int


def _bits(mask: int) -> Iterator[int]:
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit


def _bit_positions(mask: int) -> tuple[int, ...]:
    return tuple(b.bit_length() - 1 for b in _bits(mask))


class CollapseCertificate:
    """Ordered free pairs realizing the collapse, re-checkable offline."""

    __slots__ = ("a", "b", "ground", "_bit", "mask_steps", "stages")

    def __init__(
        self,
        a: int,
        b: int,
        ground: tuple[Diagonal, ...],
        mask_steps: list[tuple[int, int, int]],
        stages: tuple[StageRecord, ...],
    ):
        self.a = a
        self.b = b
        self.ground = ground
        self._bit = {d: 1 << i for i, d in enumerate(ground)}
        self.mask_steps = mask_steps  # (facet mask, subface mask, stage index)
        self.stages = stages

    @property
    def n_steps(self) -> int:
        return len(self.mask_steps)

    def _face_of(self, mask: int) -> frozenset[Diagonal]:
        return frozenset(self.ground[p] for p in _bit_positions(mask))

    @property
    def steps(self) -> list[FreePair]:
        return [
            FreePair(self._face_of(f), self._face_of(s)) for f, s, _ in self.mask_steps
        ]

    def to_json(self) -> dict:
        steps = []
        for fmask, smask, stage_idx in self.mask_steps:
            stage = self.stages[stage_idx]
            steps.append(
                {
                    "facet": face_to_lists(self._face_of(fmask)),
                    "subface": face_to_lists(self._face_of(smask)),
                    "stage": {
                        "r": stage.r,
                        "q": stage.q,
                        "cone": [stage.cone.i, stage.cone.j],
                    },
                }
            )
        return {"schema": 1, "a": self.a, "b": self.b, "steps": steps}

    @classmethod
    def from_json(cls, doc: dict) -> "CollapseCertificate":
        a, b = doc["a"], doc["b"]
        check_slope_pair(a, b)
        ground = all_admissible_diagonals(a, b)
        bit = {d: 1 << i for i, d in enumerate(ground)}

        def mask_of(pairs) -> int:
            m = 0
            for i, j in pairs:
                m |= bit[Diagonal(i, j, b)]
            return m

        mask_steps: list[tuple[int, int, int]] = []
        raw_stages: list[tuple[int, int, Diagonal]] = []
        by_key: dict[tuple[int, int, int, int], int] = {}
        counts: dict[int, int] = {}
        last_subface: dict[int, int] = {}
        for step in doc["steps"]:
            st = step["stage"]
            cone = Diagonal(st["cone"][0], st["cone"][1], b)
            key = (st["r"], st["q"], cone.i, cone.j)
            if key not in by_key:
                by_key[key] = len(raw_stages)
                raw_stages.append((st["r"], st["q"], cone))
            idx = by_key[key]
            smask = mask_of(step["subface"])
            counts[idx] = counts.get(idx, 0) + 1
            # the batch removes pairs largest first, so its last subface is
            # the batch target itself
            last_subface[idx] = smask
            mask_steps.append((mask_of(step["facet"]), smask, idx))
        stages = tuple(
            StageRecord(
                r,
                q,
                cone,
                frozenset(ground[p] for p in _bit_positions(last_subface[idx])),
                counts[idx],
            )
            for idx, (r, q, cone) in enumerate(raw_stages)
        )
        return cls(a, b, ground, mask_steps, stages)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CollapseCertificate":
        return cls.from_json(json.loads(text))


# -- engine ----------------------------------------------------------------


def _remove_face(
    mask: int,
    masks: set[int],
    pool: set[int] | None,
    index: dict[int, set[int]] | None,
) -> None:
    masks.remove(mask)
    if pool is not None:
        pool.discard(mask)
    if index is not None:
        for bit in _bits(mask):
            bucket = index.get(bit)
            if bucket is not None:
                bucket.discard(mask)


def _cone_batch(
    masks: set[int],
    pool: set[int] | None,
    face_mask: int,
    cone_bit: int,
    n_ground: int,
    compat: list[int] | None,
    index: dict[int, set[int]] | None,
    out: list[tuple[int, int, int]],
    stage_idx: int,
) -> int:
    """Collapse away every face containing ``face_mask`` via the cone bit.

    ``pool`` must contain every face of ``masks`` containing ``face_mask``
    (pass None to scan all of ``masks``).  The cone condition is verified
    up front; each emitted pair is verified free at its turn through the
    cofacet test.  Returns the number of pairs emitted.
    """
    if face_mask not in masks:
        raise NotAFaceError(f"face {face_mask:#x} is not in the complex")
    if face_mask & cone_bit:
        raise NotConeVertexError("cone vertex already belongs to the face")
    source = masks if pool is None else pool
    delta = [m for m in source if m & face_mask == face_mask]
    for m in delta:
        if not m & cone_bit and (m | cone_bit) not in masks:
            raise NotConeVertexError(
                f"cone condition fails: face {m:#x} has no extension", witness=m
            )
    smaller = [m for m in delta if not m & cone_bit]
    if 2 * len(smaller) != len(delta):
        raise InvariantViolationError("cone pairing does not partition the star")
    smaller.sort(key=lambda m: (-m.bit_count(), _bit_positions(m | cone_bit)))
    all_bits = (1 << n_ground) - 1
    for m in smaller:
        facet = m | cone_bit
        if compat is None:
            cand = all_bits & ~m
        else:
            cand = all_bits
            for pos in _bit_positions(m):
                cand &= compat[pos]
            cand &= ~m
        for bit in _bits(cand):
            other = m | bit
            if other != facet and other in masks:
                raise InvariantViolationError(
                    f"pair ({facet:#x}, {m:#x}) is not free: extra cofacet {other:#x}"
                )
        _remove_face(facet, masks, pool, index)
        _remove_face(m, masks, pool, index)
        out.append((facet, m, stage_idx))
    return len(smaller)


def cone_vertex_collapse(
    cpx: SimplicialComplex, face: Iterable[Diagonal], cone: Diagonal
) -> tuple[list[FreePair], SimplicialComplex]:
    """Collapse ``cpx`` onto the deletion of ``face`` using ``cone``.

    The cone condition (every face containing ``face`` extends by ``cone``
    inside the complex) is verified, not assumed.  Returns the emitted free
    pairs, largest faces first, and the resulting complex.
    """
    try:
        face_mask = cpx._mask_of(face)
        cone_bit = cpx._bit[cone]
    except KeyError as exc:
        raise NotAFaceError(f"unknown diagonal: {exc}") from exc
    if face_mask not in cpx.mask_set:
        raise NotAFaceError(f"{sorted(d.text() for d in face)} is not a face")
    masks = cpx.copy_mask_set()
    raw: list[tuple[int, int, int]] = []
    _cone_batch(masks, None, face_mask, cone_bit, len(cpx.ground), None, None, raw, 0)
    result = SimplicialComplex._trusted(cpx.ground, cpx._bit, masks, cpx.a, cpx.b)
    pairs = [FreePair(cpx._face_of(f), cpx._face_of(s)) for f, s, _ in raw]
    return pairs, result


def collapse_schedule(
    a: int,
    b: int,
    *,
    hat: SimplicialComplex | None = None,
    ass: SimplicialComplex | None = None,
    graph: ObstructionGraph | None = None,
) -> CollapseCertificate:
    """Generate the full collapse certificate for the pair (a, b).

    Obstruction edges are processed strictly in descending edge order; for
    each edge, crossing triples are cleared first (in increasing index
    order), then the edge itself.  The terminal face set must equal the
    lattice-path model exactly or ScheduleFailedError is raised.
    """
    check_slope_pair(a, b)
    if hat is None:
        hat = build_hat_ass(a, b)
    if ass is None:
        ass = build_ass(a, b)
    if graph is None:
        graph = build_obstruction_graph(a, b)
    ground = hat.ground
    bit = hat._bit
    current = hat.copy_mask_set()
    mask_steps: list[tuple[int, int, int]] = []
    stages: list[StageRecord] = []

    if graph.edges:
        compat = compatibility_masks(ground)
        needed_bits = set()
        for e in graph.edges:
            needed_bits.add(bit[e.lesser])
            needed_bits.add(bit[e.greater])
        index: dict[int, set[int]] = {nb: set() for nb in needed_bits}
        for m in current:
            for nb in _bits(m):
                if nb in index:
                    index[nb].add(m)

        for r in range(len(graph.edges), 0, -1):
            edge = graph.edges[r - 1]
            ik_bit, jk_bit = bit[edge.lesser], bit[edge.greater]
            edge_mask = ik_bit | jk_bit
            pool = index[ik_bit] & index[jk_bit]
            s_list = crossing_indices(edge, graph)
            try:
                for q, s in enumerate(s_list, start=1):
                    cone = half_wedge_completion(edge, s, graph)
                    target_mask = edge_mask | bit[Diagonal(s, edge.apex, b)]
                    n = _cone_batch(
                        current, pool, target_mask, bit[cone],
                        len(ground), compat, index, mask_steps, len(stages),
                    )
                    stages.append(
                        StageRecord(r, q, cone, frozenset((edge.lesser, edge.greater, Diagonal(s, edge.apex, b))), n)
                    )
                cone = wedge_completion(edge)
                n = _cone_batch(
                    current, pool, edge_mask, bit[cone],
                    len(ground), compat, index, mask_steps, len(stages),
                )
                stages.append(
                    StageRecord(r, len(s_list) + 1, cone, edge.pair(), n)
                )
            except (NotConeVertexError, NotAFaceError, InvariantViolationError) as exc:
                raise ScheduleFailedError(
                    f"stage (r={r}) failed: {exc}", r=r, face=getattr(exc, "witness", None)
                ) from exc
            if pool:
                raise ScheduleFailedError(
                    f"stage (r={r}) left {len(pool)} faces containing the edge", r=r
                )

    if current != ass.mask_set:
        raise ScheduleFailedError(
            f"terminal complex has {len(current)} faces, expected {ass.n_faces}"
        )
    return CollapseCertificate(a, b, ground, mask_steps, tuple(stages))


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Replay outcome; ``ok`` requires every step free and terminal equality."""

    ok: bool
    steps_applied: int
    failure_index: int | None
    reason: str | None
    terminal_face_count: int
    target_matched: bool


def verify_certificate(
    start: SimplicialComplex,
    target: SimplicialComplex,
    cert: CollapseCertificate,
    *,
    exhaustive: bool = False,
) -> VerificationReport:
    """Replay a certificate against fresh face sets.

    Each step must remove a pair (facet, subface) with the facet present,
    the subface present and one smaller, and the facet the unique face
    properly containing the subface at that moment.  With ``exhaustive``
    the uniqueness test scans every remaining face; otherwise it scans the
    subface's possible cofacets, equivalent for downward-closed families.
    Shares no state with the schedule generator.
    """
    if start.ground != cert.ground:
        raise ValueError("certificate ground set does not match the start complex")
    masks = start.copy_mask_set()
    n_ground = len(start.ground)
    all_bits = (1 << n_ground) - 1

    def fail(idx: int, reason: str) -> VerificationReport:
        return VerificationReport(
            False, idx, idx, reason, len(masks), masks == target.mask_set
        )

    for idx, (fmask, smask, _) in enumerate(cert.mask_steps):
        if fmask not in masks:
            return fail(idx, "facet missing from current complex")
        if smask not in masks:
            return fail(idx, "subface missing from current complex")
        if smask & fmask != smask or fmask.bit_count() != smask.bit_count() + 1:
            return fail(idx, "subface is not a codimension-1 face of the facet")
        if exhaustive:
            extra = [
                m for m in masks if m != smask and m != fmask and m & smask == smask
            ]
            if extra:
                return fail(idx, "subface has another proper superface")
        else:
            cand = all_bits & ~smask
            ok = True
            for bitv in _bits(cand):
                other = smask | bitv
                if other != fmask and other in masks:
                    ok = False
                    break
            if not ok:
                return fail(idx, "subface has another cofacet")
        masks.remove(fmask)
        masks.remove(smask)

    matched = masks == target.mask_set
    return VerificationReport(
        matched,
        len(cert.mask_steps),
        None if matched else len(cert.mask_steps),
        None if matched else "terminal face set differs from target",
        len(masks),
        matched,
    )


def extract_morse_matching(
    cert: CollapseCertificate,
    hat: SimplicialComplex | None = None,
    ass: SimplicialComplex | None = None,
) -> list[tuple[frozenset[Diagonal], frozenset[Diagonal]]]:
    """The (subface, facet) pairs of the certificate as a perfect matching
    on the faces removed by the collapse.

    Verifies that the pairs cover the difference between the two models
    exactly once each and that matched faces differ by one diagonal.
    """
    if hat is None:
        hat = build_hat_ass(cert.a, cert.b)
    if ass is None:
        ass = build_ass(cert.a, cert.b)
    diff = hat.mask_set - ass.mask_set
    if len(diff) % 2:
        raise NotPerfectMatchingError(f"difference has odd size {len(diff)}")
    seen: set[int] = set()
    out = []
    for fmask, smask, _ in cert.mask_steps:
        if smask & fmask != smask or fmask.bit_count() != smask.bit_count() + 1:
            raise NotPerfectMatchingError(
                "matched faces do not differ by exactly one diagonal",
                witness=cert._face_of(fmask),
            )
        for m in (fmask, smask):
            if m not in diff:
                raise NotPerfectMatchingError(
                    "certificate removes a face outside the difference",
                    witness=cert._face_of(m),
                )
            if m in seen:
                raise NotPerfectMatchingError(
                    "face matched twice", witness=cert._face_of(m)
                )
            seen.add(m)
        out.append((cert._face_of(smask), cert._face_of(fmask)))
    if seen != diff:
        missing = next(iter(diff - seen))
        raise NotPerfectMatchingError(
            "difference face left unmatched", witness=cert._face_of(missing)
        )
    return out
