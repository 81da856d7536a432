"""Membership of a face in the lattice-path model, by valley-path search.

Given a noncrossing set F of admissible diagonals, the routine below either
produces the unique Dyck path whose facet contains F and whose every valley
laser lies in F (the valley path of F), or reports that no Dyck path facet
contains F.

The path is grown backward from (b, a) in south and west steps.  Walking
west from column b, whenever the current column x = i carries diagonals
i-j1, ..., i-jr of F (j1 < ... < jr), south steps are added until the laser
diagonals fired from the new column-i lattice points have produced all of
them.  Lasers from successively lower points hit strictly farther east, so
either every required diagonal appears, or the column bottoms out through
the line y = (a/b) x and F is rejected.  The suffix built so far always
covers the column range the lasers can reach, so each laser is well
defined.  The empty face yields the path of a north run followed by an
east run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvariantViolationError, NotAFaceOfHatError
from .lattice import DyckPath, facet_of, laser_diagonal, laser_hit_on_east_steps, valleys
from .polygon import Diagonal, check_slope_pair, crosses, is_admissible


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of the valley-path search.

    Exactly one of ``valley_path`` and ``break_x`` is set: the path when F
    belongs to the lattice-path model, the x-coordinate of the column where
    the search crossed the line when it does not.
    """

    valley_path: DyckPath | None
    break_x: int | None

    @property
    def is_member(self) -> bool:
        return self.valley_path is not None


def _check_hat_face(face: frozenset[Diagonal], a: int, b: int) -> None:
    for d in face:
        if d.b != b:
            raise NotAFaceOfHatError(f"diagonal {d} lives on b={d.b}, not b={b}")
        if not is_admissible(d, a, b):
            raise NotAFaceOfHatError(f"diagonal {d} is not ({a},{b})-admissible")
    members = sorted(face, key=lambda d: d.key())
    for m in range(len(members)):
        for n in range(m + 1, len(members)):
            if crosses(members[m], members[n]):
                raise NotAFaceOfHatError(f"diagonals {members[m]} and {members[n]} cross")


def valley_path(face: Iterable[Diagonal], a: int, b: int) -> MembershipResult:
    """Build the valley path of ``face`` or reject it.

    ``face`` must be a noncrossing set of admissible diagonals (checked).
    On acceptance the result path P satisfies face <= facet_of(P) and every
    valley of P fires a laser whose diagonal is in ``face``; both facts are
    re-verified here before returning.
    """
    check_slope_pair(a, b)
    face = frozenset(face)
    _check_hat_face(face, a, b)

    wanted: dict[int, set[int]] = {}
    for d in face:
        wanted.setdefault(d.i, set()).add(d.j)

    # the backward path: step tokens in reverse order, plus the east steps
    # built so far as (left x, height), newest (westmost) first
    rev_steps: list[str] = []
    east_rev: list[tuple[int, int]] = []
    cy = a

    def fire(x0: int, y0: int) -> int:
        hit = laser_hit_on_east_steps(reversed(east_rev), a, b, x0, y0)
        if hit is None:
            raise InvariantViolationError(f"laser from ({x0},{y0}) escaped the partial path")
        return hit

    for i in range(b, -1, -1):
        needed = set(wanted.get(i, ()))
        while needed:
            cy -= 1
            rev_steps.append("N")
            if cy * b < a * i:
                return MembershipResult(None, i)
            if (i, cy) == (0, 0):
                # no laser fires from the origin; the next south step
                # would cross the line, so this is already a rejection
                return MembershipResult(None, i)
            needed.discard(fire(i, cy))
        if i > 0:
            rev_steps.append("E")
            east_rev.append((i - 1, cy))
        else:
            rev_steps.extend("N" * cy)

    path = DyckPath(a, b, "".join(reversed(rev_steps)))
    got = facet_of(path)
    if not face <= got:
        raise InvariantViolationError(f"valley path {path.word} misses part of {face}")
    for p in valleys(path):
        if laser_diagonal(path, p) not in face:
            raise InvariantViolationError(
                f"valley {p} of {path.word} fires a laser outside {face_text_or_empty(face)}"
            )
    return MembershipResult(path, None)


def face_text_or_empty(face: frozenset[Diagonal]) -> str:
    return "{" + ", ".join(sorted(d.text() for d in face)) + "}"


def is_face_of_ass(face: Iterable[Diagonal], a: int, b: int) -> bool:
    """True when some Dyck path facet contains ``face``."""
    return valley_path(face, a, b).is_member
