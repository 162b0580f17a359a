"""Canonical forms, isomorphism testing, automorphism counting, containment.

The canonical form of a tournament is the lexicographically minimal
row-major pair-bit string over all n! vertex relabellings.  Two
tournaments are isomorphic exactly when their canonical forms coincide,
so sets of canonical lines implement exact unlabelled counting.

The search never enumerates all n! orders.  It grows the relabelling one
vertex at a time while maintaining an ordered partition of the remaining
vertices.  Placing vertex v fixes the next row of the string: within each
cell the still-free ordering puts v's in-neighbours (bit 0) before its
out-neighbours (bit 1), which both minimises the row and commits a cell
split.  Rows occupy earlier string positions than anything decided later,
so keeping only the branches that realise the minimal row at each depth
is exact; surviving branches with identical partitions are merged, which
collapses automorphic subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

from .tournament import InfeasibleSizeError, Tournament, line_to_bits

if TYPE_CHECKING:  # pragma: no cover
    from .structures import StructureWitness


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Order-invariant fingerprint: equal forms <=> isomorphic tournaments.

    ``bits`` is exactly the .trn body line of the canonical representative,
    so forms are directly file-serializable.
    """

    n: int
    bits: str

    def to_tournament(self) -> Tournament:
        return Tournament(self.n, line_to_bits(self.bits))


def canonical_form(t: Tournament) -> CanonicalForm:
    return CanonicalForm(t.n, _canon_line(t.n, t.bits))


def is_isomorphic(t1: Tournament, t2: Tournament) -> bool:
    return canonical_form(t1) == canonical_form(t2)


@lru_cache(maxsize=1 << 17)
def _canon_line(n: int, bits: int) -> str:
    out = Tournament(n, bits).out_masks
    if n <= 1:
        return ""
    full = (1 << n) - 1
    states: set[tuple[int, ...]] = {(full,)}
    pieces: list[str] = []
    for depth in range(n - 1):
        width = n - 1 - depth
        best: int | None = None
        nxt: set[tuple[int, ...]] = set()
        for part in states:
            first = part[0]
            rest = part[1:]
            m = first
            while m:
                vbit = m & -m
                m ^= vbit
                ov = out[vbit.bit_length() - 1]
                row = 0
                cells: list[int] = []
                c0 = first ^ vbit
                scan = (c0, *rest) if c0 else rest
                for cell in scan:
                    op = cell & ov
                    ip = cell ^ op
                    row = (row << cell.bit_count()) | ((1 << op.bit_count()) - 1)
                    if ip:
                        cells.append(ip)
                    if op:
                        cells.append(op)
                if best is None or row < best:
                    best = row
                    nxt = {tuple(cells)}
                elif row == best:
                    nxt.add(tuple(cells))
        states = nxt
        pieces.append(format(best, f"0{width}b"))
    return "".join(pieces)


def _equitable_colors(n: int, out: tuple[int, ...]) -> list[int]:
    """Iterated (colour, multiset of out-neighbour colours) refinement."""
    colors = [out[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            m = out[v]
            neigh = []
            while m:
                b = m & -m
                m ^= b
                neigh.append(colors[b.bit_length() - 1])
            neigh.sort()
            sigs.append((colors[v], tuple(neigh)))
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def automorphism_order(t: Tournament, bound: int = 16) -> int:
    """Number of vertex permutations fixing the tournament.

    Candidate images are restricted to the equitable colour class of each
    vertex; edge consistency with already-placed vertices prunes the rest.
    """
    n = t.n
    if n > bound:
        raise InfeasibleSizeError(
            f"automorphism search limited to n <= {bound} (got n={n})"
        )
    if n <= 1:
        return 1
    out = t.out_masks
    colors = _equitable_colors(n, out)
    candidates = [
        [w for w in range(n) if colors[w] == colors[v]] for v in range(n)
    ]
    img = [0] * n
    count = 0

    def place(v: int, used: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for w in candidates[v]:
            if (used >> w) & 1:
                continue
            ok = True
            for u in range(v):
                if ((out[u] >> v) & 1) != ((out[img[u]] >> w) & 1):
                    ok = False
                    break
            if ok:
                img[v] = w
                place(v + 1, used | (1 << w))

    place(0, 0)
    return count


def contains_induced(t: Tournament, h: Tournament) -> "StructureWitness | None":
    """Find an induced embedding of h in t, or None.

    Returns a witness whose assignment maps pattern vertex q to host
    vertex assignment[q].  Backtracking explores host vertices in
    ascending order with out/in-degree feasibility pruning, so the first
    witness found is the lexicographically minimal assignment vector.
    """
    from .structures import StructureWitness

    k, n = h.n, t.n
    if k > n:
        return None
    tout, hout = t.out_masks, h.out_masks
    tod = [m.bit_count() for m in tout]
    tid = [n - 1 - d for d in tod]
    hod = [m.bit_count() for m in hout]
    hid = [k - 1 - d for d in hod]
    img = [0] * k

    def place(p: int, used: int) -> tuple[int, ...] | None:
        if p == k:
            return tuple(img)
        for w in range(n):
            if (used >> w) & 1:
                continue
            if tod[w] < hod[p] or tid[w] < hid[p]:
                continue
            ok = True
            for q in range(p):
                if ((hout[q] >> p) & 1) != ((tout[img[q]] >> w) & 1):
                    ok = False
                    break
            if ok:
                img[p] = w
                found = place(p + 1, used | (1 << w))
                if found is not None:
                    return found
        return None

    assignment = place(0, 0)
    if assignment is None:
        return None
    return StructureWitness(kind="embedding", assignment=assignment)
