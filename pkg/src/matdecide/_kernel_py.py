"""Pure-Python kernels. Same contracts as the compiled module matdecide._ck;
which one is active is decided once in matdecide._kernel.

Letters are nonzero signed ints: +i is generator i, -i its inverse, and 0 is
reserved for the empty label on normalized automaton edges.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence (cancel adjacent x, -x pairs)."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def concat_reduce_letters(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Reduced concatenation of two already-reduced letter sequences.

    Cancellation can only happen at the seam, so this is O(cancelled length).
    """
    i = len(u) - 1
    j = 0
    while i >= 0 and j < len(v) and u[i] == -v[j]:
        i -= 1
        j += 1
    return tuple(u[: i + 1]) + tuple(v[j:])


def _closure_rows(n_states: int, edges: Sequence[tuple[int, int, int]]) -> list[set[int]]:
    fwd: list[set[int]] = [set() for _ in range(n_states)]
    bwd: list[set[int]] = [set() for _ in range(n_states)]
    in_by_dst: list[list[tuple[int, int]]] = [[] for _ in range(n_states)]  # dst -> [(letter, src)]
    out_by: dict[tuple[int, int], list[int]] = {}  # (src, letter) -> [dst]
    work: deque[tuple[int, int]] = deque()

    def add(p: int, q: int) -> None:
        if q not in fwd[p]:
            fwd[p].add(q)
            bwd[q].add(p)
            work.append((p, q))

    for src, letter, dst in edges:
        if letter == 0:
            add(src, dst)
        else:
            in_by_dst[dst].append((letter, src))
            out_by.setdefault((src, letter), []).append(dst)
    for p in range(n_states):
        add(p, p)

    while work:
        p, q = work.popleft()
        for letter, u in in_by_dst[p]:
            for v in out_by.get((q, -letter), ()):
                add(u, v)
        for r in tuple(fwd[q]):
            add(p, r)
        for o in tuple(bwd[p]):
            add(o, q)

    return fwd


def dyck_closure(n_states: int, edges: Sequence[tuple[int, int, int]]) -> set[tuple[int, int]]:
    """Least relation R on states closed under:

      R(p,p); R(p,q) for every empty-label edge p->q; transitivity; and the
      wrap rule: edges p -x-> p', q' -(-x)-> q with R(p',q') give R(p,q).

    R(p,q) says q is reachable from p along a path whose letters freely reduce
    to the empty word. Edges are (src, letter, dst) with letter 0 meaning the
    empty label. The worklist fixpoint adds each pair once, so it terminates
    after at most n_states**2 additions.
    """
    fwd = _closure_rows(n_states, edges)
    return {(p, q) for p in range(n_states) for q in fwd[p]}


def dyck_nonempty(
    n_states: int,
    edges: Sequence[tuple[int, int, int]],
    initial: int,
    accepting: Sequence[int],
) -> bool:
    """True iff some accepting state is identity-reachable from the initial one."""
    targets = set(accepting)
    if not targets:
        return False
    fwd = _closure_rows(n_states, edges)
    return not targets.isdisjoint(fwd[initial])
