"""The Sanov subgroup: a concrete free rank-2 subgroup of finite index in
GL(2,Z), with exact membership/factorization and Schreier coset rewriting.

The subgroup is generated by [[1,2],[0,1]] and [[1,0],[2,1]]; it is free of
rank 2 and consists of exactly those determinant-1 matrices congruent to I
mod 2 whose continued-fraction peeling (below) terminates at +I. Its index in
GL(2,Z) is 24 = [GL:SL] * [SL:Gamma(2)] * [Gamma(2):Sanov] = 2 * 6 * 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from matdecide.matrix import IntMatrix
from matdecide.words import FreeWord

GEN_A = IntMatrix([[1, 2], [0, 1]])
GEN_B = IntMatrix([[1, 0], [2, 1]])
GEN_A_INV = IntMatrix([[1, -2], [0, 1]])
GEN_B_INV = IntMatrix([[1, 0], [-2, 1]])

# Generating set of GL(2,Z) used for the coset BFS: S and T generate SL(2,Z),
# J adjoins determinant -1.
GL2_S = IntMatrix([[0, -1], [1, 0]])
GL2_T = IntMatrix([[1, 1], [0, 1]])
GL2_J = IntMatrix([[1, 0], [0, -1]])

_COSET_SAFETY_CAP = 256


def _a_power(k: int) -> IntMatrix:
    return IntMatrix([[1, 2 * k], [0, 1]])


def _b_power(k: int) -> IntMatrix:
    return IntMatrix([[1, 0], [2 * k, 1]])


def eval_word(w: FreeWord) -> IntMatrix:
    """Interpret a rank-2 word as a product of the subgroup generators."""
    if w.rank != 2:
        raise ValueError(f"expected a rank-2 word, got rank {w.rank}")
    table = {1: GEN_A, -1: GEN_A_INV, 2: GEN_B, -2: GEN_B_INV}
    out = IntMatrix.identity(2)
    for x in w.letters:
        out = out * table[x]
    return out


def _nearest(p: int, q: int) -> int:
    # round p/q to the nearest integer; callers guarantee p odd, q even,
    # so p/q is never a half-integer and no tie-break is needed
    if q < 0:
        p, q = -p, -q
    n, r = divmod(p, q)
    if 2 * r > q:
        return n + 1
    if 2 * r < q:
        return n
    raise AssertionError("tie in nearest-integer rounding; parity invariant broken")


def factor_in_sanov(m: IntMatrix) -> FreeWord | None:
    """Unique reduced word w with eval_word(w) == m, or None if m is outside
    the subgroup.

    Peeling: membership requires det 1 and m = I mod 2, which makes the first
    column (a, c) have a odd and c even. While c != 0, strip the generator
    power that shrinks the larger of |a|, |c|: left-multiplying by an inverse
    power of [[1,2],[0,1]] replaces a by a - 2kc, the other generator replaces
    c by c - 2ka; nearest-integer k makes the new value strictly smaller than
    min(|a|,|c|) (no ties: odd vs even). Once c == 0 the remainder is
    +-[[1,b],[0,1]]; the + sign finishes with a power of the first generator,
    the - sign certifies non-membership (-I is not in the subgroup).
    """
    if m.n != 2:
        raise ValueError(f"expected a 2x2 matrix, got {m.n}x{m.n}")
    if m.det() != 1:
        return None
    e = m.entries
    if (e[0][0] & 1, e[0][1] & 1, e[1][0] & 1, e[1][1] & 1) != (1, 0, 0, 1):
        return None

    letters: list[int] = []
    cur = m
    while True:
        a = cur.entries[0][0]
        c = cur.entries[1][0]
        if c == 0:
            if a != 1:
                return None  # remainder is -[[1,*],[0,1]]
            b = cur.entries[0][1]
            k = b // 2
            letters.extend([1] * k if k >= 0 else [-1] * (-k))
            return FreeWord(letters, rank=2)
        if abs(a) > abs(c):
            k = _nearest(a, 2 * c)
            letters.extend([1] * k if k >= 0 else [-1] * (-k))
            cur = _a_power(-k) * cur
        else:
            k = _nearest(c, 2 * a)
            letters.extend([2] * k if k >= 0 else [-2] * (-k))
            cur = _b_power(-k) * cur


@dataclass(frozen=True)
class CosetTable:
    """Right-coset representatives of the Sanov subgroup in GL(2,Z).

    reps[0] is the identity; matrices g, h lie in the same right coset iff
    g * h^-1 factors in the subgroup.
    """

    reps: tuple[IntMatrix, ...]
    gl2_generators: tuple[IntMatrix, ...]
    rep_invs: tuple[IntMatrix, ...] = field(repr=False, default=())

    def __post_init__(self):
        if not self.rep_invs:
            object.__setattr__(
                self, "rep_invs", tuple(r.inverse_unimodular() for r in self.reps)
            )

    @property
    def size(self) -> int:
        return len(self.reps)


def coset_index(table: CosetTable, m: IntMatrix) -> int:
    """Index of the right coset containing m (m must be unimodular)."""
    for c, rep_inv in enumerate(table.rep_invs):
        if factor_in_sanov(m * rep_inv) is not None:
            return c
    raise ValueError("matrix lies in no coset; is it unimodular?")


def build_coset_table() -> CosetTable:
    """BFS closure of the right-coset action; closes at exactly 24 cosets."""
    gens = (GL2_S, GL2_T, GL2_J)
    reps = [IntMatrix.identity(2)]
    rep_invs = [IntMatrix.identity(2)]
    frontier = [0]
    while frontier:
        next_frontier = []
        for c in frontier:
            for g in gens:
                cand = reps[c] * g
                if any(
                    factor_in_sanov(cand * inv) is not None for inv in rep_invs
                ):
                    continue
                reps.append(cand)
                rep_invs.append(cand.inverse_unimodular())
                next_frontier.append(len(reps) - 1)
                if len(reps) > _COSET_SAFETY_CAP:
                    raise RuntimeError(
                        "coset closure exceeded the safety cap; "
                        "the membership test must be broken"
                    )
        frontier = next_frontier
    return CosetTable(reps=tuple(reps), gl2_generators=gens, rep_invs=tuple(rep_invs))


@lru_cache(maxsize=1)
def default_coset_table() -> CosetTable:
    """Shared table for the decision pipeline (immutable, safe to cache)."""
    return build_coset_table()


def schreier_rewrite(table: CosetTable, c: int, g: IntMatrix) -> tuple[int, FreeWord]:
    """Rewrite reps[c] * g as (subgroup word) * reps[c'], returning (c', word).

    g must be unimodular; exactly one coset satisfies the defining equation,
    found by scanning all candidates (labels are arbitrary unimodular
    matrices, so there is no generator-indexed action to consult; the scan's
    failed factorizations reject cheaply on determinant/parity).
    """
    if not g.is_unimodular():
        raise ValueError("rewrite requires a unimodular matrix")
    moved = table.reps[c] * g
    for c2, rep_inv in enumerate(table.rep_invs):
        w = factor_in_sanov(moved * rep_inv)
        if w is not None:
            return c2, w
    raise RuntimeError("no coset matched a unimodular matrix; table is inconsistent")
