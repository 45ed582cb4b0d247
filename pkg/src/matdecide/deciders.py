"""Top-level decision procedures.

For 2x2 integer matrices, subgroup membership and the semigroup identity
problem are decided exactly through the automaton pipeline: build the
two-state machine, prune non-invertible edges, convert to free-word labels
through the coset table, and test emptiness. For other dimensions only
bounded witness search is offered; absence of a witness at a bound proves
nothing, and callers must treat it as unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from matdecide.automata import (
    build_identity_automaton,
    build_membership_automaton,
    prune_noninvertible,
    to_free_group_automaton,
)
from matdecide.matrix import IntMatrix
from matdecide.pda import free_automaton_emptiness, from_free_automaton, pda_emptiness
from matdecide.sanov import default_coset_table


@dataclass(frozen=True)
class Decision:
    answer: bool
    reason: str


def _require_2x2(matrices: Sequence[IntMatrix]) -> None:
    for m in matrices:
        if m.n != 2:
            raise ValueError(f"the exact decision procedure requires 2x2 matrices, got {m.n}x{m.n}")


def _pipeline_nonempty(machine, checked: bool) -> bool:
    pruned = prune_noninvertible(machine)
    word_aut = to_free_group_automaton(pruned, default_coset_table())
    empty = free_automaton_emptiness(word_aut)
    if checked:
        via_pda = pda_emptiness(from_free_automaton(word_aut))
        if via_pda != empty:
            raise RuntimeError(
                "emptiness engines disagree "
                f"(saturation={empty}, pushdown={via_pda}); this is a bug"
            )
    return not empty


def decide_subgroup_membership(
    y: IntMatrix, gens: Sequence[IntMatrix], *, checked: bool = False
) -> Decision:
    """Does y belong to the group generated by gens (inverses allowed)?

    Generators that are not unimodular are dropped: a group of integer
    matrices whose identity is I contains only determinant +-1 elements, so
    they cannot take part in any group element. The remaining generators are
    closed under exact inverses before building the membership machine, since
    the machine multiplies only by the listed elements and membership in a
    group allows inverse factors.
    """
    _require_2x2([y, *gens])
    if not y.is_unimodular():
        return Decision(
            False,
            f"determinant {y.det()} is not +-1; a group of integer matrices "
            "containing the identity has only unimodular elements",
        )
    invertible = [g for g in gens if g.is_unimodular()]
    if not invertible:
        answer = y.is_identity()
        return Decision(answer, "no unimodular generators remain; the group is trivial")
    symmetrized = list(
        dict.fromkeys(invertible + [g.inverse_unimodular() for g in invertible])
    )
    machine = build_membership_automaton(y, symmetrized)
    answer = _pipeline_nonempty(machine, checked)
    return Decision(answer, "decided by coset conversion and emptiness of the membership machine")


def subgroup_membership_gl2(
    y: IntMatrix, gens: Sequence[IntMatrix], *, checked: bool = False
) -> bool:
    return decide_subgroup_membership(y, gens, checked=checked).answer


def decide_identity_in_semigroup(
    gens: Sequence[IntMatrix], *, checked: bool = False
) -> Decision:
    """Does some product of one or more generators equal the identity?

    This is semigroup membership of I: no inverses are added. Non-unimodular
    generators cannot occur in such a product (determinants multiply to 1, so
    every factor has determinant +-1) and are dropped.
    """
    if not gens:
        raise ValueError("generator list must be nonempty")
    _require_2x2(gens)
    invertible = [g for g in gens if g.is_unimodular()]
    if not invertible:
        return Decision(False, "no unimodular generators; no product can reach determinant 1")
    machine = build_identity_automaton(invertible)
    answer = _pipeline_nonempty(machine, checked)
    return Decision(answer, "decided by coset conversion and emptiness of the identity machine")


def identity_in_semigroup_gl2(gens: Sequence[IntMatrix], *, checked: bool = False) -> bool:
    return decide_identity_in_semigroup(gens, checked=checked).answer


def membership_bounded(
    y: IntMatrix, gens: Sequence[IntMatrix], max_len: int
) -> Optional[tuple[int, ...]]:
    """Search products of 1..max_len generators for one equal to y.

    Returns the witness index sequence (1-based), shortest first and
    lexicographically least among the shortest, or None when the bound is
    exhausted. None is not a proof of non-membership.
    """
    if not gens:
        raise ValueError("generator list must be nonempty")
    dims = {m.n for m in [y, *gens]}
    if len(dims) != 1:
        raise ValueError(f"matrices of mixed dimensions: {sorted(dims)}")
    seen: set[IntMatrix] = set()
    layer: list[tuple[IntMatrix, tuple[int, ...]]] = [(IntMatrix.identity(y.n), ())]
    for _ in range(max_len):
        next_layer: list[tuple[IntMatrix, tuple[int, ...]]] = []
        for prod, seq in layer:
            for i, g in enumerate(gens, start=1):
                cand = prod * g
                if cand == y:
                    return seq + (i,)
                if cand not in seen:
                    seen.add(cand)
                    next_layer.append((cand, seq + (i,)))
        layer = next_layer
    return None


def identity_in_semigroup_bounded(
    gens: Sequence[IntMatrix], max_len: int
) -> Optional[tuple[int, ...]]:
    """Bounded witness search for the identity problem in any dimension."""
    if not gens:
        raise ValueError("generator list must be nonempty")
    n = gens[0].n
    return membership_bounded(IntMatrix.identity(n), gens, max_len)
