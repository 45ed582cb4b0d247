"""Pushdown side of the pipeline: conversion of word-labeled valence automata
to pushdown automata, plus two independent emptiness deciders that serve as
mutual oracles.

The stack alphabet is the signed generator letters, and each letter step pops
exactly when the top is that letter's inverse, pushing otherwise. The stack
therefore always holds the free reduction of the register word, and the
register is the identity iff the stack is empty. (Popping only the letter
itself would block on words like a'a, which reduce to the identity without
ever having pushed a.)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from matdecide import _kernel
from matdecide.automata import ValenceAutomaton, WordLabels

BOTTOM = 0  # stack-bottom marker used by the emptiness saturation


class PdaTransition(NamedTuple):
    src: str
    symbol: Optional[str]  # None is an epsilon move
    guard: str  # "any" | "top_is" | "top_not"
    guard_letter: Optional[int]
    action: str  # "none" | "push" | "pop"
    action_letter: Optional[int]
    dst: str


@dataclass(frozen=True)
class Pda:
    """Pushdown automaton accepting on accept state + empty stack, starting
    from an empty stack."""

    states: tuple[str, ...]
    input_alphabet: tuple[str, ...]
    stack_rank: int  # stack alphabet is the signed letters +-1..+-rank
    transitions: tuple[PdaTransition, ...]
    initial: str
    accepting: frozenset[str]


class _NormEdge(NamedTuple):
    src: str
    symbol: Optional[str]
    letter: int  # 0 is the empty label
    dst: str


def _split_word_edges(v: ValenceAutomaton) -> tuple[list[str], list[_NormEdge]]:
    """Split multi-letter edge labels into chains of single-letter hops.

    A k-letter label needs k-1 fresh intermediate states; the input symbol is
    consumed on the first hop and the rest run on epsilon. Empty labels become
    a single empty hop.
    """
    if not isinstance(v.label_domain, WordLabels):
        raise ValueError("expected an automaton with free-word labels")
    states = list(v.states)
    taken = set(states)
    counter = 0

    def fresh() -> str:
        nonlocal counter
        while True:
            name = f"hop{counter}"
            counter += 1
            if name not in taken:
                taken.add(name)
                states.append(name)
                return name

    norm: list[_NormEdge] = []
    for e in v.edges:
        letters = e.label.letters
        if not letters:
            norm.append(_NormEdge(e.src, e.symbol, 0, e.dst))
            continue
        cur = e.src
        for i, x in enumerate(letters):
            dst = e.dst if i == len(letters) - 1 else fresh()
            norm.append(_NormEdge(cur, e.symbol if i == 0 else None, x, dst))
            cur = dst
    return states, norm


def from_free_automaton(v: ValenceAutomaton) -> Pda:
    """Pushdown automaton recognizing the same language as a word-labeled
    valence automaton, via the reduced-word stack discipline."""
    states, norm = _split_word_edges(v)
    rank = v.label_domain.rank
    transitions: list[PdaTransition] = []
    for src, symbol, letter, dst in norm:
        if letter == 0:
            transitions.append(PdaTransition(src, symbol, "any", None, "none", None, dst))
        else:
            transitions.append(
                PdaTransition(src, symbol, "top_is", -letter, "pop", None, dst)
            )
            transitions.append(
                PdaTransition(src, symbol, "top_not", -letter, "push", letter, dst)
            )
    return Pda(
        states=tuple(states),
        input_alphabet=v.alphabet,
        stack_rank=rank,
        transitions=tuple(transitions),
        initial=v.initial,
        accepting=frozenset(v.accepting),
    )


def _stack_symbols(rank: int) -> list[int]:
    syms = [BOTTOM]
    for i in range(1, rank + 1):
        syms.append(i)
        syms.append(-i)
    return syms


def pda_emptiness(p: Pda) -> bool:
    """Exact emptiness by predecessor-set saturation (true = language empty).

    Input symbols do not constrain reachability, so they are projected away.
    Transitions become top-of-stack rewrite rules over the signed letters plus
    a bottom marker; a finite automaton over stack contents, seeded with the
    accepting empty-stack configurations, is saturated until it recognizes
    every configuration that can reach one. The language is nonempty iff the
    initial configuration (initial state, bare bottom marker) is recognized.
    """
    syms = _stack_symbols(p.stack_rank)
    rules: set[tuple[str, int, str, tuple[int, ...]]] = set()
    for t in p.transitions:
        if t.guard == "any":
            tops = syms
        elif t.guard == "top_is":
            tops = [t.guard_letter]
        else:  # top_not: empty stack (bottom marker) also passes
            tops = [g for g in syms if g != t.guard_letter]
        for top in tops:
            if t.action == "none":
                rules.add((t.src, top, t.dst, (top,)))
            elif t.action == "pop":
                if top == BOTTOM:
                    continue  # cannot pop an empty stack
                rules.add((t.src, top, t.dst, ()))
            else:
                rules.add((t.src, top, t.dst, (t.action_letter, top)))

    # Rules fire when the configuration automaton can read their replacement
    # word from their target node; index them by the first replacement symbol
    # so each new automaton transition triggers only the rules that care.
    rules1: dict[tuple[str, int], list[tuple[str, int]]] = {}
    rules2: dict[tuple[str, int], list[tuple[str, int, int]]] = {}
    fin = object()  # unique final node of the configuration automaton
    index: dict[tuple[object, int], set[object]] = {}
    # (node, sym) -> heads (p, top) waiting for a transition out of it
    pending: dict[tuple[object, int], list[tuple[str, int]]] = {}
    work: deque[tuple[object, int, object]] = deque()

    def add(node: object, sym: int, dst: object) -> None:
        bucket = index.setdefault((node, sym), set())
        if dst not in bucket:
            bucket.add(dst)
            work.append((node, sym, dst))

    for src, top, dst, repl in rules:
        if not repl:
            add(src, top, dst)
        elif len(repl) == 1:
            rules1.setdefault((dst, repl[0]), []).append((src, top))
        else:
            rules2.setdefault((dst, repl[0]), []).append((src, top, repl[1]))

    for qa in p.accepting:
        add(qa, BOTTOM, fin)

    while work:
        node, sym, dst = work.popleft()
        for head in rules1.get((node, sym), ()):
            add(head[0], head[1], dst)
        for head in pending.get((node, sym), ()):
            add(head[0], head[1], dst)
        for src, top, second in rules2.get((node, sym), ()):
            pending.setdefault((dst, second), []).append((src, top))
            for t in tuple(index.get((dst, second), ())):
                add(src, top, t)

    return fin not in index.get((p.initial, BOTTOM), ())


def free_automaton_emptiness(v: ValenceAutomaton) -> bool:
    """Exact emptiness of a word-labeled valence automaton (true = empty).

    Normalizes edges to single letters, trims states off every
    initial-to-accepting path in the underlying digraph, then asks the
    identity-reachability closure whether an accepting state is reachable
    from the initial one along a path whose label reduces to the empty word.
    """
    states, norm = _split_word_edges(v)
    idx = {q: i for i, q in enumerate(states)}
    initial = idx[v.initial]
    accepting = {idx[q] for q in v.accepting}

    fwd_adj: dict[int, list[int]] = {}
    bwd_adj: dict[int, list[int]] = {}
    for e in norm:
        fwd_adj.setdefault(idx[e.src], []).append(idx[e.dst])
        bwd_adj.setdefault(idx[e.dst], []).append(idx[e.src])

    def reach(seeds: Iterable[int], adj: dict[int, list[int]]) -> set[int]:
        seen = set(seeds)
        queue = deque(seen)
        while queue:
            q = queue.popleft()
            for nxt in adj.get(q, ()):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return seen

    alive = reach([initial], fwd_adj) & reach(accepting, bwd_adj)
    if initial not in alive or not (accepting & alive):
        return True

    compact = {q: i for i, q in enumerate(sorted(alive))}
    edges = [
        (compact[idx[e.src]], e.letter, compact[idx[e.dst]])
        for e in norm
        if idx[e.src] in alive and idx[e.dst] in alive
    ]
    return not _kernel.dyck_nonempty(
        len(compact),
        edges,
        compact[initial],
        [compact[q] for q in accepting if q in alive],
    )


def pda_bounded_accepts(p: Pda, w: Sequence[str], stack_cap: int = 64) -> bool:
    """Semi-decision: BFS over (state, stack, position) configurations with a
    stack-depth cap; True means w is definitely accepted."""
    by_src: dict[str, list[PdaTransition]] = {}
    for t in p.transitions:
        by_src.setdefault(t.src, []).append(t)

    def guard_ok(t: PdaTransition, stack: tuple[int, ...]) -> bool:
        if t.guard == "any":
            return True
        if t.guard == "top_is":
            return bool(stack) and stack[-1] == t.guard_letter
        return not stack or stack[-1] != t.guard_letter

    start = (p.initial, (), 0)
    if p.initial in p.accepting and len(w) == 0:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        state, stack, pos = queue.popleft()
        for t in by_src.get(state, ()):
            if t.symbol is None:
                npos = pos
            elif pos < len(w) and w[pos] == t.symbol:
                npos = pos + 1
            else:
                continue
            if not guard_ok(t, stack):
                continue
            if t.action == "push":
                nstack = stack + (t.action_letter,)
                if len(nstack) > stack_cap:
                    continue
            elif t.action == "pop":
                nstack = stack[:-1]
            else:
                nstack = stack
            conf = (t.dst, nstack, npos)
            if conf in seen:
                continue
            if t.dst in p.accepting and not nstack and npos == len(w):
                return True
            seen.add(conf)
            queue.append(conf)
    return False
