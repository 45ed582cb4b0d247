"""The two kernel backends must be interchangeable: same results on word
reduction and on the identity-reachability closure."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matdecide import _kernel, _kernel_py

try:
    from matdecide import _ck
except ImportError:
    _ck = None

needs_compiled = pytest.mark.skipif(_ck is None, reason="compiled kernels not built")

letters = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=30)


def random_edges(rng: random.Random, n: int, m: int) -> list[tuple[int, int, int]]:
    return [
        (rng.randrange(n), rng.choice([0, 1, -1, 2, -2]), rng.randrange(n))
        for _ in range(m)
    ]


def test_reduce_examples():
    assert _kernel_py.reduce_letters([1, -1]) == ()
    assert _kernel_py.reduce_letters([1, 2, -2, -1, 1]) == (1,)
    assert _kernel_py.concat_reduce_letters((1, 2), (-2, -1)) == ()
    assert _kernel_py.concat_reduce_letters((1, 2), (2,)) == (1, 2, 2)


def test_dyck_closure_tiny():
    # 0 -a-> 1 -a'-> 2 wraps to give R(0,2); 3 is unreachable
    edges = [(0, 1, 1), (1, -1, 2)]
    closure = _kernel_py.dyck_closure(4, edges)
    assert (0, 2) in closure
    assert (0, 1) not in closure
    assert all((p, p) in closure for p in range(4))
    assert _kernel_py.dyck_nonempty(4, edges, 0, [2])
    assert not _kernel_py.dyck_nonempty(4, edges, 0, [1])


def test_dyck_closure_epsilon_and_transitivity():
    edges = [(0, 0, 1), (1, 2, 2), (2, -2, 3), (3, 0, 4)]
    closure = _kernel_py.dyck_closure(5, edges)
    assert (0, 4) in closure  # eps, wrap(b b'), eps, chained transitively


def test_dyck_closure_bounded_additions():
    rng = random.Random(11)
    n = 12
    edges = random_edges(rng, n, 30)
    closure = _kernel_py.dyck_closure(n, edges)
    assert len(closure) <= n * n


@needs_compiled
@given(letters)
def test_reduce_parity(ls):
    assert _ck.reduce_letters(ls) == _kernel_py.reduce_letters(ls)


@needs_compiled
@given(letters, letters)
def test_concat_parity(u, v):
    ru = _kernel_py.reduce_letters(u)
    rv = _kernel_py.reduce_letters(v)
    assert _ck.concat_reduce_letters(ru, rv) == _kernel_py.concat_reduce_letters(ru, rv)


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.integers(0, 40), st.integers(0, 2**30))
def test_dyck_parity(n, m, seed):
    rng = random.Random(seed)
    edges = random_edges(rng, n, m)
    assert _ck.dyck_closure(n, edges) == _kernel_py.dyck_closure(n, edges)
    initial = rng.randrange(n)
    accepting = [q for q in range(n) if rng.random() < 0.3]
    assert _ck.dyck_nonempty(n, edges, initial, accepting) == _kernel_py.dyck_nonempty(
        n, edges, initial, accepting
    )


@needs_compiled
def test_dyck_parity_larger_instance():
    rng = random.Random(99)
    n = 120
    edges = random_edges(rng, n, 400)
    assert _ck.dyck_closure(n, edges) == _kernel_py.dyck_closure(n, edges)


def test_selected_backend_exposes_contract():
    assert _kernel.kernel_backend() in ("compiled", "pure")
    assert _kernel.reduce_letters([1, -1]) == ()
