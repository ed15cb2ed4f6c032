"""Definitional brute force over small prime fields, plus random generators.

Everything here is ground truth for certifying the fast algorithms, so none of
it reuses their code paths: products are recomputed from the structure
constants on raw integer vectors (bitmasks over F_2), membership is a lookup
in an explicitly materialised element set, hereditary sets are swept over all
2^n subsets with per-vertex reachability, idealness and absorption quantify
literally over all p^n vectors with early exit on the first violation, and
maximality is pairwise inclusion over the complete ideal list.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import ideals as ideals_mod
from .algebra import EvolutionAlgebra
from .errors import EnumerationLimitError
from .fields import PrimeField
from .linalg import Subspace

__all__ = [
    "RandomSpec",
    "brute_force_absorption",
    "brute_force_hereditary",
    "brute_force_ideals",
    "brute_force_is_ideal",
    "brute_force_maximal_ideals",
    "certify_fast_vs_brute",
    "enumerate_subspaces",
    "gaussian_binomial",
    "iter_random_algebras",
    "random_algebra",
    "random_perfect_algebra",
    "random_perfect_strongly_connected",
    "random_with_sinks",
]

SUBSPACE_GUARD = 2**16
HEREDITARY_GUARD = 20


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _check_guard(field, n):
    if not isinstance(field, PrimeField):
        raise ValueError("subspace enumeration requires a prime field")
    if field.p**n > SUBSPACE_GUARD:
        raise EnumerationLimitError(
            f"{field.p}^{n} vectors exceed the enumeration guard {SUBSPACE_GUARD}"
        )


def _iter_rref_int_rows(p, n):
    """All reduced-row-echelon bases over F_p as integer rows, each span once.

    Rows are yielded grouped by dimension, pivot combinations in lexicographic
    order, free entries in lexicographic order.
    """
    yield (), ()
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free_cells = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivot_set
            ]
            for values in itertools.product(range(p), repeat=len(free_cells)):
                rows = [[0] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, c), v in zip(free_cells, values):
                    rows[r][c] = v
                yield tuple(tuple(row) for row in rows), pivots


def enumerate_subspaces(field, n):
    """Every subspace of F_p^n exactly once, as canonical Subspace values."""
    _check_guard(field, n)
    for rows, pivots in _iter_rref_int_rows(field.p, n):
        basis = tuple(
            tuple(field.from_int(x) for x in row) for row in rows
        )
        yield Subspace(field, n, basis, tuple(pivots))


# ---------------------------------------------------------------------------
# raw integer views
# ---------------------------------------------------------------------------


def _squares_int(algebra):
    if not isinstance(algebra.field, PrimeField):
        raise ValueError("brute force runs over prime fields only")
    return [tuple(x.value for x in row) for row in algebra.squares]


def _subspace_int_rows(subspace):
    return [tuple(x.value for x in row) for row in subspace.basis]


def _mask(row_bits):
    m = 0
    for j, b in enumerate(row_bits):
        if b:
            m |= 1 << j
    return m


def _span_masks(mask_rows):
    elems = {0}
    for row in mask_rows:
        elems |= {x ^ row for x in elems}
    return elems


def _span_tuples(int_rows, p, n):
    elems = {tuple([0] * n)}
    for row in int_rows:
        new = set()
        for x in elems:
            for c in range(p):
                new.add(tuple((a + c * b) % p for a, b in zip(x, row)))
        elems = new
    return elems


def _sq_xor_table(square_masks, n):
    """table[m] = xor of the square masks over the bits of m, so that the
    product of bitmask vectors x, y over F_2 is table[x & y]."""
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] ^ square_masks[low.bit_length() - 1]
    return table


def _prod_tuple(squares_int, x, y, p, n):
    acc = [0] * n
    for i in range(n):
        f = (x[i] * y[i]) % p
        if f:
            sq = squares_int[i]
            for j in range(n):
                acc[j] = (acc[j] + f * sq[j]) % p
    return tuple(acc)


class _F2View:
    """Bitmask tables for one F_2 algebra, shared across brute-force calls."""

    def __init__(self, algebra):
        self.n = algebra.n
        self.square_masks = [_mask(row) for row in _squares_int(algebra)]
        self.table = _sq_xor_table(self.square_masks, self.n)

    def elements(self, subspace):
        return _span_masks([_mask(row) for row in _subspace_int_rows(subspace)])

    def is_ideal(self, elems):
        table = self.table
        for a in range(1 << self.n):
            for v in elems:
                if table[a & v] not in elems:
                    return False
        return True

    def absorbs(self, elems):
        table = self.table
        for x in range(1 << self.n):
            if x in elems:
                continue
            if all(table[x & a] in elems for a in range(1 << self.n)):
                return False
        return True


def _f2_view(algebra):
    view = getattr(algebra, "_brute_f2_view", None)
    if view is None:
        view = algebra._brute_f2_view = _F2View(algebra)
    return view


def brute_force_is_ideal(algebra, subspace):
    """Literal closure test: every product of any vector with any subspace
    element stays inside, checked against the materialised element set."""
    _check_guard(algebra.field, algebra.n)
    p, n = algebra.field.p, algebra.n
    if p == 2:
        view = _f2_view(algebra)
        return view.is_ideal(view.elements(subspace))
    squares = _squares_int(algebra)
    elems = _span_tuples(_subspace_int_rows(subspace), p, n)
    for a in itertools.product(range(p), repeat=n):
        for v in elems:
            if _prod_tuple(squares, a, v, p, n) not in elems:
                return False
    return True


def brute_force_absorption(algebra, subspace):
    """Literal absorption test over all p^n vectors x: whenever every product
    of x lands inside, x itself must already be inside."""
    _check_guard(algebra.field, algebra.n)
    p, n = algebra.field.p, algebra.n
    if p == 2:
        view = _f2_view(algebra)
        return view.absorbs(view.elements(subspace))
    squares = _squares_int(algebra)
    elems = _span_tuples(_subspace_int_rows(subspace), p, n)
    for x in itertools.product(range(p), repeat=n):
        if x in elems:
            continue
        if all(
            _prod_tuple(squares, x, a, p, n) in elems
            for a in itertools.product(range(p), repeat=n)
        ):
            return False
    return True


def brute_force_ideals(algebra):
    """All ideals, by filtering the full subspace enumeration."""
    return [
        s
        for s in enumerate_subspaces(algebra.field, algebra.n)
        if brute_force_is_ideal(algebra, s)
    ]


def brute_force_maximal_ideals(algebra, ideals=None):
    """Maximal proper ideals by pairwise inclusion over the complete list."""
    if ideals is None:
        ideals = brute_force_ideals(algebra)
    p, n = algebra.field.p, algebra.n
    if p == 2:
        view = _f2_view(algebra)
        data = [(s, view.elements(s)) for s in ideals]
    else:
        data = [(s, _span_tuples(_subspace_int_rows(s), p, n)) for s in ideals]
    rows = [
        (_subspace_int_rows(s) if p != 2 else [_mask(r) for r in _subspace_int_rows(s)])
        for s, _ in data
    ]
    out = []
    for i, (s, _) in enumerate(data):
        if s.dim == n:
            continue
        strictly_below_proper = False
        for j, (t, t_elems) in enumerate(data):
            if t.dim >= n or t.dim <= s.dim:
                continue
            if all(r in t_elems for r in rows[i]):
                strictly_below_proper = True
                break
        if not strictly_below_proper:
            out.append(s)
    return out


def brute_force_hereditary(digraph):
    """Hereditary sets by testing the tree condition on all 2^n subsets."""
    n = digraph.n
    if n > HEREDITARY_GUARD:
        raise EnumerationLimitError(
            f"2^{n} subsets exceed the brute-force hereditary guard"
        )
    reach = []
    for v in range(n):
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in digraph.out[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        m = 0
        for u in seen:
            m |= 1 << u
        reach.append(m)
    out = []
    for mask in range(1 << n):
        union = 0
        m = mask
        while m:
            low = m & -m
            union |= reach[low.bit_length() - 1]
            m ^= low
        if union | mask == mask:
            out.append(frozenset(i for i in range(n) if mask >> i & 1))
    return out


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RandomSpec:
    """Reproducible recipe for a stream of random evolution algebras."""

    field: object
    min_dim: int = 2
    max_dim: int = 6
    density: float = 0.6
    pool: tuple = ()
    seed: int = 0

    def coefficient_pool(self):
        if self.pool:
            return self.pool
        if self.field.order is None:
            return (-2, -1, 1, 2)
        return tuple(range(1, self.field.order))


def iter_random_algebras(spec: RandomSpec):
    rng = random.Random(spec.seed)
    pool = spec.coefficient_pool()
    while True:
        n = rng.randint(spec.min_dim, spec.max_dim)
        squares = [
            [
                rng.choice(pool) if rng.random() < spec.density else 0
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        yield EvolutionAlgebra(spec.field, squares)


def random_algebra(spec: RandomSpec) -> EvolutionAlgebra:
    return next(iter_random_algebras(spec))


def random_perfect_algebra(spec: RandomSpec, attempts=1000) -> EvolutionAlgebra:
    stream = iter_random_algebras(spec)
    for _ in range(attempts):
        algebra = next(stream)
        if algebra.is_perfect():
            return algebra
    raise RuntimeError(
        f"no perfect algebra in {attempts} attempts; density {spec.density} too low"
    )


def random_perfect_strongly_connected(spec: RandomSpec, attempts=1000):
    """Perfect algebra whose graph contains the full cycle 0 -> 1 -> ... -> 0,
    hence is strongly connected."""
    rng = random.Random(spec.seed)
    pool = spec.coefficient_pool()
    for _ in range(attempts):
        n = rng.randint(spec.min_dim, spec.max_dim)
        squares = [
            [
                rng.choice(pool) if rng.random() < spec.density else 0
                for _ in range(n)
            ]
            for _ in range(n)
        ]
        for i in range(n):
            if not squares[i][(i + 1) % n]:
                squares[i][(i + 1) % n] = rng.choice(pool)
        algebra = EvolutionAlgebra(spec.field, squares)
        if algebra.is_perfect():
            return algebra
    raise RuntimeError(
        f"no strongly connected perfect algebra in {attempts} attempts"
    )


def random_with_sinks(spec: RandomSpec, min_sinks=1) -> EvolutionAlgebra:
    """Random algebra with at least ``min_sinks`` basis squares forced to
    zero; always degenerate."""
    rng = random.Random(spec.seed)
    pool = spec.coefficient_pool()
    n = rng.randint(max(spec.min_dim, min_sinks + 1), max(spec.max_dim, min_sinks + 1))
    squares = [
        [
            rng.choice(pool) if rng.random() < spec.density else 0
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    for i in rng.sample(range(n), min_sinks):
        squares[i] = [0] * n
    return EvolutionAlgebra(spec.field, squares)


# ---------------------------------------------------------------------------
# certification harness
# ---------------------------------------------------------------------------


def certify_fast_vs_brute(algebra, subspaces=None, max_compare=None, seed=0):
    """Compare the fast predicates with brute force on one prime-field algebra.

    Returns a dict with counts and a list of mismatch descriptions (empty on
    full agreement).  ``subspaces`` may carry a cached enumeration for the
    algebra's (field, dim); ``max_compare`` caps how many non-ideal subspaces
    get the point-wise is_ideal comparison, while idealness is still decided
    brute-force on every subspace so that maximality stays ground truth.
    """
    from . import graph as graph_mod

    A = algebra
    mismatches = []
    g = A.graph

    fast_hered = g.hereditary_sets()
    brute_hered = sorted(brute_force_hereditary(g), key=graph_mod.vertex_set_mask)
    if fast_hered != brute_hered:
        mismatches.append("hereditary enumeration differs from brute force")

    full = frozenset(range(A.n))
    proper = [h for h in brute_hered if h != full]
    maxima = sorted(
        (h for h in proper if not any(h < h2 for h2 in proper)),
        key=graph_mod.vertex_set_mask,
    )
    if maxima != list(g.maximal_hereditary_sets()):
        mismatches.append("maximal hereditary sets differ from brute maxima")

    if subspaces is None:
        subspaces = list(enumerate_subspaces(A.field, A.n))
    brute_flags = [brute_force_is_ideal(A, s) for s in subspaces]
    brute_ideal_list = [s for s, f in zip(subspaces, brute_flags) if f]

    rng = random.Random(seed)
    indices = range(len(subspaces))
    if max_compare is not None and len(subspaces) > max_compare:
        chosen = set(rng.sample(range(len(subspaces)), max_compare))
        chosen.update(i for i, f in enumerate(brute_flags) if f)
        indices = sorted(chosen)
    compared = 0
    for i in indices:
        s = subspaces[i]
        if ideals_mod.is_ideal(A, s) != brute_flags[i]:
            mismatches.append(f"is_ideal mismatch at subspace {i}")
        compared += 1

    brute_max = brute_force_maximal_ideals(A, brute_ideal_list)
    brute_max_keys = {s.basis for s in brute_max}
    for s in brute_ideal_list:
        ideal = ideals_mod.Ideal(A, s, _validated=True)
        if ideal.has_absorption() != brute_force_absorption(A, s):
            mismatches.append("has_absorption mismatch")
        if s.dim < A.n:
            if ideal.is_maximal() != (s.basis in brute_max_keys):
                mismatches.append("is_maximal mismatch")
    return {
        "dim": A.n,
        "subspaces": len(subspaces),
        "compared": compared,
        "ideals": len(brute_ideal_list),
        "maximal_ideals": len(brute_max),
        "mismatches": mismatches,
    }
