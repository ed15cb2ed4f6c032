"""Canonical linear algebra over an exact field.

A :class:`Subspace` is stored as the unique reduced row echelon basis of its
span: pivot columns strictly increasing, pivot entries one, pivot columns zero
elsewhere.  Consequently two subspaces are equal exactly when their basis
matrices are equal entry-wise, which turns every set identity downstream into
a plain ``==``.
"""

from __future__ import annotations

__all__ = [
    "Subspace",
    "coerce_vector",
    "full_subspace",
    "nullspace",
    "rref",
    "support",
    "unit_vector",
    "zero_subspace",
]


def coerce_vector(field, vec, n):
    """Coerce a sequence of raw entries into a length-``n`` field vector."""
    out = tuple(field.coerce(x) for x in vec)
    if len(out) != n:
        raise ValueError(f"vector of length {len(out)}, expected {n}")
    return out


def unit_vector(field, n, i):
    row = [field.zero] * n
    row[i] = field.one
    return tuple(row)


def support(vec):
    """Indices of the nonzero coordinates."""
    return frozenset(i for i, x in enumerate(vec) if x)


def rref(field, ambient_dim, vectors):
    """Reduced row echelon span of the given vectors.

    Idempotent: applying it to the basis of the result returns an identical
    basis.  Raises ``ValueError`` for ragged input.
    """
    rows = [list(coerce_vector(field, v, ambient_dim)) for v in vectors]
    pivots = []
    r = 0
    for c in range(ambient_dim):
        k = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = field.one / rows[r][c]
        if inv != field.one:
            rows[r] = [inv * x for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    basis = tuple(tuple(row) for row in rows[:r])
    return Subspace(field, ambient_dim, basis, tuple(pivots))


class Subspace:
    """A subspace identified by its reduced row echelon basis.

    Construct through :func:`rref`; the constructor trusts its arguments.
    Immutable and hashable.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.basis)

    @property
    def is_zero(self):
        return not self.basis

    @property
    def is_full(self):
        return len(self.basis) == self.ambient_dim

    def reduce(self, vec):
        """Residual of ``vec`` after elimination against the basis."""
        w = list(coerce_vector(self.field, vec, self.ambient_dim))
        for row, c in zip(self.basis, self.pivots):
            f = w[c]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def contains_subspace(self, other):
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def sum(self, other):
        self._check_compatible(other)
        return rref(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other):
        """Intersection, via the nullspace of the stacked coordinate system."""
        self._check_compatible(other)
        s, t = len(self.basis), len(other.basis)
        if s == 0 or t == 0:
            return zero_subspace(self.field, self.ambient_dim)
        # Unknowns (a_1..a_s, b_1..b_t) with sum(a_i u_i) + sum(b_j w_j) = 0;
        # each coordinate of the ambient space contributes one equation.
        eqs = [
            tuple(self.basis[i][k] for i in range(s))
            + tuple(other.basis[j][k] for j in range(t))
            for k in range(self.ambient_dim)
        ]
        combos = nullspace(self.field, s + t, eqs)
        vecs = []
        for combo in combos:
            acc = [self.field.zero] * self.ambient_dim
            for coef, row in zip(combo[:s], self.basis):
                if coef:
                    acc = [a + coef * b for a, b in zip(acc, row)]
            vecs.append(acc)
        return rref(self.field, self.ambient_dim, vecs)

    def _check_compatible(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def zero_subspace(field, n):
    return Subspace(field, n, (), ())


def full_subspace(field, n):
    return rref(field, n, [unit_vector(field, n, i) for i in range(n)])


def nullspace(field, width, equations):
    """Canonical basis of ``{x : E x = 0}`` for the given equation rows.

    One basis vector per free column of the reduced system, in ascending
    free-column order, with a one in the free coordinate.
    """
    reduced = rref(field, width, equations)
    pivot_set = set(reduced.pivots)
    free_cols = [c for c in range(width) if c not in pivot_set]
    out = []
    for f in free_cols:
        x = [field.zero] * width
        x[f] = field.one
        for row, c in zip(reduced.basis, reduced.pivots):
            if row[f]:
                x[c] = -row[f]
        out.append(tuple(x))
    return out
