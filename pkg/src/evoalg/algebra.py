"""Finite-dimensional evolution algebras.

An evolution algebra is determined, relative to a natural basis (distinct
basis vectors multiply to zero), by the coordinate vectors of the basis
squares.  ``squares[i]`` holds the coordinates of the square of basis vector
``i``; the structure matrix has these vectors as its columns, but the toolkit
only ever speaks in terms of "coordinates of the square of e_i", never raw
matrix indices, to keep the transposition convention out of sight.
"""

from __future__ import annotations

from functools import cached_property

from . import graph as graph_mod
from . import linalg

__all__ = ["DIM_CAP", "EvolutionAlgebra"]

DIM_CAP = 64


class EvolutionAlgebra:
    """Immutable evolution algebra value over an exact field."""

    def __init__(self, field, squares, labels=None, dim_cap=DIM_CAP):
        n = len(squares)
        if n < 1:
            raise ValueError("dimension must be at least 1")
        if n > dim_cap:
            raise ValueError(f"dimension {n} exceeds the cap {dim_cap}")
        self.field = field
        self.squares = tuple(
            linalg.coerce_vector(field, sq, n) for sq in squares
        )
        self.labels = tuple(labels) if labels is not None else tuple(
            f"e{i + 1}" for i in range(n)
        )
        if len(self.labels) != n:
            raise ValueError("label count differs from dimension")
        if len(set(self.labels)) != n:
            raise ValueError("basis labels must be distinct")

    @property
    def n(self):
        return len(self.squares)

    def index_of(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown basis label {label!r}") from None

    def unit(self, i):
        return linalg.unit_vector(self.field, self.n, i)

    def zero_vector(self):
        return tuple(self.field.zero for _ in range(self.n))

    # -- multiplication ------------------------------------------------------

    def product(self, x, y):
        """Bilinear commutative product; distinct basis vectors annihilate.

        Equals the sum over i of ``x_i * y_i * squares[i]``.
        """
        xs = linalg.coerce_vector(self.field, x, self.n)
        ys = linalg.coerce_vector(self.field, y, self.n)
        acc = [self.field.zero] * self.n
        for xi, yi, sq in zip(xs, ys, self.squares):
            if xi and yi:
                f = xi * yi
                acc = [a + f * b for a, b in zip(acc, sq)]
        return tuple(acc)

    @cached_property
    def square_span(self):
        """Span of all basis squares; this is the product A·A of the algebra
        with itself, and its dimension is the rank of the structure matrix."""
        return linalg.rref(self.field, self.n, self.squares)

    def is_perfect(self):
        """True when the squares span everything (invertible structure
        matrix)."""
        return self.square_span.is_full

    def annihilator_vertices(self):
        """Basis indices whose square is zero; exactly the sinks of the
        graph."""
        return frozenset(
            i for i, sq in enumerate(self.squares) if not any(sq)
        )

    def is_degenerate(self):
        return bool(self.annihilator_vertices())

    # -- graph and quotients ---------------------------------------------

    @cached_property
    def graph(self):
        return graph_mod.associated_graph(self)

    def quotient_by_hereditary(self, hereditary):
        """Quotient by the ideal spanned by a hereditary vertex set.

        The residue classes of the surviving basis vectors form a natural
        basis, so the quotient is realised by deleting the coordinates at the
        hereditary set; its graph equals the quotient graph.
        """
        h = frozenset(hereditary)
        if not self.graph.is_hereditary(h):
            raise ValueError("quotient requires a hereditary vertex set")
        keep = [j for j in range(self.n) if j not in h]
        if not keep:
            raise ValueError("quotient by the full vertex set is zero-dimensional")
        squares = [[self.squares[j][k] for k in keep] for j in keep]
        return EvolutionAlgebra(
            self.field, squares, tuple(self.labels[j] for j in keep)
        )

    def __eq__(self, other):
        if not isinstance(other, EvolutionAlgebra):
            return NotImplemented
        return (
            self.field == other.field
            and self.squares == other.squares
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.field, self.squares, self.labels))

    def __repr__(self):
        return f"EvolutionAlgebra(n={self.n}, field={self.field.name})"
