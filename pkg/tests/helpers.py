"""Shared example algebras, named by their structure."""

from fractions import Fraction

from evoalg import QQ, EvolutionAlgebra


def six_dim_branching(field=QQ):
    """e1^2=e2, e2^2=e2, e3^2=e4+e5, e4^2=0, e5^2=e6, e6^2=0."""
    return EvolutionAlgebra(
        field,
        [
            [0, 1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 0],
        ],
    )


def three_dim_perfect(field=QQ):
    """e1^2=e1+e2+e3, e2^2=e2, e3^2=e2+e3; perfect with one proper hereditary
    chain."""
    return EvolutionAlgebra(field, [[1, 1, 1], [0, 1, 0], [0, 1, 1]])


def mirror_pair():
    """e1^2=e1+e2, e2^2=-e1-e2; the span of e1+e2 is a maximal ideal."""
    return EvolutionAlgebra(QQ, [[1, 1], [-1, -1]])


def double_loop_pair():
    """e1^2=e2^2=e1+e2; single component, no proper nonempty hereditary set."""
    return EvolutionAlgebra(QQ, [[1, 1], [1, 1]])


def double_loop_plus_fixed():
    """e1^2=e2^2=e1+e2, e3^2=e3."""
    return EvolutionAlgebra(QQ, [[1, 1, 0], [1, 1, 0], [0, 0, 1]])


def loop_feeding_pair():
    """e1'^2=e1', e2'^2=e1'; saturation adds the second vertex to {first}."""
    return EvolutionAlgebra(QQ, [[1, 0], [1, 0]])


def four_dim_non_maximal_span():
    """e1^2=e1+e2, e2^2=e2, e3^2=e4^2=e1+e3+e4; the span of the maximal
    hereditary set {e1,e2} is not a maximal ideal."""
    return EvolutionAlgebra(
        QQ,
        [[1, 1, 0, 0], [0, 1, 0, 0], [1, 0, 1, 1], [1, 0, 1, 1]],
    )


def four_dim_degenerate_funnel(field=QQ):
    """e1^2=e2^2=e3^2=e3, e4^2=0; degenerate, breaks absorption for the
    span of the saturated set {e1,e2,e3}."""
    return EvolutionAlgebra(
        field,
        [[0, 0, 1, 0], [0, 0, 1, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    )


def four_dim_all_to_third(field=QQ):
    """e1^2=e2^2=e3^2=e4^2=e3; the codimension-one ideal over the square span
    lacks absorption."""
    return EvolutionAlgebra(
        field,
        [[0, 0, 1, 0], [0, 0, 1, 0], [0, 0, 1, 0], [0, 0, 1, 0]],
    )


def three_dim_collapsing():
    """e1^2=e2^2=e1+e2, e3^2=e1+e2+e3; two distinct ideals share the same
    hereditary vertex set."""
    return EvolutionAlgebra(QQ, [[1, 1, 0], [1, 1, 0], [1, 1, 1]])


def two_cycle(field=QQ):
    """e1^2=e2, e2^2=e1; simple."""
    return EvolutionAlgebra(field, [[0, 1], [1, 0]])


def zero_algebra(n=3, field=QQ):
    return EvolutionAlgebra(field, [[0] * n for _ in range(n)])


def qq(a, b=1):
    return Fraction(a, b)
