"""Combinatorial germ of a point in a complexity one space.

A point with ``h``-dimensional stabilizer ``H`` has ``h + 1`` isotropy weights
in ``h*`` and an integer vector ``xi`` with ``H = ker(z -> prod z_i**xi_i)``.
The weights see only the identity component of ``H``; ``xi`` also records
its torsion (``xi = (2)`` is a ``Z/2`` stabilizer).  That is why `LocalModel`
keeps ``xi`` as the primary datum and checks the weights against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import exactlin as el
from .cones import Cone
from .exactlin import IntVec, RationalMat, RationalVec


class NotComplexityOne(ValueError):
    """Weight data whose dependency space is not a line."""


def weights_from_xi(xi: Sequence[int]) -> tuple[RationalVec, ...]:
    """Project the standard basis onto ``xi``-perp, a model of ``h*``.

    >>> weights_from_xi((1, 1))
    ((Fraction(1, 2), Fraction(-1, 2)), (Fraction(-1, 2), Fraction(1, 2)))
    """
    xi = tuple(int(x) for x in xi)
    if not any(xi):
        raise ValueError("xi must be nonzero")
    n = len(xi)
    norm2 = sum(x * x for x in xi)
    return tuple(
        tuple(Fraction(int(i == k)) - Fraction(xi[i] * xi[k], norm2) for k in range(n))
        for i in range(n)
    )


def _weight_matrix(weights: Sequence[RationalVec]) -> RationalMat:
    """Matrix whose ``i``-th column is ``weights[i]``."""
    return el.transpose(weights)


def xi_from_weights(weights: Sequence[Sequence]) -> IntVec:
    """Primitive generator of the linear dependencies among the weights.

    Only the connected part of the stabilizer is recoverable this way, so the
    result is primitive even when the true ``xi`` is not.
    """
    ws = [el.vec(w) for w in weights]
    if not ws:
        raise NotComplexityOne("no weights")
    m = _weight_matrix(ws)
    kern = el.kernel_basis(m, len(ws))
    if len(kern) != 1:
        raise NotComplexityOne(f"not a complexity-one germ: dependency space has dimension {len(kern)}")
    return el.primitive_integer_generator(kern[0])


def sign_normalized(xi: Sequence[int]) -> IntVec:
    """``xi`` or ``-xi``, whichever has a positive first nonzero entry; no gcd division."""
    xi = tuple(int(x) for x in xi)
    lead = next((x for x in xi if x != 0), 0)
    return tuple(-x for x in xi) if lead < 0 else xi


@dataclass(frozen=True)
class LocalModel:
    dim_T: int
    xi: IntVec
    moment_value: RationalVec
    weights: tuple[RationalVec, ...] | None = None
    h_embedding: RationalMat | None = None

    def __post_init__(self):
        xi = tuple(int(x) for x in self.xi)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "moment_value", el.vec(self.moment_value))
        if not any(xi):
            raise ValueError("xi must be nonzero")
        h = len(xi) - 1
        if len(self.moment_value) != self.dim_T:
            raise el.DimensionError(f"moment value has length {len(self.moment_value)}, torus has dimension {self.dim_T}")
        if self.weights is None:
            ws = weights_from_xi(xi)
        else:
            ws = tuple(el.vec(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if len(ws) != h + 1:
            raise ValueError(f"expected {h + 1} weights, got {len(ws)}")
        dims = {len(w) for w in ws}
        if len(dims) != 1 or not dims <= {h, h + 1}:
            raise el.DimensionError(f"weights must all have dimension {h} (or {h + 1} in xi-perp coordinates)")
        dep = el.lincomb([Fraction(x) for x in xi], ws, dims.pop())
        if any(dep):
            raise ValueError("sum of xi_i * weight_i is not zero")
        if el.rank(ws) != h:
            raise NotComplexityOne(f"weights span a space of dimension {el.rank(ws)}, expected {h}")
        if self.h_embedding is not None:
            B = el.mat(self.h_embedding)
            object.__setattr__(self, "h_embedding", B)
            if len(B) != h:
                raise el.DimensionError(f"h_embedding needs {h} rows, got {len(B)}")
            if B and len(B[0]) != self.dim_T:
                raise el.DimensionError(f"h_embedding rows must have length {self.dim_T}")
            if el.rank(B, self.dim_T) != h:
                raise ValueError("h_embedding rows are linearly dependent")

    @property
    def h(self) -> int:
        return len(self.xi) - 1

    @classmethod
    def from_weights(cls, dim_T: int, weights, moment_value, h_embedding=None) -> "LocalModel":
        return cls(dim_T, xi_from_weights(weights), moment_value, weights, h_embedding)


def is_tall(m: LocalModel) -> bool:
    return all(x >= 0 for x in m.xi) or all(x <= 0 for x in m.xi)


def is_exceptional(m: LocalModel) -> bool:
    # coordinate i is H-fixed exactly when e_i is an integer multiple of xi
    nonzero = [x for x in m.xi if x != 0]
    return not (len(nonzero) == 1 and abs(nonzero[0]) == 1)


def lift_weights(m: LocalModel) -> tuple[RationalVec, ...]:
    """Weights as elements of ``t*``, inside the row space of ``h_embedding``.

    A weight ``w`` is lifted to the unique ``lam = B^T c`` with ``B lam = w``.
    """
    if m.h_embedding is None:
        raise ValueError("moment cone needs h_embedding")
    d, h = m.dim_T, m.h
    if h == 0:
        return tuple(el.zero(d) for _ in m.weights)
    if len(m.weights[0]) != h:
        raise ValueError("lifting needs weights in h* coordinates dual to h_embedding, not xi-perp coordinates")
    B = m.h_embedding
    gram = [[el.dot(r, s) for s in B] for r in B]
    lifts = []
    for w in m.weights:
        c, _ = el.solve(gram, w, h)
        lifts.append(el.lincomb(c, B, d))
    return tuple(lifts)


def annihilator_basis(m: LocalModel) -> list[RationalVec]:
    if m.h_embedding is None:
        raise ValueError("moment cone needs h_embedding")
    return el.kernel_basis(m.h_embedding, m.dim_T)


def moment_cone(m: LocalModel) -> Cone:
    """``moment_value + h-annihilator + sum R>=0 (lifted weights)``."""
    return Cone(m.dim_T, m.moment_value, tuple(annihilator_basis(m)), lift_weights(m))


@dataclass(frozen=True)
class Classification:
    tall: bool
    exceptional: bool
    xi_normalized: IntVec

    @property
    def short(self) -> bool:
        return not self.tall


def classify(m: LocalModel) -> Classification:
    c = Classification(is_tall(m), is_exceptional(m), sign_normalized(m.xi))
    assert c.tall or c.exceptional, "short point that is not exceptional"
    return c
