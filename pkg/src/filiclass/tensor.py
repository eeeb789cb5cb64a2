"""Structure tensors, bracket evaluation and nilpotency diagnostics.

A :class:`StructureTensor` stores the structure constants gamma[i][j][k] of a
bilinear bracket on a space with basis e_0 .. e_{dim-1}:

    [e_i, e_j] = sum_k gamma[i][j][k] e_k

All scalars are exact :class:`~filiclass.scalars.GaussianRational` values, so
rank computations and identity checks below involve no tolerances at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DimensionMismatch
from .scalars import ZERO, GaussianRational


@dataclass(frozen=True)
class Vector:
    """Coefficient vector over the basis e_0 .. e_{dim-1}."""

    coords: tuple[GaussianRational, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise DimensionMismatch("vector dimensions differ")
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise DimensionMismatch("vector dimensions differ")
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, a: GaussianRational) -> "Vector":
        return Vector(tuple(a * c for c in self.coords))


def zero_vector(dim: int) -> Vector:
    return Vector((ZERO,) * dim)


def basis_vector(dim: int, i: int) -> Vector:
    from .scalars import ONE

    return Vector(tuple(ONE if j == i else ZERO for j in range(dim)))


@dataclass(frozen=True)
class StructureTensor:
    """Immutable (dim x dim x dim) array of exact structure constants."""

    dim: int
    gamma: tuple[tuple[tuple[GaussianRational, ...], ...], ...]

    def __post_init__(self):
        g = tuple(tuple(tuple(row) for row in plane) for plane in self.gamma)
        if len(g) != self.dim or any(
            len(p) != self.dim or any(len(r) != self.dim for r in p) for p in g
        ):
            raise DimensionMismatch("gamma must be a dim^3 array")
        object.__setattr__(self, "gamma", g)

    @cached_property
    def _entries(self) -> tuple[tuple[int, int, int, GaussianRational], ...]:
        # Sparse view: the family tables fill well under a tenth of the cube.
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    v = self.gamma[i][j][k]
                    if v:
                        out.append((i, j, k, v))
        return tuple(out)

    def product_row(self, i: int, j: int) -> Vector:
        """The bracket [e_i, e_j] as a vector."""
        return Vector(self.gamma[i][j])


def tensor_from_entries(
    dim: int, entries: dict[tuple[int, int, int], GaussianRational]
) -> StructureTensor:
    g = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), v in entries.items():
        g[i][j][k] = v
    return StructureTensor(dim, tuple(tuple(tuple(r) for r in p) for p in g))


def bracket(t: StructureTensor, x: Vector, y: Vector) -> Vector:
    """Bilinear extension of the tensor: result_k = sum x_i y_j gamma[i][j][k]."""
    if x.dim != t.dim or y.dim != t.dim:
        raise DimensionMismatch(
            f"vectors of dim {x.dim}/{y.dim} against tensor of dim {t.dim}"
        )
    acc = [ZERO] * t.dim
    xs, ys = x.coords, y.coords
    for i, j, k, g in t._entries:
        xi = xs[i]
        if not xi:
            continue
        yj = ys[j]
        if not yj:
            continue
        acc[k] = acc[k] + xi * yj * g
    return Vector(tuple(acc))


def leibniz_defect(
    t: StructureTensor,
) -> list[tuple[int, int, int, Vector]]:
    """Residuals [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] + [[e_i,e_k],e_j] per triple.

    Only nonzero residuals are returned; an empty result means the tensor
    defines a Leibniz algebra.  Checking basis triples suffices because the
    identity is trilinear.
    """
    out = []
    n = t.dim
    basis = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = (
                    bracket(t, basis[i], t.product_row(j, k))
                    - bracket(t, t.product_row(i, j), basis[k])
                    + bracket(t, t.product_row(i, k), basis[j])
                )
                if not r.is_zero():
                    out.append((i, j, k, r))
    return out


def _rank(rows: list[Vector]) -> int:
    """Exact rank over Q(i) by Gaussian elimination (zero tests are exact)."""
    if not rows:
        return 0
    dim = rows[0].dim
    mat = [list(r.coords) for r in rows]
    rank = 0
    col = 0
    while rank < len(mat) and col < dim:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col].inverse()
        mat[rank] = [lead * v for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        col += 1
    return rank


def _span_basis(rows: list[Vector]) -> list[Vector]:
    """Reduced basis of the span of ``rows``."""
    if not rows:
        return []
    dim = rows[0].dim
    mat = [list(r.coords) for r in rows]
    basis: list[list[GaussianRational]] = []
    col = 0
    rank = 0
    while rank < len(mat) and col < dim:
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col].inverse()
        mat[rank] = [lead * v for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        basis.append(mat[rank])
        rank += 1
        col += 1
    return [Vector(tuple(r)) for r in basis]


def power_dims(t: StructureTensor) -> tuple[int, ...]:
    """Dimensions of the lower central series L^1, L^2, ... until it stabilizes.

    L^1 is the whole space and L^{k+1} = span{[x, y] : x in L^k, y in L},
    computed on spanning sets by bilinearity with exact rank arithmetic.
    """
    n = t.dim
    dims = [n]
    current = [basis_vector(n, i) for i in range(n)]
    while True:
        products = [
            bracket(t, x, basis_vector(n, j)) for x in current for j in range(n)
        ]
        nxt = _span_basis([p for p in products if not p.is_zero()])
        d = len(nxt)
        dims.append(d)
        if d == 0 or d == dims[-2]:
            return tuple(dims)
        current = nxt


def is_filiform(t: StructureTensor) -> bool:
    """True iff the power dims descend as (n+1, n-1, n-2, ..., 1, 0)."""
    n = t.dim - 1
    expected = (n + 1,) + tuple(range(n - 1, -1, -1))
    return power_dims(t) == expected
