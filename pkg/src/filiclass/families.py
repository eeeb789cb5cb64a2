"""The two parametrized families of filiform Leibniz algebras handled here.

``build7``/``build8`` populate the multiplication table of the 7- and
8-dimensional family member L(C) from its parameter vector C; ``extract7``/
``extract8`` invert that and verify a tensor actually has the family shape.
The ``RawTable*`` types carry the pre-unification structure constants whose
Leibniz-forced coupling relations are checked by ``check_lemma7``/``check_lemma8``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .errors import ConstraintViolation, DimensionMismatch, NotInFamily
from .scalars import ONE, ZERO, GaussianRational
from .tensor import StructureTensor, tensor_from_entries

_TWO = GaussianRational.of(2)


@dataclass(frozen=True)
class Params7:
    """Parameter vector (c00, c01, c11, c12, c13, c14, c23) of a dim-7 algebra."""

    c00: GaussianRational = ZERO
    c01: GaussianRational = ZERO
    c11: GaussianRational = ZERO
    c12: GaussianRational = ZERO
    c13: GaussianRational = ZERO
    c14: GaussianRational = ZERO
    c23: GaussianRational = ZERO

    def to_tuple(self) -> tuple[GaussianRational, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @staticmethod
    def from_tuple(values) -> "Params7":
        values = tuple(values)
        if len(values) != 7:
            raise DimensionMismatch(f"Params7 needs 7 entries, got {len(values)}")
        return Params7(*values)


@dataclass(frozen=True)
class Params8:
    """Parameter vector (c00, c01, c11, c12, c13, c14, c15, c23, c24, c34).

    Membership in the 8-dimensional family additionally requires
    c34 * (c23 + 2*c12) = 0; see :func:`membership_defect`.
    """

    c00: GaussianRational = ZERO
    c01: GaussianRational = ZERO
    c11: GaussianRational = ZERO
    c12: GaussianRational = ZERO
    c13: GaussianRational = ZERO
    c14: GaussianRational = ZERO
    c15: GaussianRational = ZERO
    c23: GaussianRational = ZERO
    c24: GaussianRational = ZERO
    c34: GaussianRational = ZERO

    def to_tuple(self) -> tuple[GaussianRational, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @staticmethod
    def from_tuple(values) -> "Params8":
        values = tuple(values)
        if len(values) != 10:
            raise DimensionMismatch(f"Params8 needs 10 entries, got {len(values)}")
        return Params8(*values)


def membership_defect(c: Params8) -> GaussianRational:
    """c34 * (c23 + 2*c12); zero iff L(C) belongs to the dim-8 family."""
    return c.c34 * (c.c23 + _TWO * c.c12)


def _chain_entries(dim: int) -> dict[tuple[int, int, int], GaussianRational]:
    n = dim - 1
    entries: dict[tuple[int, int, int], GaussianRational] = {}
    for i in range(1, n):
        entries[(i, 0, i + 1)] = ONE
    for i in range(2, n):
        entries[(0, i, i + 1)] = -ONE
    entries[(0, 1, 2)] = -ONE
    return entries


def _put_skew(entries, i, j, k, value) -> None:
    # [e_i, e_j] = -[e_j, e_i] for i, j >= 1; zero coefficients are omitted.
    if value:
        entries[(i, j, k)] = entries.get((i, j, k), ZERO) + value
        entries[(j, i, k)] = entries.get((j, i, k), ZERO) - value


def build7(c: Params7) -> StructureTensor:
    """Multiplication table of the dim-7 family member L(C)."""
    entries = _chain_entries(7)
    if c.c00:
        entries[(0, 0, 6)] = c.c00
    if c.c01:
        entries[(0, 1, 6)] = c.c01
    if c.c11:
        entries[(1, 1, 6)] = c.c11
    _put_skew(entries, 1, 2, 4, c.c12)
    _put_skew(entries, 1, 2, 5, c.c13)
    _put_skew(entries, 1, 2, 6, c.c14)
    _put_skew(entries, 1, 3, 5, c.c12)
    _put_skew(entries, 1, 3, 6, c.c13)
    _put_skew(entries, 1, 4, 6, c.c12 - c.c23)
    _put_skew(entries, 2, 3, 6, c.c23)
    return tensor_from_entries(7, entries)


def build8(c: Params8) -> StructureTensor:
    """Multiplication table of the dim-8 family member L(C).

    Raises :class:`ConstraintViolation` when C is outside the family variety;
    a vector violating the membership constraint is not an algebra of this
    class and silently projecting it would corrupt the classification.
    """
    defect = membership_defect(c)
    if defect:
        raise ConstraintViolation(
            f"c34*(c23 + 2*c12) = {defect} must vanish for a dim-8 family member"
        )
    entries = _chain_entries(8)
    if c.c00:
        entries[(0, 0, 7)] = c.c00
    if c.c01:
        entries[(0, 1, 7)] = c.c01
    if c.c11:
        entries[(1, 1, 7)] = c.c11
    _put_skew(entries, 1, 2, 4, c.c12)
    _put_skew(entries, 1, 2, 5, c.c13)
    _put_skew(entries, 1, 2, 6, c.c14)
    _put_skew(entries, 1, 2, 7, c.c15)
    _put_skew(entries, 1, 3, 5, c.c12)
    _put_skew(entries, 1, 3, 6, c.c13)
    _put_skew(entries, 1, 3, 7, c.c14)
    _put_skew(entries, 1, 4, 6, c.c12 - c.c23)
    _put_skew(entries, 1, 4, 7, c.c13 - c.c24)
    _put_skew(entries, 1, 5, 7, c.c12 - _TWO * c.c23)
    _put_skew(entries, 2, 3, 6, c.c23)
    _put_skew(entries, 2, 3, 7, c.c24)
    _put_skew(entries, 2, 4, 7, c.c23)
    # Alternating central row: [e_i, e_{7-i}] = (-1)^i c34 e_7 for i = 1..3;
    # the i >= 4 instances are the skew partners of these.
    if c.c34:
        _put_skew(entries, 1, 6, 7, -c.c34)
        _put_skew(entries, 2, 5, 7, c.c34)
        _put_skew(entries, 3, 4, 7, -c.c34)
    return tensor_from_entries(8, entries)


def extract7(t: StructureTensor) -> Params7:
    """Read the parameters back from a tensor and verify the table shape."""
    if t.dim != 7:
        raise DimensionMismatch(f"extract7 needs dim 7, got {t.dim}")
    g = t.gamma
    c = Params7(
        c00=g[0][0][6],
        c01=g[0][1][6],
        c11=g[1][1][6],
        c12=g[1][2][4],
        c13=g[1][2][5],
        c14=g[1][2][6],
        c23=g[2][3][6],
    )
    _verify_shape(t, build7(c))
    return c


def extract8(t: StructureTensor) -> Params8:
    """Dim-8 counterpart of :func:`extract7`, including the membership check."""
    if t.dim != 8:
        raise DimensionMismatch(f"extract8 needs dim 8, got {t.dim}")
    g = t.gamma
    c = Params8(
        c00=g[0][0][7],
        c01=g[0][1][7],
        c11=g[1][1][7],
        c12=g[1][2][4],
        c13=g[1][2][5],
        c14=g[1][2][6],
        c15=g[1][2][7],
        c23=g[2][3][6],
        c24=g[2][3][7],
        c34=-g[1][6][7],
    )
    if membership_defect(c):
        raise NotInFamily("tensor parameters violate the membership constraint")
    _verify_shape(t, build8(c))
    return c


def _verify_shape(t: StructureTensor, rebuilt: StructureTensor) -> None:
    if t.gamma == rebuilt.gamma:
        return
    for i in range(t.dim):
        for j in range(t.dim):
            for k in range(t.dim):
                if t.gamma[i][j][k] != rebuilt.gamma[i][j][k]:
                    raise NotInFamily("tensor disagrees with the family table", (i, j, k))
    raise NotInFamily("tensor disagrees with the family table")  # pragma: no cover


# -- pre-unification tables and their coupling relations ----------------


@dataclass(frozen=True)
class RawTable7:
    """Structure constants of the dim-7 table before unification."""

    a14: GaussianRational = ZERO
    a15: GaussianRational = ZERO
    a25: GaussianRational = ZERO
    b00: GaussianRational = ZERO
    b01: GaussianRational = ZERO
    b11: GaussianRational = ZERO
    b12: GaussianRational = ZERO
    b13: GaussianRational = ZERO
    b14: GaussianRational = ZERO
    b15: GaussianRational = ZERO
    b23: GaussianRational = ZERO
    b24: GaussianRational = ZERO


@dataclass(frozen=True)
class RawTable8:
    """Structure constants of the dim-8 table before unification.

    The e7-coefficient of [e_1, e_6] is routed through the alternating b34
    row, so the symbol "b16" of the fifth coupling relation is -b34 here.
    """

    a14: GaussianRational = ZERO
    a15: GaussianRational = ZERO
    a16: GaussianRational = ZERO
    a26: GaussianRational = ZERO
    b00: GaussianRational = ZERO
    b01: GaussianRational = ZERO
    b11: GaussianRational = ZERO
    b12: GaussianRational = ZERO
    b13: GaussianRational = ZERO
    b14: GaussianRational = ZERO
    b15: GaussianRational = ZERO
    b23: GaussianRational = ZERO
    b24: GaussianRational = ZERO
    b34: GaussianRational = ZERO


def check_lemma7(raw: RawTable7) -> list[tuple[str, GaussianRational]]:
    """Residuals of the three Leibniz-forced relations; empty iff all hold."""
    residuals = [
        ("b13 = a15", raw.b13 - raw.a15),
        ("b14 = a14 - b23", raw.b14 - (raw.a14 - raw.b23)),
        ("b15 = 0", raw.b15),
        ("b24 = 0", raw.b24),
        ("a25 = 0", raw.a25),
    ]
    return [(name, r) for name, r in residuals if r]


def check_lemma8(raw: RawTable8) -> list[tuple[str, GaussianRational]]:
    """Residuals of the five Leibniz-forced relations; empty iff all hold."""
    residuals = [
        ("b13 = a16", raw.b13 - raw.a16),
        ("b14 = a15 - b23", raw.b14 - (raw.a15 - raw.b23)),
        ("b24 = a26", raw.b24 - raw.a26),
        ("b15 = a14 - 2*a26", raw.b15 - (raw.a14 - _TWO * raw.a26)),
        ("b16*(a26 + 2*a14) = 0", (-raw.b34) * (raw.a26 + _TWO * raw.a14)),
    ]
    return [(name, r) for name, r in residuals if r]


def raw_from_params7(c: Params7) -> RawTable7:
    """Raw table of a unified parameter vector (the relations' general solution)."""
    return RawTable7(
        a14=c.c12,
        a15=c.c13,
        a25=ZERO,
        b00=c.c00,
        b01=c.c01,
        b11=c.c11,
        b12=c.c14,
        b13=c.c13,
        b14=c.c12 - c.c23,
        b15=ZERO,
        b23=c.c23,
        b24=ZERO,
    )


def raw_from_params8(c: Params8) -> RawTable8:
    if membership_defect(c):
        raise ConstraintViolation("raw table requires the membership constraint")
    return RawTable8(
        a14=c.c12,
        a15=c.c13,
        a16=c.c14,
        a26=c.c23,
        b00=c.c00,
        b01=c.c01,
        b11=c.c11,
        b12=c.c15,
        b13=c.c14,
        b14=c.c13 - c.c24,
        b15=c.c12 - _TWO * c.c23,
        b23=c.c24,
        b24=c.c23,
        b34=c.c34,
    )
