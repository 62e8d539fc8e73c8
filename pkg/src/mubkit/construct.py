"""Partitioned unitary error bases: construction from a finite field, from
a MUB family plus Hadamard data, and from a Latin square; verification of
the UEB and partition laws; eigenvalue-table extraction; conjugation.

Partition convention, fixed positionally rather than by labels: in the d x d
operator table ``ops[x][a]``, the identity sits at (0, 0), the distinguished
commuting class C_* consists of the a = 0 column for x != 0, and class C_x
consists of row x with a != 0. Each class therefore has exactly d-1 members
and, together with the identity, forms a maximal commuting set.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import cplx
from .characters import (
    ControlledHadamard,
    Hadamard,
    additive_character_matrix,
    is_controlled_hadamard,
    is_dephased,
    is_hadamard,
    _matrix_of,
)
from .errors import (
    DephasingWarning,
    NotCanonicalForm,
    NotHadamard,
    NotLatinSquare,
    NotPartitionedUeb,
    NotUnitary,
    PreconditionFailed,
    ShapeMismatch,
)
from .gf import FiniteField
from .mub import MubFamily, is_maximal_mub_family, mub_from_ueb


@dataclass
class PartitionedUeb:
    """d x d table of d x d unitaries with the positional partition
    described in the module docstring."""

    d: int
    ops: list

    def __post_init__(self):
        if len(self.ops) != self.d:
            raise ShapeMismatch(f"expected {self.d} rows of operators, got {len(self.ops)}")
        table = []
        for row in self.ops:
            if len(row) != self.d:
                raise ShapeMismatch(f"expected {self.d} operators per row, got {len(row)}")
            table.append([cplx.as_matrix(u) for u in row])
            for u in table[-1]:
                if u.shape != (self.d, self.d):
                    raise ShapeMismatch(f"operator has shape {u.shape}, expected {(self.d, self.d)}")
        self.ops = table

    def op(self, x: int, a: int) -> np.ndarray:
        return self.ops[x][a]

    def class_star(self) -> list:
        """The d-1 operators U_{x,0}, x != 0."""
        return [self.ops[x][0] for x in range(1, self.d)]

    def class_ops(self, x: int) -> list:
        """The d-1 operators U_{x,a}, a != 0."""
        return [self.ops[x][a] for a in range(1, self.d)]

    def flat(self) -> np.ndarray:
        """(d*d, d, d) stack in row-major (x, a) order."""
        return np.stack([self.ops[x][a] for x in range(self.d) for a in range(self.d)])


def ueb_from_field(f: FiniteField) -> PartitionedUeb:
    """Partitioned UEB built directly from field arithmetic.

    On basis states, with chi the additive character table,

        U_{x,a} |i> = chi[1][i*a] |i + a*x>   for a != 0,
        U_{x,0} |i> = |i + x>,

    so entries are exact roots of unity and zeros. The a = 0 column is the
    regular representation of the additive group (the shift operators) and
    forms the distinguished class.
    """
    d = f.d
    chi = additive_character_matrix(f).matrix
    add = f.add_table
    mul = f.mul_table
    ops = []
    for x in range(d):
        row = []
        for a in range(d):
            u = np.zeros((d, d), dtype=np.complex128)
            if a == 0:
                for i in range(d):
                    u[add[i, x], i] = 1.0
            else:
                shift = mul[a, x]
                for i in range(d):
                    u[add[i, shift], i] = chi[1, mul[i, a]]
            row.append(u)
        ops.append(row)
    return PartitionedUeb(d, ops)


def is_latin_square(square) -> bool:
    s = np.asarray(square, dtype=np.int64)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        return False
    want = np.arange(s.shape[0])
    for k in range(s.shape[0]):
        if not np.array_equal(np.sort(s[k, :]), want):
            return False
        if not np.array_equal(np.sort(s[:, k]), want):
            return False
    return True


def shift_multiply_ueb(square, hadamards, tol: float = cplx.DEFAULT_TOL) -> list:
    """Shift-and-multiply operator table V_{i,j}|k> = H[i][k] |L[k][j]>.

    ``hadamards`` is a single Hadamard (used for every shift) or a family
    indexed by the shift column j. Unitarity comes from the Latin-square
    columns and unit-modulus phases; the trace law from Hadamard row
    orthogonality. Returns a raw d x d table (no partition is implied).
    """
    s = np.asarray(square, dtype=np.int64)
    if not is_latin_square(s):
        raise NotLatinSquare("rows/columns are not permutations of 0..d-1")
    d = s.shape[0]
    if isinstance(hadamards, ControlledHadamard):
        members = [hadamards.member(j) for j in range(hadamards.control_dim)]
    elif isinstance(hadamards, (list, tuple)):
        members = [_matrix_of(h) for h in hadamards]
    else:
        members = [_matrix_of(hadamards)] * d
    if len(members) != d:
        raise ShapeMismatch(f"expected {d} Hadamards, got {len(members)}")
    for h in members:
        if h.shape != (d, d) or not is_hadamard(h, tol):
            raise NotHadamard("shift-and-multiply phase matrix fails the Hadamard laws")

    table = []
    for i in range(d):
        row = []
        for j in range(d):
            v = np.zeros((d, d), dtype=np.complex128)
            h = members[j]
            for k in range(d):
                v[s[k, j], k] = h[i, k]
            row.append(v)
        table.append(row)
    return table


def _column_conditions(m: np.ndarray, ones_col: bool, zero_sum_from: int, tol: float) -> bool:
    """Relaxed Hadamard conditions consumed by the UEB proof: first column
    all ones (when requested) and vanishing column sums from a given column."""
    d = m.shape[0]
    if ones_col and cplx.max_abs(m[:, 0] - 1.0) >= tol:
        return False
    sums = np.abs(m.sum(axis=0))
    return bool(np.all(sums[zero_sum_from:] < d * tol))


def ueb_from_mub(family: MubFamily, controlled: ControlledHadamard, g,
                 tol: float = cplx.DEFAULT_TOL) -> PartitionedUeb:
    """Partitioned UEB from a maximal MUB family plus eigenvalue data.

    Class member U_{x,a} (a != 0) is the operator with eigenbasis x of the
    family and eigenvalue row j of the x-th controlled-Hadamard member:

        U_{x,a} = sum_j H^x[j][a] |b^x_j><b^x_j|

    while U_{x,0} = sum_j G[j][x] |b^*_j><b^*_j| is diagonal in the
    distinguished basis, so the distinguished class of the output is
    diagonal whenever the family is canonical (basis * = identity, in which
    case |b^*_j> = |j> exactly).

    Inputs are validated eagerly and failures name the violated law. Full
    dephasing of H^x and G is the textbook hypothesis; the weaker column
    conditions actually consumed by the trace-law computation are accepted
    with a :class:`DephasingWarning`.
    """
    d = family.d
    if not is_maximal_mub_family(family, tol):
        raise PreconditionFailed("M: is_maximal_mub_family failed")
    if controlled.control_dim != d or controlled.d != d:
        raise PreconditionFailed("H: control_dim must equal the family dimension")
    if not is_controlled_hadamard(controlled, tol):
        raise PreconditionFailed("H: is_controlled_hadamard failed")
    g = _matrix_of(g)
    if g.shape != (d, d) or not is_hadamard(g, tol):
        raise PreconditionFailed("G: is_hadamard failed")

    fully_dephased = is_dephased(g, tol) and all(
        is_dephased(controlled.member(x), tol) for x in range(d)
    )
    if not fully_dephased:
        for x in range(d):
            if not _column_conditions(controlled.member(x), True, 1, tol):
                raise PreconditionFailed(
                    f"H^{x}: neither dephased nor satisfying the column conditions"
                )
        if not _column_conditions(g, True, 1, tol):
            raise PreconditionFailed("G: neither dephased nor satisfying the column conditions")
        warnings.warn(
            "Hadamard data passes the relaxed column conditions but is not dephased",
            DephasingWarning,
        )

    star = family.basis("*")
    ops = []
    for x in range(d):
        bx = family.basis(x)
        hx = controlled.member(x)
        row = []
        for a in range(d):
            if a == 0:
                u = (star * g[:, x]) @ star.conj().T
            else:
                u = (bx * hx[:, a]) @ bx.conj().T
            row.append(u)
        ops.append(row)
    return PartitionedUeb(d, ops)


def eigendata(ueb: PartitionedUeb, tol: float = cplx.DEFAULT_TOL, seed: int = 0):
    """Inverse of :func:`ueb_from_mub` on canonical-form tables.

    Requires the distinguished class diagonal. Returns (family, H, G) where
    G[j][x] is the j-th diagonal entry of U_{x,0}, H^x[j][a] the eigenvalue
    of U_{x,a} on basis-x column j (with a convention column of ones at
    a = 0). Feeding the result back into :func:`ueb_from_mub` reproduces
    the table entrywise, since this is its spectral decomposition.
    """
    if not is_partitioned_ueb(ueb, tol):
        raise NotPartitionedUeb("input fails the partitioned UEB laws")
    d = ueb.d
    for u in ueb.class_star():
        if cplx.max_abs(u - np.diag(np.diag(u))) >= tol:
            raise NotCanonicalForm("distinguished class is not diagonal")

    family = mub_from_ueb(ueb, tol, seed)
    g = np.empty((d, d), dtype=np.complex128)
    for x in range(d):
        g[:, x] = np.diag(ueb.op(x, 0))
    members = []
    for x in range(d):
        bx = family.basis(x)
        hx = np.ones((d, d), dtype=np.complex128)
        for a in range(1, d):
            hx[:, a] = np.diag(bx.conj().T @ ueb.op(x, a) @ bx)
        members.append(Hadamard(d, hx))
    return family, ControlledHadamard(d, members), Hadamard(d, g)


def conjugate_ueb(ueb: PartitionedUeb, w, tol: float = cplx.DEFAULT_TOL) -> PartitionedUeb:
    """Replace every operator by W† U W; all UEB and partition laws are
    preserved since conjugation preserves traces, products and commutators."""
    w = cplx.as_matrix(w)
    if not cplx.is_unitary(w, tol):
        raise NotUnitary("conjugating matrix is not unitary within tolerance")
    wd = w.conj().T
    return PartitionedUeb(
        ueb.d, [[wd @ ueb.op(x, a) @ w for a in range(ueb.d)] for x in range(ueb.d)]
    )


def _as_flat_table(table):
    """(d*d, d, d) stack plus d from either a PartitionedUeb or a raw table."""
    if isinstance(table, PartitionedUeb):
        return table.flat(), table.d
    rows = [[cplx.as_matrix(u) for u in row] for row in table]
    d = len(rows)
    for row in rows:
        if len(row) != d:
            raise ShapeMismatch("operator table is not square")
        for u in row:
            if u.shape != (d, d):
                raise ShapeMismatch(f"operator has shape {u.shape}, expected {(d, d)}")
    return np.stack([u for row in rows for u in row]), d


def is_ueb(table, tol: float = cplx.DEFAULT_TOL) -> bool:
    """All d^2 operators unitary and tr(U† U') = d * delta under the flat
    index pairing (the trace law)."""
    flat, d = _as_flat_table(table)
    eye = np.eye(d)
    for u in flat:
        if cplx.max_abs(u.conj().T @ u - eye) >= tol:
            return False
    gram = np.einsum("aij,bij->ab", flat.conj(), flat)
    return cplx.max_abs(gram - d * np.eye(d * d)) < tol


def is_partitioned_ueb(ueb: PartitionedUeb, tol: float = cplx.DEFAULT_TOL) -> bool:
    """UEB laws plus: identity at (0,0), the distinguished class pairwise
    commuting, and every class x pairwise commuting (class sizes d-1 are
    structural in the table)."""
    if not isinstance(ueb, PartitionedUeb):
        ueb = PartitionedUeb(len(ueb), ueb)
    if not is_ueb(ueb, tol):
        return False
    d = ueb.d
    if cplx.max_abs(ueb.op(0, 0) - np.eye(d)) >= tol:
        return False
    classes = [ueb.class_star()] + [ueb.class_ops(x) for x in range(d)]
    for ops in classes:
        for i in range(len(ops)):
            for j in range(i + 1, len(ops)):
                if not cplx.commutes(ops[i], ops[j], tol):
                    return False
    return True
