"""Dense GF(2) linear algebra on int bitsets.

Row ``i`` of a matrix is a Python int whose bit ``j`` is the entry ``(i, j)``.
Python ints are arbitrary precision, so there is no dimension cap on the
packed representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple


class DimensionTooLarge(ValueError):
    pass


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Gf2Matrix:
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if len(rows) != self.n:
            raise ValueError("need exactly n rows")
        if any(r < 0 or r >> self.n for r in rows):
            raise ValueError("row wider than n")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return cls(n, tuple(rows))

    @classmethod
    def zeros(cls, n: int) -> "Gf2Matrix":
        return cls(n, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def diagonal(cls, n: int, support: Iterable[int]) -> "Gf2Matrix":
        rows = [0] * n
        for k in support:
            rows[k] = 1 << k
        return cls(n, tuple(rows))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def to_numpy(self):
        import numpy as np
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.n, self.n)

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return Gf2Matrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for k in _bits(r):
                acc ^= other.rows[k]
            out.append(acc)
        return Gf2Matrix(self.n, tuple(out))

    def is_symmetric(self) -> bool:
        return all(self[i, j] == self[j, i] for i in range(self.n) for j in range(i))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.to_lists())


def square(m: Gf2Matrix) -> Gf2Matrix:
    """``m @ m`` over GF(2): row ``i`` is the XOR of rows ``k`` with ``m[i, k] = 1``."""
    return m @ m


def is_idempotent(m: Gf2Matrix) -> bool:
    return square(m) == m


class Equation(NamedTuple):
    """``sum of X_k for k in support == rhs``; ``support`` is a bitmask."""

    support: int
    rhs: int
    tag: Optional[tuple] = None

    @property
    def variables(self) -> List[int]:
        return _bits(self.support)

    def holds(self, x: Sequence[int]) -> bool:
        total = 0
        for k in self.variables:
            total ^= x[k] & 1
        return total == (self.rhs & 1)

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        names = names or [str(k + 1) for k in range(max(self.variables, default=0) + 1)]
        lhs = " + ".join(f"X{names[k]}" for k in self.variables) or "0"
        return f"{lhs} = {self.rhs}"


@dataclass(frozen=True)
class Gf2System:
    nvars: int
    equations: Tuple[Equation, ...]

    def __post_init__(self):
        eqs = tuple(e if isinstance(e, Equation) else Equation(*e) for e in self.equations)
        for e in eqs:
            if e.support < 0 or e.support >> self.nvars:
                raise ValueError("equation refers to a variable >= nvars")
        object.__setattr__(self, "equations", eqs)

    @classmethod
    def from_pairs(cls, nvars: int, items: Iterable[Tuple[Iterable[int], int]]) -> "Gf2System":
        eqs = []
        for support, rhs in items:
            mask = 0
            for k in support:
                mask ^= 1 << k
            eqs.append(Equation(mask, rhs & 1))
        return cls(nvars, tuple(eqs))

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return all(e.holds(x) for e in self.equations)


@dataclass(frozen=True)
class Gf2Solution:
    """Outcome of :func:`solve`.

    When the system is inconsistent, ``witness`` lists indices of equations
    whose sum is ``0 = 1``.
    """

    consistent: bool
    particular: Optional[Tuple[int, ...]]
    free_vars: Tuple[int, ...]
    rank: int
    kernel: Tuple[Tuple[int, ...], ...] = ()
    witness: Tuple[int, ...] = ()

    @property
    def count(self) -> int:
        return 2 ** len(self.free_vars) if self.consistent else 0

    def solutions(self):
        """Every solution vector; exponential in the number of free variables."""
        if not self.consistent:
            return
        for mask in range(1 << len(self.kernel)):
            x = list(self.particular)
            for b, vec in enumerate(self.kernel):
                if mask >> b & 1:
                    x = [a ^ v for a, v in zip(x, vec)]
            yield tuple(x)


def solve(system: Gf2System) -> Gf2Solution:
    """Gauss-Jordan elimination, pivoting on the lowest column index first.

    Each working row also records which input equations were summed into it,
    so an inconsistency comes back with the equations that produce ``0 = 1``.
    """
    nv = system.nvars
    rhs_bit = 1 << nv
    # pivots[col] = (row bits incl. rhs, combination of input equations)
    pivots: dict = {}
    witness = None
    for idx, eq in enumerate(system.equations):
        row = eq.support | (rhs_bit if eq.rhs & 1 else 0)
        comb = 1 << idx
        for col in sorted(pivots):
            if row >> col & 1:
                prow, pcomb = pivots[col]
                row ^= prow
                comb ^= pcomb
        support = row & (rhs_bit - 1)
        if not support:
            if row and witness is None:
                witness = tuple(_bits(comb))
            continue
        col = (support & -support).bit_length() - 1
        for other in pivots:
            prow, pcomb = pivots[other]
            if prow >> col & 1:
                pivots[other] = (prow ^ row, pcomb ^ comb)
        pivots[col] = (row, comb)

    free = tuple(k for k in range(nv) if k not in pivots)
    rank = len(pivots)
    if witness is not None:
        return Gf2Solution(False, None, free, rank, (), witness)

    particular = [0] * nv
    for col, (row, _) in pivots.items():
        particular[col] = (row >> nv) & 1
    kernel = []
    for f in free:
        vec = [0] * nv
        vec[f] = 1
        for col, (row, _) in pivots.items():
            vec[col] = (row >> f) & 1
        kernel.append(tuple(vec))
    return Gf2Solution(True, tuple(particular), free, rank, tuple(kernel), ())


def stz_bruteforce(m: Gf2Matrix, limit: int = 24) -> Optional[frozenset]:
    """Search every diagonal ``D`` for an idempotent ``m + D``.

    Returns the set of diagonal positions of the first ``D`` found (in
    increasing bitmask order) or ``None``.  Test oracle only: ``2**n`` work.
    """
    if m.n > limit:
        raise DimensionTooLarge(f"n={m.n} exceeds brute-force limit {limit}")
    n = m.n
    for mask in range(1 << n):
        rows = tuple(r ^ (((mask >> i) & 1) << i) for i, r in enumerate(m.rows))
        cand = Gf2Matrix(n, rows)
        if is_idempotent(cand):
            return frozenset(_bits(mask))
    return None
