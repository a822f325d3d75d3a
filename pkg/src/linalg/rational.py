"""
Exact rational vectors and dense matrices.

Scalars are fractions.Fraction, which keeps every value gcd-reduced with a
positive denominator. Vectors and matrices are immutable; all arithmetic
returns new values.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    """Coerce int / Fraction / "p/q" text to a Fraction. Floats are refused."""
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q" (the denominator is always written)."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class QVector:
    """Exact rational vector. Indexing is 0-based; coordinate() is 1-based."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(to_rational(v) for v in self.entries))

    @classmethod
    def of(cls, values: Iterable) -> "QVector":
        return cls(tuple(values))

    @classmethod
    def zeros(cls, n: int) -> "QVector":
        return cls((Fraction(0),) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "QVector":
        """e_i with 1-based i."""
        return cls(tuple(Fraction(1 if k == i - 1 else 0) for k in range(n)))

    @classmethod
    def characteristic(cls, n: int, members: Iterable[int]) -> "QVector":
        """chi_S for a set of 1-based labels."""
        chosen = set(members)
        return cls(tuple(Fraction(1 if k + 1 in chosen else 0) for k in range(n)))

    @classmethod
    def from_strings(cls, values: Sequence[str]) -> "QVector":
        return cls(tuple(parse_rational(v) for v in values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def coordinate(self, v: int) -> Fraction:
        return self.entries[v - 1]

    def _check_length(self, other: "QVector") -> None:
        if len(other) != len(self):
            raise ValueError(f"Length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "QVector") -> "QVector":
        self._check_length(other)
        return QVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QVector") -> "QVector":
        self._check_length(other)
        return QVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "QVector":
        return QVector(tuple(-a for a in self.entries))

    def scale(self, factor) -> "QVector":
        c = to_rational(factor)
        return QVector(tuple(c * a for a in self.entries))

    def dot(self, other: "QVector") -> Fraction:
        self._check_length(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def total(self) -> Fraction:
        """<v, e>"""
        return sum(self.entries, Fraction(0))

    def concat(self, other: "QVector") -> "QVector":
        return QVector(self.entries + other.entries)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_full(self) -> bool:
        return all(a != 0 for a in self.entries)

    def support(self) -> tuple[int, ...]:
        """1-based labels of nonzero coordinates."""
        return tuple(k + 1 for k, a in enumerate(self.entries) if a != 0)

    def is_01(self) -> bool:
        return all(a in (0, 1) for a in self.entries)

    def integral(self) -> tuple[int, ...]:
        """Smallest integer multiple, content removed, first nonzero entry positive."""
        if self.is_zero():
            return tuple(0 for _ in self.entries)
        common = lcm(*(a.denominator for a in self.entries))
        ints = [int(a * common) for a in self.entries]
        content = 0
        for value in ints:
            content = gcd(content, value)
        ints = [value // content for value in ints]
        if next(value for value in ints if value != 0) < 0:
            ints = [-value for value in ints]
        return tuple(ints)

    def is_proportional_to(self, other: "QVector") -> bool:
        """Nonzero vectors equal up to a nonzero scalar."""
        self._check_length(other)
        if self.is_zero() or other.is_zero():
            return False
        return self.integral() == other.integral()

    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self.entries]

    def __repr__(self) -> str:
        return "QVector(" + ", ".join(str(a) for a in self.entries) + ")"


@dataclass(frozen=True)
class QMatrix:
    """Dense exact matrix, row-major storage."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Invalid shape {self.rows}x{self.cols}")
        entries = tuple(to_rational(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"Expected {self.rows * self.cols} entries for a {self.rows}x{self.cols} "
                f"matrix, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("Ragged rows")
        return cls(len(rows), width, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(Fraction(1 if i == j else 0) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        """0-based access."""
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> QVector:
        start = i * self.cols
        return QVector(self.entries[start:start + self.cols])

    def column(self, j: int) -> QVector:
        return QVector(tuple(self.entries[i * self.cols + j] for i in range(self.rows)))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @cached_property
    def symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")
        return QMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")
        return QMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor) -> "QMatrix":
        c = to_rational(factor)
        return QMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other):
        if isinstance(other, QVector):
            if len(other) != self.cols:
                raise ValueError(f"Cannot multiply {self.shape} matrix by length-{len(other)} vector")
            return QVector(tuple(self.row(i).dot(other) for i in range(self.rows)))
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
            columns = [other.column(j) for j in range(other.cols)]
            return QMatrix.from_rows(
                [[self.row(i).dot(c) for c in columns] for i in range(self.rows)]
            )
        return NotImplemented

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_full(self) -> bool:
        return all(a != 0 for a in self.entries)

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(a) for a in row] for row in self.to_rows()]
