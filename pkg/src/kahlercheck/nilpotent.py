"""Word evaluation in the free two-step nilpotent group over the rationals.

Elements are pairs (v, w): an abelianized vector v in Q^n and a
commutator part w in the wedge square of Q^n.  The closed product law

    (v, w) * (v', w') = (v + v', w + w' + (1/2) v ^ v')

is the degree-2 Campbell-Hausdorff formula; powers are simply
(m v, m w), for any integer m.  This gives a second, independently
coded route to the degree-2 invariants computed by the series pipeline,
used for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .linalg import RationalMatrix, nullspace, rank, wedge_pairs
from .presentation import Presentation, Word


def _wedge(u: tuple[Fraction, ...], v: tuple[Fraction, ...],
           n: int) -> tuple[Fraction, ...]:
    return tuple(u[i] * v[j] - u[j] * v[i] for i, j in wedge_pairs(n))


@dataclass(frozen=True)
class NilpotentElement:
    n: int
    abelian: tuple[Fraction, ...]      # length n
    commutator: tuple[Fraction, ...]   # length C(n,2), wedge_pairs order

    def __post_init__(self) -> None:
        if len(self.abelian) != self.n or len(self.commutator) != comb(self.n, 2):
            raise ValueError("component lengths do not match n")

    def __mul__(self, other: "NilpotentElement") -> "NilpotentElement":
        if self.n != other.n:
            raise ValueError("mixed ranks")
        half_wedge = _wedge(self.abelian, other.abelian, self.n)
        return NilpotentElement(
            self.n,
            tuple(a + b for a, b in zip(self.abelian, other.abelian)),
            tuple(
                w1 + w2 + hw / 2
                for w1, w2, hw in zip(self.commutator, other.commutator, half_wedge)
            ),
        )

    def inverse(self) -> "NilpotentElement":
        return NilpotentElement(
            self.n,
            tuple(-a for a in self.abelian),
            tuple(-w for w in self.commutator),
        )

    def power(self, m: int) -> "NilpotentElement":
        return NilpotentElement(
            self.n,
            tuple(m * a for a in self.abelian),
            tuple(m * w for w in self.commutator),
        )


def identity(n: int) -> NilpotentElement:
    z = Fraction(0)
    return NilpotentElement(n, (z,) * n, (z,) * comb(n, 2))


def generator(index: int, n: int) -> NilpotentElement:
    if not 0 <= index < n:
        raise ValueError(f"generator index {index} out of range for n={n}")
    z = Fraction(0)
    abelian = tuple(Fraction(1) if i == index else z for i in range(n))
    return NilpotentElement(n, abelian, (z,) * comb(n, 2))


def evaluate(word: Word, n: int) -> NilpotentElement:
    """Left-to-right product of the generator images raised to the exponents."""
    if word.max_generator() >= n:
        raise ValueError("word uses a generator index outside the ambient rank")
    acc = identity(n)
    for index, exponent in word.letters:
        acc = acc * generator(index, n).power(exponent)
    return acc


def commutator_quotient_dim(pres: Presentation) -> int:
    """Dimension of the degree-2 graded piece, by the joint-span formula.

    Inside the wedge square of Q^n, span the wedges of each relator's
    abelianized vector with every coordinate vector, together with the
    commutator parts of the exponent-cancelling relator combinations;
    the degree-2 piece is the quotient by that span.
    """
    n = pres.n
    values = [evaluate(rel, n) for rel in pres.relators]
    pairs = wedge_pairs(n)
    rows: list[tuple[Fraction, ...]] = []
    unit = [Fraction(0)] * n
    for val in values:
        for j in range(n):
            unit[j] = Fraction(1)
            rows.append(_wedge(val.abelian, tuple(unit), n))
            unit[j] = Fraction(0)
    exponents = RationalMatrix.from_rows([v.abelian for v in values], n)
    kernel = nullspace(exponents.transpose())
    for col in range(kernel.cols):
        lam = kernel.column(col)
        rows.append(
            tuple(
                sum((lam[r] * values[r].commutator[p] for r in range(len(values))),
                    Fraction(0))
                for p in range(len(pairs))
            )
        )
    span = RationalMatrix.from_rows(rows, len(pairs))
    return comb(n, 2) - rank(span)
