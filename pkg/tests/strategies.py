"""Hypothesis strategies for words, presentations and small matrices."""

from fractions import Fraction

from hypothesis import strategies as st

from kahlercheck.linalg import RationalMatrix
from kahlercheck.presentation import Presentation, Word


def raw_letters(n: int, max_len: int = 12):
    return st.lists(
        st.tuples(st.integers(0, n - 1),
                  st.integers(-3, 3).filter(lambda e: e != 0)),
        max_size=max_len,
    )


@st.composite
def words_with_rank(draw, max_gens: int = 5, max_len: int = 12):
    n = draw(st.integers(1, max_gens))
    return n, Word(tuple(draw(raw_letters(n, max_len))))


@st.composite
def commutator_words_with_rank(draw, max_gens: int = 5):
    n = draw(st.integers(1, max_gens))
    word = Word()
    for _ in range(draw(st.integers(1, 3))):
        u = Word(tuple(draw(raw_letters(n, 3))))
        v = Word(tuple(draw(raw_letters(n, 3))))
        word = word * u * v * u.inverse() * v.inverse()
    return n, word


@st.composite
def presentations(draw, max_gens: int = 5, max_rels: int = 6):
    n = draw(st.integers(1, max_gens))
    s = draw(st.integers(0, max_rels))
    names = tuple(f"x{i}" for i in range(1, n + 1))
    relators = []
    for _ in range(s):
        if draw(st.booleans()):
            relators.append(Word(tuple(draw(raw_letters(n)))))
        else:
            u = Word(tuple(draw(raw_letters(n, 3))))
            v = Word(tuple(draw(raw_letters(n, 3))))
            relators.append(u * v * u.inverse() * v.inverse())
    return Presentation(names, tuple(relators))


@st.composite
def rational_matrices(draw, max_dim: int = 5):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    numer = st.integers(-6, 6)
    denom = st.integers(1, 4)
    entries = [
        [Fraction(draw(numer), draw(denom)) for _ in range(cols)]
        for _ in range(rows)
    ]
    return RationalMatrix.from_rows(entries, cols)
