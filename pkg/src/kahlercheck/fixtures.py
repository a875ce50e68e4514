"""Bundled presentation corpus: the worked examples plus control groups.

``write_corpus`` emits one ``.pres`` file per entry; contents are fixed
strings, so repeated runs are byte-identical.
"""

from __future__ import annotations

from pathlib import Path


def free_text(n: int) -> str:
    names = " ".join(f"x{i}" for i in range(1, n + 1))
    return f"gens: {names}\nrels:\n"


def surface_text(g: int) -> str:
    names = " ".join(f"a{i} b{i}" for i in range(1, g + 1))
    rel = " ".join(f"(a{i},b{i})" for i in range(1, g + 1))
    return f"gens: {names}\nrels: {rel}\n"


def chain_link_text(m: int) -> str:
    names = " ".join(f"x{i}" for i in range(1, m + 1))
    rels = " | ".join(
        f"(x{i},x{i % m + 1})" for i in range(1, m + 1)
    )
    return f"gens: {names}\nrels: {rels}\n"


def free_abelian_text(n: int) -> str:
    names = " ".join(f"x{i}" for i in range(1, n + 1))
    rels = " | ".join(
        f"(x{i},x{j})" for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )
    return f"gens: {names}\nrels: {rels}\n"


CORPUS: tuple[tuple[str, str], ...] = (
    ("free_f1", free_text(1)),
    ("free_f2", free_text(2)),
    ("free_f3", free_text(3)),
    ("free_f4", free_text(4)),
    ("free_f5", free_text(5)),
    ("bracket_depth3", "gens: x y\nrels: ((x,y),y)\n"),
    ("two_relator_rank2", "gens: x y z t\nrels: x^3 y^-4 z^2 y | y^2 z^2\n"),
    ("three_relator_rank2",
     "gens: x1 x2 x3 x4 x5\nrels: x1 x2^2 x1 | x2 x3^2 x2 | x5 x4^2 x5\n"),
    ("surface_g1", surface_text(1)),
    ("surface_g2", surface_text(2)),
    ("surface_g3", surface_text(3)),
    ("two_relator_q4",
     "gens: x1 x2 x3 x4\nrels: (x1 x2, x3^2) | (x1 x3 x1, x4^3)\n"),
    ("chain_link_4", chain_link_text(4)),
    ("chain_link_6", chain_link_text(6)),
    ("chain_link_8", chain_link_text(8)),
    ("chain_plus_power",
     "gens: x1 x2 x3 x4 x5\n"
     "rels: x1^2 x2^-2 x4^2 | (x1,x2) | (x2,x3) | (x3,x4) | (x4,x5)\n"),
    ("cyclic_5", "gens: x\nrels: x^5\n"),
    ("abelian_z4", free_abelian_text(4)),
)


def write_corpus(target: Path) -> list[Path]:
    """Write every corpus file under target; returns the written paths."""
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in CORPUS:
        path = target / f"{name}.pres"
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written
