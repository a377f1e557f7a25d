"""Linear maps between bit-word spaces, given by their generator images.

A map is stored as the ordered list of images v_1..v_n of the standard
basis: x maps to the XOR of the v_i over the set bits of x.  Rank over
GF(2) decides injectivity.  The module also owns the two on-disk formats
(generator matrix and explicit truth table) used by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitword import (
    DEFAULT_PAIR_BUDGET,
    BitWord,
    BudgetExceededError,
)


@dataclass(frozen=True)
class LinearMap:
    input_dim: int
    output_dim: int
    generators: tuple[BitWord, ...]

    def __post_init__(self) -> None:
        if self.input_dim < 1 or self.output_dim < 1:
            raise ValueError("dimensions must be >= 1")
        if len(self.generators) != self.input_dim:
            raise ValueError(
                f"expected {self.input_dim} generators, got {len(self.generators)}"
            )
        for g in self.generators:
            if g.width != self.output_dim:
                raise ValueError(
                    f"generator width {g.width} != output dim {self.output_dim}"
                )


@dataclass(frozen=True)
class TruthTableMap:
    """Explicit input -> output table for an arbitrary map between word
    spaces. Entry j is the image of the input with integer value j."""

    input_dim: int
    output_dim: int
    table: tuple[BitWord, ...]

    def __post_init__(self) -> None:
        if self.input_dim < 1 or self.output_dim < 1:
            raise ValueError("dimensions must be >= 1")
        if len(self.table) != 1 << self.input_dim:
            raise ValueError(
                f"table must have {1 << self.input_dim} entries, got {len(self.table)}"
            )
        for w in self.table:
            if w.width != self.output_dim:
                raise ValueError(
                    f"table entry width {w.width} != output dim {self.output_dim}"
                )

    def is_injective(self) -> bool:
        return len({w.value for w in self.table}) == len(self.table)

    def lookup(self, x: BitWord) -> BitWord:
        if x.width != self.input_dim:
            raise ValueError(f"width mismatch: {x.width} != {self.input_dim}")
        return self.table[x.value]


def apply(map_: LinearMap, x: BitWord) -> BitWord:
    """Image of x: XOR of the generators at the set bits of x."""
    if x.width != map_.input_dim:
        raise ValueError(f"width mismatch: {x.width} != {map_.input_dim}")
    n = map_.input_dim
    acc = 0
    xv = x.value
    for i in range(n):
        if (xv >> (n - 1 - i)) & 1:
            acc ^= map_.generators[i].value
    return BitWord(map_.output_dim, acc)


def rank(rows: list[BitWord] | tuple[BitWord, ...]) -> int:
    """Rank of the row set over GF(2).

    Forward elimination, pivoting on the highest remaining bit (the lowest
    word index); inputs are never mutated.
    """
    if not rows:
        return 0
    width = rows[0].width
    for r in rows:
        if r.width != width:
            raise ValueError("rows must share one width")
    return _rank_ints(r.value for r in rows)


def _rank_ints(values) -> int:
    pivots: dict[int, int] = {}
    r = 0
    for v in values:
        v = _reduce(v, pivots)
        if v:
            pivots[v.bit_length() - 1] = v
            r += 1
    return r


def _reduce(v: int, pivots: dict[int, int]) -> int:
    while v:
        p = v.bit_length() - 1
        if p not in pivots:
            break
        v ^= pivots[p]
    return v


def transpose(map_: LinearMap) -> LinearMap:
    """Swap rows and columns of a square generator matrix."""
    n, m = map_.input_dim, map_.output_dim
    if n != m:
        raise ValueError(f"transpose needs a square matrix, got {n}x{m}")
    cols = []
    for i in range(1, n + 1):
        acc = 0
        for j, g in enumerate(map_.generators, start=1):
            bit = (g.value >> (m - i)) & 1
            acc |= bit << (n - j)
        cols.append(BitWord(n, acc))
    return LinearMap(n, m, tuple(cols))


def tabulate(
    map_: LinearMap, *, budget: int = DEFAULT_PAIR_BUDGET
) -> TruthTableMap:
    """Materialize the full truth table: entry j = apply(map, word j)."""
    n, m = map_.input_dim, map_.output_dim
    size = 1 << n
    if size > budget:
        raise BudgetExceededError(size, budget, what="table entries")
    gens = [g.value for g in map_.generators]
    values = [0] * size
    # Entry j gets generator i XORed in exactly when bit i of j is set,
    # which is apply() evaluated entry by entry.
    for i in range(n):
        gv = gens[i]
        bit = 1 << (n - 1 - i)
        for j in range(size):
            if j & bit:
                values[j] ^= gv
    return TruthTableMap(n, m, tuple(BitWord(m, v) for v in values))


# ---------------------------------------------------------------------------
# File formats. Both start with a "n m" header line. A generator matrix
# file follows with n rows of m characters; a truth table file with 2^n
# lines "input output" in ascending input order. Serialization is
# canonical (single \n separators, trailing newline) so files round-trip
# byte for byte.


def serialize_generator_matrix(map_: LinearMap) -> str:
    lines = [f"{map_.input_dim} {map_.output_dim}"]
    lines.extend(str(g) for g in map_.generators)
    return "\n".join(lines) + "\n"


def parse_generator_matrix(text: str) -> LinearMap:
    lines = _split_lines(text)
    n, m = _parse_header(lines[0])
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} rows after header, got {len(lines) - 1}")
    gens = []
    for row in lines[1:]:
        w = BitWord.parse(row)
        if w.width != m:
            raise ValueError(f"row width {w.width} != {m}")
        gens.append(w)
    return LinearMap(n, m, tuple(gens))


def serialize_truth_table(map_: TruthTableMap) -> str:
    n = map_.input_dim
    lines = [f"{n} {map_.output_dim}"]
    lines.extend(
        f"{format(j, f'0{n}b')} {out}" for j, out in enumerate(map_.table)
    )
    return "\n".join(lines) + "\n"


def parse_truth_table(text: str) -> TruthTableMap:
    lines = _split_lines(text)
    n, m = _parse_header(lines[0])
    size = 1 << n
    if len(lines) != size + 1:
        raise ValueError(
            f"expected {size} entries after header, got {len(lines) - 1}"
        )
    outputs = []
    for j, line in enumerate(lines[1:]):
        parts = line.split(" ")
        if len(parts) != 2:
            raise ValueError(f"bad table line: {line!r}")
        inp, out = parts
        if inp != format(j, f"0{n}b"):
            raise ValueError(
                f"table inputs must ascend: expected {format(j, f'0{n}b')}, got {inp!r}"
            )
        w = BitWord.parse(out)
        if w.width != m:
            raise ValueError(f"output width {w.width} != {m}")
        outputs.append(w)
    return TruthTableMap(n, m, tuple(outputs))


def parse_map_file(text: str) -> LinearMap | TruthTableMap:
    """Sniff the format: table lines carry two fields, matrix rows one."""
    lines = _split_lines(text)
    if len(lines) < 2:
        raise ValueError("map file needs a header and at least one row")
    if " " in lines[1]:
        return parse_truth_table(text)
    return parse_generator_matrix(text)


def _split_lines(text: str) -> list[str]:
    if not text.endswith("\n"):
        raise ValueError("map file must end with a newline")
    lines = text[:-1].split("\n")
    if not lines or not lines[0]:
        raise ValueError("empty map file")
    return lines


def _parse_header(line: str) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2:
        raise ValueError(f"bad header line: {line!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"bad header line: {line!r}") from None
    if n < 1 or m < 1:
        raise ValueError(f"bad dimensions in header: {line!r}")
    return n, m
