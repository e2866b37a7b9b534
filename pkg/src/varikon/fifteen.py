"""15-Puzzle with wrap-around rows and columns.

Cells are indexed row-major, 4*row + col, rows top to bottom and
columns left to right. R slides a piece right into the blank (the blank
moves one column left), U slides a piece up (the blank moves one row
down); at the boundary the whole row or column shifts cyclically, so
both moves are total and have order 4.
"""

import re
from . import perm

BLANK = None
SOLVED = tuple(range(1, 16)) + (BLANK,)

_WORD_TOKEN = re.compile(r"([RU])(\d*)")


def blank_cell(c) -> int:
    return c.index(BLANK)


def apply_move(c, m: str):
    cells = list(c)
    b = blank_cell(c)
    row, col = divmod(b, 4)
    if m == "R":
        if col > 0:
            cells[b], cells[b - 1] = cells[b - 1], cells[b]
        else:
            # blank in column 0: whole row shifts one column left,
            # blank wraps to column 3
            old = cells[4 * row : 4 * row + 4]
            cells[4 * row : 4 * row + 4] = old[1:] + old[:1]
    elif m == "U":
        if row < 3:
            cells[b], cells[b + 4] = cells[b + 4], cells[b]
        else:
            # blank in row 3: whole column shifts one row down,
            # blank wraps to row 0
            old = [cells[4 * r + col] for r in range(4)]
            new = old[-1:] + old[:-1]
            for r in range(4):
                cells[4 * r + col] = new[r]
    else:
        raise ValueError(f"unknown move letter {m!r}")
    return tuple(cells)


def parse_word(text: str) -> str:
    """Expand a word over {R,U} with optional decimal exponents, e.g.
    "U3R" -> "UUUR". Returns the flat letter string."""
    if not isinstance(text, str):
        raise ValueError("word must be a string")
    pos = 0
    out = []
    for match in _WORD_TOKEN.finditer(text):
        if match.start() != pos:
            raise ValueError(f"malformed word at offset {pos}: {text!r}")
        letter, exp = match.groups()
        out.append(letter * (int(exp) if exp else 1))
        pos = match.end()
    if pos != len(text):
        raise ValueError(f"malformed word at offset {pos}: {text!r}")
    return "".join(out)


def invert_word(text: str) -> str:
    """Formal inverse of a word: letters reversed, each replaced by its
    cube (R has order 4, so R^-1 = R^3; likewise U)."""
    return "".join(letter + "3" for letter in reversed(parse_word(text)))


def apply_word(c, text: str):
    for m in parse_word(text):
        c = apply_move(c, m)
    return c


def config_perm(c) -> perm.Perm:
    """The configuration as a 16-point permutation relative to the
    solved state (blank counted as point 16)."""
    return tuple(15 if v is BLANK else v - 1 for v in c)


def is_solvable(c) -> bool:
    """Parity test: solvable iff the 16-point permutation parity equals
    the parity of the blank's taxicab distance to the home corner."""
    row, col = divmod(blank_cell(c), 4)
    distance = (3 - row) + (3 - col)
    return perm.parity(config_perm(c)) == distance % 2


INNER_CYCLE = "U3R3U3R3UR3URUR2U3"


def sigma_word(n: int) -> str:
    """The conjugating word (U3R)(U3R3U3R3UR3URUR2U3)^n (U3R)^-1."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return "U3R" + INNER_CYCLE * n + invert_word("U3R")


def three_cycle_word(n: int) -> str:
    """sigma_n (RU3R3U) sigma_n^-1."""
    s = sigma_word(n)
    return s + "RU3R3U" + invert_word(s)


def three_cycle_family() -> dict[int, perm.Perm]:
    """Permutations effected by three_cycle_word(n) for n = 0..12.

    Each must be a 3-cycle moving 11, 12 and one other piece; together
    they cover every third piece except 11 and 12. Violations raise
    with the offending n.
    """
    family = {}
    covered = set()
    for n in range(13):
        p = config_perm(apply_word(SOLVED, three_cycle_word(n)))
        moved = {i + 1 for i in range(16) if p[i] != i}
        if len(moved) != 3 or not {11, 12} <= moved:
            raise ValueError(
                f"n={n}: expected a 3-cycle on 11, 12 and one more, got "
                f"{perm.format_cycles(p)}")
        (extra,) = moved - {11, 12}
        if extra in covered:
            raise ValueError(f"n={n}: third point {extra} repeated")
        covered.add(extra)
        family[n] = p
    if covered != set(range(1, 16)) - {11, 12}:
        raise ValueError(f"family misses third points: {covered}")
    return family


def parse_config(text: str):
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != 16:
        raise ValueError(f"expected 16 tokens, got {len(tokens)}")
    cells = []
    for t in tokens:
        if t == "_":
            cells.append(BLANK)
        else:
            try:
                v = int(t)
            except ValueError:
                raise ValueError(f"bad token {t!r}") from None
            if not 1 <= v <= 15:
                raise ValueError(f"piece {v} out of range 1..15")
            cells.append(v)
    config = tuple(cells)
    if sorted(config_perm(config)) != list(range(16)):
        raise ValueError("config must contain each of 1..15 and _ once")
    return config


def format_config(c) -> str:
    return ",".join("_" if v is BLANK else str(v) for v in c)
