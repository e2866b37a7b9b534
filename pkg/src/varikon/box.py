"""2x2x2 Varikon Box state model.

Eight cells indexed by i = x + 2y + 4z over coordinates (x,y,z) in
{0,1}^3. The solved state has piece k in cell k-1 and the blank in
cell 7. A move slides the piece adjacent to the blank along one axis
into the blank, i.e. it toggles one coordinate bit of the blank's cell;
every move is an involution.

Letter-to-bit assignment: R toggles bit 0, B toggles bit 1, U toggles
bit 2. This is the assignment under which RBRB cycles pieces (5,6,7),
which pins down everything else (see three_cycle_atoms).
"""

import random
from collections import deque
from . import perm

BLANK = None
SOLVED = (1, 2, 3, 4, 5, 6, 7, BLANK)
LETTERS = "RUB"
AXIS_BIT = {"R": 0, "B": 1, "U": 2}

N_REACHABLE = 20160  # 8!/2


def blank_cell(c) -> int:
    return c.index(BLANK)


def apply_move(c, m: str):
    b = c.index(BLANK)
    j = b ^ (1 << AXIS_BIT[m])
    cells = list(c)
    cells[b], cells[j] = cells[j], cells[b]
    return tuple(cells)


def parse_word(text: str) -> str:
    if not isinstance(text, str):
        raise ValueError("word must be a string")
    for ch in text:
        if ch not in AXIS_BIT:
            raise ValueError(f"unknown move letter {ch!r} in {text!r}")
    return text


def apply_word(c, text: str):
    for m in parse_word(text):
        c = apply_move(c, m)
    return c


def phi(text: str) -> tuple[int, int, int]:
    """Letter counts of a word, mod 2, as (r, u, b).

    Equals the blank's coordinate displacement: each letter toggles its
    bit of the blank cell, so only counts mod 2 survive.
    """
    w = parse_word(text)
    return (w.count("R") % 2, w.count("U") % 2, w.count("B") % 2)


def config_perm(c) -> perm.Perm:
    """The configuration as an 8-point permutation relative to the
    solved state (blank counted as point 8)."""
    return tuple(7 if v is BLANK else v - 1 for v in c)


def piece_perm(c) -> perm.Perm:
    """The 7-point piece permutation of a config whose blank is home."""
    if c[7] is not BLANK:
        raise ValueError("blank not in its home cell")
    return tuple(v - 1 for v in c[:7])


def is_reachable(c) -> bool:
    """Parity test: reachable iff the 8-point permutation parity equals
    the parity of the blank's Hamming distance from cell 7."""
    distance = (blank_cell(c) ^ 7).bit_count()
    return perm.parity(config_perm(c)) == distance % 2


def enumerate_reachable() -> set:
    """BFS from the solved state over {R,U,B}."""
    seen = {SOLVED}
    queue = deque([SOLVED])
    while queue:
        c = queue.popleft()
        for m in LETTERS:
            nc = apply_move(c, m)
            if nc not in seen:
                seen.add(nc)
                queue.append(nc)
    return seen


# ---------------------------------------------------------------------------
# Perfect-hash ranking: rank = blank_cell * 2520 + (lexicographic index of
# the piece sequence, cells read in order skipping the blank) // 2. The
# halving works because exactly one of each last-two-swapped sequence pair
# is reachable for a given blank cell.

_FACT = [1, 1, 2, 6, 24, 120, 720]


def _seq_of(c) -> list[int]:
    return [v for v in c if v is not BLANK]


def _seq_parity_for_blank(b: int) -> int:
    # Parity of the 7-piece sequence (relative to sorted order) that a
    # reachable config with blank cell b must have: the 8-point parity
    # constraint is popcount(b^7) mod 2, and deleting the blank from
    # position b costs another (7-b) transpositions, which mod 2 leaves
    # the two high bits of b^7.
    d = b ^ 7
    return ((d >> 1) + (d >> 2)) % 2


def rank(c) -> int:
    b = blank_cell(c)
    seq = _seq_of(c)
    lex = 0
    for i in range(7):
        smaller = sum(1 for v in seq[i + 1:] if v < seq[i])
        lex += smaller * _FACT[6 - i]
    return b * 2520 + lex // 2


def unrank(r: int):
    if not 0 <= r < N_REACHABLE:
        raise ValueError(f"rank out of range: {r}")
    b, half = divmod(r, 2520)
    lex = 2 * half
    pool = [1, 2, 3, 4, 5, 6, 7]
    seq = []
    for i in range(7):
        digit, lex = divmod(lex, _FACT[6 - i])
        seq.append(pool.pop(digit))
    if perm.parity(tuple(v - 1 for v in seq)) != _seq_parity_for_blank(b):
        seq[-1], seq[-2] = seq[-2], seq[-1]
    seq.insert(b, BLANK)
    return tuple(seq)


def random_reachable(seed: int):
    """Uniform over the 20,160 reachable configs; deterministic in seed."""
    return unrank(random.Random(seed).randrange(N_REACHABLE))


# ---------------------------------------------------------------------------

def three_cycle_atoms() -> dict[tuple[str, str], perm.Perm]:
    """Piece permutation of solved*(XYXY) for each ordered letter pair.

    Each is a 3-cycle leaving the blank home; the three unordered pairs
    give the cycles (5,6,7), (3,4,7) and (2,4,6), and reversing a pair
    inverts its cycle.
    """
    atoms = {}
    for x in LETTERS:
        for y in LETTERS:
            if x == y:
                continue
            c = apply_word(SOLVED, (x + y) * 2)
            p = piece_perm(c)
            moved = [i for i in range(7) if p[i] != i]
            if len(moved) != 3:
                raise ValueError(f"pair ({x},{y}) is not a 3-cycle: "
                                 f"{perm.format_cycles(p)}")
            atoms[(x, y)] = p
    expected = {"(5,6,7)", "(3,4,7)", "(2,4,6)"}
    seen_cycles = set()
    for (x, y), p in atoms.items():
        if atoms[(y, x)] != perm.inverse(p):
            raise ValueError(f"pair ({y},{x}) is not the inverse of ({x},{y})")
        text = perm.format_cycles(p)
        inv_text = perm.format_cycles(perm.inverse(p))
        if text not in expected and inv_text not in expected:
            raise ValueError(f"unexpected cycle {text} for pair ({x},{y})")
        seen_cycles.add(text if text in expected else inv_text)
    if seen_cycles != expected:
        raise ValueError(f"cycles {seen_cycles} do not cover {expected}")
    return atoms


def subgroup_order(letters, start=SOLVED) -> int:
    """Orbit size of a config under the subgroup generated by the given
    letters. The action is regular, so this is the subgroup order."""
    seen = {start}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        for m in letters:
            nc = apply_move(c, m)
            if nc not in seen:
                seen.add(nc)
                queue.append(nc)
    return len(seen)


def dihedral_check(x: str, y: str, configs=None) -> list:
    """Verify the dihedral presentation of <X,Y> as maps on every
    reachable config: X^2 = e, (XY)^6 = e, XY*X = X*(XY)^-1, order 12."""
    from .report import Check

    if x == y or x not in AXIS_BIT or y not in AXIS_BIT:
        raise ValueError(f"need two distinct move letters, got {x!r},{y!r}")
    if configs is None:
        configs = enumerate_reachable()

    def holds_everywhere(word_a, word_b):
        return all(apply_word(c, word_a) == apply_word(c, word_b)
                   for c in configs)

    # (XY)^-1 computed as the inverse of the XY action map, not by word
    # manipulation, so the braid relation check does not presuppose that
    # letters are involutions.
    xy_inverse = {apply_word(c, x + y): c for c in configs}
    braid = all(apply_word(apply_word(c, x + y), x)
                == xy_inverse[apply_word(c, x)] for c in configs)

    checks = [
        Check(f"{x}^2 = e", True, holds_everywhere(x + x, "")),
        Check(f"({x}{y})^6 = e", True, holds_everywhere((x + y) * 6, "")),
        Check(f"{x}{y}.{x} = {x}.({x}{y})^-1", True, braid),
        Check(f"|<{x},{y}>| = 12", 12, subgroup_order(x + y)),
    ]
    return checks


def parse_config(text: str):
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != 8:
        raise ValueError(f"expected 8 tokens, got {len(tokens)}")
    cells = []
    for t in tokens:
        if t == "_":
            cells.append(BLANK)
        else:
            try:
                v = int(t)
            except ValueError:
                raise ValueError(f"bad token {t!r}") from None
            if not 1 <= v <= 7:
                raise ValueError(f"piece {v} out of range 1..7")
            cells.append(v)
    config = tuple(cells)
    if sorted(config_perm(config)) != list(range(8)):
        raise ValueError("config must contain each of 1..7 and _ once")
    return config


def format_config(c) -> str:
    return ",".join("_" if v is BLANK else str(v) for v in c)
