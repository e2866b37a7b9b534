"""Solvers for the box: optimal descent on the distance table, and the
setup + shortest-word heuristic.

The heuristic brings piece 1 opposite the blank with a short move
prefix, reads the remaining six pieces as an even permutation, looks up
its shortest word over the three 3-cycle generators, and expands each
abstract letter into a 4-move alternating pair. "Orientation freely
changed" is realized as conjugation by a whole-box rotation: the chosen
rotation relabels cells and move letters consistently and costs no
moves. Only rotations whose rotated-solved image is itself reachable
are usable (half of the 24), which constrains where the blank may sit
after setup; the setup search therefore deepens past the nominal two
moves when required.

Three solve targets are supported:
  strict   - the solved state itself (identity rotation only);
  center   - solved up to the three half-turn images (the center),
             i.e. the rotations that keep the axes in place;
  rotation - solved up to any reachable whole-box rotation.
"""

import time
from collections import deque
from dataclasses import dataclass
from itertools import permutations

from . import box, perm, words

MODES = ("strict", "center", "rotation")

_BIT_LETTER = {bit: letter for letter, bit in box.AXIS_BIT.items()}


# ---------------------------------------------------------------------------
# Whole-box rotations. A rotation is a permutation of the 3 coordinate
# bits combined with a coordinate flip mask; it is orientation-preserving
# (a physical rotation, not a reflection) iff the bit permutation parity
# matches the flip count parity.

@dataclass(frozen=True)
class Rotation:
    cells: tuple     # physical cell i -> rotated cell index
    bit_perm: tuple  # physical axis bit a -> rotated axis bit
    mask: int

    def target(self):
        """Image of the solved state in this rotated frame: the config
        that looks solved once the box is turned by the rotation."""
        return tuple(
            box.BLANK if self.cells[i] == 7 else self.cells[i] + 1
            for i in range(8))

    def frame_letter_to_physical(self, letter: str) -> str:
        """The physical move that realizes a frame-coordinate move."""
        frame_bit = box.AXIS_BIT[letter]
        return _BIT_LETTER[self.bit_perm.index(frame_bit)]


def all_rotations() -> list[Rotation]:
    out = []
    for bp in permutations(range(3)):
        for mask in range(8):
            if perm.parity(bp) == bin(mask).count("1") % 2:
                cells = []
                for i in range(8):
                    img = 0
                    for a in range(3):
                        if i >> a & 1:
                            img |= 1 << bp[a]
                    cells.append(img ^ mask)
                out.append(Rotation(tuple(cells), bp, mask))
    return out


def reachable_rotations() -> list[Rotation]:
    """Rotations whose rotated-solved image can actually be reached;
    exactly 12 of the 24 qualify (the puzzle's parity invariant rules
    out the rest)."""
    return [r for r in all_rotations() if box.is_reachable(r.target())]


IDENTITY_ROTATION = Rotation(tuple(range(8)), (0, 1, 2), 0)


# ---------------------------------------------------------------------------
# Relabeling the six unsolved pieces onto the abstract points 1..6.

@dataclass(frozen=True)
class Relabel:
    beta: tuple   # piece k (k = 2..7) -> abstract point beta[k-2] (0-based)
    assign: tuple # ordered letter pair realizing +g, per generator index

    def to_abstract(self, piece_perm6: perm.Perm) -> perm.Perm:
        a = [0] * 6
        for i in range(6):
            a[self.beta[i]] = self.beta[piece_perm6[i]]
        return tuple(a)

    def expansion_pair(self, signed: int) -> tuple[str, str]:
        x, y = self.assign[abs(signed) - 1]
        return (x, y) if signed > 0 else (y, x)


_SUBPROBLEM_PAIRS = (("R", "B"), ("R", "U"), ("U", "B"))


def _atom_on_six(atom7: perm.Perm) -> perm.Perm:
    if atom7[0] != 0:
        raise ValueError("alternating pair moved piece 1")
    return tuple(atom7[i + 1] - 1 for i in range(6))


def relabel_map() -> Relabel:
    """Search the 720 bijections {pieces 2..7} -> {points 1..6} for those
    conjugating the three alternating-pair cycles onto the three abstract
    generators (each possibly onto the inverse). Six bijections qualify;
    the one with the fewest inverted matches (then least image tuple) is
    taken, so the choice is deterministic.
    """
    gens = [perm.parse_cycles(t, 6) for t in words.A6_GENERATOR_CYCLES]
    atoms = box.three_cycle_atoms()
    sigmas = {pair: _atom_on_six(atoms[pair]) for pair in _SUBPROBLEM_PAIRS}

    candidates = []
    for bimg in permutations(range(6)):
        assign = {}
        ok = True
        for pair, sigma in sigmas.items():
            conj = [0] * 6
            for i in range(6):
                conj[bimg[i]] = bimg[sigma[i]]
            conj = tuple(conj)
            hit = None
            for gi, g in enumerate(gens, start=1):
                if conj == g:
                    hit = (gi, False)
                elif conj == perm.inverse(g):
                    hit = (gi, True)
            if hit is None or hit[0] in (v[0] for v in assign.values()):
                ok = False
                break
            assign[pair] = hit
        if ok:
            inverted = sum(1 for v in assign.values() if v[1])
            candidates.append((inverted, bimg, assign))
    if not candidates:
        raise AssertionError("no bijection conjugates the pair cycles "
                             "onto the generators; move semantics broken")
    _, bimg, assign = min(candidates)
    pair_for_gen = [None, None, None]
    for pair, (gi, flipped) in assign.items():
        x, y = pair
        pair_for_gen[gi - 1] = (y, x) if flipped else (x, y)
    return Relabel(bimg, tuple(pair_for_gen))


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Solution:
    method: str
    moves: str
    phases: tuple  # (label, word) pairs
    target: tuple  # config actually reached

    @property
    def total(self) -> int:
        return len(self.moves)

    def phase_length(self, label: str) -> int:
        return sum(len(w) for lab, w in self.phases if lab == label)


class Solver:
    """Holds the built tables; all solve calls are pure given them."""

    def __init__(self, distance_table=None):
        self.table5 = words.build_a5_table()
        self.table6 = words.build_a6_table()
        self.relabel = relabel_map()
        self.rotations = reachable_rotations()
        self._frames_for_blank: dict[int, list[Rotation]] = {}
        for rot in self.rotations:
            b = rot.cells.index(7)
            self._frames_for_blank.setdefault(b, []).append(rot)
        self._distance = distance_table

    @property
    def distance(self):
        if self._distance is None:
            from .groups import build_distance_table
            self._distance = build_distance_table()
        return self._distance

    # -- optimal ------------------------------------------------------

    def solve_optimal(self, c) -> Solution:
        """Distance-table descent: repeatedly apply the first letter (in
        R,U,B order) that strictly decreases the BFS depth."""
        if not box.is_reachable(c):
            raise ValueError("config is not reachable")
        table = self.distance
        r = box.rank(c)
        letters = []
        while table.depth[r] > 0:
            for m in box.LETTERS:
                nr = table.move_rank[m][r]
                if table.depth[nr] == table.depth[r] - 1:
                    letters.append(m)
                    r = nr
                    break
            else:
                raise AssertionError("no descending move; table corrupt")
        word = "".join(letters)
        if box.apply_word(c, word) != box.SOLVED:
            raise AssertionError("optimal descent missed the solved state")
        return Solution("optimal", word, (("optimal", word),), box.SOLVED)

    # -- setup --------------------------------------------------------

    def _admissible_frames(self, state, mode: str) -> list[Rotation]:
        b = box.blank_cell(state)
        if state[b ^ 7] != 1:
            return []
        if mode == "strict":
            return [IDENTITY_ROTATION] if b == 7 else []
        frames = self._frames_for_blank.get(b, [])
        if mode == "center":
            return [r for r in frames if r.bit_perm == (0, 1, 2)]
        if mode == "rotation":
            return frames
        raise ValueError(f"unknown target mode {mode!r}")

    def residual_abstract(self, state, rot: Rotation) -> perm.Perm:
        """The six unsolved pieces of a set-up state, as a permutation of
        the abstract points."""
        inv_cells = [0] * 8
        for i, v in enumerate(rot.cells):
            inv_cells[v] = i
        piece6 = tuple(state[inv_cells[k - 1]] - 2 for k in range(2, 8))
        a = self.relabel.to_abstract(piece6)
        if perm.parity(a) != 0:
            raise AssertionError("set-up residual is odd; frame admission "
                                 "is broken")
        return a

    def setup_phase(self, c, mode: str = "strict"):
        """Shortest move word making piece 1 opposite the blank with an
        admissible frame for the mode. Among shortest setups the one
        whose residual has the shortest table word wins (then word text,
        then frame order). Returns (word, state, rotation, residual).
        """
        if not box.is_reachable(c):
            raise ValueError("config is not reachable")
        seen = {c}
        layer = [("", c)]
        while True:
            candidates = []
            for w, s in layer:
                for rot in self._admissible_frames(s, mode):
                    a = self.residual_abstract(s, rot)
                    key = (len(self.table6.word_of(perm.inverse(a))), w,
                           rot.bit_perm, rot.mask)
                    candidates.append((key, w, s, rot, a))
            if candidates:
                _, w, s, rot, a = min(candidates)
                return w, s, rot, a
            nxt = []
            for w, s in layer:
                for m in box.LETTERS:
                    ns = box.apply_move(s, m)
                    if ns not in seen:
                        seen.add(ns)
                        nxt.append((w + m, ns))
            if not nxt:
                raise AssertionError("setup search exhausted the state "
                                     "space without a candidate")
            layer = nxt

    # -- expansion ----------------------------------------------------

    def _expand(self, performed, rot: Rotation) -> str:
        """Physical moves for abstract letters performed in order: each
        letter becomes its alternating pair XYXY, conjugated through the
        frame rotation."""
        out = []
        for s in performed:
            x, y = self.relabel.expansion_pair(s)
            for frame_letter in (x, y, x, y):
                out.append(rot.frame_letter_to_physical(frame_letter))
        return "".join(out)

    def _finish(self, c, method, setup_word, phys, rot) -> Solution:
        moves = setup_word + phys
        if box.apply_word(c, moves) != rot.target():
            raise AssertionError(
                f"{method} produced an invalid solution for "
                f"{box.format_config(c)}")
        return Solution(method, moves,
                        (("setup", setup_word), ("word-expansion", phys)),
                        rot.target())

    # -- heuristics ---------------------------------------------------

    def solve_heuristic_a6(self, c, mode: str = "strict") -> Solution:
        setup_word, _, rot, a = self.setup_phase(c, mode)
        # The residual composes contravariantly with performed letters
        # (the last letter performed acts first on the points), so the
        # canceling sequence is the reversed table word of the inverse.
        stored = self.table6.word_of(perm.inverse(a))
        performed = tuple(reversed(stored))
        phys = self._expand(performed, rot)
        return self._finish(c, "heuristic-a6", setup_word, phys, rot)

    _PREFIX_ALPHABET = (1, -1, 2, -2, 3, -3)

    def _effect(self, performed) -> perm.Perm:
        """Point action of performing abstract letters in order (last
        performed applied first)."""
        gens = self.table6.gens
        out = perm.identity(6)
        for s in reversed(performed):
            g = gens[s - 1] if s > 0 else perm.inverse(gens[-s - 1])
            out = perm.compose(out, g)
        return out

    def solve_heuristic_a5(self, c, mode: str = "strict") -> Solution:
        """Like the A6 path, but first homes the piece at abstract point
        6 with at most two extra generator applications, then uses the
        two-generator table on the remaining five points."""
        setup_word, _, rot, a = self.setup_phase(c, mode)
        best = None
        for plen in range(3):
            found = []
            for idx, prefix in enumerate(_signed_tuples(
                    self._PREFIX_ALPHABET, plen)):
                after = perm.compose(self._effect(prefix), a)
                if after[5] != 5:
                    continue
                stored5 = self.table5.word_of(perm.inverse(after[:5]))
                found.append((plen + len(stored5), idx, prefix, stored5))
            if found:
                best = min(found)
                break
        if best is None:
            raise AssertionError("piece 6 not homed within two generator "
                                 "applications")
        _, _, prefix, stored5 = best
        performed = prefix + tuple(reversed(stored5))
        phys = self._expand(performed, rot)
        return self._finish(c, "heuristic-a5", setup_word, phys, rot)

    # -- exhaustive comparison ----------------------------------------

    def compare_all(self, mode: str = "strict", methods=("a6", "a5")):
        """Optimal and heuristic lengths over every reachable config.

        Returns (summary dict, rows); rows are per-rank tuples of
        (rank, optimal, a6 total, a5 total) with None for methods not
        requested. Every heuristic solution is verified by application
        inside the solve calls.
        """
        table = self.distance
        t0 = time.perf_counter()
        rows = []
        for r in range(box.N_REACHABLE):
            c = box.unrank(r)
            a6 = self.solve_heuristic_a6(c, mode).total if "a6" in methods else None
            a5 = self.solve_heuristic_a5(c, mode).total if "a5" in methods else None
            rows.append((r, table.depth[r], a6, a5))
        summary = {
            "mode": mode,
            "configs": len(rows),
            "optimal_max": max(row[1] for row in rows),
            "optimal_mean": sum(row[1] for row in rows) / len(rows),
            "elapsed_s": round(time.perf_counter() - t0, 3),
        }
        for label, col in (("a6", 2), ("a5", 3)):
            if label in methods:
                totals = [row[col] for row in rows]
                gaps = [t - row[1] for t, row in zip(totals, rows)]
                summary[f"{label}_max"] = max(totals)
                summary[f"{label}_mean"] = sum(totals) / len(totals)
                summary[f"{label}_max_gap"] = max(gaps)
                summary[f"{label}_argmax"] = box.format_config(
                    box.unrank(totals.index(max(totals))))
        return summary, rows


def _signed_tuples(alphabet, length):
    if length == 0:
        yield ()
        return
    for rest in _signed_tuples(alphabet, length - 1):
        for s in alphabet:
            yield rest + (s,)
