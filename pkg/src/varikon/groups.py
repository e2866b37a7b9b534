"""Move sequences as group elements, and the structural checks.

The move group acts on the reachable configurations; the stabilizer of
the solved state is trivial and the orbit is everything, so an element
is determined by the image of the solved state under any word realizing
it. Elements are therefore carried as (canon config, witness word)
pairs and compared by canon.

One trap shapes the code below: the cell trajectory of a word depends
on where the blank starts, so a group element has no single well
defined cell permutation. Products, commutators and centralizers are
evaluated on the action itself by concatenating witness words, never by
composing 8-point permutations; those appear only where every element
involved keeps the blank in one place.
"""

import random
from collections import deque
from dataclasses import dataclass

from . import box, perm
from .report import Check, Report


@dataclass(frozen=True)
class GroupElement:
    canon: tuple
    witness: str


IDENTITY = GroupElement(box.SOLVED, "")


def element(word: str) -> GroupElement:
    return GroupElement(box.apply_word(box.SOLVED, word), word)


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement(box.apply_word(g.canon, h.witness),
                        g.witness + h.witness)


def commutes(g: GroupElement, h: GroupElement) -> bool:
    return multiply(g, h).canon == multiply(h, g).canon


def config_of(p: perm.Perm):
    return tuple(box.BLANK if v == 7 else v + 1 for v in p)


# ---------------------------------------------------------------------------

class DistanceTable:
    """Shortest word lengths from the identity over {R,U,B}, indexed by
    the perfect-hash rank of each reachable config."""

    def __init__(self):
        move_rank = {m: [0] * box.N_REACHABLE for m in box.LETTERS}
        for r in range(box.N_REACHABLE):
            c = box.unrank(r)
            for m in box.LETTERS:
                move_rank[m][r] = box.rank(box.apply_move(c, m))
        self.move_rank = move_rank

        depth = [-1] * box.N_REACHABLE
        parent = [""] * box.N_REACHABLE
        root = box.rank(box.SOLVED)
        depth[root] = 0
        queue = deque([root])
        while queue:
            r = queue.popleft()
            d = depth[r] + 1
            for m in box.LETTERS:
                nr = move_rank[m][r]
                if depth[nr] < 0:
                    depth[nr] = d
                    parent[nr] = m
                    queue.append(nr)
        if min(depth) < 0:
            raise AssertionError("BFS did not reach every rank")
        self.depth = depth
        self.parent = parent
        self.max_depth = max(depth)

    def histogram(self) -> list[tuple[int, int]]:
        counts: dict[int, int] = {}
        for d in self.depth:
            counts[d] = counts.get(d, 0) + 1
        return sorted(counts.items())

    def depth_of(self, c) -> int:
        return self.depth[box.rank(c)]

    def word_to(self, c) -> str:
        """A shortest word taking the solved state to c."""
        r = box.rank(c)
        letters = []
        while self.depth[r] > 0:
            m = self.parent[r]
            letters.append(m)
            r = self.move_rank[m][r]  # letters are involutions
        return "".join(reversed(letters))


def build_distance_table() -> DistanceTable:
    """God's algorithm: exhaustive BFS over the Cayley graph."""
    return DistanceTable()


# ---------------------------------------------------------------------------

def center(table: DistanceTable) -> list[GroupElement]:
    """Elements commuting with the three single-letter generators
    (sufficient, since the letters generate the whole group).

    g commutes with letter m iff the words (witness + m) and
    (m + witness) land on the same config from the solved state; both
    sides are walked in rank space.
    """
    mr = table.move_rank
    root = box.rank(box.SOLVED)
    out = []
    for r in range(box.N_REACHABLE):
        c = box.unrank(r)
        w = table.word_to(c)
        central = True
        for m in box.LETTERS:
            left = mr[m][r]
            right = mr[m][root]
            for letter in w:
                right = mr[letter][right]
            if left != right:
                central = False
                break
        if central:
            out.append(GroupElement(c, w))
    return out


# The three 18-move words realizing the nontrivial central elements;
# their images of the solved state are the three half-turn images of the
# whole box (one per axis).
CENTER_WORDS = (
    "RURURBRBUBRBRBUBRB",
    "RURURBRURUBUBURURB",
    "RURUBUBRBUBUBRBUBU",
)

_AXIS_OF_MASK = {3: "U", 5: "B", 6: "R"}  # mask flips the other two bits


def half_turn_image(mask: int):
    """Image of the solved state under the 180-degree whole-box rotation
    that maps cell j to j ^ mask (mask has two bits set)."""
    return tuple(box.SOLVED[j ^ mask] for j in range(8))


def verify_center_words(center_elements, sample_seed: int = 0) -> Report:
    rep = Report("center words")
    center_canons = {z.canon for z in center_elements}
    rep.add("|Z|", 4, len(center_elements))
    for z in center_elements:
        if z.canon != box.SOLVED:
            rep.add(f"order of center element at rank {box.rank(z.canon)}",
                    box.SOLVED, multiply(z, z).canon, note="order 2")

    word_canons = set()
    rng = random.Random(sample_seed)
    for i, w in enumerate(CENTER_WORDS, start=1):
        z = element(w)
        word_canons.add(z.canon)
        rep.add(f"word {i} central (commutes with R,U,B)", True,
                all(commutes(z, element(m)) for m in box.LETTERS))
        rep.add(f"word {i} order 2", box.SOLVED, multiply(z, z).canon)
        rep.add(f"word {i} in computed center", True, z.canon in center_canons)
        mask = box.blank_cell(z.canon) ^ 7
        rep.add(f"word {i} image is a half-turn image",
                half_turn_image(mask) if mask in _AXIS_OF_MASK else None,
                z.canon,
                note=f"axis {_AXIS_OF_MASK.get(mask, '?')}")
        sample = ["".join(rng.choice(box.LETTERS) for _ in range(rng.randrange(1, 25)))
                  for _ in range(100)]
        rep.add(f"word {i} commutes with 100 random words", True,
                all(commutes(z, element(v)) for v in sample))

    rep.add("center words + identity exhaust the center",
            center_canons, word_canons | {box.SOLVED})
    rep.add("center images are the solved state and its three half-turns",
            {box.SOLVED} | {half_turn_image(m) for m in (3, 5, 6)},
            center_canons)
    return rep


# ---------------------------------------------------------------------------

def subgroup_K(table: DistanceTable) -> list[GroupElement]:
    """The kernel of the parity-vector homomorphism: elements whose
    canon keeps the blank home."""
    out = []
    for r in range(7 * 2520, 8 * 2520):  # blank cell 7 block of the ranking
        c = box.unrank(r)
        out.append(GroupElement(c, table.word_to(c)))
    return out


def verify_K_is_A7(kernel) -> Report:
    rep = Report("kernel acts as the even permutations of the pieces")
    rep.add("|K|", 2520, len(kernel))
    piece_perms = {box.piece_perm(k.canon) for k in kernel}
    rep.add("piece permutations of K = all even 7-point permutations",
            perm.all_even(7), piece_perms)
    rep.add("every K element has even piece permutation", True,
            all(perm.parity(p) == 0 for p in piece_perms))
    rep.add("RBRB element lies in K", True,
            element("RBRB").canon in {k.canon for k in kernel})
    return rep


# Five 3-cycles through the fixed pair (5,6) generate the even
# permutations of the seven pieces; used as an explicit generating set
# for K in the commutation sweep below.
K_GENERATOR_CYCLES = ("(5,6,1)", "(5,6,2)", "(5,6,3)", "(5,6,4)", "(5,6,7)")


def verify_structure(table: DistanceTable, center_elements) -> Report:
    rep = Report("group structure")
    kernel = subgroup_K(table)
    k_canons = {k.canon for k in kernel}
    r_subgroup = {box.SOLVED, element("R").canon}

    # (a) K and <R> meet trivially
    rep.add("(a) K intersect <R>", {box.SOLVED}, k_canons & r_subgroup)

    # (b) the product set K<R> has order 5040
    kr_canons = set(k_canons)
    for c in k_canons:
        kr_canons.add(box.apply_move(c, "R"))
    rep.add("(b) |K<R>|", 5040, len(kr_canons))

    # (c) K<R> meets the center trivially
    z_canons = {z.canon for z in center_elements}
    rep.add("(c) K<R> intersect Z", {box.SOLVED}, kr_canons & z_canons)

    # (d) order bookkeeping |K<R>| * |Z| = |G|
    rep.add("(d) |K<R>| * |Z|", box.N_REACHABLE,
            len(kr_canons) * len(z_canons))
    rep.add("(d) |G| from the regular action", box.N_REACHABLE,
            len(table.depth))

    # (e) the center of K<R> is trivial, which upgrades K<R> from
    # "A7 x Z2 or S7" to S7
    kgen_perms = [perm.parse_cycles(t, 8) for t in K_GENERATOR_CYCLES]
    rep.add("(e) named 3-cycles generate all even piece permutations",
            2520, len(perm.generate([p[:7] for p in kgen_perms])))

    mr = table.move_rank

    def walk(r: int, word: str) -> int:
        for letter in word:
            r = mr[letter][r]
        return r

    # generating elements of K<R>: the letter R plus one element per
    # named 3-cycle (cycle direction is irrelevant to generation and to
    # commutation, so the canon built from the cycle image serves)
    gen_words = ["R"] + [table.word_to(config_of(p)) for p in kgen_perms]
    root = box.rank(box.SOLVED)
    seen = {root}
    queue = deque([root])
    while queue:
        r = queue.popleft()
        for w in gen_words:
            nr = walk(r, w)
            if nr not in seen:
                seen.add(nr)
                queue.append(nr)
    kr_ranks = {box.rank(c) for c in kr_canons}
    rep.add("(e) closure of R + the 3-cycles equals K<R>", True,
            seen == kr_ranks)

    gen_roots = [walk(root, w) for w in gen_words]
    central = []
    for r in sorted(kr_ranks):
        w = table.word_to(box.unrank(r))
        if all(walk(r, gw) == walk(gr, w)
               for gw, gr in zip(gen_words, gen_roots)):
            central.append(box.unrank(r))
    rep.add("(e) center of K<R>", [box.SOLVED], central)

    # (f) Z is a Klein four-group
    rep.add("(f) |Z|", 4, len(center_elements))
    rep.add("(f) every nontrivial center element has order 2", True,
            all(multiply(z, z).canon == box.SOLVED for z in center_elements))

    conclusion = "S7 x (Z2)^2" if rep.passed else "unresolved"
    rep.add("conclusion: G is the direct product of K<R> and Z",
            "S7 x (Z2)^2", conclusion)
    return rep
