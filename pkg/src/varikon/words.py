"""Shortest-word tables over 3-cycle generators, for the two sliding
sub-problems (alternating groups on 5 and 6 points).

A table word is a tuple of signed 1-based generator indices: +k means
the k-th generator, -k its inverse. Products are left-to-right (the
first letter is applied first). BFS from the identity with the letter
alphabet ordered +1, -1, +2, -2, ... yields, for every element, the
lexicographically least word among the shortest ones.
"""

from collections import deque
from dataclasses import dataclass

from . import perm
from .report import Report

A5_GENERATOR_CYCLES = ("(1,2,3)", "(3,4,5)")
A6_GENERATOR_CYCLES = ("(1,2,3)", "(3,4,5)", "(5,6,1)")


def _signed_letters(gens):
    letters = []
    for i, g in enumerate(gens, start=1):
        letters.append((i, g))
        letters.append((-i, perm.inverse(g)))
    return letters


@dataclass(frozen=True)
class WordTable:
    gens: tuple
    entries: dict  # Perm -> word (tuple of signed generator indices)

    def __len__(self):
        return len(self.entries)

    def word_of(self, p: perm.Perm):
        return self.entries[p]

    def length_of(self, p: perm.Perm) -> int:
        return len(self.entries[p])

    def max_length(self) -> int:
        return max(len(w) for w in self.entries.values())

    def elements_of_length(self, k: int):
        return [p for p, w in self.entries.items() if len(w) == k]

    def length_histogram(self) -> list[tuple[int, int]]:
        counts: dict[int, int] = {}
        for w in self.entries.values():
            counts[len(w)] = counts.get(len(w), 0) + 1
        return sorted(counts.items())

    def compose_word(self, word) -> perm.Perm:
        """Re-expand a signed-index word to the element it denotes."""
        out = perm.identity(len(self.gens[0]))
        for s in word:
            g = self.gens[s - 1] if s > 0 else perm.inverse(self.gens[-s - 1])
            out = perm.compose(out, g)
        return out

    def csv_rows(self):
        rows = [("element", "length", "word")]
        for p in sorted(self.entries):
            w = self.entries[p]
            rows.append((perm.format_cycles(p), str(len(w)),
                         " ".join(f"{s:+d}" for s in w)))
        return rows


def build_table(gens) -> WordTable:
    gens = tuple(gens)
    letters = _signed_letters(gens)
    ident = perm.identity(len(gens[0]))
    entries = {ident: ()}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        w = entries[p]
        for s, g in letters:
            q = perm.compose(p, g)
            if q not in entries:
                entries[q] = w + (s,)
                queue.append(q)
    return WordTable(gens, entries)


def build_a5_table() -> WordTable:
    return build_table(perm.parse_cycles(t, 5) for t in A5_GENERATOR_CYCLES)


def build_a6_table() -> WordTable:
    return build_table(perm.parse_cycles(t, 6) for t in A6_GENERATOR_CYCLES)


# ---------------------------------------------------------------------------
# Reference factorizations quoted for the extremal elements, as
# (cycle, exponent) factor lists.

A5_MAX_ELEMENT = "(1,2)(4,5)"
A5_MAX_FACTORS = (("(3,4,5)", -1), ("(1,2,3)", +1), ("(3,4,5)", +1),
                  ("(1,2,3)", -1), ("(3,4,5)", -1), ("(1,2,3)", +1))

A6_EXAMPLE_ELEMENT = "(2,4,6)"
A6_EXAMPLE_FACTORS = (("(1,2,3)", +1), ("(3,4,5)", -1), ("(5,6,1)", -1),
                      ("(3,4,5)", +1), ("(1,2,3)", -1))


def compose_factors(factors, n: int, right_to_left: bool = False) -> perm.Perm:
    ps = [perm.parse_cycles(t, n) if e > 0 else perm.inverse(perm.parse_cycles(t, n))
          for t, e in factors]
    if right_to_left:
        ps.reverse()
    out = perm.identity(n)
    for p in ps:
        out = perm.compose(out, p)
    return out


def check_factorization(name: str, factors, expected_text: str, n: int):
    """Compose a quoted factorization under the left-to-right convention;
    if it misses, retry right-to-left and report which convention (if
    either) validates."""
    from .report import Check

    expected = perm.parse_cycles(expected_text, n)
    l2r = compose_factors(factors, n)
    if l2r == expected:
        return Check(name, expected_text, perm.format_cycles(l2r),
                     note="validates left-to-right")
    r2l = compose_factors(factors, n, right_to_left=True)
    if r2l == expected:
        return Check(name, expected_text, perm.format_cycles(r2l),
                     note="validates right-to-left only")
    return Check(name, expected_text, perm.format_cycles(l2r),
                 note=f"neither convention: left-to-right gives "
                      f"{perm.format_cycles(l2r)}, right-to-left gives "
                      f"{perm.format_cycles(r2l)}")


def a5_report(table: WordTable | None = None) -> Report:
    if table is None:
        table = build_a5_table()
    rep = Report("A5 word table")
    rep.add("table size", 60, len(table))
    rep.add("max word length", 6, table.max_length())
    longest = table.elements_of_length(6)
    rep.add("elements at max length", 1, len(longest))
    rep.add("unique max element", A5_MAX_ELEMENT,
            perm.format_cycles(longest[0]) if len(longest) == 1 else
            sorted(perm.format_cycles(p) for p in longest))
    rep.checks.append(check_factorization(
        f"factored identity for {A5_MAX_ELEMENT}",
        A5_MAX_FACTORS, A5_MAX_ELEMENT, 5))
    rep.add("length histogram", table.length_histogram(),
            table.length_histogram(), note="informational")
    return rep


def a6_report(table: WordTable | None = None) -> Report:
    if table is None:
        table = build_a6_table()
    rep = Report("A6 word table")
    rep.add("table size", 360, len(table))
    rep.add("max word length", 5, table.max_length())
    longest = table.elements_of_length(5)
    rep.add("elements at max length", 46, len(longest))
    rep.add(f"{A6_EXAMPLE_ELEMENT} among the max-length elements", True,
            perm.parse_cycles(A6_EXAMPLE_ELEMENT, 6) in set(longest))
    rep.checks.append(check_factorization(
        f"factored identity for {A6_EXAMPLE_ELEMENT}",
        A6_EXAMPLE_FACTORS, A6_EXAMPLE_ELEMENT, 6))
    rep.add("length histogram", table.length_histogram(),
            table.length_histogram(), note="informational")
    return rep
