"""Permutation algebra on {0..n-1}.

A permutation is a plain tuple of images: p[i] is where point i goes.
Composition is left-to-right throughout: compose(a, b) means "apply a,
then b". Cycle notation at the I/O boundary is 1-indexed; everything
internal is 0-indexed.
"""

from collections import deque
from itertools import permutations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def validate(p: Perm) -> None:
    n = len(p)
    if n < 1:
        raise ValueError("permutation must act on at least one point")
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a bijection on 0..{n - 1}: {p}")


def compose(a: Perm, b: Perm) -> Perm:
    """Left-to-right product: (a*b)(x) = b(a(x))."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    return tuple(b[a[i]] for i in range(len(a)))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def parity(p: Perm) -> int:
    """0 for even, 1 for odd, via cycle count: (n - #cycles) mod 2."""
    seen = [False] * len(p)
    cycles = 0
    for i in range(len(p)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return (len(p) - cycles) % 2


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-indexed disjoint cycle notation like "(1,2)(4,5)".

    "()" (or an all-whitespace string) is the identity.
    """
    text = text.strip()
    if text in ("", "()"):
        return identity(n)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(n))
    used: set[int] = set()
    for chunk in text[1:-1].split(")("):
        try:
            points = [int(tok) - 1 for tok in chunk.split(",")]
        except ValueError:
            raise ValueError(f"malformed cycle: ({chunk})") from None
        if len(points) < 2:
            raise ValueError(f"cycle too short: ({chunk})")
        for pt in points:
            if not 0 <= pt < n:
                raise ValueError(f"point {pt + 1} out of range 1..{n}")
            if pt in used:
                raise ValueError(f"repeated point {pt + 1}")
            used.add(pt)
        for src, dst in zip(points, points[1:] + points[:1]):
            images[src] = dst
    return tuple(images)


def format_cycles(p: Perm) -> str:
    """Canonical cycle notation: cycles sorted by smallest element, each
    cycle starting at its smallest element, fixed points omitted,
    identity printed "()"."""
    seen = [False] * len(p)
    parts = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        parts.append("(" + ",".join(str(x) for x in cyc) + ")")
    return "".join(parts) or "()"


def generate(gens) -> set:
    """Closure of a non-empty generator set under composition (BFS from
    the identity). Finite closure under products contains inverses, so
    this is the generated subgroup."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator set")
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise ValueError("generators act on different point counts")
        validate(g)
    ident = identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = compose(p, g)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def all_even(n: int) -> set:
    """Brute-force set of all even permutations of n points.

    Independent of generate(); used to cross-check generated groups.
    """
    return {p for p in permutations(range(n)) if parity(p) == 0}
