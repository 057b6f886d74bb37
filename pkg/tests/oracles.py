"""Slow, definition-level recounts used to freeze expected values."""

from itertools import permutations, product

from woctree.core import contains_perm_pattern, descents


def has_123(p):
    return contains_perm_pattern(p, (1, 2, 3))


def has_213(p):
    return contains_perm_pattern(p, (2, 1, 3))


def avoiders_by_insertion(n, bad):
    """S_n(bad) grown by inserting n into members of S_{n-1}(bad)."""
    level = [()]
    for m in range(1, n + 1):
        nxt = []
        for p in level:
            for i in range(m):
                q = p[:i] + (m,) + p[i:]
                if not bad(q):
                    nxt.append(q)
        level = nxt
    return level


def e123_census(n):
    out = [0] * n
    for p in avoiders_by_insertion(n, has_123):
        out[len(descents(p))] += 1
    return out


def reduction(p):
    n = len(p)
    return tuple(v for v in p if v != n)


def extension_census(n, bad):
    """Permutations containing ``bad`` whose reduction avoids it, by descents."""
    out = [0] * max(n, 1)
    for p in permutations(range(1, n + 1)):
        if bad(p) and not bad(reduction(p)):
            out[len(descents(p))] += 1
    return out


def valleys(word):
    return sum(1 for i in range(len(word) - 1) if word[i:i + 2] == "DU")


def count_321_avoiders(n):
    return sum(1 for p in permutations(range(1, n + 1))
               if not contains_perm_pattern(p, (3, 2, 1)))


def ordered_partitions_bruteforce(n):
    """All maps {1..n} -> {0..k-1} that are onto, for every k."""
    out = set()
    for k in range(1, n + 1):
        for vals in _onto(n, k):
            out.add(vals)
    return out


def _onto(n, k):
    for vals in product(range(k), repeat=n):
        if len(set(vals)) == k:
            yield vals

