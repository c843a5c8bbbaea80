"""Low-level helpers on sorted tuples shared by polynomials and forms.

Monomials are sorted tuples of jet coordinates with repetition (a multiset);
wedge labels are strictly increasing tuples of jet coordinates.
"""

from bisect import bisect_left


def accumulate(out, key, c):
    v = out.get(key)
    if v is None:
        if c:
            out[key] = c
    else:
        v += c
        if v:
            out[key] = v
        else:
            del out[key]


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def mono_insert(mono, c):
    i = bisect_left(mono, c)
    return mono[:i] + (c,) + mono[i:]


def mono_replace(mono, p, c):
    """Replace the entry at position p by c, keeping the tuple sorted."""
    rest = mono[:p] + mono[p + 1:]
    return mono_insert(rest, c)


def distinct_positions(mono):
    """Yield (position, coordinate, multiplicity) for each distinct coordinate."""
    n = len(mono)
    p = 0
    while p < n:
        c = mono[p]
        q = p + 1
        while q < n and mono[q] == c:
            q += 1
        yield p, c, q - p
        p = q


def label_insert(labels, c):
    """Wedge c in front of ``labels``: returns (new_labels, sign) or None when c repeats."""
    i = bisect_left(labels, c)
    if i < len(labels) and labels[i] == c:
        return None
    return labels[:i] + (c,) + labels[i:], (-1 if i % 2 else 1)


def label_replace(labels, p, c):
    """Replace the p-th factor of a strictly increasing label tuple by c.

    Returns (new_labels, sign) or None when c already occurs elsewhere.
    """
    rest = labels[:p] + labels[p + 1:]
    i = bisect_left(rest, c)
    if i < len(rest) and rest[i] == c:
        return None
    return rest[:i] + (c,) + rest[i:], (-1 if (p - i) % 2 else 1)


def sort_with_sign(seq):
    """Sort a sequence of distinct comparable items, returning (tuple, sign) or None on repeats."""
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and items[j - 1] == items[j]:
            return None
    return tuple(items), sign
