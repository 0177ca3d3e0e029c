"""Canonical isomorphism signatures for triangulations.

The format is the census signature grammar: a size prefix, a stream of
2-bit facet actions (0 = boundary, 1 = joined to a new tetrahedron,
2 = joined to a tetrahedron already seen), destination indices for the
type-2 joins, and gluing permutations as indices into the fixed
ordering of S4.  The canonical string is the lexicographic minimum over
all choices of start tetrahedron and start labelling.

Two triangulations have the same canonical signature exactly when they
are combinatorially isomorphic.
"""

from __future__ import annotations

from .perms import S4, S4_INDEX, compose, inverse
from .triangulation import Triangulation

SCHARS = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-"
_SVAL = {c: i for i, c in enumerate(SCHARS)}


class MalformedSignature(ValueError):
    """The string is not a well-formed signature."""


def _encode_int(val, n_chars):
    out = []
    for _ in range(n_chars):
        out.append(SCHARS[val & 0x3F])
        val >>= 6
    return "".join(out)


def _size_chars(size):
    if size < 63:
        return SCHARS[size], 1
    n_chars = 0
    tmp = size
    while tmp > 0:
        tmp >>= 6
        n_chars += 1
    return SCHARS[63] + SCHARS[n_chars] + _encode_int(size, n_chars), n_chars


def _sig_from(tri, start, start_perm):
    """Signature string for the labelling grown from one start choice."""
    n = tri.n
    image = [None] * n          # tet -> its new label
    preimage = [None] * n       # new label -> tet
    vertex_map = [None] * n     # tet -> relabelling of its vertices
    image[start] = 0
    preimage[0] = start
    vertex_map[start] = start_perm
    next_label = 1

    used = [[False] * 4 for _ in range(n)]
    actions = []
    join_dests = []
    join_gluings = []

    for label in range(n):
        t = preimage[label]
        inv = inverse(vertex_map[t])
        for f_img in range(4):
            f = inv[f_img]
            if used[t][f]:
                continue
            used[t][f] = True
            g = tri.gluings[t][f]
            if g is None:
                actions.append(0)
                continue
            t2, perm = g
            used[t2][perm[f]] = True
            if image[t2] is None:
                actions.append(1)
                image[t2] = next_label
                preimage[next_label] = t2
                vertex_map[t2] = compose(vertex_map[t], inverse(perm))
                next_label += 1
            else:
                actions.append(2)
                join_dests.append(image[t2])
                relabelled = compose(vertex_map[t2],
                                     compose(perm, inverse(vertex_map[t])))
                join_gluings.append(S4_INDEX[relabelled])

    size_str, n_chars = _size_chars(n)
    out = [size_str]
    for i in range(0, len(actions), 3):
        chunk = actions[i:i + 3]
        val = sum(a << (2 * j) for j, a in enumerate(chunk))
        out.append(SCHARS[val])
    for dest in join_dests:
        out.append(_encode_int(dest, n_chars))
    for idx in join_gluings:
        out.append(SCHARS[idx])
    return "".join(out)


def encode_canonical(tri):
    """Smallest signature over all start choices: a complete isomorphism
    invariant."""
    best = None
    for start in range(tri.n):
        for perm in S4:
            s = _sig_from(tri, start, perm)
            if best is None or s < best:
                best = s
    return best


def decode(sig):
    """Rebuild the triangulation a signature describes."""
    if not sig or any(c not in _SVAL for c in sig):
        raise MalformedSignature("characters outside the signature alphabet")
    pos = 0

    def read_char():
        nonlocal pos
        if pos >= len(sig):
            raise MalformedSignature("truncated signature")
        val = _SVAL[sig[pos]]
        pos += 1
        return val

    def read_int(n_chars):
        val = 0
        for i in range(n_chars):
            val |= read_char() << (6 * i)
        return val

    first = read_char()
    if first < 63:
        n = first
        n_chars = 1
    else:
        n_chars = read_char()
        if n_chars == 0:
            raise MalformedSignature("zero-length size field")
        n = read_int(n_chars)
    if n == 0:
        raise MalformedSignature("empty triangulation")

    # Read facet actions until they account for all 4n facets: an action
    # 0 covers one facet, actions 1 and 2 cover the facet and its partner.
    actions = []
    n_facets = 0
    n_joins = 0
    total = 4 * n
    while n_facets < total:
        val = read_char()
        for j in range(3):
            a = (val >> (2 * j)) & 3
            if n_facets == total:
                if a != 0:
                    raise MalformedSignature("nonzero padding in facet actions")
                continue
            if a == 0:
                n_facets += 1
            elif a in (1, 2):
                n_facets += 2
                if a == 2:
                    n_joins += 1
            else:
                raise MalformedSignature("facet action 3 is undefined")
            actions.append(a)
        if n_facets > total:
            raise MalformedSignature("facet actions overrun the tetrahedra")

    dests = [read_int(n_chars) for _ in range(n_joins)]
    gluings_idx = [read_char() for _ in range(n_joins)]
    if pos != len(sig):
        raise MalformedSignature("trailing data after one component")

    # Replay the actions in facet order, skipping facets glued from the
    # other side, and perform the joins.
    table = {}
    filled = [[False] * 4 for _ in range(n)]
    next_new = 1
    action_pos = 0
    join_pos = 0
    for t in range(n):
        for f in range(4):
            if filled[t][f]:
                continue
            if action_pos >= len(actions):
                raise MalformedSignature("too few facet actions")
            a = actions[action_pos]
            action_pos += 1
            if a == 0:
                continue
            if a == 1:
                if next_new >= n:
                    raise MalformedSignature("join to a nonexistent tetrahedron")
                table[(t, f)] = (next_new, (0, 1, 2, 3))
                filled[t][f] = True
                filled[next_new][f] = True
                next_new += 1
                continue
            dest = dests[join_pos]
            idx = gluings_idx[join_pos]
            join_pos += 1
            if dest >= next_new or idx >= 24:
                raise MalformedSignature("join data out of range")
            perm = S4[idx]
            if filled[dest][perm[f]]:
                raise MalformedSignature("facet glued twice")
            table[(t, f)] = (dest, perm)
            filled[t][f] = True
            filled[dest][perm[f]] = True
    if action_pos != len(actions) or join_pos != n_joins or next_new != n:
        raise MalformedSignature("inconsistent gluing stream")

    closed = all(all(row) for row in filled)
    try:
        return Triangulation(n, table, closed=closed)
    except Exception as exc:
        raise MalformedSignature(f"inconsistent gluing stream: {exc}") from exc


def read_census(text):
    """Signatures from census text: one per line, '#' comments ignored."""
    sigs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            sigs.append(line)
    return sigs
