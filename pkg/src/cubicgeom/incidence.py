"""Combinatorics of the 27-line incidence structure.

Lines are labeled a_1..a_6, b_1..b_6, c_ij (i < j), encoded as tuples
('a', i), ('b', i), ('c', i, j).  Everything here is abstract: tritangent
trios, double-sixes, trihedral pairs, triads, enneahedra, and the
automorphism group of the incidence relation (the E6 Weyl group), computed
by explicit closure over generators.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def a(i):
    return ("a", i)


def b(i):
    return ("b", i)


def c(i, j):
    if i == j:
        raise ValueError("c needs two distinct indices")
    return ("c", min(i, j), max(i, j))


ALL_LABELS = ([a(i) for i in range(1, 7)] + [b(i) for i in range(1, 7)]
              + [c(i, j) for i, j in itertools.combinations(range(1, 7), 2)])
LABEL_INDEX = {lab: k for k, lab in enumerate(ALL_LABELS)}


def label_str(lab):
    if lab[0] == "c":
        return f"c{lab[1]}{lab[2]}"
    return f"{lab[0]}{lab[1]}"


def meets_rule(l1, l2):
    """Whether two distinct labeled lines meet on the surface."""
    if l1 == l2:
        raise ValueError("labels coincide")
    k1, k2 = l1[0], l2[0]
    if k1 > k2:
        l1, l2, k1, k2 = l2, l1, k2, k1
    if k1 == "a" and k2 == "a":
        return False
    if k1 == "b" and k2 == "b":
        return False
    if k1 == "a" and k2 == "b":
        return l1[1] != l2[1]
    if k1 == "a" and k2 == "c":
        return l1[1] in l2[1:]
    if k1 == "b" and k2 == "c":
        return l1[1] in l2[1:]
    return not (set(l1[1:]) & set(l2[1:]))  # c vs c: meet iff disjoint indices


def enumerate_tritangents():
    """The 45 coplanar trios: {a_i, b_j, c_ij} (i != j) and c-trios over partitions."""
    trios = []
    for i in range(1, 7):
        for j in range(1, 7):
            if i != j:
                trios.append(frozenset({a(i), b(j), c(i, j)}))
    for part in partitions_into_pairs(range(1, 7)):
        trios.append(frozenset(c(i, j) for i, j in part))
    return trios


def partitions_into_pairs(items):
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    for k in range(1, len(items)):
        pair = (first, items[k])
        rest = items[1:k] + items[k + 1:]
        for sub in partitions_into_pairs(rest):
            yield [pair] + sub


TRITANGENT_TRIOS = enumerate_tritangents()
TRIO_INDEX = {t: k for k, t in enumerate(TRITANGENT_TRIOS)}


@lru_cache(maxsize=1)
def skew_sixes():
    """All 72 sixes of pairwise skew lines."""
    n = 27
    adj = [[False] * n for _ in range(n)]
    for x, y in itertools.combinations(range(n), 2):
        if not meets_rule(ALL_LABELS[x], ALL_LABELS[y]):
            adj[x][y] = adj[y][x] = True
    sixes = []

    def grow(chosen, candidates):
        if len(chosen) == 6:
            sixes.append(frozenset(ALL_LABELS[k] for k in chosen))
            return
        for idx, v in enumerate(candidates):
            rest = [w for w in candidates[idx + 1:] if adj[v][w]]
            if len(chosen) + 1 + len(rest) >= 6:
                grow(chosen + [v], rest)

    grow([], list(range(n)))
    return sixes


def enumerate_double_sixes():
    """The 36 double-sixes, each a frozenset of two skew sixes."""
    sixes = skew_sixes()
    out = set()
    for s1, s2 in itertools.combinations(sixes, 2):
        if s1 & s2:
            continue
        if _is_double_six(s1, s2):
            out.add(frozenset({s1, s2}))
    return sorted(out, key=_ds_sort_key)


def _is_double_six(s1, s2):
    for x in s1:
        if sum(1 for y in s2 if not meets_rule(x, y)) != 1:
            return False
    return True


def _ds_sort_key(ds):
    return sorted(sorted(LABEL_INDEX[l] for l in six) for six in ds)


def double_six_family(ds):
    """Family per the classical shapes: 1 (a/b), 2 (15 of them), 3 (20 of them)."""
    kinds = sorted("".join(sorted(l[0] for l in six)) for six in ds)
    if kinds == ["aaaaaa", "bbbbbb"]:
        return 1
    if kinds == ["abcccc", "abcccc"]:
        return 2
    if kinds == ["aaaccc", "bbbccc"]:
        return 3
    raise ValueError(f"unrecognized double-six shape {kinds}")


def is_double_six_labels(labels):
    """Whether a 12-label set splits as a double-six; returns it or None."""
    labels = frozenset(labels)
    if len(labels) != 12:
        return None
    for ds in enumerate_double_sixes():
        if frozenset().union(*ds) == labels:
            return ds
    return None


# -- trihedral pairs -------------------------------------------------------

def _disjoint_trio_triples():
    trios = TRITANGENT_TRIOS
    for i, t1 in enumerate(trios):
        for j in range(i + 1, len(trios)):
            t2 = trios[j]
            if t1 & t2:
                continue
            for k in range(j + 1, len(trios)):
                t3 = trios[k]
                if (t1 & t3) or (t2 & t3):
                    continue
                yield frozenset({t1, t2, t3})


def enumerate_trieder_pairs():
    """The 120 trihedral pairs, canonically as {rows, cols} (sets of 3 trios)."""
    by_lines = {}
    for triple in _disjoint_trio_triples():
        lines = frozenset().union(*triple)
        by_lines.setdefault(lines, []).append(triple)
    pairs = set()
    for lines, triples in by_lines.items():
        for rows, cols in itertools.combinations(triples, 2):
            if _transversal(rows, cols):
                pairs.add(frozenset({rows, cols}))
    return sorted(pairs, key=_pair_sort_key)


def _transversal(rows, cols):
    return all(len(r & s) == 1 for r in rows for s in cols)


def _pair_sort_key(pair):
    return sorted(sorted(sorted(LABEL_INDEX[l] for l in t) for t in side) for side in pair)


def pair_lines(pair):
    side = next(iter(pair))
    return frozenset().union(*side)


def trieder_pair_shape(pair):
    """Label-type census of the 9 lines: 'aaabbbccc', 'ccccccccc' or 'aabbccccc'."""
    return "".join(sorted(l[0] for l in pair_lines(pair)))


def trieder_pair_matrix(pair):
    """A concrete 3x3 matrix of labels (rows x cols), deterministic."""
    rows, cols = sorted(pair, key=lambda side: sorted(map(_trio_key, side)))
    rows = sorted(rows, key=_trio_key)
    cols = sorted(cols, key=_trio_key)
    return [[next(iter(r & s)) for s in cols] for r in rows]


def _trio_key(t):
    return sorted(LABEL_INDEX[l] for l in t)


def enumerate_triads():
    """The 40 partitions of the 27 lines into three trihedral pairs."""
    pairs = enumerate_trieder_pairs()
    lines_of = {p: pair_lines(p) for p in pairs}
    triads = set()
    for i, p1 in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            p2 = pairs[j]
            if lines_of[p1] & lines_of[p2]:
                continue
            rest = frozenset(ALL_LABELS) - lines_of[p1] - lines_of[p2]
            for k in range(j + 1, len(pairs)):
                p3 = pairs[k]
                if lines_of[p3] == rest:
                    triads.add(frozenset({p1, p2, p3}))
    return sorted(triads, key=lambda tr: sorted(map(_pair_sort_key, tr)))


# -- enneahedra ------------------------------------------------------------

def enumerate_enneahedra():
    """All exact covers of the 27 lines by 9 tritangent trios."""
    trios = TRITANGENT_TRIOS
    containing = {lab: [t for t in trios if lab in t] for lab in ALL_LABELS}
    solutions = []

    def search(uncovered, chosen):
        if not uncovered:
            solutions.append(frozenset(chosen))
            return
        # branch on the line with the fewest usable trios (all must stay inside
        # the uncovered set); every solution uses exactly one of its trios
        def usable(lab):
            return [t for t in containing[lab] if t <= uncovered]

        best = min(uncovered, key=lambda lab: (len(usable(lab)), LABEL_INDEX[lab]))
        for t in usable(best):
            search(uncovered - t, chosen + [t])

    search(frozenset(ALL_LABELS), [])
    return solutions


def classify_enneahedron(enn, trieder_sides, triads):
    """('first', triad) if the 9 trios split into three triad sides, else ('second', division).

    trieder_sides maps a frozenset of 3 trios to the trihedral pairs having it
    as one side; triads is the list from enumerate_triads().
    """
    trios = sorted(enn, key=_trio_key)
    sides_inside = [frozenset(s) for s in itertools.combinations(trios, 3)
                    if frozenset(s) in trieder_sides]
    # try to partition the 9 trios into three recognized sides
    for s1, s2, s3 in itertools.combinations(sides_inside, 3):
        if s1 | s2 | s3 == enn and not (s1 & s2 or s1 & s3 or s2 & s3):
            for triad in triads:
                pair_keys = set(triad)
                picked = []
                for side in (s1, s2, s3):
                    match = [p for p in trieder_sides[side] if p in pair_keys]
                    if match:
                        picked.append(match[0])
                if len(picked) == 3 and len(set(picked)) == 3:
                    return "first", triad
            return "second", (s1, s2, s3)
    return "second", None


def trieder_side_table(pairs):
    table = {}
    for p in pairs:
        for side in p:
            table.setdefault(frozenset(side), []).append(p)
    return table


# -- automorphism group ----------------------------------------------------

def _index_perm_generator(sigma):
    """Permutation of the 27 labels induced by sigma on {1..6} (dict i->sigma_i)."""
    out = [None] * 27
    for lab in ALL_LABELS:
        if lab[0] == "c":
            img = c(sigma[lab[1]], sigma[lab[2]])
        else:
            img = (lab[0], sigma[lab[1]])
        out[LABEL_INDEX[lab]] = LABEL_INDEX[img]
    return tuple(out)


def _ab_swap_generator():
    out = [None] * 27
    for lab in ALL_LABELS:
        if lab[0] == "a":
            img = b(lab[1])
        elif lab[0] == "b":
            img = a(lab[1])
        else:
            img = lab
        out[LABEL_INDEX[lab]] = LABEL_INDEX[img]
    return tuple(out)


def _triple_swap_generator():
    """The involution attached to the index triple {1,2,3}.

    Swaps a_i with c_jk for {i,j,k} = {1,2,3} and b_m with c_pq for
    {m,p,q} = {4,5,6}; everything else is fixed.  Together with the index
    permutations this generates the full symmetry group of the incidence
    relation (the a/b swap alone only reaches the double-six stabilizer).
    """
    mapping = {}
    for i, jk in ((1, (2, 3)), (2, (1, 3)), (3, (1, 2))):
        mapping[a(i)] = c(*jk)
        mapping[c(*jk)] = a(i)
    for m, pq in ((4, (5, 6)), (5, (4, 6)), (6, (4, 5))):
        mapping[b(m)] = c(*pq)
        mapping[c(*pq)] = b(m)
    out = [None] * 27
    for lab in ALL_LABELS:
        img = mapping.get(lab, lab)
        out[LABEL_INDEX[lab]] = LABEL_INDEX[img]
    return tuple(out)


def group_generators():
    gens = []
    for k in range(1, 6):
        sigma = {i: i for i in range(1, 7)}
        sigma[k], sigma[k + 1] = k + 1, k
        gens.append(_index_perm_generator(sigma))
    gens.append(_ab_swap_generator())
    gens.append(_triple_swap_generator())
    return gens


def compose(p, q):
    """(p o q)(x) = p[q[x]]."""
    return tuple(p[i] for i in q)


def permutation_preserves_incidence(perm):
    for x, y in itertools.combinations(range(27), 2):
        if meets_rule(ALL_LABELS[x], ALL_LABELS[y]) != \
                meets_rule(ALL_LABELS[perm[x]], ALL_LABELS[perm[y]]):
            return False
    return True


def group_closure(generators=None):
    """Breadth-first closure; returns the full element list (order 51840)."""
    gens = generators if generators is not None else group_generators()
    identity = tuple(range(27))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def orbit_size(start, act, generators=None):
    """Size of the orbit of `start` under the generated group; act(gen, x) -> y."""
    gens = generators if generators is not None else group_generators()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = act(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def act_on_label_set(perm, labels):
    return frozenset(ALL_LABELS[perm[LABEL_INDEX[l]]] for l in labels)


def act_on_trio_set(perm, trios):
    return frozenset(act_on_label_set(perm, t) for t in trios)


def act_on_double_six(perm, ds):
    return frozenset(act_on_label_set(perm, six) for six in ds)


def act_on_pair(perm, pair):
    return frozenset(act_on_trio_set(perm, side) for side in pair)


def act_on_triad(perm, triad):
    return frozenset(act_on_pair(perm, p) for p in triad)


def orbit_sizes():
    """Orbit sizes on lines, double-sixes, tritangent trios and triads."""
    line0 = a(1)
    ds0 = frozenset({frozenset(a(i) for i in range(1, 7)),
                     frozenset(b(i) for i in range(1, 7))})
    trio0 = TRITANGENT_TRIOS[0]
    triad0 = enumerate_triads()[0]
    return {
        "lines": orbit_size(line0, lambda g, x: ALL_LABELS[g[LABEL_INDEX[x]]]),
        "double_sixes": orbit_size(ds0, act_on_double_six),
        "tritangents": orbit_size(trio0, act_on_label_set),
        "triads": orbit_size(triad0, act_on_triad),
    }


# -- involution census -----------------------------------------------------

def involution_profile(perm, double_sixes, trios=None):
    """(fixed lines, setwise-fixed trios, both-sixes-fixed DS, swapped-six DS)."""
    trios = trios if trios is not None else TRITANGENT_TRIOS
    fixed_lines = sum(1 for i in range(27) if perm[i] == i)
    fixed_trios = sum(1 for t in trios if act_on_label_set(perm, t) == t)
    both = swapped = 0
    for ds in double_sixes:
        s1, s2 = tuple(ds)
        i1, i2 = act_on_label_set(perm, s1), act_on_label_set(perm, s2)
        if i1 == s1 and i2 == s2:
            both += 1
        elif i1 == s2 and i2 == s1:
            swapped += 1
    return (fixed_lines, fixed_trios, both, swapped)


def involution_census(group=None):
    """Histogram of involution profiles over the full group (identity included)."""
    elements = group if group is not None else group_closure()
    double_sixes = enumerate_double_sixes()
    table = {}
    for g in elements:
        if compose(g, g) != tuple(range(27)):
            continue
        prof = involution_profile(g, double_sixes)
        table[prof] = table.get(prof, 0) + 1
    return table
