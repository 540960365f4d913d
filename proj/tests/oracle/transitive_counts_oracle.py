#!/usr/bin/env python3
"""Brute-force oracle: transitive subgroups of S_d up to conjugacy.

This script is deliberately independent of the C++ implementation. It
enumerates the full subgroup lattice of S_d by closing the set of cyclic
subgroups under pairwise joins, filters for transitivity, and deduplicates
by S_d-conjugacy. Its output is stored in tests/data/transitive_counts.json
and used by the test suite to validate `enumerate_transitive`; the counts are
computed here, not copied from literature tables.

Usage:
    python3 transitive_counts_oracle.py [MAX_DEGREE]

MAX_DEGREE defaults to 5. Degree 6 works but takes on the order of tens of
minutes in pure Python; regenerate the data file with it if you need the
stored run to cover degree 6.
"""
import itertools
import json
import sys


def compose(p, q):
    """Apply q first, then p."""
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    r = [0] * len(p)
    for i, v in enumerate(p):
        r[v] = i
    return tuple(r)


def closure(gens, n):
    idp = tuple(range(n))
    seen = {idp}
    frontier = [idp]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def generating_set(elems, n):
    """Greedy small generating set for a subgroup given as an element set."""
    gens = []
    have = {tuple(range(n))}
    for e in sorted(elems):
        if e not in have:
            gens.append(e)
            have = closure(gens, n)
            if len(have) == len(elems):
                break
    return gens


def all_subgroups(n):
    sym = [tuple(p) for p in itertools.permutations(range(n))]
    cyclic = {}
    for g in sym:
        sub = frozenset(closure([g], n))
        cyclic.setdefault(sub, g)
    subs = {s: generating_set(s, n) for s in cyclic}
    work = list(subs)
    seeds = list(cyclic.items())
    while work:
        h = work.pop()
        hgens = subs[h]
        for csub, cgen in seeds:
            if cgen in h:
                continue
            j = frozenset(closure(hgens + [cgen], n))
            if j not in subs:
                subs[j] = generating_set(j, n)
                work.append(j)
    return subs


def is_transitive(sub, n):
    return len({g[0] for g in sub}) == n


def conjugacy_count(groups, n):
    sym = [tuple(p) for p in itertools.permutations(range(n))]
    remaining = set(groups)
    count = 0
    while remaining:
        h = next(iter(remaining))
        orbit = set()
        for s in sym:
            si = inverse(s)
            orbit.add(frozenset(compose(compose(s, x), si) for x in h))
        remaining -= orbit
        count += 1
    return count


def main():
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    out = {}
    for d in range(2, max_degree + 1):
        subs = all_subgroups(d)
        transitive = [s for s in subs if is_transitive(s, d)]
        out[str(d)] = conjugacy_count(transitive, d)
        print(f"degree {d}: {len(subs)} subgroups, "
              f"{len(transitive)} transitive, {out[str(d)]} up to conjugacy",
              file=sys.stderr)
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
