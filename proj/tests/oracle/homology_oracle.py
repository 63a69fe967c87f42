#!/usr/bin/env python3
"""Independent homology oracle for small conjugation qualgebras.

Builds the prismatic chain complex with plain Python lists, adjoins the
degree-3 cells B3(a,b) and D3(a), and reads homology off a dense Smith
normal form over Python integers. Writes JSON to the path given as the
first argument, or to stdout.
"""
import itertools
import json
import sys


def cyclic(n):
    return {
        "name": f"conj_z{n}",
        "size": n,
        "mul": lambda a, b: (a + b) % n,
        "act": lambda a, b: a,
    }


def symmetric3():
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}

    def mul(a, b):
        p, q = perms[a], perms[b]
        return index[tuple(q[p[i]] for i in range(3))]

    def inv(a):
        p = perms[a]
        r = [0] * 3
        for i in range(3):
            r[p[i]] = i
        return index[tuple(r)]

    return {"name": "conj_s3", "size": 6, "mul": mul, "act": lambda a, b: mul(mul(inv(b), a), b)}


def trivial():
    return {"name": "trivial", "size": 1, "mul": lambda a, b: 0, "act": lambda a, b: 0}


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def generators(size, n):
    out = []
    for parts in compositions(n):
        for elems in itertools.product(range(size), repeat=n):
            blocks, pos = [], 0
            for k in parts:
                blocks.append(tuple(elems[pos:pos + k]))
                pos += k
            out.append(tuple(blocks))
    return out


def boundary(gen, s):
    terms = {}

    def add(blocks, c):
        blocks = tuple(b for b in blocks if b)
        if not blocks:
            return
        terms[blocks] = terms.get(blocks, 0) + c

    offset = 0
    for j, block in enumerate(gen):
        k = len(block)
        left = gen[:j]
        right = gen[j + 1:]
        for i in range(k + 1):
            sign = -1 if (offset + i) % 2 else 1
            if i == 0:
                x = block[0]
                acted = tuple(tuple(s["act"](y, x) for y in b) for b in left)
                add(acted + (block[1:],) + right, sign)
            elif i < k:
                merged = block[:i - 1] + (s["mul"](block[i - 1], block[i]),) + block[i + 1:]
                add(left + (merged,) + right, sign)
            else:
                add(left + (block[:-1],) + right, sign)
        offset += k
    return {g: c for g, c in terms.items() if c}


def extra_cells(s, with_d3=True):
    size = s["size"]
    cells = []
    for a in range(size):
        for b in range(size):
            cell = {}
            for g, c in ((((a,), (b,)), 1), (((b, s["act"](a, b)),), 1), (((a, b),), -1)):
                cell[g] = cell.get(g, 0) + c
            cells.append(cell)
    if with_d3:
        for a in range(size):
            cells.append({((a,), (a,)): 1})
    return cells


def matrix(columns, rows):
    index = {g: i for i, g in enumerate(rows)}
    m = [[0] * len(columns) for _ in rows]
    for j, col in enumerate(columns):
        for g, c in col.items():
            m[index[g]][j] += c
    return m


def smith(m):
    """Invariant factors of an integer matrix (nonzero diagonal entries)."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
            if not entries:
                return factors
            _, i, j = min(entries)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // p
                    for row in a:
                        row[j] -= q * row[t]
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        factors.append(abs(a[t][t]))
    return factors


def homology(n, gens, cols_n, cols_n1):
    out = smith(matrix(cols_n, gens[n - 1])) if n > 1 else []
    inc = smith(matrix(cols_n1, gens[n]))
    free = len(gens[n]) - len(out) - len(inc)
    return {"free_rank": free, "torsion": sorted(d for d in inc if d > 1)}


def compute(s):
    size = s["size"]
    gens = {n: generators(size, n) for n in range(1, 4)}
    cols = {n: [boundary(g, s) for g in gens[n]] for n in range(2, 4)}
    result = {
        "H1_prismatic": homology(1, gens, [], cols[2]),
        "H2_prismatic": homology(2, gens, cols[2], cols[3]),
        "H2_qualgebra": homology(2, gens, cols[2], cols[3] + extra_cells(s)),
        "H2_qualgebra_no_d3": homology(2, gens, cols[2], cols[3] + extra_cells(s, False)),
    }
    return result


def main():
    results = {}
    for s in (trivial(), cyclic(2), cyclic(3), symmetric3()):
        results[s["name"]] = compute(s)
    text = json.dumps(results, indent=2, sort_keys=True) + "\n"
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
