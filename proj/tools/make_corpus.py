#!/usr/bin/env python3
# Copyright (C) 2026 The commlab Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the shipped corpus/*.alg files."""

import itertools
import pathlib
import sys


def table(n, arity, f):
    return [f(*args) for args in itertools.product(range(n), repeat=arity)]


def write(out, name, n, ops, comment=None):
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines += [f"algebra {name}", f"size {n}"]
    for op_name, arity, values in ops:
        lines.append(f"op {op_name} {arity}")
        row = n if arity > 0 else 1
        for i in range(0, len(values), row):
            lines.append(" ".join(map(str, values[i:i + row])))
    (out / f"{name}.alg").write_text("\n".join(lines) + "\n")


def from_elements(elems, mul):
    """Multiplication table of a group given as a list with the identity first."""
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    return table(n, 2, lambda a, b: index[mul(elems[a], elems[b])])


def perm_group(gens):
    compose = lambda p, q: tuple(p[q[i]] for i in range(len(p)))
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen), compose


def product_group(moduli):
    elems = list(itertools.product(*(range(m) for m in moduli)))
    add = lambda a, b: tuple((x + y) % m for x, y, m in zip(a, b, moduli))
    return elems, add


def quaternions():
    # (sign, unit) with unit in 1, i, j, k.
    unit_mul = {
        ("1", u): (1, u) for u in "1ijk"
    }
    unit_mul.update({(u, "1"): (1, u) for u in "1ijk"})
    unit_mul.update({
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    })

    def mul(a, b):
        s, u = unit_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elems = [(1, "1"), (-1, "1")] + [(s, u) for u in "ijk" for s in (1, -1)]
    return elems, mul


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    out.mkdir(parents=True, exist_ok=True)

    for m in range(1, 9):
        write(out, f"z{m}", m, [("add", 2, table(m, 2, lambda a, b: (a + b) % m))],
              f"cyclic group of order {m}")
    for name, moduli in [("z2xz2", (2, 2)), ("z4xz2", (4, 2)), ("z2xz2xz2", (2, 2, 2))]:
        elems, add = product_group(moduli)
        write(out, name, len(elems), [("add", 2, from_elements(elems, add))],
              "abelian group, elements in lexicographic order of coordinates")
    elems, mul = perm_group([(1, 0, 2), (1, 2, 0)])
    write(out, "s3", 6, [("mul", 2, from_elements(elems, mul))],
          "symmetric group on 3 points, permutations in lexicographic order")
    elems, mul = perm_group([(1, 2, 3, 0), (0, 3, 2, 1)])
    write(out, "d4", 8, [("mul", 2, from_elements(elems, mul))],
          "symmetries of a square, as vertex permutations in lexicographic order")
    elems, mul = quaternions()
    write(out, "q8", 8, [("mul", 2, from_elements(elems, mul))],
          "quaternion group: 1 -1 i -i j -j k -k")

    for n, name in [(2, "s2"), (3, "c3"), (4, "c4")]:
        write(out, name, n, [("min", 2, table(n, 2, min))], f"{n}-element chain")
    # Meet semilattices given by their order: elements are sets, meet is intersection.
    semilattices = {
        "free2": ([(), (0,), (1,)], "free semilattice on two generators (0 = their meet)"),
        "diamond": ([(), (0,), (1,), (0, 1)], "two atoms with a bottom and a top"),
        "claw": ([(), (0,), (1,), (2,)], "three atoms over a bottom"),
        "tree": ([(), (0,), (0, 1), (0, 2)], "bottom < 1, and 1 < 2, 1 < 3"),
    }
    for name, (sets, comment) in semilattices.items():
        index = {s: i for i, s in enumerate(sets)}
        meet = lambda a, b: index[tuple(sorted(set(sets[a]) & set(sets[b])))]
        write(out, name, len(sets), [("min", 2, table(len(sets), 2, meet))], comment)

    for name, moduli in [("aff_z2", (2,)), ("aff_z3", (3,)), ("aff_z4", (4,)),
                         ("aff_z2xz2", (2, 2))]:
        elems, _ = product_group(moduli)
        index = {e: i for i, e in enumerate(elems)}
        m = lambda a, b, c: index[tuple((x - y + z) % q for x, y, z, q in
                                        zip(elems[a], elems[b], elems[c], moduli))]
        write(out, name, len(elems), [("m", 3, table(len(elems), 3, m))],
              "the ternary term x - y + z of an abelian group, nothing else")

    write(out, "mod_z3_mid", 3, [("f", 2, table(3, 2, lambda a, b: (2 * a + 2 * b) % 3))],
          "idempotent reduct of Z3: x*y = 2x + 2y")
    write(out, "mod_z4_x2y", 4, [("f", 2, table(4, 2, lambda a, b: (a + 2 * b) % 4))],
          "reduct of Z4: f(x, y) = x + 2y")
    write(out, "z2_shift", 2, [("s", 1, [1, 0])], "the polynomial x + 1 of Z2 alone")

    for n in range(1, 5):
        write(out, f"set{n}", n, [], f"{n}-element set without operations")
    write(out, "inclusion4", 4, [],
          "operation-free structure {a, b, u1, u2} = 0 1 2 3 refuting the "
          "two-variable commutative inclusion")


if __name__ == "__main__":
    main()
