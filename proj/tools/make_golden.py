#!/usr/bin/env python3
"""Writes the catalog golden file from the classical parametric families.

The lists below are written out from the group-level descriptions
(SU(s+t)/S(U(s)U(t)), SO(s+t)/SO(s)SO(t), Sp(s+t)/Sp(s)Sp(t), ...) and only
then translated to Dynkin labels, so the file does not depend on the C++
enumeration it is used to check.

Usage: make_golden.py [--rank-cap N] [--odd-cap N] [-o PATH]
"""

import argparse
import json
import sys

FAMILY_ORDER = "ABCDEFG"


def so_type(m):
    """Dynkin type of so(m) as a (family, rank) pair, or None for m < 3."""
    if m == 3:
        return ("A", 1)
    if m == 4:
        return None  # not simple
    if m == 5:
        return ("B", 2)
    if m == 6:
        return ("A", 3)
    if m % 2:
        return ("B", (m - 1) // 2)
    return ("D", m // 2)


def sp_type(k):
    if k == 1:
        return ("A", 1)
    if k == 2:
        return ("B", 2)
    return ("C", k)


def name(t):
    return f"{t[0]}{t[1]}"


def comp(t, short=False):
    return {"family": t[0], "rank": t[1], "short": short}


CIRCLE = {"family": "T", "rank": 1, "short": False}


def token(c):
    if c["family"] == "T":
        return "T1"
    return name((c["family"], c["rank"])) + ("(short)" if c["short"] else "")


def so_components(m, in_b_ambient):
    """Simple factors of so(m) as components; so(3) inside a B ambient is a
    short-root A1."""
    if m <= 2:
        return []
    if m == 4:
        return [comp(("A", 1)), comp(("A", 1))]
    return [comp(so_type(m), short=(m == 3 and in_b_ambient))]


def sort_key(c):
    if c["family"] == "T":
        return (len(FAMILY_ORDER), 0, 0)
    return (FAMILY_ORDER.index(c["family"]), c["rank"], 1 if c["short"] else 0)


def label(ambient, comps):
    ordered = sorted(comps, key=sort_key)
    return name(ambient) + "/" + "".join("T1" if c["family"] == "T" else name((c["family"], c["rank"])) for c in ordered)


def bipartitions(comps):
    n = len(comps)
    for mask in range(1, (1 << n) - 1):
        k1 = [comps[i] for i in range(n) if mask >> i & 1]
        k2 = [comps[i] for i in range(n) if not mask >> i & 1]
        yield k1, k2


def entries(ambient, comps):
    lab = label(ambient, comps)
    return [[lab, sorted(token(c) for c in k1), sorted(token(c) for c in k2)] for k1, k2 in bipartitions(comps)]


def rank_ok(t, cap):
    return t[0] in "EFG" or t[1] <= cap


def hermitian(cap):
    cases = {}

    def add(ambient, comps):
        if ambient is None or not rank_ok(ambient, cap):
            return
        cases.setdefault(label(ambient, comps), (ambient, comps))

    # SU(s+t)/S(U(s)U(t))
    for n in range(2, cap + 2):
        for s in range(1, n // 2 + 1):
            t = n - s
            comps = [comp(("A", k - 1)) for k in (s, t) if k >= 2] + [CIRCLE]
            add(("A", n - 1), comps)
    # SO(2+n)/SO(2)SO(n)
    for n in range(3, 2 * cap):
        m = n + 2
        ambient = so_type(m)
        add(ambient, so_components(n, ambient is not None and ambient[0] == "B") + [CIRCLE])
    # Sp(n)/U(n)
    for n in range(2, cap + 1):
        add(sp_type(n), [comp(("A", n - 1), short=True), CIRCLE])
    # SO(2n)/U(n)
    for n in range(3, cap + 1):
        add(so_type(2 * n), [comp(("A", n - 1)), CIRCLE])
    add(("E", 6), [comp(("D", 5)), CIRCLE])
    add(("E", 7), [comp(("E", 6)), CIRCLE])
    return cases


def symmetric(cap):
    cases = {}

    def add(ambient, comps):
        if ambient is None or not rank_ok(ambient, cap) or len(comps) < 2:
            return
        cases.setdefault(label(ambient, comps), (ambient, comps))

    # SO(s+t)/SO(s)SO(t), 2 < s <= t, st even
    for m in range(6, 2 * cap + 2):
        ambient = so_type(m)
        in_b = ambient[0] == "B"
        for s in range(3, m // 2 + 1):
            t = m - s
            if (s * t) % 2:
                continue
            add(ambient, so_components(s, in_b) + so_components(t, in_b))
    # Sp(s+t)/Sp(s)Sp(t), 1 <= s <= t
    for n in range(2, cap + 1):
        for s in range(1, n // 2 + 1):
            add(sp_type(n), [comp(sp_type(s)), comp(sp_type(n - s))])
    add(("G", 2), [comp(("A", 1)), comp(("A", 1), short=True)])
    add(("F", 4), [comp(("A", 1)), comp(("C", 3))])
    add(("E", 6), [comp(("A", 1)), comp(("A", 5))])
    add(("E", 7), [comp(("A", 1)), comp(("D", 6))])
    add(("E", 8), [comp(("A", 1)), comp(("E", 7))])
    return cases


def nearly_kaehler():
    return {
        "F4/A2A2": (("F", 4), [comp(("A", 2)), comp(("A", 2), short=True)]),
        "E6/A2A2A2": (("E", 6), [comp(("A", 2))] * 3),
        "E7/A2A5": (("E", 7), [comp(("A", 2)), comp(("A", 5))]),
        "E8/A2E6": (("E", 8), [comp(("A", 2)), comp(("E", 6))]),
    }


def five_symmetric():
    return {"E8/A4A4": (("E", 8), [comp(("A", 4)), comp(("A", 4))])}


def odd_grassmannian(cap):
    out = []
    for total in range(2, cap + 1):
        for s in range(1, total):
            t = total - s
            ambient = so_type(2 * s + 2 * t + 2)
            k1, k2 = so_type(2 * s + 1), so_type(2 * t + 1)
            lab = name(ambient) + "/" + "".join(name(x) for x in sorted([k1, k2], key=lambda x: (FAMILY_ORDER.index(x[0]), x[1])))
            out.append([lab, [name(k1)], [name(k2)]])
    return out


def flatten(cases):
    out = []
    for _, (ambient, comps) in sorted(cases.items()):
        out.extend(entries(ambient, comps))
    return sorted(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rank-cap", type=int, default=8)
    parser.add_argument("--odd-cap", type=int, default=8)
    parser.add_argument("-o", "--output")
    args = parser.parse_args()

    golden = {
        "schema_version": 1,
        "rank_cap": args.rank_cap,
        "odd_grassmannian_cap": args.odd_cap,
        "sections": {
            "hermitian": {"split": flatten(hermitian(args.rank_cap))},
            "symmetric": {"split": flatten(symmetric(args.rank_cap))},
            "nearly-kaehler": {"split": flatten(nearly_kaehler()), "unsplit": ["E8/A8", "G2/A2"]},
            "5-symmetric": {"split": flatten(five_symmetric()), "unsplit": []},
            "odd-grassmannian": {"split": sorted(odd_grassmannian(args.odd_cap))},
        },
    }
    text = json.dumps(golden, indent=1) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
