"""Brute-force oracle for 2-subgroup class tables of small permutation groups.

Independent of the C++ code: subgroups come from closure over all 2-elements,
O_2(N) is the product of all normal 2-subgroups of N, and the distinguished
test iterates over every Sylow subgroup literally.
"""
import json
import sys


def mul(a, b):  # right action: x^(ab) = (x^a)^b
    return tuple(b[a[i]] for i in range(len(a)))


def inv(a):
    r = [0] * len(a)
    for i, x in enumerate(a):
        r[x] = i
    return tuple(r)


def conj(a, g):
    return mul(mul(inv(g), a), g)


def closure(gens, n):
    e = tuple(range(n))
    out = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = mul(x, s)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def is_pow2(k):
    return k & (k - 1) == 0


def order(a):
    e = tuple(range(len(a)))
    k, x = 1, a
    while x != e:
        x, k = mul(x, a), k + 1
    return k


def gl32():
    def mat(m):
        img = []
        for v in range(1, 8):
            w = 0
            for r in range(3):
                bit = 0
                for c in range(3):
                    bit ^= m[r][c] & ((v >> c) & 1)
                w |= bit << r
            img.append(w - 1)
        return tuple(img)
    return [mat([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), mat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])]


GROUPS = {
    "C2": [(1, 0)],
    "C2xC2": [(1, 0, 2, 3), (0, 1, 3, 2)],
    "S4": [(1, 2, 3, 0), (1, 0, 2, 3)],
    "S5": [(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)],
    "GL32": gl32(),
}


def table(name):
    gens = GROUPS[name]
    n = len(gens[0])
    G = closure(gens, n)
    e = tuple(range(n))
    two_elems = [x for x in G if is_pow2(order(x))]
    subs = {frozenset([e])}
    frontier = list(subs)
    while frontier:
        nxt = []
        for h in frontier:
            for x in two_elems:
                if x in h:
                    continue
                k = closure(list(h) + [x], n)
                if is_pow2(len(k)) and k not in subs:
                    subs.add(k)
                    nxt.append(k)
        frontier = nxt
    top = max(len(h) for h in subs)
    sylows = [h for h in subs if len(h) == top]

    def centralizer(within, h):
        return frozenset(g for g in within if all(mul(g, x) == mul(x, g) for x in h))

    def normalizer(h):
        return frozenset(g for g in G if frozenset(conj(x, g) for x in h) == h)

    def o2(N):
        normal = [h for h in subs if h <= N and all(frozenset(conj(x, g) for x in h) == h for g in N)]
        gen = set()
        for h in normal:
            gen |= h
        return closure(list(gen), n)

    seen = set()
    rows = []
    for h in sorted(subs, key=len):
        if h in seen:
            continue
        cls = {frozenset(conj(x, g) for x in h) for g in G}
        seen |= cls
        Z = centralizer(h, h)
        N = normalizer(h)
        C = centralizer(G, h)
        c2 = 1
        while len(C) % (2 * c2) == 0:
            c2 *= 2
        rows.append({
            "order": len(h),
            "center_order": len(Z),
            "normalizer_order": len(N),
            "centralizer_order": len(C),
            "class_size": len(cls),
            "radical": o2(N) == h,
            "centric": len(Z) == c2,
            "distinguished": any(len(Z & centralizer(S, S)) > 1 for S in sylows),
            "elementary_abelian": all(x == e or order(x) == 2 for x in h)
            and all(mul(a, b) == mul(b, a) for a in h for b in h),
        })
    key = lambda r: tuple(r[k] for k in ("order", "center_order", "normalizer_order",
                                          "centralizer_order", "class_size", "radical",
                                          "centric", "distinguished", "elementary_abelian"))
    rows.sort(key=key)
    return {"group": name, "p": 2, "sylow_order": top, "classes": rows}


if __name__ == "__main__":
    outdir = sys.argv[1]
    for name in ("S4", "S5", "GL32"):
        with open(f"{outdir}/{name}.json", "w") as f:
            json.dump(table(name), f, indent=2, sort_keys=True)
            f.write("\n")
