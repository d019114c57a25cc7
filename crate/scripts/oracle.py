#!/usr/bin/env python3
"""Brute-force reference values for the bundled corpus.

Shares nothing with the Rust code beyond the PD text contract. Diagrams are
held as crossing lists over arbitrary arc labels; smoothing splices labels
instead of tracing faces, HOMFLY uses the ascending recursion (base point at
the largest label, branch on the first crossing met from above), and Seifert
circles come from the smoothing successor map.

    python3 scripts/oracle.py            # rewrite corpus/expectations.json
    python3 scripts/oracle.py --check    # exit 1 if the file is stale
"""

import argparse
import json
import re
import sys
from collections import Counter
from functools import lru_cache
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def parse(text):
    """Return (crossings, free_loops); a crossing is (ui, uo, oi, oo, sign)."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    tuples = [tuple(int(x) for x in m.split(",")) for m in re.findall(r"X\[([^\]]*)\]", body)]
    loops = len(re.findall(r"(?<![A-Za-z])O(?![A-Za-z\[])", body))
    labels = sorted({x for t in tuples for x in t})
    joined = set()
    for a, b, c, d in tuples:
        joined |= {(a, c), (b, d), (d, b)}
    blocks = []
    for x in labels:
        if blocks and blocks[-1][1] + 1 == x and (blocks[-1][1], x) in joined:
            blocks[-1][1] = x
        else:
            blocks.append([x, x])

    def succ(x):
        for lo, hi in blocks:
            if lo <= x <= hi:
                return lo if x == hi else x + 1
        raise ValueError(x)

    crossings = []
    for a, b, c, d in tuples:
        assert c == succ(a), (a, b, c, d)
        if b == succ(d):
            crossings.append((a, c, d, b, 1))
        else:
            assert d == succ(b), (a, b, c, d)
            crossings.append((a, c, b, d, -1))
    return tuple(crossings), loops


def rename(crossings, old, new):
    return tuple(tuple(new if (k < 4 and x == old) else x for k, x in enumerate(c)) for c in crossings)


def splice(rest, loops, joins):
    """Merge each (tail, head) label pair; a pair already equal closes a loop."""
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for x, y in joins:
        rx, ry = find(x), find(y)
        if rx == ry:
            loops += 1
        else:
            parent[ry] = rx
    rest = tuple(tuple(find(x) if k < 4 else x for k, x in enumerate(c)) for c in rest)
    return rest, loops


def smooth(crossings, loops, i):
    ui, uo, oi, oo, _ = crossings[i]
    # under_in continues as over_out, over_in continues as under_out
    return splice(crossings[:i] + crossings[i + 1:], loops, [(ui, oo), (oi, uo)])


def flip(crossings, i):
    ui, uo, oi, oo, s = crossings[i]
    return crossings[:i] + ((oi, oo, ui, uo, -s),) + crossings[i + 1:]


def successor(crossings):
    nxt = {}
    for ui, uo, oi, oo, _ in crossings:
        nxt[ui] = uo
        nxt[oi] = oo
    return nxt


def components(crossings):
    nxt = successor(crossings)
    seen, comps = set(), []
    for start in sorted(nxt):
        if start in seen:
            continue
        comp, x = [], start
        while x not in seen:
            seen.add(x)
            comp.append(x)
            x = nxt[x]
        comps.append(comp)
    return comps


def canon(crossings, loops):
    comps = components(crossings)
    relabel = {}
    for comp in comps:
        for x in comp:
            relabel[x] = len(relabel) + 1
    cs = tuple(sorted(tuple(relabel[x] for x in c[:4]) + (c[4],) for c in crossings))
    return cs, loops


def padd(p, q, scale=1, da=0, dz=0):
    out = dict(p)
    for (ea, ez), c in q.items():
        key = (ea + da, ez + dz)
        out[key] = out.get(key, 0) + scale * c
        if out[key] == 0:
            del out[key]
    return out


def pmul(p, q):
    out = {}
    for (a1, z1), c1 in p.items():
        for (a2, z2), c2 in q.items():
            key = (a1 + a2, z1 + z2)
            out[key] = out.get(key, 0) + c1 * c2
            if out[key] == 0:
                del out[key]
    return out


DELTA = {(1, -1): 1, (-1, -1): -1}


def unlink(n):
    p = {(0, 0): 1}
    for _ in range(n - 1):
        p = pmul(p, DELTA)
    return p


@lru_cache(maxsize=None)
def homfly_key(crossings, loops):
    if not crossings:
        return tuple(sorted(unlink(loops).items()))
    comps = components(crossings)
    base = max(max(c) for c in comps)
    comp = next(c for c in comps if base in c)
    start = comp.index(base)
    walk = comp[start:] + comp[:start]
    seen = set()
    for arc in walk:
        for i, (ui, uo, oi, oo, s) in enumerate(crossings):
            if arc in (ui, oi) and i not in seen:
                seen.add(i)
                if arc == oi:
                    return branch(crossings, loops, i)
    # an ascending component lies below everything it meets: drop it
    arcs = set(comp)
    rest, joins = [], []
    for c in crossings:
        ui, uo, oi, oo, _ = c
        if ui in arcs and oi in arcs:
            continue
        if ui in arcs:
            joins.append((oi, oo))
        elif oi in arcs:
            joins.append((ui, uo))
        else:
            rest.append(c)
    rest, rest_loops = splice(tuple(rest), loops, joins)
    if not rest and rest_loops == 0:
        return (((0, 0), 1),)
    p = pmul(DELTA, dict(homfly(rest, rest_loops)))
    return tuple(sorted(p.items()))


def branch(crossings, loops, i):
    s = crossings[i][4]
    f = dict(homfly(flip(crossings, i), loops))
    sm_c, sm_l = smooth(crossings, loops, i)
    sm = dict(homfly(sm_c, sm_l))
    if s > 0:
        p = padd(padd({}, f, 1, -2, 0), sm, 1, -1, 1)
    else:
        p = padd(padd({}, f, 1, 2, 0), sm, -1, 1, 1)
    return tuple(sorted(p.items()))


def homfly(crossings, loops):
    return homfly_key(*canon(crossings, loops))


def fmt_power(var, e):
    return var if e == 1 else f"{var}^{e}"


def fmt(p):
    if not p:
        return "0"
    out = []
    for i, ((ea, ez), c) in enumerate(sorted(p.items(), key=lambda t: t[0], reverse=True)):
        sign = "-" if c < 0 else "+"
        if i == 0:
            out.append("-" if c < 0 else "")
        else:
            out.append(f" {sign} ")
        parts = []
        if abs(c) != 1 or (ea == 0 and ez == 0):
            parts.append(str(abs(c)))
        if ea:
            parts.append(fmt_power("a", ea))
        if ez:
            parts.append(fmt_power("z", ez))
        out.append("*".join(parts))
    return "".join(out)


def seifert(crossings, loops):
    """Circle count and, per crossing, the pair of circles it joins."""
    nxt = {}
    for ui, uo, oi, oo, _ in crossings:
        nxt[ui] = oo
        nxt[oi] = uo
    circle = {}
    count = 0
    for start in sorted(nxt):
        if start in circle:
            continue
        x = start
        while x not in circle:
            circle[x] = count
            x = nxt[x]
        count += 1
    pairs = [tuple(sorted((circle[ui], circle[oi]))) + (s,) for ui, uo, oi, oo, s in crossings]
    return count + loops, pairs


def alternating(crossings):
    """Every arc leaves one crossing and enters the next in opposite roles."""
    tail, head = {}, {}
    for ui, uo, oi, oo, _ in crossings:
        head[ui], head[oi] = "U", "O"
        tail[uo], tail[oo] = "U", "O"
    return all(tail[x] != head[x] for x in head)


def pieces(crossings, loops):
    parent = list(range(len(crossings)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    where = {}
    for i, c in enumerate(crossings):
        for x in c[:4]:
            where.setdefault(x, []).append(i)
    for xs in where.values():
        for j in xs[1:]:
            parent[find(j)] = find(xs[0])
    return len({find(i) for i in range(len(crossings))}) + loops


def reduced(crossings, loops):
    """No crossing admits a circle meeting the diagram only there: neither
    unoriented resolution of it splits its piece."""
    base = pieces(crossings, loops)
    for i, c in enumerate(crossings):
        slots = pd_tuple(c)
        rest = crossings[:i] + crossings[i + 1:]
        for pairing in (((0, 1), (2, 3)), ((1, 2), (3, 0))):
            r, extra = rest, 0
            for p, q in pairing:
                x, y = slots[p], slots[q]
                if x == y:
                    extra += 1
                else:
                    r = rename(r, y, x)
            if pieces(r, loops + extra) > base:
                return False
    return True


def pd_tuple(c):
    ui, uo, oi, oo, s = c
    return (ui, oo, uo, oi) if s > 0 else (ui, oi, uo, oo)


def analyse(text):
    crossings, loops = parse(text)
    p = dict(homfly(crossings, loops))
    n, pairs = seifert(crossings, loops)
    weights = Counter((u, v) for u, v, _ in pairs)
    pos = Counter((u, v) for u, v, s in pairs if s > 0)
    neg = Counter((u, v) for u, v, s in pairs if s < 0)
    a_exps = [ea for ea, _ in p]
    top = max(a_exps)
    writhe = sum(c[4] for c in crossings)
    return {
        "crossings": len(crossings),
        "components": len(components(crossings)) + loops,
        "writhe": writhe,
        "alternating": alternating(crossings),
        "reduced": reduced(crossings, loops),
        "seifert_circles": n,
        "edge_weights": sorted(weights.values()),
        "tau_plus": sum(1 for c in crossings if c[4] > 0),
        "tau_minus": sum(1 for c in crossings if c[4] < 0),
        "sigma_plus": len(pos),
        "sigma_minus": len(neg),
        "homfly": fmt(p),
        "E": top,
        "e": min(a_exps),
        "mfw": (top - min(a_exps)) // 2 + 1,
        "top_z": max(ez for ea, ez in p if ea == top),
        "conway": fmt({(0, ez): c for ez, c in conway(p).items()}),
    }


def conway(p):
    out = {}
    for (ea, ez), c in p.items():
        out[ez] = out.get(ez, 0) + c
    return {k: v for k, v in out.items() if v}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    result = {}
    for path in sorted(CORPUS.glob("*.pd")):
        result[path.stem] = analyse(path.read_text())
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    target = CORPUS / "expectations.json"
    if args.check:
        if not target.exists() or target.read_text() != text:
            print("expectations.json is stale", file=sys.stderr)
            return 1
        return 0
    target.write_text(text)
    print(f"wrote {len(result)} entries to {target.relative_to(ROOT)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
