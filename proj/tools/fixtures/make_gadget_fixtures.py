#!/usr/bin/env python3
"""Generate the serially composed gadget fixtures in data/.

Terminals: PSI = (1,0,0), PHI = (sqrt2, 1, 1)/2, so |<PSI|PHI>|^2 = 1/2.

Building block is the Specker bug (13 atoms, 7 contexts), a true-implies-false
gadget between atoms 1 and 7 that is realizable in R^3 whenever
|<1|7>| <= 1/3. Its rays are built in closed form from two angles (the
position of atoms 3 and 11 in the plane orthogonal to atom 1); the second angle
is the root of <4|10> = 0 so that {4, 13, 10} is a context.

A true-implies-true step a -> c puts c into a context {c, c+, c-} whose other
two rays each overlap a by sin(theta)/sqrt2 and hangs a bug from a to each.
Two steps of 22.5 degrees reach PHI (tits.json). Mirroring the same chain to
N = (sqrt2, -1, -1)/2, which is orthogonal to PHI, and adding the context
{N, PHI, (0,-1,1)/sqrt2} gives true-implies-false (tifs.json).

Usage: make_gadget_fixtures.py <output-dir>
"""
import json
import math
import sys
from pathlib import Path

import numpy as np
from scipy.optimize import brentq


def unit(v):
    return v / np.linalg.norm(v)


def perp_basis(a):
    t = np.array([0.0, 0.0, 1.0]) if abs(a[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    u = unit(np.cross(a, t))
    return u, np.cross(a, u)


def bug_rays(a, b, alpha, beta):
    u, w = perp_basis(a)
    v3 = math.cos(alpha) * u + math.sin(alpha) * w
    v11 = math.cos(beta) * u + math.sin(beta) * w
    v5 = unit(np.cross(v3, b))
    v9 = unit(np.cross(v11, b))
    v4 = unit(np.cross(v3, v5))
    v10 = unit(np.cross(v11, v9))
    return {
        1: a, 2: unit(np.cross(a, v3)), 3: v3, 4: v4, 5: v5, 6: unit(np.cross(v5, b)),
        7: b, 8: unit(np.cross(b, v9)), 9: v9, 10: v10, 11: v11,
        12: unit(np.cross(a, v11)), 13: unit(np.cross(v4, v10)),
    }


BUG_CONTEXTS = [(1, 2, 3), (3, 4, 5), (5, 6, 7), (7, 8, 9), (9, 10, 11), (11, 12, 1), (4, 13, 10)]


def min_separation(rays):
    m = np.array(rays)
    g = np.abs(m @ m.T)
    np.fill_diagonal(g, 0.0)
    return 1.0 - g.max()


def solve_bug(a, b, existing):
    """Pick the realization whose new rays stay farthest from each other and from `existing`."""
    u, w = perp_basis(a)
    grid = np.linspace(0.0, math.pi, 721)
    v11 = np.outer(np.cos(grid), u) + np.outer(np.sin(grid), w)
    v9 = np.cross(v11, b)
    v9 /= np.linalg.norm(v9, axis=1)[:, None]
    v10 = np.cross(v11, v9)
    v10 /= np.linalg.norm(v10, axis=1)[:, None]
    best = None
    for alpha in np.linspace(0.05, math.pi - 0.05, 90):
        v4 = bug_rays(a, b, alpha, 0.0)[4]
        vals = v10 @ v4
        for i in np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]:
            def f(be):
                r = bug_rays(a, b, alpha, be)
                return r[4] @ r[10]
            beta = brentq(f, grid[i], grid[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps)
            rays = bug_rays(a, b, alpha, beta)
            fresh = [v for k, v in rays.items() if k not in (1, 7)]
            sep = min_separation(fresh)
            if existing:
                sep = min(sep, 1.0 - np.abs(np.array(fresh) @ np.array(existing).T).max())
            if best is None or sep > best[0]:
                best = (sep, rays)
    if best is None:
        raise RuntimeError("no bug realization for these terminals")
    return best[1]


class Builder:
    def __init__(self, avoid=()):
        self.atoms = {}
        self.contexts = []
        self.avoid = list(avoid)

    def atom(self, name, vec):
        vec = np.asarray(vec, dtype=float)
        if name in self.atoms:
            assert abs(abs(self.atoms[name] @ vec) - 1.0) < 1e-12, name
        else:
            self.atoms[name] = unit(vec)
        return name

    def context(self, *names):
        self.contexts.append(list(names))

    def bug(self, prefix, a_name, b_name):
        rays = solve_bug(self.atoms[a_name], self.atoms[b_name], list(self.atoms.values()) + self.avoid)
        ids = {1: a_name, 7: b_name}
        for k, v in rays.items():
            if k not in ids:
                ids[k] = self.atom(f"{prefix}.{k}", v)
        for ctx in BUG_CONTEXTS:
            self.context(*(ids[k] for k in ctx))

    def tits_step(self, prefix, a_name, c_name, normal):
        a, c = self.atoms[a_name], self.atoms[c_name]
        d = unit(a - (a @ c) * c)
        plus = self.atom(f"{prefix}+", (d + normal) / math.sqrt(2.0))
        minus = self.atom(f"{prefix}-", (d - normal) / math.sqrt(2.0))
        self.context(c_name, plus, minus)
        self.bug(f"{prefix}+bug", a_name, plus)
        self.bug(f"{prefix}-bug", a_name, minus)

    def to_json(self):
        return {
            "atoms": [
                {"id": k, "vector": [[float(x), 0.0] for x in v]} for k, v in self.atoms.items()
            ],
            "contexts": self.contexts,
        }


E1 = np.array([1.0, 0.0, 0.0])
E2 = unit(np.array([0.0, 1.0, 1.0]))
NORMAL = unit(np.array([0.0, -1.0, 1.0]))


def in_plane(deg):
    t = math.radians(deg)
    return math.cos(t) * E1 + math.sin(t) * E2


def chain(b, prefix, target_name, sign):
    b.atom("PSI", E1)
    mid = b.atom(f"{prefix}.M", in_plane(sign * 22.5))
    b.tits_step(f"{prefix}.s1", "PSI", mid, NORMAL)
    b.tits_step(f"{prefix}.s2", mid, target_name, NORMAL)


def make_tits(avoid=()):
    b = Builder(avoid)
    b.atom("PSI", E1)
    b.atom("PHI", in_plane(45.0))
    chain(b, "tits", "PHI", +1)
    return b


def make_tifs():
    b = Builder()
    b.atom("PSI", E1)
    b.atom("PHI", in_plane(45.0))
    n = b.atom("tifs.N", in_plane(-45.0))
    b.context(n, "PHI", b.atom("tifs.X", NORMAL))
    chain(b, "tifs", n, -1)
    return b


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out.mkdir(parents=True, exist_ok=True)
    tifs = make_tifs()
    tits = make_tits(tifs.atoms.values())
    composed = Builder()
    for g in (tifs, tits):
        for k, v in g.atoms.items():
            composed.atom(k, v)
        composed.contexts.extend(g.contexts)
    for name, g in (("tifs", tifs), ("tits", tits), ("composed", composed)):
        sep = min_separation(list(g.atoms.values()))
        assert sep > 1e-3, (name, sep)
        (out / f"{name}.json").write_text(json.dumps(g.to_json(), indent=1) + "\n")
        print(f"{name}: {len(g.atoms)} atoms, {len(g.contexts)} contexts, min ray separation {sep:.4f}")


if __name__ == "__main__":
    main()
