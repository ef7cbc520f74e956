#!/usr/bin/env python3
"""Write data/icosahedral.json: generators, class representatives and the
character table of the full icosahedral group I_h acting on R^3."""
import json
import math
import sys

import numpy as np

s5 = math.sqrt(5.0)
phi = (1 + s5) / 2
GENS = [
    np.diag([-1.0, -1.0, 1.0]),
    np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=float),
    np.array([
        [0.5, -s5 / 4 - 0.25, 1 / (s5 + 1)],
        [s5 / 4 + 0.25, 1 / (s5 + 1), -0.5],
        [1 / (s5 + 1), 0.5, s5 / 4 + 0.25],
    ]),
    -np.eye(3),
]


def key(m):
    return tuple(np.round(m, 6).ravel())


def closure(gens):
    elems = {key(np.eye(3)): np.eye(3)}
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = e @ g
                k = key(p)
                if k not in elems:
                    elems[k] = p
                    nxt.append(p)
        frontier = nxt
    return list(elems.values())


def classes(elems):
    seen = set()
    out = []
    for e in elems:
        if key(e) in seen:
            continue
        cls = {key(g @ e @ g.T): g @ e @ g.T for g in elems}
        seen.update(cls)
        out.append(e)
    return out


# rotation classes by trace: e, 12 C5, 12 C5^2, 20 C3, 15 C2
ROT = {3.0: 0, phi: 1, 1 - phi: 2, 0.0: 3, -1.0: 4}
CHI_I = {
    "A": [1, 1, 1, 1, 1],
    "T1": [3, phi, 1 - phi, 0, -1],
    "T2": [3, 1 - phi, phi, 0, -1],
    "G": [4, -1, -1, 1, 0],
    "H": [5, 0, 0, -1, 1],
}
DIMS = {"A": 1, "T1": 3, "T2": 3, "G": 4, "H": 5}


def rot_class(r):
    t = np.trace(r)
    for v, idx in ROT.items():
        if abs(t - v) < 1e-9:
            return idx
    raise ValueError("unexpected trace %r" % t)


def main():
    elems = closure(GENS)
    assert len(elems) == 120, len(elems)
    reps = classes(elems)
    assert len(reps) == 10, len(reps)
    info = []
    for r in reps:
        det = round(np.linalg.det(r))
        info.append((rot_class(r * det), det))
    order = sorted(range(10), key=lambda i: (-info[i][1], info[i][0]))
    reps = [reps[i] for i in order]
    info = [info[i] for i in order]
    irreps = []
    for parity in ("g", "u"):
        for name, chi in CHI_I.items():
            row = []
            for rc, det in info:
                v = chi[rc]
                if parity == "u" and det < 0:
                    v = -v
                row.append(float(v))
            irreps.append({"label": name + parity, "dim": DIMS[name], "character": row})
    out = {
        "name": "I_h",
        "tolerance": 1e-9,
        "generators": [g.tolist() for g in GENS],
        "classes": [{"representative": r.tolist()} for r in reps],
        "irreps": irreps,
    }
    path = sys.argv[1] if len(sys.argv) > 1 else "data/icosahedral.json"
    with open(path, "w") as f:
        json.dump(out, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
