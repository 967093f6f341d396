"""Writes scenes/case110.scene.

The fundamental domain is built from three-fold "flowers" (three small discs
around a point, ringed by large and medium discs) on a honeycomb, with a
large disc in each remaining hole. Contacts are found numerically at 60
digits and written out as declared contacts; packcert re-certifies them.
"""

import itertools
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60

R_POLY = [144, -1056, 2680, -2680, 665, 436, -242, 12, 9]
S_POLY = [81, -2088, 15220, -29672, 12846, 2056, -380, -120, 9]


def root(coeffs, lo, hi):
    f = lambda x: sum(c * x**i for i, c in enumerate(coeffs))
    return mp.findroot(f, (mp.mpf(lo), mp.mpf(hi)), solver="anderson")


DEFINES = [
    ("rho", "2*s/sqrt(3)"),
    ("c", "s/sqrt(3)+sqrt(1+2*s)"),
    ("yM", "2*s/sqrt(3)+s+r"),
    ("e", "2*yM"),
]

# (x, y, radius class) as scene expressions
A = [
    ("0", "rho", "s"),
    ("-(rho*sqrt(3)/2)", "-(rho/2)", "s"),
    ("rho*sqrt(3)/2", "-(rho/2)", "s"),
    ("0", "-c", "one"),
    ("c*sqrt(3)/2", "c/2", "one"),
    ("-(c*sqrt(3)/2)", "c/2", "one"),
    ("0", "yM", "r"),
    ("-(yM*sqrt(3)/2)", "-(yM/2)", "r"),
    ("yM*sqrt(3)/2", "-(yM/2)", "r"),
]


def reflect(x, y):
    def neg(t):
        if t == "0":
            return t
        if t.startswith("-("):
            return t[2:-1]
        return f"-({t})" if any(op in t for op in "*/") else f"-{t}"

    if y.startswith("-("):
        return neg(x), f"e+{y[2:-1]}"
    if y.startswith("-"):
        return neg(x), f"e+{y[1:]}"
    return neg(x), f"e-{y}"


def discs():
    out = list(A)
    for x, y, cls in A[:6]:
        rx, ry = reflect(x, y)
        out.append((rx, ry, cls))
    out.append(("e*sqrt(3)/2", "e/2", "one"))
    return out


LATTICE = ("e*sqrt(3)", "0", "e*sqrt(3)/2", "3*e/2")


def evaluate(text, env):
    return eval(text.replace("sqrt", "mp.sqrt"), {"mp": mp}, dict(env))


def main(out_dir):
    r = root(R_POLY, "0.77", "0.79")
    s = root(S_POLY, "0.49", "0.50")
    env = {"r": r, "s": s, "one": mp.mpf(1)}
    for name, text in DEFINES:
        env[name] = evaluate(text, env)
    ds = [(evaluate(x, env), evaluate(y, env), env[cls]) for x, y, cls in discs()]
    t1 = [evaluate(t, env) for t in LATTICE[:2]]
    t2 = [evaluate(t, env) for t in LATTICE[2:]]

    contacts = []
    for (i, a), (j, b) in itertools.product(enumerate(ds), repeat=2):
        for m, n in itertools.product(range(-2, 3), repeat=2):
            if (i, m, n) == (j, 0, 0):
                continue
            bx = b[0] + m * t1[0] + n * t2[0]
            by = b[1] + m * t1[1] + n * t2[1]
            gap = mp.sqrt((a[0] - bx) ** 2 + (a[1] - by) ** 2) - a[2] - b[2]
            if gap < -mp.mpf(10) ** -40:
                sys.exit(f"overlap between {i} and {j} ({m}, {n})")
            if abs(gap) < mp.mpf(10) ** -40:
                if i < j or (i == j and (m, n) > (0, 0)):
                    contacts.append((i, j, m, n))

    lines = [
        "# generated by tools/gen_scenes.py",
        "name case110",
        "description Compact packing by discs of sizes 1, r and s (catalog number 110)",
        "reference ternary compact packing 110",
        "radius r root " + ",".join(map(str, R_POLY)) + " in 0.7 0.8",
        "radius s root " + ",".join(map(str, S_POLY)) + " in 0.4 0.6",
        "radius one rational 1",
    ]
    lines += [f"define {n} {t}" for n, t in DEFINES]
    lines.append(f"lattice {LATTICE[0]} {LATTICE[1]} ; {LATTICE[2]} {LATTICE[3]}")
    for k, (x, y, cls) in enumerate(discs()):
        lines.append(f"disc {k} {x} {y} {cls}")
    for i, j, m, n in contacts:
        lines.append(f"contact {i} {j}" + (f" {m} {n}" if (m, n) != (0, 0) else ""))
    Path(out_dir, "case110.scene").write_text("\n".join(lines) + "\n")
    cell = abs(t1[0] * t2[1] - t1[1] * t2[0])
    density = sum(mp.pi * d[2] ** 2 for d in ds) / cell
    print(f"case110: {len(ds)} discs, {len(contacts)} contacts, density {mp.nstr(density, 15)}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "scenes")
