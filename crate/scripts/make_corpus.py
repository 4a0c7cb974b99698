#!/usr/bin/env python3
"""Regenerate corpus/ from fixed seeds using the `coverdepth gen` command.

Usage: scripts/make_corpus.py [path/to/coverdepth]
"""

import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
BIN = sys.argv[1] if len(sys.argv) > 1 else str(ROOT / "target" / "release" / "coverdepth")

BALANCED = {
    "t1_nonincreasing": True,
    "t2_dstab_le_n": True,
    "limit_matches": True,
    "ntf_holds": True,
}


def gen(*args):
    out = subprocess.run([BIN, "gen", *map(str, args)], check=True, capture_output=True, text=True)
    return json.loads(out.stdout)


def path(n):
    return {"n": n, "edges": [[i, i + 1] for i in range(1, n)]}


def complete_bipartite(a, b):
    return {"n": a + b, "edges": [[i, a + j] for i in range(1, a + 1) for j in range(1, b + 1)]}


def main():
    entries = []

    def add(ident, family, h, balanced=True, expected=None):
        name = f"{ident}.json"
        (CORPUS / name).write_text(json.dumps(h, separators=(",", ":")) + "\n")
        entries.append(
            {
                "id": ident,
                "file": name,
                "family": family,
                "balanced": balanced,
                "expected": expected if expected is not None else BALANCED,
            }
        )

    CORPUS.mkdir(exist_ok=True)
    for old in CORPUS.glob("*.json"):
        old.unlink()

    for n in range(2, 9):
        add(f"path-{n}", "path", path(n))
    for n in (4, 6, 8):
        add(f"even-cycle-{n}", "even_cycle", gen("--family", "even_cycle", "--n", n, "--seed", 0))
    for a, b in ((2, 2), (2, 3), (3, 3)):
        add(f"kbip-{a}-{b}", "bipartite", complete_bipartite(a, b))
    for k, (n, seed) in enumerate([(n, s) for n in (4, 5, 6, 7, 8) for s in (1, 2)]):
        add(f"tree-{k:02}", "tree", gen("--family", "tree", "--n", n, "--seed", seed))
    shapes = [(2, 4), (3, 3), (3, 4), (4, 4), (3, 5), (2, 5), (4, 3), (2, 6)]
    for k in range(20):
        left, right = shapes[k % len(shapes)]
        density = (0.35, 0.5, 0.65)[k % 3]
        h = gen("--family", "bipartite", "--left", left, "--right", right,
                "--density", density, "--seed", 100 + k)
        add(f"bip-{k:02}", "bipartite", h)
    for k in range(12):
        n = 5 + k % 4
        edges = 3 + k % 4
        h = gen("--family", "interval", "--n", n, "--edges", edges, "--seed", 200 + k)
        add(f"interval-{k:02}", "interval", h)

    controls = {"ntf_holds": False}
    add("odd-cycle-3", "odd_cycle", gen("--family", "odd_cycle", "--n", 3, "--seed", 0), False, controls)
    add("odd-cycle-5", "odd_cycle", gen("--family", "odd_cycle", "--n", 5, "--seed", 0), False, controls)
    add("triangle-pendant", "control", {"n": 4, "edges": [[1, 2], [2, 3], [1, 3], [3, 4]]}, False, controls)

    manifest = {"instances": entries}
    (CORPUS / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    balanced = sum(e["balanced"] for e in entries)
    print(f"{len(entries)} instances ({balanced} balanced)")


if __name__ == "__main__":
    main()
