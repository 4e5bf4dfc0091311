#!/usr/bin/env python3
"""Cut a miniature WNdb-3.0 noun database out of a full WordNet distribution.

Usage: make_wordnet_fixture.py <wndb-dir> <out-dir>

Every noun sense of the seed lemmas is kept. Index lines are emitted for every
word form of the kept synsets, with their offset lists filtered down to the
kept synsets so the fixture stays closed under lookup.
"""
import os
import sys

SEEDS = [
    "person", "someone", "policy", "insurance", "vehicle", "incident",
    "excess", "premium", "car", "accident", "claim", "driver", "damage",
]


def read_lines(path):
    with open(path, encoding="latin-1") as f:
        return f.read().split("\n")


def main():
    src, out = sys.argv[1], sys.argv[2]
    index_lines = read_lines(os.path.join(src, "index.noun"))
    data_lines = read_lines(os.path.join(src, "data.noun"))

    header = [l for l in index_lines if l.startswith("  ")]
    index = {}
    for line in index_lines:
        if not line or line.startswith("  "):
            continue
        parts = line.split()
        index[parts[0]] = parts

    data = {}
    for line in data_lines:
        if not line or line.startswith("  "):
            continue
        data[line.split(" ", 1)[0]] = line

    def offsets_of(parts):
        synset_cnt = int(parts[2])
        return parts[len(parts) - synset_cnt:]

    kept = []
    for lemma in SEEDS:
        for off in offsets_of(index[lemma]):
            if off not in kept:
                kept.append(off)

    words = set()
    for off in kept:
        fields = data[off].split()
        w_cnt = int(fields[3], 16)
        for i in range(w_cnt):
            words.add(fields[4 + 2 * i].lower())

    out_index = []
    for word in sorted(words):
        parts = index[word]
        p_cnt = int(parts[3])
        ptrs = parts[4:4 + p_cnt]
        offs = [o for o in offsets_of(parts) if o in kept]
        tagsense = min(int(parts[5 + p_cnt]), len(offs))
        out_index.append(" ".join(
            [word, "n", str(len(offs)), str(p_cnt)] + ptrs +
            [str(len(offs)), str(tagsense)] + offs) + "  ")

    os.makedirs(out, exist_ok=True)
    with open(os.path.join(out, "index.noun"), "w", encoding="latin-1") as f:
        f.write("\n".join(header + out_index) + "\n")
    with open(os.path.join(out, "data.noun"), "w", encoding="latin-1") as f:
        f.write("\n".join(header + [data[o] for o in sorted(kept)]) + "\n")
    print(f"{len(kept)} synsets, {len(out_index)} index lemmas")


if __name__ == "__main__":
    main()
