#!/usr/bin/env python3
"""Independent cross-check of a `lacm segment` output directory.

Reads phi.txt (plain-text matrix), rebuilds the mask by thresholding, compares
it against mask.pgm, and scores DSC against a ground-truth PGM. Uses only the
standard library so it can audit the C++ pipeline from the outside.

Convex solvers (sb/fp1/fp2) threshold at gamma (default 0.5); the level-set
solver thresholds at 0 -- pass --threshold 0 for those runs.
"""

import argparse
import sys


def read_pgm(path):
    """Binary P5, maxval <= 255, '#' comments allowed in the header."""
    with open(path, "rb") as fh:
        data = fh.read()
    tokens = []
    i = 0
    while len(tokens) < 4:
        if i >= len(data):
            raise ValueError(f"{path}: truncated header")
        c = data[i : i + 1]
        if c == b"#":
            while i < len(data) and data[i : i + 1] not in (b"\n", b"\r"):
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < len(data) and not data[j : j + 1].isspace() and data[j : j + 1] != b"#":
                j += 1
            tokens.append(data[i:j])
            i = j
    if tokens[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM (P5)")
    width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    if not 0 < maxval <= 255:
        raise ValueError(f"{path}: unsupported maxval {maxval}")
    i += 1  # single whitespace byte after the header
    pixels = data[i : i + width * height]
    if len(pixels) != width * height:
        raise ValueError(f"{path}: expected {width * height} pixels, got {len(pixels)}")
    return width, height, pixels


def read_matrix(path):
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([float(tok) for tok in line.split()])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError(f"{path}: ragged or empty matrix")
    return rows


def mask_from_pgm(path):
    width, height, pixels = read_pgm(path)
    return width, height, [1 if p > 127 else 0 for p in pixels]


def dsc(a, b):
    inter = sum(1 for x, y in zip(a, b) if x and y)
    na, nb = sum(a), sum(b)
    if na + nb == 0:
        raise ValueError("both masks are empty")
    return 2.0 * inter / (na + nb)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("rundir", help="directory written by `lacm segment` (phi.txt, mask.pgm)")
    ap.add_argument("--truth", help="ground-truth mask PGM to score against")
    ap.add_argument("--threshold", type=float, default=0.5, help="phi cut (default 0.5; level-set runs use 0)")
    args = ap.parse_args()

    phi = read_matrix(f"{args.rundir}/phi.txt")
    height, width = len(phi), len(phi[0])
    rebuilt = [1 if v > args.threshold else 0 for row in phi for v in row]

    mw, mh, stored = mask_from_pgm(f"{args.rundir}/mask.pgm")
    if (mw, mh) != (width, height):
        print(f"FAIL: phi.txt is {width}x{height} but mask.pgm is {mw}x{mh}", file=sys.stderr)
        return 1

    mismatches = sum(1 for a, b in zip(rebuilt, stored) if a != b)
    print(f"mask check: {mismatches} of {width * height} pixels differ from the rethresholded phi")
    status = 0 if mismatches == 0 else 1

    if args.truth:
        tw, th, truth = mask_from_pgm(args.truth)
        if (tw, th) != (width, height):
            print(f"FAIL: truth is {tw}x{th}, run is {width}x{height}", file=sys.stderr)
            return 1
        print(f"dsc vs truth: {dsc(stored, truth):.6f}")

    return status


if __name__ == "__main__":
    sys.exit(main())
