#!/usr/bin/env python3
"""Recompute data/models/MANIFEST after editing model files.

The hash is 64-bit FNV-1a over the file bytes, matching the loader.
"""
import os
import sys


def fnv1a(data: bytes) -> str:
    h = 14695981039346656037
    for b in data:
        h ^= b
        h = (h * 1099511628211) % (1 << 64)
    return format(h, "016x")


def main() -> None:
    root = os.path.join(os.path.dirname(__file__), "..", "data", "models")
    root = os.path.normpath(root)
    entries = []
    for dirpath, _, files in os.walk(root):
        for f in sorted(files):
            if f in ("MANIFEST", "INDEX"):
                continue
            rel = os.path.relpath(os.path.join(dirpath, f), root)
            with open(os.path.join(dirpath, f), "rb") as fh:
                entries.append((rel, fnv1a(fh.read())))
    entries.sort()
    with open(os.path.join(root, "MANIFEST"), "w") as out:
        for rel, h in entries:
            out.write(f"{rel} {h}\n")
    print(f"wrote {len(entries)} entries", file=sys.stderr)


if __name__ == "__main__":
    main()
