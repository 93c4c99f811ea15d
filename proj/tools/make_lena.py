#!/usr/bin/env python3
"""Rebuild data/lena256.pgm from the 512x512 lena.dat in the scipy 0.16.1 sdist.

The sdist is fetched from PyPI, the pickled array is loaded, and every 2x2
block is averaged with round-half-up ((sum + 2) // 4).
"""
import argparse
import io
import pickle
import tarfile
import urllib.request

import numpy as np

SDIST = ("https://files.pythonhosted.org/packages/7b/e1/"
         "ecc1820874c396a094e6df30d4d3aa8119d4987c5ff0b9caec73db362849/"
         "scipy-0.16.1.tar.gz")
MEMBER = "scipy-0.16.1/scipy/misc/lena.dat"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sdist", help="local copy of scipy-0.16.1.tar.gz")
    ap.add_argument("--out", default="data/lena256.pgm")
    args = ap.parse_args()

    if args.sdist:
        blob = open(args.sdist, "rb").read()
    else:
        blob = urllib.request.urlopen(SDIST).read()
    with tarfile.open(fileobj=io.BytesIO(blob)) as tar:
        raw = tar.extractfile(MEMBER).read()
    full = np.asarray(pickle.loads(raw, encoding="latin1"), dtype=np.int64)
    assert full.shape == (512, 512)
    small = (full.reshape(256, 2, 256, 2).sum(axis=(1, 3)) + 2) // 4
    with open(args.out, "wb") as f:
        f.write(b"P5\n256 256\n255\n")
        f.write(small.astype(np.uint8).tobytes())


if __name__ == "__main__":
    main()
