#!/usr/bin/env python3
"""Regenerate the bundled data files under data/.

iris.data and wine.data are written from scikit-learn's bundled copies of the
classic UCI datasets, in the original UCI file layout. ecoli.data and
yeast.data are synthetic samples that follow the UCI column layout, value
ranges and class distribution of the originals; drop in the real files from
archive.ics.uci.edu if you want the measured data.
"""

import os

import numpy as np
from sklearn.datasets import load_iris, load_wine

OUT = os.path.join(os.path.dirname(__file__), "..", "data")


def fmt(v: float) -> str:
    return format(v, ".10g")


def write_iris() -> None:
    iris = load_iris()
    names = ["Iris-setosa", "Iris-versicolor", "Iris-virginica"]
    lines = []
    for row, t in zip(iris.data, iris.target):
        lines.append(",".join(f"{v:.1f}" for v in row) + "," + names[t])
    with open(os.path.join(OUT, "iris.data"), "w") as f:
        f.write("\n".join(lines) + "\n")


def write_wine() -> None:
    wine = load_wine()
    lines = []
    for row, t in zip(wine.data, wine.target):
        lines.append(str(t + 1) + "," + ",".join(fmt(v) for v in row))
    with open(os.path.join(OUT, "wine.data"), "w") as f:
        f.write("\n".join(lines) + "\n")


# class -> (count, per-feature means); spreads chosen so values stay in [0,1]
ECOLI_CLASSES = [
    ("cp",  143, [0.35, 0.40, 0.48, 0.50, 0.45, 0.35, 0.40]),
    ("im",   77, [0.50, 0.55, 0.48, 0.50, 0.50, 0.65, 0.60]),
    ("pp",   52, [0.55, 0.60, 0.48, 0.50, 0.60, 0.30, 0.35]),
    ("imU",  35, [0.60, 0.55, 0.48, 0.50, 0.50, 0.70, 0.75]),
    ("om",   20, [0.70, 0.65, 0.48, 0.50, 0.55, 0.40, 0.45]),
    ("omL",   5, [0.75, 0.70, 1.00, 0.50, 0.55, 0.45, 0.50]),
    ("imL",   2, [0.65, 0.60, 1.00, 1.00, 0.50, 0.70, 0.65]),
    ("imS",   2, [0.55, 0.50, 0.48, 0.50, 0.45, 0.65, 0.70]),
]

YEAST_CLASSES = [
    ("CYT", 463, [0.48, 0.48, 0.50, 0.22, 0.50, 0.00, 0.50, 0.25]),
    ("NUC", 429, [0.45, 0.45, 0.50, 0.20, 0.50, 0.00, 0.50, 0.35]),
    ("MIT", 244, [0.55, 0.52, 0.48, 0.40, 0.50, 0.00, 0.50, 0.22]),
    ("ME3", 163, [0.42, 0.42, 0.55, 0.18, 0.50, 0.00, 0.50, 0.22]),
    ("ME2",  51, [0.60, 0.55, 0.52, 0.25, 0.50, 0.00, 0.50, 0.22]),
    ("ME1",  44, [0.70, 0.65, 0.52, 0.25, 0.50, 0.00, 0.52, 0.22]),
    ("EXC",  35, [0.75, 0.70, 0.50, 0.22, 0.50, 0.00, 0.50, 0.22]),
    ("VAC",  30, [0.50, 0.50, 0.52, 0.22, 0.50, 0.00, 0.58, 0.25]),
    ("POX",  20, [0.50, 0.48, 0.50, 0.22, 0.50, 0.75, 0.50, 0.22]),
    ("ERL",   5, [0.55, 0.50, 0.50, 0.25, 1.00, 0.00, 0.50, 0.22]),
]


def write_synthetic(path: str, classes, suffix: str, binary_cols) -> None:
    rng = np.random.default_rng(20120601)
    lines = []
    i = 0
    for label, count, means in classes:
        for _ in range(count):
            vals = []
            for col, mu in enumerate(means):
                if col in binary_cols:
                    v = mu  # binary-ish indicator columns keep their level
                else:
                    v = float(np.clip(rng.normal(mu, 0.07), 0.0, 1.0))
                vals.append(f"{v:.2f}")
            name = f"S{i:04d}_{suffix}"
            lines.append(f"{name:<11}" + "  " + "  ".join(vals) + f"  {label}")
            i += 1
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    write_iris()
    write_wine()
    write_synthetic(os.path.join(OUT, "ecoli.data"), ECOLI_CLASSES, "ECOLI", {2, 3})
    write_synthetic(os.path.join(OUT, "yeast.data"), YEAST_CLASSES, "YEAST", {4, 5})
    for f in sorted(os.listdir(OUT)):
        path = os.path.join(OUT, f)
        with open(path) as fh:
            print(f, sum(1 for _ in fh))
