"""Text formats: CSV datasets, model files, flat vector/matrix lines.

All writers go through a temp file in the target directory followed by a
rename, so a crashed run never leaves a half-written file behind.
"""
from __future__ import annotations

import csv
import io
import os
import tempfile
from pathlib import Path

import numpy as np

from .perceptron import LabeledDataset, PerceptronModel, TransferFunction


def atomic_write(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_float(v: float) -> str:
    """Shortest decimal that round-trips exactly."""
    return repr(float(v))


def format_vector(v) -> str:
    return ",".join(format_float(x) for x in np.ravel(v))


def parse_vector(line: str) -> np.ndarray:
    return np.array([float(tok) for tok in line.strip().split(",") if tok.strip()])


def format_matrix(A) -> str:
    """Row-major upper triangle of a symmetric matrix, comma-separated."""
    A = np.asarray(A, dtype=float)
    iu = np.triu_indices(A.shape[0])
    return format_vector(A[iu])


def parse_matrix(line: str) -> np.ndarray:
    return matrix_from_upper(parse_vector(line))


def matrix_from_upper(vals) -> np.ndarray:
    """Symmetric matrix from its row-major upper triangle."""
    vals = np.asarray(vals, dtype=float)
    n = int((np.sqrt(8 * vals.size + 1) - 1) // 2)
    if n * (n + 1) // 2 != vals.size:
        raise ValueError(f"{vals.size} values do not form an upper triangle")
    A = np.zeros((n, n))
    A[np.triu_indices(n)] = vals
    return A + np.triu(A, 1).T


def dataset_to_csv(data: LabeledDataset) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i + 1}" for i in range(data.m)] + ["label"])
    for p, lab in zip(data.points, data.labels):
        w.writerow([format_float(v) for v in p] + ["+1" if lab > 0 else "-1"])
    return buf.getvalue()


def write_dataset(path, data: LabeledDataset) -> None:
    atomic_write(path, dataset_to_csv(data))


def read_points(path) -> tuple[np.ndarray, np.ndarray | None]:
    """Points and (if a ``label`` column exists) labels from a CSV file.

    The header must be ``x1,...,xm`` optionally followed by ``label``.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise ValueError(f"{path}: empty file")
    header = [h.strip() for h in rows[0]]
    has_label = header[-1] == "label"
    coords = header[:-1] if has_label else header
    if not coords or any(h != f"x{i + 1}" for i, h in enumerate(coords)):
        raise ValueError(f"{path}: header must be x1,...,xm[,label], got {','.join(header)}")
    m = len(coords)
    pts, labels = [], []
    for lineno, r in enumerate(rows[1:], start=2):
        if len(r) != len(header):
            raise ValueError(f"{path}:{lineno}: expected {len(header)} fields, got {len(r)}")
        pts.append([float(v) for v in r[:m]])
        if has_label:
            lab = r[m].strip()
            if lab not in ("+1", "-1", "1"):
                raise ValueError(f"{path}:{lineno}: label must be +1 or -1, got {lab!r}")
            labels.append(-1.0 if lab == "-1" else 1.0)
    X = np.array(pts, dtype=float).reshape(-1, m)
    return X, (np.array(labels) if has_label else None)


def read_dataset(path) -> LabeledDataset:
    X, y = read_points(path)
    if y is None:
        raise ValueError(f"{path}: dataset needs a label column")
    return LabeledDataset(X, y, {"source": str(path)})


def model_to_text(model: PerceptronModel) -> str:
    lines = [
        model.flavor,
        str(model.m),
        model.transfer.kind,
        format_float(model.transfer.beta),
        format_vector(model.weights),
    ]
    return "\n".join(lines) + "\n"


def model_from_text(text: str) -> PerceptronModel:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 5:
        raise ValueError(f"model file needs 5 non-empty lines, got {len(lines)}")
    flavor, m, kind, beta, weights = lines
    return PerceptronModel(
        parse_vector(weights), int(m), TransferFunction(kind, float(beta)), flavor
    )


def write_model(path, model: PerceptronModel) -> None:
    atomic_write(path, model_to_text(model))


def read_model(path) -> PerceptronModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_text(fh.read())
