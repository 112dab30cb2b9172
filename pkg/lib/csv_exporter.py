import csv
import os
from collections.abc import Mapping, Sequence


def _block_rows(name: str, rows: Sequence[Sequence[int]]) -> list[list]:
    n_cols = len(rows[0]) if rows else 0
    out: list[list] = [[f"# {name}", f"{len(rows)}x{n_cols}"]]
    out.append([""] + [f"c{c + 1}" for c in range(n_cols)])
    for r, row in enumerate(rows):
        out.append([f"r{r + 1}"] + [int(v) for v in row])
    return out


def build_rows(matrices: Mapping[str, Sequence[Sequence[int]]]) -> list[list]:
    """One labelled block per matrix, blank row between blocks."""
    rows: list[list] = []
    for i, (name, matrix) in enumerate(matrices.items()):
        if i:
            rows.append([])
        rows.extend(_block_rows(name, matrix))
    return rows


def save_csv(filepath: str, matrices: Mapping[str, Sequence[Sequence[int]]]) -> None:
    """`;`-separated, utf-8-sig (opens cleanly in spreadsheet tools)."""
    tmp_path = filepath + ".tmp"
    with open(tmp_path, "w", newline="", encoding="utf-8-sig") as f:
        writer = csv.writer(f, delimiter=";")
        writer.writerows(build_rows(matrices))
    os.replace(tmp_path, filepath)
