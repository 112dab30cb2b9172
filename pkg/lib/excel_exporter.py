"""Excel export for code and box matrices: one worksheet per matrix."""

import os
from collections.abc import Mapping, Sequence

from openpyxl import Workbook
from openpyxl.styles import (
    Alignment,
    Border,
    Font,
    PatternFill,
    Side,
)
from openpyxl.worksheet.worksheet import Worksheet

ZERO_FILL = PatternFill(start_color="F5F5F5", end_color="F5F5F5", fill_type="solid")


def init_styles() -> tuple[Font, PatternFill, Border, Alignment]:
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    border = Border(
        left=Side(style="thin"),
        right=Side(style="thin"),
        top=Side(style="thin"),
        bottom=Side(style="thin"),
    )
    center_alignment = Alignment(horizontal="center", vertical="center")
    return header_font, header_fill, border, center_alignment


def write_matrix_sheet(
    ws: Worksheet,
    rows: Sequence[Sequence[int]],
    header_font: Font,
    header_fill: PatternFill,
    border: Border,
    alignment: Alignment,
) -> None:
    """Column labels c1..cm across row 1, row labels r1..rn down column A.

    Zero entries are shaded so the block structure stays readable.
    """
    n_cols = len(rows[0]) if rows else 0
    labels = [(1, col + 2, f"c{col + 1}") for col in range(n_cols)]
    labels += [(row + 2, 1, f"r{row + 1}") for row in range(len(rows))]
    for r, c, text in labels:
        cell = ws.cell(row=r, column=c)
        cell.value = text
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = alignment
        cell.border = border

    for r, row in enumerate(rows, 2):
        for c, value in enumerate(row, 2):
            cell = ws.cell(row=r, column=c)
            cell.value = int(value)
            cell.alignment = alignment
            cell.border = border
            if value == 0:
                cell.fill = ZERO_FILL

    ws.column_dimensions["A"].width = 6


def save_workbook(wb: Workbook, filepath: str) -> None:
    """Atomic write: save to a sibling temp file, then replace."""
    tmp_path = filepath + ".tmp"
    wb.save(tmp_path)
    os.replace(tmp_path, filepath)


def export_matrices(matrices: Mapping[str, Sequence[Sequence[int]]], filepath: str) -> None:
    wb = Workbook()
    wb.remove(wb.active)
    styles = init_styles()
    for name, rows in matrices.items():
        ws = wb.create_sheet(title=name[:31])
        write_matrix_sheet(ws, rows, *styles)
    save_workbook(wb, filepath)
