from fock_ida.export.matrices import matrix_to_text, read_matrix_text, write_matrix
from fock_ida.export.summary import build_summary, write_summary
from fock_ida.export.tables import format_cell, rows_to_csv, write_rows_csv

__all__ = [
    "build_summary",
    "format_cell",
    "matrix_to_text",
    "read_matrix_text",
    "rows_to_csv",
    "write_matrix",
    "write_rows_csv",
    "write_summary",
]
