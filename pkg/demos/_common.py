from pathlib import Path

from tropluk import format_scalar
from tropluk.io import load_matrix

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def matrix(name):
    return load_matrix(FIXTURES / f"{name}.json").matrix


def show(v):
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def show_rows(M):
    for row in M.rows:
        print("   ", "  ".join(f"{format_scalar(x):>5}" for x in row))
