#!/usr/bin/env python3
"""Optimize the bundled circuit fixtures on both built-in architectures and
print a markdown cost table per architecture."""
import tempfile
from pathlib import Path

from qxopt import build_table, builtin
from qxopt.bench import bench_directory, render_markdown
from qxopt.fixtures import CIRCUITS, data_text


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        directory = Path(tmp)
        for name in CIRCUITS:
            (directory / f"{name}.qasm").write_text(data_text(f"{name}.qasm"))
        for arch in ("qx2", "qx4"):
            table = build_table(builtin(arch))
            rows = bench_directory(directory, table)
            print(f"## {arch}\n")
            print(render_markdown(rows))


if __name__ == "__main__":
    main()
