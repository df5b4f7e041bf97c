"""Run the CLI with --json over a set of commands and validate every output
against docs/report.schema.json. Needs the `jsonschema` package and a built
binary (cargo build -p balanceable-cli)."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

ROOT = Path(__file__).resolve().parent.parent
BIN = ROOT / "target" / "debug" / "balanceable"

COMMANDS = [
    ["classify", "cycle:4"],
    ["classify", "chorded:6,2"],
    ["--budget", "3", "classify", "complete:10"],
    ["conditions", "wheel:6"],
    ["witness", "tri:9"],
    ["witness", "chorded:6,2"],
    ["family-table", "--kmax", "8"],
    ["grid-table", "--rect", "5"],
    ["grid-table", "--tri", "9"],
    ["verify", "--kmax", "9"],
    ["bal", "--n", "4", "--graph", "complete:4"],
    ["bal", "--n", "4", "--graph", "path:2", "--coloring", "0x1"],
    ["bal", "--n", "3", "--graph", "path:1"],
]


def main() -> int:
    schema = json.loads((ROOT / "docs" / "report.schema.json").read_text())
    with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
        f.write("4 3\n0 1\n1 2\n2 3\n")
    commands = COMMANDS + [["reduce", f.name, "--k", "2"]]
    for args in commands:
        out = subprocess.run([str(BIN), "--json", *args], capture_output=True, text=True).stdout
        jsonschema.validate(json.loads(out), schema)
        print("ok", " ".join(args))
    return 0


if __name__ == "__main__":
    sys.exit(main())
