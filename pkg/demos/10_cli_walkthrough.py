"""Driving the command line on the bundled fixture files.

Each fixture is a single JSON document naming the coefficient algebra,
the base pair, the module algebra, and the target algebra.  Exit code 2
marks a genuine mathematical obstruction, not a crash.
"""

import json
import pathlib
import subprocess
import sys

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def run(command, fixture, *extra):
    args = [sys.executable, "-m", "descent_kit.cli", command,
            "--input", str(FIXTURES / fixture), *extra]
    proc = subprocess.run(args, capture_output=True, text=True)
    print(f"$ descent-kit {command} --input fixtures/{fixture} {' '.join(extra)}")
    print(f"  exit code {proc.returncode}")
    report = json.loads(proc.stdout)
    return report


report = run("matrix", "introduction.json")
print("  matrix:", report["matrix"], "invertible:", report["invertible"])

print()
report = run("descend", "introduction.json")
print("  outcome:", report["status"], "-", report["error"])

print()
report = run("descend", "frobenius_square.json", "--audit")
print("  images:", report["presentation"]["images"])
print("  audit ok:", report["audit"]["ok"])

print()
report = run("descend", "differential.json")
print("  images:", report["presentation"]["images"])

print()
report = run("adjoint-check", "adjoint_f2.json")
print("  Hom-set sizes:", report["downstairs_count"], "=", report["upstairs_count"],
      "| bijection ok:", report["ok"])

print()
report = run("adjoint-check", "introduction.json")
print("  evidence:", report["system_rhs"], "= M * x_bar, solvable:", report["solvable"])

print()
report = run("compose-check", "compose_difference.json")
print("  composition checks ok:", report["ok"])
