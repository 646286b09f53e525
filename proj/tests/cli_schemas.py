"""Runs the CLI on sample inputs and validates every JSON output against
the schemas in docs/schemas. Also checks exit codes and determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for path in schema_dir.glob("*.json"):
    resources.append((path.name, Resource.from_contents(json.loads(path.read_text()))))
registry = Registry().with_resources(resources)

tmp = pathlib.Path(tempfile.mkdtemp())
(tmp / "base.json").write_text("[[0,1],[2,1]]")
(tmp / "hyp.json").write_text("[[2,-2,0],[-2,2,-1],[0,-1,2]]")
(tmp / "affine.json").write_text("[[2,-2],[-2,2]]")

cases = [
    (["roots", "A1^(1)", "--mmax", "1"], "roots", 0),
    (["roots", "G2"], "roots", 0),
    (["check", "A1^(1)", str(tmp / "base.json")], "check", 0),
    (["classify", "G2^(1)", "--table"], "classify", 0),
    (["classify", "A2^(1)", "--table", "--depth", "2"], "classify", 0),
    (["classify", "C2^(1)", "--search", "--mmax", "3"], "classify", None),
    (["charge", "E8", "D8", "--k", "1"], "charge", 0),
    (["charge", "A2^(2)", "A1^(1)"], "charge", 0),
    (["levels", "E6", "A5+A1"], "charge", 0),
    (["levels", "G2", "--all"], "charge", 0),
    (["hyperbolic", str(tmp / "hyp.json")], "hyperbolic", 0),
    (["hyperbolic", str(tmp / "affine.json")], "hyperbolic", 1),
    (["verify-tables", "--scope", "lemma-kn"], "verify-tables", 0),
    (["verify-tables", "--scope", "coset"], "verify-tables", 3),
]

failures = 0
for args, schema, code in cases:
    first = subprocess.run([exe, *args], capture_output=True, text=True)
    second = subprocess.run([exe, *args], capture_output=True, text=True)
    problems = []
    if code is not None and first.returncode != code:
        problems.append(f"exit {first.returncode}, expected {code}: {first.stderr.strip()}")
    if first.stdout != second.stdout:
        problems.append("output differs between runs")
    try:
        validator = jsonschema.Draft7Validator(
            registry.contents(f"{schema}.output.json"), registry=registry)
        errors = list(validator.iter_errors(json.loads(first.stdout)))
        problems += [e.message for e in errors[:3]]
    except json.JSONDecodeError as e:
        problems.append(f"not JSON: {e}")
    status = "ok  " if not problems else "FAIL"
    print(status, " ".join(args))
    for p in problems:
        print("     ", p)
    failures += bool(problems)

# Usage errors exit with 1 and print nothing on stdout.
for args in (["roots", "Z9"], ["levels", "E8"], ["nonsense"]):
    r = subprocess.run([exe, *args], capture_output=True, text=True)
    ok = r.returncode == 1 and r.stdout == ""
    print("ok  " if ok else "FAIL", " ".join(args), "->", r.returncode)
    failures += not ok

sys.exit(1 if failures else 0)
