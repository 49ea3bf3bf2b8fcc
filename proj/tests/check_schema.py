"""Validate CLI reports against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
jobs = [
    (["check-theorem", "--p", "2", "--F", "(x+1)*(y^3+y)-x^3"], 0),
    (["check-theorem", "--p", "5", "--F", "y^2-x^3-x"], 1),
    (["family", "--q", "4", "--b", "w"], 0),
    (["genus", "--p", "2", "--F", "(x+1)*(y^3+y)-x^3"], 0),
    (["analyze", "--p", "5", "--F", "y^2-x^3-x"], 0),
    (["climb", "--p", "2", "--m", "3", "--n", "1", "--r", "2"], 0),
    (["analyze", "--p", "2", "--F", "x+*y"], 2),
    (["family", "--q", "2", "--g", "x"], 2),
]
bad = 0
for args, rc in jobs:
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    report = json.loads(proc.stdout)
    try:
        jsonschema.validate(report, schema)
    except jsonschema.ValidationError as e:
        print("invalid:", " ".join(args), e.message)
        bad += 1
    if proc.returncode != rc:
        print(f"exit {proc.returncode}, expected {rc}:", " ".join(args))
        bad += 1
print(f"{len(jobs)} reports checked, {bad} problems")
sys.exit(1 if bad else 0)
