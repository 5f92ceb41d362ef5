"""Runs the sgfl binary over representative commands, validates every JSON
report against the schema and checks that repeated runs are byte-identical."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["analyze", "--gens", "10,12,21,38"],
    ["analyze", "--gens", "6,9,20", "--all"],
    ["analyze", "--gens", "(2,0),(3,1),(0,5)", "--allow-default"],
    ["minrepl", "--gens", "10,12,21,38", "--m", "10"],
    ["minrepl", "--gens", "(2,0),(3,1),(0,5)", "--m", "(0,5)"],
    ["verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest"],
    ["verdict", "--gens", "10,12,21,38", "--m", "38", "--formula", "shortest", "--scope", "full", "--all"],
    ["verdict", "--gens", "6,9,20", "--m", "6", "--method", "embdim3"],
    ["verdict", "--gens", "6,9,20", "--m", "20", "--formula", "shortest", "--method", "oracle"],
    ["oracle", "--gens", "10,14,21,25", "--m", "10", "--all"],
    ["oracle", "--gens", "(2,0),(3,1),(0,5)", "--m", "(2,0)", "--bound", "30"],
    ["lengths", "--gens", "6,9,20", "--element", "48"],
    ["lengths", "--gens", "(2,0),(3,1),(0,5)", "--element", "(12,2)"],
    ["kunz", "point", "--m", "5", "--x", "0,1,2,1,2", "--verdict", "longest", "--cominimal", "0,11,22,32,43"],
    ["kunz", "point", "--m", "5", "--x", "0,0,0,0,0"],
    ["paper-examples"],
    ["minrepl", "--gens", "6,9,x", "--m", "6"],
    ["--budget", "1", "minrepl", "--gens", "10,12,21,38", "--m", "10"],
    ["kunz", "point", "--m", "5", "--x", "0,1.5,2,1,2"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        validator = jsonschema.Draft202012Validator(json.load(f))
    failures = 0
    for args in COMMANDS:
        runs = [subprocess.run([binary, "--seed", "5", *args], capture_output=True, text=True) for _ in range(2)]
        label = " ".join(args)
        if runs[0].stdout != runs[1].stdout:
            print(f"FAIL nondeterministic output: {label}")
            failures += 1
        try:
            report = json.loads(runs[0].stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL not JSON ({e}): {label}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
        for e in errors[:3]:
            print(f"FAIL {label}: {'/'.join(map(str, e.path))}: {e.message[:200]}")
        failures += bool(errors)
        if report.get("seed") != 5:
            print(f"FAIL seed not echoed: {label}")
            failures += 1
    print(f"{len(COMMANDS) - failures}/{len(COMMANDS)} reports valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
