"""Runs a set of innerkit commands and validates every output document
against the shipped JSON schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["weights", "--space", "bergman", "--truncation", "5"],
    ["weights", "--space", "atoms:1,1"],
    ["norm", "--series", "1;1"],
    ["inner-check", "--space", "dirichlet", "--series", "0.57735,0;0.57735,0", "--tol", "1e-10"],
    ["inner-check", "--space", "bergman", "--series", "0;1.4142135623730951"],
    ["witness", "--series", "0.57735,0;0.57735,0", "--normalize"],
    ["witness", "--series", "0;0.7071067811865476"],
    ["witness", "--series", "1;1"],
    ["grid-refute", "--series", "0.57735,0;0.57735,0", "--normalize"],
    ["mult-bound", "--series", "0;0.7071067811865476", "--schedule", "4,16"],
    ["supnorm", "--series", "0.5;0.5"],
    ["ss-inner", "--zeros", "0.5;0.2,0.3"],
    ["ss-inner", "--space", "hardy", "--zeros", "0.5;0.500000001"],
    ["verify-theorem", "--trials", "25"],
    ["verify-theorem", "--space", "bergman", "--trials", "5"],
    ["bergman-demo"],
    ["explore-rs92", "--zeros", "0.5", "--zeros", "0.3;-0.4", "--sections", "16"],
    ["extremal", "--zeros", "0.5", "--degree", "4", "--restarts", "1", "--section-size", "8"],
    ["frobnicate"],
]


def main() -> int:
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args in CASES:
        proc = subprocess.run([tool, *args], capture_output=True, text=True, check=False)
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {' '.join(args)}: output is not JSON ({exc})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
        else:
            print(f"ok   {' '.join(args)} (exit {proc.returncode})")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
