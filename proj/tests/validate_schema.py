"""Runs every golden CLI invocation and validates its JSON against docs/schema.json."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, corpus_path = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    cases = 0
    with open(corpus_path) as f:
        lines = [ln.strip() for ln in f if ln.strip() and not ln.startswith("#")]
    for line in lines:
        args = [a.strip() for a in line.split(" | ")] + ["--json"]
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        cases += 1
        if proc.returncode != 0:
            print(f"FAIL {line}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            print(f"FAIL {line}: {errors[0].message} at {list(errors[0].absolute_path)}")
            failures += 1
            continue
        again = subprocess.run([cli, *args], capture_output=True, text=True)
        if again.stdout != proc.stdout:
            print(f"FAIL {line}: output differs between runs")
            failures += 1
    print(f"{cases - failures}/{cases} golden invocations valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
