"""Runs the CLI on sample trees and validates each document against the schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, *inputs = sys.argv[1:]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    bad = 0
    for path in inputs:
        for extra in ([], ["--with-vectors"]):
            run = subprocess.run([cli, "--no-banner", "analyze", path, *extra], capture_output=True, text=True)
            if run.returncode not in (0, 2):
                print(f"{path}: exit {run.returncode}: {run.stderr}")
                bad += 1
                continue
            errors = list(validator.iter_errors(json.loads(run.stdout)))
            for e in errors:
                print(f"{path} {extra}: {e.json_path}: {e.message}")
            bad += len(errors)
            print(f"{path} {' '.join(extra)}: {'ok' if not errors else 'invalid'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
