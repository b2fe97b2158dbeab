"""Runs every subcommand with --format json and validates the records."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["outcomes", "2,5", "--horizon", "30"],
    ["outcomes", "2,7,16", "--seed", "NNNNNNNNNPNNNNNN", "--horizon", "40"],
    ["grundy", "2,5,7"],
    ["grundy", "!2,4", "--horizon", "50"],
    ["period", "2,5,7"],
    ["period", "2,4,7", "--kind", "nim"],
    ["period", "2,5,7", "--horizon", "20"],
    ["misere", "2,3"],
    ["seed-period", "2,7,16", "--seed", "NNNNNNNNNPNNNNNN"],
    ["expand", "3,5", "--bound", "25"],
    ["adjoin-check", "2,5,7"],
    ["bipartite", "3,5,9,17"],
    ["fes", "!2", "--horizon", "100"],
    ["fes-conjecture", "as-lemma", "--params", "2,9"],
    ["family", "S4", "--range", "2..3"],
    ["records", "--range", "5..7", "--k", "3"],
    ["classify3", "--s3", "9"],
    ["zhang", "1,2", "--residue", "1", "--modulus", "3", "--range", "7..16"],
    ["grid2d", "(2,6),(3,3),(6,1),(19,6)", "--width", "200", "--height", "100", "--row", "50"],
]


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 2):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        record = json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(record), key=str)
        if errors:
            failures += 1
            print(f"FAIL {' '.join(args)}: {errors[0].message}")
        elif record["command"] != args[0]:
            failures += 1
            print(f"FAIL {' '.join(args)}: command echoed as {record['command']}")
        else:
            print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
