"""Validate the tool's --json output against docs/result.schema.json."""

import json
import subprocess
import sys

import jsonschema

REQUESTS = [
    ["divide", "--field", "q", "--curve", "0,0,1", "--point", "2,3"],
    ["divide", "--curve", "0,-1,0", "--point", "inf"],
    ["divide", "--field", "qext:fp:7:3", "--curve", "0,0,1", "--point", "2,3"],
    ["reconstruct", "--quartic", "-8,0,-8,-8"],
    ["reconstruct", "--quartic", "0,0,1,0"],
    ["reconstruct", "--quartic", "0,2,0,1"],
    ["reconstruct", "--quartic", "-6,11,-6,0"],
    ["reconstruct", "--homogeneous", "--quartic", "0,1,1,0,0"],
    ["classify", "--curve", "0,0,1", "--point", "0,1"],
    ["classify", "--field", "fp:7", "--quartic", "1,2,3,4"],
    ["classify", "--homogeneous", "--quartic", "0,1,0,0,0"],
    ["halves", "--field", "fp:7", "--curve", "0,0,1", "--point", "0,1"],
    ["invariants", "--quartic", "-12,-12,0,0"],
    ["rescale", "--quartic", "0,0,1,0"],
    ["galois", "--type", "biquadratic", "--params", "2,3", "--element", "0,1,1,0"],
    ["galois", "--type", "cyclic", "--params", "2"],
    ["galois", "--field", "fp:7", "--type", "biquadratic", "--params", "3,5", "--algebra"],
    ["stats-check", "--field", "fp:7", "--curve", "0,0,1", "--point", "0,1"],
    ["oracle", "gate", "--prime", "5", "--sign-convention", "both"],
    ["oracle", "classify", "--prime", "3", "--prime", "5"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in REQUESTS:
        proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        for err in errors:
            print(f"{' '.join(args)}: {err.message} at {list(err.absolute_path)}")
        failures += bool(errors)
    print(f"{len(REQUESTS) - failures} of {len(REQUESTS)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
