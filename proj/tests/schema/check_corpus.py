"""Validate every scenario file against the JSON Schema."""
import glob
import json
import os
import sys

import jsonschema


def main(root):
    with open(os.path.join(root, "schema", "scenario.schema.json")) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    files = sorted(glob.glob(os.path.join(root, "scenarios", "*.json")))
    bad = 0
    for path in files:
        with open(path) as f:
            errors = list(validator.iter_errors(json.load(f)))
        for e in errors:
            print(f"{path}: /{'/'.join(map(str, e.absolute_path))}: {e.message}")
        bad += len(errors)
    print(f"{len(files)} files, {bad} errors")
    return 1 if bad or not files else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
