# Copyright 2026 The qkc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Validates qkc JSON outputs against schema/report.schema.json.

Usage: validate_reports.py SCHEMA QKC WORKDIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["estimate", "--classical", "01", "--n", "2", "--max-len", "12"],
    ["estimate", "--classical", "01", "--n", "2", "--max-len", "12", "--sampled", "--seed", "4"],
    ["estimate", "--gates", "ROT(0)", "--n", "1", "--max-len", "10", "--conditional-gates", "ROT(0)"],
    ["census", "--n", "2", "--c", "1", "--max-len", "12", "--sweep", "3"],
    ["census", "--n", "2", "--c", "2", "--max-len", "12", "--rotated"],
    ["consistency", "--n", "2", "--max-len", "12"],
    ["subadd", "--n", "1", "--px", "7:40", "--py", "7:48", "--max-len", "14"],
    ["jointbound", "--n", "1", "--px", "7:40", "--py", "7:48", "--max-len", "14"],
    ["example", "--bits", "01", "--position", "0", "--max-len", "12"],
    ["encode", "--gates", "X(0),CNOT(0,1)", "--n", "2"],
    ["decode", "--bits", "1", "--n", "2"],
    ["kplan", "--n", "4", "--alpha", "0.01", "--epsilon", "0.25"],
    ["shannon-fano", "--gates", "ROT(0)", "--n", "1"],
    ["warm-cache", "--n", "1", "--max-len", "10"],
]


def main():
    schema = json.loads(pathlib.Path(sys.argv[1]).read_text())
    qkc = sys.argv[2]
    work = pathlib.Path(sys.argv[3])
    work.mkdir(parents=True, exist_ok=True)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        cmd = [qkc, *args, "--cache-dir", str(work / "cache"), "--out-dir", str(work / "reports")]
        out = subprocess.run(cmd, capture_output=True, text=True, check=False)
        if out.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {out.returncode}: {out.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(out.stdout)))
        for e in errors:
            print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
        failures += bool(errors)
    for manifest in sorted((work / "reports").glob("*.manifest.json")):
        m = json.loads(manifest.read_text())
        if not (work / "reports" / m["report"]).exists():
            print(f"FAIL {manifest.name}: missing {m['report']}")
            failures += 1
    print(f"{len(COMMANDS)} commands validated, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
