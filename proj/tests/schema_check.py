#!/usr/bin/env python3
# Copyright 2026 The bikit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs bikit commands and validates their JSON against the result schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

P4 = "4 0.5\n0 1\n1 2\n2 3\n"
DISCONNECTED = "4 0.5\n0 1\n2 3\n"


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    with tempfile.TemporaryDirectory() as tmp:
        p4 = pathlib.Path(tmp, "p4.txt")
        p4.write_text(P4)
        bad = pathlib.Path(tmp, "bad.txt")
        bad.write_text(DISCONNECTED)
        g = str(p4)
        cases = [
            (0, ["improve", g, "--algo", "bicriteria"]),
            (0, ["improve", g, "--algo", "single", "--oracle"]),
            (0, ["improve", g, "--algo", "witness2", "--method", "mc",
                 "--samples", "2000", "--no-timing"]),
            (0, ["improve", g, "--algo", "witness3", "--k", "1"]),
            (0, ["improve", g, "--algo", "submod", "--beta-star", "0.4375"]),
            (0, ["reach", g, "--source", "0", "--algo", "reach", "--oracle"]),
            (0, ["reach", g, "--source", "1", "--algo", "reach-ball"]),
            (0, ["reach", g, "--source", "0", "--algo", "reach-via-broadcast",
                 "--inner", "submod", "--oracle"]),
            (0, ["broadcast", g, "--source", "2"]),
            (0, ["broadcast", g, "--method", "mc", "--samples", "500"]),
            (0, ["brute", g, "--k", "1"]),
            (0, ["brute", g, "--k", "2", "--source", "0"]),
            (1, ["improve", str(pathlib.Path(tmp, "missing.txt")),
                 "--algo", "single"]),
            (1, ["broadcast", str(bad)]),
        ]
        failures = 0
        for expected, args in cases:
            proc = subprocess.run([tool] + args, capture_output=True, text=True)
            label = " ".join(args[:1] + args[2:])
            if proc.returncode != expected:
                print(f"FAIL {label}: exit {proc.returncode}, stderr {proc.stderr}")
                failures += 1
                continue
            try:
                validator.validate(json.loads(proc.stdout))
            except (ValueError, jsonschema.ValidationError) as e:
                print(f"FAIL {label}: {e}")
                failures += 1
                continue
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
