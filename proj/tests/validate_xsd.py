# Copyright 2026 The ann Authors.
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


"""Validates exported corpus XML against data/corpus.xsd.

Runs the sample writer, validates every file it produced, then checks that a
few hand-broken variants are rejected.
"""

import argparse
import pathlib
import subprocess
import sys
import tempfile

import xmlschema


def broken_variants(xml):
    """Yields (description, text) pairs that the schema must reject."""
    yield "lower-case tag", xml.replace('tag="', 'tag="x', 1)
    yield "unknown status", xml.replace('status="', 'status="x', 1)
    yield "unknown provenance", xml.replace('prov="', 'prov="x', 1)
    yield "unknown subcorpus", xml.replace('path="', 'path="x', 1)
    yield "duplicate sentence id", xml.replace('.0002"', '.0001"', 1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--writer", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--count", type=int, default=20)
    args = ap.parse_args()

    schema = xmlschema.XMLSchema(args.schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run([args.writer, tmp, str(args.count)], check=True)
        files = sorted(pathlib.Path(tmp).glob("*.xml"))
        if len(files) != args.count:
            print(f"expected {args.count} samples, found {len(files)}")
            return 1
        for f in files:
            errors = list(schema.iter_errors(str(f)))
            if errors:
                failures += 1
                print(f"{f.name}: {errors[0].reason}")
        rejected = 0
        tried = 0
        for f in files[1:]:
            text = f.read_text(encoding="utf-8")
            for what, variant in broken_variants(text):
                if variant == text:
                    continue
                tried += 1
                if schema.is_valid(variant):
                    failures += 1
                    print(f"{f.name}: {what} was accepted")
                else:
                    rejected += 1
    print(f"{len(files)} samples validated, {rejected} of {tried} broken variants rejected")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
