#!/usr/bin/env python3
# Copyright 2026 The glossaug Authors
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

"""Brute-force acceptance/OOV counts for the LLM fixtures.

Uses Python's csv module and str.split, independent of the C++ readers.
Values printed here are frozen into llm_test.cc and the acceptance suite.
"""

import csv
import io
import sys
import unicodedata
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"


def vocab(path):
    with open(path, encoding="utf-8") as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    return {t for r in rows for t in unicodedata.normalize("NFC", r["text"]).split()}


def count(raw_path, train_path):
    text = raw_path.read_text(encoding="utf-8")
    if "```" in text:
        text = text.split("```", 2)[1]
        text = text.split("\n", 1)[1]
    delim = "\t" if "\t" in text.splitlines()[0] else ","
    rows = list(csv.DictReader(io.StringIO(text), delimiter=delim))
    v = vocab(train_path)
    accepted, rejected, reasons = [], 0, {}
    for r in rows:
        t = unicodedata.normalize("NFC", r["text"]).split()
        g = unicodedata.normalize("NFC", r["gloss"]).split()
        if not t:
            reason = "empty_text"
        elif len(t) != len(g):
            reason = "alignment"
        else:
            accepted.append(t)
            continue
        rejected += 1
        reasons[reason] = reasons.get(reason, 0) + 1
    tokens = [w for s in accepted for w in s]
    oov = sum(1 for w in tokens if w not in v)
    return len(accepted), rejected, reasons, len(tokens), oov


def main():
    for name in ("llm_validation_fixture.tsv", "mini_llm_output.txt"):
        acc, rej, reasons, n, oov = count(DATA / name, DATA / "mini_train.tsv")
        print(f"{name}: accepted={acc} rejected={rej} reasons={reasons} "
              f"tokens={n} oov={oov} rate={100.0 * oov / n:.4f}")


if __name__ == "__main__":
    sys.exit(main())
