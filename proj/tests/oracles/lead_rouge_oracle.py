#!/usr/bin/env python3
# Copyright 2026 The SciPress Authors.
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
"""Lead-5 ROUGE oracle on data/fixture_corpus.jsonl.

The summarizer input is the abstract followed by the introduction (first
section whose heading contains "intro", else the first section). Prints the
corpus-mean R1/R2/RL F1, x100, rounded to four decimals as in metrics.csv.
"""
import json
import os
import sys
from collections import Counter

sys.path.insert(0, os.path.dirname(__file__))
from readability_oracle import sentences  # noqa: E402


def ngrams(toks, n):
    return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))


def f1(overlap, cand, ref):
    p = overlap / cand if cand else 0.0
    r = overlap / ref if ref else 0.0
    return 2 * p * r / (p + r) if p + r else 0.0


def rouge_n(c, r, n):
    a, b = ngrams(c, n), ngrams(r, n)
    return f1(sum((a & b).values()), sum(a.values()), sum(b.values()))


def lcs(a, b):
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b):
            cur.append(prev[j] + 1 if x == y else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def main():
    path = sys.argv[1] if len(sys.argv) > 1 else "data/fixture_corpus.jsonl"
    rows = []
    for line in open(path):
        inst = json.loads(line)
        art = inst["article"]
        secs = art["sections"]
        intro = next((s for s in secs if "intro" in s["heading"].lower()), secs[0] if secs else None)
        doc = sentences(art["abstract"]) + (sentences(intro["text"]) if intro else [])
        cand = [t.lower() for s in doc[:5] for t in s]
        ref = [t.lower() for s in sentences(inst["press"]["summary"]) for t in s]
        rows.append((rouge_n(cand, ref, 1), rouge_n(cand, ref, 2),
                     f1(lcs(cand, ref), len(cand), len(ref))))
    n = len(rows)
    print("n=%d r1=%.4f r2=%.4f rl=%.4f" % (n, *(100 * sum(r[k] for r in rows) / n for k in range(3))))


if __name__ == "__main__":
    main()
