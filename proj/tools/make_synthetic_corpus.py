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
"""Writes the synthetic paired corpora under data/.

Abstracts reuse sentences from the article body; press summaries retell the
abstract in plain words, name the authors and their institutions, and open
with the conclusion. Every file is a pure function of the seed.

  python3 tools/make_synthetic_corpus.py [--out data]
"""

import argparse
import json
import os
import random

TOPICS = [
    dict(field="quantum computing", thing="superconducting qubit array",
         lay="quantum computer", problem="decoherence of entangled states",
         lay_problem="fragile calculations that fall apart", method="surface code error correction",
         lay_method="a new way of catching mistakes", metric="logical error rate",
         lay_metric="mistakes", use="simulation of molecular chemistry",
         lay_use="design new medicines and materials"),
    dict(field="computer vision", thing="convolutional segmentation network",
         lay="camera system", problem="annotation scarcity in medical imaging",
         lay_problem="too few labelled hospital scans", method="contrastive self-supervised pretraining",
         lay_method="teaching the software with unlabelled pictures", metric="Dice coefficient",
         lay_metric="accuracy", use="automated tumour delineation",
         lay_use="help doctors spot tumours faster"),
    dict(field="robotics", thing="compliant robotic manipulator",
         lay="robot hand", problem="unstable grasping of deformable objects",
         lay_problem="dropping soft things like fruit", method="tactile feedback reinforcement learning",
         lay_method="letting the robot learn by touch", metric="grasp success rate",
         lay_metric="successful grabs", use="automated agricultural harvesting",
         lay_use="pick fruit on farms"),
    dict(field="natural language processing", thing="transformer summarization model",
         lay="writing assistant", problem="hallucinated content in generated summaries",
         lay_problem="made-up facts in computer-written summaries", method="entailment-constrained decoding",
         lay_method="a fact checking step inside the software", metric="factual consistency score",
         lay_metric="correct facts", use="summarization of clinical records",
         lay_use="help nurses read patient files"),
    dict(field="computer security", thing="hardware enclave attestation protocol",
         lay="security chip", problem="side-channel leakage of cryptographic secrets",
         lay_problem="hackers stealing passwords from chips", method="constant-time instruction scheduling",
         lay_method="making the chip take the same time for every task", metric="information leakage",
         lay_metric="stolen data", use="protection of cloud infrastructure",
         lay_use="keep online services safe"),
    dict(field="wireless networking", thing="millimetre-wave beamforming architecture",
         lay="wireless antenna", problem="signal blockage in dense urban environments",
         lay_problem="dropped calls in busy cities", method="predictive beam tracking",
         lay_method="pointing the signal ahead of moving phones", metric="link outage probability",
         lay_metric="dropped connections", use="deployment of sixth-generation networks",
         lay_use="bring faster mobile internet"),
    dict(field="computational biology", thing="protein structure prediction pipeline",
         lay="protein tool", problem="conformational heterogeneity of membrane proteins",
         lay_problem="proteins that keep changing shape", method="ensemble diffusion sampling",
         lay_method="running many quick guesses at once", metric="structural deviation",
         lay_metric="errors", use="structure-based drug discovery",
         lay_use="speed up the search for new drugs"),
    dict(field="human-computer interaction", thing="haptic virtual reality interface",
         lay="virtual reality glove", problem="sensory mismatch during immersive interaction",
         lay_problem="motion sickness in virtual worlds", method="adaptive vibrotactile rendering",
         lay_method="small vibrations that match what people see", metric="simulator sickness score",
         lay_metric="dizziness", use="rehabilitation of stroke patients",
         lay_use="help stroke patients recover"),
]

FIRST = ["Maria", "James", "Aiko", "Pedro", "Fatima", "Lukas", "Chen", "Amara", "Olga",
         "Rahul", "Sofia", "Kwame", "Elena", "Tomas", "Priya", "Daniel", "Ingrid", "Yusuf"]
LAST = ["Lopez", "Smith", "Tanaka", "Silva", "Haddad", "Weber", "Wang", "Okafor", "Petrova",
        "Sharma", "Rossi", "Mensah", "Novak", "Berg", "Iyer", "Cohen", "Larsen", "Demir"]
INSTITUTIONS = ["University of Lisbon", "Stanford University", "Kyoto University",
                "University of Toronto", "Imperial College London", "Tsinghua University",
                "ETH Zurich", "University of Cape Town", "Carnegie Mellon University",
                "University of Melbourne", "Technical University of Munich",
                "Indian Institute of Science"]
WRITERS = ["ACM TechNews", "University News Office", "Science Daily Desk", "Tech Wire"]
SOURCES = ["arxiv", "nature", "author"]


def pick(rng, xs):
    return xs[rng.randrange(len(xs))]


def cap(s):
    return s[0].upper() + s[1:]


def make_instance(rng, idx):
    t = TOPICS[rng.randrange(len(TOPICS))]
    n_auth = rng.choice([1, 2, 3])
    authors = []
    for _ in range(n_auth):
        name = pick(rng, FIRST) + " " + pick(rng, LAST)
        aff = pick(rng, INSTITUTIONS) if rng.random() > 0.1 else ""
        authors.append({"name": name, "affiliation": aff})
    lead = authors[0]
    inst_name = next((a["affiliation"] for a in authors if a["affiliation"]), pick(rng, INSTITUTIONS))
    gain = rng.choice([12, 18, 23, 27, 31, 35, 41, 46])
    size = rng.choice([48, 64, 96, 128, 256, 512])
    year = rng.choice([2019, 2020, 2021, 2022])

    # Body sentences, (text, role). Technical register.
    intro = [
        (f"The {t['problem']} remains a major obstacle in {t['field']} research.", "BACKGROUND"),
        (f"Existing approaches to this problem need large computing budgets and careful manual tuning.", "BACKGROUND"),
        (f"As a result, the {t['thing']} is rarely used in real operating conditions.", "BACKGROUND"),
        (f"Prior work found that the {t['metric']} gets worse as systems grow larger.", "BACKGROUND"),
        (f"In this work, we test whether {t['method']} can reduce the {t['problem']}.", "OBJECTIVE"),
        (f"Our main goal is to measure the {t['metric']} of the {t['thing']} under controlled changes.", "OBJECTIVE"),
    ]
    methods = [
        (f"We built a test {t['thing']} with {size} separately tunable parts.", "METHODS"),
        (f"The {t['method']} step used standard settings and was run in {rng.choice([5, 10, 20])} separate trials.", "METHODS"),
        (f"We measured the {t['metric']} and applied standard tests of significance.", "METHODS"),
        (f"Baseline systems used published designs without any changes.", "METHODS"),
        (f"All data were collected between {year} and {year + 1} with the same equipment.", "METHODS"),
    ]
    results = [
        (f"The new setup improved the {t['metric']} by {gain} percent over the best baseline.", "RESULTS"),
        (f"The gains were significant in every tested condition.", "RESULTS"),
        (f"Ablation tests showed that the {t['method']} step caused most of the gain.", "RESULTS"),
        (f"The extra computing cost stayed below {rng.choice([8, 10, 15])} percent of the baseline cost.", "RESULTS"),
    ]
    discussion = [
        (f"These results show that {t['method']} is a scalable fix for the {t['problem']}.", "CONCLUSIONS"),
        (f"The approach could support the {t['use']} in the near future.", "CONCLUSIONS"),
        (f"Future work will test the method on much larger systems.", "CONCLUSIONS"),
    ]

    # Abstract: body sentences, lightly edited. Fixed rhetorical order.
    abstract = [
        (intro[0][0], "BACKGROUND"),
        (f"Here we ask whether {t['method']} can reduce the {t['problem']} in the {t['thing']}.", "OBJECTIVE"),
        (methods[0][0], "METHODS"),
        (f"Compared with the best baseline, our design improved the {t['metric']} by {gain} percent.", "RESULTS"),
        (rng.choice([results[1][0], results[2][0]]), "RESULTS"),
        (discussion[0][0], "CONCLUSIONS"),
    ]
    if rng.random() < 0.5:
        abstract.append((discussion[1][0], "CONCLUSIONS"))

    # Press summary: plain register, conclusions first, authors named.
    who = f"{lead['name']} of {inst_name}" if lead["affiliation"] else lead["name"]
    press = [
        (f"Researchers at {inst_name} say their new {t['lay']} could one day {t['lay_use']}, thanks to {t['lay_method']} known as {t['method']}.",
         ["AUTHOR", "CONCLUSIONS"]),
        (f"Today, {t['field']} systems struggle with {t['lay_problem']}, a problem experts call the {t['problem']}.",
         ["BACKGROUND"]),
        (f"The team, led by {who}, built a {t['thing']} with {size} separately tunable parts and tested it in the laboratory over many months.",
         ["AUTHOR", "METHODS"]),
        (f"In their experiments, the new design improved the {t['metric']} by {gain} percent compared with conventional technology.",
         ["RESULTS"]),
    ]
    tail = rng.random()
    if tail < 0.5:
        press.append((f"\"We were surprised by how well the {t['lay']} worked in everyday conditions,\" said {lead['name']}.",
                      ["AUTHOR", "RESULTS"]))
    elif tail < 0.8:
        press.append((f"The researchers now plan to make their {t['lay']} bigger and cheaper so that more people can benefit.",
                      ["CONCLUSIONS"]))

    body_sections = [
        {"heading": "Introduction", "text": " ".join(s for s, _ in intro)},
        {"heading": "Methods", "text": " ".join(s for s, _ in methods)},
        {"heading": "Results", "text": " ".join(s for s, _ in results)},
        {"heading": "Discussion", "text": " ".join(s for s, _ in discussion)},
    ]
    iid = f"syn-{idx:04d}"
    abstract_text = " ".join(s for s, _ in abstract)
    press_text = " ".join(s for s, _ in press)
    record = {
        "id": iid,
        "article": {
            "title": f"{cap(t['method'])} for the {t['thing']}",
            "abstract": abstract_text,
            "sections": body_sections,
            "authors": authors,
            "source": pick(rng, SOURCES),
        },
        "press": {
            "title": f"New {t['lay']} could {t['lay_use']}",
            "summary": press_text,
            "article": "",
            "writer_org": pick(rng, WRITERS),
            "date": f"{year + 1}-{rng.randrange(1, 13):02d}-{rng.randrange(1, 29):02d}",
        },
    }
    labels = [
        {"instance_id": iid, "side": "SCI_ABSTRACT", "labels": [r for _, r in abstract]},
        {"instance_id": iid, "side": "SCI_INPUT", "labels": [r for _, r in abstract] + [r for _, r in intro]},
        {"instance_id": iid, "side": "PR_SUMMARY", "labels": [g for _, g in press]},
    ]
    entities = []

    def mark(side, text, needle, etype):
        start = 0
        while True:
            at = text.find(needle, start)
            if at < 0:
                return
            b = len(text[:at].encode("utf-8"))
            entities.append({"instance_id": iid, "side": side, "start": b,
                             "end": b + len(needle.encode("utf-8")), "etype": etype})
            start = at + len(needle)

    for side, text in (("PR_SUMMARY", press_text), ("SCI_ABSTRACT", abstract_text)):
        for a in authors:
            mark(side, text, a["name"], "PERSON")
        for org in sorted({a["affiliation"] for a in authors if a["affiliation"]} | {inst_name}):
            mark(side, text, org, "ORG")
        for num in sorted({str(gain), str(size)}):
            mark(side, text, " " + num + " ", "NUMBER")
    # NUMBER spans above include the padding spaces; trim them.
    for e in entities:
        if e["etype"] == "NUMBER":
            e["start"] += 1
            e["end"] -= 1
    entities.sort(key=lambda e: (e["side"], e["start"]))
    return record, labels, entities


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for r in rows:
            f.write(json.dumps(r, ensure_ascii=False, sort_keys=False) + "\n")


def build(n, seed, prefix, out):
    rng = random.Random(seed)
    records, labels, entities = [], [], []
    for i in range(n):
        r, l, e = make_instance(rng, i)
        records.append(r)
        labels.extend(l)
        entities.extend(e)
    write_jsonl(os.path.join(out, prefix + ".jsonl"), records)
    write_jsonl(os.path.join(out, prefix + "_labels.jsonl"), labels)
    write_jsonl(os.path.join(out, prefix + "_entities.jsonl"), entities)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    build(50, 20231, "synthetic_corpus", args.out)
    build(120, 20232, "synthetic_corpus_large", args.out)
    build(10, 20233, "fixture_corpus", args.out)


if __name__ == "__main__":
    main()
