#!/usr/bin/env python3
# Copyright 2026 The snpassoc Authors.
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
"""Regenerates the synthetic corpora under tests/data.

Output is deterministic; rerunning must not change the checked-in files.
"""

import json
import pathlib
import random
import sys

PHENOTYPES = [
    "lung cancer", "nicotine dependence", "type 2 diabetes", "obesity",
    "schizophrenia", "asthma", "hypertension", "breast cancer",
    "anorexia nervosa", "preterm birth", "bipolar disorder", "depression",
    "coronary artery disease", "rheumatoid arthritis", "osteoporosis",
]

# Each template is a list of literal strings and slots. Slots are
# ("snp", k) / ("phen", k); pairs list (snp k, phen k, label, confidence).
# Confidence None means the pair is not positive.


def S(k=0):
    return ("snp", k)


def P(k=0):
    return ("phen", k)


def pval(rng, strength):
    if strength == "small":
        return rng.choice(["p=0.0004", "P < 0.001", "p = 2.1e-5", "p<1e-8",
                           "P = 3 x 10^-6"])
    if strength == "mid":
        return rng.choice(["p=0.043", "p = 0.012", "p-value = 0.03",
                           "P = 0.021"])
    return rng.choice(["p=0.43", "p = 0.21", "P = 0.78", "p-value = 0.6"])


def positive_templates(rng):
    return [
        ([S(), " was significantly associated with ", P(), " (",
          pval(rng, "small"), ")."], [(0, 0, "positive", "high")]),
        (["After adjustment for age, ", S(), " remained significantly "
          "associated with ", P(), " (", pval(rng, "small"), ")."],
         [(0, 0, "positive", "high")]),
        ([S(), " may be associated with ", P(), " in this population."],
         [(0, 0, "positive", "low")]),
        (["The ", S(), " allele possibly increases the risk of ", P(), "."],
         [(0, 0, "positive", "low")]),
        ([S(), " was associated with ", P(), " (", pval(rng, "mid"), ")."],
         [(0, 0, "positive", "medium")]),
        (["Carriers of ", S(), " had a higher risk of ", P(),
          ", but the effect was modest."], [(0, 0, "positive", "medium")]),
        (["We confirmed that ", S(), " is strongly associated with ", P(),
          "."], [(0, 0, "positive", "high")]),
        ([S(), " and ", S(1), " were significantly associated with ", P(),
          " (", pval(rng, "small"), ")."],
         [(0, 0, "positive", "high"), (1, 0, "positive", "high")]),
    ]


def negative_templates(rng):
    return [
        (["There were no associations between ", S(), " and ", P(), "."],
         [(0, 0, "negative", None)]),
        ([S(), " was not associated with ", P(), " (", pval(rng, "big"),
          ")."], [(0, 0, "negative", None)]),
        (["We found no evidence that ", S(), " influences ", P(), "."],
         [(0, 0, "negative", None)]),
        (["Although ", S(), " was genotyped in all subjects, it did not "
          "predict ", P(), "."], [(0, 0, "negative", None)]),
        ([S(), " was associated with ", P(1), " but not with ", P(), "."],
         [(0, 1, "positive", "medium"), (0, 0, "negative", None)]),
    ]


def neutral_templates(rng):
    n = str(rng.randint(120, 2400))
    return [
        ([S(), " and ", P(), " were examined in ", n, " cases and ", n,
          " controls."], [(0, 0, "neutral", None)]),
        (["We genotyped ", S(), " in ", n, " patients with ", P(), "."],
         [(0, 0, "neutral", None)]),
        (["The role of ", S(), " in ", P(), " was investigated in this "
          "study."], [(0, 0, "neutral", None)]),
        ([S(), " was previously reported in a cohort of patients with ",
          P(), "."], [(0, 0, "neutral", None)]),
    ]


def render(template, pairs, rng, sid):
    snps = {}
    phens = {}
    text = ""
    entities = []
    index = {}
    for piece in template:
        if isinstance(piece, str):
            text += piece
            continue
        kind, k = piece
        if kind == "snp":
            value = snps.setdefault(k, "rs%d" % rng.randint(1000, 99999999))
        else:
            value = phens.setdefault(k, None)
            if value is None:
                taken = set(phens.values())
                value = rng.choice([p for p in PHENOTYPES if p not in taken])
                phens[k] = value
        if text == "" and value[0].isalpha() and kind == "phen":
            value = value[0].upper() + value[1:]
        start = len(text)
        text += value
        index[piece] = len(entities)
        entities.append({"kind": "SNP" if kind == "snp" else "Phenotype",
                         "start": start, "end": len(text)})
    out_pairs = []
    for snp_k, phen_k, label, confidence in pairs:
        out_pairs.append({"snp": index[("snp", snp_k)],
                          "phenotype": index[("phen", phen_k)],
                          "label": label, "confidence": confidence})
    return {"id": sid, "text": text, "entities": entities, "pairs": out_pairs}


def synthetic(n_docs, seed, families, prefix):
    rng = random.Random(seed)
    docs = []
    for d in range(n_docs):
        did = "%s%02d" % (prefix, d)
        sentences = []
        for s in range(rng.randint(2, 4)):
            family = rng.choice(families)
            template, pairs = rng.choice(family(rng))
            sentences.append(render(template, pairs, rng, "%s.s%d" % (did, s)))
        docs.append({"id": did, "sentences": sentences})
    return docs


def rule_consistent_positive(rng):
    return [
        ([S(), " was significantly associated with ", P(), " (",
          pval(rng, "small"), ")."], [(0, 0, "positive", "high")]),
        ([S(), " was associated with ", P(), " (", pval(rng, "mid"), ")."],
         [(0, 0, "positive", "medium")]),
    ]


def rule_consistent_negative(rng):
    return [
        (["There were no associations between ", S(), " and ", P(), "."],
         [(0, 0, "negative", None)]),
        ([S(), " was not associated with ", P(), " (", pval(rng, "big"),
          ")."], [(0, 0, "negative", None)]),
    ]


def rule_consistent_neutral(rng):
    n = str(rng.randint(120, 2400))
    return [
        ([S(), " and ", P(), " were examined in ", n, " cases and ", n,
          " controls."], [(0, 0, "neutral", None)]),
        (["We genotyped ", S(), " in ", n, " patients with ", P(), "."],
         [(0, 0, "neutral", None)]),
    ]


def mms_fixture(seed):
    """30 positives whose confidence is readable from in-clause markers."""
    rng = random.Random(seed)
    levels = [
        ("high", [S(), " was significantly associated with ", P(), " (",
                  None, ")."], "small"),
        ("low", [S(), " may be associated with ", P(), "."], None),
        ("medium", [S(), " is reportedly associated with ", P(), " (",
                    None, ")."], "mid"),
    ]
    sentences = []
    for i in range(30):
        level, template, strength = levels[i % 3]
        template = [pval(rng, strength) if piece is None else piece
                    for piece in template]
        sentences.append(render(template, [(0, 0, "positive", level)], rng,
                                "m%02d.s0" % i))
    return [{"id": "m%02d" % i, "sentences": [s]}
            for i, s in enumerate(sentences)]


def write(path, docs):
    with open(path, "w", encoding="utf-8") as f:
        for d in docs:
            f.write(json.dumps(d, ensure_ascii=False) + "\n")


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data")
    out.mkdir(parents=True, exist_ok=True)
    write(out / "synthetic30.jsonl",
          synthetic(30, 7, [positive_templates, positive_templates,
                            negative_templates, neutral_templates], "doc"))
    write(out / "rule_consistent.jsonl",
          synthetic(12, 11, [rule_consistent_positive,
                             rule_consistent_negative,
                             rule_consistent_neutral], "rc"))
    write(out / "mms30.jsonl", mms_fixture(5))


if __name__ == "__main__":
    main()
