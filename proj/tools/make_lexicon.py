#!/usr/bin/env python3
"""Regenerate data/lexicon.tsv.

Inputs:
  --forms   lemminflect's resources/lemma_lu.csv.gz (form,pos,lemmas; MIT)
  --freq    wordfreq's data/small_en.msgpack.gz (frequency-ranked buckets)

The output keeps the most frequent alphabetic English words that have a known
part of speech, written as `surface<TAB>CAT[,CAT...]`. The loader flattens
multi-category lines, so all categories seen for a form are kept here.
"""
import argparse
import gzip
from collections import defaultdict

import msgpack

PRON = "i me we us you he him she her it they them".split()
POSS = "my mine our ours your yours his her hers its their theirs".split()
TITLES = "mr mrs ms dr".split()

# Closed-class and high-frequency function words. Listed forms override any
# open-class reading from the forms table ("will", "can", "may", "one").
OTHER = """
a an the this that these those some any each every either neither no all both
half several many much more most few fewer less least other another such what
which who whom whose whichever whoever whatever where when why how whether
if then than because since unless although though while whereas as so yet
and or but nor for of to in on at by with from into onto upon about above
below under over after before between among through throughout during without
within against along across around behind beyond toward towards near off out
up down via per despite except including like unlike
be am is are was were been being have has had having do does did done doing
will would shall should can could may might must ought
not never also only just even still already very too quite rather really
here there now today tomorrow yesterday ago
myself yourself himself herself itself ourselves yourselves themselves
one two three four five six seven eight nine ten eleven twelve
twenty thirty forty fifty hundred thousand million billion first second third
yes ok okay oh hey please
don't doesn't didn't can't cannot won't isn't aren't wasn't weren't hasn't
haven't hadn't shouldn't wouldn't couldn't mustn't needn't
let's
""".split()

POS_CODE = {"noun": "N", "adj": "ADJ", "verb": "OTHER", "adv": "OTHER", "aux": "OTHER"}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--forms", required=True)
    ap.add_argument("--freq", required=True)
    ap.add_argument("--top", type=int, default=6500)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    # Lowercase forms describe the common reading; a capitalized-only form
    # ("London") is a proper noun.
    lower = defaultdict(set)
    capital = defaultdict(set)
    with gzip.open(args.forms, "rt", encoding="utf-8") as fh:
        for line in fh:
            form, pos, _ = line.rstrip("\n").split(",", 2)
            code = POS_CODE.get(pos)
            if code is None:
                continue
            if form[:1].isupper():
                capital[form.lower()].add("PN" if code == "N" else code)
            else:
                lower[form].add(code)
    cats = dict(capital)
    cats.update(lower)

    buckets = msgpack.load(gzip.open(args.freq), raw=False)[1:]
    ranked = [w for bucket in buckets for w in bucket]

    closed = {}
    for w in OTHER:
        closed[w] = {"OTHER"}
    for w in PRON:
        closed.setdefault(w, set()).discard("OTHER")
        closed[w].add("PRON")
    for w in POSS:
        closed.setdefault(w, set()).discard("OTHER")
        closed[w].add("POSS")
    for w in TITLES:
        closed[w] = {"PN"}

    rows = {}
    for w in ranked[: args.top]:
        if not w.isalpha() or not w.isascii():
            continue
        if w in closed:
            continue
        if w in cats:
            rows[w] = cats[w]
    rows.update(closed)

    order = ["POSS", "PRON", "PN", "N", "ADJ", "OTHER"]
    with open(args.out, "w", encoding="utf-8") as out:
        out.write("# Bundled part-of-speech table: surface<TAB>CAT[,CAT...]\n")
        out.write("# Categories: PN N ADJ PRON POSS OTHER. Regenerate with tools/make_lexicon.py.\n")
        for w in sorted(rows):
            codes = sorted(rows[w], key=order.index)
            out.write(f"{w}\t{','.join(codes)}\n")


if __name__ == "__main__":
    main()
