#!/usr/bin/env python3
# Copyright 2026 The lexcov Authors.
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

"""Independent reference for the unknown-word set of a dictionary run.

Usage: dico_oracle.py DICT... -- CORPUS...

Prints the sorted unknown forms under the unitex_like case policy. Kept
deliberately naive: regex tokenization, linear scans, no automaton. It
ignores sentence boundaries, so it is only valid for corpora where no
compound could straddle one.
"""

import re
import sys
import unicodedata

TOKEN = re.compile(r"[^\W\d_]+|\d+|\s+|.", re.UNICODE)
WORD = re.compile(r"[^\W\d_]+", re.UNICODE)


def form_of(line):
    out = []
    i = 0
    while i < len(line):
        c = line[i]
        if c == "\\":
            out.append(line[i + 1])
            i += 2
            continue
        if c == ",":
            return "".join(out)
        out.append(c)
        i += 1
    raise ValueError("no comma in " + line)


def matches(form, token):
    if form == token:
        return True
    if form != form.lower():
        return False
    return token in (form[:1].upper() + form[1:], form.upper())


def main(argv):
    sep = argv.index("--")
    forms = set()
    for path in argv[:sep]:
        with open(path, encoding="utf-8-sig") as f:
            for line in f:
                line = line.rstrip("\r\n")
                if line:
                    forms.add(form_of(line))
    simple = {f for f in forms if len(TOKEN.findall(f)) == 1}
    compounds = sorted((TOKEN.findall(f) for f in forms
                        if len(TOKEN.findall(f)) > 1),
                       key=len, reverse=True)

    unknown = set()
    for path in argv[sep + 1:]:
        with open(path, encoding="utf-8") as f:
            text = unicodedata.normalize("NFC", f.read())
        text = re.sub(r"[ \t]+", " ", text)
        tokens = TOKEN.findall(text)
        covered = [False] * len(tokens)
        i = 0
        while i < len(tokens):
            hit = None
            if not tokens[i].isspace():
                for pat in compounds:
                    seq = tokens[i:i + len(pat)]
                    if len(seq) == len(pat) and all(
                            (p == t) if p.isspace() else
                            (not t.isspace() and matches(p, t))
                            for p, t in zip(pat, seq)):
                        hit = pat
                        break
            if hit:
                for k in range(i, i + len(hit)):
                    covered[k] = True
                i += len(hit)
            else:
                i += 1
        for t, c in zip(tokens, covered):
            if not WORD.fullmatch(t) or c:
                continue
            if not any(matches(f, t) for f in (t, t.lower())
                       if f in simple):
                unknown.add(t)
    for u in sorted(unknown, key=lambda s: s.encode("utf-8")):
        print(u)


if __name__ == "__main__":
    main(sys.argv[1:])
