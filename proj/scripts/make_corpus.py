#!/usr/bin/env python3
"""Builds the rehearsal fixtures: a seeded synthetic topic-mixture corpus plus
its lexicon, token frequencies, and function-word list.

The corpus is engineered so context actually matters: ~60 disjoint topic
vocabularies with Zipfian within-topic frequencies, a shared high-frequency
function-word layer, and confusion groups where a mid-frequency word has
higher-frequency spelling neighbours in *other* topics. A frequency-only
ranker is systematically wrong on those; a context ranker is not.
"""
import argparse
import collections
import random

import numpy as np

ONSETS = ["b", "bl", "br", "c", "ch", "cl", "cr", "d", "dr", "f", "fl", "fr",
          "g", "gl", "gr", "h", "j", "k", "kl", "l", "m", "n", "p", "pl",
          "pr", "qu", "r", "s", "sc", "sh", "sk", "sl", "sm", "sn", "sp",
          "st", "str", "sw", "t", "th", "tr", "v", "w", "z"]
VOWELS = ["a", "e", "i", "o", "u", "ai", "au", "ea", "ee", "ie", "oa", "oo",
          "ou"]
CODAS = ["", "", "b", "ck", "d", "f", "g", "l", "ll", "m", "n", "nd", "ng",
         "nk", "nt", "p", "r", "rd", "rm", "rn", "s", "sh", "st", "t", "th",
         "x"]


def pseudoword(rng, min_len, max_len):
    while True:
        word = ""
        for _ in range(rng.randint(2, 4)):
            word += rng.choice(ONSETS) + rng.choice(VOWELS)
            if rng.random() < 0.4:
                word += rng.choice(CODAS)
        if min_len <= len(word) <= max_len:
            return word


def osa(a, b):
    n, m = len(a), len(b)
    d = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        d[i][0] = i
    for j in range(m + 1):
        d[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] != b[j - 1]))
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                d[i][j] = min(d[i][j], d[i - 2][j - 2] + 1)
    return d[n][m]


def fresh_words(rng, taken, count, min_len, max_len):
    out = []
    while len(out) < count:
        w = pseudoword(rng, min_len, max_len)
        if w not in taken:
            taken.add(w)
            out.append(w)
    return out


def substitution_variant(rng, word, taken):
    for _ in range(200):
        pos = rng.randint(1, len(word) - 2)
        ch = rng.choice("abcdefghijklmnopqrstuvwxyz")
        if ch == word[pos]:
            continue
        v = word[:pos] + ch + word[pos + 1:]
        if v not in taken:
            taken.add(v)
            return v
    raise RuntimeError(f"no free variant of {word}")


def zipf_weights(n, s):
    w = 1.0 / np.power(np.arange(n, dtype=np.float64) + 3.0, s)
    return w / w.sum()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--words", type=int, default=5_200_000)
    ap.add_argument("--seed", type=int, default=13)
    ap.add_argument("--topics", type=int, default=60)
    ap.add_argument("--topic-size", type=int, default=470)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    nrng = np.random.default_rng(args.seed)
    taken = set()

    # Function words: short, frequent, and kept at pairwise distance > 1 so
    # corrupting one does not drown it in same-layer ties.
    function_words = []
    while len(function_words) < 200:
        w = pseudoword(rng, 3, 5)
        if w in taken or any(osa(w, f) <= 1 for f in function_words):
            continue
        taken.add(w)
        function_words.append(w)

    general_words = fresh_words(rng, taken, 800, 5, 8)
    topics = [fresh_words(rng, taken, args.topic_size, 5, 9)
              for _ in range(args.topics)]

    # Confusion groups: a "gold" at a middling rank of one topic, with one or
    # two single-substitution neighbours planted at top ranks of other topics.
    free_slots = [set(range(args.topic_size)) for _ in range(args.topics)]
    groups = 0
    for _ in range(1800):
        base = pseudoword(rng, 6, 9)
        if base in taken:
            continue
        taken.add(base)
        gold_topic = rng.randrange(args.topics)
        gold_slots = [r for r in range(150, 350) if r in free_slots[gold_topic]]
        if not gold_slots:
            continue
        gold_rank = rng.choice(gold_slots)
        free_slots[gold_topic].discard(gold_rank)
        topics[gold_topic][gold_rank] = base

        for _ in range(2 if rng.random() < 0.6 else 1):
            rival_topic = rng.randrange(args.topics)
            if rival_topic == gold_topic:
                continue
            rival_slots = [r for r in range(5, 60)
                           if r in free_slots[rival_topic]]
            if not rival_slots:
                continue
            rank = rng.choice(rival_slots)
            free_slots[rival_topic].discard(rank)
            topics[rival_topic][rank] = substitution_variant(rng, base, taken)
        groups += 1

    rare_words = fresh_words(rng, taken, 1200, 6, 10)

    # Token stream: per sentence one topic; tokens are 65% topical, 25%
    # function, 10% general.
    n_sent = args.words // 14
    lengths = nrng.integers(8, 21, n_sent)
    total = int(lengths.sum())
    topic_of_token = np.repeat(nrng.integers(0, args.topics, n_sent), lengths)
    roll = nrng.random(total)
    tokens = np.empty(total, dtype=object)

    topic_w = zipf_weights(args.topic_size, 1.05)
    is_topic = roll < 0.65
    for t in range(args.topics):
        mask = is_topic & (topic_of_token == t)
        tokens[mask] = nrng.choice(topics[t], size=int(mask.sum()), p=topic_w)
    mask = (roll >= 0.65) & (roll < 0.90)
    tokens[mask] = nrng.choice(function_words, size=int(mask.sum()),
                               p=zipf_weights(len(function_words), 1.0))
    mask = roll >= 0.90
    tokens[mask] = nrng.choice(general_words, size=int(mask.sum()),
                               p=zipf_weights(len(general_words), 1.0))

    # Rare words appear 1-4 times each; they stay under the vector-vocabulary
    # cut and supply out-of-vocabulary golds.
    inserts = collections.defaultdict(list)
    for w in rare_words:
        for _ in range(rng.randint(1, 4)):
            inserts[rng.randrange(n_sent)].append(w)

    offsets = np.concatenate(([0], np.cumsum(lengths)))
    counts = collections.Counter(tokens.tolist())
    out_dir = args.out_dir.rstrip("/")
    with open(f"{out_dir}/corpus.txt", "w") as f:
        for s in range(n_sent):
            sent = list(tokens[offsets[s]:offsets[s + 1]])
            for w in inserts.get(s, ()):
                sent.insert(rng.randrange(len(sent) + 1), w)
                counts[w] += 1
            f.write(" ".join(sent))
            f.write("\n")

    with open(f"{out_dir}/lexicon.txt", "w") as f:
        f.write("\n".join(sorted(counts)) + "\n")
    with open(f"{out_dir}/freqs.tsv", "w") as f:
        for w in sorted(counts):
            f.write(f"{w}\t{counts[w]}\n")
    with open(f"{out_dir}/stopwords.txt", "w") as f:
        f.write("\n".join(sorted(function_words)) + "\n")

    in_vocab = sum(1 for c in counts.values() if c >= 5)
    print(f"corpus: {sum(counts.values())} tokens, {len(counts)} types, "
          f"{in_vocab} types with count >= 5, {groups} confusion groups")


if __name__ == "__main__":
    main()
