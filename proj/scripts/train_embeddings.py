#!/usr/bin/env python3
"""Trains rehearsal embeddings on the fixture corpus.

Plain skip-gram with negative sampling, implemented with vectorized numpy
batches. Character n-gram vectors (for out-of-vocabulary composition) are
derived afterwards as the mean of the vectors of every vocabulary word that
contains the n-gram, over the padded form "<word>", lengths 3..6.
"""
import argparse
import collections

import numpy as np

MINN, MAXN = 3, 6
WINDOW = 5
NEGATIVES = 5
SUBSAMPLE = 1e-4
BATCH = 8192
MAX_PAIRS = 18_000_000


def read_sentences(path):
    with open(path) as f:
        return [line.split() for line in f]


def build_stream(sentences, word_id, keep_prob, rng):
    """Token-id stream with -1 sentence boundaries, subsampled."""
    parts = []
    for sent in sentences:
        ids = [word_id[w] for w in sent if w in word_id]
        if ids:
            parts.append(np.array(ids, dtype=np.int32))
            parts.append(np.array([-1], dtype=np.int32))
    stream = np.concatenate(parts)
    words = stream >= 0
    drop = rng.random(stream.size) >= np.where(words, keep_prob[np.maximum(stream, 0)], 1.0)
    return stream[~(words & drop)]


def skipgram_pairs(stream, rng):
    boundary = np.cumsum(stream < 0)
    centers, contexts = [], []
    for d in range(1, WINDOW + 1):
        a, b = stream[:-d], stream[d:]
        ok = (a >= 0) & (b >= 0) & (boundary[d:] == boundary[:-d])
        ok &= rng.random(a.size) < (WINDOW - d + 1) / WINDOW
        centers.append(a[ok]); contexts.append(b[ok])
        centers.append(b[ok]); contexts.append(a[ok])
    c = np.concatenate(centers)
    o = np.concatenate(contexts)
    if c.size > MAX_PAIRS:
        pick = rng.choice(c.size, MAX_PAIRS, replace=False)
        c, o = c[pick], o[pick]
    return c, o


def sigmoid(x):
    return 1.0 / (1.0 + np.exp(-np.clip(x, -8, 8)))


def train(c, o, vocab_size, dim, noise_p, epochs, rng):
    w_in = (rng.random((vocab_size, dim), dtype=np.float64) - 0.5) / dim
    w_out = np.zeros((vocab_size, dim))
    steps = epochs * ((c.size + BATCH - 1) // BATCH)
    step = 0
    for _ in range(epochs):
        order = rng.permutation(c.size)
        for lo in range(0, c.size, BATCH):
            idx = order[lo:lo + BATCH]
            cc, oo = c[idx], o[idx]
            neg = rng.choice(vocab_size, (idx.size, NEGATIVES), p=noise_p)
            lr = 0.05 * max(1.0 - step / steps, 0.01)
            step += 1

            v = w_in[cc]                                   # (B, dim)
            u_pos = w_out[oo]                              # (B, dim)
            u_neg = w_out[neg]                             # (B, K, dim)
            g_pos = (sigmoid(np.einsum("bd,bd->b", v, u_pos)) - 1.0) * lr
            g_neg = sigmoid(np.einsum("bd,bkd->bk", v, u_neg)) * lr

            grad_v = g_pos[:, None] * u_pos + np.einsum("bk,bkd->bd", g_neg, u_neg)
            np.add.at(w_in, cc, -grad_v)
            np.add.at(w_out, oo, -g_pos[:, None] * v)
            np.add.at(w_out, neg.reshape(-1),
                      -(g_neg[:, :, None] * v[:, None, :]).reshape(-1, w_out.shape[1]))
    return w_in


def ngrams_of(word):
    padded = f"<{word}>"
    for n in range(MINN, MAXN + 1):
        for i in range(len(padded) - n + 1):
            yield padded[i:i + n]


def write_vec(path, header, rows):
    with open(path, "w") as f:
        f.write(header + "\n")
        for key, vec in rows:
            f.write(key + " " + " ".join(f"{x:.6g}" for x in vec) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--corpus", required=True)
    ap.add_argument("--out-dir", required=True)
    ap.add_argument("--dim", type=int, default=32)
    ap.add_argument("--seed", type=int, default=13)
    ap.add_argument("--epochs", type=int, default=2)
    ap.add_argument("--min-count", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    sentences = read_sentences(args.corpus)
    counts = collections.Counter(w for s in sentences for w in s)
    vocab = sorted(w for w, c in counts.items() if c >= args.min_count)
    word_id = {w: i for i, w in enumerate(vocab)}
    freq = np.array([counts[w] for w in vocab], dtype=np.float64)

    rel = freq / freq.sum()
    keep_prob = np.minimum(1.0, (np.sqrt(rel / SUBSAMPLE) + 1.0) * SUBSAMPLE / rel)
    noise_p = freq ** 0.75
    noise_p /= noise_p.sum()

    stream = build_stream(sentences, word_id, keep_prob, rng)
    c, o = skipgram_pairs(stream, rng)
    print(f"vocab {len(vocab)}, stream {stream.size}, pairs {c.size}")

    w_in = train(c, o, len(vocab), args.dim, noise_p, args.epochs, rng)

    # Strip the shared mean and the top principal direction; skip-gram
    # vectors carry a large common component that washes out cosine
    # contrast (Mu & Viswanath 2018).
    w_in = w_in - w_in.mean(axis=0)
    top = np.linalg.svd(w_in, full_matrices=False)[2][0]
    w_in = w_in - np.outer(w_in @ top, top)

    # Quick separation report: co-occurring pairs should sit well above
    # random ones.
    def cos(a, b):
        return float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b) + 1e-12))
    sample = rng.choice(c.size, 2000, replace=False)
    near = np.mean([cos(w_in[c[i]], w_in[o[i]]) for i in sample])
    ra = rng.integers(0, len(vocab), 2000)
    rb = rng.integers(0, len(vocab), 2000)
    far = np.mean([cos(w_in[i], w_in[j]) for i, j in zip(ra, rb)])
    print(f"mean cosine: co-occurring {near:.3f}, random {far:.3f}")

    out = args.out_dir.rstrip("/")
    write_vec(f"{out}/vectors.vec", f"{len(vocab)} {args.dim}",
              ((w, w_in[word_id[w]]) for w in vocab))

    acc = collections.defaultdict(lambda: np.zeros(args.dim))
    hits = collections.Counter()
    for w in vocab:
        v = w_in[word_id[w]]
        for g in ngrams_of(w):
            acc[g] += v
            hits[g] += 1
    write_vec(f"{out}/ngrams.vec",
              f"{len(acc)} {args.dim} {MINN} {MAXN}",
              ((g, acc[g] / hits[g]) for g in sorted(acc)))
    print(f"{len(acc)} n-gram vectors")


if __name__ == "__main__":
    main()
