"""Skip-gram with negative sampling over walk corpora.

The embedding lives in the input table; the output table is the context
side. Training is plain sequential SGD over the shuffled (center, context)
pair stream, with negatives drawn from the corpus unigram distribution
raised to the 0.75 power. The inner loop is JIT-compiled with numba when
available; :func:`sgns_step` is the numpy reference for a single update and
the two paths apply identical arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence, Union

import numpy as np

from .walks import Walk

# Dot products are clamped to this magnitude before the sigmoid to keep the
# exp/log arithmetic finite.
SCORE_CLAMP = 30.0


class EmbeddingParseError(ValueError):
    """An embedding file could not be parsed."""


@dataclass
class TrainConfig:
    dim: int = 128
    window: int = 10
    epochs: int = 10
    negatives: int = 5
    lr_initial: float = 0.025
    lr_final: float = 0.0001
    seed: int = 0

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.negatives < 1:
            raise ValueError("negatives must be >= 1")
        if not self.lr_initial >= self.lr_final > 0:
            raise ValueError("need lr_initial >= lr_final > 0")


@dataclass
class EmbeddingModel:
    """Node vectors plus trainer state.

    ``input_vectors`` holds the embeddings; ``output_vectors`` is the context
    table (None for models read back from disk). ``vocab`` maps node id to
    table row.
    """

    input_vectors: np.ndarray
    output_vectors: np.ndarray | None
    vocab: dict[int, int]
    epoch_losses: tuple[float, ...] = field(default=())

    @property
    def dim(self) -> int:
        return int(self.input_vectors.shape[1])

    def vector(self, node: int) -> np.ndarray:
        return self.input_vectors[self.vocab[node]]


def pair_stream(corpus: Iterable[Walk], window: int) -> Iterator[tuple[int, int]]:
    """(center, context) pairs within ``window`` positions, clipped at walk ends."""
    if window < 1:
        raise ValueError("window must be >= 1")
    for walk in corpus:
        n = len(walk)
        for i in range(n):
            lo = max(i - window, 0)
            hi = min(i + window, n - 1)
            for j in range(lo, hi + 1):
                if j != i:
                    yield walk[i], walk[j]


def sgns_step(
    model: EmbeddingModel,
    center: int,
    context: int,
    negatives: Sequence[int],
    lr: float,
) -> float:
    """One SGD update for a positive pair against sampled negatives.

    Loss: -log sigmoid(u_ctx . v_cen) - sum over negatives of
    log sigmoid(-u_neg . v_cen). Gradients are evaluated at the pre-update
    state and applied afterwards, accumulating over repeated rows. Returns
    the pre-update loss.
    """
    inp = model.input_vectors
    out = model.output_vectors
    cen = model.vocab[center]
    rows = np.array([model.vocab[context]] + [model.vocab[x] for x in negatives])
    v = inp[cen].copy()
    z = np.clip(out[rows] @ v, -SCORE_CLAMP, SCORE_CLAMP)
    sig = 1.0 / (1.0 + np.exp(-z))
    loss = -np.log(sig[0]) - np.sum(np.log(1.0 - sig[1:]))
    coeff = sig.copy()
    coeff[0] -= 1.0
    grad_v = coeff @ out[rows]
    np.add.at(out, rows, -lr * np.outer(coeff, v))
    inp[cen] -= lr * grad_v
    return float(loss)


def _sgns_epoch(inp, out, centers, contexts, negatives, lrs):
    """Sequential SGNS updates over one epoch's pair arrays; returns summed loss.

    Plain-python version of the inner loop; :func:`_epoch_kernel` JIT-compiles
    this exact function.
    """
    total = 0.0
    n_pairs = centers.shape[0]
    dim = inp.shape[1]
    n_neg = negatives.shape[1]
    rows = np.empty(n_neg + 1, dtype=np.int64)
    coeff = np.empty(n_neg + 1)
    grad_v = np.empty(dim)
    for t in range(n_pairs):
        cen = centers[t]
        lr = lrs[t]
        rows[0] = contexts[t]
        for j in range(n_neg):
            rows[j + 1] = negatives[t, j]
        for j in range(n_neg + 1):
            row = rows[j]
            z = 0.0
            for m in range(dim):
                z += out[row, m] * inp[cen, m]
            if z > SCORE_CLAMP:
                z = SCORE_CLAMP
            elif z < -SCORE_CLAMP:
                z = -SCORE_CLAMP
            sig = 1.0 / (1.0 + np.exp(-z))
            if j == 0:
                total += -np.log(sig)
                coeff[j] = sig - 1.0
            else:
                total += -np.log(1.0 - sig)
                coeff[j] = sig
        for m in range(dim):
            grad_v[m] = 0.0
        for j in range(n_neg + 1):
            row = rows[j]
            cj = coeff[j]
            for m in range(dim):
                grad_v[m] += cj * out[row, m]
        for j in range(n_neg + 1):
            row = rows[j]
            step = lr * coeff[j]
            for m in range(dim):
                out[row, m] -= step * inp[cen, m]
        for m in range(dim):
            inp[cen, m] -= lr * grad_v[m]
    return total


_epoch_kernel = None


def _get_epoch_kernel():
    global _epoch_kernel
    if _epoch_kernel is None:
        try:
            from numba import njit

            _epoch_kernel = njit(cache=True)(_sgns_epoch)
        except ImportError:
            _epoch_kernel = _sgns_epoch
    return _epoch_kernel


def train(corpus: Iterable[Walk], config: TrainConfig) -> EmbeddingModel:
    """Train embeddings over a walk corpus.

    Input vectors start uniform in [-0.5/dim, 0.5/dim), output vectors at
    zero. Runs ``epochs`` passes over the shuffled pair stream with the
    learning rate decaying linearly from lr_initial to lr_final across all
    steps. Single-threaded and deterministic for a fixed config seed.
    """
    corpus = list(corpus)
    if not corpus:
        raise ValueError("empty corpus")

    vocab: dict[int, int] = {}
    counts: list[int] = []
    for walk in corpus:
        for node in walk:
            row = vocab.setdefault(node, len(counts))
            if row == len(counts):
                counts.append(0)
            counts[row] += 1

    centers: list[int] = []
    contexts: list[int] = []
    for center, context in pair_stream(corpus, config.window):
        centers.append(vocab[center])
        contexts.append(vocab[context])
    if not centers:
        raise ValueError("corpus yields no context pairs")

    centers_arr = np.array(centers, dtype=np.int64)
    contexts_arr = np.array(contexts, dtype=np.int64)
    n_nodes = len(counts)
    n_pairs = centers_arr.shape[0]

    rng = np.random.default_rng(config.seed)
    inp = (rng.random((n_nodes, config.dim)) - 0.5) / config.dim
    out = np.zeros((n_nodes, config.dim))

    noise = np.array(counts, dtype=float) ** 0.75
    noise /= noise.sum()

    kernel = _get_epoch_kernel()
    total_steps = config.epochs * n_pairs
    decay_denom = max(total_steps - 1, 1)
    losses = []
    done = 0
    for _ in range(config.epochs):
        order = rng.permutation(n_pairs)
        negatives = rng.choice(n_nodes, size=(n_pairs, config.negatives), p=noise)
        lrs = config.lr_initial + (config.lr_final - config.lr_initial) * (
            np.arange(done, done + n_pairs, dtype=float) / decay_denom
        )
        epoch_loss = kernel(
            inp, out, centers_arr[order], contexts_arr[order],
            negatives.astype(np.int64), lrs,
        )
        losses.append(epoch_loss / n_pairs)
        done += n_pairs
    return EmbeddingModel(
        input_vectors=inp, output_vectors=out, vocab=vocab,
        epoch_losses=tuple(losses),
    )


def save_embedding(model: EmbeddingModel, sink: Union[str, Path, IO[str]]) -> None:
    """Write "<count> <dim>" then one "<node> <v1> ... <vd>" line per node.

    Values are rendered with shortest-round-trip precision, so a save/load
    cycle reproduces the vectors exactly.
    """
    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8", newline="\n") as handle:
            save_embedding(model, handle)
        return
    sink.write(f"{len(model.vocab)} {model.dim}\n")
    for node, row in model.vocab.items():
        rendered = " ".join(repr(float(x)) for x in model.input_vectors[row])
        sink.write(f"{node} {rendered}\n")


def load_embedding(source: Union[str, Path, IO[str]]) -> EmbeddingModel:
    """Read the text format back; the result carries input vectors only."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            return load_embedding(handle)

    lines = source.readlines()
    if not lines or not lines[0].split():
        raise EmbeddingParseError("line 1: missing '<count> <dim>' header")
    header = lines[0].split()
    if len(header) != 2:
        raise EmbeddingParseError("line 1: header must be '<count> <dim>'")
    try:
        count, dim = int(header[0]), int(header[1])
    except ValueError:
        raise EmbeddingParseError("line 1: non-integer header field") from None

    vocab: dict[int, int] = {}
    vectors: list[list[float]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != dim + 1:
            raise EmbeddingParseError(
                f"line {lineno}: expected {dim + 1} fields, got {len(tokens)}"
            )
        try:
            node = int(tokens[0])
            values = [float(tok) for tok in tokens[1:]]
        except ValueError:
            raise EmbeddingParseError(f"line {lineno}: malformed number") from None
        if node in vocab:
            raise EmbeddingParseError(f"line {lineno}: duplicate node {node}")
        vocab[node] = len(vectors)
        vectors.append(values)
    if len(vectors) != count:
        raise EmbeddingParseError(
            f"header announced {count} rows but file has {len(vectors)}"
        )
    return EmbeddingModel(
        input_vectors=np.array(vectors, dtype=float),
        output_vectors=None,
        vocab=vocab,
    )
