"""Partitional clustering of matrix rows: k-means and k-medoids.

Both algorithms are deterministic given (matrix, k, metric, seed): the
initial representatives are k distinct rows sampled with numpy's PCG64
generator (``np.random.default_rng(seed)``), and every tie breaks toward
the lowest index.

k-means follows Lloyd's iteration.  The centroid update is the per-cluster
mean under the Euclidean metric and the component-wise median under the
Manhattan metric, each being the per-coordinate minimizer of its own
objective.  A cluster that loses all members is repaired by reseeding its
centroid to the row farthest from its current centroid.

k-medoids performs a randomized swap descent: draw an untested
(medoid, non-medoid) pair, accept the swap when it strictly lowers the
total cost, and stop once every pair has been tested without acceptance
since the last accepted swap (or after ``max_swaps`` tested swaps).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import DimensionError, DomainError, TooManyClusters
from .weighting import WeightedMatrix

METRICS = ("euclidean", "manhattan")
ALGORITHMS = ("kmeans", "kmedoids")

DEFAULT_MAX_ITER = 100


def _check_metric(metric: str) -> None:
    if metric not in METRICS:
        raise DomainError(f"unknown metric {metric!r}; expected one of {METRICS}")


def distance(a: np.ndarray, b: np.ndarray, metric: str) -> float:
    """Euclidean or Manhattan distance between two equal-length vectors."""
    _check_metric(metric)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if metric == "euclidean":
        return float(np.sqrt(np.sum((a - b) ** 2)))
    return float(np.sum(np.abs(a - b)))


def pairwise_distances(rows: np.ndarray, metric: str) -> np.ndarray:
    """Full n-by-n distance matrix, computed in row blocks to bound memory."""
    _check_metric(metric)
    rows = np.asarray(rows, dtype=np.float64)
    n, dim = rows.shape
    out = np.empty((n, n), dtype=np.float64)
    block = max(1, int(4_000_000 // max(1, n * dim)))
    for start in range(0, n, block):
        chunk = rows[start : start + block]
        diff = chunk[:, None, :] - rows[None, :, :]
        if metric == "euclidean":
            out[start : start + block] = np.sqrt(np.sum(diff**2, axis=-1))
        else:
            out[start : start + block] = np.sum(np.abs(diff), axis=-1)
    return out


@dataclass(frozen=True, eq=False)
class Clustering:
    """Result of one clustering run.

    ``representatives`` holds the centroid matrix (k x dim) for k-means and
    the tuple of medoid row indices for k-medoids.  ``history`` records the
    objective after every assignment pass (k-means) or after the initial
    configuration and each accepted swap (k-medoids).  ``iterations`` counts
    Lloyd passes for k-means and accepted swaps for k-medoids.
    """

    algorithm: str
    metric: str
    k: int
    seed: int
    assignment: np.ndarray  # (n,) int64, values in [0, k)
    representatives: Union[np.ndarray, tuple[int, ...]]
    objective: float
    iterations: int
    history: tuple[float, ...] = ()


def _validate_run_args(n: int, k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k > n:
        raise TooManyClusters(f"k={k} exceeds the {n} data rows")


def _member_distances(rows: np.ndarray, centers: np.ndarray, metric: str) -> np.ndarray:
    """(n, k) distances from every row to every center.

    Euclidean distances are returned squared; only the argmin and the
    k-means objective (which is the squared sum) consume them.
    """
    diff = rows[:, None, :] - centers[None, :, :]
    if metric == "euclidean":
        return np.sum(diff**2, axis=-1)
    return np.sum(np.abs(diff), axis=-1)


def _kmeans_cost(dists: np.ndarray, assignment: np.ndarray) -> float:
    return float(dists[np.arange(len(assignment)), assignment].sum())


def kmeans(
    matrix: WeightedMatrix,
    k: int,
    metric: str,
    seed: int,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Clustering:
    """Lloyd-style k-means over the matrix rows.

    Objective: sum of squared Euclidean distances, or sum of Manhattan
    distances, from each row to its centroid.  Iteration stops when the
    assignment is stable or after ``max_iter`` passes; the returned
    assignment is always the nearest-centroid assignment for the returned
    centroids.
    """
    _check_metric(metric)
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter}")
    rows = np.asarray(matrix.weights, dtype=np.float64)
    n = rows.shape[0]
    _validate_run_args(n, k)

    rng = np.random.default_rng(seed)
    centroids = rows[rng.choice(n, size=k, replace=False)].copy()

    dists = _member_distances(rows, centroids, metric)
    assignment = np.argmin(dists, axis=1)
    history = [_kmeans_cost(dists, assignment)]

    iterations = 0
    for _ in range(max_iter):
        new_centroids = centroids.copy()
        for j in range(k):
            members = rows[assignment == j]
            if len(members) == 0:
                # reseed an emptied cluster with the row farthest from its centroid
                far = _member_distances(rows, centroids[j : j + 1], metric)[:, 0]
                new_centroids[j] = rows[int(np.argmax(far))]
            elif metric == "euclidean":
                new_centroids[j] = members.mean(axis=0)
            else:
                new_centroids[j] = np.median(members, axis=0)
        dists = _member_distances(rows, new_centroids, metric)
        new_assignment = np.argmin(dists, axis=1)
        new_cost = _kmeans_cost(dists, new_assignment)
        if new_cost > history[-1]:
            # a pass that fails to improve the recorded cost is rounding noise
            # (exact arithmetic cannot increase it); keep the previous state
            break
        iterations += 1
        centroids = new_centroids
        converged = np.array_equal(new_assignment, assignment)
        assignment = new_assignment
        history.append(new_cost)
        if converged:
            break

    return Clustering(
        algorithm="kmeans",
        metric=metric,
        k=k,
        seed=seed,
        assignment=assignment.astype(np.int64),
        representatives=centroids,
        objective=history[-1],
        iterations=iterations,
        history=tuple(history),
    )


def _validate_medoids(medoids: Sequence[int], n: int) -> list[int]:
    idx = [int(m) for m in medoids]
    if not idx:
        raise DomainError("medoid set must be non-empty")
    if len(set(idx)) != len(idx):
        raise DomainError(f"medoid indices must be distinct: {idx}")
    if any(m < 0 or m >= n for m in idx):
        raise DomainError(f"medoid index out of range [0, {n}): {idx}")
    return idx


def total_cost(matrix: WeightedMatrix, medoids: Sequence[int], metric: str) -> float:
    """Sum over all rows of the distance to the nearest medoid."""
    _check_metric(metric)
    rows = np.asarray(matrix.weights, dtype=np.float64)
    idx = _validate_medoids(medoids, rows.shape[0])
    diff = rows[:, None, :] - rows[idx][None, :, :]
    if metric == "euclidean":
        dists = np.sqrt(np.sum(diff**2, axis=-1))
    else:
        dists = np.sum(np.abs(diff), axis=-1)
    return float(dists.min(axis=1).sum())


def kmedoids(
    matrix: WeightedMatrix,
    k: int,
    metric: str,
    seed: int,
    max_swaps: int | None = None,
) -> Clustering:
    """Randomized swap descent around k medoids.

    ``max_swaps`` caps the number of *tested* swaps (default ``10 * n * k``).
    The objective is the plain (not squared) distance sum to the nearest
    medoid under either metric.
    """
    _check_metric(metric)
    rows = np.asarray(matrix.weights, dtype=np.float64)
    n = rows.shape[0]
    _validate_run_args(n, k)
    if max_swaps is None:
        max_swaps = 10 * n * k
    if max_swaps < 1:
        raise DomainError(f"max_swaps must be >= 1, got {max_swaps}")

    dist = pairwise_distances(rows, metric)
    rng = np.random.default_rng(seed)
    medoids = [int(m) for m in rng.choice(n, size=k, replace=False)]

    def config_cost(meds: list[int]) -> float:
        return float(dist[:, meds].min(axis=1).sum())

    def fresh_pairs(meds: list[int]) -> list[tuple[int, int]]:
        med_set = set(meds)
        return [(pos, o) for pos in range(k) for o in range(n) if o not in med_set]

    cost = config_cost(medoids)
    history = [cost]
    untested = fresh_pairs(medoids)
    tested = 0
    accepted = 0
    while untested and tested < max_swaps:
        pick = int(rng.integers(len(untested)))
        pos, candidate = untested[pick]
        untested[pick] = untested[-1]
        untested.pop()
        tested += 1
        trial = list(medoids)
        trial[pos] = candidate
        trial_cost = config_cost(trial)
        if trial_cost - cost < 0.0:
            medoids = trial
            cost = trial_cost
            accepted += 1
            history.append(cost)
            untested = fresh_pairs(medoids)

    assignment = np.argmin(dist[:, medoids], axis=1)
    objective = float(dist[np.arange(n), [medoids[c] for c in assignment]].sum())
    return Clustering(
        algorithm="kmedoids",
        metric=metric,
        k=k,
        seed=seed,
        assignment=assignment.astype(np.int64),
        representatives=tuple(medoids),
        objective=objective,
        iterations=accepted,
        history=tuple(history),
    )


def derive_seed(master_seed: int, index: int) -> int:
    """Deterministic per-restart seed: SeedSequence([master_seed, index])."""
    if master_seed < 0 or index < 0:
        raise DomainError("seeds and restart indices must be >= 0")
    return int(np.random.SeedSequence([master_seed, index]).generate_state(1, np.uint64)[0])


def run_restarts(
    matrix: WeightedMatrix,
    k: int,
    metric: str,
    algorithm: str,
    master_seed: int,
    restarts: int,
) -> Clustering:
    """Best-of-``restarts`` run of the chosen algorithm.

    Restart ``i`` uses ``derive_seed(master_seed, i)``; the run with the
    lowest objective wins, earliest restart on ties.
    """
    if algorithm not in ALGORITHMS:
        raise DomainError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    if restarts < 1:
        raise DomainError(f"restarts must be >= 1, got {restarts}")
    run = kmeans if algorithm == "kmeans" else kmedoids
    best: Clustering | None = None
    for i in range(restarts):
        result = run(matrix, k, metric, derive_seed(master_seed, i))
        if best is None or result.objective < best.objective:
            best = result
    assert best is not None
    return best


def clustering_to_dict(clustering: Clustering, doc_ids: Sequence[str]) -> dict:
    """JSON-ready view: assignment keyed by document id."""
    if len(doc_ids) != len(clustering.assignment):
        raise DimensionError(
            f"{len(doc_ids)} doc ids for {len(clustering.assignment)} assignments"
        )
    if isinstance(clustering.representatives, np.ndarray):
        reps = [[float(x) for x in row] for row in clustering.representatives]
    else:
        reps = [int(m) for m in clustering.representatives]
    return {
        "algorithm": clustering.algorithm,
        "metric": clustering.metric,
        "k": clustering.k,
        "seed": clustering.seed,
        "objective": clustering.objective,
        "iterations": clustering.iterations,
        "assignment": {doc_id: int(c) for doc_id, c in zip(doc_ids, clustering.assignment)},
        "representatives": reps,
    }


def clustering_from_dict(data: dict, doc_ids: Sequence[str]) -> Clustering:
    """Rebuild a Clustering from its JSON view, aligned to ``doc_ids``."""
    mapping = data["assignment"]
    try:
        assignment = np.array([mapping[d] for d in doc_ids], dtype=np.int64)
    except KeyError as exc:
        raise DomainError(f"assignment is missing document {exc.args[0]!r}") from None
    reps = data["representatives"]
    representatives: Union[np.ndarray, tuple[int, ...]]
    if data["algorithm"] == "kmedoids":
        representatives = tuple(int(m) for m in reps)
    else:
        representatives = np.asarray(reps, dtype=np.float64)
    return Clustering(
        algorithm=data["algorithm"],
        metric=data["metric"],
        k=int(data["k"]),
        seed=int(data["seed"]),
        assignment=assignment,
        representatives=representatives,
        objective=float(data["objective"]),
        iterations=int(data["iterations"]),
    )
