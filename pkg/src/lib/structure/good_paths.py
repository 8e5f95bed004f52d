"""
Good-path profiles for odd-cycle-free graphs.

h_j(u, v) counts walks of length j. Every ℓ-path u_0 u_1 ... u_ℓ gets the
signature b_{i,j} = ⌊log₂ h_{j-i}(u_i, u_j)⌋ over 0 ≤ i < j ≤ ℓ. The profile
keeps the signature maximizing count·2^(ε·Σb), sets s_{i,j} = 2^(b_{i,j}), and
calls a path good when s_{i,j} ≤ h_{j-i}(u_i, u_j) < 2·s_{i,j} for all of its
index pairs. A random layer partition U_0 ∪ ... ∪ U_q then restricts good
q-paths to layered tuples (the set 𝒜), and good (q-1)-paths to ℬ.

Signatures are stored as flat tuples over index_pairs(ℓ), ordered by j then
i, so the signature of a q-path is a prefix of the ℓ-path signature.

Usage:
    from lib.structure import good_path_profile, st_sets

    prof = good_path_profile(g, r=7, seed=1)
    sets = st_sets(prof, prof.q)
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from lib.graph import Graph, iter_bits, mask_of, walk_count, walk_matrix
from lib.utils.errors import InvariantViolation, ParameterError
from lib.utils.parallel import chunk_ranges, ordered_map
from lib.utils.seeding import make_rng
from lib.vectors import BucketSets

log = logging.getLogger(__name__)

DEFAULT_PATH_CAP = 10 ** 7
DEFAULT_SAMPLES = 200_000
LAYER_ATTEMPTS = 20
LAYER_FACTOR = 2


class _CapExceeded(Exception):
    pass


def default_epsilon(ell, max_degree):
    """ε = 1/(40·ℓ²·log₂(Δ+2))."""
    return 1 / (40 * ell * ell * math.log2(max_degree + 2))


def index_pairs(length):
    """(i, j) with 0 ≤ i < j ≤ length, ordered by j then i."""
    return tuple((i, j) for j in range(1, length + 1) for i in range(j))


def floor_log2(matrix):
    """Exact ⌊log₂ x⌋ of a non-negative int64 matrix; -1 where x = 0."""
    result = np.full(matrix.shape, -1, dtype=np.int64)
    for k in range(63):
        result[matrix >= (1 << k)] = k
    return result


def _bucket_tables(g, length):
    """tables[j][u][v] = ⌊log₂ h_j(u, v)⌋ for 1 ≤ j ≤ length, as nested lists."""
    return [None] + [floor_log2(walk_matrix(g, j)).tolist() for j in range(1, length + 1)]


def _signature_counts(tables, rows, starts, length, cap=None):
    counts = Counter()
    path, sig = [], []
    total = 0

    def visit(v, used):
        nonlocal total
        j = len(path)
        for i in range(j):
            sig.append(tables[j - i][path[i]][v])
        path.append(v)
        if j == length:
            counts[tuple(sig)] += 1
            total += 1
            if cap is not None and total > cap:
                raise _CapExceeded
        else:
            for w in iter_bits(rows[v] & ~used):
                visit(w, used | (1 << w))
        path.pop()
        del sig[len(sig) - j:]

    for u in starts:
        visit(u, 1 << u)
    return counts


def _sample_signatures(tables, rows, n, length, samples, rng):
    """
    Knuth estimator: uniform start, uniform unused neighbour at each step,
    weight n·Π(choices). Weights are unbiased for the per-signature path counts.
    """
    counts = Counter()
    for _ in range(samples):
        v = int(rng.integers(n))
        path, sig, used, weight = [v], [], 1 << v, float(n)
        for j in range(1, length + 1):
            choices = list(iter_bits(rows[path[-1]] & ~used))
            if not choices:
                break
            w = choices[int(rng.integers(len(choices)))]
            weight *= len(choices)
            sig.extend(tables[j - i][path[i]][w] for i in range(j))
            path.append(w)
            used |= 1 << w
        else:
            counts[tuple(sig)] += weight / samples
    return counts


def _good_paths(tables, rows, target, length, starts, layers=None, collect=False, cap=None):
    """
    Depth-first enumeration of good paths of the given length.

    Returns:
        tuple: (count, list of path tuples when collect is set)
    """
    found = []
    path = []
    count = 0

    def visit(v, used):
        nonlocal count
        j = len(path)
        base = j * (j - 1) // 2
        for i in range(j):
            if tables[j - i][path[i]][v] != target[base + i]:
                return
        path.append(v)
        if j == length:
            count += 1
            if collect:
                found.append(tuple(path))
            if cap is not None and count > cap:
                raise _CapExceeded
        else:
            candidates = rows[v] & ~used
            if layers is not None:
                candidates &= layers[j + 1]
            for w in iter_bits(candidates):
                visit(w, used | (1 << w))
        path.pop()

    for u in starts:
        if layers is None or (layers[0] >> u) & 1:
            visit(u, 1 << u)
    return count, found


def _path_bound(g, length):
    d = g.max_degree
    return g.n * d * max(d - 1, 0) ** (length - 1) if length >= 1 else g.n


def _merge(counters):
    total = Counter()
    for counter in counters:
        total.update(counter)
    return total


def _count_signatures(g, tables, length, cap, samples, seed, allow_sampling):
    """Per-signature path counts; (counts, sampled)."""
    rows = g.rows
    if _path_bound(g, length) <= cap:
        parts = ordered_map(
            lambda bounds: _signature_counts(tables, rows, range(*bounds), length),
            chunk_ranges(g.n, 16),
        )
        return _merge(parts), False
    try:
        return _signature_counts(tables, rows, range(g.n), length, cap), False
    except _CapExceeded:
        if not allow_sampling:
            raise ParameterError(f"more than {cap} paths of length {length} and sampling is disabled")
    log.info("good_path_profile sampling length=%d samples=%d cap=%d", length, samples, cap)
    rng = make_rng(seed, 'paths', length)
    return _sample_signatures(tables, rows, g.n, length, samples, rng), True


def _count_good(g, tables, target, length, cap, samples, seed):
    """Number of good paths of the given length; (count, sampled)."""
    rows = g.rows
    if _path_bound(g, length) <= cap:
        parts = ordered_map(
            lambda bounds: _good_paths(tables, rows, target, length, range(*bounds))[0],
            chunk_ranges(g.n, 16),
        )
        return float(sum(parts)), False
    try:
        return float(_good_paths(tables, rows, target, length, range(g.n), cap=cap)[0]), False
    except _CapExceeded:
        rng = make_rng(seed, 'paths', 'good', length)
        estimate = _sample_signatures(tables, rows, g.n, length, samples, rng)
        return float(estimate.get(tuple(target), 0.0)), True


def _log_gap(size, expected):
    if expected <= 0:
        return 0.0 if size == 0 else math.inf
    if size == 0:
        return math.inf
    return abs(math.log(size / expected))


@dataclass(frozen=True)
class GoodPathProfile:
    """
    Selected good-path signature with the layered tuples of one working level.

    Attributes:
        graph: Host graph
        r: Odd cycle length
        ell: ℓ = (r-1)/2
        q: Working level (2 ≤ q ≤ ℓ)
        epsilon: Pigeonhole exponent
        signature: b_{i,j} over index_pairs(ell)
        signature_count: ℓ-paths carrying the signature (estimate when sampled)
        path_total: All ℓ-paths (estimate when sampled)
        sampled: Whether the path statistics come from the sampler
        good_q: Good q-paths
        expected_A: good_q/(q+1)^(q+1)
        layers: Layer index of every vertex
        A: Good q-path tuples with u_i ∈ U_i
        B: Good (q-1)-path tuples with u_i ∈ U_i
        attempts: Layer draws used
    """

    graph: Graph = field(repr=False, compare=False)
    r: int
    ell: int
    q: int
    epsilon: float
    signature: tuple
    signature_count: float
    path_total: float
    sampled: bool
    good_q: float
    expected_A: float
    layers: tuple
    A: tuple
    B: tuple
    attempts: int

    @property
    def pairs(self):
        return index_pairs(self.ell)

    @property
    def s_matrix(self):
        return {pair: 1 << b for pair, b in zip(self.pairs, self.signature)}

    def s(self, i, j):
        return 1 << self.signature[j * (j - 1) // 2 + i]

    @property
    def nu(self):
        """(Π s_{i,j})^(-ε)."""
        return 2.0 ** (-self.epsilon * sum(self.signature))

    @property
    def layer_masks(self):
        return tuple(mask_of(v for v, layer in enumerate(self.layers) if layer == i)
                     for i in range(self.q + 1))

    @property
    def count_ratio(self):
        """signature_count/(ν n d^ℓ) with d the average degree."""
        d = float(self.graph.average_degree)
        scale = self.nu * self.graph.n * d ** self.ell
        return self.signature_count / scale if scale else 0.0

    def to_dict(self):
        return {
            'r': self.r,
            'ell': self.ell,
            'q': self.q,
            'epsilon': self.epsilon,
            'nu': self.nu,
            's_matrix': {f"{i},{j}": s for (i, j), s in self.s_matrix.items()},
            'paths': self.path_total,
            'signature_paths': self.signature_count,
            'sampled': self.sampled,
            'good_q_paths': self.good_q,
            'expected_A': self.expected_A,
            'A': len(self.A),
            'B': len(self.B),
            'layer_sizes': [sum(1 for layer in self.layers if layer == i) for i in range(self.q + 1)],
            'layer_attempts': self.attempts,
            'count_ratio': self.count_ratio,
        }


def check_monotone(prof):
    """
    s_{i',j'} ≤ 2·s_{i,j} whenever i ≤ i' < j' ≤ j.

    Raises:
        InvariantViolation: On the first failing pair
    """
    for i, j in prof.pairs:
        for i2, j2 in prof.pairs:
            if i <= i2 and j2 <= j and prof.s(i2, j2) > 2 * prof.s(i, j):
                raise InvariantViolation(
                    f"s[{i2},{j2}] = {prof.s(i2, j2)} > 2·s[{i},{j}] = {2 * prof.s(i, j)}"
                )
    return True


def verify_good(prof):
    """Re-check every stored tuple with independent walk counts."""
    g = prof.graph
    for tuples in (prof.A, prof.B):
        for path in tuples:
            for i, j in index_pairs(len(path) - 1):
                h = walk_count(g, path[i], path[j], j - i)
                if not prof.s(i, j) <= h < 2 * prof.s(i, j):
                    raise InvariantViolation(
                        f"tuple {path}: h_{j - i}({path[i]}, {path[j]}) = {h} outside "
                        f"[{prof.s(i, j)}, {2 * prof.s(i, j)})"
                    )
    return True


def _draw_level(g, tables, signature, q, cap, samples, seed):
    target_q = signature[:q * (q + 1) // 2]
    target_b = signature[:(q - 1) * q // 2]
    good_q, sampled = _count_good(g, tables, target_q, q, cap, samples, seed)
    expected = good_q / (q + 1) ** (q + 1)

    best = None
    for attempt in range(LAYER_ATTEMPTS):
        layer = make_rng(seed, 'layers', attempt).integers(0, q + 1, size=g.n)
        masks = tuple(mask_of(int(v) for v in np.flatnonzero(layer == i)) for i in range(q + 1))
        _, tuples = _good_paths(tables, g.rows, target_q, q, range(g.n), masks, collect=True)
        gap = _log_gap(len(tuples), expected)
        if best is None or gap < best[0]:
            best = (gap, attempt, layer, masks, tuples)
        log.debug("good_path_profile layers attempt=%d A=%d expected=%.4g", attempt, len(tuples), expected)
        if gap <= math.log(LAYER_FACTOR):
            break
    gap, attempt, layer, masks, tuples = best
    if gap > math.log(LAYER_FACTOR):
        log.info("good_path_profile layers outside factor %d A=%d expected=%.4g",
                 LAYER_FACTOR, len(tuples), expected)
    _, b_tuples = _good_paths(tables, g.rows, target_b, q - 1, range(g.n), masks[:q], collect=True)
    return {
        'good_q': good_q,
        'expected_A': expected,
        'layers': tuple(int(x) for x in layer),
        'A': tuple(sorted(tuples)),
        'B': tuple(sorted(b_tuples)),
        'attempts': attempt + 1,
        'sampled_q': sampled,
    }


def good_path_profile(g, r, epsilon=None, seed=0, q=None, path_cap=DEFAULT_PATH_CAP,
                      samples=DEFAULT_SAMPLES, allow_sampling=True):
    """
    Build the good-path profile of g for odd cycle length r.

    Args:
        g: Graph
        r: Odd cycle length (≥ 5)
        epsilon: Pigeonhole exponent; defaults to default_epsilon(ℓ, Δ)
        seed: Seed of the layer draws and the path sampler
        q: Working level in 2..ℓ; defaults to ℓ
        path_cap: Exhaustive enumeration limit before switching to sampling
        samples: Sampler draws above the cap
        allow_sampling: Raise instead of sampling above the cap

    Returns:
        GoodPathProfile

    Raises:
        ParameterError: Bad r or q, no ℓ-paths, or cap exceeded without sampling
        WalkCountOverflow: If walk counts of length ℓ may overflow int64
    """
    if r < 5 or r % 2 == 0:
        raise ParameterError(f"odd r ≥ 5 required, got {r}")
    ell = (r - 1) // 2
    q = ell if q is None else q
    if not 2 <= q <= ell:
        raise ParameterError(f"2 ≤ q ≤ ℓ = {ell} required, got q = {q}")
    if epsilon is None:
        epsilon = default_epsilon(ell, g.max_degree)
    if epsilon <= 0:
        raise ParameterError(f"epsilon > 0 required, got {epsilon}")

    tables = _bucket_tables(g, ell)
    counts, sampled = _count_signatures(g, tables, ell, path_cap, samples, seed, allow_sampling)
    if not counts:
        raise ParameterError(f"graph has no path of length {ell}")
    signature = min(counts, key=lambda sig: (-counts[sig] * 2.0 ** (epsilon * sum(sig)), sum(sig), sig))

    level = _draw_level(g, tables, signature, q, path_cap, samples, seed)
    prof = GoodPathProfile(
        graph=g, r=r, ell=ell, q=q, epsilon=epsilon,
        signature=signature,
        signature_count=float(counts[signature]),
        path_total=float(sum(counts.values())),
        sampled=sampled or level['sampled_q'],
        good_q=level['good_q'],
        expected_A=level['expected_A'],
        layers=level['layers'],
        A=level['A'],
        B=level['B'],
        attempts=level['attempts'],
    )
    check_monotone(prof)
    log.info("good_path_profile r=%d q=%d signatures=%d nu=%.4g A=%d count_ratio=%.4g",
             r, q, len(counts), prof.nu, len(prof.A), prof.count_ratio)
    return prof


def with_level(prof, q, seed=0, path_cap=DEFAULT_PATH_CAP, samples=DEFAULT_SAMPLES):
    """Same signature, fresh layer partition and tuples for working level q."""
    if not 2 <= q <= prof.ell:
        raise ParameterError(f"2 ≤ q ≤ ℓ = {prof.ell} required, got q = {q}")
    tables = _bucket_tables(prof.graph, q)
    level = _draw_level(prof.graph, tables, prof.signature, q, path_cap, samples, seed)
    return GoodPathProfile(
        graph=prof.graph, r=prof.r, ell=prof.ell, q=q, epsilon=prof.epsilon,
        signature=prof.signature,
        signature_count=prof.signature_count,
        path_total=prof.path_total,
        sampled=prof.sampled or level['sampled_q'],
        good_q=level['good_q'],
        expected_A=level['expected_A'],
        layers=level['layers'],
        A=level['A'],
        B=level['B'],
        attempts=level['attempts'],
    )


def sdp_level(prof):
    """Level q in 2..ℓ maximizing s_{0,q}/s_{0,q-1}; ties go to the smaller q."""
    return max(range(2, prof.ell + 1), key=lambda q: (prof.s(0, q) / prof.s(0, q - 1), -q))


def st_sets(prof, q):
    """
    Threshold sets of a profile.

    For u ∈ U_q, S(u) holds the u_0 ∈ U_0 starting at least |𝒜|s/(4nΔ^q)
    tuples of 𝒜 that end in u; for u ∈ U_{q-1}, T(u) holds the u_0 starting
    at least |𝒜|s'/(4nΔ^q) tuples of ℬ that end in u. Here s = s_{0,q} and
    s' = s_{0,q-1}.

    Returns:
        BucketSets

    Raises:
        ParameterError: If q is outside 2..ℓ or differs from the profile level
        InvariantViolation: If the half-of-𝒜 or norm postconditions fail
    """
    if not 2 <= q <= prof.ell:
        raise ParameterError(f"2 ≤ q ≤ ℓ = {prof.ell} required, got q = {q}")
    if q != prof.q:
        raise ParameterError(f"profile tuples were built for q = {prof.q}, not {q}")
    g = prof.graph
    n, delta = g.n, g.max_degree
    s, s_prime = prof.s(0, q), prof.s(0, q - 1)
    size = len(prof.A)
    s_threshold = Fraction(size * s, 4 * n * delta ** q)
    t_threshold = Fraction(size * s_prime, 4 * n * delta ** q)

    ends_a = Counter((path[0], path[-1]) for path in prof.A)
    ends_b = Counter((path[0], path[-1]) for path in prof.B)
    S = [0] * n
    T = [0] * n
    for (u0, u), count in ends_a.items():
        if count >= s_threshold:
            S[u] |= 1 << u0
    for (u0, u), count in ends_b.items():
        if count >= t_threshold:
            T[u] |= 1 << u0

    inside = sum(1 for path in prof.A if (S[path[-1]] >> path[0]) & 1 and (T[path[-2]] >> path[0]) & 1)
    if 2 * inside < size:
        raise InvariantViolation(f"only {inside} of {size} tuples have u_0 ∈ T(u_(q-1)) ∩ S(u_q)")
    for u in range(n):
        if S[u].bit_count() * s > delta ** q:
            raise InvariantViolation(f"|S({u})|·s = {S[u].bit_count() * s} > Δ^q = {delta ** q}")
        if T[u].bit_count() * s_prime > delta ** (q - 1):
            raise InvariantViolation(f"|T({u})|·s' = {T[u].bit_count() * s_prime} > Δ^(q-1)")

    log.debug("st_sets q=%d s=%d s_prime=%d A=%d inside=%d", q, s, s_prime, size, inside)
    return BucketSets(s=s, s_prime=s_prime, S=tuple(S), T=tuple(T), q=q, nu=prof.nu)


@dataclass(frozen=True)
class IntersectionSums:
    """
    Edge sums of set intersections with their reference scales.

    ss = Σ_{uv∈E}|S(u)∩S(v)| against n d^q/(ν s); tt likewise with T, q-1 and s';
    st = Σ over ordered edges of |S(u)∩T(v)|.
    """

    ss: int
    tt: int
    st: int
    ss_scale: float
    tt_scale: float

    def within(self, constant):
        return self.ss <= constant * self.ss_scale and self.tt <= constant * self.tt_scale


def intersection_sums(g, sets, constant=1.0):
    """Compute and log the intersection sums of S/T sets over the edges of g."""
    S, T = sets.S, sets.T
    ss = tt = st = 0
    for u, v in g.edges():
        ss += (S[u] & S[v]).bit_count()
        tt += (T[u] & T[v]).bit_count()
        st += (S[u] & T[v]).bit_count() + (S[v] & T[u]).bit_count()
    d = float(g.average_degree)
    q = sets.q
    nu = sets.nu or 1.0
    ss_scale = g.n * d ** q / (nu * sets.s)
    tt_scale = g.n * d ** (q - 1) / (nu * sets.s_prime) if sets.s_prime else 0.0
    sums = IntersectionSums(ss, tt, st, ss_scale, tt_scale)
    log.info("intersection_sums ss=%d tt=%d st=%d ss_scale=%.4g tt_scale=%.4g within=%s",
             ss, tt, st, ss_scale, tt_scale, sums.within(constant))
    return sums
