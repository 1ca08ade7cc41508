"""Self-verification suites run by ``pencilstrat verify``.

Each suite takes a seed, checks exact identities on many generated instances,
and returns a :class:`SuiteResult`. Nothing here has a tolerance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable

from .closure import FRESH, bundle_closure_contains, coalesce, format_assignment, orbit_closure_contains
from .eigenvalue import INF, Infinity
from .exact import build_coupled, build_P, extract_weyr, nullity, pencil_rank, reversal
from .gaussian import ZERO, GaussianRational
from .hierarchy import enumerate_bundles
from .partitions import Partition, conjugate, partition_sum, union
from .realize import WitnessError, realize_kcf, scramble, witness_order, witness_sequence
from .structure import BundleSignature, PencilStructure, parse, rank, serialize, signature, weyr_at

MAX_REPORTED = 20

EIGEN_POOL = (
    GaussianRational(0),
    GaussianRational(1),
    GaussianRational(-1),
    GaussianRational(2),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(1, 1),
    GaussianRational(0, -1),
    INF,
)


@dataclass
class SuiteResult:
    name: str
    count: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(msg)
        else:
            self.failures[-1] = f"... and more (last: {msg})"

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.count} instances, {len(self.failures)} failures)"


@lru_cache(maxsize=None)
def _bundles(m: int, n: int) -> tuple[BundleSignature, ...]:
    return tuple(enumerate_bundles(m, n))


def instantiate(sig: BundleSignature, values) -> PencilStructure:
    """Give the anonymous eigenvalues of ``sig`` the distinct ``values``, in order."""
    values = list(values)
    if len(values) < sig.eig_count or len(set(values)) < sig.eig_count:
        raise ValueError("need one distinct value per eigenvalue")
    return PencilStructure(sig.rows, sig.cols, list(zip(values, sig.segre)), sig.right, sig.left)


def random_structure(rng: random.Random, max_rows: int = 4, max_cols: int = 4, max_eigs: int = 2,
                     pool=EIGEN_POOL, min_rows: int = 1, min_cols: int = 1) -> PencilStructure:
    while True:
        m = rng.randint(min_rows, max_rows)
        n = rng.randint(min_cols, max_cols)
        sigs = [s for s in _bundles(m, n) if s.eig_count <= max_eigs]
        if sigs:
            sig = rng.choice(sigs)
            return instantiate(sig, rng.sample(list(pool), sig.eig_count))


def probe_point(s: PencilStructure) -> GaussianRational:
    """A finite point that is not an eigenvalue of ``s``."""
    mu = GaussianRational(Fraction(7, 3))
    while mu in s.eig_map:
        mu = mu + GaussianRational(1)
    return mu


# -- individual suites ----------------------------------------------------------

def rank_lemma(seed: int = 0, structures: int = 200, seeds_per: int = 3, d_max: int = 4) -> SuiteResult:
    """nu(P^d_mu) = W_1 + ... + W_d + d*r0 on realized and scrambled pencils."""
    res = SuiteResult("rank-lemma")
    rng = random.Random(seed)
    for _ in range(structures):
        s = random_structure(rng)
        r0 = s.cols - rank(s)
        base = realize_kcf(s)
        pencils = [base] + [scramble(base, rng.randrange(1 << 30)) for _ in range(seeds_per)]
        points = list(s.eigenvalues) + [probe_point(s)]
        for L in pencils:
            for mu in points:
                W = weyr_at(s, mu)
                for d in range(1, d_max + 1):
                    if isinstance(mu, Infinity):
                        got = nullity(build_P(reversal(L), ZERO, d))
                    else:
                        got = nullity(build_P(L, mu, d))
                    want = sum(W[:d]) + d * r0
                    if got != want:
                        res.fail(f"{serialize(s)} at {mu}, d={d}: nullity {got}, expected {want}")
        res.count += 1
    return res


def coupled_lemma(seed: int = 0, instances: int = 100) -> SuiteResult:
    """Nullity of the coupled matrix equals the sum of the separate nullities."""
    res = SuiteResult("coupled-lemma")
    rng = random.Random(seed)
    finite_pool = [mu for mu in EIGEN_POOL if not isinstance(mu, Infinity)]
    for _ in range(instances):
        s = random_structure(rng, max_eigs=3)
        L = scramble(realize_kcf(s), rng.randrange(1 << 30))
        candidates = [mu for mu in s.eigenvalues if not isinstance(mu, Infinity)]
        candidates += [mu for mu in finite_pool + [probe_point(s)] if mu not in candidates]
        k = rng.randint(1, 3)
        pts = rng.sample(candidates, k)
        depths = [rng.randint(1, 3) for _ in pts]
        got = nullity(build_coupled(L, pts, depths))
        want = sum(nullity(build_P(L, p, d)) for p, d in zip(pts, depths))
        if got != want:
            res.fail(f"{serialize(s)} points {list(map(str, pts))} depths {depths}: {got} != {want}")
        res.count += 1
    return res


def check_witness(s: PencilStructure, group, target, k: int) -> list[str]:
    """Problems with the witness sequence for one (structure, group, target, k)."""
    problems = []
    Lk, limit = witness_sequence(s, group, target, k)
    target = GaussianRational.coerce(target)
    ordered = witness_order(s, group)
    for i, mu in enumerate(ordered, start=1):
        at = target + GaussianRational(Fraction(i, k))
        got = extract_weyr(Lk, at)
        if got != weyr_at(s, mu):
            problems.append(f"L_k at {at}: Weyr {got}, expected {weyr_at(s, mu)}")
    merged = union(weyr_at(s, mu) for mu in group)
    if target not in group:
        merged = union([merged, weyr_at(s, target)])
    got = extract_weyr(limit, target)
    if got != merged:
        problems.append(f"limit at {target}: Weyr {got}, expected {merged}")
    for mu in s.eigenvalues:
        if mu in group:
            continue
        for name, P in (("L_k", Lk), ("limit", limit)):
            got = extract_weyr(P, mu)
            if got != weyr_at(s, mu):
                problems.append(f"{name} at untouched {mu}: Weyr {got}, expected {weyr_at(s, mu)}")
    for name, P in (("L_k", Lk), ("limit", limit)):
        if pencil_rank(P) != rank(s):
            problems.append(f"{name}: rank {pencil_rank(P)}, expected {rank(s)}")
    return problems


def witness(seed: int = 0, instances: int = 40, ks=(1, 10, 100)) -> SuiteResult:
    """Witness sequences realize the displaced spectrum and the coalesced limit."""
    res = SuiteResult("witness")
    rng = random.Random(seed)
    finite_pool = [mu for mu in EIGEN_POOL if not isinstance(mu, Infinity)]
    while res.count < instances:
        s = random_structure(rng, max_rows=5, max_cols=5, max_eigs=3, pool=finite_pool + [INF])
        finite = [mu for mu in s.eigenvalues if not isinstance(mu, Infinity)]
        if not finite:
            continue
        group = rng.sample(finite, rng.randint(1, len(finite)))
        target = rng.choice(group)
        try:
            for k in ks:
                for p in check_witness(s, group, target, k):
                    res.fail(f"{serialize(s)} group {list(map(str, group))} -> {target}, k={k}: {p}")
        except WitnessError:
            continue  # displaced values hit an untouched eigenvalue; draw again
        res.count += 1
    return res


PERVOUCHINE_L = "3x3: J(2;2) J(3;1)"
PERVOUCHINE_M = "3x3: J(2;3)"
PROBE_GRID = (GaussianRational(0), GaussianRational(1), GaussianRational(2), GaussianRational(3), INF)


def pervouchine(seed: int = 0) -> SuiteResult:
    """The 3x3 counterexample: bundle YES by coalescence, every orbit NO, explicit witness."""
    res = SuiteResult("pervouchine")
    L, M = parse(PERVOUCHINE_L), parse(PERVOUCHINE_M)
    two, three = GaussianRational(2), GaussianRational(3)

    holds, wit = bundle_closure_contains(L, M)
    res.count += 1
    if not holds or wit != {two: two, three: two}:
        res.fail(f"bundle check: {holds}, witness {wit and format_assignment(wit)}")

    for a in PROBE_GRID:
        res.count += 1
        if orbit_closure_contains(PencilStructure(3, 3, {a: (2, 1)}), M):
            res.fail(f"orbit check YES for J({a};2,1)")
    for a, b in permutations(PROBE_GRID, 2):
        res.count += 1
        if orbit_closure_contains(PencilStructure(3, 3, {a: (2,), b: (1,)}), M):
            res.fail(f"orbit check YES for J({a};2) J({b};1)")

    for k in (1, 10, 100):
        res.count += 1
        Lk, limit = witness_sequence(L, [three, two], two, k)
        w1 = extract_weyr(Lk, two + GaussianRational(Fraction(1, k)))
        w2 = extract_weyr(Lk, two + GaussianRational(Fraction(2, k)))
        wl = extract_weyr(limit, two)
        if (w1, w2, wl) != (Partition([1]), Partition([1, 1]), Partition([1, 1, 1])):
            res.fail(f"k={k}: Weyr {w1}, {w2}, limit {wl}")
        if pencil_rank(Lk) != 3 or pencil_rank(limit) != 3:
            res.fail(f"k={k}: rank drop")
    return res


def random_partition(rng: random.Random, max_part: int = 8, max_len: int = 6) -> Partition:
    return Partition.from_multiset(rng.randint(1, max_part) for _ in range(rng.randint(0, max_len)))


def duality(seed: int = 0, families: int = 500) -> SuiteResult:
    """Conjugation exchanges union and pointwise sum."""
    res = SuiteResult("duality")
    rng = random.Random(seed)
    for _ in range(families):
        ps = [random_partition(rng) for _ in range(rng.randint(1, 5))]
        if conjugate(union(ps)) != partition_sum(conjugate(p) for p in ps):
            res.fail(f"conjugate(union) on {list(map(str, ps))}")
        if conjugate(partition_sum(ps)) != union(conjugate(p) for p in ps):
            res.fail(f"conjugate(sum) on {list(map(str, ps))}")
        res.count += 1
    return res


def all_assignments(s: PencilStructure):
    """Every map from the eigenvalues of ``s`` to its own eigenvalues or FRESH."""
    eigs = list(s.eigenvalues)
    for choice in product(eigs + [FRESH], repeat=len(eigs)):
        yield dict(zip(eigs, choice))


def order(seed: int = 0, sizes=((2, 2), (2, 3))) -> SuiteResult:
    """Bundle inclusion is a partial order; orbit inclusion implies it; coalescence stays inside."""
    res = SuiteResult("order")
    concrete = [GaussianRational(0), GaussianRational(1), GaussianRational(2), INF]
    for m, n in sizes:
        sigs = list(_bundles(m, n))
        N = len(sigs)
        rel = [[bundle_closure_contains(a, b)[0] for b in sigs] for a in sigs]
        for i in range(N):
            res.count += 1
            if not rel[i][i]:
                res.fail(f"not reflexive at {sigs[i]}")
            for j in range(N):
                if i != j and rel[i][j] and rel[j][i]:
                    res.fail(f"not antisymmetric: {sigs[i]} and {sigs[j]}")
                for k in range(N):
                    if rel[i][j] and rel[j][k] and not rel[i][k]:
                        res.fail(f"not transitive: {sigs[i]} > {sigs[j]} > {sigs[k]}")
        for i, a in enumerate(sigs):
            La = instantiate(a, concrete)
            for j, b in enumerate(sigs):
                for vals in permutations(concrete, b.eig_count):
                    Mb = instantiate(b, vals)
                    res.count += 1
                    if orbit_closure_contains(La, Mb) and not rel[i][j]:
                        res.fail(f"orbit but not bundle: {serialize(La)} / {serialize(Mb)}")
        for a in sigs:
            s = instantiate(a, concrete)
            if a.eig_count > 3:
                continue
            for asg in all_assignments(s):
                res.count += 1
                c = coalesce(s, asg)
                if not bundle_closure_contains(s, c)[0]:
                    res.fail(f"{serialize(s)} does not contain its coalescence {serialize(c)}")
                if signature(c).eig_count > a.eig_count:
                    res.fail(f"coalescence grew the spectrum: {serialize(c)}")
    return res


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "rank-lemma": rank_lemma,
    "coupled-lemma": coupled_lemma,
    "witness": witness,
    "pervouchine": pervouchine,
    "duality": duality,
    "order": order,
}


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(seed)
