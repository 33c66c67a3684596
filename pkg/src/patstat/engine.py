"""Backtracking enumeration of pattern-avoidance sets and their statistic
generating polynomials.

Values are placed left to right; a placement is rejected exactly when it
completes a pattern copy whose final element is the new entry, so a prefix
that already contains a copy is never explored.  For each length-3 pattern
the set of values that would complete a copy is maintained incrementally as
a bitmask, making the per-node cost O(1) per pattern; longer patterns fall
back to an anchored depth-first matcher.  Because all of these forbidden
sets only grow as the prefix grows, a subtree dies the moment any unused
value becomes forbidden, which prunes the search far below the naive
valid-prefix tree.  Output order is lexicographic in one-line notation and
is part of the contract.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Sequence

from .perms import (
    Perm,
    all_perms,
    apply_symmetry,
    format_perm,
    format_pattern_set,
    inflate,
    perm,
)
from .polynomials import QPoly, QTPoly


class AvoidanceQuery(NamedTuple):
    """A length together with the patterns to avoid."""

    n: int
    patterns: tuple[Perm, ...]


class SearchCancelled(RuntimeError):
    """Raised inside enumeration when the cooperative stop signal fires."""


_STOP_CHECK_INTERVAL = 4096


def canonical_patterns(patterns: Iterable[Sequence[int]]) -> tuple[Perm, ...]:
    """Validated, deduplicated, sorted pattern tuple."""
    return tuple(sorted(set(perm(p) for p in patterns)))


# ---------------------------------------------------------------------------
# pattern compilation

# Length-3 patterns with an O(1) incremental completion test.  For each the
# automaton tracks a threshold or a forbidden-interval mask; see _walk.
_AUTOMATON_PATTERNS = {
    (1, 2, 3): "f123",
    (3, 2, 1): "f321",
    (2, 1, 3): "f213",
    (2, 3, 1): "f231",
    (1, 3, 2): "f132",
    (3, 1, 2): "f312",
}


@dataclass(frozen=True)
class _Compiled:
    impossible_all: bool  # empty pattern present: no avoiders at any length
    impossible_pos: bool  # length-1 pattern present: only the empty perm survives
    flags: frozenset[str]
    long_patterns: tuple[Perm, ...]


def _compile(patterns: tuple[Perm, ...]) -> _Compiled:
    flags = set()
    longs = []
    impossible_all = False
    impossible_pos = False
    for p in patterns:
        if len(p) == 0:
            impossible_all = True
        elif len(p) == 1:
            impossible_pos = True
        elif p == (1, 2):
            flags.add("f12")
        elif p == (2, 1):
            flags.add("f21")
        elif len(p) == 3:
            flags.add(_AUTOMATON_PATTERNS[p])
        else:
            longs.append(p)
    return _Compiled(impossible_all, impossible_pos, frozenset(flags), tuple(longs))


def _prepare_long(pat: Perm):
    """Precompute order relations for the anchored matcher."""
    k = len(pat)
    last = pat[-1]
    below_last = tuple(pat[j] < last for j in range(k - 1))
    rel = tuple(tuple(pat[t] < pat[j] for t in range(j)) for j in range(k - 1))
    return k - 1, below_last, rel


def _completes_copy(prefix: list[int], m: int, v: int, prepared) -> bool:
    """True if appending value v after prefix[:m] finishes a pattern copy."""
    k1, below_last, rel = prepared
    if k1 == 0:
        return True
    if m < k1:
        return False
    chosen: list[int] = []

    def go(start: int) -> bool:
        j = len(chosen)
        if j == k1:
            return True
        relj = rel[j]
        wantv = below_last[j]
        for i in range(start, m - (k1 - 1 - j)):
            x = prefix[i]
            if (x < v) != wantv:
                continue
            ok = True
            for t in range(j):
                if (chosen[t] < x) != relj[t]:
                    ok = False
                    break
            if ok:
                chosen.append(x)
                if go(i + 1):
                    return True
                chosen.pop()
        return False

    return go(0)


# ---------------------------------------------------------------------------
# the search itself


def _walk(
    n: int,
    compiled: _Compiled,
    on_leaf=None,
    should_stop: Optional[Callable[[], bool]] = None,
    first_value: int = 0,
    sink: Optional[tuple[list[int], dict[tuple[int, int], int]]] = None,
):
    """Run the backtracking search.

    Each surviving permutation is either passed to on_leaf(prefix, inv,
    maj, des) or, when sink = (inv_histogram, majdes_counts) is given,
    accumulated in place without any per-leaf call (the hot path for
    polynomial profiles).  first_value > 0 restricts the search to
    permutations starting with that value, which is how work is split
    across processes.
    """
    hist, majdes = sink if sink is not None else (None, None)
    if compiled.impossible_all:
        return
    if n == 0:
        if first_value == 0:
            if hist is None:
                on_leaf([], 0, 0, 0)
            else:
                hist[0] += 1
                majdes[(0, 0)] = majdes.get((0, 0), 0) + 1
        return
    if compiled.impossible_pos:
        return

    full = (1 << n) - 1
    # above[v]: bitmask of values strictly greater than v; below[v]: strictly less
    above = [full & ~((1 << v) - 1) for v in range(n + 2)]
    below = [0] + [(1 << (v - 1)) - 1 for v in range(1, n + 2)]

    flags = compiled.flags
    f123 = "f123" in flags
    f321 = "f321" in flags
    f213 = "f213" in flags
    f231 = "f231" in flags
    f132 = "f132" in flags
    f312 = "f312" in flags
    f12 = "f12" in flags
    f21 = "f21" in flags
    longs = [_prepare_long(p) for p in compiled.long_patterns]

    prefix = [0] * n
    sentinel_hi = n + 1
    ticker = [0]
    last = n - 1

    def rec(
        depth: int,
        used: int,
        min_b: int,
        max_b: int,
        mu: int,
        nu: int,
        tau: int,
        alpha: int,
        m132: int,
        m312: int,
        prev: int,
        inv_acc: int,
        maj_acc: int,
        des_acc: int,
    ) -> None:
        if should_stop is not None:
            ticker[0] += 1
            if ticker[0] >= _STOP_CHECK_INTERVAL:
                ticker[0] = 0
                if should_stop():
                    raise SearchCancelled("enumeration stopped")
        free = full & ~used
        allowed = free & ~m132 & ~m312
        if f123:
            allowed &= ~above[mu]
        if f321:
            allowed &= ~below[nu]
        if f213:
            allowed &= ~above[tau]
        if f231:
            allowed &= ~below[alpha]
        if f12:
            allowed &= ~above[min_b]
        if f21:
            allowed &= ~below[max_b]
        # every forbidden set only grows along a path, so a value that is
        # unplaceable now stays unplaceable forever: one stranded value
        # kills the whole subtree, not just its own branch
        if allowed != free:
            return
        if longs:
            scan = free
            while scan:
                bit = scan & -scan
                scan ^= bit
                v = bit.bit_length()
                for prepared in longs:
                    if _completes_copy(prefix, depth, v, prepared):
                        return
        if depth == 0 and first_value:
            allowed &= 1 << (first_value - 1)
        if depth == last:
            # exactly one value is free, so finish without recursing
            while allowed:
                bit = allowed & -allowed
                allowed ^= bit
                v = bit.bit_length()
                iv = inv_acc + (used & above[v]).bit_count()
                if prev > v:
                    mj = maj_acc + depth
                    ds = des_acc + 1
                else:
                    mj = maj_acc
                    ds = des_acc
                if hist is None:
                    prefix[depth] = v
                    on_leaf(prefix, iv, mj, ds)
                else:
                    hist[iv] += 1
                    key = (mj, ds)
                    majdes[key] = majdes.get(key, 0) + 1
            return
        while allowed:
            bit = allowed & -allowed
            allowed ^= bit
            v = bit.bit_length()
            nmu, nnu, ntau, nalpha = mu, nu, tau, alpha
            nm132, nm312 = m132, m312
            if v > min_b:
                if f123 and v < nmu:
                    nmu = v
                if f132:
                    nm132 |= above[min_b] & below[v]
            if v < max_b:
                if f321 and v > nnu:
                    nnu = v
                if f312:
                    nm312 |= above[v] & below[max_b]
            if f213:
                higher = used >> v
                if higher:
                    succ = v + (higher & -higher).bit_length()
                    if succ < ntau:
                        ntau = succ
            if f231:
                lower = used & below[v]
                if lower:
                    pred = lower.bit_length()
                    if pred > nalpha:
                        nalpha = pred
            prefix[depth] = v
            rec(
                depth + 1,
                used | bit,
                v if v < min_b else min_b,
                v if v > max_b else max_b,
                nmu,
                nnu,
                ntau,
                nalpha,
                nm132,
                nm312,
                v,
                inv_acc + (used & above[v]).bit_count(),
                maj_acc + (depth if prev > v else 0),
                des_acc + (1 if prev > v else 0),
            )

    rec(0, 0, sentinel_hi, 0, sentinel_hi, 0, sentinel_hi, 0, 0, 0, 0, 0, 0, 0)


def enumerate_avoiders(
    n: int,
    patterns: Iterable[Sequence[int]],
    should_stop: Optional[Callable[[], bool]] = None,
) -> Iterator[Perm]:
    """Yield the permutations of length n avoiding every pattern, each once,
    in lexicographic order of one-line notation."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    compiled = _compile(canonical_patterns(patterns))
    found: list[Perm] = []

    # Stream one first-value subtree at a time so memory stays bounded by
    # the largest subtree rather than the whole avoidance set.
    if compiled.impossible_all:
        return
    if n == 0:
        yield ()
        return

    def on_leaf(prefix, _inv, _maj, _des):
        found.append(tuple(prefix))

    for first in range(1, n + 1):
        found.clear()
        _walk(n, compiled, on_leaf, should_stop, first_value=first)
        yield from found


# ---------------------------------------------------------------------------
# cached statistic profiles


@dataclass(frozen=True)
class Profile:
    """Joint statistics over one avoidance set."""

    count: int
    inv_poly: QPoly
    majdes_poly: QTPoly


def _accumulate(n: int, compiled: _Compiled, first_value: int,
                should_stop=None) -> tuple[int, list[int], dict[tuple[int, int], int]]:
    inv_hist = [0] * (math.comb(n, 2) + 1)
    majdes: dict[tuple[int, int], int] = {}
    _walk(n, compiled, should_stop=should_stop, first_value=first_value,
          sink=(inv_hist, majdes))
    return sum(inv_hist), inv_hist, majdes


def _subtree_job(args):
    n, patterns, first = args
    return _accumulate(n, _compile(patterns), first)


def _worker_count() -> int:
    raw = os.environ.get("PATSTAT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@lru_cache(maxsize=8192)
def _profile(n: int, patterns: tuple[Perm, ...]) -> Profile:
    compiled = _compile(patterns)
    workers = _worker_count()
    if workers > 1 and n >= 9 and not compiled.impossible_all and not compiled.impossible_pos:
        from concurrent.futures import ProcessPoolExecutor

        count = 0
        inv_hist = [0] * (math.comb(n, 2) + 1)
        majdes: dict[tuple[int, int], int] = {}
        jobs = [(n, patterns, first) for first in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
            # map preserves job order, so the merge is deterministic
            for c, hist, md in pool.map(_subtree_job, jobs):
                count += c
                for i, x in enumerate(hist):
                    inv_hist[i] += x
                for key, x in md.items():
                    majdes[key] = majdes.get(key, 0) + x
    else:
        count, inv_hist, majdes = _accumulate(n, compiled, 0)
    return Profile(
        count=count,
        inv_poly=QPoly(inv_hist),
        majdes_poly=QTPoly.from_counts({(q, t): c for (q, t), c in majdes.items()}),
    )


def profile(n: int, patterns: Iterable[Sequence[int]]) -> Profile:
    if n < 0:
        raise ValueError("length must be nonnegative")
    return _profile(n, canonical_patterns(patterns))


def count_avoiders(n: int, patterns: Iterable[Sequence[int]]) -> int:
    """The cardinality of the avoidance set."""
    return profile(n, patterns).count


def stat_poly(n: int, patterns: Iterable[Sequence[int]], stat: str) -> QPoly:
    """Generating polynomial sum of q^stat over the avoidance set."""
    prof = profile(n, patterns)
    if stat == "inv":
        return prof.inv_poly
    if stat == "maj":
        return prof.majdes_poly.specialize_t1()
    raise ValueError(f"unknown statistic {stat!r}; expected 'inv' or 'maj'")


def maj_des_poly(n: int, patterns: Iterable[Sequence[int]]) -> QTPoly:
    """Bivariate sum of q^maj t^des over the avoidance set."""
    return profile(n, patterns).majdes_poly


def stat_multiset(patterns: Iterable[Sequence[int]], stat: str) -> tuple[int, ...]:
    """Sorted multiset of the statistic over the patterns themselves."""
    from . import perms

    fn = {"inv": perms.inv, "maj": perms.maj, "des": perms.des}[stat]
    return tuple(sorted(fn(p) for p in canonical_patterns(patterns)))


# ---------------------------------------------------------------------------
# st-Wilf classification


@dataclass(frozen=True)
class EquivalenceReport:
    """Partition of same-size pattern subsets by statistic polynomials."""

    stat: str
    ground_length: int
    subset_size: int
    n_max: int
    classes: tuple[tuple[tuple[Perm, ...], ...], ...]

    def nontrivial_classes(self) -> tuple[tuple[tuple[Perm, ...], ...], ...]:
        return tuple(c for c in self.classes if len(c) > 1)

    def class_of(self, patterns: Iterable[Sequence[int]]) -> tuple[tuple[Perm, ...], ...]:
        want = canonical_patterns(patterns)
        for c in self.classes:
            if want in c:
                return c
        raise KeyError(f"{want} is not a subset in this report")

    def to_json(self) -> list[list[str]]:
        return [[format_pattern_set(s) for s in c] for c in self.classes]


def _signature(n_max: int, patterns: tuple[Perm, ...], stat: str):
    if stat == "inv":
        return tuple(stat_poly(n, patterns, "inv") for n in range(n_max + 1))
    if stat == "maj":
        return tuple(stat_poly(n, patterns, "maj") for n in range(n_max + 1))
    if stat == "maj-des":
        return tuple(maj_des_poly(n, patterns) for n in range(n_max + 1))
    raise ValueError(f"unknown statistic {stat!r}")


def classify(
    ground_length: int,
    subset_size: int,
    stat: str,
    n_max: int,
    max_subsets: int = 20000,
    should_stop: Optional[Callable[[], bool]] = None,
) -> EquivalenceReport:
    """Partition all subsets of the given size of S_ground_length by equality
    of their statistic polynomials for n = 0..n_max.

    Classes are sorted by their lexicographically least member; equality is
    only asserted up to n_max, never beyond.  should_stop is polled between
    subsets and raises SearchCancelled.
    """
    if n_max < ground_length:
        raise ValueError("n_max must be at least the pattern length")
    ground = sorted(all_perms(ground_length))
    total = math.comb(len(ground), subset_size)
    if total > max_subsets:
        raise ValueError(
            f"{total} subsets exceed the guard of {max_subsets}; raise max_subsets to force"
        )
    groups: dict[object, list[tuple[Perm, ...]]] = {}
    for subset in combinations(ground, subset_size):
        if should_stop is not None and should_stop():
            raise SearchCancelled("classification stopped")
        sig = _signature(n_max, subset, stat)
        groups.setdefault(sig, []).append(subset)
    classes = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    # classmates agree at n = ground_length, which forces equal multisets of
    # the statistic over the subsets themselves; check that consistency
    if stat in ("inv", "maj"):
        for cls in classes:
            sets = {stat_multiset(s, stat) for s in cls}
            if len(sets) > 1:
                raise AssertionError(f"classmates with unequal {stat} multisets: {cls}")
    return EquivalenceReport(stat, ground_length, subset_size, n_max, classes)


def mahonian_pair_check(s_query: AvoidanceQuery, t_query: AvoidanceQuery) -> bool:
    """True iff maj over the first avoidance set and inv over the second are
    equidistributed (the pair is Mahonian)."""
    left = stat_poly(s_query.n, s_query.patterns, "maj")
    right = stat_poly(t_query.n, t_query.patterns, "inv")
    return left == right


# ---------------------------------------------------------------------------
# conjecture re-verification


@dataclass(frozen=True)
class ConjectureReport:
    name: str
    bounds: tuple[tuple[str, int], ...]
    cases: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


CONJECTURE_NAMES = (
    "trivial-inv-wilf",
    "inflation-maj",
    "sporadic-maj",
    "i321-recursion",
    "maj-parity",
)


def _inv_symmetry_orbit(p: Perm) -> tuple[Perm, ...]:
    from .perms import INV_PRESERVING

    return tuple(sorted({apply_symmetry(f, p) for f in INV_PRESERVING}))


def conjecture_suite(
    name: str,
    n_max: int = 8,
    pattern_length: int = 4,
    max_inflation_length: int = 6,
    parity_lengths: tuple[int, ...] = (1, 3, 7),
) -> ConjectureReport:
    """Re-verify one conjecture empirically inside the given bounds.

    Failures are reported verbatim as data, never raised.
    """
    failures: list[str] = []
    cases = 0

    if name == "trivial-inv-wilf":
        # singleton inversion classes should coincide with orbits under the
        # inv-preserving symmetries
        report = classify(pattern_length, 1, "inv", n_max)
        for cls in report.classes:
            members = tuple(sorted(s[0] for s in cls))
            orbit = _inv_symmetry_orbit(members[0])
            cases += 1
            if members != orbit:
                failures.append(
                    f"class {[format_perm(p) for p in members]} != orbit "
                    f"{[format_perm(p) for p in orbit]}"
                )
        bounds = (("pattern_length", pattern_length), ("n_max", n_max))
    elif name == "inflation-maj":
        for total in range(1, max_inflation_length + 1):
            for m in range(total):
                k = total - 1 - m
                comps = (tuple(range(1, m + 1)), (1,), tuple(range(k, 0, -1)))
                left = inflate((1, 3, 2), comps)
                right = inflate((2, 3, 1), comps)
                for n in range(n_max + 1):
                    cases += 1
                    if stat_poly(n, (left,), "maj") != stat_poly(n, (right,), "maj"):
                        failures.append(
                            f"maj polynomials differ at n={n} for "
                            f"{format_perm(left)} vs {format_perm(right)} (m={m}, k={k})"
                        )
        bounds = (("max_inflation_length", max_inflation_length), ("n_max", n_max))
    elif name == "sporadic-maj":
        for triple in (((1, 4, 2, 3), (2, 3, 1, 4), (2, 4, 1, 3)),
                       ((3, 1, 4, 2), (3, 2, 4, 1), (4, 1, 3, 2))):
            base = triple[0]
            for other in triple[1:]:
                for n in range(n_max + 1):
                    cases += 1
                    if stat_poly(n, (base,), "maj") != stat_poly(n, (other,), "maj"):
                        failures.append(
                            f"maj polynomials differ at n={n} for "
                            f"{format_perm(base)} vs {format_perm(other)}"
                        )
        bounds = (("n_max", n_max),)
    elif name == "i321-recursion":
        from .formulas import i321_conjectured

        for n in range(n_max + 1):
            cases += 1
            brute = stat_poly(n, ((3, 2, 1),), "inv")
            if i321_conjectured(n) != brute:
                failures.append(f"recursion disagrees with brute force at n={n}")
        bounds = (("n_max", n_max),)
    elif name == "maj-parity":
        from .formulas import parity_profile

        for n in parity_lengths:
            cases += 1
            prof = parity_profile(stat_poly(n, ((3, 2, 1),), "maj"))
            if not prof.holds:
                failures.append(
                    f"maj parity fails at n={n}: odd exponents {prof.odd_exponents}"
                )
        bounds = (("lengths", max(parity_lengths)),)
    else:
        raise ValueError(f"unknown conjecture {name!r}; expected one of {CONJECTURE_NAMES}")

    return ConjectureReport(name, bounds, cases, tuple(failures))
