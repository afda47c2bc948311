"""Named exhaustive checks of the q-binomial identities and decompositions.

Each check returns a :class:`Report`. A report passes iff it ran at least
one case and recorded no counterexample.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Callable

from . import counting
from .birkhoff import (
    FinitePoset,
    boolean_lattice,
    chain_product,
    decompose_birkhoff,
    ideal_to_partition,
    ideals,
    is_cover_free,
    is_ideal,
    is_isomorphic,
    labeled_posets,
    load_poset,
    maximal_cover_free_subsets,
    maximal_in,
    omega_pair_subset,
    phi_ideal,
    psi_ideal,
    random_poset,
)
from .counting import enumerate_frst_partitions, er, er_genpoly, frst, frst_short
from .errors import CheckError
from .omega_lattice import decompose, leq, q1q_binomial, r_analogue_binomial, upper_covers
from .qpoly import gaussian_oracle, is_palindromic
from .words import (
    DEFAULT_MAX_N,
    asc_odd,
    enumerate_omega,
    enumerate_omega_r,
    inv,
    partition_to_word,
    phi,
    psi,
)

__all__ = ["Counterexample", "Report", "run_check", "CHECKS", "MAX_COUNTEREXAMPLES"]

MAX_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class Counterexample:
    input: str
    expected: str
    actual: str


@dataclass
class Report:
    check_name: str
    params: dict[str, Any]
    status: str = "skipped"
    cases_run: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return asdict(self)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        shown = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{self.status.upper()} {self.check_name} ({shown}): {self.cases_run} cases"]
        for ce in self.counterexamples:
            lines.append(f"  {ce.input}: expected {ce.expected}, got {ce.actual}")
        return "\n".join(lines)


class _Recorder:
    def __init__(self, limit: int | None):
        self.cases = 0
        self.failures: list[Counterexample] = []
        self.limit = limit

    def check(self, ok: bool, what: str, expected, actual) -> bool:
        self.cases += 1
        if not ok and (self.limit is None or len(self.failures) < self.limit):
            self.failures.append(Counterexample(what, str(expected), str(actual)))
        return ok

    def equal(self, what: str, expected, actual) -> bool:
        return self.check(expected == actual, what, expected, actual)


CheckFn = Callable[[dict, _Recorder], None]
CHECKS: dict[str, CheckFn] = {}
_DEFAULTS: dict[str, dict[str, Any]] = {}


def _register(name: str, **defaults):
    def deco(fn: CheckFn) -> CheckFn:
        CHECKS[name] = fn
        _DEFAULTS[name] = defaults
        return fn

    return deco


def _int_param(params: dict, key: str, low: int = 0, high: int | None = None) -> int:
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise CheckError(f"parameter {key} must be an integer, got {value!r}")
    if value < low or (high is not None and value > high):
        bound = f"{low}..{high}" if high is not None else f">= {low}"
        raise CheckError(f"parameter {key} = {value} outside {bound}")
    return value


def _enum_n_max(params: dict) -> int:
    cap = _int_param(params, "max_n", 0, 64)
    return _int_param(params, "n_max", 0, cap)


def run_check(name: str, params: dict | None = None, *, verbose: bool = False) -> Report:
    """Run check ``name``; unknown names and bad parameters raise CheckError."""
    if name not in CHECKS:
        raise CheckError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    merged = dict(_DEFAULTS[name])
    merged.update({k: v for k, v in (params or {}).items() if v is not None})
    rec = _Recorder(None if verbose else MAX_COUNTEREXAMPLES)
    CHECKS[name](merged, rec)
    shown = {k: (v.to_text() if isinstance(v, FinitePoset) else v) for k, v in merged.items()}
    if isinstance(shown.get("subset"), (set, frozenset)):
        shown["subset"] = sorted(shown["subset"])
    status = "pass" if rec.cases and not rec.failures else ("fail" if rec.failures else "skipped")
    return Report(name, shown, status, rec.cases, rec.failures)


@_register("tables", n_max=10)
def _tables(params, rec):
    n_max = _int_param(params, "n_max", 0, len(counting.TABLE1_ER) - 1)
    for stat, golden in (("frst", counting.TABLE1_FRST), ("er", counting.TABLE1_ER)):
        tri = counting.build_triangle(stat, n_max)
        for n in range(n_max + 1):
            for k in range(n + 1):
                rec.equal(f"{stat}({n},{k})", golden[n][k], tri[n, k])


@_register("eq1", n_max=12, max_n=DEFAULT_MAX_N)
def _eq1(params, rec):
    n_max = _enum_n_max(params)
    for n in range(n_max + 1):
        for k in range(n + 1):
            got = q1q_binomial(n, k, cap=params["max_n"])
            rec.equal(f"n={n}, k={k}", gaussian_oracle(n, k), got)


@_register("r_identity", n_max=10, r=(2, 3, 4, 5), max_n=DEFAULT_MAX_N)
def _r_identity(params, rec):
    n_max = _enum_n_max(params)
    rs = params["r"]
    rs = (rs,) if isinstance(rs, int) else tuple(rs)
    params["r"] = list(rs) if len(rs) > 1 else rs[0]
    for r in rs:
        if isinstance(r, bool) or not isinstance(r, int) or r < 1:
            raise CheckError(f"block size r must be a positive integer, got {r!r}")
        for n in range(n_max + 1):
            for k in range(n + 1):
                got = r_analogue_binomial(n, k, r, cap=params["max_n"])
                rec.equal(f"r={r}, n={n}, k={k}", gaussian_oracle(n, k), got)


@_register("genpoly", n_max=20)
def _genpoly(params, rec):
    n_max = _int_param(params, "n_max")
    for n in range(n_max + 1):
        poly = er_genpoly(n)
        for k in range(n + 1):
            rec.equal(f"[x^{k}] genpoly({n})", er(n, k), poly[k])
        rec.check(is_palindromic(poly), f"genpoly({n}) palindromic", True, False)


@_register("symmetry", n_max=20, enum_n_max=14, max_n=DEFAULT_MAX_N)
def _symmetry(params, rec):
    n_max = _int_param(params, "n_max")
    enum_max = min(n_max, _int_param(params, "enum_n_max", 0, params["max_n"]))
    for n in range(n_max + 1):
        for k in range(n + 1):
            rec.equal(f"er({n},{k}) vs er({n},{n - k})", er(n, k), er(n, n - k))
    for n in range(enum_max + 1):
        for k in range(n + 1):
            a = len(enumerate_omega_r(n, k, 2, cap=params["max_n"]))
            b = len(enumerate_omega_r(n, n - k, 2, cap=params["max_n"]))
            rec.equal(f"|pair-sorted({n},{k})| vs |pair-sorted({n},{n - k})|", a, b)


@_register("compact", n_max=18)
def _compact(params, rec):
    n_max = _int_param(params, "n_max")
    for n in range(n_max + 1):
        for k in range(n + 1):
            rec.check(er(n, k) <= frst(n, k), f"er({n},{k}) <= frst({n},{k})",
                      f"<= {frst(n, k)}", er(n, k))
            rec.check(frst(n, k) <= frst(n + 1, k + 1), f"frst({n},{k}) <= frst({n + 1},{k + 1})",
                      f"<= {frst(n + 1, k + 1)}", frst(n, k))


@_register("frst_recursions", n_max=14)
def _frst_recursions(params, rec):
    n_max = _int_param(params, "n_max", 0, 24)
    for n in range(n_max + 1):
        for k in range(n + 1):
            lemma = enumerate_frst_partitions(n, k, "lemma")
            original = enumerate_frst_partitions(n, k, "original")
            rec.equal(f"frst({n},{k}) vs lemma enumeration", frst(n, k), len(lemma))
            rec.equal(f"frst({n},{k}) vs original enumeration", frst(n, k), len(original))
            rec.equal(f"complement maps original onto lemma set ({n},{k})",
                      sorted(lemma), sorted(lam.complement() for lam in original)
                      if k % 2 else sorted(original))
            if k % 2:
                rec.equal(f"short recursion frst({n},{k})", frst(n, k), frst_short(n, k))


@_register("omega_decomposition", n_max=10, max_n=DEFAULT_MAX_N)
def _omega_decomposition(params, rec):
    n_max = _enum_n_max(params)
    for n in range(n_max + 1):
        for k in range(n + 1):
            where = f"n={n}, k={k}"
            words = enumerate_omega(n, k, cap=params["max_n"])
            blocks = decompose(n, k, cap=params["max_n"])
            seen: dict = {}
            overlaps = 0
            for b in blocks:
                v = b.bottom
                for w in b.members:
                    overlaps += w in seen
                    seen[w] = v
                rec.equal(f"{where}: block {v} size", 2 ** asc_odd(v), len(b.members))
                top = psi(v)
                interval = [w for w in words if leq(v, w) and leq(w, top)]
                rec.equal(f"{where}: block {v} equals [v, psi(v)]",
                          [str(w) for w in interval], [str(w) for w in b.members])
                hist: dict[int, int] = {}
                for w in b.members:
                    hist[inv(w)] = hist.get(inv(w), 0) + 1
                rank = [hist.get(d, 0) for d in range(max(hist) + 1)]
                rec.equal(f"{where}: block {v} rank polynomial",
                          list(b.rank_poly.coeffs), rank)
            rec.equal(f"{where}: overlapping members", 0, overlaps)
            rec.equal(f"{where}: union", sorted(map(str, words)), sorted(map(str, seen)))
            rec.check(all(phi(w) == v for w, v in seen.items()),
                      f"{where}: members lie in the phi-fibre of their bottom", True, False)
            rec.equal(f"{where}: total size", comb(n, k), sum(len(b.members) for b in blocks))
            rec.equal(f"{where}: block count", er(n, k), len(blocks))


def _check_birkhoff_case(P: FinitePoset, A, rec: _Recorder, label: str,
                         iso_limit: int = 64) -> None:
    blocks = decompose_birkhoff(P, A)
    every = ideals(P)
    a_mask = sum(1 << e for e in A)
    covered: dict[int, int] = {}
    overlaps = 0
    for b in blocks:
        bottom, top = b.bottom, b.top
        where = f"{label}, bottom {bottom}"
        rec.check(maximal_in(P, bottom.mask) & a_mask == 0,
                  f"{where}: bottom has no maximal element in A", True, False)
        rec.equal(f"{where}: top is psi(bottom)", str(psi_ideal(P, A, bottom)), str(top))
        rec.equal(f"{where}: interval size", 2 ** len(b.free), len(b.interval))
        between = [I for I in every if bottom <= I <= top]
        rec.equal(f"{where}: interval of J(P)", list(map(str, between)), list(map(str, b.interval)))
        bad = [str(I) for I in b.interval
               if not is_ideal(P, I.mask) or phi_ideal(P, A, I) != bottom]
        rec.equal(f"{where}: members are ideals in the phi-fibre", [], bad)
        if len(b.interval) <= iso_limit:
            sub = _inclusion_poset(b.interval)
            rec.check(is_isomorphic(sub, boolean_lattice(len(b.free))),
                      f"{where}: Boolean under inclusion", True, False)
        for I in b.interval:
            overlaps += I.mask in covered
            covered[I.mask] = bottom.mask
    rec.equal(f"{label}: overlapping intervals", 0, overlaps)
    rec.equal(f"{label}: union of intervals", sorted(I.mask for I in every), sorted(covered))


def _inclusion_poset(family) -> FinitePoset:
    family = list(family)
    pairs = [(s, t) for s, I in enumerate(family) for t, J in enumerate(family) if s != t and I <= J]
    return FinitePoset.from_relations(len(family), pairs)


def _subset_pool(P: FinitePoset, rng: random.Random, want: int) -> list[frozenset[int]]:
    pool = maximal_cover_free_subsets(P)
    if len(pool) < want:
        # pad with smaller cover-free sets so every poset sees several choices
        extra = [frozenset(e for e in range(P.size) if m >> e & 1)
                 for m in range(1 << P.size) if is_cover_free(P, m)]
        extra = [s for s in extra if s not in pool]
        rng.shuffle(extra)
        pool += extra[: want - len(pool)]
    return pool


@_register("birkhoff_decomposition", labeled_max=4, random_count=100, random_max_size=7,
           subsets_per_poset=3, seed=None, poset=None, subset=None)
def _birkhoff_decomposition(params, rec):
    poset = params["poset"]
    if poset is not None:
        P = load_poset(poset) if isinstance(poset, str) else poset
        subset = params["subset"]
        subsets = [frozenset(subset)] if subset is not None else maximal_cover_free_subsets(P)
        for A in subsets:
            if not is_cover_free(P, A):
                raise CheckError(f"subset {sorted(A)} contains a cover pair")
            _check_birkhoff_case(P, A, rec, f"A={sorted(A)}")
        return
    labeled_max = _int_param(params, "labeled_max", 0, 5)
    count = _int_param(params, "random_count")
    max_size = _int_param(params, "random_max_size", 2, 12)
    want = _int_param(params, "subsets_per_poset", 1)
    for m in range(labeled_max + 1):
        for P in labeled_posets(m):
            for A in maximal_cover_free_subsets(P):
                _check_birkhoff_case(P, A, rec, f"{P!r}, A={sorted(A)}")
    if count:
        if params["seed"] is None:
            raise CheckError("birkhoff_decomposition needs an explicit seed for random posets")
        rng = random.Random(_int_param(params, "seed", 0))
        for _ in range(count):
            # two elements already admit three cover-free subsets
            P = random_poset(rng, rng.randint(2, max_size), rng.uniform(0.1, 0.6))
            for A in _subset_pool(P, rng, want):
                _check_birkhoff_case(P, A, rec, f"{P!r}, A={sorted(A)}")


@_register("iso_omega_birkhoff", n_max=8, order_n_max=6)
def _iso_omega_birkhoff(params, rec):
    n_max = _int_param(params, "n_max", 0, 16)
    order_max = _int_param(params, "order_n_max", 0, 16)
    for n in range(n_max + 1):
        for k in range(n + 1):
            where = f"n={n}, k={k}"
            a = n - k
            if a == 0 or k == 0:
                rec.equal(f"{where}: single word", 1, len(enumerate_omega(n, k)))
                continue
            P = chain_product(a, k)
            J = ideals(P)
            image = {I.mask: partition_to_word(ideal_to_partition(P, I)) for I in J}
            words = enumerate_omega(n, k)
            rec.equal(f"{where}: bijection", sorted(map(str, words)), sorted(map(str, image.values())))
            for I in J:
                ups = [I.mask | (1 << e) for e in range(P.size)
                       if not I.mask >> e & 1 and (I.mask | (1 << e)) in image]
                rec.equal(f"{where}: covers of {I}",
                          sorted(map(str, upper_covers(image[I.mask]))),
                          sorted(str(image[u]) for u in ups))
                rec.equal(f"{where}: size of {I} vs inv", len(I), inv(image[I.mask]))
            if n <= order_max:
                for I in J:
                    for I2 in J:
                        rec.equal(f"{where}: order {I} vs {I2}", I <= I2,
                                  leq(image[I.mask], image[I2.mask]))
            # the odd-pair cells carry the word decomposition over to J(P)
            A = omega_pair_subset(a, k)
            transported = sorted(
                (str(image[b.bottom.mask]), tuple(sorted(str(image[I.mask]) for I in b.interval)))
                for b in decompose_birkhoff(P, A)
            )
            direct = sorted((str(b.bottom), tuple(map(str, b.members))) for b in decompose(n, k))
            rec.equal(f"{where}: transported decomposition", direct, transported)
