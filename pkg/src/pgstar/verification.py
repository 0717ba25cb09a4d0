"""Named verification sweeps: closed-form predictions vs exact computation.

Each sweep checks one classification result over a finite instance range
and reports every disagreement.  Instances are independent, so sweeps
may fan out to a process pool; results are merged in instance order and
the output is identical for any parallelism degree.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator

from . import families
from .analysis import analyze
from .graphs import (
    MIS_ENUMERATION_LIMIT,
    CameronWalkerSpec,
    Graph,
    cameron_walker,
    complete_multipartite,
    cycle_graph,
    path_graph,
    suspension,
)
from .indpoly import independence_polynomial, independence_polynomial_bruteforce
from .polynomials import IntPolynomial

DEFAULT_SEED = 1729
DENSITY_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)


@dataclass(frozen=True)
class Mismatch:
    instance: str
    expected: str
    got: str


@dataclass(frozen=True)
class VerifyOutcome:
    theorem: str
    instances: int
    mismatches: tuple[Mismatch, ...]
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instances": self.instances,
            "mismatches": [
                {"instance": m.instance, "expected": m.expected, "got": m.got}
                for m in self.mismatches
            ],
            "pass": self.passed,
            "seed": self.seed,
        }


def _pmap(fn: Callable, items: Iterable, jobs: int) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, len(items) // (jobs * 4))
        return list(pool.map(fn, items, chunksize=chunk))


def _gather(theorem, checks, items, jobs, seed=None) -> VerifyOutcome:
    results = _pmap(checks, items, jobs)
    mismatches = tuple(m for r in results for m in r)
    return VerifyOutcome(theorem, len(results), mismatches, seed)


# -- corpora ---------------------------------------------------------------


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < density]
    return Graph(n, edges)


def random_graph_corpus(count: int, max_n: int, seed: int) -> list[Graph]:
    """Seeded corpus with sizes up to max_n and a swept edge density."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        out.append(random_graph(rng, n, DENSITY_GRID[i % len(DENSITY_GRID)]))
    return out


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on exactly n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_graphs_up_to(max_n: int) -> Iterator[Graph]:
    for n in range(max_n + 1):
        yield from all_graphs(n)


def random_cameron_walker_specs(
    count: int,
    max_vertices: int = 16,
    seed: int = DEFAULT_SEED,
    max_side: int = 3,
    max_leaves: int = 2,
    max_triangles: int = 2,
    max_core_total: int | None = None,
) -> list[CameronWalkerSpec]:
    """Seeded random valid specs (connected cores, rejection-sampled)."""
    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        n = rng.randint(1, max_side)
        m = rng.randint(1, max_side)
        if max_core_total is not None and n + m > max_core_total:
            continue
        edges = tuple(
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, m + 1)
            if rng.random() < 0.6
        )
        leaves = tuple(rng.randint(1, max_leaves) for _ in range(n))
        triangles = tuple(rng.randint(0, max_triangles) for _ in range(m))
        try:
            spec = CameronWalkerSpec(n, m, edges, leaves, triangles)
        except ValueError:
            continue
        if spec.total_vertices > max_vertices:
            continue
        specs.append(spec)
    return specs


# -- per-instance checks (top level so the pool can pickle them) -----------


def _check_cycle_pg_star(n: int) -> list[Mismatch]:
    got = analyze(cycle_graph(n)).pseudo_gorenstein_star
    want = families.cycle_is_pg_star(n)
    if got != want:
        return [Mismatch(f"C_{n}", str(want), str(got))]
    return []


def _check_path_pg_star(n: int) -> list[Mismatch]:
    got = analyze(path_graph(n)).pseudo_gorenstein_star
    want = families.path_is_pg_star(n)
    if got != want:
        return [Mismatch(f"P_{n}", str(want), str(got))]
    return []


def _check_sequence(item: tuple[str, int]) -> list[Mismatch]:
    kind, n = item
    out = []
    if kind == "path":
        value = independence_polynomial(path_graph(n))(-1)
        want = families.p_value(n)
        signed = (-1) ** ((n + 1) // 2) * value
        signed_want = families.b_value(n)
        name = f"P_{n}"
    else:
        value = independence_polynomial(cycle_graph(n))(-1)
        want = families.c_value(n)
        signed = (-1) ** (n // 2) * value
        signed_want = families.a_value(n)
        name = f"C_{n}"
    if value != want:
        out.append(Mismatch(f"{name} value at -1", str(want), str(value)))
    if signed != signed_want:
        out.append(Mismatch(f"{name} signed value", str(signed_want), str(signed)))
    return out


def _check_multipartite(parts: tuple[int, ...]) -> list[Mismatch]:
    g = complete_multipartite(parts)
    out = []
    computed = independence_polynomial(g)
    closed = families.multipartite_closed_poly(parts)
    if computed != closed:
        out.append(
            Mismatch(f"K_{parts} polynomial", str(closed.coeffs), str(computed.coeffs))
        )
    got = analyze(g).pseudo_gorenstein_star
    want = families.multipartite_is_pg_star(parts)
    if got != want:
        out.append(Mismatch(f"K_{parts} pg-star", str(want), str(got)))
    return out


def _check_cameron_walker(spec: CameronWalkerSpec) -> list[Mismatch]:
    g = cameron_walker(spec)
    counts = families.cw_counts(spec)
    rep = analyze(g)
    name = f"CW(x={spec.core_x},y={spec.core_y},f={spec.leaves},t={spec.triangles})"
    out = []
    if rep.p_minus_one != families.cw_minus_one(counts):
        out.append(
            Mismatch(f"{name} P(-1)", str(families.cw_minus_one(counts)), str(rep.p_minus_one))
        )
    if rep.alpha != families.cw_alpha(counts):
        out.append(Mismatch(f"{name} alpha", str(families.cw_alpha(counts)), str(rep.alpha)))
    if rep.multiplicity != 0:
        out.append(Mismatch(f"{name} multiplicity", "0", str(rep.multiplicity)))
    if rep.pseudo_gorenstein_star != families.cw_is_pg_star(counts):
        out.append(
            Mismatch(
                f"{name} pg-star",
                str(families.cw_is_pg_star(counts)),
                str(rep.pseudo_gorenstein_star),
            )
        )
    return out


def _independent_sets(g: Graph) -> Iterator[frozenset[int]]:
    for size in range(1, g.n + 1):
        for combo in combinations(g.vertices, size):
            s = frozenset(combo)
            if g.is_independent(s):
                yield s


def _check_vc_suspension(item: tuple[int, Graph]) -> list[Mismatch]:
    index, g = item
    rep = analyze(g)
    alpha = rep.alpha
    one_minus_t = IntPolynomial((1, -1))
    t = IntPolynomial((0, 1))
    out = []
    for s_set in _independent_sets(g):
        s = len(s_set)
        cover = frozenset(g.vertices) - s_set
        if not cover:
            continue
        name = f"graph#{index} S={sorted(s_set)}"
        if 1 <= s <= alpha - 1:
            reph = analyze(suspension(g, cover))
            if reph.pseudo_gorenstein_star != rep.pseudo_gorenstein_star:
                out.append(
                    Mismatch(
                        f"{name} pg-star preserved",
                        str(rep.pseudo_gorenstein_star),
                        str(reph.pseudo_gorenstein_star),
                    )
                )
            if reph.alpha != alpha:
                out.append(Mismatch(f"{name} alpha preserved", str(alpha), str(reph.alpha)))
            diff = reph.h_poly - rep.h_poly
            want = t * one_minus_t ** (alpha - s - 1)
            if diff != want:
                out.append(
                    Mismatch(f"{name} h difference", str(want.coeffs), str(diff.coeffs))
                )
        elif s == alpha:
            reph = analyze(suspension(g, cover))
            want_h = one_minus_t * rep.h_poly + t
            if reph.h_poly != want_h:
                out.append(
                    Mismatch(
                        f"{name} extremal h identity",
                        str(want_h.coeffs),
                        str(reph.h_poly.coeffs),
                    )
                )
            if rep.pseudo_gorenstein_star:
                if reph.h_degree != alpha + 1 or reph.h_poly.leading_coefficient != -1:
                    out.append(
                        Mismatch(
                            f"{name} extremal leading coefficient",
                            f"-1 in degree {alpha + 1}",
                            f"{reph.h_poly.leading_coefficient} in degree {reph.h_degree}",
                        )
                    )
                if reph.pseudo_gorenstein_star:
                    out.append(
                        Mismatch(f"{name} extremal pg-star", "False", "True")
                    )
    return out


def _check_full_suspension(item: tuple[str, int]) -> list[Mismatch]:
    kind, n = item
    if kind == "cycle":
        base = cycle_graph(n)
        want = families.full_susp_cycle_is_pg_star(n)
        name = f"cone over C_{n}"
    else:
        base = path_graph(n)
        want = families.full_susp_path_is_pg_star(n)
        name = f"cone over P_{n}"
    got = analyze(suspension(base, base.vertices)).pseudo_gorenstein_star
    if got != want:
        return [Mismatch(name, str(want), str(got))]
    return []


def _structure_mismatch(name: str, h: Graph, c: int, ell: int) -> list[Mismatch]:
    # removing the apex closed neighborhood must leave ell disjoint edges
    # plus isolated vertices
    ok = (
        h.n == c + ell
        and h.edge_count() == ell
        and all(h.degree(v) <= 1 for v in h.vertices)
    )
    if not ok:
        return [
            Mismatch(
                f"{name} leftover structure",
                f"{ell} disjoint edges + {c - ell} isolated vertices",
                f"n={h.n}, edges={h.edge_count()}",
            )
        ]
    return []


def _check_cycle_mis_suspension(item: tuple[int, int]) -> list[Mismatch]:
    n, limit = item
    g = cycle_graph(n)
    out = []
    for members in g.maximal_independent_sets(limit):
        name = f"C_{n} susp over {sorted(members)}"
        gz = suspension(g, members)
        rep = analyze(gz)
        c = len(members)
        ell = n - 2 * c
        if n == 3:
            if rep.ind_poly != IntPolynomial((1, 4, 2)):
                out.append(
                    Mismatch(f"{name} polynomial", "(1, 4, 2)", str(rep.ind_poly.coeffs))
                )
            if rep.h_poly != IntPolynomial((1, 2, -1)):
                out.append(
                    Mismatch(f"{name} h polynomial", "(1, 2, -1)", str(rep.h_poly.coeffs))
                )
            if rep.pseudo_gorenstein_star:
                out.append(Mismatch(f"{name} pg-star", "False", "True"))
        else:
            params = families.cycle_mis_susp_params(n, members)
            want_top = families.cycle_mis_susp_top_coeff(params)
            want_pg = families.cycle_mis_susp_is_pg_star(params)
            if rep.h_top != want_top:
                out.append(Mismatch(f"{name} h top", str(want_top), str(rep.h_top)))
            if rep.pseudo_gorenstein_star != want_pg:
                out.append(
                    Mismatch(f"{name} pg-star", str(want_pg), str(rep.pseudo_gorenstein_star))
                )
        if rep.multiplicity != 0:
            out.append(Mismatch(f"{name} multiplicity", "0", str(rep.multiplicity)))
        out.extend(_structure_mismatch(name, gz.delete_closed_neighborhood(gz.n), c, ell))
    return out


def _check_path_mis_suspension(item: tuple[int, int]) -> list[Mismatch]:
    n, limit = item
    g = path_graph(n)
    out = []
    for members in g.maximal_independent_sets(limit):
        name = f"P_{n} susp over {sorted(members)}"
        params = families.path_mis_susp_params(n, members)
        outcome = families.path_mis_susp_classify(params)
        rep = analyze(suspension(g, members))
        canonical = frozenset(range(1, n + 1, 3)) if n % 3 == 1 else frozenset()
        if (params.e == 0) != (members == canonical):
            out.append(
                Mismatch(
                    f"{name} e=0 detection",
                    f"e==0 iff set == {sorted(canonical)}",
                    f"e={params.e}, set={sorted(members)}",
                )
            )
        if (rep.multiplicity == 0) != outcome.a_zero:
            out.append(
                Mismatch(f"{name} a-invariant zero", str(outcome.a_zero), str(rep.multiplicity == 0))
            )
        if not outcome.a_zero and rep.a_invariant >= 0:
            out.append(Mismatch(f"{name} a-invariant sign", "< 0", str(rep.a_invariant)))
        if outcome.top_coeff is not None and rep.h_top != outcome.top_coeff:
            out.append(Mismatch(f"{name} h top", str(outcome.top_coeff), str(rep.h_top)))
        if rep.pseudo_gorenstein_star != outcome.pg_star:
            out.append(
                Mismatch(f"{name} pg-star", str(outcome.pg_star), str(rep.pseudo_gorenstein_star))
            )
    return out


def _check_deg_via_ord(item: tuple[int, Graph]) -> list[Mismatch]:
    index, g = item
    rep = analyze(g)
    out = []
    if rep.h_degree != rep.alpha - rep.multiplicity:
        out.append(
            Mismatch(
                f"graph#{index} deg h",
                str(rep.alpha - rep.multiplicity),
                str(rep.h_degree),
            )
        )
    if rep.a_invariant != -rep.multiplicity:
        out.append(
            Mismatch(f"graph#{index} a-invariant", str(-rep.multiplicity), str(rep.a_invariant))
        )
    return out


def _check_oracle(item: tuple[int, Graph]) -> list[Mismatch]:
    index, g = item
    engine = independence_polynomial(g)
    brute = independence_polynomial_bruteforce(g)
    if engine != brute:
        return [
            Mismatch(f"graph#{index} oracle", str(brute.coeffs), str(engine.coeffs))
        ]
    return []


# -- sweeps ----------------------------------------------------------------


def verify_cycles(max_n: int = 40, jobs: int = 1) -> VerifyOutcome:
    return _gather("cycles", _check_cycle_pg_star, range(3, max_n + 1), jobs)


def verify_paths(max_n: int = 40, jobs: int = 1) -> VerifyOutcome:
    return _gather("paths", _check_path_pg_star, range(0, max_n + 1), jobs)


def verify_sequences(max_n: int = 60, jobs: int = 1) -> VerifyOutcome:
    items = [("path", n) for n in range(max_n + 1)]
    items += [("cycle", n) for n in range(3, max_n + 1)]
    return _gather("sequences", _check_sequence, items, jobs)


def verify_multipartite(
    max_parts: int = 4, max_part_size: int = 5, jobs: int = 1
) -> VerifyOutcome:
    items = [
        parts
        for k in range(1, max_parts + 1)
        for parts in combinations_with_replacement(range(1, max_part_size + 1), k)
    ]
    return _gather("multipartite", _check_multipartite, items, jobs)


def verify_cameron_walker(
    count: int = 50, max_vertices: int = 16, seed: int = DEFAULT_SEED, jobs: int = 1
) -> VerifyOutcome:
    specs = random_cameron_walker_specs(count, max_vertices=max_vertices, seed=seed)
    return _gather("cameron-walker", _check_cameron_walker, specs, jobs, seed)


def verify_vc_suspension(
    count: int = 100, max_n: int = 8, seed: int = DEFAULT_SEED, jobs: int = 1
) -> VerifyOutcome:
    corpus = list(enumerate(random_graph_corpus(count, max_n, seed)))
    return _gather("vc-suspension", _check_vc_suspension, corpus, jobs, seed)


def verify_full_suspension(max_n: int = 36, jobs: int = 1) -> VerifyOutcome:
    items = [("cycle", n) for n in range(3, max_n + 1)]
    items += [("path", n) for n in range(1, max_n + 1)]
    return _gather("full-suspension", _check_full_suspension, items, jobs)


def verify_cycle_mis_suspension(
    max_n: int = 18, jobs: int = 1, mis_limit: int = MIS_ENUMERATION_LIMIT
) -> VerifyOutcome:
    items = [(n, mis_limit) for n in range(3, max_n + 1)]
    return _gather("cycle-mis-suspension", _check_cycle_mis_suspension, items, jobs)


def verify_path_mis_suspension(
    max_n: int = 18, jobs: int = 1, mis_limit: int = MIS_ENUMERATION_LIMIT
) -> VerifyOutcome:
    items = [(n, mis_limit) for n in range(2, max_n + 1)]
    return _gather("path-mis-suspension", _check_path_mis_suspension, items, jobs)


def verify_deg_via_ord(
    random_count: int = 500,
    max_n: int = 10,
    seed: int = DEFAULT_SEED,
    exhaustive_n: int = 6,
    jobs: int = 1,
) -> VerifyOutcome:
    corpus = list(random_graph_corpus(random_count, max_n, seed))
    corpus.extend(all_graphs_up_to(exhaustive_n))
    return _gather("deg-via-ord", _check_deg_via_ord, list(enumerate(corpus)), jobs, seed)


def verify_oracle(
    random_count: int = 500,
    max_n: int = 10,
    seed: int = DEFAULT_SEED,
    exhaustive_n: int = 6,
    jobs: int = 1,
) -> VerifyOutcome:
    """Engine vs brute force; the backbone correctness sweep."""
    corpus = list(random_graph_corpus(random_count, max_n, seed))
    corpus.extend(all_graphs_up_to(exhaustive_n))
    return _gather("oracle", _check_oracle, list(enumerate(corpus)), jobs, seed)
