"""Registry of named checks and the report they produce.

Each check returns ``(passed, witness)``; :func:`run` wraps it with timing and
turns exceptions into ``error`` results.  Witnesses are plain JSON values.
"""
from __future__ import annotations

import time
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from . import fermat as F
from . import fieldlemmas as FL
from . import permgroup as pg
from . import piclattice as P
from . import weyl as Wy


@dataclass(frozen=True)
class Config:
    has_omega: bool = False
    seed: int = 0
    samples: int = 1000


@dataclass
class CheckResult:
    check_id: str
    paper_anchor: str
    status: str
    witness: object
    elapsed_ms: int


@dataclass
class Report:
    tool_version: str
    configuration: dict
    results: list[CheckResult] = field(default_factory=list)
    overall: str = "pass"

    def to_dict(self) -> dict:
        return asdict(self)


class UnknownCheckError(KeyError):
    pass


CheckFn = Callable[[Config], tuple[bool, object]]


# ---------------------------------------------------------------------------
# individual checks


def _rep_lemma(cfg: Config):
    r = FL.rep_lemma_check(cfg.has_omega)
    witness = {
        "cond1": len(r.cond1),
        "cond12": len(r.cond12),
        "witness_quad": list(r.witness_quad),
        "witness_fails_trace": r.witness_fails_trace,
        "cond1_rank": r.cond1_rank,
        "order27_subgroups_inside": r.order27_subgroups_inside,
        "non_closed_pair": None if r.non_closed_pair is None else [list(q) for q in r.non_closed_pair],
    }
    return r.ok, witness


def _rad_cubic(cfg: Config):
    reports = [FL.rad_cubic_classification(a, cfg.samples, cfg.seed + k) for k, a in enumerate((2, 3, 10))]
    witness = {
        "alphas": [str(r.alpha) for r in reports],
        "samples": cfg.samples,
        "rational_cubes": [r.rational_cubes for r in reports],
        "mismatches": sum(len(r.mismatches) for r in reports),
        "trace_failures": sum(len(r.trace_failures) for r in reports),
        "expansion_ok": all(r.expansion_ok for r in reports),
    }
    return all(r.ok for r in reports), witness


SYMBOL_PARAMETERS = ((2, 3), (5, 7), (-1, 2))


def _symbol_algebra(cfg: Config):
    reports = [FL.symbol_algebra_check(a, b) for a, b in SYMBOL_PARAMETERS]
    witness = [{
        "a": str(r.a), "b": str(r.b),
        "associative": r.associative,
        "center_dimension": r.center_dimension,
        "conjugation_ok": r.conjugation_ok,
        "projective_order": r.projective_order,
        "commutator_is_omega": r.commutator_is_omega,
    } for r in reports]
    return all(r.ok for r in reports), witness


def _prime_orbit(cfg: Config):
    primes = FL.primes_between(5, 10**4)
    bad = [p for p in primes if FL.prime_orbit_check(p) != (p % 3 == 1)]
    return not bad, {"primes": len(primes), "with_orbit": sum(p % 3 == 1 for p in primes), "counterexamples": bad}


def _plane_points(cfg: Config):
    gp = F.general_position()
    act = F.plane_actions_check()
    witness = {
        "triples": len(gp.triple_determinants),
        "triples_nonzero": sum(bool(d) for d in gp.triple_determinants.values()),
        "conic_determinant": repr(gp.conic_determinant),
        "b_on_points": list(act.b_on_points),
        "c_on_points": list(act.c_on_points),
        "group_order": act.group_order,
    }
    ok = (gp.ok and act.b_on_points == (0, 1, 2, 4, 5, 3) and act.c_on_points == (1, 2, 0, 3, 4, 5)
          and act.group_order == 9)
    return ok, witness


def _no_common_fixed(cfg: Config):
    act = F.plane_actions_check()
    witness = {
        "b_fixed": len(act.b_fixed),
        "c_fixed": len(act.c_fixed),
        "common": len(act.common_fixed),
        "commutator_omega_power": act.commutator_exponent,
    }
    disjoint = not set(act.b_fixed) & set(act.c_fixed)
    return act.ok and disjoint, witness


def _lines27(cfg: Config):
    A = P.intersection_matrix()
    B = F.fermat_incidence()
    m = F.find_marking()
    witness = {
        "lattice_lines": len(P.lines27()),
        "fermat_lines": len(F.fermat_lines()),
        "lattice_degrees": sorted(set(int(d) for d in (A == 1).sum(axis=1))),
        "fermat_degrees": sorted(set(int(d) for d in (B == 1).sum(axis=1))),
        "sixers": len(P.sixers()),
        "marking_pairs_checked": 27 * 26 // 2,
        "marking_isomorphism": m.preserves_incidence(),
    }
    ok = (witness["lattice_lines"] == witness["fermat_lines"] == 27
          and witness["lattice_degrees"] == witness["fermat_degrees"] == [10]
          and witness["sixers"] == 72 and witness["marking_isomorphism"])
    return ok, witness


def _transversal(cfg: Config):
    checked, failures = 0, []
    for s in P.sixers():
        for k in range(6):
            five = [i for i in s if i != s[k]]
            t = P.unique_transversal(five)
            checked += 1
            # the transversal is the double-six partner of the omitted line
            if P.intersection_matrix()[P.line_index(t.tag), s[k]] != 0:
                failures.append(list(five))
    example = P.unique_transversal(["E2", "E3", "E4", "E5", "E6"]).name
    return not failures and example == "Q1", {"five_sets": checked, "failures": failures, "E2..E6": example}


def _weyl_orders(cfg: Config):
    witness = {"A4": Wy.generate(4).order, "D5": Wy.generate(5).order, "E6": Wy.generate(6).order}
    return witness == {"A4": 120, "D5": 1920, "E6": 51840}, witness


def _carter_class(cfg: Config):
    G = Wy.weyl_e6()
    b = Wy.element_b()
    C = pg.centralizer(G, b.perm)
    Z = pg.sylow3_unique(C)
    witness = {
        "carter_type": Wy.carter_type(b).value,
        "class_size": len(pg.conjugacy_class(G, b.perm)),
        "centralizer_order": C.order,
        "sylow3_order": Z.order,
        "sylow3_rank": pg.is_elementary_abelian_3(Z),
    }
    ok = witness == {"carter_type": Wy.CarterType.A2.value, "class_size": 240,
                     "centralizer_order": 216, "sylow3_order": 27, "sylow3_rank": 3}
    return ok, witness


def _build_r(cfg: Config):
    r = Wy.build_r()
    images = [P.lines27()[r(f"E{i}")].name for i in range(1, 7)]
    witness = {"order": r.order(), "E1..E6": images, "carter_type": Wy.carter_type(r).value}
    return r.order() == 3 and images == ["Q1", "Q2", "Q3", "L56", "L46", "L45"], witness


def _galois_commute(cfg: Config):
    r = Wy.build_r()
    pres = Wy.set_preservers()
    ok = Wy.commutes_with_set_preservers(r)
    return ok, {"set_preservers": len(pres), "all_commute": ok}


def _z3_cubed(cfg: Config):
    b, c, r = Wy.element_b(), Wy.element_c(), Wy.build_r()
    G = Wy.weyl_e6()
    H2 = pg.subgroup_generated(G, [b.perm, r.perm])
    H3 = pg.subgroup_generated(G, [b.perm, c.perm, r.perm])
    witness = {"order_b_r": H2.order, "order_b_c_r": H3.order, "rank": pg.is_elementary_abelian_3(H3)}
    return witness == {"order_b_r": 9, "order_b_c_r": 27, "rank": 3}, witness


def _fermat_aut(cfg: Config):
    G = F.fermat_aut_group()
    preserved = sum(F.preserves_equation(g) for g in G)
    line_group = pg.closure([F.fermat_line_perm(g) for g in G])
    witness = {"order": len(G), "preserve_equation": preserved, "faithful_on_lines": line_group.order}
    return witness == {"order": 648, "preserve_equation": 648, "faithful_on_lines": 648}, witness


def _a2_census(cfg: Config):
    A = F.a2_census()
    commuting = all(F.projectively_equal((g * h).matrix(), (h * g).matrix()) for g in A for h in A)
    return len(A) == 6 and commuting, {"count": len(A), "commuting": commuting}


def _sylow_coincide(cfg: Config):
    r = Wy.verify_sylow_lemma()
    witness = {
        "class_size": r.class_size,
        "centralizer_order": r.centralizer_order,
        "sylow_order": r.sylow_order,
        "fermat_centralizer_order": r.fermat_centralizer_order,
        "fermat_sylow_order": r.fermat_sylow_order,
        "coincide": r.coincide,
    }
    ok = r.ok and r.centralizer_order == 216 and r.fermat_centralizer_order == 108 and r.sylow_order == 27
    return ok, witness


def _embed_consistency(cfg: Config):
    m = F.find_marking()
    pairs = list(F.embed_aut(m).items())
    lattice_types = Wy.carter_types_of_rows(np.array([w.perm.images for _, w in pairs]))
    counts: dict[str, int] = {}
    disagreements = []
    for (g, _), t_lat in zip(pairs, lattice_types):
        t = F.eigen_type(g)
        if t != t_lat:
            disagreements.append(repr(g))
        counts[t.value] = counts.get(t.value, 0) + 1
    return not disagreements, {"checked": len(pairs), "types": dict(sorted(counts.items())),
                               "disagreements": disagreements}


def _pgl2_diag(cfg: Config):
    r = FL.pgl2_diagonal_check()
    return r.ok, {"classes": r.classes, "diag_1_w_order": r.diag_1_w_order,
                       "diag_w_w_trivial": r.diag_w_w_trivial}


REGISTRY: dict[str, tuple[str, CheckFn]] = {
    "rep-lemma": ("diagonal order-3 quads with determinant one and rational trace", _rep_lemma),
    "rad-cubic": ("cube roots of rationals in a pure cubic extension", _rad_cubic),
    "symbol-algebra": ("degree-3 symbol algebra and the forced omega-commutator", _symbol_algebra),
    "prime-orbit": ("orbits of size 3 for prime-order groups of multipliers", _prime_orbit),
    "plane-points": ("six marked plane points and the actions of b, c", _plane_points),
    "no-common-fixed": ("b and c share no fixed point in the plane", _no_common_fixed),
    "lines27": ("27 lines and their incidence in both models", _lines27),
    "transversal": ("unique fifth-line transversal for every sixer", _transversal),
    "weyl-orders": ("orders of W(A4), W(D5), W(E6)", _weyl_orders),
    "carter-class": ("class and centralizer of an A2 element", _carter_class),
    "build-r": ("construction of the order-3 element r", _build_r),
    "galois-commute": ("r commutes with the set-preserving subgroup", _galois_commute),
    "z3-cubed": ("orders of <b,r> and <b,c,r>", _z3_cubed),
    "fermat-aut": ("automorphism group of the Fermat cubic", _fermat_aut),
    "a2-census": ("A2-type automorphisms of the Fermat cubic", _a2_census),
    "sylow-coincide": ("Sylow 3-subgroups of the two centralizers agree", _sylow_coincide),
    "embed-consistency": ("eigenvalue type matches Carter type under the marking", _embed_consistency),
    "pgl2-diag": ("diagonal order-3 classes in PGL2", _pgl2_diag),
}


def check_ids() -> list[str]:
    return list(REGISTRY)


def run_one(check_id: str, config: Config) -> CheckResult:
    anchor, fn = REGISTRY[check_id]
    start = time.perf_counter()
    try:
        ok, witness = fn(config)
        status = "pass" if ok else "fail"
    except Exception as exc:  # reported, not raised
        status, witness = "error", {"exception": type(exc).__name__, "message": str(exc)}
    return CheckResult(check_id, anchor, status, witness, int((time.perf_counter() - start) * 1000))


def run(ids: Sequence[str], config: Config | None = None) -> Report:
    config = Config() if config is None else config
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise UnknownCheckError(", ".join(unknown))
    results = [run_one(i, config) for i in ids]
    return Report(
        tool_version=__version__,
        configuration=asdict(config),
        results=results,
        overall="pass" if all(r.status == "pass" for r in results) else "fail",
    )


def render_text(report: Report) -> str:
    lines = [f"verify {report.tool_version}  {report.configuration}"]
    for r in report.results:
        lines.append(f"{r.status.upper():5} {r.check_id:18} {r.elapsed_ms:6d} ms  {r.witness}")
    lines.append(f"overall: {report.overall}")
    return "\n".join(lines)

