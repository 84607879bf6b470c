"""Named verification suites shared by the CLI and the acceptance tests.

Each suite function takes a :class:`RunConfig` and returns a list of
:class:`~vertexq.reports.CheckReport`.  Suites build their own rings so that
every requested tau lands on an adequate exponent lattice.
"""

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice_denom_for, mutations
from .qscalar import QRing
from .reports import CheckReport, merge_status


@dataclass
class RunConfig:
    """Effective run configuration; flags > config file > these defaults."""

    lattice_denom: int | None = None
    window: int | None = None
    min_width: int = 20
    fock_cutoff: int = 4
    weight_bound: int | None = None
    t_degree: int = 6
    series_bounds: tuple = (3, 3, 3)
    taus: tuple = (1,)
    Ns: tuple = (1, 2)
    jobs: int = 1
    mutate: tuple = ()
    full: bool = False

    def ring_for(self, taus) -> QRing:
        L = self.lattice_denom or lattice_denom_for(taus)
        return QRing(L, self.window)

    def to_json(self) -> dict:
        return {
            "lattice_denom": self.lattice_denom,
            "window": self.window,
            "min_width": self.min_width,
            "fock_cutoff": self.fock_cutoff,
            "weight_bound": self.weight_bound,
            "t_degree": self.t_degree,
            "series_bounds": list(self.series_bounds),
            "taus": [str(t) for t in self.taus],
            "Ns": list(self.Ns),
            "jobs": self.jobs,
            "mutate": list(self.mutate),
        }


def suite_theorem1(cfg: RunConfig) -> list:
    from .vertex import verify_theorem1

    ring = cfg.ring_for([1])
    bound = cfg.weight_bound if cfg.weight_bound is not None else 4
    return [verify_theorem1(ring, bound, cfg.min_width, cfg.jobs)]


def suite_cyclic(cfg: RunConfig) -> list:
    from .vertex import verify_cyclic

    ring = cfg.ring_for([1])
    bound = cfg.weight_bound if cfg.weight_bound is not None else 5
    return [verify_cyclic(ring, bound, cfg.min_width, cfg.jobs)]


def shift_parameter_grid(alpha_bound: int = 3):
    """Every shift-symmetry configuration with |k|,|m| <= 2 and |alpha| <= 3."""
    from .partitions import partitions_up_to

    alphas = partitions_up_to(alpha_bound)
    grid = []
    for k in (1, 2):
        for m in (-2, -1, 0, 1, 2):
            grid.append(("basic1", {"k": k, "m": m}, (1,)))
            grid.append(("basic2", {"k": k, "m": m}, (1,)))
    for gamma in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
        for k in (-2, -1, 0, 1, 2):
            for m in (-2, -1, 0, 1, 2):
                if (k, m) == (0, 0) or (2 * m * gamma).denominator != 1:
                    continue
                grid.append(("gen3", {"k": k, "m": m, "gamma": gamma}, (1,)))
    for kind in ("gen1", "gen2"):
        for k in (-2, -1, 1, 2):
            for m in (-2, -1, 0, 1, 2):
                for alpha in alphas:
                    grid.append((kind, {"k": k, "m": m, "alpha": alpha}, (1,)))
    for kind in ("heis1", "heis2"):
        for m in (-2, -1, 1, 2):
            for alpha in alphas:
                grid.append((kind, {"m": m, "alpha": alpha}, (1,)))
    for kind in ("A_tau", "B_tau"):
        for tau in (Fraction(1), Fraction(2), Fraction(1, 2)):
            for m in (-2, -1, 1, 2):
                if (m * tau).denominator != 1 or m * tau == 0:
                    continue
                for alpha in alphas:
                    grid.append((kind, {"m": m, "tau": tau, "alpha": alpha}, (tau,)))
    return grid


def _run_shift_case(args):
    from .fock import check_shift_symmetry
    from .qscalar import shared_ring

    kind, params, taus, lattice_denom, window, D, min_width, active = args
    for name in active:
        mutations.activate(name)
    try:
        ring = shared_ring(lattice_denom, window)
        return check_shift_symmetry(ring, kind, params, D, min_width)
    finally:
        for name in active:
            mutations.deactivate(name)


def suite_shift(cfg: RunConfig) -> list:
    """The full generalized-shift-symmetry sweep."""
    grid = shift_parameter_grid()
    jobs = []
    for kind, params, taus in grid:
        L = cfg.lattice_denom or lattice_denom_for(taus)
        jobs.append(
            (kind, params, taus, L, cfg.window, cfg.fock_cutoff, cfg.min_width, mutations.active_names())
        )
    if cfg.jobs > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(cfg.jobs) as pool:
            return pool.map(_run_shift_case, jobs, chunksize=8)
    return [_run_shift_case(j) for j in jobs]


def suite_factorization(cfg: RunConfig) -> list:
    from .fock import check_factorization

    out = []
    for N in (1, 2, 3):
        ring = cfg.ring_for([Fraction(1, N)])
        for primed in (False, True):
            out.append(
                check_factorization(
                    ring, N, t_cutoff=3, D=3, min_width=cfg.min_width, primed=primed
                )
            )
    return out


def suite_reductions(cfg: RunConfig) -> list:
    from .hodge import (
        verify_quadratic_expansion,
        verify_reduction_tau1,
        verify_reduction_tauN,
        verify_schur_expansion_prop43,
    )

    bounds = cfg.series_bounds
    out = [
        verify_reduction_tau1(cfg.ring_for([1]), bounds, cfg.min_width),
        verify_reduction_tauN(cfg.ring_for([2]), 2, bounds, cfg.min_width),
        verify_quadratic_expansion(6),
        verify_schur_expansion_prop43(cfg.ring_for([1]), 2, cfg.min_width),
    ]
    return out


def suite_kp(cfg: RunConfig) -> list:
    from .kp import (
        build_tau,
        check_plucker,
        check_reduction_condition,
        check_shifted_flow_form,
        check_tau_factorization,
    )

    out = []
    for N in cfg.Ns:
        ring = cfg.ring_for([N, Fraction(1, N)])
        T = build_tau(ring, N, None, ("formal", 2), cfg.t_degree)
        out.append(check_reduction_condition(T, N, k_max=2, m_max=1, min_width=cfg.min_width))
        out.append(check_plucker(T, size_bound=4, min_width=cfg.min_width))
        out.append(check_shifted_flow_form(ring, N, m_max=2, D=4, min_width=cfg.min_width))
        out.append(
            check_tau_factorization(
                ring, N, p1_bound=1, p2_bound=2, D_t=min(cfg.t_degree, 4), min_width=cfg.min_width
            )
        )
    return out


def suite_oracles(cfg: RunConfig) -> list:
    """Wrap the oracle battery as one CheckReport per oracle target."""
    from .oracles import run_oracles

    ring = cfg.ring_for([1])
    if cfg.full:
        bounds = {}
    else:
        bounds = {
            "character_weight": 5,
            "lr_weight": 6,
            "h_weight": 6,
            "fock_weight": 3,
            "fock_window": 16,
            "lllz_weight": 2,
        }
    reports = run_oracles(ring, None, bounds)
    by_target: dict = {}
    for r in reports:
        agg = by_target.setdefault(
            r.target, CheckReport(f"oracle:{r.target}", {"full": cfg.full})
        )
        agg.pairs_checked += 1
        if not r.ok:
            agg.status = "fail"
            agg.failures.append(r.to_json())
    return list(by_target.values())


SUITES = {
    "theorem1": suite_theorem1,
    "cyclic": suite_cyclic,
    "shift": suite_shift,
    "factorization": suite_factorization,
    "reductions": suite_reductions,
    "kp": suite_kp,
    "oracles": suite_oracles,
}


def run_suite(name: str, cfg: RunConfig) -> dict:
    """Run one suite (or 'all'); returns the merged machine-readable report."""
    names = list(SUITES) if name == "all" else [name]
    everything = []
    timings = {}
    for n in names:
        t0 = time.time()
        for m in cfg.mutate:
            mutations.activate(m)
        try:
            everything.extend(SUITES[n](cfg))
        finally:
            for m in cfg.mutate:
                mutations.deactivate(m)
        timings[n] = round(time.time() - t0, 3)
    status = merge_status(r.status for r in everything)
    # timings stay out of the payload so output is byte-deterministic
    return {
        "suite": name,
        "status": status,
        "config": cfg.to_json(),
        "checks": [r.to_json() for r in everything],
    }, timings
