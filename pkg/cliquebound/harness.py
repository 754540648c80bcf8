"""
Verification campaigns: every bound evaluated on one graph, and the exhaustive,
random, family and corpus campaigns that run that evaluation over many graphs.

Campaigns are split into shards that are evaluated inline or by a process pool.
Shards are consumed in submission order and shard summaries merge
associatively, so records and totals do not depend on the number of workers.
"""

import time
import logging
import multiprocessing

from math import comb
from functools import partial
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from .config import Config, ToleranceConfig
from .graph import Graph, DegreeStats, degree_stats, triangle_count
from .graph6 import encode_graph6
from .generators import (
    ENUMERATION_CAP, PRNG_NAME, PRNG_VERSION,
    derive_seeds, gnp_graph, kneser_graph, labeled_graph_count,
)
from .spectral import Spectrum, spectrum_of, trace_cube, kneser2_closed_form
from .combinatorics import CombinatorialInvariants, combinatorial_invariants
from .bounds import (
    BoundEvaluation, ChainInputs, check_bound_chain, evaluate,
    turan_bound, caro_wei_bound, wilf_bound, nikiforov_bound, conjecture1_bound,
    motzkin_straus_bound, chi_lower_bounds, upper_bounds, eigenvalue_inequality_checks,
    kneser_ceiling, kneser_margin, random_regime_ceiling,
)
from .loaders import Loader, open_loader
from .summary import CampaignSummary, GraphRecord, default_keep, should_keep
from .types import BoundId, BoundKind, BoundStatus, Keep, RecordStatus
from .exceptions import ConsistencyError, ConvergenceError, GraphInputError


logger = logging.getLogger(__name__)

# Largest per-eigenvalue gap allowed between the numeric and the closed-form
# spectrum of KG_{p,2}.
KNESER_SPECTRUM_TOL = 1e-8

OMEGA_KINDS = frozenset({BoundKind.LOWER_OMEGA, BoundKind.UPPER_OMEGA})
CHI_KINDS = frozenset({BoundKind.LOWER_CHI, BoundKind.UPPER_CHI})


@dataclass
class CampaignResult:
    """
    The merged summary of a campaign and the records it was asked to keep, in
    source order.
    """

    summary: CampaignSummary
    records: List[GraphRecord] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return self.summary.exit_code


##########################################################################
## Single graph evaluation
##########################################################################

def bound_evaluations(
    g: Graph,
    stats: DegreeStats,
    spectrum: Spectrum,
    invariants: CombinatorialInvariants,
    tol: float,
    with_chi: bool = False,
) -> List[BoundEvaluation]:
    """
    Evaluates every bound on the graph, in BoundId order. Bounds whose target
    solve was aborted are tagged ABORTED instead of NO_TARGET.
    """
    n, m = g.n, g.m
    mu, s_plus, s_minus = spectrum.mu, spectrum.s_plus, spectrum.s_minus
    omega, chi = invariants.omega, invariants.chi

    evaluations = [
        turan_bound(n, stats.d, omega, tol),
        caro_wei_bound(stats.degrees, omega, tol),
        wilf_bound(n, mu, omega, tol),
        nikiforov_bound(m, mu, omega, tol),
        conjecture1_bound(n, s_plus, omega, tol),
        motzkin_straus_bound(g, None, omega, tol),
        *chi_lower_bounds(m, mu, s_plus, s_minus, chi, tol),
        *upper_bounds(m, mu, s_plus, omega, chi, tol),
        *eigenvalue_inequality_checks(
            n, m, mu, s_plus,
            isolated=bool(g.isolated_vertices), connected=g.is_connected, tol=tol,
        ),
    ]

    omega_aborted = not invariants.clique.exact
    chi_aborted = with_chi and (invariants.coloring is None or not invariants.coloring.exact)
    for i, e in enumerate(evaluations):
        if e.status != BoundStatus.NO_TARGET:
            continue
        if (omega_aborted and e.kind in OMEGA_KINDS) or (chi_aborted and e.kind in CHI_KINDS):
            evaluations[i] = replace(e, status=BoundStatus.ABORTED)
    return evaluations


def _falsifiable_evaluation(
    id: BoundId, g: Graph, spectrum: Spectrum, omega: Optional[int], tol: float,
) -> BoundEvaluation:
    if id == BoundId.CONJECTURE1:
        return conjecture1_bound(g.n, spectrum.s_plus, omega, tol)
    if id == BoundId.ELPHICK_SPLUS:
        return evaluate(id, BoundKind.EIGENVALUE, 2 * g.m - g.n + 1, spectrum.s_plus, tol)
    raise ValueError(f"{id} is not a falsifiable bound")


def reverify(g: Graph, id: BoundId, omega: Optional[int], tolerances: ToleranceConfig) -> bool:
    """
    Recomputes a falsifiable bound that failed at the default tolerances, first
    with Jacobi at zero_eig_tol / 100 and then with LAPACK. Returns True only
    if the violation survives both.
    """
    tightened = tolerances.tightened(g.n)
    for cfg in (tightened, tightened.copy(eigensolver="lapack")):
        try:
            spectrum = spectrum_of(g, cfg)
        except (ConsistencyError, ConvergenceError) as e:
            logger.warning(f"re-verification of {id} on {encode_graph6(g)} failed: {e}")
            return False

        if not _falsifiable_evaluation(id, g, spectrum, omega, tolerances.numeric).violated:
            logger.debug(f"{id} violation on {encode_graph6(g)} vanished with {cfg.solver}")
            return False
    return True


def evaluate_graph(
    g: Graph,
    config: Config = None,
    source: str = "",
    spectrum: Spectrum = None,
) -> GraphRecord:
    """
    Computes every invariant of the graph and evaluates every bound against
    them. Solver aborts and failed identity checks are recorded in the row and
    never raised; only graphs without vertices are rejected.

    Parameters
    ----------
    g : Graph
        The graph to evaluate, n >= 1.
    config : Config, default: None
        Tolerances, solver budgets and campaign options; defaults if None.
    source : str
        Where the graph came from, e.g. a file and line number.
    spectrum : Spectrum, default: None
        A precomputed spectrum, checked against the graph before it is used.
    """
    if g.n == 0:
        raise GraphInputError("cannot evaluate a graph without vertices")

    config = config or Config()
    tolerances = config["tolerances"]
    solver = config["solver"]
    tol = tolerances.numeric

    stats = degree_stats(g)
    t = triangle_count(g)
    record = GraphRecord(
        source=source,
        graph6=encode_graph6(g),
        n=g.n,
        m=g.m,
        d=stats.d,
        t=t,
        triangle_free=t == 0,
        isolated_vertices=len(g.isolated_vertices),
        connected=g.is_connected,
        regular=g.is_regular,
    )

    try:
        if spectrum is None:
            spectrum = spectrum_of(g, tolerances)
        else:
            spectrum.check(g, tolerances)
        trace_cube(g, spectrum, tolerances, t=t)
    except (ConsistencyError, ConvergenceError) as e:
        logger.error(f"spectrum of {record.graph6} ({source}) failed its self-check: {e}")
        record.status = RecordStatus.INCONSISTENT
        record.failed_checks.append(str(e))
        return record

    record.mu, record.mu_min = spectrum.mu, spectrum.mu_min
    record.pi, record.nu, record.gamma = spectrum.inertia
    record.s_plus, record.s_minus = spectrum.s_plus, spectrum.s_minus

    invariants = combinatorial_invariants(
        g,
        with_chi=solver["with_chi"],
        node_budget=solver["node_budget"],
        time_budget=solver["time_budget"],
        t=t,
    )
    record.omega = invariants.omega
    record.omega_witness = list(invariants.clique.witness)
    record.chi = invariants.chi
    record.weakly_perfect = invariants.weakly_perfect
    if invariants.coloring is not None:
        record.chi_witness = list(invariants.coloring.witness)

    if not invariants.clique.exact:
        record.status = RecordStatus.ABORTED
        record.anomalies.append("omega:aborted")
    if solver["with_chi"] and (invariants.coloring is None or not invariants.coloring.exact):
        record.status = RecordStatus.ABORTED
        record.anomalies.append("chi:aborted")

    record.evaluations = bound_evaluations(g, stats, spectrum, invariants, tol, solver["with_chi"])

    for e in record.evaluations:
        if not e.violated:
            continue
        if e.id.falsifiable and config["campaign"]["reverify"]:
            if not reverify(g, e.id, record.omega, tolerances):
                logger.warning(f"{e.id} violation on {record.graph6} is a numerical artifact")
                record.anomalies.append(f"{e.id}:numerical-artifact")
                continue
        record.violations.append(e.id)

    conj = record.evaluation(BoundId.CONJECTURE1)
    if conj.status == BoundStatus.UNDEFINED:
        record.anomalies.append("conjecture1:undefined-denominator")

    ando = record.evaluation(BoundId.ANDO_LIN_CHI)
    if ando.value is not None and record.omega is not None:
        record.ando_lin_exceeds_omega = ando.value > record.omega + tol

    chain = ChainInputs(
        n=g.n, m=g.m, d=stats.d,
        mu=spectrum.mu, mu_min=spectrum.mu_min,
        s_plus=spectrum.s_plus, s_minus=spectrum.s_minus,
        pi=spectrum.pi, t=t, regular=g.is_regular,
        omega=record.omega, chi=record.chi,
    )
    record.failed_checks.extend(check_bound_chain(chain, record.evaluations, tol))

    for id in record.falsifiable_violations:
        logger.error(f"confirmed {id} counterexample: {record.graph6} ({source})")
    if record.failed_checks or record.proven_violations:
        logger.error(
            f"consistency failure on {record.graph6} ({source}): "
            f"checks={record.failed_checks} violations={[str(v) for v in record.proven_violations]}"
        )
        record.status = RecordStatus.INCONSISTENT
    return record


##########################################################################
## Shard workers
##########################################################################

ShardResult = Tuple[CampaignSummary, List[GraphRecord]]


def _collect(records: Iterable[Tuple[str, Graph]], config: Config, keep: Keep) -> ShardResult:
    summary = CampaignSummary()
    kept = []
    for source, g in records:
        record = evaluate_graph(g, config, source=source)
        summary.add(record, config["tolerances"].numeric)
        if should_keep(record, keep):
            kept.append(record)
    return summary, kept


def _sweep_shard(shard: Tuple[int, int, int], config: Config, keep: Keep) -> ShardResult:
    n, start, stop = shard
    graphs = (
        (f"sweep:n={n}:mask={mask}", Graph.from_bitmask(n, mask)) for mask in range(start, stop)
    )
    return _collect(graphs, config, keep)


def _graphs_shard(shard: Sequence[Tuple[str, Graph]], config: Config, keep: Keep) -> ShardResult:
    return _collect(shard, config, keep)


def _gnp_shard(
    shard: Sequence[Tuple[int, int]], n: int, p: float, ceiling: float, config: Config, keep: Keep,
) -> ShardResult:
    graphs = [(f"gnp:trial={trial}:seed={seed}", gnp_graph(n, p, seed)) for trial, seed in shard]
    summary = CampaignSummary()
    kept = []
    for source, g in graphs:
        record = evaluate_graph(g, config, source=source)
        summary.add(record, config["tolerances"].numeric)
        conj = record.evaluation(BoundId.CONJECTURE1)
        if conj is not None and conj.value is not None and conj.value > ceiling:
            summary.count("above_ceiling")
        if should_keep(record, keep):
            kept.append(record)
    return summary, kept


def _kneser_shard(p: int, config: Config, keep: Keep) -> ShardResult:
    tolerances = config["tolerances"]
    g = kneser_graph(p, 2)
    closed = kneser2_closed_form(p)

    summary = CampaignSummary()
    source = f"kneser:p={p}:k=2"
    failed = []
    try:
        numeric = spectrum_of(g, tolerances)
    except (ConsistencyError, ConvergenceError) as e:
        logger.error(f"numeric spectrum of KG_{p},2 failed: {e}")
        numeric, gap = None, None
        record = evaluate_graph(g, config, source=source)
    else:
        gap = max(abs(a - b) for a, b in zip(numeric.eigenvalues, closed.eigenvalues))
        record = evaluate_graph(g, config, source=source, spectrum=numeric)
        if gap > KNESER_SPECTRUM_TOL:
            failed.append("kneser_closed_form_spectrum")

    conj = record.evaluation(BoundId.CONJECTURE1)
    ceiling = kneser_ceiling(p)
    omega = p // 2
    margin = kneser_margin(p)

    if g.n != comb(p, 2) or 2 * g.m != comb(p, 2) * comb(p - 2, 2):
        failed.append("kneser_counts")
    if record.omega is not None and record.omega != omega:
        failed.append("kneser_omega")
    if conj is not None and conj.value is not None and conj.value > ceiling + tolerances.numeric:
        failed.append("kneser_conjecture1<=(p-1)/2")
    if ceiling > omega:
        failed.append("kneser_(p-1)/2<=omega")
    if margin < 0:
        failed.append("kneser_margin")

    if failed:
        logger.error(f"KG_{p},2 failed family checks: {failed}")
        record.failed_checks.extend(failed)
        record.status = RecordStatus.INCONSISTENT

    summary.add(record, tolerances.numeric)
    summary.families.append({
        "p": p,
        "n": g.n,
        "m": g.m,
        "omega": record.omega,
        "s_plus": record.s_plus,
        "s_plus_closed_form": closed.s_plus,
        "spectrum_gap": gap,
        "conjecture1": None if conj is None else conj.value,
        "ceiling": ceiling,
        "floor_half_p": omega,
        "margin": margin,
        "margin_nonnegative": margin >= 0,
        "holds": not failed and not record.violations,
    })
    return summary, [record] if should_keep(record, keep) else []


##########################################################################
## Campaign driver
##########################################################################

def _keep_policy(campaign: str, config: Config) -> Keep:
    keep = config["campaign"]["keep"]
    return default_keep(campaign) if keep is None else Keep(str(keep).lower())


def run_shards(
    campaign: str,
    worker: Callable[..., ShardResult],
    shards: Sequence,
    config: Config,
    summary: CampaignSummary = None,
    graphs: int = None,
) -> CampaignResult:
    """
    Evaluates the shards in order, inline or in a process pool, and merges their
    summaries and kept records into one campaign result.
    """
    started = time.monotonic()
    options = config["campaign"]
    workers = int(options["workers"])
    worker = partial(worker, config=config, keep=_keep_policy(campaign, config))

    summary = summary or CampaignSummary()
    summary.campaign = campaign
    summary.config = config.to_dict()
    records = []

    logger.info(f"starting {campaign} campaign: {len(shards)} shards with {workers} workers")
    with tqdm(total=graphs, desc=campaign, unit="graph", disable=not options["progress"]) as progress:
        if workers > 1 and len(shards) > 1:
            with multiprocessing.Pool(min(workers, len(shards))) as pool:
                for shard_summary, shard_records in pool.imap(worker, shards):
                    summary.merge(shard_summary)
                    records.extend(shard_records)
                    progress.update(shard_summary.total)
        else:
            for shard in shards:
                shard_summary, shard_records = worker(shard)
                summary.merge(shard_summary)
                records.extend(shard_records)
                progress.update(shard_summary.total)

    summary.wall_time = time.monotonic() - started
    logger.info(
        f"finished {campaign} campaign in {summary.wall_time:.2f}s: "
        f"{summary.processed} processed, {summary.skipped} skipped, {summary.aborted} aborted, "
        f"{summary.inconsistent} inconsistent, {summary.falsifiable_violations} falsifiable violations"
    )
    return CampaignResult(summary=summary, records=records)


def _chunks(items: Sequence, size: int) -> List[Sequence]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def run_sweep(n_max: int, config: Config = None, n_min: int = 1) -> CampaignResult:
    """
    Evaluates every labeled graph on n_min..n_max vertices.
    """
    config = config or Config()
    if n_max > ENUMERATION_CAP:
        raise GraphInputError(f"sweep is capped at n={ENUMERATION_CAP}, got {n_max}")
    if n_min < 1 or n_min > n_max:
        raise GraphInputError(f"invalid sweep range n={n_min}..{n_max}")

    size = int(config["campaign"]["chunk_size"])
    shards = []
    for n in range(n_min, n_max + 1):
        total = labeled_graph_count(n)
        shards.extend((n, start, min(start + size, total)) for start in range(0, total, size))

    graphs = sum(labeled_graph_count(n) for n in range(n_min, n_max + 1))
    result = run_shards("sweep", _sweep_shard, shards, config, graphs=graphs)
    result.summary.extra.update({"n_min": n_min, "n_max": n_max})
    return result


def run_corpus(source, config: Config = None, campaign: str = "corpus") -> CampaignResult:
    """
    Evaluates every graph of a corpus file (or loader). Malformed lines and graphs
    without vertices are logged with their line numbers and counted as skipped.
    """
    config = config or Config()
    loader = source if isinstance(source, Loader) else open_loader(source)

    summary = CampaignSummary()
    graphs = []
    for entry in loader:
        if not entry.ok:
            logger.warning(f"skipping {entry.source}: {entry.error}")
            summary.skip()
        elif entry.graph.n == 0:
            logger.warning(f"skipping {entry.source}: graph has no vertices")
            summary.skip()
        else:
            graphs.append((entry.source, entry.graph))

    shards = _chunks(graphs, int(config["campaign"]["chunk_size"]))
    return run_shards(campaign, _graphs_shard, shards, config, summary=summary, graphs=len(graphs))


def run_gnp_search(n: int, p: float, trials: int, seed: int, config: Config = None) -> CampaignResult:
    """
    Evaluates trials seeded G(n, p) graphs. Trial i uses the i-th seed spawned
    from the master seed, so any trial can be reproduced on its own.
    """
    config = config or Config()
    if trials < 1:
        raise GraphInputError(f"trials must be at least 1, got {trials}")
    if not 0.0 <= p <= 1.0:
        raise GraphInputError(f"edge probability must be in [0, 1], got {p}")
    if n < 1:
        raise GraphInputError(f"G(n, p) needs n >= 1, got {n}")
    if seed < 0 or seed >= 1 << 64:
        raise GraphInputError("seed must be an unsigned 64-bit integer")

    ceiling = random_regime_ceiling(p) if p < 1.0 else float("inf")
    seeds = list(enumerate(derive_seeds(seed, trials)))
    shards = _chunks(seeds, max(1, min(int(config["campaign"]["chunk_size"]), 64)))
    worker = partial(_gnp_shard, n=n, p=p, ceiling=ceiling)

    summary = CampaignSummary()
    summary.extra.update({
        "n": n,
        "p": p,
        "trials": trials,
        "seed": seed,
        "prng": PRNG_NAME,
        "prng_version": PRNG_VERSION,
        "ceiling": ceiling if p < 1.0 else None,
    })
    return run_shards("gnp", worker, shards, config, summary=summary, graphs=trials)


def run_kneser_family(p_min: int, p_max: int, config: Config = None) -> CampaignResult:
    """
    Checks KG_{p,2} for every p in p_min..p_max against its closed-form spectrum
    and the chain conjecture1 <= (p - 1) / 2 <= floor(p / 2) = omega.
    """
    config = config or Config()
    if p_min < 4:
        raise GraphInputError(f"Kneser family needs p_min >= 4, got {p_min}")
    if p_max < p_min:
        raise GraphInputError(f"invalid Kneser range p={p_min}..{p_max}")

    shards = list(range(p_min, p_max + 1))
    result = run_shards("kneser", _kneser_shard, shards, config, graphs=len(shards))
    result.summary.extra.update({"p_min": p_min, "p_max": p_max})
    return result
