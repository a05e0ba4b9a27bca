//! Exact minimum dominating set computation by branch and bound, with
//! optimality certificates built from a first-queen decomposition.
//!
//! The solve runs budget-feasibility searches for k = lb, lb+1, ... until a
//! dominating set of size k exists. Each budget search is partitioned by the
//! lexicographically first queen: one subproblem per admissible first cell,
//! fixing a queen there and forbidding every earlier cell. The subproblems
//! are mutually exclusive and collectively exhaustive, so when every one of
//! them is infeasible at budget k-1, that list *is* the optimality proof for
//! the k-queen witness. With symmetry breaking on, "admissible" shrinks to
//! the fundamental domain, which is lossless because every dominating set
//! has a group image whose first queen lies there.
//!
//! Within a subproblem the search is sequential and deterministic: branch on
//! the uncovered cell with the fewest remaining coverers (ties to the lex
//! smallest), try its coverers in lex order, and prune with two admissible
//! lower bounds on the queens still needed (a counting bound from the best
//! remaining coverage values, and a packing bound from uncovered cells whose
//! coverer sets are pairwise disjoint). Parallelism is across subproblems
//! only, and results are merged in first-queen order, so value, witness, and
//! certificate do not depend on the thread count.

use crate::board::{build_adjacency, Adjacency, BoardSpec, Cell, CellSet, Placement};
use crate::error::{Error, Result};
use crate::symmetry::FundamentalDomain;
use crate::tables;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

/// Wall-clock, node, and thread budgets for one solve.
#[derive(Debug, Clone)]
pub struct SolveLimits {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
    pub threads: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { time: None, nodes: None, threads: 1 }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Restrict first queens to the fundamental domain (3D boards only).
    pub use_symmetry: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { use_symmetry: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Witness is optimal and the certificate proves it.
    Optimal,
    /// Witness dominates but optimality was not certified.
    Feasible,
    /// No dominating set within the requested budget.
    Infeasible,
    /// A resource limit stopped the run; only the bound interval is known.
    Limit,
}

impl SolveStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Limit => "limit",
        }
    }
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one subproblem search as recorded in a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubproblemStatus {
    Infeasible,
    Feasible,
    Limit,
}

impl SubproblemStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SubproblemStatus::Infeasible => "infeasible",
            SubproblemStatus::Feasible => "feasible",
            SubproblemStatus::Limit => "limit",
        }
    }
}

/// One entry of the first-queen decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubproblemRecord {
    pub first_queen: Cell,
    pub status: SubproblemStatus,
    pub nodes: u64,
}

/// Witness of size k together with the partitioned proof that k-1 queens
/// cannot dominate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalityCertificate {
    pub n: usize,
    pub k: usize,
    pub witness: Placement,
    pub budget: usize,
    pub symmetry_used: bool,
    /// One record per admissible first queen, in lexicographic order, all
    /// infeasible.
    pub subproblems: Vec<SubproblemRecord>,
}

/// Result of [`solve_exact`] or [`attempt_n7`].
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// The domination number; present exactly when status is optimal.
    pub value: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    /// Best dominating set found (always present; at worst the greedy one).
    pub witness: Placement,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub certificate: Option<OptimalityCertificate>,
}

/// Dominating set built by repeatedly taking the cell that covers the most
/// still-uncovered cells, ties to the lexicographically smallest cell.
pub fn greedy_upper_bound(spec: &BoardSpec) -> Result<Placement> {
    let adj = build_adjacency(spec)?;
    Ok(greedy_on(&adj))
}

fn greedy_on(adj: &Adjacency) -> Placement {
    let spec = adj.spec();
    let total = spec.cell_count();
    let mut uncovered = CellSet::full(total);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let mut best = (0usize, 0usize); // (gain, cell); lex-min wins ties
        for c in 0..total {
            let gain = adj.row(c).intersection_count(&uncovered);
            if gain > best.0 {
                best = (gain, c);
            }
        }
        debug_assert!(best.0 > 0);
        chosen.push(best.1);
        uncovered.subtract(adj.row(best.1));
    }
    Placement::from_indices(spec, chosen)
}

/// Shared run state: budgets and the cross-subproblem cancellation slot.
struct RunControl {
    deadline: Option<Instant>,
    node_cap: Option<u64>,
    nodes_used: AtomicU64,
    /// Lowest subproblem rank that found a witness, if any.
    winner: AtomicUsize,
}

impl RunControl {
    fn new(limits: &SolveLimits, start: Instant) -> RunControl {
        RunControl {
            deadline: limits.time.map(|t| start + t),
            node_cap: limits.nodes,
            nodes_used: AtomicU64::new(0),
            winner: AtomicUsize::new(usize::MAX),
        }
    }

    fn reset_winner(&self) {
        self.winner.store(usize::MAX, Ordering::Relaxed);
    }

    fn out_of_budget(&self) -> bool {
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return true;
            }
        }
        if let Some(cap) = self.node_cap {
            if self.nodes_used.load(Ordering::Relaxed) >= cap {
                return true;
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SubOutcome {
    Found(Vec<usize>),
    Exhausted,
    /// A lower-ranked subproblem already found a witness.
    Cancelled,
    /// Time or node budget ran out.
    LimitHit,
}

const NODE_CHECK_MASK: u64 = 0xFFF;

/// Depth-first completion search for one subproblem.
struct Searcher<'a> {
    adj: &'a Adjacency,
    control: &'a RunControl,
    rank: usize,
    nodes: u64,
    unflushed: u64,
    /// pools to avoid per-node allocation
    set_pool: Vec<CellSet>,
    vec_pool: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn new(adj: &'a Adjacency, control: &'a RunControl, rank: usize) -> Searcher<'a> {
        Searcher {
            adj,
            control,
            rank,
            nodes: 0,
            unflushed: 0,
            set_pool: Vec::new(),
            vec_pool: Vec::new(),
        }
    }

    fn flush_nodes(&mut self) {
        self.control.nodes_used.fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
    }

    fn interrupted(&mut self) -> Option<SubOutcome> {
        self.flush_nodes();
        if self.control.winner.load(Ordering::Relaxed) < self.rank {
            return Some(SubOutcome::Cancelled);
        }
        if self.control.out_of_budget() {
            return Some(SubOutcome::LimitHit);
        }
        None
    }

    /// Search for a set of at most `remaining` more queens from `allowed`
    /// covering all of `uncovered`. `allowed` is restored before returning.
    fn dfs(
        &mut self,
        uncovered: &CellSet,
        allowed: &mut CellSet,
        chosen: &mut Vec<usize>,
        remaining: usize,
    ) -> SubOutcome {
        self.nodes += 1;
        self.unflushed += 1;
        if self.nodes & NODE_CHECK_MASK == 0 {
            if let Some(stop) = self.interrupted() {
                return stop;
            }
        }
        if uncovered.is_empty() {
            return SubOutcome::Found(chosen.clone());
        }
        if remaining == 0 {
            return SubOutcome::Exhausted;
        }

        // Branch cell: the uncovered cell with the fewest remaining
        // coverers, first in lex order on ties. A cell with none prunes the
        // node outright.
        let mut branch = usize::MAX;
        let mut branch_count = usize::MAX;
        let mut unc_count = 0usize;
        for v in uncovered.iter() {
            unc_count += 1;
            let cnt = self.adj.row(v).intersection_count(allowed);
            if cnt == 0 {
                return SubOutcome::Exhausted;
            }
            if cnt < branch_count {
                branch_count = cnt;
                branch = v;
            }
        }

        // Counting bound on the residual instance: remaining picks, each
        // covering at most max_coverage uncovered cells, must reach all of
        // them.
        let mut max_coverage = 0usize;
        for c in allowed.iter() {
            let cov = self.adj.row(c).intersection_count(uncovered);
            if cov > max_coverage {
                max_coverage = cov;
            }
        }
        if max_coverage == 0 || unc_count.div_ceil(max_coverage) > remaining {
            return SubOutcome::Exhausted;
        }

        // Branch over the coverers of the chosen cell in lex order; each
        // child excludes the coverers already tried, so no subset is visited
        // twice.
        let mut coverers = self.vec_pool.pop().unwrap_or_default();
        coverers.clear();
        coverers.extend(self.adj.row(branch).iter().filter(|&c| allowed.contains(c)));

        let mut outcome = SubOutcome::Exhausted;
        let mut removed = 0usize;
        for i in 0..coverers.len() {
            let c = coverers[i];
            allowed.remove(c);
            removed += 1;

            let mut child_uncovered = self
                .set_pool
                .pop()
                .unwrap_or_else(|| CellSet::empty(uncovered.capacity()));
            child_uncovered.clone_from(uncovered);
            child_uncovered.subtract(self.adj.row(c));

            chosen.push(c);
            let child = self.dfs(&child_uncovered, allowed, chosen, remaining - 1);
            chosen.pop();
            self.set_pool.push(child_uncovered);

            if child != SubOutcome::Exhausted {
                outcome = child;
                break;
            }
        }
        for &c in &coverers[..removed] {
            allowed.insert(c);
        }
        self.vec_pool.push(coverers);
        outcome
    }
}

/// Result of searching one first-queen subproblem.
struct SubResult {
    first_queen_index: usize,
    outcome: SubOutcome,
    nodes: u64,
}

fn run_subproblem(
    adj: &Adjacency,
    control: &RunControl,
    rank: usize,
    first_queen_index: usize,
    budget: usize,
) -> SubResult {
    debug_assert!(budget >= 1);
    if control.winner.load(Ordering::Relaxed) < rank {
        return SubResult { first_queen_index, outcome: SubOutcome::Cancelled, nodes: 0 };
    }
    if control.out_of_budget() {
        return SubResult { first_queen_index, outcome: SubOutcome::LimitHit, nodes: 0 };
    }
    let total = adj.spec().cell_count();
    let mut uncovered = CellSet::full(total);
    uncovered.subtract(adj.row(first_queen_index));

    // forbid every cell lexicographically before (or equal to) the first queen
    let mut allowed = CellSet::empty(total);
    for i in first_queen_index + 1..total {
        allowed.insert(i);
    }

    let mut searcher = Searcher::new(adj, control, rank);
    let mut chosen = vec![first_queen_index];
    let outcome = searcher.dfs(&uncovered, &mut allowed, &mut chosen, budget - 1);
    if let SubOutcome::Found(_) = outcome {
        control.winner.fetch_min(rank, Ordering::Relaxed);
    }
    searcher.flush_nodes();
    SubResult { first_queen_index, outcome, nodes: searcher.nodes }
}

enum BudgetOutcome {
    AllInfeasible(Vec<SubproblemRecord>),
    Feasible(Placement),
    LimitHit,
}

/// Admissible first-queen cells for a budget search: the fundamental domain
/// under symmetry breaking, every cell otherwise.
fn first_queen_candidates(spec: &BoardSpec, use_symmetry: bool) -> Vec<usize> {
    if use_symmetry && spec.dim() == 3 {
        FundamentalDomain::new(spec.side())
            .cells()
            .into_iter()
            .map(|c| spec.index_of(c))
            .collect()
    } else {
        (0..spec.cell_count()).collect()
    }
}

/// Search for a dominating set of at most `budget` queens, split by first
/// queen. Returns the infeasibility records, the earliest witness, or a
/// limit marker. Runs inside the given thread pool.
fn budget_search(
    adj: &Adjacency,
    control: &RunControl,
    pool: &rayon::ThreadPool,
    budget: usize,
    use_symmetry: bool,
    nodes_total: &mut u64,
) -> BudgetOutcome {
    let spec = adj.spec();
    let candidates = first_queen_candidates(spec, use_symmetry);
    if budget == 0 {
        // no queen can be placed at all; each subproblem is vacuously
        // infeasible and the board is non-empty
        let records = candidates
            .iter()
            .map(|&i| SubproblemRecord {
                first_queen: spec.cell_at(i),
                status: SubproblemStatus::Infeasible,
                nodes: 0,
            })
            .collect();
        return BudgetOutcome::AllInfeasible(records);
    }

    control.reset_winner();
    let results: Vec<SubResult> = pool.install(|| {
        candidates
            .par_iter()
            .enumerate()
            .map(|(rank, &idx)| run_subproblem(adj, control, rank, idx, budget))
            .collect()
    });

    *nodes_total += results.iter().map(|r| r.nodes).sum::<u64>();

    let mut limit_hit = false;
    let mut records = Vec::with_capacity(results.len());
    for result in &results {
        match &result.outcome {
            SubOutcome::Found(indices) => {
                // every lower rank is exhausted or limited, never cancelled,
                // so this is the lexicographically first witness
                return BudgetOutcome::Feasible(Placement::from_indices(spec, indices.iter().copied()));
            }
            SubOutcome::Exhausted => records.push(SubproblemRecord {
                first_queen: spec.cell_at(result.first_queen_index),
                status: SubproblemStatus::Infeasible,
                nodes: result.nodes,
            }),
            SubOutcome::LimitHit => limit_hit = true,
            SubOutcome::Cancelled => {
                debug_assert!(false, "cancelled subproblem without a lower-rank witness");
                limit_hit = true;
            }
        }
    }
    if limit_hit {
        BudgetOutcome::LimitHit
    } else {
        BudgetOutcome::AllInfeasible(records)
    }
}

fn make_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("cannot build thread pool: {e}")))
}

fn counting_lower_bound(adj: &Adjacency) -> usize {
    let cells = adj.spec().cell_count();
    cells.div_ceil(adj.max_closed_neighbourhood())
}

/// Compute the exact domination number of a board, together with a witness
/// and a first-queen-decomposition certificate for the value.
///
/// Budget searches run at k = lb, lb+1, ... where lb is the counting bound;
/// the first feasible k is the domination number, and the k-1 search that
/// just failed doubles as its certificate. Hitting a time or node budget
/// returns status `limit` with the best proven interval instead.
pub fn solve_exact(
    spec: &BoardSpec,
    limits: &SolveLimits,
    options: &SolveOptions,
) -> Result<SolveResult> {
    let adj = build_adjacency(spec)?;
    solve_on(&adj, limits, options, None)
}

fn solve_on(
    adj: &Adjacency,
    limits: &SolveLimits,
    options: &SolveOptions,
    initial_witness: Option<Placement>,
) -> Result<SolveResult> {
    let start = Instant::now();
    let spec = adj.spec();
    let control = RunControl::new(limits, start);
    let pool = make_pool(limits.threads)?;
    let use_symmetry = options.use_symmetry && spec.dim() == 3;

    let mut witness = greedy_on(adj);
    if let Some(other) = initial_witness {
        if other.len() < witness.len() {
            witness = other;
        }
    }
    let lb = counting_lower_bound(adj);
    let ub = witness.len();
    debug_assert!(lb <= ub);

    let mut nodes_total = 0u64;
    let mut proven_lb = lb;
    let mut last_infeasible: Option<(usize, Vec<SubproblemRecord>)> = None;

    let mut optimal: Option<(usize, Placement)> = None;
    for k in lb..ub {
        match budget_search(adj, &control, &pool, k, use_symmetry, &mut nodes_total) {
            BudgetOutcome::AllInfeasible(records) => {
                proven_lb = k + 1;
                last_infeasible = Some((k, records));
            }
            BudgetOutcome::Feasible(found) => {
                debug_assert_eq!(found.len(), k);
                optimal = Some((k, found));
                break;
            }
            BudgetOutcome::LimitHit => {
                return Ok(SolveResult {
                    status: SolveStatus::Limit,
                    value: None,
                    lower_bound: proven_lb,
                    upper_bound: ub,
                    witness,
                    nodes_explored: nodes_total,
                    wall_time: start.elapsed(),
                    certificate: None,
                });
            }
        }
    }
    let (value, witness) = optimal.unwrap_or((ub, witness));

    // certificate for budget value-1: usually the search that just failed,
    // otherwise (value at the counting bound) a fresh, trivially pruned run
    let certificate_records = match last_infeasible {
        Some((k, records)) if k + 1 == value => Some(records),
        _ => match budget_search(adj, &control, &pool, value - 1, use_symmetry, &mut nodes_total) {
            BudgetOutcome::AllInfeasible(records) => Some(records),
            BudgetOutcome::Feasible(_) => unreachable!("budget below the proven optimum"),
            BudgetOutcome::LimitHit => None,
        },
    };

    match certificate_records {
        Some(subproblems) => Ok(SolveResult {
            status: SolveStatus::Optimal,
            value: Some(value),
            lower_bound: value,
            upper_bound: value,
            witness: witness.clone(),
            nodes_explored: nodes_total,
            wall_time: start.elapsed(),
            certificate: Some(OptimalityCertificate {
                n: spec.side(),
                k: value,
                witness,
                budget: value - 1,
                symmetry_used: use_symmetry,
                subproblems,
            }),
        }),
        // the value is proven but its certificate run was cut short
        None => Ok(SolveResult {
            status: SolveStatus::Feasible,
            value: None,
            lower_bound: proven_lb,
            upper_bound: value,
            witness,
            nodes_explored: nodes_total,
            wall_time: start.elapsed(),
            certificate: None,
        }),
    }
}

/// Outcome of a standalone infeasibility certification at one budget.
#[derive(Debug, Clone)]
pub enum CertifyOutcome {
    /// Every first-queen subproblem is infeasible: no dominating set within
    /// the budget exists.
    Infeasible(Vec<SubproblemRecord>),
    /// The budget is feasible; here is a witness.
    Feasible(Placement),
    /// The run was cut short; the partial record list is unusable as a
    /// certificate.
    Limit,
}

/// Try to prove that `budget` queens cannot dominate the board.
pub fn certify_infeasible(
    spec: &BoardSpec,
    budget: usize,
    limits: &SolveLimits,
    use_symmetry: bool,
) -> Result<CertifyOutcome> {
    let adj = build_adjacency(spec)?;
    let control = RunControl::new(limits, Instant::now());
    let pool = make_pool(limits.threads)?;
    let mut nodes = 0u64;
    let use_symmetry = use_symmetry && spec.dim() == 3;
    Ok(match budget_search(&adj, &control, &pool, budget, use_symmetry, &mut nodes) {
        BudgetOutcome::AllInfeasible(records) => CertifyOutcome::Infeasible(records),
        BudgetOutcome::Feasible(witness) => CertifyOutcome::Feasible(witness),
        BudgetOutcome::LimitHit => CertifyOutcome::Limit,
    })
}

/// Outcome of certifying a claimed optimal value k.
#[derive(Debug, Clone)]
pub enum CertifyValueOutcome {
    Certified(OptimalityCertificate),
    /// k-1 queens already dominate, so k is not the domination number.
    SmallerWitness(Placement),
    /// No dominating set of size at most k was found, so k is below the
    /// domination number.
    BudgetInfeasible,
    Limit,
}

/// Certify that the domination number equals `k`: find a k-queen witness and
/// prove budget k-1 infeasible.
pub fn certify_value(
    spec: &BoardSpec,
    k: usize,
    limits: &SolveLimits,
    use_symmetry: bool,
) -> Result<CertifyValueOutcome> {
    if k == 0 {
        return Err(Error::invalid("claimed value must be at least 1"));
    }
    let adj = build_adjacency(spec)?;
    let control = RunControl::new(limits, Instant::now());
    let pool = make_pool(limits.threads)?;
    let use_symmetry = use_symmetry && spec.dim() == 3;
    let mut nodes = 0u64;

    let witness = match budget_search(&adj, &control, &pool, k, use_symmetry, &mut nodes) {
        BudgetOutcome::Feasible(w) => w,
        BudgetOutcome::AllInfeasible(_) => return Ok(CertifyValueOutcome::BudgetInfeasible),
        BudgetOutcome::LimitHit => return Ok(CertifyValueOutcome::Limit),
    };
    if witness.len() < k {
        return Ok(CertifyValueOutcome::SmallerWitness(witness));
    }
    match budget_search(&adj, &control, &pool, k - 1, use_symmetry, &mut nodes) {
        BudgetOutcome::AllInfeasible(subproblems) => {
            Ok(CertifyValueOutcome::Certified(OptimalityCertificate {
                n: spec.side(),
                k,
                witness,
                budget: k - 1,
                symmetry_used: use_symmetry,
                subproblems,
            }))
        }
        BudgetOutcome::Feasible(smaller) => Ok(CertifyValueOutcome::SmallerWitness(smaller)),
        BudgetOutcome::LimitHit => Ok(CertifyValueOutcome::Limit),
    }
}

/// Budgeted attempt at the open n = 7 board.
///
/// Starts from the published 12-queen dominating set (verified on the spot,
/// so the upper bound of 12 always holds) and pushes the lower bound upward
/// with budget searches until the limits run out. Completing the run to
/// optimality is not expected at desk scale.
pub fn attempt_n7(limits: &SolveLimits) -> Result<SolveResult> {
    let spec = BoardSpec::cube(7)?;
    let reference = tables::known_placement3(7).expect("n=7 table entry");
    let outcome = crate::verifier::is_dominating(&spec, &reference);
    assert!(outcome.ok, "published 12-queen placement must dominate");
    let adj = build_adjacency(&spec)?;
    solve_on(&adj, limits, &SolveOptions::default(), Some(reference))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::{canonical_placement, in_fundamental_domain};
    use crate::verifier::{check_certificate, is_dominating};

    fn cube(n: usize) -> BoardSpec {
        BoardSpec::cube(n).unwrap()
    }

    fn quick_limits() -> SolveLimits {
        SolveLimits { time: Some(Duration::from_secs(120)), nodes: None, threads: 2 }
    }

    #[test]
    fn greedy_examples() {
        let g3 = greedy_upper_bound(&cube(3)).unwrap();
        assert_eq!(g3.cells(), &[Cell::at3(1, 1, 1)]);
        let g1 = greedy_upper_bound(&cube(1)).unwrap();
        assert_eq!(g1.cells(), &[Cell::at3(0, 0, 0)]);
        let g5 = greedy_upper_bound(&cube(5)).unwrap();
        assert!(is_dominating(&cube(5), &g5).ok);
        assert!((6..=15).contains(&g5.len()), "greedy size {}", g5.len());
    }

    #[test]
    fn solve_tiny_boards() {
        for (n, expected) in [(1usize, 1usize), (2, 1), (3, 1), (4, 4)] {
            let result = solve_exact(&cube(n), &quick_limits(), &SolveOptions::default()).unwrap();
            assert_eq!(result.status, SolveStatus::Optimal, "n={n}");
            assert_eq!(result.value, Some(expected), "n={n}");
            assert_eq!(result.witness.len(), expected);
            assert!(is_dominating(&cube(n), &result.witness).ok);
            let cert = result.certificate.expect("optimal result carries certificate");
            assert!(check_certificate(&cube(n), &cert).ok(), "n={n}");
            assert_eq!(cert.budget, expected - 1);
        }
    }

    #[test]
    fn certify_infeasible_examples() {
        let limits = quick_limits();
        match certify_infeasible(&cube(4), 3, &limits, true).unwrap() {
            CertifyOutcome::Infeasible(records) => {
                assert_eq!(records.len(), FundamentalDomain::new(4).len());
                assert!(records.iter().all(|r| r.status == SubproblemStatus::Infeasible));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        match certify_infeasible(&cube(3), 0, &limits, true).unwrap() {
            CertifyOutcome::Infeasible(records) => {
                assert!(records.iter().all(|r| r.nodes == 0));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        match certify_infeasible(&cube(2), 1, &limits, true).unwrap() {
            CertifyOutcome::Feasible(witness) => {
                assert_eq!(witness.len(), 1);
                assert!(is_dominating(&cube(2), &witness).ok);
            }
            other => panic!("expected feasible, got {other:?}"),
        }
    }

    #[test]
    fn certify_value_roundtrip() {
        let limits = quick_limits();
        match certify_value(&cube(4), 4, &limits, true).unwrap() {
            CertifyValueOutcome::Certified(cert) => {
                assert!(check_certificate(&cube(4), &cert).ok());
            }
            other => panic!("expected certified, got {other:?}"),
        }
        assert!(matches!(
            certify_value(&cube(4), 3, &limits, true).unwrap(),
            CertifyValueOutcome::BudgetInfeasible
        ));
        assert!(matches!(
            certify_value(&cube(4), 5, &limits, true).unwrap(),
            CertifyValueOutcome::SmallerWitness(_)
        ));
        assert!(certify_value(&cube(4), 0, &limits, true).is_err());
    }

    #[test]
    fn symmetry_on_off_agree_small() {
        let limits = quick_limits();
        for n in 1..=4usize {
            let with = solve_exact(&cube(n), &limits, &SolveOptions { use_symmetry: true }).unwrap();
            let without = solve_exact(&cube(n), &limits, &SolveOptions { use_symmetry: false }).unwrap();
            assert_eq!(with.value, without.value, "n={n}");
            assert!(without
                .certificate
                .as_ref()
                .is_some_and(|c| c.subproblems.len() == cube(n).cell_count()));
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        for threads in [1usize, 4] {
            let limits = SolveLimits { threads, ..quick_limits() };
            let result = solve_exact(&cube(4), &limits, &SolveOptions::default()).unwrap();
            assert_eq!(result.value, Some(4));
            let cert = result.certificate.unwrap();
            let baseline = solve_exact(&cube(4), &quick_limits(), &SolveOptions::default())
                .unwrap()
                .certificate
                .unwrap();
            assert_eq!(result.witness, baseline.witness);
            assert_eq!(cert.witness, baseline.witness);
            let firsts: Vec<Cell> = cert.subproblems.iter().map(|s| s.first_queen).collect();
            let base_firsts: Vec<Cell> = baseline.subproblems.iter().map(|s| s.first_queen).collect();
            assert_eq!(firsts, base_firsts);
        }
    }

    #[test]
    fn node_limit_yields_limit_status() {
        let limits = SolveLimits { time: None, nodes: Some(50), threads: 1 };
        let result = solve_exact(&cube(5), &limits, &SolveOptions::default()).unwrap();
        assert_eq!(result.status, SolveStatus::Limit);
        assert!(result.lower_bound >= 3);
        assert!(result.upper_bound <= 15);
        assert!(result.lower_bound <= result.upper_bound);
        assert!(is_dominating(&cube(5), &result.witness).ok);
    }

    #[test]
    fn greedy_never_below_final_value() {
        for n in 1..=4usize {
            let greedy = greedy_upper_bound(&cube(n)).unwrap();
            let result = solve_exact(&cube(n), &quick_limits(), &SolveOptions::default()).unwrap();
            assert!(greedy.len() >= result.value.unwrap());
        }
    }

    // Every placement of at most 2 queens on the 3-board lands, after
    // canonicalization, in exactly one first-queen subproblem.
    #[test]
    fn first_queen_partition_is_exhaustive_and_exclusive() {
        let spec = cube(3);
        let candidates: Vec<Cell> = first_queen_candidates(&spec, true)
            .into_iter()
            .map(|i| spec.cell_at(i))
            .collect();
        let cells: Vec<Cell> = spec.cells().collect();
        let mut placements: Vec<Vec<Cell>> = cells.iter().map(|&c| vec![c]).collect();
        for (i, &a) in cells.iter().enumerate() {
            for &b in &cells[i + 1..] {
                placements.push(vec![a, b]);
            }
        }
        for cells in placements {
            let placement = Placement::from_cells(&spec, cells).unwrap();
            let canon = canonical_placement(&spec, &placement).unwrap();
            let first = canon.first().unwrap();
            assert!(in_fundamental_domain(&spec, first));
            let owners: Vec<&Cell> = candidates.iter().filter(|&&c| c == first).collect();
            assert_eq!(owners.len(), 1, "canonical form of {placement} has no unique owner");
        }
    }

    #[test]
    fn n7_attempt_confirms_interval_under_tiny_budget() {
        let limits = SolveLimits { time: Some(Duration::from_millis(500)), nodes: None, threads: 2 };
        let result = attempt_n7(&limits).unwrap();
        assert_eq!(result.status, SolveStatus::Limit);
        assert!(result.lower_bound >= 5);
        assert_eq!(result.upper_bound, 12);
        assert_eq!(result.witness.len(), 12);
        assert!(is_dominating(&cube(7), &result.witness).ok);
    }
}
