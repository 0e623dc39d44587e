//! Exhaustive extremal search over small connected graphs, conjecture
//! verification, seeded random graph generation, and hill climbing driven
//! by the exact delta formulas.
//!
//! Enumeration is labeled: every upper-triangle adjacency bitmask is
//! visited, connectivity-filtered where needed, and witnesses are
//! deduplicated afterwards by degree sequence and join recognition. The
//! mask space splits into contiguous shards that scan independently and
//! merge by pure reduction, so results are identical for any shard count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::bounds::witness_max_degree_count_ok;
use crate::csz::{csz, delta_add_edge_maxdeg, delta_remove_min_min, toggle_delta, CszValue};
use crate::graph::{make_join, recognize_join, Graph, GraphError, JoinSpec};
use crate::graph6::to_graph6;
use crate::join::{optimal_k, JoinFamilyError};

/// Hard limit: the pair space must fit in a u64 bitmask.
const MAX_PAIR_BITS: usize = 63;

/// Default caps giving desk-scale runtimes; larger orders need an explicit
/// override.
pub const UNRESTRICTED_SOFT_CAP: usize = 7;
pub const UNIVERSAL_SOFT_CAP: usize = 9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("order {n} exceeds the {mode} mode default cap {cap}; pass the cap override to scan anyway (runtime grows as 2^(pairs))")]
    OverSoftCap { n: usize, cap: usize, mode: &'static str },
    #[error("order {n} needs {bits} adjacency bits; enumeration supports at most {MAX_PAIR_BITS}")]
    OverHardCap { n: usize, bits: usize },
    #[error("shard index {index} out of range for {count} shards")]
    ShardIndexOutOfRange { index: usize, count: usize },
    #[error("shard count must be at least 1")]
    ZeroShards,
    #[error("seed graph is not connected")]
    DisconnectedSeed,
    #[error("edge probability {p} outside (0, 1]")]
    InvalidEdgeProbability { p: f64 },
    #[error("could not draw a connected graph in {attempts} attempts (n={n}, p={p})")]
    RetriesExhausted { n: usize, p: f64, attempts: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    JoinFamily(#[from] JoinFamilyError),
}

/// Which class of labeled graphs the enumeration scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// All connected graphs: every adjacency bitmask, connectivity-filtered.
    Unrestricted,
    /// Vertex 0 fixed adjacent to everything; sound for extremal search
    /// because maximizers have a full-degree vertex, and connected by
    /// construction.
    UniversalVertex,
}

impl SearchMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchMode::Unrestricted => "unrestricted",
            SearchMode::UniversalVertex => "universal-vertex",
        }
    }

    fn soft_cap(self) -> usize {
        match self {
            SearchMode::Unrestricted => UNRESTRICTED_SOFT_CAP,
            SearchMode::UniversalVertex => UNIVERSAL_SOFT_CAP,
        }
    }

    fn pair_bits(self, n: usize) -> usize {
        match self {
            SearchMode::Unrestricted => n * n.saturating_sub(1) / 2,
            SearchMode::UniversalVertex => n.saturating_sub(1) * n.saturating_sub(2) / 2,
        }
    }
}

/// Parameters shared by the enumeration and local-search entry points.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n: usize,
    pub mode: SearchMode,
    pub shard_count: usize,
    /// When set, scan only this shard and report its local outcome.
    pub shard_index: Option<usize>,
    /// Seed for local search and random graph generation.
    pub seed: u64,
    pub max_steps: usize,
    pub restarts: usize,
    /// Permits orders above the default cap (the hard bitmask cap still
    /// applies).
    pub cap_override: bool,
}

impl SearchConfig {
    pub fn new(n: usize, mode: SearchMode) -> Self {
        SearchConfig {
            n,
            mode,
            shard_count: 1,
            shard_index: None,
            seed: 0,
            max_steps: 10_000,
            restarts: 1,
            cap_override: false,
        }
    }
}

/// One deduplicated extremal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub degree_sequence: Vec<usize>,
    pub join_k: Option<usize>,
}

/// Outcome of an exhaustive scan: the exact maximum, its witnesses, and
/// structural flags evaluated over every maximizer.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub mode: SearchMode,
    pub max_value: CszValue,
    pub witnesses: Vec<Witness>,
    pub all_witnesses_are_joins: bool,
    /// Recognized clique part sizes across witnesses, deduplicated.
    pub witness_k: Vec<usize>,
    /// Every witness has a vertex adjacent to all others.
    pub all_max_degree_full: bool,
    /// No witness has two adjacent minimum-degree vertices.
    pub no_adjacent_min_degree_pair: bool,
    /// Every witness has at most the closed-form cap of maximum-degree
    /// vertices.
    pub max_degree_count_within_bound: bool,
    pub graphs_scanned: u64,
}

struct PairTable {
    n: usize,
    mode: SearchMode,
    pairs: Vec<(usize, usize)>,
}

impl PairTable {
    fn new(n: usize, mode: SearchMode) -> Self {
        let mut pairs = Vec::new();
        let start = match mode {
            SearchMode::Unrestricted => 0,
            SearchMode::UniversalVertex => 1,
        };
        for j in (start + 1)..n {
            for i in start..j {
                pairs.push((i, j));
            }
        }
        PairTable { n, mode, pairs }
    }

    /// Neighbor masks of the full graph encoded by `mask`.
    fn rows(&self, mask: u64) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        if self.mode == SearchMode::UniversalVertex {
            let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
            rows[0] = all & !1;
            for row in rows.iter_mut().skip(1) {
                *row |= 1;
            }
        }
        let mut m = mask;
        while m != 0 {
            let p = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = self.pairs[p];
            rows[i] |= 1u64 << j;
            rows[j] |= 1u64 << i;
        }
        rows
    }
}

struct ShardOutcome {
    best: u64,
    witness_masks: Vec<u64>,
    scanned: u64,
}

fn scan_range(table: &PairTable, lo: u64, hi: u64) -> ShardOutcome {
    let n = table.n;
    let universal = table.mode == SearchMode::UniversalVertex;
    let sq: Vec<u64> = (0..n as u64).map(|d| d * d).collect();
    let full_sq = (n as u64 - 1) * (n as u64 - 1);

    let mut best = 0u64;
    let mut witness_masks: Vec<u64> = Vec::new();
    let mut scanned = 0u64;

    let mut deg = vec![0u8; n];
    let mut adj = vec![0u16; n];

    for mask in lo..hi {
        deg.iter_mut().for_each(|d| *d = 0);
        adj.iter_mut().for_each(|a| *a = 0);
        let mut m = mask;
        while m != 0 {
            let p = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = table.pairs[p];
            deg[i] += 1;
            deg[j] += 1;
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }

        let value = if universal {
            // Vertex 0 is adjacent to everything; interior degrees shift
            // by one and the spokes contribute directly.
            let mut total = 0u64;
            for v in 1..n {
                total += full_sq - sq[deg[v] as usize + 1];
            }
            let mut m = mask;
            while m != 0 {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                let (i, j) = table.pairs[p];
                total += sq[deg[i] as usize + 1].abs_diff(sq[deg[j] as usize + 1]);
            }
            total
        } else {
            // Connectivity filter via bitset closure from vertex 0.
            let all = (1u16 << n) - 1;
            let mut seen = 1u16;
            loop {
                let mut next = seen;
                let mut frontier = seen;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    next |= adj[v];
                }
                if next == seen {
                    break;
                }
                seen = next;
            }
            if seen != all {
                continue;
            }
            let mut total = 0u64;
            let mut m = mask;
            while m != 0 {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                let (i, j) = table.pairs[p];
                total += sq[deg[i] as usize].abs_diff(sq[deg[j] as usize]);
            }
            total
        };

        scanned += 1;
        if value > best {
            best = value;
            witness_masks.clear();
            witness_masks.push(mask);
        } else if value == best {
            witness_masks.push(mask);
        }
    }

    ShardOutcome { best, witness_masks, scanned }
}

fn check_caps(cfg: &SearchConfig) -> Result<PairTable, SearchError> {
    let n = cfg.n;
    let mode = cfg.mode;
    if n < 1 {
        return Err(SearchError::Graph(GraphError::OrderOutOfRange { n, max: 1 }));
    }
    let bits = mode.pair_bits(n);
    if bits > MAX_PAIR_BITS {
        return Err(SearchError::OverHardCap { n, bits });
    }
    if n > mode.soft_cap() && !cfg.cap_override {
        return Err(SearchError::OverSoftCap { n, cap: mode.soft_cap(), mode: mode.as_str() });
    }
    Ok(PairTable::new(n, mode))
}

fn shard_bounds(total: u64, count: u64, index: u64) -> (u64, u64) {
    // Contiguous ranges; u128 keeps the products exact.
    let lo = (total as u128 * index as u128 / count as u128) as u64;
    let hi = (total as u128 * (index + 1) as u128 / count as u128) as u64;
    (lo, hi)
}

fn merge(outcomes: Vec<ShardOutcome>) -> ShardOutcome {
    let mut merged = ShardOutcome { best: 0, witness_masks: Vec::new(), scanned: 0 };
    for o in outcomes {
        merged.scanned += o.scanned;
        if o.witness_masks.is_empty() {
            continue;
        }
        if merged.witness_masks.is_empty() || o.best > merged.best {
            merged.best = o.best;
            merged.witness_masks = o.witness_masks;
        } else if o.best == merged.best {
            merged.witness_masks.extend(o.witness_masks);
        }
    }
    merged
}

fn has_adjacent_min_pair(g: &Graph) -> bool {
    let min = g.min_degree();
    g.edges().any(|(u, v)| g.degree(u) == min && g.degree(v) == min)
}

fn build_report(cfg: &SearchConfig, table: &PairTable, merged: ShardOutcome) -> ExtremalReport {
    let n = cfg.n;
    let mut all_joins = true;
    let mut all_full = true;
    let mut no_min_pair = true;
    let mut count_ok = true;

    // Dedup key: (degree sequence, recognized join size). Joins get a
    // canonical representative so reports agree across scan modes.
    let mut dedup: BTreeMap<(Vec<usize>, Option<usize>), String> = BTreeMap::new();
    for &mask in &merged.witness_masks {
        let g = Graph::from_bitset_rows(n, table.rows(mask));
        debug_assert_eq!(csz(&g).get(), merged.best);
        let mut degs = g.degrees();
        degs.sort_unstable();
        let join_k = recognize_join(&g);
        all_joins &= join_k.is_some();
        all_full &= g.max_degree() == n - 1;
        no_min_pair &= !has_adjacent_min_pair(&g);
        count_ok &= witness_max_degree_count_ok(&g);
        dedup.entry((degs, join_k)).or_insert_with(|| match join_k {
            Some(k) => to_graph6(&make_join(JoinSpec::new(n, k).expect("recognized k valid"))),
            None => to_graph6(&g),
        });
    }

    let mut witness_k: Vec<usize> =
        dedup.keys().filter_map(|(_, k)| *k).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    witness_k.sort_unstable();

    let witnesses = dedup
        .into_iter()
        .map(|((degree_sequence, join_k), graph6)| Witness { graph6, degree_sequence, join_k })
        .collect();

    ExtremalReport {
        n,
        mode: cfg.mode,
        max_value: CszValue(merged.best),
        witnesses,
        all_witnesses_are_joins: all_joins,
        witness_k,
        all_max_degree_full: all_full,
        no_adjacent_min_degree_pair: no_min_pair,
        max_degree_count_within_bound: count_ok,
        graphs_scanned: merged.scanned,
    }
}

/// Scans the configured class exhaustively and returns the exact maximum
/// with all witnesses. Shards run in parallel; the merged result does not
/// depend on the shard count.
pub fn enumerate_extremal(cfg: &SearchConfig) -> Result<ExtremalReport, SearchError> {
    let table = check_caps(cfg)?;
    if cfg.shard_count == 0 {
        return Err(SearchError::ZeroShards);
    }
    let total = 1u64 << table.pairs.len();
    let count = cfg.shard_count as u64;

    let outcomes: Vec<ShardOutcome> = match cfg.shard_index {
        Some(index) => {
            if index >= cfg.shard_count {
                return Err(SearchError::ShardIndexOutOfRange { index, count: cfg.shard_count });
            }
            let (lo, hi) = shard_bounds(total, count, index as u64);
            vec![scan_range(&table, lo, hi)]
        }
        None => (0..count)
            .into_par_iter()
            .map(|i| {
                let (lo, hi) = shard_bounds(total, count, i);
                scan_range(&table, lo, hi)
            })
            .collect(),
    };

    Ok(build_report(cfg, &table, merge(outcomes)))
}

/// Conjecture verdict for one order: the scan's witnesses must all be
/// joins, every clique part must stay below half the order, and for
/// n >= 5 the witness sizes must match the join-family argmax.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureCheck {
    pub holds: bool,
    pub expected_k: Option<Vec<usize>>,
    pub report: ExtremalReport,
}

pub fn verify_conjecture(cfg: &SearchConfig) -> Result<ConjectureCheck, SearchError> {
    let report = enumerate_extremal(cfg)?;
    let n = cfg.n;
    let half = n.div_ceil(2);
    let expected_k = if n >= 5 { Some(optimal_k(n)?.best_k) } else { None };
    let holds = report.all_witnesses_are_joins
        && !report.witness_k.is_empty()
        && report.witness_k.iter().all(|&k| k < half)
        && expected_k.as_ref().is_none_or(|want| &report.witness_k == want);
    Ok(ConjectureCheck { holds, expected_k, report })
}

/// Visits every connected labeled graph of the given order in mask order.
pub fn for_each_connected_graph<F>(n: usize, mut f: F) -> Result<(), SearchError>
where
    F: FnMut(&Graph),
{
    let mut cfg = SearchConfig::new(n, SearchMode::Unrestricted);
    cfg.cap_override = true;
    let table = check_caps(&cfg)?;
    for mask in 0..(1u64 << table.pairs.len()) {
        let g = Graph::from_bitset_rows(n, table.rows(mask));
        if g.is_connected() {
            f(&g);
        }
    }
    Ok(())
}

/// Visits every labeled graph with vertex 0 universal, in mask order.
/// All of them are connected.
pub fn for_each_universal_graph<F>(n: usize, mut f: F) -> Result<(), SearchError>
where
    F: FnMut(&Graph),
{
    let mut cfg = SearchConfig::new(n, SearchMode::UniversalVertex);
    cfg.cap_override = true;
    let table = check_caps(&cfg)?;
    for mask in 0..(1u64 << table.pairs.len()) {
        f(&Graph::from_bitset_rows(n, table.rows(mask)));
    }
    Ok(())
}

/// How a hill-climbing step changed the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// Edge added from a maximum-degree vertex to a non-neighbor; the
    /// increase has a closed form and is always positive.
    AddEdgeFromMaxDegree,
    /// Edge removed between two minimum-degree vertices (connectivity
    /// checked before applying); closed-form nonnegative change.
    RemoveMinDegreePair,
    /// Any other connectivity-preserving toggle.
    ToggleEdge,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub u: usize,
    pub v: usize,
    pub delta: i64,
    pub value_after: CszValue,
    /// Closed-form prediction for the guaranteed move kinds.
    pub closed_form: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalSearchOutcome {
    pub start_value: CszValue,
    pub final_value: CszValue,
    pub steps: usize,
    pub trace: Vec<MoveRecord>,
    #[serde(skip)]
    pub graph: Graph,
}

/// Steepest-ascent hill climbing over single-edge toggles that preserve
/// connectivity. Ties break toward the lexicographically smallest (u, v).
/// Stops at a local maximum or after `max_steps` moves.
pub fn local_search(cfg: &SearchConfig, seed_graph: Option<Graph>) -> Result<LocalSearchOutcome, SearchError> {
    let mut g = match seed_graph {
        Some(g) => g,
        None => random_connected(cfg.n, 0.5, cfg.seed)?,
    };
    if !g.is_connected() {
        return Err(SearchError::DisconnectedSeed);
    }
    let n = g.order();
    let start_value = csz(&g);
    let mut value = start_value;
    let mut trace = Vec::new();

    while trace.len() < cfg.max_steps {
        let max_deg = g.max_degree();
        let min_deg = g.min_degree();
        let mut best: Option<(i64, usize, usize)> = None;
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(u, v) && !g.toggle_edge(u, v).expect("valid pair").is_connected() {
                    continue;
                }
                let delta = toggle_delta(&g, u, v).expect("valid pair");
                if delta > 0 && best.is_none_or(|(bd, _, _)| delta > bd) {
                    best = Some((delta, u, v));
                }
            }
        }
        let Some((delta, u, v)) = best else { break };

        let (kind, closed_form) = if !g.has_edge(u, v) {
            if g.degree(u) == max_deg {
                (MoveKind::AddEdgeFromMaxDegree, Some(delta_add_edge_maxdeg(&g, u, v).expect("preconditions hold")))
            } else if g.degree(v) == max_deg {
                (MoveKind::AddEdgeFromMaxDegree, Some(delta_add_edge_maxdeg(&g, v, u).expect("preconditions hold")))
            } else {
                (MoveKind::ToggleEdge, None)
            }
        } else if g.degree(u) == min_deg && g.degree(v) == min_deg {
            (MoveKind::RemoveMinDegreePair, Some(delta_remove_min_min(&g, u, v).expect("preconditions hold")))
        } else {
            (MoveKind::ToggleEdge, None)
        };
        if let Some(cf) = closed_form {
            debug_assert_eq!(cf, delta, "closed form disagrees at ({u},{v})");
        }

        g = g.toggle_edge(u, v).expect("valid pair");
        value = CszValue((value.get() as i64 + delta) as u64);
        debug_assert_eq!(value, csz(&g));
        trace.push(MoveRecord { kind, u, v, delta, value_after: value, closed_form });
    }

    Ok(LocalSearchOutcome { start_value, final_value: value, steps: trace.len(), trace, graph: g })
}

/// Uniform random graph with the given edge probability, redrawn until
/// connected. Deterministic for a fixed seed.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, SearchError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(SearchError::InvalidEdgeProbability { p });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 10_000;
    for _ in 0..attempts {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(SearchError::RetriesExhausted { n, p, attempts })
}
