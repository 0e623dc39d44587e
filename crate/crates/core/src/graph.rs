//! Simple undirected graphs with degree and connectivity queries.
//!
//! One `Graph` abstraction, two backing layouts: per-vertex `u64` bitsets
//! for orders up to 64 (the enumeration path) and sorted neighbor lists for
//! larger orders (direct evaluation of join graphs and bound sweeps, up to
//! [`MAX_ORDER`]). Graphs are immutable values; every transformation
//! returns a new graph.

use std::fmt;

use thiserror::Error;

/// Largest order accepted anywhere; keeps every index quantity inside u64.
pub const MAX_ORDER: usize = 10_000;

/// Orders up to this use the bitset layout.
pub const BITSET_MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order must be in 1..={max}, got {n}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("clique part size {k} invalid for join of order {n} (need 1 <= k <= n-2)")]
    InvalidCliquePart { n: usize, k: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Adjacency {
    /// One u64 neighbor mask per vertex; n <= 64.
    Bits(Vec<u64>),
    /// One sorted neighbor list per vertex; n <= MAX_ORDER.
    Lists(Vec<Vec<u32>>),
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Invariants (enforced by every constructor): adjacency is symmetric,
/// irreflexive, and the degree sum equals twice the edge count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Adjacency,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Builder used by constructors; not exposed. Deduplicates and symmetrizes.
struct EdgeAccumulator {
    n: usize,
    adj: Adjacency,
}

impl EdgeAccumulator {
    fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { n, max: MAX_ORDER });
        }
        let adj = if n <= BITSET_MAX_ORDER {
            Adjacency::Bits(vec![0u64; n])
        } else {
            Adjacency::Lists(vec![Vec::new(); n])
        };
        Ok(Self { n, adj })
    }

    fn add(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        match &mut self.adj {
            Adjacency::Bits(rows) => {
                rows[u] |= 1u64 << v;
                rows[v] |= 1u64 << u;
            }
            Adjacency::Lists(rows) => {
                // Sorted + dedup happens in finish().
                rows[u].push(v as u32);
                rows[v].push(u as u32);
            }
        }
        Ok(())
    }

    fn finish(mut self) -> Graph {
        if let Adjacency::Lists(rows) = &mut self.adj {
            for row in rows.iter_mut() {
                row.sort_unstable();
                row.dedup();
            }
        }
        Graph { n: self.n, adj: self.adj }
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicate edges collapse,
    /// orientation is ignored.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut acc = EdgeAccumulator::new(n)?;
        for &(u, v) in edges {
            acc.add(u, v)?;
        }
        Ok(acc.finish())
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Ok(EdgeAccumulator::new(n)?.finish())
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut acc = EdgeAccumulator::new(n)?;
        for u in 0..n {
            for v in (u + 1)..n {
                acc.add(u, v)?;
            }
        }
        Ok(acc.finish())
    }

    /// Cycle C_n (n >= 3).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut acc = EdgeAccumulator::new(n)?;
        for u in 0..n {
            acc.add(u, (u + 1) % n)?;
        }
        Ok(acc.finish())
    }

    /// Path P_n: vertices 0..n in a line.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut acc = EdgeAccumulator::new(n)?;
        for u in 1..n {
            acc.add(u - 1, u)?;
        }
        Ok(acc.finish())
    }

    /// Builds a bitset-layout graph directly from neighbor masks.
    /// Masks must already be symmetric and irreflexive; debug-checked.
    pub(crate) fn from_bitset_rows(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!((1..=BITSET_MAX_ORDER).contains(&n) && rows.len() == n);
        #[cfg(debug_assertions)]
        {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            for (u, &row) in rows.iter().enumerate() {
                debug_assert_eq!(row & !mask, 0, "bits outside order at vertex {u}");
                debug_assert_eq!(row >> u & 1, 0, "self-loop at vertex {u}");
            }
            for u in 0..n {
                for v in (u + 1)..n {
                    debug_assert_eq!(rows[u] >> v & 1, rows[v] >> u & 1, "asymmetry at ({u},{v})");
                }
            }
        }
        Graph { n, adj: Adjacency::Bits(rows) }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        match &self.adj {
            Adjacency::Bits(rows) => rows[u] >> v & 1 == 1,
            Adjacency::Lists(rows) => rows[u].binary_search(&(v as u32)).is_ok(),
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        match &self.adj {
            Adjacency::Bits(rows) => rows[u].count_ones() as usize,
            Adjacency::Lists(rows) => rows[u].len(),
        }
    }

    /// All vertex degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        let twice: usize = (0..self.n).map(|u| self.degree(u)).sum();
        twice / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// Vertices attaining the maximum degree.
    pub fn max_degree_vertices(&self) -> Vec<usize> {
        let d = self.max_degree();
        (0..self.n).filter(|&u| self.degree(u) == d).collect()
    }

    /// Vertices attaining the minimum degree.
    pub fn min_degree_vertices(&self) -> Vec<usize> {
        let d = self.min_degree();
        (0..self.n).filter(|&u| self.degree(u) == d).collect()
    }

    pub fn neighbors(&self, u: usize) -> Neighbors<'_> {
        match &self.adj {
            Adjacency::Bits(rows) => Neighbors::Bits(rows[u]),
            Adjacency::Lists(rows) => Neighbors::Lists(rows[u].iter()),
        }
    }

    /// Edges as (u, v) pairs with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).filter_map(move |v| if v > u { Some((u, v)) } else { None })
        })
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        match &self.adj {
            Adjacency::Bits(rows) => {
                let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
                let mut seen = 1u64;
                loop {
                    let mut next = seen;
                    let mut frontier = seen;
                    while frontier != 0 {
                        let u = frontier.trailing_zeros() as usize;
                        frontier &= frontier - 1;
                        next |= rows[u];
                    }
                    if next == seen {
                        return seen == full;
                    }
                    seen = next;
                }
            }
            Adjacency::Lists(rows) => {
                let mut seen = vec![false; self.n];
                let mut queue = std::collections::VecDeque::new();
                seen[0] = true;
                queue.push_back(0usize);
                let mut count = 1usize;
                while let Some(u) = queue.pop_front() {
                    for &v in &rows[u] {
                        let v = v as usize;
                        if !seen[v] {
                            seen[v] = true;
                            count += 1;
                            queue.push_back(v);
                        }
                    }
                }
                count == self.n
            }
        }
    }

    /// New graph with edge uv added if absent, removed if present.
    pub fn toggle_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        let mut adj = self.adj.clone();
        match &mut adj {
            Adjacency::Bits(rows) => {
                rows[u] ^= 1u64 << v;
                rows[v] ^= 1u64 << u;
            }
            Adjacency::Lists(rows) => {
                for (a, b) in [(u, v), (v, u)] {
                    match rows[a].binary_search(&(b as u32)) {
                        Ok(pos) => {
                            rows[a].remove(pos);
                        }
                        Err(pos) => rows[a].insert(pos, b as u32),
                    }
                }
            }
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Groups vertices by degree and counts edges between and within classes.
    pub fn degree_partition(&self) -> DegreePartition {
        let degs = self.degrees();
        let mut distinct: Vec<usize> = degs.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let class_of = |d: usize| distinct.binary_search(&d).expect("degree present");

        let mut class_sizes = vec![0usize; distinct.len()];
        for &d in &degs {
            class_sizes[class_of(d)] += 1;
        }

        let ell = distinct.len();
        let mut cross = vec![0u64; ell * (ell.saturating_sub(1)) / 2];
        let mut within_edges = 0u64;
        for (u, v) in self.edges() {
            let (i, j) = (class_of(degs[u]), class_of(degs[v]));
            if i == j {
                within_edges += 1;
            } else {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                cross[cross_index(ell, lo, hi)] += 1;
            }
        }

        DegreePartition { degrees: distinct, class_sizes, cross, within_edges }
    }
}

/// Iterator over a vertex's neighbors in either layout.
pub enum Neighbors<'a> {
    Bits(u64),
    Lists(std::slice::Iter<'a, u32>),
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Neighbors::Bits(mask) => {
                if *mask == 0 {
                    None
                } else {
                    let v = mask.trailing_zeros() as usize;
                    *mask &= *mask - 1;
                    Some(v)
                }
            }
            Neighbors::Lists(iter) => iter.next().map(|&v| v as usize),
        }
    }
}

fn cross_index(ell: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < ell);
    // Row-major upper triangle: row i spans (ell-1-i) slots.
    i * (2 * ell - i - 1) / 2 + (j - i - 1)
}

/// Degree classes of a graph: distinct degrees d_1 < ... < d_l, class sizes,
/// cross-class edge counts, and the count of same-class edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePartition {
    degrees: Vec<usize>,
    class_sizes: Vec<usize>,
    cross: Vec<u64>,
    within_edges: u64,
}

impl DegreePartition {
    /// Number of distinct degrees.
    pub fn class_count(&self) -> usize {
        self.degrees.len()
    }

    /// Distinct degrees, strictly increasing.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Class sizes, aligned with `degrees()`.
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Edges joining class `i` to class `j` (i < j in degree order).
    pub fn cross_edges(&self, i: usize, j: usize) -> u64 {
        assert!(i < j && j < self.class_count());
        self.cross[cross_index(self.class_count(), i, j)]
    }

    /// Edges joining two vertices of the same class.
    pub fn within_edges(&self) -> u64 {
        self.within_edges
    }

    /// Total vertex count.
    pub fn order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// Total edge count reconstructed from cross and within counts.
    pub fn edge_count(&self) -> u64 {
        self.cross.iter().sum::<u64>() + self.within_edges
    }
}

/// Parameters of the join of a clique with an independent set: `k` clique
/// vertices joined to `n - k` pairwise non-adjacent vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JoinSpec {
    n: usize,
    k: usize,
}

impl JoinSpec {
    /// Requires 1 <= k <= n-2 so the result is connected and not complete.
    pub fn new(n: usize, k: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { n, max: MAX_ORDER });
        }
        if k < 1 || n < 3 || k > n - 2 {
            return Err(GraphError::InvalidCliquePart { n, k });
        }
        Ok(JoinSpec { n, k })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn clique_part(&self) -> usize {
        self.k
    }
}

/// Constructs the join graph: vertices 0..k form a clique and are adjacent
/// to everything; vertices k..n are pairwise non-adjacent.
pub fn make_join(spec: JoinSpec) -> Graph {
    let (n, k) = (spec.n, spec.k);
    let mut acc = EdgeAccumulator::new(n).expect("JoinSpec validated order");
    for u in 0..k {
        for v in (u + 1)..n {
            acc.add(u, v).expect("in range");
        }
    }
    acc.finish()
}

/// Recognizes joins by degree sequence alone: exactly `k` vertices of degree
/// n-1 and `n-k` of degree `k` force the join structure, because degree n-1
/// means adjacency to every other vertex.
pub fn recognize_join(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let degs = g.degrees();
    let k = degs.iter().filter(|&&d| d == n - 1).count();
    if k < 1 || k > n - 2 {
        return None;
    }
    if degs.iter().all(|&d| d == n - 1 || d == k) && degs.iter().filter(|&&d| d == k).count() == n - k
    {
        Some(k)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degrees() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn edgeless_graph_is_disconnected() {
        let g = Graph::from_edge_list(4, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(!g.is_connected());
    }

    #[test]
    fn star_construction() {
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn rejects_self_loop_and_range() {
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::from_edge_list(0, &[]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn join_5_2() {
        let g = make_join(JoinSpec::new(5, 2).unwrap());
        let mut degs = g.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 4, 4]);
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_connected());
    }

    #[test]
    fn join_boundary_k() {
        let n = 9;
        let g = make_join(JoinSpec::new(n, n - 2).unwrap());
        let mut degs = g.degrees();
        degs.sort_unstable();
        let expect: Vec<usize> =
            std::iter::repeat_n(n - 2, 2).chain(std::iter::repeat_n(n - 1, n - 2)).collect();
        assert_eq!(degs, expect);
    }

    #[test]
    fn join_k1_is_star() {
        let g = make_join(JoinSpec::new(4, 1).unwrap());
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn join_spec_rejects_bad_k() {
        assert!(JoinSpec::new(5, 0).is_err());
        assert!(JoinSpec::new(5, 4).is_err());
        assert!(JoinSpec::new(2, 1).is_err());
    }

    #[test]
    fn recognize_round_trip() {
        for n in 3..=40 {
            for k in 1..=(n - 2) {
                let g = make_join(JoinSpec::new(n, k).unwrap());
                assert_eq!(recognize_join(&g), Some(k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn recognize_rejects_regular_and_path() {
        assert_eq!(recognize_join(&Graph::cycle(5).unwrap()), None);
        assert_eq!(recognize_join(&Graph::path(4).unwrap()), None);
        assert_eq!(recognize_join(&Graph::complete(6).unwrap()), None);
    }

    #[test]
    fn partition_of_join_5_2() {
        let g = make_join(JoinSpec::new(5, 2).unwrap());
        let p = g.degree_partition();
        assert_eq!(p.degrees(), &[2, 4]);
        assert_eq!(p.class_sizes(), &[3, 2]);
        assert_eq!(p.cross_edges(0, 1), 6);
        assert_eq!(p.within_edges(), 1);
    }

    #[test]
    fn partition_of_regular_graph() {
        let p = Graph::cycle(6).unwrap().degree_partition();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.within_edges(), 6);
    }

    #[test]
    fn partition_of_p4() {
        let p = Graph::path(4).unwrap().degree_partition();
        assert_eq!(p.degrees(), &[1, 2]);
        assert_eq!(p.class_sizes(), &[2, 2]);
        assert_eq!(p.cross_edges(0, 1), 2);
        assert_eq!(p.within_edges(), 1);
    }

    #[test]
    fn toggle_is_involution() {
        let g = Graph::path(4).unwrap();
        let h = g.toggle_edge(0, 2).unwrap().toggle_edge(0, 2).unwrap();
        assert_eq!(g, h);
        assert!(g.toggle_edge(2, 2).is_err());
    }

    #[test]
    fn toggle_path_to_triangle() {
        let g = Graph::path(3).unwrap().toggle_edge(0, 2).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn toggle_removes_from_complete() {
        let g = Graph::complete(4).unwrap().toggle_edge(1, 2).unwrap();
        assert_eq!(g.degrees(), vec![3, 2, 2, 3]);
    }

    #[test]
    fn large_order_uses_list_layout() {
        let g = make_join(JoinSpec::new(100, 39).unwrap());
        assert_eq!(g.degree(0), 99);
        assert_eq!(g.degree(99), 39);
        assert!(g.is_connected());
        assert_eq!(recognize_join(&g), Some(39));
    }

    #[test]
    fn disconnected_two_edges() {
        let g = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
    }
}
