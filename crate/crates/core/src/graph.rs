//! Finite simple graphs with stable vertex order.
//!
//! The vertex order is part of the data: it is the reference indexing used by
//! states, canonical initial states and the generators of a right-angled
//! Coxeter group.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
}

pub(crate) fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Graph {
    pub fn new<S: AsRef<str>>(labels: Vec<String>, edges: &[(S, S)]) -> Result<Self> {
        let index = build_index(&labels)?;
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            idx_edges.push((ia, ib));
        }
        Self::with_index(labels, index, idx_edges)
    }

    pub fn from_indices(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let index = build_index(&labels)?;
        Self::with_index(labels, index, edges)
    }

    fn with_index(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::SelfLoop(labels[a].clone()));
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { labels, index, adj })
    }

    /// The cycle `x1 - x2 - ... - xk - x1`.
    pub fn cycle(k: usize) -> Self {
        let labels = (1..=k).map(|i| format!("x{i}")).collect();
        Self::from_indices(labels, (0..k).map(|i| (i, (i + 1) % k))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("p{i}")).collect();
        Self::from_indices(labels, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("k{i}")).collect();
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::from_indices(labels, edges).expect("valid complete graph")
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// Connected components of the subgraph induced on `mask`.
    pub fn induced_components(&self, mask: &FixedBitSet) -> Vec<Vec<usize>> {
        let mut seen = FixedBitSet::with_capacity(self.n());
        let mut comps = Vec::new();
        for start in mask.ones() {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].intersection(mask) {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        let mut all = FixedBitSet::with_capacity(self.n());
        all.insert_range(..);
        self.induced_components(&all).len() <= 1
    }

    /// Subgraph induced on `vertices`, keeping their relative order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let labels = sorted.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in sorted.iter().enumerate() {
            for w in self.adj[u].ones() {
                if let Some(&j) = pos.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Graph::from_indices(labels, edges).expect("induced subgraph is simple")
    }

    /// All nonempty cliques, ordered by size and then lexicographically.
    pub fn cliques(&self, budget: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for v in 0..self.n() {
            let mut cand = self.adj[v].clone();
            cand.set_range(..v + 1, false);
            stack.push(v);
            self.extend_cliques(&mut stack, &cand, &mut out, budget)?;
            stack.pop();
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    fn extend_cliques(
        &self,
        stack: &mut Vec<usize>,
        cand: &FixedBitSet,
        out: &mut Vec<Vec<usize>>,
        budget: usize,
    ) -> Result<()> {
        if out.len() >= budget {
            return Err(Error::BudgetExceeded {
                what: "clique enumeration",
                needed: out.len() as u128 + 1,
                budget: budget as u128,
            });
        }
        out.push(stack.clone());
        for w in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(&self.adj[w]);
            next.set_range(..w + 1, false);
            stack.push(w);
            self.extend_cliques(stack, &next, out, budget)?;
            stack.pop();
        }
        Ok(())
    }

    /// Number of cliques of each size; index 0 holds the empty clique.
    pub fn clique_counts(&self, budget: usize) -> Result<Vec<u64>> {
        let mut counts = vec![1u64];
        for c in self.cliques(budget)? {
            if counts.len() <= c.len() {
                counts.resize(c.len() + 1, 0);
            }
            counts[c.len()] += 1;
        }
        Ok(counts)
    }

    /// Maximal cliques (Bron–Kerbosch with pivoting), each sorted, list sorted.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut out = Vec::new();
        let mut p = FixedBitSet::with_capacity(n);
        p.insert_range(..);
        let x = FixedBitSet::with_capacity(n);
        let mut r = Vec::new();
        self.bron_kerbosch(&mut r, p, x, &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: FixedBitSet,
        mut x: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_clear() {
            if x.is_clear() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = p
            .ones()
            .chain(x.ones())
            .max_by_key(|&u| self.adj[u].intersection(&p).count())
            .expect("p nonempty");
        let mut cands = p.clone();
        cands.difference_with(&self.adj[pivot]);
        for v in cands.ones().collect::<Vec<_>>() {
            let mut np = p.clone();
            np.intersect_with(&self.adj[v]);
            let mut nx = x.clone();
            nx.intersect_with(&self.adj[v]);
            r.push(v);
            self.bron_kerbosch(r, np, nx, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }

    /// An induced cycle of length between 4 and `max_len` inclusive, if one exists.
    pub fn chordless_cycle(&self, max_len: usize) -> Option<Vec<usize>> {
        for len in 4..=max_len {
            for v0 in 0..self.n() {
                let mut path = vec![v0];
                if let Some(c) = self.grow_induced(&mut path, len) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Induced cycles of length 4 passing through `v`.
    pub fn chordless_four_cycle_at(&self, v: usize) -> Option<[usize; 4]> {
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &c in &nbrs[i + 1..] {
                if self.adjacent(a, c) {
                    continue;
                }
                let mut common = self.adj[a].clone();
                common.intersect_with(&self.adj[c]);
                for b in common.ones() {
                    if b != v && !self.adjacent(b, v) {
                        return Some([v, a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn grow_induced(&self, path: &mut Vec<usize>, len: usize) -> Option<Vec<usize>> {
        let m = path.len();
        if m == len {
            return Some(path.clone());
        }
        let v0 = path[0];
        let last = path[m - 1];
        for u in self.adj[last].ones() {
            if u <= v0 || path.contains(&u) {
                continue;
            }
            let closing = m == len - 1;
            if closing && !self.adjacent(u, v0) {
                continue;
            }
            let inner_start = if closing { 1 } else { 0 };
            if m >= 2 && path[inner_start..m - 1].iter().any(|&p| self.adjacent(u, p)) {
                continue;
            }
            path.push(u);
            if let Some(c) = self.grow_induced(path, len) {
                return Some(c);
            }
            path.pop();
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.adjacent(0, 4));
        assert!(!c5.adjacent(0, 2));
        assert!(c5.is_connected());
    }

    #[test]
    fn rejects_self_loops_and_unknown_labels() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(
            Graph::new(labels.clone(), &[("a", "a")]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            Graph::new(labels, &[("a", "z")]),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn chordless_cycles() {
        assert_eq!(Graph::cycle(4).chordless_cycle(4).map(|c| c.len()), Some(4));
        assert!(Graph::cycle(5).chordless_cycle(4).is_none());
        assert_eq!(Graph::cycle(5).chordless_cycle(5).map(|c| c.len()), Some(5));
        assert!(Graph::complete(5).chordless_cycle(5).is_none());
        assert!(Graph::cycle(4).chordless_four_cycle_at(0).is_some());
    }

    #[test]
    fn clique_enumeration_matches_counts() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.clique_counts(1000).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(k4.maximal_cliques(), vec![vec![0, 1, 2, 3]]);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.clique_counts(1000).unwrap(), vec![1, 5, 5]);
        assert_eq!(c5.maximal_cliques().len(), 5);
        assert!(matches!(k4.cliques(3), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn induced_components_of_path() {
        let p = Graph::path(3);
        let mut mask = FixedBitSet::with_capacity(3);
        mask.insert(0);
        mask.insert(2);
        assert_eq!(p.induced_components(&mask), vec![vec![0], vec![2]]);
    }
}
