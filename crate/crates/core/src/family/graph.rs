use std::collections::BTreeSet;

use super::FamilyError;

/// Simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, FamilyError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(FamilyError::Invalid(format!("self-loop on vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(FamilyError::Invalid(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(FamilyError::Invalid(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// Star with centre 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (0, i))).expect("valid star")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Subgraph induced on `vertices`, relabelled by position in the list.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = BTreeSet::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.insert((i, j));
                }
            }
        }
        Graph {
            vertex_count: vertices.len(),
            edges,
        }
    }

    /// Neighbourhood bitmasks; requires at most 64 vertices.
    pub fn neighbour_masks(&self) -> Vec<u64> {
        assert!(self.vertex_count <= 64, "bitmask form needs at most 64 vertices");
        let mut masks = vec![0u64; self.vertex_count];
        for &(a, b) in &self.edges {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        masks
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn induced_relabels_by_position() {
        let c4 = Graph::cycle(4);
        let h = c4.induced(&[3, 0, 2]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }
}
