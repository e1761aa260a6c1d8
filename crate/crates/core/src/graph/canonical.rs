use super::{bits, lex_product, Graph};

/// Quotient of a graph by the closed-twin relation `u ρ v` (`u ~ v` and
/// `N(u) \ v = N(v) \ u`, equivalently `N[u] = N[v]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    /// Induced subgraph on one representative per class, in ascending
    /// representative order.
    pub canonical: Graph,
    /// Size of each class, aligned with the vertices of `canonical`.
    pub class_sizes: Vec<usize>,
    /// Lowest vertex of each class.
    pub representatives: Vec<usize>,
    /// Members of each class, ascending.
    pub classes: Vec<Vec<usize>>,
}

impl CanonicalDecomposition {
    /// `canonical[K_{n_1}, ..., K_{n_k}]`; isomorphic to the original graph.
    pub fn reconstruct(&self) -> Graph {
        lex_product(&self.canonical, &self.class_sizes)
            .expect("class sizes are positive and match the quotient")
    }

    /// Permutation `perm[old] = new` carrying the original graph onto
    /// [`reconstruct`](Self::reconstruct), which numbers classes blockwise.
    pub fn blockwise_relabeling(&self) -> Vec<usize> {
        let n = self.class_sizes.iter().sum();
        let mut perm = vec![0; n];
        let mut next = 0;
        for class in &self.classes {
            for &v in class {
                perm[v] = next;
                next += 1;
            }
        }
        perm
    }
}

pub fn canonical_decomposition(g: &Graph) -> CanonicalDecomposition {
    let mut unassigned = g.vertex_mask();
    let mut classes = Vec::new();
    while unassigned != 0 {
        let v = unassigned.trailing_zeros() as usize;
        let closed = g.closed_neighbor_mask(v);
        let class = bits(unassigned)
            .filter(|&u| g.closed_neighbor_mask(u) == closed)
            .fold(0u64, |m, u| m | 1 << u);
        unassigned &= !class;
        classes.push(bits(class).collect::<Vec<_>>());
    }
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let canonical = g
        .induced_subgraph(&representatives)
        .expect("representatives are distinct vertices");
    CanonicalDecomposition {
        canonical,
        class_sizes: classes.iter().map(Vec::len).collect(),
        representatives,
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, find_isomorphism, gn, path, realize_bk, BkSpec};

    #[test]
    fn complete_graph_collapses() {
        let d = canonical_decomposition(&complete(5).unwrap());
        assert_eq!(d.canonical, complete(1).unwrap());
        assert_eq!(d.class_sizes, vec![5]);
    }

    #[test]
    fn path_is_already_canonical() {
        let d = canonical_decomposition(&path(4).unwrap());
        assert_eq!(d.canonical, path(4).unwrap());
        assert_eq!(d.class_sizes, vec![1, 1, 1, 1]);
    }

    #[test]
    fn nonadjacent_twins_stay_apart() {
        let star = crate::graph::star(3).unwrap();
        let d = canonical_decomposition(&star);
        assert_eq!(d.class_sizes, vec![1, 1, 1, 1]);
    }

    #[test]
    fn bk_reduces_to_gk() {
        let spec: BkSpec = "B4(3,2;3,2)".parse().unwrap();
        let g = realize_bk(&spec).unwrap();
        let d = canonical_decomposition(&g);
        let map = find_isomorphism(&gn(4).unwrap(), &d.canonical).unwrap();
        // sizes read back in G_4 vertex order v1, v2, w1, w2
        let sizes: Vec<usize> = map.iter().map(|&c| d.class_sizes[c]).collect();
        assert_eq!(sizes, vec![3, 2, 3, 2]);
        let relabeled = g.relabel(&d.blockwise_relabeling()).unwrap();
        assert_eq!(relabeled, d.reconstruct());
    }

    #[test]
    fn idempotent() {
        let spec: BkSpec = "B7(1,2,1;3,1,1;2)".parse().unwrap();
        let d = canonical_decomposition(&realize_bk(&spec).unwrap());
        let again = canonical_decomposition(&d.canonical);
        assert_eq!(again.canonical, d.canonical);
        assert!(again.class_sizes.iter().all(|&s| s == 1));
    }
}
