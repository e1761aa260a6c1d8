use super::{bits, Graph};
use crate::{Error, Result};

/// Largest order accepted by [`isomorphic`].
pub const ISOMORPHIC_MAX_ORDER: usize = 10;
/// Largest pattern accepted by [`contains_induced`] and [`find_induced`].
pub const INDUCED_PATTERN_MAX_ORDER: usize = 14;
/// Largest order for which [`canonical_code`] fits in a `u64`.
pub const CANONICAL_CODE_MAX_ORDER: usize = 11;

/// Sorted neighbor degrees; equal for corresponding vertices under any isomorphism.
fn neighbor_degree_profile(g: &Graph, v: usize) -> Vec<usize> {
    let mut d: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
    d.sort_unstable();
    d
}

/// Pattern vertices in search order: each next vertex has the most already
/// placed neighbors, ties broken by larger degree then lower index.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbor_mask(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex exists");
        placed |= 1 << best;
        order.push(best);
    }
    order
}

struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    order: Vec<usize>,
    candidates: Vec<u64>,
    map: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        // host images of the placed pattern neighbors of p
        let expected = self.order[..depth]
            .iter()
            .filter(|&&q| self.pattern.adjacent(p, q))
            .fold(0u64, |m, &q| m | 1 << self.map[q]);
        for h in bits(self.candidates[p] & !used) {
            if self.host.neighbor_mask(h) & used != expected {
                continue;
            }
            self.map[p] = h;
            if self.extend(depth + 1, used | 1 << h) {
                return true;
            }
        }
        false
    }
}

/// Backtracking embedding of `pattern` into `host` as an induced subgraph.
/// With `exact` set the orders must agree and the result is an isomorphism.
fn embed(pattern: &Graph, host: &Graph, exact: bool) -> Option<Vec<usize>> {
    let (pn, hn) = (pattern.order(), host.order());
    if pn > hn || (exact && pn != hn) {
        return None;
    }
    if pn == 0 {
        return Some(Vec::new());
    }
    let mut candidates = vec![0u64; pn];
    if exact {
        if pattern.edge_count() != host.edge_count() {
            return None;
        }
        let host_profiles: Vec<_> = (0..hn).map(|h| neighbor_degree_profile(host, h)).collect();
        for (p, cand) in candidates.iter_mut().enumerate() {
            let prof = neighbor_degree_profile(pattern, p);
            *cand = (0..hn)
                .filter(|&h| host_profiles[h] == prof)
                .fold(0, |m, h| m | 1 << h);
        }
    } else {
        for (p, cand) in candidates.iter_mut().enumerate() {
            let d = pattern.degree(p);
            *cand = (0..hn)
                .filter(|&h| host.degree(h) >= d)
                .fold(0, |m, h| m | 1 << h);
        }
    }
    if candidates.contains(&0) {
        return None;
    }
    let mut m = Matcher {
        pattern,
        host,
        order: search_order(pattern),
        candidates,
        map: vec![usize::MAX; pn],
    };
    m.extend(0, 0).then_some(m.map)
}

/// An isomorphism `a -> b` as `map[v_a] = v_b`, or `None`.
///
/// Uncapped backtracking with degree and neighbor-degree pruning; fast for
/// the irregular graphs used here, exponential in the worst case.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    embed(a, b, true)
}

/// Exact isomorphism test for graphs of order at most [`ISOMORPHIC_MAX_ORDER`].
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    let order = a.order().max(b.order());
    if order > ISOMORPHIC_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order,
            limit: ISOMORPHIC_MAX_ORDER,
        });
    }
    Ok(find_isomorphism(a, b).is_some())
}

/// An induced embedding of `pattern` into `host` as `map[v_pattern] = v_host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    if pattern.order() > INDUCED_PATTERN_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: pattern.order(),
            limit: INDUCED_PATTERN_MAX_ORDER,
        });
    }
    Ok(embed(pattern, host, false))
}

/// A sorted vertex subset `S` of `host` with `host[S] ≅ pattern`, if any.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    Ok(find_induced(host, pattern)?.map(|mut s| {
        s.sort_unstable();
        s
    }))
}

/// Canonical code: equal for two graphs of the same order iff they are isomorphic.
///
/// The code is the maximum, over all vertex orderings compatible with the
/// (degree, neighbor-degree profile) ranking, of the upper-triangle bit string
/// read column by column.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > CANONICAL_CODE_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n,
            limit: CANONICAL_CODE_MAX_ORDER,
        });
    }
    if n < 2 {
        return Ok(0);
    }
    let mut keyed: Vec<((usize, Vec<usize>), usize)> = (0..n)
        .map(|v| ((g.degree(v), neighbor_degree_profile(g, v)), v))
        .collect();
    keyed.sort();
    // cell_of_position[i] = mask of vertices allowed at position i
    let mut allowed = vec![0u64; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        let cell = keyed[i..j].iter().fold(0u64, |m, (_, v)| m | 1 << v);
        for slot in &mut allowed[i..j] {
            *slot = cell;
        }
        i = j;
    }
    let mut search = CodeSearch {
        g,
        allowed,
        placed: vec![0; n],
        best: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    search.run(0, 0);
    let code = search
        .best
        .iter()
        .enumerate()
        .skip(1)
        .fold(0u64, |acc, (j, &col)| (acc << j) | col);
    Ok(code)
}

struct CodeSearch<'a> {
    g: &'a Graph,
    allowed: Vec<u64>,
    placed: Vec<usize>,
    /// column values of the best ordering found so far
    best: Vec<u64>,
    prefix: Vec<u64>,
}

impl CodeSearch<'_> {
    fn run(&mut self, depth: usize, used: u64) {
        let n = self.g.order();
        if depth == n {
            if self.prefix > self.best {
                self.best = self.prefix.clone();
            }
            return;
        }
        for v in bits(self.allowed[depth] & !used) {
            // column `depth`: adjacency to positions 0..depth, MSB = position 0
            let col = (0..depth).fold(0u64, |c, i| {
                (c << 1) | self.g.adjacent(v, self.placed[i]) as u64
            });
            self.prefix.push(col);
            // columns have fixed widths, so comparing column vectors
            // lexicographically compares the partial bit strings
            if self.best.is_empty() || self.prefix[..] >= self.best[..=depth] {
                self.placed[depth] = v;
                self.run(depth + 1, used | 1 << v);
            }
            self.prefix.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, gn, path, star};

    fn reversed(g: &Graph) -> Graph {
        let n = g.order();
        let perm: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
        g.relabel(&perm).unwrap()
    }

    #[test]
    fn isomorphic_examples() {
        let p4 = path(4).unwrap();
        assert!(isomorphic(&p4, &reversed(&p4)).unwrap());
        assert!(!isomorphic(&star(3).unwrap(), &p4).unwrap());
        assert!(isomorphic(&gn(4).unwrap(), &p4).unwrap());
        assert!(!isomorphic(
            &cycle(6).unwrap(),
            &cycle(3)
                .unwrap()
                .disjoint_union(&cycle(3).unwrap())
                .unwrap()
        )
        .unwrap());
        assert!(matches!(
            isomorphic(&gn(11).unwrap(), &gn(11).unwrap()),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(find_isomorphism(&gn(13).unwrap(), &reversed(&gn(13).unwrap())).is_some());
    }

    #[test]
    fn isomorphism_map_is_valid() {
        let g = gn(9).unwrap();
        let h = reversed(&g);
        let map = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.adjacent(map[u], map[v]));
        }
        assert_eq!(g.edge_count(), h.edge_count());
    }

    #[test]
    fn contains_induced_examples() {
        assert!(contains_induced(&gn(6).unwrap(), &gn(5).unwrap())
            .unwrap()
            .is_some());
        let two_k1 = Graph::empty(2).unwrap();
        assert!(contains_induced(&complete(4).unwrap(), &two_k1)
            .unwrap()
            .is_none());
        assert!(contains_induced(&path(2).unwrap(), &path(3).unwrap())
            .unwrap()
            .is_none());
        let s = contains_induced(&cycle(5).unwrap(), &path(4).unwrap())
            .unwrap()
            .unwrap();
        let sub = cycle(5).unwrap().induced_subgraph(&s).unwrap();
        assert!(isomorphic(&sub, &path(4).unwrap()).unwrap());
        assert!(contains_induced(&gn(16).unwrap(), &gn(15).unwrap()).is_err());
    }

    #[test]
    fn canonical_code_separates_small_graphs() {
        let a = complete_multipartite(&[1, 3]).unwrap();
        let b = path(4).unwrap();
        assert_ne!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
        assert_eq!(
            canonical_code(&b).unwrap(),
            canonical_code(&reversed(&b)).unwrap()
        );
        assert_eq!(canonical_code(&complete(3).unwrap()).unwrap(), 0b111);
    }

    #[test]
    fn canonical_code_counts_isomorphism_classes() {
        // numbers of unlabeled graphs on 1..=6 vertices
        let expected = [1usize, 2, 4, 11, 34, 156];
        for (idx, &count) in expected.iter().enumerate() {
            let n = idx + 1;
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut codes = std::collections::HashSet::new();
            for bitset in 0u64..(1 << pairs.len()) {
                let edges: Vec<_> = bits(bitset).map(|b| pairs[b]).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                codes.insert(canonical_code(&g).unwrap());
            }
            assert_eq!(codes.len(), count, "order {n}");
        }
    }
}
