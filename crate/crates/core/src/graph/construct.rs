use super::{bits, low_mask, BkSpec, Graph, MAX_ORDER};
use crate::{Error, Result};

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        Err(Error::UnsupportedOrder {
            order,
            limit: MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        g.adj[u] = g.vertex_mask() & !(1 << u);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("a cycle needs at least 3 vertices"));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// `K_{1,r}` with the center at vertex 0.
pub fn star(r: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=r).map(|i| (0, i)).collect();
    Graph::from_edges(r + 1, &edges)
}

/// `K_{n_1,...,n_l}`: vertices are numbered part by part; two vertices are
/// adjacent iff they lie in different parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::invalid("complete multipartite graph needs a part"));
    }
    if parts.contains(&0) {
        return Err(Error::invalid("every part must be positive"));
    }
    let order: usize = parts.iter().sum();
    check_order(order)?;
    let mut g = Graph::empty(order)?;
    let all = g.vertex_mask();
    let mut start = 0;
    for &p in parts {
        let block = low_mask(p) << start;
        for v in start..start + p {
            g.adj[v] = all & !block;
        }
        start += p;
    }
    Ok(g)
}

/// The two-clique graph `G_n`.
///
/// Vertices `0..h` are `v_1..v_h` (`h = ceil(n/2)`) and `h..n` are
/// `w_1..w_m` (`m = floor(n/2)`). Both sides are cliques, and `v_i ~ w_j`
/// exactly when `i + j >= m + 2`, which yields the nested chain
/// `N_W(v_1) = {} ⊂ N_W(v_2) = {w_m} ⊂ ... ` in both parities. For odd `n`,
/// `v_h` is adjacent to all of `W`.
pub fn gn(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid("G_n is defined for n >= 2"));
    }
    check_order(n)?;
    let h = n.div_ceil(2);
    let m = n / 2;
    let mut g = Graph::empty(n)?;
    for a in 0..h {
        for b in a + 1..h {
            g.set_edge(a, b, true);
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            g.set_edge(h + a, h + b, true);
        }
    }
    for i in 1..=h {
        for j in 1..=m {
            if i + j >= m + 2 {
                g.set_edge(i - 1, h + j - 1, true);
            }
        }
    }
    Ok(g)
}

/// Vertex of `G_k` that carries part `position` of a `B_k` spec.
///
/// With `s = floor(k/2)`, positions `0..s` sit on `v_1..v_s`, positions
/// `s..2s` on `w_1..w_s`, and for odd `k` the final position on `v_{s+1}`,
/// the `v`-vertex adjacent to every `w`.
pub fn gn_vertex_for_position(k: usize, position: usize) -> usize {
    let s = k / 2;
    let h = k.div_ceil(2);
    debug_assert!(position < k);
    if position < s {
        position
    } else if position < 2 * s {
        h + (position - s)
    } else {
        s
    }
}

/// Generalized lexicographic product `base[K_{sizes[0]}, ..., K_{sizes[n-1]}]`.
///
/// Vertex `j` of `base` becomes a clique of `sizes[j]` vertices; blocks are
/// numbered consecutively in base order.
pub fn lex_product(base: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != base.order() {
        return Err(Error::invalid(format!(
            "{} block sizes for a base of order {}",
            sizes.len(),
            base.order()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::invalid("block sizes must be positive"));
    }
    let order: usize = sizes.iter().sum();
    check_order(order)?;
    let mut block_mask = Vec::with_capacity(sizes.len());
    let mut start = 0;
    for &t in sizes {
        block_mask.push(low_mask(t) << start);
        start += t;
    }
    let mut g = Graph::empty(order)?;
    let mut v = 0;
    for (j, &t) in sizes.iter().enumerate() {
        let outside = bits(base.neighbor_mask(j)).fold(0u64, |m, i| m | block_mask[i]);
        for _ in 0..t {
            g.adj[v] = outside | (block_mask[j] & !(1 << v));
            v += 1;
        }
    }
    Ok(g)
}

/// `B_k(n_1, ..., n_k) = G_k[K_{n_1}, ..., K_{n_k}]` with the part layout of
/// [`gn_vertex_for_position`].
pub fn realize_bk(spec: &BkSpec) -> Result<Graph> {
    let k = spec.k();
    let mut sizes = vec![0; k];
    for (pos, &p) in spec.parts().iter().enumerate() {
        sizes[gn_vertex_for_position(k, pos)] = p;
    }
    lex_product(&gn(k)?, &sizes)
}

/// `K_{1,r}(u) ⊙^k inner`: a star with center `u` (vertex 0) and leaves
/// `1..=r`, followed by the vertices of `inner`; `u` is also joined to each
/// vertex of `attach` (indices into `inner`).
pub fn k_joining(r: usize, inner: &Graph, attach: &[usize]) -> Result<Graph> {
    if r == 0 {
        return Err(Error::invalid("the star needs at least one leaf"));
    }
    if attach.is_empty() {
        return Err(Error::invalid("attach set must be non-empty"));
    }
    if let Some(&bad) = attach.iter().find(|&&v| v >= inner.order()) {
        return Err(Error::invalid(format!("attach vertex {bad} out of range")));
    }
    let mut g = star(r)?.disjoint_union(inner)?;
    for &a in attach {
        g.set_edge(0, r + 1 + a, true);
    }
    Ok(g)
}
