//! The three congruent-vertex transformations. Adding a congruent vertex
//! keeps `p` and `n_neg` and raises the nullity by one; deleting one lowers
//! it by one. Every operation re-derives both inertias exactly and returns
//! them in a [`TransformCertificate`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, Graph};
use crate::spectra::{inertia_exact, Inertia};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TransformKind {
    /// `u`, `v` non-adjacent with `N(u) = N(v)`.
    I,
    /// `u`, `v`, `w` independent with `N(u) = N(v) ⊎ N(w)`.
    II,
    /// `u` lies on a congruent quadrangle.
    III,
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TransformKind::I => "I",
            TransformKind::II => "II",
            TransformKind::III => "III",
        })
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "1" | "I" => Ok(TransformKind::I),
            "2" | "II" => Ok(TransformKind::II),
            "3" | "III" => Ok(TransformKind::III),
            other => Err(Error::invalid(format!(
                "unknown transformation kind '{other}'"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operation {
    Add,
    Delete,
}

/// Witness and inertia on both sides of one transformation.
///
/// The witness always starts with the added or deleted vertex `u`:
/// `(u, v)` for I, `(u, v, w)` for II and the quadrangle `(u, v, x, y)` for
/// III. Indices refer to the larger of the two graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformCertificate {
    pub kind: TransformKind,
    pub operation: Operation,
    pub witness: Vec<usize>,
    pub before: Inertia,
    pub after: Inertia,
}

impl TransformCertificate {
    /// Whether the recorded inertias differ exactly as the operation requires.
    pub fn holds(&self) -> bool {
        match self.operation {
            Operation::Add => self.after == self.before.with_extra_zero(),
            Operation::Delete => self.before == self.after.with_extra_zero(),
        }
    }
}

fn certify(
    kind: TransformKind,
    operation: Operation,
    witness: Vec<usize>,
    before: &Graph,
    after: &Graph,
) -> Result<TransformCertificate> {
    let cert = TransformCertificate {
        kind,
        operation,
        witness,
        before: inertia_exact(before),
        after: inertia_exact(after),
    };
    if cert.holds() {
        Ok(cert)
    } else {
        Err(Error::Internal(format!(
            "{kind}-type {operation:?} changed inertia {} -> {}",
            cert.before, cert.after
        )))
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "vertex {v} out of range for order {}",
            g.order()
        )))
    }
}

/// Non-adjacent pairs `(u, v)`, `u < v`, with `N(u) = N(v)`, ascending.
pub fn find_type1(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.adjacent(u, v) && g.neighbor_mask(u) == g.neighbor_mask(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Adds `u` with `N(u) = N(v)`. The new vertex gets index `g.order()`.
pub fn add_type1(g: &Graph, v: usize) -> Result<(Graph, TransformCertificate)> {
    check_vertex(g, v)?;
    let h = g.add_vertex(g.neighbor_mask(v))?;
    let u = g.order();
    let cert = certify(TransformKind::I, Operation::Add, vec![u, v], g, &h)?;
    Ok((h, cert))
}

/// Triples `(u, v, w)`, `v < w`, of independent vertices with
/// `N(v) ∩ N(w) = ∅` and `N(u) = N(v) ∪ N(w)`, ascending.
pub fn find_type2(g: &Graph) -> Vec<(usize, usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            for w in v + 1..n {
                if u == v || u == w {
                    continue;
                }
                if is_type2(g, u, v, w) {
                    out.push((u, v, w));
                }
            }
        }
    }
    out
}

fn is_type2(g: &Graph, u: usize, v: usize, w: usize) -> bool {
    let (nu, nv, nw) = (g.neighbor_mask(u), g.neighbor_mask(v), g.neighbor_mask(w));
    let trio = 1u64 << u | 1 << v | 1 << w;
    g.is_independent(trio) && nv & nw == 0 && nu == nv | nw
}

/// Adds `u` with `N(u) = N(v) ∪ N(w)`; requires `v ≁ w` and disjoint neighborhoods.
pub fn add_type2(g: &Graph, v: usize, w: usize) -> Result<(Graph, TransformCertificate)> {
    check_vertex(g, v)?;
    check_vertex(g, w)?;
    if v == w {
        return Err(Error::invalid("v and w must be distinct"));
    }
    if g.adjacent(v, w) {
        return Err(Error::invalid(format!("{v} and {w} are adjacent")));
    }
    let (nv, nw) = (g.neighbor_mask(v), g.neighbor_mask(w));
    if nv & nw != 0 {
        return Err(Error::invalid(format!(
            "neighborhoods of {v} and {w} share {:?}",
            bits(nv & nw).collect::<Vec<_>>()
        )));
    }
    let h = g.add_vertex(nv | nw)?;
    let u = g.order();
    let cert = certify(TransformKind::II, Operation::Add, vec![u, v, w], g, &h)?;
    Ok((h, cert))
}

/// The four labelings of a quadrangle `u-v-x-y-u` that keep the pairing of
/// the opposite edges `uv` and `xy`.
fn quadrangle_images(q: [usize; 4]) -> [[usize; 4]; 4] {
    let [u, v, x, y] = q;
    [[u, v, x, y], [x, y, u, v], [v, u, y, x], [y, x, v, u]]
}

/// Whether `u-v-x-y-u` is an induced 4-cycle whose opposite edges `uv` and
/// `xy` are congruent: `N(u) \ {v,y} = N(v) \ {u,x}` and
/// `N(x) \ {y,v} = N(y) \ {x,u}`.
pub fn is_congruent_quadrangle(g: &Graph, q: [usize; 4]) -> bool {
    let [u, v, x, y] = q;
    let n = g.order();
    if q.iter().any(|&a| a >= n) || (1u64 << u | 1 << v | 1 << x | 1 << y).count_ones() != 4 {
        return false;
    }
    let cycle = g.adjacent(u, v) && g.adjacent(v, x) && g.adjacent(x, y) && g.adjacent(y, u);
    if !cycle || g.adjacent(u, x) || g.adjacent(v, y) {
        return false;
    }
    let without = |a: usize, b: usize, c: usize| g.neighbor_mask(a) & !(1u64 << b | 1 << c);
    without(u, v, y) == without(v, u, x) && without(x, y, v) == without(y, x, u)
}

/// Congruent quadrangles `(u, v, x, y)`, one per cycle and pairing of
/// opposite edges, each reported as its least labeling, ascending.
pub fn find_type3(g: &Graph) -> Vec<[usize; 4]> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in g.neighbors(u).filter(|&v| v > u) {
            for x in g.neighbors(v).filter(|&x| x > u && !g.adjacent(u, x)) {
                for y in g.neighbors(x).filter(|&y| y > u && y != v) {
                    let q = [u, v, x, y];
                    if is_congruent_quadrangle(g, q)
                        && quadrangle_images(q).iter().min() == Some(&q)
                    {
                        out.push(q);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Adds `u` with `N(u) = (N(v) \ {x}) ∪ {y, v}` so that `u-v-x-y-u` becomes a
/// congruent quadrangle. Requires `v ~ x ~ y`, `v ≁ y` and
/// `N(x) \ {y, v} = N(y) \ {x}`; the quadrangle is re-checked after insertion.
pub fn add_type3(g: &Graph, v: usize, x: usize, y: usize) -> Result<(Graph, TransformCertificate)> {
    for a in [v, x, y] {
        check_vertex(g, a)?;
    }
    if !(g.adjacent(v, x) && g.adjacent(x, y)) {
        return Err(Error::invalid(format!("{v}-{x}-{y} is not a path")));
    }
    if v == y || g.adjacent(v, y) {
        return Err(Error::invalid(format!(
            "{v} and {y} must be distinct and non-adjacent"
        )));
    }
    let nx = g.neighbor_mask(x) & !(1u64 << y | 1 << v);
    let ny = g.neighbor_mask(y) & !(1u64 << x);
    if nx != ny {
        return Err(Error::invalid(format!(
            "N({x}) \\ {{{y},{v}}} differs from N({y}) \\ {{{x}}}"
        )));
    }
    let nu = (g.neighbor_mask(v) & !(1u64 << x)) | 1 << y | 1 << v;
    let h = g.add_vertex(nu)?;
    let u = g.order();
    let q = [u, v, x, y];
    if !is_congruent_quadrangle(&h, q) {
        return Err(Error::invalid(format!(
            "({u},{v},{x},{y}) is not a congruent quadrangle after insertion"
        )));
    }
    let cert = certify(TransformKind::III, Operation::Add, q.to_vec(), g, &h)?;
    Ok((h, cert))
}

/// Deletes `u`, which must be congruent of the given kind in `g`.
pub fn delete_congruent(
    g: &Graph,
    u: usize,
    kind: TransformKind,
) -> Result<(Graph, TransformCertificate)> {
    check_vertex(g, u)?;
    let witness = match kind {
        TransformKind::I => find_type1(g).into_iter().find_map(|(a, b)| {
            if a == u {
                Some(vec![a, b])
            } else if b == u {
                Some(vec![b, a])
            } else {
                None
            }
        }),
        TransformKind::II => find_type2(g)
            .into_iter()
            .find(|&(a, _, _)| a == u)
            .map(|(a, b, c)| vec![a, b, c]),
        TransformKind::III => find_type3(g).into_iter().find_map(|q| {
            quadrangle_images(q)
                .into_iter()
                .find(|img| img[0] == u)
                .map(|img| img.to_vec())
        }),
    };
    let Some(witness) = witness else {
        return Err(Error::invalid(format!(
            "vertex {u} is not {kind}-type congruent"
        )));
    };
    let h = g.delete_vertex(u)?;
    let cert = certify(kind, Operation::Delete, witness, g, &h)?;
    Ok((h, cert))
}
