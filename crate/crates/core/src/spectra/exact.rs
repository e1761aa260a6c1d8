use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Inertia, Rational};
use crate::graph::Graph;

/// Exact inertia of the adjacency matrix of `g`.
pub fn inertia_exact(g: &Graph) -> Inertia {
    let n = g.order();
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|u| (0..n).map(|v| g.adjacent(u, v) as i64).collect())
        .collect();
    inertia_of_matrix(&rows)
}

/// Exact inertia of a symmetric integer matrix by congruence reduction.
///
/// A nonzero diagonal pivot (largest magnitude, lowest index on ties) is
/// eliminated and contributes its sign. When the remaining diagonal is zero,
/// the first nonzero off-diagonal `a_ij` (lexicographically) forms the block
/// `[[0, a], [a, 0]]`, which contributes one positive and one negative
/// eigenvalue. A remaining zero block contributes to the nullity.
///
/// # Panics
///
/// If `m` is not square and symmetric.
pub fn inertia_of_matrix(m: &[Vec<i64>]) -> Inertia {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..i {
            assert_eq!(row[j], m[j][i], "matrix must be symmetric");
        }
    }
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia::default();

    loop {
        let pivot = active.iter().copied().filter(|&i| !a[i][i].is_zero()).fold(
            None::<usize>,
            |best, i| match best {
                Some(b) if a[b][b].abs() >= a[i][i].abs() => Some(b),
                _ => Some(i),
            },
        );
        if let Some(i) = pivot {
            if a[i][i].is_positive() {
                inertia.p += 1;
            } else {
                inertia.n_neg += 1;
            }
            active.retain(|&x| x != i);
            let d = a[i][i].clone();
            for &r in &active {
                if a[r][i].is_zero() {
                    continue;
                }
                let f = &a[r][i] / &d;
                for &s in &active {
                    if !a[i][s].is_zero() {
                        let delta = &f * &a[i][s];
                        a[r][s] -= delta;
                    }
                }
            }
            continue;
        }

        let block = active.iter().enumerate().find_map(|(pos, &i)| {
            active[pos + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = block else {
            inertia.eta += active.len();
            return inertia;
        };
        inertia.p += 1;
        inertia.n_neg += 1;
        active.retain(|&x| x != i && x != j);
        // Schur complement of [[0, a], [a, 0]]
        let inv = a[i][j].recip();
        for &r in &active {
            if a[r][i].is_zero() && a[r][j].is_zero() {
                continue;
            }
            for &s in &active {
                let t = &a[r][i] * &a[j][s] + &a[r][j] * &a[i][s];
                if !t.is_zero() {
                    a[r][s] -= t * &inv;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};

    #[test]
    fn small_examples() {
        assert_eq!(
            inertia_exact(&Graph::empty(0).unwrap()),
            Inertia::new(0, 0, 0)
        );
        assert_eq!(
            inertia_exact(&Graph::empty(1).unwrap()),
            Inertia::new(0, 0, 1)
        );
        for s in 2..=9 {
            assert_eq!(
                inertia_exact(&complete(s).unwrap()),
                Inertia::new(1, s - 1, 0)
            );
        }
        assert_eq!(inertia_exact(&path(4).unwrap()), Inertia::new(2, 2, 0));
        assert_eq!(inertia_exact(&cycle(4).unwrap()), Inertia::new(1, 1, 2));
        assert_eq!(inertia_exact(&cycle(5).unwrap()), Inertia::new(3, 2, 0));
        assert_eq!(inertia_exact(&cycle(6).unwrap()), Inertia::new(3, 3, 0));
        assert_eq!(inertia_exact(&cycle(8).unwrap()), Inertia::new(3, 3, 2));
    }

    #[test]
    fn general_integer_matrices() {
        assert_eq!(
            inertia_of_matrix(&[vec![2, 1], vec![1, 2]]),
            Inertia::new(2, 0, 0)
        );
        assert_eq!(
            inertia_of_matrix(&[vec![1, 2], vec![2, 1]]),
            Inertia::new(1, 1, 0)
        );
        assert_eq!(
            inertia_of_matrix(&[vec![0, 0], vec![0, -3]]),
            Inertia::new(0, 1, 1)
        );
        assert_eq!(inertia_of_matrix(&[]), Inertia::new(0, 0, 0));
    }
}
