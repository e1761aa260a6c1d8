//! Adjacency inertia: exact by rational congruence, approximate by Jacobi.

mod exact;
mod jacobi;

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use exact::{inertia_exact, inertia_of_matrix};
pub use jacobi::{eigenvalues_float, inertia_float, SpectrumF, DEFAULT_TOL, JACOBI_MAX_SWEEPS};

/// Exact rationals with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Numbers of positive, negative and zero eigenvalues.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct Inertia {
    pub p: usize,
    pub n_neg: usize,
    pub eta: usize,
}

impl Inertia {
    pub const fn new(p: usize, n_neg: usize, eta: usize) -> Self {
        Inertia { p, n_neg, eta }
    }

    pub fn order(&self) -> usize {
        self.p + self.n_neg + self.eta
    }

    pub fn rank(&self) -> usize {
        self.p + self.n_neg
    }

    /// Same `p` and `n_neg`, nullity one larger.
    pub fn with_extra_zero(&self) -> Self {
        Inertia::new(self.p, self.n_neg, self.eta + 1)
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(self.p + rhs.p, self.n_neg + rhs.n_neg, self.eta + rhs.eta)
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={} eta={}", self.p, self.n_neg, self.eta)
    }
}

/// Inertia of `K_{n_1,...,n_s}` in closed form: `(1, s-1, Σ(n_i - 1))`, or
/// `(0, 0, n)` for a single (edgeless) part.
pub fn multipartite_inertia(parts: &[usize]) -> Result<Inertia> {
    if parts.is_empty() {
        return Err(Error::invalid("complete multipartite graph needs a part"));
    }
    if parts.contains(&0) {
        return Err(Error::invalid("every part must be positive"));
    }
    let n: usize = parts.iter().sum();
    let s = parts.len();
    Ok(if s == 1 {
        Inertia::new(0, 0, n)
    } else {
        Inertia::new(1, s - 1, n - s)
    })
}
