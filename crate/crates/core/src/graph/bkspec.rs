use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A composition `(k; n_1, ..., n_k)` naming `B_k(n_1, ..., n_k)`.
///
/// For `k = 2s` the parts split into the halves `(n_1..n_s; n_{s+1}..n_{2s})`;
/// for `k = 2s + 1` a trailing single part follows the two halves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BkSpec {
    parts: Vec<usize>,
}

impl BkSpec {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 || parts.len() > super::MAX_ORDER {
            return Err(Error::invalid(format!(
                "B_k needs 2 <= k <= 64 parts, got {}",
                parts.len()
            )));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("every part of a B_k spec must be positive"));
        }
        Ok(BkSpec { parts })
    }

    /// All parts equal to one, i.e. `G_k` itself.
    pub fn ones(k: usize) -> Result<Self> {
        BkSpec::new(vec![1; k])
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    #[inline]
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Order of the realized graph.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(first half, second half, trailing part)`.
    pub fn halves(&self) -> (&[usize], &[usize], Option<usize>) {
        let s = self.k() / 2;
        let tail = (self.k() % 2 == 1).then(|| self.parts[2 * s]);
        (&self.parts[..s], &self.parts[s..2 * s], tail)
    }

    /// The spec with its two halves exchanged; it realizes an isomorphic graph.
    pub fn half_swapped(&self) -> BkSpec {
        let (a, b, tail) = self.halves();
        let mut parts = Vec::with_capacity(self.k());
        parts.extend_from_slice(b);
        parts.extend_from_slice(a);
        parts.extend(tail);
        BkSpec { parts }
    }

    /// Whether the first half is not smaller than the second in dictionary order.
    pub fn is_normalized(&self) -> bool {
        let (a, b, _) = self.halves();
        a >= b
    }

    /// Of the spec and its half swap, the one whose first half is
    /// dictionary-greater; the representative used in listings.
    pub fn normalized(&self) -> BkSpec {
        if self.is_normalized() {
            self.clone()
        } else {
            self.half_swapped()
        }
    }
}

impl fmt::Display for BkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let (a, b, tail) = self.halves();
        write!(f, "B{}({};{}", self.k(), join(a), join(b))?;
        if let Some(t) = tail {
            write!(f, ";{t}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for BkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `B5(2,2;2,2;1)`, `B_5(2,2; 2,2; 1)` and `B_{11}(...)`. Whitespace
/// is ignored. Semicolons, when present, must sit at the half-block
/// boundaries; a plain comma list is accepted as well.
impl FromStr for BkSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact
            .strip_prefix('B')
            .ok_or_else(|| Error::parse(0, "expected 'B'"))?;
        let rest = rest.strip_prefix('_').unwrap_or(rest);
        let open = rest
            .find('(')
            .ok_or_else(|| Error::parse(compact.len(), "expected '('"))?;
        let k_text = rest[..open].trim_start_matches('{').trim_end_matches('}');
        let k: usize = k_text
            .parse()
            .map_err(|_| Error::parse(1, format!("bad k '{k_text}'")))?;
        let body = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(compact.len(), "expected ')' at end"))?;

        let blocks: Vec<&str> = body.split(';').collect();
        let mut parts = Vec::with_capacity(k);
        let mut block_lens = Vec::with_capacity(blocks.len());
        for block in &blocks {
            let mut len = 0;
            for tok in block.split(',') {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(0, format!("bad part '{tok}' in '{s}'")))?;
                parts.push(v);
                len += 1;
            }
            block_lens.push(len);
        }
        if parts.len() != k {
            return Err(Error::invalid(format!(
                "B{k} needs {k} parts, found {}",
                parts.len()
            )));
        }
        if blocks.len() > 1 {
            let s = k / 2;
            let expected: Vec<usize> = if k.is_multiple_of(2) {
                vec![s, s]
            } else {
                vec![s, s, 1]
            };
            if block_lens != expected {
                return Err(Error::invalid(format!(
                    "half-blocks of B{k} must have sizes {expected:?}, found {block_lens:?}"
                )));
            }
        }
        BkSpec::new(parts)
    }
}

impl Serialize for BkSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BkSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
