use crate::graph::BkSpec;

/// Parametric `B_k` families whose members all have `p = 2` and `η = 0`.
///
/// Each family is a comma list of the `k` part slots in spec order. A slot is
/// either the literal `1` or a letter standing for a positive integer. The
/// letters `x`, `y`, `z` are bounded by 2 and `w` by 3; all other letters are
/// unbounded. A repeated letter must take the same value.
const FAMILIES: &[(usize, &str)] = &[
    (
        4,
        "a,b;1,d|a,x;y,1|a,1;c,1|a,1;w,x|a,1;x,d|w,b;x,1|w,x;y,d|x,b;y,d",
    ),
    (
        5,
        "a,w;1,1;1|a,x;1,d;1|a,x;1,y;z|a,x;1,1;e|a,1;c,1;e|a,1;x,w;1|a,1;x,y;e|a,1;1,d;e|\
         w,x;y,1;e|x,b;1,1;1|x,w;1,d;1|x,w;1,1;e|1,b;1,d;1|1,b;1,x;y|1,x;1,y;e",
    ),
    (
        6,
        "a,x,c;1,1,1|a,1,c;1,e,1|a,1,c;1,x,y|a,1,c;1,1,f|a,1,1;x,e,1|x,b,1;y,1,1|\
         x,y,1;1,e,1|x,y,1;1,1,f|x,1,c;y,1,f|1,b,x;1,1,1|1,b,1;1,e,1|1,b,1;1,x,y|1,x,y;1,1,f",
    ),
    (
        7,
        "a,1,x;1,e,1;1|a,1,1;1,e,1;g|a,1,1;1,1,x;1|x,y,1;1,e,1;g|x,1,1;y,1,1;g|\
         1,b,x;1,1,1;g|1,b,1;1,e,1;g|1,1,c;1,1,f;1",
    ),
    (8, "a,1,1,d;1,1,g,1|1,b,1,1;1,f,1,1"),
    (9, "1,b,1,1;1,f,1,1;k"),
];

/// One parametric family, numbered from 1 within its `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPattern {
    pub k: usize,
    pub index: usize,
    pub slots: Vec<Slot>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    One,
    Var { name: char, max: Option<usize> },
}

fn bound(name: char) -> Option<usize> {
    match name {
        'x' | 'y' | 'z' => Some(2),
        'w' => Some(3),
        _ => None,
    }
}

impl FamilyPattern {
    fn parse(k: usize, index: usize, text: &str) -> FamilyPattern {
        let slots: Vec<Slot> = text
            .split([',', ';'])
            .map(|tok| match tok.trim() {
                "1" => Slot::One,
                t => {
                    let name = t.chars().next().expect("non-empty slot");
                    Slot::Var {
                        name,
                        max: bound(name),
                    }
                }
            })
            .collect();
        assert_eq!(slots.len(), k, "family {index} for k = {k}");
        FamilyPattern { k, index, slots }
    }

    /// Whether `parts` (in spec order, not swapped) instantiate this family.
    pub fn matches(&self, parts: &[usize]) -> bool {
        if parts.len() != self.k {
            return false;
        }
        let mut seen: Vec<(char, usize)> = Vec::new();
        for (slot, &value) in self.slots.iter().zip(parts) {
            match *slot {
                Slot::One if value != 1 => return false,
                Slot::One => {}
                Slot::Var { name, max } => {
                    if max.is_some_and(|m| value > m) {
                        return false;
                    }
                    match seen.iter().find(|(c, _)| *c == name) {
                        Some(&(_, v)) if v != value => return false,
                        Some(_) => {}
                        None => seen.push((name, value)),
                    }
                }
            }
        }
        true
    }
}

/// All families for `k`, or an empty list outside `4..=9`.
pub fn bminus_families(k: usize) -> Vec<FamilyPattern> {
    FAMILIES
        .iter()
        .filter(|(fk, _)| *fk == k)
        .flat_map(|(fk, text)| {
            text.split('|')
                .enumerate()
                .map(move |(i, t)| FamilyPattern::parse(*fk, i + 1, t))
        })
        .collect()
}

/// The first family (1-based) that the spec or its half swap instantiates.
pub fn pattern_match_bminus(spec: &BkSpec) -> Option<usize> {
    let swapped = spec.half_swapped();
    bminus_families(spec.k())
        .into_iter()
        .find(|f| f.matches(spec.parts()) || f.matches(swapped.parts()))
        .map(|f| f.index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_counts() {
        let counts: Vec<usize> = (4..=9).map(|k| bminus_families(k).len()).collect();
        assert_eq!(counts, vec![8, 15, 13, 8, 2, 1]);
        assert!(bminus_families(10).is_empty());
    }

    #[test]
    fn examples() {
        assert_eq!(
            pattern_match_bminus(&"B5(7,3;1,1;1)".parse().unwrap()),
            Some(1)
        );
        assert_eq!(
            pattern_match_bminus(&"B4(5,5;1,4)".parse().unwrap()),
            Some(1)
        );
        assert_eq!(
            pattern_match_bminus(&"B5(4,2;2,1;3)".parse().unwrap()),
            None
        );
        // matched through the half swap
        assert_eq!(
            pattern_match_bminus(&"B4(1,4;5,5)".parse().unwrap()),
            Some(1)
        );
        // w is bounded by 3
        assert_ne!(
            pattern_match_bminus(&"B5(7,4;1,1;1)".parse().unwrap()),
            Some(1)
        );
    }
}
