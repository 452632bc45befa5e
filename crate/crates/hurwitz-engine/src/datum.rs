//! Branching data `[NAME, g, g0 | [m1,n1], ..., [mr,nr]]` and the exact
//! genus bookkeeping that ties the surface genus `g`, the orbit genus `g0`,
//! and the branch multiplicities together.

use std::fmt;
use std::str::FromStr;

use crate::error::EngineError;

/// An action signature: the named group acting on a genus-`g` surface whose
/// orbit surface has genus `g0`, branched over `n_j` points of multiplicity
/// `m_j`.  Branches are kept sorted by `m` with equal multiplicities merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Datum {
    pub name: String,
    pub genus: i128,
    pub cogenus: u32,
    pub branches: Vec<(u64, u32)>,
}

impl Datum {
    pub fn new(
        name: &str,
        genus: i128,
        cogenus: u32,
        branches: &[(u64, u32)],
    ) -> Result<Datum, EngineError> {
        Ok(Datum {
            name: name.to_string(),
            genus,
            cogenus,
            branches: normalize_branches(branches)?,
        })
    }

    /// Builds the datum whose genus is forced by the group order.
    pub fn solved(
        name: &str,
        order: u64,
        cogenus: u32,
        branches: &[(u64, u32)],
    ) -> Result<Datum, EngineError> {
        let branches = normalize_branches(branches)?;
        let genus = solve_genus(order, cogenus, &branches)?;
        Ok(Datum {
            name: name.to_string(),
            genus,
            cogenus,
            branches,
        })
    }

    /// The genus the datum should carry for a group of the given order.
    pub fn expected_genus(&self, order: u64) -> Result<i128, EngineError> {
        solve_genus(order, self.cogenus, &self.branches)
    }

    /// Branch multiplicities expanded point by point, smallest first.
    pub fn expanded_orders(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(m, n) in &self.branches {
            out.extend(std::iter::repeat(m).take(n as usize));
        }
        out
    }

    pub fn num_branch_points(&self) -> u32 {
        self.branches.iter().map(|&(_, n)| n).sum()
    }
}

/// Solves `2(g - 1) = |G| (2 g0 - 2 + sum n_j (1 - 1/m_j))` for g, exactly.
/// Fails if some multiplicity does not divide the order, if the right side
/// is odd, or if the resulting genus falls below 2.
pub fn solve_genus(order: u64, cogenus: u32, branches: &[(u64, u32)]) -> Result<i128, EngineError> {
    let order = order as i128;
    let mut twice = 2 * order * (cogenus as i128 - 1);
    for &(m, n) in branches {
        if m < 2 {
            return Err(EngineError::Datum(format!("multiplicity {m} below 2")));
        }
        if order % m as i128 != 0 {
            return Err(EngineError::Datum(format!(
                "multiplicity {m} does not divide the group order {order}"
            )));
        }
        twice += n as i128 * (order - order / m as i128);
    }
    if twice % 2 != 0 {
        return Err(EngineError::Datum(
            "branching data yield a half-integral genus".into(),
        ));
    }
    let genus = 1 + twice / 2;
    if genus < 2 {
        return Err(EngineError::Datum(format!(
            "branching data yield genus {genus}, below 2"
        )));
    }
    Ok(genus)
}

pub(crate) fn normalize_branches(branches: &[(u64, u32)]) -> Result<Vec<(u64, u32)>, EngineError> {
    let mut sorted = branches.to_vec();
    sorted.sort();
    let mut out: Vec<(u64, u32)> = Vec::with_capacity(sorted.len());
    for (m, n) in sorted {
        if m < 2 {
            return Err(EngineError::Datum(format!("multiplicity {m} below 2")));
        }
        if n == 0 {
            return Err(EngineError::Datum(format!(
                "multiplicity {m} listed with zero branch points"
            )));
        }
        match out.last_mut() {
            Some((pm, pn)) if *pm == m => {
                *pn = pn
                    .checked_add(n)
                    .ok_or_else(|| EngineError::Datum("branch count overflow".into()))?;
            }
            _ => out.push((m, n)),
        }
    }
    Ok(out)
}

impl fmt::Display for Datum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}", self.name, self.genus, self.cogenus)?;
        for (i, &(m, n)) in self.branches.iter().enumerate() {
            let sep = if i == 0 { " | " } else { ", " };
            write!(f, "{sep}[{m},{n}]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Datum {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Datum, EngineError> {
        let bad = |why: &str| EngineError::Datum(format!("{why} in {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("missing outer brackets"))?;
        let (head, tail) = match inner.split_once('|') {
            Some((h, t)) => (h, Some(t)),
            None => (inner, None),
        };
        let fields: Vec<&str> = head.split(',').map(str::trim).collect();
        let [name, genus, cogenus] = fields[..] else {
            return Err(bad("expected NAME, genus, orbit genus"));
        };
        if name.is_empty() {
            return Err(bad("empty group name"));
        }
        let genus: i128 = genus.parse().map_err(|_| bad("unreadable genus"))?;
        let cogenus: u32 = cogenus.parse().map_err(|_| bad("unreadable orbit genus"))?;
        let branches = match tail {
            Some(t) => parse_branches(t).map_err(|why| bad(&why))?,
            None => Vec::new(),
        };
        Datum::new(name, genus, cogenus, &branches)
    }
}

fn parse_branches(s: &str) -> Result<Vec<(u64, u32)>, String> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('[')
            .ok_or("expected [m,n] branch pair")?;
        let (body, after) = body.split_once(']').ok_or("unclosed branch pair")?;
        let (m, n) = body.split_once(',').ok_or("expected [m,n] branch pair")?;
        let m: u64 = m.trim().parse().map_err(|_| "unreadable multiplicity")?;
        let n: u32 = n.trim().parse().map_err(|_| "unreadable branch count")?;
        out.push((m, n));
        rest = after.trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err("trailing comma in branch list".into());
            }
        } else if !rest.is_empty() {
            return Err("expected comma between branch pairs".into());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_solutions_match_hand_computations() {
        assert_eq!(solve_genus(2520, 1, &[(7, 1)]).unwrap(), 1081);
        assert_eq!(solve_genus(20160, 1, &[(7, 1)]).unwrap(), 8641);
        assert_eq!(solve_genus(443_520, 1, &[(7, 1)]).unwrap(), 190_081);
        assert_eq!(solve_genus(168, 0, &[(4, 2), (7, 1)]).unwrap(), 31);
        assert_eq!(solve_genus(168, 0, &[(3, 1), (4, 1), (7, 1)]).unwrap(), 24);
        assert_eq!(
            solve_genus(7_254_000_000, 1, &[(31, 1)]).unwrap(),
            3_510_000_001
        );
        // A handle adds |G| to the genus.
        assert_eq!(solve_genus(2520, 2, &[(7, 1)]).unwrap(), 1081 + 2520);
        // Unbranched double-handle quotient.
        assert_eq!(solve_genus(60, 2, &[]).unwrap(), 61);
    }

    #[test]
    fn genus_failures() {
        // Multiplicity must divide the order.
        assert!(solve_genus(168, 0, &[(5, 1)]).is_err());
        // Sphere quotient with too little branching: negative genus.
        assert!(solve_genus(60, 0, &[(2, 1)]).is_err());
        // Half-integral genus.
        assert!(solve_genus(6, 0, &[(2, 1), (3, 2)]).is_err());
        // Multiplicity 1 is not a branch point.
        assert!(solve_genus(60, 1, &[(1, 2)]).is_err());
        // Unbranched torus quotient has genus 1, below the threshold.
        assert!(solve_genus(60, 1, &[]).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let d: Datum = "[L2(7), 24, 0 | [3,1], [4,1], [7,1]]".parse().unwrap();
        assert_eq!(d.name, "L2(7)");
        assert_eq!(d.genus, 24);
        assert_eq!(d.cogenus, 0);
        assert_eq!(d.branches, vec![(3, 1), (4, 1), (7, 1)]);
        assert_eq!(d.to_string(), "[L2(7), 24, 0 | [3,1], [4,1], [7,1]]");
        let back: Datum = d.to_string().parse().unwrap();
        assert_eq!(back, d);

        let plain: Datum = "[A5, 5, 2]".parse().unwrap();
        assert!(plain.branches.is_empty());
        assert_eq!(plain.to_string(), "[A5, 5, 2]");
    }

    #[test]
    fn branches_are_sorted_and_merged() {
        let d = Datum::new("A7", 0, 0, &[(7, 1), (3, 2), (7, 1), (3, 1)]).unwrap();
        assert_eq!(d.branches, vec![(3, 3), (7, 2)]);
        assert_eq!(d.expanded_orders(), vec![3, 3, 3, 7, 7]);
        assert_eq!(d.num_branch_points(), 5);

        let parsed: Datum = "[A7, 0, 0 | [7,1], [3,2], [3,1]]".parse().unwrap();
        assert_eq!(parsed.branches, vec![(3, 3), (7, 1)]);
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for s in [
            "L2(7), 24, 0",
            "[L2(7), 24]",
            "[L2(7), 24, 0 | 3,1]",
            "[L2(7), 24, 0 | [3,1] [4,1]]",
            "[L2(7), 24, 0 | [3,1],]",
            "[, 24, 0]",
            "[A5, x, 0]",
            "[A5, 5, 0 | [0,1]]",
            "[A5, 5, 0 | [3,0]]",
        ] {
            assert!(s.parse::<Datum>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn solved_datum_carries_forced_genus() {
        let d = Datum::solved("A7", 2520, 1, &[(7, 1)]).unwrap();
        assert_eq!(d.genus, 1081);
        assert_eq!(d.expected_genus(2520).unwrap(), 1081);
        assert_eq!(d.to_string(), "[A7, 1081, 1 | [7,1]]");
    }
}
