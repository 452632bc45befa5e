//! Witness tuples: handle pairs and branch elements certifying that a
//! branching datum is realized by an actual generating system.

use perm_core::{Perm, PermGroup};

use crate::datum::Datum;
use crate::error::EngineError;

/// A certificate for a datum: `cogenus` handle pairs `(a_i, b_i)` and one
/// branch element per branch point, ordered like `Datum::expanded_orders`.
/// Valid iff the elements have the exact prescribed orders, the product
/// `[a_1,b_1]...[a_k,b_k] c_1...c_r` is the identity, and together they
/// generate the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub datum: Datum,
    pub handles: Vec<(Perm, Perm)>,
    pub branch_elems: Vec<Perm>,
}

impl Witness {
    /// All tuple entries in file order: a_1, b_1, ..., c_1, ..., c_r.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = Vec::with_capacity(2 * self.handles.len() + self.branch_elems.len());
        for (a, b) in &self.handles {
            out.push(a.clone());
            out.push(b.clone());
        }
        out.extend(self.branch_elems.iter().cloned());
        out
    }

    /// The product `prod [a_i, b_i] prod c_j`.
    pub fn relator(&self, degree: usize) -> Perm {
        let mut t = Perm::identity(degree);
        for (a, b) in &self.handles {
            t = &t * &Perm::commutator(a, b);
        }
        for c in &self.branch_elems {
            t = &t * c;
        }
        t
    }

    /// Adds `extra` handles carrying identity pairs.  The relator and the
    /// generated group are unchanged; the genus grows by `extra * |G|`.
    pub fn extend_cogenus(&self, order: u64, extra: u32) -> Result<Witness, EngineError> {
        let degree = self.degree()?;
        let id = Perm::identity(degree);
        let mut handles = self.handles.clone();
        handles.extend(std::iter::repeat((id.clone(), id)).take(extra as usize));
        let datum = Datum::solved(
            &self.datum.name,
            order,
            self.datum.cogenus + extra,
            &self.datum.branches,
        )?;
        Ok(Witness {
            datum,
            handles,
            branch_elems: self.branch_elems.clone(),
        })
    }

    fn degree(&self) -> Result<usize, EngineError> {
        self.elements()
            .first()
            .map(|p| p.degree())
            .ok_or_else(|| EngineError::Tuple("empty tuple".into()))
    }
}

/// Checks a witness against the group named by its datum.  Every failure
/// names the condition that broke.
pub fn validate(group: &PermGroup, w: &Witness) -> Result<(), EngineError> {
    let order = group
        .order_u64()
        .ok_or_else(|| EngineError::Tuple("group order exceeds u64".into()))?;
    let degree = group.degree();

    if w.handles.len() != w.datum.cogenus as usize {
        return Err(EngineError::Tuple(format!(
            "datum asks for {} handle pairs, tuple has {}",
            w.datum.cogenus,
            w.handles.len()
        )));
    }
    let orders = w.datum.expanded_orders();
    if w.branch_elems.len() != orders.len() {
        return Err(EngineError::Tuple(format!(
            "datum asks for {} branch elements, tuple has {}",
            orders.len(),
            w.branch_elems.len()
        )));
    }
    let elems = w.elements();
    if elems.is_empty() {
        return Err(EngineError::Tuple("empty tuple".into()));
    }
    for e in &elems {
        if e.degree() != degree {
            return Err(EngineError::Tuple(format!(
                "element degree {} does not match group degree {degree}",
                e.degree()
            )));
        }
    }
    for (c, &m) in w.branch_elems.iter().zip(&orders) {
        let o = c.order();
        if o != m {
            return Err(EngineError::Tuple(format!(
                "branch element {c} has order {o}, datum requires {m}"
            )));
        }
    }
    let relator = w.relator(degree);
    if !relator.is_identity() {
        return Err(EngineError::Tuple(format!(
            "tuple relator is {relator}, not the identity"
        )));
    }
    if !group.generates(&elems) {
        return Err(EngineError::Tuple(
            "tuple does not generate the group".into(),
        ));
    }
    let expected = w.datum.expected_genus(order)?;
    if w.datum.genus != expected {
        return Err(EngineError::Tuple(format!(
            "datum genus {} does not match the solved genus {expected}",
            w.datum.genus
        )));
    }
    Ok(())
}

/// Renders a witness as a tuple file: a `datum:` header, then one element
/// per line in cycle notation.
pub fn write_tuple(w: &Witness) -> String {
    let mut out = format!("datum: {}\n", w.datum);
    for e in w.elements() {
        out.push_str(&e.cycle_string());
        out.push('\n');
    }
    out
}

/// Parses a tuple file.  `min_degree` pads every element up to the target
/// group degree; blank lines and `#` comments are skipped.
pub fn read_tuple(text: &str, min_degree: usize) -> Result<Witness, EngineError> {
    let mut datum: Option<Datum> = None;
    let mut perms: Vec<Perm> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("datum:") {
            if datum.is_some() {
                return Err(EngineError::TupleFile("duplicate datum header".into()));
            }
            datum = Some(rest.trim().parse()?);
        } else {
            perms.push(Perm::parse(line, min_degree)?);
        }
    }
    let datum = datum.ok_or_else(|| EngineError::TupleFile("missing datum header".into()))?;
    let degree = perms
        .iter()
        .map(|p| p.degree())
        .max()
        .unwrap_or(min_degree)
        .max(min_degree);
    let perms: Vec<Perm> = perms
        .iter()
        .map(|p| p.pad(degree))
        .collect::<Result<_, _>>()?;

    let k = datum.cogenus as usize;
    let r = datum.num_branch_points() as usize;
    if perms.len() != 2 * k + r {
        return Err(EngineError::TupleFile(format!(
            "datum needs {} elements ({k} handle pairs + {r} branch points), file has {}",
            2 * k + r,
            perms.len()
        )));
    }
    let mut it = perms.into_iter();
    let mut handles = Vec::with_capacity(k);
    for _ in 0..k {
        let a = it.next().expect("length checked");
        let b = it.next().expect("length checked");
        handles.push((a, b));
    }
    Ok(Witness {
        datum,
        handles,
        branch_elems: it.collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_atlas::lookup;

    fn l27_witness() -> (PermGroup, Witness) {
        let g = lookup("L2(7)").unwrap().group;
        let datum = Datum::solved("L2(7)", 168, 0, &[(3, 1), (4, 1), (7, 1)]).unwrap();
        let c3 = Perm::parse("(1,8,3)(4,7,5)", 8).unwrap();
        let c4 = Perm::parse("(1,2,6,8)(3,7,5,4)", 8).unwrap();
        let c7 = Perm::parse("(2,3,5,4,7,8,6)", 8).unwrap();
        let w = Witness {
            datum,
            handles: Vec::new(),
            branch_elems: vec![c3, c4, c7],
        };
        (g, w)
    }

    #[test]
    fn sphere_witness_validates() {
        let (g, w) = l27_witness();
        assert_eq!(w.datum.genus, 24);
        validate(&g, &w).unwrap();
    }

    #[test]
    fn handle_witness_validates() {
        // A torus-quotient tuple (a, b, c) with commutator relation.
        let g = lookup("L2(7)").unwrap().group;
        let datum = Datum::solved("L2(7)", 168, 1, &[(7, 1)]).unwrap();
        assert_eq!(datum.genus, 73);
        let a = Perm::parse("(1,2,5)(3,7,8)", 8).unwrap();
        let b = Perm::parse("(1,2,6,8)(3,7,5,4)", 8).unwrap();
        let c = Perm::parse("(2,4,6,5,8,3,7)", 8).unwrap();
        let w = Witness {
            datum,
            handles: vec![(a, b)],
            branch_elems: vec![c],
        };
        validate(&g, &w).unwrap();
    }

    #[test]
    fn validation_failures_name_the_broken_condition() {
        let (g, w) = l27_witness();

        let mut wrong_order = w.clone();
        wrong_order.branch_elems[0] = wrong_order.branch_elems[0].pow(3); // identity
        let err = validate(&g, &wrong_order).unwrap_err().to_string();
        assert!(err.contains("order"), "{err}");

        let mut broken_relator = w.clone();
        // Replace c7 by another order-7 element: orders still match, the
        // product no longer collapses.
        broken_relator.branch_elems[2] = w.branch_elems[2].pow(2);
        let err = validate(&g, &broken_relator).unwrap_err().to_string();
        assert!(err.contains("relator"), "{err}");

        let mut wrong_genus = w.clone();
        wrong_genus.datum.genus += 1;
        let err = validate(&g, &wrong_genus).unwrap_err().to_string();
        assert!(err.contains("genus"), "{err}");

        let mut missing_handle = w.clone();
        missing_handle.datum.cogenus = 1;
        assert!(validate(&g, &missing_handle).is_err());
    }

    #[test]
    fn non_generating_tuple_is_rejected() {
        // In S4 six copies of (1,2) have trivial product and exact orders
        // but generate only C2.
        let g = lookup("S4").unwrap().group;
        let datum = Datum::solved("S4", 24, 0, &[(2, 6)]).unwrap();
        assert_eq!(datum.genus, 13);
        let t = Perm::parse("(1,2)", 4).unwrap();
        let w = Witness {
            datum,
            handles: Vec::new(),
            branch_elems: vec![t; 6],
        };
        let err = validate(&g, &w).unwrap_err().to_string();
        assert!(err.contains("generate"), "{err}");
    }

    #[test]
    fn tuple_file_round_trip() {
        let (g, w) = l27_witness();
        let text = write_tuple(&w);
        assert!(text.starts_with("datum: [L2(7), 24, 0 | [3,1], [4,1], [7,1]]\n"));
        let back = read_tuple(&text, g.degree()).unwrap();
        assert_eq!(back, w);
        validate(&g, &back).unwrap();

        let commented = format!("# certificate\n\n{text}");
        assert_eq!(read_tuple(&commented, g.degree()).unwrap(), w);

        assert!(read_tuple("(1,2)\n", 4).is_err());
        assert!(read_tuple("datum: [S4, 0, 0 | [2,2]]\n(1,2)\n", 4).is_err());
    }

    #[test]
    fn extend_cogenus_preserves_validity() {
        let (g, w) = l27_witness();
        let ext = w.extend_cogenus(168, 2).unwrap();
        assert_eq!(ext.datum.cogenus, 2);
        assert_eq!(ext.datum.genus, 24 + 2 * 168);
        validate(&g, &ext).unwrap();
        let text = write_tuple(&ext);
        assert_eq!(read_tuple(&text, g.degree()).unwrap(), ext);
    }
}
