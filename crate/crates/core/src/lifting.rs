//! Base phase, stack generation over cells, reduced lifting-set
//! selection, admissible-cell restriction, and nullification detection.

use crate::ecprep::Designation;
use crate::polyring::{PolySet, Polynomial, VarOrder, Variable};
use crate::realalg::{
    fmt_rat, isolate_roots_of_polynomial, isolate_trimmed_image_roots, pick_above, pick_below,
    pick_between_roots, substitute_partial, AlgebraicNumber, PartialImage, RealAlgError,
    SamplePoint,
};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Truth {
    True,
    False,
    Undetermined,
}

impl Truth {
    pub fn text(self) -> &'static str {
        match self {
            Truth::True => "TRUE",
            Truth::False => "FALSE",
            Truth::Undetermined => "UNDETERMINED",
        }
    }
}

/// One cell: index entries are 1-based stack positions (even = section,
/// odd = sector), the sample has one coordinate per level, and trivial
/// cylinder cells keep the truth FALSE they were born with.
#[derive(Clone, Debug)]
pub struct Cell {
    pub index: Vec<usize>,
    pub sample: SamplePoint,
    pub truth: Truth,
    pub cylinder: bool,
}

impl Cell {
    pub fn level(&self) -> usize {
        self.index.len()
    }

    pub fn is_section_at_top(&self) -> bool {
        self.index.last().map(|i| i % 2 == 0).unwrap_or(false)
    }

    pub fn index_text(&self) -> String {
        format!(
            "({})",
            self.index
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Why lifting gave up: a lifting polynomial vanished identically over a
/// cell that matters.
#[derive(Clone, Debug)]
pub struct WellOrientedFailure {
    pub poly_text: String,
    pub cell_index: Vec<usize>,
    pub level: usize,
}

impl fmt::Display for WellOrientedFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "not well-oriented: {} is nullified over cell ({}) while lifting to level {}",
            self.poly_text,
            self.cell_index
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.level
        )
    }
}

#[derive(Debug)]
pub enum LiftError {
    NotWellOriented(WellOrientedFailure),
    Algebra(RealAlgError),
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::NotWellOriented(w) => write!(f, "{w}"),
            LiftError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LiftError {}

impl From<RealAlgError> for LiftError {
    fn from(e: RealAlgError) -> Self {
        LiftError::Algebra(e)
    }
}

/// Merges per-polynomial root lists into one ascending, duplicate-free
/// root sequence, keeping each root's defining relation. Coincidence
/// across polynomials is decided exactly; the representation kept prefers
/// rational shortcuts, then smaller defining polynomials; among defining
/// relations the lower-degree one wins (both vanish at a merged root).
fn merge_roots(
    groups: Vec<(Vec<AlgebraicNumber>, Option<Polynomial>)>,
) -> Vec<(AlgebraicNumber, Option<Polynomial>)> {
    let mut merged: Vec<(AlgebraicNumber, Option<Polynomial>)> = Vec::new();
    for (group, relation) in groups {
        for root in group {
            let mut placed = false;
            let mut insert_at = merged.len();
            for (i, (existing, existing_rel)) in merged.iter().enumerate() {
                match root.cmp_exact(existing) {
                    Ordering::Equal => {
                        let better = match (root.is_rational(), existing.is_rational()) {
                            (true, false) => true,
                            (false, true) => false,
                            _ => root.defpoly().degree() < existing.defpoly().degree(),
                        };
                        let rel = match (&relation, existing_rel) {
                            (Some(a), Some(b)) => {
                                if a.total_degree() < b.total_degree() {
                                    Some(a.clone())
                                } else {
                                    Some(b.clone())
                                }
                            }
                            (Some(a), None) => Some(a.clone()),
                            (None, b) => b.clone(),
                        };
                        let value = if better { root.clone() } else { existing.clone() };
                        merged[i] = (value, rel);
                        placed = true;
                        break;
                    }
                    Ordering::Less => {
                        insert_at = i;
                        break;
                    }
                    Ordering::Greater => continue,
                }
            }
            if !placed {
                merged.insert(insert_at, (root, relation.clone()));
            }
        }
    }
    merged
}

/// Builds the alternating sector/section cells over a base cell from an
/// ascending root list; section samples carry the root's defining
/// relation for cheap elimination higher up.
fn cells_from_roots(base: &Cell, roots: Vec<(AlgebraicNumber, Option<Polynomial>)>) -> Vec<Cell> {
    let mut out = Vec::new();
    let n = roots.len();
    if n == 0 {
        let sample = base.sample.extended(AlgebraicNumber::from_int(0));
        let mut index = base.index.clone();
        index.push(1);
        out.push(Cell {
            index,
            sample,
            truth: Truth::Undetermined,
            cylinder: false,
        });
        return out;
    }
    for (i, (root, relation)) in roots.iter().enumerate() {
        // Sector below root i.
        let sector_sample = if i == 0 {
            pick_below(root)
        } else {
            pick_between_roots(&roots[i - 1].0, root)
        };
        let mut index = base.index.clone();
        index.push(2 * i + 1);
        out.push(Cell {
            index,
            sample: base
                .sample
                .extended(AlgebraicNumber::from_rational(sector_sample)),
            truth: Truth::Undetermined,
            cylinder: false,
        });
        let mut index = base.index.clone();
        index.push(2 * (i + 1));
        let sample = match relation {
            Some(rel) if !root.is_rational() => {
                base.sample.extended_with_relation(root.clone(), rel.clone())
            }
            _ => base.sample.extended(root.clone()),
        };
        out.push(Cell {
            index,
            sample,
            truth: Truth::Undetermined,
            cylinder: false,
        });
    }
    let top_sample = pick_above(&roots[n - 1].0);
    let mut index = base.index.clone();
    index.push(2 * n + 1);
    out.push(Cell {
        index,
        sample: base
            .sample
            .extended(AlgebraicNumber::from_rational(top_sample)),
        truth: Truth::Undetermined,
        cylinder: false,
    });
    out
}

/// Decomposes the real line at the roots of the designated constraint
/// (when present) or of all the level-1 polynomials.
pub fn base_phase(
    a_1: &PolySet,
    e_1: Option<&Polynomial>,
    _nvars: usize,
) -> Result<Vec<Cell>, LiftError> {
    let v = Variable::from_level(1);
    let polys: Vec<Polynomial> = match e_1 {
        Some(p) => vec![p.clone()],
        None => a_1.iter().cloned().collect(),
    };
    let mut groups = Vec::new();
    for p in &polys {
        if p.degree(v) == 0 {
            continue;
        }
        let roots = isolate_roots_of_polynomial(p, v)
            .expect("level-1 polynomials are nonzero and univariate");
        groups.push((roots, None));
    }
    let roots = merge_roots(groups);
    let origin = Cell {
        index: Vec::new(),
        sample: SamplePoint::empty(),
        truth: Truth::Undetermined,
        cylinder: false,
    };
    Ok(cells_from_roots(&origin, roots))
}

/// The polynomials to lift with at level `k`: the designated constraint's
/// basis factors when a designation exists, else the whole basis.
pub fn select_lifting_set(layers: &crate::projection::ProjectionLayers, k: usize) -> PolySet {
    let layer = layers.level(k);
    if layer.f.is_empty() {
        layer.b.clone()
    } else {
        layer.f.clone()
    }
}

/// Splits the previous level into admissible cells (to be decomposed) and
/// the rest (to be extended trivially): when the level below carries a
/// designation, only cells whose final index entry is even are admissible.
/// Cells that are already trivial cylinders are false on their whole
/// fiber and stay cylinders regardless.
pub fn select_admissible(d_prev: &[Cell], e_prev_exists: bool) -> (Vec<usize>, Vec<usize>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, cell) in d_prev.iter().enumerate() {
        if cell.cylinder || (e_prev_exists && !cell.is_section_at_top()) {
            b.push(i);
        } else {
            a.push(i);
        }
    }
    (a, b)
}

/// Generates the stack over `base` with respect to the polynomials in
/// `lifting_set`, in variable `v`. Nullification of any element raises
/// the well-orientedness failure.
pub fn generate_stack(
    base: &Cell,
    lifting_set: &PolySet,
    v: Variable,
    order: &VarOrder,
) -> Result<Vec<Cell>, LiftError> {
    let mut groups = Vec::new();
    for l in lifting_set.iter() {
        match substitute_partial(l, &base.sample, v) {
            PartialImage::Nullified => {
                return Err(LiftError::NotWellOriented(WellOrientedFailure {
                    poly_text: l.to_text(order),
                    cell_index: base.index.clone(),
                    level: v.level(),
                }));
            }
            PartialImage::Constant(_) => continue,
            PartialImage::Univariate { trimmed, .. } => {
                let roots = isolate_trimmed_image_roots(&trimmed, &base.sample, v)?;
                groups.push((roots, Some(trimmed)));
            }
        }
    }
    let roots = merge_roots(groups);
    Ok(cells_from_roots(base, roots))
}

/// Extends a cell trivially to a cylinder one level up: index entry 1,
/// sample coordinate 0, truth FALSE.
fn cylinder_cell(base: &Cell) -> Cell {
    let mut index = base.index.clone();
    index.push(1);
    Cell {
        index,
        sample: base.sample.extended(AlgebraicNumber::from_int(0)),
        truth: Truth::False,
        cylinder: true,
    }
}

/// Lifts the previous level to level `k`: stacks over admissible cells,
/// trivial cylinders over the rest, concatenated in base-cell order.
pub fn lift_level(
    d_prev: &[Cell],
    layers: &crate::projection::ProjectionLayers,
    k: usize,
    designation: &Designation,
    restrict: bool,
    order: &VarOrder,
) -> Result<Vec<Cell>, LiftError> {
    let v = Variable::from_level(k);
    let lifting_set = select_lifting_set(layers, k);
    let e_prev_exists = restrict && designation.at_level(k - 1).is_some();
    let (admissible, rest) = select_admissible(d_prev, e_prev_exists);
    let rest_set: std::collections::BTreeSet<usize> = rest.iter().copied().collect();
    let mut out = Vec::new();
    for (i, base) in d_prev.iter().enumerate() {
        if rest_set.contains(&i) {
            out.push(cylinder_cell(base));
        } else {
            debug_assert!(admissible.contains(&i));
            let stack = generate_stack(base, &lifting_set, v, order)?;
            out.extend(stack);
        }
    }
    Ok(out)
}

/// JSON for one cell: index, per-coordinate sample, truth.
pub fn cell_to_json(cell: &Cell, order: &VarOrder) -> serde_json::Value {
    let sample: Vec<serde_json::Value> = cell
        .sample
        .coords()
        .iter()
        .enumerate()
        .map(|(i, a)| match a.as_rational() {
            Some(r) => serde_json::Value::String(fmt_rat(r)),
            None => {
                let name = order.name(Variable::from_index(i));
                serde_json::json!({
                    "poly": a.defpoly().display_var(name),
                    "root": a.root_number(),
                    "lo": fmt_rat(a.lo()),
                    "hi": fmt_rat(a.hi()),
                })
            }
        })
        .collect();
    serde_json::json!({
        "index": cell.index,
        "sample": sample,
        "truth": cell.truth.text(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::rat_int;
    use crate::polyring::VarOrder;

    #[test]
    fn base_phase_counts() {
        let ord = VarOrder::new(vec!["x"]);
        let mut a1 = PolySet::new();
        a1.insert(&parse_poly("2*x^2 - 1", &ord).unwrap());
        let cells = base_phase(&a1, None, 1).unwrap();
        assert_eq!(cells.len(), 5);
        let idx: Vec<usize> = cells.iter().map(|c| c.index[0]).collect();
        assert_eq!(idx, vec![1, 2, 3, 4, 5]);

        let mut sq = PolySet::new();
        sq.insert(&parse_poly("x^2", &ord).unwrap());
        let cells = base_phase(&sq, None, 1).unwrap();
        assert_eq!(cells.len(), 3);
        assert_eq!(
            cells[1].sample.coords()[0].as_rational(),
            Some(&rat_int(0))
        );

        let empty = PolySet::new();
        let cells = base_phase(&empty, None, 1).unwrap();
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].index, vec![1]);
    }

    #[test]
    fn stack_over_origin_nullifies() {
        let ord = VarOrder::new(vec!["x", "y", "z"]);
        let p = parse_poly("y*z + x", &ord).unwrap();
        let mut l = PolySet::new();
        l.insert(&p);
        let base = Cell {
            index: vec![1, 1],
            sample: SamplePoint::from_rationals(&[rat_int(0), rat_int(0)]),
            truth: Truth::Undetermined,
            cylinder: false,
        };
        let z = ord.lookup("z").unwrap();
        let err = generate_stack(&base, &l, z, &ord).unwrap_err();
        match err {
            LiftError::NotWellOriented(w) => {
                assert_eq!(w.cell_index, vec![1, 1]);
                assert_eq!(w.level, 3);
            }
            other => panic!("expected nullification failure, got {other}"),
        }
    }

    #[test]
    fn stack_merges_coincident_roots() {
        // Two polynomials sharing the root y = 1 over any base.
        let ord = VarOrder::new(vec!["x", "y"]);
        let p = parse_poly("y^2 - 1", &ord).unwrap();
        let q = parse_poly("y - 1", &ord).unwrap();
        let mut l = PolySet::new();
        l.insert(&p);
        l.insert(&q);
        let base = Cell {
            index: vec![1],
            sample: SamplePoint::from_rationals(&[rat_int(0)]),
            truth: Truth::Undetermined,
            cylinder: false,
        };
        let y = ord.lookup("y").unwrap();
        let stack = generate_stack(&base, &l, y, &ord).unwrap();
        // Roots -1 and 1: five cells.
        assert_eq!(stack.len(), 5);
        assert_eq!(
            stack[1].sample.coords()[1].as_rational(),
            Some(&rat_int(-1))
        );
        assert_eq!(stack[3].sample.coords()[1].as_rational(), Some(&rat_int(1)));
    }

    #[test]
    fn admissible_split_even_final() {
        let mk = |idx: Vec<usize>| Cell {
            index: idx,
            sample: SamplePoint::from_rationals(&[rat_int(0), rat_int(0)]),
            truth: Truth::Undetermined,
            cylinder: false,
        };
        let cells = vec![mk(vec![1, 1]), mk(vec![1, 2]), mk(vec![1, 3])];
        let (a, b) = select_admissible(&cells, true);
        assert_eq!(a, vec![1]);
        assert_eq!(b, vec![0, 2]);
        let (a, b) = select_admissible(&cells, false);
        assert_eq!(a, vec![0, 1, 2]);
        assert!(b.is_empty());
    }
}
