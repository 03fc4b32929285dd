use crate::coeff::{Coeff, Params};
use crate::qt_field::QTScalar;

use super::MPartition;

/// One row of a circle diagram: its number of squares and an optional circle label.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Row {
    pub len: u32,
    pub circle: Option<usize>,
}

/// Young diagram of `a ∪ λ` whose rows coming from `a` carry circles.
///
/// Rows are ordered by decreasing length; among rows of equal length the
/// circled rows come first, with increasing labels from top to bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircleDiagram {
    pub rows: Vec<Row>,
}

impl CircleDiagram {
    /// Row (1-based) holding circle `i`.
    pub fn row_of_circle(&self, i: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.circle == Some(i)).map(|k| k + 1)
    }

    /// Number of circles with label `< c` in rows of length exactly `len`.
    pub(crate) fn circles_below_label(&self, len: u32, c: usize) -> usize {
        self.rows
            .iter()
            .filter(|r| r.len == len && r.circle.is_some_and(|x| x < c))
            .count()
    }
}

pub fn diagram_of(l: &MPartition) -> CircleDiagram {
    let mut rows: Vec<Row> = l
        .a
        .iter()
        .enumerate()
        .map(|(k, &x)| Row { len: x, circle: Some(k + 1) })
        .chain(l.lam.iter().map(|&x| Row { len: x, circle: None }))
        .collect();
    rows.sort_by(|r, s| {
        s.len
            .cmp(&r.len)
            .then_with(|| match (r.circle, s.circle) {
                (Some(x), Some(y)) => x.cmp(&y),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, Some(_)) => std::cmp::Ordering::Greater,
                (None, None) => std::cmp::Ordering::Equal,
            })
    });
    CircleDiagram { rows }
}

/// Diagram of a composition: every entry carries a circle.
pub fn diagram_of_composition(eta: &[u32]) -> CircleDiagram {
    diagram_of(&MPartition::from_composition(eta))
}

/// Rows `r_η(i)` of all circles, 1-based, indexed by `i - 1`.
pub(crate) fn circle_rows(eta: &[u32]) -> Vec<usize> {
    let d = diagram_of_composition(eta);
    let mut r = vec![0; eta.len()];
    for (k, row) in d.rows.iter().enumerate() {
        if let Some(c) = row.circle {
            r[c - 1] = k + 1;
        }
    }
    r
}

/// `η̄_i = q^{η_i} t^{1 - r_η(i)}`.
pub fn eta_bar(eta: &[u32], i: usize) -> QTScalar {
    eta_bar_in(&Params::symbolic(), eta, i)
}

/// `η̄_i` inside an arbitrary coefficient field.
pub fn eta_bar_in<C: Coeff>(p: &Params<C>, eta: &[u32], i: usize) -> C {
    let r = circle_rows(eta)[i - 1];
    p.qt_pow(eta[i - 1] as i32, 1 - r as i32)
}
