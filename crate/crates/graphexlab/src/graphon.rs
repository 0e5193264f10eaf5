//! Step graphons, step functions, graphexes, and validation.
//!
//! Graphons are represented exclusively as finite-support step kernels:
//! a strictly increasing boundary list `0 = b_0 < b_1 < … < b_n = B` and an
//! `n × n` symmetric value matrix with entries in `[0, 1]`. Analytic
//! graphons must be discretized before entering the library; in return all
//! integrals are exact and the usual integrability conditions hold
//! automatically.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

fn boundaries_ok(boundaries: &[f64]) -> bool {
    boundaries.len() >= 2
        && boundaries[0] == 0.0
        && boundaries.windows(2).all(|w| w[0] < w[1])
        && boundaries.iter().all(|b| b.is_finite())
}

/// Symmetric step kernel on `[0, B)²` with values in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepGraphon {
    pub boundaries: Vec<f64>,
    pub values: Vec<Vec<f64>>,
}

impl StepGraphon {
    pub fn new(boundaries: Vec<f64>, values: Vec<Vec<f64>>) -> Result<Self> {
        if !boundaries_ok(&boundaries) {
            return Err(Error::InvalidBoundaries);
        }
        let n = boundaries.len() - 1;
        if values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        for i in 0..n {
            for j in 0..n {
                let v = values[i][j];
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::ValueOutOfRange(v));
                }
                if values[i][j] != values[j][i] {
                    return Err(Error::AsymmetricValues);
                }
            }
        }
        Ok(StepGraphon { boundaries, values })
    }

    /// Constant kernel `value` on `[0, width)²`.
    pub fn constant(value: f64, width: f64) -> Result<Self> {
        StepGraphon::new(vec![0.0, width], vec![vec![value]])
    }

    /// Zero kernel on `[0, width)²`.
    pub fn zero(width: f64) -> Self {
        StepGraphon::constant(0.0, width).expect("zero kernel")
    }

    pub fn n_cells(&self) -> usize {
        self.boundaries.len() - 1
    }

    /// Total support width `B`.
    pub fn support_width(&self) -> f64 {
        *self.boundaries.last().unwrap()
    }

    pub fn widths(&self) -> Vec<f64> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Index of the cell containing `x`, or `None` outside `[0, B)`.
    pub fn cell_of(&self, x: f64) -> Option<usize> {
        if x < 0.0 || x >= self.support_width() {
            return None;
        }
        // Boundaries are sorted; partition_point gives the first boundary > x.
        let idx = self.boundaries.partition_point(|b| *b <= x);
        Some(idx - 1)
    }

    /// Kernel value at `(x, y)`, zero outside the support.
    pub fn value_at(&self, x: f64, y: f64) -> f64 {
        match (self.cell_of(x), self.cell_of(y)) {
            (Some(i), Some(j)) => self.values[i][j],
            _ => 0.0,
        }
    }

    /// Exact `∫∫ W = Σ values[i][j] · w_i · w_j`.
    pub fn l1_norm(&self) -> f64 {
        let w = self.widths();
        let mut total = 0.0;
        for (i, row) in self.values.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                total += v * w[i] * w[j];
            }
        }
        total
    }

    /// Exact `∫ W(x, x) dx = Σ values[i][i] · w_i`.
    pub fn diagonal_integral(&self) -> f64 {
        self.widths()
            .iter()
            .zip(self.values.iter().enumerate().map(|(i, row)| row[i]))
            .map(|(w, v)| w * v)
            .sum()
    }

    /// Degree function `µ_W(x) = Σ_j values[cell(x)][j] · w_j`, zero outside
    /// the support.
    pub fn degree_at(&self, x: f64) -> f64 {
        match self.cell_of(x) {
            Some(i) => {
                let w = self.widths();
                self.values[i].iter().zip(&w).map(|(v, wj)| v * wj).sum()
            }
            None => 0.0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|row| row.iter().all(|v| *v == 0.0))
    }

    /// Rearrange cells by a permutation: cell `k` of the result is cell
    /// `perm[k]` of the input (values and widths move together, so this is a
    /// measure-preserving rearrangement).
    pub fn permute_cells(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n_cells();
        if perm.len() != n {
            return Err(Error::DimensionMismatch);
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::VertexOutOfRange { index: p, vertices: n });
            }
            seen[p] = true;
        }
        let w = self.widths();
        let mut boundaries = Vec::with_capacity(n + 1);
        boundaries.push(0.0);
        let mut acc = 0.0;
        for &p in perm {
            acc += w[p];
            boundaries.push(acc);
        }
        let values = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.values[i][j]).collect())
            .collect();
        StepGraphon::new(boundaries, values)
    }
}

/// Nonnegative step function on `[0, B)`; the star intensity component.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepFunction {
    pub boundaries: Vec<f64>,
    pub values: Vec<f64>,
}

impl StepFunction {
    pub fn new(boundaries: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if !boundaries_ok(&boundaries) {
            return Err(Error::InvalidBoundaries);
        }
        if values.len() != boundaries.len() - 1 {
            return Err(Error::DimensionMismatch);
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::NegativeIntensity(*v));
        }
        Ok(StepFunction { boundaries, values })
    }

    pub fn constant(value: f64, width: f64) -> Result<Self> {
        StepFunction::new(vec![0.0, width], vec![value])
    }

    pub fn zero() -> Self {
        StepFunction::constant(0.0, 1.0).expect("zero step function")
    }

    pub fn support_width(&self) -> f64 {
        *self.boundaries.last().unwrap()
    }

    pub fn value_at(&self, x: f64) -> f64 {
        if x < 0.0 || x >= self.support_width() {
            return 0.0;
        }
        let idx = self.boundaries.partition_point(|b| *b <= x);
        self.values[idx - 1]
    }

    /// Exact `∫ S = Σ values[i] · w_i`.
    pub fn integral(&self) -> f64 {
        self.boundaries
            .windows(2)
            .zip(&self.values)
            .map(|(w, v)| (w[1] - w[0]) * v)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == 0.0)
    }
}

/// A graphex: dust intensity, star step function, and step graphon.
///
/// `loops_enabled` controls whether the diagonal of the graphon is used to
/// generate loops; when false the diagonal is treated as zero, which is the
/// usual convention for loop-free models.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Graphex {
    pub dust: f64,
    #[serde(default = "StepFunction::zero")]
    pub stars: StepFunction,
    pub graphon: StepGraphon,
    #[serde(default)]
    pub loops_enabled: bool,
}

impl Graphex {
    pub fn new(dust: f64, stars: StepFunction, graphon: StepGraphon) -> Result<Self> {
        if !dust.is_finite() || dust < 0.0 {
            return Err(Error::NegativeIntensity(dust));
        }
        Ok(Graphex { dust, stars, graphon, loops_enabled: false })
    }

    /// The graphex `(0, 0, W)` identified with a plain graphon.
    pub fn from_graphon(graphon: StepGraphon) -> Self {
        Graphex { dust: 0.0, stars: StepFunction::zero(), graphon, loops_enabled: false }
    }

    pub fn with_loops(mut self, enabled: bool) -> Self {
        self.loops_enabled = enabled;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.dust == 0.0 && self.stars.is_zero() && self.graphon.is_zero()
    }

    /// Loop probability at type `x`: the graphon diagonal if loops are
    /// enabled, zero otherwise.
    pub fn loop_probability(&self, x: f64) -> f64 {
        if self.loops_enabled {
            self.graphon.value_at(x, x)
        } else {
            0.0
        }
    }

    /// Width of the type axis the sampler must cover.
    pub fn type_support(&self) -> f64 {
        self.graphon.support_width().max(self.stars.support_width())
    }

    pub fn validate(&self) -> ValidationReport {
        validate_graphex(self)
    }
}

/// A single problem found by [`validate_graphex`].
#[derive(Debug, Clone, PartialEq)]
pub enum ValidationIssue {
    GraphonBoundaries,
    StarBoundaries,
    GraphonDimensions,
    StarDimensions,
    Asymmetric { i: usize, j: usize },
    ValueOutOfRange { i: usize, j: usize, value: f64 },
    NegativeStar { i: usize, value: f64 },
    NegativeDust { value: f64 },
}

impl std::fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValidationIssue::GraphonBoundaries => {
                write!(f, "graphon boundaries must start at 0 and strictly increase")
            }
            ValidationIssue::StarBoundaries => {
                write!(f, "star boundaries must start at 0 and strictly increase")
            }
            ValidationIssue::GraphonDimensions => write!(f, "graphon value matrix has wrong shape"),
            ValidationIssue::StarDimensions => write!(f, "star value list has wrong length"),
            ValidationIssue::Asymmetric { i, j } => {
                write!(f, "graphon values[{i}][{j}] != values[{j}][{i}]")
            }
            ValidationIssue::ValueOutOfRange { i, j, value } => {
                write!(f, "graphon values[{i}][{j}] = {value} outside [0, 1]")
            }
            ValidationIssue::NegativeStar { i, value } => {
                write!(f, "star values[{i}] = {value} is negative")
            }
            ValidationIssue::NegativeDust { value } => write!(f, "dust {value} is negative"),
        }
    }
}

/// Validation report: issues found plus the exact integrals entering the
/// graphon integrability conditions. For finite-support step kernels the
/// three conditions hold automatically once the shape checks pass.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
    /// `∫∫ W`.
    pub graphon_integral: f64,
    /// `∫ S`.
    pub star_integral: f64,
    /// `∫ W(x, x) dx`.
    pub diagonal_integral: f64,
    /// Degree integrability, integrability of W on the low-degree region,
    /// and diagonal integrability.
    pub conditions: [bool; 3],
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid graphex")?;
        } else {
            writeln!(f, "invalid graphex:")?;
            for issue in &self.issues {
                writeln!(f, "  - {issue}")?;
            }
        }
        writeln!(f, "graphon integral  = {}", self.graphon_integral)?;
        writeln!(f, "star integral     = {}", self.star_integral)?;
        writeln!(f, "diagonal integral = {}", self.diagonal_integral)?;
        write!(
            f,
            "conditions: degree {} / off-diagonal mass {} / diagonal {}",
            self.conditions[0], self.conditions[1], self.conditions[2]
        )
    }
}

/// Check a graphex and report issues instead of failing.
///
/// Shape problems (asymmetry, out-of-range values, bad boundaries, negative
/// intensities) become [`ValidationIssue`]s; the report also records the
/// exact integrals `∫∫W`, `∫S`, and `∫W(x,x)dx`.
pub fn validate_graphex(g: &Graphex) -> ValidationReport {
    let mut issues = Vec::new();

    if !boundaries_ok(&g.graphon.boundaries) {
        issues.push(ValidationIssue::GraphonBoundaries);
    }
    let n = g.graphon.boundaries.len().saturating_sub(1);
    if g.graphon.values.len() != n || g.graphon.values.iter().any(|row| row.len() != n) {
        issues.push(ValidationIssue::GraphonDimensions);
    } else {
        for i in 0..n {
            for j in 0..n {
                let v = g.graphon.values[i][j];
                if !(0.0..=1.0).contains(&v) {
                    issues.push(ValidationIssue::ValueOutOfRange { i, j, value: v });
                }
                if j > i && g.graphon.values[i][j] != g.graphon.values[j][i] {
                    issues.push(ValidationIssue::Asymmetric { i, j });
                }
            }
        }
    }

    if !boundaries_ok(&g.stars.boundaries) {
        issues.push(ValidationIssue::StarBoundaries);
    }
    if g.stars.values.len() != g.stars.boundaries.len().saturating_sub(1) {
        issues.push(ValidationIssue::StarDimensions);
    } else {
        for (i, v) in g.stars.values.iter().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                issues.push(ValidationIssue::NegativeStar { i, value: *v });
            }
        }
    }

    if !g.dust.is_finite() || g.dust < 0.0 {
        issues.push(ValidationIssue::NegativeDust { value: g.dust });
    }

    let shape_ok = issues.is_empty();
    let (graphon_integral, star_integral, diagonal_integral) = if shape_ok {
        (g.graphon.l1_norm(), g.stars.integral(), g.graphon.diagonal_integral())
    } else {
        (f64::NAN, f64::NAN, f64::NAN)
    };
    // Finite support and bounded values make all three conditions finite
    // exactly when the shape checks pass.
    let conditions = [shape_ok, shape_ok, shape_ok];

    ValidationReport { issues, graphon_integral, star_integral, diagonal_integral, conditions }
}

/// Axis-aligned rectangle `[x0, x1) × [y0, y1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rectangle {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.x0 <= x && x < self.x1 && self.y0 <= y && y < self.y1
    }
}

/// Finite union of axis-aligned rectangles; the test sets for point counts
/// of adjacency measures.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectangleUnion {
    pub rectangles: Vec<Rectangle>,
}

impl RectangleUnion {
    pub fn new(rectangles: Vec<Rectangle>) -> Result<Self> {
        for r in &rectangles {
            if !(r.x0 <= r.x1 && r.y0 <= r.y1)
                || [r.x0, r.x1, r.y0, r.y1].iter().any(|c| !c.is_finite() || *c < 0.0)
            {
                return Err(Error::InvalidBoundaries);
            }
        }
        Ok(RectangleUnion { rectangles })
    }

    /// `[x0, x1) × [y0, y1)` as a one-rectangle union.
    pub fn rectangle(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        RectangleUnion::new(vec![Rectangle { x0, x1, y0, y1 }])
    }

    /// The square `[0, r) × [0, r)`.
    pub fn square(r: f64) -> Result<Self> {
        RectangleUnion::rectangle(0.0, r, 0.0, r)
    }

    /// Membership in the union (overlaps do not double count).
    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.rectangles.iter().any(|r| r.contains(x, y))
    }

    /// Number of points of a point set lying in the union.
    pub fn count_points(&self, points: &[(f64, f64)]) -> usize {
        points.iter().filter(|(x, y)| self.contains(*x, *y)).count()
    }

    /// True when every rectangle lies inside `[0, r)²`.
    pub fn within_square(&self, r: f64) -> bool {
        self.rectangles.iter().all(|rect| rect.x1 <= r && rect.y1 <= r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_half_graphex_is_valid() {
        let g = Graphex::from_graphon(StepGraphon::constant(0.5, 1.0).unwrap());
        let report = g.validate();
        assert!(report.is_valid());
        assert_abs_diff_eq!(report.graphon_integral, 0.5);
        assert!(report.conditions.iter().all(|c| *c));
    }

    #[test]
    fn asymmetric_matrix_is_reported_not_thrown() {
        let mut g = Graphex::from_graphon(
            StepGraphon::new(vec![0.0, 0.5, 1.0], vec![vec![0.1, 0.3], vec![0.3, 0.2]]).unwrap(),
        );
        g.graphon.values[0][1] = 0.3;
        g.graphon.values[1][0] = 0.4;
        let report = g.validate();
        assert!(!report.is_valid());
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, ValidationIssue::Asymmetric { i: 0, j: 1 })));
    }

    #[test]
    fn star_integral_reported() {
        let g = Graphex::new(
            1.5,
            StepFunction::constant(2.0, 1.0).unwrap(),
            StepGraphon::constant(0.5, 1.0).unwrap(),
        )
        .unwrap();
        let report = g.validate();
        assert!(report.is_valid());
        assert_abs_diff_eq!(report.star_integral, 2.0);
    }

    #[test]
    fn constructor_rejects_out_of_range_values() {
        assert!(matches!(
            StepGraphon::new(vec![0.0, 1.0], vec![vec![1.5]]),
            Err(Error::ValueOutOfRange(_))
        ));
        assert!(matches!(
            StepGraphon::new(vec![0.0, 1.0, 0.5], vec![vec![0.0; 2]; 2]),
            Err(Error::InvalidBoundaries)
        ));
    }

    #[test]
    fn value_lookup_and_degree() {
        let w = StepGraphon::new(
            vec![0.0, 0.5, 1.0],
            vec![vec![0.8, 0.1], vec![0.1, 0.6]],
        )
        .unwrap();
        assert_eq!(w.value_at(0.25, 0.75), 0.1);
        assert_eq!(w.value_at(1.25, 0.25), 0.0);
        assert_abs_diff_eq!(w.degree_at(0.25), 0.8 * 0.5 + 0.1 * 0.5);
        assert_abs_diff_eq!(w.l1_norm(), 0.25 * (0.8 + 0.1 + 0.1 + 0.6));
    }

    #[test]
    fn permute_cells_keeps_widths_with_values() {
        let w = StepGraphon::new(
            vec![0.0, 0.25, 1.0],
            vec![vec![0.8, 0.1], vec![0.1, 0.6]],
        )
        .unwrap();
        let p = w.permute_cells(&[1, 0]).unwrap();
        assert_eq!(p.boundaries, vec![0.0, 0.75, 1.0]);
        assert_eq!(p.values[0][0], 0.6);
        assert_abs_diff_eq!(p.l1_norm(), w.l1_norm());
    }

    #[test]
    fn rectangle_union_counts_once_per_point() {
        let u = RectangleUnion::new(vec![
            Rectangle { x0: 0.0, x1: 1.0, y0: 1.0, y1: 2.0 },
            Rectangle { x0: 0.0, x1: 1.0, y0: 1.0, y1: 2.0 },
        ])
        .unwrap();
        let points = [(0.5, 1.2), (1.2, 0.5)];
        assert_eq!(u.count_points(&points), 1);
    }
}
