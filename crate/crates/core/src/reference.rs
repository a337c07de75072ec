//! Reference energy levels for the finite circular dot, used to check the
//! solver end to end.
//!
//! Rows are ordered as printed: blocks of `m = 0, 1, 2`, then `v = 25, 49,
//! 100`, then `beta = 0, 0.2 sqrt(v), sqrt(v), 2 sqrt(v)`. Energies carry
//! two decimals.

/// Multiples of `sqrt(v)` used for `beta`.
pub const BETA_MULTIPLES: [f64; 4] = [0.0, 0.2, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub m: i32,
    pub v: f64,
    /// `beta` as printed.
    pub beta_printed: f64,
    /// Index into [`BETA_MULTIPLES`].
    pub beta_index: usize,
    pub levels: &'static [f64],
}

impl ReferenceRow {
    /// `beta` as an exact multiple of `sqrt(v)`.
    pub fn beta(&self) -> f64 {
        BETA_MULTIPLES[self.beta_index] * self.v.sqrt()
    }
}

const fn row(m: i32, v: f64, beta_printed: f64, beta_index: usize, levels: &'static [f64]) -> ReferenceRow {
    ReferenceRow { m, v, beta_printed, beta_index, levels }
}

pub const TABLE: [ReferenceRow; 36] = [
    row(0, 25.0, 0.0, 0, &[3.98, 9.94, 19.61]),
    row(0, 25.0, 1.0, 1, &[3.49, 9.81, 19.15]),
    row(0, 25.0, 5.0, 2, &[-4.40, 2.83, 13.40]),
    row(0, 25.0, 10.0, 3, &[-23.25, -18.31, -9.67]),
    row(0, 49.0, 0.0, 0, &[4.41, 11.13, 22.75, 35.91]),
    row(0, 49.0, 1.4, 1, &[3.49, 11.03, 21.87, 35.79]),
    row(0, 49.0, 7.0, 2, &[-10.40, -3.71, 9.55, 24.22]),
    row(0, 49.0, 14.0, 3, &[-47.11, -41.45, -32.19, -19.60, -2.25]),
    row(0, 100.0, 0.0, 0, &[4.77, 12.09, 24.97, 40.08, 60.28, 81.84]),
    row(0, 100.0, 2.0, 1, &[2.97, 11.75, 23.30, 39.73, 58.65, 81.42]),
    row(0, 100.0, 10.0, 2, &[-21.91, -16.95, -4.88, 14.82, 35.04, 56.69]),
    row(0, 100.0, 20.0, 3, &[-97.96, -91.83, -81.75, -67.58, -49.91, -28.53, -1.66]),
    row(1, 25.0, 0.0, 0, &[9.94, 17.46]),
    row(1, 25.0, 1.0, 1, &[9.02, 17.85]),
    row(1, 25.0, 5.0, 2, &[-2.52, 9.26]),
    row(1, 25.0, 10.0, 3, &[-23.22, -17.29, -4.85]),
    row(1, 49.0, 0.0, 0, &[11.13, 19.85, 35.91]),
    row(1, 49.0, 1.4, 1, &[9.41, 20.50, 34.28]),
    row(1, 49.0, 7.0, 2, &[-9.62, 1.84, 20.95, 36.73]),
    row(1, 49.0, 14.0, 3, &[-47.04, -41.12, -31.51, -13.33]),
    row(1, 100.0, 0.0, 0, &[12.09, 21.66, 40.08, 57.25, 81.84]),
    row(1, 100.0, 2.0, 1, &[8.85, 22.59, 37.08, 58.13, 79.02]),
    row(1, 100.0, 10.0, 2, &[-22.91, -14.79, 4.24, 31.61, 55.83, 74.93]),
    row(1, 100.0, 20.0, 3, &[-97.91, -91.72, -81.26, -66.83, -48.24, -17.86]),
    row(2, 25.0, 0.0, 0, &[17.46]),
    row(2, 25.0, 1.0, 1, &[16.13]),
    row(2, 25.0, 5.0, 2, &[1.30, 16.08]),
    row(2, 25.0, 10.0, 3, &[-22.86, -13.35, -0.20]),
    row(2, 49.0, 0.0, 0, &[19.85, 30.35]),
    row(2, 49.0, 1.4, 1, &[17.37, 31.72]),
    row(2, 49.0, 7.0, 2, &[-6.88, 10.11, 32.20]),
    row(2, 49.0, 14.0, 3, &[-44.83, -40.77, -26.05, -4.15]),
    row(2, 100.0, 0.0, 0, &[21.66, 33.34, 57.25, 76.20]),
    row(2, 100.0, 2.0, 1, &[17.08, 35.51, 52.95, 78.21]),
    row(2, 100.0, 10.0, 2, &[-22.12, -8.70, 16.99, 49.86, 74.91]),
    row(2, 100.0, 20.0, 3, &[-97.84, -91.39, -80.29, -65.52, -37.69, -3.45]),
];

/// Tolerance on `|e - reference|`; the table prints two decimals.
pub const LEVEL_TOLERANCE: f64 = 0.01;

/// Outcome of comparing one cell of the table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CellStatus {
    Ok,
    /// Both present but further apart than the tolerance.
    Mismatch,
    /// Computed level with no printed counterpart.
    Extra,
    /// Printed level with no computed counterpart.
    Missing,
}

impl CellStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CellStatus::Ok => "ok",
            CellStatus::Mismatch => "mismatch",
            CellStatus::Extra => "extra",
            CellStatus::Missing => "missing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cell {
    pub index: usize,
    pub computed: Option<f64>,
    pub reference: Option<f64>,
    pub status: CellStatus,
}

/// Pairs computed and printed levels by position, as the table lists them
/// in increasing order.
pub fn compare_levels(computed: &[f64], reference: &[f64], tol: f64) -> Vec<Cell> {
    (0..computed.len().max(reference.len()))
        .map(|index| {
            let c = computed.get(index).copied();
            let r = reference.get(index).copied();
            let status = match (c, r) {
                (Some(c), Some(r)) if (c - r).abs() <= tol => CellStatus::Ok,
                (Some(_), Some(_)) => CellStatus::Mismatch,
                (Some(_), None) => CellStatus::Extra,
                _ => CellStatus::Missing,
            };
            Cell { index, computed: c, reference: r, status }
        })
        .collect()
}
