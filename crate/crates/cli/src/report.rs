//! Small shared output helpers: exact rational columns next to float views,
//! violation fractions with explicit denominators.

use serde::Serialize;

use cloneaudit_core::clones::Rational;

pub fn rational_to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Fixed-width float column; the exact value always travels in a sibling
/// rational column.
pub fn float_column(x: f64) -> String {
    format!("{x:.6}")
}

/// A violation count with its denominator; the proportion is derived and
/// null when nothing was evaluated.
#[derive(Clone, Copy, Debug, Default, Serialize, PartialEq)]
pub struct Fraction {
    pub violated: u64,
    pub total: u64,
    pub proportion: Option<f64>,
}

impl Fraction {
    pub fn tally(&mut self, violated: bool) {
        self.total += 1;
        if violated {
            self.violated += 1;
        }
        self.proportion = Some(self.violated as f64 / self.total as f64);
    }

    pub fn display(&self) -> String {
        match self.proportion {
            Some(p) => format!("{p:.2}"),
            None => "-".to_string(),
        }
    }
}
