//! Airy and integer-order Bessel functions of complex argument.

pub mod airy;
pub mod bessel;
pub mod olver;

pub use airy::{airy_eval, airy_zeros, AiryPair, AiryRegime, AiryZeroTable};
pub use bessel::{bessel_eval, bessel_eval_signed, bessel_product, BesselPair, BesselRegime};

use num_complex::Complex64 as C64;

/// Neumaier compensated summation for complex terms.
#[derive(Debug, Clone, Copy)]
pub(crate) struct NeumaierSum {
    sum: C64,
    comp: C64,
}

impl NeumaierSum {
    pub(crate) fn new(first: C64) -> Self {
        Self { sum: first, comp: C64::new(0.0, 0.0) }
    }

    pub(crate) fn add(&mut self, x: C64) {
        self.sum = C64::new(
            two_sum(self.sum.re, x.re, &mut self.comp.re),
            two_sum(self.sum.im, x.im, &mut self.comp.im),
        );
    }

    pub(crate) fn value(&self) -> C64 {
        self.sum + self.comp
    }
}

fn two_sum(s: f64, x: f64, comp: &mut f64) -> f64 {
    let t = s + x;
    if s.abs() >= x.abs() {
        *comp += (s - t) + x;
    } else {
        *comp += (x - t) + s;
    }
    t
}
