//! Exact arithmetic in the degree-48 splitting field, the Galois action, the
//! admissibility gate for quartics and certified evaluation at the real
//! embedding x1 > x2 > x3 > x4.

pub mod interval;
pub mod linalg;
pub mod quartic;
pub mod split;
pub mod upoly;

#[cfg(test)]
mod proptests;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

pub use interval::{certified_sign, enclose, isolate_roots, sign_at_identity, Interval, RootEnclosure};
pub use quartic::{gate_quartic, rescale_quartic, search_quartic, GateReport, Quartic};
pub use split::{RawPoly, SplitElem, SplitField};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("degenerate quartic: {0}")]
    DegenerateQuartic(String),
    #[error("no admissible quartic with coefficients bounded by {0}")]
    NotFound(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("multiplication map is singular: the algebra is not a field")]
    SingularMultiplication,
    #[error("element is not real (not fixed by complex conjugation)")]
    NotReal,
    #[error("quartic rejected by the gate")]
    GateRejected(Box<GateReport>),
}

/// An element (sigma, eps) of S4 x {e, rho}; `sigma[j]` is the image of root j (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaloisElem {
    pub sigma: [u8; 4],
    pub eps: bool,
}

impl GaloisElem {
    pub const IDENTITY: GaloisElem = GaloisElem { sigma: [0, 1, 2, 3], eps: false };
    pub const RHO: GaloisElem = GaloisElem { sigma: [0, 1, 2, 3], eps: true };

    /// All 48 elements, permutations in lexicographic order, eps = false first.
    pub fn all() -> Vec<GaloisElem> {
        let mut out = Vec::with_capacity(48);
        for &sigma in split::permutations() {
            for eps in [false, true] {
                out.push(GaloisElem { sigma, eps });
            }
        }
        out
    }

    /// Group law: (self * other)(u) = self(other(u)).
    pub fn compose(&self, other: &GaloisElem) -> GaloisElem {
        let mut sigma = [0u8; 4];
        for (j, s) in sigma.iter_mut().enumerate() {
            *s = self.sigma[other.sigma[j] as usize];
        }
        GaloisElem { sigma, eps: self.eps ^ other.eps }
    }

    pub fn inverse(&self) -> GaloisElem {
        let mut sigma = [0u8; 4];
        for j in 0..4 {
            sigma[self.sigma[j] as usize] = j as u8;
        }
        GaloisElem { sigma, eps: self.eps }
    }

    pub fn sign(&self) -> i8 {
        split::perm_sign(&self.sigma)
    }

    /// The character by which the element acts on i*D: sign(sigma) * (-1)^eps.
    pub fn chi(&self) -> i8 {
        if self.eps {
            -self.sign()
        } else {
            self.sign()
        }
    }

    pub fn apply(&self, u: &SplitElem) -> SplitElem {
        u.galois(&self.sigma, self.eps)
    }
}

/// The transposition exchanging roots 1 and j (1-based), identity for j = 1.
pub fn transposition_1j(j: usize) -> GaloisElem {
    let mut sigma = [0u8, 1, 2, 3];
    sigma.swap(0, j - 1);
    GaloisElem { sigma, eps: false }
}

/// Field constants shared by every construction for one admissible quartic.
#[derive(Debug, Clone)]
pub struct ContextConstants {
    pub quartic: Quartic,
    pub gate: GateReport,
    pub field: Arc<SplitField>,
    /// x1..x4 at indices 0..3.
    pub x: [SplitElem; 4],
    pub i: SplitElem,
    /// The Vandermonde product D = prod_{i<j} (x_i - x_j).
    pub dd: SplitElem,
    pub i_dd: SplitElem,
    /// Delta = D^2, rational.
    pub delta: BigRational,
    pub h2: SplitElem,
    pub h3: SplitElem,
    pub h4: SplitElem,
    /// mu_j = prod_{k != j} (x_j - x_k), the conjugates of mu_1 under (1 j).
    pub mu: [SplitElem; 4],
    /// a = 1 + i D.
    pub a: SplitElem,
    /// b = i D.
    pub b: SplitElem,
}

impl ContextConstants {
    pub fn diff(&self, i: usize, j: usize) -> SplitElem {
        &self.x[i - 1] - &self.x[j - 1]
    }

    pub fn delta_elem(&self) -> SplitElem {
        self.field.rational(self.delta.clone())
    }

    pub fn rational(&self, v: BigRational) -> SplitElem {
        self.field.rational(v)
    }

    pub fn int(&self, v: i64) -> SplitElem {
        self.field.int(v)
    }
}

/// Build the constants for a quartic that passes the gate.
pub fn constants(p: &Quartic) -> Result<ContextConstants, KernelError> {
    let gate = gate_quartic(p)?;
    if !gate.admissible() {
        return Err(KernelError::GateRejected(Box::new(gate)));
    }
    let field = SplitField::new(p)?;
    let x = [field.root(1), field.root(2), field.root(3), field.root(4)];
    let d = |i: usize, j: usize| &x[i] - &x[j];
    let dd = d(0, 1) * d(0, 2) * d(0, 3) * d(1, 2) * d(1, 3) * d(2, 3);
    let i = field.i();
    let i_dd = &i * &dd;
    let delta = (&dd * &dd).is_rational().expect("D^2 is rational");
    let h2 = &x[0] * &x[1] + &x[2] * &x[3];
    let h3 = &x[0] * &x[2] + &x[1] * &x[3];
    let h4 = &x[0] * &x[3] + &x[1] * &x[2];
    let mu1 = d(0, 1) * d(0, 2) * d(0, 3);
    let mu = [1, 2, 3, 4].map(|j| transposition_1j(j).apply(&mu1));
    let a = &field.one() + &i_dd;
    let b = i_dd.clone();
    Ok(ContextConstants {
        quartic: p.clone(),
        gate,
        field,
        x,
        i,
        dd,
        i_dd,
        delta,
        h2,
        h3,
        h4,
        mu,
        a,
        b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_of_default_fixture() {
        let c = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        assert_eq!(c.delta, BigRational::from_integer(5744.into()));
        assert_eq!((&c.i_dd * &c.i_dd).is_rational(), Some(-c.delta.clone()));
        assert!(c.dd.is_rational().is_none());
        let s = &(&c.h2 + &c.h3) + &c.h4;
        assert_eq!(s.is_rational(), Some(BigRational::from_integer((-5).into())));
        let prod = &(&c.mu[0] * &c.mu[1]) * &(&c.mu[2] * &c.mu[3]);
        assert_eq!(prod.is_rational(), Some(c.delta.clone()));
    }

    #[test]
    fn galois_law_on_generators() {
        let c = constants(&Quartic::from_ints(1, -5, -2, 1)).unwrap();
        let g = GaloisElem { sigma: [1, 0, 2, 3], eps: false };
        assert_eq!(g.apply(&c.dd), -c.dd.clone());
        assert_eq!(GaloisElem::RHO.apply(&c.i_dd), -c.i_dd.clone());
        let h = GaloisElem { sigma: [1, 2, 3, 0], eps: true };
        let u = &c.x[0] * &c.i + &c.h3;
        assert_eq!(g.compose(&h).apply(&u), g.apply(&h.apply(&u)));
        assert_eq!(g.compose(&g.inverse()), GaloisElem::IDENTITY);
    }

    #[test]
    fn gate_rejection_is_reported() {
        assert!(matches!(constants(&Quartic::from_ints(1, 0, 0, -2)), Err(KernelError::GateRejected(_))));
    }
}
