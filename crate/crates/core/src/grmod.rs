//! The associated graded space `Gr(M(1, λ)) = ⊕ₙ Ωₙ/Ωₙ₋₁` and the action ϑ of
//! `U^∞(V)` on it.
//!
//! For a Fock module, `Ωₙ` is spanned by the monomials of Fock degree at most
//! `n`, so `Grₙ` has the partitions of `n` as a basis and a class is stored by
//! its canonical monomial representative.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::Result;
use crate::exact::{partitions_of, LambdaPoly, Partition, Rational};
use crate::fock::{FockModule, FockVector};
use crate::uinf::UElement;

/// An element of `⊕ₙ Grₙ(M(1, λ))`; the level of a term is the size of its partition.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct GrVector(FockVector);

impl GrVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class `[α(-i1)⋯α(-ij) w₀]_n` with `n = i1 + ⋯ + ij`.
    pub fn class(p: Partition) -> Self {
        Self(FockVector::basis(p))
    }

    pub fn from_vector(v: FockVector) -> Self {
        Self(v)
    }

    pub fn as_vector(&self) -> &FockVector {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn levels(&self) -> BTreeSet<u32> {
        self.0.terms().map(|(p, _)| p.size()).collect()
    }

    pub fn level_part(&self, n: u32) -> GrVector {
        Self(self.0.degree_part(n))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Partition, &LambdaPoly)> {
        self.0.terms().map(|(p, c)| (p.size(), p, c))
    }

    pub fn coeff(&self, p: &Partition) -> LambdaPoly {
        self.0.coeff(p)
    }

    pub fn scale_poly(&self, c: &LambdaPoly) -> GrVector {
        Self(self.0.scale_poly(c))
    }

    pub fn evaluate_at(&self, x: &Rational) -> GrVector {
        Self(self.0.evaluate_at(x))
    }
}

impl Add for GrVector {
    type Output = GrVector;
    fn add(self, rhs: GrVector) -> GrVector {
        Self(self.0 + rhs.0)
    }
}

impl Sub for GrVector {
    type Output = GrVector;
    fn sub(self, rhs: GrVector) -> GrVector {
        Self(self.0 - rhs.0)
    }
}

impl fmt::Debug for GrVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GrVector({})", self.0)
    }
}

impl fmt::Display for GrVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// One class per partition of `n`, in partition order.
pub fn gr_basis(n: u32) -> Vec<GrVector> {
    partitions_of(n).into_iter().map(GrVector::class).collect()
}

/// ϑ in the Fock module `module`:
/// `ϑ([v]_{kl}) [w]_n = δ_{ln} [Res_x x^{l-k-1} Y(x^{L(0)} v, x) w]_k`.
///
/// For `v` of weight `d` the residue picks the single mode `v_{d-1+l-k}`,
/// which shifts Fock degree by exactly `k - l`.
pub fn theta_apply_in(module: &FockModule, a: &UElement, x: &GrVector) -> Result<GrVector> {
    let mut out = FockVector::zero();
    for ((k, l), v) in a.entries() {
        let rep = x.level_part(l).0;
        if rep.is_zero() {
            continue;
        }
        for (d, vd) in v.weight_split().components {
            let m = d as i64 - 1 + l as i64 - k as i64;
            let image = module.mode(&vd, m, &rep)?;
            // Reduction modulo Ω_{k-1}: keep the degree k part.
            out += image.degree_part(k);
        }
    }
    Ok(GrVector(out))
}

/// ϑ with formal highest weight λ.
pub fn theta_apply(a: &UElement, x: &GrVector) -> Result<GrVector> {
    theta_apply_in(&FockModule::formal(), a, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{partitions_up_to, rat};
    use crate::fock::tests::a;
    use crate::uinf::diamond;

    fn one() -> FockVector {
        FockVector::vacuum()
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(gr_basis(0), vec![GrVector::class(Partition::empty())]);
        assert_eq!(gr_basis(2).len(), 2);
        assert_eq!(gr_basis(3).len(), 3);
    }

    #[test]
    fn identity_field() {
        for k in 0..4u32 {
            for l in 0..4u32 {
                for x in gr_basis(l) {
                    let got = theta_apply(&UElement::single(one(), k, l), &x).unwrap();
                    if k == l {
                        assert_eq!(got, x);
                    } else {
                        assert!(got.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_zero_mode_is_lambda() {
        for n in 0..5 {
            for x in gr_basis(n) {
                let got = theta_apply(&UElement::single(a(&[1]), n, n), &x).unwrap();
                assert_eq!(got, x.scale_poly(&LambdaPoly::lambda()));
            }
        }
    }

    #[test]
    fn degree_operator_identity() {
        // [α(-1)²𝟏]_{nn} acts as α(0)² + 2 Σ α(-k)α(k) = λ² + 2n on level n.
        let l = LambdaPoly::lambda();
        for n in 0..5u32 {
            for x in gr_basis(n) {
                let got = theta_apply(&UElement::single(a(&[1, 1]), n, n), &x).unwrap();
                assert_eq!(got, x.scale_poly(&(&l * &l + LambdaPoly::from(2 * n as i64))));
            }
        }
    }

    #[test]
    fn counterexample_cancellation() {
        for n in 1..=4u32 {
            let u = UElement::single(a(&[1]), n, n);
            let e = diamond(&u, &u).unwrap() - UElement::single(a(&[1, 1]), n, n)
                + UElement::single(one().scale(&rat(2 * n as i64)), n, n);
            for x in gr_basis(n) {
                assert!(theta_apply(&e, &x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn level_bookkeeping() {
        for v in partitions_up_to(3).into_iter().map(FockVector::basis) {
            for k in 0..4 {
                for l in 0..4 {
                    for x in gr_basis(l) {
                        let got = theta_apply(&UElement::single(v.clone(), k, l), &x).unwrap();
                        assert!(got.levels().iter().all(|&lv| lv == k));
                        // wrong level input is annihilated
                        let other = gr_basis(l + 1).remove(0);
                        assert!(theta_apply(&UElement::single(v.clone(), k, l), &other).unwrap().is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn numeric_evaluation_commutes() {
        let el = UElement::single(a(&[2, 1]) + a(&[1]), 2, 1) + UElement::single(a(&[1, 1]), 1, 1);
        for x0 in [rat(0), rat(1), rat(-2), crate::exact::ratio(3, 2)] {
            for x in gr_basis(1) {
                let formal = theta_apply(&el, &x).unwrap().evaluate_at(&x0);
                let numeric = theta_apply_in(&FockModule::numeric(x0.clone()), &el, &x).unwrap();
                assert_eq!(formal, numeric);
            }
        }
    }
}
