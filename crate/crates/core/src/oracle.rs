//! Membership in `Q^∞(M(1))` for finite-support elements.
//!
//! Every lower-bounded generalized `M(1)`-module is `M(1) ⊗ Ω(W)` as a module
//! for the Heisenberg algebra, with `α(0)` acting on `Ω(W)` by some operator
//! `h`. The ϑ-image of `A` on a class `[α(-i1)⋯α(-ij) ⊗ w]` is a polynomial in
//! `h` applied to `w`, and that polynomial is exactly what ϑ computes in
//! `M(1, λ)` with λ formal. A polynomial identity in λ survives substituting
//! any operator for λ, and a nonzero polynomial has a rational non-root, which
//! gives a one-dimensional `Ω(W)` on which `A` acts nontrivially. So `A` lies
//! in `Q^∞` iff its formal ϑ-image vanishes on every basis class of every
//! column in its support.

use crate::error::Result;
use crate::exact::Partition;
use crate::fock::FockModule;
use crate::grmod::{gr_basis, theta_apply_in, GrVector};
use crate::uinf::{shift_diag, UElement};

/// A basis class on which the element acts nontrivially.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub column: u32,
    pub partition: Partition,
    pub image: GrVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub member: bool,
    pub witness: Option<Witness>,
    pub checked_columns: Vec<u32>,
}

/// Membership test using the formal module `M(1, λ)`.
pub fn in_qinf(a: &UElement) -> MembershipReport {
    in_qinf_in(&FockModule::formal(), a)
}

/// Same test in an arbitrary Fock module; with a numeric weight this only
/// certifies vanishing on that one module.
pub fn in_qinf_in(module: &FockModule, a: &UElement) -> MembershipReport {
    let checked_columns: Vec<u32> = a.columns().into_iter().collect();
    for &l in &checked_columns {
        for class in gr_basis(l) {
            let image = theta_apply_in(module, a, &class)
                .expect("U^inf entries are lambda-free by construction");
            if !image.is_zero() {
                let partition = class.terms().next().map(|(_, p, _)| p.clone()).unwrap_or_default();
                return MembershipReport {
                    member: false,
                    witness: Some(Witness {
                        column: l,
                        partition,
                        image,
                    }),
                    checked_columns,
                };
            }
        }
    }
    MembershipReport {
        member: true,
        witness: None,
        checked_columns,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub original: MembershipReport,
    pub shifted: MembershipReport,
}

impl ShiftReport {
    /// The diagonal shift property only constrains members of `Q^∞`.
    pub fn satisfies_property(&self) -> bool {
        !self.original.member || self.shifted.member
    }
}

pub fn diagonal_shift_report(a: &UElement) -> Result<ShiftReport> {
    let shifted = shift_diag(a)?;
    Ok(ShiftReport {
        original: in_qinf(a),
        shifted: in_qinf(&shifted),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::{rat, LambdaPoly};
    use crate::fock::tests::a;
    use crate::fock::FockVector;
    use crate::uinf::{diamond, o_infty_gen};

    fn e_n(n: u32) -> UElement {
        let u = UElement::single(a(&[1]), n, n);
        diamond(&u, &u).unwrap() - UElement::single(a(&[1, 1]), n, n)
            + UElement::single(FockVector::vacuum().scale(&rat(2 * n as i64)), n, n)
    }

    #[test]
    fn zero_is_member() {
        let r = in_qinf(&UElement::zero());
        assert!(r.member);
        assert!(r.witness.is_none());
        assert!(r.checked_columns.is_empty());
    }

    #[test]
    fn counterexample_family() {
        for n in 1..=4 {
            let e = e_n(n);
            assert!(in_qinf(&e).member);
            let report = diagonal_shift_report(&e).unwrap();
            assert!(!report.satisfies_property());
            let w = report.shifted.witness.unwrap();
            assert_eq!(w.column, n - 1);
            assert_eq!(w.partition, Partition::ones(n - 1));
            assert_eq!(w.image, GrVector::class(Partition::ones(n - 1)).scale_poly(&LambdaPoly::from(2)));
        }
    }

    #[test]
    fn off_diagonal_vacuum_is_member() {
        // Y(𝟏, x) = 1 has only the mode -1, and ϑ([𝟏]_{01}) needs mode 0.
        let r = in_qinf(&UElement::single(FockVector::vacuum(), 0, 1));
        assert!(r.member);
        assert_eq!(r.checked_columns, vec![1]);
    }

    #[test]
    fn non_member_witness() {
        let r = in_qinf(&UElement::single(a(&[1]), 2, 2));
        assert!(!r.member);
        let w = r.witness.unwrap();
        assert_eq!(w.column, 2);
        assert_eq!(w.partition, Partition::ones(2));
        assert_eq!(w.image.coeff(&Partition::ones(2)), LambdaPoly::lambda());
    }

    #[test]
    fn shift_report_on_generator() {
        let g = o_infty_gen(&a(&[1]), &a(&[1]), 1, 1, 0).unwrap();
        let r = diagonal_shift_report(&g).unwrap();
        assert!(r.original.member && r.shifted.member);
        assert!(r.satisfies_property());
        let bad = UElement::single(a(&[1]), 0, 2);
        assert_eq!(diagonal_shift_report(&bad), Err(Error::ShiftOutOfRange { row: 0, col: 2 }));
    }

    #[test]
    fn disjoint_columns_additive() {
        let member = e_n(2);
        let non = UElement::single(a(&[1]), 1, 1);
        let also_member = o_infty_gen(&a(&[2]), &a(&[1]), 3, 3, 1).unwrap();
        assert!(!in_qinf(&(member.clone() + non)).member);
        assert!(in_qinf(&(member + also_member)).member);
    }
}
