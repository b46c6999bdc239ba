//! Finite-support elements of `U^∞(V)` for `V = M(1)`, the products `∘ₙ`, `*ₙ`
//! and `◇`, and the generator families known to lie in `Q^∞(V)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binom, partitions_up_to, rat, sign, LambdaPoly, Rational};
use crate::fock::{l_minus_one, l_zero, mode, res_kernel, FockVector};

/// A finite sum of `[v]_{kl}`: the vector `v` of `M(1)` at row `k`, column `l`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UElement {
    entries: BTreeMap<(u32, u32), FockVector>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `[v]_{kl}`. Panics if `v` depends on λ.
    pub fn single(v: FockVector, k: u32, l: u32) -> Self {
        assert!(v.is_lambda_free(), "entries of U^inf(V) must lie in V");
        let mut entries = BTreeMap::new();
        if !v.is_zero() {
            entries.insert((k, l), v);
        }
        Self { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &FockVector)> {
        self.entries.iter().map(|(kl, v)| (*kl, v))
    }

    pub fn entry(&self, k: u32, l: u32) -> FockVector {
        self.entries.get(&(k, l)).cloned().unwrap_or_default()
    }

    pub fn columns(&self) -> BTreeSet<u32> {
        self.entries.keys().map(|&(_, l)| l).collect()
    }

    pub fn scale(&self, c: &Rational) -> UElement {
        let mut out = UElement::zero();
        for (&(k, l), v) in &self.entries {
            out += UElement::single(v.scale(c), k, l);
        }
        out
    }

    fn add_entry(&mut self, k: u32, l: u32, v: &FockVector) {
        let slot = self.entries.entry((k, l)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(k, l));
        }
    }
}

impl AddAssign for UElement {
    fn add_assign(&mut self, rhs: UElement) {
        for ((k, l), v) in rhs.entries {
            self.add_entry(k, l, &v);
        }
    }
}

impl SubAssign for UElement {
    fn sub_assign(&mut self, rhs: UElement) {
        for ((k, l), v) in rhs.entries {
            self.add_entry(k, l, &-v);
        }
    }
}

impl Add for UElement {
    type Output = UElement;
    fn add(mut self, rhs: UElement) -> UElement {
        self += rhs;
        self
    }
}

impl Sub for UElement {
    type Output = UElement;
    fn sub(mut self, rhs: UElement) -> UElement {
        self -= rhs;
        self
    }
}

impl Neg for UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement::zero() - self
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UElement({})", crate::literal::format_uelement(self))
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::format_uelement(self))
    }
}

fn add_scaled(acc: &mut FockVector, v: &FockVector, c: Rational) {
    acc.add_scaled(v, &LambdaPoly::constant(c));
}

/// `u ∘ₙ v = Res_x (1+x)^{wt u + n} Y(u, x) v / x^{2n+2}`.
pub fn circ_n(u: &FockVector, v: &FockVector, n: u32) -> Result<FockVector> {
    let n = n as i64;
    res_kernel(u, v, -2 * n - 2, n)
}

/// The level `n` Zhu product `u *ₙ v`.
pub fn star_n(u: &FockVector, v: &FockVector, n: u32) -> Result<FockVector> {
    let n = n as i64;
    let mut out = FockVector::zero();
    for m in 0..=n {
        let c = rat(sign(m)) * binom(m + n, n as u32);
        add_scaled(&mut out, &res_kernel(u, v, -n - m - 1, n)?, c);
    }
    Ok(out)
}

/// The vector `w` with `[u]_{kn} ◇ [v]_{nl} = [w]_{kl}`.
pub fn diamond_entry(u: &FockVector, k: u32, n: u32, v: &FockVector, l: u32) -> Result<FockVector> {
    let (k, n, l) = (k as i64, n as i64, l as i64);
    let top = -k + n - l - 1;
    let mut out = FockVector::zero();
    for m in 0..=n {
        let c = binom(top, m as u32);
        if c.is_zero() {
            continue;
        }
        add_scaled(&mut out, &res_kernel(u, v, top - m, l)?, c);
    }
    Ok(out)
}

/// Huang's product, extended bilinearly; `[u]_{km} ◇ [v]_{nl} = 0` when `m ≠ n`.
pub fn diamond(a: &UElement, b: &UElement) -> Result<UElement> {
    let mut out = UElement::zero();
    for ((k, m), u) in a.entries() {
        for ((n, l), v) in b.entries() {
            if m != n {
                continue;
            }
            let w = diamond_entry(u, k, m, v, l)?;
            out.add_entry(k, l, &w);
        }
    }
    Ok(out)
}

/// `Res_x x^{-k-l-p-2} (1+x)^l Y((1+x)^{L(0)} u, x) v`, the vector of an `O^∞_∘` generator.
pub fn o_infty_vector(u: &FockVector, v: &FockVector, k: u32, l: u32, p: u32) -> Result<FockVector> {
    res_kernel(u, v, -(k as i64) - l as i64 - p as i64 - 2, l as i64)
}

/// The residue generator of `O^∞(V)` placed at `(k, l)`.
pub fn o_infty_gen(u: &FockVector, v: &FockVector, k: u32, l: u32, p: u32) -> Result<UElement> {
    Ok(UElement::single(o_infty_vector(u, v, k, l, p)?, k, l))
}

/// `[(L(-1) + L(0) + l - k) v]_{kl}`.
pub fn l_gen(v: &FockVector, k: u32, l: u32) -> Result<UElement> {
    let mut w = l_minus_one(v)?;
    w += l_zero(v);
    add_scaled(&mut w, v, rat(l as i64 - k as i64));
    Ok(UElement::single(w, k, l))
}

/// The Jacobi-identity element with parameters `(k, l, p, n)`; it lives at `(k, l + p)`.
///
/// Needs `v` homogeneous and `l + p >= 0`.
pub fn j_gen(u: &FockVector, v: &FockVector, k: u32, l: i64, p: i64, n: i64) -> Result<UElement> {
    if l + p < 0 {
        return Err(Error::InvalidParameters(format!(
            "column index l + p = {} must be nonnegative",
            l + p
        )));
    }
    if !u.is_lambda_free() || !v.is_lambda_free() {
        return Err(Error::LambdaDependent);
    }
    if v.is_zero() || u.is_zero() {
        return Ok(UElement::zero());
    }
    let wt_v = v.homogeneous_weight().ok_or(Error::NotHomogeneous)? as i64;
    let col = (l + p) as u32;
    let ki = k as i64;
    let mut w = FockVector::zero();

    // Σ_{j : n+p-j >= 0} (-1)^j binom(p, j) [v]_{k, n+p-j} ◇ [u]_{n+p-j, l+p}
    for j in 0..=(n + p) {
        let c = rat(sign(j)) * binom(p, j as u32);
        if c.is_zero() {
            continue;
        }
        let mid = (n + p - j) as u32;
        add_scaled(&mut w, &diamond_entry(v, k, mid, u, col)?, c);
    }
    // - Σ_{j : l-n+k+p-j >= 0} (-1)^{p-j} binom(p, j) [u]_{k, ·} ◇ [v]_{·, l+p}
    for j in 0..=(l - n + ki + p) {
        let c = rat(sign(p - j)) * binom(p, j as u32);
        if c.is_zero() {
            continue;
        }
        let mid = (l - n + ki + p - j) as u32;
        add_scaled(&mut w, &diamond_entry(u, k, mid, v, col)?, -c);
    }
    // - Σ_j binom(wt v + n - k - 1, j) [v_{p+j} u]_{k, l+p}; v_{p+j} u = 0 past the degree bound.
    let last = wt_v + u.max_degree().unwrap_or(0) as i64 - 1;
    let mut j = 0i64;
    while p + j <= last {
        let c = binom(wt_v + n - ki - 1, j as u32);
        if !c.is_zero() {
            add_scaled(&mut w, &mode(v, p + j, u)?, -c);
        }
        j += 1;
    }
    Ok(UElement::single(w, k, col))
}

/// Moves every entry `(k, l)` to `(k-1, l-1)`.
pub fn shift_diag(a: &UElement) -> Result<UElement> {
    let mut out = UElement::zero();
    for ((k, l), v) in a.entries() {
        if k == 0 || l == 0 {
            return Err(Error::ShiftOutOfRange { row: k, col: l });
        }
        out.add_entry(k - 1, l - 1, v);
    }
    Ok(out)
}

/// Spanning vectors of `Oₙ(V)`: `u ∘ₙ v` and `(L(-1) + L(0)) v` over basis vectors
/// with `wt u + wt v <= weight_cutoff`.
pub fn o_n_span(n: u32, weight_cutoff: u32) -> Result<Vec<FockVector>> {
    let basis = partitions_up_to(weight_cutoff);
    let mut out = Vec::new();
    for pu in &basis {
        for pv in &basis {
            if pu.size() + pv.size() > weight_cutoff {
                continue;
            }
            let u = FockVector::basis(pu.clone());
            let v = FockVector::basis(pv.clone());
            out.push(circ_n(&u, &v, n)?);
        }
    }
    for pv in &basis {
        let v = FockVector::basis(pv.clone());
        out.push(l_minus_one(&v)? + l_zero(&v));
    }
    Ok(out)
}
