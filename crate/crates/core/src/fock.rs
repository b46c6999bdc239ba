//! Heisenberg Fock modules `M(1, λ)` and the vertex operators of `M(1)` acting on them.
//!
//! A basis vector `α(-n1)⋯α(-nr)𝟏` is stored as the partition `(n1, …, nr)`.
//! Coefficients are polynomials in λ, the α(0)-eigenvalue of the highest
//! weight vector. Elements of the vertex algebra itself are the λ-free vectors
//! of the module with highest weight 0.
//!
//! Vertex operators use the free-field realization
//! `Y(α(-n1)⋯α(-nr)𝟏, x) = :∂^{(n1-1)}α(x) ⋯ ∂^{(nr-1)}α(x):` where
//! `∂^{(k)} = (1/k!) (d/dx)^k` and normal ordering puts the modes `α(j)`,
//! `j < 0`, to the left of the modes with `j >= 0`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{binom, rat, LambdaPoly, Partition, Rational};

/// Finite linear combination of Fock basis monomials with coefficients in `ℚ[λ]`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FockVector {
    terms: BTreeMap<Partition, LambdaPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The vacuum `𝟏`.
    pub fn vacuum() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(p: Partition) -> Self {
        Self::term(p, LambdaPoly::one())
    }

    /// `α(-parts[0])⋯α(-parts[r-1])𝟏`. Panics on a zero part.
    pub fn monomial(parts: &[u32]) -> Self {
        Self::basis(Partition::new(parts.to_vec()).expect("parts must be positive"))
    }

    pub fn term(p: Partition, c: LambdaPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(p, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_lambda_free(&self) -> bool {
        self.terms.values().all(LambdaPoly::is_lambda_free)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Partition) -> LambdaPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Largest Fock degree among the stored terms.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// The weight of a nonzero homogeneous vector.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut sizes = self.terms.keys().map(Partition::size);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    /// The terms of Fock degree exactly `d`.
    pub fn degree_part(&self, d: u32) -> FockVector {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, p: Partition, c: LambdaPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LambdaPoly) {
        if c.is_zero() {
            return;
        }
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> FockVector {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x.scale(c))).collect(),
        }
    }

    pub fn scale_poly(&self, c: &LambdaPoly) -> FockVector {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Substitutes a numeric value for λ in every coefficient.
    pub fn evaluate_at(&self, x: &Rational) -> FockVector {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), LambdaPoly::constant(c.evaluate_at(x)));
        }
        out
    }

    pub fn weight_split(&self) -> WeightSplit {
        let mut components: BTreeMap<u32, FockVector> = BTreeMap::new();
        for (p, c) in &self.terms {
            components
                .entry(p.size())
                .or_default()
                .terms
                .insert(p.clone(), c.clone());
        }
        WeightSplit { components }
    }
}

impl AddAssign<&FockVector> for FockVector {
    fn add_assign(&mut self, rhs: &FockVector) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl AddAssign for FockVector {
    fn add_assign(&mut self, rhs: FockVector) {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl SubAssign<&FockVector> for FockVector {
    fn sub_assign(&mut self, rhs: &FockVector) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c.clone());
        }
    }
}

impl Add for FockVector {
    type Output = FockVector;
    fn add(mut self, rhs: FockVector) -> FockVector {
        self += rhs;
        self
    }
}

impl Sub for FockVector {
    type Output = FockVector;
    fn sub(mut self, rhs: FockVector) -> FockVector {
        self -= &rhs;
        self
    }
}

impl Neg for FockVector {
    type Output = FockVector;
    fn neg(self) -> FockVector {
        Self {
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockVector({})", crate::literal::format_vector(self))
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::literal::format_vector(self))
    }
}

/// A vector split into its homogeneous components, keyed by weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSplit {
    pub components: BTreeMap<u32, FockVector>,
}

impl WeightSplit {
    pub fn recombine(&self) -> FockVector {
        let mut out = FockVector::zero();
        for v in self.components.values() {
            out += v;
        }
        out
    }
}

/// A Fock module `M(1, h)`: α(0) acts on the highest weight vector by `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FockModule {
    highest_weight: LambdaPoly,
}

type ModeKey = (LambdaPoly, Partition, i64, Partition);

thread_local! {
    static MODE_CACHE: RefCell<HashMap<ModeKey, FockVector>> = RefCell::new(HashMap::new());
}

impl FockModule {
    /// The vertex operator algebra `M(1)` as a module over itself.
    pub fn vacuum() -> Self {
        Self::with_weight(LambdaPoly::zero())
    }

    /// `M(1, λ)` with formal highest weight.
    pub fn formal() -> Self {
        Self::with_weight(LambdaPoly::lambda())
    }

    pub fn numeric(h: Rational) -> Self {
        Self::with_weight(LambdaPoly::constant(h))
    }

    pub fn with_weight(highest_weight: LambdaPoly) -> Self {
        Self { highest_weight }
    }

    pub fn highest_weight(&self) -> &LambdaPoly {
        &self.highest_weight
    }

    /// The Heisenberg mode `α(m)`, with `[α(m), α(n)] = m δ_{m+n,0}`.
    pub fn alpha(&self, m: i64, w: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (p, c) in &w.terms {
            self.alpha_basis_into(m, p, c, &mut out);
        }
        out
    }

    fn alpha_basis_into(&self, m: i64, p: &Partition, c: &LambdaPoly, out: &mut FockVector) {
        match m {
            0 => out.add_term(p.clone(), c * &self.highest_weight),
            m if m < 0 => out.add_term(p.with_part((-m) as u32), c.clone()),
            m => {
                let part = m as u32;
                let mult = p.multiplicity(part);
                if let Some(q) = p.without_part(part) {
                    out.add_term(q, c.scale(&rat(m * mult as i64)));
                }
            }
        }
    }

    /// `v_m w` for `v` in `M(1)`.
    pub fn mode(&self, v: &FockVector, m: i64, w: &FockVector) -> Result<FockVector> {
        if !v.is_lambda_free() {
            return Err(Error::LambdaDependent);
        }
        let mut out = FockVector::zero();
        for (p, c) in &v.terms {
            let piece = self.monomial_mode(p, m, w);
            out.add_scaled(&piece, c);
        }
        Ok(out)
    }

    fn monomial_mode(&self, mono: &Partition, m: i64, w: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        let Some(top) = w.max_degree() else {
            return out;
        };
        // The result has degree deg(w) + wt - m - 1.
        if top as i64 + mono.size() as i64 - m - 1 < 0 {
            return out;
        }
        for (q, c) in &w.terms {
            let piece = self.basis_mode(mono, m, q);
            out.add_scaled(&piece, c);
        }
        out
    }

    fn basis_mode(&self, mono: &Partition, m: i64, target: &Partition) -> FockVector {
        let Some((n, rest)) = mono.split_first() else {
            return if m == -1 {
                FockVector::basis(target.clone())
            } else {
                FockVector::zero()
            };
        };
        let e = target.size() as i64;
        if e + mono.size() as i64 - m - 1 < 0 {
            return FockVector::zero();
        }
        let key = (self.highest_weight.clone(), mono.clone(), m, target.clone());
        if let Some(hit) = MODE_CACHE.with(|c| c.borrow().get(&key).cloned()) {
            return hit;
        }

        // (α(-n) rest)_m = Σ_{j<0} c_n(j) α(j) rest_{m-n-j} + Σ_{j>=0} c_n(j) rest_{m-n-j} α(j)
        // with c_n(j) = binom(-j-1, n-1) the coefficient of x^{-j-n} in ∂^{(n-1)}α(x).
        let n = n as i64;
        let r = rest.size() as i64;
        let basis = FockVector::basis(target.clone());
        let mut out = FockVector::zero();
        for j in 0..=e {
            let c = binom(-j - 1, (n - 1) as u32);
            if c.is_zero() {
                continue;
            }
            let lowered = self.alpha(j, &basis);
            if lowered.is_zero() {
                continue;
            }
            let piece = self.monomial_mode(&rest, m - n - j, &lowered);
            out.add_scaled(&piece, &LambdaPoly::constant(c));
        }
        // rest_{m-n-j} on a degree e vector vanishes unless e + r - (m - n - j) - 1 >= 0.
        let j_min = m - n + 1 - e - r;
        for j in j_min..=-n {
            let c = binom(-j - 1, (n - 1) as u32);
            if c.is_zero() {
                continue;
            }
            let inner = self.basis_mode(&rest, m - n - j, target);
            if inner.is_zero() {
                continue;
            }
            out.add_scaled(&self.alpha(j, &inner), &LambdaPoly::constant(c));
        }

        MODE_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
        out
    }

    /// `Res_x x^t (1+x)^s Y((1+x)^{L(0)} u, x) v`.
    pub fn res_kernel(&self, u: &FockVector, v: &FockVector, t: i64, s: i64) -> Result<FockVector> {
        if !u.is_lambda_free() {
            return Err(Error::LambdaDependent);
        }
        let mut out = FockVector::zero();
        let Some(top) = v.max_degree() else {
            return Ok(out);
        };
        for (d, ud) in u.weight_split().components {
            // u_{t+i} v vanishes once t + i > deg(v) + d - 1.
            let last = top as i64 + d as i64 - 1;
            let mut i = 0i64;
            while t + i <= last {
                let c = binom(s + d as i64, i as u32);
                if !c.is_zero() {
                    let piece = self.mode(&ud, t + i, v)?;
                    out.add_scaled(&piece, &LambdaPoly::constant(c));
                }
                i += 1;
            }
        }
        Ok(out)
    }
}

/// `α(m) w` in `M(1, λ)` with formal λ.
pub fn alpha_apply(m: i64, w: &FockVector) -> FockVector {
    FockModule::formal().alpha(m, w)
}

/// `v_m w` computed inside `M(1)`: α(0) annihilates the vacuum.
pub fn mode(v: &FockVector, m: i64, w: &FockVector) -> Result<FockVector> {
    FockModule::vacuum().mode(v, m, w)
}

/// `L(0)`: scales each basis monomial by its Fock degree.
pub fn l_zero(v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (p, c) in &v.terms {
        out.add_term(p.clone(), c.scale(&rat(p.size() as i64)));
    }
    out
}

/// `L(-1) v = Res_x x^{-2} Y(v, x) 𝟏 = v_{-2} 𝟏`.
pub fn l_minus_one(v: &FockVector) -> Result<FockVector> {
    mode(v, -2, &FockVector::vacuum())
}

/// [`FockModule::res_kernel`] inside `M(1)`.
pub fn res_kernel(u: &FockVector, v: &FockVector, t: i64, s: i64) -> Result<FockVector> {
    FockModule::vacuum().res_kernel(u, v, t, s)
}
