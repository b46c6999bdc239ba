//! Executable checks over parameter grids: the vertex algebra axioms for the
//! free-field vertex operators, the `◇`/`*ₙ` coincidence, the reduction
//! identities behind the diagonal shift property, the shift property of the
//! generator families, the counterexample family, and the level-one Zhu
//! algebra relation.
//!
//! Every check returns one [`CheckResult`] per grid point, in a fixed order.
//! Randomized grids take an explicit seed which is recorded in the results.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exact::{binom, partitions_up_to, rat, ratio, sign, LambdaPoly, Partition, Rational};
use crate::fock::{FockModule, FockVector};
use crate::grmod::{gr_basis, theta_apply, theta_apply_in, GrVector};
use crate::oracle::{diagonal_shift_report, in_qinf, MembershipReport};
use crate::uinf::{
    diamond, j_gen, l_gen, o_infty_gen, o_infty_vector, shift_diag, star_n, UElement,
};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: &str, params: Vec<(String, String)>, failure: Option<String>) -> Self {
        Self {
            name: name.to_string(),
            params,
            passed: failure.is_none(),
            detail: failure,
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        if self.passed {
            self.detail = Some(detail);
        }
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        write!(f, "{} {} {}", if self.passed { "PASS" } else { "FAIL" }, self.name, params)?;
        if let Some(d) = &self.detail {
            write!(f, " :: {d}")?;
        }
        Ok(())
    }
}

macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => {
        vec![$(($k.to_string(), $v.to_string())),*]
    };
}

fn failure_from(res: Result<Option<String>>) -> Option<String> {
    match res {
        Ok(f) => f,
        Err(e) => Some(format!("error: {e}")),
    }
}

fn membership_failure(report: &MembershipReport, what: &str) -> Option<String> {
    report.witness.as_ref().map(|w| {
        format!(
            "{what} acts nontrivially: column {} class {} -> {}",
            w.column, w.partition, w.image
        )
    })
}

/// Fock basis vectors of weight at most `w`.
pub fn basis_up_to(w: u32) -> Vec<FockVector> {
    partitions_up_to(w).into_iter().map(FockVector::basis).collect()
}

// ---------------------------------------------------------------------------
// Jacobi identity

#[derive(Clone, Debug)]
pub struct JacobiGrid {
    pub vectors: Vec<FockVector>,
    pub indices: Vec<i64>,
    pub targets: Vec<FockVector>,
    pub module: FockModule,
}

impl Default for JacobiGrid {
    fn default() -> Self {
        Self {
            vectors: basis_up_to(3),
            indices: (-2..=2).collect(),
            targets: basis_up_to(4),
            module: FockModule::formal(),
        }
    }
}

/// `(Σ_i binom(m,i) (a_{l+i}b)_{m+n-i} w, Σ_i (-1)^i binom(l,i) a_{m+l-i} b_{n+i} w
///   - Σ_i (-1)^{l+i} binom(l,i) b_{n+l-i} a_{m+i} w)`.
pub fn jacobi_sides(
    module: &FockModule,
    a: &FockVector,
    b: &FockVector,
    (l, m, n): (i64, i64, i64),
    w: &FockVector,
) -> Result<(FockVector, FockVector)> {
    let deg = |v: &FockVector| v.max_degree().unwrap_or(0) as i64;
    let (wa, wb, ww) = (deg(a), deg(b), deg(w));
    let vacuum = FockModule::vacuum();

    let mut lhs = FockVector::zero();
    // a_{l+i} b = 0 once l + i > wt a + wt b - 1
    for i in 0..=(wa + wb - 1 - l).max(-1) {
        let c = binom(m, i as u32);
        if c.is_zero() {
            continue;
        }
        let ab = vacuum.mode(a, l + i, b)?;
        lhs.add_scaled(&module.mode(&ab, m + n - i, w)?, &c.into());
    }

    let mut rhs = FockVector::zero();
    // b_{n+i} w = 0 once n + i > wt b + deg w - 1
    for i in 0..=(wb + ww - 1 - n).max(-1) {
        let c = rat(sign(i)) * binom(l, i as u32);
        if c.is_zero() {
            continue;
        }
        let bw = module.mode(b, n + i, w)?;
        rhs.add_scaled(&module.mode(a, m + l - i, &bw)?, &c.into());
    }
    for i in 0..=(wa + ww - 1 - m).max(-1) {
        let c = rat(sign(l + i)) * binom(l, i as u32);
        if c.is_zero() {
            continue;
        }
        let aw = module.mode(a, m + i, w)?;
        rhs.add_scaled(&module.mode(b, n + l - i, &aw)?, &(-c).into());
    }
    Ok((lhs, rhs))
}

pub fn check_jacobi(grid: &JacobiGrid) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for a in &grid.vectors {
        for b in &grid.vectors {
            for &l in &grid.indices {
                for &m in &grid.indices {
                    for &n in &grid.indices {
                        let failure = failure_from((|| {
                            for w in &grid.targets {
                                let (lhs, rhs) = jacobi_sides(&grid.module, a, b, (l, m, n), w)?;
                                if lhs != rhs {
                                    return Ok(Some(format!("target {w}: {lhs} != {rhs}")));
                                }
                            }
                            Ok(None)
                        })());
                        out.push(CheckResult::new(
                            "jacobi",
                            params!("a" => a, "b" => b, "l" => l, "m" => m, "n" => n),
                            failure,
                        ));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// ◇ versus *ₙ on the diagonal

pub fn check_diamond_star(nmax: u32, max_weight: u32) -> Vec<CheckResult> {
    let vs = basis_up_to(max_weight);
    let mut out = Vec::new();
    for n in 0..=nmax {
        for u in &vs {
            for v in &vs {
                let failure = failure_from((|| {
                    let lhs = diamond(&UElement::single(u.clone(), n, n), &UElement::single(v.clone(), n, n))?;
                    let rhs = UElement::single(star_n(u, v, n)?, n, n);
                    Ok((lhs != rhs).then(|| format!("{lhs} != {rhs}")))
                })());
                out.push(CheckResult::new("diamond-star", params!("n" => n, "u" => u, "v" => v), failure));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Reduction identities

#[derive(Clone, Debug)]
pub struct IndexGrid {
    pub vectors: Vec<FockVector>,
    /// Row and column indices run over `1..=index_max`.
    pub index_max: u32,
}

impl Default for IndexGrid {
    fn default() -> Self {
        Self {
            vectors: basis_up_to(3),
            index_max: 3,
        }
    }
}

/// `[u]_{k-1,i-1} ◇ [v]_{i-1,l-1} - shift([u]_{ki} ◇ [v]_{il})` lies in `Q^∞`.
pub fn check_prop_mult(grid: &IndexGrid) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let r = 1..=grid.index_max;
    for u in &grid.vectors {
        for v in &grid.vectors {
            for k in r.clone() {
                for i in r.clone() {
                    for l in r.clone() {
                        let failure = failure_from((|| {
                            let low = diamond(
                                &UElement::single(u.clone(), k - 1, i - 1),
                                &UElement::single(v.clone(), i - 1, l - 1),
                            )?;
                            let high = diamond(&UElement::single(u.clone(), k, i), &UElement::single(v.clone(), i, l))?;
                            let diff = low - shift_diag(&high)?;
                            Ok(membership_failure(&in_qinf(&diff), "difference"))
                        })());
                        out.push(CheckResult::new(
                            "mult",
                            params!("u" => u, "v" => v, "k" => k, "i" => i, "l" => l),
                            failure,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// `shift([u]_{k0} ◇ [v]_{0l})` lies in `Q^∞`.
pub fn check_prop_mult0(grid: &IndexGrid) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for u in &grid.vectors {
        for v in &grid.vectors {
            for k in 1..=grid.index_max {
                for l in 1..=grid.index_max {
                    let failure = failure_from((|| {
                        let prod = diamond(&UElement::single(u.clone(), k, 0), &UElement::single(v.clone(), 0, l))?;
                        Ok(membership_failure(&in_qinf(&shift_diag(&prod)?), "shifted product"))
                    })());
                    out.push(CheckResult::new("mult0", params!("u" => u, "v" => v, "k" => k, "l" => l), failure));
                }
            }
        }
    }
    out
}

/// A residue generator built at `(k', l')` stays in `Q^∞` when moved to any
/// `(k, l)` with `k <= k'` and `k - l = k' - l'`.
pub fn check_corollary_kl(grid: &IndexGrid, p_max: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for u in &grid.vectors {
        for v in &grid.vectors {
            for k1 in 0..=grid.index_max {
                for l1 in 0..=grid.index_max {
                    for p in 0..=p_max {
                        let failure = failure_from((|| {
                            let w = o_infty_vector(u, v, k1, l1, p)?;
                            for d in 1..=k1.min(l1) {
                                let moved = UElement::single(w.clone(), k1 - d, l1 - d);
                                if let Some(f) = membership_failure(&in_qinf(&moved), &format!("moved to ({}, {})", k1 - d, l1 - d)) {
                                    return Ok(Some(f));
                                }
                            }
                            Ok(None)
                        })());
                        out.push(CheckResult::new(
                            "corollary-kl",
                            params!("u" => u, "v" => v, "k'" => k1, "l'" => l1, "p" => p),
                            failure,
                        ));
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Diagonal shift property of the generator families

#[derive(Clone, Debug)]
pub struct TheoremGrid {
    pub o_vectors: Vec<FockVector>,
    pub o_index_max: u32,
    pub o_p_max: u32,
    pub j_vectors: Vec<FockVector>,
    pub j_k_max: u32,
    pub j_np_abs_max: i64,
    pub j_columns: Vec<i64>,
    pub combinations: usize,
    pub seed: u64,
}

impl Default for TheoremGrid {
    fn default() -> Self {
        Self {
            o_vectors: basis_up_to(3),
            o_index_max: 3,
            o_p_max: 2,
            j_vectors: basis_up_to(2),
            j_k_max: 2,
            j_np_abs_max: 2,
            j_columns: vec![1, 2],
            combinations: 50,
            seed: DEFAULT_SEED,
        }
    }
}

fn shift_check(name: &str, params: Vec<(String, String)>, element: Result<UElement>) -> (CheckResult, Option<UElement>) {
    let element = match element {
        Ok(e) => e,
        Err(e) => return (CheckResult::new(name, params, Some(format!("error: {e}"))), None),
    };
    let failure = match diagonal_shift_report(&element) {
        Err(e) => Some(format!("error: {e}")),
        Ok(r) => membership_failure(&r.original, "generator").or_else(|| membership_failure(&r.shifted, "shifted generator")),
    };
    (CheckResult::new(name, params, failure), Some(element))
}

pub fn check_theorem_main(grid: &TheoremGrid) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut generators: Vec<UElement> = Vec::new();
    let idx = 1..=grid.o_index_max;

    for u in &grid.o_vectors {
        for v in &grid.o_vectors {
            for k in idx.clone() {
                for l in idx.clone() {
                    for p in 0..=grid.o_p_max {
                        let (r, g) = shift_check(
                            "theorem-main/o-infty",
                            params!("u" => u, "v" => v, "k" => k, "l" => l, "p" => p),
                            o_infty_gen(u, v, k, l, p),
                        );
                        out.push(r);
                        generators.extend(g);
                    }
                }
            }
        }
    }
    for v in &grid.o_vectors {
        for k in idx.clone() {
            for l in idx.clone() {
                let (r, g) = shift_check("theorem-main/l-type", params!("v" => v, "k" => k, "l" => l), l_gen(v, k, l));
                out.push(r);
                generators.extend(g);
            }
        }
    }

    let np = -grid.j_np_abs_max..=grid.j_np_abs_max;
    for u in &grid.j_vectors {
        for v in &grid.j_vectors {
            for k in 0..=grid.j_k_max {
                for n in np.clone() {
                    for p in np.clone() {
                        for &col in &grid.j_columns {
                            let l = col - p;
                            let params = params!("u" => u, "v" => v, "k" => k, "l" => l, "p" => p, "n" => n);
                            let element = j_gen(u, v, k, l, p, n);
                            if k == 0 {
                                // Row 0 has no diagonal predecessor: membership only.
                                let failure = match element {
                                    Ok(e) => membership_failure(&in_qinf(&e), "generator"),
                                    Err(e) => Some(format!("error: {e}")),
                                };
                                out.push(CheckResult::new("theorem-main/jacobi", params, failure));
                            } else {
                                let (r, g) = shift_check("theorem-main/jacobi", params, element);
                                out.push(r);
                                generators.extend(g);
                            }
                        }
                    }
                }
            }
        }
    }

    // Random combinations of generators sharing a support position.
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    let nonzero: Vec<&UElement> = generators.iter().filter(|g| !g.is_zero()).collect();
    for t in 0..grid.combinations {
        if nonzero.len() < 2 {
            break;
        }
        let first = nonzero[rng.gen_range(0..nonzero.len())];
        let support: Vec<(u32, u32)> = first.entries().map(|(kl, _)| kl).collect();
        let partners: Vec<&&UElement> = nonzero
            .iter()
            .filter(|g| g.entries().map(|(kl, _)| kl).collect::<Vec<_>>() == support)
            .collect();
        let second = partners[rng.gen_range(0..partners.len())];
        let c1 = nonzero_coefficient(&mut rng);
        let c2 = nonzero_coefficient(&mut rng);
        let combo = first.scale(&c1) + second.scale(&c2);
        let (r, _) = shift_check(
            "theorem-main/combination",
            params!("seed" => grid.seed, "draw" => t, "c1" => c1, "c2" => c2),
            Ok(combo),
        );
        out.push(r);
    }
    out
}

fn nonzero_coefficient(rng: &mut ChaCha8Rng) -> Rational {
    let choices = [-2i64, -1, 1, 2];
    rat(choices[rng.gen_range(0..choices.len())])
}

// ---------------------------------------------------------------------------
// The counterexample family

/// `E_n = [α(-1)𝟏]_{nn} ◇ [α(-1)𝟏]_{nn} - [α(-1)²𝟏]_{nn} + 2n [𝟏]_{nn}`.
pub fn counterexample_element(n: u32) -> UElement {
    let u = UElement::single(FockVector::monomial(&[1]), n, n);
    diamond(&u, &u).expect("lambda-free inputs") - UElement::single(FockVector::monomial(&[1, 1]), n, n)
        + UElement::single(FockVector::vacuum().scale(&rat(2 * n as i64)), n, n)
}

/// Outcome of the counterexample analysis for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleOutcome {
    pub n: u32,
    pub member: bool,
    pub shifted_member: bool,
    pub witness_column: Option<u32>,
    pub witness_partition: Option<Partition>,
    /// `c` when the witness image is exactly `c` times the witness class.
    pub witness_factor: Option<LambdaPoly>,
}

pub fn analyze_counterexample(n: u32) -> CounterexampleOutcome {
    let e = counterexample_element(n);
    let report = diagonal_shift_report(&e).expect("E_n sits at (n, n) with n >= 1");
    let witness = report.shifted.witness.as_ref();
    let witness_factor = witness.and_then(|w| {
        let c = w.image.coeff(&w.partition);
        (GrVector::class(w.partition.clone()).scale_poly(&c) == w.image).then_some(c)
    });
    CounterexampleOutcome {
        n,
        member: report.original.member,
        shifted_member: report.shifted.member,
        witness_column: witness.map(|w| w.column),
        witness_partition: witness.map(|w| w.partition.clone()),
        witness_factor,
    }
}

pub fn check_counterexample(nmax: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        let o = analyze_counterexample(n);
        let two = LambdaPoly::from(2);
        let failure = if !o.member {
            Some("E_n is not in Q^inf".to_string())
        } else if o.shifted_member {
            Some("shifted E_n is in Q^inf".to_string())
        } else if o.witness_column != Some(n - 1) || o.witness_partition != Some(Partition::ones(n - 1)) {
            Some(format!("unexpected witness {:?} {:?}", o.witness_column, o.witness_partition))
        } else if o.witness_factor.as_ref() != Some(&two) {
            Some(format!("witness factor {:?}", o.witness_factor))
        } else {
            None
        };
        out.push(
            CheckResult::new("counterexample", params!("n" => n), failure)
                .with_detail("member / shifted non-member / witness factor 2".to_string()),
        );
    }
    // The E_n sit on distinct diagonal positions, so nonzero ones are independent.
    let supports: Vec<Vec<(u32, u32)>> =
        (1..=nmax).map(|n| counterexample_element(n).entries().map(|(kl, _)| kl).collect()).collect();
    let independent = supports.iter().zip(1..=nmax).all(|(s, n)| s == &vec![(n, n)]);
    out.push(CheckResult::new(
        "counterexample/independence",
        params!("n_max" => nmax),
        (!independent).then(|| format!("supports {supports:?}")),
    ));
    out
}

// ---------------------------------------------------------------------------
// The level one Zhu algebra relation (x² - y)(x² - y + 2)

pub struct A1Relation {
    /// `α(-1)𝟏 *₁ α(-1)𝟏 - α(-1)²𝟏`
    pub first: FockVector,
    /// `first + 2·𝟏`
    pub second: FockVector,
    /// `first *₁ second`
    pub product: FockVector,
}

pub fn a1_relation() -> A1Relation {
    let u = FockVector::monomial(&[1]);
    let y = FockVector::monomial(&[1, 1]);
    let first = star_n(&u, &u, 1).expect("lambda-free") - y;
    let second = first.clone() + FockVector::vacuum().scale(&rat(2));
    let product = star_n(&first, &second, 1).expect("lambda-free");
    A1Relation { first, second, product }
}

/// Action of `[v]_{nn}` on the basis of `Grₙ`, checked to be `c · id`.
fn acts_as_scalar(v: &FockVector, n: u32, c: &LambdaPoly) -> Option<String> {
    for x in gr_basis(n) {
        let got = match theta_apply(&UElement::single(v.clone(), n, n), &x) {
            Ok(g) => g,
            Err(e) => return Some(format!("error: {e}")),
        };
        if got != x.scale_poly(c) {
            return Some(format!("on {x}: got {got}, expected ({c}) * {x}"));
        }
    }
    None
}

pub fn check_a1_heis() -> Vec<CheckResult> {
    let rel = a1_relation();
    let cases: [(&str, &FockVector, u32, i64); 6] = [
        ("product", &rel.product, 0, 0),
        ("product", &rel.product, 1, 0),
        ("x^2-y", &rel.first, 0, 0),
        ("x^2-y", &rel.first, 1, -2),
        ("x^2-y+2", &rel.second, 0, 2),
        ("x^2-y+2", &rel.second, 1, 0),
    ];
    cases
        .iter()
        .map(|(what, v, level, c)| {
            CheckResult::new(
                "a1-heis",
                params!("element" => what, "level" => level, "scalar" => c),
                acts_as_scalar(v, *level, &LambdaPoly::from(*c)),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// ϑ is an algebra homomorphism

/// A random finite-support element: 1 to 3 entries at indices `<= index_max`,
/// each a combination of basis vectors of weight `<= 2` with coefficients in `{-2..2}`.
pub fn random_element(rng: &mut ChaCha8Rng, index_max: u32) -> UElement {
    let basis = basis_up_to(2);
    let mut out = UElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut v = FockVector::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let b = &basis[rng.gen_range(0..basis.len())];
            v.add_scaled(b, &LambdaPoly::constant(rat(rng.gen_range(-2..=2))));
        }
        out += UElement::single(v, rng.gen_range(0..=index_max), rng.gen_range(0..=index_max));
    }
    out
}

pub fn check_theta_homomorphism(pairs: usize, index_max: u32, level_max: u32, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|t| {
            let a = random_element(&mut rng, index_max);
            let b = random_element(&mut rng, index_max);
            let failure = failure_from((|| {
                let ab = diamond(&a, &b)?;
                for level in 0..=level_max {
                    for x in gr_basis(level) {
                        let lhs = theta_apply(&ab, &x)?;
                        let rhs = theta_apply(&a, &theta_apply(&b, &x)?)?;
                        if lhs != rhs {
                            return Ok(Some(format!("on {x}: {lhs} != {rhs}")));
                        }
                    }
                }
                Ok(None)
            })());
            CheckResult::new(
                "theta-homomorphism",
                params!("seed" => seed, "draw" => t, "A" => a, "B" => b),
                failure,
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Formal λ versus numeric highest weights

pub fn numeric_weights() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(-2), ratio(3, 2)]
}

/// Sample elements drawn from the other checks.
pub fn consistency_samples() -> Vec<(String, UElement)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let e = counterexample_element(n);
        out.push((format!("E_{n}"), e.clone()));
        out.push((format!("shift E_{n}"), shift_diag(&e).expect("n >= 1")));
    }
    let rel = a1_relation();
    for (name, v) in [("x^2-y", rel.first), ("x^2-y+2", rel.second), ("product", rel.product)] {
        out.push((format!("{name} at (0,0)"), UElement::single(v.clone(), 0, 0)));
        out.push((format!("{name} at (1,1)"), UElement::single(v, 1, 1)));
    }
    let u = FockVector::monomial(&[1]);
    let w = FockVector::monomial(&[2, 1]);
    let gens = [
        ("o-infty", o_infty_gen(&u, &w, 1, 2, 0)),
        ("l-type", l_gen(&w, 2, 1)),
        ("jacobi", j_gen(&u, &u, 1, 1, 0, 1)),
    ];
    for (name, g) in gens {
        let g = g.expect("valid generator parameters");
        out.push((format!("shift {name}"), shift_diag(&g).expect("rows and columns >= 1")));
        out.push((name.to_string(), g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for t in 0..5 {
        let a = random_element(&mut rng, 3);
        let b = random_element(&mut rng, 3);
        out.push((format!("random product {t}"), diamond(&a, &b).expect("lambda-free")));
        out.push((format!("random element {t}"), a));
    }
    out
}

pub fn check_formal_numeric(samples: &[(String, UElement)], level_max: u32) -> Vec<CheckResult> {
    let weights = numeric_weights();
    let mut out = Vec::new();
    for (name, element) in samples {
        for x0 in &weights {
            let module = FockModule::numeric(x0.clone());
            let failure = failure_from((|| {
                for level in 0..=level_max {
                    for x in gr_basis(level) {
                        let formal = theta_apply(element, &x)?.evaluate_at(x0);
                        let numeric = theta_apply_in(&module, element, &x)?;
                        if formal != numeric {
                            return Ok(Some(format!("on {x}: {formal} != {numeric}")));
                        }
                    }
                }
                Ok(None)
            })());
            out.push(CheckResult::new(
                "formal-numeric",
                params!("element" => name, "lambda" => x0),
                failure,
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Suites

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Jacobi,
    DiamondStar,
    Mult,
    TheoremMain,
    Counterexample,
    A1Heis,
    Homomorphism,
    Consistency,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "jacobi",
        "diamond-star",
        "mult",
        "theorem-main",
        "counterexample",
        "a1-heis",
        "homomorphism",
        "consistency",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "jacobi" => Suite::Jacobi,
            "diamond-star" => Suite::DiamondStar,
            "mult" => Suite::Mult,
            "theorem-main" => Suite::TheoremMain,
            "counterexample" => Suite::Counterexample,
            "a1-heis" => Suite::A1Heis,
            "homomorphism" => Suite::Homomorphism,
            "consistency" => Suite::Consistency,
            "all" => Suite::All,
            other => {
                return Err(format!(
                    "unknown suite '{other}', expected one of: {}",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

/// Runs a suite on its default grid.
pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Jacobi => check_jacobi(&JacobiGrid::default()),
        Suite::DiamondStar => check_diamond_star(3, 3),
        Suite::Mult => {
            let grid = IndexGrid::default();
            let mut out = check_prop_mult(&grid);
            out.extend(check_prop_mult0(&grid));
            out.extend(check_corollary_kl(&grid, 2));
            out
        }
        Suite::TheoremMain => check_theorem_main(&TheoremGrid::default()),
        Suite::Counterexample => check_counterexample(4),
        Suite::A1Heis => check_a1_heis(),
        Suite::Homomorphism => check_theta_homomorphism(50, 3, 3, DEFAULT_SEED),
        Suite::Consistency => check_formal_numeric(&consistency_samples(), 3),
        Suite::All => [
            Suite::Jacobi,
            Suite::DiamondStar,
            Suite::Mult,
            Suite::TheoremMain,
            Suite::Counterexample,
            Suite::A1Heis,
            Suite::Homomorphism,
            Suite::Consistency,
        ]
        .into_iter()
        .flat_map(run_suite)
        .collect(),
    }
}
