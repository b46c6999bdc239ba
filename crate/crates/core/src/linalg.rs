//! Exact span membership for λ-free vectors, by incremental row reduction.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exact::{Partition, Rational};
use crate::fock::FockVector;

type Row = BTreeMap<Partition, Rational>;

/// Row-echelon basis of a subspace of `M(1)`; each row is keyed by its largest partition.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    rows: BTreeMap<Partition, Row>,
}

fn to_row(v: &FockVector) -> Row {
    assert!(v.is_lambda_free(), "span computations need lambda-free vectors");
    v.terms().map(|(p, c)| (p.clone(), c.constant_term())).collect()
}

impl SpanBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a FockVector>>(vs: I) -> Self {
        let mut b = Self::new();
        for v in vs {
            b.insert(v);
        }
        b
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: Row) -> Row {
        let mut bound: Option<Partition> = None;
        loop {
            let candidates: Box<dyn DoubleEndedIterator<Item = (&Partition, &Rational)>> = match &bound {
                Some(b) => Box::new(row.range(..b.clone())),
                None => Box::new(row.iter()),
            };
            let hit = candidates
                .rev()
                .find(|(p, _)| self.rows.contains_key(*p))
                .map(|(p, c)| (p.clone(), c.clone()));
            let Some((pivot, c)) = hit else {
                return row;
            };
            // Pivot rows are normalized to 1 at their pivot and only touch smaller keys.
            for (p, x) in &self.rows[&pivot] {
                let slot = row.entry(p.clone()).or_insert_with(Rational::zero);
                *slot -= &c * x;
                if slot.is_zero() {
                    row.remove(p);
                }
            }
            bound = Some(pivot);
        }
    }

    /// Adds `v` to the spanning set; returns false when it was already in the span.
    pub fn insert(&mut self, v: &FockVector) -> bool {
        let row = self.reduce(to_row(v));
        let Some((pivot, lead)) = row.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
            return false;
        };
        let row: Row = row.into_iter().map(|(p, c)| (p, c / &lead)).collect();
        self.rows.insert(pivot, row);
        true
    }

    pub fn contains(&self, v: &FockVector) -> bool {
        self.reduce(to_row(v)).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::fock::tests::a;

    #[test]
    fn span_membership() {
        let gens = [a(&[1]) + a(&[2]), a(&[2]) - a(&[1, 1]), a(&[1]) + a(&[1, 1])];
        let b = SpanBasis::from_vectors(&gens);
        // third generator = first - second
        assert_eq!(b.rank(), 2);
        assert!(b.contains(&(a(&[1]).scale(&rat(3)) + a(&[2]).scale(&rat(3)))));
        assert!(b.contains(&(a(&[1, 1]) + a(&[1]))));
        assert!(!b.contains(&a(&[1])));
        assert!(b.contains(&FockVector::zero()));
    }
}
