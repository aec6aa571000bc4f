use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{common_denominator, is_in_unit_interval, Rational};

/// Per-vertex rational demand in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DemandFunction {
    demands: Vec<Rational>,
}

impl DemandFunction {
    pub fn new(demands: Vec<Rational>) -> Result<Self> {
        if let Some((vertex, value)) = demands
            .iter()
            .enumerate()
            .find(|(_, q)| !is_in_unit_interval(q))
        {
            return Err(Error::DemandOutOfRange {
                vertex,
                value: value.clone(),
            });
        }
        Ok(DemandFunction { demands })
    }

    pub fn uniform(n: usize, value: Rational) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.demands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.demands.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.demands[v]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.demands
    }

    /// `w_f = Σ f(v)·w(v)`.
    pub fn pair(&self, weights: &[Rational]) -> Rational {
        self.demands
            .iter()
            .zip(weights)
            .fold(Rational::zero(), |acc, (f, w)| acc + f * w)
    }

    /// Least `N` with `N·f(v)` integral for every vertex.
    pub fn common_denominator(&self) -> BigInt {
        common_denominator(&self.demands)
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn range_checked() {
        assert!(DemandFunction::new(vec![ratio(1, 2), int(1), int(0)]).is_ok());
        assert!(matches!(
            DemandFunction::new(vec![ratio(1, 2), ratio(3, 2)]),
            Err(Error::DemandOutOfRange { vertex: 1, .. })
        ));
        assert!(DemandFunction::new(vec![ratio(-1, 2)]).is_err());
    }

    #[test]
    fn pairing_and_denominator() {
        let f = DemandFunction::new(vec![ratio(5, 14), ratio(3, 7), ratio(1, 2)]).unwrap();
        assert_eq!(f.common_denominator(), BigInt::from(14));
        assert_eq!(f.pair(&[int(14), int(7), int(0)]), int(8));
    }
}
