use crate::error::{Error, Result};
use crate::scalar::Count;

/// Rational generating function with integer coefficient lists in
/// ascending powers. Construction normalizes the denominator constant
/// term to 1 (negating both lists if it is -1) and rejects non-units:
/// power-series coefficients are integral only for unit constant terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGf<T> {
    numerator: Vec<T>,
    denominator: Vec<T>,
}

impl<T: Count> RationalGf<T> {
    pub fn new(numerator: Vec<T>, denominator: Vec<T>) -> Result<Self> {
        let head = denominator
            .first()
            .cloned()
            .ok_or_else(|| Error::NonUnitConstantTerm("empty denominator".into()))?;
        if head == T::one() {
            Ok(RationalGf {
                numerator,
                denominator,
            })
        } else if head == -T::one() {
            Ok(RationalGf {
                numerator: numerator.into_iter().map(|c| -c).collect(),
                denominator: denominator.into_iter().map(|c| -c).collect(),
            })
        } else {
            Err(Error::NonUnitConstantTerm(head.to_string()))
        }
    }

    pub fn numerator(&self) -> &[T] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[T] {
        &self.denominator
    }

    /// First `terms` power-series coefficients, via the linear
    /// recurrence the denominator induces.
    pub fn expand(&self, terms: usize) -> Vec<T> {
        let mut out: Vec<T> = Vec::with_capacity(terms);
        for t in 0..terms {
            let mut c = self.numerator.get(t).cloned().unwrap_or_else(T::zero);
            for j in 1..self.denominator.len().min(t + 1) {
                c = c - self.denominator[j].clone() * out[t - j].clone();
            }
            out.push(c);
        }
        out
    }

    /// `(1-x)/(1-2x-x²)` — the half-companion Pell numbers from n = 0.
    pub fn pell_h() -> Self {
        let i = T::from_int;
        RationalGf {
            numerator: vec![i(1), i(-1)],
            denominator: vec![i(1), i(-2), i(-1)],
        }
    }

    /// `x/(1-2x-x²)` — the Pell numbers from n = 0.
    pub fn pell_p() -> Self {
        let i = T::from_int;
        RationalGf {
            numerator: vec![i(0), i(1)],
            denominator: vec![i(1), i(-2), i(-1)],
        }
    }

    /// `1/(1-x-3x²-x³)` — the A counts from n = 0.
    pub fn family_a() -> Self {
        let i = T::from_int;
        RationalGf {
            numerator: vec![i(1)],
            denominator: vec![i(1), i(-1), i(-3), i(-1)],
        }
    }

    /// `(2x+x²)/(1-x-3x²-x³)` — the B counts from n = 0.
    pub fn family_b() -> Self {
        let i = T::from_int;
        RationalGf {
            numerator: vec![i(0), i(2), i(1)],
            denominator: vec![i(1), i(-1), i(-3), i(-1)],
        }
    }
}

/// Convenience wrapper over [`RationalGf::expand`].
pub fn gf_expand<T: Count>(gf: &RationalGf<T>, terms: usize) -> Vec<T> {
    gf.expand(terms)
}
