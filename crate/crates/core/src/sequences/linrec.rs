use crate::error::{Error, Result};
use crate::scalar::Count;

use super::PellPair;

/// Inhomogeneous term of a linear recurrence, evaluated at the index of
/// the term being produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inhom<T> {
    Zero,
    /// `c`
    Const(T),
    /// `c·(-1)^n`
    AltSign(T),
    /// `c·P_{n-1}` (Pell numbers)
    PellP(T),
    /// `c·H_{n-1}` (half-companion Pell numbers)
    PellH(T),
}

impl<T: Count> Inhom<T> {
    fn eval(&self, n: i64, pell_at_prev: Option<&PellPair<T>>) -> T {
        match self {
            Inhom::Zero => T::zero(),
            Inhom::Const(c) => c.clone(),
            Inhom::AltSign(c) => c.clone() * T::alt_sign(n),
            Inhom::PellP(c) => c.clone() * pell_at_prev.expect("pell stream").p.clone(),
            Inhom::PellH(c) => c.clone() * pell_at_prev.expect("pell stream").h.clone(),
        }
    }

    fn needs_pell(&self) -> bool {
        matches!(self, Inhom::PellP(_) | Inhom::PellH(_))
    }
}

/// n-th term of `s_m = coeffs[0]·s_{m-1} + … + coeffs[k-1]·s_{m-k} +
/// inhom(m)`, where `initials[j] = s_{start+j}`.
pub fn lin_rec<T: Count>(
    coeffs: &[T],
    initials: &[T],
    start: i64,
    inhom: Inhom<T>,
    n: i64,
) -> Result<T> {
    if coeffs.is_empty() || coeffs.len() != initials.len() {
        return Err(Error::domain(format!(
            "need as many initial values as coefficients ({} vs {})",
            initials.len(),
            coeffs.len()
        )));
    }
    if n < 0 {
        return Err(Error::domain(format!("negative index {n}")));
    }
    if n < start {
        return Err(Error::domain(format!(
            "index {n} precedes the first initial value at {start}"
        )));
    }
    let order = coeffs.len() as i64;
    if n < start + order {
        return Ok(initials[(n - start) as usize].clone());
    }
    let first = start + order;
    let mut pell = if inhom.needs_pell() {
        Some(PellPair::at(first - 1))
    } else {
        None
    };
    let mut window: Vec<T> = initials.to_vec();
    for m in first..=n {
        let mut value = inhom.eval(m, pell.as_ref());
        for (j, coeff) in coeffs.iter().enumerate() {
            value = value + coeff.clone() * window[window.len() - 1 - j].clone();
        }
        window.remove(0);
        window.push(value);
        if let Some(p) = pell.as_mut() {
            p.step();
        }
    }
    Ok(window.pop().expect("nonempty window"))
}
