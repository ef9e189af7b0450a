use super::{AlgebraError, ExactDiv, PolyC, RatFunc};
use num_traits::Zero;

/// Coefficients `p_0..=p_order` of the expansion of `f` in powers of `z`.
///
/// Uses `p_n = (num_n - sum_{k=1..n} den_k p_{n-k}) / den_0`; the division
/// must be exact in `Q[c]`, which holds whenever `den_0` is a constant.
pub fn series_coefficients(f: &RatFunc, order: usize) -> Result<Vec<PolyC>, AlgebraError> {
    let num = f.numer();
    let den = f.denom();
    let lead = den.at_z0();
    if lead.is_zero() {
        return Err(AlgebraError::NoPowerSeries);
    }
    let mut out: Vec<PolyC> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = num.coeff(n);
        for k in 1..=n.min(den.degree().unwrap_or(0)) {
            acc -= &(&den.coeff(k) * &out[n - k]);
        }
        out.push(acc.exact_div(&lead)?);
    }
    Ok(out)
}
