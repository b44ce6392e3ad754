use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::rational::format_rational;
use crate::totient_sets::DenominatorSet;

/// Coprime integers `w_b` with `Σ_b w_b b^j = 0` for `j ∈ J` and `Σ_b w_b b ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub j: Vec<u32>,
    pub members: Vec<u64>,
    pub w: Vec<BigInt>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightSummary {
    pub j: Vec<u32>,
    pub weights: Vec<(u64, String)>,
    pub weighted_sum: String,
}

impl WeightVector {
    /// Accepts rational weights only when all are integers.
    pub fn from_rationals(j: Vec<u32>, members: Vec<u64>, w: &[BigRational]) -> Result<Self> {
        if w.len() != members.len() {
            return Err(Error::invalid("one weight per member is required"));
        }
        if let Some(bad) = w.iter().find(|q| !q.is_integer()) {
            return Err(Error::invalid(format!(
                "weights must be integers, got {}",
                format_rational(bad)
            )));
        }
        Ok(Self {
            j,
            members,
            w: w.iter().map(|q| q.to_integer()).collect(),
        })
    }

    /// `Σ_b w_b b^i`.
    pub fn moment(&self, i: u32) -> BigInt {
        self.members
            .iter()
            .zip(&self.w)
            .map(|(&b, w)| w * BigInt::from(b).pow(i))
            .sum()
    }

    pub fn weight_of(&self, b: u64) -> Option<&BigInt> {
        self.members.iter().position(|&m| m == b).map(|i| &self.w[i])
    }

    pub fn orthogonal(&self) -> bool {
        self.j.iter().all(|&j| self.moment(j).is_zero())
    }

    pub fn summary(&self) -> WeightSummary {
        WeightSummary {
            j: self.j.clone(),
            weights: self
                .members
                .iter()
                .zip(&self.w)
                .map(|(&b, w)| (b, w.to_string()))
                .collect(),
            weighted_sum: self.moment(1).to_string(),
        }
    }
}

fn check_exponents(j: &[u32], size: usize) -> Result<()> {
    if j.len() + 1 != size {
        return Err(Error::invalid(format!(
            "|J| = {} but |Ψ_B| - 1 = {}",
            j.len(),
            size - 1
        )));
    }
    let mut sorted = j.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != j.len() {
        return Err(Error::invalid("exponents in J must be distinct"));
    }
    if let Some(bad) = j.iter().find(|&&e| e < 3 || e % 2 == 0) {
        return Err(Error::invalid(format!("J must hold odd exponents >= 3, got {bad}")));
    }
    Ok(())
}

/// Integer kernel of `[b^j]_{j∈J, b∈Ψ}` by fraction-free elimination.
///
/// Rows are combined by cross-multiplication and divided by their content, so entries
/// stay integral. The kernel is one-dimensional (generalized Vandermonde matrices with
/// distinct positive nodes are nonsingular); it is scaled to coprime integers with a
/// positive first entry.
pub fn vandermonde_weights(psi: &DenominatorSet, j: &[u32]) -> Result<WeightVector> {
    kernel_weights(psi.members(), j)
}

/// As [`vandermonde_weights`] for any set of distinct positive nodes.
pub fn kernel_weights(members: &[u64], j: &[u32]) -> Result<WeightVector> {
    let members = members.to_vec();
    check_exponents(j, members.len())?;
    let cols = members.len();
    let mut rows: Vec<Vec<BigInt>> = j
        .iter()
        .map(|&e| members.iter().map(|&b| BigInt::from(b).pow(e)).collect())
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let (a, b) = (rows[r][c].clone(), rows[i][c].clone());
            let row: Vec<BigInt> = rows[i]
                .iter()
                .zip(&rows[r])
                .map(|(x, y)| x * &a - y * &b)
                .collect();
            rows[i] = primitive(row);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if pivots.len() != j.len() {
        return Err(Error::assertion("Vandermonde system is rank deficient"));
    }
    let free = (0..cols)
        .find(|c| !pivots.contains(c))
        .expect("one more column than rows");
    // pivot row i reads rows[i][p_i] w_{p_i} + rows[i][free] w_free = 0
    let mut w = vec![BigRational::zero(); cols];
    w[free] = BigRational::one();
    for (i, &p) in pivots.iter().enumerate() {
        w[p] = -BigRational::new(rows[i][free].clone(), rows[i][p].clone());
    }
    let den = w.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = w
        .iter()
        .map(|q| (q * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let mut ints = primitive(ints);
    if ints[0].is_negative() {
        ints.iter_mut().for_each(|x| *x = -&*x);
    }
    let out = WeightVector {
        j: j.to_vec(),
        members,
        w: ints,
    };
    if !out.orthogonal() {
        return Err(Error::assertion("weights are not orthogonal to J"));
    }
    if out.moment(1).is_zero() {
        return Err(Error::assertion("Σ w_b b vanishes, contradicting invertibility"));
    }
    Ok(out)
}

fn primitive(row: Vec<BigInt>) -> Vec<BigInt> {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|x| x / &g).collect()
    }
}

/// `I_s = {3, 5, …, s}`.
pub fn odd_indices(s: u32) -> Vec<u32> {
    (3..=s).step_by(2).collect()
}

/// The `|Ψ_B| - 1` smallest elements of `I_s`.
pub fn default_j(psi_size: usize, s: u32) -> Result<Vec<u32>> {
    let idx = odd_indices(s);
    if idx.len() + 1 < psi_size {
        return Err(Error::gate(
            "elimination",
            format!("|I_s| = {} < |Ψ_B| - 1 = {}", idx.len(), psi_size - 1),
        ));
    }
    Ok(idx[..psi_size - 1].to_vec())
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub trials: usize,
    pub orthogonal: usize,
    pub nonvanishing: usize,
    pub all_pass: bool,
}

/// Weights for `trials` random `J ⊂ I_s` of size `|Ψ_B| - 1`.
pub fn weight_sweep(psi: &DenominatorSet, s: u32, trials: usize, seed: u64) -> Result<SweepReport> {
    let idx = odd_indices(s);
    let k = psi.len() - 1;
    if idx.len() < k {
        return Err(Error::invalid("I_s is too small for Ψ_B"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut orthogonal, mut nonvanishing) = (0, 0);
    for _ in 0..trials {
        let mut j: Vec<u32> = idx.choose_multiple(&mut rng, k).copied().collect();
        j.sort_unstable();
        let w = vandermonde_weights(psi, &j)?;
        orthogonal += w.orthogonal() as usize;
        nonvanishing += !w.moment(1).is_zero() as usize;
    }
    Ok(SweepReport {
        trials,
        orthogonal,
        nonvanishing,
        all_pass: orthogonal == trials && nonvanishing == trials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};
    use crate::totient_sets::build_denominator_set;

    fn psi(b: i64) -> DenominatorSet {
        build_denominator_set(&int(b)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_member_examples() {
        let w = vandermonde_weights(&psi(1), &[3]).unwrap();
        assert_eq!(w.w, ints(&[8, -1]));
        assert_eq!(w.moment(1), BigInt::from(6));
        let w = vandermonde_weights(&psi(1), &[5]).unwrap();
        assert_eq!(w.w, ints(&[32, -1]));
        assert_eq!(w.moment(1), BigInt::from(30));
    }

    #[test]
    fn three_members_against_cramer_oracle() {
        // w ∝ cofactors of the 2×3 system: (2³3⁵ - 2⁵3³, 3³ - 3⁵, 2⁵ - 2³) / gcd
        let w = kernel_weights(&[1, 2, 3], &[3, 5]).unwrap();
        let oracle = ints(&[8 * 243 - 32 * 27, 27 - 243, 32 - 8]);
        let g = oracle.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
        let oracle: Vec<BigInt> = oracle.iter().map(|x| x / &g).collect();
        assert_eq!(w.w, oracle);
        assert!(w.orthogonal() && !w.moment(1).is_zero());
        let w = vandermonde_weights(&psi(2), &[3, 5, 7, 9]).unwrap();
        assert!(w.orthogonal());
    }

    #[test]
    fn input_validation() {
        assert!(vandermonde_weights(&psi(1), &[3, 5]).is_err());
        assert!(vandermonde_weights(&psi(2), &[3, 3, 5, 7]).is_err());
        assert!(vandermonde_weights(&psi(1), &[4]).is_err());
        assert!(default_j(5, 7).is_err());
        assert_eq!(default_j(5, 11).unwrap(), [3, 5, 7, 9]);
        let bad = WeightVector::from_rationals(vec![3], vec![1, 2], &[rat(17, 2), int(-1)]);
        assert!(bad.is_err());
    }

    #[test]
    fn sweep() {
        let rep = weight_sweep(&psi(2), 31, 20, 3).unwrap();
        assert!(rep.all_pass);
    }
}
