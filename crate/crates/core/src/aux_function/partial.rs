use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::lcm::d_lcm;
use crate::exact_arith::rational::{format_rational, int, is_integer, rat_pow};
use crate::exact_arith::series::RatPowerSeries;
use crate::par;

use super::function::AuxFunction;

/// Exact `a_{i,k}` with `R(t) = Σ_{i,k} a_{i,k}/(t+k)^i`, `1 <= i <= s`, `0 <= k <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialFraction {
    n: u64,
    /// `rows[i-1][k]`
    rows: Vec<Vec<BigRational>>,
}

/// Principal parts of `scale·Π(l·t + c) / Π_{j=0}^{n} (t+j)^e` at every pole.
///
/// At `t = -k`, `a_{i,k} = [t^{e-i}]` of
/// `scale · Π(l·(t-k) + c) · Π_{j≠k} (j-k)^{-e} (1 + t/(j-k))^{-e}`.
fn principal_parts<F>(n: u64, e: u32, scale: &BigRational, factors_at: F) -> Vec<Vec<BigRational>>
where
    F: Fn(u64) -> Vec<(BigInt, BigInt)> + Sync + Send,
{
    let order = e as usize - 1;
    let columns = par::map((0..=n).collect(), |k| {
        let factors = factors_at(k);
        let numerator =
            RatPowerSeries::from_integer_linear_factors(factors.iter().map(|(l, c)| (l, c)), order);
        let mut series = numerator;
        let mut constant = scale.clone();
        for j in (0..=n).filter(|&j| j != k) {
            let c = int(j as i64 - k as i64);
            constant *= rat_pow(&c, -(e as i64));
            let inv = RatPowerSeries::inverse_power(&c, e, order).expect("j != k");
            series = &series * &inv;
        }
        let series = series.scale(&constant);
        (1..=e as usize)
            .map(|i| series.coeff(e as usize - i).clone())
            .collect::<Vec<_>>()
    });
    (0..e as usize)
        .map(|i| columns.iter().map(|col| col[i].clone()).collect())
        .collect()
}

impl PartialFraction {
    /// Partial fractions of `scale·Π(l·t + c) / Π_{j=0}^{n} (t+j)^e`, whose degree must be
    /// negative.
    pub fn of_product(
        n: u64,
        e: u32,
        scale: &BigRational,
        factors: &[(BigInt, BigInt)],
    ) -> Result<Self> {
        if e == 0 || factors.len() as u64 >= e as u64 * (n + 1) {
            return Err(Error::invalid("rational function has nonnegative degree"));
        }
        let rows = principal_parts(n, e, scale, |k| {
            let k = BigInt::from(k);
            factors.iter().map(|(l, c)| (l.clone(), c - l * &k)).collect()
        });
        Ok(Self { n, rows })
    }

    /// The expansion of `R_n`. The poles have order at most `s`: the order `s+1` parts
    /// are computed and must vanish.
    pub fn of_aux(aux: &AuxFunction) -> Result<Self> {
        if aux.degree() >= 0 {
            return Err(Error::gate("degree", format!("deg R_n = {} >= 0", aux.degree())));
        }
        let n = aux.params().n;
        let mut rows = principal_parts(n, aux.multiplicity(), &aux.numerator_scalar(), |k| {
            aux.fpolys().iter().flat_map(|f| f.shifted_factors(k)).collect()
        });
        let top = rows.pop().expect("s >= 1");
        if let Some(k) = top.iter().position(|x| !x.is_zero()) {
            return Err(Error::assertion(format!(
                "pole of order s+1 at t = -{k}: a = {}",
                format_rational(&top[k])
            )));
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Largest pole order carried.
    pub fn max_order(&self) -> u32 {
        self.rows.len() as u32
    }

    /// `a_{i,k}`; zero outside the table.
    pub fn coeff(&self, i: u32, k: u64) -> BigRational {
        if i == 0 || i > self.max_order() || k > self.n {
            return BigRational::zero();
        }
        self.rows[i as usize - 1][k as usize].clone()
    }

    pub fn row(&self, i: u32) -> &[BigRational] {
        &self.rows[i as usize - 1]
    }

    /// `Σ a_{i,k} / (t+k)^i`.
    pub fn eval(&self, t: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for k in 0..=self.n {
            let base = t + int(k as i64);
            if base.is_zero() {
                return Err(Error::invalid(format!("t = -{k} is a pole")));
            }
            let inv = base.recip();
            let mut pow = BigRational::one();
            for row in &self.rows {
                pow *= &inv;
                acc += &row[k as usize] * &pow;
            }
        }
        Ok(acc)
    }

    /// `(-1)^i a_{i,k} = -a_{i,n-k}` for every entry.
    pub fn coefficient_symmetry(&self) -> bool {
        (1..=self.max_order()).all(|i| {
            (0..=self.n).all(|k| {
                let a = self.coeff(i, k);
                let lhs = if i % 2 == 0 { a } else { -a };
                lhs == -self.coeff(i, self.n - k)
            })
        })
    }

    /// Entries where `d_n^{s+1-i} a_{i,k}` is not an integer, `s` being the largest order.
    pub fn integrality_failures(&self) -> Vec<(u32, u64)> {
        let dn = BigRational::from_integer(d_lcm(self.n).into());
        let s = self.max_order();
        let mut out = Vec::new();
        for i in 1..=s {
            let scale = rat_pow(&dn, (s + 1 - i) as i64);
            for k in 0..=self.n {
                if !is_integer(&(&self.coeff(i, k) * &scale)) {
                    out.push((i, k));
                }
            }
        }
        out
    }

    /// A copy with `delta` added to one entry, for fault injection.
    pub fn perturbed(&self, i: u32, k: u64, delta: &BigRational) -> Self {
        let mut out = self.clone();
        out.rows[i as usize - 1][k as usize] += delta;
        out
    }

    /// The table as `"num/den"` strings, `table[i-1][k]`.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PartialFractionRow {
    pub i: u32,
    pub k: u64,
    pub a: String,
}

impl PartialFraction {
    pub fn entries(&self) -> Vec<PartialFractionRow> {
        let mut out = Vec::new();
        for i in 1..=self.max_order() {
            for k in 0..=self.n {
                out.push(PartialFractionRow {
                    i,
                    k,
                    a: format_rational(&self.coeff(i, k)),
                });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aux_function::AuxParams;
    use crate::exact_arith::poly::RatPolynomial;
    use crate::exact_arith::rational::rat;

    #[test]
    fn telescoping() {
        let pf = PartialFraction::of_product(1, 1, &int(1), &[]).unwrap();
        assert_eq!(pf.coeff(1, 0), int(1));
        assert_eq!(pf.coeff(1, 1), int(-1));
        let pf = PartialFraction::of_product(2, 2, &int(3), &[(1.into(), 5.into())]).unwrap();
        for t in [rat(1, 3), rat(-7, 2), int(11)] {
            let direct = &int(3) * (&t + int(5))
                / (t.clone() * t.clone() * (&t + int(1)).pow(2) * (&t + int(2)).pow(2));
            assert_eq!(pf.eval(&t).unwrap(), direct);
        }
        assert!(PartialFraction::of_product(0, 1, &int(1), &[(1.into(), 0.into())]).is_err());
    }

    fn toy() -> AuxFunction {
        AuxFunction::new(AuxParams::new(int(2), 7, int(1), 2).unwrap()).unwrap()
    }

    #[test]
    fn toy_reconstruction_and_symmetry() {
        let aux = toy();
        let pf = PartialFraction::of_aux(&aux).unwrap();
        assert_eq!(pf.max_order(), 7);
        for t in [rat(1, 3), rat(5, 2), int(17)] {
            assert_eq!(pf.eval(&t).unwrap(), aux.evaluate_at(&t).unwrap());
        }
        assert!(pf.coefficient_symmetry());
        assert!(pf.integrality_failures().is_empty());
        let bad = pf.perturbed(3, 0, &rat(1, 7));
        assert!(!bad.coefficient_symmetry());
        assert_eq!(bad.integrality_failures(), vec![(3, 0)]);
    }

    /// `(t+k)^s R(t)` and its derivative at `t = -k`, from the expanded numerator.
    fn residues(aux: &AuxFunction, k: u64) -> (BigRational, BigRational) {
        let s = aux.params().s;
        let n = aux.params().n;
        let mut num = RatPolynomial::constant(aux.global_scalar().clone());
        for f in aux.fpolys() {
            num = &num * &f.expanded();
        }
        let num = num.div_by_root(&int(-(k as i64))).expect("(t+k) divides the numerator");
        let mut den = RatPolynomial::one();
        for j in (0..=n).filter(|&j| j != k) {
            den = &den * &RatPolynomial::linear(int(1), int(j as i64)).pow(s + 1);
        }
        let t = int(-(k as i64));
        let (p, q) = (num.eval(&t), den.eval(&t));
        let (dp, dq) = (num.derivative().eval(&t), den.derivative().eval(&t));
        (&p / &q, (dp * &q - p * dq) / (&q * &q))
    }

    #[test]
    fn residue_oracle() {
        for aux in [
            toy(),
            AuxFunction::new(AuxParams::new(int(2), 11, int(1), 4).unwrap()).unwrap(),
        ] {
            let s = aux.params().s;
            let pf = PartialFraction::of_aux(&aux).unwrap();
            for k in 0..=aux.params().n {
                let (a_s, a_s1) = residues(&aux, k);
                assert_eq!(pf.coeff(s, k), a_s, "a_(s,{k})");
                assert_eq!(pf.coeff(s - 1, k), a_s1, "a_(s-1,{k})");
            }
        }
    }
}
