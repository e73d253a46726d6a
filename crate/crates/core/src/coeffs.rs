//! Validated unit-norm coefficient vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerance on `Σ aᵢ² = 1` in float mode.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    Exact,
    Float,
}

/// Nonnegative coefficients `a₁ ≤ … ≤ aₙ` with `Σ aᵢ² = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficients {
    values: Vec<f64>,
    exact: Option<Vec<BigRational>>,
}

fn check_shape(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Coefficients("need at least one coefficient".into()));
    }
    Ok(())
}

impl Coefficients {
    /// Float mode; the input is sorted, never rescaled.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        check_shape(values.len())?;
        if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::Coefficients(format!("coefficients must be finite and >= 0, got {v}")));
        }
        let norm2: f64 = values.iter().map(|v| v * v).sum();
        if (norm2 - 1.0).abs() > NORM_TOL {
            return Err(Error::Coefficients(format!(
                "sum of squares is {norm2}, expected 1 (use normalization explicitly)"
            )));
        }
        values.sort_by(f64::total_cmp);
        Ok(Coefficients { values, exact: None })
    }

    /// Float mode after rescaling to unit norm.
    pub fn normalized(values: Vec<f64>) -> Result<Self> {
        check_shape(values.len())?;
        let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Coefficients("cannot normalize a zero or non-finite vector".into()));
        }
        Coefficients::new(values.into_iter().map(|v| v / norm).collect())
    }

    /// Exact mode: rationals with `Σ aᵢ² = 1` exactly.
    pub fn exact(mut values: Vec<BigRational>) -> Result<Self> {
        check_shape(values.len())?;
        if values.iter().any(|v| v.is_negative()) {
            return Err(Error::Coefficients("coefficients must be >= 0".into()));
        }
        let norm2 = values.iter().fold(BigRational::zero(), |acc, v| acc + v * v);
        if !norm2.is_one() {
            return Err(Error::Coefficients(format!("sum of squares is {norm2}, expected exactly 1")));
        }
        values.sort();
        let floats = values.iter().map(|v| v.to_f64().expect("finite rational")).collect();
        Ok(Coefficients { values: floats, exact: Some(values) })
    }

    /// Parse `"p1/q1,p2/q2,..."` (integers allowed) into exact mode.
    pub fn parse_exact(s: &str) -> Result<Self> {
        let vals = s
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Coefficients::exact(vals)
    }

    /// Parse `"a1,a2,..."` into float mode, optionally normalizing.
    pub fn parse_float(s: &str, normalize: bool) -> Result<Self> {
        let vals = s
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|e| Error::Coefficients(format!("bad coefficient '{t}': {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if normalize {
            Coefficients::normalized(vals)
        } else {
            Coefficients::new(vals)
        }
    }

    /// `n` equal weights `1/√n` (float mode).
    pub fn equal(n: usize) -> Result<Self> {
        check_shape(n)?;
        Ok(Coefficients { values: vec![1.0 / (n as f64).sqrt(); n], exact: None })
    }

    /// Normalized absolute standard-normal draws, sorted.
    pub fn random_unit<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_shape(n)?;
        loop {
            let v: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal).abs()).collect();
            if v.iter().any(|x| *x > 0.0) {
                return Coefficients::normalized(v);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn exact_values(&self) -> Option<&[BigRational]> {
        self.exact.as_deref()
    }

    pub fn mode(&self) -> Mode {
        if self.exact.is_some() {
            Mode::Exact
        } else {
            Mode::Float
        }
    }

    /// Largest coefficient `a = aₙ`.
    pub fn max(&self) -> f64 {
        *self.values.last().expect("nonempty")
    }
}

pub fn parse_rational(t: &str) -> Result<BigRational> {
    let bad = || Error::Coefficients(format!("bad rational '{t}'"));
    let int = |s: &str| s.trim().parse::<BigInt>().map_err(|_| bad());
    match t.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(int(p)?, q))
        }
        None => match t.trim().split_once('.') {
            // terminating decimal such as -0.25
            Some((i, f)) if !f.is_empty() && f.bytes().all(|b| b.is_ascii_digit()) => {
                let neg = i.starts_with('-');
                let digits = format!("{}{f}", i.trim_start_matches(['-', '+']));
                let scale = BigInt::from(10u32).pow(f.len() as u32);
                let v = BigRational::new(int(&digits)?, scale);
                Ok(if neg { -v } else { v })
            }
            _ => Ok(BigRational::from_integer(int(t)?)),
        },
    }
}

/// Seeded draws: `count` vectors with `n` uniform on `1..=n_max`.
pub fn seeded_vectors(count: usize, n_max: usize, seed: u64) -> Vec<Coefficients> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            Coefficients::random_unit(n, &mut rng).expect("n >= 1")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Coefficients::new(vec![0.6, 0.8]).is_ok());
        assert!(matches!(Coefficients::new(vec![1.0, 1.0]), Err(Error::Coefficients(_))));
        assert!(Coefficients::new(vec![-1.0]).is_err());
        assert!(Coefficients::new(vec![]).is_err());
        let c = Coefficients::normalized(vec![4.0, 3.0]).unwrap();
        assert_eq!(c.values(), &[0.6, 0.8]);
    }

    #[test]
    fn exact_mode() {
        let c = Coefficients::parse_exact("4/5, 3/5").unwrap();
        assert_eq!(c.mode(), Mode::Exact);
        assert_eq!(c.values(), &[0.6, 0.8]);
        assert!(Coefficients::parse_exact("1/2,1/2").is_err());
        assert!(Coefficients::parse_exact("1/0").is_err());
    }

    #[test]
    fn decimal_rationals() {
        let r = |p: i64, q: i64| BigRational::new(p.into(), q.into());
        assert_eq!(parse_rational("0.2").unwrap(), r(1, 5));
        assert_eq!(parse_rational("-1.25").unwrap(), r(-5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), r(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), r(7, 1));
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn random_vectors_are_unit_and_sorted() {
        for c in seeded_vectors(200, 8, 1) {
            let s: f64 = c.values().iter().map(|v| v * v).sum();
            assert!((s - 1.0).abs() < 1e-12);
            assert!(c.values().windows(2).all(|w| w[0] <= w[1]));
        }
        assert_eq!(seeded_vectors(5, 8, 3), seeded_vectors(5, 8, 3));
    }
}
