use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GraphError;

/// Hirzebruch–Jung expansion `a1 - 1/(a2 - 1/(... - 1/an))` with every
/// term at most -2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    terms: Vec<BigInt>,
}

impl CfExpansion {
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self) -> BigRational {
        let mut terms = self.terms.iter().rev();
        let mut acc = BigRational::from_integer(terms.next().expect("nonempty").clone());
        for a in terms {
            acc = BigRational::from_integer(a.clone()) - acc.recip();
        }
        acc
    }

    /// Terms as machine integers, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.terms.iter().map(|t| i64::try_from(t).ok()).collect()
    }
}

/// Expands a rational `x < -1` into its unique continued fraction with all
/// terms `<= -2`.
pub fn hj_expansion(x: &BigRational) -> Result<CfExpansion, GraphError> {
    if *x >= -BigRational::one() {
        return Err(GraphError::CfDomain(x.to_string()));
    }
    // Work with p/q = -x > 1 and peel off b = ceil(p/q) >= 2 each round.
    let mut p = -x.numer().clone();
    let mut q = x.denom().clone();
    let mut terms = Vec::new();
    loop {
        let b = p.div_ceil(&q);
        terms.push(-b.clone());
        let rest = &b * &q - &p;
        if rest.is_zero() {
            break;
        }
        // p/q = b - rest/q, continue with q/rest
        p = std::mem::replace(&mut q, rest);
    }
    Ok(CfExpansion { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // Independent evaluation oracle over machine rationals (numerator,
    // denominator), folding from the innermost term.
    fn eval_oracle(terms: &[i64]) -> (i64, i64) {
        let (mut p, mut q) = (*terms.last().unwrap(), 1i64);
        for &a in terms.iter().rev().skip(1) {
            // a - 1/(p/q) = (a p - q) / p
            let (np, nq) = (a * p - q, p);
            let g = num_integer::gcd(np, nq);
            p = np / g;
            q = nq / g;
            if q < 0 {
                p = -p;
                q = -q;
            }
        }
        (p, q)
    }

    #[test]
    fn integer_case() {
        assert_eq!(
            hj_expansion(&rat(-2, 1)).unwrap().terms(),
            ints(&[-2]).as_slice()
        );
    }

    #[test]
    fn three_halves() {
        assert_eq!(eval_oracle(&[-2, -2]), (-3, 2));
        assert_eq!(
            hj_expansion(&rat(-3, 2)).unwrap().terms(),
            ints(&[-2, -2]).as_slice()
        );
    }

    #[test]
    fn nine_quarters() {
        assert_eq!(eval_oracle(&[-3, -2, -2, -2]), (-9, 4));
        // no expansion of length <= 3 with terms in [-12, -2] hits -9/4
        let mut shorter = Vec::new();
        for a in -12..=-2i64 {
            shorter.push(vec![a]);
            for b in -12..=-2i64 {
                shorter.push(vec![a, b]);
                for c in -12..=-2i64 {
                    shorter.push(vec![a, b, c]);
                }
            }
        }
        assert!(shorter.iter().all(|t| eval_oracle(t) != (-9, 4)));
        assert_eq!(
            hj_expansion(&rat(-9, 4)).unwrap().terms(),
            ints(&[-3, -2, -2, -2]).as_slice()
        );
    }

    #[test]
    fn seifert_legs() {
        // -1/r for r = 5/6, 9/11, 2/3
        assert_eq!(
            hj_expansion(&rat(-6, 5)).unwrap().to_i64().unwrap(),
            vec![-2; 5]
        );
        assert_eq!(
            hj_expansion(&rat(-11, 9)).unwrap().to_i64().unwrap(),
            vec![-2, -2, -2, -2, -3]
        );
        assert_eq!(
            hj_expansion(&rat(-3, 2)).unwrap().to_i64().unwrap(),
            vec![-2, -2]
        );
    }

    #[test]
    fn domain() {
        assert!(hj_expansion(&rat(-1, 1)).is_err());
        assert!(hj_expansion(&rat(-1, 2)).is_err());
        assert!(hj_expansion(&rat(3, 2)).is_err());
    }

    #[test]
    fn round_trip_all_small() {
        for p in 2..=200i64 {
            for q in 1..p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let cf = hj_expansion(&rat(-p, q)).unwrap();
                let terms = cf.to_i64().unwrap();
                assert!(terms.iter().all(|&a| a <= -2));
                assert_eq!(eval_oracle(&terms), (-p, q));
                assert_eq!(cf.evaluate(), rat(-p, q));
            }
        }
    }

    proptest! {
        #[test]
        fn big_round_trip(p in 2u64..5_000, q in 1u64..5_000) {
            prop_assume!(p > q);
            let x = BigRational::new(-BigInt::from(p), BigInt::from(q));
            let cf = hj_expansion(&x).unwrap();
            prop_assert!(cf.terms().iter().all(|a| *a <= BigInt::from(-2)));
            prop_assert_eq!(cf.evaluate(), x);
        }
    }
}
