//! Elements of the split torus `T^F` as exponent vectors.
//!
//! `𝔽_q^×` is cyclic of order `q − 1`; fixing an abstract generator `g`, the
//! element `h(g^{m_1}, …, g^{m_l})` is stored as `(m_1, …, m_l) mod (q − 1)`.
//! A root `α` then acts by `g^{Σ_j m_j ⟨α, ω_j⟩}`. Field elements are never
//! materialised: orders and kernels only depend on the exponents.
//!
//! `ν` denotes `g^{(q−1)/(p−1)}`, a generator of `𝔽_p^×`; when `q = p` it is
//! `g` itself.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Subsystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CyclicParams {
    p: u64,
    e: u32,
    q: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl CyclicParams {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::Precondition("the exponent e must be positive".into()));
        }
        let q = p.checked_pow(e).ok_or(Error::FieldTooLarge { p, e })?;
        Ok(CyclicParams { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q − 1`, the order of `𝔽_q^×`.
    pub fn modulus(&self) -> u64 {
        self.q - 1
    }

    /// Exponent of `ν` over `g`: `(q − 1)/(p − 1)`.
    pub fn nu_exponent(&self) -> u64 {
        self.modulus() / (self.p - 1)
    }

    /// Exponent of a square root of `ν`: `(q − 1)/(2(p − 1))`. Needs `q` an
    /// even power of an odd `p`.
    pub fn half_nu_exponent(&self) -> Result<u64> {
        if self.e % 2 != 0 {
            return Err(Error::Precondition(format!(
                "q = {}^{} is not an even power of p, so ν has no square root in F_q",
                self.p, self.e
            )));
        }
        let m = self.modulus();
        if m % (2 * (self.p - 1)) != 0 {
            return Err(Error::Precondition(format!(
                "2(p - 1) = {} does not divide q - 1 = {m}",
                2 * (self.p - 1)
            )));
        }
        Ok(m / (2 * (self.p - 1)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    params: CyclicParams,
    exponents: Vec<u64>,
}

impl TorusElement {
    /// Reduces the exponents modulo `q − 1`.
    pub fn new(params: CyclicParams, exponents: &[i64]) -> Self {
        let m = params.modulus() as i128;
        let exponents = exponents
            .iter()
            .map(|&x| (x as i128).rem_euclid(m) as u64)
            .collect();
        TorusElement { params, exponents }
    }

    pub fn identity(params: CyclicParams, rank: usize) -> Self {
        TorusElement {
            params,
            exponents: vec![0; rank],
        }
    }

    pub fn params(&self) -> &CyclicParams {
        &self.params
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    /// Exponent of `α(t)` over `g`: `Σ_j coeffs[j]·m_j mod (q − 1)`.
    pub fn eval_root(&self, r: &Root) -> Result<u64> {
        if r.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                actual: r.rank(),
            });
        }
        let m = self.params.modulus() as i128;
        let s: i128 = r
            .coeffs()
            .iter()
            .zip(&self.exponents)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum();
        Ok(s.rem_euclid(m) as u64)
    }

    /// `(q − 1) / gcd(q − 1, m_1, …, m_l)`.
    pub fn order(&self) -> u64 {
        let m = self.params.modulus();
        let g = self.exponents.iter().fold(m, |g, &x| g.gcd(&x));
        if g == 0 {
            1
        } else {
            m / g
        }
    }

    /// `{α ∈ Φ : α(t) = 1}`.
    pub fn kernel_subsystem<'a>(&self, rs: &'a RootSystem) -> Result<Subsystem<'a>> {
        if rs.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                actual: self.rank(),
            });
        }
        let members = rs
            .roots()
            .filter(|r| self.eval_root(r).map(|v| v == 0).unwrap_or(false))
            .collect::<Vec<_>>();
        Subsystem::new(rs, members)
    }
}

/// `h(ν^{n_1}, …, ν^{n_l})`, or `h(ν^{n_1/2}, …)` with a square root of `ν`
/// when `half` is set.
pub fn make_ohmori_torus(params: CyclicParams, n: &[i64], half: bool) -> Result<TorusElement> {
    let step = if half {
        params.half_nu_exponent()?
    } else {
        params.nu_exponent()
    } as i128;
    let m = params.modulus() as i128;
    let exps: Vec<i64> = n
        .iter()
        .map(|&v| ((v as i128 * step).rem_euclid(m)) as i64)
        .collect();
    Ok(TorusElement::new(params, &exps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: u64, e: u32) -> CyclicParams {
        CyclicParams::new(p, e).unwrap()
    }

    #[test]
    fn params_validation() {
        assert_eq!(CyclicParams::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(CyclicParams::new(1, 1), Err(Error::NotPrime(1)));
        assert!(CyclicParams::new(5, 0).is_err());
        assert!(matches!(CyclicParams::new(13, 40), Err(Error::FieldTooLarge { .. })));
        let c = params(5, 2);
        assert_eq!((c.q(), c.modulus(), c.nu_exponent()), (25, 24, 6));
        assert_eq!(c.half_nu_exponent().unwrap(), 3);
        assert!(params(5, 1).half_nu_exponent().is_err());
        // q = 4: q - 1 = 3 is odd
        assert!(params(2, 2).half_nu_exponent().is_err());
    }

    #[test]
    fn identity_and_orders() {
        let c = params(13, 1);
        let id = TorusElement::identity(c, 8);
        assert_eq!(id.order(), 1);
        assert_eq!(id.eval_root(&Root::simple(8, 3)).unwrap(), 0);

        let mut ex = vec![0; 8];
        ex[5] = 3; // (q - 1)/4
        let s = TorusElement::new(c, &ex);
        assert_eq!(s.order(), 4);
        assert_eq!(s.eval_root(&Root::simple(8, 5)).unwrap(), 3);
        assert!(s.eval_root(&Root::simple(7, 5)).is_err());
    }

    #[test]
    fn ohmori_tori() {
        let t = make_ohmori_torus(params(7, 1), &[1, 1, 1], false).unwrap();
        assert_eq!(t.exponents(), &[1, 1, 1]);

        let t = make_ohmori_torus(params(5, 2), &[1, 0, 0, 1, 0, 1, 0], true).unwrap();
        assert_eq!(t.order(), 8);
        assert!(make_ohmori_torus(params(5, 1), &[1, 0], true).is_err());

        for (p, e) in [(5, 1), (5, 2), (13, 1), (13, 2)] {
            let c = params(p, e);
            let t = make_ohmori_torus(c, &[1, 1, 1, 0, 1, -5, 1, 1], false).unwrap();
            assert_eq!(t.order(), p - 1);
        }
    }

    #[test]
    fn negative_exponents_reduce() {
        let t = TorusElement::new(params(5, 1), &[-1, -5]);
        assert_eq!(t.exponents(), &[3, 3]);
    }
}
