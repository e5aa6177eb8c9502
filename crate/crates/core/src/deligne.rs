//! Interpolation of `S_n` data to complex rank `t`: dimensions of the
//! indecomposable objects `X_lambda`, tensoring with the reflection object,
//! and eigenvalues of central elements, all as exact polynomials in `t`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{
    factorial, falling_factorial, int, series_exp_log_pow, to_binomial_basis, BinomialPoly, Poly,
    Rational, Series, SeriesFn,
};
use crate::partitions::{ContentConvention, Partition};
use crate::snoracle::{standard_tableaux, CycleType};

/// `prod_{k in B_lambda} (t - k)`.
fn b_set_product(lambda: &Partition) -> Poly {
    lambda.b_set().into_iter().map(|k| Poly::t_plus(-k)).product()
}

/// Dimension of `X_lambda` as a polynomial of degree `|lambda|` in `t`.
///
/// Computed twice, once over the hook product and once from the number of
/// standard tableaux; disagreement is reported as [`Error::InternalMismatch`].
pub fn dim_x(lambda: &Partition) -> Result<Poly> {
    let numerator = b_set_product(lambda);
    let by_hooks = numerator.scale(&Rational::new(1.into(), lambda.hook_product()));
    let by_tableaux = numerator.scale(&Rational::new(
        standard_tableaux(lambda),
        factorial(lambda.size().into()),
    ));
    if by_hooks != by_tableaux {
        return Err(Error::InternalMismatch(format!(
            "dim X{}: hook route {by_hooks} vs tableaux route {by_tableaux}",
            lambda.pretty()
        )));
    }
    if by_hooks.degree() != Some(lambda.size() as usize) {
        return Err(Error::InternalMismatch(format!(
            "dim X{} has degree {:?}, expected {}",
            lambda.pretty(),
            by_hooks.degree(),
            lambda.size()
        )));
    }
    Ok(by_hooks)
}

/// A finite direct sum `sum_mu c_mu X_mu` with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    terms: BTreeMap<Partition, u32>,
}

impl Decomposition {
    pub fn add(&mut self, mu: Partition, mult: u32) {
        if mult > 0 {
            *self.terms.entry(mu).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, mu: &Partition) -> u32 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u32)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum_mu c_mu dim X_mu`.
    pub fn dimension(&self) -> Result<Poly> {
        self.iter()
            .map(|(mu, c)| Ok(dim_x(mu)?.scale(&int(c.into()))))
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionEntry {
    partition: String,
    mult: u32,
}

/// Wire form: `[{"partition":"2,1","mult":2}, ...]`.
impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<DecompositionEntry> = self
            .iter()
            .map(|(p, mult)| DecompositionEntry {
                partition: p.to_string(),
                mult,
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<DecompositionEntry>::deserialize(d)?;
        let mut out = Decomposition::default();
        for e in entries {
            if e.mult == 0 {
                return Err(serde::de::Error::custom("multiplicities must be positive"));
            }
            let p: Partition = e.partition.parse().map_err(serde::de::Error::custom)?;
            if out.terms.contains_key(&p) {
                return Err(serde::de::Error::custom(format!("duplicate partition {p:?}")));
            }
            out.add(p, e.mult);
        }
        Ok(out)
    }
}

impl FromIterator<(Partition, u32)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Partition, u32)>>(iter: I) -> Self {
        let mut d = Decomposition::default();
        for (p, c) in iter {
            d.add(p, c);
        }
        d
    }
}

/// `h_0 (x) X_lambda`: one copy of every diagram reached by adding, removing,
/// or moving a corner cell, plus `cc(lambda)` copies of `X_lambda`.
pub fn pieri_h0(lambda: &Partition) -> Decomposition {
    let cs = lambda.corner_sets();
    let mut d: Decomposition = cs
        .added
        .into_iter()
        .chain(cs.removed)
        .chain(cs.moved)
        .map(|mu| (mu, 1))
        .collect();
    d.add(lambda.clone(), cs.corners as u32);
    d
}

/// Eigenvalue of the Jucys-Murphy element on `X_lambda`:
/// `ct(lambda) - |lambda| + (t - |lambda|)(t - |lambda| - 1)/2`.
pub fn jm_eigenvalue(lambda: &Partition) -> Poly {
    jm_eigenvalue_with(lambda, ContentConvention::default())
}

pub fn jm_eigenvalue_with(lambda: &Partition, convention: ContentConvention) -> Poly {
    let n = lambda.size() as i64;
    let ct = lambda.content_sum_with(convention);
    let shifted = &Poly::t_plus(-n) * &Poly::t_plus(-n - 1);
    &shifted.scale(&Rational::new(1.into(), 2.into())) + &Poly::constant(int(ct - n))
}

/// `t(t-1)...(t-m+1) / prod m_i! (i+1)^{m_i}`.
pub fn class_size_poly(rho: &CycleType) -> Poly {
    falling_factorial(0, rho.support() as usize)
        .scale(&Rational::new(1.into(), rho.centralizer_factor()))
}

/// Exponent vector in the `u` variables of `x^alpha`, where
/// `x_i = u_1 ... u_i`: the `u_k` exponent is `sum_{i >= k} alpha_i`.
fn u_exponent(alpha: &[u32]) -> Vec<u32> {
    let mut e = alpha.to_vec();
    for k in (0..e.len().saturating_sub(1)).rev() {
        e[k] += e[k + 1];
    }
    e
}

/// `x_i^power` for 1-based `i` among `vars` variables.
fn x_power(vars: usize, i: usize, power: u32) -> Vec<u32> {
    let mut alpha = vec![0; vars];
    alpha[i - 1] = power;
    u_exponent(&alpha)
}

/// `p_k = sum_i x_i^k` in the `u` variables.
fn power_sum(bounds: &[u32], k: u32) -> Series {
    let mut s = Series::zero(bounds.to_vec());
    for i in 1..=bounds.len() {
        s.add_term(x_power(bounds.len(), i, k), Poly::one());
    }
    s
}

/// `prod_i (1 - x_i) prod_{i > j} (1 - x_i / x_j)`; in the `u` variables
/// `x_i / x_j = u_{j+1} ... u_i`, so every factor is a polynomial.
fn vandermonde_factor(bounds: &[u32]) -> Series {
    let vars = bounds.len();
    let mut acc = Series::one(bounds.to_vec());
    let factor = |exp: Vec<u32>, acc: &mut Series| {
        let mut f = Series::one(bounds.to_vec());
        f.add_term(exp, Poly::constant(int(-1)));
        *acc = acc.mul(&f);
    };
    for i in 1..=vars {
        factor(x_power(vars, i, 1), &mut acc);
    }
    for i in 1..=vars {
        for j in 1..i {
            let mut e = vec![0; vars];
            for slot in &mut e[j..i] {
                *slot = 1;
            }
            factor(e, &mut acc);
        }
    }
    acc
}

/// `c_{lambda,rho}(t)`: the coefficient of `x^lambda` in
/// `(1 + p_1)^{t-m} prod_i (1 + p_{i+1})^{m_i} prod_i (1 - x_i) prod_{i>j} (1 - x_i/x_j)`,
/// taken in `len(lambda)` variables. At `t = n` this is the character of
/// `pi_{lambda~(n)}` on the class of `rho`.
pub fn frob_coefficient(lambda: &Partition, rho: &CycleType) -> Poly {
    frob_coefficient_in(lambda, rho, lambda.len())
}

/// As [`frob_coefficient`] with an explicit variable count
/// `vars >= len(lambda)`.
pub fn frob_coefficient_in(lambda: &Partition, rho: &CycleType, vars: usize) -> Poly {
    assert!(vars >= lambda.len(), "need at least len(lambda) variables");
    if vars == 0 {
        return Poly::one();
    }
    let mut alpha = lambda.parts().to_vec();
    alpha.resize(vars, 0);
    let target = u_exponent(&alpha);
    let bounds = target.clone();

    let mut rest = vandermonde_factor(&bounds);
    for (i, &m) in rho.counts().iter().enumerate() {
        if m == 0 {
            continue;
        }
        let one_plus = Series::one(bounds.clone()).add(&power_sum(&bounds, i as u32 + 2));
        rest = rest.mul(&one_plus.pow_int(m));
    }
    let one_plus_p1 = Series::one(bounds.clone()).add(&power_sum(&bounds, 1));
    let exponent = Poly::t_plus(-(rho.support() as i64));
    let main = series_exp_log_pow(&one_plus_p1, SeriesFn::PowT, &exponent)
        .expect("1 + p_1 has constant term 1");
    Series::coefficient_of_product(&rest, &main, &target).expect("target lies within its own bounds")
}

/// Eigenvalue of the class sum `Omega_rho` on `X_lambda`:
/// `class_size_poly(rho) * c_{lambda,rho}(t) / dim X_lambda`, with the
/// division required to be exact.
pub fn omega_m_eigenvalue(rho: &CycleType, lambda: &Partition) -> Result<Poly> {
    let num = &class_size_poly(rho) * &frob_coefficient(lambda, rho);
    num.exact_div(&dim_x(lambda)?)
}

/// Binomial-basis form of `p`, failing unless every coefficient is an
/// integer.
pub fn integer_valued_certificate(p: &Poly) -> Result<BinomialPoly> {
    let b = to_binomial_basis(p);
    if let Some((index, coeff)) = b.first_fractional() {
        return Err(Error::NotIntegerValued {
            index,
            coeff: coeff.clone(),
        });
    }
    Ok(b)
}

/// `dim X_lambda` at integer `n`, when it is an integer.
pub fn dim_x_at(lambda: &Partition, n: i64) -> Result<BigInt> {
    dim_x(lambda)?
        .eval_integer(n)
        .ok_or_else(|| Error::InternalMismatch(format!("dim X{} is fractional at {n}", lambda.pretty())))
}
