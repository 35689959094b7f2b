//! Fast gcd paths: modular univariate gcd over the integers and Brown-style
//! evaluation-interpolation gcd for bivariate inputs. Both verify their
//! candidates by exact division, falling back to remainder sequences when
//! verification fails.

use super::{exact_div, Int, Polynomial, Rat, Variable};
use crate::realalg::UnivPoly;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending stream of 31-bit primes (products of residues fit u128).
fn prime_stream() -> impl Iterator<Item = u64> {
    (0u64..).filter_map(|k| {
        let cand = 2147483647 - 2 * k;
        if cand < 3 {
            None
        } else if is_prime_u64(cand) {
            Some(cand)
        } else {
            None
        }
    })
}

fn mod_p(x: &Int, p: u64) -> u64 {
    let m = x.mod_floor(&Int::from(p));
    m.to_u64().expect("reduced value fits")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat inverse; p prime.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    result as u64
}

/// Monic gcd of two nonzero polynomials mod p (dense, index = degree).
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let inv = inv_mod(b[db], p);
        while a.len() > db {
            let da = a.len() - 1;
            let factor = (a[da] as u128 * inv as u128 % p as u128) as u64;
            if factor != 0 {
                for i in 0..=db {
                    let sub = factor as u128 * b[i] as u128 % p as u128;
                    let idx = da - db + i;
                    a[idx] = ((a[idx] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    // Make monic.
    if let Some(&lc) = a.last() {
        if lc != 1 {
            let inv = inv_mod(lc, p);
            for c in a.iter_mut() {
                *c = (*c as u128 * inv as u128 % p as u128) as u64;
            }
        }
    }
    a
}

/// Symmetric representative in (-m/2, m/2].
fn symmetric(x: &Int, m: &Int) -> Int {
    let half = m / Int::from(2);
    if x > &half {
        x - m
    } else {
        x.clone()
    }
}

/// Modular gcd of primitive integer univariate polynomials, falling back
/// to the remainder sequence when the prime supply runs short.
pub fn gcd_univariate_int(a: &UnivPoly, b: &UnivPoly) -> UnivPoly {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() {
        return a.normalized();
    }
    let a = a.normalized();
    let b = b.normalized();
    if a.degree() == 0 || b.degree() == 0 {
        return UnivPoly::from_coeffs(vec![Int::one()]);
    }
    let gamma = a.lc().gcd(b.lc());
    let mut best_deg = usize::MAX;
    let mut acc: Vec<Int> = Vec::new();
    let mut modulus = Int::one();
    let mut stable = false;
    for p in prime_stream().take(4096) {
        if (a.lc() % Int::from(p)).is_zero() || (b.lc() % Int::from(p)).is_zero() {
            continue;
        }
        let ap: Vec<u64> = a.coeffs().iter().map(|c| mod_p(c, p)).collect();
        let bp: Vec<u64> = b.coeffs().iter().map(|c| mod_p(c, p)).collect();
        let mut gp = gcd_mod_p(ap, bp, p);
        let dg = gp.len().saturating_sub(1);
        if gp.is_empty() {
            continue;
        }
        if dg == 0 {
            return UnivPoly::from_coeffs(vec![Int::one()]);
        }
        if dg < best_deg {
            best_deg = dg;
            acc.clear();
            modulus = Int::one();
            stable = false;
        } else if dg > best_deg {
            continue; // unlucky prime
        }
        // Scale to leading coefficient gamma mod p.
        let scale = mod_p(&gamma, p);
        for c in gp.iter_mut() {
            *c = (*c as u128 * scale as u128 % p as u128) as u64;
        }
        // CRT combine.
        if acc.is_empty() {
            acc = gp.iter().map(|&c| Int::from(c)).collect();
            modulus = Int::from(p);
        } else {
            let p_int = Int::from(p);
            let m_inv_p = inv_mod(mod_p(&modulus, p), p);
            let mut changed = false;
            for (i, slot) in acc.iter_mut().enumerate() {
                let target = gp.get(i).copied().unwrap_or(0);
                let cur = mod_p(slot, p);
                if cur != target {
                    let diff = ((target as u128 + p as u128 - cur as u128) % p as u128) as u64;
                    let adj = (diff as u128 * m_inv_p as u128 % p as u128) as u64;
                    *slot += &modulus * Int::from(adj);
                    changed = true;
                }
            }
            modulus *= &p_int;
            if !changed {
                stable = true;
            }
        }
        if stable {
            let cand =
                UnivPoly::from_coeffs(acc.iter().map(|c| symmetric(c, &modulus)).collect())
                    .normalized();
            if cand.degree() >= 1
                && a.exact_div(&cand).is_some()
                && b.exact_div(&cand).is_some()
            {
                return cand;
            }
            stable = false;
        }
    }
    // Prime supply exhausted: remainder-sequence fallback.
    a.gcd_prs(&b)
}

/// Gcd of integer-coefficient polynomials in exactly the two variables
/// `u` (parameter) and `v` (main), by evaluation in `u`, modular
/// univariate gcds, and interpolation, normalized to the gcd of the
/// leading coefficients. Verified by exact division; `None` when the
/// point supply is exhausted.
pub fn gcd_bivariate_int(
    a: &Polynomial,
    b: &Polynomial,
    u: Variable,
    v: Variable,
) -> Option<Polynomial> {
    let nvars = a.nvars().max(b.nvars());
    let lc_a = a.ldcf(v);
    let lc_b = b.ldcf(v);
    let gamma_uni = gcd_univariate_int(
        &UnivPoly::from_polynomial(&lc_a, u)?,
        &UnivPoly::from_polynomial(&lc_b, u)?,
    );
    let gamma = gamma_uni.to_polynomial(nvars, u);
    let coeff_deg_bound =
        a.degree(u).min(b.degree(u)) as usize + gamma_uni.degree() + 1;
    let mut best_deg = usize::MAX;
    let mut samples: Vec<(Rat, Vec<Rat>)> = Vec::new();
    let mut t_iter = 0i64..;
    let mut misses = 0;
    loop {
        let t_raw = t_iter.next().unwrap();
        let t = if t_raw % 2 == 0 {
            Rat::from_integer(Int::from(t_raw / 2))
        } else {
            Rat::from_integer(Int::from(-(t_raw / 2) - 1))
        };
        if misses > 4 * coeff_deg_bound + 64 {
            return None;
        }
        if lc_a.subst_rational(u, &t).is_zero() || lc_b.subst_rational(u, &t).is_zero() {
            misses += 1;
            continue;
        }
        let at = specialize_to_unipoly(a, u, &t, v);
        let bt = specialize_to_unipoly(b, u, &t, v);
        let gt = gcd_univariate_int(&at, &bt);
        let dg = gt.degree();
        if dg == 0 {
            return Some(Polynomial::one(nvars));
        }
        if dg < best_deg {
            best_deg = dg;
            samples.clear();
        } else if dg > best_deg {
            misses += 1;
            continue; // unlucky point
        }
        // Normalize: scale the monic-rational gcd so its leading
        // coefficient is gamma(t).
        let gval = gamma.subst_rational(u, &t).constant_value().unwrap();
        let lc = Rat::from_integer(gt.lc().clone());
        let scale = gval / lc;
        let coeffs: Vec<Rat> = gt
            .coeffs()
            .iter()
            .map(|c| Rat::from_integer(c.clone()) * &scale)
            .collect();
        samples.push((t, coeffs));
        if samples.len() >= coeff_deg_bound + 1 {
            // Interpolate each v-coefficient in u.
            let mut g = Polynomial::zero(nvars);
            for k in 0..=best_deg {
                let pts: Vec<(Rat, Rat)> = samples
                    .iter()
                    .map(|(t, cs)| (t.clone(), cs.get(k).cloned().unwrap_or_else(Rat::zero)))
                    .collect();
                let ck = interpolate_rat(&pts);
                let poly_u = univariate_rat(nvars, u, &ck);
                g = g.add(&poly_u.mul(&Polynomial::variable(nvars, v).pow(k as u32)));
            }
            if g.is_zero() {
                return Some(Polynomial::one(nvars));
            }
            let (_, g_int) = g.rational_scale_split();
            // The gamma normalization can leave parameter content; strip
            // the content with respect to v before verifying.
            let g_int = primitive_wrt(&g_int, u, v, nvars);
            if exact_div(a, &g_int).is_some() && exact_div(b, &g_int).is_some() {
                return Some(g_int);
            }
            // Bad cohort (all points unlucky together is improbable but
            // possible); drop half and keep sampling.
            samples.drain(..samples.len() / 2 + 1);
            misses += 1;
        }
    }
}

/// Divides out the univariate-in-`u` content of a bivariate polynomial
/// with respect to `v`.
fn primitive_wrt(g: &Polynomial, u: Variable, v: Variable, nvars: usize) -> Polynomial {
    let mut cont: Option<UnivPoly> = None;
    for c in g.coeffs_dense(v) {
        if c.is_zero() {
            continue;
        }
        let cu = UnivPoly::from_polynomial(&c, u).expect("coefficient is univariate");
        cont = Some(match cont {
            None => cu.normalized(),
            Some(acc) => gcd_univariate_int(&acc, &cu),
        });
    }
    match cont {
        Some(c) if c.degree() >= 1 || !c.coeffs().iter().all(|x| x.abs().is_one()) => {
            exact_div(g, &c.to_polynomial(nvars, u)).expect("content divides")
        }
        _ => g.clone(),
    }
}

fn specialize_to_unipoly(p: &Polynomial, u: Variable, t: &Rat, v: Variable) -> UnivPoly {
    let spec = p.subst_rational(u, t);
    let dense = spec.coeffs_dense(v);
    let mut den = Int::one();
    for c in &dense {
        if let Some(val) = c.constant_value() {
            den = den.lcm(val.denom());
        }
    }
    UnivPoly::from_coeffs(
        dense
            .iter()
            .map(|c| {
                let val = c.constant_value().expect("specialized coefficient is constant");
                val.numer() * &den / val.denom()
            })
            .collect(),
    )
}

fn interpolate_rat(points: &[(Rat, Rat)]) -> Vec<Rat> {
    let n = points.len();
    if n == 0 {
        return Vec::new();
    }
    let mut divided: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &divided[i] - &divided[i - 1];
            let den = &points[i].0 - &points[i - j].0;
            divided[i] = num / den;
        }
    }
    let mut coeffs: Vec<Rat> = vec![Rat::zero(); n];
    let mut basis: Vec<Rat> = vec![Rat::one()];
    for (i, d) in divided.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += d * b;
        }
        if i + 1 < n {
            let xi = &points[i].0;
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xi;
            }
            basis = next;
        }
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn univariate_rat(nvars: usize, v: Variable, coeffs: &[Rat]) -> Polynomial {
    let dense: Vec<Polynomial> = coeffs
        .iter()
        .map(|c| Polynomial::constant(nvars, c.clone()))
        .collect();
    Polynomial::from_coeffs_dense(nvars, v, &dense)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_poly;
    use crate::polyring::VarOrder;

    #[test]
    fn modular_univariate_gcd() {
        // (x^2 - 1)(3x + 5) and (x - 1)(x + 7)
        let a = UnivPoly::from_i64(&[-5, -3, 5, 3]);
        let b = UnivPoly::from_i64(&[-7, 6, 1]);
        let g = gcd_univariate_int(&a, &b);
        assert_eq!(g, UnivPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn modular_gcd_coprime() {
        let a = UnivPoly::from_i64(&[-1, 0, 2]);
        let b = UnivPoly::from_i64(&[3, 1]);
        let g = gcd_univariate_int(&a, &b);
        assert_eq!(g.degree(), 0);
    }

    #[test]
    fn bivariate_gcd_by_interpolation() {
        let ord = VarOrder::new(vec!["w", "x"]);
        let w = ord.lookup("w").unwrap();
        let x = ord.lookup("x").unwrap();
        let g = parse_poly("x^2 - w^2 - 1", &ord).unwrap();
        let a = g.mul(&parse_poly("x + w + 2", &ord).unwrap());
        let b = g.mul(&parse_poly("w*x - 3", &ord).unwrap());
        let found = gcd_bivariate_int(&a, &b, w, x).unwrap();
        assert_eq!(found.canonical(), g.canonical());
    }

    #[test]
    fn bivariate_gcd_coprime() {
        let ord = VarOrder::new(vec!["w", "x"]);
        let w = ord.lookup("w").unwrap();
        let x = ord.lookup("x").unwrap();
        let a = parse_poly("x^2 + w", &ord).unwrap();
        let b = parse_poly("x + w^2 + 1", &ord).unwrap();
        let found = gcd_bivariate_int(&a, &b, w, x).unwrap();
        assert!(found.is_constant());
    }
}
