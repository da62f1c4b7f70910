//! Gröbner bases over a prime field `F_p`, `p < 2⁶³`. Only leading monomials are produced;
//! they are used to count points of sliced systems, where rational coefficients swell.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::mono::{Mono, MonoOrder};
use super::poly::Poly;
use super::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for b in BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// The largest prime `≤ n`.
pub fn prime_at_most(mut n: u64) -> u64 {
    while !is_prime(n) {
        n -= 1;
    }
    n
}

impl Fp {
    pub fn new(p: u64) -> Result<Fp> {
        if p >= 1 << 63 || !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not a usable prime")));
        }
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r < BigInt::zero() {
            r += p;
        }
        r.to_u64().unwrap()
    }

    /// Image of a rational; `None` if `p` divides its denominator.
    pub fn of_rat(&self, r: &Rat) -> Option<u64> {
        let d = self.reduce_int(r.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.reduce_int(r.numer()), self.inv(d)))
    }
}

type Terms = Vec<(Mono, u64)>;

/// `a - c·m·b` for term lists sorted descending.
fn sub_scaled(f: &Fp, a: &[(Mono, u64)], c: u64, m: &Mono, b: &[(Mono, u64)], order: &MonoOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let bm = (j < b.len()).then(|| b[j].0.mul(m));
        let ord = match (&bm, i < a.len()) {
            (None, _) => Ordering::Greater,
            (Some(_), false) => Ordering::Less,
            (Some(bm), true) => order.cmp(&a[i].0, bm),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let v = f.sub(0, f.mul(c, b[j].1));
                out.push((bm.unwrap(), v));
                j += 1;
            }
            Ordering::Equal => {
                let v = f.sub(a[i].1, f.mul(c, b[j].1));
                if v != 0 {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn make_monic(f: &Fp, t: &mut Terms) {
    let inv = f.inv(t[0].1);
    for (_, c) in t.iter_mut() {
        *c = f.mul(*c, inv);
    }
}

/// Top-reduction: afterwards no basis leading monomial divides the leading monomial.
fn top_reduce(f: &Fp, mut work: Terms, store: &[Terms], active: &[usize], order: &MonoOrder) -> Terms {
    while let Some((lm, lc)) = work.first().cloned() {
        let Some(g) = active.iter().map(|&k| &store[k]).find(|g| g[0].0.divides(&lm)) else {
            break;
        };
        work = sub_scaled(f, &work[1..], lc, &g[0].0.quotient_of(&lm), &g[1..], order);
    }
    work
}

/// Minimal leading monomials of the ideal generated by `gens` over `F_p` (grevlex).
/// `None` if some coefficient has a denominator divisible by `p`.
pub fn leading_monomials(gens: &[Poly], nvars: usize, f: &Fp, max_pairs: usize) -> Result<Option<Vec<Mono>>> {
    let order = MonoOrder::GrevLex;
    let mut inputs: Vec<Terms> = Vec::new();
    for g in gens {
        let mut t: Terms = Vec::new();
        for (m, c) in g.terms() {
            match f.of_rat(c) {
                None => return Ok(None),
                Some(0) => {}
                Some(v) => t.push((m.clone(), v)),
            }
        }
        if !t.is_empty() {
            inputs.push(t);
        }
    }
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));

    let mut store: Vec<Terms> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize, Mono)> = Vec::new();
    let one = Mono::one(nvars);

    let install = |h: Terms, store: &mut Vec<Terms>, active: &mut Vec<usize>, pairs: &mut Vec<(usize, usize, Mono)>| {
        let hi = store.len();
        let hlm = h[0].0.clone();
        store.push(h);
        // Gebauer–Möller update, as in the rational version
        let cands: Vec<(usize, Mono)> = active.iter().map(|&g| (g, hlm.lcm(&store[g][0].0))).collect();
        let mut keep: Vec<(usize, Mono)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let coprime = hlm.gcd_is_one(&store[*g][0].0);
            let dominated = cands[k + 1..]
                .iter()
                .chain(keep.iter())
                .any(|(_, l2)| l2.divides(l) && l2 != l)
                || cands[k + 1..].iter().any(|(_, l2)| l2 == l);
            if coprime || !dominated {
                keep.push((*g, l.clone()));
            }
        }
        pairs.retain(|(i, j, l)| {
            !(hlm.divides(l) && hlm.lcm(&store[*i][0].0) != *l && hlm.lcm(&store[*j][0].0) != *l)
        });
        for (g, l) in keep {
            if !hlm.gcd_is_one(&store[g][0].0) {
                pairs.push((g, hi, l));
            }
        }
        active.retain(|&g| !hlm.divides(&store[g][0].0));
        active.push(hi);
    };

    for inp in inputs {
        let mut h = top_reduce(f, inp, &store, &active, &order);
        if h.is_empty() {
            continue;
        }
        if h[0].0 == one {
            return Ok(Some(vec![one]));
        }
        make_monic(f, &mut h);
        install(h, &mut store, &mut active, &mut pairs);
    }
    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > max_pairs {
            return Err(Error::ResourceLimit(format!("more than {max_pairs} S-pairs")));
        }
        let best = (0..pairs.len())
            .min_by(|&a, &b| order.cmp(&pairs[a].2, &pairs[b].2).then_with(|| (pairs[a].0, pairs[a].1).cmp(&(pairs[b].0, pairs[b].1))))
            .unwrap();
        let (i, j, l) = pairs.swap_remove(best);
        let (fi, fj) = (&store[i], &store[j]);
        let a: Terms = fi[1..].iter().map(|(m, c)| (m.mul(&fi[0].0.quotient_of(&l)), *c)).collect();
        let s = sub_scaled(f, &a, 1, &fj[0].0.quotient_of(&l), &fj[1..], &order);
        let mut h = top_reduce(f, s, &store, &active, &order);
        if h.is_empty() {
            continue;
        }
        if h[0].0 == one {
            return Ok(Some(vec![one]));
        }
        make_monic(f, &mut h);
        install(h, &mut store, &mut active, &mut pairs);
    }
    Ok(Some(active.iter().map(|&k| store[k][0].0.clone()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symkernel::{standard_monomial_count, PolyRing};

    #[test]
    fn primes() {
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(561));
        assert_eq!(prime_at_most(100), 97);
        assert!(Fp::new(91).is_err());
    }

    #[test]
    fn rationals_reduce() {
        let f = Fp::new(7).unwrap();
        let half = Rat::new(1.into(), 2.into());
        assert_eq!(f.of_rat(&half), Some(4));
        assert_eq!(f.of_rat(&Rat::new(1.into(), 14.into())), None);
    }

    #[test]
    fn counts_points() {
        let r = PolyRing::base(&["x", "y"]).unwrap();
        let gens: Vec<Poly> = ["x^2 + y^2 - 5", "x*y - 2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let f = Fp::new(prime_at_most(1 << 62)).unwrap();
        let lts = leading_monomials(&gens, 2, &f, 10_000).unwrap().unwrap();
        assert_eq!(standard_monomial_count(&lts, 2).unwrap(), 4);
        let unit: Vec<Poly> = ["x*y - 1", "x"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert_eq!(leading_monomials(&unit, 2, &f, 100).unwrap().unwrap(), vec![Mono::one(2)]);
    }
}
