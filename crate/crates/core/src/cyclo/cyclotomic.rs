//! Cyclotomic polynomials and Euler's totient.

use crate::UniPoly;

pub fn totient(m: u64) -> u64 {
    let mut n = m;
    let mut out = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Φ_m`, computed as `(x^m - 1) / ∏_{d | m, d < m} Φ_d` by exact division.
///
/// Panics if `m == 0`.
pub fn cyclotomic_polynomial(m: u64) -> UniPoly {
    assert!(m >= 1, "cyclotomic polynomial needs a positive index");
    let divs = divisors(m);
    let mut phis: Vec<UniPoly> = Vec::with_capacity(divs.len());
    for (idx, &d) in divs.iter().enumerate() {
        let mut acc = x_pow_minus_one(d);
        for (jdx, &e) in divs[..idx].iter().enumerate() {
            if d % e == 0 {
                let (q, r) = acc
                    .divrem(&phis[jdx])
                    .expect("cyclotomic divisor is nonzero");
                debug_assert!(r.is_zero());
                acc = q;
            }
        }
        phis.push(acc);
    }
    phis.pop().expect("m has at least one divisor")
}

fn x_pow_minus_one(d: u64) -> UniPoly {
    let mut c = vec![0i64; d as usize + 1];
    c[0] = -1;
    c[d as usize] = 1;
    UniPoly::from_i64(&c)
}
