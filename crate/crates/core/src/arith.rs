//! Integer helpers shared across modules.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^n` with `p` prime, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut n = 0;
    let mut rest = q;
    while rest > 1 {
        rest /= p;
        n += 1;
    }
    Some((p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout() {
        for a in 1..40i64 {
            for b in 1..40i64 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(g, gcd(a as u64, b as u64) as i64);
                assert_eq!(a * x + b * y, g);
            }
        }
        assert_eq!(ext_gcd(2, 3), (1, -1, 1));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(5), Some((5, 1)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }
}
