//! Test-side oracles written without the library's field, torus or linear
//! algebra code.

#![allow(dead_code)]

use std::collections::HashSet;

/// A small field given by explicit addition and multiplication tables.
/// Element encodings are private to the oracle.
pub struct TableField {
    pub q: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl TableField {
    pub fn prime(p: usize) -> TableField {
        let add = (0..p)
            .map(|a| (0..p).map(|b| (a + b) % p).collect())
            .collect();
        let mul = (0..p)
            .map(|a| (0..p).map(|b| (a * b) % p).collect())
            .collect();
        TableField { q: p, add, mul }
    }

    /// GF(4) = {0, 1, x, x+1} with x^2 = x + 1, written down by hand.
    pub fn gf4() -> TableField {
        let add = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let mul = vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 3, 1],
            vec![0, 3, 1, 2],
        ];
        TableField { q: 4, add, mul }
    }

    pub fn of_order(q: usize) -> TableField {
        match q {
            4 => TableField::gf4(),
            2 | 3 | 5 | 7 | 11 | 13 => TableField::prime(q),
            _ => panic!("oracle field of order {q} not available"),
        }
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn nonzero(&self) -> Vec<usize> {
        (1..self.q).collect()
    }
}

/// All tuples of `(K*)^s`, lexicographic.
pub fn affine_torus(f: &TableField, s: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                f.nonzero().into_iter().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Orbits of the weighted scalar action, found by applying every `λ ∈ K*`.
pub fn orbits(f: &TableField, w: &[u64]) -> Vec<Vec<Vec<usize>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in affine_torus(f, w.len()) {
        if seen.contains(&p) {
            continue;
        }
        let orbit: Vec<Vec<usize>> = f
            .nonzero()
            .into_iter()
            .map(|lambda| {
                p.iter()
                    .zip(w)
                    .map(|(&x, &wi)| f.mul(f.pow(lambda, wi), x))
                    .collect()
            })
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        for member in &orbit {
            seen.insert(member.clone());
        }
        out.push(orbit);
    }
    out
}

/// Exponent vectors of weighted degree `d`, any order.
pub fn monomials(d: u64, w: &[u64]) -> Vec<Vec<u64>> {
    fn rec(d: u64, w: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if w.is_empty() {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e * w[0] <= d {
            cur.push(e);
            rec(d - e * w[0], &w[1..], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(d, w, &mut Vec::new(), &mut out);
    out
}

/// `(dim, δ)` of the degree-`d` code at one representative per orbit, by
/// enumerating every coefficient vector on the monomials. `dim` is
/// `log_q` of the number of distinct codewords.
pub fn naive_code(f: &TableField, w: &[u64], d: u64) -> (u32, Option<u64>) {
    let points: Vec<Vec<usize>> = orbits(f, w).into_iter().map(|o| o[0].clone()).collect();
    let monos = monomials(d, w);
    let evals: Vec<Vec<usize>> = monos
        .iter()
        .map(|e| {
            points
                .iter()
                .map(|p| {
                    p.iter()
                        .zip(e)
                        .fold(1, |acc, (&x, &k)| f.mul(acc, f.pow(x, k)))
                })
                .collect()
        })
        .collect();
    let total = f.q.pow(monos.len() as u32);
    let mut words = HashSet::new();
    let mut best: Option<u64> = None;
    for idx in 0..total {
        let mut rest = idx;
        let mut word = vec![0; points.len()];
        for row in &evals {
            let c = rest % f.q;
            rest /= f.q;
            for (x, &v) in word.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, v));
            }
        }
        let weight = word.iter().filter(|&&x| x != 0).count() as u64;
        if weight > 0 {
            best = Some(best.map_or(weight, |b| b.min(weight)));
        }
        words.insert(word);
    }
    let mut dim = 0;
    while f.q.pow(dim) < words.len() {
        dim += 1;
    }
    assert_eq!(
        f.q.pow(dim),
        words.len(),
        "codeword count is not a power of q"
    );
    (dim, best)
}

/// Gaps of `⟨w⟩` by marking sums up to a fixed bound.
pub fn naive_gaps(w: &[u64], bound: u64) -> Vec<u64> {
    let mut reach = vec![false; bound as usize + 1];
    reach[0] = true;
    for n in 1..=bound as usize {
        reach[n] = w
            .iter()
            .any(|&wi| n >= wi as usize && reach[n - wi as usize]);
    }
    (0..=bound).filter(|&n| !reach[n as usize]).collect()
}
