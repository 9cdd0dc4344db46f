//! Dense linear algebra over a small prime field.

use crate::group::prime_factors;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Fp {
        assert!((2..(1 << 31)).contains(&p), "prime must fit in 31 bits");
        Fp { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn from_usize(&self, a: usize) -> u64 {
        a as u64 % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.p - 1;
        let qs = prime_factors(order as usize);
        (2..self.p)
            .find(|&g| qs.iter().all(|&q| self.pow(g, order / q as u64) != 1))
            .unwrap_or(1)
    }

    /// Characteristic polynomial (coefficients low to high, monic) via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self, matrix: &[Vec<u64>]) -> Vec<u64> {
        let n = matrix.len();
        let mut h: Vec<Vec<u64>> = matrix.to_vec();
        for j in 0..n.saturating_sub(2) {
            let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
                continue;
            };
            if piv != j + 1 {
                h.swap(piv, j + 1);
                for row in h.iter_mut() {
                    row.swap(piv, j + 1);
                }
            }
            let pinv = self.inv(h[j + 1][j]);
            for k in j + 2..n {
                let u = self.mul(h[k][j], pinv);
                if u == 0 {
                    continue;
                }
                #[allow(clippy::needless_range_loop)]
                for c in 0..n {
                    let t = self.mul(u, h[j + 1][c]);
                    h[k][c] = self.sub(h[k][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[k]);
                    row[j + 1] = self.add(row[j + 1], t);
                }
            }
        }
        // p_{m+1} = (x − h_mm) p_m − Σ_{i<m} h_im (Π_{l=i+1..m} h_{l,l−1}) p_i
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &polys[m];
            let mut next = vec![0u64; m + 2];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = self.add(next[i + 1], c);
                next[i] = self.sub(next[i], self.mul(h[m][m], c));
            }
            let mut t = 1u64;
            for i in (0..m).rev() {
                t = self.mul(t, h[i + 1][i]);
                let coef = self.mul(h[i][m], t);
                if coef == 0 {
                    continue;
                }
                for (l, &c) in polys[i].iter().enumerate() {
                    next[l] = self.sub(next[l], self.mul(coef, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p`, in increasing order.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }

    /// Brings `rows` to reduced row echelon form in place, dropping zero
    /// rows. Returns the pivot column of each remaining row.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    #[allow(clippy::needless_range_loop)]
                    for j in 0..ncols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : M v = 0}` for a square matrix `M`.
    pub fn nullspace(&self, matrix: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = matrix.first().map_or(0, Vec::len);
        let mut rows = matrix.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }
}
