//! Character tables by the modular method.
//!
//! Common eigenvectors of the class matrices over `F_p` give the central
//! characters `ω_χ`; degrees follow from the norm relation and the complex
//! values are recovered exactly from eigenvalue multiplicities computed
//! through the power maps.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use super::cyclotomic::{Accumulator, CyclotomicInt};
use super::modp::Fp;
use super::CharError;
use crate::group::Group;

/// Class multiplication coefficients `a[i][j][k] = #{(x, y) ∈ C_i × C_j :
/// xy = g_k}` for the fixed representative `g_k` of class `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMatrices {
    k: usize,
    coeffs: Vec<u32>,
}

impl ClassMatrices {
    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.coeffs[(i * self.k + j) * self.k + k]
    }

    pub fn num_classes(&self) -> usize {
        self.k
    }
}

/// `M_i[j][k] = a_ijk`, as a dense k×k matrix.
fn class_matrix(g: &Group, i: usize) -> Vec<Vec<u32>> {
    let cc = g.classes();
    let k = cc.len();
    let mut m = vec![vec![0u32; k]; k];
    for (kk, &target) in cc.reps().iter().enumerate() {
        for &x in cc.members(i) {
            let y = g.mul(g.inv(x), target);
            m[cc.class_of(y)][kk] += 1;
        }
    }
    for (j, row) in m.iter().enumerate() {
        let total: usize = row.iter().enumerate().map(|(kk, &x)| x as usize * cc.size(kk)).sum();
        assert_eq!(
            total,
            cc.size(i) * cc.size(j),
            "class structure constants are inconsistent"
        );
    }
    m
}

pub fn class_matrices(g: &Group) -> ClassMatrices {
    let k = g.classes().len();
    let mut coeffs = vec![0u32; k * k * k];
    for i in 0..k {
        let m = class_matrix(g, i);
        for j in 0..k {
            for kk in 0..k {
                coeffs[(i * k + j) * k + kk] = m[j][kk];
            }
        }
    }
    ClassMatrices { k, coeffs }
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2√n`.
pub fn dixon_prime(exponent: usize, order: usize) -> u64 {
    let bound = 2.0 * (order as f64).sqrt();
    let mut p = 1 + exponent as u64;
    loop {
        if p as f64 > bound && crate::group::is_prime(p as usize) {
            return p;
        }
        p += exponent as u64;
    }
}

#[derive(Debug, Clone)]
pub struct Character {
    index: usize,
    degree: usize,
    values: Vec<CyclotomicInt>,
}

impl Character {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// One value per conjugacy class, in class order.
    pub fn values(&self) -> &[CyclotomicInt] {
        &self.values
    }

    pub fn is_linear(&self) -> bool {
        self.degree == 1
    }
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<Group>,
    prime: u64,
    power_maps: Vec<Vec<usize>>,
    chars: Vec<Character>,
}

impl CharacterTable {
    pub fn compute(group: Arc<Group>) -> Result<CharacterTable, CharError> {
        let (prime, power_maps, rows) = dixon(&group)?;
        let mut chars: Vec<Character> = rows
            .into_iter()
            .map(|(degree, values)| Character {
                index: 0,
                degree,
                values,
            })
            .collect();
        chars.sort_by(compare_rows);
        for (i, c) in chars.iter_mut().enumerate() {
            c.index = i;
        }
        let table = CharacterTable {
            group,
            prime,
            power_maps,
            chars,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[Character] {
        &self.chars
    }

    pub fn char(&self, i: usize) -> &Character {
        &self.chars[i]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.chars.iter().map(|c| c.degree).collect()
    }

    /// Class of `(rep of c)^j`.
    pub fn power_map(&self, class: usize, j: usize) -> usize {
        let row = &self.power_maps[class];
        row[j % row.len()]
    }

    /// `χ_i(g)` for an element `g`.
    pub fn value(&self, i: usize, g: usize) -> &CyclotomicInt {
        &self.chars[i].values[self.group.classes().class_of(g)]
    }

    /// `Σ_c |C_c| χ(c) conj(ψ(c))`, exactly.
    pub fn inner_product_times_order(&self, a: usize, b: usize) -> CyclotomicInt {
        let cc = self.group.classes();
        let mut acc = Accumulator::new(self.group.exponent());
        for c in 0..cc.len() {
            acc.add_product_conj(cc.size(c) as i64, &self.chars[a].values[c], &self.chars[b].values[c]);
        }
        acc.into_value()
    }

    /// Checks the orthogonality relations and degree identities exactly.
    pub fn verify(&self) -> Result<(), CharError> {
        let g = &self.group;
        let cc = g.classes();
        let n = g.order();
        let k = cc.len();
        let fail = |msg: String| Err(CharError::LiftFailure(msg));
        if self.chars.len() != k {
            return fail(format!("{} characters for {k} classes", self.chars.len()));
        }
        if self.chars.iter().map(|c| c.degree * c.degree).sum::<usize>() != n {
            return fail("sum of squared degrees differs from |G|".into());
        }
        for c in &self.chars {
            if !n.is_multiple_of(c.degree) {
                return fail(format!("degree {} does not divide {n}", c.degree));
            }
            if c.values[0] != CyclotomicInt::from_int(c.degree as i64) {
                return fail(format!("character {} has wrong value at the identity", c.index));
            }
        }
        let e = g.exponent();
        for a in 0..k {
            for b in a..k {
                let mut acc = Accumulator::new(e);
                for c in 0..k {
                    acc.add_product_conj(cc.size(c) as i64, &self.chars[a].values[c], &self.chars[b].values[c]);
                }
                if a == b {
                    acc.add_int(-(n as i64));
                }
                if !acc.into_value().is_zero() {
                    return fail(format!("row orthogonality fails for characters {a} and {b}"));
                }
            }
        }
        for c1 in 0..k {
            for c2 in c1..k {
                let mut acc = Accumulator::new(e);
                for chi in &self.chars {
                    acc.add_product_conj(1, &chi.values[c1], &chi.values[c2]);
                }
                if c1 == c2 {
                    acc.add_int(-((n / cc.size(c1)) as i64));
                }
                if !acc.into_value().is_zero() {
                    return fail(format!("column orthogonality fails for classes {c1} and {c2}"));
                }
            }
        }
        Ok(())
    }

    /// Text dump: `order n classes k`, the class sizes, then one line per
    /// character with its degree followed by each value as `m:c_0,...`.
    pub fn dump(&self) -> String {
        let cc = self.group.classes();
        let mut out = String::new();
        writeln!(out, "order {} classes {}", self.group.order(), cc.len()).unwrap();
        let sizes: Vec<String> = cc.sizes().iter().map(|s| s.to_string()).collect();
        writeln!(out, "{}", sizes.join(" ")).unwrap();
        for chi in &self.chars {
            write!(out, "{}", chi.degree).unwrap();
            for v in &chi.values {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Degree ascending, then lexicographic on `(conductor, coeffs)` per class,
/// principal character first.
fn compare_rows(a: &Character, b: &Character) -> Ordering {
    let principal = |c: &Character| c.degree == 1 && c.values.iter().all(|v| v.coeffs()[0] == 1);
    principal(b)
        .cmp(&principal(a))
        .then(a.degree.cmp(&b.degree))
        .then_with(|| {
            let fa = a.values.iter().map(|v| (v.conductor(), v.coeffs()));
            let fb = b.values.iter().map(|v| (v.conductor(), v.coeffs()));
            fa.cmp(fb)
        })
}

type Rows = Vec<(usize, Vec<CyclotomicInt>)>;

fn dixon(g: &Group) -> Result<(u64, Vec<Vec<usize>>, Rows), CharError> {
    let cc = g.classes();
    let k = cc.len();
    let n = g.order();
    let e = g.exponent();
    let prime = dixon_prime(e, n);
    let f = Fp::new(prime);

    // Split F_p^k into common eigenspaces of the class matrices.
    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m: Vec<Vec<u64>> = class_matrix(g, i)
            .into_iter()
            .map(|row| row.into_iter().map(u64::from).collect())
            .collect();
        let mut next = Vec::with_capacity(k);
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split(&f, &m, space)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(CharError::LiftFailure(format!(
            "class matrices leave {} common eigenspaces for {k} classes",
            spaces.len()
        )));
    }

    let inverse_class: Vec<usize> = (0..k).map(|c| cc.class_of(g.inv(cc.rep(c)))).collect();
    let power_maps: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let r = cc.rep(c);
            let mut x = 0;
            (0..g.element_order(r))
                .map(|_| {
                    let cls = cc.class_of(x);
                    x = g.mul(x, r);
                    cls
                })
                .collect()
        })
        .collect();
    let z = f.pow(f.primitive_root(), (prime - 1) / e as u64);

    let mut rows = Vec::with_capacity(k);
    for space in spaces {
        let w = &space[0];
        if w[0] == 0 {
            return Err(CharError::LiftFailure(
                "eigenvector vanishes on the identity class".into(),
            ));
        }
        let w0 = f.inv(w[0]);
        let omega: Vec<u64> = w.iter().map(|&x| f.mul(x, w0)).collect();
        let s = (0..k).fold(0, |acc, c| {
            let t = f.mul(
                f.mul(omega[c], omega[inverse_class[c]]),
                f.inv(f.from_usize(cc.size(c))),
            );
            f.add(acc, t)
        });
        if s == 0 {
            return Err(CharError::LiftFailure("degenerate norm in degree computation".into()));
        }
        let d2 = f.mul(f.from_usize(n), f.inv(s));
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| f.from_usize(d * d) == d2)
            .ok_or_else(|| CharError::LiftFailure("no integer degree matches the norm".into()))?;
        let dp = f.from_usize(degree);
        let modular: Vec<u64> = (0..k)
            .map(|c| f.mul(f.mul(omega[c], dp), f.inv(f.from_usize(cc.size(c)))))
            .collect();

        let mut values = Vec::with_capacity(k);
        for (c, pm) in power_maps.iter().enumerate() {
            let o = pm.len();
            let zo_inv = f.inv(f.pow(z, (e / o) as u64));
            let o_inv = f.inv(f.from_usize(o));
            let mut coeffs = vec![0i64; o];
            for (t, coeff) in coeffs.iter_mut().enumerate() {
                // m_t = o⁻¹ Σ_j χ(g^j) z^{−jt}
                let step = f.pow(zo_inv, t as u64);
                let mut acc = 0;
                let mut root = 1;
                for &cls in pm {
                    acc = f.add(acc, f.mul(modular[cls], root));
                    root = f.mul(root, step);
                }
                let mult = f.mul(acc, o_inv) as usize;
                if mult > degree {
                    return Err(CharError::LiftFailure(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree} on class {c}"
                    )));
                }
                *coeff = mult as i64;
            }
            if coeffs.iter().sum::<i64>() != degree as i64 {
                return Err(CharError::LiftFailure(format!(
                    "eigenvalue multiplicities on class {c} do not sum to the degree"
                )));
            }
            values.push(CyclotomicInt::new(o, coeffs));
        }
        rows.push((degree, values));
    }
    Ok((prime, power_maps, rows))
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `m` restricted to it.
fn split(f: &Fp, m: &[Vec<u64>], mut basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>, CharError> {
    let pivots = f.rref(&mut basis);
    let d = basis.len();
    let k = m.len();
    // images[t] = M b_t
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..k)
                .map(|j| (0..k).fold(0, |acc, l| f.add(acc, f.mul(m[j][l], b[l]))))
                .collect()
        })
        .collect();
    // Restriction A with M b_t = Σ_s A[s][t] b_s.
    let a: Vec<Vec<u64>> = (0..d).map(|s| (0..d).map(|t| images[t][pivots[s]]).collect()).collect();
    let eigenvalues = f.roots(&f.charpoly(&a));
    if eigenvalues.len() == 1 {
        return Ok(vec![basis]);
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|s| {
                (0..d)
                    .map(|t| if s == t { f.sub(a[s][t], lambda) } else { a[s][t] })
                    .collect()
            })
            .collect();
        let kernel = f.nullspace(&shifted);
        total += kernel.len();
        let mut sub: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coef| {
                (0..k)
                    .map(|j| (0..d).fold(0, |acc, t| f.add(acc, f.mul(coef[t], basis[t][j]))))
                    .collect()
            })
            .collect();
        f.rref(&mut sub);
        out.push(sub);
    }
    if total != d {
        return Err(CharError::LiftFailure(
            "class matrix is not diagonalizable over the chosen prime".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, Limits};

    fn table(s: &str) -> CharacterTable {
        let g = s.parse::<Family>().unwrap().build(&Limits::default()).unwrap();
        CharacterTable::compute(Arc::new(g)).unwrap()
    }

    fn ints(v: &[CyclotomicInt]) -> Vec<CyclotomicInt> {
        v.to_vec()
    }

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(2, 2), 3);
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(dixon_prime(12, 216), 37);
    }

    #[test]
    fn c2_table() {
        let t = table("cyclic:2");
        assert_eq!(t.degrees(), vec![1, 1]);
        assert_eq!(
            ints(t.char(0).values()),
            vec![CyclotomicInt::from_int(1), CyclotomicInt::from_int(1)]
        );
        assert_eq!(
            ints(t.char(1).values()),
            vec![CyclotomicInt::from_int(1), CyclotomicInt::from_int(-1)]
        );
    }

    #[test]
    fn trivial_group_table() {
        let t = table("cyclic:1");
        assert_eq!(t.degrees(), vec![1]);
    }

    #[test]
    fn s3_table() {
        let t = table("symmetric:3");
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let expected: Vec<CyclotomicInt> = [2, 0, -1].iter().map(|&x| CyclotomicInt::from_int(x)).collect();
        assert_eq!(ints(t.char(2).values()), expected);
    }

    #[test]
    fn q8_table() {
        let t = table("quaternion:8");
        assert_eq!(t.degrees(), vec![1, 1, 1, 1, 2]);
        let expected: Vec<CyclotomicInt> = [2, -2, 0, 0, 0].iter().map(|&x| CyclotomicInt::from_int(x)).collect();
        assert_eq!(ints(t.char(4).values()), expected);
    }

    #[test]
    fn class_matrix_examples() {
        let s3 = "symmetric:3"
            .parse::<Family>()
            .unwrap()
            .build(&Limits::default())
            .unwrap();
        let a = class_matrices(&s3);
        for j in 0..3 {
            for k in 0..3 {
                assert_eq!(a.get(0, j, k), u32::from(j == k));
            }
        }
        // 3-cycles squared hit the identity twice.
        assert_eq!(a.get(2, 2, 0), 2);
    }

    #[test]
    fn dump_format() {
        let t = table("cyclic:3");
        assert_eq!(
            t.dump(),
            "order 3 classes 3\n1 1 1\n1 1:1 3:1,0,0 3:1,0,0\n1 1:1 3:0,0,1 3:0,1,0\n1 1:1 3:0,1,0 3:0,0,1\n"
        );
    }
}
