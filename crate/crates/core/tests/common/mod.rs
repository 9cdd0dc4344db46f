//! Exhaustive reference routines that use nothing but the multiplication
//! table, plus a few groups built without the family constructors.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use gvz_core::group::{group_from_permutations, parse_table_file, Family, Group, Limits};

pub fn fam(s: &str) -> Arc<Group> {
    Arc::new(s.parse::<Family>().unwrap().build(&Limits::default()).unwrap())
}

fn inverse(g: &Group, a: usize) -> usize {
    g.elements().find(|&b| g.mul(a, b) == 0).unwrap()
}

/// Conjugacy classes straight from the definition `{x⁻¹ a x : x ∈ G}`, as
/// sorted member lists, sorted by least member.
pub fn classes(g: &Group) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for a in g.elements() {
        if seen[a] {
            continue;
        }
        let class: BTreeSet<usize> = g.elements().map(|x| g.mul(g.mul(inverse(g, x), a), x)).collect();
        for &c in &class {
            seen[c] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

pub fn center(g: &Group) -> Vec<usize> {
    g.elements()
        .filter(|&z| g.elements().all(|a| g.mul(z, a) == g.mul(a, z)))
        .collect()
}

pub fn commutator(g: &Group, a: usize, b: usize) -> usize {
    g.mul(g.mul(inverse(g, a), inverse(g, b)), g.mul(a, b))
}

/// Subgroup generated by `seed`, by closing under products until nothing
/// new appears.
pub fn generated(g: &Group, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seed.into_iter().collect();
    set.insert(0);
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert(g.mul(a, b));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

pub fn element_order(g: &Group, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != 0 {
        x = g.mul(x, a);
        k += 1;
    }
    k
}

/// `a[i][j][k] = #{(x,y) ∈ C_i × C_j : xy = r_k}` with `r_k` the least
/// member of class `k`, by counting all pairs.
pub fn class_coefficients(g: &Group, cls: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let k = cls.len();
    let mut class_of = vec![0; g.order()];
    for (i, c) in cls.iter().enumerate() {
        for &a in c {
            class_of[a] = i;
        }
    }
    let mut a = vec![vec![vec![0; k]; k]; k];
    for x in g.elements() {
        for y in g.elements() {
            let z = g.mul(x, y);
            if cls[class_of[z]][0] == z {
                a[class_of[x]][class_of[y]][class_of[z]] += 1;
            }
        }
    }
    a
}

#[derive(Clone, Copy, Debug)]
pub struct C64(pub f64, pub f64);

impl C64 {
    pub fn mul(self, o: C64) -> C64 {
        C64(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    pub fn conj(self) -> C64 {
        C64(self.0, -self.1)
    }
    pub fn close(self, o: C64, tol: f64) -> bool {
        (self.0 - o.0).abs() < tol && (self.1 - o.1).abs() < tol
    }
}

/// Checks that `rows` (values on the brute-force classes) are exactly the
/// irreducible characters, using only the class algebra:
///
/// * there are as many rows as classes and they are pairwise distinct;
/// * each row is orthonormal under `⟨χ,ψ⟩ = |G|⁻¹ Σ |C| χ conj(ψ)`;
/// * each row's central character `ω(C_i) = |C_i| χ(r_i) / χ(1)` satisfies
///   `ω_i ω_j = Σ_k a_ijk ω_k`, i.e. is an algebra map of the class algebra.
///
/// The class algebra has exactly `k` such maps, one per irreducible, so
/// the three conditions pin the table down.
pub fn reconstruct_and_compare(g: &Group, rows: &[Vec<C64>], tol: f64) -> Result<(), String> {
    let cls = classes(g);
    let k = cls.len();
    let n = g.order() as f64;
    if rows.len() != k {
        return Err(format!("{} rows for {k} classes", rows.len()));
    }
    for (r, row) in rows.iter().enumerate() {
        for (s, other) in rows.iter().enumerate() {
            let mut ip = C64(0.0, 0.0);
            for (c, class) in cls.iter().enumerate() {
                let t = row[c].mul(other[c].conj());
                ip.0 += class.len() as f64 * t.0 / n;
                ip.1 += class.len() as f64 * t.1 / n;
            }
            let expected = if r == s { C64(1.0, 0.0) } else { C64(0.0, 0.0) };
            if !ip.close(expected, tol) {
                return Err(format!("rows {r},{s}: inner product {ip:?}"));
            }
        }
    }
    let a = class_coefficients(g, &cls);
    for (r, row) in rows.iter().enumerate() {
        let d = row[0].0;
        if (d - d.round()).abs() > tol || row[0].1.abs() > tol || d < 0.5 {
            return Err(format!("row {r} has degree {:?}", row[0]));
        }
        let omega: Vec<C64> = (0..k)
            .map(|c| C64(cls[c].len() as f64 * row[c].0 / d, cls[c].len() as f64 * row[c].1 / d))
            .collect();
        for i in 0..k {
            for j in 0..k {
                let lhs = omega[i].mul(omega[j]);
                let mut rhs = C64(0.0, 0.0);
                for (kk, w) in omega.iter().enumerate() {
                    rhs.0 += a[i][j][kk] as f64 * w.0;
                    rhs.1 += a[i][j][kk] as f64 * w.1;
                }
                if !lhs.close(rhs, tol * n * n) {
                    return Err(format!("row {r}: ω_{i} ω_{j} = {lhs:?}, Σ a ω = {rhs:?}"));
                }
            }
        }
    }
    Ok(())
}

/// D8 as the symmetries of a square with vertices 0..4.
pub fn dihedral8_on_square() -> Group {
    group_from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], &Limits::default()).unwrap()
}

/// Q8 as ±{1,i,j,k} with elements `2·unit + sign`, given by its
/// multiplication rule on units.
pub fn quaternion_by_rule() -> Group {
    // units 0..4 = 1, i, j, k; product (unit, sign flip).
    const RULE: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    table_group("Q8 by rule", 8, |a, b| {
        let (u, neg) = RULE[a / 2][b / 2];
        2 * u + ((a % 2) ^ (b % 2) ^ usize::from(neg))
    })
}

/// Upper unitriangular 3×3 matrices over `Z/p`, `(a, b, c)` for the
/// entries above the diagonal, index `a + p·b + p²·c`.
pub fn heisenberg_matrices(p: usize) -> Group {
    let n = p * p * p;
    table_group(&format!("UT3({p})"), n, |x, y| {
        let (a1, b1, c1) = (x % p, x / p % p, x / (p * p));
        let (a2, b2, c2) = (y % p, y / p % p, y / (p * p));
        // [[1,a,c],[0,1,b],[0,0,1]] product
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + a1 * b2) % p;
        a + p * b + p * p * c
    })
}

/// The modular group `M4(2) = ⟨a, b | a⁸ = b² = 1, bab = a⁵⟩`, element
/// `a^i b^j` at index `i + 8j`, ingested through the table file format.
pub fn modular16_from_text() -> Group {
    let mul = |x: usize, y: usize| {
        let (i, j) = (x % 8, x / 8);
        let (k, l) = (y % 8, y / 8);
        // b^j a^k = a^{k·5^j} b^j
        let k = if j == 1 { k * 5 % 8 } else { k };
        (i + k) % 8 + 8 * ((j + l) % 2)
    };
    let mut text = String::from("# M4(2)\n16\n");
    for x in 0..16 {
        let row: Vec<String> = (0..16).map(|y| mul(x, y).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    parse_table_file("M4(2)", &text, &Limits::default()).unwrap()
}

pub fn table_group(name: &str, n: usize, mul: impl Fn(usize, usize) -> usize) -> Group {
    let table: Vec<u32> = (0..n * n).map(|t| mul(t / n, t % n) as u32).collect();
    Group::from_table(name, n, table, &Limits::default()).unwrap()
}
