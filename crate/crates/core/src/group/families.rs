//! Built-in group families and direct products.
//!
//! Element orderings (identity is always 0):
//!
//! * `cyclic:n`: index `k` is `r^k`.
//! * `abelian:n1,..,nk`: iterated direct product of cyclic groups, last
//!   factor varying fastest.
//! * `dihedral:2n`: index `i` is `r^i`, index `n+i` is `r^i s`, with
//!   `s r s = r⁻¹`.
//! * `quaternion:4n`: dicyclic group `⟨a, b | a^2n, b² = a^n, b⁻¹ab = a⁻¹⟩`;
//!   index `i` is `a^i`, index `2n+i` is `a^i b`. Generalized quaternion
//!   when `4n` is a power of two.
//! * `semidihedral:2^k`: `⟨a, b | a^m, b², bab = a^(m/2-1)⟩` with
//!   `m = 2^(k-1)`; same layout as the quaternion family.
//! * `extraspecial:p,r,e`: order `p^(1+2r)`, built as pairs `(v, c)` with
//!   `v ∈ (ℤ/p)^2r`, `c ∈ ℤ/p` and product `(v+w, c+d+β(v,w))`. Index is
//!   `c + p·Σ v_t p^t`. For odd `p`, `e = 1` gives exponent `p` and `e = 2`
//!   exponent `p²`. For `p = 2`, `e = 1` is the central product of `r`
//!   copies of D8 and `e = 2` replaces one copy by Q8.
//! * `heisenberg:p`: upper unitriangular 3×3 matrices over ℤ/p, i.e.
//!   `extraspecial:p,1,1`.
//! * `symmetric:n`, `alternating:n`: permutations in lexicographic order of
//!   their image lists.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::perm::from_permutation_elements;
use super::{is_prime, Group, GroupError, Limits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtraspecialKind {
    ExponentP,
    ExponentP2,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
    Quaternion(usize),
    Semidihedral(usize),
    Extraspecial {
        p: usize,
        rank: usize,
        kind: ExtraspecialKind,
    },
    Heisenberg(usize),
    Symmetric(usize),
    Alternating(usize),
}

fn out_of_range(family: &str, message: impl Into<String>) -> GroupError {
    GroupError::ParamOutOfRange {
        family: family.to_string(),
        message: message.into(),
    }
}

impl Family {
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family, GroupError> {
        let one = |fam: &str| -> Result<usize, GroupError> {
            match params {
                [n] => Ok(*n),
                _ => Err(out_of_range(fam, "expected exactly one parameter")),
            }
        };
        let fam = match name {
            "cyclic" => Family::Cyclic(one(name)?),
            "abelian" => Family::Abelian(params.to_vec()),
            "dihedral" => Family::Dihedral(one(name)?),
            "quaternion" | "generalized_quaternion" | "dicyclic" => Family::Quaternion(one("quaternion")?),
            "semidihedral" => Family::Semidihedral(one(name)?),
            "extraspecial" => {
                let (p, rank, e) = match params {
                    [p] => (*p, 1, 1),
                    [p, r] => (*p, *r, 1),
                    [p, r, e] => (*p, *r, *e),
                    _ => return Err(out_of_range(name, "expected p[,rank[,exponent]]")),
                };
                let kind = match e {
                    1 => ExtraspecialKind::ExponentP,
                    2 => ExtraspecialKind::ExponentP2,
                    _ => return Err(out_of_range(name, "exponent selector must be 1 or 2")),
                };
                Family::Extraspecial { p, rank, kind }
            }
            "heisenberg" | "heisenberg_mod" => Family::Heisenberg(one("heisenberg")?),
            "symmetric" => Family::Symmetric(one(name)?),
            "alternating" => Family::Alternating(one(name)?),
            _ => return Err(GroupError::UnknownFamily(name.to_string())),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Short family identifier used in corpus filters.
    pub fn id(&self) -> &'static str {
        match self {
            Family::Cyclic(_) => "cyclic",
            Family::Abelian(_) => "abelian",
            Family::Dihedral(_) => "dihedral",
            Family::Quaternion(_) => "quaternion",
            Family::Semidihedral(_) => "semidihedral",
            Family::Extraspecial { .. } => "extraspecial",
            Family::Heisenberg(_) => "heisenberg",
            Family::Symmetric(_) => "symmetric",
            Family::Alternating(_) => "alternating",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Family::Cyclic(n) | Family::Dihedral(n) | Family::Quaternion(n) | Family::Semidihedral(n) => *n,
            Family::Abelian(ns) => ns.iter().product(),
            Family::Extraspecial { p, rank, .. } => p.pow(1 + 2 * *rank as u32),
            Family::Heisenberg(p) => p * p * p,
            Family::Symmetric(n) => (1..=*n).product(),
            Family::Alternating(n) => ((1..=*n).product::<usize>() / 2).max(1),
        }
    }

    fn validate(&self) -> Result<(), GroupError> {
        let id = self.id();
        match self {
            Family::Cyclic(n) if *n == 0 => Err(out_of_range(id, "order must be positive")),
            Family::Abelian(ns) if ns.is_empty() || ns.contains(&0) => {
                Err(out_of_range(id, "need at least one positive cyclic factor"))
            }
            Family::Dihedral(n) if *n < 4 || n % 2 != 0 => Err(out_of_range(id, "order must be even and at least 4")),
            Family::Quaternion(n) if *n < 8 || n % 4 != 0 => {
                Err(out_of_range(id, "order must be a multiple of 4 and at least 8"))
            }
            Family::Semidihedral(n) if *n < 16 || !n.is_power_of_two() => {
                Err(out_of_range(id, "order must be a power of two, at least 16"))
            }
            Family::Extraspecial { p, rank, .. } if !is_prime(*p) || *rank == 0 || *rank > 8 => {
                Err(out_of_range(id, "p must be prime and rank between 1 and 8"))
            }
            Family::Heisenberg(p) if !is_prime(*p) => Err(out_of_range(id, "p must be prime")),
            Family::Symmetric(n) | Family::Alternating(n) if *n == 0 || *n > 5 => {
                Err(out_of_range(id, "degree must be between 1 and 5"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Group, GroupError> {
        self.validate()?;
        if let Family::Extraspecial { p, rank, .. } = self {
            // Guard against overflow before computing the order.
            if (1 + 2 * rank) as f64 * (*p as f64).log2() > 40.0 {
                return Err(GroupError::OrderCapExceeded { cap: limits.order_cap });
            }
        }
        limits.check(self.order())?;
        let name = self.to_string();
        let group = match self {
            Family::Cyclic(n) => cyclic(*n),
            Family::Abelian(ns) => {
                let mut acc = cyclic(1);
                for &n in ns {
                    acc = direct_product(&acc, &cyclic(n), limits)?;
                }
                acc
            }
            Family::Dihedral(order) => {
                let n = order / 2;
                metacyclic(n, n - 1, 0)
            }
            Family::Quaternion(order) => {
                let m = order / 2;
                metacyclic(m, m - 1, m / 2)
            }
            Family::Semidihedral(order) => {
                let m = order / 2;
                metacyclic(m, m / 2 - 1, 0)
            }
            Family::Extraspecial { p, rank, kind } => extraspecial(*p, *rank, *kind),
            Family::Heisenberg(p) => extraspecial(*p, 1, ExtraspecialKind::ExponentP),
            Family::Symmetric(n) => permutation_family(*n, false),
            Family::Alternating(n) => permutation_family(*n, true),
        };
        Ok(group.with_name(name))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Abelian(ns) => {
                let parts: Vec<String> = ns.iter().map(|n| n.to_string()).collect();
                write!(f, "abelian:{}", parts.join(","))
            }
            Family::Extraspecial { p, rank, kind } => {
                let e = match kind {
                    ExtraspecialKind::ExponentP => 1,
                    ExtraspecialKind::ExponentP2 => 2,
                };
                write!(f, "extraspecial:{p},{rank},{e}")
            }
            Family::Cyclic(n)
            | Family::Dihedral(n)
            | Family::Quaternion(n)
            | Family::Semidihedral(n)
            | Family::Heisenberg(n)
            | Family::Symmetric(n)
            | Family::Alternating(n) => write!(f, "{}:{n}", self.id()),
        }
    }
}

impl FromStr for Family {
    type Err = GroupError;

    /// Parses `name:p1,p2,...`.
    fn from_str(s: &str) -> Result<Family, GroupError> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| out_of_range(name, format!("`{t}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Family::from_parts(name.trim(), &params)
    }
}

/// Builds a member of a named family.
pub fn family(name: &str, params: &[usize], limits: &Limits) -> Result<Group, GroupError> {
    Family::from_parts(name, params)?.build(limits)
}

/// `A × B` with element `(a, b)` stored at index `a·|B| + b`.
pub fn direct_product(a: &Group, b: &Group, limits: &Limits) -> Result<Group, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na
        .checked_mul(nb)
        .ok_or(GroupError::OrderCapExceeded { cap: limits.order_cap })?;
    limits.check(n)?;
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            mul[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    Ok(Group::from_trusted_table(
        format!("{} x {}", a.name(), b.name()),
        n,
        mul,
    ))
}

fn cyclic(n: usize) -> Group {
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u32;
        }
    }
    Group::from_trusted_table(format!("cyclic:{n}"), n, mul)
}

/// Groups `a^i b^x` (`0 ≤ i < m`, `x ∈ {0,1}`) with `b⁻¹ a b = a^s`
/// (`s² ≡ 1 mod m`) and `b² = a^t`. Index is `i + m·x`.
fn metacyclic(m: usize, s: usize, t: usize) -> Group {
    let n = 2 * m;
    let mut mul = vec![0u32; n * n];
    for u in 0..n {
        let (i, x) = (u % m, u / m);
        for v in 0..n {
            let (k, y) = (v % m, v / m);
            // a^i b^x a^k b^y = a^(i + s^x k) b^(x+y)
            let twisted = if x == 1 { (s * k) % m } else { k };
            let mut exp = i + twisted;
            let mut bexp = x + y;
            if bexp == 2 {
                exp += t;
                bexp = 0;
            }
            mul[u * n + v] = (exp % m + m * bexp) as u32;
        }
    }
    Group::from_trusted_table(String::new(), n, mul)
}

fn extraspecial(p: usize, rank: usize, kind: ExtraspecialKind) -> Group {
    let dim = 2 * rank;
    let vspace = p.pow(dim as u32);
    let n = p * vspace;
    let decode = |v: usize| -> Vec<usize> {
        let mut x = v;
        (0..dim)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let vectors: Vec<Vec<usize>> = (0..vspace).map(decode).collect();
    // Cocycle on each 2-dimensional block with coordinates (a, b).
    let block = |t: usize, a: usize, b: usize, a2: usize, b2: usize| -> usize {
        match (t, kind) {
            (0, ExtraspecialKind::ExponentP2) if p == 2 => a * a2 + a * b2 + b * b2,
            (0, ExtraspecialKind::ExponentP2) => a2 * b + (a + a2) / p,
            _ => a * b2,
        }
    };
    let beta: Vec<usize> = (0..vspace * vspace)
        .map(|idx| {
            let (v, w) = (&vectors[idx / vspace], &vectors[idx % vspace]);
            (0..rank)
                .map(|t| block(t, v[2 * t], v[2 * t + 1], w[2 * t], w[2 * t + 1]))
                .sum::<usize>()
                % p
        })
        .collect();
    let mut vsum = vec![0usize; vspace * vspace];
    for v in 0..vspace {
        for w in 0..vspace {
            let sum: usize = vectors[v]
                .iter()
                .zip(&vectors[w])
                .rev()
                .fold(0, |acc, (x, y)| acc * p + (x + y) % p);
            vsum[v * vspace + w] = sum;
        }
    }
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        let (c, v) = (x % p, x / p);
        for y in 0..n {
            let (d, w) = (y % p, y / p);
            let cc = (c + d + beta[v * vspace + w]) % p;
            mul[x * n + y] = (cc + p * vsum[v * vspace + w]) as u32;
        }
    }
    Group::from_trusted_table(String::new(), n, mul)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn permutation_family(n: usize, even_only: bool) -> Group {
    let mut current: Vec<usize> = (0..n).collect();
    let mut elements = Vec::new();
    loop {
        if !even_only || is_even(&current) {
            elements.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<Vec<usize>, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    from_permutation_elements(String::new(), &elements, &index)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Group {
        s.parse::<Family>().unwrap().build(&Limits::default()).unwrap()
    }

    fn count_of_order(g: &Group, k: usize) -> usize {
        g.elements().filter(|&a| g.element_order(a) == k).count()
    }

    #[test]
    fn orders_match_family_order() {
        for s in [
            "cyclic:1",
            "cyclic:7",
            "abelian:2,4,3",
            "dihedral:8",
            "dihedral:10",
            "quaternion:8",
            "quaternion:12",
            "semidihedral:16",
            "extraspecial:2,1,1",
            "extraspecial:2,2,2",
            "extraspecial:3,1,2",
            "heisenberg:5",
            "symmetric:4",
            "alternating:5",
        ] {
            let fam: Family = s.parse().unwrap();
            let g = fam.build(&Limits::default()).unwrap();
            assert_eq!(g.order(), fam.order(), "{s}");
            assert_eq!(g.name(), s);
        }
    }

    #[test]
    fn exhaustive_validation_of_family_tables() {
        for s in [
            "dihedral:12",
            "quaternion:16",
            "semidihedral:32",
            "extraspecial:3,1,2",
            "extraspecial:2,2,2",
            "alternating:4",
        ] {
            let g = build(s);
            let limits = Limits {
                exhaustive_associativity: true,
                ..Limits::default()
            };
            Group::from_table(s, g.order(), g.table().to_vec(), &limits).unwrap();
        }
    }

    #[test]
    fn element_order_profiles() {
        // D8: 5 involutions, 2 elements of order 4.
        let d8 = build("dihedral:8");
        assert_eq!(count_of_order(&d8, 2), 5);
        assert_eq!(count_of_order(&d8, 4), 2);
        // Q8: a single involution.
        let q8 = build("quaternion:8");
        assert_eq!(count_of_order(&q8, 2), 1);
        assert_eq!(count_of_order(&q8, 4), 6);
        // p = 2 extraspecial variants of order 8 are D8 and Q8.
        assert_eq!(count_of_order(&build("extraspecial:2,1,1"), 2), 5);
        assert_eq!(count_of_order(&build("extraspecial:2,1,2"), 2), 1);
        // Heisenberg mod 3 has exponent 3, the other extraspecial 27 has exponent 9.
        assert_eq!(build("extraspecial:3,1,1").exponent(), 3);
        assert_eq!(build("extraspecial:3,1,2").exponent(), 9);
        // SD16: 5 involutions, 6 of order 4, 4 of order 8.
        let sd = build("semidihedral:16");
        assert_eq!(count_of_order(&sd, 2), 5);
        assert_eq!(count_of_order(&sd, 4), 6);
        assert_eq!(count_of_order(&sd, 8), 4);
        // 2^(1+4)_+ has 19 involutions, 2^(1+4)_- has 11.
        assert_eq!(count_of_order(&build("extraspecial:2,2,1"), 2), 19);
        assert_eq!(count_of_order(&build("extraspecial:2,2,2"), 2), 11);
    }

    #[test]
    fn dihedral_layout() {
        let d = build("dihedral:8");
        let (r, s) = (1, 4);
        assert_eq!(d.element_order(r), 4);
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.mul(r, s), 5);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("klein:4".parse::<Family>(), Err(GroupError::UnknownFamily(_))));
        assert!(matches!(
            "dihedral:7".parse::<Family>(),
            Err(GroupError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            "symmetric:6".parse::<Family>(),
            Err(GroupError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            "extraspecial:4".parse::<Family>(),
            Err(GroupError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            "cyclic:x".parse::<Family>(),
            Err(GroupError::ParamOutOfRange { .. })
        ));
        let limits = Limits {
            order_cap: 100,
            ..Limits::default()
        };
        assert!(matches!(
            family("extraspecial", &[5, 1, 1], &limits),
            Err(GroupError::OrderCapExceeded { cap: 100 })
        ));
    }

    #[test]
    fn trivial_and_products() {
        assert_eq!(build("cyclic:1").order(), 1);
        let c2 = build("cyclic:2");
        let c3 = build("cyclic:3");
        let c6 = direct_product(&c2, &c3, &Limits::default()).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        assert_eq!(c6.exponent(), 6);
        let limits = Limits {
            order_cap: 5,
            ..Limits::default()
        };
        assert!(direct_product(&c2, &c3, &limits).is_err());
    }
}
