//! Finite groups in fully materialized form.
//!
//! A [`Group`] stores its whole multiplication table. Elements are the
//! indices `0..n` and index `0` is always the identity. Everything else in
//! the crate (subgroups, classes, quotients, character tables) is built on
//! top of table lookups.

mod classes;
mod families;
mod parse;
mod perm;
mod quotient;
mod structure;
mod subgroup;

use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use classes::ConjugacyClasses;
pub use families::{direct_product, family, ExtraspecialKind, Family};
pub use parse::{parse_permutation_file, parse_table_file};
pub use perm::{compose, group_from_permutations};
pub use quotient::QuotientMap;
pub use structure::SylowFactor;
pub use subgroup::Subgroup;

/// Default upper bound on the order of any materialized group.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Largest order for which ingested tables get an exhaustive associativity
/// check unless [`Limits::exhaustive_associativity`] is set.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 512;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed file at line {line}: {message}")]
    MalformedFile { line: usize, message: String },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range for {family}: {message}")]
    ParamOutOfRange { family: String, message: String },
    #[error("subgroup is not normal")]
    NotNormal,
}

/// Construction limits shared by every group constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order_cap: usize,
    /// Check all n³ triples for associativity regardless of the table size.
    pub exhaustive_associativity: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_ORDER_CAP,
            exhaustive_associativity: false,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, order: usize) -> Result<(), GroupError> {
        if order > self.order_cap {
            Err(GroupError::OrderCapExceeded { cap: self.order_cap })
        } else {
            Ok(())
        }
    }
}

pub struct Group {
    name: String,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elem_orders: Vec<u32>,
    classes: OnceLock<ConjugacyClasses>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl Clone for Group {
    fn clone(&self) -> Self {
        Group {
            name: self.name.clone(),
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elem_orders: self.elem_orders.clone(),
            classes: OnceLock::new(),
        }
    }
}

impl Group {
    /// Builds a group from a table that is known to satisfy the group axioms
    /// with identity at index 0. Used by the internal constructors.
    pub(crate) fn from_trusted_table(name: impl Into<String>, order: usize, mul: Vec<u32>) -> Group {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x == 0)
                .expect("every row of a group table contains the identity");
            inv[a] = b as u32;
        }
        let mut group = Group {
            name: name.into(),
            order,
            mul,
            inv,
            elem_orders: Vec::new(),
            classes: OnceLock::new(),
        };
        group.elem_orders = (0..order).map(|a| group.compute_element_order(a) as u32).collect();
        group
    }

    /// Validates a raw table and relabels it so that the identity sits at
    /// index 0 (by swapping the identity with element 0).
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        mut mul: Vec<u32>,
        limits: &Limits,
    ) -> Result<Group, GroupError> {
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        limits.check(order)?;
        if mul.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x as usize >= order) {
            return Err(GroupError::NotAGroup(format!("entry {bad} is out of range")));
        }
        check_latin(order, &mul)?;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| mul[e * order + j] as usize == j && mul[j * order + e] as usize == j))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity element".into()))?;
        if identity != 0 {
            mul = relabel_swap(order, &mul, 0, identity);
        }
        check_associative(order, &mul, limits)?;
        Ok(Group::from_trusted_table(name, order, mul))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x⁻¹·g·x`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), g), x)
    }

    /// The commutator `[g, x] = g⁻¹·x⁻¹·g·x`.
    #[inline]
    pub fn commutator(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(g), self.inv(x)), self.mul(g, x))
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut result = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elem_orders[a] as usize
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elem_orders.iter().fold(1usize, |acc, &o| lcm(acc, o as usize))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Conjugacy classes, computed on first use.
    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    /// Raw row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mul
    }

    fn compute_element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

fn check_latin(order: usize, mul: &[u32]) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; order];
    for a in 0..order {
        for b in 0..order {
            let x = mul[a * order + b] as usize;
            if seen[x] == a {
                return Err(GroupError::NotAGroup(format!(
                    "row {a} repeats value {x} (at column {b}); table is not a Latin square"
                )));
            }
            seen[x] = a;
        }
    }
    let mut seen = vec![usize::MAX; order];
    for b in 0..order {
        for a in 0..order {
            let x = mul[a * order + b] as usize;
            if seen[x] == b {
                return Err(GroupError::NotAGroup(format!(
                    "column {b} repeats value {x} (at row {a}); table is not a Latin square"
                )));
            }
            seen[x] = b;
        }
    }
    Ok(())
}

fn check_associative(order: usize, mul: &[u32], limits: &Limits) -> Result<(), GroupError> {
    let m = |a: usize, b: usize| mul[a * order + b] as usize;
    let check = |a: usize, b: usize, c: usize| -> Result<(), GroupError> {
        if m(m(a, b), c) != m(a, m(b, c)) {
            Err(GroupError::NotAGroup(format!(
                "associativity fails for ({a}, {b}, {c})"
            )))
        } else {
            Ok(())
        }
    };
    if limits.exhaustive_associativity || order <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6776_7a00 ^ order as u64);
        for _ in 0..3 * order * order {
            let a = rng.random_range(0..order);
            let b = rng.random_range(0..order);
            let c = rng.random_range(0..order);
            check(a, b, c)?;
        }
    }
    Ok(())
}

/// Applies the transposition `(x y)` to the labels of a table.
fn relabel_swap(order: usize, mul: &[u32], x: usize, y: usize) -> Vec<u32> {
    let swap = |a: usize| {
        if a == x {
            y
        } else if a == y {
            x
        } else {
            a
        }
    };
    let mut out = vec![0u32; order * order];
    for a in 0..order {
        for b in 0..order {
            out[swap(a) * order + swap(b)] = swap(mul[a * order + b] as usize) as u32;
        }
    }
    out
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
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

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2_table() -> Vec<u32> {
        vec![0, 1, 1, 0]
    }

    #[test]
    fn c2_from_table() {
        let g = Group::from_table("C2", 2, c2_table(), &Limits::default()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(g.element_order(1), 2);
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // C3 written with identity at index 2.
        let mul = vec![1, 2, 0, 2, 0, 1, 0, 1, 2];
        let g = Group::from_table("C3", 3, mul, &Limits::default()).unwrap();
        for a in g.elements() {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
        }
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn non_latin_row_is_rejected() {
        let err = Group::from_table("bad", 2, vec![0, 1, 0, 1], &Limits::default()).unwrap_err();
        assert!(
            matches!(err, GroupError::NotAGroup(ref m) if m.contains("Latin")),
            "{err}"
        );
    }

    #[test]
    fn non_associative_latin_square_is_rejected() {
        // A loop of order 5 that is not a group.
        let mul = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = Group::from_table("loop", 5, mul, &Limits::default()).unwrap_err();
        assert!(
            matches!(err, GroupError::NotAGroup(ref m) if m.contains("associativity")),
            "{err}"
        );
    }

    #[test]
    fn order_cap_is_enforced() {
        let limits = Limits {
            order_cap: 1,
            ..Limits::default()
        };
        let err = Group::from_table("C2", 2, c2_table(), &limits).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 1 });
    }

    #[test]
    fn pow_and_commutator() {
        let g = family("dihedral", &[8], &Limits::default()).unwrap();
        let r = 1;
        assert_eq!(g.pow(r, 4), 0);
        assert_eq!(g.commutator(r, r), 0);
        assert_eq!(g.commutator(r, g.pow(r, 3)), 0);
    }
}
