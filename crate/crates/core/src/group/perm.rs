use std::collections::HashMap;

use super::{Group, GroupError, Limits};

/// Product of permutations acting on the right: `x^(a·b) = (x^a)^b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&x| b[x]).collect()
}

fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Closes a set of permutations under multiplication.
///
/// Elements are numbered in breadth-first order of discovery from the
/// identity, trying generators in the given order.
pub fn group_from_permutations(degree: usize, gens: &[Vec<usize>], limits: &Limits) -> Result<Group, GroupError> {
    for (index, g) in gens.iter().enumerate() {
        if !is_permutation(g, degree) {
            return Err(GroupError::NotAPermutation { index, degree });
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elements.len() {
        for g in gens {
            let p = compose(&elements[head], g);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elements.len());
                elements.push(p);
                limits.check(elements.len())?;
            }
        }
        head += 1;
    }
    Ok(from_permutation_elements(
        format!("perm({degree}; {} gens)", gens.len()),
        &elements,
        &index,
    ))
}

/// Builds the table of a closed list of permutations whose first entry is
/// the identity.
pub(crate) fn from_permutation_elements(
    name: String,
    elements: &[Vec<usize>],
    index: &HashMap<Vec<usize>, usize>,
) -> Group {
    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            mul[a * n + b] = index[&compose(pa, pb)] as u32;
        }
    }
    Group::from_trusted_table(name, n, mul)
}
